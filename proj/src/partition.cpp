#include "substfactor/partition.hpp"

#include <algorithm>

#include "substfactor/error.hpp"

namespace substfactor {

Partition Partition::from_blocks(std::size_t n, std::vector<std::vector<Letter>> blocks) {
  std::vector<Letter> labels(n, static_cast<Letter>(-1));
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InputError("partition has an empty block");
    for (Letter a : blocks[b]) {
      if (a >= n) throw InputError("partition mentions an unknown letter");
      if (labels[a] != static_cast<Letter>(-1)) {
        throw InputError("partition blocks overlap");
      }
      labels[a] = static_cast<Letter>(b);
    }
  }
  if (std::find(labels.begin(), labels.end(), static_cast<Letter>(-1)) != labels.end()) {
    throw InputError("partition does not cover the alphabet");
  }
  return from_labels(labels);
}

Partition Partition::discrete(std::size_t n) {
  std::vector<Letter> labels(n);
  for (std::size_t a = 0; a < n; ++a) labels[a] = static_cast<Letter>(a);
  return from_labels(labels);
}

Partition Partition::trivial(std::size_t n) {
  return from_labels(std::vector<Letter>(n, 0));
}

bool Partition::refines(const Partition& coarser) const {
  for (const auto& block : blocks_) {
    for (Letter a : block) {
      if (coarser.block_of(a) != coarser.block_of(block.front())) return false;
    }
  }
  return true;
}

std::string Partition::to_string(const Alphabet& alphabet) const {
  std::string out = "{";
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b > 0) out += ',';
    out += '{';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i > 0) out += ',';
      out += alphabet.name(blocks_[b][i]);
    }
    out += '}';
  }
  return out + "}";
}

}  // namespace substfactor
