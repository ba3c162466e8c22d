#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "substfactor/words.hpp"

namespace substfactor {

//! A set partition of {0, ..., n-1}. Blocks are sorted and ordered by their
//! least element, so equal partitions compare equal.
class Partition {
 public:
  Partition() = default;

  //! Letters with equal labels share a block.
  template <typename Label>
  static Partition from_labels(const std::vector<Label>& labels);

  //! Throws InputError unless the blocks are nonempty, disjoint and cover
  //! {0, ..., n-1}.
  static Partition from_blocks(std::size_t n, std::vector<std::vector<Letter>> blocks);

  static Partition discrete(std::size_t n);
  static Partition trivial(std::size_t n);

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<Letter>>& blocks() const noexcept { return blocks_; }
  const std::vector<Letter>& block(std::size_t i) const { return blocks_.at(i); }
  Letter block_of(Letter a) const { return block_of_.at(a); }
  const std::vector<Letter>& labels() const noexcept { return block_of_; }

  //! Every block of *this lies inside a block of coarser.
  bool refines(const Partition& coarser) const;

  bool operator==(const Partition& other) const { return blocks_ == other.blocks_; }
  bool operator<(const Partition& other) const { return blocks_ < other.blocks_; }

  //! {{a,b},{c,d}}
  std::string to_string(const Alphabet& alphabet) const;

 private:
  std::vector<std::vector<Letter>> blocks_;
  std::vector<Letter> block_of_;
};

template <typename Label>
Partition Partition::from_labels(const std::vector<Label>& labels) {
  Partition p;
  p.block_of_.assign(labels.size(), 0);
  std::vector<Label> seen;
  for (std::size_t a = 0; a < labels.size(); ++a) {
    std::size_t b = 0;
    while (b < seen.size() && !(seen[b] == labels[a])) ++b;
    if (b == seen.size()) {
      seen.push_back(labels[a]);
      p.blocks_.emplace_back();
    }
    p.blocks_[b].push_back(static_cast<Letter>(a));
    p.block_of_[a] = static_cast<Letter>(b);
  }
  return p;
}

}  // namespace substfactor
