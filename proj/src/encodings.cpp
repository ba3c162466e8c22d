#include "substfactor/encodings.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "substfactor/error.hpp"

namespace substfactor {

bool intertwines(const InnerEncoding& e) {
  const Substitution& s = e.source;
  const Substitution& q = e.quotient;
  if (e.code.size() != s.size() || s.length() != q.length()) return false;
  std::vector<bool> hit(q.size(), false);
  for (Letter a = 0; a < s.size(); ++a) {
    if (e.code[a] >= q.size()) return false;
    hit[e.code[a]] = true;
    for (std::size_t m = 0; m < s.length(); ++m) {
      if (e.code[s.at(a, m)] != q.at(e.code[a], m)) return false;
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::string block_name(const Alphabet& alphabet, const std::vector<Letter>& block) {
  if (block.size() == 1) return alphabet.name(block.front());
  std::string out = "{";
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i > 0) out += ',';
    out += alphabet.name(block[i]);
  }
  return out + "}";
}

InnerEncoding inner_encoding_from_partition(const Substitution& s, const Partition& p) {
  if (p.size() != s.size()) throw InputError("partition size does not match the alphabet");
  std::vector<std::string> names;
  std::vector<Word> images;
  for (const auto& block : p.blocks()) {
    names.push_back(block_name(s.alphabet(), block));
    Word img;
    for (std::size_t m = 0; m < s.length(); ++m) {
      const Letter target = p.block_of(s.at(block.front(), m));
      for (Letter a : block) {
        if (p.block_of(s.at(a, m)) != target) {
          throw InputError("partition is not compatible: column " + std::to_string(m) +
                           " maps block " + block_name(s.alphabet(), block) +
                           " into more than one block");
        }
      }
      img.push_back(target);
    }
    images.push_back(std::move(img));
  }
  InnerEncoding e{s, Substitution(Alphabet(std::move(names)), std::move(images)), p.labels()};
  SUBSTFACTOR_CHECK(intertwines(e), "quotient does not intertwine");
  return e;
}

CodeEncoding inner_encoding_from_code(const Substitution& s, const std::vector<Letter>& tau) {
  if (tau.size() != s.size()) throw InputError("code must assign a value to every letter");
  Partition p = Partition::from_labels(tau);
  for (;;) {
    std::vector<Word> signature(s.size());
    for (Letter a = 0; a < s.size(); ++a) {
      signature[a].push_back(p.block_of(a));
      for (std::size_t m = 0; m < s.length(); ++m) signature[a].push_back(p.block_of(s.at(a, m)));
    }
    Partition next = Partition::from_labels(signature);
    if (next.block_count() == p.block_count()) break;
    p = std::move(next);
  }
  CodeEncoding out{inner_encoding_from_partition(s, p), {}};
  for (const auto& block : p.blocks()) out.residual.push_back(tau[block.front()]);
  return out;
}

Partition MinimalSets::coincidence_partition(std::size_t n) const {
  if (!covers_alphabet) {
    throw PreconditionError("minimal sets do not cover the alphabet");
  }
  return Partition::from_blocks(n, coincidence_blocks);
}

MinimalSets minimal_sets(const GreenData& g) {
  MinimalSets ms;
  for (const RClass& r : g.r_classes) ms.sets.push_back(r.image);
  const auto n = static_cast<Letter>(g.degree);

  std::vector<Letter> parent(n);
  std::iota(parent.begin(), parent.end(), Letter{0});
  auto find = [&](Letter a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::vector<bool> covered(n, false);
  std::size_t total = 0;
  for (const auto& set : ms.sets) {
    total += set.size();
    for (Letter a : set) {
      covered[a] = true;
      const Letter ra = find(a), rb = find(set.front());
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  ms.covers_alphabet = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
  ms.is_partition = ms.covers_alphabet && total == n;
  std::map<Letter, std::vector<Letter>> blocks;
  for (Letter a = 0; a < n; ++a) {
    if (covered[a]) blocks[find(a)].push_back(a);
  }
  for (auto& [root, block] : blocks) ms.coincidence_blocks.push_back(std::move(block));
  return ms;
}

MinimalSets minimal_sets(const Substitution& s) { return minimal_sets(green(generate(s))); }

InnerEncoding associated_inner_encoding(const Substitution& s, const MinimalSets& ms) {
  if (!ms.covers_alphabet) {
    throw PreconditionError("associated inner encoding requires essential surjectivity");
  }
  InnerEncoding e = inner_encoding_from_partition(s, ms.coincidence_partition(s.size()));
  SUBSTFACTOR_CHECK(naive_column_number(generate(e.quotient)) == 1,
                    "associated quotient has column number above 1");
  return e;
}

InnerEncoding associated_inner_encoding(const Substitution& s) {
  return associated_inner_encoding(s, minimal_sets(s));
}

OuterEncoding canonical_outer_encoding(const Substitution& s, const GreenData& g) {
  OuterEncoding out;
  std::map<std::vector<Letter>, Letter> index;
  std::vector<std::string> names;
  for (const RClass& r : g.r_classes) {
    index.emplace(r.image, static_cast<Letter>(out.classes.size()));
    out.classes.push_back(r.image);
    std::string name = "{";
    for (std::size_t i = 0; i < r.image.size(); ++i) {
      if (i > 0) name += ',';
      name += s.alphabet().name(r.image[i]);
    }
    names.push_back(name + "}");
  }
  std::vector<Word> images;
  for (const auto& image : out.classes) {
    Word img;
    for (std::size_t m = 0; m < s.length(); ++m) {
      std::vector<Letter> moved;
      for (Letter a : image) moved.push_back(s.at(a, m));
      std::sort(moved.begin(), moved.end());
      moved.erase(std::unique(moved.begin(), moved.end()), moved.end());
      auto it = index.find(moved);
      SUBSTFACTOR_CHECK(it != index.end(), "θ_m∘x left the kernel");
      img.push_back(it->second);
    }
    images.push_back(std::move(img));
  }
  out.quotient = Substitution(Alphabet(std::move(names)), std::move(images));
  out.covers_alphabet = minimal_sets(g).covers_alphabet;
  SUBSTFACTOR_CHECK(naive_column_number(generate(out.quotient)) == 1,
                    "canonical outer encoding has column number above 1");
  if (is_primitive(s)) {
    SUBSTFACTOR_CHECK(is_primitive(out.quotient), "canonical outer encoding is not primitive");
  }
  return out;
}

OuterEncoding canonical_outer_encoding(const Substitution& s) {
  return canonical_outer_encoding(s, green(generate(s)));
}

bool canonical_is_inner(const Substitution& s) { return minimal_sets(s).is_partition; }

RSet r_set(const Substitution& s) {
  const std::size_t n = s.size();
  std::vector<ColumnMap> inverse;
  for (std::size_t m = 0; m < s.length(); ++m) {
    ColumnMap inv(n, static_cast<Letter>(n));
    for (Letter a = 0; a < n; ++a) {
      if (inv[s.at(a, m)] != n) {
        throw PreconditionError("R-set requires bijective column maps");
      }
      inv[s.at(a, m)] = a;
    }
    inverse.push_back(std::move(inv));
  }
  RSet r;
  for (std::size_t m = 0; m + 1 < s.length(); ++m) {
    ColumnMap f(n);
    for (Letter a = 0; a < n; ++a) f[a] = s.at(inverse[m][a], m + 1);
    if (std::find(r.maps.begin(), r.maps.end(), f) == r.maps.end()) r.maps.push_back(std::move(f));
  }
  r.disjoint = true;
  for (std::size_t i = 0; i < r.maps.size(); ++i) {
    for (std::size_t j = i + 1; j < r.maps.size(); ++j) {
      for (Letter a = 0; a < n; ++a) {
        if (r.maps[i][a] == r.maps[j][a]) r.disjoint = false;
      }
    }
  }
  r.allowed_two_words = allowed_words(s, 2).size();
  r.counting_ok = r.maps.size() * n == r.allowed_two_words;
  return r;
}

}  // namespace substfactor
