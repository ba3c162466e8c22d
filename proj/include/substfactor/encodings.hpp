#pragma once

// Inner encodings (letter-to-letter factors), minimal sets, the canonical
// outer encoding and the R-set of bijective substitutions.

#include <cstddef>
#include <optional>
#include <vector>

#include "substfactor/partition.hpp"
#include "substfactor/semigroup.hpp"
#include "substfactor/words.hpp"

namespace substfactor {

//! A substitution η with a surjective letter code β such that
//! β∘θ_m = η_m∘β for every column m.
struct InnerEncoding {
  Substitution source;
  Substitution quotient;
  std::vector<Letter> code;

  Partition partition() const { return Partition::from_labels(code); }
};

//! Re-checks surjectivity of the code and the intertwining identity.
bool intertwines(const InnerEncoding& e);

//! Name of the quotient letter for a block: the letter itself for a
//! singleton, {a,b,...} otherwise.
std::string block_name(const Alphabet& alphabet, const std::vector<Letter>& block);

//! The quotient by a partition. Throws InputError naming the column and block
//! when θ_m maps a block across two blocks.
InnerEncoding inner_encoding_from_partition(const Substitution& s, const Partition& p);

struct CodeEncoding {
  InnerEncoding encoding;
  //! τ′ with τ = τ′∘β, indexed by quotient letter.
  std::vector<Letter> residual;
};

//! The encoding defined by a letter map τ: the coarsest partition refining
//! the fibres of τ that every column map respects.
CodeEncoding inner_encoding_from_code(const Substitution& s, const std::vector<Letter>& tau);

struct MinimalSets {
  //! Distinct kernel images, sorted.
  std::vector<std::vector<Letter>> sets;
  bool covers_alphabet = false;
  //! The sets are pairwise disjoint and cover the alphabet.
  bool is_partition = false;
  //! Transitive overlap closure of the sets, over the covered letters only.
  std::vector<std::vector<Letter>> coincidence_blocks;

  //! The coincidence partition; requires covers_alphabet.
  Partition coincidence_partition(std::size_t n) const;
};

MinimalSets minimal_sets(const Substitution& s);
MinimalSets minimal_sets(const GreenData& g);

//! Inner encoding by the coincidence partition. Throws PreconditionError when
//! the minimal sets do not cover the alphabet.
InnerEncoding associated_inner_encoding(const Substitution& s);
InnerEncoding associated_inner_encoding(const Substitution& s, const MinimalSets& ms);

//! Substitution on the R-classes of the kernel, [x] ↦ [θ_m∘x].
struct OuterEncoding {
  //! Image set labelling each R-class, in letter order.
  std::vector<std::vector<Letter>> classes;
  Substitution quotient;
  bool covers_alphabet = false;
};

OuterEncoding canonical_outer_encoding(const Substitution& s);
OuterEncoding canonical_outer_encoding(const Substitution& s, const GreenData& g);

//! True iff the minimal sets partition the alphabet.
bool canonical_is_inner(const Substitution& s);

//! I_θ = {θ_{m+1}∘θ_m⁻¹} for a substitution with bijective columns.
struct RSet {
  std::vector<ColumnMap> maps;
  //! f(a) ≠ g(a) for all distinct f, g in I_θ and all letters a.
  bool disjoint = false;
  std::size_t allowed_two_words = 0;
  //! |I_θ|·|A| = number of allowed 2-words.
  bool counting_ok = false;
};

//! Throws PreconditionError unless every column is a bijection.
RSet r_set(const Substitution& s);

}  // namespace substfactor
