#pragma once

// The transformation semigroup generated by the column maps, and its kernel.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "substfactor/partition.hpp"
#include "substfactor/transformation.hpp"
#include "substfactor/words.hpp"

namespace substfactor {

//! Element budget used when SemigroupOptions::budget is 0: the value of the
//! environment variable SUBSTFACTOR_BUDGET if set, else 1'000'000.
std::size_t default_budget();

struct SemigroupOptions {
  std::size_t budget = 0;
};

//! Finite semigroup of transformations, stored as a flat byte arena with a
//! right Cayley table. Element indices follow breadth-first discovery, so
//! depth is nondecreasing in the index.
class TransformationSemigroup {
 public:
  std::size_t size() const noexcept { return depth_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t generator_count() const noexcept { return generators_.size(); }

  Transformation element(std::size_t i) const;
  const std::uint8_t* data(std::size_t i) const { return arena_.data() + i * stride_; }

  //! Least number of generators whose product is element i.
  std::size_t depth(std::size_t i) const { return depth_[i]; }
  //! Element index of generator g.
  std::size_t generator(std::size_t g) const { return generators_[g]; }
  //! Index of the element "apply element i, then generator g".
  std::size_t right(std::size_t i, std::size_t g) const {
    return cayley_[i * generators_.size() + g];
  }

  std::optional<std::size_t> find(const Transformation& t) const;

  friend TransformationSemigroup generate(const std::vector<Transformation>& generators,
                                          const SemigroupOptions& options,
                                          const std::string& context);

 private:
  std::optional<std::size_t> lookup(const std::uint8_t* bytes, std::uint64_t hash) const;
  std::uint64_t hash(const std::uint8_t* bytes) const;
  void insert_slot(std::size_t index, std::uint64_t hash);
  void rehash(std::size_t capacity);

  std::size_t degree_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint8_t> arena_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::uint64_t> hashes_;
  std::vector<std::uint32_t> slots_;
  std::vector<std::size_t> generators_;
  std::vector<std::uint32_t> cayley_;
};

//! Breadth-first closure of the generators. Throws ResourceError when the
//! budget is exceeded; context is echoed in the message.
TransformationSemigroup generate(const std::vector<Transformation>& generators,
                                 const SemigroupOptions& options = {},
                                 const std::string& context = "");

//! The semigroup of the column maps θ_0, ..., θ_{ℓ-1}.
TransformationSemigroup generate(const Substitution& s, const SemigroupOptions& options = {});

//! The sets L_k of products of exactly k generators, up to the first repeat.
//! levels[k-1] is L_k as sorted element indices; L_{k+period} = L_k for
//! k > preperiod, and levels holds preperiod + period entries.
struct LevelSets {
  std::vector<std::vector<std::uint32_t>> levels;
  //! parents[k-1][i] = (position in levels[k-2], generator) producing
  //! levels[k-1][i]; unused for k = 1.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> parents;
  std::size_t preperiod = 0;
  std::size_t period = 0;
};

LevelSets level_sets(const TransformationSemigroup& sg);

//! Generator word j_1...j_k (j_1 applied first) for levels[k-1][pos]. For a
//! substitution these are the base-ℓ digits of a column index of θ^k.
std::vector<std::size_t> level_word(const LevelSets& ls, std::size_t k, std::size_t pos);

struct RClass {
  std::vector<Letter> image;
  std::vector<std::uint32_t> members;
};

struct LClass {
  Partition partition;
  std::vector<std::uint32_t> members;
};

//! Green's structure of the kernel (the minimal-rank elements). R-classes are
//! ordered by image set, L-classes by partition.
struct GreenData {
  std::size_t degree = 0;
  std::size_t rank = 0;
  std::vector<std::uint32_t> kernel;
  std::vector<RClass> r_classes;
  std::vector<LClass> l_classes;
  std::vector<std::uint32_t> idempotents;
  std::size_t group_order = 0;
};

GreenData green(const TransformationSemigroup& sg);

//! Rank of the kernel elements.
std::size_t naive_column_number(const TransformationSemigroup& sg);

//! Least k such that a product of k generators has minimal rank.
std::size_t j_depth(const TransformationSemigroup& sg);
std::size_t j_depth(const TransformationSemigroup& sg, const GreenData& g);

//! The common kernel partition when all kernel elements share one.
std::optional<Partition> unique_minimal_left_ideal(const GreenData& g);
bool has_unique_minimal_left_ideal(const TransformationSemigroup& sg);

bool kernel_is_left_zero(const TransformationSemigroup& sg, const GreenData& g);
bool kernel_is_left_zero(const TransformationSemigroup& sg);

struct PeriodicPair {
  Letter a = 0;
  Letter b = 0;
  std::size_t p = 0;
  //! Base-ℓ digits of a column index m with θ^p_m fixing a and b.
  std::vector<std::size_t> column_word;
};

struct PairAperiodicityReport {
  std::vector<PeriodicPair> periodic_pairs;
  std::uint64_t p_theta = 1;
};

PairAperiodicityReport pair_aperiodicity(const Substitution& s);
PairAperiodicityReport pair_aperiodicity(const Substitution& s,
                                         const TransformationSemigroup& sg);

}  // namespace substfactor
