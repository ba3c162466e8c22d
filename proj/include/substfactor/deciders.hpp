#pragma once

// Decision procedures: almost automorphic factors, bijective factors, and
// κ-values of shifted extensions.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "substfactor/encodings.hpp"
#include "substfactor/rational.hpp"
#include "substfactor/semigroup.hpp"
#include "substfactor/transforms.hpp"
#include "substfactor/words.hpp"

namespace substfactor {

enum class Answer { yes, no, inconclusive };

std::string to_string(Answer a);

// ---------------------------------------------------------------------------
// Almost automorphic factors

//! One tested collaring of the pure base and its associated inner encoding.
struct AAStage {
  CollarSpec spec;
  DerivedSubstitution collared;
  InnerEncoding encoding;
  bool aperiodic = false;
};

//! Sliding block code from the input shift onto the suspended witness.
//! Each window has length 2·radius + 1; the output is the letter at the centre.
struct LocalRule {
  std::size_t radius = 0;
  std::vector<std::pair<Word, Letter>> table;
};

struct AAVerdict {
  Answer answer = Answer::no;
  std::size_t fix_power = 1;
  Substitution powered;
  HeightInfo height;
  PureBase pure_base;
  //! Certificates tried in order; the last entry is the (1,1) collaring,
  //! which settles the answer.
  std::vector<AAStage> stages;
  //! Index into stages of the smallest aperiodic encoding, when yes.
  std::optional<std::size_t> witness_stage;
  //! The witness partition applied to the collared input itself, when h = 1
  //! and fix_power > 1. Its fix_power-th power is the witness.
  std::optional<InnerEncoding> unpowered_witness;
  //! The witness lifted to the input's height via suspend_split (h > 1).
  std::optional<Substitution> suspended;
  //! Local rule onto the suspended witness (or the witness itself, h = 1).
  std::optional<LocalRule> local_rule;

  const AAStage& decisive() const { return stages.back(); }
  const AAStage* witness() const {
    return witness_stage ? &stages[*witness_stage] : nullptr;
  }
};

struct AAOptions {
  bool cheap_certificates = true;
  std::size_t aperiodicity_cap = 0;
  std::size_t max_local_rule_radius = 8;
  SemigroupOptions semigroup;
};

//! Throws PreconditionError unless s is primitive and aperiodic.
AAVerdict decide_aa_factor(const Substitution& s, const AAOptions& options = {});

// ---------------------------------------------------------------------------
// Bijective factors

struct SweepEntry {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t alphabet_size = 0;
  std::size_t semigroup_size = 0;
  //! Letter names of (θ^n)^(+k); the kernel partitions refer to them.
  std::vector<std::string> letters;
  std::vector<Partition> kernel_partitions;
  std::size_t minimal_left_ideals() const { return kernel_partitions.size(); }
};

struct BijectiveWitness {
  //! (θ^n)^(+k); n = 0 marks θ itself (no shift).
  std::size_t n = 0;
  std::size_t k = 0;
  Substitution source;
  Partition partition;
  InnerEncoding encoding;
};

struct BijectiveVerdict {
  Answer answer = Answer::no;
  //! "inner", "fixed-fibre" or "general-sweep".
  std::string mode;
  //! Why the answer is no or inconclusive, when not evident from the log.
  std::string reason;
  std::size_t column_number = 0;
  std::size_t j = 0;
  //! Kernel partitions of S_θ.
  std::vector<Partition> kernel_partitions;
  std::optional<BijectiveWitness> witness;
  std::vector<SweepEntry> sweep;
  //! The bound (ℓ-1)(ℓ^j-1)-1 on n, saturated at SIZE_MAX.
  std::size_t bound_n = 0;
  std::size_t max_n_used = 0;
  //! Exclusive cap on k applied to every n, if any.
  std::optional<std::size_t> max_k_used;
};

//! Unique minimal left ideal test on S_θ and the bijective quotient it gives.
//! A column number of 1 answers no: the quotient would have one letter.
BijectiveVerdict decide_bijective_inner(const Substitution& s,
                                        const SemigroupOptions& options = {});

struct SweepOptions {
  //! Largest n tried; 0 means the theorem's bound.
  std::size_t max_n = 0;
  //! Exclusive bound on k; 0 means ℓ^n.
  std::size_t max_k = 0;
  std::size_t jobs = 1;
  //! Per-task semigroup budget; 0 means default_budget().
  std::size_t task_budget = 0;
};

//! Sweep over the shifted extensions (θ^n)^(+k). Throws PreconditionError
//! unless s is primitive, aperiodic, of height 1 and column number above 1.
BijectiveVerdict decide_bijective_general(const Substitution& s,
                                          const SweepOptions& options = {});

//! One cell of the sweep. Exposed for tests and the CLI.
SweepEntry sweep_entry(const Substitution& powered, std::size_t n, std::size_t k,
                       const SemigroupOptions& options = {});

// ---------------------------------------------------------------------------
// κ-values

//! k/(1-ℓ^n) in lowest terms.
Rational kappa_of_shift(std::uint64_t ell, std::size_t n, std::uint64_t k);

struct KappaShift {
  std::size_t n = 0;
  std::uint64_t k = 0;
  std::int64_t M = 0;
};

//! (n, k, M) with kappa_of_shift(ℓ, n, k) + M = target. Throws InputError if
//! the denominator shares a factor with ℓ.
KappaShift shift_for_kappa(std::uint64_t ell, const Rational& target);
KappaShift shift_for_kappa(const Substitution& s, const Rational& target);

// ---------------------------------------------------------------------------
// Everything at once

struct AnalyzeOptions {
  //! Cap on n for the bijective sweep inside analyze.
  std::size_t sweep_max_n = 2;
  std::size_t jobs = 1;
};

struct Analysis {
  Substitution input;
  bool primitive = false;
  std::optional<bool> aperiodic;
  std::size_t fix_power = 1;
  std::optional<HeightInfo> height;
  std::optional<std::size_t> semigroup_size;
  std::optional<GreenData> green;
  std::optional<std::size_t> j;
  std::optional<bool> bijective_columns;
  std::optional<MinimalSets> minimal_sets;
  std::optional<OuterEncoding> outer;
  std::optional<PairAperiodicityReport> pairs;
  std::optional<RSet> r_set;
  std::optional<AAVerdict> aa;
  std::optional<BijectiveVerdict> bijective_inner;
  std::optional<BijectiveVerdict> bijective_general;
  //! (section, message) for every part that could not be computed.
  std::vector<std::pair<std::string, std::string>> notes;
};

//! Runs every analysis whose preconditions hold; failures become notes.
//! Resource errors propagate.
Analysis analyze(const Substitution& s, const AnalyzeOptions& options = {});

}  // namespace substfactor
