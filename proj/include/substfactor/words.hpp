#pragma once

// Alphabets, constant-length substitutions and their languages.

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace substfactor {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;
using WordSet = std::set<Word>;

//! A column map (or any self-map of an alphabet) as an index array.
using ColumnMap = std::vector<Letter>;

//! Ordered list of distinct, nonempty letter names. Letters are addressed by
//! their position in the list.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Letter a) const { return names_.at(a); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Letter> find(std::string_view name) const;
  //! Like find, but throws InputError for unknown names.
  Letter index(std::string_view name) const;

  //! True when every name is a single UTF-8 code point, so words can be
  //! written without separators.
  bool compact() const noexcept { return compact_; }

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Letter> index_;
  bool compact_ = true;
};

//! A substitution of constant length ℓ, stored as one image word per letter.
class Substitution {
 public:
  Substitution() = default;
  //! Throws InputError if an image has the wrong length or an unknown letter.
  Substitution(Alphabet alphabet, std::vector<Word> images);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return alphabet_.size(); }
  std::size_t length() const noexcept { return length_; }

  const Word& image(Letter a) const { return images_.at(a); }
  const std::vector<Word>& images() const noexcept { return images_; }

  //! θ_m(a), the m-th letter of θ(a).
  Letter at(Letter a, std::size_t m) const { return images_[a][m]; }
  //! The column map θ_m.
  ColumnMap column(std::size_t m) const;

  bool operator==(const Substitution& other) const {
    return alphabet_ == other.alphabet_ && images_ == other.images_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
  std::size_t length_ = 0;
};

//! Writes a word with the alphabet's names, concatenated when the alphabet is
//! compact and space separated otherwise.
std::string format_word(const Alphabet& alphabet, const Word& w);

//! θ(w), the concatenation of the images of the letters of w.
Word substitute(const Substitution& s, const Word& w);

//! θ^n(w).
Word substitute_n(const Substitution& s, const Word& w, std::size_t n);

//! The column map θ^n_j: the letter at position j of θ^n(a), as a function
//! of a. The most significant base-ℓ digit of j is applied first.
ColumnMap column_map(const Substitution& s, std::size_t n, std::uint64_t j);

//! All allowed words of length k, by closure from the k-factors of the images
//! θ^{m0}(a) with ℓ^{m0} ≥ k. Correct for non-primitive input.
WordSet allowed_words(const Substitution& s, std::size_t k);

//! Memoizing front end for allowed_words. Thread safe.
class LanguageCache {
 public:
  explicit LanguageCache(const Substitution& s) : s_(&s) {}

  const WordSet& words(std::size_t k);
  std::size_t complexity(std::size_t k) { return words(k).size(); }
  //! Complexity values computed so far, keyed by length.
  std::map<std::size_t, std::size_t> complexity_log() const;

 private:
  const Substitution* s_;
  mutable std::mutex mutex_;
  std::map<std::size_t, WordSet> sets_;
};

bool is_primitive(const Substitution& s);

//! Least m ≥ 1 such that every θ-periodic point is θ^m-fixed.
std::size_t fix_power(const Substitution& s);

//! Seeds (b, a) of θ^m-fixed points for m = fix_power(s): allowed 2-words ba
//! whose left letter is fixed by the last column and right letter by the
//! first column of θ^m.
std::vector<std::pair<Letter, Letter>> theta_fixed_letters(const Substitution& s);

//! Factor complexity p(1..K) of a primitive substitution. Entry i holds p(i+1).
std::vector<std::size_t> factor_complexity(const Substitution& s, std::size_t K);

//! p(K) for a primitive substitution, by hashing the K-windows of θ^m(a)
//! and of the seams of θ^m(ab), ℓ^m ≥ K.
std::size_t complexity_at(const Substitution& s, std::size_t K);

struct AperiodicityResult {
  bool aperiodic = false;
  //! p(1), p(2), ... for the first few lengths.
  std::vector<std::size_t> complexity;
  //! (k, p(k)) at every length the test sampled, in increasing k.
  std::vector<std::pair<std::size_t, std::size_t>> samples;
  //! Length at which the answer was settled.
  std::size_t decided_at = 0;
  std::size_t cap = 0;
};

//! Default cap ℓ·|A|² + |A| on the word length inspected by is_aperiodic.
std::size_t aperiodicity_cap(const Substitution& s);

//! Morse–Hedlund test on the complexity function: periodic iff p(k+1) = p(k)
//! or p(k) ≤ k for some k ≤ cap. Since p is nondecreasing and constant after
//! its first plateau, this holds iff p(cap+1) = p(cap) or p(cap) ≤ cap, so p
//! is sampled at doubling lengths and at cap, cap+1 only. Throws
//! PreconditionError for non-primitive input. A cap of 0 means the default.
AperiodicityResult aperiodicity(const Substitution& s, std::size_t cap = 0);
bool is_aperiodic(const Substitution& s, std::size_t cap = 0);

//! A letter bijection φ with φ(θ1_m(a)) = θ2_m(φ(a)) for all m and a, if any.
std::optional<std::vector<Letter>> equivalent_up_to_renaming(const Substitution& s1,
                                                             const Substitution& s2);

}  // namespace substfactor
