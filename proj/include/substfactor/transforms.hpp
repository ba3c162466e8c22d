#pragma once

// Substitutions derived from a given one: powers, collarings, shifted
// extensions, the pure base and its suspension.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "substfactor/encodings.hpp"
#include "substfactor/words.hpp"

namespace substfactor {

struct CollarSpec {
  std::size_t l = 0;
  std::size_t r = 0;
};

//! For a substitution on composite letters: the base word behind each letter
//! and the projection ι onto one base letter.
struct CollaredLetterMap {
  std::vector<Word> words;
  std::vector<Letter> iota;
};

struct DerivedSubstitution {
  Substitution substitution;
  CollaredLetterMap letters;
};

//! Name of a composite letter: [ab] over a compact alphabet, [x.y] otherwise.
//! A one-letter word keeps the letter's own name.
std::string composite_name(const Alphabet& base, const Word& w);

//! θ^n, of length ℓ^n.
Substitution power(const Substitution& s, std::size_t n);

//! θ^(-l,r) on the allowed (l+1+r)-words.
DerivedSubstitution collar(const Substitution& s, CollarSpec spec);

//! θ^(+k) on the allowed 2-words, 0 ≤ k < ℓ.
DerivedSubstitution shift_ext(const Substitution& s, std::size_t k);

//! Merges letters with equal images until the quotient is injective.
InnerEncoding injectivize(const Substitution& s);

struct HeightInfo {
  std::size_t h = 1;
  //! gcd of the return positions of the seed letter.
  std::uint64_t g = 0;
  //! Letter a with θ_0(a) = a whose fixed point was scanned.
  Letter seed = 0;
  //! Power m of the prefix θ^m(a) at which g was accepted.
  std::size_t prefix_power = 0;
};

//! Throws PreconditionError if no letter is fixed by θ_0.
HeightInfo height(const Substitution& s);

struct PureBase {
  Substitution substitution;
  //! The h-letter base word behind each letter.
  std::vector<Word> blocks;
};

//! The substitution induced on h-blocks; s itself when h = 1.
PureBase pure_base(const Substitution& s, const HeightInfo& info);

//! Splits each letter a into a_1..a_h so that η(a_1)⋯η(a_h) is the split of
//! η′(a). Letter a_j is named a_j; h = 1 returns s.
Substitution suspend_split(const Substitution& s, std::size_t h);

}  // namespace substfactor
