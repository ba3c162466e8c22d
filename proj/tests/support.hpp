#pragma once

// Brute-force oracles shared by the test suites. They work on plain
// expansions and exhaustive closures and do not call the library's
// algorithms, only its data types.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "substfactor/fixtures.hpp"
#include "substfactor/io.hpp"
#include "substfactor/words.hpp"

namespace oracle {

using substfactor::Alphabet;
using substfactor::ColumnMap;
using substfactor::Letter;
using substfactor::Substitution;
using substfactor::Word;

inline Substitution sub(std::string_view text) { return substfactor::parse_substitution(text); }

inline Word image_of(const Substitution& s, const Word& w) {
  Word out;
  for (Letter a : w) {
    const Word& img = s.images()[a];
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

//! θ^n(w) by repeated substitution.
inline Word expand(const Substitution& s, Word w, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) w = image_of(s, w);
  return w;
}

//! θ^n_j as the column of the expanded images.
inline ColumnMap column(const Substitution& s, std::size_t n, std::size_t j) {
  ColumnMap f(s.size());
  for (Letter a = 0; a < s.size(); ++a) f[a] = expand(s, Word{a}, n)[j];
  return f;
}

//! Wielandt: a primitive n×n matrix has a positive power at (n-1)^2+1.
inline bool primitive(const Substitution& s) {
  const std::size_t n = s.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  for (Letter a = 0; a < n; ++a) {
    for (Letter b : s.images()[a]) m[a][b] = true;
  }
  auto p = m;
  for (std::size_t k = 1; k < (n - 1) * (n - 1) + 1; ++k) {
    std::vector<std::vector<bool>> q(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t t = 0; t < n && !q[i][j]; ++t) q[i][j] = p[i][t] && m[t][j];
    p = q;
  }
  for (const auto& row : p)
    for (bool x : row)
      if (!x) return false;
  return true;
}

//! A long image θ^M(a) of every letter, at least `length` letters each.
inline std::vector<Word> long_images(const Substitution& s, std::size_t length) {
  std::vector<Word> out;
  for (Letter a = 0; a < s.size(); ++a) {
    Word w{a};
    while (w.size() < length) w = image_of(s, w);
    out.push_back(std::move(w));
  }
  return out;
}

//! Factors of length k of long images. For primitive input this is the
//! language once the images are long enough.
inline std::set<Word> factors(const Substitution& s, std::size_t k, std::size_t length = 200000) {
  std::set<Word> out;
  for (const Word& w : long_images(s, std::max(length, k))) {
    for (std::size_t i = 0; i + k <= w.size(); ++i) out.emplace(w.begin() + i, w.begin() + i + k);
  }
  return out;
}

using Map = std::vector<std::uint8_t>;

inline Map compose(const Map& f, const Map& g) {
  Map h(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) h[x] = f[g[x]];
  return h;
}

//! Every product of one or more generators, by pairwise closure.
inline std::set<Map> closure(const std::vector<Map>& gens) {
  std::set<Map> s(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Map> cur(s.begin(), s.end());
    for (const Map& f : cur) {
      for (const Map& g : cur) {
        if (s.insert(compose(f, g)).second) grew = true;
      }
    }
  }
  return s;
}

inline std::vector<Map> columns(const Substitution& s) {
  std::vector<Map> gens;
  for (std::size_t m = 0; m < s.length(); ++m) {
    Map f(s.size());
    for (Letter a = 0; a < s.size(); ++a) f[a] = static_cast<std::uint8_t>(s.images()[a][m]);
    gens.push_back(std::move(f));
  }
  return gens;
}

inline std::size_t rank(const Map& f) { return std::set<std::uint8_t>(f.begin(), f.end()).size(); }

//! Labels of the partition {f⁻¹(y)}, renumbered by first occurrence.
inline std::vector<std::size_t> kernel_labels(const Map& f) {
  std::vector<std::size_t> out(f.size());
  std::vector<std::uint8_t> seen;
  for (std::size_t x = 0; x < f.size(); ++x) {
    auto it = std::find(seen.begin(), seen.end(), f[x]);
    out[x] = static_cast<std::size_t>(it - seen.begin());
    if (it == seen.end()) seen.push_back(f[x]);
  }
  return out;
}

//! Elements of minimal rank.
inline std::set<Map> kernel(const std::set<Map>& s) {
  std::size_t c = SIZE_MAX;
  for (const Map& f : s) c = std::min(c, rank(f));
  std::set<Map> k;
  for (const Map& f : s)
    if (rank(f) == c) k.insert(f);
  return k;
}

//! The shift space is periodic iff a length-L prefix of a fixed point of a
//! power is invariant under a shift by some P ≤ N.
inline bool prefix_periodic(const Substitution& s, std::size_t N, std::size_t L) {
  // Some power's first column fixes a letter; primitive input guarantees it.
  for (std::size_t n = 1;; ++n) {
    for (Letter a = 0; a < s.size(); ++a) {
      Letter x = a;
      for (std::size_t i = 0; i < n; ++i) x = s.images()[x][0];
      if (x != a) continue;
      Word u{a};
      while (u.size() < L) u = expand(s, u, n);
      u.resize(L);
      for (std::size_t P = 1; P <= N; ++P) {
        bool periodic = true;
        for (std::size_t i = 0; i + P < L && periodic; ++i) periodic = u[i] == u[i + P];
        if (periodic) return true;
      }
      return false;
    }
  }
}

//! Uniform random images until the substitution is primitive.
inline Substitution random_primitive(std::mt19937& rng, std::size_t max_letters,
                                     std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> nd(2, max_letters);
  std::uniform_int_distribution<std::size_t> ld(2, max_length);
  for (;;) {
    const std::size_t n = nd(rng);
    const std::size_t l = ld(rng);
    std::uniform_int_distribution<Letter> ad(0, static_cast<Letter>(n - 1));
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a) names.push_back(std::string(1, static_cast<char>('a' + a)));
    std::vector<Word> images(n, Word(l));
    for (auto& img : images)
      for (auto& x : img) x = ad(rng);
    Substitution s(Alphabet(names), images);
    if (primitive(s)) return s;
  }
}

inline std::vector<Substitution> random_corpus(std::size_t count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<Substitution> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_primitive(rng, 5, 4));
  return out;
}

inline std::vector<std::pair<std::string, Substitution>> fixture_corpus() {
  std::vector<std::pair<std::string, Substitution>> out;
  for (const auto& f : substfactor::fixtures()) out.emplace_back(f.name, f.substitution());
  return out;
}

}  // namespace oracle
