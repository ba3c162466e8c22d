#include "substfactor/words.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "substfactor/detail/utf8.hpp"
#include "substfactor/error.hpp"

namespace substfactor {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InputError("alphabet is empty");
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InputError("empty letter name");
    if (!index_.emplace(names_[i], static_cast<Letter>(i)).second) {
      throw InputError("duplicate letter '" + names_[i] + "'");
    }
    if (detail::utf8_count(names_[i]) != 1) compact_ = false;
  }
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::index(std::string_view name) const {
  auto a = find(name);
  if (!a) throw InputError("unknown letter '" + std::string(name) + "'");
  return *a;
}

Substitution::Substitution(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != alphabet_.size()) {
    throw InputError("expected one image per letter");
  }
  length_ = images_.front().size();
  if (length_ == 0) throw InputError("images must be nonempty");
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (images_[a].size() != length_) {
      throw InputError("image of '" + alphabet_.name(a) + "' has length " +
                       std::to_string(images_[a].size()) + ", expected " +
                       std::to_string(length_));
    }
    for (Letter b : images_[a]) {
      if (b >= alphabet_.size()) {
        throw InputError("image of '" + alphabet_.name(a) +
                         "' contains an unknown letter");
      }
    }
  }
}

ColumnMap Substitution::column(std::size_t m) const {
  ColumnMap f(size());
  for (Letter a = 0; a < size(); ++a) f[a] = images_[a][m];
  return f;
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !alphabet.compact()) out += ' ';
    out += alphabet.name(w[i]);
  }
  return out;
}

Word substitute(const Substitution& s, const Word& w) {
  Word out;
  out.reserve(w.size() * s.length());
  for (Letter a : w) {
    if (a >= s.size()) throw InputError("word contains an unknown letter");
    const Word& img = s.image(a);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

Word substitute_n(const Substitution& s, const Word& w, std::size_t n) {
  Word out = w;
  for (std::size_t i = 0; i < n; ++i) out = substitute(s, out);
  return out;
}

ColumnMap column_map(const Substitution& s, std::size_t n, std::uint64_t j) {
  if (n == 0) throw InputError("column_map: power must be at least 1");
  const std::uint64_t ell = s.length();
  std::vector<std::size_t> digits(n);
  std::uint64_t rest = j;
  for (std::size_t i = n; i-- > 0;) {
    digits[i] = rest % ell;
    rest /= ell;
  }
  if (rest != 0) throw InputError("column_map: column index out of range");
  ColumnMap f(s.size());
  std::iota(f.begin(), f.end(), Letter{0});
  for (std::size_t d : digits) {
    for (Letter& x : f) x = s.at(x, d);
  }
  return f;
}

namespace {

void add_factors(const Word& t, std::size_t k, WordSet& set, std::vector<Word>* fresh) {
  if (t.size() < k) return;
  for (std::size_t i = 0; i + k <= t.size(); ++i) {
    Word f(t.begin() + i, t.begin() + i + k);
    auto [it, inserted] = set.insert(std::move(f));
    if (inserted && fresh) fresh->push_back(*it);
  }
}

}  // namespace

WordSet allowed_words(const Substitution& s, std::size_t k) {
  if (k == 0) throw InputError("allowed_words: length must be at least 1");
  WordSet set;
  std::size_t m0 = 0;
  for (std::uint64_t len = 1; len < k; ++m0) {
    if (s.length() == 1) return set;
    len *= s.length();
  }
  std::vector<Word> todo;
  for (Letter a = 0; a < s.size(); ++a) {
    add_factors(substitute_n(s, {a}, m0), k, set, &todo);
  }
  while (!todo.empty()) {
    Word w = std::move(todo.back());
    todo.pop_back();
    add_factors(substitute(s, w), k, set, &todo);
  }
  return set;
}

const WordSet& LanguageCache::words(std::size_t k) {
  std::lock_guard lock(mutex_);
  auto it = sets_.find(k);
  if (it == sets_.end()) it = sets_.emplace(k, allowed_words(*s_, k)).first;
  return it->second;
}

std::map<std::size_t, std::size_t> LanguageCache::complexity_log() const {
  std::lock_guard lock(mutex_);
  std::map<std::size_t, std::size_t> log;
  for (const auto& [k, set] : sets_) log[k] = set.size();
  return log;
}

namespace {

using BoolMatrix = std::vector<std::vector<std::uint64_t>>;

BoolMatrix bool_product(const BoolMatrix& x, const BoolMatrix& y, std::size_t n) {
  const std::size_t words = (n + 63) / 64;
  BoolMatrix z(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((x[i][j / 64] >> (j % 64)) & 1U) {
        for (std::size_t w = 0; w < words; ++w) z[i][w] |= y[j][w];
      }
    }
  }
  return z;
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  std::uint64_t g = std::gcd(a, b);
  std::uint64_t q = b / g;
  if (a > UINT64_MAX / q) throw ResourceError("fix_power: cycle lcm overflows");
  return a * q;
}

// Lengths of all cycles of a self-map.
std::vector<std::size_t> cycle_lengths(const ColumnMap& f) {
  const std::size_t n = f.size();
  std::vector<int> state(n, 0);  // 0 new, 1 on current path, 2 done
  std::vector<std::size_t> out;
  for (Letter start = 0; start < n; ++start) {
    if (state[start] != 0) continue;
    std::vector<Letter> path;
    Letter x = start;
    while (state[x] == 0) {
      state[x] = 1;
      path.push_back(x);
      x = f[x];
    }
    if (state[x] == 1) {
      std::size_t len = 1;
      for (Letter y = f[x]; y != x; y = f[y]) ++len;
      out.push_back(len);
    }
    for (Letter y : path) state[y] = 2;
  }
  return out;
}

}  // namespace

bool is_primitive(const Substitution& s) {
  const std::size_t n = s.size();
  const std::size_t words = (n + 63) / 64;
  BoolMatrix m(n, std::vector<std::uint64_t>(words, 0));
  for (Letter a = 0; a < n; ++a) {
    for (Letter b : s.image(a)) m[a][b / 64] |= std::uint64_t{1} << (b % 64);
  }
  std::uint64_t K = static_cast<std::uint64_t>(n - 1) * (n - 1) + 1;
  BoolMatrix result;
  bool have = false;
  for (BoolMatrix base = m; K > 0; K >>= 1) {
    if (K & 1U) {
      result = have ? bool_product(result, base, n) : base;
      have = true;
    }
    if (K > 1) base = bool_product(base, base, n);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (((result[i][j / 64] >> (j % 64)) & 1U) == 0) return false;
    }
  }
  return true;
}

std::size_t fix_power(const Substitution& s) {
  std::uint64_t m = 1;
  for (std::size_t col : {std::size_t{0}, s.length() - 1}) {
    for (std::size_t len : cycle_lengths(s.column(col))) m = checked_lcm(m, len);
  }
  return static_cast<std::size_t>(m);
}

std::vector<std::pair<Letter, Letter>> theta_fixed_letters(const Substitution& s) {
  const std::size_t m = fix_power(s);
  auto iterate = [&](const ColumnMap& f) {
    ColumnMap g(f.size());
    std::iota(g.begin(), g.end(), Letter{0});
    for (std::size_t i = 0; i < m; ++i) {
      for (Letter& x : g) x = f[x];
    }
    return g;
  };
  const ColumnMap first = iterate(s.column(0));
  const ColumnMap last = iterate(s.column(s.length() - 1));
  std::vector<std::pair<Letter, Letter>> seeds;
  for (const Word& w : allowed_words(s, 2)) {
    if (last[w[0]] == w[0] && first[w[1]] == w[1]) seeds.emplace_back(w[0], w[1]);
  }
  return seeds;
}

std::vector<std::size_t> factor_complexity(const Substitution& s, std::size_t K) {
  if (K == 0) return {};
  if (s.length() == 1 || s.size() == 1) {
    // Primitive with ℓ = 1 forces a single letter; the shift is one point.
    return std::vector<std::size_t>(K, s.size() == 1 ? 1 : allowed_words(s, 1).size());
  }
  std::size_t m = 0;
  for (std::uint64_t len = 1; len < K; ++m) len *= s.length();
  // For a primitive substitution every allowed K-word sits inside θ^m(w) for
  // some allowed 2-word w.
  std::vector<Word> windows;
  for (const Word& seed : allowed_words(s, 2)) {
    Word t = substitute_n(s, seed, m);
    for (std::size_t i = 0; i + K <= t.size(); ++i) {
      windows.emplace_back(t.begin() + i, t.begin() + i + K);
    }
  }
  std::sort(windows.begin(), windows.end());
  windows.erase(std::unique(windows.begin(), windows.end()), windows.end());
  // Sorted distinct words: adjacent pairs with common prefix shorter than k
  // mark a new k-prefix.
  std::vector<std::size_t> p(K, 1);
  for (std::size_t i = 0; i + 1 < windows.size(); ++i) {
    std::size_t lcp = 0;
    while (lcp < K && windows[i][lcp] == windows[i + 1][lcp]) ++lcp;
    for (std::size_t k = lcp + 1; k <= K; ++k) ++p[k - 1];
  }
  return p;
}

namespace {

// Two independent polynomial hashes modulo 2^61 - 1.
constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const u128 p = static_cast<u128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(p & kMersenne61) + static_cast<std::uint64_t>(p >> 61);
  if (r >= kMersenne61) r -= kMersenne61;
  return r;
}

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& h) const noexcept {
    return static_cast<std::size_t>(h.first ^ (h.second * 0x9E3779B97F4A7C15ULL));
  }
};

class WindowHasher {
 public:
  explicit WindowHasher(std::size_t K) : K_(K) {
    drop_[0] = drop_[1] = 1;
    for (std::size_t i = 0; i < K; ++i) {
      for (int j = 0; j < 2; ++j) drop_[j] = mul_mod(drop_[j], kBase[j]);
    }
  }

  void add_windows(const Word& t, std::size_t begin, std::size_t end) {
    if (end - begin < K_) return;
    std::uint64_t h[2] = {0, 0};
    for (std::size_t i = begin; i < end; ++i) {
      for (int j = 0; j < 2; ++j) {
        h[j] = mul_mod(h[j], kBase[j]) + t[i] + 1;
        if (i >= begin + K_) {
          h[j] += kMersenne61 - mul_mod(drop_[j], t[i - K_] + 1);
        }
        h[j] %= kMersenne61;
      }
      if (i + 1 >= begin + K_) seen_.emplace(h[0], h[1]);
    }
  }

  std::size_t count() const { return seen_.size(); }

 private:
  static constexpr std::uint64_t kBase[2] = {0x1F3D5B79A2C4E6F1ULL % kMersenne61,
                                             0x0123456789ABCDEFULL % kMersenne61};
  std::size_t K_;
  std::uint64_t drop_[2];
  std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, PairHash> seen_;
};

}  // namespace

std::size_t complexity_at(const Substitution& s, std::size_t K) {
  if (K == 0) return 1;
  if (s.length() == 1 || s.size() == 1) return s.size() == 1 ? 1 : allowed_words(s, 1).size();
  std::size_t m = 0;
  for (std::uint64_t len = 1; len < K; ++m) len *= s.length();
  // A K-window of a θ^m-desubstituted sequence lies inside one block θ^m(a)
  // or crosses exactly one seam θ^m(a)|θ^m(b).
  std::vector<Word> blocks(s.size());
  for (Letter a = 0; a < s.size(); ++a) blocks[a] = substitute_n(s, Word{a}, m);
  WindowHasher hasher(K);
  for (const Word& b : blocks) hasher.add_windows(b, 0, b.size());
  Word seam;
  for (const Word& w : allowed_words(s, 2)) {
    const Word& left = blocks[w[0]];
    const Word& right = blocks[w[1]];
    seam.assign(left.end() - static_cast<std::ptrdiff_t>(K - 1), left.end());
    seam.insert(seam.end(), right.begin(), right.begin() + static_cast<std::ptrdiff_t>(K - 1));
    hasher.add_windows(seam, 0, seam.size());
  }
  return hasher.count();
}

std::size_t aperiodicity_cap(const Substitution& s) {
  return s.length() * s.size() * s.size() + s.size();
}

AperiodicityResult aperiodicity(const Substitution& s, std::size_t cap) {
  if (!is_primitive(s)) {
    throw PreconditionError("aperiodicity test requires a primitive substitution");
  }
  AperiodicityResult r;
  r.cap = cap == 0 ? aperiodicity_cap(s) : cap;
  const std::size_t head = std::min<std::size_t>(16, r.cap + 1);
  r.complexity = factor_complexity(s, head);
  for (std::size_t k = 1; k < head; ++k) {
    const std::size_t pk = r.complexity[k - 1];
    if (r.complexity[k] == pk || pk <= k) {
      r.decided_at = k;
      r.complexity.resize(k + 1);
      for (std::size_t i = 0; i <= k; ++i) r.samples.emplace_back(i + 1, r.complexity[i]);
      return r;
    }
  }
  for (std::size_t i = 0; i < head; ++i) r.samples.emplace_back(i + 1, r.complexity[i]);
  // p is nondecreasing and constant from its first plateau on.
  std::vector<std::size_t> lengths;
  for (std::size_t K = 2 * head; K < r.cap; K *= 2) lengths.push_back(K);
  if (r.cap > head) lengths.push_back(r.cap);
  if (r.cap + 1 > head) lengths.push_back(r.cap + 1);
  for (std::size_t K : lengths) {
    const std::size_t pK = complexity_at(s, K);
    const auto [prevK, prevP] = r.samples.back();
    r.samples.emplace_back(K, pK);
    if (pK == prevP || pK <= K) {
      r.decided_at = K;
      return r;
    }
  }
  r.aperiodic = true;
  r.decided_at = r.samples.back().first;
  return r;
}

bool is_aperiodic(const Substitution& s, std::size_t cap) {
  return aperiodicity(s, cap).aperiodic;
}

namespace {

// Renaming-invariant fingerprint of a letter: the pattern of repeated letters
// in aθ(a), and the tail and cycle length of a under each column map.
std::vector<std::size_t> letter_signature(const Substitution& s, Letter a) {
  std::vector<std::size_t> sig;
  Word w{a};
  w.insert(w.end(), s.image(a).begin(), s.image(a).end());
  std::vector<Letter> seen;
  for (Letter x : w) {
    auto it = std::find(seen.begin(), seen.end(), x);
    sig.push_back(static_cast<std::size_t>(it - seen.begin()));
    if (it == seen.end()) seen.push_back(x);
  }
  for (std::size_t m = 0; m < s.length(); ++m) {
    std::vector<Letter> orbit;
    Letter x = a;
    while (std::find(orbit.begin(), orbit.end(), x) == orbit.end()) {
      orbit.push_back(x);
      x = s.at(x, m);
    }
    auto first = std::find(orbit.begin(), orbit.end(), x);
    sig.push_back(static_cast<std::size_t>(first - orbit.begin()));
    sig.push_back(static_cast<std::size_t>(orbit.end() - first));
  }
  return sig;
}

class RenamingSearch {
 public:
  RenamingSearch(const Substitution& s1, const Substitution& s2)
      : s1_(s1), s2_(s2), phi_(s1.size(), kNone), inv_(s2.size(), kNone) {
    for (Letter a = 0; a < s1.size(); ++a) sig1_.push_back(letter_signature(s1, a));
    for (Letter b = 0; b < s2.size(); ++b) sig2_.push_back(letter_signature(s2, b));
  }

  std::optional<std::vector<Letter>> run() {
    if (s1_.size() != s2_.size() || s1_.length() != s2_.length()) return std::nullopt;
    if (search()) return phi_;
    return std::nullopt;
  }

 private:
  static constexpr Letter kNone = static_cast<Letter>(-1);

  bool search() {
    Letter a = 0;
    while (a < phi_.size() && phi_[a] != kNone) ++a;
    if (a == phi_.size()) return true;
    for (Letter b = 0; b < s2_.size(); ++b) {
      if (inv_[b] != kNone || sig1_[a] != sig2_[b]) continue;
      const std::size_t mark = trail_.size();
      if (assign(a, b) && search()) return true;
      undo(mark);
    }
    return false;
  }

  bool assign(Letter a0, Letter b0) {
    std::vector<std::pair<Letter, Letter>> stack{{a0, b0}};
    if (!set(a0, b0)) return false;
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      for (std::size_t m = 0; m < s1_.length(); ++m) {
        const Letter x = s1_.at(a, m);
        const Letter y = s2_.at(b, m);
        if (phi_[x] == kNone) {
          if (!set(x, y)) return false;
          stack.emplace_back(x, y);
        } else if (phi_[x] != y) {
          return false;
        }
      }
    }
    return true;
  }

  bool set(Letter a, Letter b) {
    if (inv_[b] != kNone || sig1_[a] != sig2_[b]) return false;
    phi_[a] = b;
    inv_[b] = a;
    trail_.push_back(a);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Letter a = trail_.back();
      trail_.pop_back();
      inv_[phi_[a]] = kNone;
      phi_[a] = kNone;
    }
  }

  const Substitution& s1_;
  const Substitution& s2_;
  std::vector<std::vector<std::size_t>> sig1_, sig2_;
  std::vector<Letter> phi_, inv_, trail_;
};

}  // namespace

std::optional<std::vector<Letter>> equivalent_up_to_renaming(const Substitution& s1,
                                                             const Substitution& s2) {
  return RenamingSearch(s1, s2).run();
}

}  // namespace substfactor
