#include "substfactor/transforms.hpp"

#include <functional>
#include <map>
#include <set>
#include <numeric>

#include "substfactor/error.hpp"

namespace substfactor {

namespace {

// Guard against materializing absurdly long images.
constexpr std::uint64_t kMaxImageLetters = 50'000'000;

DerivedSubstitution make_derived(const Substitution& s, const WordSet& alphabet_words,
                                 std::size_t centre,
                                 const std::function<Word(const Word&, std::size_t)>& window) {
  std::vector<Word> words(alphabet_words.begin(), alphabet_words.end());
  std::map<Word, Letter> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < words.size(); ++i) {
    index.emplace(words[i], static_cast<Letter>(i));
    names.push_back(composite_name(s.alphabet(), words[i]));
  }
  std::vector<Word> images(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    images[i].reserve(s.length());
    for (std::size_t m = 0; m < s.length(); ++m) {
      auto it = index.find(window(words[i], m));
      SUBSTFACTOR_CHECK(it != index.end(), "window is not an allowed word");
      images[i].push_back(it->second);
    }
  }
  DerivedSubstitution d{Substitution(Alphabet(std::move(names)), std::move(images)), {}};
  for (const Word& w : words) d.letters.iota.push_back(w[centre]);
  d.letters.words = std::move(words);
  return d;
}

}  // namespace

std::string composite_name(const Alphabet& base, const Word& w) {
  if (w.size() == 1) return base.name(w[0]);
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !base.compact()) out += '.';
    out += base.name(w[i]);
  }
  return out + "]";
}

Substitution power(const Substitution& s, std::size_t n) {
  if (n == 0) throw InputError("power: exponent must be at least 1");
  std::uint64_t len = 1;
  for (std::size_t i = 0; i < n; ++i) {
    len *= s.length();
    if (len * s.size() > kMaxImageLetters) {
      throw ResourceError("power: θ^" + std::to_string(n) + " is too long to build");
    }
  }
  std::vector<Word> images;
  images.reserve(s.size());
  for (Letter a = 0; a < s.size(); ++a) images.push_back(substitute_n(s, {a}, n));
  return Substitution(s.alphabet(), std::move(images));
}

DerivedSubstitution collar(const Substitution& s, CollarSpec spec) {
  const std::size_t width = spec.l + 1 + spec.r;
  const std::size_t ell = s.length();
  return make_derived(s, allowed_words(s, width), spec.l, [&](const Word& w, std::size_t m) {
    const Word t = substitute(s, w);
    // t is indexed from -ℓl; window [m-l, m+r] starts at ℓl + m - l.
    const std::size_t start = ell * spec.l + m - spec.l;
    return Word(t.begin() + start, t.begin() + start + width);
  });
}

DerivedSubstitution shift_ext(const Substitution& s, std::size_t k) {
  if (k >= s.length()) {
    throw InputError("shift_ext: shift " + std::to_string(k) + " must be below " +
                     std::to_string(s.length()));
  }
  return make_derived(s, allowed_words(s, 2), 0, [&](const Word& w, std::size_t m) {
    const Word t = substitute(s, w);
    return Word(t.begin() + m + k, t.begin() + m + k + 2);
  });
}

InnerEncoding injectivize(const Substitution& s) {
  std::vector<Letter> parent(s.size());
  std::iota(parent.begin(), parent.end(), Letter{0});
  auto find = [&](Letter a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (bool changed = true; changed;) {
    changed = false;
    std::map<Word, Letter> seen;
    for (Letter a = 0; a < s.size(); ++a) {
      Word coded;
      for (Letter b : s.image(a)) coded.push_back(find(b));
      auto [it, inserted] = seen.emplace(std::move(coded), a);
      if (!inserted && find(it->second) != find(a)) {
        parent[find(a)] = find(it->second);
        changed = true;
      }
    }
  }
  std::vector<Letter> labels(s.size());
  for (Letter a = 0; a < s.size(); ++a) labels[a] = find(a);
  return inner_encoding_from_partition(s, Partition::from_labels(labels));
}

HeightInfo height(const Substitution& s) {
  if (!is_primitive(s)) throw PreconditionError("height requires a primitive substitution");
  HeightInfo info;
  Letter seed = 0;
  while (seed < s.size() && s.at(seed, 0) != seed) ++seed;
  if (seed == s.size()) {
    throw PreconditionError("height requires a letter fixed by the first column");
  }
  info.seed = seed;
  if (s.length() == 1) return info;

  const std::uint64_t need = s.length() * s.size() * s.size();
  Word u{seed};
  std::uint64_t prev = 0;
  for (std::size_t m = 1;; ++m) {
    u = substitute(s, u);
    if (u.size() > kMaxImageLetters) throw ResourceError("height: prefix did not stabilize");
    std::uint64_t g = 0;
    for (std::size_t k = 1; k < u.size(); ++k) {
      if (u[k] == seed) g = std::gcd(g, static_cast<std::uint64_t>(k));
    }
    if (m >= 2 && g == prev && g != 0 && u.size() >= need) {
      info.g = g;
      info.prefix_power = m;
      break;
    }
    prev = g;
  }
  std::uint64_t h = info.g;
  for (std::uint64_t d = std::gcd(h, static_cast<std::uint64_t>(s.length())); d > 1;
       d = std::gcd(h, static_cast<std::uint64_t>(s.length()))) {
    h /= d;
  }
  info.h = static_cast<std::size_t>(h);
  return info;
}

PureBase pure_base(const Substitution& s, const HeightInfo& info) {
  const std::size_t h = info.h;
  if (h <= 1) {
    PureBase pb{s, {}};
    for (Letter a = 0; a < s.size(); ++a) pb.blocks.push_back({a});
    return pb;
  }
  Word u{info.seed};
  while (u.size() < h) u = substitute(s, u);
  std::set<Word> blocks{Word(u.begin(), u.begin() + h)};
  std::vector<Word> todo(blocks.begin(), blocks.end());
  while (!todo.empty()) {
    const Word t = substitute(s, todo.back());
    todo.pop_back();
    for (std::size_t k = 0; k < s.length(); ++k) {
      Word b(t.begin() + k * h, t.begin() + (k + 1) * h);
      if (blocks.insert(b).second) todo.push_back(std::move(b));
    }
  }
  PureBase pb;
  pb.blocks.assign(blocks.begin(), blocks.end());
  std::map<Word, Letter> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < pb.blocks.size(); ++i) {
    index.emplace(pb.blocks[i], static_cast<Letter>(i));
    names.push_back(composite_name(s.alphabet(), pb.blocks[i]));
  }
  std::vector<Word> images;
  for (const Word& b : pb.blocks) {
    const Word t = substitute(s, b);
    Word img;
    for (std::size_t k = 0; k < s.length(); ++k) {
      img.push_back(index.at(Word(t.begin() + k * h, t.begin() + (k + 1) * h)));
    }
    images.push_back(std::move(img));
  }
  pb.substitution = Substitution(Alphabet(std::move(names)), std::move(images));
  return pb;
}

Substitution suspend_split(const Substitution& s, std::size_t h) {
  if (h == 0) throw InputError("suspend_split: h must be at least 1");
  if (h == 1) return s;
  const std::size_t ell = s.length();
  std::vector<std::string> names;
  for (Letter a = 0; a < s.size(); ++a) {
    for (std::size_t j = 1; j <= h; ++j) {
      names.push_back(s.alphabet().name(a) + "_" + std::to_string(j));
    }
  }
  std::vector<Word> images;
  for (Letter a = 0; a < s.size(); ++a) {
    Word split;
    for (Letter b : s.image(a)) {
      for (std::size_t j = 0; j < h; ++j) split.push_back(static_cast<Letter>(b * h + j));
    }
    for (std::size_t j = 0; j < h; ++j) {
      images.emplace_back(split.begin() + j * ell, split.begin() + (j + 1) * ell);
    }
  }
  return Substitution(Alphabet(std::move(names)), std::move(images));
}

}  // namespace substfactor
