#include "substfactor/semigroup.hpp"

#include <algorithm>
#include <bitset>
#include <cstdlib>
#include <cstring>
#include <map>
#include <numeric>

#include "substfactor/error.hpp"
#include "substfactor/kernels.hpp"

namespace substfactor {

namespace {

constexpr std::uint32_t kEmpty = static_cast<std::uint32_t>(-1);

std::string describe(const Substitution& s) {
  std::string out;
  for (Letter a = 0; a < s.size(); ++a) {
    if (a > 0) out += "; ";
    out += s.alphabet().name(a) + "->" + format_word(s.alphabet(), s.image(a));
    if (out.size() > 2000) {
      out += "; ...";
      break;
    }
  }
  return out;
}

}  // namespace

std::size_t default_budget() {
  if (const char* env = std::getenv("SUBSTFACTOR_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

Transformation TransformationSemigroup::element(std::size_t i) const {
  const std::uint8_t* p = data(i);
  return Transformation(std::vector<std::uint8_t>(p, p + degree_));
}

std::uint64_t TransformationSemigroup::hash(const std::uint8_t* bytes) const {
  std::uint64_t h = 0x243F6A8885A308D3ULL ^ degree_;
  for (std::size_t i = 0; i < stride_; i += 8) {
    std::uint64_t chunk;
    std::memcpy(&chunk, bytes + i, 8);
    h = (h ^ chunk) * 0x9E3779B97F4A7C15ULL;
    h ^= h >> 31;
  }
  h ^= h >> 29;
  h *= 0xBF58476D1CE4E5B9ULL;
  return h ^ (h >> 32);
}

std::optional<std::size_t> TransformationSemigroup::lookup(const std::uint8_t* bytes,
                                                           std::uint64_t h) const {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t pos = h & mask;; pos = (pos + 1) & mask) {
    const std::uint32_t idx = slots_[pos];
    if (idx == kEmpty) return std::nullopt;
    if (hashes_[idx] == h && std::memcmp(data(idx), bytes, stride_) == 0) return idx;
  }
}

void TransformationSemigroup::insert_slot(std::size_t index, std::uint64_t h) {
  const std::size_t mask = slots_.size() - 1;
  std::size_t pos = h & mask;
  while (slots_[pos] != kEmpty) pos = (pos + 1) & mask;
  slots_[pos] = static_cast<std::uint32_t>(index);
}

void TransformationSemigroup::rehash(std::size_t capacity) {
  slots_.assign(capacity, kEmpty);
  for (std::size_t i = 0; i < hashes_.size(); ++i) insert_slot(i, hashes_[i]);
}

std::optional<std::size_t> TransformationSemigroup::find(const Transformation& t) const {
  if (t.degree() != degree_) return std::nullopt;
  std::vector<std::uint8_t> buf(stride_, 0);
  std::copy(t.bytes().begin(), t.bytes().end(), buf.begin());
  return lookup(buf.data(), hash(buf.data()));
}

TransformationSemigroup generate(const std::vector<Transformation>& generators,
                                 const SemigroupOptions& options,
                                 const std::string& context) {
  if (generators.empty()) throw InputError("generate: no generators");
  const std::size_t budget = options.budget == 0 ? default_budget() : options.budget;
  TransformationSemigroup sg;
  sg.degree_ = generators.front().degree();
  sg.stride_ = std::max<std::size_t>(8, (sg.degree_ + 7) / 8 * 8);
  sg.slots_.assign(64, kEmpty);
  const std::size_t ngens = generators.size();

  std::vector<std::uint8_t> buf(sg.stride_, 0);
  auto add = [&](std::uint32_t depth) -> std::size_t {
    const std::uint64_t h = sg.hash(buf.data());
    if (auto idx = sg.lookup(buf.data(), h)) return *idx;
    const std::size_t idx = sg.depth_.size();
    if (idx >= budget) {
      std::string msg = "semigroup exceeds the element budget of " + std::to_string(budget);
      if (!context.empty()) msg += " for " + context;
      throw ResourceError(msg);
    }
    sg.arena_.insert(sg.arena_.end(), buf.begin(), buf.end());
    sg.depth_.push_back(depth);
    sg.hashes_.push_back(h);
    if (2 * sg.hashes_.size() > sg.slots_.size()) {
      sg.rehash(2 * sg.slots_.size());
    } else {
      sg.insert_slot(idx, h);
    }
    return idx;
  };

  std::vector<std::vector<std::uint8_t>> gens;
  for (const Transformation& g : generators) {
    if (g.degree() != sg.degree_) throw InputError("generate: degree mismatch");
    std::copy(g.bytes().begin(), g.bytes().end(), buf.begin());
    sg.generators_.push_back(add(1));
    gens.push_back(g.bytes());
  }
  for (std::size_t i = 0; i < sg.depth_.size(); ++i) {
    const std::uint32_t next = sg.depth_[i] + 1;
    for (std::size_t g = 0; g < ngens; ++g) {
      kernels::compose(gens[g].data(), sg.data(i), buf.data(), sg.degree_);
      const std::size_t idx = add(next);
      sg.cayley_.push_back(static_cast<std::uint32_t>(idx));
    }
  }
  return sg;
}

TransformationSemigroup generate(const Substitution& s, const SemigroupOptions& options) {
  std::vector<Transformation> gens;
  gens.reserve(s.length());
  for (std::size_t m = 0; m < s.length(); ++m) {
    try {
      gens.emplace_back(s.column(m));
    } catch (const ResourceError& e) {
      throw ResourceError(std::string(e.what()) + " (" + describe(s) + ")");
    }
  }
  return generate(gens, options, describe(s));
}

LevelSets level_sets(const TransformationSemigroup& sg) {
  LevelSets ls;
  const std::size_t words = (sg.size() + 63) / 64;
  std::map<std::vector<std::uint64_t>, std::size_t> seen;

  std::vector<std::pair<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>>> current;
  for (std::size_t g = 0; g < sg.generator_count(); ++g) {
    current.push_back({static_cast<std::uint32_t>(sg.generator(g)),
                       {0U, static_cast<std::uint32_t>(g)}});
  }
  for (std::size_t k = 1;; ++k) {
    std::sort(current.begin(), current.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::uint64_t> bits(words, 0);
    std::vector<std::uint32_t> level;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> parents;
    for (const auto& [e, parent] : current) {
      if (!level.empty() && level.back() == e) continue;
      level.push_back(e);
      parents.push_back(parent);
      bits[e / 64] |= std::uint64_t{1} << (e % 64);
    }
    auto [it, inserted] = seen.emplace(std::move(bits), k);
    if (!inserted) {
      ls.preperiod = it->second - 1;
      ls.period = k - it->second;
      return ls;
    }
    current.clear();
    for (std::size_t pos = 0; pos < level.size(); ++pos) {
      for (std::size_t g = 0; g < sg.generator_count(); ++g) {
        current.push_back({static_cast<std::uint32_t>(sg.right(level[pos], g)),
                           {static_cast<std::uint32_t>(pos), static_cast<std::uint32_t>(g)}});
      }
    }
    ls.levels.push_back(std::move(level));
    ls.parents.push_back(std::move(parents));
  }
}

std::vector<std::size_t> level_word(const LevelSets& ls, std::size_t k, std::size_t pos) {
  std::vector<std::size_t> word(k);
  for (std::size_t level = k; level >= 1; --level) {
    const auto& [parent, g] = ls.parents[level - 1][pos];
    word[level - 1] = g;
    pos = parent;
  }
  return word;
}

GreenData green(const TransformationSemigroup& sg) {
  GreenData gd;
  const std::size_t n = sg.degree();
  gd.degree = n;
  std::vector<std::size_t> ranks(sg.size());
  gd.rank = n;
  for (std::size_t i = 0; i < sg.size(); ++i) {
    std::bitset<kMaxDegree> seen;
    const std::uint8_t* p = sg.data(i);
    for (std::size_t x = 0; x < n; ++x) seen.set(p[x]);
    ranks[i] = seen.count();
    gd.rank = std::min(gd.rank, ranks[i]);
  }
  std::map<std::vector<Letter>, std::vector<std::uint32_t>> by_image;
  std::map<Partition, std::vector<std::uint32_t>> by_partition;
  for (std::size_t i = 0; i < sg.size(); ++i) {
    if (ranks[i] != gd.rank) continue;
    const auto idx = static_cast<std::uint32_t>(i);
    gd.kernel.push_back(idx);
    const Transformation t = sg.element(i);
    by_image[t.image_set()].push_back(idx);
    by_partition[t.kernel_partition()].push_back(idx);
    if (t.is_idempotent()) gd.idempotents.push_back(idx);
  }
  for (auto& [image, members] : by_image) gd.r_classes.push_back({image, std::move(members)});
  for (auto& [p, members] : by_partition) gd.l_classes.push_back({p, std::move(members)});
  const std::size_t cells = gd.r_classes.size() * gd.l_classes.size();
  SUBSTFACTOR_CHECK(gd.kernel.size() % cells == 0, "kernel size is not a multiple of #R·#L");
  gd.group_order = gd.kernel.size() / cells;
  return gd;
}

std::size_t naive_column_number(const TransformationSemigroup& sg) { return green(sg).rank; }

std::size_t j_depth(const TransformationSemigroup& sg, const GreenData& g) {
  std::size_t j = SIZE_MAX;
  for (std::uint32_t i : g.kernel) j = std::min(j, sg.depth(i));
  SUBSTFACTOR_CHECK(j != SIZE_MAX, "empty kernel");
  return j;
}

std::size_t j_depth(const TransformationSemigroup& sg) { return j_depth(sg, green(sg)); }

std::optional<Partition> unique_minimal_left_ideal(const GreenData& g) {
  if (g.l_classes.size() != 1) return std::nullopt;
  return g.l_classes.front().partition;
}

bool has_unique_minimal_left_ideal(const TransformationSemigroup& sg) {
  return unique_minimal_left_ideal(green(sg)).has_value();
}

bool kernel_is_left_zero(const TransformationSemigroup& sg, const GreenData& g) {
  const std::size_t n = sg.degree();
  std::vector<std::uint8_t> out(n);
  for (std::uint32_t x : g.kernel) {
    for (std::uint32_t y : g.kernel) {
      kernels::compose(sg.data(x), sg.data(y), out.data(), n);
      if (std::memcmp(out.data(), sg.data(x), n) != 0) return false;
    }
  }
  return true;
}

bool kernel_is_left_zero(const TransformationSemigroup& sg) {
  return kernel_is_left_zero(sg, green(sg));
}

PairAperiodicityReport pair_aperiodicity(const Substitution& s,
                                         const TransformationSemigroup& sg) {
  const std::size_t n = s.size();
  const LevelSets ls = level_sets(sg);
  std::vector<std::size_t> found(n * n, 0);
  std::vector<std::vector<std::size_t>> words(n * n);
  for (std::size_t k = 1; k <= ls.levels.size(); ++k) {
    for (std::size_t pos = 0; pos < ls.levels[k - 1].size(); ++pos) {
      const std::uint8_t* f = sg.data(ls.levels[k - 1][pos]);
      std::vector<Letter> fixed;
      for (std::size_t x = 0; x < n; ++x) {
        if (f[x] == x) fixed.push_back(static_cast<Letter>(x));
      }
      for (std::size_t i = 0; i < fixed.size(); ++i) {
        for (std::size_t j = i + 1; j < fixed.size(); ++j) {
          const std::size_t key = fixed[i] * n + fixed[j];
          if (found[key] != 0) continue;
          found[key] = k;
          words[key] = level_word(ls, k, pos);
        }
      }
    }
  }
  PairAperiodicityReport report;
  for (Letter a = 0; a < n; ++a) {
    for (Letter b = a + 1; b < n; ++b) {
      const std::size_t key = a * n + b;
      if (found[key] == 0) continue;
      report.periodic_pairs.push_back({a, b, found[key], words[key]});
      report.p_theta = std::lcm(report.p_theta, static_cast<std::uint64_t>(found[key]));
    }
  }
  return report;
}

PairAperiodicityReport pair_aperiodicity(const Substitution& s) {
  return pair_aperiodicity(s, generate(s));
}

}  // namespace substfactor
