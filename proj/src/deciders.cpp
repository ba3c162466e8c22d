#include "substfactor/deciders.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "substfactor/error.hpp"

namespace substfactor {

std::string to_string(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r = saturating_mul(r, base);
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t e, const char* what) {
  const std::uint64_t r = saturating_pow(base, e);
  if (r == UINT64_MAX || r > static_cast<std::uint64_t>(INT64_MAX)) {
    throw ResourceError(std::string(what) + ": ℓ^n overflows");
  }
  return r;
}

struct LocalRuleInput {
  const Substitution& base;
  std::size_t h;
  const PureBase& pure;
  const AAStage& stage;
};

// Windows of the input language whose centre letter has a unique image under
// every parse into h-blocks and collared words that fits in the window.
std::optional<LocalRule> try_local_rule(const LocalRuleInput& in, std::size_t radius) {
  const std::size_t h = in.h;
  const std::size_t l = in.stage.spec.l;
  const std::size_t r = in.stage.spec.r;
  const std::size_t width = 2 * radius + 1;
  std::map<Word, Letter> block_index;
  for (std::size_t i = 0; i < in.pure.blocks.size(); ++i) {
    block_index.emplace(in.pure.blocks[i], static_cast<Letter>(i));
  }
  std::map<Word, Letter> collared_index;
  const auto& words = in.stage.collared.letters.words;
  for (std::size_t i = 0; i < words.size(); ++i) {
    collared_index.emplace(words[i], static_cast<Letter>(i));
  }
  LocalRule rule;
  rule.radius = radius;
  for (const Word& w : allowed_words(in.base, width)) {
    std::set<Letter> outputs;
    for (std::size_t j = 0; j < h; ++j) {
      // The centre sits at offset j in its block; blocks -l..r around it.
      if (radius < j + l * h || radius - j + (r + 1) * h > width) return std::nullopt;
      const std::size_t start = radius - j - l * h;
      Word collared_word;
      bool valid = true;
      for (std::size_t b = 0; b < l + 1 + r && valid; ++b) {
        auto it = block_index.find(
            Word(w.begin() + start + b * h, w.begin() + start + (b + 1) * h));
        if (it == block_index.end()) {
          valid = false;
        } else {
          collared_word.push_back(it->second);
        }
      }
      if (!valid) continue;
      auto it = collared_index.find(collared_word);
      if (it == collared_index.end()) continue;
      const Letter coded = in.stage.encoding.code[it->second];
      outputs.insert(static_cast<Letter>(coded * h + j));
    }
    if (outputs.size() != 1) return std::nullopt;
    rule.table.emplace_back(w, *outputs.begin());
  }
  return rule;
}

}  // namespace

AAVerdict decide_aa_factor(const Substitution& s, const AAOptions& options) {
  if (!is_primitive(s)) {
    throw PreconditionError("almost automorphic decision requires a primitive substitution");
  }
  if (!is_aperiodic(s, options.aperiodicity_cap)) {
    throw PreconditionError("almost automorphic decision requires an aperiodic substitution");
  }
  AAVerdict v;
  v.fix_power = fix_power(s);
  v.powered = v.fix_power > 1 ? power(s, v.fix_power) : s;
  v.height = height(v.powered);
  v.pure_base = pure_base(v.powered, v.height);

  std::vector<CollarSpec> specs;
  if (options.cheap_certificates) specs = {{0, 0}, {0, 1}};
  specs.push_back({1, 1});
  for (const CollarSpec& spec : specs) {
    AAStage stage{spec, collar(v.pure_base.substitution, spec), {}, false};
    const GreenData g = green(generate(stage.collared.substitution, options.semigroup));
    const MinimalSets ms = minimal_sets(g);
    SUBSTFACTOR_CHECK(ms.covers_alphabet, "collared pure base is not essentially surjective");
    stage.encoding = associated_inner_encoding(stage.collared.substitution, ms);
    stage.aperiodic = is_aperiodic(stage.encoding.quotient, options.aperiodicity_cap);
    if (stage.aperiodic && !v.witness_stage) v.witness_stage = v.stages.size();
    v.stages.push_back(std::move(stage));
  }
  v.answer = v.decisive().aperiodic ? Answer::yes : Answer::no;
  SUBSTFACTOR_CHECK(v.answer == Answer::yes || !v.witness_stage,
                    "a cheap certificate is aperiodic but the decisive test is not");
  if (v.answer == Answer::no) return v;

  const AAStage& w = *v.witness();
  if (v.height.h == 1 && v.fix_power > 1) {
    const DerivedSubstitution base = collar(s, w.spec);
    if (base.letters.words == w.collared.letters.words) {
      try {
        v.unpowered_witness = inner_encoding_from_partition(base.substitution, w.encoding.partition());
      } catch (const InputError&) {
      }
    }
  }
  if (v.height.h > 1) v.suspended = suspend_split(w.encoding.quotient, v.height.h);
  const LocalRuleInput in{v.powered, v.height.h, v.pure_base, w};
  const std::size_t h = v.height.h;
  const std::size_t start = std::max(h - 1 + w.spec.l * h, (w.spec.r + 1) * h - 1);
  for (std::size_t radius = start; radius <= std::max(start, options.max_local_rule_radius);
       ++radius) {
    if ((v.local_rule = try_local_rule(in, radius))) break;
  }
  return v;
}

BijectiveVerdict decide_bijective_inner(const Substitution& s, const SemigroupOptions& options) {
  const TransformationSemigroup sg = generate(s, options);
  const GreenData g = green(sg);
  BijectiveVerdict v;
  v.mode = "inner";
  v.column_number = g.rank;
  v.j = j_depth(sg, g);
  for (const LClass& l : g.l_classes) v.kernel_partitions.push_back(l.partition);
  const auto common = unique_minimal_left_ideal(g);
  if (!common) {
    v.answer = Answer::no;
    v.reason = std::to_string(g.l_classes.size()) + " minimal left ideals";
    return v;
  }
  if (g.rank == 1) {
    v.answer = Answer::no;
    v.reason = "column number 1: the only such factor has one letter";
    return v;
  }
  InnerEncoding e = inner_encoding_from_partition(s, *common);
  for (std::size_t m = 0; m < e.quotient.length(); ++m) {
    SUBSTFACTOR_CHECK(Transformation(e.quotient.column(m)).is_bijective(),
                      "quotient by the kernel partition is not bijective");
  }
  v.answer = Answer::yes;
  v.witness = BijectiveWitness{0, 0, s, *common, std::move(e)};
  return v;
}

SweepEntry sweep_entry(const Substitution& powered, std::size_t n, std::size_t k,
                       const SemigroupOptions& options) {
  const DerivedSubstitution d = shift_ext(powered, k);
  const TransformationSemigroup sg = generate(d.substitution, options);
  const GreenData g = green(sg);
  SweepEntry e{n, k, d.substitution.size(), sg.size(), d.substitution.alphabet().names(), {}};
  for (const LClass& l : g.l_classes) e.kernel_partitions.push_back(l.partition);
  return e;
}

BijectiveVerdict decide_bijective_general(const Substitution& s, const SweepOptions& options) {
  if (!is_primitive(s)) throw PreconditionError("bijective sweep requires a primitive substitution");
  if (!is_aperiodic(s)) throw PreconditionError("bijective sweep requires an aperiodic substitution");
  const std::size_t m = fix_power(s);
  const HeightInfo hi = height(m > 1 ? power(s, m) : s);
  if (hi.h != 1) {
    throw PreconditionError("out of theorem scope: height " + std::to_string(hi.h) +
                            " is not trivial");
  }
  const SemigroupOptions task_options{options.task_budget};
  BijectiveVerdict v = decide_bijective_inner(s, task_options);
  if (v.column_number == 1) {
    throw PreconditionError("column number 1: there is no nontrivial bijective factor");
  }
  if (v.answer == Answer::yes) {
    v.mode = "fixed-fibre";
    return v;
  }
  v.mode = "general-sweep";
  v.reason.clear();
  const std::uint64_t ell = s.length();
  const std::uint64_t product = saturating_mul(ell - 1, saturating_pow(ell, v.j) - 1);
  const std::uint64_t bound = product == 0 ? 0 : product - 1;
  v.bound_n = bound >= SIZE_MAX ? SIZE_MAX : static_cast<std::size_t>(bound);
  const std::size_t N =
      options.max_n == 0 ? v.bound_n : std::min<std::size_t>(options.max_n, v.bound_n);
  v.max_n_used = N;
  if (options.max_k != 0) v.max_k_used = options.max_k;

  bool capped = N < v.bound_n;
  std::vector<Substitution> powers;
  std::vector<std::pair<std::size_t, std::size_t>> tasks;
  for (std::size_t n = 1; n <= N; ++n) {
    const std::uint64_t size = checked_pow(ell, n, "bijective sweep");
    std::uint64_t limit = size;
    if (options.max_k != 0 && options.max_k < size) {
      limit = options.max_k;
      capped = true;
    }
    powers.push_back(power(s, n));
    for (std::uint64_t k = 0; k < limit; ++k) tasks.emplace_back(n, static_cast<std::size_t>(k));
  }

  std::vector<std::optional<SweepEntry>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_hit{SIZE_MAX};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      if (i > first_hit.load()) continue;
      const auto [n, k] = tasks[i];
      try {
        results[i] = sweep_entry(powers[n - 1], n, k, task_options);
        if (results[i]->minimal_left_ideals() == 1) {
          std::size_t cur = first_hit.load();
          while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
          }
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, tasks.size()));
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  const std::size_t hit = first_hit.load();
  for (std::size_t i = 0; i < tasks.size() && i <= hit; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    if (results[i]) v.sweep.push_back(std::move(*results[i]));
  }
  if (hit != SIZE_MAX) {
    const auto [n, k] = tasks[hit];
    const DerivedSubstitution d = shift_ext(powers[n - 1], k);
    BijectiveVerdict inner = decide_bijective_inner(d.substitution, task_options);
    SUBSTFACTOR_CHECK(inner.answer == Answer::yes && inner.witness,
                      "sweep hit does not yield a bijective quotient");
    v.answer = Answer::yes;
    v.witness = std::move(inner.witness);
    v.witness->n = n;
    v.witness->k = k;
    return v;
  }
  v.answer = capped ? Answer::inconclusive : Answer::no;
  if (capped) v.reason = "sweep stopped at the user cap before the theorem's bound";
  return v;
}

Rational kappa_of_shift(std::uint64_t ell, std::size_t n, std::uint64_t k) {
  if (ell < 2) throw InputError("kappa_of_shift: ℓ must be at least 2");
  if (n < 1) throw InputError("kappa_of_shift: n must be at least 1");
  const std::uint64_t size = checked_pow(ell, n, "kappa_of_shift");
  if (k >= size) throw InputError("kappa_of_shift: k must be below ℓ^n");
  return Rational(-static_cast<std::int64_t>(k), static_cast<std::int64_t>(size - 1));
}

KappaShift shift_for_kappa(std::uint64_t ell, const Rational& target) {
  if (ell < 2) throw InputError("shift_for_kappa: ℓ must be at least 2");
  const std::int64_t p = target.num();
  const std::int64_t q = target.den();
  if (std::gcd(static_cast<std::uint64_t>(q), ell) != 1) {
    throw InputError("shift_for_kappa: denominator " + std::to_string(q) +
                     " shares a factor with ℓ = " + std::to_string(ell));
  }
  KappaShift out;
  // M = ceil(p/q), so that p0 = p - Mq lies in (-q, 0].
  out.M = p / q + ((p % q) > 0 ? 1 : 0);
  const std::int64_t p0 = p - out.M * q;
  std::uint64_t phi = 0;
  for (std::int64_t i = 1; i <= q; ++i) {
    if (std::gcd(i, q) == 1) ++phi;
  }
  out.n = static_cast<std::size_t>(phi);
  const std::uint64_t size = checked_pow(ell, out.n, "shift_for_kappa");
  const std::uint64_t h = (size - 1) / static_cast<std::uint64_t>(q);
  out.k = h * static_cast<std::uint64_t>(-p0);
  return out;
}

KappaShift shift_for_kappa(const Substitution& s, const Rational& target) {
  return shift_for_kappa(s.length(), target);
}

Analysis analyze(const Substitution& s, const AnalyzeOptions& options) {
  Analysis a;
  a.input = s;
  auto attempt = [&](const char* section, auto&& body) {
    try {
      body();
    } catch (const InputError& e) {
      a.notes.emplace_back(section, e.what());
    }
  };
  a.primitive = is_primitive(s);
  a.fix_power = fix_power(s);
  if (a.primitive) {
    attempt("aperiodicity", [&] { a.aperiodic = is_aperiodic(s); });
    attempt("height", [&] {
      a.height = height(a.fix_power > 1 ? power(s, a.fix_power) : s);
    });
  } else {
    a.notes.emplace_back("aperiodicity", "not primitive");
  }

  const TransformationSemigroup sg = generate(s);
  a.semigroup_size = sg.size();
  a.green = green(sg);
  a.j = j_depth(sg, *a.green);
  a.minimal_sets = minimal_sets(*a.green);
  a.outer = canonical_outer_encoding(s, *a.green);
  a.pairs = pair_aperiodicity(s, sg);
  a.bijective_columns = true;
  for (std::size_t m = 0; m < s.length(); ++m) {
    if (!Transformation(s.column(m)).is_bijective()) a.bijective_columns = false;
  }
  if (*a.bijective_columns) a.r_set = r_set(s);

  if (a.primitive && a.aperiodic.value_or(false)) {
    attempt("aa", [&] { a.aa = decide_aa_factor(s); });
  } else {
    a.notes.emplace_back("aa", "requires a primitive aperiodic substitution");
  }
  a.bijective_inner = decide_bijective_inner(s);
  attempt("bijective", [&] {
    SweepOptions so;
    so.max_n = options.sweep_max_n;
    so.jobs = options.jobs;
    a.bijective_general = decide_bijective_general(s, so);
  });
  return a;
}

}  // namespace substfactor
