#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "substfactor/deciders.hpp"
#include "substfactor/error.hpp"
#include "substfactor/io.hpp"
#include "support.hpp"

using namespace substfactor;

namespace {

const Substitution thue = oracle::sub("a->abba\nb->baab\n");
const Substitution d4 = oracle::sub("a->abadcba\nb->badcbab\nc->cdcbadc\nd->dcbadcd\n");
const Substitution qb = oracle::sub("a->abf\nb->aef\nc->abf\nd->dec\ne->dbc\nf->dec\n");

// Applies the local rule along a long word of the input shift and checks
// that every short factor of the image is allowed in the target.
void check_local_rule(const Substitution& source, const LocalRule& rule,
                      const Substitution& target) {
  std::map<Word, Letter> table(rule.table.begin(), rule.table.end());
  const Word u = oracle::long_images(source, 6000).front();
  Word image;
  const std::size_t width = 2 * rule.radius + 1;
  for (std::size_t i = 0; i + width <= u.size(); ++i) {
    auto it = table.find(Word(u.begin() + i, u.begin() + i + width));
    REQUIRE(it != table.end());
    image.push_back(it->second);
  }
  for (std::size_t k = 1; k <= 8; ++k) {
    const auto allowed = oracle::factors(target, k, 20000);
    for (std::size_t i = 0; i + k <= image.size(); i += 7) {
      CHECK(allowed.count(Word(image.begin() + i, image.begin() + i + k)) == 1);
    }
  }
}

}  // namespace

TEST_CASE("almost automorphic factors") {
  const AAVerdict v = decide_aa_factor(thue);
  CHECK(v.answer == Answer::yes);
  CHECK(v.stages.size() == 3);
  CHECK(v.decisive().spec.l == 1);
  REQUIRE(v.witness());
  CHECK(intertwines(v.witness()->encoding));

  const AAVerdict seven = decide_aa_factor(oracle::sub(
      "a->acaef\nb->bdbde\nc->ceccg\nd->dfbde\ne->egaef\nf->dfbfg\ng->cecge\n"));
  CHECK(seven.answer == Answer::no);
  CHECK_FALSE(seven.witness());
  CHECK(seven.decisive().collared.substitution.size() == 51);

  CHECK_THROWS_AS(decide_aa_factor(oracle::sub("a->ab\nb->ab\n")), PreconditionError);
  CHECK_THROWS_AS(decide_aa_factor(oracle::sub("a->ab\nb->bb\n")), PreconditionError);

  AAOptions decisive_only;
  decisive_only.cheap_certificates = false;
  CHECK(decide_aa_factor(thue, decisive_only).stages.size() == 1);
}

TEST_CASE("witness with an unpowered form") {
  const Substitution aacc = oracle::sub("a->abcc\nb->badd\nc->cacd\nd->dbdc\n");
  const AAVerdict v = decide_aa_factor(aacc);
  REQUIRE(v.answer == Answer::yes);
  CHECK(v.fix_power == 2);
  REQUIRE(v.unpowered_witness);
  CHECK(intertwines(*v.unpowered_witness));
  CHECK(equivalent_up_to_renaming(power(v.unpowered_witness->quotient, 2), v.witness()->encoding.quotient));
  CHECK(equivalent_up_to_renaming(v.unpowered_witness->quotient, oracle::sub("A->AACC\nC->CACC\n")));
}

TEST_CASE("local rules land in the witness shift") {
  const AAVerdict v = decide_aa_factor(d4);
  REQUIRE(v.answer == Answer::yes);
  REQUIRE(v.suspended);
  REQUIRE(v.local_rule);
  CHECK(v.local_rule->radius == 1);
  CHECK(v.local_rule->table.size() == 8);
  check_local_rule(d4, *v.local_rule, *v.suspended);

  for (const auto& [name, s] : oracle::fixture_corpus()) {
    if (s.size() > 7 || name == "ex-d4") continue;
    if (!is_aperiodic(s)) continue;
    CAPTURE(name);
    const AAVerdict w = decide_aa_factor(s);
    if (w.answer != Answer::yes || !w.local_rule) continue;
    const Substitution& target = w.suspended ? *w.suspended : w.witness()->encoding.quotient;
    check_local_rule(w.powered, *w.local_rule, target);
  }
}

TEST_CASE("bijective inner decisions") {
  const Substitution e021 = oracle::sub("0->021\n1->130\n2->201\n3->310\n");
  const BijectiveVerdict v = decide_bijective_inner(e021);
  REQUIRE(v.answer == Answer::yes);
  CHECK(v.witness->partition.to_string(e021.alphabet()) == "{{0,2},{1,3}}");
  CHECK(equivalent_up_to_renaming(v.witness->encoding.quotient, oracle::sub("a->aab\nb->bba\n")));
  for (std::size_t m = 0; m < 3; ++m) {
    CHECK(Transformation(v.witness->encoding.quotient.column(m)).is_bijective());
  }
  const BijectiveVerdict p = decide_bijective_inner(oracle::sub("o->oeoo\ne->oeoe\n"));
  CHECK(p.answer == Answer::no);
  CHECK(p.column_number == 1);
  const BijectiveVerdict q = decide_bijective_inner(qb);
  CHECK(q.answer == Answer::no);
  CHECK(q.kernel_partitions.size() == 2);
}

TEST_CASE("inner decision is stable under powers") {
  for (const auto& [name, s] : oracle::fixture_corpus()) {
    if (s.size() > 12) continue;
    CAPTURE(name);
    const Answer a = decide_bijective_inner(s).answer;
    std::uint64_t len = s.length();
    for (std::size_t n = 2; n <= 3; ++n) {
      len *= s.length();
      if (len > 400) break;
      CHECK(decide_bijective_inner(power(s, n)).answer == a);
    }
  }
}

TEST_CASE("bijective sweeps") {
  SweepOptions opts;
  opts.jobs = 4;
  const BijectiveVerdict v = decide_bijective_general(qb, opts);
  CHECK(v.answer == Answer::no);
  CHECK(v.j == 1);
  CHECK(v.bound_n == 3);
  CHECK(v.sweep.size() == 3 + 9 + 27);
  for (const SweepEntry& e : v.sweep) {
    CHECK(e.minimal_left_ideals() >= 2);
    CHECK(e.minimal_left_ideals() <= 4);
  }

  SweepOptions capped;
  capped.max_n = 1;
  const BijectiveVerdict c = decide_bijective_general(qb, capped);
  CHECK(c.answer == Answer::inconclusive);
  CHECK(c.max_n_used == 1);

  // Sequential and threaded sweeps agree.
  SweepOptions one;
  one.jobs = 1;
  const BijectiveVerdict seq = decide_bijective_general(qb, one);
  REQUIRE(seq.sweep.size() == v.sweep.size());
  for (std::size_t i = 0; i < seq.sweep.size(); ++i) {
    CHECK(seq.sweep[i].kernel_partitions == v.sweep[i].kernel_partitions);
  }

  const BijectiveVerdict tmv = decide_bijective_general(thue);
  CHECK(tmv.answer == Answer::yes);
  REQUIRE(tmv.witness);
  CHECK(intertwines(tmv.witness->encoding));

  CHECK_THROWS_AS(decide_bijective_general(d4), PreconditionError);
  CHECK_THROWS_AS(decide_bijective_general(oracle::sub("o->oeoo\ne->oeoe\n")), PreconditionError);
}

TEST_CASE("sweep witnesses are bijective and intertwine") {
  for (const Substitution& s : oracle::random_corpus(40, 23)) {
    if (!is_aperiodic(s) || s.at(0, 0) != 0) continue;
    if (height(s).h != 1 || naive_column_number(generate(s)) < 2) continue;
    SweepOptions opts;
    opts.max_n = 1;
    const BijectiveVerdict v = decide_bijective_general(s, opts);
    CHECK(v.answer != Answer::no);
    if (v.answer != Answer::yes) continue;
    REQUIRE(v.witness);
    CHECK(intertwines(v.witness->encoding));
    for (std::size_t m = 0; m < v.witness->encoding.quotient.length(); ++m) {
      CHECK(Transformation(v.witness->encoding.quotient.column(m)).is_bijective());
    }
  }
}

TEST_CASE("kappa values") {
  CHECK(kappa_of_shift(5, 1, 3) == Rational(-3, 4));
  CHECK(kappa_of_shift(5, 1, 1) == Rational(-1, 4));
  CHECK(kappa_of_shift(2, 3, 0) == Rational(0));
  for (std::uint64_t ell : {2u, 3u, 5u}) {
    for (std::int64_t num = -7; num <= 7; ++num) {
      for (std::int64_t den : {1, 3, 7, 9}) {
        const Rational target(num, den);
        if (std::gcd<std::uint64_t, std::uint64_t>(static_cast<std::uint64_t>(target.den()), ell) != 1) {
          CHECK_THROWS_AS(shift_for_kappa(ell, target), InputError);
          continue;
        }
        const KappaShift ks = shift_for_kappa(ell, target);
        CHECK(kappa_of_shift(ell, ks.n, ks.k) + Rational(ks.M) == target);
      }
    }
  }
}

TEST_CASE("analyze collects every section") {
  const Analysis a = analyze(thue);
  CHECK(a.primitive);
  CHECK(a.aperiodic.value_or(false));
  REQUIRE(a.aa);
  CHECK(a.aa->answer == Answer::yes);
  REQUIRE(a.bijective_inner);
  CHECK(a.bijective_inner->answer == Answer::yes);
  const Analysis b = analyze(oracle::sub("a->ab\nb->bb\n"));
  CHECK_FALSE(b.primitive);
  CHECK_FALSE(b.notes.empty());
  const Analysis d = analyze(d4);
  CHECK_FALSE(d.bijective_general);
  bool scope_note = false;
  for (const auto& [section, message] : d.notes) {
    if (message.find("out of theorem scope") != std::string::npos) scope_note = true;
  }
  CHECK(scope_note);
}
