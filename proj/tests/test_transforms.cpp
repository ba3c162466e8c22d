#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "substfactor/error.hpp"
#include "substfactor/io.hpp"
#include "substfactor/transforms.hpp"
#include "support.hpp"

using namespace substfactor;

namespace {

const Substitution thue = oracle::sub("a->abba\nb->baab\n");
const Substitution d4 = oracle::sub("a->abadcba\nb->badcbab\nc->cdcbadc\nd->dcbadcd\n");

// The (l+1+r)-window around position m of θ applied to the base word w.
Word window_oracle(const Substitution& s, const Word& w, std::size_t l, std::size_t r,
                   std::size_t m) {
  const Word t = oracle::image_of(s, w);
  const std::size_t start = s.length() * l + m - l;
  return Word(t.begin() + start, t.begin() + start + l + 1 + r);
}

}  // namespace

TEST_CASE("power matches repeated expansion") {
  const Substitution p = power(thue, 2);
  CHECK(p.length() == 16);
  CHECK(format_word(p.alphabet(), p.image(0)) == "abbabaabbaababba");
  for (const auto& [name, s] : oracle::fixture_corpus()) {
    CAPTURE(name);
    const Substitution q = power(s, 2);
    for (Letter a = 0; a < s.size(); ++a) CHECK(q.image(a) == oracle::expand(s, Word{a}, 2));
  }
  CHECK_THROWS_AS(power(thue, 0), InputError);
  CHECK_THROWS_AS(power(thue, 40), ResourceError);
}

TEST_CASE("collar of Thue-Morse") {
  const DerivedSubstitution c = collar(thue, {0, 1});
  CHECK(c.substitution.size() == 4);
  CHECK(c.substitution.alphabet().names() ==
        std::vector<std::string>{"[aa]", "[ab]", "[ba]", "[bb]"});
  CHECK(equivalent_up_to_renaming(c.substitution, oracle::sub("o->oēōo\nō->ōeoō\ne->oēōe\nē->ōeoē\n")));
  const DerivedSubstitution same = collar(thue, {0, 0});
  CHECK(same.substitution.alphabet().names() == thue.alphabet().names());
}

TEST_CASE("collar letters are allowed words and project onto the base") {
  for (const auto& [name, s] : oracle::fixture_corpus()) {
    if (s.size() > 12) continue;
    CAPTURE(name);
    for (CollarSpec spec : {CollarSpec{0, 1}, CollarSpec{1, 0}, CollarSpec{1, 1}}) {
      const DerivedSubstitution c = collar(s, spec);
      const std::size_t width = spec.l + 1 + spec.r;
      CHECK(c.substitution.size() == oracle::factors(s, width, 20000).size());
      CHECK(c.substitution.length() == s.length());
      for (Letter x = 0; x < c.substitution.size(); ++x) {
        const Word& w = c.letters.words[x];
        REQUIRE(w.size() == width);
        CHECK(c.letters.iota[x] == w[spec.l]);
        for (std::size_t m = 0; m < s.length(); ++m) {
          const Letter y = c.substitution.at(x, m);
          CHECK(c.letters.words[y] == window_oracle(s, w, spec.l, spec.r, m));
          // ι intertwines the collared and base columns.
          CHECK(c.letters.iota[y] == s.at(c.letters.iota[x], m));
        }
      }
    }
  }
}

TEST_CASE("shifted extensions") {
  CHECK_THROWS_AS(shift_ext(thue, 4), InputError);
  const DerivedSubstitution z = shift_ext(thue, 0);
  CHECK(z.substitution == collar(thue, {0, 1}).substitution);
  for (const auto& [name, s] : oracle::fixture_corpus()) {
    if (s.size() > 12) continue;
    CAPTURE(name);
    for (std::size_t k = 0; k < s.length(); ++k) {
      const DerivedSubstitution e = shift_ext(s, k);
      for (Letter x = 0; x < e.substitution.size(); ++x) {
        const Word t = oracle::image_of(s, e.letters.words[x]);
        for (std::size_t m = 0; m < s.length(); ++m) {
          CHECK(e.letters.words[e.substitution.at(x, m)] == Word(t.begin() + m + k, t.begin() + m + k + 2));
        }
      }
      // Same language complexity on 2-blocks as the (0,1) collar.
      CHECK(allowed_words(e.substitution, 2).size() ==
            allowed_words(collar(s, {0, 1}).substitution, 2).size());
    }
  }
}

TEST_CASE("injectivize merges letters with equal images") {
  const Substitution s = oracle::sub("a->ab\nb->ab\nc->ca\n");
  const InnerEncoding e = injectivize(s);
  CHECK(e.quotient.size() == 2);
  CHECK(e.code[0] == e.code[1]);
  CHECK(injectivize(thue).quotient.size() == 2);
}

TEST_CASE("height") {
  CHECK(height(thue).h == 1);
  CHECK(height(d4).h == 2);
  CHECK(height(oracle::sub("a->aba\nb->bac\nc->cab\n")).h == 2);
  CHECK_THROWS_AS(height(oracle::sub("a->ba\nb->ab\n")), PreconditionError);
  for (const auto& [name, s] : oracle::fixture_corpus()) {
    if (s.at(0, 0) != 0) continue;
    CAPTURE(name);
    const HeightInfo h = height(s);
    CHECK(std::gcd<std::uint64_t, std::uint64_t>(h.h, s.length()) == 1);
    CHECK(h.g % h.h == 0);
  }
}

TEST_CASE("pure base of the dihedral example") {
  const PureBase pb = pure_base(d4, height(d4));
  CHECK(pb.substitution.size() == 4);
  CHECK(pb.substitution.length() == 7);
  CHECK(equivalent_up_to_renaming(
      pb.substitution,
      oracle::sub("0->3010102\n1->2101013\n2->2102102\n3->3013013\n")));
  const PureBase same = pure_base(thue, height(thue));
  CHECK(same.substitution == thue);
}

TEST_CASE("suspension") {
  const Substitution eta = oracle::sub("A->BAAAAAB\nB->BAABAAB\n");
  const Substitution split = suspend_split(eta, 2);
  CHECK(equivalent_up_to_renaming(
      split, oracle::sub("A->BbAaAaA\nB->BbAaAaB\na->aAaAaBb\nb->bAaAaBb\n")));
  CHECK(suspend_split(eta, 1) == eta);
  const Substitution powered = power(split, fix_power(split));
  HeightInfo h = height(powered);
  CHECK(h.h == 2);
  // Blocks line up with the split only from a first-phase seed.
  h.seed = powered.alphabet().index("B_1");
  REQUIRE(powered.at(h.seed, 0) == h.seed);
  const PureBase back = pure_base(powered, h);
  CHECK(equivalent_up_to_renaming(back.substitution, power(eta, fix_power(split))));
}
