#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "substfactor/encodings.hpp"
#include "substfactor/error.hpp"
#include "substfactor/io.hpp"
#include "substfactor/transforms.hpp"
#include "support.hpp"

using namespace substfactor;

namespace {

const Substitution thue = oracle::sub("a->abba\nb->baab\n");
const Substitution aacc = oracle::sub("a->abcc\nb->badd\nc->cacd\nd->dbdc\n");
const Substitution sevenl = oracle::sub(
    "a->acaef\nb->bdbde\nc->ceccg\nd->dfbde\ne->egaef\nf->dfbfg\ng->cecge\n");
const Substitution aba = oracle::sub("a->aba\nb->bac\nc->cab\n");

std::string sets_text(const MinimalSets& ms, const Alphabet& al) {
  std::string out;
  for (const auto& set : ms.sets) {
    if (!out.empty()) out += "|";
    for (Letter a : set) out += al.name(a);
  }
  return out;
}

// a ~ b iff τ(f(a)) = τ(f(b)) for every f in S ∪ {id}.
Partition code_oracle(const Substitution& s, const std::vector<Letter>& tau) {
  auto all = oracle::closure(oracle::columns(s));
  oracle::Map id(s.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<std::uint8_t>(i);
  all.insert(id);
  std::vector<std::vector<Letter>> labels(s.size());
  for (const auto& f : all) {
    for (Letter a = 0; a < s.size(); ++a) labels[a].push_back(tau[f[a]]);
  }
  return Partition::from_labels(labels);
}

}  // namespace

TEST_CASE("inner encoding by a partition") {
  const Substitution e021 = oracle::sub("0->021\n1->130\n2->201\n3->310\n");
  const InnerEncoding e = inner_encoding_from_partition(e021, parse_partition(e021.alphabet(), "02|13"));
  CHECK(intertwines(e));
  CHECK(e.quotient.alphabet().names() == std::vector<std::string>{"{0,2}", "{1,3}"});
  CHECK(equivalent_up_to_renaming(e.quotient, oracle::sub("a->aab\nb->bba\n")));
  CHECK_THROWS_AS(inner_encoding_from_partition(e021, parse_partition(e021.alphabet(), "03|12")),
                  InputError);
  const InnerEncoding id = inner_encoding_from_partition(thue, Partition::discrete(2));
  CHECK(id.quotient == thue);
}

TEST_CASE("inner encoding by a code matches the S ∪ {id} oracle") {
  const Substitution hb =
      oracle::sub("a->adc\nā->ādc\nb->bea\nc->cfb\nd->dāe\ne->ebf\nf->fcd\n");
  const CodeEncoding ce = inner_encoding_from_code(hb, {0, 0, 1, 2, 3, 4, 5});
  CHECK(ce.encoding.quotient.size() == 6);
  CHECK(ce.encoding.partition() == code_oracle(hb, {0, 0, 1, 2, 3, 4, 5}));
  const Substitution theta =
      oracle::sub("0->35203\n1->35214\n2->41520\n3->41534\n4->02140\n5->02153\n");
  const std::vector<Letter> tau{0, 0, 1, 1, 2, 2};
  const CodeEncoding ct = inner_encoding_from_code(theta, tau);
  CHECK(ct.encoding.partition() == code_oracle(theta, tau));
  CHECK(intertwines(ct.encoding));
  const Partition blocks = ct.encoding.partition();
  for (std::size_t q = 0; q < ct.residual.size(); ++q) {
    for (Letter a : blocks.block(q)) CHECK(tau[a] == ct.residual[q]);
  }
  for (const Substitution& s : oracle::random_corpus(60, 11)) {
    std::vector<Letter> t(s.size());
    for (Letter a = 0; a < s.size(); ++a) t[a] = a % 2;
    CHECK(inner_encoding_from_code(s, t).encoding.partition() == code_oracle(s, t));
  }
  CHECK_THROWS_AS(inner_encoding_from_code(thue, {0}), InputError);
}

TEST_CASE("minimal sets") {
  const MinimalSets ms = minimal_sets(aacc);
  CHECK(sets_text(ms, aacc.alphabet()) == "ab|cd");
  CHECK(ms.is_partition);
  const MinimalSets m7 = minimal_sets(sevenl);
  CHECK(sets_text(m7, sevenl.alphabet()) == "abc|cde|efg");
  CHECK_FALSE(m7.is_partition);
  CHECK(m7.coincidence_blocks.size() == 1);
  const MinimalSets ma = minimal_sets(aba);
  CHECK(sets_text(ma, aba.alphabet()) == "ab|ac");
  CHECK_FALSE(ma.is_partition);
  CHECK(canonical_is_inner(aacc));
  CHECK_FALSE(canonical_is_inner(aba));
}

TEST_CASE("associated encoding has column number one and is maximal") {
  for (const auto& [name, s] : oracle::fixture_corpus()) {
    if (s.size() > 12) continue;
    CAPTURE(name);
    const MinimalSets ms = minimal_sets(s);
    if (!ms.covers_alphabet) continue;
    const InnerEncoding e = associated_inner_encoding(s, ms);
    CHECK(intertwines(e));
    CHECK(naive_column_number(generate(e.quotient)) == 1);
    // Every compatible partition with a column-number-1 quotient is coarser.
    if (s.size() <= 7) {
      const std::size_t n = s.size();
      std::vector<Letter> labels(n, 0);
      // Every set partition, as a restricted growth string.
      auto next = [&] {
        for (std::size_t i = n; i-- > 1;) {
          if (labels[i] <= *std::max_element(labels.begin(), labels.begin() + i)) {
            ++labels[i];
            std::fill(labels.begin() + i + 1, labels.end(), Letter{0});
            return true;
          }
        }
        return false;
      };
      do {
        const Partition p = Partition::from_labels(labels);
        try {
          const InnerEncoding q = inner_encoding_from_partition(s, p);
          if (naive_column_number(generate(q.quotient)) == 1) CHECK(e.partition().refines(p));
        } catch (const InputError&) {
        }
      } while (next());
    }
  }
}

TEST_CASE("canonical outer encodings") {
  const Substitution c = collar(thue, {0, 1}).substitution;
  const OuterEncoding o = canonical_outer_encoding(c);
  CHECK(o.classes.size() == 2);
  CHECK(equivalent_up_to_renaming(o.quotient, oracle::sub("o->oeoo\ne->oeoe\n")));
  const OuterEncoding oa = canonical_outer_encoding(aba);
  CHECK(equivalent_up_to_renaming(oa.quotient, oracle::sub("b->bbc\nc->cbb\n")));
  const OuterEncoding o7 = canonical_outer_encoding(sevenl);
  CHECK(equivalent_up_to_renaming(o7.quotient, oracle::sub("A->ABABC\nB->BCABC\nC->BCACC\n")));
  for (const auto& [name, s] : oracle::fixture_corpus()) {
    if (s.size() > 12) continue;
    CAPTURE(name);
    const OuterEncoding out = canonical_outer_encoding(s);
    CHECK(is_primitive(out.quotient));
    CHECK(naive_column_number(generate(out.quotient)) == 1);
  }
}

TEST_CASE("R-sets of bijective substitutions") {
  const RSet r = r_set(thue);
  CHECK(r.maps.size() == 2);
  CHECK(r.allowed_two_words == 4);
  CHECK(r.counting_ok);
  const RSet r5 = r_set(oracle::sub("a->abcca\nb->babab\nc->ccabc\n"));
  CHECK(r5.allowed_two_words == 5);
  CHECK_FALSE(r5.counting_ok);
  const RSet r7 = r_set(oracle::sub("a->abacaaa\nb->babbbcb\nc->cccacbc\n"));
  CHECK(r7.maps.size() == 3);
  CHECK(r7.disjoint);
  CHECK(r7.counting_ok);
  CHECK_THROWS_AS(r_set(aacc), PreconditionError);
}
