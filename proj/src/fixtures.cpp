#include "substfactor/fixtures.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "substfactor/deciders.hpp"
#include "substfactor/detail/utf8.hpp"
#include "substfactor/encodings.hpp"
#include "substfactor/error.hpp"
#include "substfactor/io.hpp"
#include "substfactor/semigroup.hpp"
#include "substfactor/transforms.hpp"

namespace substfactor {

namespace {

const std::map<std::string_view, std::string_view>& summaries() {
  static const std::map<std::string_view, std::string_view> table = {
      {"tm", "Thue-Morse, a->abba"},
      {"tm-collared", "Thue-Morse (0,1)-collared: o=ab, ō=ba, e=aa, ē=bb"},
      {"period-doubling", "period doubling squared, o->oeoo"},
      {"ex-aacc", "minimal sets form a partition; almost automorphic factor AACC/CACC"},
      {"ex-7l", "three overlapping minimal sets; no almost automorphic factor"},
      {"ex-7l-collared", "the (-1,1)-collared 7-letter example, 51 letters"},
      {"ex-abcca", "bijective, five 2-words; no almost automorphic factor"},
      {"ex-abacaaa", "bijective; inner encoding AABBCCA/AABBCCB/AABBCCC"},
      {"ex-abc", "cyclic; at power 3, a three-letter inner encoding on neighbour differences"},
      {"ex-aba", "height 2; minimal sets {a,b},{a,c} are not a partition"},
      {"ex-d4", "dihedral group, height 2; pure base, suspension and local rule"},
      {"ex-021", "unique minimal left ideal; bijective factor a->aab, b->bba"},
      {"ex-kappa-eta", "bijective substitution whose 1-shifted extension is ex-kappa-theta"},
      {"ex-kappa-theta", "two minimal left ideals; factors with kappa-value -1/4"},
      {"ex-kappa-zeta", "3-shifted extension of ex-kappa-theta; unique minimal left ideal"},
      {"ex-qb", "quasi-bijective; exhaustive sweep finds no bijective factor"},
      {"ex-hb", "height 2 with a bijective factor; its pure base has none"},
  };
  return table;
}

Substitution parse(std::string_view text) { return parse_substitution(text); }

// Empty string on success, else what went wrong.
using Check = std::function<std::string()>;

std::string expect_renaming(const Substitution& got, std::string_view expected_text,
                            const char* what) {
  const Substitution expected = parse(expected_text);
  if (equivalent_up_to_renaming(got, expected)) return "";
  return std::string(what) + " is not equivalent to the expected substitution:\n" +
         serialize(got);
}

std::string expect_equal(std::size_t got, std::size_t want, const char* what) {
  if (got == want) return "";
  return std::string(what) + " = " + std::to_string(got) + ", expected " + std::to_string(want);
}

std::string expect(bool ok, const std::string& what) { return ok ? "" : what; }

std::string expect_partition(const Partition& got, const Alphabet& alphabet,
                             std::string_view spec, const char* what) {
  const Partition want = parse_partition(alphabet, spec);
  if (got == want) return "";
  return std::string(what) + " = " + got.to_string(alphabet) + ", expected " +
         want.to_string(alphabet);
}

std::vector<std::vector<Letter>> parse_sets(const Alphabet& alphabet, std::string_view spec) {
  std::vector<std::vector<Letter>> out;
  std::stringstream in{std::string(spec)};
  std::string part;
  while (std::getline(in, part, '|')) {
    std::vector<Letter> set;
    for (const std::string& name : detail::utf8_split(part)) set.push_back(alphabet.index(name));
    std::sort(set.begin(), set.end());
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Equality of a shifted extension with a target under an explicit coding of
// 2-words by target letters.
std::string expect_coded(const DerivedSubstitution& d, const Substitution& target,
                         const std::vector<std::pair<std::string, std::string>>& coding,
                         const Alphabet& base) {
  std::vector<Letter> phi(d.substitution.size(), 0);
  if (coding.size() != d.substitution.size()) return "coding does not cover the 2-words";
  for (const auto& [word, letter] : coding) {
    const Word w = parse_word(base, word);
    const auto it = std::find(d.letters.words.begin(), d.letters.words.end(), w);
    if (it == d.letters.words.end()) return "2-word " + word + " is not allowed";
    phi[static_cast<std::size_t>(it - d.letters.words.begin())] = target.alphabet().index(letter);
  }
  for (Letter a = 0; a < d.substitution.size(); ++a) {
    Word mapped;
    for (Letter b : d.substitution.image(a)) mapped.push_back(phi[b]);
    if (mapped != target.image(phi[a])) {
      return "image of " + d.substitution.alphabet().name(a) + " does not match under the coding";
    }
  }
  return "";
}

std::map<std::string, std::vector<std::pair<std::string, Check>>> build_checks() {
  std::map<std::string, std::vector<std::pair<std::string, Check>>> c;
  auto sub = [](const char* name) { return fixture(name).substitution(); };

  c["tm"] = {
      {"semigroup Z/2", [=] {
         const Substitution s = sub("tm");
         const auto sg = generate(s);
         return expect_equal(sg.size(), 2, "|S|") + expect_equal(green(sg).rank, 2, "c");
       }},
      {"aa yes", [=] {
         return expect(decide_aa_factor(sub("tm")).answer == Answer::yes, "aa answer is not yes");
       }},
      {"bijective inner yes", [=] {
         return expect(decide_bijective_inner(sub("tm")).answer == Answer::yes,
                       "inner answer is not yes");
       }},
  };
  c["tm-collared"] = {
      {"is collar(tm,(0,1))", [=] {
         return expect(equivalent_up_to_renaming(sub("tm-collared"),
                                                 collar(sub("tm"), {0, 1}).substitution)
                           .has_value(),
                       "not a renaming of collar(tm,(0,1))");
       }},
      {"kernel LZ2 x Z/2", [=] {
         const GreenData g = green(generate(sub("tm-collared")));
         return expect_equal(g.kernel.size(), 4, "kernel") +
                expect_equal(g.r_classes.size(), 2, "R-classes") +
                expect_equal(g.l_classes.size(), 1, "L-classes") +
                expect_equal(g.group_order, 2, "group order");
       }},
      {"outer encoding is period doubling", [=] {
         return expect_renaming(canonical_outer_encoding(sub("tm-collared")).quotient,
                                fixture("period-doubling").text, "canonical outer encoding");
       }},
  };
  c["period-doubling"] = {
      {"column number 1", [=] {
         return expect_equal(naive_column_number(generate(sub("period-doubling"))), 1, "c");
       }},
      {"aa yes", [=] {
         return expect(decide_aa_factor(sub("period-doubling")).answer == Answer::yes,
                       "aa answer is not yes");
       }},
  };
  c["ex-aacc"] = {
      {"minimal sets {a,b},{c,d}", [=] {
         const Substitution s = sub("ex-aacc");
         const MinimalSets ms = minimal_sets(s);
         return expect(ms.sets == parse_sets(s.alphabet(), "ab|cd") && ms.is_partition,
                       "minimal sets differ");
       }},
      {"aa witness AACC/CACC", [=] {
         const AAVerdict v = decide_aa_factor(sub("ex-aacc"));
         if (v.answer != Answer::yes) return std::string("aa answer is not yes");
         const Substitution& w = v.unpowered_witness ? v.unpowered_witness->quotient
                                                     : v.witness()->encoding.quotient;
         return expect_renaming(w, "A->AACC\nC->CACC\n", "witness");
       }},
  };
  c["ex-7l"] = {
      {"minimal sets abc, cde, efg", [=] {
         const Substitution s = sub("ex-7l");
         const MinimalSets ms = minimal_sets(s);
         return expect(ms.sets == parse_sets(s.alphabet(), "abc|cde|efg"), "minimal sets differ") +
                expect_equal(ms.coincidence_blocks.size(), 1, "coincidence blocks");
       }},
      {"outer encoding", [=] {
         return expect_renaming(canonical_outer_encoding(sub("ex-7l")).quotient,
                                "A->ABABC\nB->BCABC\nC->BCACC\n", "canonical outer encoding");
       }},
      {"associated encoding D->DDDDD", [=] {
         const InnerEncoding e = associated_inner_encoding(sub("ex-7l"));
         return expect_renaming(e.quotient, "D->DDDDD\n", "associated encoding") +
                expect(!is_aperiodic(e.quotient), "associated encoding is aperiodic");
       }},
      {"aa no", [=] {
         return expect(decide_aa_factor(sub("ex-7l")).answer == Answer::no, "aa answer is not no");
       }},
  };
  c["ex-7l-collared"] = {
      {"is collar(ex-7l,(1,1))", [=] {
         const DerivedSubstitution d = collar(sub("ex-7l"), {1, 1});
         return expect_equal(d.substitution.size(), 51, "letters") +
                expect(equivalent_up_to_renaming(d.substitution, sub("ex-7l-collared")).has_value(),
                       "not a renaming of collar(ex-7l,(1,1))");
       }},
      {"coincidence partition alpha, beta, gamma", [=] {
         const Substitution s = sub("ex-7l-collared");
         const InnerEncoding e = associated_inner_encoding(s);
         return expect_partition(e.partition(), s.alphabet(),
                                 "134689ACDENOPQRZabcdjklmn|5BGHIJKLMTUVWXYefghio|027FS",
                                 "coincidence partition") +
                expect_renaming(e.quotient, "a->bgbaa\nb->bgbaa\ng->bgbaa\n",
                                "associated encoding") +
                expect(!is_aperiodic(e.quotient), "associated encoding is aperiodic");
       }},
  };
  c["ex-abcca"] = {
      {"five 2-words, counting fails", [=] {
         const RSet r = r_set(sub("ex-abcca"));
         return expect_equal(r.allowed_two_words, 5, "allowed 2-words") +
                expect(!r.counting_ok, "counting condition holds");
       }},
      {"aa no", [=] {
         return expect(decide_aa_factor(sub("ex-abcca")).answer == Answer::no,
                       "aa answer is not no");
       }},
  };
  c["ex-abacaaa"] = {
      {"aa witness AABBCCA/AABBCCB/AABBCCC", [=] {
         const AAVerdict v = decide_aa_factor(sub("ex-abacaaa"));
         if (v.answer != Answer::yes) return std::string("aa answer is not yes");
         return expect_renaming(v.witness()->encoding.quotient,
                                "A->AABBCCA\nB->AABBCCB\nC->AABBCCC\n", "witness");
       }},
  };
  c["ex-abc"] = {
      {"fix power 3", [=] { return expect_equal(fix_power(sub("ex-abc")), 3, "fix_power"); }},
      {"aa witness on neighbour differences", [=] {
         const AAVerdict v = decide_aa_factor(sub("ex-abc"));
         if (v.answer != Answer::yes) return std::string("aa answer is not yes");
         // Letters are the differences of neighbouring letters mod 3.
         return expect_renaming(v.witness()->encoding.quotient,
                                "O->AABAABAAOAABAABAAOAABAABAAO\n"
                                "A->AABAABAAOAABAABAAOAABAABAAA\n"
                                "B->AABAABAAOAABAABAAOAABAABAAB\n",
                                "witness");
       }},
  };
  c["ex-aba"] = {
      {"height 2", [=] {
         const Substitution s = sub("ex-aba");
         return expect_equal(height(power(s, fix_power(s))).h, 2, "h");
       }},
      {"kernel 2 x 2 x 1", [=] {
         const GreenData g = green(generate(sub("ex-aba")));
         return expect_equal(g.r_classes.size(), 2, "R-classes") +
                expect_equal(g.group_order, 2, "group order") +
                expect_equal(g.l_classes.size(), 1, "L-classes");
       }},
      {"minimal sets {a,b},{a,c}", [=] {
         const Substitution s = sub("ex-aba");
         const MinimalSets ms = minimal_sets(s);
         return expect(ms.sets == parse_sets(s.alphabet(), "ab|ac") && !ms.is_partition,
                       "minimal sets differ");
       }},
      {"outer encoding b->bbc, c->cbb", [=] {
         return expect_renaming(canonical_outer_encoding(sub("ex-aba")).quotient,
                                "b->bbc\nc->cbb\n", "canonical outer encoding");
       }},
  };
  c["ex-d4"] = {
      {"pure base", [=] {
         const Substitution s = sub("ex-d4");
         const PureBase pb = pure_base(s, height(s));
         return expect_renaming(pb.substitution,
                                "0->3010102\n1->2101013\n2->2102102\n3->3013013\n", "pure base");
       }},
      {"aa witness and suspension", [=] {
         const AAVerdict v = decide_aa_factor(sub("ex-d4"));
         if (v.answer != Answer::yes || !v.suspended) {
           return std::string("aa answer is not yes with a suspension");
         }
         return expect_renaming(v.witness()->encoding.quotient, "A->BAAAAAB\nB->BAABAAB\n",
                                "witness") +
                expect_renaming(*v.suspended, "A->BbAaAaA\nB->BbAaAaB\na->aAaAaBb\nb->bAaAaBb\n",
                                "suspended witness") +
                expect(v.local_rule && v.local_rule->radius == 1 && v.local_rule->table.size() == 8,
                       "no radius-1 local rule with 8 rows");
       }},
  };
  c["ex-021"] = {
      {"bijective inner yes", [=] {
         const Substitution s = sub("ex-021");
         const BijectiveVerdict v = decide_bijective_inner(s);
         if (v.answer != Answer::yes) return std::string("inner answer is not yes");
         return expect_partition(v.witness->partition, s.alphabet(), "02|13", "partition") +
                expect_renaming(v.witness->encoding.quotient, "a->aab\nb->bba\n", "quotient");
       }},
  };
  c["ex-kappa-eta"] = {
      {"1-shifted extension is ex-kappa-theta", [=] {
         const Substitution eta = sub("ex-kappa-eta");
         return expect_coded(shift_ext(eta, 1), sub("ex-kappa-theta"),
                             {{"ab", "0"}, {"ac", "1"}, {"ba", "2"},
                              {"bc", "3"}, {"ca", "4"}, {"cb", "5"}},
                             eta.alphabet());
       }},
      {"kappa -1/4", [=] {
         return expect(kappa_of_shift(5, 1, 1) == Rational(-1, 4), "kappa_of_shift(5,1,1)");
       }},
  };
  c["ex-kappa-theta"] = {
      {"two kernel partitions", [=] {
         const Substitution s = sub("ex-kappa-theta");
         const GreenData g = green(generate(s));
         if (g.l_classes.size() != 2) return expect_equal(g.l_classes.size(), 2, "L-classes");
         std::vector<Partition> got{g.l_classes[0].partition, g.l_classes[1].partition};
         std::vector<Partition> want{parse_partition(s.alphabet(), "01|23|45"),
                                     parse_partition(s.alphabet(), "05|13|24")};
         std::sort(got.begin(), got.end());
         std::sort(want.begin(), want.end());
         return expect(got == want, "kernel partitions differ");
       }},
      {"3-shifted extension is ex-kappa-zeta", [=] {
         const Substitution theta = sub("ex-kappa-theta");
         return expect_coded(shift_ext(theta, 3), sub("ex-kappa-zeta"),
                             {{"02", "A"}, {"03", "B"}, {"14", "C"}, {"15", "D"},
                              {"20", "E"}, {"21", "F"}, {"34", "G"}, {"35", "H"},
                              {"40", "I"}, {"41", "J"}, {"52", "K"}, {"53", "L"}},
                             theta.alphabet());
       }},
      {"kappa -3/4", [=] {
         return expect(kappa_of_shift(5, 1, 3) == Rational(-3, 4), "kappa_of_shift(5,1,3)");
       }},
  };
  c["ex-kappa-zeta"] = {
      {"unique minimal left ideal", [=] {
         return expect(has_unique_minimal_left_ideal(generate(sub("ex-kappa-zeta"))),
                       "more than one minimal left ideal");
       }},
  };
  c["ex-qb"] = {
      {"c = 2, j = 1", [=] {
         const auto sg = generate(sub("ex-qb"));
         return expect_equal(naive_column_number(sg), 2, "c") + expect_equal(j_depth(sg), 1, "j");
       }},
      {"sweep (3,11) has four minimal left ideals", [=] {
         const Substitution s = sub("ex-qb");
         return expect_equal(sweep_entry(power(s, 3), 3, 11).minimal_left_ideals(), 4,
                             "minimal left ideals");
       }},
      {"bijective sweep no", [=] {
         const BijectiveVerdict v = decide_bijective_general(sub("ex-qb"));
         return expect(v.answer == Answer::no, "answer is " + to_string(v.answer)) +
                expect_equal(v.bound_n, 3, "bound on n");
       }},
  };
  c["ex-hb"] = {
      {"bijective inner merges a and ā", [=] {
         const Substitution s = sub("ex-hb");
         const BijectiveVerdict v = decide_bijective_inner(s);
         if (v.answer != Answer::yes) return std::string("inner answer is not yes");
         return expect_partition(v.witness->partition, s.alphabet(), "a,ā", "partition");
       }},
      {"general decision out of scope", [=] {
         try {
           decide_bijective_general(sub("ex-hb"));
         } catch (const PreconditionError&) {
           return std::string();
         }
         return std::string("no precondition error for height 2");
       }},
      {"pure base sweep no", [=] {
         const Substitution s = sub("ex-hb");
         const PureBase pb = pure_base(s, height(s));
         const BijectiveVerdict v = decide_bijective_general(pb.substitution);
         return expect(v.answer == Answer::no, "answer is " + to_string(v.answer));
       }},
  };
  return c;
}

}  // namespace

Substitution Fixture::substitution() const { return parse_substitution(text); }

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> table = [] {
    std::vector<Fixture> out;
    for (const auto& [stem, text] : detail::fixture_files()) {
      const auto it = summaries().find(stem);
      out.push_back({std::string(stem), it == summaries().end() ? "" : std::string(it->second),
                     std::string(text)});
    }
    std::sort(out.begin(), out.end(),
              [](const Fixture& a, const Fixture& b) { return a.name < b.name; });
    return out;
  }();
  return table;
}

const Fixture& fixture(std::string_view name) {
  for (const Fixture& f : fixtures()) {
    if (f.name == name) return f;
  }
  throw InputError("unknown fixture '" + std::string(name) + "'");
}

std::vector<FixtureCheck> run_fixture_checks(const std::vector<std::string>& names,
                                             std::size_t jobs) {
  const auto checks = build_checks();
  std::vector<std::string> selected = names;
  if (selected.empty()) {
    for (const Fixture& f : fixtures()) selected.push_back(f.name);
  }
  std::vector<std::pair<std::string, std::pair<std::string, Check>>> tasks;
  for (const std::string& n : selected) {
    fixture(n);
    const auto it = checks.find(n);
    if (it == checks.end()) continue;
    for (const auto& check : it->second) tasks.emplace_back(n, check);
  }
  std::vector<FixtureCheck> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      const auto& [fixture_name, check] = tasks[i];
      FixtureCheck r{fixture_name, check.first, false, ""};
      try {
        r.detail = check.second();
        r.passed = r.detail.empty();
      } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
      }
      results[i] = std::move(r);
    }
  };
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < std::max<std::size_t>(1, jobs); ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return results;
}

}  // namespace substfactor
