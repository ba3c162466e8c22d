#include "substfactor/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "substfactor/deciders.hpp"
#include "substfactor/encodings.hpp"
#include "substfactor/error.hpp"
#include "substfactor/fixtures.hpp"
#include "substfactor/io.hpp"
#include "substfactor/report.hpp"
#include "substfactor/semigroup.hpp"
#include "substfactor/transforms.hpp"

namespace substfactor::cli {

namespace {

struct Outcome {
  int code = kOk;
  Json result;
  std::string text;
};

// A path, or the stem of a bundled fixture when no such file exists.
Substitution load(const std::string& path) {
  if (std::filesystem::exists(path)) return read_substitution_file(path);
  const std::string stem = std::filesystem::path(path).stem().string();
  for (const Fixture& f : fixtures()) {
    if (f.name == stem) return f.substitution();
  }
  throw InputError("cannot read '" + path + "' and no bundled fixture is named '" + stem + "'");
}

std::string partition_text(const Partition& p, const Alphabet& alphabet) {
  return p.to_string(alphabet);
}

std::string indent(const std::string& text, const std::string& pad = "  ") {
  std::string out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    out += pad + text.substr(start, end - start) + "\n";
    start = end + 1;
  }
  return out;
}

std::string set_text(const std::vector<Letter>& set, const Alphabet& alphabet) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ",";
    out += alphabet.name(set[i]);
  }
  return out + "}";
}

std::string aa_text(const AAVerdict& v, const Alphabet& alphabet) {
  std::ostringstream os;
  os << "answer: " << to_string(v.answer) << "\n";
  os << "fix power: " << v.fix_power << "\n";
  os << "height: " << v.height.h << "\n";
  if (v.height.h > 1) {
    os << "pure base (" << v.pure_base.substitution.size() << " letters):\n"
       << indent(serialize(v.pure_base.substitution));
  }
  for (std::size_t i = 0; i < v.stages.size(); ++i) {
    const AAStage& st = v.stages[i];
    os << "stage (" << st.spec.l << "," << st.spec.r << "): " << st.collared.substitution.size()
       << " letters, associated encoding with " << st.encoding.quotient.size() << " letters, "
       << (st.aperiodic ? "aperiodic" : "periodic") << "\n";
  }
  if (const AAStage* w = v.witness()) {
    os << "witness (" << w->spec.l << "," << w->spec.r << "):\n";
    os << indent(serialize(w->encoding.quotient));
    if (v.unpowered_witness) {
      os << "witness before powering:\n" << indent(serialize(v.unpowered_witness->quotient));
    }
    if (v.suspended) os << "suspended witness:\n" << indent(serialize(*v.suspended));
    if (v.local_rule) {
      const Alphabet& target =
          v.suspended ? v.suspended->alphabet() : w->encoding.quotient.alphabet();
      os << "local rule, radius " << v.local_rule->radius << ":\n";
      for (const auto& [window, letter] : v.local_rule->table) {
        os << "  " << format_word(alphabet, window) << " -> " << target.name(letter) << "\n";
      }
    } else {
      os << "local rule: none found within the radius limit\n";
    }
  }
  return os.str();
}

std::string bijective_text(const BijectiveVerdict& v, const Alphabet& alphabet) {
  std::ostringstream os;
  os << "answer: " << to_string(v.answer) << "\n";
  os << "mode: " << v.mode << "\n";
  if (!v.reason.empty()) os << "reason: " << v.reason << "\n";
  os << "column number: " << v.column_number << "\n";
  os << "j: " << v.j << "\n";
  os << "kernel partitions:";
  for (const Partition& p : v.kernel_partitions) os << " " << partition_text(p, alphabet);
  os << "\n";
  if (v.mode == "general-sweep") {
    os << "bound on n: " << v.bound_n << ", swept n <= " << v.max_n_used;
    if (v.max_k_used) os << ", k < " << *v.max_k_used;
    os << "\n";
    for (const SweepEntry& e : v.sweep) {
      os << "  n=" << e.n << " k=" << e.k << ": " << e.alphabet_size << " letters, |S|="
         << e.semigroup_size << ", " << e.minimal_left_ideals() << " minimal left ideals\n";
    }
  }
  if (v.witness) {
    const BijectiveWitness& w = *v.witness;
    if (w.n > 0) os << "witness at n=" << w.n << " k=" << w.k << "\n";
    os << "partition: " << partition_text(w.partition, w.source.alphabet()) << "\n";
    os << "bijective quotient:\n" << indent(serialize(w.encoding.quotient));
  }
  return os.str();
}

std::string semigroup_text(const TransformationSemigroup& sg, const GreenData* g,
                           const Alphabet& alphabet) {
  std::ostringstream os;
  os << "|S| = " << sg.size() << "\n";
  if (g == nullptr) return os.str();
  os << "column number: " << g->rank << "\n";
  os << "j: " << j_depth(sg, *g) << "\n";
  os << "kernel: " << g->kernel.size() << " elements, " << g->r_classes.size() << " R-classes, "
     << g->l_classes.size() << " L-classes, group order " << g->group_order << "\n";
  os << "R-class images:";
  for (const RClass& r : g->r_classes) os << " " << set_text(r.image, alphabet);
  os << "\nL-class partitions:";
  for (const LClass& l : g->l_classes) os << " " << partition_text(l.partition, alphabet);
  os << "\n";
  return os.str();
}

Outcome do_semigroup(const Substitution& s, bool with_green) {
  const TransformationSemigroup sg = generate(s);
  Outcome o;
  if (with_green) {
    const GreenData g = green(sg);
    o.result = semigroup_json(sg, s.alphabet(), &g);
    o.text = semigroup_text(sg, &g, s.alphabet());
  } else {
    o.result = semigroup_json(sg, s.alphabet(), nullptr);
    o.text = semigroup_text(sg, nullptr, s.alphabet());
  }
  return o;
}

Outcome derived_outcome(const DerivedSubstitution& d, const Alphabet& base) {
  return {kOk, to_json(d, base), serialize(d.substitution)};
}

Outcome do_analyze(const Substitution& s, std::size_t jobs) {
  AnalyzeOptions opts;
  opts.jobs = jobs;
  const Analysis a = analyze(s, opts);
  const Alphabet& al = s.alphabet();
  std::ostringstream os;
  os << "letters: " << s.size() << ", length: " << s.length() << "\n";
  os << "primitive: " << (a.primitive ? "yes" : "no") << "\n";
  if (a.aperiodic) os << "aperiodic: " << (*a.aperiodic ? "yes" : "no") << "\n";
  os << "fix power: " << a.fix_power << "\n";
  if (a.height) os << "height: " << a.height->h << "\n";
  if (a.green) {
    os << "|S| = " << *a.semigroup_size << ", column number " << a.green->rank << ", j = "
       << *a.j << "\n";
    os << "kernel: " << a.green->kernel.size() << " elements, " << a.green->r_classes.size()
       << " R-classes, " << a.green->l_classes.size() << " L-classes, group order "
       << a.green->group_order << "\n";
  }
  if (a.minimal_sets) {
    os << "minimal sets:";
    for (const auto& set : a.minimal_sets->sets) os << " " << set_text(set, al);
    os << (a.minimal_sets->is_partition ? " (a partition)" : " (not a partition)") << "\n";
  }
  if (a.outer) os << "canonical outer encoding:\n" << indent(serialize(a.outer->quotient));
  if (a.pairs) os << "pair aperiodicity p(theta): " << a.pairs->p_theta << "\n";
  if (a.r_set) {
    os << "R-set: " << a.r_set->maps.size() << " maps, " << a.r_set->allowed_two_words
       << " allowed 2-words, counting " << (a.r_set->counting_ok ? "holds" : "fails") << "\n";
  }
  if (a.aa) os << "almost automorphic factor:\n" << indent(aa_text(*a.aa, al));
  if (a.bijective_inner) {
    os << "bijective inner encoding:\n" << indent(bijective_text(*a.bijective_inner, al));
  }
  if (a.bijective_general) {
    os << "bijective factor (sweep capped at n = " << opts.sweep_max_n << "):\n"
       << indent(bijective_text(*a.bijective_general, al));
  }
  for (const auto& [section, message] : a.notes) os << "note [" << section << "]: " << message << "\n";
  return {kOk, to_json(a), os.str()};
}

Outcome do_fixtures_list() {
  Json list = Json::array();
  std::ostringstream os;
  for (const Fixture& f : fixtures()) {
    const Substitution s = f.substitution();
    list.push_back({{"name", f.name},
                    {"summary", f.summary},
                    {"letters", s.size()},
                    {"length", s.length()}});
    os << f.name << "  (" << s.size() << " letters, length " << s.length() << ")  " << f.summary
       << "\n";
  }
  return {kOk, Json{{"fixtures", std::move(list)}}, os.str()};
}

Outcome do_fixtures_run(const std::vector<std::string>& names, std::size_t jobs) {
  const auto results = run_fixture_checks(names, jobs);
  Json checks = Json::array();
  std::ostringstream os;
  std::size_t failed = 0;
  for (const FixtureCheck& c : results) {
    checks.push_back({{"fixture", c.fixture},
                      {"check", c.check},
                      {"passed", c.passed},
                      {"detail", c.detail}});
    os << (c.passed ? "PASS " : "FAIL ") << c.fixture << ": " << c.check << "\n";
    if (!c.passed) {
      ++failed;
      os << indent(c.detail, "    ");
    }
  }
  os << results.size() - failed << "/" << results.size() << " checks passed\n";
  return {failed == 0 ? kOk : kFixtureMismatch,
          Json{{"checks", std::move(checks)}, {"passed", results.size() - failed},
               {"failed", failed}},
          os.str()};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factors of constant-length substitution shifts", "substfactor"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  bool json = false;
  std::string file;
  std::size_t jobs = 1;
  auto add_common = [&](CLI::App* sub, bool takes_file = true) {
    sub->add_flag("--json", json, "Emit a JSON report on standard output");
    if (takes_file) {
      sub->add_option("FILE", file, "Substitution file, or the name of a bundled fixture")
          ->required();
    }
  };

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Run every analysis that applies");
  add_common(analyze_cmd);
  analyze_cmd->add_option("--jobs", jobs, "Threads for the bijective sweep")->check(CLI::PositiveNumber);

  bool no_cheap = false;
  CLI::App* aa_cmd = app.add_subcommand("aa-factor", "Decide whether an aperiodic almost automorphic factor exists");
  add_common(aa_cmd);
  aa_cmd->add_flag("--decisive-only", no_cheap, "Skip the (0,0) and (0,1) certificates");

  std::size_t max_n = 0;
  std::size_t max_k = 0;
  bool inner_only = false;
  CLI::App* bij_cmd = app.add_subcommand("bijective", "Decide whether a bijective substitution factor exists");
  add_common(bij_cmd);
  bij_cmd->add_option("--max-n", max_n, "Largest power n swept (default: the theorem's bound)");
  bij_cmd->add_option("--max-k", max_k, "Exclusive bound on the shift k (default: l^n)");
  bij_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  bij_cmd->add_flag("--inner-only", inner_only, "Only test for a bijective inner encoding");

  bool with_green = false;
  CLI::App* sg_cmd = app.add_subcommand("semigroup", "Generate the column semigroup");
  add_common(sg_cmd);
  sg_cmd->add_flag("--green", with_green, "Report the kernel and its Green classes");

  std::size_t collar_l = 0;
  std::size_t collar_r = 0;
  CLI::App* collar_cmd = app.add_subcommand("collar", "Print the (-l,r)-collared substitution");
  add_common(collar_cmd);
  collar_cmd->add_option("-l", collar_l, "Left collar")->required();
  collar_cmd->add_option("-r", collar_r, "Right collar")->required();

  std::size_t shift_k = 0;
  CLI::App* shift_cmd = app.add_subcommand("shift", "Print the k-shifted extension");
  add_common(shift_cmd);
  shift_cmd->add_option("-k", shift_k, "Shift, below the length")->required();

  std::size_t power_n = 1;
  CLI::App* power_cmd = app.add_subcommand("power", "Print a power");
  add_common(power_cmd);
  power_cmd->add_option("-n", power_n, "Exponent")->required()->check(CLI::PositiveNumber);

  CLI::App* pure_cmd = app.add_subcommand("pure-base", "Print the height and pure base");
  add_common(pure_cmd);

  std::string partition_spec;
  std::string code_spec;
  CLI::App* encode_cmd = app.add_subcommand("encode", "Inner encoding by a partition or a letter code");
  add_common(encode_cmd);
  auto* popt = encode_cmd->add_option("--partition", partition_spec, "Blocks, e.g. 'a,b|c,d' or 'ab|cd'");
  auto* copt = encode_cmd->add_option("--code", code_spec, "Letter code, e.g. 'a=x,b=x,c=y'");
  popt->excludes(copt);

  CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "The bundled example corpus");
  fixtures_cmd->require_subcommand(1);
  CLI::App* list_cmd = fixtures_cmd->add_subcommand("list", "List the fixtures");
  add_common(list_cmd, false);
  std::vector<std::string> fixture_names;
  CLI::App* run_cmd = fixtures_cmd->add_subcommand("run", "Check every fixture's expected verdicts");
  add_common(run_cmd, false);
  run_cmd->add_option("NAMES", fixture_names, "Fixtures to check (default: all)");
  run_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string command = args.empty() ? "" : args.front();
  const bool wants_json = std::find(args.begin(), args.end(), "--json") != args.end();
  auto fail = [&](int code, const std::string& kind, const std::string& message) {
    if (wants_json) {
      out << error_envelope(command, code, kind, message).dump(2) << "\n";
    } else {
      err << "error: " << message << "\n";
    }
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail(kInputError, "usage", e.what());
  }
  if (command == "fixtures") {
    command = list_cmd->parsed() ? "fixtures list" : "fixtures run";
  }

  try {
    Outcome o;
    if (list_cmd->parsed()) {
      o = do_fixtures_list();
    } else if (run_cmd->parsed()) {
      o = do_fixtures_run(fixture_names, jobs);
    } else {
      const Substitution s = load(file);
      if (analyze_cmd->parsed()) {
        o = do_analyze(s, jobs);
      } else if (aa_cmd->parsed()) {
        AAOptions opts;
        opts.cheap_certificates = !no_cheap;
        const AAVerdict v = decide_aa_factor(s, opts);
        o = {kOk, to_json(v, s.alphabet()), aa_text(v, s.alphabet())};
      } else if (bij_cmd->parsed()) {
        BijectiveVerdict v;
        if (inner_only) {
          v = decide_bijective_inner(s);
        } else {
          SweepOptions opts;
          opts.max_n = max_n;
          opts.max_k = max_k;
          opts.jobs = jobs;
          v = decide_bijective_general(s, opts);
        }
        o = {v.answer == Answer::inconclusive ? kInconclusive : kOk, to_json(v, s.alphabet()),
             bijective_text(v, s.alphabet())};
      } else if (sg_cmd->parsed()) {
        o = do_semigroup(s, with_green);
      } else if (collar_cmd->parsed()) {
        o = derived_outcome(collar(s, {collar_l, collar_r}), s.alphabet());
      } else if (shift_cmd->parsed()) {
        o = derived_outcome(shift_ext(s, shift_k), s.alphabet());
      } else if (power_cmd->parsed()) {
        const Substitution p = power(s, power_n);
        o = {kOk, to_json(p), serialize(p)};
      } else if (pure_cmd->parsed()) {
        // Power up only when no letter is fixed by the first column.
        bool seeded = false;
        for (Letter a = 0; a < s.size(); ++a) seeded = seeded || s.at(a, 0) == a;
        const std::size_t m = seeded ? 1 : fix_power(s);
        const Substitution p = m > 1 ? power(s, m) : s;
        const HeightInfo h = height(p);
        const PureBase pb = pure_base(p, h);
        Json r = {{"fix_power", m}, {"height", to_json(h, s.alphabet())},
                  {"pure_base", to_json(pb, s.alphabet())}};
        std::ostringstream os;
        os << "fix power: " << m << "\nheight: " << h.h << "\n" << serialize(pb.substitution);
        o = {kOk, std::move(r), os.str()};
      } else if (encode_cmd->parsed()) {
        InnerEncoding e;
        Json extra = Json::object();
        if (partition_spec.empty() && code_spec.empty()) {
          throw InputError("encode needs --partition or --code");
        }
        if (!partition_spec.empty()) {
          e = inner_encoding_from_partition(s, parse_partition(s.alphabet(), partition_spec));
        } else {
          const ParsedCode code = parse_code(s.alphabet(), code_spec);
          const CodeEncoding ce = inner_encoding_from_code(s, code.code);
          e = ce.encoding;
          Json residual = Json::object();
          for (Letter q = 0; q < ce.residual.size(); ++q) {
            residual[e.quotient.alphabet().name(q)] = code.target_names[ce.residual[q]];
          }
          extra["residual"] = std::move(residual);
        }
        Json r = to_json(e);
        for (auto& [k, v] : extra.items()) r[k] = v;
        std::ostringstream os;
        os << "partition: " << partition_text(e.partition(), s.alphabet()) << "\n"
           << serialize(e.quotient);
        o = {kOk, std::move(r), os.str()};
      }
    }
    if (json) {
      out << envelope(command, o.code, std::move(o.result)).dump(2) << "\n";
    } else {
      out << o.text;
    }
    return o.code;
  } catch (const ResourceError& e) {
    return fail(kResourceError, "resource", e.what());
  } catch (const PreconditionError& e) {
    return fail(kInputError, "precondition", e.what());
  } catch (const InputError& e) {
    return fail(kInputError, "input", e.what());
  } catch (const InternalError& e) {
    return fail(kInternalError, "internal", e.what());
  }
}

}  // namespace substfactor::cli
