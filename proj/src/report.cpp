#include "substfactor/report.hpp"

#include "substfactor/error.hpp"
#include "substfactor/io.hpp"

namespace substfactor {

namespace {

Json names(const Alphabet& alphabet, const std::vector<Letter>& letters) {
  Json out = Json::array();
  for (Letter a : letters) out.push_back(alphabet.name(a));
  return out;
}

Json word_json(const Alphabet& alphabet, const Word& w) { return format_word(alphabet, w); }

Json digits_json(const std::vector<std::size_t>& digits) {
  Json out = Json::array();
  for (std::size_t d : digits) out.push_back(d);
  return out;
}

}  // namespace

Json to_json(const Substitution& s) {
  Json rules = Json::array();
  for (Letter a = 0; a < s.size(); ++a) {
    rules.push_back({{"letter", s.alphabet().name(a)}, {"image", names(s.alphabet(), s.image(a))}});
  }
  return {{"alphabet", s.alphabet().names()},
          {"length", s.length()},
          {"rules", std::move(rules)},
          {"text", serialize(s)}};
}

Substitution substitution_from_json(const Json& j) {
  try {
    Alphabet alphabet(j.at("alphabet").get<std::vector<std::string>>());
    const Json& rules = j.at("rules");
    if (rules.size() != alphabet.size()) throw InputError("one rule per letter expected");
    std::vector<Word> images;
    for (std::size_t a = 0; a < rules.size(); ++a) {
      if (rules[a].at("letter").get<std::string>() != alphabet.name(static_cast<Letter>(a))) {
        throw InputError("rules must follow the alphabet order");
      }
      Word w;
      for (const auto& name : rules[a].at("image")) w.push_back(alphabet.index(name.get<std::string>()));
      images.push_back(std::move(w));
    }
    return Substitution(std::move(alphabet), std::move(images));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed substitution JSON: ") + e.what());
  }
}

Json to_json(const Partition& p, const Alphabet& alphabet) {
  Json out = Json::array();
  for (const auto& block : p.blocks()) out.push_back(names(alphabet, block));
  return out;
}

Json to_json(const Transformation& t, const Alphabet& alphabet) {
  return names(alphabet, t.to_column_map());
}

Json to_json(const DerivedSubstitution& d, const Alphabet& base) {
  Json words = Json::array();
  for (const Word& w : d.letters.words) words.push_back(word_json(base, w));
  return {{"substitution", to_json(d.substitution)}, {"base_words", std::move(words)}};
}

Json to_json(const InnerEncoding& e) {
  const Alphabet& src = e.source.alphabet();
  Json code = Json::object();
  for (Letter a = 0; a < e.code.size(); ++a) {
    code[src.name(a)] = e.quotient.alphabet().name(e.code[a]);
  }
  return {{"partition", to_json(e.partition(), src)},
          {"code", std::move(code)},
          {"quotient", to_json(e.quotient)}};
}

Json to_json(const MinimalSets& ms, const Alphabet& alphabet) {
  Json sets = Json::array();
  for (const auto& s : ms.sets) sets.push_back(names(alphabet, s));
  Json blocks = Json::array();
  for (const auto& b : ms.coincidence_blocks) blocks.push_back(names(alphabet, b));
  return {{"sets", std::move(sets)},
          {"covers_alphabet", ms.covers_alphabet},
          {"is_partition", ms.is_partition},
          {"coincidence_partition", std::move(blocks)}};
}

Json to_json(const OuterEncoding& o, const Alphabet& alphabet) {
  Json classes = Json::array();
  for (const auto& c : o.classes) classes.push_back(names(alphabet, c));
  return {{"classes", std::move(classes)},
          {"covers_alphabet", o.covers_alphabet},
          {"quotient", to_json(o.quotient)}};
}

Json to_json(const RSet& r, const Alphabet& alphabet) {
  Json maps = Json::array();
  for (const auto& m : r.maps) maps.push_back(names(alphabet, m));
  return {{"maps", std::move(maps)},
          {"size", r.maps.size()},
          {"disjoint", r.disjoint},
          {"allowed_two_words", r.allowed_two_words},
          {"counting_ok", r.counting_ok}};
}

Json to_json(const HeightInfo& h, const Alphabet& alphabet) {
  return {{"h", h.h},
          {"g", h.g},
          {"seed", alphabet.name(h.seed)},
          {"prefix_power", h.prefix_power}};
}

Json to_json(const PureBase& p, const Alphabet& base) {
  Json blocks = Json::array();
  for (const Word& w : p.blocks) blocks.push_back(word_json(base, w));
  return {{"substitution", to_json(p.substitution)}, {"blocks", std::move(blocks)}};
}

Json to_json(const AperiodicityResult& r) {
  Json samples = Json::array();
  for (const auto& [k, p] : r.samples) samples.push_back({k, p});
  return {{"aperiodic", r.aperiodic},
          {"cap", r.cap},
          {"decided_at", r.decided_at},
          {"complexity", r.complexity},
          {"samples", std::move(samples)}};
}

Json to_json(const PairAperiodicityReport& r, const Alphabet& alphabet) {
  Json pairs = Json::array();
  for (const PeriodicPair& p : r.periodic_pairs) {
    pairs.push_back({{"a", alphabet.name(p.a)},
                     {"b", alphabet.name(p.b)},
                     {"p", p.p},
                     {"column_word", digits_json(p.column_word)}});
  }
  return {{"periodic_pairs", std::move(pairs)}, {"p_theta", r.p_theta}};
}

Json semigroup_json(const TransformationSemigroup& sg, const Alphabet& alphabet,
                    const GreenData* green) {
  std::size_t max_depth = 0;
  for (std::size_t i = 0; i < sg.size(); ++i) max_depth = std::max(max_depth, sg.depth(i));
  Json out = {{"size", sg.size()},
              {"degree", sg.degree()},
              {"generators", sg.generator_count()},
              {"max_depth", max_depth}};
  if (green == nullptr) return out;
  const GreenData& g = *green;
  Json r_classes = Json::array();
  for (const RClass& r : g.r_classes) {
    r_classes.push_back({{"image", names(alphabet, r.image)}, {"size", r.members.size()}});
  }
  Json l_classes = Json::array();
  for (const LClass& l : g.l_classes) {
    l_classes.push_back(
        {{"partition", to_json(l.partition, alphabet)}, {"size", l.members.size()}});
  }
  Json kernel = Json::array();
  for (std::uint32_t i : g.kernel) kernel.push_back(to_json(sg.element(i), alphabet));
  out["green"] = {{"column_number", g.rank},
                  {"j", j_depth(sg, g)},
                  {"kernel_size", g.kernel.size()},
                  {"r_class_count", g.r_classes.size()},
                  {"l_class_count", g.l_classes.size()},
                  {"group_order", g.group_order},
                  {"idempotent_count", g.idempotents.size()},
                  {"r_classes", std::move(r_classes)},
                  {"l_classes", std::move(l_classes)},
                  {"kernel", std::move(kernel)}};
  return out;
}

Json to_json(const AAVerdict& v, const Alphabet& alphabet) {
  Json stages = Json::array();
  for (const AAStage& st : v.stages) {
    stages.push_back({{"collar", {{"l", st.spec.l}, {"r", st.spec.r}}},
                      {"letters", st.collared.substitution.size()},
                      {"encoding", to_json(st.encoding)},
                      {"aperiodic", st.aperiodic}});
  }
  Json out = {{"answer", to_string(v.answer)},
              {"fix_power", v.fix_power},
              {"height", to_json(v.height, v.powered.alphabet())},
              {"pure_base", to_json(v.pure_base, alphabet)},
              {"stages", std::move(stages)},
              {"decisive_stage", v.stages.size() - 1}};
  out["witness_stage"] = v.witness_stage ? Json(*v.witness_stage) : Json(nullptr);
  out["witness"] = v.witness() ? to_json(v.witness()->encoding.quotient) : Json(nullptr);
  out["unpowered_witness"] =
      v.unpowered_witness ? to_json(*v.unpowered_witness) : Json(nullptr);
  out["suspended"] = v.suspended ? to_json(*v.suspended) : Json(nullptr);
  if (v.local_rule) {
    const Alphabet& target = v.suspended ? v.suspended->alphabet()
                                         : v.witness()->encoding.quotient.alphabet();
    Json table = Json::array();
    for (const auto& [window, letter] : v.local_rule->table) {
      table.push_back({{"window", word_json(alphabet, window)}, {"output", target.name(letter)}});
    }
    out["local_rule"] = {{"radius", v.local_rule->radius}, {"table", std::move(table)}};
  } else {
    out["local_rule"] = nullptr;
  }
  return out;
}

Json to_json(const BijectiveVerdict& v, const Alphabet& alphabet) {
  Json out = {{"answer", to_string(v.answer)},
              {"mode", v.mode},
              {"reason", v.reason},
              {"column_number", v.column_number},
              {"j", v.j}};
  Json kp = Json::array();
  for (const Partition& p : v.kernel_partitions) kp.push_back(to_json(p, alphabet));
  out["kernel_partitions"] = std::move(kp);
  if (v.witness) {
    const BijectiveWitness& w = *v.witness;
    out["witness"] = {{"n", w.n},
                      {"k", w.k},
                      {"source", to_json(w.source)},
                      {"partition", to_json(w.partition, w.source.alphabet())},
                      {"quotient", to_json(w.encoding.quotient)}};
  } else {
    out["witness"] = nullptr;
  }
  Json sweep = Json::array();
  for (const SweepEntry& e : v.sweep) {
    const Alphabet letters(e.letters);
    Json partitions = Json::array();
    for (const Partition& p : e.kernel_partitions) partitions.push_back(to_json(p, letters));
    sweep.push_back({{"n", e.n},
                     {"k", e.k},
                     {"alphabet_size", e.alphabet_size},
                     {"semigroup_size", e.semigroup_size},
                     {"minimal_left_ideals", e.minimal_left_ideals()},
                     {"kernel_partitions", std::move(partitions)}});
  }
  out["sweep"] = std::move(sweep);
  out["bound_n"] = v.bound_n;
  out["max_n_used"] = v.max_n_used;
  out["max_k_used"] = v.max_k_used ? Json(*v.max_k_used) : Json(nullptr);
  return out;
}

Json to_json(const Analysis& a) {
  const Alphabet& al = a.input.alphabet();
  Json out = {{"input", to_json(a.input)},
              {"primitive", a.primitive},
              {"fix_power", a.fix_power}};
  out["aperiodic"] = a.aperiodic ? Json(*a.aperiodic) : Json(nullptr);
  out["height"] = a.height ? to_json(*a.height, al) : Json(nullptr);
  out["semigroup_size"] = a.semigroup_size ? Json(*a.semigroup_size) : Json(nullptr);
  if (a.green) {
    const GreenData& g = *a.green;
    Json l = Json::array();
    for (const LClass& c : g.l_classes) l.push_back(to_json(c.partition, al));
    out["green"] = {{"column_number", g.rank},
                    {"kernel_size", g.kernel.size()},
                    {"r_class_count", g.r_classes.size()},
                    {"l_class_count", g.l_classes.size()},
                    {"group_order", g.group_order},
                    {"kernel_partitions", std::move(l)}};
  } else {
    out["green"] = nullptr;
  }
  out["j"] = a.j ? Json(*a.j) : Json(nullptr);
  out["bijective_columns"] = a.bijective_columns ? Json(*a.bijective_columns) : Json(nullptr);
  out["minimal_sets"] = a.minimal_sets ? to_json(*a.minimal_sets, al) : Json(nullptr);
  out["outer_encoding"] = a.outer ? to_json(*a.outer, al) : Json(nullptr);
  out["pair_aperiodicity"] = a.pairs ? to_json(*a.pairs, al) : Json(nullptr);
  out["r_set"] = a.r_set ? to_json(*a.r_set, al) : Json(nullptr);
  out["aa"] = a.aa ? to_json(*a.aa, al) : Json(nullptr);
  out["bijective_inner"] = a.bijective_inner ? to_json(*a.bijective_inner, al) : Json(nullptr);
  out["bijective_general"] =
      a.bijective_general ? to_json(*a.bijective_general, al) : Json(nullptr);
  Json notes = Json::array();
  for (const auto& [section, message] : a.notes) {
    notes.push_back({{"section", section}, {"message", message}});
  }
  out["notes"] = std::move(notes);
  return out;
}

Json envelope(const std::string& command, int exit_code, Json result) {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"status", "ok"},
          {"exit_code", exit_code},
          {"result", std::move(result)}};
}

Json error_envelope(const std::string& command, int exit_code, const std::string& kind,
                    const std::string& message) {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"status", "error"},
          {"exit_code", exit_code},
          {"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace substfactor
