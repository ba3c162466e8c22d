#include "substfactor/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "substfactor/detail/utf8.hpp"

namespace substfactor {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

std::vector<std::string> split_on(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

bool has_inner_space(std::string_view s) {
  s = trim(s);
  for (char c : s) {
    if (is_space(c)) return true;
  }
  return false;
}

struct Rule {
  std::size_t line;
  std::string lhs;
  std::string rhs;
};

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message, const std::string& source)
    : InputError((source.empty() ? "" : source + ": ") +
                 (line == 0 ? message : "line " + std::to_string(line) + ": " + message)),
      line_(line),
      detail_(message) {}

Substitution parse_substitution(std::string_view text, LetterMode mode) {
  std::vector<Rule> rules;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '%') {
      const auto parts = split_ws(line.substr(1));
      if (parts.size() != 2 || parts[0] != "mode") {
        throw ParseError(line_no, "unknown directive '" + std::string(line) + "'");
      }
      if (!rules.empty()) throw ParseError(line_no, "%mode must precede the rules");
      if (parts[1] == "compact") {
        mode = LetterMode::compact;
      } else if (parts[1] == "spaced") {
        mode = LetterMode::spaced;
      } else {
        throw ParseError(line_no, "unknown mode '" + parts[1] + "'");
      }
      continue;
    }
    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) throw ParseError(line_no, "expected 'letter -> image'");
    Rule r{line_no, std::string(trim(line.substr(0, arrow))),
           std::string(trim(line.substr(arrow + 2)))};
    if (r.lhs.empty()) throw ParseError(line_no, "missing letter before '->'");
    if (r.rhs.empty()) throw ParseError(line_no, "empty image");
    rules.push_back(std::move(r));
  }
  if (rules.empty()) throw ParseError(0, "empty input: no rules");

  if (mode == LetterMode::automatic) {
    mode = LetterMode::compact;
    for (const Rule& r : rules) {
      if (detail::utf8_count(r.lhs) != 1 || has_inner_space(r.rhs) ||
          has_inner_space(r.lhs)) {
        mode = LetterMode::spaced;
        break;
      }
    }
  }

  std::vector<std::string> names;
  std::map<std::string, std::size_t> defined_at;
  for (const Rule& r : rules) {
    if (mode == LetterMode::compact && detail::utf8_count(r.lhs) != 1) {
      throw ParseError(r.line, "letter '" + r.lhs + "' is not a single character in compact mode");
    }
    if (mode == LetterMode::spaced && has_inner_space(r.lhs)) {
      throw ParseError(r.line, "letter '" + r.lhs + "' contains whitespace");
    }
    const auto [it, inserted] = defined_at.emplace(r.lhs, r.line);
    if (!inserted) {
      throw ParseError(r.line, "duplicate rule for '" + r.lhs + "' (first defined on line " +
                                   std::to_string(it->second) + ")");
    }
    names.push_back(r.lhs);
  }
  Alphabet alphabet(names);

  std::vector<Word> images;
  std::size_t length = 0;
  for (const Rule& r : rules) {
    std::vector<std::string> tokens;
    if (mode == LetterMode::compact) {
      std::string packed;
      for (char c : r.rhs) {
        if (!is_space(c)) packed.push_back(c);
      }
      tokens = detail::utf8_split(packed);
    } else {
      tokens = split_ws(r.rhs);
    }
    Word w;
    for (const std::string& t : tokens) {
      const auto a = alphabet.find(t);
      if (!a) throw ParseError(r.line, "unknown letter '" + t + "' in image of '" + r.lhs + "'");
      w.push_back(*a);
    }
    if (images.empty()) {
      length = w.size();
    } else if (w.size() != length) {
      throw ParseError(r.line, "image of '" + r.lhs + "' has length " + std::to_string(w.size()) +
                                   ", expected " + std::to_string(length) + " (line " +
                                   std::to_string(rules.front().line) + ")");
    }
    images.push_back(std::move(w));
  }
  return Substitution(std::move(alphabet), std::move(images));
}

Substitution read_substitution_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_substitution(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path);
  }
}

std::string serialize(const Substitution& s) {
  const Alphabet& al = s.alphabet();
  std::string out;
  if (!al.compact()) out += "%mode spaced\n";
  for (Letter a = 0; a < s.size(); ++a) {
    out += al.name(a);
    out += al.compact() ? "->" : " -> ";
    out += format_word(al, s.image(a));
    out += '\n';
  }
  return out;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  text = trim(text);
  const std::vector<std::string> tokens =
      has_inner_space(text) || !alphabet.compact() ? split_ws(text) : detail::utf8_split(text);
  Word w;
  for (const std::string& t : tokens) w.push_back(alphabet.index(t));
  return w;
}

Partition parse_partition(const Alphabet& alphabet, std::string_view text) {
  std::vector<std::vector<Letter>> blocks;
  std::vector<bool> seen(alphabet.size(), false);
  for (const std::string& part : split_on(trim(text), '|')) {
    if (part.empty()) throw InputError("empty block in partition '" + std::string(text) + "'");
    std::vector<std::string> names;
    if (part.find(',') != std::string::npos) {
      names = split_on(part, ',');
    } else if (alphabet.compact()) {
      std::string packed;
      for (char c : part) {
        if (!is_space(c)) packed.push_back(c);
      }
      names = detail::utf8_split(packed);
    } else {
      names = split_ws(part);
    }
    std::vector<Letter> block;
    for (const std::string& n : names) {
      const Letter a = alphabet.index(n);
      if (seen[a]) throw InputError("letter '" + n + "' appears in two blocks");
      seen[a] = true;
      block.push_back(a);
    }
    blocks.push_back(std::move(block));
  }
  for (Letter a = 0; a < alphabet.size(); ++a) {
    if (!seen[a]) blocks.push_back({a});
  }
  return Partition::from_blocks(alphabet.size(), std::move(blocks));
}

ParsedCode parse_code(const Alphabet& alphabet, std::string_view text) {
  ParsedCode out;
  out.code.assign(alphabet.size(), 0);
  std::vector<bool> seen(alphabet.size(), false);
  std::map<std::string, Letter> targets;
  for (const std::string& item : split_on(trim(text), ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("expected 'letter=target', got '" + item + "'");
    const std::string lhs(trim(std::string_view(item).substr(0, eq)));
    const std::string rhs(trim(std::string_view(item).substr(eq + 1)));
    if (rhs.empty()) throw InputError("empty target for '" + lhs + "'");
    const Letter a = alphabet.index(lhs);
    if (seen[a]) throw InputError("letter '" + lhs + "' assigned twice");
    seen[a] = true;
    auto [it, inserted] = targets.emplace(rhs, static_cast<Letter>(out.target_names.size()));
    if (inserted) out.target_names.push_back(rhs);
    out.code[a] = it->second;
  }
  for (Letter a = 0; a < alphabet.size(); ++a) {
    if (!seen[a]) throw InputError("letter '" + alphabet.name(a) + "' is not assigned");
  }
  return out;
}

}  // namespace substfactor
