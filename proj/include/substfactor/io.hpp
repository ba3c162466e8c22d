#pragma once

// Text format for substitutions, words, partitions and letter codes.
//
//   # comment
//   %mode compact        (or spaced; detected when absent)
//   a->abba
//   b->baab
//
// Compact mode reads every UTF-8 code point of an image as one letter.
// Spaced mode separates letters by whitespace: `ab -> ab ba cc`.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "substfactor/error.hpp"
#include "substfactor/partition.hpp"
#include "substfactor/words.hpp"

namespace substfactor {

class ParseError : public InputError {
 public:
  //! line is 1-based; 0 when the error concerns the whole input.
  ParseError(std::size_t line, const std::string& message, const std::string& source = "");
  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

enum class LetterMode { automatic, compact, spaced };

Substitution parse_substitution(std::string_view text, LetterMode mode = LetterMode::automatic);

//! Reads and parses a file. Throws InputError if it cannot be read.
Substitution read_substitution_file(const std::string& path);

//! One rule per line, in alphabet order. Compact when the alphabet allows it.
std::string serialize(const Substitution& s);

//! Letters separated by whitespace, or one code point each when the text has
//! no whitespace and the alphabet is compact.
Word parse_word(const Alphabet& alphabet, std::string_view text);

//! Blocks separated by '|'; letters within a block by ',' or, for compact
//! alphabets, juxtaposed: "a,b|c,d" or "ab|cd". Letters not mentioned form
//! singleton blocks.
Partition parse_partition(const Alphabet& alphabet, std::string_view text);

struct ParsedCode {
  std::vector<std::string> target_names;
  //! code[a] indexes target_names.
  std::vector<Letter> code;
};

//! "a=x,b=x,c=y": every letter of the alphabet must be assigned once.
ParsedCode parse_code(const Alphabet& alphabet, std::string_view text);

}  // namespace substfactor
