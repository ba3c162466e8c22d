#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace substfactor::detail {

// Byte length of the UTF-8 sequence starting with lead byte c. Stray
// continuation bytes count as one so malformed input still makes progress.
inline std::size_t utf8_sequence_length(unsigned char c) {
  if (c < 0x80) return 1;
  if ((c >> 5) == 0x6) return 2;
  if ((c >> 4) == 0xE) return 3;
  if ((c >> 3) == 0x1E) return 4;
  return 1;
}

inline std::vector<std::string> utf8_split(std::string_view text) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < text.size();) {
    std::size_t n = utf8_sequence_length(static_cast<unsigned char>(text[i]));
    if (i + n > text.size()) n = text.size() - i;
    out.emplace_back(text.substr(i, n));
    i += n;
  }
  return out;
}

inline std::size_t utf8_count(std::string_view text) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < text.size(); ++count) {
    i += utf8_sequence_length(static_cast<unsigned char>(text[i]));
  }
  return count;
}

}  // namespace substfactor::detail
