#ifndef DISCO_TEXT_HPP
#define DISCO_TEXT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "disco/span.hpp"

namespace disco {

// Strict UTF-8 decode into Unicode scalar values. Rejects overlong forms,
// surrogates, and code points above U+10FFFF.
struct Utf8Decoded {
  std::u32string text;
  // Set on failure: byte index of the offending sequence and the 1-based
  // line it sits on.
  std::optional<std::size_t> error_byte;
  std::size_t error_line = 0;

  bool ok() const { return !error_byte.has_value(); }
};

Utf8Decoded decode_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view text);

// The whitespace set used for word unitization and boundary trimming:
// TAB, LF, VT, FF, CR, SPACE.
inline bool is_space(char32_t c) {
  return c == U' ' || (c >= U'\t' && c <= U'\r');
}

// Maximal non-whitespace runs, in text order.
std::vector<CharInterval> word_units(std::u32string_view text);

}  // namespace disco

#endif
