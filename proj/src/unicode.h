#pragma once

#include <string>
#include <string_view>

namespace tagnav::unicode {

// Decodes one code point starting at `pos` and advances it. Invalid or
// truncated sequences yield U+FFFD and consume a single byte.
char32_t decode_next(std::string_view text, std::size_t& pos);

void append_utf8(std::string& out, char32_t cp);

// Simple (one-to-one) Unicode case folding.
char32_t fold_case(char32_t cp);

bool is_alnum(char32_t cp);
bool is_space(char32_t cp);

}  // namespace tagnav::unicode
