#include "unicode.h"

#include <locale.h>
#include <wctype.h>

#include <stdexcept>

namespace tagnav::unicode {
namespace {

constexpr char32_t kReplacement = 0xFFFD;

locale_t utf8_ctype() {
  static const locale_t loc = [] {
    locale_t l = newlocale(LC_CTYPE_MASK, "C.UTF-8", static_cast<locale_t>(0));
    if (l == static_cast<locale_t>(0)) {
      throw std::runtime_error("C.UTF-8 locale is not available");
    }
    return l;
  }();
  return loc;
}

// Code points whose simple case folding differs from their lowercase mapping.
struct FoldOverride {
  char32_t from;
  char32_t to;
};
constexpr FoldOverride kFoldOverrides[] = {
    {0x00B5, 0x03BC}, {0x0130, 0x0130}, {0x017F, 0x0073}, {0x0345, 0x03B9},
    {0x03C2, 0x03C3}, {0x03D0, 0x03B2}, {0x03D1, 0x03B8}, {0x03D5, 0x03C6},
    {0x03D6, 0x03C0}, {0x03F0, 0x03BA}, {0x03F1, 0x03C1}, {0x03F5, 0x03B5},
    {0x1E9B, 0x1E61}, {0x1FBE, 0x03B9},
};

}  // namespace

char32_t decode_next(std::string_view text, std::size_t& pos) {
  const auto lead = static_cast<unsigned char>(text[pos]);
  if (lead < 0x80) {
    ++pos;
    return lead;
  }
  std::size_t len;
  char32_t cp;
  char32_t min;
  if ((lead & 0xE0) == 0xC0) {
    len = 2, cp = lead & 0x1F, min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3, cp = lead & 0x0F, min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4, cp = lead & 0x07, min = 0x10000;
  } else {
    ++pos;
    return kReplacement;
  }
  if (pos + len > text.size()) {
    ++pos;
    return kReplacement;
  }
  for (std::size_t i = 1; i < len; ++i) {
    const auto c = static_cast<unsigned char>(text[pos + i]);
    if ((c & 0xC0) != 0x80) {
      ++pos;
      return kReplacement;
    }
    cp = (cp << 6) | (c & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    ++pos;
    return kReplacement;
  }
  pos += len;
  return cp;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

char32_t fold_case(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 'A' && cp <= 'Z') ? cp + ('a' - 'A') : cp;
  }
  for (const auto& o : kFoldOverrides) {
    if (o.from == cp) return o.to;
  }
  return static_cast<char32_t>(towlower_l(static_cast<wint_t>(cp), utf8_ctype()));
}

bool is_alnum(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') ||
           (cp >= 'A' && cp <= 'Z');
  }
  if (cp == kReplacement) return false;
  return iswalnum_l(static_cast<wint_t>(cp), utf8_ctype()) != 0;
}

bool is_space(char32_t cp) {
  if (cp < 0x80) {
    return cp == ' ' || (cp >= '\t' && cp <= '\r');
  }
  return iswspace_l(static_cast<wint_t>(cp), utf8_ctype()) != 0;
}

}  // namespace tagnav::unicode
