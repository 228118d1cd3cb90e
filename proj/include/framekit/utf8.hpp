#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace framekit {
namespace utf8 {

using Codepoint = std::uint32_t;

constexpr Codepoint kReplacement = 0xFFFD;

// Decodes the codepoint starting at byte offset i and advances i past it.
// Malformed sequences decode to U+FFFD and consume one byte.
inline Codepoint decode(std::string_view s, std::size_t& i) {
  const unsigned char b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  auto cont = [&](std::size_t k) {
    return i + k < s.size() && (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
  };
  if ((b0 & 0xE0) == 0xC0 && cont(1)) {
    Codepoint cp = (Codepoint(b0 & 0x1F) << 6) | (static_cast<unsigned char>(s[i + 1]) & 0x3F);
    i += 2;
    return cp >= 0x80 ? cp : kReplacement;
  }
  if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
    Codepoint cp = (Codepoint(b0 & 0x0F) << 12) |
                   (Codepoint(static_cast<unsigned char>(s[i + 1]) & 0x3F) << 6) |
                   (static_cast<unsigned char>(s[i + 2]) & 0x3F);
    i += 3;
    return cp >= 0x800 ? cp : kReplacement;
  }
  if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
    Codepoint cp = (Codepoint(b0 & 0x07) << 18) |
                   (Codepoint(static_cast<unsigned char>(s[i + 1]) & 0x3F) << 12) |
                   (Codepoint(static_cast<unsigned char>(s[i + 2]) & 0x3F) << 6) |
                   (static_cast<unsigned char>(s[i + 3]) & 0x3F);
    i += 4;
    return cp >= 0x10000 && cp <= 0x10FFFF ? cp : kReplacement;
  }
  ++i;
  return kReplacement;
}

inline void append(std::string& out, Codepoint cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Lowercase mapping covering the scripts of the supported languages:
// ASCII, Latin-1 Supplement, Latin Extended-A, Greek and Cyrillic.
inline Codepoint to_lower(Codepoint cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;  // Latin-1
  if (cp >= 0x100 && cp <= 0x137) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp >= 0x139 && cp <= 0x148) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x14A && cp <= 0x177) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp == 0x178) return 0xFF;  // Y with diaeresis
  if (cp >= 0x179 && cp <= 0x17E) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;  // Greek
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;  // Cyrillic Ѐ..Џ
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;  // Cyrillic А..Я
  return cp;
}

inline bool is_upper(Codepoint cp) { return to_lower(cp) != cp; }

inline bool is_letter(Codepoint cp) {
  if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return true;
  if (cp >= 0xC0 && cp <= 0xFF && cp != 0xD7 && cp != 0xF7) return true;  // Latin-1
  if (cp >= 0x100 && cp <= 0x24F) return true;   // Latin Extended-A/B
  if (cp >= 0x370 && cp <= 0x3FF) return true;   // Greek
  if (cp >= 0x400 && cp <= 0x4FF) return true;   // Cyrillic
  return false;
}

inline bool is_digit(Codepoint cp) { return cp >= '0' && cp <= '9'; }

inline bool is_word_char(Codepoint cp) { return is_letter(cp) || is_digit(cp); }

inline std::string lowercase(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) append(out, to_lower(decode(s, i)));
  return out;
}

inline std::size_t length(std::string_view s) {
  std::size_t i = 0, n = 0;
  while (i < s.size()) {
    decode(s, i);
    ++n;
  }
  return n;
}

}  // namespace utf8
}  // namespace framekit
