#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "framekit/common.hpp"
#include "framekit/frames.hpp"
#include "framekit/utf8.hpp"

namespace framekit {

// ---------------------------------------------------------------------------
// Calendar dates. Stored as days since 1970-01-01 so time-window arithmetic
// is plain integer subtraction.
// ---------------------------------------------------------------------------

struct Date {
  std::int64_t days = 0;  // since epoch

  std::int64_t operator-(const Date& o) const { return days - o.days; }
  bool operator==(const Date& o) const { return days == o.days; }
};

inline std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

// Parses "YYYY-MM-DD".
inline std::optional<Date> parse_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
  auto num = [&](size_t b, size_t n) -> int {
    int v = 0;
    for (size_t i = b; i < b + n; ++i) {
      if (s[i] < '0' || s[i] > '9') return -1;
      v = v * 10 + (s[i] - '0');
    }
    return v;
  };
  int y = num(0, 4), m = num(5, 2), d = num(8, 2);
  if (y < 0 || m < 1 || m > 12 || d < 1 || d > 31) return std::nullopt;
  return Date{days_from_civil(y, m, d)};
}

inline std::string format_date(const Date& date) {
  // inverse of days_from_civil
  std::int64_t z = date.days + 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp + (mp < 10 ? 3 : -9);
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02u",
                static_cast<long long>(y + (m <= 2)), m, d);
  return buf;
}

// ---------------------------------------------------------------------------
// Data model
// ---------------------------------------------------------------------------

struct Article {
  std::string id;
  std::string language;  // ISO 639-1
  Date published_at;
  std::string outlet;
  std::string body;
  std::string report_id;  // optional group key; empty when absent
  std::string region;     // optional; empty when absent
};

struct AnnotatedSpan {
  std::string doc_id;
  std::string sentence;
  Frame frame;
  int annotator_count = 1;
};

// ---------------------------------------------------------------------------
// Tokenization. Tokens are lowercased runs of letters/digits; hyphens between
// word characters join (compounds stay single tokens); everything else
// separates. The rule set is shared across the supported languages, so the
// language argument is accepted for interface stability only.
// ---------------------------------------------------------------------------

inline std::vector<std::string> tokenize(std::string_view text,
                                         std::string_view /*language*/ = "") {
  std::vector<std::string> tokens;
  std::string cur;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t at = i;
    utf8::Codepoint cp = utf8::decode(text, i);
    if (utf8::is_word_char(cp)) {
      utf8::append(cur, utf8::to_lower(cp));
    } else if (cp == '-' && !cur.empty()) {
      // join only if a word character follows immediately
      std::size_t j = i;
      if (j < text.size()) {
        utf8::Codepoint next = utf8::decode(text, j);
        if (utf8::is_word_char(next)) {
          cur += '-';
          continue;
        }
      }
      tokens.push_back(cur);
      cur.clear();
    } else {
      if (!cur.empty()) {
        tokens.push_back(cur);
        cur.clear();
      }
    }
    (void)at;
  }
  if (!cur.empty()) tokens.push_back(cur);
  return tokens;
}

inline std::size_t count_words(std::string_view text) { return tokenize(text).size(); }

// ---------------------------------------------------------------------------
// Sentence splitting. Rule based: a sentence ends at a run of terminators
// (. ! ? …) plus trailing closing quotes/brackets, followed by whitespace or
// end of text. A lone period does not split when the preceding token is in
// the per-language abbreviation list. Abbreviation entries are stored
// lowercase without the trailing period (e.g. "mr", "e.g").
// ---------------------------------------------------------------------------

using AbbreviationSet = std::unordered_set<std::string>;

namespace detail {

inline bool is_terminator(utf8::Codepoint cp) {
  return cp == '.' || cp == '!' || cp == '?' || cp == 0x2026;  // …
}

inline bool is_closer(utf8::Codepoint cp) {
  switch (cp) {
    case '"':
    case '\'':
    case ')':
    case ']':
    case 0x00BB:  // »
    case 0x201D:  // ”
    case 0x2019:  // ’
      return true;
    default:
      return false;
  }
}

// Token (letters, digits and interior periods) ending right before byte
// position `end`, lowercased, used for the abbreviation lookup.
inline std::string token_before(std::string_view text, std::size_t end) {
  // walk back over codepoints
  std::vector<std::pair<std::size_t, utf8::Codepoint>> cps;
  std::size_t i = 0;
  while (i < end) {
    std::size_t at = i;
    utf8::Codepoint cp = utf8::decode(text, i);
    cps.emplace_back(at, cp);
  }
  std::string rev;
  std::size_t k = cps.size();
  while (k > 0) {
    utf8::Codepoint cp = cps[k - 1].second;
    if (utf8::is_letter(cp) || utf8::is_digit(cp) ||
        (cp == '.' && k > 1 && utf8::is_word_char(cps[k - 2].second))) {
      --k;
    } else {
      break;
    }
  }
  std::string out;
  for (std::size_t j = k; j < cps.size(); ++j) utf8::append(out, utf8::to_lower(cps[j].second));
  while (!out.empty() && out.back() == '.') out.pop_back();
  return out;
}

}  // namespace detail

struct SentenceSpan {
  std::size_t begin = 0;  // byte offsets into the original text
  std::size_t end = 0;
};

inline std::vector<SentenceSpan> split_sentence_spans(std::string_view text,
                                                      const AbbreviationSet& abbreviations = {}) {
  std::vector<SentenceSpan> spans;
  std::size_t i = 0;
  std::size_t sent_begin = std::string::npos;
  std::size_t last_non_space = 0;

  auto close_sentence = [&](std::size_t end) {
    if (sent_begin != std::string::npos && end > sent_begin)
      spans.push_back({sent_begin, end});
    sent_begin = std::string::npos;
  };

  while (i < text.size()) {
    std::size_t at = i;
    utf8::Codepoint cp = utf8::decode(text, i);
    bool space = cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == 0x00A0;
    if (!space && sent_begin == std::string::npos) sent_begin = at;
    if (!space) last_non_space = i;

    if (detail::is_terminator(cp)) {
      std::size_t run_end = i;
      bool lone_period = cp == '.';
      // absorb further terminators and closing punctuation
      std::size_t j = i;
      while (j < text.size()) {
        std::size_t prev = j;
        utf8::Codepoint next = utf8::decode(text, j);
        if (detail::is_terminator(next)) {
          lone_period = false;
          run_end = j;
        } else if (detail::is_closer(next)) {
          run_end = j;
        } else {
          j = prev;
          break;
        }
      }
      bool at_end = j >= text.size();
      bool followed_by_space = false;
      if (!at_end) {
        std::size_t k = j;
        utf8::Codepoint next = utf8::decode(text, k);
        followed_by_space =
            next == ' ' || next == '\t' || next == '\n' || next == '\r' || next == 0x00A0;
      }
      if (at_end || followed_by_space) {
        bool blocked = false;
        if (lone_period) {
          std::string tok = detail::token_before(text, at);
          if (!tok.empty() && abbreviations.count(tok)) blocked = true;
        }
        if (!blocked) {
          close_sentence(run_end);
          i = j;
          last_non_space = run_end;
          continue;
        }
      }
      i = j;
      last_non_space = run_end;
    }
  }
  close_sentence(last_non_space);
  return spans;
}

inline std::vector<std::string> split_sentences(std::string_view text,
                                                const AbbreviationSet& abbreviations = {}) {
  std::vector<std::string> out;
  for (const auto& span : split_sentence_spans(text, abbreviations))
    out.emplace_back(text.substr(span.begin, span.end - span.begin));
  return out;
}

// ---------------------------------------------------------------------------
// Truncation: keep the shortest whole-sentence prefix whose word count
// reaches min(word_limit, total words). The sentence during which the limit
// is crossed is completed, never cut.
// ---------------------------------------------------------------------------

inline Article truncate_article(const Article& article, std::size_t word_limit = 225,
                                const AbbreviationSet& abbreviations = {}) {
  if (word_limit == 0) throw Error("corpus", "word_limit must be positive");
  auto spans = split_sentence_spans(article.body, abbreviations);
  std::size_t total = 0;
  std::vector<std::size_t> counts(spans.size());
  for (std::size_t s = 0; s < spans.size(); ++s) {
    counts[s] = tokenize(std::string_view(article.body).substr(spans[s].begin,
                                                               spans[s].end - spans[s].begin))
                    .size();
    total += counts[s];
  }
  const std::size_t target = std::min(word_limit, total);
  std::size_t acc = 0;
  for (std::size_t s = 0; s < spans.size(); ++s) {
    acc += counts[s];
    if (acc >= target) {
      if (s + 1 == spans.size()) return article;  // keeps everything
      Article out = article;
      out.body = article.body.substr(0, spans[s].end);
      return out;
    }
  }
  return article;  // empty or all sentences needed
}

// ---------------------------------------------------------------------------
// Ingestion. Article files are UTF-8 JSON lines with fields id, language,
// published_at (ISO 8601 date), outlet, body and optional report_id, region,
// country. When a country→region table is supplied, an article without an
// explicit region gets the region of its country.
// ---------------------------------------------------------------------------

using RegionTable = std::unordered_map<std::string, std::string>;

struct LoadReport {
  std::vector<Article> articles;
  std::size_t malformed = 0;       // unparsable or incomplete lines
  std::size_t below_min_chars = 0; // valid records filtered by length
  std::size_t duplicates = 0;      // repeated ids (first occurrence kept)
};

inline LoadReport load_articles(const std::string& path, std::size_t min_chars,
                                const RegionTable& regions = {}) {
  LoadReport report;
  std::unordered_set<std::string> seen;
  for (const auto& line : read_lines(path, "corpus")) {
    if (trim(line).empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      ++report.malformed;
      continue;
    }
    auto str = [&](const char* key) -> std::optional<std::string> {
      auto it = j.find(key);
      if (it == j.end() || !it->is_string()) return std::nullopt;
      return it->get<std::string>();
    };
    auto id = str("id");
    auto language = str("language");
    auto published = str("published_at");
    auto outlet = str("outlet");
    auto body = str("body");
    if (!id || !language || !published || !outlet || !body) {
      ++report.malformed;
      continue;
    }
    auto date = parse_date(*published);
    if (!date) {
      ++report.malformed;
      continue;
    }
    if (utf8::length(*body) < min_chars) {
      ++report.below_min_chars;
      continue;
    }
    if (!seen.insert(*id).second) {
      ++report.duplicates;
      continue;
    }
    Article a;
    a.id = *id;
    a.language = *language;
    a.published_at = *date;
    a.outlet = *outlet;
    a.body = *body;
    if (auto r = str("report_id")) a.report_id = *r;
    if (auto r = str("region")) a.region = *r;
    if (a.region.empty()) {
      if (auto c = str("country")) {
        auto it = regions.find(*c);
        if (it != regions.end()) a.region = it->second;
      }
    }
    report.articles.push_back(std::move(a));
  }
  return report;
}

struct SpanLoadReport {
  std::vector<AnnotatedSpan> spans;
  std::size_t malformed = 0;
};

// Annotated-span files: JSON lines with doc_id, sentence, frame_code,
// annotator_count.
inline SpanLoadReport load_spans(const std::string& path) {
  SpanLoadReport report;
  for (const auto& line : read_lines(path, "corpus")) {
    if (trim(line).empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("doc_id") ||
        !j.contains("sentence") || !j.contains("frame_code")) {
      ++report.malformed;
      continue;
    }
    std::optional<Frame> frame;
    if (j["frame_code"].is_number()) frame = Frame::parse(std::to_string(j["frame_code"].get<double>()));
    else if (j["frame_code"].is_string()) frame = Frame::parse(j["frame_code"].get<std::string>());
    if (!frame || !j["doc_id"].is_string() || !j["sentence"].is_string()) {
      ++report.malformed;
      continue;
    }
    AnnotatedSpan s;
    s.doc_id = j["doc_id"].get<std::string>();
    s.sentence = j["sentence"].get<std::string>();
    s.frame = *frame;
    s.annotator_count = j.value("annotator_count", 1);
    if (s.annotator_count < 1) {
      ++report.malformed;
      continue;
    }
    report.spans.push_back(std::move(s));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Per-language resources shipped as data files.
// ---------------------------------------------------------------------------

using StopwordSet = std::unordered_set<std::string>;

inline StopwordSet load_word_set(const std::string& path) {
  StopwordSet set;
  for (const auto& line : read_lines(path, "corpus")) {
    std::string w = trim(line);
    if (w.empty() || w[0] == '#') continue;
    set.insert(utf8::lowercase(w));
  }
  return set;
}

inline AbbreviationSet load_abbreviations(const std::string& path) { return load_word_set(path); }
inline StopwordSet load_stopwords(const std::string& path) { return load_word_set(path); }

inline RegionTable load_region_table(const std::string& path) {
  RegionTable table;
  for (const auto& line : read_lines(path, "corpus")) {
    if (trim(line).empty() || line[0] == '#') continue;
    auto parts = split(line, '\t');
    if (parts.size() != 2) throw Error("corpus", "region table line is not country<TAB>region: " + line);
    table[trim(parts[0])] = trim(parts[1]);
  }
  return table;
}

}  // namespace framekit
