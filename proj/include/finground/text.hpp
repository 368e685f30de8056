#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace finground {

struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;  // half-open
  std::string_view view(std::string_view s) const { return s.substr(begin, end - begin); }
};

inline bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
inline bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
inline bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Whitespace-delimited token spans; the unit for edit distance and chunk
// sizing throughout the project.
inline std::vector<TokenSpan> ws_tokens(std::string_view s) {
  std::vector<TokenSpan> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    if (i >= s.size()) break;
    std::size_t b = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    out.push_back({b, i});
  }
  return out;
}

inline std::vector<std::string> ws_token_strings(std::string_view s) {
  std::vector<std::string> out;
  for (const auto& t : ws_tokens(s)) out.emplace_back(t.view(s));
  return out;
}

// Lowercased index terms: maximal runs of [alnum], keeping '.' between
// digits so "45.2" stays one term. Used by BM25, overlap scoring and the
// hashed embedding stub.
inline std::vector<std::string> index_terms(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool keep = is_alnum(c);
    if (!keep && c == '.' && !cur.empty() && is_digit(cur.back()) && i + 1 < s.size() &&
        is_digit(s[i + 1]))
      keep = true;
    if (keep) {
      cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Fraction of `a`'s distinct terms that occur in `b`; 0 when `a` has none.
inline double term_overlap(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.empty()) return 0.0;
  std::vector<std::string> da = a, db = b;
  std::sort(da.begin(), da.end());
  da.erase(std::unique(da.begin(), da.end()), da.end());
  std::sort(db.begin(), db.end());
  std::size_t hit = 0;
  for (const auto& t : da)
    if (std::binary_search(db.begin(), db.end(), t)) ++hit;
  return static_cast<double>(hit) / static_cast<double>(da.size());
}

// Case-insensitive substring search; npos when absent.
inline std::size_t find_ci(std::string_view hay, std::string_view needle, std::size_t from = 0) {
  if (needle.empty() || hay.size() < needle.size()) return std::string_view::npos;
  for (std::size_t i = from; i + needle.size() <= hay.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < needle.size(); ++j) {
      if (std::tolower(static_cast<unsigned char>(hay[i + j])) !=
          std::tolower(static_cast<unsigned char>(needle[j]))) {
        ok = false;
        break;
      }
    }
    if (ok) return i;
  }
  return std::string_view::npos;
}

// Case-insensitive whole-word containment: the match may not butt against
// letters or digits on either side.
inline bool contains_word_ci(std::string_view hay, std::string_view word) {
  std::size_t at = 0;
  while ((at = find_ci(hay, word, at)) != std::string_view::npos) {
    bool left_ok = at == 0 || !is_alnum(hay[at - 1]);
    std::size_t after = at + word.size();
    bool right_ok = after >= hay.size() || !is_alnum(hay[after]);
    if (left_ok && right_ok) return true;
    ++at;
  }
  return false;
}

// Sentence spans. Splits after '.', '!' or '?' followed by whitespace (or at
// end of text); a dot between digits never ends a sentence.
inline std::vector<TokenSpan> sentence_spans(std::string_view s) {
  std::vector<TokenSpan> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool boundary = false;
    if (c == '!' || c == '?') {
      boundary = true;
    } else if (c == '.') {
      bool decimal = i > 0 && is_digit(s[i - 1]) && i + 1 < s.size() && is_digit(s[i + 1]);
      if (!decimal && (i + 1 >= s.size() || is_space(s[i + 1]))) boundary = true;
    } else if (c == '\n') {
      boundary = true;
    }
    if (boundary) {
      std::size_t end = (c == '\n') ? i : i + 1;
      while (start < end && is_space(s[start])) ++start;
      if (end > start) out.push_back({start, end});
      start = i + 1;
    }
  }
  while (start < s.size() && is_space(s[start])) ++start;
  if (start < s.size()) {
    std::size_t end = s.size();
    while (end > start && is_space(s[end - 1])) --end;
    if (end > start) out.push_back({start, end});
  }
  return out;
}

// Classic Levenshtein over token sequences.
inline int token_edit_distance(const std::vector<std::string>& a,
                               const std::vector<std::string>& b) {
  const std::size_t m = a.size(), n = b.size();
  std::vector<int> row(n + 1);
  for (std::size_t j = 0; j <= n; ++j) row[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= m; ++i) {
    int prev = row[0];
    row[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= n; ++j) {
      int old = row[j];
      int sub = prev + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = std::min({sub, row[j] + 1, row[j - 1] + 1});
      prev = old;
    }
  }
  return row[n];
}

struct FuzzyWindow {
  std::size_t token_begin = 0;  // token indices into the haystack
  std::size_t token_end = 0;    // half-open
  int distance = 0;
  bool found = false;
};

// Best contiguous token window of `hay` by edit distance to `needle` tokens.
// Ties prefer the leftmost, then the shortest window.
inline FuzzyWindow best_token_window(const std::vector<std::string>& hay,
                                     const std::vector<std::string>& needle) {
  FuzzyWindow best;
  if (needle.empty() || hay.empty()) return best;
  const std::size_t n = needle.size();
  std::size_t lo = n > 3 ? n - 3 : 1;
  std::size_t hi = n + 3;
  for (std::size_t start = 0; start < hay.size(); ++start) {
    for (std::size_t len = lo; len <= hi && start + len <= hay.size(); ++len) {
      std::vector<std::string> window(hay.begin() + static_cast<std::ptrdiff_t>(start),
                                      hay.begin() + static_cast<std::ptrdiff_t>(start + len));
      int d = token_edit_distance(window, needle);
      if (!best.found || d < best.distance ||
          (d == best.distance && start == best.token_begin && len < best.token_end - best.token_begin)) {
        best = {start, start + len, d, true};
      }
    }
  }
  return best;
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace finground
