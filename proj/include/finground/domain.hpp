#pragma once

#include <algorithm>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "finground/decimal.hpp"
#include "finground/errors.hpp"
#include "finground/text.hpp"

namespace finground {

// ---------------------------------------------------------------------------
// Units and numeric values
// ---------------------------------------------------------------------------

enum class UnitKind { currency, percent, percentage_points, ratio, shares, count };

inline const char* unit_kind_name(UnitKind k) {
  switch (k) {
    case UnitKind::currency: return "currency";
    case UnitKind::percent: return "percent";
    case UnitKind::percentage_points: return "percentage_points";
    case UnitKind::ratio: return "ratio";
    case UnitKind::shares: return "shares";
    case UnitKind::count: return "count";
  }
  return "count";
}

inline UnitKind unit_kind_from_name(std::string_view s) {
  if (s == "currency") return UnitKind::currency;
  if (s == "percent") return UnitKind::percent;
  if (s == "percentage_points" || s == "pp") return UnitKind::percentage_points;
  if (s == "ratio") return UnitKind::ratio;
  if (s == "shares") return UnitKind::shares;
  if (s == "count") return UnitKind::count;
  throw SchemaError("unknown unit kind: " + std::string(s));
}

struct Unit {
  UnitKind kind = UnitKind::count;
  std::string currency_code = "USD";  // meaningful only for kind == currency

  static Unit currency(std::string code = "USD") { return {UnitKind::currency, std::move(code)}; }
  static Unit percent() { return {UnitKind::percent, {}}; }
  static Unit percentage_points() { return {UnitKind::percentage_points, {}}; }
  static Unit ratio() { return {UnitKind::ratio, {}}; }
  static Unit shares() { return {UnitKind::shares, {}}; }
  static Unit count() { return {UnitKind::count, {}}; }

  friend bool operator==(const Unit& a, const Unit& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == UnitKind::currency) return a.currency_code == b.currency_code;
    return true;
  }
  friend bool operator!=(const Unit& a, const Unit& b) { return !(a == b); }
};

// A parsed magnitude. `scale` records the power-of-ten multiplier that was
// already applied while parsing ("$4.2B" stores magnitude 4.2e9, scale 1e9);
// it is provenance metadata and excluded from equality, as is raw_text.
// Percent values are stored as written: 62.4 means 62.4%.
struct NumericValue {
  Decimal magnitude;
  Unit unit;
  long long scale = 1;  // one of 1, 1e3, 1e6, 1e9
  std::string raw_text;

  friend bool operator==(const NumericValue& a, const NumericValue& b) {
    return a.magnitude == b.magnitude && a.unit == b.unit;
  }
  friend bool operator!=(const NumericValue& a, const NumericValue& b) { return !(a == b); }
};

namespace detail {

inline std::string group_thousands(std::string_view digits) {
  std::string out;
  int lead = static_cast<int>(digits.size()) % 3;
  if (lead == 0) lead = 3;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (static_cast<int>(i) - lead) % 3 == 0) out += ',';
    out += digits[i];
  }
  return out;
}

}  // namespace detail

// Canonical text form: sign, grouped integer part, '.', up to 4 fraction
// digits, unit suffix ("%", "pp", "x", " shares", " <code>"); USD renders
// with a leading "$". parse(format(v)) == v whenever v's magnitude carries
// at most 4 fraction digits.
inline std::string format_numeric(const NumericValue& v) {
  Decimal d = v.magnitude.rounded_to_fraction_digits(4);
  bool neg = d.sign() < 0;
  std::string plain = d.abs().to_string();
  std::string ipart = plain, fpart;
  if (auto dot = plain.find('.'); dot != std::string::npos) {
    ipart = plain.substr(0, dot);
    fpart = plain.substr(dot + 1);
  }
  std::string out;
  if (neg) out += '-';
  bool usd = v.unit.kind == UnitKind::currency && v.unit.currency_code == "USD";
  if (usd) out += '$';
  out += detail::group_thousands(ipart);
  if (!fpart.empty()) {
    out += '.';
    out += fpart;
  }
  switch (v.unit.kind) {
    case UnitKind::percent: out += '%'; break;
    case UnitKind::percentage_points: out += "pp"; break;
    case UnitKind::ratio: out += 'x'; break;
    case UnitKind::shares: out += " shares"; break;
    case UnitKind::currency:
      if (!usd) out += " " + v.unit.currency_code;
      break;
    case UnitKind::count: break;
  }
  return out;
}

// Parses the first numeric mention of `text` into a canonical NumericValue.
// Recognizes $, %, pp, thousand/million/billion/K/M/B suffixes, parenthesized
// negatives and comma grouping. Throws NotNumeric when no numeric token is
// found.
inline NumericValue normalize_number(std::string_view text) {
  if (trim(text).empty()) throw NotNumeric("empty text");

  // Locate the first digit.
  std::size_t num_begin = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (is_digit(text[i])) {
      num_begin = i;
      break;
    }
  }
  if (num_begin == std::string_view::npos) throw NotNumeric("no numeric token in: " + std::string(text));

  // Scan backwards for sign, currency marker and an opening parenthesis.
  bool negative = false;
  bool saw_dollar = false;
  bool open_paren = false;
  for (std::size_t i = num_begin; i-- > 0;) {
    char c = text[i];
    if (c == '$') {
      saw_dollar = true;
    } else if (c == '-') {
      negative = true;
    } else if (c == '(') {
      open_paren = true;
      break;
    } else if (is_space(c)) {
      continue;
    } else if (static_cast<unsigned char>(c) == 0x92 && i >= 2 &&
               static_cast<unsigned char>(text[i - 1]) == 0x88 &&
               static_cast<unsigned char>(text[i - 2]) == 0xE2) {
      negative = true;  // UTF-8 minus sign
      i -= 2;
    } else {
      break;
    }
  }

  // Digits, comma groups, optional fraction.
  std::string digits;
  std::size_t i = num_begin;
  while (i < text.size() && (is_digit(text[i]) || text[i] == ',')) {
    if (text[i] != ',') digits += text[i];
    ++i;
  }
  if (i < text.size() && text[i] == '.' && i + 1 < text.size() && is_digit(text[i + 1])) {
    digits += '.';
    ++i;
    while (i < text.size() && is_digit(text[i])) {
      digits += text[i];
      ++i;
    }
  }
  Decimal magnitude = Decimal::parse(digits);

  // Suffixes: optional scale word/letter, then an optional unit.
  long long scale = 1;
  std::optional<Unit> unit;

  auto word_at = [&](std::size_t pos) -> std::pair<std::string, std::size_t> {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    std::size_t b = pos;
    while (pos < text.size() &&
           (is_alnum(text[pos]) || text[pos] == '-' || (text[pos] == '%' && pos == b)))
      ++pos;
    return {std::string(text.substr(b, pos - b)), pos};
  };

  // Attached run first ("4.2B", "3.2pp", "1.8x", "62.4%").
  if (i < text.size() && text[i] == '%') {
    unit = Unit::percent();
    ++i;
  } else if (i < text.size() && is_alnum(text[i])) {
    std::size_t b = i;
    while (i < text.size() && is_alnum(text[i])) ++i;
    std::string run = to_lower(text.substr(b, i - b));
    if (run == "b" || run == "bn") {
      scale = 1000000000LL;
    } else if (run == "m" || run == "mm" || run == "mn") {
      scale = 1000000LL;
    } else if (run == "k") {
      scale = 1000LL;
    } else if (run == "pp") {
      unit = Unit::percentage_points();
    } else if (run == "x") {
      unit = Unit::ratio();
    } else {
      i = b;  // not a suffix; leave for the word scan below
    }
  }

  // Word suffixes, at most a scale word followed by a unit word.
  for (int pass = 0; pass < 2 && !unit; ++pass) {
    auto [word, next] = word_at(i);
    if (word.empty()) break;
    std::string lw = to_lower(word);
    if (scale == 1 && (lw == "billion" || lw == "bn")) {
      scale = 1000000000LL;
      i = next;
    } else if (scale == 1 && lw == "million") {
      scale = 1000000LL;
      i = next;
    } else if (scale == 1 && lw == "thousand") {
      scale = 1000LL;
      i = next;
    } else if (lw == "percentage" || lw == "percentage-points") {
      unit = Unit::percentage_points();  // "percentage points" / "percentage-points"
      i = next;
    } else if (lw == "pp") {
      unit = Unit::percentage_points();
      i = next;
    } else if (lw == "%" || lw == "percent") {
      unit = Unit::percent();
      i = next;
    } else if (lw == "shares") {
      unit = Unit::shares();
      i = next;
    } else if (word.size() == 3 && std::all_of(word.begin(), word.end(), [](char c) {
                 return c >= 'A' && c <= 'Z';
               })) {
      unit = Unit::currency(word);
      i = next;
    } else {
      break;
    }
  }

  // Closing parenthesis marks an accounting negative.
  if (open_paren) {
    std::size_t j = i;
    while (j < text.size() && text[j] == ' ') ++j;
    if (j < text.size() && text[j] == ')') negative = true;
  }

  if (!unit) unit = saw_dollar ? Unit::currency("USD") : Unit::count();
  if (unit->kind != UnitKind::currency && saw_dollar) unit = Unit::currency("USD");

  if (scale != 1) magnitude = magnitude * Decimal(scale);
  if (negative) magnitude = -magnitude;

  NumericValue out;
  out.magnitude = magnitude;
  out.unit = *unit;
  out.scale = scale;
  out.raw_text = trim(text);
  return out;
}

// True iff units are compatible and |a-b| <= rel_tol * max(|a|,|b|), with an
// absolute epsilon fallback (1e-9) when both magnitudes hug zero. Comparison
// is exact decimal arithmetic, so tolerance boundaries are sharp.
inline bool numeric_equal(const NumericValue& a, const NumericValue& b, const Decimal& rel_tol) {
  if (rel_tol.sign() < 0) throw ContractViolation("rel_tol must be >= 0");
  if (a.unit != b.unit)
    throw UnitMismatch(std::string("cannot compare ") + unit_kind_name(a.unit.kind) + " with " +
                       unit_kind_name(b.unit.kind));
  Decimal diff = (a.magnitude - b.magnitude).abs();
  Decimal mx = std::max(a.magnitude.abs(), b.magnitude.abs(),
                        [](const Decimal& x, const Decimal& y) { return x < y; });
  if (diff <= rel_tol * mx) return true;
  static const Decimal eps(1, -9);
  return a.magnitude.abs() <= eps && b.magnitude.abs() <= eps;
}

// ---------------------------------------------------------------------------
// Calendar dates and fiscal periods
// ---------------------------------------------------------------------------

struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  bool valid() const {
    static const int md[] = {31, 29, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    return year >= 1 && month >= 1 && month <= 12 && day >= 1 && day <= md[month - 1];
  }
  static std::optional<Date> parse(std::string_view s) {  // "YYYY-MM-DD"
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    auto num = [&](std::size_t b, std::size_t n) -> int {
      int v = 0;
      for (std::size_t i = b; i < b + n; ++i) {
        if (!is_digit(s[i])) return -1;
        v = v * 10 + (s[i] - '0');
      }
      return v;
    };
    Date d{num(0, 4), num(5, 2), num(8, 2)};
    if (!d.valid()) return std::nullopt;
    return d;
  }
  std::string to_string() const {
    char buf[11];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
    return buf;
  }
  friend auto operator<=>(const Date&, const Date&) = default;
};

enum class PeriodKind { fiscal_year, quarter, date_point, date_range, unspecified };

inline const char* period_kind_name(PeriodKind k) {
  switch (k) {
    case PeriodKind::fiscal_year: return "fiscal_year";
    case PeriodKind::quarter: return "quarter";
    case PeriodKind::date_point: return "date_point";
    case PeriodKind::date_range: return "date_range";
    case PeriodKind::unspecified: return "unspecified";
  }
  return "unspecified";
}

inline PeriodKind period_kind_from_name(std::string_view s) {
  if (s == "fiscal_year") return PeriodKind::fiscal_year;
  if (s == "quarter") return PeriodKind::quarter;
  if (s == "date_point") return PeriodKind::date_point;
  if (s == "date_range") return PeriodKind::date_range;
  if (s == "unspecified") return PeriodKind::unspecified;
  throw SchemaError("unknown period kind: " + std::string(s));
}

struct FiscalPeriod {
  PeriodKind kind = PeriodKind::unspecified;
  int year = 0;
  std::optional<int> quarter;  // present iff kind == quarter
  std::optional<Date> start;
  std::optional<Date> end;

  bool specified() const { return kind != PeriodKind::unspecified; }

  static FiscalPeriod fiscal(int y) { return {PeriodKind::fiscal_year, y, {}, {}, {}}; }
  static FiscalPeriod quarterly(int y, int q) { return {PeriodKind::quarter, y, q, {}, {}}; }
  static FiscalPeriod at(Date d) { return {PeriodKind::date_point, d.year, {}, d, d}; }
  static FiscalPeriod none() { return {}; }

  void validate() const {
    if ((kind == PeriodKind::quarter) != quarter.has_value())
      throw ContractViolation("quarter field present iff kind == quarter");
    if (quarter && (*quarter < 1 || *quarter > 4)) throw ContractViolation("quarter out of range");
    if (start && end && *end < *start) throw ContractViolation("period start > end");
  }

  std::string label() const {
    switch (kind) {
      case PeriodKind::fiscal_year: return "FY" + std::to_string(year);
      case PeriodKind::quarter: return "Q" + std::to_string(quarter.value_or(0)) + " " + std::to_string(year);
      case PeriodKind::date_point: return start ? start->to_string() : std::to_string(year);
      case PeriodKind::date_range:
        return (start ? start->to_string() : "?") + ".." + (end ? end->to_string() : "?");
      case PeriodKind::unspecified: return "";
    }
    return "";
  }

  friend bool operator==(const FiscalPeriod& a, const FiscalPeriod& b) {
    return a.kind == b.kind && a.year == b.year && a.quarter == b.quarter && a.start == b.start &&
           a.end == b.end;
  }
  friend bool operator!=(const FiscalPeriod& a, const FiscalPeriod& b) { return !(a == b); }
};

// Loose match used when aligning claims to cells: calendar detail (start/end)
// is ignored unless both sides are pure dates.
inline bool period_matches(const FiscalPeriod& a, const FiscalPeriod& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case PeriodKind::fiscal_year: return a.year == b.year;
    case PeriodKind::quarter: return a.year == b.year && a.quarter == b.quarter;
    case PeriodKind::date_point:
    case PeriodKind::date_range: return a.start == b.start && a.end == b.end;
    case PeriodKind::unspecified: return true;
  }
  return false;
}

inline FiscalPeriod prior_year(const FiscalPeriod& p) {
  FiscalPeriod out = p;
  out.year -= 1;
  out.start.reset();
  out.end.reset();
  if (out.kind == PeriodKind::date_point || out.kind == PeriodKind::date_range)
    out.kind = PeriodKind::fiscal_year;
  return out;
}

inline FiscalPeriod prior_quarter(const FiscalPeriod& p) {
  if (p.kind != PeriodKind::quarter) return prior_year(p);
  int q = p.quarter.value_or(1);
  if (q == 1) return FiscalPeriod::quarterly(p.year - 1, 4);
  return FiscalPeriod::quarterly(p.year, q - 1);
}

namespace detail {

inline int month_number(std::string_view name) {
  static const char* names[] = {"january", "february", "march",     "april",   "may",      "june",
                                "july",    "august",   "september", "october", "november", "december"};
  std::string l = to_lower(name);
  for (int m = 0; m < 12; ++m)
    if (l == names[m]) return m + 1;
  return 0;
}

struct PeriodHit {
  std::size_t begin;
  std::size_t end;
  FiscalPeriod period;
};

// All period mentions with their character spans, highest-priority pattern
// first at any overlap.
inline std::vector<PeriodHit> scan_periods(std::string_view text, std::optional<int> context_year) {
  std::string s(text);
  std::vector<bool> taken(s.size(), false);
  std::vector<PeriodHit> hits;

  auto claim_range = [&](std::size_t b, std::size_t e, FiscalPeriod p) {
    for (std::size_t i = b; i < e; ++i)
      if (taken[i]) return;
    for (std::size_t i = b; i < e; ++i) taken[i] = true;
    hits.push_back({b, e, std::move(p)});
  };

  auto for_each = [&](const std::regex& re, auto&& fn) {
    for (auto it = std::sregex_iterator(s.begin(), s.end(), re); it != std::sregex_iterator(); ++it)
      fn(*it);
  };

  static const std::regex re_quarter(R"(\bQ([1-4])[\s\-/]*([0-9]{4})\b)", std::regex::icase);
  for_each(re_quarter, [&](const std::smatch& m) {
    claim_range(static_cast<std::size_t>(m.position(0)),
                static_cast<std::size_t>(m.position(0) + m.length(0)),
                FiscalPeriod::quarterly(std::stoi(m[2]), std::stoi(m[1])));
  });

  static const std::regex re_fy(R"(\bFY\s?([0-9]{4})\b)", std::regex::icase);
  for_each(re_fy, [&](const std::smatch& m) {
    claim_range(static_cast<std::size_t>(m.position(0)),
                static_cast<std::size_t>(m.position(0) + m.length(0)),
                FiscalPeriod::fiscal(std::stoi(m[1])));
  });

  static const std::regex re_year_ended(
      R"(\b(?:fiscal\s+)?(?:year|twelve\s+months)\s+end(?:ed|ing)\s+([A-Za-z]+)\s+([0-9]{1,2}),?\s+([0-9]{4}))",
      std::regex::icase);
  for_each(re_year_ended, [&](const std::smatch& m) {
    int month = month_number(m[1].str());
    if (month == 0) return;
    FiscalPeriod p = FiscalPeriod::fiscal(std::stoi(m[3]));
    p.end = Date{std::stoi(m[3]), month, std::stoi(m[2])};
    claim_range(static_cast<std::size_t>(m.position(0)),
                static_cast<std::size_t>(m.position(0) + m.length(0)), p);
  });

  static const std::regex re_quarter_ended(
      R"(\bthree\s+months\s+end(?:ed|ing)\s+([A-Za-z]+)\s+([0-9]{1,2}),?\s+([0-9]{4}))",
      std::regex::icase);
  for_each(re_quarter_ended, [&](const std::smatch& m) {
    int month = month_number(m[1].str());
    if (month == 0) return;
    FiscalPeriod p = FiscalPeriod::quarterly(std::stoi(m[3]), (month + 2) / 3);
    p.end = Date{std::stoi(m[3]), month, std::stoi(m[2])};
    claim_range(static_cast<std::size_t>(m.position(0)),
                static_cast<std::size_t>(m.position(0) + m.length(0)), p);
  });

  static const std::regex re_month_date(
      R"(\b([A-Za-z]+)\s+([0-9]{1,2}),?\s+([0-9]{4})\b)");
  for_each(re_month_date, [&](const std::smatch& m) {
    int month = month_number(m[1].str());
    if (month == 0) return;
    Date d{std::stoi(m[3]), month, std::stoi(m[2])};
    if (!d.valid()) return;
    claim_range(static_cast<std::size_t>(m.position(0)),
                static_cast<std::size_t>(m.position(0) + m.length(0)), FiscalPeriod::at(d));
  });

  static const std::regex re_iso(R"(\b([0-9]{4})-([0-9]{2})-([0-9]{2})\b)");
  for_each(re_iso, [&](const std::smatch& m) {
    Date d{std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3])};
    if (!d.valid()) return;
    claim_range(static_cast<std::size_t>(m.position(0)),
                static_cast<std::size_t>(m.position(0) + m.length(0)), FiscalPeriod::at(d));
  });

  if (context_year) {
    static const std::regex re_bare_q(R"(\bQ([1-4])\b)", std::regex::icase);
    for_each(re_bare_q, [&](const std::smatch& m) {
      claim_range(static_cast<std::size_t>(m.position(0)),
                  static_cast<std::size_t>(m.position(0) + m.length(0)),
                  FiscalPeriod::quarterly(*context_year, std::stoi(m[1])));
    });
  }

  static const std::regex re_bare_year(R"(\b((?:19|20|21)[0-9]{2})\b)");
  for_each(re_bare_year, [&](const std::smatch& m) {
    claim_range(static_cast<std::size_t>(m.position(0)),
                static_cast<std::size_t>(m.position(0) + m.length(0)),
                FiscalPeriod::fiscal(std::stoi(m[1])));
  });

  std::sort(hits.begin(), hits.end(),
            [](const PeriodHit& a, const PeriodHit& b) { return a.begin < b.begin; });
  return hits;
}

}  // namespace detail

// All period mentions in reading order, with character spans.
inline std::vector<detail::PeriodHit> find_periods(std::string_view text,
                                                   std::optional<int> context_year = std::nullopt) {
  return detail::scan_periods(text, context_year);
}

// First period mention, or kind=unspecified. Never throws.
inline FiscalPeriod parse_period(std::string_view text,
                                 std::optional<int> context_year = std::nullopt) noexcept {
  try {
    auto hits = detail::scan_periods(text, context_year);
    if (hits.empty()) return FiscalPeriod::none();
    return hits.front().period;
  } catch (...) {
    return FiscalPeriod::none();
  }
}

// ---------------------------------------------------------------------------
// Provenance and table structure
// ---------------------------------------------------------------------------

enum class ElementType { paragraph, heading, list, table, table_cell };

inline const char* element_type_name(ElementType t) {
  switch (t) {
    case ElementType::paragraph: return "paragraph";
    case ElementType::heading: return "heading";
    case ElementType::list: return "list";
    case ElementType::table: return "table";
    case ElementType::table_cell: return "table_cell";
  }
  return "paragraph";
}

inline ElementType element_type_from_name(std::string_view s) {
  if (s == "paragraph") return ElementType::paragraph;
  if (s == "heading") return ElementType::heading;
  if (s == "list") return ElementType::list;
  if (s == "table") return ElementType::table;
  if (s == "table_cell") return ElementType::table_cell;
  throw SchemaError("unknown element type: " + std::string(s));
}

struct CellAddress {
  std::string table_id;
  std::string row_label;
  std::string col_label;
  int row_index = 0;
  int col_index = 0;

  friend bool operator==(const CellAddress& a, const CellAddress& b) {
    return a.table_id == b.table_id && a.row_index == b.row_index && a.col_index == b.col_index &&
           a.row_label == b.row_label && a.col_label == b.col_label;
  }
};

struct ProvenanceTuple {
  std::string document_id;
  std::string section_id;
  int page = 1;
  ElementType element_type = ElementType::paragraph;
  std::optional<CellAddress> cell;  // required when element_type == table_cell

  void validate() const {
    if (document_id.empty() || section_id.empty()) throw ContractViolation("empty provenance field");
    if (page < 1) throw ContractViolation("page must be positive");
    if (element_type == ElementType::table_cell && !cell)
      throw ContractViolation("table_cell provenance requires a cell address");
  }

  friend bool operator==(const ProvenanceTuple& a, const ProvenanceTuple& b) {
    return a.document_id == b.document_id && a.section_id == b.section_id && a.page == b.page &&
           a.element_type == b.element_type && a.cell == b.cell;
  }
};

struct TableCell {
  std::string raw_text;
  std::optional<NumericValue> parsed;
  std::optional<FiscalPeriod> period;
};

struct TableStructure {
  std::string table_id;
  std::string caption;
  int page = 1;
  std::vector<std::string> col_headers;  // flattened paths, " / " separated
  std::vector<std::string> row_headers;
  std::vector<std::vector<TableCell>> cells;  // rows x cols

  int rows() const { return static_cast<int>(row_headers.size()); }
  int cols() const { return static_cast<int>(col_headers.size()); }

  const TableCell& at(int r, int c) const { return cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

  void validate() const {
    if (cells.size() != row_headers.size()) throw TableShapeError("row header count != row count");
    for (const auto& row : cells)
      if (row.size() != col_headers.size())
        throw TableShapeError("table not rectangular: " + table_id);
  }
};

struct Paragraph {
  std::string text;
};

struct Section {
  std::string section_id;
  std::string heading;
  int page = 1;
  std::vector<Paragraph> paragraphs;
};

struct Document {
  std::string id;
  std::string title;
  Date filing_date;
  std::vector<Section> sections;
  std::vector<TableStructure> tables;

  const Section* section(std::string_view sid) const {
    for (const auto& s : sections)
      if (s.section_id == sid) return &s;
    return nullptr;
  }
  const TableStructure* table(std::string_view tid) const {
    for (const auto& t : tables)
      if (t.table_id == tid) return &t;
    return nullptr;
  }
};

// ---------------------------------------------------------------------------
// JSON bindings
// ---------------------------------------------------------------------------

inline void to_json(nlohmann::json& j, const Unit& u) {
  j = {{"kind", unit_kind_name(u.kind)}};
  if (u.kind == UnitKind::currency) j["code"] = u.currency_code;
}
inline void from_json(const nlohmann::json& j, Unit& u) {
  u.kind = unit_kind_from_name(j.at("kind").get<std::string>());
  u.currency_code = j.value("code", "USD");
}

inline void to_json(nlohmann::json& j, const NumericValue& v) {
  j = {{"magnitude", v.magnitude.to_string()}, {"unit", v.unit}, {"scale", v.scale}, {"raw", v.raw_text}};
}
inline void from_json(const nlohmann::json& j, NumericValue& v) {
  v.magnitude = Decimal::parse(j.at("magnitude").get<std::string>());
  v.unit = j.at("unit").get<Unit>();
  v.scale = j.value("scale", 1LL);
  v.raw_text = j.value("raw", "");
}

inline void to_json(nlohmann::json& j, const Date& d) { j = d.to_string(); }
inline void from_json(const nlohmann::json& j, Date& d) {
  auto p = Date::parse(j.get<std::string>());
  if (!p) throw SchemaError("bad date: " + j.get<std::string>());
  d = *p;
}

inline void to_json(nlohmann::json& j, const FiscalPeriod& p) {
  j = {{"kind", period_kind_name(p.kind)}};
  if (p.kind != PeriodKind::unspecified) j["year"] = p.year;
  if (p.quarter) j["quarter"] = *p.quarter;
  if (p.start) j["start"] = *p.start;
  if (p.end) j["end"] = *p.end;
}
inline void from_json(const nlohmann::json& j, FiscalPeriod& p) {
  p.kind = period_kind_from_name(j.at("kind").get<std::string>());
  p.year = j.value("year", 0);
  if (j.contains("quarter")) p.quarter = j.at("quarter").get<int>();
  if (j.contains("start")) p.start = j.at("start").get<Date>();
  if (j.contains("end")) p.end = j.at("end").get<Date>();
}

inline void to_json(nlohmann::json& j, const CellAddress& c) {
  j = {{"table", c.table_id},
       {"row_label", c.row_label},
       {"col_label", c.col_label},
       {"row", c.row_index},
       {"col", c.col_index}};
}
inline void from_json(const nlohmann::json& j, CellAddress& c) {
  c.table_id = j.at("table").get<std::string>();
  c.row_label = j.at("row_label").get<std::string>();
  c.col_label = j.at("col_label").get<std::string>();
  c.row_index = j.at("row").get<int>();
  c.col_index = j.at("col").get<int>();
}

inline void to_json(nlohmann::json& j, const ProvenanceTuple& p) {
  j = {{"document", p.document_id},
       {"section", p.section_id},
       {"page", p.page},
       {"element_type", element_type_name(p.element_type)}};
  if (p.cell) j["cell"] = *p.cell;
}
inline void from_json(const nlohmann::json& j, ProvenanceTuple& p) {
  p.document_id = j.at("document").get<std::string>();
  p.section_id = j.at("section").get<std::string>();
  p.page = j.at("page").get<int>();
  p.element_type = element_type_from_name(j.at("element_type").get<std::string>());
  if (j.contains("cell")) p.cell = j.at("cell").get<CellAddress>();
}

}  // namespace finground
