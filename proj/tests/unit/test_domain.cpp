#include <catch2/catch_amalgamated.hpp>

#include "finground/domain.hpp"
#include "finground/util.hpp"

using namespace finground;

TEST_CASE("normalize_number recognizes the house formats") {
  SECTION("currency with scale word") {
    auto v = normalize_number("$4.2 billion");
    CHECK(v.magnitude == Decimal::parse("4200000000"));
    CHECK(v.unit == Unit::currency("USD"));
    CHECK(v.scale == 1000000000LL);
  }
  SECTION("accounting negative") {
    auto v = normalize_number("(1,250)");
    CHECK(v.magnitude == Decimal::parse("-1250"));
    CHECK(v.unit.kind == UnitKind::count);
  }
  SECTION("percent") {
    auto v = normalize_number("62.4%");
    CHECK(v.magnitude == Decimal::parse("62.4"));
    CHECK(v.unit.kind == UnitKind::percent);
  }
  SECTION("attached scale letter") {
    CHECK(normalize_number("$42.3B").magnitude == Decimal::parse("42300000000"));
    CHECK(normalize_number("3.5K").magnitude == Decimal::parse("3500"));
    CHECK(normalize_number("7M shares").unit.kind == UnitKind::shares);
  }
  SECTION("percentage points are their own unit") {
    CHECK(normalize_number("3.2pp").unit.kind == UnitKind::percentage_points);
    CHECK(normalize_number("3.2 percentage points").unit.kind == UnitKind::percentage_points);
  }
  SECTION("ratio and foreign currency") {
    CHECK(normalize_number("1.8x").unit.kind == UnitKind::ratio);
    auto v = normalize_number("1,250 EUR");
    CHECK(v.unit == Unit::currency("EUR"));
  }
  SECTION("negatives") {
    CHECK(normalize_number("-5.3%").magnitude == Decimal::parse("-5.3"));
    CHECK(normalize_number("($1,250)").magnitude == Decimal::parse("-1250"));
  }
  SECTION("rejects text without a numeric token") {
    CHECK_THROWS_AS(normalize_number("strong demand"), NotNumeric);
    CHECK_THROWS_AS(normalize_number("  "), NotNumeric);
  }
}

TEST_CASE("canonical formatting") {
  NumericValue usd{Decimal::parse("4200000000"), Unit::currency("USD"), 1000000000LL, ""};
  CHECK(format_numeric(usd) == "$4,200,000,000");
  NumericValue pct{Decimal::parse("62.4"), Unit::percent(), 1, ""};
  CHECK(format_numeric(pct) == "62.4%");
  NumericValue neg{Decimal::parse("-1250"), Unit::count(), 1, ""};
  CHECK(format_numeric(neg) == "-1,250");
  NumericValue shares{Decimal::parse("1234567"), Unit::shares(), 1, ""};
  CHECK(format_numeric(shares) == "1,234,567 shares");
  NumericValue eur{Decimal::parse("1250"), Unit::currency("EUR"), 1, ""};
  CHECK(format_numeric(eur) == "1,250 EUR");
}

TEST_CASE("parse/format round-trip on canonical values") {
  Rng rng(7);
  std::vector<Unit> units = {Unit::currency("USD"), Unit::percent(), Unit::percentage_points(),
                             Unit::ratio(), Unit::shares(), Unit::count(), Unit::currency("EUR")};
  for (int i = 0; i < 300; ++i) {
    long long coeff = rng.next_in(-99999999LL, 99999999LL);
    int exp = static_cast<int>(rng.next_in(-4, 3));
    NumericValue v{Decimal(coeff, exp), units[static_cast<std::size_t>(rng.next_below(units.size()))], 1, ""};
    NumericValue back = normalize_number(format_numeric(v));
    CHECK(back == v);
  }
}

TEST_CASE("numeric_equal tolerance semantics") {
  auto pct = [](const char* s) {
    return NumericValue{Decimal::parse(s), Unit::percent(), 1, s};
  };
  Decimal tol = Decimal::parse("0.005");
  CHECK(numeric_equal(pct("58.3"), pct("58.1"), tol));
  CHECK_FALSE(numeric_equal(pct("45.2"), pct("42.3"), tol));
  CHECK(numeric_equal(pct("0"), pct("0"), tol));

  SECTION("unit mismatch throws") {
    NumericValue usd{Decimal::parse("58.1"), Unit::currency("USD"), 1, ""};
    CHECK_THROWS_AS(numeric_equal(pct("58.1"), usd, tol), UnitMismatch);
    NumericValue pp{Decimal::parse("58.1"), Unit::percentage_points(), 1, ""};
    CHECK_THROWS_AS(numeric_equal(pct("58.1"), pp, tol), UnitMismatch);
  }
  SECTION("zero-adjacent fallback") {
    NumericValue a{Decimal(1, -10), Unit::count(), 1, ""};
    NumericValue b{Decimal(-1, -10), Unit::count(), 1, ""};
    CHECK(numeric_equal(a, b, Decimal(0)));
  }
  SECTION("symmetric, reflexive, monotone in tolerance") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
      NumericValue a{Decimal(rng.next_in(-100000, 100000), -2), Unit::percent(), 1, ""};
      NumericValue b{Decimal(rng.next_in(-100000, 100000), -2), Unit::percent(), 1, ""};
      Decimal t(rng.next_in(0, 100), -3);
      CHECK(numeric_equal(a, a, t));
      CHECK(numeric_equal(a, b, t) == numeric_equal(b, a, t));
      if (numeric_equal(a, b, t)) CHECK(numeric_equal(a, b, t + Decimal(1, -3)));
    }
  }
}

TEST_CASE("parse_period recognizes the house formats") {
  SECTION("quarter") {
    auto p = parse_period("Q4 2023");
    CHECK(p.kind == PeriodKind::quarter);
    CHECK(p.year == 2023);
    CHECK(p.quarter == 4);
  }
  SECTION("fiscal year") {
    auto p = parse_period("FY2024");
    CHECK(p == FiscalPeriod::fiscal(2024));
  }
  SECTION("year ended") {
    auto p = parse_period("year ended December 31, 2023");
    CHECK(p.kind == PeriodKind::fiscal_year);
    CHECK(p.year == 2023);
    REQUIRE(p.end.has_value());
    CHECK(p.end->to_string() == "2023-12-31");
  }
  SECTION("bare year and date") {
    CHECK(parse_period("in 2022, revenue grew").year == 2022);
    CHECK(parse_period("as of 2023-06-30").kind == PeriodKind::date_point);
  }
  SECTION("context year resolves bare quarters") {
    auto p = parse_period("in Q3", 2024);
    CHECK(p == FiscalPeriod::quarterly(2024, 3));
    CHECK(parse_period("in Q3").kind == PeriodKind::unspecified);
  }
  SECTION("fallback is unspecified, never a throw") {
    CHECK(parse_period("strong demand").kind == PeriodKind::unspecified);
    CHECK(parse_period("").kind == PeriodKind::unspecified);
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
      std::string junk;
      for (int k = 0; k < 12; ++k) junk += static_cast<char>(32 + rng.next_below(95));
      CHECK_NOTHROW(parse_period(junk));
    }
  }
}

TEST_CASE("find_periods masks nested matches") {
  auto hits = find_periods("Compare gross margin in Q3 2023 vs Q3 2024");
  REQUIRE(hits.size() == 2);
  CHECK(hits[0].period == FiscalPeriod::quarterly(2023, 3));
  CHECK(hits[1].period == FiscalPeriod::quarterly(2024, 3));

  auto ye = find_periods("for the year ended December 31, 2023");
  REQUIRE(ye.size() == 1);
  CHECK(ye[0].period.kind == PeriodKind::fiscal_year);
}

TEST_CASE("period helpers") {
  CHECK(prior_year(FiscalPeriod::quarterly(2024, 3)) == FiscalPeriod::quarterly(2023, 3));
  CHECK(prior_quarter(FiscalPeriod::quarterly(2024, 1)) == FiscalPeriod::quarterly(2023, 4));
  CHECK(prior_quarter(FiscalPeriod::quarterly(2024, 3)) == FiscalPeriod::quarterly(2024, 2));
  CHECK(period_matches(FiscalPeriod::fiscal(2023), parse_period("year ended December 31, 2023")));
}

TEST_CASE("provenance invariants") {
  ProvenanceTuple p{"doc", "sec", 2, ElementType::paragraph, {}};
  CHECK_NOTHROW(p.validate());
  p.element_type = ElementType::table_cell;
  CHECK_THROWS_AS(p.validate(), ContractViolation);
  p.cell = CellAddress{"t1", "Revenue", "FY2023", 0, 0};
  CHECK_NOTHROW(p.validate());
  ProvenanceTuple bad{"", "sec", 1, ElementType::paragraph, {}};
  CHECK_THROWS_AS(bad.validate(), ContractViolation);
}
