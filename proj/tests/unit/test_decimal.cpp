#include <catch2/catch_amalgamated.hpp>

#include "finground/decimal.hpp"
#include "finground/util.hpp"

using finground::Decimal;

TEST_CASE("parse and render plain decimals") {
  CHECK(Decimal::parse("0").to_string() == "0");
  CHECK(Decimal::parse("-1250").to_string() == "-1250");
  CHECK(Decimal::parse("58.1").to_string() == "58.1");
  CHECK(Decimal::parse("0.005").to_string() == "0.005");
  CHECK(Decimal::parse("4.2000").to_string() == "4.2");
  CHECK(Decimal::parse("+12.50").to_string() == "12.5");
  CHECK_THROWS_AS(Decimal::parse("abc"), finground::NotNumeric);
  CHECK_THROWS_AS(Decimal::parse("1.2.3"), finground::NotNumeric);
  CHECK_THROWS_AS(Decimal::parse(""), finground::NotNumeric);
}

TEST_CASE("exact add, subtract, multiply") {
  Decimal a = Decimal::parse("58.3");
  Decimal b = Decimal::parse("58.1");
  CHECK((a - b).to_string() == "0.2");
  CHECK((a + b).to_string() == "116.4");
  CHECK((Decimal::parse("0.005") * a).to_string() == "0.2915");
  CHECK((Decimal::parse("4.2") * Decimal(1000000000)).to_string() == "4200000000");
  CHECK((Decimal::parse("-1.005") * Decimal::parse("-1.005")).to_string() == "1.010025");
}

TEST_CASE("comparison is exact at tolerance boundaries") {
  // diff == tol * max exactly: 0.2915 vs 0.005*58.3
  Decimal diff = Decimal::parse("0.2915");
  Decimal rhs = Decimal::parse("0.005") * Decimal::parse("58.3");
  CHECK(diff == rhs);
  CHECK(diff <= rhs);
  CHECK_FALSE(diff < rhs);
  CHECK(Decimal::parse("0.29151") > rhs);
  CHECK(Decimal::parse("-3") < Decimal::parse("2"));
  CHECK(Decimal::parse("-3") < Decimal::parse("-2.9999"));
  CHECK(Decimal::cmp(Decimal::parse("100"), Decimal::parse("99.9999999")) == 1);
}

TEST_CASE("division rounds, everything else stays exact") {
  Decimal q = Decimal::parse("58.1") / Decimal::parse("100");
  CHECK(q.to_string() == "0.581");
  Decimal third = Decimal(1) / Decimal(3);
  CHECK(std::abs(third.to_double() - 1.0 / 3.0) < 1e-15);
  CHECK_THROWS_AS(Decimal(1) / Decimal(0), finground::DivisionByZero);
  CHECK((Decimal(0) / Decimal(7)).is_zero());
}

TEST_CASE("gross margin style recomputation is exact enough") {
  Decimal revenue = Decimal::parse("100");
  Decimal cogs = Decimal::parse("41.9");
  Decimal margin = (revenue - cogs) / revenue * Decimal(100);
  CHECK(margin.to_string() == "58.1");
}

TEST_CASE("rounding helpers") {
  CHECK(Decimal::parse("58.14159").rounded_to_fraction_digits(4).to_string() == "58.1416");
  CHECK(Decimal::parse("58.15").rounded_to_fraction_digits(1).to_string() == "58.2");
  CHECK(Decimal::parse("58.25").rounded_to_fraction_digits(1).to_string() == "58.2");  // half-even
  CHECK(Decimal::parse("123456").rounded_to_digits(3).to_string() == "123000");
}

TEST_CASE("random multiply-compare agrees with long double within noise") {
  finground::Rng rng(42);
  for (int i = 0; i < 500; ++i) {
    long long ai = rng.next_in(-999999, 999999);
    long long bi = rng.next_in(-9999, 9999);
    Decimal a(ai, -2), b(bi, -3);
    long double ref = (static_cast<long double>(ai) * 1e-2L) * (static_cast<long double>(bi) * 1e-3L);
    CHECK(std::abs((a * b).to_double() - static_cast<double>(ref)) <=
          1e-12 * std::max(1.0, std::abs(static_cast<double>(ref))));
  }
}
