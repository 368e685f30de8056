#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>

#include "finground/errors.hpp"

namespace finground {

// Exact base-10 fixed-point number: value = coeff * 10^exp.
//
// Additions, subtractions, multiplications and comparisons are exact as long
// as coefficients stay within ~37 decimal digits (they do for filing-scale
// magnitudes and tolerance products). Division rounds the quotient to ~20
// significant digits, half-even. The representation is kept normalized
// (no trailing zeros in coeff, zero is {0,0}) so equal values have equal
// representations.
class Decimal {
 public:
  using i128 = __int128;

  constexpr Decimal() : coeff_(0), exp_(0) {}
  constexpr Decimal(long long v) : coeff_(v), exp_(0) { normalize(); }  // NOLINT: implicit by design
  constexpr Decimal(i128 coeff, int exp) : coeff_(coeff), exp_(exp) { normalize(); }

  // Parses a plain decimal string: optional sign, digits, optional fraction.
  static Decimal parse(std::string_view s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      neg = s[i] == '-';
      ++i;
    }
    i128 coeff = 0;
    int exp = 0;
    bool any_digit = false;
    bool seen_dot = false;
    for (; i < s.size(); ++i) {
      char c = s[i];
      if (c == '.') {
        if (seen_dot) throw NotNumeric("second '.' in decimal literal: " + std::string(s));
        seen_dot = true;
        continue;
      }
      if (c < '0' || c > '9') throw NotNumeric("bad decimal literal: " + std::string(s));
      if (magnitude_digits(coeff) >= kMaxDigits)
        throw NotNumeric("decimal literal too long: " + std::string(s));
      coeff = coeff * 10 + (c - '0');
      if (seen_dot) --exp;
      any_digit = true;
    }
    if (!any_digit) throw NotNumeric("no digits in decimal literal: " + std::string(s));
    return Decimal(neg ? -coeff : coeff, exp);
  }

  i128 coeff() const { return coeff_; }
  int exp() const { return exp_; }
  bool is_zero() const { return coeff_ == 0; }
  int sign() const { return coeff_ == 0 ? 0 : (coeff_ < 0 ? -1 : 1); }

  Decimal operator-() const { return Decimal(-coeff_, exp_); }
  Decimal abs() const { return coeff_ < 0 ? Decimal(-coeff_, exp_) : *this; }

  friend Decimal operator+(const Decimal& a, const Decimal& b) {
    Decimal x = a, y = b;
    align(x, y);
    return Decimal(x.coeff_ + y.coeff_, x.exp_);
  }
  friend Decimal operator-(const Decimal& a, const Decimal& b) { return a + (-b); }

  friend Decimal operator*(const Decimal& a, const Decimal& b) {
    Decimal x = a, y = b;
    // Shrink operands just enough to keep the product within range.
    while (magnitude_digits(x.coeff_) + magnitude_digits(y.coeff_) > kMaxDigits) {
      if (magnitude_digits(x.coeff_) >= magnitude_digits(y.coeff_))
        x = x.rounded_to_digits(magnitude_digits(x.coeff_) - 1);
      else
        y = y.rounded_to_digits(magnitude_digits(y.coeff_) - 1);
    }
    return Decimal(x.coeff_ * y.coeff_, x.exp_ + y.exp_);
  }

  friend Decimal operator/(const Decimal& a, const Decimal& b) {
    if (b.coeff_ == 0) throw DivisionByZero("division by zero");
    if (a.coeff_ == 0) return Decimal();
    Decimal num = a.rounded_to_digits(15);
    Decimal den = b.rounded_to_digits(15);
    int shift = kQuotientDigits + magnitude_digits(den.coeff_) - magnitude_digits(num.coeff_);
    if (shift < 0) shift = 0;
    int room = kMaxDigits - magnitude_digits(num.coeff_);
    if (shift > room) shift = room;
    i128 scaled = num.coeff_ * pow10(shift);
    i128 q = scaled / den.coeff_;
    i128 r = scaled % den.coeff_;
    q += round_half_even_carry(q, r, den.coeff_);
    return Decimal(q, num.exp_ - den.exp_ - shift);
  }

  friend bool operator==(const Decimal& a, const Decimal& b) {
    return a.coeff_ == b.coeff_ && a.exp_ == b.exp_;
  }
  friend bool operator!=(const Decimal& a, const Decimal& b) { return !(a == b); }
  friend bool operator<(const Decimal& a, const Decimal& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Decimal& a, const Decimal& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Decimal& a, const Decimal& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Decimal& a, const Decimal& b) { return cmp(a, b) >= 0; }

  // Exact three-way compare, overflow-safe.
  static int cmp(const Decimal& a, const Decimal& b) {
    if (a.sign() != b.sign()) return a.sign() < b.sign() ? -1 : 1;
    if (a.coeff_ == 0) return 0;
    int oa = magnitude_digits(a.coeff_) + a.exp_;
    int ob = magnitude_digits(b.coeff_) + b.exp_;
    if (oa != ob) return ((oa < ob) == (a.sign() > 0)) ? -1 : 1;
    // Same order of magnitude: aligning costs at most the digit-count gap.
    Decimal x = a, y = b;
    align(x, y);
    if (x.coeff_ == y.coeff_) return 0;
    return x.coeff_ < y.coeff_ ? -1 : 1;
  }

  // Rounds to at most `frac` digits after the decimal point (half-even).
  Decimal rounded_to_fraction_digits(int frac) const {
    if (exp_ >= -frac) return *this;
    int drop = -frac - exp_;
    return dropped(drop);
  }

  // Rounds to at most `digits` significant digits (half-even).
  Decimal rounded_to_digits(int digits) const {
    int have = magnitude_digits(coeff_);
    if (have <= digits) return *this;
    return dropped(have - digits);
  }

  // Plain decimal rendering without exponent, e.g. "-58.1", "4200000000".
  std::string to_string() const {
    i128 c = coeff_ < 0 ? -coeff_ : coeff_;
    std::string digits = c == 0 ? "0" : unsigned_to_string(c);
    std::string out;
    if (coeff_ < 0) out += '-';
    if (exp_ >= 0) {
      out += digits;
      out.append(static_cast<std::size_t>(exp_), '0');
    } else {
      int frac = -exp_;
      if (static_cast<int>(digits.size()) <= frac) {
        out += "0.";
        out.append(static_cast<std::size_t>(frac - static_cast<int>(digits.size())), '0');
        out += digits;
      } else {
        out += digits.substr(0, digits.size() - static_cast<std::size_t>(frac));
        out += '.';
        out += digits.substr(digits.size() - static_cast<std::size_t>(frac));
      }
    }
    return out;
  }

  double to_double() const { return static_cast<double>(std::strtold(to_string().c_str(), nullptr)); }

 private:
  static constexpr int kMaxDigits = 37;
  static constexpr int kQuotientDigits = 20;

  constexpr void normalize() {
    if (coeff_ == 0) {
      exp_ = 0;
      return;
    }
    while (coeff_ % 10 == 0) {
      coeff_ /= 10;
      ++exp_;
    }
  }

  static constexpr int magnitude_digits(i128 v) {
    if (v < 0) v = -v;
    int d = 0;
    while (v > 0) {
      v /= 10;
      ++d;
    }
    return d;
  }

  static constexpr i128 pow10(int n) {
    i128 p = 1;
    for (int i = 0; i < n; ++i) p *= 10;
    return p;
  }

  static i128 round_half_even_carry(i128 q, i128 r, i128 den) {
    if (r < 0) r = -r;
    if (den < 0) den = -den;
    i128 twice = r * 2;
    bool up;
    if (twice > den)
      up = true;
    else if (twice < den)
      up = false;
    else
      up = (q % 2 != 0);  // exact half: round to even
    if (!up) return 0;
    return q < 0 ? -1 : 1;
  }

  // Drops `drop` low digits with half-even rounding.
  Decimal dropped(int drop) const {
    i128 p = pow10(drop);
    i128 q = coeff_ / p;
    i128 r = coeff_ % p;
    q += round_half_even_carry(q, r, p);
    return Decimal(q, exp_ + drop);
  }

  // Brings both to a common exponent; rounds the finer operand when the gap
  // cannot be bridged exactly within the digit budget.
  static void align(Decimal& x, Decimal& y) {
    if (x.exp_ == y.exp_) return;
    Decimal* hi = x.exp_ > y.exp_ ? &x : &y;  // larger exponent, shifted up
    Decimal* lo = x.exp_ > y.exp_ ? &y : &x;
    int gap = hi->exp_ - lo->exp_;
    int room = kMaxDigits - magnitude_digits(hi->coeff_);
    if (gap <= room) {
      hi->coeff_ *= pow10(gap);
      hi->exp_ = lo->exp_;
      return;
    }
    // The fine operand carries digits beyond reachable precision: round it.
    hi->coeff_ *= pow10(room);
    hi->exp_ -= room;
    int still = hi->exp_ - lo->exp_;
    int keep = magnitude_digits(lo->coeff_) - still;
    if (keep < 0) keep = 0;
    *lo = lo->rounded_to_digits(keep);
    if (lo->exp_ < hi->exp_) {  // rounding may still leave a small gap
      int g2 = hi->exp_ - lo->exp_;
      hi->coeff_ *= pow10(g2);
      hi->exp_ = lo->exp_;
    } else if (lo->exp_ > hi->exp_) {
      lo->coeff_ *= pow10(lo->exp_ - hi->exp_);
      lo->exp_ = hi->exp_;
    }
  }

  static std::string unsigned_to_string(i128 v) {
    char buf[48];
    int n = 0;
    while (v > 0) {
      buf[n++] = static_cast<char>('0' + static_cast<int>(v % 10));
      v /= 10;
    }
    std::string s;
    for (int i = n - 1; i >= 0; --i) s += buf[i];
    return s;
  }

  i128 coeff_;
  int exp_;
};

}  // namespace finground
