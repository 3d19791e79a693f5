// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ssg/rational.h"

#include <cctype>
#include <cmath>
#include <numeric>
#include <ostream>
#include <utility>

#include "ssg/errors.h"

namespace ssg {
namespace {

__extension__ typedef __int128 Int128;

constexpr Int128 kLimit128 = Int128{1} << 62;

// Inline values satisfy |v| < 2^62, matching AssignBig's size test.
bool Fits(Int128 v) { return v > -kLimit128 && v < kLimit128; }

std::uint64_t Gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t Magnitude(std::int64_t v) {
  return v < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(v)
               : static_cast<std::uint64_t>(v);
}

mpz_class ToMpz(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

BigInt Pow10(long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt ParseInteger(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    digits.remove_prefix(1);
  }
  if (!AllDigits(digits)) {
    throw ValidationError("malformed rational '" + std::string(whole) + "'");
  }
  std::string buf(s[0] == '+' ? s.substr(1) : s);
  return BigInt(buf, 10);
}

}  // namespace

Rational::Rational(const BigInt& v) { AssignBig(mpq_class(v)); }

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw ValidationError("zero denominator");
  mpq_class q(numerator, denominator);
  q.canonicalize();
  AssignBig(std::move(q));
}

Rational::Rational(const mpq_class& v) {
  mpq_class q(v);
  q.canonicalize();
  AssignBig(std::move(q));
}

void Rational::AssignBig(mpq_class v) {
  if (mpz_sizeinbase(v.get_num_mpz_t(), 2) <= 62 &&
      mpz_sizeinbase(v.get_den_mpz_t(), 2) <= 62) {
    num_ = mpz_get_si(v.get_num_mpz_t());
    den_ = mpz_get_si(v.get_den_mpz_t());
    big_.reset();
  } else if (big_) {
    *big_ = std::move(v);
  } else {
    big_ = std::make_unique<mpq_class>(std::move(v));
  }
}

mpq_class Rational::mpq() const {
  if (big_) return *big_;
  mpq_class q;
  mpz_set_si(mpq_numref(q.get_mpq_t()), static_cast<long>(num_));
  mpz_set_si(mpq_denref(q.get_mpq_t()), static_cast<long>(den_));
  return q;
}

BigInt Rational::numerator() const {
  return big_ ? BigInt(big_->get_num()) : ToMpz(num_);
}

BigInt Rational::denominator() const {
  return big_ ? BigInt(big_->get_den()) : ToMpz(den_);
}

double Rational::ToDouble() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

int Rational::Compare(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return (a.num_ > b.num_) - (a.num_ < b.num_);
    Int128 l = Int128{a.num_} * b.den_;
    Int128 r = Int128{b.num_} * a.den_;
    return (l > r) - (l < r);
  }
  return cmp(a.mpq(), b.mpq());
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    // Knuth's reduced addition: only gcds of denominators are needed.
    if (den_ == o.den_ && den_ == 1) {
      Int128 n = Int128{num_} + o.num_;
      if (Fits(n)) {
        num_ = static_cast<std::int64_t>(n);
        return *this;
      }
    } else {
      std::uint64_t g = Gcd(static_cast<std::uint64_t>(den_),
                            static_cast<std::uint64_t>(o.den_));
      if (g == 1) {
        Int128 n = Int128{num_} * o.den_ + Int128{o.num_} * den_;
        Int128 d = Int128{den_} * o.den_;
        if (Fits(n) && Fits(d)) {
          num_ = static_cast<std::int64_t>(n);
          den_ = static_cast<std::int64_t>(d);
          return *this;
        }
      } else {
        std::int64_t bg = den_ / static_cast<std::int64_t>(g);
        std::int64_t dg = o.den_ / static_cast<std::int64_t>(g);
        Int128 t = Int128{num_} * dg + Int128{o.num_} * bg;
        if (t == 0) {
          num_ = 0;
          den_ = 1;
          return *this;
        }
        Int128 tm = t % static_cast<Int128>(g);
        std::uint64_t g2 = Gcd(g, static_cast<std::uint64_t>(tm < 0 ? -tm : tm));
        Int128 n = t / static_cast<Int128>(g2);
        Int128 d = Int128{bg} * (o.den_ / static_cast<std::int64_t>(g2));
        if (Fits(n) && Fits(d)) {
          num_ = static_cast<std::int64_t>(n);
          den_ = static_cast<std::int64_t>(d);
          return *this;
        }
      }
    }
  }
  AssignBig(mpq() + o.mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (!o.big_) {
    Rational neg;
    neg.num_ = -o.num_;
    neg.den_ = o.den_;
    return *this += neg;
  }
  AssignBig(mpq() - o.mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    std::int64_t g1 = static_cast<std::int64_t>(
        Gcd(Magnitude(num_), static_cast<std::uint64_t>(o.den_)));
    std::int64_t g2 = static_cast<std::int64_t>(
        Gcd(Magnitude(o.num_), static_cast<std::uint64_t>(den_)));
    Int128 n = Int128{num_ / g1} * (o.num_ / g2);
    Int128 d = Int128{den_ / g2} * (o.den_ / g1);
    if (Fits(n) && Fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
  }
  AssignBig(mpq() * o.mpq());
  return *this;
}

void Rational::SubProduct(const Rational& a, const Rational& b,
                          mpq_class& scratch) {
  if (a.is_zero() || b.is_zero()) return;
  if (!big_ && !a.big_ && !b.big_) {
    Rational p = a;
    p *= b;
    *this -= p;
    return;
  }
  mpq_class self = mpq();
  mpq_mul(scratch.get_mpq_t(), a.mpq().get_mpq_t(), b.mpq().get_mpq_t());
  mpq_sub(self.get_mpq_t(), self.get_mpq_t(), scratch.get_mpq_t());
  AssignBig(std::move(self));
}

Rational Rational::Parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty()) throw ValidationError("empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = ParseInteger(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!AllDigits(den_text)) {
      throw ValidationError("malformed rational '" + std::string(text) + "'");
    }
    BigInt den(std::string(den_text), 10);
    if (den == 0) {
      throw ValidationError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
  }

  // Decimal with optional fraction and exponent.
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    BigInt exp = ParseInteger(s.substr(e + 1), text);
    if (!exp.fits_slong_p() || abs(exp) > 100000) {
      throw ValidationError("exponent out of range in '" + std::string(text) +
                            "'");
    }
    exponent = exp.get_si();
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) ||
      (!int_part.empty() && !AllDigits(int_part)) ||
      (!frac_part.empty() && !AllDigits(frac_part))) {
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  }
  std::string digits = std::string(int_part) + std::string(frac_part);
  BigInt mantissa(digits.empty() ? std::string("0") : digits, 10);
  if (negative) mantissa = -mantissa;
  long scale = exponent - static_cast<long>(frac_part.size());
  if (scale >= 0) return Rational(BigInt(mantissa * Pow10(scale)));
  return Rational(mantissa, Pow10(-scale));
}

std::string Rational::ToString() const {
  if (!big_) {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  if (is_integer()) return big_->get_num().get_str();
  return big_->get_num().get_str() + "/" + big_->get_den().get_str();
}

std::string Rational::ToDecimal(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  if (is_zero()) return "0";
  BigInt num = abs(numerator());
  BigInt den = denominator();

  // Find e with 10^e <= num/den < 10^(e+1).
  long e = static_cast<long>(DecimalDigits(num)) -
           static_cast<long>(DecimalDigits(den));
  auto at_least_pow = [&](long k) {  // num/den >= 10^k
    return k >= 0 ? num >= den * Pow10(k) : num * Pow10(-k) >= den;
  };
  while (!at_least_pow(e)) --e;
  while (at_least_pow(e + 1)) ++e;

  // scaled = num/den * 10^(digits-1-e), rounded half-even to an integer.
  long shift = significant_digits - 1 - e;
  BigInt top = num, bottom = den;
  if (shift >= 0) {
    top *= Pow10(shift);
  } else {
    bottom *= Pow10(-shift);
  }
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(),
              bottom.get_mpz_t());
  BigInt twice = 2 * r;
  if (twice > bottom || (twice == bottom && mpz_odd_p(q.get_mpz_t()))) {
    q += 1;
  }
  if (q == Pow10(significant_digits)) {
    q /= 10;
    ++e;
    --shift;
  }

  std::string digits = q.get_str();
  long point = -shift;  // value = q * 10^point
  std::string out;
  if (point >= 0) {
    out = digits + std::string(static_cast<std::size_t>(point), '0');
  } else {
    std::size_t frac = static_cast<std::size_t>(-point);
    if (digits.size() <= frac) {
      digits = std::string(frac - digits.size() + 1, '0') + digits;
    }
    out = digits.substr(0, digits.size() - frac) + "." +
          digits.substr(digits.size() - frac);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return sign() < 0 ? "-" + out : out;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InternalInvariantError("rational division by zero");
  if (!o.big_) {
    Rational inv;
    inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
    inv.den_ = o.num_ < 0 ? -o.num_ : o.num_;
    return *this *= inv;
  }
  AssignBig(mpq() / o.mpq());
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  if (!big_) {
    r.num_ = -num_;
    r.den_ = den_;
  } else {
    mpq_class q;
    mpq_neg(q.get_mpq_t(), big_->get_mpq_t());
    r.AssignBig(std::move(q));
  }
  return r;
}

std::size_t Rational::Hash() const {
  if (!big_) {
    std::size_t h = std::hash<std::int64_t>{}(num_);
    std::size_t d = std::hash<std::int64_t>{}(den_);
    return h ^ (d + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
  std::size_t h = std::hash<std::string>{}(big_->get_num().get_str(16));
  std::size_t d = std::hash<std::string>{}(big_->get_den().get_str(16));
  return h ^ (d + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Rational Abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational Min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational Max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

std::size_t DecimalDigits(const BigInt& v) {
  if (v == 0) return 1;
  BigInt a = abs(v);
  std::string s = a.get_str();
  return s.size();
}

}  // namespace ssg
