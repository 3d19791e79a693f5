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

#ifndef SSG_RATIONAL_H_
#define SSG_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace ssg {

using BigInt = mpz_class;

// Exact rational number, always in lowest terms with a positive
// denominator. Values whose numerator and denominator are below 2^62 are
// stored inline; anything larger lives in a GMP rational. The choice is
// canonical, so equal values always share a representation.
class Rational {
 public:
  Rational() = default;
  Rational(int v) { SetInteger(v); }                 // NOLINT
  Rational(long v) { SetInteger(v); }                // NOLINT
  Rational(long long v) { SetInteger(v); }           // NOLINT
  explicit Rational(const BigInt& v);
  Rational(const BigInt& numerator, const BigInt& denominator);
  explicit Rational(const mpq_class& v);

  Rational(const Rational& o)
      : num_(o.num_), den_(o.den_),
        big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  // Accepts "p", "p/q", and plain decimals such as "-2.75" or "1e-3".
  static Rational Parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;
  int sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const {
    return big_ ? big_->get_den() == 1 : den_ == 1;
  }

  // "p" for integers, "p/q" otherwise.
  std::string ToString() const;
  // Round-half-even decimal with the given number of significant digits,
  // computed exactly from the fraction.
  std::string ToDecimal(int significant_digits = 6) const;
  double ToDouble() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a small value never equals a big one
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = Compare(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  // *this -= a * b. The scratch value is kept for the large-number path.
  void SubProduct(const Rational& a, const Rational& b, mpq_class& scratch);

  mpq_class mpq() const;
  std::size_t Hash() const;

 private:
  static constexpr std::int64_t kLimit = std::int64_t{1} << 62;

  template <typename T>
  void SetInteger(T v) {
    if (v > -kLimit && v < kLimit) {
      num_ = static_cast<std::int64_t>(v);
    } else {
      big_ = std::make_unique<mpq_class>(static_cast<long>(v));
    }
  }
  static int Compare(const Rational& a, const Rational& b);
  // Replaces the value with a GMP result, moving it inline when it fits.
  void AssignBig(mpq_class v);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

Rational Abs(const Rational& r);
Rational Min(const Rational& a, const Rational& b);
Rational Max(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Number of decimal digits of |v| (at least 1).
std::size_t DecimalDigits(const BigInt& v);

}  // namespace ssg

template <>
struct std::hash<ssg::Rational> {
  std::size_t operator()(const ssg::Rational& r) const { return r.Hash(); }
};

#endif  // SSG_RATIONAL_H_
