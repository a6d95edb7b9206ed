// Copyright 2026 The riskgrid Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RISKGRID_RATIONAL_H_
#define RISKGRID_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

namespace riskgrid {

// Exact rational number, always held in canonical reduced form with a
// positive denominator. All arithmetic is exact; division by zero throws
// std::domain_error.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      mpq_set_si(value_.get_mpq_t(), static_cast<long>(value), 1);
    } else {
      mpq_set_ui(value_.get_mpq_t(), static_cast<unsigned long>(value), 1);
    }
  }

  Rational(std::int64_t numerator, std::int64_t denominator);

  explicit Rational(mpq_class value);

  // Accepts "p/q", a signed integer, or a finite decimal such as "-0.25".
  // Decimals are converted exactly ("0.8" -> 4/5). Throws
  // std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  // "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  // Decimal rendering with exactly `digits` fractional digits, rounded
  // half-to-even. Pure string/integer work, no floating point.
  std::string to_decimal(int digits) const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;

  std::string numerator_string() const;
  std::string denominator_string() const;

  // Largest integer <= value / smallest integer >= value. Throws
  // std::overflow_error if the result does not fit in int64.
  std::int64_t floor() const;
  std::int64_t ceil() const;

  double to_double() const { return value_.get_d(); }

  const mpq_class& raw() const { return value_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class value_;
};

Rational abs(const Rational& value);
Rational max(const Rational& a, const Rational& b);
Rational min(const Rational& a, const Rational& b);

// (value)^+ = max(value, 0).
Rational positive_part(const Rational& value);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace riskgrid

#endif  // RISKGRID_RATIONAL_H_
