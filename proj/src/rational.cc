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

#include "riskgrid/rational.h"

#include <limits>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace riskgrid {
namespace {

bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::int64_t to_int64(const mpz_class& value) {
  if (!value.fits_slong_p()) {
    throw std::overflow_error("rational: integer part does not fit in int64");
  }
  return value.get_si();
}

[[noreturn]] void bad_number(std::string_view text) {
  throw std::invalid_argument("not an exact number: \"" + std::string(text) +
                              "\"");
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("rational: zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(numerator)),
                     mpz_class(static_cast<long>(denominator)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) bad_number(text);

  mpq_class result;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in \"" +
                                            std::string(text) + "\"");
    result = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = body.substr(0, dot);
    const std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_number(text);
    if ((!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      bad_number(text);
    }
    std::string digits(whole);
    digits += frac;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    result = mpq_class(mpz_class(digits, 10), scale);
  } else {
    if (!all_digits(body)) bad_number(text);
    result = mpq_class(mpz_class(std::string(body), 10));
  }
  result.canonicalize();
  if (negative) result = -result;
  return Rational(std::move(result));
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const mpq_class scaled = value_ * scale;

  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const mpq_class rest = scaled - mpq_class(q);
  const int half = cmp(rest, mpq_class(1, 2));
  if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

  const bool negative = q < 0;
  std::string magnitude = mpz_class(abs(q)).get_str(10);
  if (digits > 0) {
    if (magnitude.size() <= static_cast<std::size_t>(digits)) {
      magnitude.insert(0, static_cast<std::size_t>(digits) + 1 -
                              magnitude.size(), '0');
    }
    magnitude.insert(magnitude.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + magnitude : magnitude;
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::string Rational::numerator_string() const {
  return value_.get_num().get_str(10);
}

std::string Rational::denominator_string() const {
  return value_.get_den().get_str(10);
}

std::int64_t Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return to_int64(q);
}

std::int64_t Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return to_int64(q);
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("rational: division by zero");
  value_ /= other.value_;
  return *this;
}

Rational abs(const Rational& value) {
  return value.sign() < 0 ? -value : value;
}

Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

Rational positive_part(const Rational& value) {
  return value.sign() > 0 ? value : Rational();
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace riskgrid
