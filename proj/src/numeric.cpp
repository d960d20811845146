// Copyright 2026 The cxprob Authors
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

#include "numeric.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <vector>

#include <mpfr.h>

#include "error.hpp"

namespace cxprob {

Precision::Precision(unsigned digits) : digits_(digits) {
  require(digits >= kMinimumDigits,
          "precision must be at least " + std::to_string(kMinimumDigits) +
              " digits, got " + std::to_string(digits));
}

Real Precision::real(long value) const { return Real(value, working_digits()); }

Real Precision::real(const Integer& value) const { return to_real(value, working_digits()); }

Real Precision::real(const Rational& value) const { return to_real(value, working_digits()); }

Real to_real(const Integer& value, unsigned digits10) {
  Real result(0, digits10);
  mpfr_set_z(result.backend().data(), value.backend().data(), MPFR_RNDN);
  return result;
}

Real to_real(const Rational& value, unsigned digits10) {
  Real result(0, digits10);
  mpfr_set_q(result.backend().data(), value.backend().data(), MPFR_RNDN);
  return result;
}

Real Precision::pi() const {
  Real result(0, working_digits());
  mpfr_const_pi(result.backend().data(), MPFR_RNDN);
  return result;
}

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

[[noreturn]] void bad_number(std::string_view original) {
  fail(ErrorCode::kInvalidArgument,
       "not a number: '" + std::string(original) + "'");
}

// [+-]digits[.digits][(e|E)[+-]digits]
Rational parse_decimal(std::string_view text, std::string_view original) {
  text = trim(text);
  if (text.empty()) bad_number(original);

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  std::string mantissa;
  std::int64_t scale = 0;
  bool seen_point = false;
  std::size_t i = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa.push_back(c);
      if (seen_point) --scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (mantissa.empty()) bad_number(original);

  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') bad_number(original);
    std::string_view exponent = text.substr(i + 1);
    bool exponent_negative = false;
    if (!exponent.empty() && (exponent.front() == '+' || exponent.front() == '-')) {
      exponent_negative = exponent.front() == '-';
      exponent.remove_prefix(1);
    }
    if (exponent.empty() || exponent.size() > 6) bad_number(original);
    std::int64_t e = 0;
    for (char c : exponent) {
      if (!std::isdigit(static_cast<unsigned char>(c))) bad_number(original);
      e = e * 10 + (c - '0');
    }
    scale += exponent_negative ? -e : e;
  }

  Rational value{parse_integer(mantissa)};
  const Integer ten_power = ipow(Integer(10), static_cast<std::uint64_t>(scale < 0 ? -scale : scale));
  if (scale < 0) {
    value /= Rational(ten_power);
  } else {
    value *= Rational(ten_power);
  }
  return negative ? Rational(-value) : value;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  const std::string digits(trim(text));
  const bool well_formed =
      !digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
      });
  if (!well_formed) bad_number(text);
  // Explicit base 10: GMP would otherwise read a leading zero as octal.
  Integer value;
  mpz_set_str(value.backend().data(), digits.c_str(), 10);
  return value;
}

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text, original);

  const Rational numerator = parse_decimal(text.substr(0, slash), original);
  const Rational denominator = parse_decimal(text.substr(slash + 1), original);
  if (denominator == 0) {
    fail(ErrorCode::kInvalidArgument,
         "zero denominator in '" + std::string(original) + "'");
  }
  return numerator / denominator;
}

std::string to_fraction_string(const Rational& value) {
  if (is_integer(value)) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

std::string to_decimal_string(const Real& value, unsigned significant) {
  const int digits = static_cast<int>(significant);
  const int size = mpfr_snprintf(nullptr, 0, "%.*RNg", digits, value.backend().data());
  std::vector<char> buffer(static_cast<std::size_t>(size) + 1);
  mpfr_snprintf(buffer.data(), buffer.size(), "%.*RNg", digits, value.backend().data());
  std::string text(buffer.data(), static_cast<std::size_t>(size));
  if (text == "-0") text = "0";
  return text;
}

std::string to_decimal_string(const Rational& value, unsigned significant) {
  return to_decimal_string(to_real(value, significant + Precision::kGuardDigits),
                           significant);
}

Integer ipow(const Integer& base, std::uint64_t exponent) {
  Integer result;
  mpz_pow_ui(result.backend().data(), base.backend().data(),
             static_cast<unsigned long>(exponent));
  return result;
}

Rational rpow(const Rational& base, std::uint64_t exponent) {
  return Rational(ipow(boost::multiprecision::numerator(base), exponent),
                  ipow(boost::multiprecision::denominator(base), exponent));
}

Integer floor_root(const Integer& value, std::uint64_t k) {
  require(value >= 0, "floor_root of a negative value");
  require(k >= 1, "floor_root degree must be positive");
  Integer result;
  mpz_root(result.backend().data(), value.backend().data(),
           static_cast<unsigned long>(k));
  return result;
}

std::optional<Integer> exact_root(const Integer& value, std::uint64_t k) {
  Integer root = floor_root(value, k);
  if (ipow(root, k) == value) return root;
  return std::nullopt;
}

Real real_power(const Real& base, const Rational& exponent, Precision precision) {
  return boost::multiprecision::pow(base, precision.real(exponent));
}

bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

std::uint64_t to_u64(const Integer& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
    fail(ErrorCode::kInvalidArgument,
         "integer out of 64-bit range: " + value.str());
  }
  return value.convert_to<std::uint64_t>();
}

}  // namespace cxprob
