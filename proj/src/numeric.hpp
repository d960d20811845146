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

#ifndef CXPROB_NUMERIC_HPP
#define CXPROB_NUMERIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace cxprob {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
// Reals carry their own precision; arithmetic results take the larger
// precision of the operands, so seeding every computation through
// Precision::real() is enough to fix the working precision.
using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDigits = 50;
inline constexpr unsigned kMinimumDigits = 15;

/// Number of significant decimal digits requested for real-valued results.
/// Computations run with kGuardDigits extra digits; only serialization rounds
/// to `digits`.
class Precision {
 public:
  static constexpr unsigned kGuardDigits = 10;

  constexpr Precision() = default;
  explicit Precision(unsigned digits);

  constexpr unsigned digits() const { return digits_; }
  constexpr unsigned working_digits() const { return digits_ + kGuardDigits; }

  Real real(long value) const;
  Real real(const Integer& value) const;
  Real real(const Rational& value) const;
  Real pi() const;

  friend constexpr bool operator==(Precision, Precision) = default;

 private:
  unsigned digits_ = kDefaultDigits;
};

/// Correctly rounded conversions at `digits10` decimal digits. Prefer these
/// over the Real(value, digits) constructors, which round through a machine
/// float for big integers and rationals.
Real to_real(const Integer& value, unsigned digits10);
Real to_real(const Rational& value, unsigned digits10);

/// Non-negative decimal integer; leading zeros are allowed.
Integer parse_integer(std::string_view text);

/// Parses "7", "-3/4", "0.125", "1e-12" or "2.5E3" into an exact rational.
Rational parse_rational(std::string_view text);

/// "3/4", or "3" for integers.
std::string to_fraction_string(const Rational& value);

/// Round-to-nearest-even decimal rendering with `significant` digits.
std::string to_decimal_string(const Real& value, unsigned significant);
std::string to_decimal_string(const Rational& value, unsigned significant);

Integer ipow(const Integer& base, std::uint64_t exponent);
Rational rpow(const Rational& base, std::uint64_t exponent);

/// floor(value^(1/k)) for value >= 0, k >= 1.
Integer floor_root(const Integer& value, std::uint64_t k);

/// The exact k-th root when `value` is a perfect k-th power.
std::optional<Integer> exact_root(const Integer& value, std::uint64_t k);

/// base^exponent for base > 0.
Real real_power(const Real& base, const Rational& exponent, Precision precision);

bool is_integer(const Rational& value);

/// Conversion of an exact integer that must fit in 64 bits.
std::uint64_t to_u64(const Integer& value);

}  // namespace cxprob

#endif  // CXPROB_NUMERIC_HPP
