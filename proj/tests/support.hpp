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

#ifndef CXPROB_TESTS_SUPPORT_HPP
#define CXPROB_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "function_family.hpp"
#include "numeric.hpp"

namespace testing {

using cxprob::Integer;
using cxprob::Rational;
using cxprob::Real;

/// Decimal literal at `digits` significant digits plus guard.
inline Real real_from(std::string_view text, unsigned digits = 80) {
  return Real(std::string(text), digits);
}

inline Real abs_diff(const Real& a, const Real& b) { return abs(a - b); }

inline Real tolerance(std::string_view text) { return real_from(text); }

/// Small random rationals p/q with p in [lo_num, hi_num], q in [1, max_den].
class RationalGen {
 public:
  explicit RationalGen(std::uint64_t seed) : engine_(seed) {}

  Rational between(std::int64_t lo_num, std::int64_t hi_num, std::int64_t max_den) {
    std::uniform_int_distribution<std::int64_t> num(lo_num, hi_num);
    std::uniform_int_distribution<std::int64_t> den(1, max_den);
    return Rational(num(engine_), den(engine_));
  }

  /// Uniform-ish rational in the open interval (lo, hi).
  Rational in_open(const Rational& lo, const Rational& hi, std::int64_t resolution = 997) {
    std::uniform_int_distribution<std::int64_t> k(1, resolution - 1);
    return lo + (hi - lo) * Rational(k(engine_), resolution);
  }

  std::uint64_t natural(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
  }

  bool coin() { return std::bernoulli_distribution(0.5)(engine_); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Random non-empty family spec with small grids of each kind.
/// Either kind may be missing, never both.
inline cxprob::FamilySpec random_family_spec(RationalGen& gen) {
  cxprob::FamilySpec spec;
  const bool poly = gen.natural(0, 3) != 0;
  const bool exp = !poly || gen.coin();
  if (poly) {
    const Rational start = Rational(1) + gen.between(0, 3, 2);
    const Rational step = gen.between(1, 3, 2);
    const std::uint64_t count = gen.natural(1, 6);
    for (std::uint64_t i = 0; i < count; ++i) spec.poly_coefficients.push_back(start + step * i);
  }
  if (exp) {
    const Rational start = Rational(1) + gen.between(1, 4, 3);
    const Rational step = gen.between(1, 3, 2);
    const std::uint64_t count = gen.natural(1, 5);
    for (std::uint64_t i = 0; i < count; ++i) spec.exp_coefficients.push_back(start + step * i);
  }
  return spec;
}

}  // namespace testing

#endif  // CXPROB_TESTS_SUPPORT_HPP
