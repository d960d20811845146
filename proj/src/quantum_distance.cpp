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

#include "quantum_distance.hpp"

#include <algorithm>
#include <cmath>

#include <mpfr.h>

#include "error.hpp"

namespace cxprob {

namespace {

Real half_pi_like(const Real& like) {
  Real pi(0, std::max(like.precision(), 20u));
  mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
  return pi / 2;
}

}  // namespace

RotationPair RotationPair::create(const Real& alpha, const Real& beta) {
  const Real half_pi = half_pi_like(alpha.precision() > beta.precision() ? alpha : beta);
  require(alpha > 0 && alpha < beta && beta < half_pi,
          "rotation angles must satisfy 0 < alpha < beta < pi/2, got alpha = " +
              to_decimal_string(alpha, 17) + ", beta = " + to_decimal_string(beta, 17));
  return RotationPair(alpha, beta);
}

Real operator_distance(const RotationPair& pair) {
  return 2 * (1 - boost::multiprecision::cos(pair.separation()));
}

Real error(const RotationPair& pair) { return operator_distance(pair) / 2; }

Real complexity_probability(const RotationPair& pair) { return 1 - error(pair); }

Real quantum_probability(const RotationPair& pair) {
  const Real c = boost::multiprecision::cos(pair.separation());
  return c * c;
}

Real supnorm_distance(const RotationPair& pair) {
  using boost::multiprecision::cos;
  using boost::multiprecision::sin;
  using boost::multiprecision::sqrt;
  // R(t) = [[cos t, -sin t], [sin t, cos t]]; D = R(beta) - R(alpha).
  const Real a = cos(pair.beta()) - cos(pair.alpha());
  const Real c = sin(pair.beta()) - sin(pair.alpha());
  const Real b = -c;
  const Real d = a;
  // Largest singular value of [[a, b], [c, d]] without a square root of a
  // near-zero discriminant: (|(a + d, c - b)| + |(a - d, b + c)|) / 2.
  const Real rotation_part = sqrt((a + d) * (a + d) + (c - b) * (c - b));
  const Real reflection_part = sqrt((a - d) * (a - d) + (b + c) * (b + c));
  return (rotation_part + reflection_part) / 2;
}

double sampled_supnorm_distance(const RotationPair& pair, int samples) {
  require(samples >= 1, "sample count must be positive");
  const double alpha = pair.alpha().convert_to<double>();
  const double beta = pair.beta().convert_to<double>();
  const double a = std::cos(beta) - std::cos(alpha);
  const double c = std::sin(beta) - std::sin(alpha);
  double best = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double t = M_PI * k / samples;
    const double x = std::cos(t);
    const double y = std::sin(t);
    // D psi with D = [[a, -c], [c, a]]
    best = std::max(best, std::hypot(a * x - c * y, c * x + a * y));
  }
  return best;
}

QuantumRow quantum_row(const RotationPair& pair) {
  Real p_qm = quantum_probability(pair);
  Real root = boost::multiprecision::sqrt(p_qm);
  return {pair.separation(),       operator_distance(pair),  supnorm_distance(pair),
          error(pair),             complexity_probability(pair), std::move(p_qm),
          std::move(root)};
}

}  // namespace cxprob
