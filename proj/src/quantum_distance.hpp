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

#ifndef CXPROB_QUANTUM_DISTANCE_HPP
#define CXPROB_QUANTUM_DISTANCE_HPP

#include <string_view>

#include "numeric.hpp"

namespace cxprob {

/// Two real rotations U_alpha, U_beta about a common axis, 0 < alpha < beta < pi/2.
class RotationPair {
 public:
  static RotationPair create(const Real& alpha, const Real& beta);

  const Real& alpha() const { return alpha_; }
  const Real& beta() const { return beta_; }
  Real separation() const { return beta_ - alpha_; }

 private:
  RotationPair(Real alpha, Real beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {}

  Real alpha_;
  Real beta_;
};

/// d(U_beta, U_alpha) = 2 (1 - cos(beta - alpha)).
Real operator_distance(const RotationPair& pair);

/// epsilon = d / 2 = 1 - cos(beta - alpha).
Real error(const RotationPair& pair);

/// P = 1 - epsilon = cos(beta - alpha).
Real complexity_probability(const RotationPair& pair);

/// cos^2(beta - alpha). Defined here so that P = sqrt(P_QM).
Real quantum_probability(const RotationPair& pair);

/// Largest singular value of R(beta) - R(alpha) for the 2x2 rotation
/// matrices, from the closed-form singular values of a 2x2 matrix. Analytically
/// 2 sin((beta - alpha) / 2), which is not the same as operator_distance().
Real supnorm_distance(const RotationPair& pair);

/// max over `samples` unit vectors (cos t, sin t), t in [0, pi), of
/// |(R(beta) - R(alpha)) psi|. Double precision.
double sampled_supnorm_distance(const RotationPair& pair, int samples = 3600);

struct QuantumRow {
  Real separation;
  Real distance_stated;
  Real distance_supnorm;
  Real error;
  Real complexity_probability;
  Real quantum_probability;
  Real sqrt_quantum_probability;
};

QuantumRow quantum_row(const RotationPair& pair);

}  // namespace cxprob

#endif  // CXPROB_QUANTUM_DISTANCE_HPP
