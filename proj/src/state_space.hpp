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

#ifndef CXPROB_STATE_SPACE_HPP
#define CXPROB_STATE_SPACE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "function_family.hpp"
#include "numeric.hpp"

namespace cxprob {

/// Weighted state-space model over a function family.
///
/// Each member f gets the weight
///
///   exponential:  xi = mu_e - (atan f'(n) / (pi/2)) mu_e
///   polynomial:   xi = (1 - mu_e) + [(1 - mu_e) - (atan f'(n) / (pi/2)) (1 - mu_e)]
///
/// and probability P(f) = alpha * xi with alpha = 1 / sum(xi). Exponential
/// weights fall in [0, mu_e], polynomial ones in [1 - mu_e, 2(1 - mu_e)].

inline const Rational kDefaultExpPrior{1, 2};

Real weight(const ComplexityFunction& f, std::uint64_t n, const Rational& mu_e,
            Precision precision = Precision());

/// (1 - mu_e)(2 - atan f'(n) / (pi/2)); the simplified polynomial branch, kept
/// as a consistency check on weight().
Real polynomial_weight_simplified(const ComplexityFunction& f, std::uint64_t n,
                                  const Rational& mu_e, Precision precision = Precision());

/// 1 / sum of member weights. Throws kDegenerateSpace when the sum vanishes at
/// the working precision.
Real normalization(const FunctionFamily& family, std::uint64_t n, const Rational& mu_e,
                   Precision precision = Precision());

class Model1Space {
 public:
  static Model1Space build(FunctionFamily family, const Rational& mu_e, std::uint64_t n,
                           Precision precision = Precision());

  /// Skips every check. Only meant for negative controls of verify_kolmogorov.
  static Model1Space assemble_unchecked(FunctionFamily family, Rational mu_e, std::uint64_t n,
                                        std::vector<Real> weights,
                                        std::vector<Real> probabilities, Real normalization,
                                        Precision precision);

  const FunctionFamily& family() const { return family_; }
  const Rational& mu_e() const { return mu_e_; }
  std::uint64_t n() const { return n_; }
  Precision precision() const { return precision_; }
  const Real& normalization() const { return normalization_; }
  std::span<const Real> weights() const { return weights_; }
  std::span<const Real> probabilities() const { return probabilities_; }

  /// Throws kNotFound when f is not a family member.
  Real probability(const ComplexityFunction& f) const;

  /// Throws kNotFound for a class that is not part of this family's partition.
  Real class_probability(const DegreeClass& degree_class) const;

  /// Sum of stored member probabilities over a set of member indices.
  Real probability_of(std::span<const std::size_t> members) const;

  /// alpha * sum(xi) over a set of member indices, from the weights directly.
  Real measure_of(std::span<const std::size_t> members) const;

  Real total(GrowthKind kind) const;

 private:
  Model1Space(FunctionFamily family, Rational mu_e, std::uint64_t n, Precision precision,
              std::vector<Real> weights, std::vector<Real> probabilities, Real normalization);

  FunctionFamily family_;
  Rational mu_e_;
  std::uint64_t n_;
  Precision precision_;
  std::vector<Real> weights_;
  std::vector<Real> probabilities_;
  Real normalization_;
};

struct AxiomCheck {
  std::string axiom;
  bool passed;
  std::string detail;
};

struct KolmogorovReport {
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
  const AxiomCheck& find(std::string_view axiom) const;
};

inline constexpr std::uint64_t kDefaultAdditivitySeed = 0x5eed'cafe'f00dULL;

/// Checks non-negativity and the [0,1] range, P(empty) = 0, unit total, and
/// finite additivity. Additivity compares the measure of a union computed from
/// the weights against the sum of stored class probabilities, over every pair
/// of classes (small families) plus random disjoint unions.
KolmogorovReport verify_kolmogorov(const Model1Space& space, const Real& tolerance,
                                   std::uint64_t seed = kDefaultAdditivitySeed);

struct AsymptoticRow {
  std::uint64_t n;
  Real p_exp_total;
  Real p_poly_total;
  Real max_uniform_deviation;  // max over polynomial members of |P(f) - 1/i|
};

std::vector<AsymptoticRow> asymptotic_report(const FamilySpec& spec, const Rational& mu_e,
                                             std::span<const std::uint64_t> n_values,
                                             Precision precision = Precision());

}  // namespace cxprob

#endif  // CXPROB_STATE_SPACE_HPP
