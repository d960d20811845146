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

#include "state_space.hpp"

#include <algorithm>
#include <random>

#include "error.hpp"

namespace cxprob {

namespace {

void check_prior(const Rational& mu_e) {
  require(mu_e > 0 && mu_e < 1,
          "prior mu_e must lie strictly between 0 and 1, got " + to_fraction_string(mu_e));
}

// atan f'(n) / (pi/2), in [0, 1) for positive derivatives.
Real arctan_fraction(const ComplexityFunction& f, std::uint64_t n, Precision precision) {
  return boost::multiprecision::atan(derivative(f, n, precision)) / (precision.pi() / 2);
}

// 1 - atan f'(n) / (pi/2), evaluated as atan(1 / f'(n)) / (pi/2). The direct
// difference cancels to nothing for fast exponentials, where f'(n) is huge.
Real arctan_complement(const ComplexityFunction& f, std::uint64_t n, Precision precision) {
  return boost::multiprecision::atan(1 / derivative(f, n, precision)) / (precision.pi() / 2);
}

constexpr std::size_t kExhaustivePairLimit = 64;
constexpr int kRandomUnions = 200;

}  // namespace

Real weight(const ComplexityFunction& f, std::uint64_t n, const Rational& mu_e,
            Precision precision) {
  check_prior(mu_e);
  require(n >= 1, "input size n must be >= 1");
  if (f.is_exponential()) {
    // mu_e - (atan f'/(pi/2)) mu_e, without the cancellation.
    return precision.real(mu_e) * arctan_complement(f, n, precision);
  }
  const Real fraction = arctan_fraction(f, n, precision);
  const Real mu_p = precision.real(Rational(1 - mu_e));
  return mu_p + (mu_p - fraction * mu_p);
}

Real polynomial_weight_simplified(const ComplexityFunction& f, std::uint64_t n,
                                  const Rational& mu_e, Precision precision) {
  check_prior(mu_e);
  require(f.is_polynomial(), "simplified weight applies to polynomials only");
  return precision.real(Rational(1 - mu_e)) * (2 - arctan_fraction(f, n, precision));
}

Real normalization(const FunctionFamily& family, std::uint64_t n, const Rational& mu_e,
                   Precision precision) {
  Real sum = precision.real(0L);
  for (const auto& f : family.members()) sum += weight(f, n, mu_e, precision);
  if (sum <= 0) {
    fail(ErrorCode::kDegenerateSpace,
         "all weights vanish at n = " + std::to_string(n) + " with " +
             std::to_string(precision.digits()) + "-digit precision");
  }
  return 1 / sum;
}

Model1Space::Model1Space(FunctionFamily family, Rational mu_e, std::uint64_t n,
                         Precision precision, std::vector<Real> weights,
                         std::vector<Real> probabilities, Real normalization)
    : family_(std::move(family)),
      mu_e_(std::move(mu_e)),
      n_(n),
      precision_(precision),
      weights_(std::move(weights)),
      probabilities_(std::move(probabilities)),
      normalization_(std::move(normalization)) {}

Model1Space Model1Space::build(FunctionFamily family, const Rational& mu_e, std::uint64_t n,
                               Precision precision) {
  check_prior(mu_e);
  require(n >= 1, "input size n must be >= 1");

  // Guard against drift between the two-term and simplified polynomial forms.
  const Real drift_limit = boost::multiprecision::pow(
      precision.real(10L), -static_cast<long>(precision.digits()));

  std::vector<Real> weights;
  weights.reserve(family.size());
  Real sum = precision.real(0L);
  for (const auto& f : family.members()) {
    Real w = weight(f, n, mu_e, precision);
    if (f.is_polynomial()) {
      const Real simplified = polynomial_weight_simplified(f, n, mu_e, precision);
      if (abs(w - simplified) > drift_limit) {
        fail(ErrorCode::kInternal, "polynomial weight forms disagree for " + f.label());
      }
    }
    sum += w;
    weights.push_back(std::move(w));
  }
  if (sum <= 0) {
    fail(ErrorCode::kDegenerateSpace,
         "all weights vanish at n = " + std::to_string(n) + " with " +
             std::to_string(precision.digits()) + "-digit precision");
  }

  Real alpha = 1 / sum;
  std::vector<Real> probabilities;
  probabilities.reserve(weights.size());
  for (const auto& w : weights) probabilities.push_back(alpha * w);

  return Model1Space(std::move(family), mu_e, n, precision, std::move(weights),
                     std::move(probabilities), std::move(alpha));
}

Model1Space Model1Space::assemble_unchecked(FunctionFamily family, Rational mu_e,
                                            std::uint64_t n, std::vector<Real> weights,
                                            std::vector<Real> probabilities,
                                            Real normalization, Precision precision) {
  return Model1Space(std::move(family), std::move(mu_e), n, precision, std::move(weights),
                     std::move(probabilities), std::move(normalization));
}

Real Model1Space::probability(const ComplexityFunction& f) const {
  const auto index = family_.index_of(f);
  if (!index) fail(ErrorCode::kNotFound, f.label() + " is not a member of the family");
  return probabilities_[*index];
}

Real Model1Space::class_probability(const DegreeClass& degree_class) const {
  const auto& classes = family_.degree_classes();
  if (std::find(classes.begin(), classes.end(), degree_class) == classes.end()) {
    fail(ErrorCode::kNotFound, "degree class is not part of this family's partition");
  }
  return probability_of(degree_class.members);
}

Real Model1Space::probability_of(std::span<const std::size_t> members) const {
  Real sum = precision_.real(0L);
  for (std::size_t i : members) {
    require(i < probabilities_.size(), "member index out of range");
    sum += probabilities_[i];
  }
  return sum;
}

Real Model1Space::measure_of(std::span<const std::size_t> members) const {
  Real sum = precision_.real(0L);
  for (std::size_t i : members) {
    require(i < weights_.size(), "member index out of range");
    sum += weights_[i];
  }
  return normalization_ * sum;
}

Real Model1Space::total(GrowthKind kind) const {
  Real sum = precision_.real(0L);
  for (std::size_t i = 0; i < family_.size(); ++i)
    if (family_[i].kind() == kind) sum += probabilities_[i];
  return sum;
}

bool KolmogorovReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck& KolmogorovReport::find(std::string_view axiom) const {
  for (const auto& check : checks)
    if (check.axiom == axiom) return check;
  fail(ErrorCode::kNotFound, "no axiom entry '" + std::string(axiom) + "'");
}

KolmogorovReport verify_kolmogorov(const Model1Space& space, const Real& tolerance,
                                   std::uint64_t seed) {
  const unsigned digits = 6;
  const auto& probabilities = space.probabilities();
  KolmogorovReport report;

  {
    bool ok = true;
    std::string detail = "all probabilities in [0, 1]";
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
      if (probabilities[i] < 0 || probabilities[i] > 1 + tolerance) {
        ok = false;
        detail = "P(" + space.family()[i].label() + ") = " +
                 to_decimal_string(probabilities[i], digits) + " outside [0, 1]";
        break;
      }
    }
    report.checks.push_back({"range", ok, detail});
  }

  {
    const Real empty = space.probability_of({});
    report.checks.push_back({"empty_set", empty == 0, "P(empty) = " + to_decimal_string(empty, digits)});
  }

  {
    const Real total = space.probability_of([&] {
      std::vector<std::size_t> all(probabilities.size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
      return all;
    }());
    const Real deviation = abs(total - 1);
    report.checks.push_back({"unit_total", deviation <= tolerance,
                             "|P(total) - 1| = " + to_decimal_string(deviation, digits)});
  }

  {
    const auto& classes = space.family().degree_classes();
    Real worst = space.precision().real(0L);
    std::size_t unions = 0;
    auto check_union = [&](const std::vector<std::size_t>& left_classes,
                           const std::vector<std::size_t>& right_classes) {
      std::vector<std::size_t> members;
      Real parts = space.precision().real(0L);
      for (std::size_t c : left_classes) {
        parts += space.probability_of(classes[c].members);
        members.insert(members.end(), classes[c].members.begin(), classes[c].members.end());
      }
      for (std::size_t c : right_classes) {
        parts += space.probability_of(classes[c].members);
        members.insert(members.end(), classes[c].members.begin(), classes[c].members.end());
      }
      const Real deviation = abs(space.measure_of(members) - parts);
      if (deviation > worst) worst = deviation;
      ++unions;
    };

    if (classes.size() <= kExhaustivePairLimit) {
      for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j) check_union({i}, {j});
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> side(0, 2);
    for (int trial = 0; trial < kRandomUnions; ++trial) {
      std::vector<std::size_t> left;
      std::vector<std::size_t> right;
      for (std::size_t c = 0; c < classes.size(); ++c) {
        switch (side(rng)) {
          case 0: left.push_back(c); break;
          case 1: right.push_back(c); break;
          default: break;
        }
      }
      check_union(left, right);
    }
    report.checks.push_back({"additivity", worst <= tolerance,
                             std::to_string(unions) + " disjoint unions, worst deviation " +
                                 to_decimal_string(worst, digits)});
  }
  return report;
}

std::vector<AsymptoticRow> asymptotic_report(const FamilySpec& spec, const Rational& mu_e,
                                             std::span<const std::uint64_t> n_values,
                                             Precision precision) {
  require(!n_values.empty(), "asymptotic report needs at least one n");
  const FunctionFamily family = enumerate_family(spec);
  const std::size_t poly_count = family.count(GrowthKind::kPolynomial);

  std::vector<AsymptoticRow> rows;
  rows.reserve(n_values.size());
  for (std::uint64_t n : n_values) {
    const Model1Space space = Model1Space::build(family, mu_e, n, precision);
    Real deviation = precision.real(0L);
    if (poly_count > 0) {
      const Real uniform = 1 / precision.real(static_cast<long>(poly_count));
      for (std::size_t i = 0; i < family.size(); ++i) {
        if (!family[i].is_polynomial()) continue;
        const Real d = abs(space.probabilities()[i] - uniform);
        if (d > deviation) deviation = d;
      }
    }
    rows.push_back({n, space.total(GrowthKind::kExponential),
                    space.total(GrowthKind::kPolynomial), std::move(deviation)});
  }
  return rows;
}

}  // namespace cxprob
