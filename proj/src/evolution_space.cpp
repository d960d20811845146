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

#include "evolution_space.hpp"

#include <algorithm>
#include <iterator>
#include <random>

#include <mpfr.h>

#include "error.hpp"

namespace cxprob {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

Real as_real(const Rational& value, const Real& like) {
  return to_real(value, like.precision());
}

constexpr std::size_t kExhaustivePairLimit = 64;
constexpr int kRandomUnions = 200;

}  // namespace

ResourceBudget ResourceBudget::create(std::uint64_t n, const Rational& energy,
                                      const Rational& time) {
  require(n >= 1, "dimension n must be >= 1");
  require(energy > 0, "energy must be positive, got " + to_fraction_string(energy));
  require(time > 0, "time must be positive, got " + to_fraction_string(time));
  return ResourceBudget(n, energy, time);
}

StepFunctional StepFunctional::create(const Rational& alpha, const Rational& beta) {
  require(alpha > 0, "alpha must be positive, got " + to_fraction_string(alpha));
  require(beta > 1, "beta must exceed 1, got " + to_fraction_string(beta));
  return StepFunctional(alpha, beta);
}

Integer step_budget(const ResourceBudget& budget, const StepFunctional& functional) {
  // With alpha = a/b, beta = p/q and Pw = u/v,
  //   k^beta <= n^alpha Pw   <=>   k^(p b) v^(q b) <= n^(a q) u^(q b).
  const Rational power = budget.power();
  const Integer a = numerator(functional.alpha());
  const Integer b = denominator(functional.alpha());
  const Integer p = numerator(functional.beta());
  const Integer q = denominator(functional.beta());
  const Integer u = numerator(power);
  const Integer v = denominator(power);

  const std::uint64_t k_exponent = to_u64(p * b);
  const Integer scaled_v = ipow(v, to_u64(q * b));
  const Integer rhs = ipow(Integer(budget.n()), to_u64(a * q)) * ipow(u, to_u64(q * b));
  auto fits = [&](const Integer& k) { return ipow(k, k_exponent) * scaled_v <= rhs; };

  const Precision coarse(30);
  const Real log_value = (coarse.real(functional.alpha()) *
                              boost::multiprecision::log(coarse.real(Integer(budget.n()))) +
                          boost::multiprecision::log(coarse.real(power))) /
                         coarse.real(functional.beta());
  Integer steps = 0;
  if (log_value > -1) {
    const Real estimate = boost::multiprecision::exp(log_value);
    mpfr_get_z(steps.backend().data(), estimate.backend().data(), MPFR_RNDD);
  }
  while (steps > 0 && !fits(steps)) --steps;
  while (fits(steps + 1)) ++steps;

  if (steps < 1) {
    fail(ErrorCode::kInsufficientResources,
         "resources fund fewer than one computational step (n = " +
             std::to_string(budget.n()) + ", Pw = " + to_fraction_string(power) + ")");
  }
  return steps;
}

std::vector<ComplexityFunction> admissible_set(const FunctionFamily& family, std::uint64_t n,
                                               const Integer& steps) {
  std::vector<ComplexityFunction> admissible;
  for (const auto& g : family.members()) {
    if (compare_steps(g, n, steps) != std::strong_ordering::greater) admissible.push_back(g);
  }
  return admissible;
}

Event::Event(std::vector<ComplexityFunction> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

Event Event::parse(std::string_view labels) {
  std::vector<ComplexityFunction> members;
  std::size_t start = 0;
  while (start <= labels.size()) {
    const auto comma = labels.find(',', start);
    const auto piece = labels.substr(start, comma == std::string_view::npos
                                                ? std::string_view::npos
                                                : comma - start);
    if (piece.find_first_not_of(" \t") != std::string_view::npos) {
      members.push_back(ComplexityFunction::parse(piece));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Event(std::move(members));
}

bool Event::contains(const ComplexityFunction& f) const {
  return std::binary_search(members_.begin(), members_.end(), f);
}

Event Event::unite(const Event& other) const {
  std::vector<ComplexityFunction> out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out));
  return Event(std::move(out));
}

Event Event::intersect(const Event& other) const {
  std::vector<ComplexityFunction> out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
  return Event(std::move(out));
}

bool Event::is_subset_of(std::span<const ComplexityFunction> superset) const {
  return std::includes(superset.begin(), superset.end(), members_.begin(), members_.end());
}

std::string Event::label() const {
  std::string text;
  for (const auto& f : members_) {
    if (!text.empty()) text += ",";
    text += f.label();
  }
  return text;
}

EvolutionSpace::EvolutionSpace(FunctionFamily family, ResourceBudget budget,
                               StepFunctional functional, Integer steps, Event admissible)
    : family_(std::move(family)),
      budget_(std::move(budget)),
      functional_(std::move(functional)),
      step_budget_(std::move(steps)),
      admissible_(std::move(admissible)) {}

EvolutionSpace EvolutionSpace::build(FunctionFamily family, ResourceBudget budget,
                                     StepFunctional functional) {
  Integer steps = cxprob::step_budget(budget, functional);
  Event admissible(admissible_set(family, budget.n(), steps));
  if (admissible.empty()) {
    fail(ErrorCode::kEmptySpace, "no evolution fits the step budget " + steps.str() +
                                     " at n = " + std::to_string(budget.n()));
  }
  return EvolutionSpace(std::move(family), std::move(budget), std::move(functional),
                        std::move(steps), std::move(admissible));
}

Rational EvolutionSpace::probability(const Event& event) const {
  if (!event.is_subset_of(admissible())) {
    fail(ErrorCode::kInvalidArgument,
         "event {" + event.label() + "} is not a subset of the admissible set {" +
             admissible_.label() + "}");
  }
  return Rational(static_cast<long>(event.size()), static_cast<long>(admissible_.size()));
}

Rational EvolutionSpace::conditional(const Event& a, const Event& b) const {
  probability(a);  // validates A as a subset of S
  const Rational p_b = probability(b);
  if (p_b == 0) fail(ErrorCode::kInvalidArgument, "conditioning event has probability zero");
  return probability(a.intersect(b)) / p_b;
}

Rational EvolutionSpace::admissible_fraction() const {
  return Rational(static_cast<long>(admissible_.size()), static_cast<long>(family_.size()));
}

Rational EvolutionSpace::reach_probability(const Event& event) const {
  for (const auto& f : event.members()) {
    if (!family_.contains(f)) {
      fail(ErrorCode::kInvalidArgument, f.label() + " is not a member of the family");
    }
  }
  return Rational(static_cast<long>(event.intersect(admissible_).size()),
                  static_cast<long>(family_.size()));
}

KolmogorovReport verify_kolmogorov(const EvolutionSpace& space, std::uint64_t seed) {
  const auto admissible = space.admissible();
  KolmogorovReport report;

  {
    bool ok = true;
    std::string detail = "all probabilities in [0, 1]";
    for (const auto& g : admissible) {
      const Rational p = space.probability(Event({g}));
      if (p < 0 || p > 1) {
        ok = false;
        detail = "P(" + g.label() + ") = " + to_fraction_string(p) + " outside [0, 1]";
      }
    }
    report.checks.push_back({"range", ok, detail});
  }
  {
    const Rational p = space.probability(Event());
    report.checks.push_back({"empty_set", p == 0, "P(empty) = " + to_fraction_string(p)});
  }
  {
    const Rational p = space.probability(space.admissible_event());
    report.checks.push_back({"unit_total", p == 1, "P(S) = " + to_fraction_string(p)});
  }
  {
    bool ok = true;
    std::size_t unions = 0;
    auto check_union = [&](const Event& left, const Event& right) {
      if (space.probability(left.unite(right)) !=
          space.probability(left) + space.probability(right)) {
        ok = false;
      }
      ++unions;
    };
    if (admissible.size() <= kExhaustivePairLimit) {
      for (std::size_t i = 0; i < admissible.size(); ++i)
        for (std::size_t j = i + 1; j < admissible.size(); ++j)
          check_union(Event({admissible[i]}), Event({admissible[j]}));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> side(0, 2);
    for (int trial = 0; trial < kRandomUnions; ++trial) {
      std::vector<ComplexityFunction> left;
      std::vector<ComplexityFunction> right;
      for (const auto& g : admissible) {
        switch (side(rng)) {
          case 0: left.push_back(g); break;
          case 1: right.push_back(g); break;
          default: break;
        }
      }
      check_union(Event(std::move(left)), Event(std::move(right)));
    }
    report.checks.push_back(
        {"additivity", ok, std::to_string(unions) + " disjoint unions, exact arithmetic"});
  }
  return report;
}

Interpretation interpret(const Rational& probability) {
  require(probability >= 0 && probability <= 1,
          "probability must lie in [0, 1], got " + to_fraction_string(probability));
  if (probability == 0) {
    return {Reading::kUnreachable, "unreachable",
            "no evolution within the resources realizes the state; reaching it would take a "
            "non-algorithmic process"};
  }
  if (probability == 1) {
    return {Reading::kAtState, "at-state",
            "the system is already at the state; realizing it needs constant resources, "
            "O(1)"};
  }
  return {Reading::kDistant, "P-distant",
          "the state lies at resource distance P: the fraction of admissible evolutions "
          "compatible with the transition"};
}

Rational joint_power(const Rational& pw_a, const Rational& pw_b, std::uint64_t n_a,
                     std::uint64_t n_b) {
  require(pw_a > 0 && pw_b > 0, "powers must be positive");
  require(n_a >= 1 && n_b >= 1, "dimensions must be >= 1");
  const Rational total(Integer(n_a) + Integer(n_b));
  return pw_a * Rational(Integer(n_a)) / total + pw_b * Rational(Integer(n_b)) / total;
}

Rational joint_power_from_ratios(const Rational& dimension_ratio, const Rational& power_ratio,
                                 const Rational& pw_b) {
  require(dimension_ratio > 0 && power_ratio > 0 && pw_b > 0, "ratios and power must be positive");
  return (dimension_ratio * power_ratio + 1) / (dimension_ratio + 1) * pw_b;
}

std::string_view to_string(Sandwich verdict) {
  switch (verdict) {
    case Sandwich::kEquality: return "equality";
    case Sandwich::kStrict: return "strict";
    case Sandwich::kViolated: return "violated";
  }
  return "violated";
}

Sandwich sandwich_verdict(const Rational& pw_a, const Rational& pw_b, const Rational& joint) {
  const Rational& low = pw_a < pw_b ? pw_a : pw_b;
  const Rational& high = pw_a < pw_b ? pw_b : pw_a;
  if (joint < low || joint > high) return Sandwich::kViolated;
  if (low == high) return Sandwich::kEquality;
  // Unequal powers must land strictly inside.
  if (joint == low || joint == high) return Sandwich::kViolated;
  return Sandwich::kStrict;
}

namespace {

void require_same_functional(const EvolutionSpace& a, const EvolutionSpace& b) {
  require(a.functional() == b.functional(),
          "combined processes must share the step functional (alpha, beta)");
}

}  // namespace

EvolutionSpace combine_independent(const EvolutionSpace& a, const EvolutionSpace& b,
                                   const FunctionFamily& joint_family) {
  return combine_dependent(a, b, Rational(0), joint_family);
}

EvolutionSpace combine_dependent(const EvolutionSpace& a, const EvolutionSpace& b,
                                 const Rational& shared_time,
                                 const FunctionFamily& joint_family) {
  require_same_functional(a, b);
  const ResourceBudget& ra = a.budget();
  const ResourceBudget& rb = b.budget();
  const Rational& shortest = ra.time() < rb.time() ? ra.time() : rb.time();
  require(shared_time >= 0 && shared_time <= shortest,
          "shared_time must lie in [0, min(t_A, t_B)] = [0, " + to_fraction_string(shortest) +
              "], got " + to_fraction_string(shared_time));

  const Rational independent_power = joint_power(ra.power(), rb.power(), ra.n(), rb.n());
  const Rational independent_time = ra.time() + rb.time();
  const Rational energy = independent_power * independent_time;
  const Rational time = independent_time - shared_time;

  ResourceBudget budget = ResourceBudget::create(ra.n() + rb.n(), energy, time);
  if (budget.power() < independent_power ||
      (shared_time > 0 && budget.power() == independent_power)) {
    fail(ErrorCode::kInternal, "dependent combination did not raise the power");
  }
  return EvolutionSpace::build(joint_family, std::move(budget), a.functional());
}

Rational constraint_ratio(const Rational& gamma, const Rational& delta) {
  require(gamma > 1, "gamma must exceed 1, got " + to_fraction_string(gamma));
  require(delta > 0 && delta <= 1, "delta must lie in (0, 1], got " + to_fraction_string(delta));
  return 1 + (1 - delta) / (delta * gamma);
}

ConstraintCheck check_constraint(const StepFunctional& functional, const Rational& gamma,
                                 const Rational& delta, Precision precision) {
  const Rational ratio = constraint_ratio(gamma, delta);
  const Rational exponent = functional.blow_up_exponent();

  Real exponent_real = precision.real(exponent);
  Real threshold = boost::multiprecision::log(precision.real(ratio)) /
                   boost::multiprecision::log(precision.real(gamma));
  Real margin = exponent_real - threshold;

  bool satisfied = margin > 0;
  const Real tie_band =
      boost::multiprecision::pow(precision.real(10L), -static_cast<long>(precision.digits()));
  if (abs(margin) <= tie_band) {
    // gamma^(s/t) > ratio  <=>  gamma^s > ratio^t
    const Rational lhs = rpow(gamma, to_u64(numerator(exponent)));
    const Rational rhs = rpow(ratio, to_u64(denominator(exponent)));
    satisfied = lhs > rhs;
  }
  return {satisfied, std::move(exponent_real), std::move(threshold), std::move(margin)};
}

Real inverse_functional(const StepFunctional& functional, const Real& n, const Real& steps) {
  require(n > 0 && steps > 0, "dimension and step count must be positive");
  return boost::multiprecision::pow(n, -as_real(functional.alpha(), n)) *
         boost::multiprecision::pow(steps, as_real(functional.beta(), n));
}

Real inverse_functional_derivative(const StepFunctional& functional, const Real& n,
                                   const Real& steps) {
  require(n > 0 && steps > 0, "dimension and step count must be positive");
  const Real beta = as_real(functional.beta(), n);
  return beta * boost::multiprecision::pow(n, -as_real(functional.alpha(), n)) *
         boost::multiprecision::pow(steps, beta - 1);
}

Real forward_functional(const StepFunctional& functional, const Real& n, const Real& power) {
  require(n > 0 && power >= 0, "dimension must be positive and power non-negative");
  const Real inner = boost::multiprecision::pow(n, as_real(functional.alpha(), n)) * power;
  return boost::multiprecision::pow(inner, 1 / as_real(functional.beta(), n));
}

Real blow_up_fixed_power(const StepFunctional& functional, const Rational& gamma,
                         Precision precision) {
  require(gamma > 1, "gamma must exceed 1, got " + to_fraction_string(gamma));
  return real_power(precision.real(gamma), -functional.alpha(), precision);
}

FixedDerivativeBlowUp blow_up_fixed_derivative(const StepFunctional& functional,
                                               const Rational& gamma, Precision precision) {
  require(gamma > 1, "gamma must exceed 1, got " + to_fraction_string(gamma));
  const Real g = precision.real(gamma);
  const Rational stated = functional.blow_up_exponent();
  const Rational derived = functional.alpha() * functional.beta() / (functional.beta() - 1);
  Real scale = real_power(g, stated, precision);
  return {scale, derived, real_power(g, derived, precision), stated, scale};
}

bool concave_increments(const StepFunctional& functional, std::uint64_t n,
                        std::span<const Rational> powers, const Rational& increment,
                        Precision precision) {
  require(increment > 0, "increment must be positive");
  std::vector<Rational> sorted(powers.begin(), powers.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  const Real dimension = precision.real(Integer(n));
  std::vector<Real> gains;
  gains.reserve(sorted.size());
  for (const auto& pw : sorted) {
    require(pw >= 0, "powers must be non-negative");
    gains.push_back(forward_functional(functional, dimension, precision.real(Rational(pw + increment))) -
                    forward_functional(functional, dimension, precision.real(pw)));
  }
  for (std::size_t i = 0; i < gains.size(); ++i)
    for (std::size_t j = i + 1; j < gains.size(); ++j)
      if (!(gains[i] > gains[j])) return false;
  return true;
}

}  // namespace cxprob
