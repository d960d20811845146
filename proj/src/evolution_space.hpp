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

#ifndef CXPROB_EVOLUTION_SPACE_HPP
#define CXPROB_EVOLUTION_SPACE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "function_family.hpp"
#include "numeric.hpp"
#include "state_space.hpp"

namespace cxprob {

/// Dimension n, energy E and time t of a process; power is E/t.
class ResourceBudget {
 public:
  static ResourceBudget create(std::uint64_t n, const Rational& energy, const Rational& time);

  std::uint64_t n() const { return n_; }
  const Rational& energy() const { return energy_; }
  const Rational& time() const { return time_; }
  Rational power() const { return energy_ / time_; }

  friend bool operator==(const ResourceBudget&, const ResourceBudget&) = default;

 private:
  ResourceBudget(std::uint64_t n, Rational energy, Rational time)
      : n_(n), energy_(std::move(energy)), time_(std::move(time)) {}

  std::uint64_t n_;
  Rational energy_;
  Rational time_;
};

/// Concave step functional # = (n^alpha Pw)^(1/beta), alpha > 0, beta > 1.
/// Its inverse is Pw = n^(-alpha) #^beta.
class StepFunctional {
 public:
  static StepFunctional create(const Rational& alpha, const Rational& beta);

  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }

  /// alpha / (beta - 1)
  Rational blow_up_exponent() const { return alpha_ / (beta_ - 1); }

  friend bool operator==(const StepFunctional&, const StepFunctional&) = default;

 private:
  StepFunctional(Rational alpha, Rational beta)
      : alpha_(std::move(alpha)), beta_(std::move(beta)) {}

  Rational alpha_;
  Rational beta_;
};

/// floor((n^alpha Pw)^(1/beta)), computed exactly. Throws
/// kInsufficientResources when the budget cannot fund a single step.
Integer step_budget(const ResourceBudget& budget, const StepFunctional& functional);

/// Members g of the family with g(n) <= steps, in canonical order.
std::vector<ComplexityFunction> admissible_set(const FunctionFamily& family, std::uint64_t n,
                                               const Integer& steps);

/// A set of evolutions, kept sorted and duplicate-free.
class Event {
 public:
  Event() = default;
  explicit Event(std::vector<ComplexityFunction> members);

  static Event parse(std::string_view labels);  // comma-separated labels

  std::span<const ComplexityFunction> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const ComplexityFunction& f) const;

  Event unite(const Event& other) const;
  Event intersect(const Event& other) const;
  bool is_subset_of(std::span<const ComplexityFunction> superset) const;

  std::string label() const;

  friend bool operator==(const Event&, const Event&) = default;

 private:
  std::vector<ComplexityFunction> members_;
};

/// The resource-bounded probability space: S = { g in family : g(n) <= # }
/// with P(A) = |A| / |S| for every A subset of S.
class EvolutionSpace {
 public:
  /// Throws kEmptySpace when no member fits the step budget.
  static EvolutionSpace build(FunctionFamily family, ResourceBudget budget,
                              StepFunctional functional);

  const FunctionFamily& family() const { return family_; }
  const ResourceBudget& budget() const { return budget_; }
  const StepFunctional& functional() const { return functional_; }
  const Integer& step_budget() const { return step_budget_; }
  std::span<const ComplexityFunction> admissible() const { return admissible_.members(); }
  const Event& admissible_event() const { return admissible_; }

  bool is_admissible(const ComplexityFunction& f) const { return admissible_.contains(f); }

  /// Exact |A| / |S|. Throws kInvalidArgument unless A is a subset of S.
  Rational probability(const Event& event) const;

  /// P(A | B) = P(A and B) / P(B). Throws kInvalidArgument when P(B) = 0.
  Rational conditional(const Event& a, const Event& b) const;

  /// |S| / |family|: the share of the family the budget can fund.
  Rational admissible_fraction() const;

  /// |A and S| / |family| for any A drawn from the family; non-decreasing
  /// in the available power.
  Rational reach_probability(const Event& event) const;

  friend bool operator==(const EvolutionSpace&, const EvolutionSpace&) = default;

 private:
  EvolutionSpace(FunctionFamily family, ResourceBudget budget, StepFunctional functional,
                 Integer steps, Event admissible);

  FunctionFamily family_;
  ResourceBudget budget_;
  StepFunctional functional_;
  Integer step_budget_;
  Event admissible_;
};

/// Exact-arithmetic Kolmogorov checks on every (or a sample of) event.
KolmogorovReport verify_kolmogorov(const EvolutionSpace& space,
                                   std::uint64_t seed = kDefaultAdditivitySeed);

enum class Reading { kUnreachable, kAtState, kDistant };

struct Interpretation {
  Reading reading;
  std::string name;         // "unreachable", "at-state" or "P-distant"
  std::string description;
};

Interpretation interpret(const Rational& probability);

/// Power of a combined process of two local processes:
/// Pw_A n_A / (n_A + n_B) + Pw_B n_B / (n_A + n_B).
Rational joint_power(const Rational& pw_a, const Rational& pw_b, std::uint64_t n_a,
                     std::uint64_t n_b);

/// Same value from the ratios dimension_ratio = n_A / n_B and
/// power_ratio = Pw_A / Pw_B: ((dimension_ratio power_ratio + 1) / (dimension_ratio + 1)) Pw_B.
Rational joint_power_from_ratios(const Rational& dimension_ratio, const Rational& power_ratio,
                                 const Rational& pw_b);

enum class Sandwich { kEquality, kStrict, kViolated };

std::string_view to_string(Sandwich verdict);

/// Whether min(Pw_A, Pw_B) <= joint <= max(Pw_A, Pw_B), and if both ends
/// coincide with the joint power.
Sandwich sandwich_verdict(const Rational& pw_a, const Rational& pw_b, const Rational& joint);

/// Combined space for two independent processes over `joint_family`:
/// n = n_A + n_B, t = t_A + t_B, Pw = joint_power(...), E = Pw t.
EvolutionSpace combine_independent(const EvolutionSpace& a, const EvolutionSpace& b,
                                   const FunctionFamily& joint_family);

/// Combined space when B's computation time already contains `shared_time`
/// of A's: the independent combination's energy spent over
/// t = t_A + t_B - shared_time. shared_time = 0 reproduces combine_independent.
EvolutionSpace combine_dependent(const EvolutionSpace& a, const EvolutionSpace& b,
                                 const Rational& shared_time,
                                 const FunctionFamily& joint_family);

/// 1 + (1 - delta) / (delta gamma); equals (D delta + 1) / (D delta + delta)
/// for gamma = D + 1.
Rational constraint_ratio(const Rational& gamma, const Rational& delta);

struct ConstraintCheck {
  bool satisfied;
  Real exponent;   // alpha / (beta - 1)
  Real threshold;  // log_gamma(constraint_ratio)
  Real margin;     // exponent - threshold
};

/// alpha / (beta - 1) > log_gamma(1 + (1 - delta) / (delta gamma)).
ConstraintCheck check_constraint(const StepFunctional& functional, const Rational& gamma,
                                 const Rational& delta, Precision precision = Precision());

/// Pw = n^(-alpha) #^beta and its derivative beta n^(-alpha) #^(beta - 1),
/// as functions of the step count for a real dimension n.
Real inverse_functional(const StepFunctional& functional, const Real& n, const Real& steps);
Real inverse_functional_derivative(const StepFunctional& functional, const Real& n,
                                   const Real& steps);

/// Forward functional (n^alpha Pw)^(1/beta) over real arguments.
Real forward_functional(const StepFunctional& functional, const Real& n, const Real& power);

/// Derivative ratio f'_{gamma n}(#) / f'_n(#) = gamma^(-alpha) when the dimension
/// is blown up at fixed power.
Real blow_up_fixed_power(const StepFunctional& functional, const Rational& gamma,
                         Precision precision = Precision());

struct FixedDerivativeBlowUp {
  Real step_scale;                    // gamma^(alpha / (beta - 1))
  Rational derived_exponent;          // alpha beta / (beta - 1)
  Real derived_power_ratio;           // gamma^(alpha beta / (beta - 1))
  Rational stated_exponent;           // alpha / (beta - 1)
  Real stated_power_ratio;            // gamma^(alpha / (beta - 1))
};

/// Step rescaling that keeps the derivative fixed under a blow-up, together
/// with both candidate power ratios. The value f_{gamma n}(scaled #) / f_n(#)
/// follows derived_exponent; the closing power-ratio statement uses
/// stated_exponent. Both are reported, neither is preferred.
FixedDerivativeBlowUp blow_up_fixed_derivative(const StepFunctional& functional,
                                               const Rational& gamma,
                                               Precision precision = Precision());

/// f(Pw_i + x) - f(Pw_i) > f(Pw_j + x) - f(Pw_j) for every pair Pw_i < Pw_j of
/// the sampled powers, with f the forward functional at dimension n.
bool concave_increments(const StepFunctional& functional, std::uint64_t n,
                        std::span<const Rational> powers, const Rational& increment,
                        Precision precision = Precision());

}  // namespace cxprob

#endif  // CXPROB_EVOLUTION_SPACE_HPP
