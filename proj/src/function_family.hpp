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

#ifndef CXPROB_FUNCTION_FAMILY_HPP
#define CXPROB_FUNCTION_FAMILY_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numeric.hpp"

namespace cxprob {

enum class GrowthKind { kPolynomial, kExponential };

std::string_view to_string(GrowthKind kind);
GrowthKind parse_growth_kind(std::string_view text);

/// A step-count function of the input size: n^c (polynomial) or c^n
/// (exponential), with a positive rational coefficient c.
///
/// Polynomials need c >= 1 and exponentials c > 1, so constant functions are
/// never members of a family.
class ComplexityFunction {
 public:
  static ComplexityFunction polynomial(const Rational& exponent);
  static ComplexityFunction exponential(const Rational& base);
  static ComplexityFunction make(GrowthKind kind, const Rational& coefficient);

  /// Accepts "n", "n^2", "n^(3/2)", "n^3/2", "2^n", "(3/2)^n" and "3/2^n".
  static ComplexityFunction parse(std::string_view label);

  GrowthKind kind() const { return kind_; }
  const Rational& coefficient() const { return coefficient_; }
  bool is_polynomial() const { return kind_ == GrowthKind::kPolynomial; }
  bool is_exponential() const { return kind_ == GrowthKind::kExponential; }

  /// Canonical label; parse(label()) == *this.
  std::string label() const;

  friend bool operator==(const ComplexityFunction&, const ComplexityFunction&) = default;
  // Canonical order: polynomials before exponentials, then ascending c.
  friend std::strong_ordering operator<=>(const ComplexityFunction& a,
                                          const ComplexityFunction& b);

 private:
  ComplexityFunction(GrowthKind kind, Rational coefficient)
      : kind_(kind), coefficient_(std::move(coefficient)) {}

  GrowthKind kind_;
  Rational coefficient_;
};

/// f(n) when it is rational: always for exponentials, and for n^(p/q) when n
/// is a perfect q-th power.
std::optional<Rational> evaluate_exact(const ComplexityFunction& f, std::uint64_t n);

/// f(n) as a real at the requested precision. Throws for n = 0.
Real evaluate(const ComplexityFunction& f, std::uint64_t n,
              Precision precision = Precision());

/// First derivative of the continuous extension: c n^(c-1) or c^n ln c.
Real derivative(const ComplexityFunction& f, std::uint64_t n,
                Precision precision = Precision());

/// Exact three-way comparison of f(n) against an integer step count.
std::strong_ordering compare_steps(const ComplexityFunction& f, std::uint64_t n,
                                   const Integer& steps);

/// Inclusive rational grid min, min + step, ..., <= max.
struct CoefficientGrid {
  Rational min;
  Rational max;
  Rational step;

  std::vector<Rational> expand() const;
};

struct FamilySpec {
  std::vector<Rational> poly_coefficients;
  std::vector<Rational> exp_coefficients;

  static FamilySpec from_grids(const std::optional<CoefficientGrid>& poly,
                               const std::optional<CoefficientGrid>& exp);

  /// Throws kInvalidArgument naming the offending coefficient.
  void validate() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// One cell I_j of the degree partition, holding indices into the family.
struct DegreeClass {
  GrowthKind kind;
  Rational coefficient;
  std::vector<std::size_t> members;

  friend bool operator==(const DegreeClass&, const DegreeClass&) = default;
};

/// A bounded, discrete, canonically ordered set of complexity functions.
class FunctionFamily {
 public:
  /// Sorts into canonical order; duplicates are rejected.
  static FunctionFamily from_members(std::vector<ComplexityFunction> members);

  std::span<const ComplexityFunction> members() const { return members_; }
  const ComplexityFunction& operator[](std::size_t i) const { return members_[i]; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  std::optional<std::size_t> index_of(const ComplexityFunction& f) const;
  bool contains(const ComplexityFunction& f) const { return index_of(f).has_value(); }
  std::size_t count(GrowthKind kind) const;

  const std::vector<DegreeClass>& degree_classes() const { return classes_; }

  friend bool operator==(const FunctionFamily& a, const FunctionFamily& b) {
    return a.members_ == b.members_;
  }

 private:
  explicit FunctionFamily(std::vector<ComplexityFunction> members);

  std::vector<ComplexityFunction> members_;
  std::vector<DegreeClass> classes_;
};

FunctionFamily enumerate_family(const FamilySpec& spec);

std::vector<DegreeClass> partition_by_degree(const FunctionFamily& family);

}  // namespace cxprob

#endif  // CXPROB_FUNCTION_FAMILY_HPP
