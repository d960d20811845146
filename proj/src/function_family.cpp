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

#include "function_family.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"

namespace cxprob {

namespace {

constexpr std::size_t kMaxGridSize = 100000;

std::string coefficient_text(const Rational& c, bool parenthesize) {
  const std::string text = to_fraction_string(c);
  return (parenthesize && !is_integer(c)) ? "(" + text + ")" : text;
}

std::string_view strip_parentheses(std::string_view text) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text.remove_prefix(1);
    text.remove_suffix(1);
  }
  return text;
}

}  // namespace

std::string_view to_string(GrowthKind kind) {
  return kind == GrowthKind::kPolynomial ? "polynomial" : "exponential";
}

GrowthKind parse_growth_kind(std::string_view text) {
  if (text == "polynomial") return GrowthKind::kPolynomial;
  if (text == "exponential") return GrowthKind::kExponential;
  fail(ErrorCode::kInvalidArgument, "unknown function kind '" + std::string(text) + "'");
}

ComplexityFunction ComplexityFunction::polynomial(const Rational& exponent) {
  require(exponent >= 1, "polynomial exponent must be >= 1, got " +
                             to_fraction_string(exponent));
  return ComplexityFunction(GrowthKind::kPolynomial, exponent);
}

ComplexityFunction ComplexityFunction::exponential(const Rational& base) {
  require(base > 1, "exponential base must be > 1, got " + to_fraction_string(base));
  return ComplexityFunction(GrowthKind::kExponential, base);
}

ComplexityFunction ComplexityFunction::make(GrowthKind kind, const Rational& coefficient) {
  return kind == GrowthKind::kPolynomial ? polynomial(coefficient)
                                         : exponential(coefficient);
}

ComplexityFunction ComplexityFunction::parse(std::string_view label) {
  std::string compact;
  for (char c : label)
    if (c != ' ' && c != '\t') compact.push_back(c);
  std::string_view text = compact;

  if (text == "n") return polynomial(Rational(1));
  if (text.starts_with("n^")) {
    return polynomial(parse_rational(strip_parentheses(text.substr(2))));
  }
  if (text.ends_with("^n")) {
    text.remove_suffix(2);
    return exponential(parse_rational(strip_parentheses(text)));
  }
  fail(ErrorCode::kInvalidArgument,
       "cannot parse complexity function '" + std::string(label) +
           "' (expected n^c or c^n)");
}

std::string ComplexityFunction::label() const {
  if (is_polynomial()) return "n^" + coefficient_text(coefficient_, true);
  return coefficient_text(coefficient_, true) + "^n";
}

std::strong_ordering operator<=>(const ComplexityFunction& a, const ComplexityFunction& b) {
  if (a.kind_ != b.kind_) {
    return a.kind_ == GrowthKind::kPolynomial ? std::strong_ordering::less
                                              : std::strong_ordering::greater;
  }
  if (a.coefficient_ < b.coefficient_) return std::strong_ordering::less;
  if (a.coefficient_ > b.coefficient_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::optional<Rational> evaluate_exact(const ComplexityFunction& f, std::uint64_t n) {
  require(n >= 1, "input size n must be >= 1");
  const Rational& c = f.coefficient();
  if (f.is_exponential()) return rpow(c, n);

  const Integer p = boost::multiprecision::numerator(c);
  const Integer q = boost::multiprecision::denominator(c);
  auto root = exact_root(Integer(n), to_u64(q));
  if (!root) return std::nullopt;
  return Rational(ipow(*root, to_u64(p)));
}

Real evaluate(const ComplexityFunction& f, std::uint64_t n, Precision precision) {
  require(n >= 1, "input size n must be >= 1");
  if (auto exact = evaluate_exact(f, n)) return precision.real(*exact);
  return real_power(precision.real(Integer(n)), f.coefficient(), precision);
}

Real derivative(const ComplexityFunction& f, std::uint64_t n, Precision precision) {
  require(n >= 1, "input size n must be >= 1");
  const Real c = precision.real(f.coefficient());
  if (f.is_polynomial()) {
    return c * real_power(precision.real(Integer(n)), f.coefficient() - 1, precision);
  }
  return evaluate(f, n, precision) * boost::multiprecision::log(c);
}

std::strong_ordering compare_steps(const ComplexityFunction& f, std::uint64_t n,
                                   const Integer& steps) {
  require(n >= 1, "input size n must be >= 1");
  // f(n) >= 1 for every admissible f.
  if (steps < 1) return std::strong_ordering::greater;

  // Decide in the log domain when the two sides are clearly apart, so huge
  // exponentials never get expanded into big integers.
  const Precision coarse(30);
  const Real lhs = f.is_polynomial()
                       ? coarse.real(f.coefficient()) *
                             boost::multiprecision::log(coarse.real(Integer(n)))
                       : coarse.real(Integer(n)) *
                             boost::multiprecision::log(coarse.real(f.coefficient()));
  const Real rhs = boost::multiprecision::log(coarse.real(steps));
  const Real gap = lhs - rhs;
  const Real scale = 1 + abs(lhs) + abs(rhs);
  if (gap > scale * Real("1e-20")) return std::strong_ordering::greater;
  if (gap < -scale * Real("1e-20")) return std::strong_ordering::less;

  const Integer p = boost::multiprecision::numerator(f.coefficient());
  const Integer q = boost::multiprecision::denominator(f.coefficient());
  Integer left;
  Integer right;
  if (f.is_polynomial()) {
    // n^(p/q) vs s  <=>  n^p vs s^q
    left = ipow(Integer(n), to_u64(p));
    right = ipow(steps, to_u64(q));
  } else {
    // (p/q)^n vs s  <=>  p^n vs s q^n
    left = ipow(p, n);
    right = steps * ipow(q, n);
  }
  if (left < right) return std::strong_ordering::less;
  if (left > right) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::vector<Rational> CoefficientGrid::expand() const {
  require(step > 0, "grid step must be positive");
  require(min <= max, "grid min must not exceed max");
  const Rational span = (max - min) / step;
  const Integer count = boost::multiprecision::numerator(span) /
                            boost::multiprecision::denominator(span) + 1;
  require(count <= kMaxGridSize, "grid has more than " +
                                     std::to_string(kMaxGridSize) + " points");
  std::vector<Rational> values;
  values.reserve(count.convert_to<std::size_t>());
  for (Rational value = min; value <= max; value += step) values.push_back(value);
  return values;
}

FamilySpec FamilySpec::from_grids(const std::optional<CoefficientGrid>& poly,
                                  const std::optional<CoefficientGrid>& exp) {
  FamilySpec spec;
  if (poly) spec.poly_coefficients = poly->expand();
  if (exp) spec.exp_coefficients = exp->expand();
  spec.validate();
  return spec;
}

void FamilySpec::validate() const {
  require(!poly_coefficients.empty() || !exp_coefficients.empty(),
          "family specification is empty");
  std::set<Rational> seen;
  for (const auto& c : poly_coefficients) {
    require(c >= 1, "polynomial coefficient " + to_fraction_string(c) + " is below 1");
    require(seen.insert(c).second,
            "duplicate polynomial coefficient " + to_fraction_string(c));
  }
  seen.clear();
  for (const auto& c : exp_coefficients) {
    require(c > 1, "exponential coefficient " + to_fraction_string(c) + " is not above 1");
    require(seen.insert(c).second,
            "duplicate exponential coefficient " + to_fraction_string(c));
  }
}

FunctionFamily::FunctionFamily(std::vector<ComplexityFunction> members)
    : members_(std::move(members)) {
  classes_.reserve(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    classes_.push_back({members_[i].kind(), members_[i].coefficient(), {i}});
  }
}

FunctionFamily FunctionFamily::from_members(std::vector<ComplexityFunction> members) {
  require(!members.empty(), "a function family needs at least one member");
  std::sort(members.begin(), members.end());
  const auto duplicate = std::adjacent_find(members.begin(), members.end());
  require(duplicate == members.end(),
          duplicate == members.end() ? "" : "duplicate family member " + duplicate->label());
  return FunctionFamily(std::move(members));
}

std::optional<std::size_t> FunctionFamily::index_of(const ComplexityFunction& f) const {
  const auto it = std::lower_bound(members_.begin(), members_.end(), f);
  if (it == members_.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

std::size_t FunctionFamily::count(GrowthKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      members_.begin(), members_.end(),
      [kind](const ComplexityFunction& f) { return f.kind() == kind; }));
}

FunctionFamily enumerate_family(const FamilySpec& spec) {
  spec.validate();
  std::vector<ComplexityFunction> members;
  members.reserve(spec.poly_coefficients.size() + spec.exp_coefficients.size());
  for (const auto& c : spec.poly_coefficients)
    members.push_back(ComplexityFunction::polynomial(c));
  for (const auto& c : spec.exp_coefficients)
    members.push_back(ComplexityFunction::exponential(c));
  return FunctionFamily::from_members(std::move(members));
}

std::vector<DegreeClass> partition_by_degree(const FunctionFamily& family) {
  require(!family.empty(), "cannot partition an empty family");
  return family.degree_classes();
}

}  // namespace cxprob
