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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits non-zero
// when any selected criterion fails. Pass a criterion number to run just that
// one. Tolerances are fixed below and are not configurable.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "evolution_space.hpp"
#include "function_family.hpp"
#include "numeric.hpp"
#include "quantum_distance.hpp"
#include "state_space.hpp"
#include "support.hpp"

#ifndef CXPROB_CLI_PATH
#error "CXPROB_CLI_PATH must point at the built command-line tool"
#endif
#ifndef CXPROB_SOURCE_DIR
#error "CXPROB_SOURCE_DIR must point at the source tree"
#endif

namespace fs = std::filesystem;
using namespace cxprob;
using testing::RationalGen;

namespace {

// Pinned tolerances.
const char* const kAsymptoticBound = "1e-6";
constexpr double kAsymptoticSeconds = 1.0;
const char* const kModel1UnitTolerance = "1e-12";
constexpr double kKolmogorovSeconds = 30.0;
const char* const kScalingTolerance = "1e-12";
const char* const kThresholdTolerance = "1e-12";
const char* const kQuantumTolerance = "1e-12";
const char* const kSupNormTolerance = "1e-9";
constexpr unsigned kBruteForceDigits = 200;
const char* const kBruteForceTie = "1e-150";

struct Verdict {
  bool passed;
  std::string detail;
};

Real decimal(const char* text) { return testing::real_from(text, 60); }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string sci(const Real& value) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << value.convert_to<double>();
  return out.str();
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_cli(const std::string& args) {
  const std::string command = std::string(CXPROB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir =
      fs::temp_directory_path() / ("cxprob_acceptance_" + std::to_string(::getpid())) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::map<std::string, std::string> directory_contents(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files[entry.path().filename().string()] = slurp(entry.path());
  }
  return files;
}

// ---------------------------------------------------------------------------

Verdict large_n_asymptotics() {
  const auto start = std::chrono::steady_clock::now();
  FamilySpec spec;
  for (int c = 1; c <= 5; ++c) spec.poly_coefficients.push_back(c);
  for (int c = 2; c <= 5; ++c) spec.exp_coefficients.push_back(c);
  const std::vector<std::uint64_t> ns{5, 10, 20, 50};
  const auto rows = asymptotic_report(spec, Rational(1, 2), ns, Precision(50));
  const double elapsed = seconds_since(start);

  const Real bound = decimal(kAsymptoticBound);
  const auto& last = rows.back();
  const bool exp_small = last.p_exp_total < bound;
  const bool deviation_small = last.max_uniform_deviation < bound;
  bool exp_decreasing = true;
  bool deviation_decreasing = true;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    exp_decreasing = exp_decreasing && rows[i].p_exp_total < rows[i - 1].p_exp_total;
    deviation_decreasing =
        deviation_decreasing && rows[i].max_uniform_deviation < rows[i - 1].max_uniform_deviation;
  }
  std::string trend;
  for (const auto& row : rows) {
    trend += (trend.empty() ? "" : " ") + std::to_string(row.n) + ":" +
             sci(row.max_uniform_deviation);
  }
  const bool fast = elapsed < kAsymptoticSeconds;
  return {exp_small && deviation_small && exp_decreasing && deviation_decreasing && fast,
          "P(Exp) at 50 = " + sci(last.p_exp_total) + (exp_small ? " ok" : " too large") +
              ", decreasing " + (exp_decreasing ? "yes" : "no") +
              "; max |P(poly) - 1/5| by n = " + trend + (deviation_small ? " ok" : " too large") +
              ", decreasing " + (deviation_decreasing ? "yes" : "no") + "; " +
              std::to_string(elapsed) + " s"};
}

// ---------------------------------------------------------------------------

Verdict kolmogorov_suites() {
  const auto start = std::chrono::steady_clock::now();
  RationalGen gen(2026);
  const Real tolerance = decimal(kModel1UnitTolerance);
  int model1_failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto family = enumerate_family(testing::random_family_spec(gen));
    const Rational mu_e = gen.in_open(0, 1);
    const auto space = Model1Space::build(family, mu_e, gen.natural(1, 60));
    if (!verify_kolmogorov(space, tolerance, trial).all_passed()) ++model1_failures;
  }

  int model2_failures = 0;
  int model2_built = 0;
  while (model2_built < 1000) {
    const auto family = enumerate_family(testing::random_family_spec(gen));
    try {
      const auto space = EvolutionSpace::build(
          family,
          ResourceBudget::create(gen.natural(1, 12), gen.between(1, 20000, 9),
                                 gen.between(1, 9, 5)),
          StepFunctional::create(gen.between(1, 6, 3), Rational(1) + gen.between(1, 6, 3)));
      ++model2_built;
      if (!verify_kolmogorov(space, model2_built).all_passed()) ++model2_failures;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptySpace && e.code() != ErrorCode::kInsufficientResources) {
        throw;
      }
    }
  }
  const double elapsed = seconds_since(start);
  return {model1_failures == 0 && model2_failures == 0 && elapsed < kKolmogorovSeconds,
          "weighted spaces failing: " + std::to_string(model1_failures) +
              "/1000; counting spaces failing: " + std::to_string(model2_failures) +
              "/1000; " + std::to_string(elapsed) + " s"};
}

// ---------------------------------------------------------------------------

Verdict joint_identities() {
  RationalGen gen(77);
  int failures = 0;
  int equal_cases = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Rational pw_b = gen.between(1, 5000, 40);
    const Rational delta = trial % 10 == 0 ? Rational(1) : gen.in_open(0, 1, 9973);
    const Rational pw_a = delta * pw_b;
    const std::uint64_t n_a = gen.natural(1, 500);
    const std::uint64_t n_b = gen.natural(1, 500);
    const Rational ratio(n_a, n_b);

    const Rational joint = joint_power(pw_a, pw_b, n_a, n_b);
    const Rational expected = (ratio * delta + 1) / (ratio + 1) * pw_b;
    const bool weighted_ok =
        joint == expected && joint_power_from_ratios(ratio, delta, pw_b) == expected;

    const bool inside = pw_a <= joint && joint <= pw_b;
    const bool both_equal = pw_a == joint && joint == pw_b;
    const bool strict = pw_a < joint && joint < pw_b;
    const Sandwich verdict = sandwich_verdict(pw_a, pw_b, joint);
    bool sandwich_ok = inside && (delta == 1 ? both_equal : strict);
    sandwich_ok = sandwich_ok &&
                  verdict == (delta == 1 ? Sandwich::kEquality : Sandwich::kStrict);
    if (delta == 1) ++equal_cases;

    const Rational gamma = ratio + 1;
    const Rational lhs = (ratio * delta + 1) / (ratio * delta + delta);
    const Rational rhs = 1 + (1 - delta) / (delta * gamma);
    const bool identity_ok = lhs == rhs && constraint_ratio(gamma, delta) == rhs;

    if (!(weighted_ok && sandwich_ok && identity_ok)) ++failures;
  }
  return {failures == 0, "failing cases: " + std::to_string(failures) + "/1000 (" +
                             std::to_string(equal_cases) + " with delta = 1)"};
}

// ---------------------------------------------------------------------------

Verdict scaling_laws() {
  const Precision precision(50);
  const Real tolerance = decimal(kScalingTolerance);
  const std::vector<Rational> alphas{Rational(1, 2), 1, Rational(3, 2), 2, 3};
  const std::vector<Rational> betas{Rational(3, 2), 2, Rational(5, 2), 3, 4};
  const std::vector<Rational> gammas{2, Rational(5, 2), 3, 10};
  const std::vector<long> steps{1, 10, 100};
  const Real n = precision.real(7L);

  int checks = 0;
  int failures = 0;
  Real worst = 0;
  for (const auto& alpha : alphas) {
    for (const auto& beta : betas) {
      for (const auto& gamma : gammas) {
        const auto functional = StepFunctional::create(alpha, beta);
        const Real g = precision.real(gamma);
        const Real expected_ratio = pow(g, -precision.real(alpha));
        const Real scale = pow(g, precision.real(alpha / (beta - 1)));
        const Real reported_ratio = blow_up_fixed_power(functional, gamma, precision);
        Real first_ratio = -1;
        for (long s : steps) {
          const Real steps_real = precision.real(s);
          const Real ratio = inverse_functional_derivative(functional, g * n, steps_real) /
                             inverse_functional_derivative(functional, n, steps_real);
          Real error = abs(ratio - expected_ratio) / expected_ratio;
          error = max(error, abs(reported_ratio - expected_ratio) / expected_ratio);
          if (first_ratio < 0) first_ratio = ratio;
          error = max(error, abs(ratio - first_ratio) / expected_ratio);

          const Real original = inverse_functional_derivative(functional, n, steps_real);
          const Real rescaled =
              inverse_functional_derivative(functional, g * n, scale * steps_real);
          error = max(error, abs(rescaled - original) / original);
          const auto blow_up = blow_up_fixed_derivative(functional, gamma, precision);
          error = max(error, abs(blow_up.step_scale - scale) / scale);

          worst = max(worst, error);
          ++checks;
          if (!(error < tolerance)) ++failures;
        }
      }
    }
  }
  const auto sample =
      blow_up_fixed_derivative(StepFunctional::create(1, 2), 2, precision);
  return {failures == 0,
          "checks failing: " + std::to_string(failures) + "/" + std::to_string(checks) +
              ", worst relative error " + sci(worst) +
              "; power-ratio exponents reported (alpha=1, beta=2, gamma=2): derived " +
              to_fraction_string(sample.derived_exponent) + " -> " +
              to_decimal_string(sample.derived_power_ratio, 6) + ", stated " +
              to_fraction_string(sample.stated_exponent) + " -> " +
              to_decimal_string(sample.stated_power_ratio, 6)};
}

// ---------------------------------------------------------------------------

// Decides alpha/(beta-1) > log_gamma(1 + (1-delta)/(delta gamma)) directly.
bool brute_force_constraint(const Rational& alpha, const Rational& beta, const Rational& gamma,
                            const Rational& delta) {
  const unsigned digits = kBruteForceDigits;
  const Rational ratio = 1 + (1 - delta) / (delta * gamma);
  const Real lhs = to_real(alpha / (beta - 1), digits);
  const Real rhs = log(to_real(ratio, digits)) / log(to_real(gamma, digits));
  const Real gap = lhs - rhs;
  if (abs(gap) < Real(kBruteForceTie, digits)) return false;
  return gap > 0;
}

Verdict constraint_checker() {
  const Precision precision(50);
  const Real tolerance = decimal(kThresholdTolerance);
  const auto half = check_constraint(StepFunctional::create(1, 2), 2, Rational(1, 2), precision);
  const Real log2_three_halves = log(decimal("1.5")) / log(decimal("2"));
  const bool threshold_ok = abs(half.threshold - log2_three_halves) < tolerance;

  bool unit_delta_ok = true;
  for (int gamma = 2; gamma <= 20; ++gamma) {
    const auto check = check_constraint(StepFunctional::create(1, 2), gamma, 1, precision);
    unit_delta_ok = unit_delta_ok && check.threshold == 0;
  }

  std::vector<Rational> alphas, betas, gammas;
  for (int i = 1; i <= 10; ++i) {
    alphas.push_back(Rational(i, 10));
    betas.push_back(1 + Rational(i, 4));
    gammas.push_back(1 + Rational(i, 2));
  }
  const std::vector<Rational> deltas{Rational(1, 2), Rational(1, 3), Rational(9, 10)};
  int disagreements = 0;
  int satisfied = 0;
  int total = 0;
  for (const auto& delta : deltas) {
    for (const auto& alpha : alphas) {
      for (const auto& beta : betas) {
        for (const auto& gamma : gammas) {
          const bool library =
              check_constraint(StepFunctional::create(alpha, beta), gamma, delta, precision)
                  .satisfied;
          if (library != brute_force_constraint(alpha, beta, gamma, delta)) ++disagreements;
          if (library) ++satisfied;
          ++total;
        }
      }
    }
  }
  return {threshold_ok && unit_delta_ok && disagreements == 0,
          "threshold(2, 1/2) error " + sci(abs(half.threshold - log2_three_halves)) +
              "; delta = 1 threshold zero " + (unit_delta_ok ? "yes" : "no") +
              "; grid disagreements " + std::to_string(disagreements) + "/" +
              std::to_string(total) + " (" + std::to_string(satisfied) + " satisfied)"};
}

// ---------------------------------------------------------------------------

Verdict quantum_relation() {
  const Precision precision(50);
  const Real tolerance = decimal(kQuantumTolerance);
  const Real sup_tolerance = decimal(kSupNormTolerance);
  const Real alpha = precision.real(Rational(1, 1000));
  const Real half_pi = precision.pi() / 2;
  int failures = 0;
  Real worst_sup = 0;
  Real worst_d_vs_sup = 0;
  for (int k = 1; k <= 100; ++k) {
    const Real separation = half_pi * k / 101;
    const auto pair = RotationPair::create(alpha, alpha + separation);
    const Real expected = sqrt(cos(separation) * cos(separation));
    const Real sup_expected = 2 * sin(separation / 2);
    const Real sup_error = abs(supnorm_distance(pair) - sup_expected);
    worst_sup = max(worst_sup, sup_error);
    worst_d_vs_sup = max(worst_d_vs_sup, abs(supnorm_distance(pair) - operator_distance(pair)));
    if (!(abs(complexity_probability(pair) - expected) < tolerance)) ++failures;
    if (!(sup_error < sup_tolerance)) ++failures;
  }

  const auto spot = RotationPair::create(alpha, alpha + precision.pi() / 3);
  const bool spot_ok = abs(operator_distance(spot) - 1) < tolerance &&
                       abs(error(spot) - decimal("0.5")) < tolerance &&
                       abs(complexity_probability(spot) - decimal("0.5")) < tolerance;
  return {failures == 0 && spot_ok,
          "grid failures " + std::to_string(failures) + "/100; pi/3 spot check " +
              (spot_ok ? "ok" : "wrong") + "; sup-norm column error " + sci(worst_sup) +
              " (largest gap to d, informational: " + sci(worst_d_vs_sup) + ")"};
}

// ---------------------------------------------------------------------------

Rational reach(const FunctionFamily& family, std::uint64_t n, const Rational& power,
               const StepFunctional& functional, const Event& event) {
  const auto budget = ResourceBudget::create(n, power, 1);
  Integer steps;
  try {
    steps = step_budget(budget, functional);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInsufficientResources) throw;
    return 0;
  }
  std::size_t hits = 0;
  for (const auto& g : admissible_set(family, n, steps)) hits += event.contains(g) ? 1 : 0;
  return Rational(hits, family.size());
}

Rational fraction_at(const FunctionFamily& family, std::uint64_t n, const Rational& power,
                     const StepFunctional& functional) {
  const auto members = family.members();
  return reach(family, n, power, functional,
               Event(std::vector<ComplexityFunction>(members.begin(), members.end())));
}

std::string replace_rational_field(const std::string& text, const std::string& key,
                                   const Rational& factor) {
  const std::regex line("(^|\\n)(" + key + "\\s*=\\s*)([^\\n]*)");
  std::smatch match;
  if (!std::regex_search(text, match, line)) return text;
  const Rational scaled = parse_rational(match[3].str()) * factor;
  return match.prefix().str() + match[1].str() + match[2].str() + to_fraction_string(scaled) +
         match.suffix().str();
}

Verdict model2_behaviour() {
  RationalGen gen(424242);

  int monotone_cases = 0;
  int violations = 0;
  while (monotone_cases < 1000) {
    const auto family = enumerate_family(testing::random_family_spec(gen));
    std::vector<ComplexityFunction> chosen;
    for (const auto& g : family.members()) {
      if (gen.coin()) chosen.push_back(g);
    }
    const Event event(chosen);
    const auto functional =
        StepFunctional::create(gen.between(1, 6, 3), Rational(1) + gen.between(1, 6, 3));
    const std::uint64_t n = gen.natural(1, 12);
    const Rational low = gen.between(1, 20000, 9);
    const Rational high = low + gen.between(1, 20000, 9);
    if (reach(family, n, low, functional, event) > reach(family, n, high, functional, event)) {
      ++violations;
    }
    ++monotone_cases;
  }

  // Common scaling of energy and time leaves every power-derived table unchanged.
  const fs::path config = fs::path(CXPROB_SOURCE_DIR) / "configs" / "model2.ini";
  const std::string text = slurp(config);
  const std::string scaled_text =
      replace_rational_field(replace_rational_field(text, "energy", 7), "time", 7);
  const fs::path dir = scratch_dir("scaling");
  std::ofstream(dir / "scaled.ini") << scaled_text;
  const int base_exit =
      run_cli("model2 --config " + config.string() + " --out " + (dir / "base").string());
  const int scaled_exit = run_cli("model2 --config " + (dir / "scaled.ini").string() +
                                  " --out " + (dir / "scaled").string());
  bool scaling_ok = base_exit == 0 && scaled_exit == 0 && scaled_text != text;
  for (const char* name : {"model2_summary.csv", "model2_admissibility.csv", "model2_events.csv"}) {
    scaling_ok = scaling_ok && slurp(dir / "base" / name) == slurp(dir / "scaled" / name) &&
                 !slurp(dir / "base" / name).empty();
  }

  // Two copies of one process combined, on families whose admissible
  // fraction never grows between n and 2n.
  int combine_cases = 0;
  int strict_cases = 0;
  int combine_violations = 0;
  for (int attempt = 0; attempt < 4000 && combine_cases < 300; ++attempt) {
    const auto family = enumerate_family(testing::random_family_spec(gen));
    const auto functional =
        StepFunctional::create(gen.between(1, 6, 3), Rational(1) + gen.between(1, 6, 3));
    const std::uint64_t n = gen.natural(1, 8);
    const Rational energy = gen.between(1, 20000, 9);
    const Rational time = gen.between(1, 9, 5);
    bool shrinking = true;
    for (std::uint64_t m = n; m < 2 * n && shrinking; ++m) {
      shrinking = fraction_at(family, m + 1, energy / time, functional) <=
                  fraction_at(family, m, energy / time, functional);
    }
    if (!shrinking) continue;
    try {
      const auto single = EvolutionSpace::build(
          family, ResourceBudget::create(n, energy, time), functional);
      Rational joint_fraction = 0;
      try {
        joint_fraction = combine_independent(single, single, family).admissible_fraction();
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kEmptySpace) throw;
      }
      ++combine_cases;
      const Rational single_fraction = single.admissible_fraction();
      if (joint_fraction > single_fraction) ++combine_violations;
      if (joint_fraction < single_fraction) ++strict_cases;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptySpace && e.code() != ErrorCode::kInsufficientResources) {
        throw;
      }
    }
  }

  return {violations == 0 && scaling_ok && combine_violations == 0 && combine_cases > 0 &&
              strict_cases > 0,
          "monotonicity violations " + std::to_string(violations) + "/" +
              std::to_string(monotone_cases) + "; (E, t) x 7 tables byte-identical " +
              (scaling_ok ? "yes" : "no") + "; combined P3 > min(P1, P2) in " +
              std::to_string(combine_violations) + "/" + std::to_string(combine_cases) +
              " cases, strict in " + std::to_string(strict_cases)};
}

// ---------------------------------------------------------------------------

Verdict cli_determinism() {
  const fs::path configs = fs::path(CXPROB_SOURCE_DIR) / "configs";
  const fs::path golden = fs::path(CXPROB_SOURCE_DIR) / "tests" / "golden";
  std::vector<fs::path> inputs;
  for (const auto& entry : fs::directory_iterator(configs)) {
    if (entry.path().extension() == ".ini") inputs.push_back(entry.path());
  }
  std::sort(inputs.begin(), inputs.end());

  int runs = 0;
  std::vector<std::string> problems;
  for (const auto& input : inputs) {
    const std::string stem = input.stem().string();
    const std::string command = stem.substr(0, stem.find('_'));
    std::map<std::string, std::string> first;
    for (int repeat = 0; repeat < 2; ++repeat) {
      const fs::path out = scratch_dir(stem + "_" + std::to_string(repeat));
      const int code = run_cli(command + " --config " + input.string() + " --out " + out.string());
      ++runs;
      if (code != 0) {
        problems.push_back(stem + " exit " + std::to_string(code));
        continue;
      }
      const auto files = directory_contents(out);
      if (repeat == 0) {
        first = files;
      } else if (files != first) {
        problems.push_back(stem + " differs between runs");
      }
    }
    const fs::path golden_dir = golden / stem;
    if (!fs::is_directory(golden_dir)) {
      problems.push_back(stem + " has no golden files");
    } else if (directory_contents(golden_dir) != first) {
      problems.push_back(stem + " differs from golden files");
    }
  }
  std::string detail = std::to_string(inputs.size()) + " configs, " + std::to_string(runs) +
                       " runs";
  for (const auto& problem : problems) detail += "; " + problem;
  return {problems.empty() && !inputs.empty(), detail};
}

struct Criterion {
  int number;
  const char* name;
  std::function<Verdict()> check;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "large-n asymptotics", large_n_asymptotics},
      {2, "probability axioms", kolmogorov_suites},
      {3, "joint power identities", joint_identities},
      {4, "scaling laws", scaling_laws},
      {5, "constraint checker", constraint_checker},
      {6, "quantum relation", quantum_relation},
      {7, "counting-model behaviour", model2_behaviour},
      {8, "CLI determinism", cli_determinism},
  };
  int selected = 0;
  if (argc > 1) selected = std::atoi(argv[1]);

  bool all_passed = true;
  for (const auto& criterion : criteria) {
    if (selected != 0 && criterion.number != selected) continue;
    Verdict verdict;
    try {
      verdict = criterion.check();
    } catch (const std::exception& e) {
      verdict = {false, std::string("threw: ") + e.what()};
    }
    all_passed = all_passed && verdict.passed;
    std::cout << (verdict.passed ? "PASS" : "FAIL") << " " << criterion.number << " "
              << criterion.name << ": " << verdict.detail << std::endl;
  }
  fs::remove_all(fs::temp_directory_path() /
                 ("cxprob_acceptance_" + std::to_string(::getpid())));
  return all_passed ? 0 : 1;
}
