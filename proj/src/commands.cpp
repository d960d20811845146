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

#include "commands.hpp"

#include <algorithm>
#include <filesystem>

#include "error.hpp"
#include "evolution_space.hpp"
#include "function_family.hpp"
#include "quantum_distance.hpp"
#include "serialize.hpp"
#include "state_space.hpp"

namespace cxprob {

namespace {

namespace fs = std::filesystem;

struct Output {
  fs::path dir;
  OutputFormat format;
  Precision precision;
  std::vector<std::string> written;

  std::string table(const std::string& base, const Table& table) {
    const std::string extension = format == OutputFormat::kCsv ? ".csv" : ".json";
    return file(base + extension,
                format == OutputFormat::kCsv ? table.to_csv() : dump(table.to_json()));
  }

  std::string json(const std::string& name, const Json& json) { return file(name, dump(json)); }

  std::string file(const std::string& name, const std::string& contents) {
    const std::string path = (dir / name).string();
    write_file(path, contents);
    written.push_back(path);
    return path;
  }

  std::string decimal(const Real& value) const { return to_decimal_string(value, precision.digits()); }
  std::string decimal(const Rational& value) const {
    return to_decimal_string(value, precision.digits());
  }
};

Output open_output(const RunConfig& config, const CommandOptions& options) {
  Output out;
  out.dir = options.out_dir;
  out.format = options.format.value_or(config.format.value_or(OutputFormat::kCsv));
  out.precision = Precision(options.precision.value_or(config.precision.value_or(kDefaultDigits)));
  std::error_code ec;
  fs::create_directories(out.dir, ec);
  if (ec || !fs::is_directory(out.dir)) {
    fail(ErrorCode::kIo, "cannot create output directory '" + options.out_dir + "'");
  }
  return out;
}

template <typename T>
const T& require_block(const std::optional<T>& block, const char* name) {
  if (!block) fail(ErrorCode::kConfig, std::string(name) + ": section required by this command");
  return *block;
}

Event resolve_event(const std::string& members, const EvolutionSpace& space) {
  if (members == "*") return space.admissible_event();
  return Event::parse(members);
}

std::string yes_no(bool value) { return value ? "true" : "false"; }

EvolutionSpace build_space_a(const RunConfig& config) {
  const FamilySpec& spec = require_block(config.family, "family");
  const Model2Block& m2 = require_block(config.model2, "model2");
  return EvolutionSpace::build(enumerate_family(spec),
                               ResourceBudget::create(m2.n, m2.energy, m2.time),
                               StepFunctional::create(m2.alpha, m2.beta));
}

}  // namespace

std::vector<std::string> run_model1(const RunConfig& config, const CommandOptions& options) {
  const FamilySpec& spec = require_block(config.family, "family");
  const Model1Block& m1 = require_block(config.model1, "model1");
  Output out = open_output(config, options);
  const FunctionFamily family = enumerate_family(spec);

  Table probabilities{{"n", "function", "kind", "weight", "probability"}, {}};
  Json kolmogorov = Json::array();
  const Real tolerance = out.precision.real(m1.tolerance);
  for (std::uint64_t n : m1.n_values) {
    const Model1Space space = Model1Space::build(family, m1.mu_e, n, out.precision);
    for (std::size_t i = 0; i < family.size(); ++i) {
      probabilities.add_row({std::to_string(n), family[i].label(),
                             std::string(to_string(family[i].kind())),
                             out.decimal(space.weights()[i]),
                             out.decimal(space.probabilities()[i])});
    }
    Json entry = to_json(verify_kolmogorov(space, tolerance));
    kolmogorov.push_back({{"n", n}, {"report", std::move(entry)}});
  }

  Table asymptotic{{"n", "p_exp_total", "p_poly_total", "max_uniform_deviation"}, {}};
  for (const auto& row : asymptotic_report(spec, m1.mu_e, m1.n_values, out.precision)) {
    asymptotic.add_row({std::to_string(row.n), out.decimal(row.p_exp_total),
                        out.decimal(row.p_poly_total), out.decimal(row.max_uniform_deviation)});
  }

  out.table("model1_probabilities", probabilities);
  out.table("model1_asymptotic", asymptotic);
  out.json("model1_kolmogorov.json",
           Json{{"mu_e", to_fraction_string(m1.mu_e)},
                {"tolerance", to_fraction_string(m1.tolerance)},
                {"spaces", std::move(kolmogorov)}});
  return out.written;
}

std::vector<std::string> run_model2(const RunConfig& config, const CommandOptions& options) {
  const Model2Block& m2 = require_block(config.model2, "model2");
  Output out = open_output(config, options);
  const EvolutionSpace space = build_space_a(config);
  const FunctionFamily& family = space.family();

  const std::vector<Rational> sample_powers{space.budget().power() / 2, space.budget().power(),
                                            space.budget().power() * 2};
  Table summary{{"quantity", "value"}, {}};
  summary.add_row({"n", std::to_string(m2.n)});
  summary.add_row({"power", to_fraction_string(space.budget().power())});
  summary.add_row({"alpha", to_fraction_string(m2.alpha)});
  summary.add_row({"beta", to_fraction_string(m2.beta)});
  summary.add_row({"step_budget", space.step_budget().str()});
  summary.add_row({"family_size", std::to_string(family.size())});
  summary.add_row({"admissible_size", std::to_string(space.admissible().size())});
  summary.add_row({"admissible_fraction", to_fraction_string(space.admissible_fraction())});
  summary.add_row({"concave_increments",
                   yes_no(concave_increments(space.functional(), m2.n, sample_powers,
                                             space.budget().power(), out.precision))});

  Table admissibility{{"function", "kind", "steps_at_n", "admissible"}, {}};
  for (const auto& g : family.members()) {
    const auto exact = evaluate_exact(g, m2.n);
    admissibility.add_row({g.label(), std::string(to_string(g.kind())),
                           exact ? to_fraction_string(*exact)
                                 : out.decimal(evaluate(g, m2.n, out.precision)),
                           yes_no(space.is_admissible(g))});
  }

  std::vector<NamedEvent> events = m2.events;
  const bool lists_s = std::any_of(events.begin(), events.end(),
                                   [](const NamedEvent& e) { return e.members == "*"; });
  if (!lists_s) events.insert(events.begin(), {"S", "*"});
  for (std::size_t i = 0; i < options.extra_events.size(); ++i) {
    events.push_back({"event_" + std::to_string(i + 1), options.extra_events[i]});
  }

  Table event_table{
      {"event", "members", "size", "probability", "probability_decimal", "reading"}, {}};
  for (const auto& named : events) {
    const Event event = resolve_event(named.members, space);
    const Rational p = space.probability(event);
    event_table.add_row({named.name, event.label(), std::to_string(event.size()),
                         to_fraction_string(p), out.decimal(p), interpret(p).name});
  }

  out.table("model2_summary", summary);
  out.table("model2_admissibility", admissibility);
  out.table("model2_events", event_table);
  out.json("model2_space.json", to_json(space));
  return out.written;
}

std::vector<std::string> run_joint(const RunConfig& config, const CommandOptions& options) {
  const JointBlock& joint = require_block(config.joint, "joint");
  const Model2Block& m2 = require_block(config.model2, "model2");
  Output out = open_output(config, options);

  const EvolutionSpace a = build_space_a(config);
  const std::uint64_t n_b = joint.resolve_n_b(m2.n);
  const EvolutionSpace b = EvolutionSpace::build(
      a.family(), ResourceBudget::create(n_b, joint.energy_b, joint.time_b), a.functional());
  const FunctionFamily joint_family =
      joint.joint_family ? enumerate_family(*joint.joint_family) : a.family();

  const EvolutionSpace independent = combine_independent(a, b, joint_family);
  const EvolutionSpace dependent = combine_dependent(a, b, joint.shared_time, joint_family);

  const Rational pw_a = a.budget().power();
  const Rational pw_b = b.budget().power();
  const Rational pw_joint = joint_power(pw_a, pw_b, m2.n, n_b);
  const Rational dimension_ratio = Rational(Integer(m2.n)) / Rational(Integer(n_b));
  const Rational power_ratio = pw_a / pw_b;
  const Rational closed_form = joint_power_from_ratios(dimension_ratio, power_ratio, pw_b);

  // The constraint is stated for the lower-power process as A (delta <= 1).
  const bool swapped = power_ratio > 1;
  const Rational delta = swapped ? 1 / power_ratio : power_ratio;
  const Rational gamma = (swapped ? 1 / dimension_ratio : dimension_ratio) + 1;
  const ConstraintCheck constraint = check_constraint(a.functional(), gamma, delta, out.precision);
  const Real fixed_power = blow_up_fixed_power(a.functional(), gamma, out.precision);
  const FixedDerivativeBlowUp fixed_derivative =
      blow_up_fixed_derivative(a.functional(), gamma, out.precision);

  Table table{{"quantity", "fraction", "decimal", "note"}, {}};
  auto exact_row = [&](const std::string& name, const Rational& value, std::string note = "") {
    table.add_row({name, to_fraction_string(value), out.decimal(value), std::move(note)});
  };
  auto real_row = [&](const std::string& name, const Real& value, std::string note = "") {
    table.add_row({name, "", out.decimal(value), std::move(note)});
  };

  exact_row("pw_a", pw_a);
  exact_row("pw_b", pw_b);
  exact_row("n_a", Rational(Integer(m2.n)));
  exact_row("n_b", Rational(Integer(n_b)));
  exact_row("dimension_ratio", dimension_ratio, "n_a / n_b");
  exact_row("power_ratio", power_ratio, "pw_a / pw_b");
  exact_row("pw_joint", pw_joint, std::string(to_string(sandwich_verdict(pw_a, pw_b, pw_joint))));
  exact_row("pw_joint_closed_form", closed_form,
            closed_form == pw_joint ? "matches" : "mismatch");
  exact_row("constraint_gamma", gamma, swapped ? "roles swapped: b has the lower power" : "");
  exact_row("constraint_delta", delta);
  real_row("constraint_exponent", constraint.exponent, "alpha / (beta - 1)");
  real_row("constraint_threshold", constraint.threshold);
  real_row("constraint_margin", constraint.margin,
           constraint.satisfied ? "satisfied" : "violated");
  real_row("blow_up_fixed_power_ratio", fixed_power, "gamma^(-alpha)");
  real_row("blow_up_step_scale", fixed_derivative.step_scale, "gamma^(alpha / (beta - 1))");
  real_row("blow_up_power_ratio_derived", fixed_derivative.derived_power_ratio,
           "exponent " + to_fraction_string(fixed_derivative.derived_exponent));
  real_row("blow_up_power_ratio_stated", fixed_derivative.stated_power_ratio,
           "exponent " + to_fraction_string(fixed_derivative.stated_exponent));

  exact_row("shared_time", joint.shared_time);
  exact_row("pw_independent", independent.budget().power());
  exact_row("pw_dependent", dependent.budget().power());
  exact_row("step_budget_a", Rational(a.step_budget()));
  exact_row("step_budget_b", Rational(b.step_budget()));
  exact_row("step_budget_independent", Rational(independent.step_budget()));
  exact_row("step_budget_dependent", Rational(dependent.step_budget()));

  const Rational p1 = a.admissible_fraction();
  const Rational p2 = b.admissible_fraction();
  const Rational p3 = independent.admissible_fraction();
  const Rational p3_dependent = dependent.admissible_fraction();
  exact_row("p1_admissible_fraction", p1);
  exact_row("p2_admissible_fraction", p2);
  exact_row("p3_independent", p3, p3 <= (p1 < p2 ? p1 : p2) ? "at most min(p1, p2)" : "exceeds min(p1, p2)");
  exact_row("p3_dependent", p3_dependent,
            p3_dependent >= p3 ? "at least p3_independent" : "below p3_independent");
  exact_row("p1_times_p2", p1 * p2,
            p3_dependent > p1 * p2 ? "p3_dependent exceeds product" : "p3_dependent does not exceed product");

  if (joint.event_a || joint.event_b) {
    const Event event_a = joint.event_a ? resolve_event(*joint.event_a, independent) : Event();
    const Event event_b = joint.event_b ? resolve_event(*joint.event_b, independent) : Event();
    // Events range over the joint family; only their admissible part can be
    // reached, so both readings are relative to the whole family.
    const Event reach_a = event_a.intersect(independent.admissible_event());
    const Event reach_b = event_b.intersect(independent.admissible_event());
    exact_row("p3_event_a", independent.reach_probability(event_a), event_a.label());
    exact_row("p3_event_b", independent.reach_probability(event_b), event_b.label());
    exact_row("p3_event_a_and_b", independent.reach_probability(event_a.intersect(event_b)));
    if (!reach_b.empty()) {
      exact_row("conditional_a_given_b", independent.conditional(reach_a, reach_b));
    } else {
      table.add_row({"conditional_a_given_b", "", "", "undefined: P(b) = 0"});
    }
  }

  out.table("joint_summary", table);
  out.json("joint_space_independent.json", to_json(independent));
  out.json("joint_space_dependent.json", to_json(dependent));
  return out.written;
}

std::vector<std::string> run_quantum(const RunConfig& config, const CommandOptions& options) {
  const QuantumBlock& q = require_block(config.quantum, "quantum");
  Output out = open_output(config, options);
  const Precision precision = out.precision;

  const Real alpha = parse_angle(q.alpha, precision);
  std::vector<Real> separations;
  for (const auto& text : q.separations) separations.push_back(parse_angle(text, precision));
  if (q.grid_points > 0) {
    const Real span = precision.pi() / 2 - alpha;
    for (unsigned k = 1; k <= q.grid_points; ++k) {
      separations.push_back(span * k / (q.grid_points + 1));
    }
  }

  Table table{{"separation", "d_stated", "d_supnorm_numeric", "epsilon", "p_complexity", "p_qm",
               "sqrt_p_qm"},
              {}};
  for (const auto& separation : separations) {
    const QuantumRow row = quantum_row(RotationPair::create(alpha, alpha + separation));
    table.add_row({out.decimal(row.separation), out.decimal(row.distance_stated),
                   out.decimal(row.distance_supnorm), out.decimal(row.error),
                   out.decimal(row.complexity_probability), out.decimal(row.quantum_probability),
                   out.decimal(row.sqrt_quantum_probability)});
  }
  out.table("quantum_report", table);
  return out.written;
}

std::vector<std::string> run_command(const std::string& command, const RunConfig& config,
                                     const CommandOptions& options) {
  if (command == "model1") return run_model1(config, options);
  if (command == "model2") return run_model2(config, options);
  if (command == "joint") return run_joint(config, options);
  if (command == "quantum") return run_quantum(config, options);
  fail(ErrorCode::kInvalidArgument, "unknown command '" + command + "'");
}

}  // namespace cxprob
