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

#include "serialize.hpp"

#include <fstream>

#include "error.hpp"

namespace cxprob {

namespace {

const Json& field(const Json& json, const char* key) {
  if (!json.is_object() || !json.contains(key)) {
    fail(ErrorCode::kInvalidArgument, std::string("missing JSON field '") + key + "'");
  }
  return json.at(key);
}

std::string string_field(const Json& json, const char* key) {
  const Json& value = field(json, key);
  if (!value.is_string()) {
    fail(ErrorCode::kInvalidArgument, std::string("JSON field '") + key + "' must be a string");
  }
  return value.get<std::string>();
}

std::string csv_escape(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

Json to_json(const FunctionFamily& family) {
  Json members = Json::array();
  for (const auto& f : family.members()) {
    members.push_back({{"kind", std::string(to_string(f.kind()))},
                       {"numerator", boost::multiprecision::numerator(f.coefficient()).str()},
                       {"denominator", boost::multiprecision::denominator(f.coefficient()).str()}});
  }
  return Json{{"members", std::move(members)}};
}

FunctionFamily family_from_json(const Json& json) {
  const Json& members = field(json, "members");
  if (!members.is_array()) fail(ErrorCode::kInvalidArgument, "'members' must be an array");
  std::vector<ComplexityFunction> parsed;
  for (const auto& member : members) {
    const GrowthKind kind = parse_growth_kind(string_field(member, "kind"));
    const Rational c = parse_rational(string_field(member, "numerator")) /
                       parse_rational(string_field(member, "denominator"));
    parsed.push_back(ComplexityFunction::make(kind, c));
  }
  return FunctionFamily::from_members(std::move(parsed));
}

Json to_json(const EvolutionSpace& space) {
  Json admissible = Json::array();
  for (const auto& g : space.admissible()) admissible.push_back(g.label());
  const ResourceBudget& budget = space.budget();
  return Json{{"family", to_json(space.family())},
              {"budget",
               {{"n", budget.n()},
                {"energy", to_fraction_string(budget.energy())},
                {"time", to_fraction_string(budget.time())},
                {"power", to_fraction_string(budget.power())}}},
              {"functional",
               {{"alpha", to_fraction_string(space.functional().alpha())},
                {"beta", to_fraction_string(space.functional().beta())}}},
              {"step_budget", space.step_budget().str()},
              {"admissible", std::move(admissible)}};
}

EvolutionSpace space_from_json(const Json& json) {
  const Json& budget_json = field(json, "budget");
  const Json& n_json = field(budget_json, "n");
  if (!n_json.is_number_unsigned()) {
    fail(ErrorCode::kInvalidArgument, "budget 'n' must be a positive integer");
  }
  const Rational energy = parse_rational(string_field(budget_json, "energy"));
  const Rational time = parse_rational(string_field(budget_json, "time"));
  ResourceBudget budget = ResourceBudget::create(n_json.get<std::uint64_t>(), energy, time);
  if (budget_json.contains("power") &&
      parse_rational(string_field(budget_json, "power")) != budget.power()) {
    fail(ErrorCode::kInvalidArgument, "stored power does not equal energy / time");
  }

  const Json& functional_json = field(json, "functional");
  StepFunctional functional =
      StepFunctional::create(parse_rational(string_field(functional_json, "alpha")),
                             parse_rational(string_field(functional_json, "beta")));

  EvolutionSpace space = EvolutionSpace::build(family_from_json(field(json, "family")),
                                               std::move(budget), std::move(functional));

  if (json.contains("step_budget") &&
      parse_integer(string_field(json, "step_budget")) != space.step_budget()) {
    fail(ErrorCode::kInvalidArgument, "stored step budget does not match the rebuilt space");
  }
  if (json.contains("admissible")) {
    std::vector<ComplexityFunction> stored;
    for (const auto& label : json.at("admissible")) {
      if (!label.is_string()) fail(ErrorCode::kInvalidArgument, "admissible labels must be strings");
      stored.push_back(ComplexityFunction::parse(label.get<std::string>()));
    }
    if (Event(std::move(stored)) != space.admissible_event()) {
      fail(ErrorCode::kInvalidArgument, "stored admissible set does not match the rebuilt space");
    }
  }
  return space;
}

Json to_json(const KolmogorovReport& report) {
  Json checks = Json::array();
  for (const auto& check : report.checks) {
    checks.push_back({{"axiom", check.axiom}, {"passed", check.passed}, {"detail", check.detail}});
  }
  return Json{{"all_passed", report.all_passed()}, {"checks", std::move(checks)}};
}

void Table::add_row(std::vector<std::string> row) {
  require(row.size() == columns.size(), "table row width does not match the header");
  rows.push_back(std::move(row));
}

std::string Table::to_csv() const {
  std::string out;
  auto append_line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += csv_escape(cells[i]);
    }
    out += '\n';
  };
  append_line(columns);
  for (const auto& row : rows) append_line(row);
  return out;
}

Json Table::to_json() const {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json object = Json::object();
    for (std::size_t i = 0; i < columns.size(); ++i) object[columns[i]] = row[i];
    out.push_back(std::move(object));
  }
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  out << contents;
  out.close();
  if (!out) fail(ErrorCode::kIo, "failed writing '" + path + "'");
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

}  // namespace cxprob
