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

#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "error.hpp"
#include "evolution_space.hpp"

namespace cxprob {

namespace {

using boost::property_tree::ptree;

[[noreturn]] void config_error(const std::string& field, const std::string& message) {
  fail(ErrorCode::kConfig, field + ": " + message);
}

template <typename F>
auto in_field(const std::string& field, F&& parse) {
  try {
    return parse();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConfig) throw;
    config_error(field, e.what());
  }
}

std::string trimmed(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return std::string(text.substr(first, last - first + 1));
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> items;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    std::string item = trimmed(text.substr(start, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - start));
    if (!item.empty()) items.push_back(std::move(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

std::uint64_t parse_natural(std::string_view text) {
  const std::string value = trimmed(text);
  if (value.empty() || value.size() > 19 ||
      !std::all_of(value.begin(), value.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    fail(ErrorCode::kInvalidArgument, "expected a natural number, got '" + value + "'");
  }
  const std::uint64_t n = std::stoull(value);
  require(n >= 1, "expected a natural number >= 1, got 0");
  return n;
}

/// Key/value access to one INI section that remembers which keys were read,
/// so unknown (typically misspelt) keys can be reported.
class Section {
 public:
  Section(std::string name, const ptree& tree) : name_(std::move(name)), tree_(tree) {}

  std::string field(const std::string& key) const { return name_ + "." + key; }

  bool has(const std::string& key) {
    used_.insert(key);
    return tree_.find(key) != tree_.not_found();
  }

  std::string text(const std::string& key) {
    used_.insert(key);
    const auto it = tree_.find(key);
    if (it == tree_.not_found()) config_error(field(key), "required key is missing");
    return trimmed(it->second.data());
  }

  Rational rational(const std::string& key) {
    return in_field(field(key), [&] { return parse_rational(text(key)); });
  }

  std::uint64_t natural(const std::string& key) {
    return in_field(field(key), [&] { return parse_natural(text(key)); });
  }

  const ptree& tree() const { return tree_; }

  void reject_unknown_keys() const {
    for (const auto& [key, value] : tree_) {
      if (!used_.contains(key)) config_error(field(key), "unknown key");
    }
  }

 private:
  std::string name_;
  const ptree& tree_;
  std::set<std::string> used_;
};

std::vector<Rational> coefficients(Section& section, const std::string& kind) {
  const bool has_list = section.has(kind);
  const bool has_grid = section.has(kind + "_min") || section.has(kind + "_max") ||
                        section.has(kind + "_step");
  if (has_list && has_grid) {
    config_error(section.field(kind), "give either a list or a min/max/step grid, not both");
  }
  if (has_list) {
    std::vector<Rational> values;
    for (const auto& item : split_list(section.text(kind))) {
      values.push_back(in_field(section.field(kind), [&] { return parse_rational(item); }));
    }
    return values;
  }
  if (!has_grid) return {};

  CoefficientGrid grid{section.rational(kind + "_min"), section.rational(kind + "_max"),
                       section.rational(kind + "_step")};
  if (grid.step <= 0) config_error(section.field(kind + "_step"), "grid step must be positive");
  if (grid.min > grid.max) {
    config_error(section.field(kind + "_max"), "grid max is below grid min");
  }
  return in_field(section.field(kind + "_step"), [&] { return grid.expand(); });
}

FamilySpec parse_family(Section section, const std::string& name) {
  FamilySpec spec;
  spec.poly_coefficients = coefficients(section, "poly");
  spec.exp_coefficients = coefficients(section, "exp");
  section.reject_unknown_keys();
  in_field(name, [&] {
    spec.validate();
    return 0;
  });
  return spec;
}

Model1Block parse_model1(Section section) {
  Model1Block block;
  if (section.has("mu_e")) block.mu_e = section.rational("mu_e");
  if (block.mu_e <= 0 || block.mu_e >= 1) {
    config_error(section.field("mu_e"), "must lie strictly between 0 and 1");
  }
  for (const auto& item : split_list(section.text("n"))) {
    block.n_values.push_back(in_field(section.field("n"), [&] { return parse_natural(item); }));
  }
  if (block.n_values.empty()) config_error(section.field("n"), "needs at least one value");
  if (section.has("tolerance")) block.tolerance = section.rational("tolerance");
  if (block.tolerance < 0) config_error(section.field("tolerance"), "must be non-negative");
  section.reject_unknown_keys();
  return block;
}

Model2Block parse_model2(Section section) {
  Model2Block block;
  block.n = section.natural("n");
  block.energy = section.rational("energy");
  block.time = section.rational("time");
  block.alpha = section.rational("alpha");
  block.beta = section.rational("beta");
  in_field(section.field("energy"), [&] {
    ResourceBudget::create(block.n, block.energy, block.time);
    return 0;
  });
  in_field(section.field("alpha"), [&] {
    StepFunctional::create(block.alpha, block.beta);
    return 0;
  });
  section.reject_unknown_keys();
  return block;
}

std::vector<NamedEvent> parse_events(Section section) {
  std::vector<NamedEvent> events;
  for (const auto& [name, value] : section.tree()) {
    NamedEvent event{name, trimmed(value.data())};
    if (event.members != "*") {
      in_field(section.field(name), [&] { return Event::parse(event.members); });
    }
    events.push_back(std::move(event));
  }
  return events;
}

JointBlock parse_joint(Section section) {
  JointBlock block;
  const bool has_n = section.has("n_b");
  const bool has_ratio = section.has("dimension_ratio");
  if (has_n == has_ratio) {
    config_error(section.field("n_b"), "give exactly one of n_b or dimension_ratio");
  }
  if (has_n) block.n_b = section.natural("n_b");
  if (has_ratio) {
    block.dimension_ratio = section.rational("dimension_ratio");
    if (*block.dimension_ratio <= 0) {
      config_error(section.field("dimension_ratio"), "must be positive");
    }
  }
  block.energy_b = section.rational("energy_b");
  block.time_b = section.rational("time_b");
  if (block.energy_b <= 0) config_error(section.field("energy_b"), "must be positive");
  if (block.time_b <= 0) config_error(section.field("time_b"), "must be positive");
  if (section.has("shared_time")) block.shared_time = section.rational("shared_time");
  if (block.shared_time < 0) config_error(section.field("shared_time"), "must be non-negative");
  for (const char* key : {"event_a", "event_b"}) {
    if (!section.has(key)) continue;
    std::string members = section.text(key);
    in_field(section.field(key), [&] { return Event::parse(members); });
    (std::string(key) == "event_a" ? block.event_a : block.event_b) = std::move(members);
  }
  section.reject_unknown_keys();
  return block;
}

QuantumBlock parse_quantum(Section section) {
  QuantumBlock block;
  const Precision check;
  if (section.has("alpha")) block.alpha = section.text("alpha");
  const Real alpha =
      in_field(section.field("alpha"), [&] { return parse_angle(block.alpha, check); });
  if (!(alpha > 0 && alpha < check.pi() / 2)) {
    config_error(section.field("alpha"), "must lie strictly between 0 and pi/2");
  }
  if (section.has("separations")) {
    block.separations = split_list(section.text("separations"));
    for (const auto& item : block.separations) {
      in_field(section.field("separations"), [&] { return parse_angle(item, check); });
    }
  }
  if (section.has("grid_points")) {
    const std::uint64_t points = section.natural("grid_points");
    if (points > 1000000) config_error(section.field("grid_points"), "at most 1000000 points");
    block.grid_points = static_cast<unsigned>(points);
  }
  if (block.separations.empty() && block.grid_points == 0) {
    config_error(section.field("separations"), "give separations, grid_points, or both");
  }
  section.reject_unknown_keys();
  return block;
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  fail(ErrorCode::kConfig, "format: expected csv or json, got '" + std::string(text) + "'");
}

std::string_view to_string(OutputFormat format) {
  return format == OutputFormat::kCsv ? "csv" : "json";
}

std::uint64_t JointBlock::resolve_n_b(std::uint64_t n_a) const {
  if (n_b) return *n_b;
  const Rational value = Rational(Integer(n_a)) / *dimension_ratio;
  if (!is_integer(value) || value < 1) {
    config_error("joint.dimension_ratio",
                 "n_A / dimension_ratio = " + to_fraction_string(value) +
                     " is not a natural number");
  }
  return to_u64(boost::multiprecision::numerator(value));
}

Real parse_angle(std::string_view text, Precision precision) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  const auto at = compact.find("pi");
  if (at == std::string::npos) return precision.real(parse_rational(compact));

  // <factor>[*]pi[/<divisor>]
  std::string factor = compact.substr(0, at);
  std::string rest = compact.substr(at + 2);
  if (!factor.empty() && factor.back() == '*') factor.pop_back();
  Rational multiple = factor.empty() ? Rational(1) : parse_rational(factor);
  if (!rest.empty()) {
    if (rest.front() != '/') {
      fail(ErrorCode::kInvalidArgument, "cannot parse angle '" + std::string(text) + "'");
    }
    const Rational divisor = parse_rational(rest.substr(1));
    require(divisor != 0, "angle divisor is zero");
    multiple /= divisor;
  }
  return precision.real(multiple) * precision.pi();
}

namespace {

// "section.key: " for the key on a given 1-based line, or "" if there is none.
std::string field_at_line(const std::string& text, unsigned long line) {
  std::istringstream lines(text);
  std::string current;
  std::string section;
  for (unsigned long number = 1; std::getline(lines, current); ++number) {
    const std::string entry = trimmed(current);
    if (entry.starts_with('[') && entry.ends_with(']')) {
      section = trimmed(entry.substr(1, entry.size() - 2));
    }
    if (number != line) continue;
    const auto equals = entry.find('=');
    if (equals == std::string::npos || entry.starts_with(';') || entry.starts_with('#')) return "";
    const std::string key = trimmed(entry.substr(0, equals));
    return (section.empty() ? key : section + "." + key) + ": ";
  }
  return "";
}

}  // namespace

RunConfig parse_config(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::istringstream stream(text);
  ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(stream, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    fail(ErrorCode::kConfig, field_at_line(text, e.line()) + "syntax: " + e.message() +
                                 " (line " + std::to_string(e.line()) + ")");
  }

  RunConfig config;
  static const std::set<std::string> kSections = {"family", "joint_family", "model1",
                                                  "model2", "events",       "joint",
                                                  "quantum"};
  for (const auto& [key, value] : tree) {
    if (kSections.contains(key)) continue;
    if (!value.empty()) config_error(key, "unknown section");
    if (key == "precision") {
      const std::uint64_t digits = in_field("precision", [&] { return parse_natural(value.data()); });
      if (digits < kMinimumDigits || digits > 10000) {
        config_error("precision", "must lie in [" + std::to_string(kMinimumDigits) + ", 10000]");
      }
      config.precision = static_cast<unsigned>(digits);
    } else if (key == "format") {
      config.format = parse_output_format(trimmed(value.data()));
    } else {
      config_error(key, "unknown key");
    }
  }

  auto section = [&](const char* name) -> std::optional<Section> {
    const auto it = tree.find(name);
    if (it == tree.not_found()) return std::nullopt;
    return Section(name, it->second);
  };

  if (auto s = section("family")) config.family = parse_family(*s, "family");
  if (auto s = section("model1")) config.model1 = parse_model1(*s);
  if (auto s = section("model2")) config.model2 = parse_model2(*s);
  if (auto s = section("events")) {
    if (!config.model2) config_error("events", "requires a [model2] section");
    config.model2->events = parse_events(*s);
  }
  if (auto s = section("joint")) {
    if (!config.model2) config_error("joint", "requires a [model2] section for process A");
    config.joint = parse_joint(*s);
    if (auto f = section("joint_family")) {
      config.joint->joint_family = parse_family(*f, "joint_family");
    }
    in_field("joint", [&] { return config.joint->resolve_n_b(config.model2->n); });
  } else if (section("joint_family")) {
    config_error("joint_family", "requires a [joint] section");
  }
  if (auto s = section("quantum")) config.quantum = parse_quantum(*s);
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot open config file '" + path + "'");
  return parse_config(in);
}

}  // namespace cxprob
