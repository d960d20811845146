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

#ifndef CXPROB_CONFIG_HPP
#define CXPROB_CONFIG_HPP

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "function_family.hpp"
#include "numeric.hpp"

namespace cxprob {

enum class OutputFormat { kCsv, kJson };

OutputFormat parse_output_format(std::string_view text);
std::string_view to_string(OutputFormat format);

struct Model1Block {
  Rational mu_e{1, 2};
  std::vector<std::uint64_t> n_values;
  Rational tolerance{1, 1000000000000};
};

struct NamedEvent {
  std::string name;
  std::string members;  // comma-separated labels, or "*" for the whole admissible set
};

struct Model2Block {
  std::uint64_t n = 1;
  Rational energy;
  Rational time;
  Rational alpha;
  Rational beta;
  std::vector<NamedEvent> events;
};

struct JointBlock {
  std::optional<std::uint64_t> n_b;
  std::optional<Rational> dimension_ratio;  // n_A / n_B
  Rational energy_b;
  Rational time_b;
  Rational shared_time{0};
  std::optional<FamilySpec> joint_family;
  std::optional<std::string> event_a;
  std::optional<std::string> event_b;

  /// n_B, either given directly or n_A / dimension_ratio.
  std::uint64_t resolve_n_b(std::uint64_t n_a) const;
};

struct QuantumBlock {
  std::string alpha = "1/1000";           // angle expression
  std::vector<std::string> separations;   // explicit beta - alpha values
  unsigned grid_points = 0;               // uniform grid over (0, pi/2 - alpha)
};

/// Parsed and validated run configuration (INI text). Numbers accept exact
/// "p/q" syntax as well as plain decimals.
struct RunConfig {
  std::optional<FamilySpec> family;
  std::optional<Model1Block> model1;
  std::optional<Model2Block> model2;
  std::optional<JointBlock> joint;
  std::optional<QuantumBlock> quantum;
  std::optional<unsigned> precision;
  std::optional<OutputFormat> format;
};

/// Throws kConfig with a message naming the offending field.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);

/// "pi/3", "2*pi/5", "1/4*pi", "pi", or any rational (radians).
Real parse_angle(std::string_view text, Precision precision);

}  // namespace cxprob

#endif  // CXPROB_CONFIG_HPP
