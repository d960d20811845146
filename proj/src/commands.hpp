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

#ifndef CXPROB_COMMANDS_HPP
#define CXPROB_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "numeric.hpp"

namespace cxprob {

struct CommandOptions {
  std::string out_dir = ".";
  std::optional<OutputFormat> format;   // falls back to the config, then CSV
  std::optional<unsigned> precision;    // falls back to the config, then 50
  std::vector<std::string> extra_events;  // model2 only, comma-separated labels
};

// Each command writes its files into out_dir and returns their paths in
// writing order. Output is a pure function of (config, options).
//
//   model1: model1_probabilities.<fmt>, model1_asymptotic.<fmt>, model1_kolmogorov.json
//   model2: model2_summary.<fmt>, model2_admissibility.<fmt>, model2_events.<fmt>,
//           model2_space.json
//   joint:  joint_summary.<fmt>, joint_space_independent.json, joint_space_dependent.json
//   quantum: quantum_report.<fmt>

std::vector<std::string> run_model1(const RunConfig& config, const CommandOptions& options);
std::vector<std::string> run_model2(const RunConfig& config, const CommandOptions& options);
std::vector<std::string> run_joint(const RunConfig& config, const CommandOptions& options);
std::vector<std::string> run_quantum(const RunConfig& config, const CommandOptions& options);

/// Dispatches on "model1", "model2", "joint" or "quantum".
std::vector<std::string> run_command(const std::string& command, const RunConfig& config,
                                     const CommandOptions& options);

}  // namespace cxprob

#endif  // CXPROB_COMMANDS_HPP
