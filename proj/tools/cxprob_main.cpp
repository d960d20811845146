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

// Batch front end: cxprob <model1|model2|joint|quantum> --config FILE [options]

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cxprob/cxprob.h"

namespace {

constexpr const char* kPrecisionEnv = "CXPROB_PRECISION";
constexpr int kUsageExit = 2;

struct ConfigDeleter {
  void operator()(cxp_config* config) const { cxp_config_free(config); }
};

struct Options {
  std::string config;
  std::string out = ".";
  std::string format;
  std::optional<unsigned> precision;
  std::vector<std::string> events;
};

std::optional<unsigned> parse_digits(std::string_view text) {
  unsigned value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) return std::nullopt;
  return value;
}

int run(const std::string& command, const Options& options) {
  unsigned digits = 0;
  if (options.precision) {
    digits = *options.precision;
  } else if (const char* env = std::getenv(kPrecisionEnv); env != nullptr && *env != '\0') {
    auto parsed = parse_digits(env);
    if (!parsed) {
      std::cerr << "error: " << kPrecisionEnv << " must be a whole number of digits, got '"
                << env << "'\n";
      return kUsageExit;
    }
    digits = *parsed;
  }
  if (digits != 0 && digits < 15) {
    std::cerr << "error: precision must be at least 15 digits, got " << digits << "\n";
    return kUsageExit;
  }

  cxp_config* raw = nullptr;
  cxp_status status = cxp_config_load(options.config.c_str(), &raw);
  if (status != CXP_OK) {
    std::cerr << "error: " << cxp_last_error() << "\n";
    return cxp_exit_code(status);
  }
  std::unique_ptr<cxp_config, ConfigDeleter> config(raw);

  std::vector<const char*> events;
  for (const auto& event : options.events) events.push_back(event.c_str());

  status = cxp_run_command(config.get(), command.c_str(), options.out.c_str(),
                           options.format.empty() ? nullptr : options.format.c_str(), digits,
                           events.data(), events.size());
  if (status != CXP_OK) {
    std::cerr << "error: " << cxp_last_error() << "\n";
    return cxp_exit_code(status);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complexity-based probability spaces over time-complexity functions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cxp_version()));

  Options options;
  std::string selected;
  auto add_command = [&](const std::string& name, const std::string& description) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("-c,--config", options.config, "Run configuration (INI)")
        ->required();
    sub->add_option("-o,--out", options.out, "Output directory")->capture_default_str();
    sub->add_option("-f,--format", options.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("-p,--precision", options.precision,
                    "Significant decimal digits (overrides CXPROB_PRECISION and the config)");
    sub->callback([&selected, name] { selected = name; });
    return sub;
  };

  add_command("model1", "Weighted state space: probability tables and asymptotics");
  CLI::App* model2 =
      add_command("model2", "Resource-bounded evolution space: budget, membership, events");
  model2->add_option("-e,--event", options.events,
                     "Extra event as comma-separated labels, e.g. \"n,n^2\" (repeatable)");
  add_command("joint", "Joint and dependent processes, power sandwich, constraint");
  add_command("quantum", "Rotation-distance report over an angle grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageExit;
  }
  return run(selected, options);
}
