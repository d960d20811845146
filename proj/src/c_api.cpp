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

#include "cxprob/cxprob.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "commands.hpp"
#include "config.hpp"
#include "error.hpp"
#include "evolution_space.hpp"
#include "function_family.hpp"
#include "numeric.hpp"
#include "quantum_distance.hpp"
#include "serialize.hpp"
#include "state_space.hpp"

struct cxp_family {
  cxprob::FunctionFamily value;
};

struct cxp_model1 {
  cxprob::Model1Space value;
};

struct cxp_space {
  cxprob::EvolutionSpace value;
};

struct cxp_config {
  cxprob::RunConfig value;
};

namespace {

using cxprob::ErrorCode;

thread_local std::string g_last_error;

cxp_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return CXP_ERR_INVALID_ARGUMENT;
    case ErrorCode::kConfig: return CXP_ERR_CONFIG;
    case ErrorCode::kDegenerateSpace: return CXP_ERR_DEGENERATE_SPACE;
    case ErrorCode::kEmptySpace: return CXP_ERR_EMPTY_SPACE;
    case ErrorCode::kInsufficientResources: return CXP_ERR_INSUFFICIENT_RESOURCES;
    case ErrorCode::kNotFound: return CXP_ERR_NOT_FOUND;
    case ErrorCode::kIo: return CXP_ERR_IO;
    case ErrorCode::kInternal: return CXP_ERR_INTERNAL;
  }
  return CXP_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into a status and the thread-local
// error message.
template <typename Body>
cxp_status guarded(Body&& body) {
  try {
    body();
    return CXP_OK;
  } catch (const cxprob::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("malformed JSON: ") + e.what();
    return CXP_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CXP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CXP_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return CXP_ERR_INTERNAL;
  }
}

std::string_view arg(const char* text, const char* name) {
  cxprob::require(text != nullptr, std::string(name) + " must not be null");
  return text;
}

template <typename T>
void require_out(T* out) {
  cxprob::require(out != nullptr, "output pointer must not be null");
}

void emit(const std::string& text, char** out) {
  char* copy = static_cast<char*>(std::malloc(text.size() + 1));
  if (copy == nullptr) throw std::bad_alloc();
  std::memcpy(copy, text.c_str(), text.size() + 1);
  *out = copy;
}

cxprob::Precision precision_of(unsigned digits) {
  return digits == 0 ? cxprob::Precision() : cxprob::Precision(digits);
}

cxprob::Rational rational_arg(const char* text, const char* name) {
  return cxprob::parse_rational(arg(text, name));
}

// "" or NULL yields no coefficients, "a:b:s" a grid, otherwise a list.
std::vector<cxprob::Rational> coefficient_spec(const char* text) {
  std::vector<cxprob::Rational> values;
  if (text == nullptr) return values;
  std::string spec(text);
  if (spec.find_first_not_of(" \t") == std::string::npos) return values;
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream stream(spec);
    for (std::string part; std::getline(stream, part, ':');) parts.push_back(part);
    cxprob::require(parts.size() == 3, "grid must have the form min:max:step");
    cxprob::CoefficientGrid grid{cxprob::parse_rational(parts[0]),
                                 cxprob::parse_rational(parts[1]),
                                 cxprob::parse_rational(parts[2])};
    return grid.expand();
  }
  std::stringstream stream(spec);
  for (std::string item; std::getline(stream, item, ',');) {
    values.push_back(cxprob::parse_rational(item));
  }
  return values;
}

cxprob::Event event_arg(const cxprob::EvolutionSpace& space, const char* text,
                        const char* name) {
  std::string_view labels = arg(text, name);
  if (labels == "*") return space.admissible_event();
  return cxprob::Event::parse(labels);
}

}  // namespace

extern "C" {

const char* cxp_version(void) { return "1.0.0"; }

const char* cxp_last_error(void) { return g_last_error.c_str(); }

const char* cxp_status_name(cxp_status status) {
  switch (status) {
    case CXP_OK: return "ok";
    case CXP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CXP_ERR_CONFIG: return "configuration error";
    case CXP_ERR_DEGENERATE_SPACE: return "degenerate space";
    case CXP_ERR_EMPTY_SPACE: return "empty space";
    case CXP_ERR_INSUFFICIENT_RESOURCES: return "insufficient resources";
    case CXP_ERR_IO: return "I/O error";
    case CXP_ERR_NOT_FOUND: return "not found";
    case CXP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

int cxp_exit_code(cxp_status status) {
  switch (status) {
    case CXP_OK: return 0;
    case CXP_ERR_INVALID_ARGUMENT:
    case CXP_ERR_CONFIG:
      return 2;
    case CXP_ERR_DEGENERATE_SPACE:
    case CXP_ERR_EMPTY_SPACE:
    case CXP_ERR_INSUFFICIENT_RESOURCES:
      return 3;
    case CXP_ERR_IO: return 4;
    default: return 1;
  }
}

void cxp_string_free(char* text) { std::free(text); }

cxp_status cxp_family_create(const char* poly_spec, const char* exp_spec, cxp_family** out) {
  return guarded([&] {
    require_out(out);
    cxprob::FamilySpec spec{coefficient_spec(poly_spec), coefficient_spec(exp_spec)};
    *out = new cxp_family{cxprob::enumerate_family(spec)};
  });
}

cxp_status cxp_family_from_json(const char* json, cxp_family** out) {
  return guarded([&] {
    require_out(out);
    auto parsed = cxprob::Json::parse(arg(json, "json"));
    *out = new cxp_family{cxprob::family_from_json(parsed)};
  });
}

cxp_status cxp_family_to_json(const cxp_family* family, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    cxprob::require(family != nullptr, "family must not be null");
    emit(cxprob::dump(cxprob::to_json(family->value)), out_json);
  });
}

size_t cxp_family_size(const cxp_family* family) {
  return family == nullptr ? 0 : family->value.size();
}

cxp_status cxp_family_member(const cxp_family* family, size_t index, char** out_label) {
  return guarded([&] {
    require_out(out_label);
    cxprob::require(family != nullptr, "family must not be null");
    if (index >= family->value.size()) {
      cxprob::fail(ErrorCode::kNotFound, "member index out of range");
    }
    emit(family->value[index].label(), out_label);
  });
}

void cxp_family_free(cxp_family* family) { delete family; }

cxp_status cxp_evaluate(const char* function, uint64_t n, unsigned digits,
                        char** out_decimal) {
  return guarded([&] {
    require_out(out_decimal);
    auto precision = precision_of(digits);
    auto f = cxprob::ComplexityFunction::parse(arg(function, "function"));
    emit(cxprob::to_decimal_string(cxprob::evaluate(f, n, precision), precision.digits()),
         out_decimal);
  });
}

cxp_status cxp_derivative(const char* function, uint64_t n, unsigned digits,
                          char** out_decimal) {
  return guarded([&] {
    require_out(out_decimal);
    auto precision = precision_of(digits);
    auto f = cxprob::ComplexityFunction::parse(arg(function, "function"));
    emit(cxprob::to_decimal_string(cxprob::derivative(f, n, precision), precision.digits()),
         out_decimal);
  });
}

cxp_status cxp_model1_build(const cxp_family* family, const char* mu_e, uint64_t n,
                            unsigned digits, cxp_model1** out) {
  return guarded([&] {
    require_out(out);
    cxprob::require(family != nullptr, "family must not be null");
    cxprob::Rational prior =
        mu_e == nullptr ? cxprob::kDefaultExpPrior : cxprob::parse_rational(mu_e);
    *out = new cxp_model1{
        cxprob::Model1Space::build(family->value, prior, n, precision_of(digits))};
  });
}

cxp_status cxp_model1_weight(const cxp_model1* space, const char* function,
                             char** out_decimal) {
  return guarded([&] {
    require_out(out_decimal);
    cxprob::require(space != nullptr, "space must not be null");
    auto f = cxprob::ComplexityFunction::parse(arg(function, "function"));
    auto index = space->value.family().index_of(f);
    if (!index) cxprob::fail(ErrorCode::kNotFound, f.label() + " is not a family member");
    emit(cxprob::to_decimal_string(space->value.weights()[*index],
                                   space->value.precision().digits()),
         out_decimal);
  });
}

cxp_status cxp_model1_probability(const cxp_model1* space, const char* function,
                                  char** out_decimal) {
  return guarded([&] {
    require_out(out_decimal);
    cxprob::require(space != nullptr, "space must not be null");
    auto f = cxprob::ComplexityFunction::parse(arg(function, "function"));
    emit(cxprob::to_decimal_string(space->value.probability(f),
                                   space->value.precision().digits()),
         out_decimal);
  });
}

cxp_status cxp_model1_normalization(const cxp_model1* space, char** out_decimal) {
  return guarded([&] {
    require_out(out_decimal);
    cxprob::require(space != nullptr, "space must not be null");
    emit(cxprob::to_decimal_string(space->value.normalization(),
                                   space->value.precision().digits()),
         out_decimal);
  });
}

cxp_status cxp_model1_kolmogorov(const cxp_model1* space, const char* tolerance,
                                 int* all_passed, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    cxprob::require(space != nullptr, "space must not be null");
    auto tol = rational_arg(tolerance, "tolerance");
    cxprob::require(tol >= 0, "tolerance must be non-negative");
    auto report =
        cxprob::verify_kolmogorov(space->value, space->value.precision().real(tol));
    if (all_passed != nullptr) *all_passed = report.all_passed() ? 1 : 0;
    emit(cxprob::dump(cxprob::to_json(report)), out_json);
  });
}

void cxp_model1_free(cxp_model1* space) { delete space; }

cxp_status cxp_asymptotic_report(const cxp_family* family, const char* mu_e,
                                 const uint64_t* n_values, size_t count, unsigned digits,
                                 int as_json, char** out_text) {
  return guarded([&] {
    require_out(out_text);
    cxprob::require(family != nullptr, "family must not be null");
    cxprob::require(n_values != nullptr || count == 0, "n_values must not be null");
    cxprob::FamilySpec spec;
    for (const auto& f : family->value.members()) {
      (f.is_polynomial() ? spec.poly_coefficients : spec.exp_coefficients)
          .push_back(f.coefficient());
    }
    cxprob::Rational prior =
        mu_e == nullptr ? cxprob::kDefaultExpPrior : cxprob::parse_rational(mu_e);
    auto precision = precision_of(digits);
    auto rows = cxprob::asymptotic_report(
        spec, prior, std::span<const std::uint64_t>(n_values, count), precision);
    cxprob::Table table{{"n", "p_exp_total", "p_poly_total", "max_uniform_deviation"}, {}};
    for (const auto& row : rows) {
      table.add_row({std::to_string(row.n),
                     cxprob::to_decimal_string(row.p_exp_total, precision.digits()),
                     cxprob::to_decimal_string(row.p_poly_total, precision.digits()),
                     cxprob::to_decimal_string(row.max_uniform_deviation, precision.digits())});
    }
    emit(as_json ? cxprob::dump(table.to_json()) : table.to_csv(), out_text);
  });
}

cxp_status cxp_step_budget(uint64_t n, const char* energy, const char* time, const char* alpha,
                           const char* beta, char** out_steps) {
  return guarded([&] {
    require_out(out_steps);
    auto budget = cxprob::ResourceBudget::create(n, rational_arg(energy, "energy"),
                                                 rational_arg(time, "time"));
    auto functional = cxprob::StepFunctional::create(rational_arg(alpha, "alpha"),
                                                     rational_arg(beta, "beta"));
    emit(cxprob::step_budget(budget, functional).str(), out_steps);
  });
}

cxp_status cxp_space_build(const cxp_family* family, uint64_t n, const char* energy,
                           const char* time, const char* alpha, const char* beta,
                           cxp_space** out) {
  return guarded([&] {
    require_out(out);
    cxprob::require(family != nullptr, "family must not be null");
    auto budget = cxprob::ResourceBudget::create(n, rational_arg(energy, "energy"),
                                                 rational_arg(time, "time"));
    auto functional = cxprob::StepFunctional::create(rational_arg(alpha, "alpha"),
                                                     rational_arg(beta, "beta"));
    *out = new cxp_space{cxprob::EvolutionSpace::build(family->value, budget, functional)};
  });
}

cxp_status cxp_space_step_budget(const cxp_space* space, char** out_steps) {
  return guarded([&] {
    require_out(out_steps);
    cxprob::require(space != nullptr, "space must not be null");
    emit(space->value.step_budget().str(), out_steps);
  });
}

size_t cxp_space_admissible_count(const cxp_space* space) {
  return space == nullptr ? 0 : space->value.admissible().size();
}

cxp_status cxp_space_admissible_member(const cxp_space* space, size_t index,
                                       char** out_label) {
  return guarded([&] {
    require_out(out_label);
    cxprob::require(space != nullptr, "space must not be null");
    auto members = space->value.admissible();
    if (index >= members.size()) {
      cxprob::fail(ErrorCode::kNotFound, "admissible index out of range");
    }
    emit(members[index].label(), out_label);
  });
}

cxp_status cxp_space_probability(const cxp_space* space, const char* event,
                                 char** out_fraction) {
  return guarded([&] {
    require_out(out_fraction);
    cxprob::require(space != nullptr, "space must not be null");
    auto value = space->value.probability(event_arg(space->value, event, "event"));
    emit(cxprob::to_fraction_string(value), out_fraction);
  });
}

cxp_status cxp_space_conditional(const cxp_space* space, const char* event_a,
                                 const char* event_b, char** out_fraction) {
  return guarded([&] {
    require_out(out_fraction);
    cxprob::require(space != nullptr, "space must not be null");
    auto value = space->value.conditional(event_arg(space->value, event_a, "event_a"),
                                          event_arg(space->value, event_b, "event_b"));
    emit(cxprob::to_fraction_string(value), out_fraction);
  });
}

cxp_status cxp_space_admissible_fraction(const cxp_space* space, char** out_fraction) {
  return guarded([&] {
    require_out(out_fraction);
    cxprob::require(space != nullptr, "space must not be null");
    emit(cxprob::to_fraction_string(space->value.admissible_fraction()), out_fraction);
  });
}

cxp_status cxp_space_to_json(const cxp_space* space, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    cxprob::require(space != nullptr, "space must not be null");
    emit(cxprob::dump(cxprob::to_json(space->value)), out_json);
  });
}

cxp_status cxp_space_from_json(const char* json, cxp_space** out) {
  return guarded([&] {
    require_out(out);
    auto parsed = cxprob::Json::parse(arg(json, "json"));
    *out = new cxp_space{cxprob::space_from_json(parsed)};
  });
}

cxp_status cxp_space_combine_independent(const cxp_space* a, const cxp_space* b,
                                         const cxp_family* joint_family, cxp_space** out) {
  return guarded([&] {
    require_out(out);
    cxprob::require(a != nullptr && b != nullptr, "spaces must not be null");
    const auto& family = joint_family != nullptr ? joint_family->value : a->value.family();
    *out = new cxp_space{cxprob::combine_independent(a->value, b->value, family)};
  });
}

cxp_status cxp_space_combine_dependent(const cxp_space* a, const cxp_space* b,
                                       const char* shared_time, const cxp_family* joint_family,
                                       cxp_space** out) {
  return guarded([&] {
    require_out(out);
    cxprob::require(a != nullptr && b != nullptr, "spaces must not be null");
    const auto& family = joint_family != nullptr ? joint_family->value : a->value.family();
    *out = new cxp_space{cxprob::combine_dependent(
        a->value, b->value, rational_arg(shared_time, "shared_time"), family)};
  });
}

void cxp_space_free(cxp_space* space) { delete space; }

cxp_status cxp_interpret(const char* probability, char** out_reading) {
  return guarded([&] {
    require_out(out_reading);
    emit(cxprob::interpret(rational_arg(probability, "probability")).name,
         out_reading);
  });
}

cxp_status cxp_joint_power(const char* pw_a, const char* pw_b, uint64_t n_a, uint64_t n_b,
                           char** out_fraction) {
  return guarded([&] {
    require_out(out_fraction);
    auto value = cxprob::joint_power(rational_arg(pw_a, "pw_a"),
                                     rational_arg(pw_b, "pw_b"), n_a, n_b);
    emit(cxprob::to_fraction_string(value), out_fraction);
  });
}

cxp_status cxp_check_constraint(const char* alpha, const char* beta, const char* gamma,
                                const char* delta, unsigned digits, int* satisfied,
                                char** out_margin) {
  return guarded([&] {
    require_out(satisfied);
    auto functional = cxprob::StepFunctional::create(rational_arg(alpha, "alpha"),
                                                     rational_arg(beta, "beta"));
    auto precision = precision_of(digits);
    auto check = cxprob::check_constraint(functional, rational_arg(gamma, "gamma"),
                                          rational_arg(delta, "delta"), precision);
    *satisfied = check.satisfied ? 1 : 0;
    if (out_margin != nullptr) {
      emit(cxprob::to_decimal_string(check.margin, precision.digits()), out_margin);
    }
  });
}

cxp_status cxp_quantum_row(const char* alpha, const char* beta, unsigned digits,
                           cxp_quantum_values* out) {
  return guarded([&] {
    require_out(out);
    auto precision = precision_of(digits);
    auto pair = cxprob::RotationPair::create(
        cxprob::parse_angle(arg(alpha, "alpha"), precision),
        cxprob::parse_angle(arg(beta, "beta"), precision));
    auto row = cxprob::quantum_row(pair);
    out->separation = row.separation.convert_to<double>();
    out->distance_stated = row.distance_stated.convert_to<double>();
    out->distance_supnorm = row.distance_supnorm.convert_to<double>();
    out->error = row.error.convert_to<double>();
    out->complexity_probability = row.complexity_probability.convert_to<double>();
    out->quantum_probability = row.quantum_probability.convert_to<double>();
    out->sqrt_quantum_probability = row.sqrt_quantum_probability.convert_to<double>();
  });
}

cxp_status cxp_config_load(const char* path, cxp_config** out) {
  return guarded([&] {
    require_out(out);
    *out = new cxp_config{cxprob::load_config(std::string(arg(path, "path")))};
  });
}

cxp_status cxp_config_parse(const char* text, cxp_config** out) {
  return guarded([&] {
    require_out(out);
    std::istringstream stream{std::string(arg(text, "text"))};
    *out = new cxp_config{cxprob::parse_config(stream)};
  });
}

unsigned cxp_config_precision(const cxp_config* config) {
  if (config == nullptr || !config->value.precision) return 0;
  return *config->value.precision;
}

void cxp_config_free(cxp_config* config) { delete config; }

cxp_status cxp_run_command(const cxp_config* config, const char* command, const char* out_dir,
                           const char* format, unsigned digits, const char* const* events,
                           size_t event_count) {
  return guarded([&] {
    cxprob::require(config != nullptr, "config must not be null");
    cxprob::require(events != nullptr || event_count == 0, "events must not be null");
    cxprob::CommandOptions options;
    if (out_dir != nullptr) options.out_dir = out_dir;
    if (format != nullptr) options.format = cxprob::parse_output_format(format);
    if (digits != 0) options.precision = digits;
    for (size_t i = 0; i < event_count; ++i) {
      options.extra_events.emplace_back(arg(events[i], "event"));
    }
    cxprob::run_command(std::string(arg(command, "command")), config->value, options);
  });
}

}  // extern "C"
