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

#ifndef CXPROB_SERIALIZE_HPP
#define CXPROB_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "evolution_space.hpp"
#include "function_family.hpp"
#include "state_space.hpp"

namespace cxprob {

using Json = nlohmann::ordered_json;

// Exact quantities travel as strings ("3/4") so no value passes through a
// binary double.

Json to_json(const FunctionFamily& family);
FunctionFamily family_from_json(const Json& json);

/// Family, budget as exact fractions, step budget and the admissible list.
Json to_json(const EvolutionSpace& space);

/// Rebuilds the space from family, budget and functional, then checks the
/// stored step budget and admissible list against the rebuilt ones.
EvolutionSpace space_from_json(const Json& json);

Json to_json(const KolmogorovReport& report);

/// A rectangular string table rendered as CSV or as a JSON array of objects.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
  std::string to_csv() const;
  Json to_json() const;
};

/// Writes `contents` to `path`; throws kIo on failure.
void write_file(const std::string& path, const std::string& contents);

std::string dump(const Json& json);

}  // namespace cxprob

#endif  // CXPROB_SERIALIZE_HPP
