// Copyright 2026 The ppforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Machine-readable output. Every record is one line of JSON with a fixed
// key order, so identical invocations print identical bytes.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ppforge/field.hpp"
#include "ppforge/oracle.hpp"
#include "ppforge/report.hpp"

namespace ppforge {

inline constexpr std::string_view kSchemaVersion = "1";

enum class OracleStatus { confirmed, refuted, skipped };

std::string_view oracle_status_name(OracleStatus s) noexcept;

using ParamValue = std::variant<std::uint64_t, std::string>;

struct OutputRecord {
  std::string field;
  std::string construction;
  std::vector<std::pair<std::string, ParamValue>> parameters;
  std::vector<Condition> conditions;
  bool verdict = false;
  std::string polynomial;
  OracleStatus oracle = OracleStatus::skipped;
};

/// Runs the oracle when the field is within max_q, otherwise marks skipped.
OracleStatus oracle_status(const Field& field, const FqPoly& f, std::uint64_t max_q);

std::string to_json_line(const OutputRecord& record);
std::string to_pretty(const OutputRecord& record);

/// The report without its wall-clock time.
std::string to_json_line(const EquivalenceReport& report);
std::string to_pretty(const EquivalenceReport& report);

std::string field_info_json(const Field& field);
std::string field_info_pretty(const Field& field);

}  // namespace ppforge
