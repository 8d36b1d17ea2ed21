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

#include "ppforge/record.hpp"

#include <sstream>

#include <json.hpp>

namespace ppforge {

namespace {

using json = nlohmann::ordered_json;

std::string param_text(const ParamValue& v) {
  if (const auto* n = std::get_if<std::uint64_t>(&v)) return std::to_string(*n);
  return std::get<std::string>(v);
}

std::string modulus_text(const Field& field) {
  const auto m = field.modulus();
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0 || m[i] != 1) out << m[i];
    if (i > 0 && m[i] != 1) out << '*';
    if (i == 1) out << 'x';
    if (i > 1) out << "x^" << i;
  }
  return out.str();
}

}  // namespace

std::string_view oracle_status_name(OracleStatus s) noexcept {
  switch (s) {
    case OracleStatus::confirmed: return "confirmed";
    case OracleStatus::refuted: return "refuted";
    case OracleStatus::skipped: return "skipped";
  }
  return "skipped";
}

OracleStatus oracle_status(const Field& field, const FqPoly& f, std::uint64_t max_q) {
  if (field.q() > max_q) return OracleStatus::skipped;
  return is_permutation(field, f, max_q) ? OracleStatus::confirmed : OracleStatus::refuted;
}

std::string to_json_line(const OutputRecord& r) {
  json params = json::object();
  for (const auto& [key, value] : r.parameters) {
    std::visit([&](const auto& v) { params[key] = v; }, value);
  }
  json conditions = json::array();
  for (const auto& c : r.conditions) {
    json entry{{"label", c.label}, {"holds", c.holds}};
    if (c.witness) entry["witness"] = *c.witness;
    conditions.push_back(std::move(entry));
  }
  const json out{
      {"schema_version", kSchemaVersion},
      {"field", r.field},
      {"construction", r.construction},
      {"parameters", std::move(params)},
      {"conditions", std::move(conditions)},
      {"verdict", r.verdict},
      {"polynomial", r.polynomial},
      {"oracle", oracle_status_name(r.oracle)},
  };
  return out.dump();
}

std::string to_pretty(const OutputRecord& r) {
  std::ostringstream out;
  out << r.construction << " over F_" << r.field << '\n';
  for (const auto& [key, value] : r.parameters) out << "  " << key << " = " << param_text(value) << '\n';
  for (const auto& c : r.conditions) {
    out << "  [" << (c.holds ? "yes" : " no") << "] " << c.label;
    if (c.witness) out << "  (" << *c.witness << ')';
    out << '\n';
  }
  out << "  polynomial: " << r.polynomial << '\n';
  out << "  verdict:    " << (r.verdict ? "permutation" : "not a permutation") << '\n';
  out << "  oracle:     " << oracle_status_name(r.oracle) << '\n';
  return out.str();
}

std::string to_json_line(const EquivalenceReport& report) {
  json disagreements = json::array();
  for (const auto& d : report.disagreements) {
    disagreements.push_back(json{{"field", d.field},
                                 {"construction", d.construction},
                                 {"parameters", d.parameters},
                                 {"theorem_verdict", d.theorem_verdict},
                                 {"oracle_verdict", d.oracle_verdict}});
  }
  const json out{
      {"schema_version", kSchemaVersion},
      {"suite", report.suite},
      {"fields", report.fields},
      {"cases_run", report.cases_run},
      {"skipped_fields", report.skipped_fields},
      {"disagreements", std::move(disagreements)},
      {"passed", report.passed()},
  };
  return out.dump();
}

std::string to_pretty(const EquivalenceReport& report) {
  std::ostringstream out;
  out << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << ", " << report.cases_run << " cases over";
  for (const auto& f : report.fields) out << ' ' << f;
  out << '\n';
  for (const auto& f : report.skipped_fields) out << "  skipped F_" << f << " (above oracle bound)\n";
  for (const auto& d : report.disagreements) {
    out << "  F_" << d.field << ' ' << d.construction << ' ' << d.parameters << ": theorem says "
        << (d.theorem_verdict ? "yes" : "no") << ", oracle says " << (d.oracle_verdict ? "yes" : "no") << '\n';
  }
  return out.str();
}

std::string field_info_json(const Field& field) {
  const json out{
      {"schema_version", kSchemaVersion},
      {"field", field.designation()},
      {"p", field.p()},
      {"n", field.n()},
      {"q", field.q()},
      {"modulus", modulus_text(field)},
      {"primitive_element", field.primitive_element().index},
  };
  return out.dump();
}

std::string field_info_pretty(const Field& field) {
  std::ostringstream out;
  out << "F_" << field.designation() << '\n'
      << "  p = " << field.p() << ", n = " << field.n() << ", q = " << field.q() << '\n'
      << "  modulus:           " << modulus_text(field) << '\n'
      << "  primitive element: " << field.primitive_element().index << '\n';
  return out.str();
}

}  // namespace ppforge
