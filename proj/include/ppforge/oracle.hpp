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

#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ppforge/field.hpp"
#include "ppforge/poly.hpp"

namespace ppforge {

inline constexpr std::uint64_t kDefaultMaxQ = 65536;
inline constexpr std::uint64_t kDefaultSeed = 0x5eed2008c0de0001ULL;

/// Ground truth: evaluates f at every element and checks that no value
/// repeats. Throws OracleBoundError when q > max_q.
bool is_permutation(const Field& field, const FqPoly& f, std::uint64_t max_q = kDefaultMaxQ);

enum class Suite { lemma, theorem1, proposition, corollary2, trace_theorem, hermite, example_family, structural };

std::string_view suite_name(Suite s) noexcept;
/// Throws DomainError for unknown names.
Suite parse_suite(std::string_view name);
std::vector<Suite> all_suites();

/// The field list each suite runs over when none is given.
std::vector<std::string> default_fields(Suite s);

struct Disagreement {
  std::string field;
  std::string construction;
  std::string parameters;
  bool theorem_verdict = false;
  bool oracle_verdict = false;

  friend auto operator<=>(const Disagreement&, const Disagreement&) = default;
};

struct EquivalenceReport {
  std::string suite;
  std::vector<std::string> fields;
  std::uint64_t cases_run = 0;
  /// Fields above the oracle bound; their cases are not compared.
  std::vector<std::string> skipped_fields;
  std::vector<Disagreement> disagreements;
  std::chrono::nanoseconds elapsed{0};

  bool passed() const noexcept { return disagreements.empty(); }
};

struct SuitePlan {
  Suite suite = Suite::lemma;
  std::vector<std::string> fields;
  std::uint64_t seed = kDefaultSeed;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
  std::uint64_t max_q = kDefaultMaxQ;
};

/// Runs every case of the suite's parameter grid on every listed field and
/// compares each construction's verdict with is_permutation. The report is
/// independent of the thread count; disagreements come out sorted.
EquivalenceReport run_equivalence_suite(const SuitePlan& plan);

}  // namespace ppforge
