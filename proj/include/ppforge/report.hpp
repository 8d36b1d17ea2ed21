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

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ppforge {

struct Condition {
  std::string label;
  bool holds = false;
  std::optional<std::string> witness;
};

/// Ordered hypotheses of a criterion. The verdict is their conjunction and
/// is never stored separately.
class ConditionReport {
 public:
  void add(std::string label, bool holds, std::optional<std::string> witness = std::nullopt) {
    conditions_.push_back({std::move(label), holds, std::move(witness)});
  }

  const std::vector<Condition>& conditions() const noexcept { return conditions_; }
  const Condition& operator[](std::size_t i) const { return conditions_.at(i); }
  std::size_t size() const noexcept { return conditions_.size(); }

  bool verdict() const noexcept {
    return std::all_of(conditions_.begin(), conditions_.end(), [](const Condition& c) { return c.holds; });
  }

 private:
  std::vector<Condition> conditions_;
};

}  // namespace ppforge
