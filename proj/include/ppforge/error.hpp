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

#include <stdexcept>

namespace ppforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain: non-prime characteristic,
// inversion of zero, d not dividing q-1, and similar.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A criterion was asked about inputs outside the hypotheses it is stated
// for (d <= 2 for the four-condition test, non-commuting A and B, ...).
class ScopeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// The brute-force oracle refuses fields larger than its configured bound.
class OracleBoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace ppforge
