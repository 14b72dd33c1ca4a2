// Copyright 2026 The tadic Authors
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
#include <string>

namespace tadic {

/// Base of every error the library raises. `kind()` is a stable
/// machine-readable tag; the CLI maps it to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// An input violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precondition"; }
};

/// A brute-force enumeration would exceed the configured point budget.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, unsigned long long required, unsigned long long budget)
      : Error(what), required_(required), budget_(budget) {}
  const char* kind() const noexcept override { return "budget"; }
  unsigned long long required() const noexcept { return required_; }
  unsigned long long budget() const noexcept { return budget_; }

 private:
  unsigned long long required_;
  unsigned long long budget_;
};

/// Working precision is too small to produce a trustworthy answer.
class PrecisionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precision"; }
};

/// A computed object violates a property that theory guarantees
/// (integrality, degree, valuation bound). Always indicates a bug or a
/// counterexample and is never silently ignored.
class PropertyViolation : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "property_violation"; }
};

}  // namespace tadic
