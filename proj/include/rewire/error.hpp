// Copyright 2026 The Authors.
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

#ifndef REWIRE_ERROR_HPP_
#define REWIRE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rewire {

// Base of every error thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list input. line() is 1-based.
class parse_error : public error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Structurally valid input that violates a graph invariant (self-loops).
class validation_error : public error {
 public:
  using error::error;
};

// A rewiring whose preconditions do not hold on the target graph.
class rewiring_inapplicable : public error {
 public:
  using error::error;
};

// Two edges that share an endpoint were offered as a rewiring pair.
class invalid_pair : public error {
 public:
  using error::error;
};

// The requested metric has no value for this input (zero variance etc).
class undefined_metric : public error {
 public:
  using error::error;
};

// Iterative eigen-solver failed to reach the requested residual.
class convergence_error : public error {
 public:
  convergence_error(const std::string& what, double residual)
      : error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Weighted sampling requested with an all-zero weight vector.
class degenerate_weights : public error {
 public:
  using error::error;
};

// Approximation ratio against an optimum of zero.
class undefined_ratio : public error {
 public:
  using error::error;
};

}  // namespace rewire

#endif  // REWIRE_ERROR_HPP_
