// Copyright 2026 The pinch Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace pinch {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// The Lambert W series grew instead of shrinking.
class SeriesDivergence : public std::runtime_error {
 public:
  SeriesDivergence(std::string const& what, double last_term)
      : std::runtime_error(what), last_term_(last_term) {}
  double last_term() const noexcept { return last_term_; }

 private:
  double last_term_;
};

// No root of the defining equation on the requested branch.
class InfeasibleBranch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coefficient count does not match the configured antenna count.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Phase alignment could not place antenna `index` (0-based).
class AlignmentFailure : public std::runtime_error {
 public:
  AlignmentFailure(std::string const& what, std::size_t index)
      : std::runtime_error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// Configuration rejected at parse time; names the offending field.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, std::string const& what)
      : std::invalid_argument(what), field_(std::move(field)) {}
  std::string const& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace pinch
