// Copyright 2026 The qthermo Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qthermo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A parameter or configuration violates a documented precondition
/// (negative beta, broken phase window, too few sweep points, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// The thermometer has no response to temperature (zero sensitivity or
/// zero Fisher information), so no finite uncertainty exists.
class DegenerateSensitivityError : public Error {
 public:
  using Error::Error;
};

/// An estimated occupation fraction sits on 0 or 1 and the inverse
/// temperature estimate would be infinite.
class UnboundedEstimateError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration refused because the configuration space is too big.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

/// Every trial of a batch produced an invalid estimate.
class EmptyBatchError : public Error {
 public:
  EmptyBatchError(const std::string& msg, std::int64_t invalid_count, std::int64_t trials)
      : Error(msg), invalid_count_(invalid_count), trials_(trials) {}

  std::int64_t invalid_count() const noexcept { return invalid_count_; }
  std::int64_t trials() const noexcept { return trials_; }

 private:
  std::int64_t invalid_count_;
  std::int64_t trials_;
};

class IoError : public Error {
 public:
  IoError(const std::string& msg, std::string path) : Error(msg), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace qthermo
