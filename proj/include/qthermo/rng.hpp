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
#include <initializer_list>
#include <limits>
#include <random>
#include <vector>

namespace qthermo {

/// A reproducible random stream identified by (master_seed, stream_index).
///
/// The engine state is a pure function of the key path, so a trial that
/// owns stream `i` draws the same numbers whichever thread runs it and in
/// whatever order. Children extend the key path; the root and any of its
/// descendants never share a key.
class RngStream {
 public:
  using result_type = std::mt19937_64::result_type;

  RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

  RngStream child(std::uint64_t index) const;

  std::uint64_t master_seed() const noexcept { return path_.front(); }
  std::uint64_t stream_index() const noexcept { return path_[1]; }
  const std::vector<std::uint64_t>& key_path() const noexcept { return path_; }

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  explicit RngStream(std::vector<std::uint64_t> path);
  void reseed();

  std::vector<std::uint64_t> path_;
  std::mt19937_64 engine_;
};

}  // namespace qthermo
