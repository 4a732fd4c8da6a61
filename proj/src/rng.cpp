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

#include "qthermo/rng.hpp"

namespace qthermo {

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : RngStream(std::vector<std::uint64_t>{master_seed, stream_index}) {}

RngStream::RngStream(std::vector<std::uint64_t> path) : path_(std::move(path)) { reseed(); }

RngStream RngStream::child(std::uint64_t index) const {
  auto path = path_;
  path.push_back(index);
  return RngStream(std::move(path));
}

void RngStream::reseed() {
  // seed_seq's mixing is fully specified by the standard, as is mt19937_64,
  // so the stream is identical across standard libraries. The path length
  // is mixed in so that {a, b} and {a, b, 0} differ.
  std::vector<std::uint32_t> words;
  words.reserve(2 * path_.size() + 1);
  words.push_back(static_cast<std::uint32_t>(path_.size()));
  for (auto v : path_) {
    words.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    words.push_back(static_cast<std::uint32_t>(v >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  engine_.seed(seq);
}

}  // namespace qthermo
