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

#include <string>
#include <vector>

namespace qthermo {

struct VerificationCheck {
  std::string name;
  bool passed = false;
  double max_error = 0.0;
  double tolerance = 0.0;
  int cases = 0;
};

/// Compares every closed form against the brute-force oracles on fixed
/// grids: thermal enumeration, NOON port probabilities, interaction phases
/// and the dephased visibility.
std::vector<VerificationCheck> run_oracle_verification();

bool all_passed(const std::vector<VerificationCheck>& checks);

}  // namespace qthermo
