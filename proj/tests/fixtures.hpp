// Copyright 2026 The spinchain Authors
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

#include <vector>

#include "spinchain/calibrate.hpp"

namespace fixtures {

struct CalibratedCase {
  const spinchain::CasePreset* preset;
  spinchain::FitReport report;
  spinchain::DensityMatrix rho0;  // exact coupled state
};

inline double calibrated_epsilon() {
  static const double eps = spinchain::fit_epsilon().epsilon;
  return eps;
}

/// The four cases, calibrated once per test binary.
inline const std::vector<CalibratedCase>& calibrated_cases() {
  static const std::vector<CalibratedCase> all = [] {
    std::vector<CalibratedCase> v;
    for (const spinchain::CasePreset& p : spinchain::presets()) {
      spinchain::FitReport r = spinchain::calibrate_case(p, calibrated_epsilon());
      spinchain::DensityMatrix rho = spinchain::coupled_state(r.base_p1, r.tau_ab, r.tau_bc);
      v.push_back({&p, std::move(r), std::move(rho)});
    }
    return v;
  }();
  return all;
}

inline const CalibratedCase& calibrated(const std::string& name) {
  for (const CalibratedCase& c : calibrated_cases()) {
    if (c.preset->name == name) return c;
  }
  throw spinchain::ContractError("no calibrated case " + name);
}

}  // namespace fixtures
