// Copyright 2026 The roundosc Authors
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

#ifndef ROUNDOSC_SERIES_CONTROL_H_
#define ROUNDOSC_SERIES_CONTROL_H_

#include <cstdint>

namespace roundosc {

enum class SummationMode {
  kAuto,      // adaptive when the model decays fast enough, else cesaro
  kAdaptive,  // symmetric partial sums with an analytic tail bound
  kCesaro,    // Fejer mean of order fejer_n
};

// Knobs shared by every truncated sum and product in the library.
struct SeriesControl {
  double tol = 1e-12;
  std::int64_t n_max = 1'000'000;
  std::int64_t fejer_n = 4096;
  SummationMode mode = SummationMode::kAuto;

  // Throws Error(kInvalidArgument) unless tol > 0, n_max >= 1, fejer_n >= 1.
  void Validate() const;
};

}  // namespace roundosc

#endif  // ROUNDOSC_SERIES_CONTROL_H_
