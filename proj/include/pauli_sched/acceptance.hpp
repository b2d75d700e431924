// Copyright 2026 The pauli_sched Authors
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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pauli_sched {

/// Coefficients of the acceptance probability used by the approximate search:
///
///   p(delta, v, m) = step(delta) * v^prefactor_power
///                    * exp(-decay * v * (v - m) / (delta^delta_power * m)),
///
/// clamped into [0, 1]. `delta` is how much smaller the space needed so far is than the
/// best space found. v is the vertex count and m counts the vertices measured so far,
/// including the candidate set. The defaults give v^2 exp(-v (v-m) / (delta^3 m)).
struct AcceptanceParams {
    double prefactor_power = 2.0;
    double decay = 1.0;
    double delta_power = 3.0;
};

/// Zero unless delta > 0. Throws std::invalid_argument unless 0 < m <= v.
inline double accept_probability(std::int64_t delta, std::size_t v, std::size_t m,
                                 const AcceptanceParams &params = {}) {
    if (m == 0 || m > v) {
        throw std::invalid_argument("acceptance needs 0 < m <= v, got m = " + std::to_string(m) +
                                    ", v = " + std::to_string(v));
    }
    if (delta <= 0) {
        return 0.0;
    }
    double dv = static_cast<double>(v);
    double dm = static_cast<double>(m);
    double dd = static_cast<double>(delta);
    double exponent = -params.decay * dv * (dv - dm) / (std::pow(dd, params.delta_power) * dm);
    double p = std::pow(dv, params.prefactor_power) * std::exp(exponent);
    return std::clamp(p, 0.0, 1.0);
}

}  // namespace pauli_sched
