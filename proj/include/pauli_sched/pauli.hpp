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

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace pauli_sched {

/// A single-qubit Pauli operator up to phase, stored as its (z, x) exponents:
/// the operator is Z^z X^x. Multiplication is XOR, so every element is its own inverse.
struct PauliEnc {
    bool z = false;
    bool x = false;

    static constexpr PauliEnc I() {
        return {false, false};
    }
    static constexpr PauliEnc Z() {
        return {true, false};
    }
    static constexpr PauliEnc X() {
        return {false, true};
    }
    /// Y is ZX up to phase.
    static constexpr PauliEnc Y() {
        return {true, true};
    }

    constexpr PauliEnc operator^(PauliEnc o) const {
        return {z != o.z, x != o.x};
    }
    constexpr PauliEnc &operator^=(PauliEnc o) {
        z = z != o.z;
        x = x != o.x;
        return *this;
    }
    constexpr bool is_identity() const {
        return !z && !x;
    }
    constexpr char symbol() const {
        return "IXZY"[(z ? 2 : 0) + (x ? 1 : 0)];
    }
    constexpr bool operator==(const PauliEnc &) const = default;
};

constexpr std::optional<PauliEnc> pauli_from_symbol(char c) {
    switch (c) {
        case 'I':
        case 'i':
        case '_':
            return PauliEnc::I();
        case 'X':
        case 'x':
            return PauliEnc::X();
        case 'Y':
        case 'y':
            return PauliEnc::Y();
        case 'Z':
        case 'z':
            return PauliEnc::Z();
        default:
            return std::nullopt;
    }
}

/// Gates understood by the trackers. The Pauli gates are frame multiplications; every
/// other gate is a Clifford conjugation. Swap is realised as three CX.
enum class GateKind { H, S, Sdg, CZ, CX, Swap, X, Y, Z };

inline constexpr GateKind kAllGates[] = {GateKind::H,  GateKind::S,    GateKind::Sdg,
                                         GateKind::CZ, GateKind::CX,   GateKind::Swap,
                                         GateKind::X,  GateKind::Y,    GateKind::Z};

constexpr std::size_t gate_arity(GateKind g) {
    switch (g) {
        case GateKind::CZ:
        case GateKind::CX:
        case GateKind::Swap:
            return 2;
        default:
            return 1;
    }
}

constexpr bool is_pauli_gate(GateKind g) {
    return g == GateKind::X || g == GateKind::Y || g == GateKind::Z;
}

constexpr PauliEnc pauli_of_gate(GateKind g) {
    switch (g) {
        case GateKind::X:
            return PauliEnc::X();
        case GateKind::Y:
            return PauliEnc::Y();
        case GateKind::Z:
            return PauliEnc::Z();
        default:
            return PauliEnc::I();
    }
}

constexpr std::string_view gate_name(GateKind g) {
    switch (g) {
        case GateKind::H:
            return "h";
        case GateKind::S:
            return "s";
        case GateKind::Sdg:
            return "sdg";
        case GateKind::CZ:
            return "cz";
        case GateKind::CX:
            return "cx";
        case GateKind::Swap:
            return "swap";
        case GateKind::X:
            return "x";
        case GateKind::Y:
            return "y";
        case GateKind::Z:
            return "z";
    }
    return "?";
}

constexpr std::optional<GateKind> gate_from_name(std::string_view name) {
    for (GateKind g : kAllGates) {
        if (gate_name(g) == name) {
            return g;
        }
    }
    return std::nullopt;
}

/// Symplectic update rules written once for any "part" type supporting `^=` and swap.
/// The part is a bool for a single frame and a bit vector (one bit per frame) for the
/// multi-frame tracker, so both modes share the same table.
namespace rules {

template <class Part>
constexpr void h(Part &z, Part &x) {
    using std::swap;
    swap(z, x);
}

// S and S-dagger agree projectively: X -> Y, Z -> Z.
template <class Part>
constexpr void s(Part &z, const Part &x) {
    z ^= x;
}

template <class Part>
constexpr void cz(Part &za, const Part &xa, Part &zb, const Part &xb) {
    za ^= xb;
    zb ^= xa;
}

template <class Part>
constexpr void cx(Part &zc, const Part &xc, const Part &zt, Part &xt) {
    zc ^= zt;
    xt ^= xc;
}

}  // namespace rules

constexpr PauliEnc conjugate_h(PauliEnc p) {
    rules::h(p.z, p.x);
    return p;
}

constexpr PauliEnc conjugate_s(PauliEnc p) {
    rules::s(p.z, p.x);
    return p;
}

constexpr PauliEnc conjugate_sdg(PauliEnc p) {
    return conjugate_s(p);
}

constexpr std::pair<PauliEnc, PauliEnc> conjugate_cz(PauliEnc a, PauliEnc b) {
    rules::cz(a.z, a.x, b.z, b.x);
    return {a, b};
}

constexpr std::pair<PauliEnc, PauliEnc> conjugate_cx(PauliEnc control, PauliEnc target) {
    rules::cx(control.z, control.x, target.z, target.x);
    return {control, target};
}

constexpr std::pair<PauliEnc, PauliEnc> conjugate_swap(PauliEnc a, PauliEnc b) {
    std::tie(a, b) = conjugate_cx(a, b);
    std::tie(b, a) = conjugate_cx(b, a);
    return conjugate_cx(a, b);
}

/// Conjugates the Paulis on the gate's qubits in place.
///
/// Throws std::invalid_argument for Pauli gates (they multiply the frame rather than
/// conjugate it) and when the input count differs from the gate's arity.
inline void apply_gate_rule_inplace(GateKind g, std::span<PauliEnc> ps) {
    if (is_pauli_gate(g)) {
        throw std::invalid_argument("gate '" + std::string(gate_name(g)) +
                                    "' is a frame multiplication, not a conjugation");
    }
    if (ps.size() != gate_arity(g)) {
        throw std::invalid_argument("gate '" + std::string(gate_name(g)) + "' expects " +
                                    std::to_string(gate_arity(g)) + " operand(s), got " +
                                    std::to_string(ps.size()));
    }
    switch (g) {
        case GateKind::H:
            ps[0] = conjugate_h(ps[0]);
            break;
        case GateKind::S:
            ps[0] = conjugate_s(ps[0]);
            break;
        case GateKind::Sdg:
            ps[0] = conjugate_sdg(ps[0]);
            break;
        case GateKind::CZ:
            std::tie(ps[0], ps[1]) = conjugate_cz(ps[0], ps[1]);
            break;
        case GateKind::CX:
            std::tie(ps[0], ps[1]) = conjugate_cx(ps[0], ps[1]);
            break;
        case GateKind::Swap:
            std::tie(ps[0], ps[1]) = conjugate_swap(ps[0], ps[1]);
            break;
        default:
            break;
    }
}

inline std::vector<PauliEnc> apply_gate_rule(GateKind g, std::span<const PauliEnc> inputs) {
    std::vector<PauliEnc> out(inputs.begin(), inputs.end());
    apply_gate_rule_inplace(g, out);
    return out;
}

}  // namespace pauli_sched
