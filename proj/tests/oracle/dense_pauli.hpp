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

// Dense reference model: Paulis and Clifford gates as explicit complex matrices on
// 2^n amplitudes. Qubit j is bit j of the basis index. Deliberately independent of the
// bit-level rules under test.

#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "pauli_sched/pauli.hpp"

namespace oracle {

using Complex = std::complex<double>;
using pauli_sched::GateKind;
using pauli_sched::PauliEnc;

struct Matrix {
    std::size_t dim = 1;
    std::vector<Complex> a{Complex(1.0)};

    explicit Matrix(std::size_t d = 1) : dim(d), a(d * d, Complex(0.0)) {
    }
    Complex &operator()(std::size_t r, std::size_t c) {
        return a[r * dim + c];
    }
    Complex operator()(std::size_t r, std::size_t c) const {
        return a[r * dim + c];
    }
};

inline Matrix identity(std::size_t qubits) {
    Matrix m(std::size_t{1} << qubits);
    for (std::size_t i = 0; i < m.dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

/// Small gate unitary, row-major, on 2^k amplitudes for a k-qubit gate. For two-qubit
/// gates the first operand is bit 0 of the local index.
inline std::vector<Complex> gate_matrix(GateKind g) {
    const Complex i(0.0, 1.0);
    const double r = 1.0 / std::sqrt(2.0);
    switch (g) {
        case GateKind::H:
            return {r, r, r, -r};
        case GateKind::S:
            return {1.0, 0.0, 0.0, i};
        case GateKind::Sdg:
            return {1.0, 0.0, 0.0, -i};
        case GateKind::X:
            return {0.0, 1.0, 1.0, 0.0};
        case GateKind::Y:
            return {0.0, -i, i, 0.0};
        case GateKind::Z:
            return {1.0, 0.0, 0.0, -1.0};
        case GateKind::CZ: {
            std::vector<Complex> u(16, 0.0);
            for (std::size_t k = 0; k < 4; ++k) {
                u[k * 4 + k] = k == 3 ? -1.0 : 1.0;
            }
            return u;
        }
        case GateKind::CX: {
            std::vector<Complex> u(16, 0.0);
            for (std::size_t k = 0; k < 4; ++k) {
                std::size_t c = k & 1;
                std::size_t t = (k >> 1) & 1;
                std::size_t out = c | ((t ^ c) << 1);
                u[out * 4 + k] = 1.0;
            }
            return u;
        }
        case GateKind::Swap: {
            std::vector<Complex> u(16, 0.0);
            for (std::size_t k = 0; k < 4; ++k) {
                std::size_t out = ((k & 1) << 1) | ((k >> 1) & 1);
                u[out * 4 + k] = 1.0;
            }
            return u;
        }
    }
    throw std::logic_error("unknown gate");
}

namespace detail {

// Local index of basis state `b` restricted to `qubits`.
inline std::size_t local_index(std::size_t b, std::span<const std::size_t> qubits) {
    std::size_t l = 0;
    for (std::size_t j = 0; j < qubits.size(); ++j) {
        l |= ((b >> qubits[j]) & 1) << j;
    }
    return l;
}

inline std::size_t with_local(std::size_t b, std::span<const std::size_t> qubits, std::size_t l) {
    for (std::size_t j = 0; j < qubits.size(); ++j) {
        b &= ~(std::size_t{1} << qubits[j]);
        b |= ((l >> j) & 1) << qubits[j];
    }
    return b;
}

}  // namespace detail

/// m <- U m, with U the gate embedded on `qubits`.
inline void apply_left(Matrix &m, const std::vector<Complex> &u, std::span<const std::size_t> qubits) {
    std::size_t k = std::size_t{1} << qubits.size();
    Matrix out(m.dim);
    for (std::size_t row = 0; row < m.dim; ++row) {
        std::size_t lr = detail::local_index(row, qubits);
        for (std::size_t lc = 0; lc < k; ++lc) {
            Complex coef = u[lr * k + lc];
            if (coef == Complex(0.0)) {
                continue;
            }
            std::size_t src = detail::with_local(row, qubits, lc);
            for (std::size_t col = 0; col < m.dim; ++col) {
                out(row, col) += coef * m(src, col);
            }
        }
    }
    m = std::move(out);
}

/// m <- m U^dagger.
inline void apply_right_dagger(Matrix &m, const std::vector<Complex> &u, std::span<const std::size_t> qubits) {
    std::size_t k = std::size_t{1} << qubits.size();
    Matrix out(m.dim);
    for (std::size_t col = 0; col < m.dim; ++col) {
        std::size_t lc = detail::local_index(col, qubits);
        for (std::size_t lr = 0; lr < k; ++lr) {
            // (m U^dagger)[r][col] = sum_j m[r][j] conj(U[col][j])
            Complex coef = std::conj(u[lc * k + lr]);
            if (coef == Complex(0.0)) {
                continue;
            }
            std::size_t src = detail::with_local(col, qubits, lr);
            for (std::size_t row = 0; row < m.dim; ++row) {
                out(row, col) += m(row, src) * coef;
            }
        }
    }
    m = std::move(out);
}

inline void conjugate(Matrix &m, GateKind g, std::span<const std::size_t> qubits) {
    auto u = gate_matrix(g);
    apply_left(m, u, qubits);
    apply_right_dagger(m, u, qubits);
}

/// Tensor product of single-qubit Paulis, qubit j taken from ps[j].
inline Matrix pauli_operator(std::span<const PauliEnc> ps) {
    Matrix m = identity(ps.size());
    for (std::size_t j = 0; j < ps.size(); ++j) {
        std::size_t q[1] = {j};
        if (ps[j].x) {
            apply_left(m, gate_matrix(GateKind::X), q);
        }
        if (ps[j].z) {
            apply_left(m, gate_matrix(GateKind::Z), q);
        }
    }
    return m;
}

/// Projective Pauli class of m, or nullopt when m is not a unit multiple of a Pauli.
inline std::optional<std::vector<PauliEnc>> as_pauli(const Matrix &m, std::size_t qubits, double tol = 1e-9) {
    // A Pauli X^x Z^z maps |c> to phase * (-1)^(z.c) |c ^ x>.
    std::size_t x = 0;
    while (x < m.dim && std::abs(m(x, 0)) < tol) {
        ++x;
    }
    if (x == m.dim) {
        return std::nullopt;
    }
    Complex phase = m(x, 0);
    if (std::abs(std::abs(phase) - 1.0) > tol) {
        return std::nullopt;
    }
    std::size_t z = 0;
    for (std::size_t j = 0; j < qubits; ++j) {
        std::size_t c = std::size_t{1} << j;
        Complex ratio = m(c ^ x, c) / phase;
        if (std::abs(ratio + 1.0) < tol) {
            z |= c;
        } else if (std::abs(ratio - 1.0) > tol) {
            return std::nullopt;
        }
    }
    for (std::size_t c = 0; c < m.dim; ++c) {
        for (std::size_t r = 0; r < m.dim; ++r) {
            Complex expect(0.0);
            if (r == (c ^ x)) {
                expect = (std::popcount(z & c) % 2 == 0) ? phase : -phase;
            }
            if (std::abs(m(r, c) - expect) > tol) {
                return std::nullopt;
            }
        }
    }
    std::vector<PauliEnc> out(qubits);
    for (std::size_t j = 0; j < qubits; ++j) {
        out[j] = PauliEnc{((z >> j) & 1) != 0, ((x >> j) & 1) != 0};
    }
    return out;
}

}  // namespace oracle
