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
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pauli_sched/bits.hpp"
#include "pauli_sched/pauli.hpp"

namespace pauli_sched {

/// Opaque qubit identifier. Ids need not be contiguous.
using QubitId = std::uint64_t;

enum class Part { Z, X };

/// Thrown for calls that violate a tracker precondition (unknown or duplicate qubit,
/// bad frame index, arity mismatch).
class TrackingError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Snapshot of a qubit's Pauli stack taken when it is measured out of a tracker.
/// Both vectors have one entry per frame that existed at that moment.
struct MeasuredStack {
    QubitId qubit = 0;
    std::vector<bool> z;
    std::vector<bool> x;

    PauliEnc at(std::size_t frame) const {
        return {frame < z.size() && z[frame], frame < x.size() && x[frame]};
    }
    bool operator==(const MeasuredStack &) const = default;
};

template <BitStorage B>
struct PauliStack {
    B z;
    B x;

    B &part(Part p) {
        return p == Part::Z ? z : x;
    }
    PauliEnc at(std::size_t frame) const {
        return {z.get(frame), x.get(frame)};
    }
    bool operator==(const PauliStack &) const = default;
};

namespace detail {

inline std::string qubit_str(QubitId q) {
    return std::to_string(q);
}

inline void check_operands(GateKind g, std::span<const QubitId> qubits) {
    if (qubits.size() != gate_arity(g)) {
        throw TrackingError("gate '" + std::string(gate_name(g)) + "' expects " +
                            std::to_string(gate_arity(g)) + " qubit(s), got " +
                            std::to_string(qubits.size()));
    }
    if (qubits.size() == 2 && qubits[0] == qubits[1]) {
        throw TrackingError("gate '" + std::string(gate_name(g)) +
                            "' needs distinct qubits, got " + qubit_str(qubits[0]) + " twice");
    }
}

template <class T>
MeasuredStack to_measured(QubitId q, const T &z, const T &x, std::size_t frames) {
    MeasuredStack m{q, std::vector<bool>(frames), std::vector<bool>(frames)};
    for (std::size_t f = 0; f < frames; ++f) {
        m.z[f] = z.get(f);
        m.x[f] = x.get(f);
    }
    return m;
}

}  // namespace detail

/// Runtime tracker holding exactly one Pauli frame: one PauliEnc per live qubit.
class LiveFrame {
   public:
    static constexpr bool kMultiFrame = false;

    void new_qubit(QubitId q) {
        if (paulis_.contains(q) || measured_.contains(q)) {
            throw TrackingError("qubit " + detail::qubit_str(q) + " already exists");
        }
        paulis_.emplace(q, PauliEnc::I());
    }

    /// Multiplies p into the frame at q. The frame selector is ignored: there is one frame.
    void track_pauli(QubitId q, PauliEnc p, std::optional<std::size_t> = std::nullopt) {
        at_mut(q) ^= p;
    }

    void apply_gate(GateKind g, std::span<const QubitId> qubits) {
        detail::check_operands(g, qubits);
        if (is_pauli_gate(g)) {
            track_pauli(qubits[0], pauli_of_gate(g));
            return;
        }
        if (qubits.size() == 1) {
            PauliEnc &p = at_mut(qubits[0]);
            apply_gate_rule_inplace(g, std::span<PauliEnc>(&p, 1));
        } else {
            PauliEnc &a = at_mut(qubits[0]);
            PauliEnc &b = at_mut(qubits[1]);
            PauliEnc ops[2] = {a, b};
            apply_gate_rule_inplace(g, ops);
            a = ops[0];
            b = ops[1];
        }
    }

    void remove_part(QubitId q, Part part) {
        PauliEnc &p = at_mut(q);
        (part == Part::Z ? p.z : p.x) = false;
    }

    /// XORs the `from` part of src into the `to` part of dst, then clears it at src.
    void move_part(QubitId src, QubitId dst, Part from, Part to) {
        if (src == dst) {
            throw TrackingError("move needs distinct qubits, got " + detail::qubit_str(src) +
                                " twice");
        }
        PauliEnc &s = at_mut(src);
        PauliEnc &d = at_mut(dst);
        bool &source_bit = from == Part::Z ? s.z : s.x;
        bool &dest_bit = to == Part::Z ? d.z : d.x;
        dest_bit = dest_bit != source_bit;
        source_bit = false;
    }

    MeasuredStack measure(QubitId q) {
        PauliEnc p = at_mut(q);
        MeasuredStack m{q, {p.z}, {p.x}};
        paulis_.erase(q);
        measured_.emplace(q, m);
        return m;
    }

    PauliEnc get(QubitId q) const {
        auto it = paulis_.find(q);
        if (it == paulis_.end()) {
            throw TrackingError("qubit " + detail::qubit_str(q) + " is not tracked");
        }
        return it->second;
    }

    bool contains(QubitId q) const {
        return paulis_.contains(q);
    }
    std::size_t frame_count() const {
        return 1;
    }
    const std::map<QubitId, PauliEnc> &paulis() const {
        return paulis_;
    }
    const std::map<QubitId, MeasuredStack> &measured() const {
        return measured_;
    }

   private:
    PauliEnc &at_mut(QubitId q) {
        auto it = paulis_.find(q);
        if (it == paulis_.end()) {
            throw TrackingError("qubit " + detail::qubit_str(q) + " is not tracked");
        }
        return it->second;
    }

    std::map<QubitId, PauliEnc> paulis_;
    std::map<QubitId, MeasuredStack> measured_;
};

/// Compile-time tracker holding one Pauli frame per potential correction.
///
/// Storage is major-qubit-minor-frame: each qubit owns a (z, x) pair of bit vectors
/// indexed by frame, so a gate is a handful of whole-vector XORs or swaps on the stacks
/// of the qubits it touches. Stacks are lazily zero-padded: a frame created after a
/// stack was last resized reads as identity on that qubit.
///
/// Measured qubits are retired: their stacks move into `measured()` and the id cannot
/// be declared again.
template <BitStorage B = WordBits>
class Frames {
   public:
    static constexpr bool kMultiFrame = true;
    using Storage = B;

    void new_qubit(QubitId q) {
        if (stacks_.contains(q) || measured_.contains(q)) {
            throw TrackingError("qubit " + detail::qubit_str(q) + " already exists");
        }
        stacks_.emplace(q, PauliStack<B>{});
    }

    /// Multiplies p into frame `frame` at q. Multi-frame mode requires a selector.
    void track_pauli(QubitId q, PauliEnc p, std::optional<std::size_t> frame) {
        if (!frame) {
            throw TrackingError("a frame index is required when tracking several frames");
        }
        if (*frame >= frame_count_) {
            throw TrackingError("frame " + std::to_string(*frame) + " does not exist (" +
                                std::to_string(frame_count_) + " frames)");
        }
        PauliStack<B> &s = stack_mut(q);
        if (p.z) {
            s.z.flip(*frame);
        }
        if (p.x) {
            s.x.flip(*frame);
        }
    }

    /// Appends a frame holding exactly `corrections`, recording `origin` as the qubit
    /// whose measurement induced it. Returns the new frame's index.
    std::size_t new_frame(QubitId origin, std::span<const std::pair<QubitId, PauliEnc>> corrections) {
        for (const auto &[q, p] : corrections) {
            (void)p;
            if (!stacks_.contains(q)) {
                throw TrackingError("correction on qubit " + detail::qubit_str(q) +
                                    " which is not tracked");
            }
        }
        if (origin_used(origin)) {
            throw TrackingError("qubit " + detail::qubit_str(origin) +
                                " already induced a frame");
        }
        std::size_t frame = frame_count_++;
        origins_.push_back(origin);
        for (const auto &[q, p] : corrections) {
            track_pauli(q, p, frame);
        }
        return frame;
    }

    /// Conjugates (or multiplies, for X/Y/Z) every frame at once.
    ///
    /// A Pauli gate here has no frame to land in; use track_pauli with an explicit frame.
    void apply_gate(GateKind g, std::span<const QubitId> qubits) {
        detail::check_operands(g, qubits);
        if (is_pauli_gate(g)) {
            throw TrackingError("gate '" + std::string(gate_name(g)) +
                                "' needs a frame index when tracking several frames");
        }
        if (qubits.size() == 1) {
            PauliStack<B> &s = stack_mut(qubits[0]);
            ++stack_touches_;
            switch (g) {
                case GateKind::H:
                    rules::h(s.z, s.x);
                    break;
                case GateKind::S:
                case GateKind::Sdg:
                    rules::s(s.z, s.x);
                    break;
                default:
                    break;
            }
            return;
        }
        PauliStack<B> &a = stack_mut(qubits[0]);
        PauliStack<B> &b = stack_mut(qubits[1]);
        stack_touches_ += 2;
        switch (g) {
            case GateKind::CZ:
                rules::cz(a.z, a.x, b.z, b.x);
                break;
            case GateKind::CX:
                rules::cx(a.z, a.x, b.z, b.x);
                break;
            case GateKind::Swap:
                rules::cx(a.z, a.x, b.z, b.x);
                rules::cx(b.z, b.x, a.z, a.x);
                rules::cx(a.z, a.x, b.z, b.x);
                break;
            default:
                break;
        }
    }

    void remove_part(QubitId q, Part part) {
        stack_mut(q).part(part).clear();
    }

    void move_part(QubitId src, QubitId dst, Part from, Part to) {
        if (src == dst) {
            throw TrackingError("move needs distinct qubits, got " + detail::qubit_str(src) +
                                " twice");
        }
        PauliStack<B> &s = stack_mut(src);
        PauliStack<B> &d = stack_mut(dst);
        d.part(to) ^= s.part(from);
        s.part(from).clear();
    }

    MeasuredStack measure(QubitId q) {
        auto it = stacks_.find(q);
        if (it == stacks_.end()) {
            throw TrackingError("qubit " + detail::qubit_str(q) + " is not tracked");
        }
        MeasuredStack m = detail::to_measured(q, it->second.z, it->second.x, frame_count_);
        stacks_.erase(it);
        measured_.emplace(q, m);
        return m;
    }

    PauliEnc get(QubitId q, std::size_t frame) const {
        auto it = stacks_.find(q);
        if (it == stacks_.end()) {
            throw TrackingError("qubit " + detail::qubit_str(q) + " is not tracked");
        }
        return it->second.at(frame);
    }

    bool contains(QubitId q) const {
        return stacks_.contains(q);
    }
    std::size_t frame_count() const {
        return frame_count_;
    }
    /// origins()[f] is the qubit whose measurement induced frame f.
    const std::vector<QubitId> &origins() const {
        return origins_;
    }
    const std::map<QubitId, PauliStack<B>> &stacks() const {
        return stacks_;
    }
    const std::map<QubitId, MeasuredStack> &measured() const {
        return measured_;
    }
    /// Number of qubit stacks read or written by apply_gate since construction.
    std::size_t stack_touches() const {
        return stack_touches_;
    }

   private:
    PauliStack<B> &stack_mut(QubitId q) {
        auto it = stacks_.find(q);
        if (it == stacks_.end()) {
            throw TrackingError("qubit " + detail::qubit_str(q) + " is not tracked");
        }
        return it->second;
    }
    bool origin_used(QubitId origin) const {
        for (QubitId o : origins_) {
            if (o == origin) {
                return true;
            }
        }
        return false;
    }

    std::map<QubitId, PauliStack<B>> stacks_;
    std::map<QubitId, MeasuredStack> measured_;
    std::vector<QubitId> origins_;
    std::size_t frame_count_ = 0;
    std::size_t stack_touches_ = 0;
};

/// Plain-value view of tracked frames: every qubit's stack (live and measured alike)
/// padded to `frame_count`, plus the origin of each frame. This is what the frames
/// JSON format carries and what order extraction consumes.
struct FrameTable {
    struct Stack {
        std::vector<bool> z;
        std::vector<bool> x;
        bool operator==(const Stack &) const = default;
    };

    std::size_t frame_count = 0;
    std::map<QubitId, Stack> stacks;
    std::map<std::size_t, QubitId> origins;

    PauliEnc at(QubitId q, std::size_t frame) const {
        auto it = stacks.find(q);
        if (it == stacks.end() || frame >= frame_count) {
            return PauliEnc::I();
        }
        return {it->second.z[frame], it->second.x[frame]};
    }
    bool operator==(const FrameTable &) const = default;
};

template <BitStorage B>
FrameTable snapshot(const Frames<B> &frames) {
    FrameTable t;
    t.frame_count = frames.frame_count();
    for (const auto &[q, s] : frames.stacks()) {
        MeasuredStack m = detail::to_measured(q, s.z, s.x, t.frame_count);
        t.stacks.emplace(q, FrameTable::Stack{std::move(m.z), std::move(m.x)});
    }
    for (const auto &[q, m] : frames.measured()) {
        FrameTable::Stack s{m.z, m.x};
        s.z.resize(t.frame_count, false);
        s.x.resize(t.frame_count, false);
        t.stacks.emplace(q, std::move(s));
    }
    for (std::size_t f = 0; f < frames.origins().size(); ++f) {
        t.origins.emplace(f, frames.origins()[f]);
    }
    return t;
}

inline FrameTable snapshot(const LiveFrame &live) {
    FrameTable t;
    t.frame_count = 1;
    for (const auto &[q, p] : live.paulis()) {
        t.stacks.emplace(q, FrameTable::Stack{{p.z}, {p.x}});
    }
    for (const auto &[q, m] : live.measured()) {
        t.stacks.emplace(q, FrameTable::Stack{m.z, m.x});
    }
    return t;
}

}  // namespace pauli_sched
