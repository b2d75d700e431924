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

#include <charconv>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pauli_sched/pauli.hpp"
#include "pauli_sched/tracker.hpp"

namespace pauli_sched {

namespace instr {

struct NewQubit {
    QubitId qubit = 0;
    bool operator==(const NewQubit &) const = default;
};
/// Clifford gate, or an X/Y/Z without a frame selector (live mode only).
struct Gate {
    GateKind kind = GateKind::H;
    std::vector<QubitId> qubits;
    bool operator==(const Gate &) const = default;
};
struct TrackPauli {
    QubitId qubit = 0;
    PauliEnc pauli;
    std::optional<std::size_t> frame;
    bool operator==(const TrackPauli &) const = default;
};
struct NewFrame {
    QubitId origin = 0;
    std::vector<std::pair<QubitId, PauliEnc>> corrections;
    bool operator==(const NewFrame &) const = default;
};
struct RemovePart {
    QubitId qubit = 0;
    Part part = Part::X;
    bool operator==(const RemovePart &) const = default;
};
struct MovePart {
    QubitId src = 0;
    QubitId dst = 0;
    Part from = Part::Z;
    Part to = Part::Z;
    bool operator==(const MovePart &) const = default;
};
struct Measure {
    QubitId qubit = 0;
    bool operator==(const Measure &) const = default;
};

}  // namespace instr

using Instruction = std::variant<instr::NewQubit, instr::Gate, instr::TrackPauli, instr::NewFrame,
                                 instr::RemovePart, instr::MovePart, instr::Measure>;

/// Parsed circuit; `lines[i]` is the 1-based source line of `instructions[i]`.
struct Circuit {
    std::vector<Instruction> instructions;
    std::vector<std::size_t> lines;
};

class CircuitParseError : public std::invalid_argument {
   public:
    CircuitParseError(std::size_t line, const std::string &what)
        : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {
    }
    std::size_t line() const {
        return line_;
    }

   private:
    std::size_t line_;
};

/// A well-formed instruction that the tracker rejected; `position` is its 0-based index.
class CircuitError : public std::invalid_argument {
   public:
    CircuitError(std::size_t position, const std::string &what)
        : std::invalid_argument("instruction " + std::to_string(position) + ": " + what),
          position_(position) {
    }
    std::size_t position() const {
        return position_;
    }

   private:
    std::size_t position_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

template <class Int>
std::optional<Int> parse_uint(std::string_view s) {
    Int v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

}  // namespace detail

/// Parses the line-oriented instruction format:
///
///     q <id>                      declare a qubit
///     h|s|sdg <id>                single-qubit Clifford
///     cz <a> <b>, cx <c> <t>      two-qubit Clifford (also: swap <a> <b>)
///     x|y|z <id> [frame]          multiply a Pauli into a frame
///     frame <origin> (<id>:<P>)*  new frame induced by measuring <origin>
///     rmx|rmz <id>                drop the X or Z part on a qubit
///     mv<zz|zx|xz|xx> <src> <dst> move a part from src to dst
///     measure <id>                measure a qubit out of the tracker
///
/// '#' starts a comment; blank lines are skipped.
inline Circuit parse_circuit(std::string_view text) {
    Circuit circuit;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++line_no;
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tok = detail::split_ws(line);
        if (tok.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }

        auto qubit = [&](std::size_t i) {
            if (i >= tok.size()) {
                throw CircuitParseError(line_no, "missing operand for '" + std::string(tok[0]) + "'");
            }
            auto v = detail::parse_uint<QubitId>(tok[i]);
            if (!v) {
                throw CircuitParseError(line_no, "bad qubit id '" + std::string(tok[i]) + "'");
            }
            return *v;
        };
        auto expect_count = [&](std::size_t n) {
            if (tok.size() != n) {
                throw CircuitParseError(line_no, "'" + std::string(tok[0]) + "' takes " +
                                                     std::to_string(n - 1) + " operand(s), got " +
                                                     std::to_string(tok.size() - 1));
            }
        };

        std::string_view op = tok[0];
        Instruction ins;
        if (op == "q") {
            expect_count(2);
            ins = instr::NewQubit{qubit(1)};
        } else if (op == "measure") {
            expect_count(2);
            ins = instr::Measure{qubit(1)};
        } else if (op == "rmx" || op == "rmz") {
            expect_count(2);
            ins = instr::RemovePart{qubit(1), op == "rmx" ? Part::X : Part::Z};
        } else if (op.size() == 4 && op.substr(0, 2) == "mv" &&
                   (op[2] == 'z' || op[2] == 'x') && (op[3] == 'z' || op[3] == 'x')) {
            expect_count(3);
            ins = instr::MovePart{qubit(1), qubit(2), op[2] == 'z' ? Part::Z : Part::X,
                                  op[3] == 'z' ? Part::Z : Part::X};
        } else if (op == "frame") {
            if (tok.size() < 2) {
                throw CircuitParseError(line_no, "'frame' needs an origin qubit");
            }
            instr::NewFrame f{qubit(1), {}};
            for (std::size_t i = 2; i < tok.size(); ++i) {
                auto colon = tok[i].find(':');
                if (colon == std::string_view::npos || colon + 2 != tok[i].size()) {
                    throw CircuitParseError(line_no, "bad correction '" + std::string(tok[i]) +
                                                         "', expected <id>:<I|X|Y|Z>");
                }
                auto q = detail::parse_uint<QubitId>(tok[i].substr(0, colon));
                auto p = pauli_from_symbol(tok[i][colon + 1]);
                if (!q || !p) {
                    throw CircuitParseError(line_no, "bad correction '" + std::string(tok[i]) + "'");
                }
                f.corrections.emplace_back(*q, *p);
            }
            ins = std::move(f);
        } else if (auto g = gate_from_name(op)) {
            if (is_pauli_gate(*g)) {
                if (tok.size() != 2 && tok.size() != 3) {
                    throw CircuitParseError(line_no, "'" + std::string(op) +
                                                         "' takes a qubit and an optional frame");
                }
                std::optional<std::size_t> frame;
                if (tok.size() == 3) {
                    auto v = detail::parse_uint<std::size_t>(tok[2]);
                    if (!v) {
                        throw CircuitParseError(line_no, "bad frame index '" + std::string(tok[2]) + "'");
                    }
                    frame = *v;
                }
                ins = instr::TrackPauli{qubit(1), pauli_of_gate(*g), frame};
            } else {
                expect_count(1 + gate_arity(*g));
                instr::Gate gate{*g, {}};
                for (std::size_t i = 1; i < tok.size(); ++i) {
                    gate.qubits.push_back(qubit(i));
                }
                if (gate.qubits.size() == 2 && gate.qubits[0] == gate.qubits[1]) {
                    throw CircuitParseError(line_no, "'" + std::string(op) + "' needs distinct qubits");
                }
                ins = std::move(gate);
            }
        } else {
            throw CircuitParseError(line_no, "unknown instruction '" + std::string(op) + "'");
        }
        circuit.instructions.push_back(std::move(ins));
        circuit.lines.push_back(line_no);
        if (end == text.size()) {
            break;
        }
    }
    return circuit;
}

/// Inverse of parse_circuit for a single instruction.
inline std::string format_instruction(const Instruction &ins) {
    std::ostringstream out;
    auto part = [](Part p) { return p == Part::Z ? 'z' : 'x'; };
    std::visit(
        [&](const auto &i) {
            using T = std::decay_t<decltype(i)>;
            if constexpr (std::is_same_v<T, instr::NewQubit>) {
                out << "q " << i.qubit;
            } else if constexpr (std::is_same_v<T, instr::Gate>) {
                out << gate_name(i.kind);
                for (QubitId q : i.qubits) {
                    out << ' ' << q;
                }
            } else if constexpr (std::is_same_v<T, instr::TrackPauli>) {
                out << static_cast<char>(i.pauli.symbol() - 'A' + 'a') << ' ' << i.qubit;
                if (i.frame) {
                    out << ' ' << *i.frame;
                }
            } else if constexpr (std::is_same_v<T, instr::NewFrame>) {
                out << "frame " << i.origin;
                for (const auto &[q, p] : i.corrections) {
                    out << ' ' << q << ':' << p.symbol();
                }
            } else if constexpr (std::is_same_v<T, instr::RemovePart>) {
                out << "rm" << part(i.part) << ' ' << i.qubit;
            } else if constexpr (std::is_same_v<T, instr::MovePart>) {
                out << "mv" << part(i.from) << part(i.to) << ' ' << i.src << ' ' << i.dst;
            } else {
                out << "measure " << i.qubit;
            }
        },
        ins);
    return out.str();
}

inline std::string format_circuit(std::span<const Instruction> instructions) {
    std::string s;
    for (const auto &ins : instructions) {
        s += format_instruction(ins);
        s += '\n';
    }
    return s;
}

/// Applies one instruction to a tracker (LiveFrame or Frames<B>).
template <class Tracker>
void apply_instruction(Tracker &t, const Instruction &ins) {
    std::visit(
        [&](const auto &i) {
            using T = std::decay_t<decltype(i)>;
            if constexpr (std::is_same_v<T, instr::NewQubit>) {
                t.new_qubit(i.qubit);
            } else if constexpr (std::is_same_v<T, instr::Gate>) {
                t.apply_gate(i.kind, i.qubits);
            } else if constexpr (std::is_same_v<T, instr::TrackPauli>) {
                t.track_pauli(i.qubit, i.pauli, i.frame);
            } else if constexpr (std::is_same_v<T, instr::NewFrame>) {
                if constexpr (Tracker::kMultiFrame) {
                    t.new_frame(i.origin, i.corrections);
                } else {
                    throw TrackingError("'frame' needs the multi-frame tracker");
                }
            } else if constexpr (std::is_same_v<T, instr::RemovePart>) {
                t.remove_part(i.qubit, i.part);
            } else if constexpr (std::is_same_v<T, instr::MovePart>) {
                t.move_part(i.src, i.dst, i.from, i.to);
            } else {
                t.measure(i.qubit);
            }
        },
        ins);
}

/// Folds the instructions into the tracker in order. The first rejected instruction
/// aborts with a CircuitError carrying its index; earlier effects remain applied.
template <class Tracker>
Tracker &run_circuit(Tracker &t, std::span<const Instruction> instructions) {
    for (std::size_t i = 0; i < instructions.size(); ++i) {
        try {
            apply_instruction(t, instructions[i]);
        } catch (const TrackingError &e) {
            throw CircuitError(i, e.what());
        } catch (const std::invalid_argument &e) {
            throw CircuitError(i, e.what());
        }
    }
    return t;
}

}  // namespace pauli_sched
