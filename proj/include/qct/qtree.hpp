// Copyright 2026 The qct Authors
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
#include <string>
#include <vector>

#include "qct/model.hpp"
#include "qct/qcore.hpp"
#include "qct/syntree.hpp"

namespace qct {

/// U_i = Op_i^1 (x) ... (x) Op_i^k, gates laid over consecutive qubit blocks.
struct Layer {
    std::vector<GateTag> ops;

    std::size_t arity() const {
        std::size_t total = 0;
        for (const auto &op : ops) {
            total += op.arity();
        }
        return total;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t j = 0; j < ops.size(); ++j) {
            if (j) {
                out += " ⊗ ";
            }
            out += ops[j].to_string();
        }
        return out;
    }

    bool operator==(const Layer &) const = default;
};

/// Layers are stored U_1 first. Execution runs them right to left: the
/// input sits at the deepest level and U_1 produces the output.
struct QuantumTree {
    std::size_t n = 0;
    std::vector<Layer> layers;

    bool operator==(const QuantumTree &) const = default;
};

inline GateTag operator_for(const Sentence &node) {
    switch (node.kind()) {
        case Sentence::Kind::Atom:
        case Sentence::Kind::Falsity:
            return GateTag::identity();
        case Sentence::Kind::Neg:
            return GateTag::negation(atomic_complexity(node.child(0)));
        case Sentence::Kind::SqrtNeg:
            return GateTag::sqrt_negation(atomic_complexity(node.child(0)));
        case Sentence::Kind::Conj3:
            return GateTag::toffoli(atomic_complexity(node.child(0)), atomic_complexity(node.child(1)));
    }
    throw std::logic_error("unreachable");
}

/// Depends only on the tree, never on a model.
inline QuantumTree compile(const SyntacticTree &t) {
    QuantumTree qt;
    qt.n = atomic_complexity(t.root());
    for (std::size_t i = 1; i < t.height(); ++i) {
        Layer layer;
        for (const auto &node : t.level(i)) {
            layer.ops.push_back(operator_for(node));
        }
        qt.layers.push_back(std::move(layer));
    }
    return qt;
}

/// Qub(p_1) (x) ... (x) Qub(p_n) over the last level's occurrences.
inline QRegister input_state(const SyntacticTree &t, const QubModel &m, std::size_t n_max = kDefaultMaxQubits) {
    const auto &leaves = t.level(t.height());
    check_capacity(leaves.size(), n_max);
    QRegister out = m.qubit_for(leaves.front());
    for (std::size_t j = 1; j < leaves.size(); ++j) {
        out = tensor(out, m.qubit_for(leaves[j]), n_max);
    }
    return out;
}

inline QRegister apply_layer(const QRegister &psi, const Layer &layer) {
    if (layer.arity() != psi.qubits()) {
        throw ArityMismatch(layer.arity(), psi.qubits());
    }
    std::size_t n = psi.qubits();
    auto amps = QRegister(psi).take_amplitudes();
    std::size_t offset = 0;
    for (const auto &op : layer.ops) {
        detail::apply_gate_in_place(amps, n, offset, op);
        offset += op.arity();
    }
    return QRegister(n, std::move(amps), QRegister::Unchecked{});
}

/// (|psi_Height>, ..., |psi_1>): the input followed by the state after each layer.
inline std::vector<QRegister> run_with_trace(const QuantumTree &qt, const QRegister &input) {
    if (input.qubits() != qt.n) {
        throw ArityMismatch(qt.n, input.qubits());
    }
    std::vector<QRegister> trace{input};
    for (auto it = qt.layers.rbegin(); it != qt.layers.rend(); ++it) {
        trace.push_back(apply_layer(trace.back(), *it));
    }
    return trace;
}

inline QRegister run(const QuantumTree &qt, const QRegister &input) {
    if (input.qubits() != qt.n) {
        throw ArityMismatch(qt.n, input.qubits());
    }
    std::size_t n = input.qubits();
    auto amps = QRegister(input).take_amplitudes();
    for (auto it = qt.layers.rbegin(); it != qt.layers.rend(); ++it) {
        if (it->arity() != n) {
            throw ArityMismatch(it->arity(), n);
        }
        std::size_t offset = 0;
        for (const auto &op : it->ops) {
            detail::apply_gate_in_place(amps, n, offset, op);
            offset += op.arity();
        }
    }
    return QRegister(n, std::move(amps), QRegister::Unchecked{});
}

}  // namespace qct
