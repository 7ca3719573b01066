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

#include <map>
#include <string>

#include "qct/lang.hpp"
#include "qct/qcore.hpp"

namespace qct {

/// Assignment of a qubit to each atom name. Every occurrence of an atom
/// receives the same qubit; the falsity constant is always |0>.
class QubModel {
   public:
    void assign(const std::string &atom, const QRegister &qubit) {
        if (is_reserved_word(atom)) {
            throw ReservedName(atom);
        }
        if (qubit.qubits() != 1) {
            throw ArityMismatch(1, qubit.qubits());
        }
        atoms_.insert_or_assign(atom, qubit);
    }

    bool contains(const std::string &atom) const {
        return atoms_.contains(atom);
    }

    const QRegister &lookup(const std::string &atom) const {
        auto it = atoms_.find(atom);
        if (it == atoms_.end()) {
            throw UnboundAtom(atom);
        }
        return it->second;
    }

    /// Qubit for an atomic occurrence (an Atom or f).
    QRegister qubit_for(const Sentence &leaf) const {
        if (leaf.kind() == Sentence::Kind::Falsity) {
            return QRegister::basis(1, 0);
        }
        if (leaf.kind() != Sentence::Kind::Atom) {
            throw std::invalid_argument("qubit_for expects an atomic sentence");
        }
        return lookup(leaf.name());
    }

    const std::map<std::string, QRegister> &assignments() const {
        return atoms_;
    }

   private:
    std::map<std::string, QRegister> atoms_;
};

}  // namespace qct
