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

// JSON forms of circuits, models, sentences and registers. Complex numbers
// are [re, im] pairs throughout.
//
//   circuit: {"n": 3, "layers": [[{"gate": "T", "r": 1, "s": 1}], ...]}  (U_1 first)
//   model:   {"atoms": {"p": [[re0, im0], [re1, im1]], ...}}

#include <string>

#include "json.hpp"
#include "qct/lang.hpp"
#include "qct/model.hpp"
#include "qct/qtree.hpp"

namespace qct {

using json = nlohmann::ordered_json;

/// Malformed circuit JSON.
class FormatError : public Error {
   public:
    using Error::Error;
};

inline json complex_to_json(Amplitude c) {
    return json::array({c.real(), c.imag()});
}

inline Amplitude complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ModelError("complex numbers must be [re, im] pairs of numbers");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

inline json gate_to_json(const GateTag &g) {
    switch (g.kind) {
        case GateTag::Kind::Identity:
            return {{"gate", "I"}, {"r", 1}};
        case GateTag::Kind::Not:
            return {{"gate", "NOT"}, {"r", g.r}};
        case GateTag::Kind::SqrtNot:
            return {{"gate", "SNOT"}, {"r", g.r}};
        case GateTag::Kind::Toffoli:
            return {{"gate", "T"}, {"r", g.r}, {"s", g.s}};
    }
    return {};
}

inline GateTag gate_from_json(const json &j) {
    auto positive = [&j](const char *key) -> std::size_t {
        if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 1) {
            throw FormatError(std::string("gate field '") + key + "' must be a positive integer");
        }
        return j.at(key).get<std::size_t>();
    };
    if (!j.is_object() || !j.contains("gate") || !j.at("gate").is_string()) {
        throw FormatError("gate entries must be objects with a \"gate\" name");
    }
    const auto name = j.at("gate").get<std::string>();
    if (name == "I") {
        if (positive("r") != 1) {
            throw FormatError("identity gates have r = 1");
        }
        return GateTag::identity();
    }
    if (name == "NOT") {
        return GateTag::negation(positive("r"));
    }
    if (name == "SNOT") {
        return GateTag::sqrt_negation(positive("r"));
    }
    if (name == "T") {
        return GateTag::toffoli(positive("r"), positive("s"));
    }
    throw FormatError("unknown gate '" + name + "'");
}

inline json circuit_to_json(const QuantumTree &qt) {
    json layers = json::array();
    for (const auto &layer : qt.layers) {
        json ops = json::array();
        for (const auto &op : layer.ops) {
            ops.push_back(gate_to_json(op));
        }
        layers.push_back(std::move(ops));
    }
    return {{"n", qt.n}, {"layers", std::move(layers)}};
}

inline QuantumTree circuit_from_json(const json &j) {
    if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer() || j.at("n").get<long long>() < 1 ||
        !j.contains("layers") || !j.at("layers").is_array()) {
        throw FormatError("circuit must be {\"n\": int, \"layers\": [...]}");
    }
    QuantumTree qt;
    qt.n = j.at("n").get<std::size_t>();
    for (const auto &jl : j.at("layers")) {
        if (!jl.is_array() || jl.empty()) {
            throw FormatError("each layer must be a nonempty array of gates");
        }
        Layer layer;
        for (const auto &jg : jl) {
            layer.ops.push_back(gate_from_json(jg));
        }
        if (layer.arity() != qt.n) {
            throw FormatError("layer arity " + std::to_string(layer.arity()) + " does not match n = " +
                              std::to_string(qt.n));
        }
        qt.layers.push_back(std::move(layer));
    }
    return qt;
}

inline json model_to_json(const QubModel &m) {
    json atoms = json::object();
    for (const auto &[name, q] : m.assignments()) {
        atoms[name] = json::array({complex_to_json(q[0]), complex_to_json(q[1])});
    }
    return {{"atoms", std::move(atoms)}};
}

/// Validates shape, names and unit norm. An entry for f is rejected.
inline QubModel model_from_json(const json &j) {
    if (!j.is_object() || !j.contains("atoms") || !j.at("atoms").is_object()) {
        throw ModelError("model must be {\"atoms\": {name: [[re0, im0], [re1, im1]], ...}}");
    }
    QubModel m;
    for (const auto &[name, value] : j.at("atoms").items()) {
        if (name == kFalsityToken) {
            throw ModelError("f is always |0> and must not appear in a model");
        }
        if (is_reserved_word(name)) {
            throw ModelError("reserved word '" + name + "' cannot name an atom");
        }
        if (!value.is_array() || value.size() != 2) {
            throw ModelError("atom '" + name + "' must map to two complex amplitudes");
        }
        try {
            m.assign(name, QRegister::qubit(complex_from_json(value[0]), complex_from_json(value[1])));
        } catch (const InvalidState &e) {
            throw ModelError("atom '" + name + "': " + e.what());
        }
    }
    return m;
}

inline json sentence_to_json(const Sentence &s) {
    switch (s.kind()) {
        case Sentence::Kind::Atom:
            return {{"type", "atom"}, {"name", s.name()}};
        case Sentence::Kind::Falsity:
            return {{"type", "falsity"}};
        case Sentence::Kind::Neg:
            return {{"type", "neg"}, {"arg", sentence_to_json(s.child(0))}};
        case Sentence::Kind::SqrtNeg:
            return {{"type", "sqrt_neg"}, {"arg", sentence_to_json(s.child(0))}};
        case Sentence::Kind::Conj3:
            return {{"type", "conj3"},
                    {"args", json::array({sentence_to_json(s.child(0)), sentence_to_json(s.child(1)),
                                          sentence_to_json(s.child(2))})}};
    }
    return {};
}

inline Sentence sentence_from_json(const json &j) {
    const auto type = j.at("type").get<std::string>();
    if (type == "atom") {
        return Sentence::atom(j.at("name").get<std::string>());
    }
    if (type == "falsity") {
        return Sentence::falsity();
    }
    if (type == "neg") {
        return Sentence::neg(sentence_from_json(j.at("arg")));
    }
    if (type == "sqrt_neg") {
        return Sentence::sqrt_neg(sentence_from_json(j.at("arg")));
    }
    if (type == "conj3") {
        const auto &args = j.at("args");
        if (!args.is_array() || args.size() != 3) {
            throw FormatError("conj3 takes exactly three arguments");
        }
        return Sentence::conj3(sentence_from_json(args[0]), sentence_from_json(args[1]), sentence_from_json(args[2]));
    }
    throw FormatError("unknown sentence type '" + type + "'");
}

inline json register_to_json(const QRegister &psi) {
    json amps = json::array();
    for (const auto &c : psi.amplitudes()) {
        amps.push_back(complex_to_json(c));
    }
    return {{"n", psi.qubits()}, {"amplitudes", std::move(amps)}};
}

}  // namespace qct
