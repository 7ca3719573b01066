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

#include <random>

#include "gtest/gtest.h"
#include "qct/dense_oracle.hpp"
#include "qct/json_io.hpp"
#include "qct/qtree.hpp"
#include "qct/semantics.hpp"
#include "support.hpp"

using namespace qct;

namespace {

QubModel classical(int p, int q) {
    QubModel m;
    m.assign("p", QRegister::from_bits({p}));
    m.assign("q", QRegister::from_bits({q}));
    return m;
}

Layer layer(std::initializer_list<GateTag> ops) {
    return Layer{std::vector<GateTag>(ops)};
}

oracle::DenseMatrix layer_matrix(const Layer &l) {
    oracle::DenseMatrix m = oracle::gate_matrix(l.ops.front());
    for (std::size_t j = 1; j < l.ops.size(); ++j) {
        m = oracle::kron(m, oracle::gate_matrix(l.ops[j]));
    }
    return m;
}

}  // namespace

TEST(compile, contradiction_example) {
    QuantumTree qt = compile(build_tree(parse("p and not p")));
    EXPECT_EQ(qt.n, 3u);
    ASSERT_EQ(qt.layers.size(), 2u);
    EXPECT_EQ(qt.layers[0], layer({GateTag::toffoli(1, 1)}));
    EXPECT_EQ(qt.layers[1], layer({GateTag::identity(), GateTag::negation(1), GateTag::identity()}));
    EXPECT_EQ(qt.layers[1].to_string(), "I ⊗ NOT(1) ⊗ I");
}

TEST(compile, atomic_sentence_has_no_layers) {
    QuantumTree qt = compile(build_tree(Sentence::atom("p")));
    EXPECT_EQ(qt.n, 1u);
    EXPECT_TRUE(qt.layers.empty());
}

TEST(compile, nested_example) {
    QuantumTree qt = compile(build_tree(parse("not p and (q and snot p)")));
    EXPECT_EQ(qt.n, 5u);
    ASSERT_EQ(qt.layers.size(), 3u);
    EXPECT_EQ(qt.layers[0], layer({GateTag::toffoli(1, 3)}));
    EXPECT_EQ(qt.layers[1], layer({GateTag::negation(1), GateTag::toffoli(1, 1), GateTag::identity()}));
    EXPECT_EQ(qt.layers[2], layer({GateTag::identity(), GateTag::identity(), GateTag::sqrt_negation(1),
                                   GateTag::identity(), GateTag::identity()}));
}

TEST(input_state, examples) {
    EXPECT_EQ(input_state(build_tree(parse("p and not p")), classical(1, 0))[0b110], Amplitude(1));
    EXPECT_EQ(input_state(build_tree(parse("not p and (q and snot p)")), classical(1, 0))[0b10100], Amplitude(1));

    QubModel m;
    QRegister plus = QRegister::qubit(1 / std::sqrt(2.0), 1 / std::sqrt(2.0));
    m.assign("p", plus);
    EXPECT_EQ(max_abs_diff(input_state(build_tree(parse("p")), m), plus), 0.0);

    try {
        input_state(build_tree(parse("p and r")), classical(1, 1));
        FAIL();
    } catch (const UnboundAtom &e) {
        EXPECT_EQ(e.atom, "r");
    }
}

TEST(run, examples) {
    QuantumTree qt = compile(build_tree(parse("p and not p")));
    QRegister out = run(qt, QRegister::from_bits({1, 1, 0}));
    EXPECT_EQ(out[0b100], Amplitude(1));
    EXPECT_EQ(prob(out), 0.0);

    QRegister psi = QRegister::qubit(0.6, Amplitude(0, 0.8));
    EXPECT_EQ(max_abs_diff(run(compile(build_tree(parse("p"))), psi), psi), 0.0);
    EXPECT_EQ(run(compile(build_tree(parse("not p"))), QRegister::from_bits({0}))[1], Amplitude(1));

    EXPECT_THROW(run(qt, QRegister::from_bits({1, 1})), ArityMismatch);
}

TEST(run_with_trace, examples) {
    QuantumTree qt = compile(build_tree(parse("p and not p")));
    auto trace = run_with_trace(qt, QRegister::from_bits({1, 1, 0}));
    ASSERT_EQ(trace.size(), 3u);
    EXPECT_EQ(trace[0][0b110], Amplitude(1));
    EXPECT_EQ(trace[1][0b100], Amplitude(1));
    EXPECT_EQ(trace[2][0b100], Amplitude(1));

    EXPECT_EQ(run_with_trace(compile(build_tree(parse("q"))), QRegister::from_bits({1})).size(), 1u);
    EXPECT_THROW(run_with_trace(qt, QRegister::from_bits({1})), ArityMismatch);
}

TEST(quantum_tree, per_level_and_end_to_end_against_eval) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 150; ++i) {
        Sentence s = fixtures::random_sentence(rng);
        QubModel m = fixtures::random_model(rng);
        SyntacticTree t = build_tree(s);
        QuantumTree qt = compile(t);
        ASSERT_EQ(qt.layers.size(), t.height() - 1);
        for (std::size_t level = 1; level < t.height(); ++level) {
            EXPECT_EQ(qt.layers[level - 1].arity(), qt.n);
            QRegister below = fixtures::level_register(t.level(level + 1), m);
            QRegister here = fixtures::level_register(t.level(level), m);
            EXPECT_LE(max_abs_diff(apply_layer(below, qt.layers[level - 1]), here), kEpsVec);
        }
        auto trace = run_with_trace(qt, input_state(t, m));
        EXPECT_EQ(trace.size(), t.height());
        EXPECT_LE(max_abs_diff(trace.back(), eval(s, m)), kEpsVec) << to_string(s);
        EXPECT_LE(max_abs_diff(run(qt, input_state(t, m)), trace.back()), 0.0);
    }
}

TEST(quantum_tree, layers_are_unitary) {
    std::mt19937_64 rng(8);
    fixtures::SentenceOptions opt;
    opt.max_atcompl = 8;
    for (int i = 0; i < 40; ++i) {
        QuantumTree qt = compile(build_tree(fixtures::random_sentence(rng, opt)));
        for (const auto &l : qt.layers) {
            auto m = layer_matrix(l);
            EXPECT_TRUE(oracle::is_unitary(m));
            QRegister psi = fixtures::random_register(rng, qt.n);
            EXPECT_LE(max_abs_diff(oracle::apply(m, psi), apply_layer(psi, l)), kEpsVec);
        }
    }
}

TEST(circuit_json, contradiction_example) {
    QuantumTree qt = compile(build_tree(parse("p and not p")));
    EXPECT_EQ(circuit_to_json(qt).dump(),
              R"({"n":3,"layers":[[{"gate":"T","r":1,"s":1}],[{"gate":"I","r":1},{"gate":"NOT","r":1},{"gate":"I","r":1}]]})");
    EXPECT_EQ(circuit_to_json(compile(build_tree(parse("p")))).dump(), R"({"n":1,"layers":[]})");
}

TEST(circuit_json, round_trip_random) {
    std::mt19937_64 rng(10);
    for (int i = 0; i < 100; ++i) {
        QuantumTree qt = compile(build_tree(fixtures::random_sentence(rng)));
        EXPECT_EQ(circuit_from_json(json::parse(circuit_to_json(qt).dump())), qt);
    }
}

TEST(circuit_json, rejects_malformed) {
    EXPECT_THROW(circuit_from_json(json::parse(R"({"n":2,"layers":[[{"gate":"I","r":1}]]})")), FormatError);
    EXPECT_THROW(circuit_from_json(json::parse(R"({"n":1,"layers":[[{"gate":"H","r":1}]]})")), FormatError);
    EXPECT_THROW(circuit_from_json(json::parse(R"({"n":3,"layers":[[{"gate":"T","r":1}]]})")), FormatError);
    EXPECT_THROW(circuit_from_json(json::parse(R"({"n":1,"layers":[[]]})")), FormatError);
    EXPECT_THROW(circuit_from_json(json::parse(R"({"layers":[]})")), FormatError);
}
