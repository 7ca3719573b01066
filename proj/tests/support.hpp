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

// Random generators and independent oracles shared by the unit and
// acceptance suites.

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "qct/qct.hpp"

namespace qct::fixtures {

inline QRegister random_register(std::mt19937_64 &rng, std::size_t n) {
    std::normal_distribution<double> gauss;
    std::vector<Amplitude> amps(std::size_t{1} << n);
    double total = 0;
    for (auto &c : amps) {
        c = {gauss(rng), gauss(rng)};
        total += std::norm(c);
    }
    for (auto &c : amps) {
        c /= std::sqrt(total);
    }
    return QRegister::from_amplitudes(std::move(amps));
}

inline std::size_t random_width(std::mt19937_64 &rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

struct SentenceOptions {
    std::size_t max_depth = 6;
    std::size_t max_atcompl = 12;
    bool allow_falsity = true;
    bool allow_sqrt = true;
    std::vector<std::string> pool{"p", "q", "r", "s"};
};

namespace detail {

inline Sentence grow(std::mt19937_64 &rng, const SentenceOptions &opt, std::size_t depth) {
    // 0 leaf, 1 not, 2 snot, 3 and, 4 or; uniform over the allowed ones
    std::vector<int> choices{0, 1, 3, 4};
    if (opt.allow_sqrt) {
        choices.push_back(2);
    }
    int pick = depth + 1 >= opt.max_depth ? 0 : choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
    switch (pick) {
        case 1:
            return Sentence::neg(grow(rng, opt, depth + 1));
        case 2:
            return Sentence::sqrt_neg(grow(rng, opt, depth + 1));
        case 3: {
            Sentence a = grow(rng, opt, depth + 1);
            return Sentence::conj(a, grow(rng, opt, depth + 1));
        }
        case 4: {
            Sentence a = grow(rng, opt, depth + 1);
            return Sentence::disj(a, grow(rng, opt, depth + 1));
        }
        default:
            break;
    }
    std::size_t leaves = opt.pool.size() + (opt.allow_falsity ? 1 : 0);
    std::size_t k = std::uniform_int_distribution<std::size_t>(0, leaves - 1)(rng);
    return k < opt.pool.size() ? Sentence::atom(opt.pool[k]) : Sentence::falsity();
}

}  // namespace detail

/// Random desugared sentence within the depth and atomic-complexity bounds.
inline Sentence random_sentence(std::mt19937_64 &rng, const SentenceOptions &opt = {}) {
    while (true) {
        Sentence s = detail::grow(rng, opt, 0);
        if (atomic_complexity(s) <= opt.max_atcompl) {
            return s;
        }
    }
}

/// Model giving every atom in `pool` a Haar-random qubit.
inline QubModel random_model(std::mt19937_64 &rng, const std::vector<std::string> &pool = {"p", "q", "r", "s"}) {
    QubModel m;
    for (const auto &name : pool) {
        m.assign(name, random_register(rng, 1));
    }
    return m;
}

/// Surface-level Boolean formula over p, q, r and f, evaluated classically.
/// Kept separate from the library AST so it can serve as an oracle.
struct BoolFormula {
    enum class Op { Var, False, Not, And, Or };
    Op op = Op::False;
    int var = 0;
    std::shared_ptr<const BoolFormula> lhs, rhs;

    std::string text() const {
        static const char *names[] = {"p", "q", "r"};
        switch (op) {
            case Op::Var:
                return names[var];
            case Op::False:
                return "f";
            case Op::Not:
                return "not (" + lhs->text() + ")";
            case Op::And:
                return "(" + lhs->text() + ") and (" + rhs->text() + ")";
            case Op::Or:
                return "(" + lhs->text() + ") or (" + rhs->text() + ")";
        }
        return "";
    }

    bool value(unsigned assignment) const {
        switch (op) {
            case Op::Var:
                return (assignment >> var) & 1U;
            case Op::False:
                return false;
            case Op::Not:
                return !lhs->value(assignment);
            case Op::And:
                return lhs->value(assignment) && rhs->value(assignment);
            case Op::Or:
                return lhs->value(assignment) || rhs->value(assignment);
        }
        return false;
    }
};

/// Every formula with at most `max_size` nodes, grouped by size.
inline std::vector<std::shared_ptr<const BoolFormula>> enumerate_formulas(std::size_t max_size) {
    using Ptr = std::shared_ptr<const BoolFormula>;
    std::vector<std::vector<Ptr>> by_size(max_size + 1);
    for (int v = 0; v < 3; ++v) {
        by_size[1].push_back(std::make_shared<BoolFormula>(BoolFormula{BoolFormula::Op::Var, v, nullptr, nullptr}));
    }
    by_size[1].push_back(std::make_shared<BoolFormula>(BoolFormula{BoolFormula::Op::False, 0, nullptr, nullptr}));
    for (std::size_t size = 2; size <= max_size; ++size) {
        for (const auto &inner : by_size[size - 1]) {
            by_size[size].push_back(std::make_shared<BoolFormula>(BoolFormula{BoolFormula::Op::Not, 0, inner, nullptr}));
        }
        for (std::size_t left = 1; left + 1 < size; ++left) {
            std::size_t right = size - 1 - left;
            for (const auto &a : by_size[left]) {
                for (const auto &b : by_size[right]) {
                    by_size[size].push_back(std::make_shared<BoolFormula>(BoolFormula{BoolFormula::Op::And, 0, a, b}));
                    by_size[size].push_back(std::make_shared<BoolFormula>(BoolFormula{BoolFormula::Op::Or, 0, a, b}));
                }
            }
        }
    }
    std::vector<Ptr> all;
    for (auto &group : by_size) {
        all.insert(all.end(), group.begin(), group.end());
    }
    return all;
}

/// Closed form for Prob after sqrt-not: sum over odd j of |(1-i)/2 c_{j-1} + (1+i)/2 c_j|^2.
inline double sqrt_not_prob_formula(const QRegister &psi) {
    const Amplitude lo(0.5, -0.5);
    const Amplitude hi(0.5, 0.5);
    double sum = 0;
    for (std::size_t j = 1; j < psi.dimension(); j += 2) {
        sum += std::norm(lo * psi[j - 1] + hi * psi[j]);
    }
    return sum;
}

/// sum_j a_j |j>|x_j>: every computational component has a definite last bit.
inline QRegister random_definite_last_bit(std::mt19937_64 &rng, std::size_t n) {
    QRegister head = random_register(rng, n - 1);
    std::vector<Amplitude> amps(std::size_t{1} << n);
    std::bernoulli_distribution coin;
    for (std::size_t j = 0; j < head.dimension(); ++j) {
        amps[2 * j + (coin(rng) ? 1 : 0)] = head[j];
    }
    return QRegister::from_amplitudes(std::move(amps));
}

/// U_i |psi_{i+1}> = |psi_i> check material: the semantic quregister of level i.
inline QRegister level_register(const std::vector<Sentence> &level, const QubModel &m) {
    QRegister out = eval(level.front(), m);
    for (std::size_t j = 1; j < level.size(); ++j) {
        out = tensor(out, eval(level[j], m));
    }
    return out;
}

}  // namespace qct::fixtures
