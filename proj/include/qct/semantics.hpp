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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qct/lang.hpp"
#include "qct/model.hpp"
#include "qct/qcore.hpp"

namespace qct {

namespace detail {

inline QRegister eval_unchecked(const Sentence &s, const QubModel &m, std::size_t n_max) {
    switch (s.kind()) {
        case Sentence::Kind::Atom:
        case Sentence::Kind::Falsity:
            return m.qubit_for(s);
        case Sentence::Kind::Neg:
            return apply_not(eval_unchecked(s.child(0), m, n_max));
        case Sentence::Kind::SqrtNeg:
            return apply_sqrt_not(eval_unchecked(s.child(0), m, n_max));
        case Sentence::Kind::Conj3: {
            QRegister a = eval_unchecked(s.child(0), m, n_max);
            QRegister b = eval_unchecked(s.child(1), m, n_max);
            QRegister c = eval_unchecked(s.child(2), m, n_max);
            std::size_t r = a.qubits();
            std::size_t q = b.qubits();
            return apply_toffoli(tensor(tensor(a, b, n_max), c, n_max), r, q);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace detail

/// Qub(s): the quregister the model assigns to `s`, computed recursively.
/// Lives in the space of atomic_complexity(s) qubits.
inline QRegister eval(const Sentence &s, const QubModel &m, std::size_t n_max = kDefaultMaxQubits) {
    check_capacity(atomic_complexity(s), n_max);
    return detail::eval_unchecked(s, m, n_max);
}

inline double prob_of(const Sentence &s, const QubModel &m, std::size_t n_max = kDefaultMaxQubits) {
    return prob(eval(s, m, n_max));
}

inline bool is_true(const Sentence &s, const QubModel &m, std::size_t n_max = kDefaultMaxQubits) {
    return std::abs(prob_of(s, m, n_max) - 1.0) <= kEpsProb;
}

/// Prob(a) <= Prob(b). The two registers generally live in different spaces.
inline bool consequence_in_model(const Sentence &a, const Sentence &b, const QubModel &m,
                                 std::size_t n_max = kDefaultMaxQubits) {
    return prob_of(a, m, n_max) <= prob_of(b, m, n_max) + kEpsProb;
}

/// Distinct atom names, f excluded.
inline std::set<std::string> atom_names(const Sentence &s) {
    std::set<std::string> out;
    for (const auto &leaf : atoms_of(s)) {
        if (leaf.kind() == Sentence::Kind::Atom) {
            out.insert(leaf.name());
        }
    }
    return out;
}

/// Seeded source of random models. With delta > 0 every sampled qubit keeps
/// its probability more than delta away from 0, 1/2 and 1.
struct ModelSampler {
    std::uint64_t seed = 0;
    double delta = 0;

    static constexpr std::size_t kMaxAttempts = 1'000'000;

    ModelSampler(std::uint64_t seed = 0, double delta = 0) : seed(seed), delta(delta) {
        if (!(delta >= 0 && delta < 0.25)) {
            throw std::invalid_argument("sampler margin must lie in [0, 0.25)");
        }
    }

    /// Independent sampler for trial `index`, derived from (seed, index) only.
    ModelSampler for_trial(std::uint64_t index) const {
        return ModelSampler(mix(seed ^ mix(index + 0x632be59bd9b4e019ULL)), delta);
    }

   private:
    // splitmix64 finalizer
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

inline bool within_margin(double p, double delta) {
    return std::abs(p) > delta && std::abs(p - 0.5) > delta && std::abs(p - 1.0) > delta;
}

/// Haar-uniform qubits (normalized complex Gaussian pairs), one per atom,
/// drawn in sorted name order. Deterministic given the sampler.
inline QubModel sample_model(const std::set<std::string> &atoms, const ModelSampler &sampler) {
    std::mt19937_64 rng(sampler.seed);
    std::normal_distribution<double> gauss;
    QubModel m;
    for (const auto &atom : atoms) {
        std::size_t attempts = 0;
        while (true) {
            if (++attempts > ModelSampler::kMaxAttempts) {
                throw SamplerStuck("no qubit for '" + atom + "' met the margin after " +
                                   std::to_string(ModelSampler::kMaxAttempts) + " attempts");
            }
            Amplitude c0(gauss(rng), gauss(rng));
            Amplitude c1(gauss(rng), gauss(rng));
            double norm = std::sqrt(std::norm(c0) + std::norm(c1));
            if (norm == 0) {
                continue;
            }
            c0 /= norm;
            c1 /= norm;
            if (sampler.delta > 0 && !within_margin(std::norm(c1), sampler.delta)) {
                continue;
            }
            m.assign(atom, QRegister(1, {c0, c1}, QRegister::Unchecked{}));
            break;
        }
    }
    return m;
}

struct Refutation {
    QubModel model;
    std::size_t trial = 0;
    double prob_premise = 0;
    std::optional<double> prob_conclusion;
};

/// Looks for a model refuting `premise |= conclusion` (Prob(premise) exceeds
/// Prob(conclusion)) or, without a conclusion, refuting that `premise` is a
/// logical truth (Prob(premise) < 1). Trial t samples with
/// sampler.for_trial(t). Failure to find one proves nothing.
inline std::optional<Refutation> search_countermodel(const Sentence &premise, const std::optional<Sentence> &conclusion,
                                                     std::size_t trials, const ModelSampler &sampler,
                                                     std::size_t n_max = kDefaultMaxQubits) {
    if (trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }
    check_capacity(atomic_complexity(premise), n_max);
    std::set<std::string> atoms = atom_names(premise);
    if (conclusion) {
        check_capacity(atomic_complexity(*conclusion), n_max);
        atoms.merge(atom_names(*conclusion));
    }
    for (std::size_t t = 0; t < trials; ++t) {
        QubModel m = sample_model(atoms, sampler.for_trial(t));
        double pa = prob_of(premise, m, n_max);
        if (conclusion) {
            double pb = prob_of(*conclusion, m, n_max);
            if (pa > pb + kEpsProb) {
                return Refutation{std::move(m), t, pa, pb};
            }
        } else if (pa < 1.0 - kEpsProb) {
            return Refutation{std::move(m), t, pa, std::nullopt};
        }
    }
    return std::nullopt;
}

/// Outcome of checking every f: {0,1} -> {0,1} for f(f(x)) = 1 - x.
struct BooleanSqrtNotReport {
    struct Candidate {
        std::array<int, 2> table;  // f(0), f(1)
        bool satisfies;
        int witness;  // first x with f(f(x)) != 1 - x, or -1
    };
    std::vector<Candidate> candidates;
    std::size_t satisfying = 0;
};

inline BooleanSqrtNotReport check_no_boolean_sqrt_not() {
    BooleanSqrtNotReport report;
    for (int f0 = 0; f0 <= 1; ++f0) {
        for (int f1 = 0; f1 <= 1; ++f1) {
            std::array<int, 2> f{f0, f1};
            int witness = -1;
            for (int x = 0; x <= 1 && witness < 0; ++x) {
                if (f[f[x]] != 1 - x) {
                    witness = x;
                }
            }
            report.candidates.push_back({f, witness < 0, witness});
            if (witness < 0) {
                ++report.satisfying;
            }
        }
    }
    return report;
}

}  // namespace qct
