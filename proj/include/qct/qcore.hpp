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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qct/errors.hpp"

namespace qct {

using Amplitude = std::complex<double>;

inline constexpr double kEpsNorm = 1e-9;
inline constexpr double kEpsVec = 1e-9;
inline constexpr double kEpsProb = 1e-9;

inline constexpr std::size_t kDefaultMaxQubits = 24;
inline constexpr std::size_t kHardMaxQubits = 28;

inline void check_capacity(std::size_t n, std::size_t n_max) {
    if (n > n_max || n > kHardMaxQubits) {
        throw CapacityExceeded(n, n_max < kHardMaxQubits ? n_max : kHardMaxQubits);
    }
}

/// A unit vector of the n-fold tensor product of C^2.
///
/// Amplitude index j encodes the basis string x1...xn big-endian,
/// j = 2^(n-1) x1 + ... + xn, so qubit n (the "last element" every gate
/// targets) is the least significant bit.
class QRegister {
   public:
    struct Unchecked {};

    /// Adopts amplitudes without validation. Callers guarantee the invariants.
    QRegister(std::size_t n, std::vector<Amplitude> amps, Unchecked) : n_(n), amps_(std::move(amps)) {
    }

    static QRegister from_amplitudes(std::vector<Amplitude> amps, std::size_t n_max = kDefaultMaxQubits) {
        std::size_t n = 0;
        while ((std::size_t{1} << n) < amps.size()) {
            ++n;
        }
        if (amps.size() < 2 || (std::size_t{1} << n) != amps.size()) {
            throw InvalidState("amplitude count " + std::to_string(amps.size()) + " is not 2^n with n >= 1");
        }
        check_capacity(n, n_max);
        QRegister out(n, std::move(amps), Unchecked{});
        if (std::abs(out.norm() - 1.0) > kEpsNorm) {
            throw InvalidState("register is not normalized (norm " + std::to_string(out.norm()) + ")");
        }
        return out;
    }

    static QRegister qubit(Amplitude c0, Amplitude c1) {
        return from_amplitudes({c0, c1});
    }

    static QRegister basis(std::size_t n, std::uint64_t index, std::size_t n_max = kDefaultMaxQubits) {
        if (n == 0) {
            throw InvalidState("register needs at least one qubit");
        }
        check_capacity(n, n_max);
        if (index >> n) {
            throw InvalidState("basis index " + std::to_string(index) + " out of range for " + std::to_string(n) +
                               " qubits");
        }
        std::vector<Amplitude> amps(std::size_t{1} << n);
        amps[index] = 1.0;
        return QRegister(n, std::move(amps), Unchecked{});
    }

    /// |x1,...,xn> from a bit string given left to right.
    static QRegister from_bits(std::span<const int> bits, std::size_t n_max = kDefaultMaxQubits) {
        std::uint64_t index = 0;
        for (int b : bits) {
            if (b != 0 && b != 1) {
                throw InvalidState("bit values must be 0 or 1");
            }
            index = (index << 1) | static_cast<std::uint64_t>(b);
        }
        return basis(bits.size(), index, n_max);
    }
    static QRegister from_bits(std::initializer_list<int> bits) {
        return from_bits(std::span<const int>(bits.begin(), bits.size()));
    }

    std::size_t qubits() const {
        return n_;
    }
    std::size_t dimension() const {
        return amps_.size();
    }
    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }
    Amplitude operator[](std::size_t j) const {
        return amps_[j];
    }

    double norm() const {
        double sum = 0;
        for (const auto &c : amps_) {
            sum += std::norm(c);
        }
        return std::sqrt(sum);
    }

    /// Releases the amplitude storage for in-place kernels.
    std::vector<Amplitude> take_amplitudes() && {
        return std::move(amps_);
    }

   private:
    std::size_t n_;
    std::vector<Amplitude> amps_;
};

/// Largest amplitude-wise |a_j - b_j|; infinity when the widths differ.
inline double max_abs_diff(const QRegister &a, const QRegister &b) {
    if (a.qubits() != b.qubits()) {
        return INFINITY;
    }
    double worst = 0;
    for (std::size_t j = 0; j < a.dimension(); ++j) {
        worst = std::max(worst, std::abs(a[j] - b[j]));
    }
    return worst;
}

inline QRegister tensor(const QRegister &a, const QRegister &b, std::size_t n_max = kDefaultMaxQubits) {
    std::size_t n = a.qubits() + b.qubits();
    check_capacity(n, n_max);
    std::vector<Amplitude> out;
    out.reserve(a.dimension() * b.dimension());
    for (const auto &ca : a.amplitudes()) {
        for (const auto &cb : b.amplitudes()) {
            out.push_back(ca * cb);
        }
    }
    return QRegister(n, std::move(out), QRegister::Unchecked{});
}

/// One of the gate families acting on a contiguous block of qubits.
struct GateTag {
    enum class Kind { Identity, Not, SqrtNot, Toffoli };

    Kind kind = Kind::Identity;
    std::size_t r = 1;
    std::size_t s = 0;  // only meaningful for Toffoli

    static GateTag identity() {
        return {Kind::Identity, 1, 0};
    }
    static GateTag negation(std::size_t r) {
        require_positive(r);
        return {Kind::Not, r, 0};
    }
    static GateTag sqrt_negation(std::size_t r) {
        require_positive(r);
        return {Kind::SqrtNot, r, 0};
    }
    /// T^(r,s,1): controls are the last qubits of the r-block and s-block.
    static GateTag toffoli(std::size_t r, std::size_t s) {
        require_positive(r);
        require_positive(s);
        return {Kind::Toffoli, r, s};
    }

    std::size_t arity() const {
        return kind == Kind::Toffoli ? r + s + 1 : r;
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::Identity:
                return "I";
            case Kind::Not:
                return "NOT(" + std::to_string(r) + ")";
            case Kind::SqrtNot:
                return "SNOT(" + std::to_string(r) + ")";
            case Kind::Toffoli:
                return "T(" + std::to_string(r) + "," + std::to_string(s) + ")";
        }
        return "?";
    }

    bool operator==(const GateTag &) const = default;

   private:
    static void require_positive(std::size_t v) {
        if (v == 0) {
            throw std::invalid_argument("gate block sizes must be positive");
        }
    }
};

namespace detail {

/// Applies `tag` in place to qubits [offset, offset + arity) of an n-qubit
/// amplitude vector. Positions count from the left, starting at 0.
/// Exclusive access to `amps` is required.
inline void apply_gate_in_place(std::vector<Amplitude> &amps, std::size_t n, std::size_t offset, const GateTag &tag) {
    const std::size_t last = offset + tag.arity() - 1;
    const std::uint64_t target = std::uint64_t{1} << (n - 1 - last);
    const std::size_t dim = amps.size();
    switch (tag.kind) {
        case GateTag::Kind::Identity:
            return;
        case GateTag::Kind::Not:
            for (std::size_t j = 0; j < dim; ++j) {
                if (!(j & target)) {
                    std::swap(amps[j], amps[j | target]);
                }
            }
            return;
        case GateTag::Kind::SqrtNot: {
            const Amplitude same(0.5, 0.5);
            const Amplitude flip(0.5, -0.5);
            for (std::size_t j = 0; j < dim; ++j) {
                if (!(j & target)) {
                    Amplitude c0 = amps[j];
                    Amplitude c1 = amps[j | target];
                    amps[j] = same * c0 + flip * c1;
                    amps[j | target] = flip * c0 + same * c1;
                }
            }
            return;
        }
        case GateTag::Kind::Toffoli: {
            const std::uint64_t x = std::uint64_t{1} << (n - 1 - (offset + tag.r - 1));
            const std::uint64_t y = std::uint64_t{1} << (n - 1 - (offset + tag.r + tag.s - 1));
            for (std::size_t j = 0; j < dim; ++j) {
                if ((j & x) && (j & y) && !(j & target)) {
                    std::swap(amps[j], amps[j | target]);
                }
            }
            return;
        }
    }
}

}  // namespace detail

/// Applies a gate whose arity equals the register width.
inline QRegister apply_gate(const QRegister &psi, const GateTag &tag) {
    if (tag.arity() != psi.qubits()) {
        throw ArityMismatch(tag.arity(), psi.qubits());
    }
    std::size_t n = psi.qubits();
    auto amps = QRegister(psi).take_amplitudes();
    detail::apply_gate_in_place(amps, n, 0, tag);
    return QRegister(n, std::move(amps), QRegister::Unchecked{});
}

inline QRegister apply_not(const QRegister &psi) {
    return apply_gate(psi, GateTag::negation(psi.qubits()));
}

inline QRegister apply_sqrt_not(const QRegister &psi) {
    return apply_gate(psi, GateTag::sqrt_negation(psi.qubits()));
}

inline QRegister apply_toffoli(const QRegister &psi, std::size_t r, std::size_t s) {
    return apply_gate(psi, GateTag::toffoli(r, s));
}

/// AND(psi, phi) = T(psi (x) phi (x) |0>).
inline QRegister and_op(const QRegister &psi, const QRegister &phi, std::size_t n_max = kDefaultMaxQubits) {
    check_capacity(psi.qubits() + phi.qubits() + 1, n_max);
    auto joined = tensor(tensor(psi, phi, n_max), QRegister::basis(1, 0), n_max);
    return apply_toffoli(joined, psi.qubits(), phi.qubits());
}

/// OR(psi, phi) = NOT(AND(NOT psi, NOT phi)).
inline QRegister or_op(const QRegister &psi, const QRegister &phi, std::size_t n_max = kDefaultMaxQubits) {
    return apply_not(and_op(apply_not(psi), apply_not(phi), n_max));
}

/// Probability-value: total squared weight on odd basis indices.
inline double prob(const QRegister &psi) {
    double sum = 0;
    const auto amps = psi.amplitudes();
    for (std::size_t j = 1; j < amps.size(); j += 2) {
        sum += std::norm(amps[j]);
    }
    if (sum < 0) {
        return 0;
    }
    if (sum > 1) {
        return 1;
    }
    return sum;
}

}  // namespace qct
