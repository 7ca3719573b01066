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

// Reference implementation of the gate families as explicit 2^n x 2^n
// matrices, built from their action on basis strings. Used to cross-check
// the index-arithmetic kernels in qcore.hpp; never used on the hot path.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qct/qcore.hpp"

namespace qct::oracle {

inline constexpr std::size_t kMaxOracleQubits = 10;

/// Square complex matrix, row-major.
struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<Amplitude> data;

    explicit DenseMatrix(std::size_t d) : dim(d), data(d * d) {
    }
    Amplitude &at(std::size_t row, std::size_t col) {
        return data[row * dim + col];
    }
    Amplitude at(std::size_t row, std::size_t col) const {
        return data[row * dim + col];
    }

    static DenseMatrix identity(std::size_t d) {
        DenseMatrix m(d);
        for (std::size_t i = 0; i < d; ++i) {
            m.at(i, i) = 1.0;
        }
        return m;
    }
};

namespace detail {

inline std::vector<int> bits_of(std::uint64_t j, std::size_t n) {
    std::vector<int> bits(n);
    for (std::size_t k = 0; k < n; ++k) {
        bits[k] = static_cast<int>((j >> (n - 1 - k)) & 1U);
    }
    return bits;
}

inline std::uint64_t index_of(const std::vector<int> &bits) {
    std::uint64_t j = 0;
    for (int b : bits) {
        j = 2 * j + static_cast<std::uint64_t>(b);
    }
    return j;
}

}  // namespace detail

/// Column j of the result is the image of basis vector |j>.
inline DenseMatrix gate_matrix(const GateTag &tag) {
    const std::size_t n = tag.arity();
    if (n > kMaxOracleQubits) {
        throw CapacityExceeded(n, kMaxOracleQubits);
    }
    const std::size_t dim = std::size_t{1} << n;
    DenseMatrix m(dim);
    for (std::uint64_t col = 0; col < dim; ++col) {
        std::vector<int> x = detail::bits_of(col, n);
        switch (tag.kind) {
            case GateTag::Kind::Identity:
                m.at(col, col) = 1.0;
                break;
            case GateTag::Kind::Not: {
                x[n - 1] = 1 - x[n - 1];
                m.at(detail::index_of(x), col) = 1.0;
                break;
            }
            case GateTag::Kind::SqrtNot: {
                // |x1..xn> -> |x1..x(n-1)> (x) ((1+i)|xn> + (1-i)|1-xn>) / 2
                m.at(col, col) = Amplitude(1, 1) / 2.0;
                x[n - 1] = 1 - x[n - 1];
                m.at(detail::index_of(x), col) = Amplitude(1, -1) / 2.0;
                break;
            }
            case GateTag::Kind::Toffoli: {
                int xr = x[tag.r - 1];
                int ys = x[tag.r + tag.s - 1];
                x[n - 1] = (xr * ys + x[n - 1]) % 2;
                m.at(detail::index_of(x), col) = 1.0;
                break;
            }
        }
    }
    return m;
}

inline DenseMatrix multiply(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix out(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        for (std::size_t k = 0; k < a.dim; ++k) {
            Amplitude aik = a.at(i, k);
            if (aik == Amplitude{}) {
                continue;
            }
            for (std::size_t j = 0; j < a.dim; ++j) {
                out.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return out;
}

inline DenseMatrix adjoint(const DenseMatrix &a) {
    DenseMatrix out(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        for (std::size_t j = 0; j < a.dim; ++j) {
            out.at(j, i) = std::conj(a.at(i, j));
        }
    }
    return out;
}

inline DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix out(a.dim * b.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        for (std::size_t j = 0; j < a.dim; ++j) {
            for (std::size_t k = 0; k < b.dim; ++k) {
                for (std::size_t l = 0; l < b.dim; ++l) {
                    out.at(i * b.dim + k, j * b.dim + l) = a.at(i, j) * b.at(k, l);
                }
            }
        }
    }
    return out;
}

inline double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        worst = std::max(worst, std::abs(a.data[i] - b.data[i]));
    }
    return worst;
}

inline bool is_unitary(const DenseMatrix &m, double tol = kEpsVec) {
    return max_abs_diff(multiply(adjoint(m), m), DenseMatrix::identity(m.dim)) <= tol;
}

inline QRegister apply(const DenseMatrix &m, const QRegister &psi) {
    if (m.dim != psi.dimension()) {
        throw ArityMismatch(m.dim, psi.dimension());
    }
    std::vector<Amplitude> out(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) {
        for (std::size_t j = 0; j < m.dim; ++j) {
            out[i] += m.at(i, j) * psi[j];
        }
    }
    return QRegister(psi.qubits(), std::move(out), QRegister::Unchecked{});
}

/// Matrix-vector reference for apply_gate; oracle scale only.
inline QRegister dense_oracle_apply(const QRegister &psi, const GateTag &tag) {
    if (psi.qubits() > kMaxOracleQubits) {
        throw CapacityExceeded(psi.qubits(), kMaxOracleQubits);
    }
    if (tag.arity() != psi.qubits()) {
        throw ArityMismatch(tag.arity(), psi.qubits());
    }
    return apply(gate_matrix(tag), psi);
}

}  // namespace qct::oracle
