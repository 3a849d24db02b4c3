// Copyright 2026 The qbool Authors
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

#ifndef QBOOL_TESTS_REFERENCE_H
#define QBOOL_TESTS_REFERENCE_H

// Reference models used only by tests. Nothing here calls into the library's
// evaluation or simulation code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qbool/anf.h"
#include "qbool/circuit.h"

namespace qbool::ref {

using Complex = std::complex<double>;

/// Row-major square matrix.
struct Matrix {
    size_t dim = 0;
    std::vector<Complex> a;

    explicit Matrix(size_t d) : dim(d), a(d * d, 0.0) {
    }
    Complex &operator()(size_t r, size_t c) {
        return a[r * dim + c];
    }
    Complex operator()(size_t r, size_t c) const {
        return a[r * dim + c];
    }
    static Matrix identity(size_t d) {
        Matrix m(d);
        for (size_t i = 0; i < d; i++) {
            m(i, i) = 1;
        }
        return m;
    }
    static Matrix two(Complex a00, Complex a01, Complex a10, Complex a11) {
        Matrix m(2);
        m(0, 0) = a00;
        m(0, 1) = a01;
        m(1, 0) = a10;
        m(1, 1) = a11;
        return m;
    }
};

inline Matrix kron(const Matrix &x, const Matrix &y) {
    Matrix out(x.dim * y.dim);
    for (size_t r1 = 0; r1 < x.dim; r1++) {
        for (size_t c1 = 0; c1 < x.dim; c1++) {
            for (size_t r2 = 0; r2 < y.dim; r2++) {
                for (size_t c2 = 0; c2 < y.dim; c2++) {
                    out(r1 * y.dim + r2, c1 * y.dim + c2) = x(r1, c1) * y(r2, c2);
                }
            }
        }
    }
    return out;
}

inline Matrix add(const Matrix &x, const Matrix &y, Complex scale_y = 1.0) {
    Matrix out = x;
    for (size_t i = 0; i < out.a.size(); i++) {
        out.a[i] += scale_y * y.a[i];
    }
    return out;
}

inline Matrix matmul(const Matrix &x, const Matrix &y) {
    Matrix out(x.dim);
    for (size_t r = 0; r < x.dim; r++) {
        for (size_t k = 0; k < x.dim; k++) {
            for (size_t c = 0; c < x.dim; c++) {
                out(r, c) += x(r, k) * y(k, c);
            }
        }
    }
    return out;
}

inline std::vector<Complex> matvec(const Matrix &m, const std::vector<Complex> &v) {
    std::vector<Complex> out(m.dim, 0.0);
    for (size_t r = 0; r < m.dim; r++) {
        for (size_t c = 0; c < m.dim; c++) {
            out[r] += m(r, c) * v[c];
        }
    }
    return out;
}

inline const Matrix &pauli_x() {
    static const Matrix m = Matrix::two(0, 1, 1, 0);
    return m;
}
inline const Matrix &pauli_z() {
    static const Matrix m = Matrix::two(1, 0, 0, -1);
    return m;
}
inline const Matrix &hadamard() {
    static const double s = 1 / std::sqrt(2.0);
    static const Matrix m = Matrix::two(s, s, s, -s);
    return m;
}
inline const Matrix &proj1() {
    static const Matrix m = Matrix::two(0, 0, 0, 1);
    return m;
}

/// Tensor product with factor q at qubit q; qubit 0 is the leftmost factor.
inline Matrix tensor(const std::vector<Matrix> &factors) {
    Matrix out = Matrix::identity(1);
    for (const auto &f : factors) {
        out = kron(out, f);
    }
    return out;
}

/// Full unitary of a gate from its 2x2 building blocks:
/// controlled-U = I + |1..1><1..1|_controls (x) (U - I)_target.
inline Matrix gate_matrix(const Gate &g, uint32_t num_qubits) {
    size_t dim = size_t{1} << num_qubits;
    std::vector<Matrix> factors(num_qubits, Matrix::identity(2));
    Matrix I2 = Matrix::identity(2);
    switch (g.kind) {
        case GateKind::X:
            factors[g.target] = pauli_x();
            return tensor(factors);
        case GateKind::Z:
            factors[g.target] = pauli_z();
            return tensor(factors);
        case GateKind::H:
            factors[g.target] = hadamard();
            return tensor(factors);
        case GateKind::CNOT:
        case GateKind::MCX:
            for (uint32_t c : g.controls) {
                factors[c] = proj1();
            }
            factors[g.target] = add(pauli_x(), I2, -1.0);
            return add(Matrix::identity(dim), tensor(factors));
        case GateKind::MCZ:
            for (uint32_t c : g.controls) {
                factors[c] = proj1();
            }
            factors[g.target] = add(pauli_z(), I2, -1.0);
            return add(Matrix::identity(dim), tensor(factors));
    }
    throw std::logic_error("unknown gate kind");
}

/// Basis-state tracking for circuits without H: every gate maps a basis
/// state to a signed basis state. Bit q of the index is 1 << (n - 1 - q).
struct SignedBasis {
    uint64_t index = 0;
    int sign = 1;
};

inline SignedBasis classical_run(const Circuit &c, uint64_t index) {
    uint32_t n = c.num_qubits();
    auto bit = [&](uint32_t q) {
        return (index >> (n - 1 - q)) & 1;
    };
    int sign = 1;
    for (const auto &g : c.gates()) {
        bool all = true;
        for (uint32_t q : g.controls) {
            all = all && bit(q);
        }
        switch (g.kind) {
            case GateKind::X:
            case GateKind::CNOT:
            case GateKind::MCX:
                if (all) {
                    index ^= uint64_t{1} << (n - 1 - g.target);
                }
                break;
            case GateKind::Z:
            case GateKind::MCZ:
                if (all && bit(g.target)) {
                    sign = -sign;
                }
                break;
            case GateKind::H:
                throw std::invalid_argument("classical_run cannot follow H");
        }
    }
    return {index, sign};
}

/// Polynomial value straight from its term list, x[i] = value of variable i.
inline int naive_eval(const AnfPoly &p, const std::vector<int> &x) {
    int acc = 0;
    for (const auto &t : p.terms()) {
        int prod = 1;
        for (uint32_t v : t.vars()) {
            prod &= x.at(v);
        }
        acc ^= prod;
    }
    return acc;
}

/// Variable i of assignment x, variable 0 most significant.
inline std::vector<int> bits_msb(uint64_t x, uint32_t n) {
    std::vector<int> out(n);
    for (uint32_t i = 0; i < n; i++) {
        out[i] = static_cast<int>((x >> (n - 1 - i)) & 1);
    }
    return out;
}

/// 1 iff every equation vanishes at x.
inline int system_indicator(const BqeSystem &s, uint64_t x) {
    auto bits = bits_msb(x, s.n);
    for (const auto &f : s.equations) {
        if (naive_eval(f, bits)) {
            return 0;
        }
    }
    return 1;
}

/// Random polynomial with terms of size <= max_degree over n variables.
inline AnfPoly random_poly(uint32_t n, uint32_t max_degree, std::mt19937_64 &rng, size_t max_terms = 6) {
    std::uniform_int_distribution<size_t> count(0, max_terms);
    std::uniform_int_distribution<uint32_t> var(0, n - 1);
    std::uniform_int_distribution<uint32_t> deg(0, max_degree);
    AnfPoly p;
    size_t k = count(rng);
    for (size_t i = 0; i < k; i++) {
        std::vector<uint32_t> vars;
        uint32_t d = deg(rng);
        for (uint32_t j = 0; j < d; j++) {
            vars.push_back(var(rng));
        }
        p.toggle(Term(vars));
    }
    return p;
}

/// Random satisfiable-or-not system of degree <= 2 with R equations.
inline BqeSystem random_system(uint32_t n, size_t R, std::mt19937_64 &rng) {
    BqeSystem s;
    s.n = n;
    for (size_t i = 0; i < R; i++) {
        s.equations.push_back(random_poly(n, 2, rng));
    }
    return s;
}

/// P(X <= k) for X ~ Binomial(n, p).
inline double binomial_cdf(uint64_t k, uint64_t n, double p) {
    double total = 0;
    for (uint64_t i = 0; i <= k && i <= n; i++) {
        double log_term = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0) +
                          i * std::log(p) + (n - i) * std::log1p(-p);
        total += std::exp(log_term);
    }
    return std::min(total, 1.0);
}

/// Monte-Carlo stand-in for randomized oracles on an N-dimensional register:
/// solutions 0..M-1 always get -1, every other entry independently gets -1
/// with probability q = (Mtilde - M) / (N - M). Tracks the mean over runs of
/// the solution amplitude and of the average non-solution amplitude, with
/// standard errors.
struct DiagonalMonteCarlo {
    std::vector<double> mean_solution;
    std::vector<double> se_solution;
    std::vector<double> mean_other;
    std::vector<double> se_other;
};

inline DiagonalMonteCarlo diagonal_monte_carlo(uint64_t N, uint64_t M, uint64_t Mtilde, size_t K, size_t runs,
                                               uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution flip(static_cast<double>(Mtilde - M) / static_cast<double>(N - M));
    std::vector<double> s1(K + 1, 0), s2(K + 1, 0), o1(K + 1, 0), o2(K + 1, 0);
    for (size_t run = 0; run < runs; run++) {
        std::vector<double> c(N, 1.0 / std::sqrt(static_cast<double>(N)));
        for (size_t k = 0; k <= K; k++) {
            if (k > 0) {
                for (uint64_t i = 0; i < N; i++) {
                    if (i < M || flip(rng)) {
                        c[i] = -c[i];
                    }
                }
                double mean = 0;
                for (double v : c) {
                    mean += v;
                }
                mean /= static_cast<double>(N);
                for (double &v : c) {
                    v = 2 * mean - v;
                }
            }
            double sol = 0;
            for (uint64_t i = 0; i < M; i++) {
                sol += c[i];
            }
            sol /= static_cast<double>(M);
            double other = 0;
            for (uint64_t i = M; i < N; i++) {
                other += c[i];
            }
            other /= static_cast<double>(N - M);
            s1[k] += sol;
            s2[k] += sol * sol;
            o1[k] += other;
            o2[k] += other * other;
        }
    }
    DiagonalMonteCarlo out;
    double n = static_cast<double>(runs);
    for (size_t k = 0; k <= K; k++) {
        double ms = s1[k] / n;
        double mo = o1[k] / n;
        out.mean_solution.push_back(ms);
        out.mean_other.push_back(mo);
        out.se_solution.push_back(std::sqrt(std::max(0.0, s2[k] / n - ms * ms) / (n - 1)));
        out.se_other.push_back(std::sqrt(std::max(0.0, o2[k] / n - mo * mo) / (n - 1)));
    }
    return out;
}

}  // namespace qbool::ref

#endif
