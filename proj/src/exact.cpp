// Copyright 2026 The ksforge Authors
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

#include "ksforge/exact.hpp"

#include <cassert>
#include <stdexcept>

#include "ksforge/errors.hpp"

namespace ksforge {

GaussianDyadic::GaussianDyadic(int64_t real, int64_t imag, int log2_den)
    : re(real), im(imag), k(log2_den) {
    assert(k >= 0);
    if (re == 0 && im == 0) {
        k = 0;
        return;
    }
    while (k > 0 && (re & 1) == 0 && (im & 1) == 0) {
        re >>= 1;
        im >>= 1;
        --k;
    }
}

GaussianDyadic GaussianDyadic::i_pow(int exponent) {
    switch (exponent & 3) {
        case 0: return GaussianDyadic(1, 0);
        case 1: return GaussianDyadic(0, 1);
        case 2: return GaussianDyadic(-1, 0);
        default: return GaussianDyadic(0, -1);
    }
}

GaussianDyadic operator+(const GaussianDyadic& a, const GaussianDyadic& b) {
    int k = std::max(a.k, b.k);
    return GaussianDyadic((a.re << (k - a.k)) + (b.re << (k - b.k)),
                          (a.im << (k - a.k)) + (b.im << (k - b.k)), k);
}

GaussianDyadic operator-(const GaussianDyadic& a, const GaussianDyadic& b) {
    return a + (-b);
}

GaussianDyadic operator-(const GaussianDyadic& a) {
    return GaussianDyadic(-a.re, -a.im, a.k);
}

GaussianDyadic operator*(const GaussianDyadic& a, const GaussianDyadic& b) {
    return GaussianDyadic(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re, a.k + b.k);
}

std::string GaussianDyadic::str() const {
    std::string num;
    if (im == 0) {
        num = std::to_string(re);
    } else if (re == 0) {
        num = std::to_string(im) + "i";
    } else {
        num = "(" + std::to_string(re) + (im > 0 ? "+" : "") + std::to_string(im) + "i)";
    }
    if (k == 0) return num;
    return num + "/" + std::to_string(int64_t(1) << k);
}

ExactMatrix::ExactMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(size_t(rows) * size_t(cols)) {}

ExactMatrix ExactMatrix::identity(int dim) {
    ExactMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = GaussianDyadic::integer(1);
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

ExactMatrix ExactMatrix::dagger() const {
    ExactMatrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c).conj();
    }
    return m;
}

GaussianDyadic ExactMatrix::trace() const {
    GaussianDyadic t;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t = t + at(i, i);
    return t;
}

ExactMatrix ExactMatrix::halved() const {
    ExactMatrix m(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) {
        const GaussianDyadic& e = entries_[i];
        m.entries_[i] = GaussianDyadic(e.re, e.im, e.k + 1);
    }
    return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    ExactMatrix m(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r) {
        for (int k = 0; k < a.cols_; ++k) {
            const GaussianDyadic& av = a.at(r, k);
            if (av.is_zero()) continue;
            for (int c = 0; c < b.cols_; ++c) {
                const GaussianDyadic& bv = b.at(k, c);
                if (bv.is_zero()) continue;
                m.at(r, c) = m.at(r, c) + av * bv;
            }
        }
    }
    return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("matrix shape mismatch in sum");
    }
    ExactMatrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < a.entries_.size(); ++i) m.entries_[i] = a.entries_[i] + b.entries_[i];
    return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("matrix shape mismatch in difference");
    }
    ExactMatrix m(a.rows_, a.cols_);
    for (size_t i = 0; i < a.entries_.size(); ++i) m.entries_[i] = a.entries_[i] - b.entries_[i];
    return m;
}

ExactMatrix to_matrix(const PhasedPauli& p, int cap) {
    if (p.n > cap) {
        throw CapExceeded("matrix realization capped at " + std::to_string(cap) +
                          " qubits; got " + std::to_string(p.n));
    }
    int dim = 1 << p.n;
    // Index bit of qubit q is bit (n-1-q): qubit 0 is the most significant
    // tensor factor, matching the symbol string read left to right.
    uint64_t x_idx = 0;
    for (int q = 0; q < p.n; ++q) {
        if ((p.x >> q) & 1) x_idx |= uint64_t(1) << (p.n - 1 - q);
    }
    ExactMatrix m(dim, dim);
    for (int c = 0; c < dim; ++c) {
        int r = int(uint64_t(c) ^ x_idx);
        int t = p.phase;  // accumulate the power of i for this column
        int minus = 0;
        for (int q = 0; q < p.n; ++q) {
            bool xq = (p.x >> q) & 1;
            bool zq = (p.z >> q) & 1;
            bool cq = (c >> (p.n - 1 - q)) & 1;
            if (xq && zq) {
                t += cq ? 3 : 1;  // Y: column |0> -> i|1>, column |1> -> -i|0>
            } else if (zq) {
                minus ^= cq;  // Z: (-1)^bit
            }
        }
        if (minus) t += 2;
        m.at(r, c) = GaussianDyadic::i_pow(t);
    }
    return m;
}

ExactMatrix to_matrix(const Observable& o, int cap) {
    return to_matrix(o.phased(), cap);
}

bool matrices_commute(const ExactMatrix& a, const ExactMatrix& b) {
    return a * b == b * a;
}

}  // namespace ksforge
