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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ksforge/pauli.hpp"

namespace ksforge {

// (re + i*im) / 2^k with k minimal.  Closed under +, -, * — everything the
// Pauli/projector algebra needs; no general division exists or is provided.
struct GaussianDyadic {
    int64_t re = 0;
    int64_t im = 0;
    int k = 0;

    constexpr GaussianDyadic() = default;
    GaussianDyadic(int64_t real, int64_t imag, int log2_den = 0);

    static GaussianDyadic integer(int64_t v) { return GaussianDyadic(v, 0, 0); }
    static GaussianDyadic i_pow(int exponent);  // i^exponent, exponent mod 4

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianDyadic conj() const { return GaussianDyadic(re, -im, k); }

    friend GaussianDyadic operator+(const GaussianDyadic& a, const GaussianDyadic& b);
    friend GaussianDyadic operator-(const GaussianDyadic& a, const GaussianDyadic& b);
    friend GaussianDyadic operator*(const GaussianDyadic& a, const GaussianDyadic& b);
    friend GaussianDyadic operator-(const GaussianDyadic& a);
    friend bool operator==(const GaussianDyadic&, const GaussianDyadic&) = default;

    std::string str() const;
};

// Dense matrix over GaussianDyadic.  Sized for exact oracle work on spaces
// of dimension 2^N, N <= kMatrixQubitCap; all arithmetic is exact and
// equality is exact entrywise equality.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols);

    static ExactMatrix identity(int dim);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GaussianDyadic& at(int r, int c) { return entries_[size_t(r) * cols_ + c]; }
    const GaussianDyadic& at(int r, int c) const { return entries_[size_t(r) * cols_ + c]; }

    bool is_zero() const;
    ExactMatrix dagger() const;
    GaussianDyadic trace() const;

    // Divides every entry by 2 (exactly representable by construction).
    ExactMatrix halved() const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<GaussianDyadic> entries_;
};

inline constexpr int kMatrixQubitCap = 5;

// 2^N x 2^N matrix of the operator; entries lie in {0, +-1, +-i}.  Qubit 0
// is the most significant tensor factor.  Throws CapExceeded above `cap`.
ExactMatrix to_matrix(const PhasedPauli& p, int cap = kMatrixQubitCap);
ExactMatrix to_matrix(const Observable& o, int cap = kMatrixQubitCap);

bool matrices_commute(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace ksforge
