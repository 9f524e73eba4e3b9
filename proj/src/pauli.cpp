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

#include "ksforge/pauli.hpp"

#include <algorithm>
#include <bit>

#include "ksforge/errors.hpp"

namespace ksforge {

namespace {

// Factor codes used internally: I=0, X=1, Z=2, Y=3 (code = x + 2z).
inline int factor_code(const PhasedPauli& p, int q) {
    return int((p.x >> q) & 1) | (int((p.z >> q) & 1) << 1);
}

// Exponent t of i in W_a * W_b = i^t W_c for Hermitian single-qubit factors,
// indexed by the (x + 2z) codes above.
constexpr int kMulPhase[4][4] = {
    // I  X  Z  Y
    {0, 0, 0, 0},  // I
    {0, 0, 3, 1},  // X : XZ=-iY, XY=iZ
    {0, 1, 0, 3},  // Z : ZX=iY,  ZY=-iX
    {0, 3, 1, 0},  // Y : YX=-iZ, YZ=iX
};

constexpr char kLetter[4] = {'I', 'X', 'Y', 'Z'};  // indexed by lexicographic digit

// lexicographic digit (I=0,X=1,Y=2,Z=3) from the internal factor code
constexpr int kLexDigit[4] = {0, 1, 3, 2};

void check_same_shape(const PhasedPauli& a, const PhasedPauli& b) {
    if (a.n != b.n) {
        throw std::invalid_argument("qubit counts differ: " + std::to_string(a.n) +
                                    " vs " + std::to_string(b.n));
    }
}

}  // namespace

uint32_t PhasedPauli::lex_code() const {
    uint32_t code = 0;
    for (int q = 0; q < n; ++q) {
        code = code * 4 + uint32_t(kLexDigit[factor_code(*this, q)]);
    }
    return code;
}

PhasedPauli identity_pauli(int n) {
    return PhasedPauli{n, 0, 0, 0};
}

PhasedPauli multiply(const PhasedPauli& a, const PhasedPauli& b) {
    check_same_shape(a, b);
    int t = a.phase + b.phase;
    for (int q = 0; q < a.n; ++q) {
        t += kMulPhase[factor_code(a, q)][factor_code(b, q)];
    }
    return PhasedPauli{a.n, a.x ^ b.x, a.z ^ b.z, t & 3};
}

bool commutes(const PhasedPauli& a, const PhasedPauli& b) {
    check_same_shape(a, b);
    int s = std::popcount(a.x & b.z) + std::popcount(b.x & a.z);
    return (s & 1) == 0;
}

PhasedPauli Observable::phased() const {
    PhasedPauli p = base;
    if (sign < 0) p.phase = (p.phase + 2) & 3;
    return p;
}

bool operator<(const Observable& a, const Observable& b) {
    uint32_t ca = a.lex_code(), cb = b.lex_code();
    if (ca != cb) return ca < cb;
    return a.sign > b.sign;  // '+' before '-'
}

Observable parse_observable(const std::string& text) {
    size_t pos = 0;
    int sign = +1;
    if (pos < text.size() && text[pos] == '-') {
        sign = -1;
        ++pos;
    }
    size_t n = text.size() - pos;
    if (n == 0) {
        throw ParseError("empty observable symbol", "position " + std::to_string(pos + 1));
    }
    if (n > size_t(kMaxQubits)) {
        throw CapExceeded("observable symbol longer than " + std::to_string(kMaxQubits) +
                          " qubits: " + text);
    }
    PhasedPauli base{int(n), 0, 0, 0};
    for (size_t i = 0; i < n; ++i) {
        char c = text[pos + i];
        uint64_t bit = uint64_t(1) << i;
        switch (c) {
            case 'I': break;
            case 'X': base.x |= bit; break;
            case 'Y': base.x |= bit; base.z |= bit; break;
            case 'Z': base.z |= bit; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "' in observable",
                                 "position " + std::to_string(pos + i + 1));
        }
    }
    if (base.is_identity_base()) {
        throw ParseError("trivial observable (all factors are I): " + text,
                         "position " + std::to_string(pos + 1));
    }
    return Observable{base, sign};
}

std::string base_symbol(const PhasedPauli& base) {
    std::string s(size_t(base.n), 'I');
    for (int q = 0; q < base.n; ++q) {
        s[size_t(q)] = kLetter[kLexDigit[factor_code(base, q)]];
    }
    return s;
}

std::string format_observable(const Observable& o) {
    std::string s = base_symbol(o.base);
    return o.sign < 0 ? "-" + s : s;
}

Observable observable_from_code(int n, uint32_t code) {
    PhasedPauli base{n, 0, 0, 0};
    for (int q = n - 1; q >= 0; --q) {
        uint32_t digit = code & 3;  // lexicographic digit of qubit q
        code >>= 2;
        uint64_t bit = uint64_t(1) << q;
        switch (digit) {
            case 0: break;
            case 1: base.x |= bit; break;
            case 2: base.x |= bit; base.z |= bit; break;
            case 3: base.z |= bit; break;
        }
    }
    return Observable{base, +1};
}

std::optional<Observable> restrict_observable(const Observable& o,
                                              const std::vector<int>& kept_qubits) {
    if (kept_qubits.empty()) {
        throw std::invalid_argument("kept qubit set must be nonempty");
    }
    PhasedPauli base{int(kept_qubits.size()), 0, 0, 0};
    int prev = -1;
    for (size_t i = 0; i < kept_qubits.size(); ++i) {
        int q = kept_qubits[i];
        if (q <= prev || q >= o.base.n) {
            throw std::invalid_argument("kept qubits must be strictly ascending indices in range");
        }
        prev = q;
        base.x |= ((o.base.x >> q) & 1) << i;
        base.z |= ((o.base.z >> q) & 1) << i;
    }
    if (base.is_identity_base()) return std::nullopt;
    return Observable{base, o.sign};
}

}  // namespace ksforge
