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
#include <optional>
#include <string>
#include <vector>

namespace ksforge {

inline constexpr int kMaxQubits = 16;

// An N-qubit Pauli group element  i^phase * (W_0 x W_1 x ... x W_{N-1}),
// where each W_q is one of the Hermitian single-qubit Paulis I, X, Y, Z.
// Qubit q corresponds to bit q of `x`/`z` and to the q-th letter (from the
// left) of the symbol string.  Per-qubit factor from the bit pair (x,z):
// (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y.  Because the factors themselves are
// Hermitian, the element is Hermitian exactly when phase is 0 or 2.
struct PhasedPauli {
    int n = 0;
    uint64_t x = 0;
    uint64_t z = 0;
    int phase = 0;  // exponent of i, mod 4

    bool is_hermitian() const { return (phase & 1) == 0; }
    bool is_identity_base() const { return x == 0 && z == 0; }
    bool is_positive_identity() const { return is_identity_base() && phase == 0; }

    // Base-4 code of the unsigned base: digits I=0,X=1,Y=2,Z=3 read from
    // qubit 0 as the most significant digit.  Orders bases exactly like
    // their symbol strings ('I'<'X'<'Y'<'Z'); code 0 is the identity.
    uint32_t lex_code() const;

    friend bool operator==(const PhasedPauli&, const PhasedPauli&) = default;
};

PhasedPauli identity_pauli(int n);
PhasedPauli multiply(const PhasedPauli& a, const PhasedPauli& b);
bool commutes(const PhasedPauli& a, const PhasedPauli& b);

// A signed nontrivial observable: `base` is the canonical positive
// representative (phase 0, not the identity) and `sign` is +1 or -1.
// Two observables are the same measured quantity iff their bases agree.
struct Observable {
    PhasedPauli base;
    int sign = +1;

    uint32_t lex_code() const { return base.lex_code(); }
    PhasedPauli phased() const;  // sign folded into the phase exponent

    friend bool operator==(const Observable&, const Observable&) = default;
};

// Strict weak order by (base code, sign); matches symbol-string order for
// positive observables.
bool operator<(const Observable& a, const Observable& b);

// Grammar: ['-']?[IXYZ]{N}, N>=1, at least one non-I letter.
Observable parse_observable(const std::string& text);
std::string format_observable(const Observable& o);
std::string base_symbol(const PhasedPauli& base);

// Builds the canonical positive observable with the given base code.
Observable observable_from_code(int n, uint32_t code);

// Deletes the tensor factors outside `kept_qubits` (indices into 0..N-1,
// ascending duplicates-free order enforced).  The sign is preserved.
// Returns nullopt when every kept factor is the identity.
std::optional<Observable> restrict_observable(const Observable& o,
                                              const std::vector<int>& kept_qubits);

}  // namespace ksforge
