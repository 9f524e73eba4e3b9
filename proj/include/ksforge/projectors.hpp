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

#include <optional>
#include <string>
#include <vector>

#include "ksforge/catalog.hpp"
#include "ksforge/exact.hpp"

namespace ksforge {

// Joint eigenprojector of an ID, identified by its eigenvalue signature:
// one +-1 per ID member, stated on the canonical positive bases.  For an ID
// whose base product is -Identity only signatures with entry product -1 are
// realizable; for a positive ID only entry product +1.
struct Projector {
    int id_index = 0;                 // position of the source ID in its diagram
    std::vector<int8_t> signature;    // +-1 per member, positive-base convention
    int rank = 0;                     // 2^(n - r), r = F2-rank of the ID's bases

    std::string signature_string() const;  // "+-+-"
};

// All realizable signatures of an ID, lexicographic ('+' before '-').
// An independent-generator ID4 on 3 qubits yields 8 rank-1 projectors;
// an ID3 yields 4 rank-2 projectors.
std::vector<Projector> derive_projectors(const IdSet& id, int n);

// Exact matrix Prod_k (I + s_k O_k)/2 over the ID members.
ExactMatrix projector_matrix(const IdSet& id, const std::vector<int8_t>& signature, int n,
                             int cap = kMatrixQubitCap);

// The projector's eigenvalue for a canonical positive base, if that base is
// a member of the projector's ID.
std::optional<int> sign_corrected_value(const Projector& p, const IdSet& id,
                                        const Observable& base);

// Signature rule: same ID -> orthogonal iff the signatures differ; distinct
// IDs -> orthogonal iff they share at least one base and disagree on one.
// The exact matrix product P*Q == 0 is the defining truth; the rule is
// validated against it on every system this library ships tests for.
bool signature_rule_orthogonal(const Projector& p, const IdSet& p_id, const Projector& q,
                               const IdSet& q_id);

bool matrix_orthogonal(const ExactMatrix& p, const ExactMatrix& q);

// Exact basis of the projector's column space: pivot columns left to right,
// each scaled to smallest integer form with a canonical leading sign.
struct Subspace {
    // vectors[v][component]; entries are Gaussian integers after clearing
    // the common power-of-two denominator per vector.
    std::vector<std::vector<GaussianDyadic>> basis_vectors;
};

Subspace subspace(const IdSet& id, const std::vector<int8_t>& signature, int n,
                  int cap = kMatrixQubitCap);

// Row-space equality over Q(i) of two vector lists (used to compare derived
// subspaces against published ones).
bool same_span(const std::vector<std::vector<GaussianDyadic>>& a,
               const std::vector<std::vector<GaussianDyadic>>& b);

}  // namespace ksforge
