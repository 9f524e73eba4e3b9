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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ksforge/pauli.hpp"

namespace ksforge {

// A mutually commuting set of observables whose bases multiply to
// sign * Identity.  Members are canonical positive observables; the member
// order is significant (eigenvalue signatures are vectors over it).
struct IdSet {
    std::vector<Observable> members;
    int sign = +1;

    int size() const { return int(members.size()); }
    // Canonical identity for dedup/equality: sorted member codes.
    std::vector<uint32_t> sorted_codes() const;

    friend bool operator==(const IdSet& a, const IdSet& b) {
        return a.sign == b.sign && a.sorted_codes() == b.sorted_codes();
    }
};

enum class ProductClass { Plus, Minus, NotAnId };

// Classifies a set of signed observables: Plus/Minus when they pairwise
// commute, have distinct nontrivial bases and multiply to +-Identity.
ProductClass product_sign(std::span<const Observable> observables);

// Validates members (commuting, distinct, nontrivial) and computes the sign
// of the product of their positive bases.  Member order is preserved.
// Throws std::invalid_argument when the set is not an ID.
IdSet make_id_set(std::vector<Observable> members);

inline constexpr int kCatalogQubitCap = 5;

// All 4^n - 1 canonical positive observables in symbol order.
std::vector<Observable> enumerate_observables(int n, int cap = kCatalogQubitCap);

// All maximal sets of pairwise commuting nontrivial observables, each of
// size 2^n - 1, as ascending lists of observable indices (= lex_code - 1).
// Deterministic order: lexicographic by member index tuple.
std::vector<std::vector<uint32_t>> enumerate_maximal_commuting_sets(int n,
                                                                    int cap = kCatalogQubitCap);

// All IDs of size m (m >= 3), deduplicated across maximal commuting sets,
// sorted lexicographically by member index tuple; members sorted ascending.
std::vector<IdSet> enumerate_ids(int n, int m, int cap = kCatalogQubitCap);

// Observables, maximal commuting sets, and the ID3/ID4 catalog for one
// qubit count.  Immutable once built.
struct CommutingSetCatalog {
    int n = 0;
    std::vector<Observable> observables;
    std::vector<std::vector<uint32_t>> maximal_sets;
    std::map<int, std::vector<IdSet>> ids_by_size;

    static CommutingSetCatalog build(int n, std::vector<int> id_sizes = {3, 4},
                                     int cap = kCatalogQubitCap);

    const Observable& observable(uint32_t index) const { return observables[index]; }
};

std::string catalog_to_json(const CommutingSetCatalog& cat);

}  // namespace ksforge
