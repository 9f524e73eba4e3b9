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
#include <map>
#include <string>
#include <vector>

#include "ksforge/diagram.hpp"
#include "ksforge/exact.hpp"
#include "ksforge/projectors.hpp"

namespace ksforge {

inline constexpr int kMaxSystemProjectors = 64;

enum class BasisKind { Pure, Hybrid, Other };

struct BasisInfo {
    BasisKind kind = BasisKind::Other;
    int pure_id = -1;              // Pure: the source ID
    int hybrid_pure_a = -1;        // Hybrid: indices of the two generating pure bases
    int hybrid_pure_b = -1;
};

// The projectors of every ID of a KS-proof diagram, their orthogonality
// relation, and every basis (set of mutually orthogonal projectors whose
// ranks sum to 2^n).  Everything is exact and immutable once derived.
struct ProjectorSystem {
    int n = 0;
    Diagram diagram;
    std::vector<Projector> projectors;          // grouped by ID, signatures lexicographic
    std::vector<ExactMatrix> matrices;          // parallel to projectors
    std::vector<std::vector<int>> id_projectors;  // per ID: projector indices
    std::vector<uint64_t> orthogonal_to;        // adjacency bitmasks
    std::vector<std::vector<int>> bases;        // ascending projector indices
    std::vector<BasisInfo> basis_info;
    bool saturated = false;      // every orthogonal pair co-occurs in some basis
    bool has_duplicate_projectors = false;  // identical matrices under distinct labels

    int projector_count() const { return int(projectors.size()); }
    int basis_count() const { return int(bases.size()); }
    bool orthogonal(int p, int q) const { return (orthogonal_to[size_t(p)] >> q) & 1; }
    int bases_containing(int p) const;
    const IdSet& id_of(const Projector& p) const { return diagram.ids[size_t(p.id_index)]; }

    std::string brief_symbol() const;     // "40-25"
    std::string detailed_symbol() const;  // "16_10 **16_4**-16_8 8_6 12_4"
    bool mixed_rank() const;

    // Stable content address of the canonical JSON serialization.
    std::string content_hash() const;
};

ProjectorSystem derive_system(const Diagram& d, int cap = kMatrixQubitCap);

// All rank-sum-complete cliques of the orthogonality graph, ascending
// lexicographic order.
std::vector<std::vector<int>> enumerate_bases(const std::vector<int>& ranks,
                                              const std::vector<uint64_t>& orthogonal_to,
                                              int space_dim);

struct BasisClassification {
    std::vector<int> pure;    // basis indices
    std::vector<int> hybrid;
    std::vector<int> other;
    // hybridization graph: per hybrid basis, the two pure bases it mixes
    std::map<int, std::pair<int, int>> hybrid_sources;
};

BasisClassification classify_bases(const ProjectorSystem& sys);

// Shared detailed-symbol formatter: projector multiplicities grouped by
// rank (ascending rank, ascending multiplicity; ranks above 1 are flagged
// with **...** when `flag_ranks` is set), then basis counts by descending
// size.  "12_2 **12_2**-1_8 4_6 4_4".
std::string format_detailed_symbol(const std::map<int, std::map<int, int>>& mult_by_rank,
                                   const std::map<int, int>& bases_by_size, bool flag_ranks);

std::string system_to_json(const ProjectorSystem& sys, bool include_subspaces = false);

}  // namespace ksforge
