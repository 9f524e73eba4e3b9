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
#include <optional>
#include <string>
#include <vector>

#include "ksforge/system.hpp"

namespace ksforge {

// A parity proof: an odd-size set of bases in which every projector occurs
// an even number of times (possibly zero).
struct ParityProof {
    std::vector<int> basis_indices;              // ascending, 0-based
    std::map<int, int> projector_multiplicities;  // projector -> count > 0
    std::string proof_symbol;
    int projector_count = 0;  // P of "P-B"
    int basis_count = 0;      // B of "P-B"
};

struct ProofType {
    int projector_count = 0;
    int basis_count = 0;
    std::string detailed_symbol;
    long count = 0;
    std::vector<int> example_basis_indices;  // lexicographically smallest, 0-based

    std::string type_pb() const {
        return std::to_string(projector_count) + "-" + std::to_string(basis_count);
    }
};

struct ParityCensus {
    int kernel_dimension = 0;
    long kernel_size = 0;       // 2^dim
    long odd_vector_count = 0;  // total parity proofs
    std::vector<ProofType> types;  // sorted by (B, P, symbol)

    std::map<std::string, long> counts_by_pb() const;
    long total() const { return odd_vector_count; }
};

struct ParityOptions {
    int max_kernel_dim = 26;
    bool materialize_proofs = false;  // collect every proof, not just the census
    int threads = 0;                  // 0: KSFORGE_THREADS or hardware default
};

struct ParityResult {
    ParityCensus census;
    std::vector<ParityProof> proofs;  // filled when materialize_proofs
};

// Builds the projector x basis incidence matrix over GF(2), computes its
// kernel, and enumerates the odd-weight kernel vectors: exactly the parity
// proofs.  Throws CapExceeded (reporting the dimension) above max_kernel_dim.
ParityResult find_parity_proofs(const ProjectorSystem& sys, const ParityOptions& opts = {});

// Detailed symbol of one proof: projector multiplicities by rank, basis
// counts by size, rank-2 groups flagged in mixed-rank systems.
std::string proof_symbol(const ProjectorSystem& sys, const std::vector<int>& basis_indices);

struct ProofCheck {
    bool basis_count_odd = false;
    bool multiplicities_even = false;
    bool is_parity_proof = false;   // the two structural conditions
    // Independent backtracking oracle: no 0/1 assignment gives exactly one
    // value-1 projector per basis.  Set when the oracle ran.
    std::optional<bool> oracle_unassignable;
};

ProofCheck verify_parity_proof(const ProjectorSystem& sys, const std::vector<int>& basis_indices,
                               bool run_oracle = true, int oracle_projector_cap = 40);

// CSV: type_PB,detailed_symbol,count,example_basis_indices (1-based, space
// separated), rows sorted by (B, P, symbol).
std::string census_to_csv(const ParityCensus& census);

std::string proofs_to_json(const ProjectorSystem& sys, const std::vector<ParityProof>& proofs);

}  // namespace ksforge
