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

#include "ksforge/system.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ksforge/errors.hpp"

namespace ksforge {

int ProjectorSystem::bases_containing(int p) const {
    int c = 0;
    for (const auto& b : bases) c += std::binary_search(b.begin(), b.end(), p);
    return c;
}

bool ProjectorSystem::mixed_rank() const {
    for (const Projector& p : projectors) {
        if (p.rank != projectors.front().rank) return true;
    }
    return false;
}

std::string ProjectorSystem::brief_symbol() const {
    return std::to_string(projector_count()) + "-" + std::to_string(basis_count());
}

std::string ProjectorSystem::detailed_symbol() const {
    std::map<int, std::map<int, int>> mult_by_rank;
    for (int p = 0; p < projector_count(); ++p) {
        ++mult_by_rank[projectors[size_t(p)].rank][bases_containing(p)];
    }
    std::map<int, int> by_size;
    for (const auto& b : bases) ++by_size[int(b.size())];
    return format_detailed_symbol(mult_by_rank, by_size, mixed_rank());
}

std::string format_detailed_symbol(const std::map<int, std::map<int, int>>& mult_by_rank,
                                   const std::map<int, int>& bases_by_size, bool flag_ranks) {
    std::string out;
    for (const auto& [rank, mults] : mult_by_rank) {
        std::string group;
        for (const auto& [mult, count] : mults) {
            if (!group.empty()) group += ' ';
            group += std::to_string(count) + "_" + std::to_string(mult);
        }
        if (group.empty()) continue;
        if (flag_ranks && rank > 1) group = "**" + group + "**";
        if (!out.empty()) out += ' ';
        out += group;
    }
    out += '-';
    bool first = true;
    for (auto it = bases_by_size.rbegin(); it != bases_by_size.rend(); ++it) {
        if (!first) out += ' ';
        first = false;
        out += std::to_string(it->second) + "_" + std::to_string(it->first);
    }
    return out;
}

std::vector<std::vector<int>> enumerate_bases(const std::vector<int>& ranks,
                                              const std::vector<uint64_t>& orthogonal_to,
                                              int space_dim) {
    int count = int(ranks.size());
    std::vector<std::vector<int>> out;
    std::vector<int> clique;

    auto dfs = [&](auto&& self, int rank_sum, uint64_t candidates, int next) -> void {
        if (rank_sum == space_dim) {
            out.push_back(clique);
            return;
        }
        for (int p = next; p < count; ++p) {
            if (!((candidates >> p) & 1)) continue;
            if (rank_sum + ranks[size_t(p)] > space_dim) continue;
            // Remaining candidates above p must be able to finish the sum.
            clique.push_back(p);
            self(self, rank_sum + ranks[size_t(p)], candidates & orthogonal_to[size_t(p)], p + 1);
            clique.pop_back();
        }
    };
    uint64_t all = count == 64 ? ~uint64_t(0) : ((uint64_t(1) << count) - 1);
    dfs(dfs, 0, all, 0);
    return out;
}

ProjectorSystem derive_system(const Diagram& d, int cap) {
    if (!validate(d).is_ks_proof) {
        throw std::invalid_argument("projector systems are derived from KS-proof diagrams");
    }
    ProjectorSystem sys;
    sys.n = d.n;
    sys.diagram = d;

    for (size_t i = 0; i < d.ids.size(); ++i) {
        std::vector<Projector> ps = derive_projectors(d.ids[i], d.n);
        std::vector<int> labels;
        for (Projector& p : ps) {
            p.id_index = int(i);
            labels.push_back(int(sys.projectors.size()));
            sys.matrices.push_back(projector_matrix(d.ids[i], p.signature, d.n, cap));
            sys.projectors.push_back(std::move(p));
        }
        sys.id_projectors.push_back(std::move(labels));
    }
    int count = sys.projector_count();
    if (count > kMaxSystemProjectors) {
        throw CapExceeded("projector systems capped at " +
                          std::to_string(kMaxSystemProjectors) + " projectors; diagram yields " +
                          std::to_string(count));
    }

    for (int p = 0; p < count; ++p) {
        for (int q = p + 1; q < count; ++q) {
            if (sys.matrices[size_t(p)] == sys.matrices[size_t(q)]) {
                sys.has_duplicate_projectors = true;
            }
        }
    }

    sys.orthogonal_to.assign(size_t(count), 0);
    for (int p = 0; p < count; ++p) {
        for (int q = p + 1; q < count; ++q) {
            if (matrix_orthogonal(sys.matrices[size_t(p)], sys.matrices[size_t(q)])) {
                sys.orthogonal_to[size_t(p)] |= uint64_t(1) << q;
                sys.orthogonal_to[size_t(q)] |= uint64_t(1) << p;
            }
        }
    }

    std::vector<int> ranks;
    for (const Projector& p : sys.projectors) ranks.push_back(p.rank);
    sys.bases = enumerate_bases(ranks, sys.orthogonal_to, 1 << d.n);

    // saturation: every orthogonal pair appears together in some basis
    std::vector<uint64_t> covered(size_t(count), 0);
    for (const auto& b : sys.bases) {
        for (size_t i = 0; i < b.size(); ++i) {
            for (size_t j = i + 1; j < b.size(); ++j) {
                covered[size_t(b[i])] |= uint64_t(1) << b[j];
                covered[size_t(b[j])] |= uint64_t(1) << b[i];
            }
        }
    }
    sys.saturated = true;
    for (int p = 0; p < count; ++p) {
        if (covered[size_t(p)] != sys.orthogonal_to[size_t(p)]) sys.saturated = false;
    }

    BasisClassification cls = classify_bases(sys);
    sys.basis_info.assign(sys.bases.size(), BasisInfo{});
    for (int b : cls.pure) {
        sys.basis_info[size_t(b)].kind = BasisKind::Pure;
        sys.basis_info[size_t(b)].pure_id = sys.projectors[size_t(sys.bases[size_t(b)][0])].id_index;
    }
    for (int b : cls.hybrid) {
        sys.basis_info[size_t(b)].kind = BasisKind::Hybrid;
        auto [pa, pb] = cls.hybrid_sources.at(b);
        sys.basis_info[size_t(b)].hybrid_pure_a = pa;
        sys.basis_info[size_t(b)].hybrid_pure_b = pb;
    }
    return sys;
}

BasisClassification classify_bases(const ProjectorSystem& sys) {
    BasisClassification cls;
    // pure basis index per ID (the full eigenbasis is always enumerated)
    std::map<int, int> pure_of_id;
    for (int b = 0; b < sys.basis_count(); ++b) {
        const std::vector<int>& basis = sys.bases[size_t(b)];
        std::map<int, int> per_id;
        for (int p : basis) ++per_id[sys.projectors[size_t(p)].id_index];
        if (per_id.size() == 1) {
            int id = per_id.begin()->first;
            if (per_id.begin()->second == int(sys.id_projectors[size_t(id)].size())) {
                cls.pure.push_back(b);
                pure_of_id[id] = b;
                continue;
            }
        }
        cls.other.push_back(b);  // provisional; hybrids are re-labeled below
    }
    std::vector<int> rest;
    std::swap(rest, cls.other);
    for (int b : rest) {
        const std::vector<int>& basis = sys.bases[size_t(b)];
        std::map<int, int> per_id;
        for (int p : basis) ++per_id[sys.projectors[size_t(p)].id_index];
        bool hybrid = false;
        if (per_id.size() == 2) {
            auto it = per_id.begin();
            auto [id_a, cnt_a] = *it++;
            auto [id_b, cnt_b] = *it;
            if (cnt_a * 2 == int(sys.id_projectors[size_t(id_a)].size()) &&
                cnt_b * 2 == int(sys.id_projectors[size_t(id_b)].size()) &&
                pure_of_id.count(id_a) && pure_of_id.count(id_b)) {
                hybrid = true;
                cls.hybrid.push_back(b);
                cls.hybrid_sources[b] = {pure_of_id[id_a], pure_of_id[id_b]};
            }
        }
        if (!hybrid) cls.other.push_back(b);
    }
    return cls;
}

std::string system_to_json(const ProjectorSystem& sys, bool include_subspaces) {
    nlohmann::json j;
    j["n_qubits"] = sys.n;
    nlohmann::json ids = nlohmann::json::array();
    for (const IdSet& id : sys.diagram.ids) {
        nlohmann::json rec;
        nlohmann::json members = nlohmann::json::array();
        for (const Observable& o : id.members) members.push_back(format_observable(o));
        rec["members"] = std::move(members);
        rec["sign"] = id.sign;
        ids.push_back(std::move(rec));
    }
    j["diagram"] = {{"qubits", sys.n}, {"ids", std::move(ids)}};

    nlohmann::json ps = nlohmann::json::array();
    for (int i = 0; i < sys.projector_count(); ++i) {
        const Projector& p = sys.projectors[size_t(i)];
        nlohmann::json rec;
        rec["index"] = i + 1;
        rec["id_index"] = p.id_index + 1;
        rec["signature"] = p.signature_string();
        rec["rank"] = p.rank;
        if (include_subspaces) {
            Subspace s = subspace(sys.id_of(p), p.signature, sys.n);
            nlohmann::json vecs = nlohmann::json::array();
            for (const auto& v : s.basis_vectors) {
                nlohmann::json vec = nlohmann::json::array();
                for (const GaussianDyadic& e : v) vec.push_back({e.re, e.im});
                vecs.push_back(std::move(vec));
            }
            rec["basis_vectors"] = std::move(vecs);
        }
        ps.push_back(std::move(rec));
    }
    j["projectors"] = std::move(ps);

    nlohmann::json bases = nlohmann::json::array();
    for (const auto& b : sys.bases) {
        nlohmann::json arr = nlohmann::json::array();
        for (int p : b) arr.push_back(p + 1);
        bases.push_back(std::move(arr));
    }
    j["bases"] = std::move(bases);

    nlohmann::json info = nlohmann::json::array();
    for (size_t b = 0; b < sys.basis_info.size(); ++b) {
        const BasisInfo& bi = sys.basis_info[b];
        nlohmann::json rec;
        rec["basis"] = b + 1;
        switch (bi.kind) {
            case BasisKind::Pure:
                rec["kind"] = "pure";
                rec["id_index"] = bi.pure_id + 1;
                break;
            case BasisKind::Hybrid:
                rec["kind"] = "hybrid";
                rec["pure_bases"] = {bi.hybrid_pure_a + 1, bi.hybrid_pure_b + 1};
                break;
            case BasisKind::Other:
                rec["kind"] = "other";
                break;
        }
        info.push_back(std::move(rec));
    }
    j["basis_classification"] = std::move(info);

    j["brief_symbol"] = sys.brief_symbol();
    j["detailed_symbol"] = sys.detailed_symbol();
    j["diagram_symbol"] = format_symbol(symbol_of(sys.diagram));
    j["saturated"] = sys.saturated;
    return j.dump(2);
}

namespace {

uint64_t fnv1a(const std::string& data) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

std::string ProjectorSystem::content_hash() const {
    uint64_t h = fnv1a(system_to_json(*this, false));
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace ksforge
