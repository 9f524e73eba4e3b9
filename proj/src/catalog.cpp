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

#include "ksforge/catalog.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ksforge/errors.hpp"

namespace ksforge {

namespace {

void check_cap(int n, int cap, const char* what) {
    if (n < 1 || n > cap) {
        throw CapExceeded(std::string(what) + " capped at " + std::to_string(cap) +
                          " qubits; got " + std::to_string(n));
    }
}

// Base-mask XOR expressed on lexicographic codes.  Codes pack one base-4
// digit per qubit into 2 bits, so bitwise XOR multiplies the unsigned bases.
inline uint32_t code_mul(uint32_t a, uint32_t b) {
    return a ^ b;
}

int sign_of_base_product(const std::vector<Observable>& members) {
    PhasedPauli prod = identity_pauli(members.front().base.n);
    for (const Observable& o : members) prod = multiply(prod, o.base);
    if (!prod.is_identity_base() || (prod.phase & 1)) {
        throw std::invalid_argument("member bases do not multiply to +-Identity");
    }
    return prod.phase == 0 ? +1 : -1;
}

}  // namespace

std::vector<uint32_t> IdSet::sorted_codes() const {
    std::vector<uint32_t> codes;
    codes.reserve(members.size());
    for (const Observable& o : members) codes.push_back(o.lex_code());
    std::sort(codes.begin(), codes.end());
    return codes;
}

ProductClass product_sign(std::span<const Observable> observables) {
    if (observables.empty()) return ProductClass::NotAnId;
    int n = observables.front().base.n;
    PhasedPauli prod = identity_pauli(n);
    for (size_t i = 0; i < observables.size(); ++i) {
        const Observable& o = observables[i];
        if (o.base.n != n) throw std::invalid_argument("qubit counts differ within set");
        if (o.base.is_identity_base()) return ProductClass::NotAnId;
        for (size_t j = i + 1; j < observables.size(); ++j) {
            if (observables[j].base == o.base) return ProductClass::NotAnId;
            if (!commutes(o.base, observables[j].base)) return ProductClass::NotAnId;
        }
        prod = multiply(prod, o.phased());
    }
    if (!prod.is_identity_base() || (prod.phase & 1)) return ProductClass::NotAnId;
    return prod.phase == 0 ? ProductClass::Plus : ProductClass::Minus;
}

IdSet make_id_set(std::vector<Observable> members) {
    if (members.size() < 2) throw std::invalid_argument("an ID needs at least two members");
    std::vector<Observable> positive;
    positive.reserve(members.size());
    for (Observable& o : members) {
        o.sign = +1;
        positive.push_back(o);
    }
    switch (product_sign(positive)) {
        case ProductClass::NotAnId:
            throw std::invalid_argument("members do not form an ID");
        default:
            break;
    }
    int sign = sign_of_base_product(positive);
    return IdSet{std::move(positive), sign};
}

std::vector<Observable> enumerate_observables(int n, int cap) {
    check_cap(n, cap, "observable enumeration");
    uint32_t total = (uint32_t(1) << (2 * n));  // 4^n
    std::vector<Observable> out;
    out.reserve(total - 1);
    for (uint32_t code = 1; code < total; ++code) {
        out.push_back(observable_from_code(n, code));
    }
    return out;
}

std::vector<std::vector<uint32_t>> enumerate_maximal_commuting_sets(int n, int cap) {
    check_cap(n, cap, "maximal-set enumeration");
    uint32_t total = uint32_t(1) << (2 * n);
    std::vector<Observable> obs = enumerate_observables(n, cap);

    // Precomputed commutation test on codes.
    auto codes_commute = [&](uint32_t a, uint32_t b) {
        return commutes(obs[a - 1].base, obs[b - 1].base);
    };

    std::vector<std::vector<uint32_t>> result;
    std::vector<uint32_t> gens;
    std::vector<uint32_t> span{0};  // subgroup codes, identity included
    std::vector<char> in_span(total, 0);
    in_span[0] = 1;

    // Each maximal isotropic subgroup is produced exactly once, via its
    // canonical generator chain: every new generator must be the smallest
    // element of the coset it adds.
    auto dfs = [&](auto&& self, uint32_t min_code) -> void {
        if (int(gens.size()) == n) {
            std::vector<uint32_t> members;
            members.reserve(span.size() - 1);
            for (uint32_t c : span) {
                if (c != 0) members.push_back(c - 1);  // observable index
            }
            std::sort(members.begin(), members.end());
            result.push_back(std::move(members));
            return;
        }
        for (uint32_t cand = min_code; cand < total; ++cand) {
            if (in_span[cand]) continue;
            bool ok = true;
            for (uint32_t g : gens) {
                if (!codes_commute(g, cand)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            size_t old_size = span.size();
            for (size_t i = 0; i < old_size; ++i) {
                uint32_t prod = code_mul(span[i], cand);
                if (prod < cand) {  // a smaller element would enter: non-canonical
                    ok = false;
                    break;
                }
                span.push_back(prod);
            }
            if (ok) {
                for (size_t i = old_size; i < span.size(); ++i) in_span[span[i]] = 1;
                gens.push_back(cand);
                self(self, cand + 1);
                gens.pop_back();
                for (size_t i = old_size; i < span.size(); ++i) in_span[span[i]] = 0;
            }
            span.resize(old_size);
        }
    };
    dfs(dfs, 1);
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<IdSet> enumerate_ids(int n, int m, int cap) {
    check_cap(n, cap, "ID enumeration");
    if (m < 3) throw std::invalid_argument("IDs have at least three members (no ID2s exist)");
    std::vector<Observable> obs = enumerate_observables(n, cap);
    std::vector<std::vector<uint32_t>> maximal = enumerate_maximal_commuting_sets(n, cap);

    std::set<std::vector<uint32_t>> seen;  // sorted member-index tuples
    for (const auto& mset : maximal) {
        int sz = int(mset.size());
        if (m > sz) continue;
        std::vector<char> in_set(uint32_t(1) << (2 * n), 0);
        for (uint32_t idx : mset) in_set[idx + 1] = 1;

        // Subsets of size m whose codes XOR to 0.  The last two members are
        // derived from the first m-2, which keeps the scan near-linear in
        // the number of IDs rather than in C(set, m).
        std::vector<int> pick;  // positions into mset
        auto emit = [&](std::vector<uint32_t> indices) {
            std::sort(indices.begin(), indices.end());
            seen.insert(std::move(indices));
        };
        auto rec = [&](auto&& self, int start, uint32_t acc) -> void {
            if (int(pick.size()) == m - 2) {
                // choose the final pair {a, b} with a^b == acc, a,b beyond start
                for (int i = start; i < sz; ++i) {
                    uint32_t a = mset[i] + 1;
                    uint32_t b = code_mul(acc, a);
                    if (b > a && b < in_set.size() && in_set[b]) {
                        std::vector<uint32_t> indices;
                        indices.reserve(m);
                        for (int p : pick) indices.push_back(mset[p]);
                        indices.push_back(a - 1);
                        indices.push_back(b - 1);
                        emit(std::move(indices));
                    }
                }
                return;
            }
            for (int i = start; i + (m - 2 - int(pick.size())) <= sz; ++i) {
                pick.push_back(i);
                self(self, i + 1, code_mul(acc, mset[i] + 1));
                pick.pop_back();
            }
        };
        rec(rec, 0, 0);
    }

    std::vector<IdSet> out;
    out.reserve(seen.size());
    for (const auto& indices : seen) {
        std::vector<Observable> members;
        members.reserve(indices.size());
        for (uint32_t idx : indices) members.push_back(obs[idx]);
        out.push_back(IdSet{members, sign_of_base_product(members)});
    }
    return out;
}

CommutingSetCatalog CommutingSetCatalog::build(int n, std::vector<int> id_sizes, int cap) {
    CommutingSetCatalog cat;
    cat.n = n;
    cat.observables = enumerate_observables(n, cap);
    cat.maximal_sets = enumerate_maximal_commuting_sets(n, cap);
    for (int m : id_sizes) {
        if (m > (1 << n) - 1) continue;  // no IDs larger than a maximal set
        cat.ids_by_size[m] = enumerate_ids(n, m, cap);
    }
    return cat;
}

std::string catalog_to_json(const CommutingSetCatalog& cat) {
    nlohmann::json j;
    j["n_qubits"] = cat.n;
    nlohmann::json obs = nlohmann::json::array();
    for (const Observable& o : cat.observables) obs.push_back(format_observable(o));
    j["observables"] = std::move(obs);
    j["maximal_sets"] = cat.maximal_sets;
    nlohmann::json ids = nlohmann::json::object();
    for (const auto& [m, list] : cat.ids_by_size) {
        nlohmann::json arr = nlohmann::json::array();
        for (const IdSet& id : list) {
            nlohmann::json rec;
            nlohmann::json members = nlohmann::json::array();
            for (const Observable& o : id.members) members.push_back(format_observable(o));
            rec["members"] = std::move(members);
            rec["sign"] = id.sign;
            arr.push_back(std::move(rec));
        }
        ids[std::to_string(m)] = std::move(arr);
    }
    j["ids"] = std::move(ids);
    return j.dump(2);
}

}  // namespace ksforge
