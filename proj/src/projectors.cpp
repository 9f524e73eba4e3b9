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

#include "ksforge/projectors.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace ksforge {

namespace {

// F2 elimination over the (x|z) masks of the ID members.  For each member:
// either it is independent (deps = itself) or its base equals
// rel_sign * product of earlier independent members (deps = that set).
struct BaseRelations {
    std::vector<int> independent;          // member positions, in order
    std::vector<uint32_t> deps;            // bitmask over independent positions
    std::vector<int> rel_sign;             // +-1 per member
};

BaseRelations relations_of(const IdSet& id, int n) {
    BaseRelations rel;
    struct PivotRow {
        uint64_t xz_lo, xz_hi;
        uint32_t combo;  // over positions in rel.independent
    };
    std::vector<PivotRow> rows;
    for (int j = 0; j < id.size(); ++j) {
        const PhasedPauli& b = id.members[j].base;
        uint64_t lo = b.x, hi = b.z;
        uint32_t combo = 0;
        for (const PivotRow& row : rows) {
            uint64_t pl = row.xz_lo, ph = row.xz_hi;
            uint64_t lead_lo = pl ? (pl & -pl) : 0;
            uint64_t lead_hi = pl ? 0 : (ph & -ph);
            bool hit = pl ? (lo & lead_lo) : (hi & lead_hi);
            if (hit) {
                lo ^= pl;
                hi ^= ph;
                combo ^= row.combo;
            }
        }
        if (lo == 0 && hi == 0) {
            // dependent: compute the exact sign of the member relative to the
            // product of its independent generators
            PhasedPauli prod = identity_pauli(n);
            for (size_t k = 0; k < rel.independent.size(); ++k) {
                if ((combo >> k) & 1) prod = multiply(prod, id.members[rel.independent[k]].base);
            }
            assert(prod.x == b.x && prod.z == b.z && (prod.phase & 1) == 0);
            rel.deps.push_back(combo);
            rel.rel_sign.push_back(prod.phase == 0 ? +1 : -1);
        } else {
            uint32_t pos = uint32_t(rel.independent.size());
            rel.independent.push_back(j);
            rel.deps.push_back(uint32_t(1) << pos);
            rel.rel_sign.push_back(+1);
            rows.push_back(PivotRow{lo, hi, uint32_t(1) << pos});
        }
    }
    // reduce each pivot row to have a unique leading bit (keeps the loop
    // above a valid elimination)
    // NOTE: rows are used in insertion order; full reduction is unnecessary
    // because each new row is reduced against all previous ones.
    return rel;
}

}  // namespace

std::string Projector::signature_string() const {
    std::string s;
    s.reserve(signature.size());
    for (int8_t v : signature) s += v > 0 ? '+' : '-';
    return s;
}

std::vector<Projector> derive_projectors(const IdSet& id, int n) {
    BaseRelations rel = relations_of(id, n);
    int r = int(rel.independent.size());
    int m = id.size();
    std::vector<Projector> out;
    out.reserve(size_t(1) << r);
    for (uint32_t pattern = 0; pattern < (uint32_t(1) << r); ++pattern) {
        Projector p;
        p.id_index = 0;
        p.rank = 1 << (n - r);
        p.signature.resize(size_t(m));
        for (int j = 0; j < m; ++j) {
            int v = rel.rel_sign[j];
            uint32_t deps = rel.deps[j];
            for (int k = 0; k < r; ++k) {
                if (((deps >> k) & 1) && ((pattern >> k) & 1)) v = -v;
            }
            p.signature[size_t(j)] = int8_t(v);
        }
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const Projector& a, const Projector& b) {
        // '+' sorts before '-'
        for (size_t i = 0; i < a.signature.size(); ++i) {
            if (a.signature[i] != b.signature[i]) return a.signature[i] > b.signature[i];
        }
        return false;
    });
    return out;
}

ExactMatrix projector_matrix(const IdSet& id, const std::vector<int8_t>& signature, int n,
                             int cap) {
    if (int(signature.size()) != id.size()) {
        throw std::invalid_argument("signature length differs from ID size");
    }
    int dim = 1 << n;
    ExactMatrix p = ExactMatrix::identity(dim);
    for (int j = 0; j < id.size(); ++j) {
        ExactMatrix o = to_matrix(id.members[j].base, cap);
        if (signature[size_t(j)] < 0) {
            p = (p - p * o).halved();
        } else {
            p = (p + p * o).halved();
        }
    }
    return p;
}

std::optional<int> sign_corrected_value(const Projector& p, const IdSet& id,
                                        const Observable& base) {
    for (int j = 0; j < id.size(); ++j) {
        if (id.members[size_t(j)].base == base.base) return int(p.signature[size_t(j)]);
    }
    return std::nullopt;
}

bool signature_rule_orthogonal(const Projector& p, const IdSet& p_id, const Projector& q,
                               const IdSet& q_id) {
    if (p_id == q_id && p.id_index == q.id_index) {
        return p.signature != q.signature;
    }
    bool share = false;
    for (int j = 0; j < p_id.size(); ++j) {
        std::optional<int> qv = sign_corrected_value(q, q_id, p_id.members[size_t(j)]);
        if (!qv) continue;
        share = true;
        if (*qv != int(p.signature[size_t(j)])) return true;
    }
    (void)share;
    return false;
}

bool matrix_orthogonal(const ExactMatrix& p, const ExactMatrix& q) {
    return (p * q).is_zero();
}

namespace {

// Gaussian-integer view of a GaussianDyadic vector after clearing the common
// power-of-two denominator.
std::vector<GaussianDyadic> cleared(const std::vector<GaussianDyadic>& v) {
    int k = 0;
    for (const GaussianDyadic& e : v) k = std::max(k, e.k);
    std::vector<GaussianDyadic> out;
    out.reserve(v.size());
    for (const GaussianDyadic& e : v) {
        out.push_back(GaussianDyadic(e.re << (k - e.k), e.im << (k - e.k), 0));
    }
    return out;
}

void normalize_smallest_integer(std::vector<GaussianDyadic>& v) {
    int64_t g = 0;
    for (const GaussianDyadic& e : v) {
        g = std::gcd(g, e.re);
        g = std::gcd(g, e.im);
    }
    if (g > 1) {
        for (GaussianDyadic& e : v) e = GaussianDyadic(e.re / g, e.im / g, 0);
    }
    for (const GaussianDyadic& e : v) {
        if (e.is_zero()) continue;
        // rotate by a unit so the leading entry has re > 0, or re == 0 and im > 0
        GaussianDyadic unit(1, 0);
        if (e.re < 0 || (e.re == 0 && e.im < 0)) unit = GaussianDyadic(-1, 0);
        if (!(unit == GaussianDyadic(1, 0))) {
            for (GaussianDyadic& x : v) x = x * unit;
        }
        break;
    }
}

// Fraction-free elimination state for span/rank computations over Q(i).
struct GaussianEliminator {
    std::vector<std::vector<GaussianDyadic>> reduced;  // rows with pivot positions
    std::vector<size_t> pivot_of;                      // pivot column per stored row

    // Reduces v against the stored rows; returns the remainder.
    std::vector<GaussianDyadic> residual(std::vector<GaussianDyadic> v) const {
        for (size_t r = 0; r < reduced.size(); ++r) {
            size_t piv = pivot_of[r];
            if (v[piv].is_zero()) continue;
            const GaussianDyadic pivval = reduced[r][piv];
            const GaussianDyadic vval = v[piv];
            for (size_t c = 0; c < v.size(); ++c) {
                v[c] = v[c] * pivval - reduced[r][c] * vval;
            }
        }
        return v;
    }

    // Returns false when v was already in the span.
    bool add(const std::vector<GaussianDyadic>& v) {
        std::vector<GaussianDyadic> res = residual(v);
        size_t piv = res.size();
        for (size_t c = 0; c < res.size(); ++c) {
            if (!res[c].is_zero()) {
                piv = c;
                break;
            }
        }
        if (piv == res.size()) return false;
        normalize_smallest_integer(res);  // keeps the fraction-free entries small
        reduced.push_back(std::move(res));
        pivot_of.push_back(piv);
        return true;
    }
};

}  // namespace

Subspace subspace(const IdSet& id, const std::vector<int8_t>& signature, int n, int cap) {
    ExactMatrix p = projector_matrix(id, signature, n, cap);
    int dim = p.rows();
    Subspace s;
    GaussianEliminator elim;
    for (int c = 0; c < dim; ++c) {
        std::vector<GaussianDyadic> col(size_t(dim));
        for (int r = 0; r < dim; ++r) col[size_t(r)] = p.at(r, c);
        col = cleared(col);
        if (elim.add(col)) {
            normalize_smallest_integer(col);
            s.basis_vectors.push_back(std::move(col));
        }
    }
    return s;
}

bool same_span(const std::vector<std::vector<GaussianDyadic>>& a,
               const std::vector<std::vector<GaussianDyadic>>& b) {
    if (a.size() != b.size()) return false;
    GaussianEliminator ea;
    for (const auto& v : a) ea.add(cleared(v));
    for (const auto& v : b) {
        std::vector<GaussianDyadic> res = ea.residual(cleared(v));
        for (const GaussianDyadic& e : res) {
            if (!e.is_zero()) return false;
        }
    }
    return true;
}

}  // namespace ksforge
