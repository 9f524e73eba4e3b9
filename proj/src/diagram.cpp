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

#include "ksforge/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <sstream>

#include "ksforge/errors.hpp"

namespace ksforge {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<Observable> Diagram::observables() const {
    std::vector<Observable> obs;
    for (const IdSet& id : ids) {
        for (const Observable& o : id.members) obs.push_back(Observable{o.base, +1});
    }
    std::sort(obs.begin(), obs.end());
    obs.erase(std::unique(obs.begin(), obs.end()), obs.end());
    return obs;
}

std::map<uint32_t, int> Diagram::multiplicities() const {
    std::map<uint32_t, int> mult;
    for (const IdSet& id : ids) {
        for (const Observable& o : id.members) ++mult[o.lex_code()];
    }
    return mult;
}

int Diagram::negative_id_count() const {
    int c = 0;
    for (const IdSet& id : ids) c += id.sign < 0;
    return c;
}

std::string Diagram::canonical_key() const {
    std::vector<std::string> lines;
    lines.reserve(ids.size());
    for (const IdSet& id : ids) {
        std::string line = id.sign < 0 ? "-" : "+";
        for (uint32_t c : id.sorted_codes()) line += " " + std::to_string(c);
        lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    std::string key = std::to_string(n);
    for (const std::string& l : lines) key += "|" + l;
    return key;
}

Diagram make_diagram(int n, std::vector<IdSet> ids) {
    if (ids.empty()) throw std::invalid_argument("a diagram needs at least one ID");
    for (const IdSet& id : ids) {
        for (const Observable& o : id.members) {
            if (o.base.n != n) throw std::invalid_argument("ID qubit count differs from diagram");
        }
    }
    return Diagram{n, std::move(ids)};
}

int DiagramSymbol::total_observables() const {
    int t = 0;
    for (auto [m, c] : obs_by_multiplicity) t += c;
    return t;
}

int DiagramSymbol::total_ids() const {
    int t = 0;
    for (auto [s, c] : ids_by_size) t += c;
    return t;
}

bool DiagramSymbol::counts_consistent() const {
    long lhs = 0, rhs = 0;
    for (auto [m, c] : obs_by_multiplicity) lhs += long(m) * c;
    for (auto [s, c] : ids_by_size) rhs += long(s) * c;
    return lhs == rhs;
}

DiagramSymbol symbol_of(const Diagram& d) {
    DiagramSymbol s;
    for (auto& [code, mult] : d.multiplicities()) ++s.obs_by_multiplicity[mult];
    for (const IdSet& id : d.ids) ++s.ids_by_size[id.size()];
    return s;
}

std::string format_symbol(const DiagramSymbol& s) {
    std::string out;
    for (auto it = s.obs_by_multiplicity.rbegin(); it != s.obs_by_multiplicity.rend(); ++it) {
        if (!out.empty()) out += ' ';
        out += std::to_string(it->second) + "_" + std::to_string(it->first);
    }
    out += '-';
    bool first = true;
    for (auto [size, count] : s.ids_by_size) {
        if (!first) out += ' ';
        first = false;
        out += std::to_string(count) + "_" + std::to_string(size);
    }
    return out;
}

DiagramSymbol parse_symbol(const std::string& text) {
    size_t dash = text.find('-');
    if (dash == std::string::npos) {
        throw ParseError("diagram symbol needs a '-' between observable and ID terms", text);
    }
    auto parse_terms = [&](const std::string& part, const char* what) {
        std::map<int, int> terms;
        std::istringstream in(part);
        std::string tok;
        while (in >> tok) {
            size_t us = tok.find('_');
            if (us == std::string::npos || us == 0 || us + 1 == tok.size()) {
                throw ParseError(std::string("malformed ") + what + " term", tok);
            }
            int count, sub;
            try {
                count = std::stoi(tok.substr(0, us));
                sub = std::stoi(tok.substr(us + 1));
            } catch (const std::exception&) {
                throw ParseError(std::string("malformed ") + what + " term", tok);
            }
            if (count <= 0 || sub <= 0 || terms.count(sub)) {
                throw ParseError(std::string("invalid ") + what + " term", tok);
            }
            terms[sub] = count;
        }
        if (terms.empty()) throw ParseError(std::string("no ") + what + " terms", text);
        return terms;
    };
    DiagramSymbol s;
    s.obs_by_multiplicity = parse_terms(text.substr(0, dash), "observable");
    s.ids_by_size = parse_terms(text.substr(dash + 1), "ID");
    return s;
}

ValidityReport validate(const Diagram& d) {
    ValidityReport r;
    r.property_a = true;
    for (auto& [code, mult] : d.multiplicities()) {
        if (mult & 1) r.property_a = false;
    }
    r.negative_id_count = d.negative_id_count();
    r.property_b = (r.negative_id_count & 1) != 0;
    r.is_ks_proof = r.property_a && r.property_b;
    return r;
}

AssignmentCheck exhaustive_assignment_check(const Diagram& d, int max_observables) {
    std::vector<Observable> obs = d.observables();
    int v = int(obs.size());
    if (v > max_observables) {
        throw CapExceeded("assignment search capped at " + std::to_string(max_observables) +
                          " observables; diagram has " + std::to_string(v));
    }
    std::map<uint32_t, int> index_of;
    for (int i = 0; i < v; ++i) index_of[obs[i].lex_code()] = i;

    struct Constraint {
        std::vector<int> vars;
        int sign;
    };
    std::vector<Constraint> cons;
    cons.reserve(d.ids.size());
    std::vector<std::vector<int>> cons_of_var(v);
    for (const IdSet& id : d.ids) {
        Constraint c;
        c.sign = id.sign;
        for (const Observable& o : id.members) c.vars.push_back(index_of.at(o.lex_code()));
        for (int var : c.vars) cons_of_var[var].push_back(int(cons.size()));
        cons.push_back(std::move(c));
    }

    std::vector<int> value(v, 0);  // 0 = unset, else +-1

    // Returns +1/-1 product over assigned vars, count of unassigned, and the
    // last unassigned var.
    auto scan = [&](const Constraint& c) {
        int prod = 1, unset = 0, last = -1;
        for (int var : c.vars) {
            if (value[var] == 0) {
                ++unset;
                last = var;
            } else {
                prod *= value[var];
            }
        }
        return std::tuple<int, int, int>(prod, unset, last);
    };

    std::vector<int> trail;
    std::function<bool(int)> propagate = [&](int var) -> bool {
        for (int ci : cons_of_var[var]) {
            auto [prod, unset, last] = scan(cons[ci]);
            if (unset == 0) {
                if (prod != cons[ci].sign) return false;
            } else if (unset == 1) {
                int forced = cons[ci].sign * prod;
                value[last] = forced;
                trail.push_back(last);
                if (!propagate(last)) return false;
            }
        }
        return true;
    };

    std::function<bool()> search = [&]() -> bool {
        int var = -1;
        for (int i = 0; i < v; ++i) {
            if (value[i] == 0) {
                var = i;
                break;
            }
        }
        if (var < 0) return true;
        for (int candidate : {+1, -1}) {
            size_t mark = trail.size();
            value[var] = candidate;
            trail.push_back(var);
            if (propagate(var) && search()) return true;
            while (trail.size() > mark) {
                value[trail.back()] = 0;
                trail.pop_back();
            }
        }
        return false;
    };

    AssignmentCheck result;
    result.consistent_assignment_exists = search();
    if (result.consistent_assignment_exists) {
        for (int i = 0; i < v; ++i) result.witness[obs[i].lex_code()] = value[i];
    }
    return result;
}

Restriction restrict_diagram(const Diagram& d, const std::vector<int>& kept_qubits) {
    Restriction r;
    std::vector<IdSet> ids;
    for (size_t i = 0; i < d.ids.size(); ++i) {
        std::vector<Observable> members;
        bool broken = false;
        for (const Observable& o : d.ids[i].members) {
            std::optional<Observable> cut = restrict_observable(o, kept_qubits);
            if (!cut) {
                broken = true;  // a member collapsed to the identity
                break;
            }
            members.push_back(*cut);
        }
        if (!broken && product_sign(members) == ProductClass::NotAnId) broken = true;
        if (broken) {
            r.broken_ids.push_back(int(i));
        } else {
            int sign = 1;
            PhasedPauli prod = identity_pauli(int(kept_qubits.size()));
            for (const Observable& o : members) prod = multiply(prod, o.base);
            sign = prod.phase == 0 ? +1 : -1;
            ids.push_back(IdSet{std::move(members), sign});
        }
    }
    r.valid = r.broken_ids.empty();
    if (r.valid) r.diagram = make_diagram(int(kept_qubits.size()), std::move(ids));
    return r;
}

CriticalityReport is_critical(const Diagram& d) {
    if (!validate(d).is_ks_proof) {
        throw std::invalid_argument("criticality is defined for KS-proof diagrams only");
    }
    CriticalityReport r;
    r.id_irreducible = true;
    int k = int(d.ids.size());
    if (k > 24) throw CapExceeded("ID-subset scan capped at 24 IDs");
    for (uint32_t mask = 1; mask + 1 < (uint32_t(1) << k); ++mask) {
        std::vector<IdSet> sub;
        for (int i = 0; i < k; ++i) {
            if ((mask >> i) & 1) sub.push_back(d.ids[i]);
        }
        if (validate(Diagram{d.n, std::move(sub)}).is_ks_proof) {
            r.id_irreducible = false;
            std::vector<int> subset;
            for (int i = 0; i < k; ++i) {
                if ((mask >> i) & 1) subset.push_back(i);
            }
            r.reducing_id_subsets.push_back(std::move(subset));
        }
    }

    r.qubit_irreducible = true;
    for (uint32_t mask = 1; mask + 1 < (uint32_t(1) << d.n); ++mask) {
        std::vector<int> kept;
        for (int q = 0; q < d.n; ++q) {
            if ((mask >> q) & 1) kept.push_back(q);
        }
        Restriction cut = restrict_diagram(d, kept);
        if (cut.valid && validate(*cut.diagram).is_ks_proof) {
            r.qubit_irreducible = false;
            r.reducing_qubit_sets.push_back(kept);
        }
    }
    r.is_critical = r.id_irreducible && r.qubit_irreducible;
    return r;
}

Diagram parse_diagram(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<IdSet> ids;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = "line " + std::to_string(lineno);
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (n < 0) {
            if (!line.starts_with("qubits:")) {
                throw ParseError("expected header 'qubits: N'", where);
            }
            try {
                n = std::stoi(trim(line.substr(7)));
            } catch (const std::exception&) {
                throw ParseError("malformed qubit count in header", where);
            }
            if (n < 1 || n > kMaxQubits) throw ParseError("qubit count out of range", where);
            continue;
        }
        std::vector<Observable> members;
        int printed_minus = 0;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            tok = trim(tok);
            Observable o;
            try {
                o = parse_observable(tok);
            } catch (const ParseError& e) {
                throw ParseError(std::string("bad observable '") + tok + "': " + e.what(), where);
            }
            if (o.base.n != n) {
                throw ParseError("observable '" + tok + "' has wrong qubit count", where);
            }
            printed_minus += o.sign < 0;
            o.sign = +1;
            members.push_back(o);
        }
        if (printed_minus > 1) {
            throw ParseError("at most one member may carry the negative-ID marker", where);
        }
        ProductClass cls = product_sign(members);
        if (cls == ProductClass::NotAnId) {
            throw ParseError("line is not an ID (members must be distinct, commute and "
                             "multiply to +-Identity)",
                             where);
        }
        int sign = cls == ProductClass::Plus ? +1 : -1;
        if ((sign < 0) != (printed_minus == 1)) {
            throw ParseError(sign < 0 ? "negative ID written without a '-' marker"
                                      : "positive ID written with a '-' marker",
                             where);
        }
        ids.push_back(IdSet{std::move(members), sign});
    }
    if (n < 0) throw ParseError("missing 'qubits: N' header", "line " + std::to_string(lineno));
    if (ids.empty()) throw ParseError("diagram has no IDs", "line " + std::to_string(lineno));
    return make_diagram(n, std::move(ids));
}

Diagram parse_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open diagram file", path);
    return parse_diagram(in);
}

std::string format_diagram(const Diagram& d) {
    std::string out = "qubits: " + std::to_string(d.n) + "\n";
    for (const IdSet& id : d.ids) {
        for (int i = 0; i < id.size(); ++i) {
            if (i) out += ", ";
            bool carries_sign = id.sign < 0 && i + 1 == id.size();
            out += carries_sign ? "-" + base_symbol(id.members[i].base)
                                : base_symbol(id.members[i].base);
        }
        out += "\n";
    }
    return out;
}

std::string diagram_to_dot(const Diagram& d, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  // " << format_symbol(symbol_of(d)) << "\n";
    out << "  node [shape=circle];\n";
    for (const Observable& o : d.observables()) {
        out << "  \"" << base_symbol(o.base) << "\";\n";
    }
    for (size_t i = 0; i < d.ids.size(); ++i) {
        const IdSet& id = d.ids[i];
        int penwidth = id.sign < 0 ? 3 : 1;
        out << "  // ID " << (i + 1) << (id.sign < 0 ? " (negative)" : " (positive)") << "\n";
        for (int j = 0; j + 1 < id.size(); ++j) {
            out << "  \"" << base_symbol(id.members[j].base) << "\" -- \""
                << base_symbol(id.members[j + 1].base) << "\" [penwidth=" << penwidth
                << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

namespace {

Diagram diagram_from_lines(int n, const std::vector<std::vector<const char*>>& lines) {
    std::vector<IdSet> ids;
    for (const auto& line : lines) {
        std::vector<Observable> members;
        for (const char* sym : line) {
            Observable o = parse_observable(sym);
            o.sign = +1;
            members.push_back(o);
        }
        ids.push_back(make_id_set(std::move(members)));
    }
    return make_diagram(n, std::move(ids));
}

}  // namespace

std::vector<std::string> fixture_names() {
    return {"pentagram", "square2", "square3", "peres24"};
}

Diagram fixture_diagram(const std::string& name) {
    if (name == "pentagram") {
        // The five ID4s of the GHZ-Mermin pentagram; the last one is negative.
        return diagram_from_lines(3, {
                                         {"ZII", "IZI", "IIZ", "ZZZ"},
                                         {"ZII", "IXI", "IIX", "ZXX"},
                                         {"XII", "IZI", "IIX", "XZX"},
                                         {"XII", "IXI", "IIZ", "XXZ"},
                                         {"ZZZ", "ZXX", "XZX", "XXZ"},
                                     });
    }
    if (name == "square2" || name == "peres24") {
        // Two-qubit Peres-Mermin square (rows then columns); the derived
        // projector system is the 24-ray, 24-basis Peres set.
        return diagram_from_lines(2, {
                                         {"XI", "IX", "XX"},
                                         {"ZI", "IZ", "ZZ"},
                                         {"XZ", "ZX", "YY"},
                                         {"XI", "IZ", "XZ"},
                                         {"IX", "ZI", "ZX"},
                                         {"XX", "ZZ", "YY"},
                                     });
    }
    if (name == "square3") {
        // Three-qubit Peres-Mermin square: three positive row ID3s and
        // three negative column ID3s.
        return diagram_from_lines(3, {
                                         {"ZIZ", "ZZI", "IZZ"},
                                         {"XIX", "XXI", "IXX"},
                                         {"YIY", "YYI", "IYY"},
                                         {"ZIZ", "XIX", "YIY"},
                                         {"ZZI", "XXI", "YYI"},
                                         {"IZZ", "IXX", "IYY"},
                                     });
    }
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace ksforge
