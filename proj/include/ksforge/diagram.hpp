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

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ksforge/catalog.hpp"
#include "ksforge/pauli.hpp"

namespace ksforge {

// Observables plus the IDs they participate in.  Every member of every ID
// is an observable of the diagram; the observable set is derived from the
// IDs, so the containment invariant holds by construction.
struct Diagram {
    int n = 0;
    std::vector<IdSet> ids;

    // Distinct bases over all IDs, ascending by code.
    std::vector<Observable> observables() const;
    // Number of IDs each observable belongs to, keyed by code.
    std::map<uint32_t, int> multiplicities() const;
    int negative_id_count() const;

    // Canonical form for exact-duplicate detection: sorted list of
    // (sorted member codes, sign) pairs.
    std::string canonical_key() const;
};

Diagram make_diagram(int n, std::vector<IdSet> ids);

// Multiset summary: A observables of multiplicity i, ... - N IDs of size 3, ...
struct DiagramSymbol {
    std::map<int, int> obs_by_multiplicity;  // multiplicity -> count
    std::map<int, int> ids_by_size;          // size -> count

    int total_observables() const;
    int total_ids() const;
    // Sum A*i == sum size*count (the incidence count identity).
    bool counts_consistent() const;

    friend bool operator==(const DiagramSymbol&, const DiagramSymbol&) = default;
};

DiagramSymbol symbol_of(const Diagram& d);
// Canonical string: observable terms by decreasing multiplicity, '-', ID
// terms by increasing size.  "10_2-4_3 2_4", "1_4 11_2-2_3 5_4".
std::string format_symbol(const DiagramSymbol& s);
DiagramSymbol parse_symbol(const std::string& text);

struct ValidityReport {
    bool property_a = false;  // every observable lies in an even number of IDs
    int negative_id_count = 0;
    bool property_b = false;  // odd number of negative IDs
    bool is_ks_proof = false;
};

ValidityReport validate(const Diagram& d);

struct AssignmentCheck {
    bool consistent_assignment_exists = false;
    // Witness: value per observable code, only set when an assignment exists.
    std::map<uint32_t, int> witness;
};

// Exhaustive +-1 value search under the product rule for every ID.
// A diagram validating as a KS proof never admits an assignment.
AssignmentCheck exhaustive_assignment_check(const Diagram& d, int max_observables = 30);

// Outcome of deleting qubits from every observable of a diagram.
struct Restriction {
    bool valid = false;           // every ID survives as an ID
    std::vector<int> broken_ids;  // indices of IDs that stopped being IDs
    std::optional<Diagram> diagram;
};

Restriction restrict_diagram(const Diagram& d, const std::vector<int>& kept_qubits);

struct CriticalityReport {
    bool id_irreducible = false;
    bool qubit_irreducible = false;
    bool is_critical = false;
    std::vector<std::vector<int>> reducing_id_subsets;   // proper ID subsets that still prove
    std::vector<std::vector<int>> reducing_qubit_sets;   // kept-qubit sets that still prove
};

CriticalityReport is_critical(const Diagram& d);

// --- file format -----------------------------------------------------------
//
// Line-oriented text: a header "qubits: N", then one ID per line as
// comma-separated observable symbols.  A negative ID carries a leading '-'
// on exactly one member (the writer puts it on the last); the parser checks
// the printed sign against the computed product and normalizes to
// sign-on-the-set form.  '#' starts a comment.

Diagram parse_diagram(std::istream& in);
Diagram parse_diagram_file(const std::string& path);
std::string format_diagram(const Diagram& d);

// DOT export: one node per observable, one edge chain per ID, negative IDs
// drawn with a thick pen.
std::string diagram_to_dot(const Diagram& d, const std::string& name = "ks_diagram");

// Built-in diagrams: "pentagram", "square2", "square3", "peres24".
std::vector<std::string> fixture_names();
Diagram fixture_diagram(const std::string& name);

}  // namespace ksforge
