#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "c5/graph.hpp"

namespace c5 {

using Perm = std::array<uint8_t, kMaxVertices>;

Perm identity_perm(int n);
Perm compose(const Perm& a, const Perm& b, int n);  // (a.b)(x) = a[b[x]]
Perm inverse_perm(const Perm& a, int n);

// Canonical encoding of an isomorphism class. Two graphs have equal bytes
// iff they are isomorphic; aut_count is |Aut(G)|.
struct CanonicalLabel {
    std::string bytes;
    uint64_t aut_count = 1;

    bool operator==(const CanonicalLabel&) const = default;
};

struct CanonResult {
    std::string bytes;
    Graph canonical;   // the relabeled representative the bytes encode
    Perm labeling;     // vertex -> canonical position
    uint64_t aut_count = 1;
    std::vector<Perm> generators;  // of Aut, may be redundant but complete
    std::array<int8_t, kMaxVertices> orbit{};  // vertex -> orbit id
};

CanonicalLabel canonical_form(const Graph& g);

// Full search result, optionally with a fixed initial ordered partition.
// Cells listed first are kept first; vertices inside one cell may be
// permuted. Used directly for plain graphs and through canonical_flag for
// rooted ones.
CanonResult canonical_full(const Graph& g);
CanonResult canonical_full(const Graph& g, const std::vector<std::vector<int>>& initial_cells);

// Canonical bytes of a flag: `roots` are distinguished pairwise-distinct
// vertices whose order matters. Equal bytes iff the flags are isomorphic
// by a root-preserving graph isomorphism.
std::string canonical_flag(const Graph& g, const std::vector<int>& roots);

// Orbits of subsets of V(g) under the generators: representative mask
// (minimum in orbit) for each input mask.
std::vector<uint16_t> mask_orbit_reps(const std::vector<uint16_t>& masks,
                                      const std::vector<Perm>& generators, int n);

// Order of the permutation group generated by `gens` (Schreier-Sims).
uint64_t group_order(const std::vector<Perm>& gens, int n);

}  // namespace c5
