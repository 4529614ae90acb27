#pragma once

#include <vector>

#include "genuslab/cycle.hpp"
#include "genuslab/map.hpp"

namespace genuslab {

// True iff the cycle's dart set (or its reversal's) is exactly one face orbit.
bool is_facial(const CombinatorialMap& map, const Cycle& cycle);

// Peripheral: chordless, and the graph minus the cycle's vertices is
// connected (the empty remainder counts as connected).
bool is_peripheral_cycle(const Graph& g, const Cycle& cycle);

// Every member chordless, members pairwise vertex-disjoint and nonadjacent,
// and the joint complement connected.
bool is_peripheral_family(const Graph& g, const std::vector<Cycle>& family);

// The cycle splits the surface into two pieces.
bool is_surface_separating(const CombinatorialMap& map, const Cycle& cycle);

// The cycle bounds a disk: it separates, and one side caps to a sphere.
bool is_contractible(const CombinatorialMap& map, const Cycle& cycle);

// For vertex-disjoint noncontractible cycles: true iff they bound an
// annulus, i.e. cutting along both leaves a component that caps to a sphere
// and carries one scar from each cycle. Throws if the cycles share a vertex
// or either one is contractible.
bool freely_homotopic_disjoint(const CombinatorialMap& map, const Cycle& a, const Cycle& b);

struct SparsityReport {
    // delta[i] = number of faces containing a vertex of member i and a
    // vertex of some other member.
    std::vector<int> delta;
    bool sparse = true;  // all delta <= 1
};

// Members must be facial cycles of the map.
SparsityReport cofacial_sparsity(const CombinatorialMap& map, const std::vector<Cycle>& family);

// Minimum number of graph points met by a noncontractible closed curve:
// half the length of a shortest noncontractible cycle of the radial map.
// Throws on genus 0, where no such curve exists.
int face_width(const CombinatorialMap& map);

struct ConnectivityReport {
    int value = 0;
    bool exact = true;  // false: only "value or more" was established
};

// Minimum vertex-cut size. Complete graphs give n - 1 directly; otherwise
// cut candidates up to `cap` vertices are tried exhaustively, and a graph
// with no such cut reports value = cap + 1 with exact = false.
ConnectivityReport vertex_connectivity(const Graph& g, int cap = 5);

}  // namespace genuslab
