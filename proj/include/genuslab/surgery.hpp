#pragma once

#include <vector>

#include "genuslab/cycle.hpp"
#include "genuslab/map.hpp"

namespace genuslab {

// Cutting a map along a simple cycle splits every cycle vertex in two and
// doubles every cycle edge, opening the surface along the cycle. Each side
// of the cut leaves a scar: a face bounded purely by that side's edge
// copies. Capping the scars with disks yields closed surfaces again, one
// per connected component of the cut-open map.
struct CutComponent {
    CombinatorialMap map;
    std::vector<int> orig_vertex;               // component vertex -> input vertex
    std::vector<std::pair<int, int>> orig_edge;  // component edge -> (input edge, side)
                                                 // side: -1 off-cycle, 0/1 = cut copies
    // Scars living in this component, as (cycle index, side, face index).
    struct Scar {
        int cycle;
        int side;
        int face;
    };
    std::vector<Scar> scars;
    // Genus of this component after capping each scar with a disk.
    int capped_genus() const { return map.genus(); }
};

struct CutResult {
    std::vector<CutComponent> components;
    bool separating() const { return components.size() >= 2; }
};

// Cut along one simple cycle.
CutResult cut_along_cycle(const CombinatorialMap& map, const Cycle& cycle);

// Cut along several pairwise vertex-disjoint simple cycles at once.
CutResult cut_along_cycles(const CombinatorialMap& map, const std::vector<Cycle>& cycles);

// Dual graph: one vertex per face, one edge per input edge joining the faces
// on its two sides. dual.edge(e) = (face_of(2e), face_of(2e+1)).
Graph dual_graph(const CombinatorialMap& map);

// Radial map: vertices are the input's vertices followed by its faces; each
// input dart d becomes radial edge d joining vertex_of(d) to its face. The
// radial map lives on the same surface and its faces are quadrilaterals,
// one per input edge.
struct RadialMap {
    CombinatorialMap map;
    int primal_vertex_count;  // radial vertices below this index are primal
};
RadialMap radial_map(const CombinatorialMap& map);

}  // namespace genuslab
