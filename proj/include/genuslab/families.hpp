#pragma once

#include <vector>

#include "genuslab/map.hpp"

namespace genuslab {

// Oracle families for the enumerator.
Graph bouquet(int n);   // one vertex, n loops
Graph dipole(int n);    // two vertices, n parallel edges
Graph cycle_graph(int n);
Graph complete_graph(int n);
// p x q grid on the torus with its standard (genus 1 for p,q >= 3) map.
CombinatorialMap toroidal_grid(int p, int q);

struct PlanarFamily {
    Graph graph;
    CombinatorialMap map;  // canonical genus-0 embedding
};

// Two concentric m-cycles v_i^0, v_i^1 joined by verticals v_i^0 v_i^1 and
// diagonals v_i^0 v_{i+1}^1; the canonical map has 2m triangles and two
// m-gon faces.
PlanarFamily antiprism(int m);

// b antiprisms stacked by identifying consecutive rims; m(b+1) vertices,
// rim vertices degree 4, interior degree 6.
PlanarFamily stacked_antiprism(int m, int b);

struct ConstructionParams {
    int m = 6;
    int k = 1;
    int b = 1;
    int d = 2;
    int g = 0;
    void validate() const;
    long f() const { return 6L * (g + 2L * k + 1); }
};

// One antiprismatic ladder joining two stack rims. Vertex/edge ids refer to
// the owning cylinder graph. "Length" is the rail edge count.
struct Connector {
    int zone = 0;   // 1-based zone index
    int index = 0;  // position within the zone
    std::vector<int> rail_u, rail_w;            // u_0..u_d, w_0..w_d
    std::vector<int> rail_u_edges, rail_w_edges;
    std::vector<int> rungs;      // u_t w_t, t = 1..d-1 (end rungs are rim edges)
    std::vector<int> diagonals;  // w_t u_{t+1}, t = 0..d-1
    int rim_rung_low = -1, rim_rung_high = -1;  // the rim edges u_0 w_0, u_d w_d
    std::vector<int> flip_edges;   // {first diagonal w_0 u_1, rung u_1 w_1}
    std::vector<int> cross_edges;  // interior rungs/diagonals minus flip edges
    // Darts on the first rail edges whose face (in the canonical map) is the
    // big face on that side; rail edges are never reseated, so these remain
    // valid anchors for the evolving big faces under flips.
    Dart marker_w = -1;  // big face on the w side
    Dart marker_u = -1;  // big face on the u side
    int big_face_length = 0;  // length of the w-side big face in the canonical map
    int length() const { return static_cast<int>(rail_u.size()) - 1; }
    int designated_flip_edge() const { return flip_edges.at(0); }
};

struct Zone {
    int index = 0;                // 1-based
    std::vector<int> connectors;  // indices into CylinderFamily::connectors
    int length = 0;               // connector length used in this zone
};

struct CylinderFamily {
    Graph graph;
    CombinatorialMap map;  // the canonical genus-0 embedding
    std::vector<Connector> connectors;
    std::vector<Zone> zones;
    int m = 0, k = 0, b = 0, d = 0, g = 0;
    long f() const { return 6L * (g + 2L * k + 1); }
    long nu() const { return graph.vertex_count() - 6L * k * (d + 1); }
};

// k+1 stacked antiprisms joined by k zones of 3 connectors of length d,
// attached at equally spaced rim positions.
CylinderFamily cylinder_graph(const ConstructionParams& params);

// A triangulated disk with the given boundary length, built from a coarse
// base triangulation plus one midpoint-subdivision refinement round;
// interior degrees stay <= 7 (boundary degrees <= 5 when the length is a
// multiple of 3, which is what gluing into a rim face needs).
struct DiskFiller {
    Graph graph;
    CombinatorialMap map;      // planar: interior triangles + the outer face
    std::vector<int> boundary; // boundary vertices in cycle order
    int outer_face = -1;       // index of the boundary face in `map`
};
DiskFiller disk_filler(int boundary_length);

// cylinder_graph with both rim m-gons filled by triangulated disks: every
// face is a triangle except the 3k big faces.
CylinderFamily counterexample_graph(const ConstructionParams& params);

// Zone j carries k+j connectors of length round(c_{k+j} * d); rim length is
// chosen by the constructor to keep attachments spaced.
CylinderFamily generalized_cylinder(int k, int d);

}  // namespace genuslab
