// Topological predicates: facial/peripheral cycles, separation,
// contractibility, free homotopy, cofacial sparsity, face width, surgery
// bookkeeping and vertex connectivity.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <genuslab/cycle.hpp>
#include <genuslab/families.hpp>
#include <genuslab/rng.hpp>
#include <genuslab/surgery.hpp>
#include <genuslab/topology.hpp>

#include <algorithm>
#include <set>

using namespace genuslab;

namespace {

CombinatorialMap random_map(const Graph& g, SplitMix64& rng) {
    std::vector<std::vector<Dart>> rot(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        rot[v] = g.darts_at(v);
        if (rot[v].size() > 1) {
            std::vector<Dart> tail(rot[v].begin() + 1, rot[v].end());
            shuffle(tail, rng);
            std::copy(tail.begin(), tail.end(), rot[v].begin() + 1);
        }
    }
    return CombinatorialMap::from_rotations(g, rot);
}

Cycle cyc(const Graph& g, std::vector<int> verts) { return Cycle::from_vertices(g, verts); }

// Independent face-width oracle: enumerate the radial map's simple cycles
// up to max_len and take the shortest noncontractible one (-1 if none).
int shortest_essential_radial(const CombinatorialMap& map, int max_len) {
    RadialMap radial = radial_map(map);
    int best = -1;
    for (const Cycle& c : simple_cycles(radial.map.graph(), max_len)) {
        if (best >= 0 && c.length() >= best) continue;
        if (is_contractible(radial.map, c)) continue;
        best = c.length();
    }
    return best;
}

// Confirms the library value: enumerating up to 2w finds an essential radial
// cycle of length exactly 2w, so nothing shorter exists either.
void confirm_face_width(const CombinatorialMap& map, int w) {
    CHECK(face_width(map) == w);
    CHECK(shortest_essential_radial(map, 2 * w) == 2 * w);
}

}  // namespace

TEST_CASE("facial cycles of the octahedron") {
    PlanarFamily oct = antiprism(3);
    // All eight triangles are faces of the canonical embedding.
    for (const Cycle& c : simple_cycles(oct.graph, 3)) CHECK(is_facial(oct.map, c));
    // Equator squares are cycles of the graph but not faces.
    for (const Cycle& c : simple_cycles(oct.graph)) {
        if (c.length() == 4) CHECK_FALSE(is_facial(oct.map, c));
    }
}

TEST_CASE("facial cycles on the torus") {
    CombinatorialMap grid = toroidal_grid(3, 3);
    const Graph& g = grid.graph();
    CHECK(is_facial(grid, cyc(g, {0, 1, 4, 3})));
    CHECK(is_facial(grid, cyc(g, {3, 4, 1, 0})));  // reversal works too
    CHECK_FALSE(is_facial(grid, cyc(g, {0, 1, 2})));
    CHECK_FALSE(is_facial(grid, cyc(g, {0, 1, 2, 5, 4, 3})));  // two faces glued, not one
}

TEST_CASE("peripheral cycles") {
    Graph oct = antiprism(3).graph;
    int triangles = 0, squares = 0;
    for (const Cycle& c : simple_cycles(oct)) {
        if (is_peripheral_cycle(oct, c)) {
            CHECK(c.length() == 3);
            ++triangles;
        } else if (c.length() == 4) {
            ++squares;
        }
    }
    CHECK(triangles == 8);
    // No square qualifies: 12 have a chord, and the 3 chordless equators
    // leave the two remaining antipodal vertices disconnected.
    CHECK(squares == 15);
    CHECK_FALSE(is_peripheral_cycle(oct, cyc(oct, {0, 3, 5, 1})));

    Graph k4 = complete_graph(4);
    CHECK(is_peripheral_cycle(k4, cyc(k4, {0, 1, 2})));
    CHECK_FALSE(is_peripheral_cycle(k4, cyc(k4, {0, 1, 2, 3})));  // chords 02, 13

    // Removing a hamiltonian cycle leaves nothing; that counts as connected.
    Graph c5 = cycle_graph(5);
    CHECK(is_peripheral_cycle(c5, cyc(c5, {0, 1, 2, 3, 4})));
}

TEST_CASE("peripheral families") {
    Graph oct = antiprism(3).graph;
    std::vector<Cycle> top = {cyc(oct, {0, 1, 2})};
    CHECK(is_peripheral_family(oct, top));
    // Top and bottom triangles are disjoint but adjacent.
    std::vector<Cycle> both = {cyc(oct, {0, 1, 2}), cyc(oct, {3, 4, 5})};
    CHECK_FALSE(is_peripheral_family(oct, both));
    // Sharing a vertex disqualifies immediately.
    std::vector<Cycle> overlap = {cyc(oct, {0, 1, 2}), cyc(oct, {0, 1, 4})};
    CHECK_FALSE(is_peripheral_family(oct, overlap));
    CHECK(is_peripheral_family(oct, {}));

    // On the 4x4 torus grid, rows 0 and 2 are disjoint, nonadjacent and
    // chordless, but deleting them strands rows 1 and 3 from each other.
    CombinatorialMap grid = toroidal_grid(4, 4);
    const Graph& g = grid.graph();
    std::vector<Cycle> rows = {cyc(g, {0, 1, 2, 3}), cyc(g, {8, 9, 10, 11})};
    CHECK_FALSE(is_peripheral_family(g, rows));

    // Two triangles joined through a middle vertex: disjoint, nonadjacent,
    // chordless, complement = the lone connector, connected.
    Graph barbell(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 6}, {6, 3}});
    std::vector<Cycle> pair = {cyc(barbell, {0, 1, 2}), cyc(barbell, {3, 4, 5})};
    CHECK(is_peripheral_family(barbell, pair));
}

TEST_CASE("separation and contractibility on the sphere") {
    PlanarFamily oct = antiprism(3);
    for (const Cycle& c : simple_cycles(oct.graph)) {
        CHECK(is_surface_separating(oct.map, c));  // every cycle separates a sphere
        CHECK(is_contractible(oct.map, c));
    }
}

TEST_CASE("separation and contractibility on the torus") {
    CombinatorialMap grid = toroidal_grid(3, 3);
    const Graph& g = grid.graph();
    Cycle face = cyc(g, {0, 1, 4, 3});
    Cycle row = cyc(g, {0, 1, 2});
    Cycle column = cyc(g, {0, 3, 6});
    CHECK(is_surface_separating(grid, face));
    CHECK(is_contractible(grid, face));
    CHECK_FALSE(is_surface_separating(grid, row));
    CHECK_FALSE(is_contractible(grid, row));
    CHECK_FALSE(is_contractible(grid, column));
}

TEST_CASE("free homotopy of disjoint essential cycles") {
    CombinatorialMap grid = toroidal_grid(3, 3);
    const Graph& g = grid.graph();
    Cycle row0 = cyc(g, {0, 1, 2});
    Cycle row1 = cyc(g, {3, 4, 5});
    Cycle row2 = cyc(g, {6, 7, 8});
    CHECK(freely_homotopic_disjoint(grid, row0, row1));
    CHECK(freely_homotopic_disjoint(grid, row1, row2));
    CHECK(freely_homotopic_disjoint(grid, row0, row2));
    // Shared vertex or a contractible argument is a usage error.
    CHECK_THROWS_AS(freely_homotopic_disjoint(grid, row0, cyc(g, {0, 3, 6})),
                    std::invalid_argument);
    CHECK_THROWS_AS(freely_homotopic_disjoint(grid, cyc(g, {3, 4, 7, 6}), row0),
                    std::invalid_argument);
}

TEST_CASE("cycles around different handles are not homotopic") {
    // Two 3x3 torus grids joined by a bridge edge: a genus-2 surface where
    // the two grids' rows are disjoint, essential, and wind different
    // handles. (On a single torus every disjoint essential pair is
    // homotopic, so the negative case needs genus 2.)
    CombinatorialMap grid = toroidal_grid(3, 3);
    const Graph& a = grid.graph();
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : a.edges()) edges.push_back({u + 9, v + 9});
    edges.push_back({0, 9});
    Graph g(18, edges);
    std::vector<std::vector<Dart>> rot(18);
    for (int v = 0; v < 9; ++v) {
        rot[v] = grid.rotation_of(v);
        rot[v + 9] = grid.rotation_of(v);
        for (Dart& d : rot[v + 9]) d += 36;
    }
    rot[0].push_back(72);
    rot[9].push_back(73);
    CombinatorialMap m = CombinatorialMap::from_rotations(g, rot);
    REQUIRE(m.genus() == 2);

    Cycle row_a = cyc(g, {3, 4, 5});
    Cycle row_a2 = cyc(g, {6, 7, 8});
    Cycle row_b = cyc(g, {12, 13, 14});
    CHECK(freely_homotopic_disjoint(m, row_a, row_a2));
    CHECK_FALSE(freely_homotopic_disjoint(m, row_a, row_b));
    CHECK_FALSE(freely_homotopic_disjoint(m, row_a2, row_b));
}

TEST_CASE("cofacial sparsity") {
    PlanarFamily oct = antiprism(3);
    const Graph& g = oct.graph;
    Cycle top = cyc(g, {0, 1, 2});
    Cycle bottom = cyc(g, {3, 4, 5});
    SparsityReport single = cofacial_sparsity(oct.map, {top});
    CHECK(single.sparse);
    CHECK(single.delta == std::vector<int>{0});
    SparsityReport pair = cofacial_sparsity(oct.map, {top, bottom});
    CHECK_FALSE(pair.sparse);
    CHECK(pair.delta == std::vector<int>{6, 6});
    // Non-facial member is a usage error.
    CHECK_THROWS_AS(cofacial_sparsity(oct.map, {cyc(g, {0, 1, 4, 3})}), std::invalid_argument);

    // On the 4x4 torus grid, two opposite faces share no vertex but are
    // linked by several faces meeting both, so the pair is not sparse.
    CombinatorialMap grid = toroidal_grid(4, 4);
    const Graph& h = grid.graph();
    SparsityReport far =
        cofacial_sparsity(grid, {cyc(h, {0, 1, 5, 4}), cyc(h, {10, 11, 15, 14})});
    CHECK(far.delta.size() == 2);
    CHECK(far.delta[0] >= 2);
    CHECK(far.delta[1] >= 2);
    CHECK_FALSE(far.sparse);
}

TEST_CASE("face width of known maps") {
    confirm_face_width(toroidal_grid(3, 3), 3);
    confirm_face_width(toroidal_grid(3, 4), 3);
    confirm_face_width(toroidal_grid(4, 4), 4);
    Graph b2 = bouquet(2);
    CombinatorialMap interleaved = CombinatorialMap::from_rotations(b2, {{0, 2, 1, 3}});
    confirm_face_width(interleaved, 1);
    CHECK_THROWS_AS(face_width(antiprism(3).map), std::invalid_argument);
}

TEST_CASE("face width matches brute-force enumeration on random maps") {
    SplitMix64 rng(91);
    int positive = 0;
    for (int trial = 0; trial < 30; ++trial) {
        CombinatorialMap m = random_map(complete_graph(5), rng);
        if (m.genus() == 0) continue;
        ++positive;
        confirm_face_width(m, face_width(m));
    }
    CHECK(positive > 0);
    for (int trial = 0; trial < 10; ++trial) {
        CombinatorialMap m = random_map(dipole(4), rng);
        if (m.genus() == 0) continue;
        confirm_face_width(m, face_width(m));
    }
}

TEST_CASE("cut bookkeeping on the sphere") {
    PlanarFamily oct = antiprism(3);
    Cycle top = cyc(oct.graph, {0, 1, 2});
    CutResult cut = cut_along_cycle(oct.map, top);
    REQUIRE(cut.components.size() == 2);
    CHECK(cut.separating());
    int scars = 0;
    for (const CutComponent& comp : cut.components) {
        CHECK(comp.capped_genus() == 0);
        scars += static_cast<int>(comp.scars.size());
        for (const auto& scar : comp.scars) {
            CHECK(scar.cycle == 0);
            CHECK(comp.map.faces()[scar.face].size() == 3);
        }
    }
    CHECK(scars == 2);
    // Vertex/edge provenance: every component vertex maps into the original.
    for (const CutComponent& comp : cut.components)
        for (int ov : comp.orig_vertex) CHECK((0 <= ov && ov < 6));
}

TEST_CASE("cut bookkeeping on the torus") {
    CombinatorialMap grid = toroidal_grid(3, 3);
    Cycle row = cyc(grid.graph(), {0, 1, 2});
    CutResult cut = cut_along_cycle(grid, row);
    REQUIRE(cut.components.size() == 1);  // essential cut keeps it connected
    CHECK_FALSE(cut.separating());
    CHECK(cut.components[0].scars.size() == 2);
    CHECK(cut.components[0].capped_genus() == 0);  // torus minus a handle

    Cycle face = cyc(grid.graph(), {0, 1, 4, 3});
    CutResult cut2 = cut_along_cycle(grid, face);
    REQUIRE(cut2.components.size() == 2);
    std::multiset<int> genera;
    for (const CutComponent& comp : cut2.components) genera.insert(comp.capped_genus());
    CHECK(genera == std::multiset<int>{0, 1});  // disk plus punctured torus
}

TEST_CASE("simultaneous cuts along disjoint cycles") {
    CombinatorialMap grid = toroidal_grid(3, 3);
    const Graph& g = grid.graph();
    CutResult cut = cut_along_cycles(grid, {cyc(g, {0, 1, 2}), cyc(g, {3, 4, 5})});
    REQUIRE(cut.components.size() == 2);  // two annuli
    for (const CutComponent& comp : cut.components) {
        CHECK(comp.capped_genus() == 0);
        CHECK(comp.scars.size() == 2);
        std::set<int> owners;
        for (const auto& scar : comp.scars) owners.insert(scar.cycle);
        CHECK(owners.size() == 2);  // one scar from each cycle
    }
    CHECK_THROWS_AS(cut_along_cycles(grid, {cyc(g, {0, 1, 2}), cyc(g, {2, 5, 8})}),
                    std::invalid_argument);
}

TEST_CASE("dual and radial maps") {
    PlanarFamily oct = antiprism(3);
    Graph dual = dual_graph(oct.map);
    CHECK(dual.vertex_count() == 8);   // cube graph
    CHECK(dual.edge_count() == 12);
    for (int v = 0; v < dual.vertex_count(); ++v) CHECK(dual.degree(v) == 3);

    RadialMap radial = radial_map(oct.map);
    CHECK(radial.primal_vertex_count == 6);
    CHECK(radial.map.graph().vertex_count() == 6 + 8);
    CHECK(radial.map.graph().edge_count() == 24);  // one per dart
    CHECK(radial.map.genus() == 0);                // same surface
    for (const auto& f : radial.map.faces()) CHECK(f.size() == 4);

    RadialMap torus_radial = radial_map(toroidal_grid(3, 3));
    CHECK(torus_radial.map.genus() == 1);
}

TEST_CASE("vertex connectivity") {
    ConnectivityReport k4 = vertex_connectivity(complete_graph(4));
    CHECK(k4.value == 3);
    CHECK(k4.exact);
    ConnectivityReport oct = vertex_connectivity(antiprism(3).graph);
    CHECK(oct.value == 4);
    CHECK(oct.exact);
    ConnectivityReport c5 = vertex_connectivity(cycle_graph(5));
    CHECK(c5.value == 2);
    CHECK(c5.exact);
    ConnectivityReport k5 = vertex_connectivity(complete_graph(5));
    CHECK(k5.value == 4);
    CHECK(k5.exact);

    ConstructionParams p;
    ConnectivityReport cyl = vertex_connectivity(cylinder_graph(p).graph);
    CHECK(cyl.value == 4);
    CHECK(cyl.exact);
    ConnectivityReport filled = vertex_connectivity(counterexample_graph(p).graph);
    CHECK(filled.value == 4);
    CHECK(filled.exact);

    // Cap reached without finding a cut.
    ConnectivityReport capped = vertex_connectivity(antiprism(3).graph, 2);
    CHECK(capped.value == 3);
    CHECK_FALSE(capped.exact);
}
