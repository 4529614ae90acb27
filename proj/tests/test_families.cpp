// Construction invariants of the graph families: censuses, canonical
// embeddings, connector bookkeeping, disk fillers and the filled graphs.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <genuslab/families.hpp>

#include <map>
#include <set>

using namespace genuslab;

namespace {

std::map<int, int> degree_histogram(const Graph& g) {
    std::map<int, int> h;
    for (int v = 0; v < g.vertex_count(); ++v) h[g.degree(v)] += 1;
    return h;
}

std::map<int, int> face_length_histogram(const CombinatorialMap& m) {
    std::map<int, int> h;
    for (const auto& f : m.faces()) h[static_cast<int>(f.size())] += 1;
    return h;
}

}  // namespace

TEST_CASE("oracle family shapes") {
    CHECK(bouquet(3).vertex_count() == 1);
    CHECK(bouquet(3).edge_count() == 3);
    CHECK(bouquet(3).degree(0) == 6);
    CHECK(dipole(4).vertex_count() == 2);
    CHECK(dipole(4).edge_count() == 4);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(complete_graph(5).edge_count() == 10);
    // Degenerate but coherent: the edgeless bouquet and K1 are allowed.
    CHECK(bouquet(0).edge_count() == 0);
    CHECK(complete_graph(1).vertex_count() == 1);
    CHECK_THROWS_AS(bouquet(-1), std::invalid_argument);
    CHECK_THROWS_AS(dipole(0), std::invalid_argument);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(complete_graph(0), std::invalid_argument);
}

TEST_CASE("antiprism(3) is the octahedron") {
    PlanarFamily oct = antiprism(3);
    CHECK(oct.graph.vertex_count() == 6);
    CHECK(oct.graph.edge_count() == 12);
    CHECK(degree_histogram(oct.graph) == std::map<int, int>{{4, 6}});
    CHECK(oct.map.genus() == 0);
    CHECK(oct.map.face_count() == 8);
    CHECK(face_length_histogram(oct.map) == std::map<int, int>{{3, 8}});
}

TEST_CASE("antiprism(m) census") {
    for (int m = 3; m <= 8; ++m) {
        PlanarFamily a = antiprism(m);
        CHECK(a.graph.vertex_count() == 2 * m);
        CHECK(a.graph.edge_count() == 4 * m);
        CHECK(degree_histogram(a.graph) == std::map<int, int>{{4, 2 * m}});
        CHECK(a.map.genus() == 0);
        std::map<int, int> faces = face_length_histogram(a.map);
        if (m == 3) {
            CHECK(faces == std::map<int, int>{{3, 8}});
        } else {
            CHECK(faces == std::map<int, int>{{3, 2 * m}, {m, 2}});
        }
    }
    CHECK_THROWS_AS(antiprism(2), std::invalid_argument);
}

TEST_CASE("stacked antiprisms glue rim to rim") {
    PlanarFamily s = stacked_antiprism(6, 2);
    CHECK(s.graph.vertex_count() == 18);
    CHECK(s.graph.edge_count() == 42);
    CHECK(s.map.genus() == 0);
    CHECK(face_length_histogram(s.map) == std::map<int, int>{{3, 24}, {6, 2}});
    CHECK(degree_histogram(s.graph) == std::map<int, int>{{4, 12}, {6, 6}});

    PlanarFamily one = stacked_antiprism(5, 1);
    CHECK(face_length_histogram(one.map) == face_length_histogram(antiprism(5).map));
    CHECK_THROWS_AS(stacked_antiprism(6, 0), std::invalid_argument);
}

TEST_CASE("cylinder graph census and connectors") {
    ConstructionParams p;  // m=6, k=1, b=1, d=2
    CylinderFamily fam = cylinder_graph(p);
    CHECK(fam.graph.vertex_count() == 30);
    CHECK(fam.graph.edge_count() == 69);
    CHECK(fam.map.genus() == 0);
    CHECK(fam.map.face_count() == 41);
    CHECK(face_length_histogram(fam.map) == std::map<int, int>{{3, 36}, {6, 5}});
    CHECK(degree_histogram(fam.graph) == std::map<int, int>{{4, 18}, {5, 6}, {6, 6}});
    CHECK(fam.nu() == 30 - 18);

    REQUIRE(fam.zones.size() == 1);
    REQUIRE(fam.connectors.size() == 3);
    CHECK(fam.zones[0].connectors == std::vector<int>{0, 1, 2});
    for (const Connector& c : fam.connectors) {
        CHECK(c.length() == p.d);
        CHECK(c.rail_u.size() == static_cast<size_t>(p.d + 1));
        CHECK(c.rail_w.size() == static_cast<size_t>(p.d + 1));
        CHECK(c.diagonals.size() == static_cast<size_t>(p.d));
        CHECK(c.rungs.size() == static_cast<size_t>(p.d - 1));
        CHECK(c.flip_edges.size() == 2);
        CHECK(c.cross_edges.size() == static_cast<size_t>(2 * p.d - 3));
        // Flip edges and cross edges partition the interior rungs/diagonals.
        std::set<int> interior(c.rungs.begin(), c.rungs.end());
        interior.insert(c.diagonals.begin(), c.diagonals.end());
        std::set<int> tagged(c.cross_edges.begin(), c.cross_edges.end());
        tagged.insert(c.flip_edges.begin(), c.flip_edges.end());
        CHECK(interior == tagged);
        // Markers anchor the big faces flanking the connector.
        REQUIRE(c.marker_w >= 0);
        REQUIRE(c.marker_u >= 0);
        int fw = fam.map.face_of(c.marker_w);
        int fu = fam.map.face_of(c.marker_u);
        CHECK(static_cast<int>(fam.map.faces()[fw].size()) == c.big_face_length);
        CHECK(fam.map.faces()[fu].size() == 6);
        CHECK(c.big_face_length == 6);
    }
}

TEST_CASE("construction parameter validation") {
    ConstructionParams p;
    p.m = 5;
    CHECK_THROWS_AS(cylinder_graph(p), std::invalid_argument);  // m must be divisible by 6
    p = {};
    p.d = 1;
    CHECK_THROWS_AS(cylinder_graph(p), std::invalid_argument);
    p = {};
    p.k = 0;
    CHECK_THROWS_AS(cylinder_graph(p), std::invalid_argument);
    p = {};
    CHECK(p.f() == 6 * (0 + 2 + 1));
}

TEST_CASE("disk fillers triangulate with bounded degree") {
    for (int len = 3; len <= 12; ++len) {
        DiskFiller f = disk_filler(len);
        CHECK(f.map.genus() == 0);
        CHECK(f.boundary.size() == static_cast<size_t>(len));
        REQUIRE(f.outer_face >= 0);
        CHECK(f.map.faces()[f.outer_face].size() == static_cast<size_t>(len));
        std::map<int, int> faces = face_length_histogram(f.map);
        int triangles = faces.count(3) ? faces[3] : 0;
        if (len == 3) {
            CHECK(f.map.face_count() == 2);
        } else {
            CHECK(triangles == f.map.face_count() - 1);
        }
        std::set<int> on_boundary(f.boundary.begin(), f.boundary.end());
        for (int v = 0; v < f.graph.vertex_count(); ++v)
            if (!on_boundary.count(v)) CHECK(f.graph.degree(v) <= 7);
        for (int v : f.boundary) CHECK(f.graph.degree(v) >= 2);
    }
    CHECK_THROWS_AS(disk_filler(2), std::invalid_argument);
}

TEST_CASE("disk filler for rim gluing keeps boundary degree low") {
    DiskFiller f = disk_filler(6);
    CHECK(f.graph.vertex_count() == 9);
    CHECK(f.graph.edge_count() == 18);
    CHECK(face_length_histogram(f.map) == std::map<int, int>{{3, 10}, {6, 1}});
    for (int v : f.boundary) CHECK(f.graph.degree(v) <= 5);
}

TEST_CASE("filled graph census") {
    ConstructionParams p;  // m=6, k=1, b=1, d=2
    CylinderFamily fam = counterexample_graph(p);
    CHECK(fam.graph.vertex_count() == 36);
    CHECK(fam.graph.edge_count() == 93);
    CHECK(fam.map.genus() == 0);
    CHECK(fam.map.face_count() == 59);
    // Every face is a triangle except the 3k big faces.
    CHECK(face_length_histogram(fam.map) == std::map<int, int>{{3, 56}, {6, 3}});
    std::map<int, int> deg = degree_histogram(fam.graph);
    for (auto& [d, n] : deg) CHECK(d <= 7);
    CHECK(fam.nu() == 36 - 18);
    CHECK(fam.f() == 18);
}

TEST_CASE("filled graph with two zones") {
    ConstructionParams p;
    p.k = 2;
    CylinderFamily fam = counterexample_graph(p);
    CHECK(fam.map.genus() == 0);
    CHECK(fam.zones.size() == 2);
    CHECK(fam.connectors.size() == 6);
    std::map<int, int> faces = face_length_histogram(fam.map);
    CHECK(faces[6] == 6);  // 3k big faces
    CHECK(faces.size() == 2);
    for (auto& [d, n] : degree_histogram(fam.graph)) CHECK(d <= 7);
    // Marker darts still anchor six-sided faces.
    for (const Connector& c : fam.connectors)
        CHECK(fam.map.faces()[fam.map.face_of(c.marker_w)].size() == 6);
}

TEST_CASE("generalized cylinder zone sizes and lengths") {
    CylinderFamily one = generalized_cylinder(1, 8);
    REQUIRE(one.zones.size() == 1);
    CHECK(one.zones[0].connectors.size() == 2);  // zone j has k + j connectors
    CHECK(one.zones[0].length == 8);             // c_{2k} = 1
    CHECK(one.map.genus() == 0);

    CylinderFamily two = generalized_cylinder(2, 16);
    REQUIRE(two.zones.size() == 2);
    CHECK(two.zones[0].connectors.size() == 3);
    CHECK(two.zones[1].connectors.size() == 4);
    CHECK(two.zones[0].length == 14);  // round(41/48 * 16)
    CHECK(two.zones[1].length == 16);
    CHECK(two.graph.vertex_count() == 342);
    CHECK(two.graph.edge_count() == 705);
    CHECK(two.map.genus() == 0);
    for (const Zone& z : two.zones)
        for (int ci : z.connectors) CHECK(two.connectors[ci].length() == z.length);

    CHECK_THROWS_AS(generalized_cylinder(0, 8), std::invalid_argument);
    CHECK_THROWS_AS(generalized_cylinder(2, 1), std::invalid_argument);
}
