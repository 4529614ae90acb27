#include "genuslab/families.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "genuslab/counterexample.hpp"

namespace genuslab {

Graph bouquet(int n) {
    if (n < 0) throw std::invalid_argument("bouquet: n must be >= 0");
    std::vector<std::pair<int, int>> edges(n, {0, 0});
    return Graph(1, edges);
}

Graph dipole(int n) {
    if (n < 1) throw std::invalid_argument("dipole: n must be >= 1");
    std::vector<std::pair<int, int>> edges(n, {0, 1});
    return Graph(2, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, edges);
}

CombinatorialMap toroidal_grid(int p, int q) {
    if (p < 3 || q < 3) throw std::invalid_argument("toroidal_grid: p, q must be >= 3");
    auto id = [&](int r, int c) { return ((r % p) + p) % p * q + ((c % q) + q) % q; };
    std::vector<std::pair<int, int>> edges;
    // edge 2v = rightward from v, edge 2v+1 = downward from v
    for (int r = 0; r < p; ++r)
        for (int c = 0; c < q; ++c) {
            edges.push_back({id(r, c), id(r, c + 1)});
            edges.push_back({id(r, c), id(r + 1, c)});
        }
    Graph g(p * q, edges);
    auto dart_at = [&](int e, int v) { return edges[e].first == v ? 2 * e : 2 * e + 1; };
    std::vector<std::vector<Dart>> rot(p * q);
    for (int r = 0; r < p; ++r)
        for (int c = 0; c < q; ++c) {
            int v = id(r, c);
            // (right, up, left, down)
            rot[v] = {dart_at(2 * v, v), dart_at(2 * id(r - 1, c) + 1, v),
                      dart_at(2 * id(r, c - 1), v), dart_at(2 * v + 1, v)};
        }
    return CombinatorialMap::from_rotations(g, rot);
}

void ConstructionParams::validate() const {
    if (m < 6 || m % 3 != 0) throw std::invalid_argument("params: m must be a multiple of 3, >= 6");
    if (k < 1) throw std::invalid_argument("params: k must be >= 1");
    if (b < 1) throw std::invalid_argument("params: b must be >= 1");
    if (d < 2) throw std::invalid_argument("params: d must be >= 2");
    if (g < 0) throw std::invalid_argument("params: g must be >= 0");
}

namespace {

// Shared builder for the stacked antiprisms and the connector ladders.
// Stack s has rings t = 0..b of m vertices; ring 0 is its inner rim and
// ring b its outer rim.  Zone z (1-based) hangs between stack z-1 ring b
// and stack z ring 0.
struct CylinderBuilder {
    int m, b;
    int n_stacks;                      // k + 1
    std::vector<std::pair<int, int>> edges;
    int next_vertex = 0;

    // edge ids per stack: ring_e[s][t][i], vert_e[s][t-1][i], diag_e[s][t-1][i]
    std::vector<std::vector<std::vector<int>>> ring_e, vert_e, diag_e;

    struct Attachment {
        int conn;  // connector index
        enum Role { U0, W0, UL, WL } role;
    };
    // (stack, ring, pos) -> attachment
    std::map<std::tuple<int, int, int>, Attachment> attach;

    std::vector<Connector> connectors;
    std::vector<Zone> zones;

    int stack_vertex(int s, int t, int i) const {
        return s * m * (b + 1) + t * m + ((i % m) + m) % m;
    }

    int add_edge(int u, int v) {
        edges.push_back({u, v});
        return static_cast<int>(edges.size()) - 1;
    }

    void build_stacks(int n) {
        n_stacks = n;
        next_vertex = n * m * (b + 1);
        ring_e.assign(n, {});
        vert_e.assign(n, {});
        diag_e.assign(n, {});
        for (int s = 0; s < n; ++s) {
            ring_e[s].assign(b + 1, std::vector<int>(m));
            vert_e[s].assign(b, std::vector<int>(m));
            diag_e[s].assign(b, std::vector<int>(m));
            for (int t = 0; t <= b; ++t)
                for (int i = 0; i < m; ++i)
                    ring_e[s][t][i] = add_edge(stack_vertex(s, t, i), stack_vertex(s, t, i + 1));
            for (int t = 1; t <= b; ++t)
                for (int i = 0; i < m; ++i) {
                    vert_e[s][t - 1][i] = add_edge(stack_vertex(s, t - 1, i), stack_vertex(s, t, i));
                    diag_e[s][t - 1][i] = add_edge(stack_vertex(s, t - 1, i), stack_vertex(s, t, i + 1));
                }
        }
    }

    // One ladder of length len between stack z-1 ring b and stack z ring 0,
    // attached at rim positions p, p+1 on both rims.
    void add_connector(int zone, int index, int pos, int len) {
        Connector c;
        c.zone = zone;
        c.index = index;
        int lo_s = zone - 1, hi_s = zone;
        std::vector<int> u(len + 1), w(len + 1);
        u[0] = stack_vertex(lo_s, b, pos);
        w[0] = stack_vertex(lo_s, b, pos + 1);
        u[len] = stack_vertex(hi_s, 0, pos);
        w[len] = stack_vertex(hi_s, 0, pos + 1);
        for (int t = 1; t < len; ++t) u[t] = next_vertex++;
        for (int t = 1; t < len; ++t) w[t] = next_vertex++;
        c.rail_u = u;
        c.rail_w = w;
        for (int t = 0; t < len; ++t) c.rail_u_edges.push_back(add_edge(u[t], u[t + 1]));
        for (int t = 0; t < len; ++t) c.rail_w_edges.push_back(add_edge(w[t], w[t + 1]));
        for (int t = 1; t < len; ++t) c.rungs.push_back(add_edge(u[t], w[t]));
        for (int t = 0; t < len; ++t) c.diagonals.push_back(add_edge(w[t], u[t + 1]));
        c.rim_rung_low = ring_e[lo_s][b][pos];
        c.rim_rung_high = ring_e[hi_s][0][pos];
        // Designated flip edge plus the reserved rung next to it.
        c.flip_edges = {c.diagonals[0], c.rungs[0]};
        // Interleave rung_t (key 2t-1) and diag_t (key 2t), drop flip edges.
        std::vector<std::pair<int, int>> keyed;
        for (int t = 1; t < len; ++t) keyed.push_back({2 * t - 1, c.rungs[t - 1]});
        for (int t = 0; t < len; ++t) keyed.push_back({2 * t, c.diagonals[t]});
        std::sort(keyed.begin(), keyed.end());
        for (auto& [key, e] : keyed)
            if (e != c.flip_edges[0] && e != c.flip_edges[1]) c.cross_edges.push_back(e);
        int ci = static_cast<int>(connectors.size());
        connectors.push_back(c);
        attach[{lo_s, b, pos}] = {ci, Attachment::U0};
        attach[{lo_s, b, (pos + 1) % m}] = {ci, Attachment::W0};
        attach[{hi_s, 0, pos}] = {ci, Attachment::UL};
        attach[{hi_s, 0, (pos + 1) % m}] = {ci, Attachment::WL};
    }

    std::vector<std::vector<Dart>> rotations() const {
        auto dart_at = [&](int e, int v) -> Dart {
            return edges[e].first == v ? Dart(2 * e) : Dart(2 * e + 1);
        };
        std::vector<std::vector<Dart>> rot(next_vertex);
        for (int s = 0; s < n_stacks; ++s)
            for (int t = 0; t <= b; ++t)
                for (int i = 0; i < m; ++i) {
                    int v = stack_vertex(s, t, i);
                    std::vector<Dart> r;
                    Dart ring_p = dart_at(ring_e[s][t][i], v);
                    Dart ring_m = dart_at(ring_e[s][t][(i + m - 1) % m], v);
                    if (t < b) {
                        // rising layer t+1: vertical to (t+1,i), diagonal to (t+1,i+1)
                        Dart up_v = dart_at(vert_e[s][t][i], v);
                        Dart up_d = dart_at(diag_e[s][t][i], v);
                        if (t > 0) {
                            Dart dn_v = dart_at(vert_e[s][t - 1][i], v);
                            Dart dn_d = dart_at(diag_e[s][t - 1][(i + m - 1) % m], v);
                            r = {ring_p, up_d, up_v, ring_m, dn_d, dn_v};
                        } else {
                            r = {ring_p, up_d, up_v, ring_m};
                            auto it = attach.find({s, 0, i});
                            if (it != attach.end()) {
                                const Connector& c = connectors[it->second.conn];
                                int len = c.length();
                                if (it->second.role == Attachment::UL) {
                                    r.push_back(dart_at(c.rail_u_edges[len - 1], v));
                                    r.push_back(dart_at(c.diagonals[len - 1], v));
                                } else {
                                    r.push_back(dart_at(c.rail_w_edges[len - 1], v));
                                }
                            }
                        }
                    } else {
                        Dart dn_v = dart_at(vert_e[s][b - 1][i], v);
                        Dart dn_d = dart_at(diag_e[s][b - 1][(i + m - 1) % m], v);
                        r = {ring_m, dn_d, dn_v, ring_p};
                        auto it = attach.find({s, b, i});
                        if (it != attach.end()) {
                            const Connector& c = connectors[it->second.conn];
                            if (it->second.role == Attachment::U0) {
                                r.push_back(dart_at(c.rail_u_edges[0], v));
                            } else {
                                r.push_back(dart_at(c.rail_w_edges[0], v));
                                r.push_back(dart_at(c.diagonals[0], v));
                            }
                        }
                    }
                    rot[v] = r;
                }
        for (const Connector& c : connectors) {
            int len = c.length();
            for (int t = 1; t < len; ++t) {
                int v = c.rail_u[t];
                rot[v] = {dart_at(c.rail_u_edges[t - 1], v), dart_at(c.diagonals[t - 1], v),
                          dart_at(c.rungs[t - 1], v), dart_at(c.rail_u_edges[t], v)};
            }
            for (int t = 1; t < len; ++t) {
                int v = c.rail_w[t];
                rot[v] = {dart_at(c.rail_w_edges[t], v), dart_at(c.diagonals[t], v),
                          dart_at(c.rungs[t - 1], v), dart_at(c.rail_w_edges[t - 1], v)};
            }
        }
        return rot;
    }
};

void locate_markers(const CombinatorialMap& map, std::vector<Connector>& connectors) {
    for (Connector& c : connectors) {
        auto big_side = [&](int e) -> Dart {
            Dart a = Dart(2 * e), bdart = Dart(2 * e + 1);
            const auto& faces = map.faces();
            bool a_big = faces[map.face_of(a)].size() != 3;
            bool b_big = faces[map.face_of(bdart)].size() != 3;
            if (a_big == b_big) throw std::logic_error("connector rail edge must flank exactly one big face");
            return a_big ? a : bdart;
        };
        c.marker_w = big_side(c.rail_w_edges[0]);
        c.marker_u = big_side(c.rail_u_edges[0]);
        c.big_face_length = static_cast<int>(map.faces()[map.face_of(c.marker_w)].size());
    }
}

}  // namespace

PlanarFamily stacked_antiprism(int m, int b) {
    if (m < 3) throw std::invalid_argument("stacked_antiprism: m must be >= 3");
    if (b < 1) throw std::invalid_argument("stacked_antiprism: b must be >= 1");
    CylinderBuilder builder;
    builder.m = m;
    builder.b = b;
    builder.build_stacks(1);
    Graph g(builder.next_vertex, builder.edges);
    CombinatorialMap map = CombinatorialMap::from_rotations(g, builder.rotations());
    if (map.genus() != 0) throw std::logic_error("stacked_antiprism: embedding is not planar");
    return {std::move(g), std::move(map)};
}

PlanarFamily antiprism(int m) {
    if (m < 3) throw std::invalid_argument("antiprism: m must be >= 3");
    return stacked_antiprism(m, 1);
}

CylinderFamily cylinder_graph(const ConstructionParams& params) {
    params.validate();
    CylinderBuilder builder;
    builder.m = params.m;
    builder.b = params.b;
    builder.build_stacks(params.k + 1);
    int spacing = params.m / 3;
    for (int z = 1; z <= params.k; ++z) {
        Zone zone;
        zone.index = z;
        zone.length = params.d;
        for (int c = 0; c < 3; ++c) {
            zone.connectors.push_back(static_cast<int>(builder.connectors.size()));
            builder.add_connector(z, c, c * spacing, params.d);
        }
        builder.zones.push_back(zone);
    }
    Graph g(builder.next_vertex, builder.edges);
    CombinatorialMap map = CombinatorialMap::from_rotations(g, builder.rotations());
    if (map.genus() != 0) throw std::logic_error("cylinder_graph: embedding is not planar");
    CylinderFamily fam;
    fam.connectors = std::move(builder.connectors);
    fam.zones = std::move(builder.zones);
    locate_markers(map, fam.connectors);
    fam.graph = std::move(g);
    fam.map = std::move(map);
    fam.m = params.m;
    fam.k = params.k;
    fam.b = params.b;
    fam.d = params.d;
    fam.g = params.g;
    return fam;
}

namespace {

using Triangle = std::array<int, 3>;

// Triangulated disk described by CCW triangles plus the CCW boundary cycle.
struct TriDisk {
    std::vector<Triangle> triangles;
    std::vector<int> boundary;
    int vertex_count = 0;
};

// Fan-free strip triangulation of a polygon; every vertex lies in at most
// three triangles.
TriDisk snake_polygon(int n) {
    TriDisk d;
    d.vertex_count = n;
    for (int i = 0; i < n; ++i) d.boundary.push_back(i);
    int lo = 0, hi = n - 1;
    bool from_low = true;
    while (hi - lo >= 2) {
        if (from_low) {
            d.triangles.push_back({lo, lo + 1, hi});
            ++lo;
        } else {
            d.triangles.push_back({lo, hi - 1, hi});
            --hi;
        }
        from_low = !from_low;
    }
    return d;
}

// Equilateral grid of side s: boundary length 3s, corner degree 2, other
// boundary degree 4, interior degree 6.
TriDisk triangle_grid(int s) {
    TriDisk d;
    auto id = [&](int r, int i) { return r * (r + 1) / 2 + i; };
    d.vertex_count = (s + 1) * (s + 2) / 2;
    for (int r = 0; r < s; ++r)
        for (int i = 0; i <= r; ++i) {
            d.triangles.push_back({id(r, i), id(r + 1, i), id(r + 1, i + 1)});
            if (i < r) d.triangles.push_back({id(r, i), id(r + 1, i + 1), id(r, i + 1)});
        }
    for (int r = 0; r < s; ++r) d.boundary.push_back(id(r, 0));
    for (int i = 0; i < s; ++i) d.boundary.push_back(id(s, i));
    for (int r = s; r > 0; --r) d.boundary.push_back(id(r, r));
    return d;
}

// One refinement round: interior edges get midpoints; triangles split by
// how many of their sides were subdivided.  Diagonals always run toward an
// original vertex that gains at most one new edge this way.
TriDisk subdivide_interior(const TriDisk& in) {
    std::set<std::pair<int, int>> boundary_edges;
    int nb = static_cast<int>(in.boundary.size());
    for (int i = 0; i < nb; ++i) {
        int u = in.boundary[i], v = in.boundary[(i + 1) % nb];
        boundary_edges.insert({std::min(u, v), std::max(u, v)});
    }
    TriDisk out;
    out.boundary = in.boundary;
    out.vertex_count = in.vertex_count;
    std::map<std::pair<int, int>, int> mid;
    auto midpoint = [&](int u, int v) -> int {
        std::pair<int, int> key{std::min(u, v), std::max(u, v)};
        if (boundary_edges.count(key)) return -1;
        auto it = mid.find(key);
        if (it != mid.end()) return it->second;
        return mid[key] = out.vertex_count++;
    };
    for (const Triangle& t : in.triangles) {
        int p01 = midpoint(t[0], t[1]);
        int p12 = midpoint(t[1], t[2]);
        int p20 = midpoint(t[2], t[0]);
        int count = (p01 >= 0) + (p12 >= 0) + (p20 >= 0);
        if (count == 0) {
            out.triangles.push_back(t);
        } else if (count == 3) {
            out.triangles.push_back({t[0], p01, p20});
            out.triangles.push_back({p01, t[1], p12});
            out.triangles.push_back({p20, p12, t[2]});
            out.triangles.push_back({p01, p12, p20});
        } else if (count == 1) {
            // Rotate so the midpoint sits on side (a, b); cut to the apex.
            int a, bb, c, p;
            if (p01 >= 0) { a = t[0]; bb = t[1]; c = t[2]; p = p01; }
            else if (p12 >= 0) { a = t[1]; bb = t[2]; c = t[0]; p = p12; }
            else { a = t[2]; bb = t[0]; c = t[1]; p = p20; }
            out.triangles.push_back({a, p, c});
            out.triangles.push_back({p, bb, c});
        } else {
            // Rotate so the whole side (a, b) is unsplit; p = mid(b, c),
            // q = mid(c, a); the quad diagonal runs q -> b.
            int a, bb, c, p, q;
            if (p01 < 0) { a = t[0]; bb = t[1]; c = t[2]; p = p12; q = p20; }
            else if (p12 < 0) { a = t[1]; bb = t[2]; c = t[0]; p = p20; q = p01; }
            else { a = t[2]; bb = t[0]; c = t[1]; p = p01; q = p12; }
            out.triangles.push_back({q, p, c});
            out.triangles.push_back({a, bb, q});
            out.triangles.push_back({bb, p, q});
        }
    }
    return out;
}

// Rotation system of a triangulated disk: interior faces are the CCW
// triangles, the outer face is the boundary traversed backwards; sigma is
// recovered from the face successor via sigma(d) = succ(alpha(d)).
DiskFiller disk_from_triangles(const TriDisk& disk) {
    std::vector<std::pair<int, int>> edge_list;
    std::map<std::pair<int, int>, int> edge_id;
    auto get_edge = [&](int u, int v) -> int {
        std::pair<int, int> key{std::min(u, v), std::max(u, v)};
        auto it = edge_id.find(key);
        if (it != edge_id.end()) return it->second;
        edge_list.push_back({u, v});
        return edge_id[key] = static_cast<int>(edge_list.size()) - 1;
    };
    auto dart_from = [&](int u, int v) -> Dart {
        int e = get_edge(u, v);
        return edge_list[e].first == u ? Dart(2 * e) : Dart(2 * e + 1);
    };
    for (const Triangle& t : disk.triangles)
        for (int i = 0; i < 3; ++i) get_edge(t[i], t[(i + 1) % 3]);
    int ne = static_cast<int>(edge_list.size());
    std::vector<Dart> succ(2 * ne, -1);
    auto set_succ = [&](Dart a, Dart bdart) {
        if (succ[a] != -1) throw std::logic_error("disk_filler: inconsistent triangle orientation");
        succ[a] = bdart;
    };
    for (const Triangle& t : disk.triangles)
        for (int i = 0; i < 3; ++i)
            set_succ(dart_from(t[i], t[(i + 1) % 3]), dart_from(t[(i + 1) % 3], t[(i + 2) % 3]));
    int nb = static_cast<int>(disk.boundary.size());
    for (int i = 0; i < nb; ++i) {
        int a = disk.boundary[(i + 1) % nb], bv = disk.boundary[i];
        int c = disk.boundary[(i - 1 + nb) % nb];
        set_succ(dart_from(a, bv), dart_from(bv, c));
    }
    std::vector<Dart> sigma(2 * ne);
    for (Dart dd = 0; dd < 2 * ne; ++dd) {
        if (succ[dd] == -1) throw std::logic_error("disk_filler: unmatched dart");
        sigma[alpha(dd)] = succ[dd];
    }
    DiskFiller out;
    out.graph = Graph(disk.vertex_count, edge_list);
    out.map = CombinatorialMap::from_sigma(out.graph, sigma);
    out.boundary = disk.boundary;
    if (out.map.genus() != 0) throw std::logic_error("disk_filler: embedding is not planar");
    out.outer_face = out.map.face_of(dart_from(disk.boundary[1], disk.boundary[0]));
    if (out.map.faces()[out.outer_face].size() != disk.boundary.size())
        throw std::logic_error("disk_filler: outer face does not match boundary");
    return out;
}

}  // namespace

DiskFiller disk_filler(int boundary_length) {
    if (boundary_length < 3) throw std::invalid_argument("disk_filler: boundary length must be >= 3");
    TriDisk base;
    if (boundary_length == 3) {
        base.vertex_count = 3;
        base.boundary = {0, 1, 2};
        base.triangles = {{0, 1, 2}};
        return disk_from_triangles(base);  // degenerate: nothing to refine
    }
    if (boundary_length % 3 == 0)
        base = triangle_grid(boundary_length / 3);
    else
        base = snake_polygon(boundary_length);
    return disk_from_triangles(subdivide_interior(base));
}

namespace {

// Face amalgamation: the filler's outer face is sewn into face_index of the
// host, identifying boundary edges with the face's edges (orientations must
// oppose, so host orbit position j receives filler orbit position L-j).
void glue_disk(Graph& graph, CombinatorialMap& map, int face_index, const DiskFiller& filler) {
    const std::vector<Dart> host = map.faces()[face_index];
    const std::vector<Dart> outer = filler.map.faces()[filler.outer_face];
    int L = static_cast<int>(host.size());
    if (static_cast<int>(outer.size()) != L)
        throw std::invalid_argument("glue_disk: boundary length mismatch");

    const Graph& fg = filler.graph;
    std::vector<int> vertex_map(fg.vertex_count(), -1);
    for (int i = 0; i < L; ++i)
        vertex_map[fg.vertex_of(outer[i])] = graph.vertex_of(host[(L - i) % L]);

    std::vector<std::pair<int, int>> edges = graph.edges();
    std::vector<int> edge_map(fg.edge_count(), -1);
    std::vector<bool> is_boundary_edge(fg.edge_count(), false);
    for (int i = 0; i < L; ++i) edge_map[edge_of_dart(outer[i])] = edge_of_dart(host[(L - i - 1 + L) % L]);
    for (int i = 0; i < L; ++i) is_boundary_edge[edge_of_dart(outer[i])] = true;
    int next_vertex = graph.vertex_count();
    for (int v = 0; v < fg.vertex_count(); ++v)
        if (vertex_map[v] < 0) vertex_map[v] = next_vertex++;
    for (int e = 0; e < fg.edge_count(); ++e) {
        if (is_boundary_edge[e]) continue;
        edge_map[e] = static_cast<int>(edges.size());
        edges.push_back({vertex_map[fg.edges()[e].first], vertex_map[fg.edges()[e].second]});
    }
    Graph merged(next_vertex, edges);

    auto translate = [&](Dart fd) -> Dart {
        int e = edge_of_dart(fd);
        if (!is_boundary_edge[e]) return Dart(2 * edge_map[e] + (fd & 1));
        int me = edge_map[e];
        int tail = vertex_map[fg.vertex_of(fd)];
        return edges[me].first == tail ? Dart(2 * me) : Dart(2 * me + 1);
    };

    std::vector<bool> on_boundary(fg.vertex_count(), false);
    for (int v : filler.boundary) on_boundary[v] = true;
    std::vector<std::vector<Dart>> rot(merged.vertex_count());
    for (int v = 0; v < graph.vertex_count(); ++v) rot[v] = map.rotation_of(v);
    for (int v = 0; v < fg.vertex_count(); ++v) {
        if (on_boundary[v]) continue;
        std::vector<Dart> r;
        for (Dart fd : filler.map.rotation_of(v)) r.push_back(translate(fd));
        rot[vertex_map[v]] = r;
    }
    for (int i = 0; i < L; ++i) {
        // Rotation at b_i reads (t'_i, y_1..y_p, alpha(t'_{i-1})); the fan
        // y_1..y_p lands just before host dart t_j, j = L - i.
        std::vector<Dart> fan;
        Dart stop = alpha(outer[(i - 1 + L) % L]);
        for (Dart cur = filler.map.next(outer[i]); cur != stop; cur = filler.map.next(cur))
            fan.push_back(translate(cur));
        if (fan.empty()) continue;
        Dart tj = host[(L - i) % L];
        std::vector<Dart>& r = rot[merged.vertex_of(tj)];
        auto it = std::find(r.begin(), r.end(), tj);
        if (it == r.end()) throw std::logic_error("glue_disk: host dart missing from rotation");
        r.insert(it, fan.begin(), fan.end());
    }
    map = CombinatorialMap::from_rotations(merged, rot);
    graph = std::move(merged);
}

// The rim m-gon is the unique non-triangle face along the given rim edge.
int rim_face(const CombinatorialMap& map, int rim_edge, int m) {
    int fa = map.face_of(Dart(2 * rim_edge));
    int fb = map.face_of(Dart(2 * rim_edge + 1));
    bool a_big = static_cast<int>(map.faces()[fa].size()) == m;
    bool b_big = static_cast<int>(map.faces()[fb].size()) == m;
    if (a_big == b_big) throw std::logic_error("rim edge must flank exactly one m-gon");
    return a_big ? fa : fb;
}

}  // namespace

CylinderFamily counterexample_graph(const ConstructionParams& params) {
    CylinderFamily fam = cylinder_graph(params);
    DiskFiller filler = disk_filler(params.m);
    // Inner rim of stack 0, then outer rim of stack k; rim edge 0 of each
    // rim identifies the m-gon. Edge ids: stack s starts its ring edges at
    // s * (edges per stack).
    int per_stack = params.m * (3 * params.b + 1);
    glue_disk(fam.graph, fam.map, rim_face(fam.map, 0, params.m), filler);
    int outer_rim_edge0 = params.k * per_stack + params.b * params.m;
    glue_disk(fam.graph, fam.map, rim_face(fam.map, outer_rim_edge0, params.m), filler);
    if (fam.map.genus() != 0) throw std::logic_error("counterexample_graph: embedding is not planar");
    return fam;
}

CylinderFamily generalized_cylinder(int k, int d) {
    if (k < 1) throw std::invalid_argument("generalized_cylinder: k must be >= 1");
    if (d < 2) throw std::invalid_argument("generalized_cylinder: d must be >= 2");
    CylinderBuilder builder;
    builder.m = 12 * k;
    builder.b = 1;
    builder.build_stacks(k + 1);
    for (int z = 1; z <= k; ++z) {
        int q = k + z;
        mpq_class scaled = c_coefficient(q, k) * d;
        // round to nearest, half away from zero
        mpz_class num = scaled.get_num() * 2 + scaled.get_den();
        mpz_class len_z = num / (scaled.get_den() * 2);
        long len = len_z.get_si();
        if (len < 2)
            throw std::invalid_argument("generalized_cylinder: d too small for connector length >= 2");
        Zone zone;
        zone.index = z;
        zone.length = static_cast<int>(len);
        for (int c = 0; c < q; ++c) {
            int pos = static_cast<int>(static_cast<long>(c) * builder.m / q);
            int next_pos = static_cast<int>(static_cast<long>(c + 1) * builder.m / q);
            if (next_pos - pos < 2) throw std::logic_error("generalized_cylinder: attachments overlap");
            zone.connectors.push_back(static_cast<int>(builder.connectors.size()));
            builder.add_connector(z, c, pos, static_cast<int>(len));
        }
        builder.zones.push_back(zone);
    }
    Graph g(builder.next_vertex, builder.edges);
    CombinatorialMap map = CombinatorialMap::from_rotations(g, builder.rotations());
    if (map.genus() != 0) throw std::logic_error("generalized_cylinder: embedding is not planar");
    CylinderFamily fam;
    fam.connectors = std::move(builder.connectors);
    fam.zones = std::move(builder.zones);
    locate_markers(map, fam.connectors);
    fam.graph = std::move(g);
    fam.map = std::move(map);
    fam.m = builder.m;
    fam.k = k;
    fam.b = 1;
    fam.d = d;
    return fam;
}

}  // namespace genuslab
