#include "genuslab/surgery.hpp"

#include <algorithm>
#include <queue>

namespace genuslab {

namespace {

// Bookkeeping for one cycle vertex while splitting it in two.
struct SplitVertex {
    int cycle = -1;  // which cycle passes through, -1 if none
    int pos = -1;    // position along that cycle
    Dart out = -1;   // cycle dart leaving this vertex
    Dart in = -1;    // cycle dart arriving (stored as the dart AT this vertex)
};

}  // namespace

CutResult cut_along_cycle(const CombinatorialMap& map, const Cycle& cycle) {
    return cut_along_cycles(map, {cycle});
}

CutResult cut_along_cycles(const CombinatorialMap& map, const std::vector<Cycle>& cycles) {
    const Graph& g = map.graph();
    if (cycles.empty()) throw std::invalid_argument("cut: no cycles given");

    const int V = g.vertex_count();
    const int E = g.edge_count();
    std::vector<SplitVertex> split(V);
    std::vector<int> edge_cycle(E, -1);
    for (size_t j = 0; j < cycles.size(); ++j) {
        const auto& c = cycles[j];
        const auto& darts = c.darts();
        for (size_t i = 0; i < darts.size(); ++i) {
            Dart d = darts[i];
            if (d < 0 || d >= g.dart_count())
                throw std::invalid_argument("cut: cycle dart not in map");
            int v = g.vertex_of(d);
            if (split[v].cycle != -1)
                throw std::invalid_argument("cut: cycles share vertex " + std::to_string(v));
            split[v].cycle = static_cast<int>(j);
            split[v].pos = static_cast<int>(i);
            split[v].out = d;
            edge_cycle[edge_of_dart(d)] = static_cast<int>(j);
        }
        for (size_t i = 0; i < darts.size(); ++i) {
            // dart arriving at the tail of darts[i] is the previous cycle
            // dart's reverse; for a loop (length 1) this is the loop's own
            // other dart.
            Dart prev = darts[(i + darts.size() - 1) % darts.size()];
            split[g.vertex_of(darts[i])].in = alpha(prev);
        }
    }

    // New vertex numbering: untouched vertices first (ascending), then for
    // each cycle vertex in cycle/position order its two halves L, R.
    std::vector<int> plain_id(V, -1), left_id(V, -1), right_id(V, -1);
    std::vector<int> new_orig_vertex;
    for (int v = 0; v < V; ++v) {
        if (split[v].cycle == -1) {
            plain_id[v] = static_cast<int>(new_orig_vertex.size());
            new_orig_vertex.push_back(v);
        }
    }
    for (const auto& c : cycles) {
        for (Dart d : c.darts()) {
            int v = map.graph().vertex_of(d);
            left_id[v] = static_cast<int>(new_orig_vertex.size());
            new_orig_vertex.push_back(v);
            right_id[v] = static_cast<int>(new_orig_vertex.size());
            new_orig_vertex.push_back(v);
        }
    }
    const int NV = static_cast<int>(new_orig_vertex.size());

    // Sort each non-cycle dart at a cycle vertex onto a side: walking sigma
    // from the outgoing cycle dart, everything before the incoming dart is
    // on the left of the cut, the rest on the right.
    std::vector<int> side(g.dart_count(), -1);
    for (int v = 0; v < V; ++v) {
        if (split[v].cycle == -1) continue;
        Dart out = split[v].out, in = split[v].in;
        for (Dart d = map.next(out); d != in; d = map.next(d)) side[d] = 0;
        for (Dart d = map.next(in); d != out; d = map.next(d)) side[d] = 1;
    }

    // New edges: one copy of each untouched edge, two copies (L then R) of
    // each cycle edge, in ascending original-edge order.
    auto resolve = [&](Dart d, int s) {
        int v = g.vertex_of(d);
        if (split[v].cycle == -1) return plain_id[v];
        return s == 0 ? left_id[v] : right_id[v];
    };
    std::vector<std::pair<int, int>> new_edges;
    std::vector<std::pair<int, int>> new_orig_edge;
    std::vector<int> plain_edge(E, -1), left_edge(E, -1), right_edge(E, -1);
    for (int e = 0; e < E; ++e) {
        Dart d0 = static_cast<Dart>(2 * e), d1 = static_cast<Dart>(2 * e + 1);
        if (edge_cycle[e] == -1) {
            plain_edge[e] = static_cast<int>(new_edges.size());
            new_edges.emplace_back(resolve(d0, side[d0]), resolve(d1, side[d1]));
            new_orig_edge.emplace_back(e, -1);
        } else {
            left_edge[e] = static_cast<int>(new_edges.size());
            new_edges.emplace_back(resolve(d0, 0), resolve(d1, 0));
            new_orig_edge.emplace_back(e, 0);
            right_edge[e] = static_cast<int>(new_edges.size());
            new_edges.emplace_back(resolve(d0, 1), resolve(d1, 1));
            new_orig_edge.emplace_back(e, 1);
        }
    }

    // Dart translation preserves the parity (endpoint slot) of the original.
    auto new_dart = [&](Dart d, int s) {
        int e = edge_of_dart(d);
        int ne = (edge_cycle[e] == -1) ? plain_edge[e] : (s == 0 ? left_edge[e] : right_edge[e]);
        return static_cast<Dart>(2 * ne + (d & 1));
    };

    // Rotations of the cut-open map. A split vertex's left half keeps the
    // darts between out and in (the left arc), its right half the rest; the
    // two cycle-edge copies cap the ends of each arc, which is what creates
    // the scar faces.
    std::vector<std::vector<Dart>> new_rot(NV);
    for (int v = 0; v < V; ++v) {
        if (split[v].cycle == -1) {
            auto& rot = new_rot[plain_id[v]];
            for (Dart d : map.rotation_of(v)) rot.push_back(new_dart(d, side[d]));
        } else {
            Dart out = split[v].out, in = split[v].in;
            auto& lrot = new_rot[left_id[v]];
            lrot.push_back(new_dart(out, 0));
            for (Dart d = map.next(out); d != in; d = map.next(d)) lrot.push_back(new_dart(d, 0));
            lrot.push_back(new_dart(in, 0));
            auto& rrot = new_rot[right_id[v]];
            rrot.push_back(new_dart(in, 1));
            for (Dart d = map.next(in); d != out; d = map.next(d)) rrot.push_back(new_dart(d, 1));
            rrot.push_back(new_dart(out, 1));
        }
    }

    // Split into connected components (BFS from ascending roots for a
    // deterministic component order).
    std::vector<std::vector<int>> adj(NV);
    for (size_t e = 0; e < new_edges.size(); ++e) {
        adj[new_edges[e].first].push_back(static_cast<int>(e));
        adj[new_edges[e].second].push_back(static_cast<int>(e));
    }
    std::vector<int> comp_of(NV, -1);
    int n_comp = 0;
    for (int v = 0; v < NV; ++v) {
        if (comp_of[v] != -1) continue;
        std::queue<int> q;
        q.push(v);
        comp_of[v] = n_comp;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int e : adj[x]) {
                for (int y : {new_edges[e].first, new_edges[e].second}) {
                    if (comp_of[y] == -1) {
                        comp_of[y] = n_comp;
                        q.push(y);
                    }
                }
            }
        }
        ++n_comp;
    }

    CutResult result;
    std::vector<std::vector<int>> comp_vertices(n_comp);
    std::vector<int> local_vertex(NV, -1);
    for (int v = 0; v < NV; ++v) {
        local_vertex[v] = static_cast<int>(comp_vertices[comp_of[v]].size());
        comp_vertices[comp_of[v]].push_back(v);
    }
    std::vector<std::vector<int>> comp_edges(n_comp);
    std::vector<int> local_edge(new_edges.size(), -1);
    for (size_t e = 0; e < new_edges.size(); ++e) {
        int c = comp_of[new_edges[e].first];
        local_edge[e] = static_cast<int>(comp_edges[c].size());
        comp_edges[c].push_back(static_cast<int>(e));
    }

    for (int c = 0; c < n_comp; ++c) {
        std::vector<std::pair<int, int>> edges;
        std::vector<std::pair<int, int>> orig_edge;
        for (int e : comp_edges[c]) {
            edges.emplace_back(local_vertex[new_edges[e].first],
                               local_vertex[new_edges[e].second]);
            orig_edge.push_back(new_orig_edge[e]);
        }
        Graph cg(static_cast<int>(comp_vertices[c].size()), std::move(edges));
        std::vector<std::vector<Dart>> rot(comp_vertices[c].size());
        for (size_t i = 0; i < comp_vertices[c].size(); ++i) {
            for (Dart d : new_rot[comp_vertices[c][i]])
                rot[i].push_back(static_cast<Dart>(2 * local_edge[edge_of_dart(d)] + (d & 1)));
        }
        CutComponent comp{CombinatorialMap::from_rotations(std::move(cg), rot), {}, std::move(orig_edge), {}};
        for (int v : comp_vertices[c]) comp.orig_vertex.push_back(new_orig_vertex[v]);
        result.components.push_back(std::move(comp));
    }

    // Locate the two scar faces of each cycle. The left scar is the face
    // orbit through the left copy of the cycle's first dart; the right scar
    // is the orbit through the reverse of its right copy.
    for (size_t j = 0; j < cycles.size(); ++j) {
        Dart d0 = cycles[j].darts().front();
        for (int s : {0, 1}) {
            Dart nd = new_dart(d0, s);
            if (s == 1) nd = alpha(nd);
            int ne = edge_of_dart(nd);
            int comp_idx = comp_of[new_edges[ne].first];
            Dart local = static_cast<Dart>(2 * local_edge[ne] + (nd & 1));
            int face = result.components[comp_idx].map.face_of(local);
            result.components[comp_idx].scars.push_back({static_cast<int>(j), s, face});
        }
    }

    return result;
}

Graph dual_graph(const CombinatorialMap& map) {
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < map.graph().edge_count(); ++e)
        edges.emplace_back(map.face_of(static_cast<Dart>(2 * e)),
                           map.face_of(static_cast<Dart>(2 * e + 1)));
    return Graph(map.face_count(), std::move(edges));
}

RadialMap radial_map(const CombinatorialMap& map) {
    const Graph& g = map.graph();
    const int V = g.vertex_count();
    const auto& faces = map.faces();

    // Radial edge d joins primal vertex_of(d) to face vertex V + face_of(d);
    // radial darts 2d (primal end) and 2d+1 (face end).
    std::vector<std::pair<int, int>> edges;
    for (Dart d = 0; d < g.dart_count(); ++d)
        edges.emplace_back(g.vertex_of(d), V + map.face_of(d));
    Graph rg(V + static_cast<int>(faces.size()), std::move(edges));

    std::vector<std::vector<Dart>> rot(rg.vertex_count());
    for (int v = 0; v < V; ++v)
        for (Dart d : map.rotation_of(v)) rot[v].push_back(static_cast<Dart>(2 * d));
    // Face rotations run along the face orbit *reversed*: a face boundary
    // circulates clockwise when vertex rotations are counterclockwise, and
    // this is what keeps the radial map on the same surface (quadrilateral
    // faces, one per primal edge).
    for (size_t f = 0; f < faces.size(); ++f) {
        auto& r = rot[V + f];
        for (auto it = faces[f].rbegin(); it != faces[f].rend(); ++it)
            r.push_back(static_cast<Dart>(2 * *it + 1));
    }
    return RadialMap{CombinatorialMap::from_rotations(std::move(rg), rot), V};
}

}  // namespace genuslab
