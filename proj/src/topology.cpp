#include "genuslab/topology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "genuslab/surgery.hpp"

namespace genuslab {

namespace {

std::vector<char> vertex_mask(const Graph& g, const Cycle& c) {
    std::vector<char> on(g.vertex_count(), 0);
    for (int v : c.vertices()) on[v] = 1;
    return on;
}

// Connectivity of the graph induced on the vertices where keep[v] != 0;
// an empty selection counts as connected.
bool connected_outside(const Graph& g, const std::vector<char>& keep) {
    int start = -1;
    int want = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (keep[v]) {
            if (start < 0) start = v;
            ++want;
        }
    if (start < 0) return true;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int found = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (Dart d : g.darts_at(v)) {
            int u = g.head_of(d);
            if (!keep[u] || seen[u]) continue;
            seen[u] = 1;
            ++found;
            stack.push_back(u);
        }
    }
    return found == want;
}

bool is_chordless(const Graph& g, const Cycle& c) {
    std::vector<char> on = vertex_mask(g, c);
    std::vector<char> cycle_edge(g.edge_count(), 0);
    for (Dart d : c.darts()) cycle_edge[edge_of_dart(d)] = 1;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (on[u] && on[v] && !cycle_edge[e]) return false;
    }
    return true;
}

}  // namespace

bool is_facial(const CombinatorialMap& map, const Cycle& cycle) {
    auto matches = [&](const std::vector<Dart>& darts) {
        const std::vector<Dart>& orbit = map.faces()[map.face_of(darts.front())];
        if (orbit.size() != darts.size()) return false;
        std::set<Dart> want(darts.begin(), darts.end());
        for (Dart d : orbit)
            if (!want.count(d)) return false;
        return true;
    };
    if (matches(cycle.darts())) return true;
    std::vector<Dart> rev;
    for (Dart d : cycle.darts()) rev.push_back(alpha(d));
    return matches(rev);
}

bool is_peripheral_cycle(const Graph& g, const Cycle& cycle) {
    if (!is_chordless(g, cycle)) return false;
    std::vector<char> keep = vertex_mask(g, cycle);
    for (char& k : keep) k = !k;
    return connected_outside(g, keep);
}

bool is_peripheral_family(const Graph& g, const std::vector<Cycle>& family) {
    std::vector<int> owner(g.vertex_count(), -1);
    for (size_t i = 0; i < family.size(); ++i) {
        if (!is_chordless(g, family[i])) return false;
        for (int v : family[i].vertices()) {
            if (owner[v] >= 0) return false;  // members share a vertex
            owner[v] = static_cast<int>(i);
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v]) return false;
    }
    std::vector<char> keep(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) keep[v] = owner[v] < 0;
    return connected_outside(g, keep);
}

bool is_surface_separating(const CombinatorialMap& map, const Cycle& cycle) {
    return cut_along_cycle(map, cycle).separating();
}

bool is_contractible(const CombinatorialMap& map, const Cycle& cycle) {
    CutResult cut = cut_along_cycle(map, cycle);
    if (!cut.separating()) return false;
    for (const CutComponent& comp : cut.components)
        if (comp.scars.size() == 1 && comp.capped_genus() == 0) return true;
    return false;
}

bool freely_homotopic_disjoint(const CombinatorialMap& map, const Cycle& a, const Cycle& b) {
    if (!vertex_disjoint(a, b))
        throw std::invalid_argument("free homotopy test: cycles share a vertex");
    if (is_contractible(map, a) || is_contractible(map, b))
        throw std::invalid_argument("free homotopy test: cycle is contractible");
    CutResult cut = cut_along_cycles(map, {a, b});
    for (const CutComponent& comp : cut.components) {
        if (comp.scars.size() != 2 || comp.capped_genus() != 0) continue;
        if (comp.scars[0].cycle != comp.scars[1].cycle) return true;
    }
    return false;
}

SparsityReport cofacial_sparsity(const CombinatorialMap& map, const std::vector<Cycle>& family) {
    for (size_t i = 0; i < family.size(); ++i)
        if (!is_facial(map, family[i]))
            throw std::invalid_argument("cofacial sparsity: family member " + std::to_string(i) +
                                        " is not facial");
    const Graph& g = map.graph();
    std::vector<int> owner(g.vertex_count(), -1);
    for (size_t i = 0; i < family.size(); ++i)
        for (int v : family[i].vertices()) owner[v] = static_cast<int>(i);

    SparsityReport rep;
    rep.delta.assign(family.size(), 0);
    for (const std::vector<Dart>& orbit : map.faces()) {
        std::set<int> touched;
        for (Dart d : orbit) {
            int o = owner[g.vertex_of(d)];
            if (o >= 0) touched.insert(o);
        }
        if (touched.size() >= 2)
            for (int i : touched) rep.delta[i] += 1;
    }
    for (int d : rep.delta)
        if (d > 1) rep.sparse = false;
    return rep;
}

namespace {

// Shortest cycle through BFS tree fundamental cycles, rooted at every
// vertex, keeping only noncontractible ones.
int shortest_noncontractible(const CombinatorialMap& map) {
    const Graph& g = map.graph();
    int best = -1;
    std::vector<int> depth(g.vertex_count());
    std::vector<Dart> into(g.vertex_count());  // tree dart arriving at v
    for (int root = 0; root < g.vertex_count(); ++root) {
        std::fill(depth.begin(), depth.end(), -1);
        depth[root] = 0;
        into[root] = -1;
        std::vector<int> frontier{root};
        std::vector<char> tree_edge(g.edge_count(), 0);
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int v : frontier)
                for (Dart d : g.darts_at(v)) {
                    int u = g.head_of(d);
                    if (depth[u] >= 0) continue;
                    depth[u] = depth[v] + 1;
                    into[u] = d;
                    tree_edge[edge_of_dart(d)] = 1;
                    next.push_back(u);
                }
            frontier = std::move(next);
        }
        for (int e = 0; e < g.edge_count(); ++e) {
            if (tree_edge[e]) continue;
            auto [u, v] = g.edge(e);
            if (u == v) continue;
            // Strip to the lowest common ancestor, then stitch tree paths
            // around the non-tree edge.
            std::vector<Dart> up_u, up_v;
            int x = u, y = v;
            while (depth[x] > depth[y]) {
                up_u.push_back(into[x]);
                x = g.vertex_of(into[x]);
            }
            while (depth[y] > depth[x]) {
                up_v.push_back(into[y]);
                y = g.vertex_of(into[y]);
            }
            while (x != y) {
                up_u.push_back(into[x]);
                x = g.vertex_of(into[x]);
                up_v.push_back(into[y]);
                y = g.vertex_of(into[y]);
            }
            std::vector<Dart> darts(up_u.rbegin(), up_u.rend());
            darts.push_back(2 * e + (g.vertex_of(2 * e) == u ? 0 : 1));
            for (Dart d : up_v) darts.push_back(alpha(d));
            if (best >= 0 && static_cast<int>(darts.size()) >= best) continue;
            Cycle c(g, darts);
            if (!is_contractible(map, c)) best = c.length();
        }
    }
    return best;
}

}  // namespace

int face_width(const CombinatorialMap& map) {
    if (map.genus() == 0)
        throw std::invalid_argument("face width: genus 0 surface has no noncontractible curves");
    RadialMap radial = radial_map(map);
    int len = shortest_noncontractible(radial.map);
    if (len < 0) throw std::logic_error("face width: no noncontractible radial cycle found");
    return len / 2;
}

namespace {

bool connected_after_removal(const Graph& g, const std::vector<char>& removed) {
    std::vector<char> keep(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) keep[v] = !removed[v];
    return connected_outside(g, keep);
}

bool find_cut(const Graph& g, int size, int first, std::vector<char>& removed) {
    if (size == 0) return !connected_after_removal(g, removed);
    for (int v = first; v < g.vertex_count(); ++v) {
        removed[v] = 1;
        if (find_cut(g, size - 1, v + 1, removed)) return true;
        removed[v] = 0;
    }
    return false;
}

}  // namespace

ConnectivityReport vertex_connectivity(const Graph& g, int cap) {
    int n = g.vertex_count();
    bool complete = true;
    for (int u = 0; u < n && complete; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.find_edge(u, v) < 0) {
                complete = false;
                break;
            }
    if (complete) return {n - 1, true};
    for (int size = 0; size <= std::min(cap, n - 2); ++size) {
        std::vector<char> removed(n, 0);
        if (find_cut(g, size, 0, removed)) return {size, true};
    }
    return {cap + 1, false};
}

}  // namespace genuslab
