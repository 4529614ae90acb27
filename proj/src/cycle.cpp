#include "genuslab/cycle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace genuslab {

Cycle::Cycle(const Graph& g, std::vector<Dart> darts) : darts_(std::move(darts)) {
    if (darts_.empty()) throw std::invalid_argument("cycle: empty");
    const int n_darts = g.dart_count();
    std::set<int> seen_vertices;
    std::set<int> seen_edges;
    for (size_t i = 0; i < darts_.size(); ++i) {
        Dart d = darts_[i];
        if (d < 0 || d >= n_darts) throw std::invalid_argument("cycle: dart out of range");
        Dart next = darts_[(i + 1) % darts_.size()];
        if (g.head_of(d) != g.vertex_of(next))
            throw std::invalid_argument("cycle: darts do not chain into a closed walk");
        int v = g.vertex_of(d);
        if (!seen_vertices.insert(v).second)
            throw std::invalid_argument("cycle: vertex visited twice");
        if (!seen_edges.insert(edge_of_dart(d)).second)
            throw std::invalid_argument("cycle: edge used twice");
        vertices_.push_back(v);
    }
    if (darts_.size() == 1 && !g.is_loop(edge_of_dart(darts_[0])))
        throw std::invalid_argument("cycle: length-1 cycle must be a loop edge");
}

Cycle Cycle::from_vertices(const Graph& g, const std::vector<int>& verts) {
    if (verts.empty()) throw std::invalid_argument("cycle: empty vertex list");
    std::vector<Dart> darts;
    for (size_t i = 0; i < verts.size(); ++i) {
        int u = verts[i];
        int v = verts[(i + 1) % verts.size()];
        int e = g.find_edge(u, v);
        if (e < 0)
            throw std::invalid_argument("cycle: no edge between vertices " + std::to_string(u) +
                                        " and " + std::to_string(v));
        // Orient the edge's dart to leave u.
        Dart d = (g.vertex_of(static_cast<Dart>(2 * e)) == u) ? static_cast<Dart>(2 * e)
                                                              : static_cast<Dart>(2 * e + 1);
        darts.push_back(d);
    }
    return Cycle(g, std::move(darts));
}

bool Cycle::uses_edge(int e) const {
    for (Dart d : darts_)
        if (edge_of_dart(d) == e) return true;
    return false;
}

bool Cycle::uses_vertex(int v) const {
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

Cycle Cycle::canonical() const {
    size_t best = 0;
    for (size_t i = 1; i < darts_.size(); ++i)
        if (darts_[i] < darts_[best]) best = i;
    Cycle c = *this;
    std::rotate(c.darts_.begin(), c.darts_.begin() + best, c.darts_.end());
    std::rotate(c.vertices_.begin(), c.vertices_.begin() + best, c.vertices_.end());
    return c;
}

bool vertex_disjoint(const Cycle& a, const Cycle& b) {
    for (int v : a.vertices())
        if (b.uses_vertex(v)) return false;
    return true;
}

std::vector<Cycle> simple_cycles(const Graph& g, int max_len) {
    int cap = max_len < 0 ? g.edge_count() : max_len;
    std::set<std::vector<Dart>> keys;
    std::vector<Cycle> out;
    auto record = [&](const std::vector<Dart>& darts) {
        std::vector<Dart> rev;
        for (auto it = darts.rbegin(); it != darts.rend(); ++it) rev.push_back(alpha(*it));
        std::vector<Dart> key =
            std::min(Cycle(g, darts).canonical().darts(), Cycle(g, rev).canonical().darts());
        if (keys.insert(key).second) out.emplace_back(g, key);
    };
    std::vector<char> used(g.vertex_count(), 0);
    std::vector<Dart> path;
    // Cycles are grouped by their smallest vertex s: walk only through
    // vertices above s and close back at s.
    for (int s = 0; s < g.vertex_count(); ++s) {
        std::function<void(int)> grow = [&](int v) {
            int len = static_cast<int>(path.size());
            for (Dart d : g.darts_at(v)) {
                int h = g.head_of(d);
                if (h == s && len + 1 <= cap &&
                    (len != 1 || edge_of_dart(d) != edge_of_dart(path[0]))) {
                    path.push_back(d);
                    record(path);
                    path.pop_back();
                }
                if (h > s && !used[h] && len + 2 <= cap) {
                    used[h] = 1;
                    path.push_back(d);
                    grow(h);
                    path.pop_back();
                    used[h] = 0;
                }
            }
        };
        grow(s);
    }
    return out;
}

}  // namespace genuslab
