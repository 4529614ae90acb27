#include "genuslab/graph.hpp"

#include <algorithm>
#include <queue>

namespace genuslab {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) throw std::invalid_argument("graph: negative vertex count");
    dart_vertex_.resize(2 * edges_.size());
    darts_at_.assign(vertex_count_, {});
    for (size_t e = 0; e < edges_.size(); ++e) {
        auto [u, v] = edges_[e];
        if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_)
            throw std::invalid_argument("graph: edge endpoint out of range");
        dart_vertex_[2 * e] = u;
        dart_vertex_[2 * e + 1] = v;
        darts_at_[u].push_back(static_cast<Dart>(2 * e));
        darts_at_[v].push_back(static_cast<Dart>(2 * e + 1));
    }
    // darts are appended in ascending edge order, and 2e < 2e+1, so each
    // darts_at_ list is already sorted ascending.
}

bool Graph::connected() const {
    if (vertex_count_ <= 1) return true;
    std::vector<char> seen(vertex_count_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (Dart d : darts_at_[v]) {
            int w = head_of(d);
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == vertex_count_;
}

int Graph::find_edge(int u, int v) const {
    if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_) return -1;
    for (Dart d : darts_at_[u]) {
        if (head_of(d) == v) return edge_of_dart(d);
    }
    return -1;
}

}  // namespace genuslab
