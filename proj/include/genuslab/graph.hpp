#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace genuslab {

// Darts are the half-edges of a graph. Edge i owns darts 2i and 2i+1:
// dart 2i sits at the first endpoint of edge i, dart 2i+1 at the second.
// The edge involution is therefore alpha(d) = d ^ 1 and never needs storage.
using Dart = int32_t;

inline Dart alpha(Dart d) { return d ^ 1; }
inline int edge_of_dart(Dart d) { return d >> 1; }

// Undirected multigraph with loops, fixed vertex/edge numbering.
// Vertices are 0..vertex_count-1, edges keep the order they were given in.
class Graph {
public:
    Graph() : vertex_count_(0) {}
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int dart_count() const { return 2 * edge_count(); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int e) const { return edges_.at(e); }

    // Vertex the dart is attached to (the "tail" of the dart).
    int vertex_of(Dart d) const { return dart_vertex_.at(d); }
    // Vertex at the far end of the dart's edge.
    int head_of(Dart d) const { return dart_vertex_.at(alpha(d)); }

    // Darts attached to v, ascending. Loops contribute both darts.
    const std::vector<Dart>& darts_at(int v) const { return darts_at_.at(v); }
    int degree(int v) const { return static_cast<int>(darts_at_.at(v).size()); }

    bool is_loop(int e) const { return edges_[e].first == edges_[e].second; }
    bool connected() const;

    // Lowest-numbered edge joining u and v, or -1. Used to resolve
    // vertex-sequence cycle input into darts.
    int find_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
    }

private:
    int vertex_count_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> dart_vertex_;
    std::vector<std::vector<Dart>> darts_at_;
};

}  // namespace genuslab
