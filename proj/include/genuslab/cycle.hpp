#pragma once

#include <vector>

#include "genuslab/graph.hpp"

namespace genuslab {

// A simple closed walk, stored as the darts traversed in order: the head of
// darts[i] is the tail of darts[i+1] (cyclically). "Simple" means no vertex
// repeats, so edges cannot repeat either, except that a single loop edge is
// a valid cycle of length 1.
class Cycle {
public:
    explicit Cycle(const Graph& g, std::vector<Dart> darts);

    // Resolve a vertex sequence to darts, picking the lowest-numbered edge
    // between consecutive vertices. A single vertex means a loop at it.
    static Cycle from_vertices(const Graph& g, const std::vector<int>& verts);

    const std::vector<Dart>& darts() const { return darts_; }
    const std::vector<int>& vertices() const { return vertices_; }
    int length() const { return static_cast<int>(darts_.size()); }
    bool uses_edge(int e) const;
    bool uses_vertex(int v) const;

    // Canonical form: rotated to start at the smallest dart.
    Cycle canonical() const;

    bool operator==(const Cycle& o) const { return darts_ == o.darts_; }

private:
    std::vector<Dart> darts_;
    std::vector<int> vertices_;  // vertices_[i] = tail of darts_[i]
};

bool vertex_disjoint(const Cycle& a, const Cycle& b);

// Every simple cycle of length <= max_len (no bound when max_len < 0), each
// listed once regardless of starting point or orientation. Loops and pairs
// of parallel edges count as cycles of length 1 and 2.
std::vector<Cycle> simple_cycles(const Graph& g, int max_len = -1);

}  // namespace genuslab
