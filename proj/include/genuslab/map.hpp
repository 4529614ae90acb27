#pragma once

#include <string>
#include <vector>

#include "genuslab/graph.hpp"

namespace genuslab {

// An orientable embedding of a connected graph, given as a rotation system:
// sigma cyclically permutes the darts at each vertex (the counterclockwise
// order around it). Faces are the orbits of phi = sigma . alpha, and the
// genus of the embedding surface falls out of Euler's formula.
class CombinatorialMap {
public:
    CombinatorialMap() = default;

    // rotations[v] lists the darts at v in cyclic order; it may start at any
    // dart of v but must be a permutation of the darts attached to v.
    static CombinatorialMap from_rotations(Graph graph,
                                           const std::vector<std::vector<Dart>>& rotations);

    // sigma given directly as a successor array over all darts.
    static CombinatorialMap from_sigma(Graph graph, std::vector<Dart> sigma);

    const Graph& graph() const { return graph_; }
    const std::vector<Dart>& sigma() const { return sigma_; }
    Dart next(Dart d) const { return sigma_[d]; }
    Dart prev(Dart d) const { return sigma_inv_[d]; }
    Dart face_next(Dart d) const { return sigma_[alpha(d)]; }

    // Cyclic rotation at v, rotated to start at v's smallest dart.
    std::vector<Dart> rotation_of(int v) const;

    // Face orbits in canonical form: each orbit starts at its smallest dart,
    // orbits sorted by that dart. Stable across platforms.
    const std::vector<std::vector<Dart>>& faces() const;
    int face_count() const { return static_cast<int>(faces().size()); }
    // Index into faces() of the orbit containing d.
    int face_of(Dart d) const;

    int genus() const;

    // Mirror image: every rotation reversed. Same genus, opposite orientation.
    CombinatorialMap reversed() const;

    bool operator==(const CombinatorialMap& o) const {
        return graph_ == o.graph_ && sigma_ == o.sigma_;
    }

private:
    CombinatorialMap(Graph graph, std::vector<Dart> sigma);
    void trace_faces() const;

    Graph graph_;
    std::vector<Dart> sigma_;
    std::vector<Dart> sigma_inv_;
    mutable std::vector<std::vector<Dart>> faces_;
    mutable std::vector<int> face_of_;
    mutable bool faces_traced_ = false;
};

// Validation shared by the factory functions and the .cmap parser.
// Returns an empty string when (graph, sigma) is a well-formed map on a
// connected graph, otherwise a human-readable complaint.
std::string validate_map(const Graph& graph, const std::vector<Dart>& sigma);

}  // namespace genuslab
