#include "genuslab/map.hpp"

#include <algorithm>
#include <cassert>

namespace genuslab {

std::string validate_map(const Graph& graph, const std::vector<Dart>& sigma) {
    const int n_darts = graph.dart_count();
    if (static_cast<int>(sigma.size()) != n_darts)
        return "sigma has " + std::to_string(sigma.size()) + " entries, expected " +
               std::to_string(n_darts);
    std::vector<char> hit(n_darts, 0);
    for (Dart d = 0; d < n_darts; ++d) {
        Dart s = sigma[d];
        if (s < 0 || s >= n_darts) return "sigma value out of range at dart " + std::to_string(d);
        if (graph.vertex_of(s) != graph.vertex_of(d))
            return "sigma moves dart " + std::to_string(d) + " to a different vertex";
        if (hit[s]) return "sigma is not a bijection (dart " + std::to_string(s) + " hit twice)";
        hit[s] = 1;
    }
    // Per-vertex single-orbit check: starting at each vertex's first dart,
    // sigma must visit every dart of that vertex before closing.
    for (int v = 0; v < graph.vertex_count(); ++v) {
        const auto& at = graph.darts_at(v);
        if (at.empty()) continue;
        Dart start = at.front();
        int steps = 0;
        Dart d = start;
        do {
            d = sigma[d];
            ++steps;
            if (steps > static_cast<int>(at.size()))
                return "rotation at vertex " + std::to_string(v) + " splits into several cycles";
        } while (d != start);
        if (steps != static_cast<int>(at.size()))
            return "rotation at vertex " + std::to_string(v) + " splits into several cycles";
    }
    if (!graph.connected()) return "graph is not connected";
    return {};
}

CombinatorialMap::CombinatorialMap(Graph graph, std::vector<Dart> sigma)
    : graph_(std::move(graph)), sigma_(std::move(sigma)) {
    sigma_inv_.resize(sigma_.size());
    for (Dart d = 0; d < static_cast<Dart>(sigma_.size()); ++d) sigma_inv_[sigma_[d]] = d;
}

CombinatorialMap CombinatorialMap::from_sigma(Graph graph, std::vector<Dart> sigma) {
    std::string err = validate_map(graph, sigma);
    if (!err.empty()) throw std::invalid_argument("map: " + err);
    return CombinatorialMap(std::move(graph), std::move(sigma));
}

CombinatorialMap CombinatorialMap::from_rotations(Graph graph,
                                                  const std::vector<std::vector<Dart>>& rotations) {
    if (static_cast<int>(rotations.size()) != graph.vertex_count())
        throw std::invalid_argument("map: one rotation per vertex required");
    std::vector<Dart> sigma(graph.dart_count(), -1);
    for (int v = 0; v < graph.vertex_count(); ++v) {
        const auto& rot = rotations[v];
        std::vector<Dart> sorted = rot;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != graph.darts_at(v))
            throw std::invalid_argument("map: rotation at vertex " + std::to_string(v) +
                                        " is not a permutation of its darts");
        for (size_t i = 0; i < rot.size(); ++i) sigma[rot[i]] = rot[(i + 1) % rot.size()];
    }
    std::string err = validate_map(graph, sigma);
    if (!err.empty()) throw std::invalid_argument("map: " + err);
    return CombinatorialMap(std::move(graph), std::move(sigma));
}

std::vector<Dart> CombinatorialMap::rotation_of(int v) const {
    const auto& at = graph_.darts_at(v);
    std::vector<Dart> rot;
    rot.reserve(at.size());
    if (at.empty()) return rot;
    Dart d = at.front();
    do {
        rot.push_back(d);
        d = sigma_[d];
    } while (d != at.front());
    return rot;
}

void CombinatorialMap::trace_faces() const {
    if (faces_traced_) return;
    const int n = static_cast<int>(sigma_.size());
    face_of_.assign(n, -1);
    faces_.clear();
    for (Dart d0 = 0; d0 < n; ++d0) {
        if (face_of_[d0] != -1) continue;
        // d0 is the smallest dart of its orbit: orbits are discovered in
        // ascending dart order and recorded starting at their discovery dart.
        std::vector<Dart> orbit;
        Dart d = d0;
        int id = static_cast<int>(faces_.size());
        do {
            face_of_[d] = id;
            orbit.push_back(d);
            d = sigma_[alpha(d)];
        } while (d != d0);
        faces_.push_back(std::move(orbit));
    }
    faces_traced_ = true;
}

const std::vector<std::vector<Dart>>& CombinatorialMap::faces() const {
    trace_faces();
    return faces_;
}

int CombinatorialMap::face_of(Dart d) const {
    trace_faces();
    return face_of_.at(d);
}

int CombinatorialMap::genus() const {
    int chi = graph_.vertex_count() - graph_.edge_count() + face_count();
    assert((2 - chi) % 2 == 0 && "Euler characteristic of an orientable map must be even");
    return (2 - chi) / 2;
}

CombinatorialMap CombinatorialMap::reversed() const {
    return CombinatorialMap(graph_, sigma_inv_);
}

}  // namespace genuslab
