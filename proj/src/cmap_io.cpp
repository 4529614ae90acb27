#include "genuslab/cmap_io.hpp"

#include <fstream>
#include <sstream>

namespace genuslab {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw std::invalid_argument("cmap: line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

CombinatorialMap read_cmap(std::istream& in) {
    int n_vertices = -1;
    int n_edges = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<char> edge_seen;
    std::vector<std::vector<Dart>> rotations;
    std::vector<char> rotation_seen;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string keyword;
        if (!(fields >> keyword) || keyword[0] == '#') continue;
        if (keyword == "vertices") {
            if (n_vertices != -1) fail(line_no, "duplicate vertices line");
            if (!(fields >> n_vertices) || n_vertices < 0) fail(line_no, "bad vertex count");
            rotations.assign(n_vertices, {});
            rotation_seen.assign(n_vertices, 0);
        } else if (keyword == "edges") {
            if (n_edges != -1) fail(line_no, "duplicate edges line");
            if (!(fields >> n_edges) || n_edges < 0) fail(line_no, "bad edge count");
            edges.assign(n_edges, {-1, -1});
            edge_seen.assign(n_edges, 0);
        } else if (keyword == "edge") {
            if (n_edges < 0) fail(line_no, "edge before edges count");
            int i, u, v;
            if (!(fields >> i >> u >> v)) fail(line_no, "edge needs: index u v");
            if (i < 0 || i >= n_edges) fail(line_no, "edge index out of range");
            if (edge_seen[i]) fail(line_no, "duplicate edge " + std::to_string(i));
            edge_seen[i] = 1;
            edges[i] = {u, v};
        } else if (keyword == "rotation") {
            if (n_vertices < 0) fail(line_no, "rotation before vertices count");
            std::string vtok;
            if (!(fields >> vtok) || vtok.back() != ':') fail(line_no, "rotation needs: <v>:");
            int v;
            try {
                v = std::stoi(vtok.substr(0, vtok.size() - 1));
            } catch (...) {
                fail(line_no, "bad rotation vertex");
            }
            if (v < 0 || v >= n_vertices) fail(line_no, "rotation vertex out of range");
            if (rotation_seen[v]) fail(line_no, "duplicate rotation for vertex " + std::to_string(v));
            rotation_seen[v] = 1;
            Dart d;
            while (fields >> d) rotations[v].push_back(d);
            if (!fields.eof()) fail(line_no, "bad dart in rotation");
        } else {
            fail(line_no, "unknown keyword '" + keyword + "'");
        }
    }
    if (n_vertices < 0) throw std::invalid_argument("cmap: missing vertices line");
    if (n_edges < 0) throw std::invalid_argument("cmap: missing edges line");
    for (int i = 0; i < n_edges; ++i)
        if (!edge_seen[i]) throw std::invalid_argument("cmap: missing edge " + std::to_string(i));
    Graph graph(n_vertices, std::move(edges));
    for (int v = 0; v < n_vertices; ++v)
        if (!rotation_seen[v] && graph.degree(v) > 0)
            throw std::invalid_argument("cmap: missing rotation for vertex " + std::to_string(v));
    return CombinatorialMap::from_rotations(std::move(graph), rotations);
}

CombinatorialMap read_cmap_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cmap: cannot open " + path);
    return read_cmap(in);
}

std::string write_cmap(const CombinatorialMap& map) {
    const Graph& g = map.graph();
    std::ostringstream out;
    out << "vertices " << g.vertex_count() << "\n";
    out << "edges " << g.edge_count() << "\n";
    for (int e = 0; e < g.edge_count(); ++e)
        out << "edge " << e << " " << g.edge(e).first << " " << g.edge(e).second << "\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) continue;
        out << "rotation " << v << ":";
        for (Dart d : map.rotation_of(v)) out << " " << d;
        out << "\n";
    }
    return out.str();
}

void write_cmap_file(const CombinatorialMap& map, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cmap: cannot write " + path);
    out << write_cmap(map);
}

}  // namespace genuslab
