#pragma once

#include <iosfwd>
#include <string>

#include "genuslab/map.hpp"

namespace genuslab {

// Text serialization of a map:
//
//   vertices N
//   edges M
//   edge <i> <u> <v>            one line per edge, i ascending from 0
//   rotation <v>: <d0> <d1> ... one line per vertex, v ascending from 0
//
// Blank lines and lines starting with '#' are skipped. The writer emits each
// rotation starting at the vertex's smallest dart, so output is canonical:
// equal maps serialize to identical bytes.
CombinatorialMap read_cmap(std::istream& in);
CombinatorialMap read_cmap_file(const std::string& path);
std::string write_cmap(const CombinatorialMap& map);
void write_cmap_file(const CombinatorialMap& map, const std::string& path);

}  // namespace genuslab
