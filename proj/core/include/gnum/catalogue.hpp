#pragma once

#include <string>
#include <vector>

#include "gnum/graph.hpp"

namespace gnum {

/// Every iso-class with exactly n vertices (canonical representatives,
/// sorted by certificate). Levels are produced by single-vertex extension
/// of the level below, which reaches every class: deleting the last vertex
/// of any n-vertex graph lands in some (n-1)-class. Levels cache in memory
/// and, when GNUM_CATALOG names a file, on disk. Capped at n = 8.
const std::vector<Graph>& iso_classes(int n);
const std::vector<std::string>& iso_class_certificates(int n);

std::vector<Graph> connected_iso_classes(int n);

} // namespace gnum
