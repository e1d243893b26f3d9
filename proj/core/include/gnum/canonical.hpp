#pragma once

#include <string>
#include <vector>

#include "gnum/graph.hpp"

namespace gnum {

/// Iso-class certificate plus one relabeling that realizes it.
/// Certificates are byte strings: 4-byte big-endian vertex count, then the
/// upper-triangle adjacency bits of the canonically relabeled graph. Equal
/// certificates <=> isomorphic graphs; lexicographic certificate order is
/// the deterministic order used for component lists and integer terms.
struct CanonicalForm {
  std::string certificate;
  std::vector<int> relabeling; // old vertex index -> canonical index
};

CanonicalForm canonical_form(const Graph& g);
std::string certificate(const Graph& g);
Graph canonical_copy(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

/// Short display tag for unnamed iso-classes.
std::string certificate_tag(const std::string& cert);

} // namespace gnum
