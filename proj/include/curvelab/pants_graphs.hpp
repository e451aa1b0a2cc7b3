#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curvelab/surface.hpp"

namespace curvelab {

/// Simple graph on the interior curves of a decomposition; two curves are
/// adjacent when they bound a common pair of pants.
struct AdjacencyGraph {
  std::vector<std::string> vertices;
  /// Index pairs (i < j), sorted lexicographically.
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> neighbors;

  std::optional<int> index_of(std::string_view id) const;
  int degree(int v) const { return static_cast<int>(neighbors[v].size()); }
};

AdjacencyGraph adjacency_graph(const GluingGraph& g);

enum class CurveClass { Nonseparating, OuterSeparating, NonOuterSeparating };

std::string_view to_string(CurveClass c);

/// Frontier curves count as boundary when deciding sidedness.
/// Throws Error("UnknownCurve") for unknown or frontier curves.
CurveClass classify_curve(const GluingGraph& g, std::string_view curve);

/// Classes of every interior curve, in one bridge sweep.
std::map<std::string, CurveClass> classify_all(const GluingGraph& g);

/// Articulation points, in vertex order. Throws Error("DisconnectedGraph").
std::vector<std::string> cut_vertices(const AdjacencyGraph& a);

/// Unordered pairs of distinct nonseparating curves that bound a pants
/// together with a boundary slot of S. Each pair listed once, in vertex order.
std::vector<std::pair<std::string, std::string>> peripheral_pairs(const GluingGraph& g);

struct DegreeViolation {
  std::string curve;
  int degree = 0;
};

/// Outer separating curves must have at most two neighbours in A(P).
std::vector<DegreeViolation> outer_degree_check(const GluingGraph& g);
std::vector<DegreeViolation> outer_degree_check(const AdjacencyGraph& a,
                                                const std::map<std::string, CurveClass>& classes);

/// Random valid gluing graph with 1..max_pants pants: uniform slot matching
/// with rejection until connected. A few unmatched slots become boundary or
/// frontier. Same seed, same graph.
GluingGraph random_gluing_graph(std::uint64_t seed, int max_pants);

}  // namespace curvelab
