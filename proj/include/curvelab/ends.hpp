#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curvelab/surface.hpp"

namespace curvelab {

/// Graph steps per scaffold level in every built-in model, in both the pants
/// graph and the adjacency graph. Surface-level end trees sample balls at
/// this period so that one tree level is one scaffold generation.
inline constexpr int kScaffoldStride = 2;

/// Locally finite graph with marks on the vertices where a truncation
/// continues beyond what is stored.
struct FramedGraph {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> adjacency;
  std::vector<bool> frontier;

  int size() const { return static_cast<int>(labels.size()); }
  /// Throws Error("UnknownVertex").
  int require_vertex(std::string_view label) const;
};

/// Nodes at level k are the live components of the graph minus the ball of
/// radius stride * (k - 1) + 1 around the base; a component is live when it
/// holds a frontier mark. Level 0 is the root (the whole graph).
struct EndTree {
  struct Node {
    int level = 0;
    int parent = -1;
    std::vector<int> vertices;  // sorted
    std::vector<int> children;
  };

  int depth = 0;
  int stride = 1;
  std::vector<Node> nodes;  // nodes[0] is the root
  std::vector<std::vector<int>> levels;  // levels[k] = node ids at level k

  int leaf_count(int level) const { return static_cast<int>(levels.at(level).size()); }
  /// False for compact inputs: no frontier marks at all.
  bool has_ends() const { return depth > 0 && !levels[1].empty(); }
};

/// Ball radius sampled at tree level `level` (>= 1).
int ball_radius(int level, int stride);

/// Throws Error("DepthExceedsTruncation") when the deepest ball contains a
/// frontier mark, i.e. the truncation is too shallow for the query.
EndTree end_tree(const FramedGraph& graph, int base, int depth, int stride = 1);

/// Deepest level for which end_tree succeeds (0 if none or no frontier).
int max_end_depth(const FramedGraph& graph, int base, int stride);

/// Rooted isomorphism, children compared as multisets. Throws
/// Error("DepthMismatch").
bool end_trees_isomorphic(const EndTree& a, const EndTree& b);

/// Pants as vertices; a pants is marked when it holds a frontier slot.
FramedGraph pants_framed_graph(const GluingGraph& g);

/// A(P) as a framed graph; a curve is marked when it shares a pants with a
/// frontier curve.
FramedGraph adjacency_framed_graph(const GluingGraph& g);

EndTree surface_end_tree(const GluingGraph& g, std::string_view base_pants, int depth,
                         int stride = kScaffoldStride);
EndTree adjacency_end_tree(const GluingGraph& g, std::string_view base_curve, int depth,
                           int stride = kScaffoldStride);

/// Interior curve of `pants` used as the A(P) base facing that pants: a
/// self-glued curve if there is one, else a curve leading to a component with
/// no frontier, else the first interior curve.
std::string adjacency_base_for(const GluingGraph& g, std::string_view pants);

struct EndCorrespondence {
  /// pairs[k] maps adjacency-tree node ids to surface-tree node ids at level k.
  std::vector<std::vector<std::pair<int, int>>> pairs;
  EndTree adjacency_tree;
  EndTree surface_tree;
};

/// Sends each component of A(P) minus a ball to the live component of the
/// pants graph minus a ball that contains the pants its curves touch, and
/// verifies a level-preserving, parent-respecting bijection whose matched
/// nodes reach the same frontier curves. Throws Error("BijectionFailure").
EndCorrespondence induced_end_correspondence(const GluingGraph& g, std::string_view base_pants,
                                             int depth, int stride = kScaffoldStride);

/// Smallest truncation depth whose end trees reach `end_depth` levels from
/// the model's root.
int required_truncation_depth(InfiniteModel model, int end_depth, int stride = kScaffoldStride);

}  // namespace curvelab
