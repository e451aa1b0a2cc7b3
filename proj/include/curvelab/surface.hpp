#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace curvelab {

/// One of the three boundary slots of a pair of pants.
struct PantsSlot {
  std::string pants;
  int slot = 0;

  friend auto operator<=>(const PantsSlot&, const PantsSlot&) = default;
};

/// A decomposition curve. Interior curves glue two slots (possibly of the
/// same pants); a frontier curve of a truncation has a single end.
struct Curve {
  std::string id;
  std::vector<PantsSlot> ends;

  friend bool operator==(const Curve&, const Curve&) = default;
};

/// Pants-gluing graph: nodes are pants, edges are curves. Encodes a surface
/// together with a pants decomposition of it.
struct GluingGraph {
  std::vector<std::string> pants;
  std::vector<Curve> curves;
  std::vector<PantsSlot> boundary;
  std::vector<std::string> frontier;

  friend bool operator==(const GluingGraph&, const GluingGraph&) = default;
};

struct SurfaceSignature {
  int genus = 0;
  int boundary_count = 0;

  friend bool operator==(const SurfaceSignature&, const SurfaceSignature&) = default;
};

enum class InfiniteModel { LochNess, Ladder, CantorTree };

std::string_view to_string(InfiniteModel model);
/// Accepts "loch_ness", "ladder", "cantor_tree". Throws Error("UnknownModel").
InfiniteModel parse_model(std::string_view name);

/// Canonical linear-chain decomposition of the compact surface S_{genus,boundary}.
/// Throws Error("ComplexityTooLow") when 3g - 3 + b < 1.
GluingGraph build_finite_surface(int genus, int boundary);

/// Depth-`depth` truncation of an infinite-genus model. Every scaffold segment
/// carries one handle block, and depth d is an induced subgraph of depth d + 1
/// with identical identifiers.
///
///   loch_ness   : d handle blocks in a chain, 1 frontier curve
///   ladder      : central handle block plus d - 1 segments per arm, 2 frontier curves
///   cantor_tree : binary scaffold of height d, 2^d frontier curves
GluingGraph build_truncation(InfiniteModel model, int depth);

/// Genus from the Euler characteristic -|pants| = 2 - 2g - b, counting
/// frontier curves as boundary. Throws Error("InvalidSurface") for graphs
/// failing validate() and Error("NonIntegralGenus") if the count is off.
SurfaceSignature signature(const GluingGraph& g);

enum class ViolationKind {
  SlotCountError,
  ConnectivityError,
  DuplicateId,
  UnknownPants,
  FrontierError,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

/// Empty result means the graph is well formed.
std::vector<Violation> validate(const GluingGraph& g);

/// Throws Error("InvalidSurface") listing the first violation.
void require_valid(const GluingGraph& g);

/// Integer-indexed read-only view over a valid GluingGraph. Holds a
/// reference; the graph must outlive the index.
class SurfaceIndex {
 public:
  enum class SlotUse { Empty, Curve, Boundary, Frontier };

  struct Occupant {
    SlotUse use = SlotUse::Empty;
    int curve = -1;
  };

  struct Edge {
    int to;
    int curve;
  };

  explicit SurfaceIndex(const GluingGraph& g);

  const GluingGraph& graph() const { return *graph_; }
  int pants_count() const { return static_cast<int>(graph_->pants.size()); }
  int curve_count() const { return static_cast<int>(graph_->curves.size()); }

  std::optional<int> pants_index(std::string_view id) const;
  std::optional<int> curve_index(std::string_view id) const;
  /// Throws Error("UnknownCurve").
  int require_curve(std::string_view id) const;
  /// Throws Error("UnknownPants").
  int require_pants(std::string_view id) const;

  const std::string& pants_id(int p) const { return graph_->pants[p]; }
  const std::string& curve_id(int c) const { return graph_->curves[c].id; }

  const std::array<Occupant, 3>& slots(int pants) const { return slots_[pants]; }
  bool is_frontier(int curve) const { return frontier_[curve]; }
  bool is_self_glued(int curve) const;
  /// Pants on either side; second is -1 for a frontier curve.
  std::pair<int, int> curve_pants(int curve) const { return curve_pants_[curve]; }

  /// Pants-node multigraph over interior curves; self-gluings appear once.
  const std::vector<std::vector<Edge>>& pants_adjacency() const { return adjacency_; }

 private:
  const GluingGraph* graph_;
  std::unordered_map<std::string, int> pants_lookup_;
  std::unordered_map<std::string, int> curve_lookup_;
  std::vector<std::array<Occupant, 3>> slots_;
  std::vector<bool> frontier_;
  std::vector<std::pair<int, int>> curve_pants_;
  std::vector<std::vector<Edge>> adjacency_;
};

}  // namespace curvelab
