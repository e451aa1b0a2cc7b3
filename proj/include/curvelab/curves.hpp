#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "curvelab/slope.hpp"
#include "curvelab/surface.hpp"

namespace curvelab {

enum class WindowKind { Torus, Sphere };

std::string_view to_string(WindowKind kind);

/// Embedded S_{1,1} (around a self-glued curve) or S_{0,4} (around a curve
/// joining two distinct pants) whose curves are named by slopes. The center
/// curve has slope (0,1), the dual curve (1,0).
struct Window {
  WindowKind kind = WindowKind::Torus;
  std::string center;                // empty for a free-standing window
  std::vector<std::string> support;  // 1 pants (torus) or 2 (sphere)
  /// Window boundary slots. Torus: the third slot. Sphere: the two other
  /// slots of the first pants, then those of the second.
  std::vector<PantsSlot> holes;
};

/// Free-standing windows for slope arithmetic without a surface.
Window torus_window();
Window sphere_window();

/// Throws Error("UnknownCurve") or Error("InvalidWindow") when the curve's
/// neighbourhood is not an S_{1,1} or S_{0,4}.
Window make_window(const GluingGraph& g, std::string_view center);

/// Windows registered on one surface: any two coincide or have disjoint
/// support.
class WindowAtlas {
 public:
  explicit WindowAtlas(const GluingGraph& g) : graph_(&g) {}

  /// Returns the registered window (existing one if it coincides).
  /// Throws Error("OverlappingWindow").
  const Window& add(std::string_view center);
  const Window* find(std::string_view center) const;
  std::span<const Window> windows() const { return windows_; }

 private:
  const GluingGraph* graph_;
  std::vector<Window> windows_;
};

struct PantsCurveRef {
  std::string id;
  friend auto operator<=>(const PantsCurveRef&, const PantsCurveRef&) = default;
};

struct WindowCurveRef {
  std::string window;  // center curve id
  Slope slope;
  friend auto operator<=>(const WindowCurveRef&, const WindowCurveRef&) = default;
};

/// Closed curve running from one handle to another along a path of A(P) and
/// back. `path` holds the interior curves only.
struct DualChainRef {
  std::string from;
  std::string to;
  std::vector<std::string> path;
  friend auto operator<=>(const DualChainRef&, const DualChainRef&) = default;
};

/// Name of a curve in the global inventory.
class CurveRef {
 public:
  using Value = std::variant<PantsCurveRef, WindowCurveRef, DualChainRef>;

  static CurveRef pants(std::string id);
  /// Slope (0,1) is the center itself and comes back as a pants curve.
  static CurveRef window(std::string center, Slope slope);
  static CurveRef chain(std::string from, std::string to, std::vector<std::string> path);

  /// `pants:ID`, `win:ID:p/q`, `chain:H1:H2:ID,ID,...`. Throws Error("BadRef").
  static CurveRef parse(std::string_view text);
  std::string to_string() const;

  const Value& value() const { return value_; }
  const PantsCurveRef* as_pants() const { return std::get_if<PantsCurveRef>(&value_); }
  const WindowCurveRef* as_window() const { return std::get_if<WindowCurveRef>(&value_); }
  const DualChainRef* as_chain() const { return std::get_if<DualChainRef>(&value_); }

  friend auto operator<=>(const CurveRef&, const CurveRef&) = default;

 private:
  explicit CurveRef(Value v) : value_(std::move(v)) {}
  Value value_;
};

/// nullopt is the explicit Undefined value.
using Intersection = std::optional<std::int64_t>;

/// Torus: |det|. Sphere: 2|det|.
std::int64_t window_intersection(WindowKind kind, Slope a, Slope b);
std::int64_t window_intersection(const Window& w, Slope a, Slope b);

/// Pairwise distinct with pairwise intersection 1. Throws Error("NotTorusWindow").
bool is_triple(const Window& w, Slope a, Slope b, Slope c);

/// For i(a, b) >= 2 in a torus window: (g, g') with {a, g, g'} a triple,
/// i(a, b) = i(b, g) + i(b, g'), both summands positive, g' = twist of g
/// along a. Throws Error("NotTorusWindow") or Error("IntersectionTooSmall").
std::pair<Slope, Slope> triple_completion(const Window& w, Slope a, Slope b);

/// All slopes within `search_bound` meeting both a and b twice, in a sphere
/// window with i(a, b) = 2. The bound must cover the coordinate sums of a and
/// b. Throws Error("NotSphereWindow"), Error("WrongIntersection"),
/// Error("SearchBoundTooSmall"), Error("CountAnomaly").
std::vector<Slope> sch04_common_neighbors(const Window& w, Slope a, Slope b,
                                          std::int64_t search_bound);

/// s + direction * <s, along> * along. In a sphere window one step is a half
/// twist; two steps are the Dehn twist.
Slope twist(const Window& w, Slope along, Slope s, int direction);

/// Throws Error("UnknownCurve"), Error("InvalidWindow") or Error("InvalidChain").
void validate_ref(const GluingGraph& g, const CurveRef& ref);

/// Pants the curve passes through.
std::vector<std::string> support(const GluingGraph& g, const CurveRef& ref);

/// Nonseparating in the (truncated) surface; frontier counts as boundary.
bool is_nonseparating(const GluingGraph& g, const CurveRef& ref);

/// Exact intersection where defined:
///   pants/pants 0; center vs its window curve |p| (torus) or 2|p| (sphere);
///   pants vs other window curves 0; same window: window_intersection;
///   disjoint windows 0; chain vs pants: 1 at an endpoint handle, 2 on the
///   path interior, else 0; chain vs window with disjoint support 0.
/// Chain/chain and overlapping-support pairs are Undefined.
Intersection global_intersection(const GluingGraph& g, const CurveRef& a, const CurveRef& b);

struct DTVector {
  std::vector<std::pair<CurveRef, std::int64_t>> entries;

  std::vector<std::int64_t> values() const;
};

/// Throws Error("UndefinedPair") if any pair is outside the defined domain.
DTVector dt_vector(const GluingGraph& g, const CurveRef& c, std::span<const CurveRef> coords);

/// First pair of distinct slopes within `bound` sharing intersection numbers
/// against (0,1), (1,0), (1,1), or nullopt when the map is injective.
std::optional<std::pair<Slope, Slope>> dt_uniqueness_check(WindowKind kind, std::int64_t bound);

/// Self-glued interior curves, in curve order.
std::vector<std::string> handle_curves(const GluingGraph& g);

/// Dual chain along a shortest A(P) path between two handle curves.
/// Throws Error("InvalidChain") when they are equal or not handles.
CurveRef shortest_dual_chain(const GluingGraph& g, std::string_view from, std::string_view to);

}  // namespace curvelab
