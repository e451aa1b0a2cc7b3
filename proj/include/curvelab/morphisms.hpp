#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curvelab/curves.hpp"
#include "curvelab/slope.hpp"
#include "curvelab/surface.hpp"

namespace curvelab {

/// Finite association list between curve inventories of two surfaces.
class VertexMap {
 public:
  using Entry = std::pair<CurveRef, CurveRef>;

  /// Validates every ref on its surface. Throws Error("NotInjective").
  VertexMap(std::shared_ptr<const GluingGraph> source, std::shared_ptr<const GluingGraph> target,
            std::vector<Entry> entries, std::string note);

  const GluingGraph& source() const { return *source_; }
  const GluingGraph& target() const { return *target_; }
  std::span<const Entry> entries() const { return entries_; }
  const std::string& note() const { return note_; }

  bool in_domain(const CurveRef& ref) const;
  bool in_image(const CurveRef& ref) const;
  /// Throws Error("NotInDomain").
  const CurveRef& operator()(const CurveRef& ref) const;

 private:
  std::shared_ptr<const GluingGraph> source_;
  std::shared_ptr<const GluingGraph> target_;
  std::vector<Entry> entries_;
  std::string note_;
};

using RefPair = std::pair<CurveRef, CurveRef>;

struct SuperinjectivityViolation {
  CurveRef a;
  CurveRef b;
  std::int64_t source_i = 0;
  std::int64_t target_i = 0;
};

struct SuperinjectivityReport {
  int checked = 0;
  /// Pairs with an Undefined intersection on either side.
  std::vector<RefPair> skipped;
  std::vector<SuperinjectivityViolation> violations;
  /// Defined pairs whose intersection number changed (a violation or not).
  int changed = 0;

  bool clean() const { return violations.empty(); }
};

/// Checks i != 0 => i(image) != 0 and i = 0 => i(image) = 0 on each pair.
/// Throws Error("NotInDomain").
SuperinjectivityReport check_superinjective(const VertexMap& m, std::span<const RefPair> pairs);

/// Up to `count` distinct domain pairs with defined source intersection,
/// chosen by a seeded shuffle.
std::vector<RefPair> sample_defined_pairs(const VertexMap& m, int count, std::uint64_t seed);

enum class Gadget { S12, LadderArm, CantorStub };

std::string_view to_string(Gadget gadget);
/// "s12", "ladder", "cantor". Throws Error("UnknownGadget").
Gadget parse_gadget(std::string_view text);

struct CutGlueResult {
  GluingGraph target;
  VertexMap map;
  /// Target curves no domain curve maps to.
  std::vector<CurveRef> witnesses;
};

/// Cuts the separating curve `alpha` and splices in a gadget. The two new
/// splice curves `<alpha>.sx` and `<alpha>.sy` take the two former ends of
/// alpha; alpha itself maps to `<alpha>.sx`. The map is defined on
/// standard_inventory(g, slope_bound) minus windows centered at alpha: other
/// curves keep their identifiers and dual chains crossing alpha cross both
/// splice curves instead. Gadget arms run `arm_depth` handle blocks (0 picks
/// the pants count of g). Throws Error("NotSeparating").
CutGlueResult cut_and_glue(const GluingGraph& g, std::string_view alpha, Gadget gadget = Gadget::S12,
                           std::int64_t slope_bound = 2, int arm_depth = 0);

/// Boundary counts agree, both finite with equal genus or both infinite, and
/// (when infinite) the depth-`depth` surface end trees from each first pants
/// are isomorphic. Throws Error("DepthExceedsTruncation").
bool surfaces_homeomorphic(const GluingGraph& g1, const GluingGraph& g2, int depth);

/// Largest end-tree depth available from the first pants of both surfaces.
int common_end_depth(const GluingGraph& g1, const GluingGraph& g2);

struct Counterexample {
  GluingGraph source;
  CutGlueResult result;
  int depth = 0;  // end-tree depth at which the surfaces are compared
};

/// Loch Ness truncation cut at its first chain curve and reglued with a gadget
/// that changes the end space. Throws Error("GadgetTooSmall") for S12, whose
/// splice leaves the surface type unchanged.
Counterexample nonhomeomorphic_counterexample(Gadget gadget, int end_depth = 2);

/// Window curves of one window (slopes within `bound`) sent to their image
/// under `power` twists along `along`.
VertexMap twist_map(const GluingGraph& g, std::string_view center, Slope along, int power,
                    std::int64_t bound);

}  // namespace curvelab
