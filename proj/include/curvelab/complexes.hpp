#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "curvelab/curves.hpp"
#include "curvelab/surface.hpp"

namespace curvelab {

/// Curve complex C(S) and nonseparating complex N(S) use disjointness;
/// the Schmutz graph G(S) uses unit intersection on nonseparating curves.
enum class ComplexKind { Curve, Nonseparating, Schmutz };

std::string_view to_string(ComplexKind kind);
/// "c", "n" or "g". Throws Error("BadMode").
ComplexKind parse_complex_kind(std::string_view text);

struct LocalCurveGraph {
  ComplexKind kind = ComplexKind::Curve;
  std::vector<CurveRef> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> undefined_pairs;
};

/// Finite piece of C(S), N(S) or G(S) on an inventory. Pairs whose
/// intersection is Undefined are recorded, never turned into edges.
LocalCurveGraph local_graph(const GluingGraph& g, std::span<const CurveRef> inventory,
                            ComplexKind kind);

/// Interior pants curve outside the supports of both inputs, with
/// intersection 0 against each; nonseparating ones preferred. Throws
/// Error("NoRoom").
CurveRef disjointness_witness(const GluingGraph& g, const CurveRef& a, const CurveRef& b);

/// [h1, D(h1, gamma), gamma, D(gamma, h2), h2] through a third handle gamma,
/// every step meeting once. Equal endpoints give [h1]. Throws Error("NoRoom")
/// without a third handle and Error("NotHandle") for non-handle inputs.
std::vector<CurveRef> schmutz_path(const GluingGraph& g, const CurveRef& h1, const CurveRef& h2);

/// Interior pants curves, torus-window curves at every handle and sphere-window
/// curves on a greedy set of pairwise disjoint sphere windows (slopes with
/// |p|, |q| <= slope_bound), and a shortest dual chain between each pair of
/// handles. Windows centered at `skip_center` are left out.
std::vector<CurveRef> standard_inventory(const GluingGraph& g, std::int64_t slope_bound,
                                         std::string_view skip_center = {});

}  // namespace curvelab
