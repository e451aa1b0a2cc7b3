#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace curvelab {

/// Coprime integer pair naming a curve in a one-holed torus or four-holed
/// sphere window. Normalized so that q > 0, or (p, q) = (1, 0).
class Slope {
 public:
  /// The window's center curve, (0, 1).
  Slope() = default;

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  std::string to_string() const;

  friend auto operator<=>(const Slope&, const Slope&) = default;

 private:
  friend Slope make_slope(std::int64_t p, std::int64_t q);
  Slope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}

  std::int64_t p_ = 0;
  std::int64_t q_ = 1;
};

/// Reduces and sign-normalizes. Throws Error("ZeroSlope") for (0, 0).
Slope make_slope(std::int64_t p, std::int64_t q);

/// Parses "p/q". Throws Error("BadSlope") or Error("ZeroSlope").
Slope parse_slope(std::string_view text);

/// Determinant pairing p1*q2 - q1*p2. Sign depends on representatives, so
/// only its absolute value is an invariant of the unoriented curves.
std::int64_t pairing(Slope a, Slope b);

/// Every normalized slope with |p|, |q| <= bound, ordered by (q, p).
std::vector<Slope> slopes_within(std::int64_t bound);

}  // namespace curvelab
