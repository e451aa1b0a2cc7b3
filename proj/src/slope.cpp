#include "curvelab/slope.hpp"

#include <charconv>
#include <numeric>

#include "curvelab/error.hpp"

namespace curvelab {

std::string Slope::to_string() const { return std::to_string(p_) + "/" + std::to_string(q_); }

Slope make_slope(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw Error("ZeroSlope", "(0,0) is not a slope");
  const std::int64_t d = std::gcd(p, q);
  p /= d;
  q /= d;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return Slope(p, q);
}

Slope parse_slope(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) throw Error("BadSlope", "expected p/q, got " + std::string(text));
  auto parse = [&](std::string_view part) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw Error("BadSlope", "expected p/q, got " + std::string(text));
    }
    return v;
  };
  return make_slope(parse(text.substr(0, slash)), parse(text.substr(slash + 1)));
}

std::int64_t pairing(Slope a, Slope b) { return a.p() * b.q() - a.q() * b.p(); }

std::vector<Slope> slopes_within(std::int64_t bound) {
  std::vector<Slope> out;
  if (bound < 1) return out;
  out.push_back(make_slope(1, 0));
  for (std::int64_t q = 1; q <= bound; ++q) {
    for (std::int64_t p = -bound; p <= bound; ++p) {
      if (std::gcd(p, q) == 1) out.push_back(make_slope(p, q));
    }
  }
  return out;
}

}  // namespace curvelab
