#pragma once

#include <stdexcept>
#include <string>

namespace curvelab {

// Domain failure carrying a stable machine-readable code (e.g.
// "ComplexityTooLow"). The CLI reports code() verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail);

  const std::string& code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string code_;
  std::string detail_;
};

}  // namespace curvelab
