#include "curvelab/error.hpp"

#include <utility>

namespace curvelab {

Error::Error(std::string code, const std::string& detail)
    : std::runtime_error(code + ": " + detail),
      code_(std::move(code)),
      detail_(detail) {}

}  // namespace curvelab
