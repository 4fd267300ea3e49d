#pragma once

#include <sstream>
#include <string>

namespace depval::detail {

// Compact number for diagnostics ("4", "10.5", "1e-09").
inline std::string describe(double value) {
  std::ostringstream out;
  out.precision(10);
  out << value;
  return out.str();
}

}  // namespace depval::detail
