#pragma once

#include <cstdio>
#include <string>

namespace geodlab {

/// Decimal rendering with 15 significant digits, the precision used by every
/// text output of the lab.
inline std::string fmt15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

/// 17 significant digits; reads back to the same double.
inline std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace geodlab
