#pragma once

#include <cstdio>
#include <string>

namespace ttlearn {

// %.17g rendering; 17 significant digits round-trip IEEE doubles exactly.
inline std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace ttlearn
