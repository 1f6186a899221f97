#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace pslab {

inline constexpr const char* kVersion = "0.1.0";

// Fixed 12-significant-digit rendering (lowercase scientific where needed),
// so identical runs produce byte-identical CSV.
inline std::string fmt_g12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string fmt_p(double p) {
  if (std::isinf(p)) return "inf";
  return fmt_g12(p);
}

inline void write_output_header(std::ostream& os, const std::string& params) {
  os << "# pslab " << kVersion << "\n";
  os << "# enum-order: pgl2-lex-abcd/v1\n";
  os << "# " << params << "\n";
}

}  // namespace pslab
