#include "polyprod/report.hpp"

#include <cstdio>
#include <cstdlib>

namespace polyprod {

std::string format_float(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double pin_float(double v) {
  return std::strtod(format_float(v).c_str(), nullptr);
}

u64 fnv1a64(const void* data, std::size_t len) {
  const unsigned char* bytes = static_cast<const unsigned char*>(data);
  u64 h = 14695981039346656037ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= bytes[i];
    h *= 1099511628211ull;
  }
  return h;
}

u64 fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

}  // namespace polyprod
