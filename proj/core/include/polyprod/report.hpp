#ifndef POLYPROD_REPORT_HPP
#define POLYPROD_REPORT_HPP

#include <cstddef>
#include <string>

#include "polyprod/bigint.hpp"

namespace polyprod {

/// Rounds through a 12-significant-digit decimal representation so identical
/// runs serialize byte-identically regardless of accumulation order noise.
double pin_float(double v);

/// The same 12-significant-digit text, for CSV cells.
std::string format_float(double v);

/// FNV-1a, used for content-addressed cache names and payload checksums.
u64 fnv1a64(const void* data, std::size_t len);
u64 fnv1a64(const std::string& s);

}  // namespace polyprod

#endif
