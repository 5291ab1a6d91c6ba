#include "subcluster/common.hpp"

#include <sstream>

namespace subcluster {

std::string set_to_string(const ElementSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << s[i];
  }
  out << '}';
  return out.str();
}

long long ceil_fraction(double t, long long q) {
  const double x = t * static_cast<double>(q);
  const double nearest = std::round(x);
  if (std::abs(x - nearest) < 1e-9 * std::max(1.0, std::abs(x))) {
    return static_cast<long long>(nearest);
  }
  return static_cast<long long>(std::ceil(x));
}

}  // namespace subcluster
