#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace subcluster {

using ElementId = int;

/// Sorted, duplicate-free list of element ids. Every set-valued argument and
/// result in this library uses this representation.
using ElementSet = std::vector<ElementId>;

/// Invalid argument, malformed file, or violated precondition.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No solution satisfies the actionability constraint for the request.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive routine was asked to run beyond its hard size guard.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kInfiniteCost = std::numeric_limits<double>::infinity();

/// Absolute tolerance for cost comparisons on exact-weight (cut) objectives.
inline constexpr double kCostTolerance = 1e-9;

/// Absolute tolerance for mutual-information objectives.
inline constexpr double kMiTolerance = 1e-7;

inline ElementSet make_range_set(int n) {
  ElementSet s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = i;
  return s;
}

inline bool is_sorted_unique(const ElementSet& s) {
  return std::adjacent_find(s.begin(), s.end(),
                            [](ElementId a, ElementId b) { return a >= b; }) == s.end();
}

inline ElementSet normalized_set(ElementSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool set_contains(const ElementSet& s, ElementId x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::size_t intersection_size(const ElementSet& a, const ElementSet& b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

inline bool is_subset(const ElementSet& a, const ElementSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool sets_disjoint(const ElementSet& a, const ElementSet& b) {
  return intersection_size(a, b) == 0;
}

/// Complement within the dense ground set {0, ..., n-1}.
inline ElementSet complement_of(const ElementSet& s, int n) {
  ElementSet out;
  out.reserve(static_cast<std::size_t>(n) - s.size());
  auto it = s.begin();
  for (int i = 0; i < n; ++i) {
    if (it != s.end() && *it == i) {
      ++it;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

/// Element-wise lexicographic order; the tie-break used throughout.
inline bool lex_less(const ElementSet& a, const ElementSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string set_to_string(const ElementSet& s);

/// ceil(t * q) computed so that decimal thresholds like 0.51 or 0.07 give the
/// intended integer even when t*q lands a few ulp away from an integer.
long long ceil_fraction(double t, long long q);

}  // namespace subcluster
