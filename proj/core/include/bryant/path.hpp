#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "bryant/mat2.hpp"

namespace bryant {

/// Polyline in the punctured plane along which frames are continued.
/// Invariants (enforced by the factories): every segment keeps distance
/// >= 0.05 from each declared puncture, and consecutive waypoints are
/// closer than 0.5 (factories subdivide as needed).
struct PathSpec {
  std::vector<cplx> waypoints;
  double clearance = 0.0;  // min distance from the polyline to the punctures

  static constexpr double kMinClearance = 0.05;
  static constexpr double kMaxSpacing = 0.5;

  /// Distance from segment [p, q] to a point s.
  static double segment_distance(cplx p, cplx q, cplx s) {
    const cplx d = q - p;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(s - p);
    double t = ((s - p) * std::conj(d)).real() / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(s - (p + t * d));
  }

  /// Build from corner points; subdivides long edges and validates
  /// clearance against the punctures (default: the Fuchsian singularities
  /// 0 and 1).
  static PathSpec polyline(const std::vector<cplx>& corners,
                           const std::vector<cplx>& punctures = {cplx(0.0),
                                                                 cplx(1.0)}) {
    if (corners.size() < 2) {
      throw std::invalid_argument("PathSpec needs at least two waypoints");
    }
    PathSpec path;
    path.clearance = std::numeric_limits<double>::infinity();
    path.waypoints.push_back(corners.front());
    for (std::size_t i = 0; i + 1 < corners.size(); ++i) {
      const cplx p = corners[i];
      const cplx q = corners[i + 1];
      for (const cplx s : punctures) {
        path.clearance = std::min(path.clearance, segment_distance(p, q, s));
      }
      const double len = std::abs(q - p);
      const int pieces =
          std::max(1, static_cast<int>(std::ceil(len / (0.9 * kMaxSpacing))));
      for (int k = 1; k <= pieces; ++k) {
        path.waypoints.push_back(p + (static_cast<double>(k) / pieces) * (q - p));
      }
    }
    if (punctures.empty()) path.clearance = std::numeric_limits<double>::infinity();
    if (path.clearance < kMinClearance) {
      throw std::invalid_argument(
          "PathSpec clearance below 0.05 from a puncture");
    }
    return path;
  }

  /// Circular loop approximated by a regular polygon, traversed
  /// counterclockwise for turns > 0 (clockwise for turns < 0), starting and
  /// ending at `start` (which must lie on the circle).
  static PathSpec circle_loop(cplx center, double radius, cplx start,
                              int turns = 1, int segments_per_turn = 16,
                              const std::vector<cplx>& punctures = {
                                  cplx(0.0), cplx(1.0)}) {
    const double theta0 = std::arg(start - center);
    const int n = std::abs(turns) * segments_per_turn;
    const double step = 2.0 * std::numbers::pi *
                        (turns > 0 ? 1.0 : -1.0) * std::abs(turns) / n;
    std::vector<cplx> corners;
    corners.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
      corners.push_back(center + radius * std::exp(cplx(0.0, theta0 + k * step)));
    }
    corners.back() = start;  // close the loop exactly
    return polyline(corners, punctures);
  }

  double length() const {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
      total += std::abs(waypoints[i + 1] - waypoints[i]);
    }
    return total;
  }
};

}  // namespace bryant
