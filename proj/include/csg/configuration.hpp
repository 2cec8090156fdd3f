#pragma once

// Finite point configurations in the projective plane over Q(zeta_N),
// generators for the Fermat family and random pencils, and the plain text
// configuration format:
//
//   # comment
//   field 12
//   point 0 ; 1 ; -z^4
//
// Coordinates use the grammar of parse_cyclo. The serializer writes every
// point in canonical form, so its output is byte-deterministic.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "csg/projgeom.hpp"

namespace csg {

struct Configuration {
  /// Field order N, a positive multiple of 4.
  int order = 4;
  std::vector<ProjPoint> points;

  std::size_t size() const { return points.size(); }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.order == b.order && a.points == b.points;
  }
};

/// Checks the field order, that each coordinate lives in Q(zeta_order) and
/// that the points are pairwise distinct.
Configuration make_configuration(int order, std::vector<ProjPoint> points);

/// Index of p in c, or -1.
int find_point(const Configuration& c, const ProjPoint& p);

/// The 3n points [0:1:-w^a], [-w^b:0:1], [1:-w^c:0] with w = zeta_n, in
/// Q(zeta_lcm(n,4)), listed in that order with exponents ascending.
Configuration fermat_config(int n);

/// fermat_config(3).
Configuration hesse_config();

/// Gaussian rational points on m concurrent lines through a random apex,
/// counts[a] points on line a. Points are placed line by line, with the apex
/// first when include_apex is set. A candidate point collinear with two
/// points from two other lines is rejected and redrawn.
Configuration random_pencil_config(int m, const std::vector<int>& counts, bool include_apex, std::uint64_t seed);

struct PencilSample {
  Configuration config;
  ProjPoint apex;
  /// The m lines in the order of counts.
  std::vector<ProjLine> lines;
};

/// random_pencil_config together with the apex and lines it used.
PencilSample sample_pencil(int m, const std::vector<int>& counts, bool include_apex, std::uint64_t seed);

Configuration parse_configuration(std::string_view text);
std::string serialize(const Configuration& c);

}  // namespace csg
