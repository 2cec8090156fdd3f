#pragma once

// Incidence structure of a configuration: the lines it spans, ordinary
// lines, and its decomposition along the pencil of lines through a point.

#include <optional>
#include <vector>

#include "csg/configuration.hpp"

namespace csg {

struct SpannedLine {
  ProjLine line;
  /// Indices of the incident configuration points, ascending.
  std::vector<int> members;

  int multiplicity() const { return static_cast<int>(members.size()); }
};

/// All lines through at least two points, in order of their first pair.
std::vector<SpannedLine> spanned_lines(const Configuration& c);
/// The spanned lines of multiplicity 2.
std::vector<SpannedLine> ordinary_lines(const Configuration& c);
/// All points on one line.
bool is_collinear(const Configuration& c);
/// Non-collinear with no ordinary line. Needs at least three points.
bool is_sylvester_gallai(const Configuration& c);

/// Number of configuration points on l.
int count_incident(const Configuration& c, const ProjLine& l);

struct PencilStructure {
  ProjPoint apex;
  /// Index of the apex in the configuration, if it belongs to it.
  std::optional<int> apex_index;
  /// Joins of the apex with the other points, in order of first appearance.
  std::vector<ProjLine> lines;
  /// members[a]: indices of the non-apex points on lines[a], ascending.
  std::vector<std::vector<int>> members;

  bool apex_in_set() const { return apex_index.has_value(); }
  int m() const { return static_cast<int>(lines.size()); }
  std::vector<int> counts() const;
};

PencilStructure pencil_structure(const Configuration& c, const ProjPoint& apex);

struct ConcurrencyPoint {
  ProjPoint apex;
  int m;
};

/// Candidate apexes are the configuration points followed by the meets of
/// pairs of spanned lines, without repeats. Keeps those with m <= max_m,
/// stably sorted by m.
std::vector<ConcurrencyPoint> find_concurrency_points(const Configuration& c, int max_m);

struct BoundReport {
  int m = 0;
  /// Largest number of points on one pencil line, apex excluded.
  int max_line_count = 0;
  int bound = 0;
  bool exceeds = false;
  bool sg = false;
  /// !(sg && exceeds); a concurrent SG configuration never exceeds m - 2.
  bool consistent = true;
};

BoundReport theorem_bound_report(const Configuration& c, const ProjPoint& apex);

}  // namespace csg
