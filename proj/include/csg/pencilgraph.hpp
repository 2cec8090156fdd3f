#pragma once

// The support graph of a configuration on concurrent lines.
//
// A configuration on m lines through an apex is normalized so that the apex
// is [1:0:0] and the heaviest line is the line at infinity z = 0. The other
// lines become y = y_a, their points (x, y_a), and the points at infinity
// [k : -1 : 0]. After multiplying the affine coordinates by a generic
// c = 1 + t i, every line carries a unique point x_a* of minimal real part.
// Each point at infinity contributes the line x + k y = d of minimal Re(d);
// if that line meets a single point of S it is an ordinary line, otherwise
// it joins two minimal points and becomes an edge of the graph G on the
// vertices y_a. G is planar when drawn at the y_a and acyclic.

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "csg/incidence.hpp"

namespace csg {

struct NormalizedPencil {
  /// The configuration, in its own coordinates.
  Configuration config;
  std::optional<int> apex_index;
  /// Configuration coordinates to normalized coordinates, without the direction.
  Transform transform = Transform::identity();
  /// The multiplier c; 1 until a generic direction is chosen.
  CycloElement direction = 1;
  /// Pencil line index of the line sent to infinity, and of each finite line.
  int heavy_line = 0;
  std::vector<int> line_of;
  /// y_a and the x-coordinates on y = y_a, with the direction applied.
  std::vector<CycloElement> y;
  std::vector<std::vector<CycloElement>> x;
  std::vector<std::vector<int>> x_source;
  /// Slopes of the points [k : -1 : 0]; the direction leaves them fixed.
  std::vector<CycloElement> k;
  std::vector<int> k_source;

  int vertex_count() const { return static_cast<int>(y.size()); }
  int m() const { return vertex_count() + 1; }
  /// Configuration coordinates to the current normalized coordinates.
  Transform total_transform() const { return Transform::scaling(direction) * transform; }
};

/// Normalizes c along the pencil through apex. The line sent to infinity is
/// `heavy` if given, otherwise the first line with the most points.
NormalizedPencil normalize(const Configuration& c, const ProjPoint& apex, std::optional<int> heavy = std::nullopt);

/// A pencil given directly in normalized coordinates: finite points (x, y[a])
/// for x in xs[a], and points at infinity [k : -1 : 0]. The field order is the
/// lcm of 4 and the orders of the data; identity transform.
NormalizedPencil normalized_from_affine(const std::vector<CycloElement>& ys,
                                        const std::vector<std::vector<CycloElement>>& xs,
                                        const std::vector<CycloElement>& ks);

/// The t-th direction parameter: 0, 1, -1, 1/2, -1/2, 2, -2, 1/3, -1/3, 3, ...
Rational direction_parameter(int index);

/// Distinct real parts of c x among the x on each line.
bool satisfies_p1(const NormalizedPencil& np, const CycloElement& c);
/// For minimal points after multiplying by c: for every pair a, b and third
/// vertex v, x_v + k y_v - d (k, d the line through a and b) has zero real
/// part only if it is zero. Requires P1 for c.
bool satisfies_p2(const NormalizedPencil& np, const CycloElement& c);

struct DirectionChoice {
  Rational t;
  /// Index into the enumeration.
  int index = 0;
};

/// Applies the first c = 1 + t i satisfying P1 and P2, after skipping `skip`
/// admissible ones. Throws InternalInconsistency when `budget` parameters
/// all fail.
DirectionChoice choose_generic_direction(NormalizedPencil& np, int skip = 0, int budget = 100000);

struct MinimalPoints {
  /// Position in np.x[a] of x_a*.
  std::vector<int> index;
  std::vector<CycloElement> x;
};

/// Requires P1 on every line.
MinimalPoints minimal_points(const NormalizedPencil& np);

struct MinimalLine {
  CycloElement d;
  /// Finite lines whose point lies on x + k y = d, ascending.
  std::vector<int> minimizers;
};

/// d minimizing Re(x + k y_a) over all finite points; on equal real parts
/// the first in line order.
MinimalLine pencil_minimal_line(const NormalizedPencil& np, const MinimalPoints& mp, const CycloElement& k);
MinimalLine pencil_minimal_line(const NormalizedPencil& np, const CycloElement& k);

struct SupportEdge {
  int a;
  int b;
  /// The line x + k y = d through (x_a*, y_a) and (x_b*, y_b).
  CycloElement k;
  CycloElement d;
  /// Index into np.k, or -1.
  int infinite_point = -1;
};

struct SupportGraph {
  std::vector<CycloElement> y;
  std::vector<CycloElement> x;
  std::vector<SupportEdge> edges;

  int vertex_count() const { return static_cast<int>(y.size()); }
  std::vector<std::pair<int, int>> edge_pairs() const;
};

struct OrdinaryLineWitness {
  /// In configuration coordinates.
  ProjLine line;
  /// The two configuration points on it.
  std::vector<int> members;
  /// x + k y = d in normalized coordinates, through (x_a*, y_a).
  CycloElement k;
  CycloElement d;
  int infinite_point = -1;
  int vertex = -1;
};

using SupportOutcome = std::variant<SupportGraph, OrdinaryLineWitness>;

/// One edge per point at infinity, or the first ordinary line found.
/// Throws InternalInconsistency if an edge breaks the support condition or
/// a witness does not meet exactly two points.
SupportOutcome build_support_graph(const NormalizedPencil& np, const MinimalPoints& mp);
SupportOutcome build_support_graph(const NormalizedPencil& np);

/// Line through (x_a, y_a) and (x_b, y_b) as (k, d).
std::pair<CycloElement, CycloElement> line_through(const CycloElement& xa, const CycloElement& ya,
                                                   const CycloElement& xb, const CycloElement& yb);

/// x_c + k y_c - d for the line through points a and b.
CycloElement support_excess(const std::vector<CycloElement>& x, const std::vector<CycloElement>& y, int a, int b,
                            int c);

/// Whether the line through a and b has Re(x_c + k y_c) > Re(d) at every
/// other point. Throws PreconditionError on an exactly collinear triple.
bool is_supporting(const std::vector<CycloElement>& x, const std::vector<CycloElement>& y, int a, int b);

/// The graph of all supporting pairs, in lexicographic order, skipping a
/// pair whose slope repeats an earlier edge. Requires distinct y and no
/// three collinear points.
SupportGraph max_support_graph(const std::vector<CycloElement>& x, const std::vector<CycloElement>& y);

/// Sign of the turn p -> q -> r in the plane C = R^2.
int orientation(const CycloElement& p, const CycloElement& q, const CycloElement& r);
/// Whether closed segments [a, b] and [c, d] meet.
bool segments_intersect(const CycloElement& a, const CycloElement& b, const CycloElement& c, const CycloElement& d);

struct PlanarityCertificate {
  bool planar = true;
  /// A crossing pair of vertex-disjoint edges when not planar.
  int edge1 = -1;
  int edge2 = -1;
};

/// Straight-line drawing with vertex a at y_a.
PlanarityCertificate check_planarity(const SupportGraph& g);

struct AcyclicityCertificate {
  bool forest = true;
  /// Vertices of a cycle, each consecutive pair (and last, first) an edge.
  std::vector<int> cycle;
};

AcyclicityCertificate check_acyclic(int vertex_count, const std::vector<std::pair<int, int>>& edges);
AcyclicityCertificate check_acyclic(const SupportGraph& g);

/// u(y) = max over lines of Re(d - k y).
struct Envelope {
  std::vector<CycloElement> k;
  std::vector<CycloElement> d;
};

Envelope envelope_of(const SupportGraph& g);

struct EnvelopeValue {
  CycloElement value;
  int line = -1;
};

/// Exact maximum; ties go to the first line.
EnvelopeValue envelope_eval(const Envelope& e, const CycloElement& y);

/// Sum of Im(x_{j+1} - x_j) around the cycle. The cycle may repeat its first
/// vertex at the end.
CycloElement green_cycle_sum(const std::vector<CycloElement>& x, const std::vector<int>& cycle);

struct GreenIntegral {
  double value = 0;
  /// Largest inward step used.
  double step = 0;
};

/// Midpoint-rule approximation of the boundary integral of the inward
/// normal derivative of u over a simple polygon, with a forward difference
/// of step h = edge length / resolution.
GreenIntegral green_boundary_integral_numeric(const Envelope& e, const std::vector<CycloElement>& polygon,
                                              int resolution);

/// Indices of the convex hull vertices, counterclockwise, without
/// collinear boundary points.
std::vector<int> convex_hull(const std::vector<CycloElement>& points);

struct CycleObstruction {
  int a = -1;
  int b = -1;
  /// A point with Re(x_c + k y_c) below Re(d), or equal to it off the line.
  int c = -1;
  CycloElement k;
  CycloElement d;
  bool equality = false;
};

CycleObstruction cycle_obstruction(const std::vector<CycloElement>& x, const std::vector<CycloElement>& y,
                                   const std::vector<int>& cycle);

struct PipelineRun {
  NormalizedPencil np;
  DirectionChoice direction;
  MinimalPoints mp;
  SupportOutcome outcome;
};

/// normalize, choose_generic_direction, minimal_points, build_support_graph.
PipelineRun run_pipeline(const Configuration& c, const ProjPoint& apex, std::optional<int> heavy = std::nullopt,
                         int skip = 0);

struct OrdinaryLineResult {
  enum class Status { witness, bound_not_exceeded };
  Status status = Status::witness;
  BoundReport bound;
  std::optional<OrdinaryLineWitness> witness;
  std::optional<SupportGraph> graph;
  PipelineRun run;
};

/// Runs the pipeline with a line carrying more than m - 2 points at
/// infinity; such a pencil always yields an ordinary line.
OrdinaryLineResult find_ordinary_line_concurrent(const Configuration& c, const ProjPoint& apex);

struct BoundChain {
  int m = 0;
  int edges = 0;
  int binom_bound = 0;
  /// 3m - 9 for m >= 4.
  int planar_bound = 0;
  int forest_bound = 0;
  bool planar = false;
  bool forest = false;
};

/// Throws InternalInconsistency if a bound that its certificate implies fails.
BoundChain bound_chain_report(const SupportGraph& g, int m);

}  // namespace csg
