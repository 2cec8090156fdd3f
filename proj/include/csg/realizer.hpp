#pragma once

// Which graphs arise as support graphs of actual point sets. Forests are
// searched for by sampling Gaussian rational points (x_a, y_a); graphs with
// a cycle are refuted by an explicit cycle obstruction.
//
// Target graph text format, vertices numbered from 1:
//
//   graph v=4
//   edge 1 2
//   edge 2 3

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "csg/pencilgraph.hpp"

namespace csg {

struct TargetGraph {
  int v = 0;
  /// 0-based, a < b, sorted, no repeats.
  std::vector<std::pair<int, int>> edges;

  friend bool operator==(const TargetGraph& a, const TargetGraph& b) { return a.v == b.v && a.edges == b.edges; }
};

/// Normalizes edge order and checks for loops, repeats and bad vertices.
TargetGraph make_target_graph(int v, std::vector<std::pair<int, int>> edges);

TargetGraph parse_target_graph(std::string_view text);
std::string serialize(const TargetGraph& t);

/// All forests on v vertices up to isomorphism, 1 <= v <= 8, by edge count
/// and then by canonical tree codes.
std::vector<TargetGraph> enumerate_forests(int v);

/// Sorted multiset of center-rooted tree codes, one per component.
std::string forest_code(const TargetGraph& t);

enum class RealizeMode {
  /// Every target edge is a supporting line and edge slopes are distinct, so
  /// the target is the graph built from these points and one point at
  /// infinity per edge.
  construction,
  /// max_support_graph of the points equals the target.
  maximal,
};

struct Verification {
  bool ok = false;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

Verification verify_realization(const std::vector<CycloElement>& x, const std::vector<CycloElement>& y,
                                const TargetGraph& t, RealizeMode mode = RealizeMode::construction);

struct RealizationResult {
  enum class Status { realized, budget_exhausted, provably_unrealizable };
  Status status = Status::budget_exhausted;
  std::vector<CycloElement> x;
  std::vector<CycloElement> y;
  std::optional<CycleObstruction> witness;
  /// The cycle of the target the witness refutes.
  std::vector<int> cycle;
  long candidates = 0;
};

const char* to_string(RealizationResult::Status s);

RealizationResult realize(const TargetGraph& t, long budget = 100000, std::uint64_t seed = 0,
                          RealizeMode mode = RealizeMode::construction);

}  // namespace csg
