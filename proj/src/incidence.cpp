#include "csg/incidence.hpp"

#include <algorithm>

namespace csg {

std::vector<SpannedLine> spanned_lines(const Configuration& c) {
  const int n = static_cast<int>(c.size());
  if (n < 2) throw PreconditionError("spanned_lines: need at least two points");
  std::vector<std::vector<char>> covered(n, std::vector<char>(n, 0));
  std::vector<SpannedLine> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (covered[i][j]) continue;
      SpannedLine s{join(c.points[i], c.points[j]), {}};
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j || incident(c.points[k], s.line)) s.members.push_back(k);
      }
      for (int a : s.members) {
        for (int b : s.members) covered[a][b] = 1;
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<SpannedLine> ordinary_lines(const Configuration& c) {
  std::vector<SpannedLine> out;
  for (auto& s : spanned_lines(c)) {
    if (s.multiplicity() == 2) out.push_back(std::move(s));
  }
  return out;
}

bool is_collinear(const Configuration& c) {
  if (c.size() < 3) return true;
  const ProjLine l = join(c.points[0], c.points[1]);
  return count_incident(c, l) == static_cast<int>(c.size());
}

bool is_sylvester_gallai(const Configuration& c) {
  if (c.size() < 3) throw PreconditionError("is_sylvester_gallai: need at least three points");
  return !is_collinear(c) && ordinary_lines(c).empty();
}

int count_incident(const Configuration& c, const ProjLine& l) {
  int count = 0;
  for (const auto& p : c.points) count += incident(p, l);
  return count;
}

std::vector<int> PencilStructure::counts() const {
  std::vector<int> out;
  for (const auto& m : members) out.push_back(static_cast<int>(m.size()));
  return out;
}

PencilStructure pencil_structure(const Configuration& c, const ProjPoint& apex) {
  PencilStructure ps{apex, std::nullopt, {}, {}};
  for (std::size_t i = 0; i < c.size(); ++i) {
    const ProjPoint& p = c.points[i];
    if (p == apex) {
      ps.apex_index = static_cast<int>(i);
      continue;
    }
    std::size_t a = 0;
    while (a < ps.lines.size() && !incident(p, ps.lines[a])) ++a;
    if (a == ps.lines.size()) {
      ps.lines.push_back(join(apex, p));
      ps.members.emplace_back();
    }
    ps.members[a].push_back(static_cast<int>(i));
  }
  if (ps.lines.empty()) throw PreconditionError("pencil_structure: configuration consists only of the apex");
  return ps;
}

std::vector<ConcurrencyPoint> find_concurrency_points(const Configuration& c, int max_m) {
  if (c.size() < 2) throw PreconditionError("find_concurrency_points: need at least two points");
  std::vector<ProjPoint> candidates = c.points;
  const auto lines = spanned_lines(c);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const ProjPoint p = meet(lines[i].line, lines[j].line);
      if (std::find(candidates.begin(), candidates.end(), p) == candidates.end()) candidates.push_back(p);
    }
  }
  std::vector<ConcurrencyPoint> out;
  for (const auto& p : candidates) {
    const int m = pencil_structure(c, p).m();
    if (m <= max_m) out.push_back({p, m});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.m < b.m; });
  return out;
}

BoundReport theorem_bound_report(const Configuration& c, const ProjPoint& apex) {
  const PencilStructure ps = pencil_structure(c, apex);
  BoundReport r;
  r.m = ps.m();
  for (const auto& members : ps.members) r.max_line_count = std::max(r.max_line_count, static_cast<int>(members.size()));
  r.bound = r.m - 2;
  r.exceeds = r.max_line_count > r.bound;
  r.sg = c.size() >= 3 && is_sylvester_gallai(c);
  r.consistent = !(r.sg && r.exceeds);
  return r;
}

}  // namespace csg
