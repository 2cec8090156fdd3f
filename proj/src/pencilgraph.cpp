#include "csg/pencilgraph.hpp"

#include <algorithm>

namespace csg {

namespace {

bool real_part_zero(const CycloElement& a) { return (a + a.conj()).is_zero(); }

int field_order_of(const std::vector<const CycloElement*>& values) {
  int order = 4;
  for (const CycloElement* v : values) order = common_order(order, v->order());
  return order;
}

}  // namespace

NormalizedPencil normalize(const Configuration& c, const ProjPoint& apex, std::optional<int> heavy) {
  if (c.size() < 3 || is_collinear(c)) throw PreconditionError("normalize: configuration is collinear");
  const PencilStructure ps = pencil_structure(c, apex);
  if (ps.m() < 2) throw PreconditionError("normalize: pencil has fewer than two lines");

  int h = 0;
  if (heavy) {
    if (*heavy < 0 || *heavy >= ps.m()) throw PreconditionError("normalize: no such pencil line");
    h = *heavy;
  } else {
    for (int a = 1; a < ps.m(); ++a) {
      if (ps.members[a].size() > ps.members[h].size()) h = a;
    }
  }

  NormalizedPencil np;
  np.config = c;
  np.apex_index = ps.apex_index;
  np.transform = normalization_transform(apex, ps.lines[h]);
  np.heavy_line = h;

  for (int a = 0; a < ps.m(); ++a) {
    if (a == h) continue;
    const ProjLine l = np.transform(ps.lines[a]);
    if (!l[0].is_zero() || l[1].is_zero()) throw InternalInconsistency("normalize: finite line not of the form y = const");
    const CycloElement ya = -l[2] / l[1];
    std::vector<CycloElement> xs;
    for (int i : ps.members[a]) {
      const ProjPoint p = np.transform(c.points[i]);
      if (p[2] != CycloElement(1) || p[1] != ya) throw InternalInconsistency("normalize: point off its line");
      xs.push_back(p[0]);
    }
    np.line_of.push_back(a);
    np.y.push_back(ya);
    np.x.push_back(std::move(xs));
    np.x_source.push_back(ps.members[a]);
  }
  for (int i : ps.members[h]) {
    const ProjPoint p = np.transform(c.points[i]);
    if (!p[2].is_zero() || p[1] != CycloElement(1)) throw InternalInconsistency("normalize: point not at infinity");
    np.k.push_back(-p[0]);
    np.k_source.push_back(i);
  }
  return np;
}

NormalizedPencil normalized_from_affine(const std::vector<CycloElement>& ys,
                                        const std::vector<std::vector<CycloElement>>& xs,
                                        const std::vector<CycloElement>& ks) {
  if (ys.size() != xs.size()) throw PreconditionError("normalized_from_affine: one x list per line needed");
  std::vector<const CycloElement*> all;
  for (const auto& v : ys) all.push_back(&v);
  for (const auto& line : xs) {
    if (line.empty()) throw PreconditionError("normalized_from_affine: empty line");
    for (const auto& v : line) all.push_back(&v);
  }
  for (const auto& v : ks) all.push_back(&v);

  NormalizedPencil np;
  std::vector<ProjPoint> points;
  for (std::size_t a = 0; a < ys.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (ys[a] == ys[b]) throw PreconditionError("normalized_from_affine: repeated y");
    }
    np.line_of.push_back(static_cast<int>(a));
    np.y.push_back(ys[a]);
    np.x.push_back(xs[a]);
    np.x_source.emplace_back();
    for (const auto& x : xs[a]) {
      np.x_source.back().push_back(static_cast<int>(points.size()));
      points.push_back(affine_point(x, ys[a]));
    }
  }
  for (const auto& k : ks) {
    np.k.push_back(k);
    np.k_source.push_back(static_cast<int>(points.size()));
    points.emplace_back(k, CycloElement(-1), CycloElement(0));
  }
  np.config = make_configuration(field_order_of(all), std::move(points));
  np.heavy_line = static_cast<int>(ys.size());
  return np;
}

Rational direction_parameter(int index) {
  if (index < 0) throw PreconditionError("direction_parameter: negative index");
  if (index == 0) return 0;
  if (index <= 2) return index == 1 ? 1 : -1;
  // blocks of four from n = 2: 1/n, -1/n, n, -n
  const int n = 2 + (index - 3) / 4;
  const int pos = (index - 3) % 4;
  Rational t = pos < 2 ? Rational(1, n) : Rational(n);
  t.canonicalize();
  return pos % 2 == 0 ? t : Rational(-t);
}

bool satisfies_p1(const NormalizedPencil& np, const CycloElement& c) {
  for (const auto& xs : np.x) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        if (real_part_zero(c * (xs[i] - xs[j]))) return false;
      }
    }
  }
  return true;
}

namespace {

// Minimal point index per line of the x lists multiplied by c.
std::vector<int> argmin_real(const NormalizedPencil& np, const CycloElement& c) {
  std::vector<int> out;
  for (const auto& xs : np.x) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(xs.size()); ++i) {
      const int s = sign_real(c * (xs[i] - xs[best]));
      if (s == 0) throw PreconditionError("minimal point is not unique (P1 fails)");
      if (s < 0) best = i;
    }
    out.push_back(best);
  }
  return out;
}

bool p2_holds(const std::vector<CycloElement>& x, const std::vector<CycloElement>& y) {
  const int n = static_cast<int>(x.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int v = 0; v < n; ++v) {
        if (v == a || v == b) continue;
        const CycloElement e = support_excess(x, y, a, b, v);
        if (!e.is_zero() && real_part_zero(e)) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool satisfies_p2(const NormalizedPencil& np, const CycloElement& c) {
  const std::vector<int> idx = argmin_real(np, c);
  std::vector<CycloElement> x, y;
  for (int a = 0; a < np.vertex_count(); ++a) {
    x.push_back(c * np.x[a][idx[a]]);
    y.push_back(c * np.y[a]);
  }
  return p2_holds(x, y);
}

DirectionChoice choose_generic_direction(NormalizedPencil& np, int skip, int budget) {
  const CycloElement i = CycloElement::imaginary_unit();
  for (int index = 0; index < budget; ++index) {
    const Rational t = direction_parameter(index);
    const CycloElement c = CycloElement(1) + CycloElement(t) * i;
    if (!satisfies_p1(np, c) || !satisfies_p2(np, c)) continue;
    if (skip-- > 0) continue;
    for (auto& xs : np.x) {
      for (auto& v : xs) v = c * v;
    }
    for (auto& v : np.y) v = c * v;
    np.direction = c * np.direction;
    return DirectionChoice{t, index};
  }
  throw InternalInconsistency("choose_generic_direction: no admissible direction among " + std::to_string(budget) +
                              " candidates");
}

MinimalPoints minimal_points(const NormalizedPencil& np) {
  MinimalPoints mp;
  mp.index = argmin_real(np, CycloElement(1));
  for (int a = 0; a < np.vertex_count(); ++a) mp.x.push_back(np.x[a][mp.index[a]]);
  return mp;
}

MinimalLine pencil_minimal_line(const NormalizedPencil& np, const MinimalPoints& mp, const CycloElement& k) {
  std::optional<CycloElement> best;
  for (int a = 0; a < np.vertex_count(); ++a) {
    for (const auto& x : np.x[a]) {
      const CycloElement d = x + k * np.y[a];
      if (!best || compare_real(d, *best) < 0) best = d;
    }
  }
  if (!best) throw PreconditionError("pencil_minimal_line: no finite points");
  MinimalLine out{*best, {}};
  for (int a = 0; a < np.vertex_count(); ++a) {
    for (std::size_t i = 0; i < np.x[a].size(); ++i) {
      if (np.x[a][i] + k * np.y[a] != out.d) continue;
      if (static_cast<int>(i) != mp.index[a]) {
        throw InternalInconsistency("pencil_minimal_line: minimal line through a non-minimal point");
      }
      out.minimizers.push_back(a);
    }
  }
  return out;
}

MinimalLine pencil_minimal_line(const NormalizedPencil& np, const CycloElement& k) {
  return pencil_minimal_line(np, minimal_points(np), k);
}

std::vector<std::pair<int, int>> SupportGraph::edge_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : edges) out.emplace_back(e.a, e.b);
  return out;
}

std::pair<CycloElement, CycloElement> line_through(const CycloElement& xa, const CycloElement& ya,
                                                   const CycloElement& xb, const CycloElement& yb) {
  if (ya == yb) throw PreconditionError("line_through: equal y");
  const CycloElement k = -(xb - xa) / (yb - ya);
  return {k, xa + k * ya};
}

CycloElement support_excess(const std::vector<CycloElement>& x, const std::vector<CycloElement>& y, int a, int b,
                            int c) {
  const auto [k, d] = line_through(x[a], y[a], x[b], y[b]);
  return x[c] + k * y[c] - d;
}

SupportOutcome build_support_graph(const NormalizedPencil& np, const MinimalPoints& mp) {
  SupportGraph g;
  g.y = np.y;
  g.x = mp.x;
  const Transform total = np.total_transform();
  for (std::size_t j = 0; j < np.k.size(); ++j) {
    const CycloElement& k = np.k[j];
    const MinimalLine ml = pencil_minimal_line(np, mp, k);
    if (ml.minimizers.size() == 1) {
      const Vector3<CycloElement> normalized(CycloElement(1), k, -ml.d);
      OrdinaryLineWitness w{ProjLine(Vector3<CycloElement>(total.matrix().transpose() * normalized)),
                            {},
                            k,
                            ml.d,
                            static_cast<int>(j),
                            ml.minimizers[0]};
      for (std::size_t i = 0; i < np.config.size(); ++i) {
        if (incident(np.config.points[i], w.line)) w.members.push_back(static_cast<int>(i));
      }
      if (w.members.size() != 2) {
        throw InternalInconsistency("build_support_graph: witness line meets " + std::to_string(w.members.size()) +
                                    " points");
      }
      return w;
    }
    g.edges.push_back({ml.minimizers[0], ml.minimizers[1], k, ml.d, static_cast<int>(j)});
  }

  if (g.edges.size() != np.k.size()) throw InternalInconsistency("build_support_graph: edge count mismatch");
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    for (std::size_t f = 0; f < e; ++f) {
      if (g.edges[e].k == g.edges[f].k) throw InternalInconsistency("build_support_graph: repeated slope");
    }
    const SupportEdge& edge = g.edges[e];
    for (int c = 0; c < g.vertex_count(); ++c) {
      const CycloElement excess = g.x[c] + edge.k * g.y[c] - edge.d;
      const int s = sign_real(excess);
      if (s < 0 || (s == 0 && !excess.is_zero())) {
        throw InternalInconsistency("build_support_graph: support condition fails at vertex " + std::to_string(c));
      }
    }
  }
  return g;
}

SupportOutcome build_support_graph(const NormalizedPencil& np) { return build_support_graph(np, minimal_points(np)); }

bool is_supporting(const std::vector<CycloElement>& x, const std::vector<CycloElement>& y, int a, int b) {
  const auto [k, d] = line_through(x[a], y[a], x[b], y[b]);
  for (int c = 0; c < static_cast<int>(x.size()); ++c) {
    if (c == a || c == b) continue;
    const CycloElement excess = x[c] + k * y[c] - d;
    if (excess.is_zero()) {
      throw PreconditionError("collinear points " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                              std::to_string(c));
    }
    if (sign_real(excess) <= 0) return false;
  }
  return true;
}

SupportGraph max_support_graph(const std::vector<CycloElement>& x, const std::vector<CycloElement>& y) {
  if (x.size() != y.size()) throw PreconditionError("max_support_graph: size mismatch");
  const int n = static_cast<int>(x.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < a; ++b) {
      if (y[a] == y[b]) throw PreconditionError("max_support_graph: repeated y");
    }
  }
  SupportGraph g{y, x, {}};
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!is_supporting(x, y, a, b)) continue;
      const auto [k, d] = line_through(x[a], y[a], x[b], y[b]);
      bool repeated = false;
      for (const auto& e : g.edges) repeated = repeated || e.k == k;
      if (!repeated) g.edges.push_back({a, b, k, d, -1});
    }
  }
  return g;
}

CycleObstruction cycle_obstruction(const std::vector<CycloElement>& x, const std::vector<CycloElement>& y,
                                   const std::vector<int>& cycle) {
  const int n = static_cast<int>(x.size());
  if (static_cast<int>(y.size()) != n) throw PreconditionError("cycle_obstruction: size mismatch");
  std::vector<int> cyc = cycle;
  if (cyc.size() > 1 && cyc.front() == cyc.back()) cyc.pop_back();
  if (cyc.size() < 3) throw PreconditionError("cycle_obstruction: cycle needs three vertices");
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    if (cyc[i] < 0 || cyc[i] >= n) throw PreconditionError("cycle_obstruction: vertex out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (cyc[i] == cyc[j]) throw PreconditionError("cycle_obstruction: repeated vertex");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (y[a] == y[b]) throw PreconditionError("cycle_obstruction: repeated y");
      for (int c = b + 1; c < n; ++c) {
        if (support_excess(x, y, a, b, c).is_zero()) throw PreconditionError("cycle_obstruction: collinear points");
      }
    }
  }
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    const int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
    const auto [k, d] = line_through(x[a], y[a], x[b], y[b]);
    for (int c = 0; c < n; ++c) {
      if (c == a || c == b) continue;
      const int s = sign_real(x[c] + k * y[c] - d);
      if (s <= 0) return CycleObstruction{a, b, c, k, d, s == 0};
    }
  }
  throw InternalInconsistency("cycle_obstruction: every edge of the cycle is supporting");
}

PipelineRun run_pipeline(const Configuration& c, const ProjPoint& apex, std::optional<int> heavy, int skip) {
  NormalizedPencil np = normalize(c, apex, heavy);
  const DirectionChoice dir = choose_generic_direction(np, skip);
  MinimalPoints mp = minimal_points(np);
  SupportOutcome outcome = build_support_graph(np, mp);
  return PipelineRun{std::move(np), dir, std::move(mp), std::move(outcome)};
}

OrdinaryLineResult find_ordinary_line_concurrent(const Configuration& c, const ProjPoint& apex) {
  OrdinaryLineResult result{OrdinaryLineResult::Status::witness, theorem_bound_report(c, apex), std::nullopt,
                            std::nullopt, run_pipeline(c, apex)};
  const bool exceeds = result.bound.exceeds;
  if (const auto* w = std::get_if<OrdinaryLineWitness>(&result.run.outcome)) {
    if (count_incident(c, w->line) != 2) throw InternalInconsistency("find_ordinary_line_concurrent: witness not ordinary");
    result.witness = *w;
  } else {
    if (exceeds) {
      throw InternalInconsistency("find_ordinary_line_concurrent: bound exceeded but every minimal line is rich");
    }
    result.graph = std::get<SupportGraph>(result.run.outcome);
  }
  if (!exceeds) result.status = OrdinaryLineResult::Status::bound_not_exceeded;
  return result;
}

BoundChain bound_chain_report(const SupportGraph& g, int m) {
  BoundChain r;
  r.m = m;
  r.edges = static_cast<int>(g.edges.size());
  r.binom_bound = (m - 1) * (m - 2) / 2;
  r.planar_bound = m >= 4 ? 3 * m - 9 : r.binom_bound;
  r.forest_bound = m - 2;
  r.planar = check_planarity(g).planar;
  r.forest = check_acyclic(g).forest;
  if (g.vertex_count() > m - 1) throw PreconditionError("bound_chain_report: more vertices than finite lines");
  if (r.edges > r.binom_bound) throw InternalInconsistency("bound_chain_report: more edges than vertex pairs");
  if (r.planar && r.edges > r.planar_bound) throw InternalInconsistency("bound_chain_report: planar bound fails");
  if (r.forest && r.edges > r.forest_bound) throw InternalInconsistency("bound_chain_report: forest bound fails");
  return r;
}

}  // namespace csg
