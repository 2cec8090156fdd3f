// Planarity and acyclicity certificates, the envelope u and the Green
// checks over it.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <queue>

#include "csg/pencilgraph.hpp"

namespace csg {

int orientation(const CycloElement& p, const CycloElement& q, const CycloElement& r) {
  return sign_real(im(conj(q - p) * (r - p)));
}

namespace {

// r on the closed segment [p, q], given that the three are collinear.
bool within_box(const CycloElement& p, const CycloElement& q, const CycloElement& r) {
  const CycloElement i = CycloElement::imaginary_unit();
  for (const CycloElement& axis : {CycloElement(1), -i}) {
    // Re(axis * z) is Re z for 1 and Im z for -i
    const int s1 = sign_real(axis * (r - p)), s2 = sign_real(axis * (r - q));
    if (s1 * s2 > 0) return false;
  }
  return true;
}

}  // namespace

bool segments_intersect(const CycloElement& a, const CycloElement& b, const CycloElement& c, const CycloElement& d) {
  const int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && within_box(a, b, c)) return true;
  if (o2 == 0 && within_box(a, b, d)) return true;
  if (o3 == 0 && within_box(c, d, a)) return true;
  if (o4 == 0 && within_box(c, d, b)) return true;
  return false;
}

PlanarityCertificate check_planarity(const SupportGraph& g) {
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    for (std::size_t f = e + 1; f < g.edges.size(); ++f) {
      const SupportEdge& s = g.edges[e];
      const SupportEdge& t = g.edges[f];
      if (s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b) continue;
      if (segments_intersect(g.y[s.a], g.y[s.b], g.y[t.a], g.y[t.b])) {
        return PlanarityCertificate{false, static_cast<int>(e), static_cast<int>(f)};
      }
    }
  }
  return {};
}

AcyclicityCertificate check_acyclic(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<std::vector<int>> forest(vertex_count);
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) throw PreconditionError("check_acyclic: bad vertex");
    if (a == b) return AcyclicityCertificate{false, {a}};
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      forest[a].push_back(b);
      forest[b].push_back(a);
      continue;
    }
    // a and b already connected: the tree path from a to b closes a cycle
    std::vector<int> prev(vertex_count, -1);
    std::queue<int> todo;
    todo.push(a);
    prev[a] = a;
    while (!todo.empty()) {
      const int v = todo.front();
      todo.pop();
      for (int w : forest[v]) {
        if (prev[w] < 0) {
          prev[w] = v;
          todo.push(w);
        }
      }
    }
    std::vector<int> cycle;
    for (int v = b; v != a; v = prev[v]) cycle.push_back(v);
    cycle.push_back(a);
    return AcyclicityCertificate{false, cycle};
  }
  return {};
}

AcyclicityCertificate check_acyclic(const SupportGraph& g) { return check_acyclic(g.vertex_count(), g.edge_pairs()); }

Envelope envelope_of(const SupportGraph& g) {
  Envelope e;
  for (const auto& edge : g.edges) {
    e.k.push_back(edge.k);
    e.d.push_back(edge.d);
  }
  return e;
}

EnvelopeValue envelope_eval(const Envelope& e, const CycloElement& y) {
  if (e.k.empty()) throw PreconditionError("envelope_eval: empty envelope");
  EnvelopeValue best{re(e.d[0] - e.k[0] * y), 0};
  for (std::size_t j = 1; j < e.k.size(); ++j) {
    CycloElement v = re(e.d[j] - e.k[j] * y);
    if (sign_real(v - best.value) > 0) best = EnvelopeValue{std::move(v), static_cast<int>(j)};
  }
  return best;
}

CycloElement green_cycle_sum(const std::vector<CycloElement>& x, const std::vector<int>& cycle) {
  std::vector<int> cyc = cycle;
  if (cyc.size() > 1 && cyc.front() == cyc.back()) cyc.pop_back();
  if (cyc.size() < 3) throw PreconditionError("green_cycle_sum: cycle needs three vertices");
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    if (cyc[i] < 0 || cyc[i] >= static_cast<int>(x.size())) throw PreconditionError("green_cycle_sum: bad vertex");
    for (std::size_t j = 0; j < i; ++j) {
      if (cyc[i] == cyc[j]) throw PreconditionError("green_cycle_sum: not a closed simple cycle");
    }
  }
  CycloElement sum = 0;
  for (std::size_t i = 0; i < cyc.size(); ++i) sum += im(x[cyc[(i + 1) % cyc.size()]] - x[cyc[i]]);
  return sum;
}

GreenIntegral green_boundary_integral_numeric(const Envelope& e, const std::vector<CycloElement>& polygon,
                                              int resolution) {
  if (e.k.empty()) throw PreconditionError("green_boundary_integral_numeric: empty envelope");
  if (resolution < 1) throw PreconditionError("green_boundary_integral_numeric: resolution must be positive");
  const std::size_t n = polygon.size();
  if (n < 3) throw PreconditionError("green_boundary_integral_numeric: polygon needs three vertices");
  for (std::size_t i = 0; i < n; ++i) {
    if (orientation(polygon[i], polygon[(i + 1) % n], polygon[(i + 2) % n]) == 0) {
      throw PreconditionError("green_boundary_integral_numeric: degenerate corner");
    }
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_intersect(polygon[i], polygon[i + 1], polygon[j], polygon[(j + 1) % n])) {
        throw PreconditionError("green_boundary_integral_numeric: polygon is not simple");
      }
    }
  }
  CycloElement twice_area = 0;
  for (std::size_t i = 0; i < n; ++i) twice_area += im(conj(polygon[i]) * polygon[(i + 1) % n]);
  const int turn = sign_real(twice_area);

  std::vector<std::complex<double>> k, d;
  for (std::size_t j = 0; j < e.k.size(); ++j) {
    k.push_back(e.k[j].to_complex());
    d.push_back(e.d[j].to_complex());
  }
  auto u = [&](std::complex<double> y) {
    double best = (d[0] - k[0] * y).real();
    for (std::size_t j = 1; j < k.size(); ++j) best = std::max(best, (d[j] - k[j] * y).real());
    return best;
  };

  GreenIntegral out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::complex<double> p = polygon[i].to_complex(), q = polygon[(i + 1) % n].to_complex();
    const double length = std::abs(q - p);
    const double h = length / resolution;
    // inward normal: left of the edge for a counterclockwise polygon
    const std::complex<double> normal = std::complex<double>(0, turn) * (q - p) / length;
    double sum = 0;
    for (int j = 0; j < resolution; ++j) {
      const std::complex<double> s = p + (q - p) * ((j + 0.5) / resolution);
      sum += (u(s + h * normal) - u(s)) / h;
    }
    out.value += sum * h;
    out.step = std::max(out.step, h);
  }
  return out;
}

std::vector<int> convex_hull(const std::vector<CycloElement>& points) {
  const int n = static_cast<int>(points.size());
  const CycloElement i = CycloElement::imaginary_unit();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const CycloElement diff = points[a] - points[b];
    const int s = sign_real(diff);
    return s != 0 ? s < 0 : sign_real(-i * diff) < 0;
  });
  order.erase(std::unique(order.begin(), order.end(), [&](int a, int b) { return points[a] == points[b]; }),
              order.end());
  if (order.size() < 3) return order;
  std::vector<int> hull;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t base = hull.size();
    for (int idx : order) {
      while (hull.size() >= base + 2 &&
             orientation(points[hull[hull.size() - 2]], points[hull.back()], points[idx]) <= 0) {
        hull.pop_back();
      }
      hull.push_back(idx);
    }
    hull.pop_back();
    std::reverse(order.begin(), order.end());
  }
  return hull;
}

}  // namespace csg
