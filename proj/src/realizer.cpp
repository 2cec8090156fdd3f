#include "csg/realizer.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace csg {

namespace {

std::vector<std::vector<int>> adjacency(const TargetGraph& t) {
  std::vector<std::vector<int>> adj(t.v);
  for (const auto& [a, b] : t.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::string rooted_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> children;
  for (int w : adj[v]) {
    if (w != parent) children.push_back(rooted_code(adj, w, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

// AHU code of a tree, rooted at a center; the smaller code for two centers.
std::string tree_code(const std::vector<std::vector<int>>& adj, const std::vector<int>& component) {
  if (component.size() == 1) return "()";
  std::map<int, int> degree;
  for (int v : component) degree[v] = static_cast<int>(adj[v].size());
  std::vector<int> layer;
  for (int v : component) {
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = component.size();
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<int> next;
    for (int v : layer) {
      for (int w : adj[v]) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (int c : layer) {
    std::string code = rooted_code(adj, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

std::vector<std::vector<int>> components(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp = {s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (int w : adj[comp[i]]) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

struct Gaussian {
  Rational re;
  Rational im;
};

long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

CycloElement to_element(const Gaussian& g) {
  return CycloElement(g.re) + CycloElement(g.im) * CycloElement::imaginary_unit();
}

// Distinct y with no three on a real line.
std::vector<Gaussian> sample_y(std::mt19937_64& rng, int n, long bound) {
  while (true) {
    std::vector<Gaussian> y;
    for (int a = 0; a < n; ++a) y.push_back({Rational(draw(rng, -bound, bound)), Rational(draw(rng, -bound, bound))});
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = a + 1; b < n && ok; ++b) {
        ok = y[a].re != y[b].re || y[a].im != y[b].im;
        for (int c = b + 1; c < n && ok; ++c) {
          const Rational cross = (y[b].re - y[a].re) * (y[c].im - y[a].im) - (y[b].im - y[a].im) * (y[c].re - y[a].re);
          ok = cross != 0;
        }
      }
    }
    if (ok) return y;
  }
}

// Imaginary parts making every target edge supporting for the given y and
// real parts h, or nothing if some edge has an empty interval.
//
// For the edge (a, b) and sigma = g_a - g_b, the support inequality at c is
// B sigma < R with A + iB = conj(y_b - y_a)(y_c - y_a) and
// R = |y_b - y_a|^2 (h_c - h_a) - A (h_b - h_a).
std::optional<std::vector<Rational>> solve_imaginary(const TargetGraph& t, const std::vector<Gaussian>& y,
                                                     const std::vector<Rational>& h, std::mt19937_64& rng) {
  std::map<std::pair<int, int>, Rational> sigma;
  for (const auto& [a, b] : t.edges) {
    const Rational dr = y[b].re - y[a].re, di = y[b].im - y[a].im;
    const Rational norm = dr * dr + di * di;
    const Rational dh = h[b] - h[a];
    std::optional<Rational> lo, hi;
    for (int c = 0; c < t.v; ++c) {
      if (c == a || c == b) continue;
      const Rational wr = y[c].re - y[a].re, wi = y[c].im - y[a].im;
      const Rational A = dr * wr + di * wi;
      const Rational B = dr * wi - di * wr;
      const Rational R = norm * (h[c] - h[a]) - A * dh;
      const Rational bound = R / B;
      if (B > 0) {
        if (!hi || bound < *hi) hi = bound;
      } else if (!lo || bound > *lo) {
        lo = bound;
      }
    }
    Rational s;
    if (lo && hi) {
      if (*lo >= *hi) return std::nullopt;
      s = (*lo + *hi) / 2;
    } else if (lo) {
      s = *lo + 1;
    } else if (hi) {
      s = *hi - 1;
    } else {
      s = Rational(draw(rng, -2, 2));
    }
    sigma[{a, b}] = s;
  }
  std::vector<Rational> g(t.v);
  std::vector<int> seen(t.v, 0);
  const auto adj = adjacency(t);
  for (const auto& comp : components(adj)) {
    g[comp.front()] = Rational(draw(rng, -2, 2));
    seen[comp.front()] = 1;
    std::vector<int> todo = {comp.front()};
    while (!todo.empty()) {
      const int v = todo.back();
      todo.pop_back();
      for (int w : adj[v]) {
        if (seen[w]) continue;
        seen[w] = 1;
        g[w] = v < w ? Rational(g[v] - sigma[{v, w}]) : Rational(g[v] + sigma[{w, v}]);
        todo.push_back(w);
      }
    }
  }
  return g;
}

RealizationResult refute_cycle(const TargetGraph& t, const std::vector<int>& cycle, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RealizationResult r;
  while (true) {
    ++r.candidates;
    const std::vector<Gaussian> ys = sample_y(rng, t.v, 2 + t.v);
    std::vector<CycloElement> x, y;
    for (int a = 0; a < t.v; ++a) {
      y.push_back(to_element(ys[a]));
      x.push_back(to_element({Rational(draw(rng, -9, 9)), Rational(draw(rng, -9, 9))}));
    }
    bool collinear_triple = false;
    for (int a = 0; a < t.v && !collinear_triple; ++a)
      for (int b = a + 1; b < t.v && !collinear_triple; ++b)
        for (int c = b + 1; c < t.v && !collinear_triple; ++c) collinear_triple = support_excess(x, y, a, b, c).is_zero();
    if (collinear_triple) continue;
    const CycleObstruction ob = cycle_obstruction(x, y, cycle);
    const CycloElement e = x[ob.c] + ob.k * y[ob.c] - ob.d;
    if (sign_real(e) > 0 || e.is_zero()) throw InternalInconsistency("realize: cycle obstruction does not verify");
    r.status = RealizationResult::Status::provably_unrealizable;
    r.x = std::move(x);
    r.y = std::move(y);
    r.witness = ob;
    r.cycle = cycle;
    return r;
  }
}

}  // namespace

TargetGraph make_target_graph(int v, std::vector<std::pair<int, int>> edges) {
  if (v < 1) throw PreconditionError("target graph needs at least one vertex");
  for (auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= v || b >= v) throw PreconditionError("target graph: vertex out of range");
    if (a == b) throw PreconditionError("target graph: loop");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw PreconditionError("target graph: repeated edge");
  }
  return TargetGraph{v, std::move(edges)};
}

TargetGraph parse_target_graph(std::string_view text) {
  std::optional<int> v;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    std::string keyword;
    if (!(in >> keyword)) continue;
    const int col = static_cast<int>(line.find(keyword)) + 1;
    if (keyword == "graph") {
      if (v) throw ParseError("repeated graph header", line_no, col);
      std::string field;
      int n = 0;
      char extra = 0;
      if (!(in >> field) || field.rfind("v=", 0) != 0 || (in >> extra)) {
        throw ParseError("expected 'graph v=<count>'", line_no, col);
      }
      try {
        std::size_t used = 0;
        n = std::stoi(field.substr(2), &used);
        if (used != field.size() - 2) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError("bad vertex count", line_no, static_cast<int>(line.find(field)) + 3);
      }
      if (n < 1) throw ParseError("vertex count must be positive", line_no, static_cast<int>(line.find(field)) + 3);
      v = n;
    } else if (keyword == "edge") {
      if (!v) throw ParseError("edge before graph header", line_no, col);
      long a = 0, b = 0;
      char extra = 0;
      if (!(in >> a >> b) || (in >> extra)) throw ParseError("expected 'edge <a> <b>'", line_no, col);
      if (a < 1 || b < 1 || a > *v || b > *v) throw ParseError("vertex out of range", line_no, col);
      if (a == b) throw ParseError("loop", line_no, col);
      const std::pair<int, int> e = std::minmax(static_cast<int>(a - 1), static_cast<int>(b - 1));
      if (std::find(edges.begin(), edges.end(), e) != edges.end()) throw ParseError("repeated edge", line_no, col);
      edges.push_back(e);
    } else {
      throw ParseError("unknown keyword", line_no, col);
    }
  }
  if (!v) throw ParseError("missing graph header", 1, 1);
  return make_target_graph(*v, std::move(edges));
}

std::string serialize(const TargetGraph& t) {
  std::string out = "graph v=" + std::to_string(t.v) + "\n";
  for (const auto& [a, b] : t.edges) out += "edge " + std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
  return out;
}

std::string forest_code(const TargetGraph& t) {
  const auto adj = adjacency(t);
  std::vector<std::string> codes;
  for (const auto& comp : components(adj)) codes.push_back(tree_code(adj, comp));
  std::sort(codes.begin(), codes.end());
  std::string out;
  for (const auto& c : codes) out += c;
  return out;
}

std::vector<TargetGraph> enumerate_forests(int v) {
  if (v < 1 || v > 8) throw PreconditionError("enumerate_forests: v must be in 1..8");
  std::vector<TargetGraph> level = {TargetGraph{1, {}}};
  for (int n = 2; n <= v; ++n) {
    std::map<std::string, TargetGraph> next;
    for (const TargetGraph& f : level) {
      TargetGraph iso{n, f.edges};
      next.emplace(forest_code(iso), iso);
      for (int u = 0; u < n - 1; ++u) {
        std::vector<std::pair<int, int>> edges = f.edges;
        edges.emplace_back(u, n - 1);
        TargetGraph leaf = make_target_graph(n, std::move(edges));
        next.emplace(forest_code(leaf), leaf);
      }
    }
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  std::stable_sort(level.begin(), level.end(),
                   [](const TargetGraph& a, const TargetGraph& b) { return a.edges.size() < b.edges.size(); });
  return level;
}

Verification verify_realization(const std::vector<CycloElement>& x, const std::vector<CycloElement>& y,
                                const TargetGraph& t, RealizeMode mode) {
  const int n = t.v;
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n) return {false, "point count differs from v"};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (y[a] == y[b]) return {false, "repeated y"};
      for (int c = b + 1; c < n; ++c) {
        if (support_excess(x, y, a, b, c).is_zero()) return {false, "three collinear points"};
      }
    }
  std::vector<std::vector<CycloElement>> xs;
  for (const auto& v : x) xs.push_back({v});
  if (!satisfies_p2(normalized_from_affine(y, xs, {}), 1)) return {false, "genericity fails"};

  if (mode == RealizeMode::maximal) {
    auto pairs = max_support_graph(x, y).edge_pairs();
    std::sort(pairs.begin(), pairs.end());
    if (pairs != t.edges) return {false, "maximal support graph differs from target"};
    return {true, ""};
  }

  std::vector<CycloElement> slopes;
  for (const auto& [a, b] : t.edges) {
    if (!is_supporting(x, y, a, b)) {
      return {false, "edge " + std::to_string(a + 1) + " " + std::to_string(b + 1) + " is not supporting"};
    }
    const CycloElement k = line_through(x[a], y[a], x[b], y[b]).first;
    if (std::find(slopes.begin(), slopes.end(), k) != slopes.end()) return {false, "repeated edge slope"};
    slopes.push_back(k);
  }
  // the construction itself, one point at infinity per slope
  const SupportOutcome out = build_support_graph(normalized_from_affine(y, xs, slopes));
  const auto* g = std::get_if<SupportGraph>(&out);
  std::vector<std::pair<int, int>> pairs;
  if (g) pairs = g->edge_pairs();
  std::sort(pairs.begin(), pairs.end());
  if (pairs != t.edges) throw InternalInconsistency("verify_realization: construction disagrees with support check");
  return {true, ""};
}

const char* to_string(RealizationResult::Status s) {
  switch (s) {
    case RealizationResult::Status::realized:
      return "realized";
    case RealizationResult::Status::budget_exhausted:
      return "budget_exhausted";
    case RealizationResult::Status::provably_unrealizable:
      return "provably_unrealizable";
  }
  return "";
}

RealizationResult realize(const TargetGraph& t, long budget, std::uint64_t seed, RealizeMode mode) {
  const AcyclicityCertificate acyclic = check_acyclic(t.v, t.edges);
  if (!acyclic.forest) return refute_cycle(t, acyclic.cycle, seed);

  std::mt19937_64 rng(seed);
  RealizationResult r;
  const long bound = 2 + t.v;
  while (r.candidates < budget) {
    ++r.candidates;
    const std::vector<Gaussian> ys = sample_y(rng, t.v, bound);
    std::vector<Rational> h(t.v);
    for (int a = 0; a < t.v; ++a) {
      if (r.candidates % 2) {
        // lift to the paraboloid, slightly perturbed
        Rational noise(draw(rng, -2, 2), 4);
        noise.canonicalize();
        h[a] = ys[a].re * ys[a].re + ys[a].im * ys[a].im + noise;
      } else {
        h[a] = Rational(draw(rng, -bound * bound, bound * bound));
      }
    }
    const auto g = solve_imaginary(t, ys, h, rng);
    if (!g) continue;
    std::vector<CycloElement> x, y;
    for (int a = 0; a < t.v; ++a) {
      x.push_back(to_element({h[a], (*g)[a]}));
      y.push_back(to_element(ys[a]));
    }
    if (verify_realization(x, y, t, mode)) {
      r.status = RealizationResult::Status::realized;
      r.x = std::move(x);
      r.y = std::move(y);
      return r;
    }
  }
  return r;
}

}  // namespace csg
