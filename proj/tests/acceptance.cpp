// One PASS/FAIL line per acceptance criterion, with wall time.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "csg/realizer.hpp"

using namespace csg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void expect(Outcome& o, bool ok, const std::string& what) {
  if (!ok && o.pass) {
    o.pass = false;
    o.detail = what;
  }
}

CycloElement I() { return CycloElement::imaginary_unit(); }

CycloElement gaussian(std::mt19937_64& rng, long bound, long den) {
  auto part = [&] {
    Rational q(static_cast<long>(rng() % (2 * bound + 1)) - bound, 1 + static_cast<long>(rng() % den));
    q.canonicalize();
    return CycloElement(q);
  };
  return part() + part() * I();
}

// Oracle: 3x3 determinants over all triples.
bool det_collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  return determinant<CycloElement>(p.coords(), q.coords(), r.coords()).is_zero();
}

int brute_incident_count(const Configuration& c, int i, int j) {
  int n = 0;
  for (std::size_t k = 0; k < c.size(); ++k) n += det_collinear(c.points[i], c.points[j], c.points[k]);
  return n;
}

Rational brute_line_count(const Configuration& c) {
  Rational total = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const int r = brute_incident_count(c, i, j);
      Rational share(2, r * (r - 1));
      share.canonicalize();
      total += share;
    }
  return total;
}

std::pair<std::vector<CycloElement>, std::vector<CycloElement>> generic_points(std::mt19937_64& rng, int n) {
  while (true) {
    std::vector<CycloElement> x, y;
    for (int a = 0; a < n; ++a) {
      x.push_back(gaussian(rng, 6, 3));
      y.push_back(gaussian(rng, 6, 3));
    }
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b) {
        ok = y[a] != y[b];
        for (int c = b + 1; c < n && ok; ++c) {
          ok = !determinant<CycloElement>(Vector3<CycloElement>(1, x[a], y[a]), Vector3<CycloElement>(1, x[b], y[b]),
                                          Vector3<CycloElement>(1, x[c], y[c]))
                    .is_zero();
        }
      }
    if (ok) return {x, y};
  }
}

Outcome fermat_hesse() {
  Outcome o;
  const Configuration c = fermat_config(3);
  expect(o, c.size() == 9, "point count");
  const auto lines = spanned_lines(c);
  expect(o, lines.size() == 12, "spanned line count");
  expect(o, brute_line_count(c) == 12, "determinant oracle line count");
  for (const auto& l : lines) expect(o, l.multiplicity() == 3, "multiplicity");
  expect(o, ordinary_lines(c).empty(), "ordinary lines");
  expect(o, is_sylvester_gallai(c), "SG");
  o.detail = o.pass ? "9 points, 12 lines of multiplicity 3, SG" : o.detail;
  return o;
}

Outcome sharpness() {
  Outcome o;
  for (int n = 3; n <= 6; ++n) {
    const Configuration c = fermat_config(n);
    const PencilStructure ps = pencil_structure(c, ProjPoint(0, 0, 1));
    auto counts = ps.counts();
    std::sort(counts.begin(), counts.end());
    std::vector<int> expected(n, 1);
    expected.push_back(n);
    expected.push_back(n);
    expect(o, ps.m() == n + 2, "m = n + 2");
    expect(o, counts == expected, "counts");
    const BoundReport r = theorem_bound_report(c, ProjPoint(0, 0, 1));
    expect(o, r.max_line_count == ps.m() - 2 && !r.exceeds && r.consistent, "bound attained");
  }
  if (o.pass) o.detail = "n=3..6: m=n+2, max count m-2";
  return o;
}

Outcome hesse_pencils() {
  Outcome o;
  const Configuration h = hesse_config();
  for (const auto& p : h.points) {
    const PencilStructure ps = pencil_structure(h, p);
    const auto counts = ps.counts();
    expect(o, ps.m() == 4 && counts == std::vector<int>{2, 2, 2, 2}, "pencil at a configuration point");
    expect(o, std::accumulate(counts.begin(), counts.end(), 0) + 1 == 9, "total");
  }
  if (o.pass) o.detail = "all 9 apexes: m=4, counts 2,2,2,2";
  return o;
}

Outcome sg_pipeline() {
  Outcome o;
  for (int n = 3; n <= 5; ++n) {
    const PipelineRun run = run_pipeline(fermat_config(n), ProjPoint(0, 0, 1));
    const auto* g = std::get_if<SupportGraph>(&run.outcome);
    expect(o, g != nullptr, "witness on an SG configuration");
    if (!g) continue;
    expect(o, static_cast<int>(g->edges.size()) == n, "edge count");
    expect(o, check_planarity(*g).planar, "planarity");
    expect(o, check_acyclic(*g).forest, "acyclicity");
    const BoundChain b = bound_chain_report(*g, run.np.m());
    expect(o, b.edges == b.forest_bound, "edges = m - 2");
  }
  if (o.pass) o.detail = "n=3..5: n edges, planar forest, edges = m-2";
  return o;
}

Outcome constructive() {
  Outcome o;
  std::mt19937_64 rng(2024);
  for (std::uint64_t i = 0; i < 100; ++i) {
    const int m = 3 + static_cast<int>(i % 3);
    std::vector<int> counts(m);
    for (auto& k : counts) k = 1 + static_cast<int>(rng() % (m - 1));
    counts[rng() % m] = m - 1 + static_cast<int>(rng() % 2);
    const PencilSample s = sample_pencil(m, counts, i % 4 == 0, 1000 + i);
    const OrdinaryLineResult r = find_ordinary_line_concurrent(s.config, s.apex);
    expect(o, r.bound.exceeds, "bound not exceeded");
    expect(o, r.witness.has_value(), "no witness");
    if (!r.witness) continue;
    expect(o, count_incident(s.config, r.witness->line) == 2, "witness count");
    const auto ordinary = ordinary_lines(s.config);
    expect(o, std::any_of(ordinary.begin(), ordinary.end(), [&](const auto& l) { return l.line == r.witness->line; }),
           "witness not among ordinary lines");
  }
  if (o.pass) o.detail = "100 witnesses, each on exactly 2 points";
  return o;
}

Outcome planar_forests() {
  Outcome o;
  std::mt19937_64 rng(57);
  for (int t = 0; t < 200; ++t) {
    const auto [x, y] = generic_points(rng, 1 + t % 6);
    const SupportGraph g = max_support_graph(x, y);
    expect(o, check_planarity(g).planar, "crossing");
    expect(o, check_acyclic(g).forest, "cycle");
  }
  if (o.pass) o.detail = "200 sets planar and acyclic";
  return o;
}

Outcome envelope_properties() {
  Outcome o;
  std::mt19937_64 rng(4);
  std::vector<SupportGraph> graphs;
  for (int n = 3; n <= 5; ++n) graphs.push_back(std::get<SupportGraph>(run_pipeline(fermat_config(n), ProjPoint(0, 0, 1)).outcome));
  while (graphs.size() < 23) {
    const auto [x, y] = generic_points(rng, 6);
    SupportGraph g = max_support_graph(x, y);
    if (!g.edges.empty()) graphs.push_back(std::move(g));
  }
  for (const auto& g : graphs) {
    const Envelope e = envelope_of(g);
    for (const auto& edge : g.edges) {
      for (int v : {edge.a, edge.b}) expect(o, envelope_eval(e, g.y[v]).value == re(g.x[v]), "(a) vertex value");
      Rational lambda(1 + static_cast<long>(rng() % 9), 10);
      lambda.canonicalize();
      const CycloElement l(lambda), l1(Rational(1 - lambda));
      expect(o, envelope_eval(e, g.y[edge.a] * l + g.y[edge.b] * l1).value == re(g.x[edge.a]) * l + re(g.x[edge.b]) * l1,
             "(c) edge linearity");
    }
  }
  for (int t = 0; t < 100; ++t) {
    const Envelope e = envelope_of(graphs[t % graphs.size()]);
    const CycloElement y1 = gaussian(rng, 9, 4), y2 = gaussian(rng, 9, 4);
    Rational lambda(static_cast<long>(rng() % 11), 10);
    lambda.canonicalize();
    const CycloElement l(lambda), l1(Rational(1 - lambda));
    const CycloElement lhs = envelope_eval(e, y1 * l + y2 * l1).value;
    const CycloElement rhs = envelope_eval(e, y1).value * l + envelope_eval(e, y2).value * l1;
    expect(o, sign_real(lhs - rhs) <= 0, "(b) convexity");
  }
  if (o.pass) o.detail = "(a), (b) on 100 triples, (c) exact";
  return o;
}

Outcome green_numeric() {
  Outcome o;
  const Envelope linear = envelope_of(max_support_graph({0, 2 + I()}, {0, 1}));
  const GreenIntegral flat = green_boundary_integral_numeric(linear, {0, 1, I()}, 1000);
  expect(o, std::abs(flat.value) <= 10 * flat.step, "linear envelope");

  Envelope three;
  const std::vector<CycloElement> x = {0, 0, 1}, y = {0, 1, I()};
  for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    const auto [k, d] = line_through(x[a], y[a], x[b], y[b]);
    three.k.push_back(k);
    three.d.push_back(d);
  }
  const GreenIntegral bent = green_boundary_integral_numeric(three, {0, 1, I()}, 1000);
  std::ostringstream s;
  s << "linear |I|=" << std::abs(flat.value) << " (h=" << flat.step << "); three-point envelope on (0,1,i) I=" << bent.value
    << " (h=" << bent.step << ")";
  expect(o, bent.value < -bent.step, s.str() + ", expected I < -h");
  if (o.pass) o.detail = s.str();
  return o;
}

Outcome telescoping() {
  Outcome o;
  std::mt19937_64 rng(9);
  const int orders[] = {4, 12, 8, 20};
  for (int t = 0; t < 1000; ++t) {
    const int n = 3 + t % 6;
    const int order = orders[t % 4];
    std::vector<CycloElement> x;
    for (int a = 0; a < n + 2; ++a) {
      std::vector<Rational> coeffs(CycloElement::zeta(order).degree());
      for (auto& q : coeffs) {
        q = Rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 5));
        q.canonicalize();
      }
      x.emplace_back(order, coeffs);
    }
    std::vector<int> cycle(n + 2);
    std::iota(cycle.begin(), cycle.end(), 0);
    std::shuffle(cycle.begin(), cycle.end(), rng);
    cycle.resize(n);
    expect(o, green_cycle_sum(x, cycle).is_zero(), "nonzero sum");
  }
  if (o.pass) o.detail = "1000 cycles, sum exactly 0";
  return o;
}

Outcome small_forests() {
  Outcome o;
  int realized = 0;
  for (int v = 1; v <= 4; ++v) {
    for (const auto& f : enumerate_forests(v)) {
      const RealizationResult r = realize(f);
      const bool ok = r.status == RealizationResult::Status::realized && verify_realization(r.x, r.y, f).ok;
      expect(o, ok, "forest not realized: " + serialize(f));
      realized += ok;
    }
  }
  const std::vector<TargetGraph> cycles = {make_target_graph(3, {{0, 1}, {1, 2}, {0, 2}}),
                                           make_target_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})};
  for (const auto& t : cycles) {
    const RealizationResult r = realize(t);
    expect(o, r.status == RealizationResult::Status::provably_unrealizable && r.witness, "cycle not refuted");
    if (!r.witness) continue;
    const CycleObstruction& w = *r.witness;
    const CycloElement e = r.x[w.c] + w.k * r.y[w.c] - w.d;
    expect(o, sign_real(e) < 0 || (sign_real(e) == 0 && !e.is_zero()), "witness does not violate support");
  }
  if (o.pass) o.detail = std::to_string(realized) + " forests realized, C3 and C4 refuted";
  return o;
}

Outcome round_trip() {
  Outcome o;
  std::mt19937_64 rng(11);
  for (std::uint64_t i = 0; i < 100; ++i) {
    Configuration c;
    if (i % 10 == 9) {
      c = fermat_config(1 + static_cast<int>(i % 7));
    } else {
      const int m = 2 + static_cast<int>(rng() % 4);
      std::vector<int> counts(m);
      for (auto& k : counts) k = 1 + static_cast<int>(rng() % 3);
      c = random_pencil_config(m, counts, rng() % 2, i);
    }
    const std::string text = serialize(c);
    const Configuration back = parse_configuration(text);
    expect(o, back == c && serialize(back) == text, "round trip differs");
  }
  if (o.pass) o.detail = "100 configurations byte-identical";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Fermat/Hesse reproduction", 1, fermat_hesse},
      {2, "sharpness of the concurrent-line bound", 5, sharpness},
      {3, "Hesse pencils at configuration points", 5, hesse_pencils},
      {4, "pipeline on SG inputs", 30, sg_pipeline},
      {5, "constructive ordinary lines", 60, constructive},
      {6, "support graphs planar and acyclic", 60, planar_forests},
      {7, "envelope properties", 60, envelope_properties},
      {8, "Green inequality numerically", 10, green_numeric},
      {9, "Green telescoping", 60, telescoping},
      {10, "realizing small forests", 300, small_forests},
      {11, "format round trip", 60, round_trip},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      o.pass = false;
      o.detail += " (over time limit)";
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << std::fixed
              << std::setprecision(2) << seconds << " s] " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
