#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "csg/realizer.hpp"

namespace csg {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw PreconditionError("cannot read " + path);
  buffer << file.rdbuf();
  return buffer.str();
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  return std::string(s.substr(first, s.find_last_not_of(" \t\r") - first + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    parts.push_back(s.substr(start, at - start));
    if (at == std::string::npos) return parts;
    start = at + 1;
  }
}

ProjPoint parse_apex(const std::string& text, int order) {
  const auto parts = split(text, ';');
  if (parts.size() != 3) throw ParseError("apex needs three coordinates separated by ';'", 1, 1);
  std::size_t offset = 0;
  std::vector<CycloElement> coords;
  for (const auto& p : parts) {
    const std::size_t lead = p.find_first_not_of(" \t");
    coords.push_back(parse_cyclo(trim(p), order, 1, static_cast<int>(offset + (lead == std::string::npos ? 0 : lead)) + 1));
    offset += p.size() + 1;
  }
  return ProjPoint(coords[0], coords[1], coords[2]);
}

std::string join_ints(const std::vector<int>& v, int shift = 0) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i] + shift);
  return out;
}

std::string approx(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

std::string approx(const CycloElement& a) {
  const auto z = a.to_complex();
  std::ostringstream s;
  s << std::setprecision(12) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return s.str();
}

const char* boolean(bool b) { return b ? "true" : "false"; }

// Key=value report in insertion order.
class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  template <class T>
  Report& operator()(const std::string& key, const T& value) {
    out_ << key << "=" << value << "\n";
    return *this;
  }

 private:
  std::ostream& out_;
};

void report_lines(Report& r, const std::string& prefix, const std::vector<SpannedLine>& lines, int order) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string key = prefix + "." + std::to_string(i + 1);
    r(key + ".line", to_string(lines[i].line, order));
    r(key + ".members", join_ints(lines[i].members, 1));
  }
}

void report_bound(Report& r, const BoundReport& b) {
  r("bound.m", b.m)("bound.max_line_count", b.max_line_count)("bound.limit", b.bound);
  r("bound.exceeds", boolean(b.exceeds))("bound.sg", boolean(b.sg))("bound.consistent", boolean(b.consistent));
}

void report_witness(Report& r, const OrdinaryLineWitness& w, int order) {
  r("witness.line", to_string(w.line, order));
  r("witness.members", join_ints(w.members, 1));
}

std::string svg(const SupportGraph& g) {
  std::vector<std::complex<double>> p;
  for (const auto& y : g.y) p.push_back(y.to_complex());
  double lo_x = 0, hi_x = 1, lo_y = 0, hi_y = 1;
  if (!p.empty()) {
    lo_x = hi_x = p[0].real();
    lo_y = hi_y = p[0].imag();
  }
  for (const auto& z : p) {
    lo_x = std::min(lo_x, z.real());
    hi_x = std::max(hi_x, z.real());
    lo_y = std::min(lo_y, z.imag());
    hi_y = std::max(hi_y, z.imag());
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double size = 400, margin = 20, scale = (size - 2 * margin) / span;
  auto sx = [&](const std::complex<double>& z) { return margin + (z.real() - lo_x) * scale; };
  // imaginary axis up
  auto sy = [&](const std::complex<double>& z) { return size - margin - (z.imag() - lo_y) * scale; };
  std::ostringstream s;
  s << std::setprecision(6);
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
    << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  for (const auto& e : g.edges) {
    s << "  <line x1=\"" << sx(p[e.a]) << "\" y1=\"" << sy(p[e.a]) << "\" x2=\"" << sx(p[e.b]) << "\" y2=\""
      << sy(p[e.b]) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (std::size_t v = 0; v < p.size(); ++v) {
    s << "  <circle cx=\"" << sx(p[v]) << "\" cy=\"" << sy(p[v]) << "\" r=\"5\" fill=\"red\"><title>y" << v + 1
      << "</title></circle>\n";
  }
  s << "</svg>\n";
  return s.str();
}

void report_graph(Report& r, const PipelineRun& run, int order) {
  r("direction.t", run.direction.t.get_str())("direction.c", to_string(run.np.direction, order));
  r("heavy_line", run.np.heavy_line + 1)("vertices", run.np.vertex_count());
  for (int a = 0; a < run.np.vertex_count(); ++a) {
    const std::string key = "vertex." + std::to_string(a + 1);
    r(key + ".y", to_string(run.np.y[a], order))(key + ".x_min", to_string(run.mp.x[a], order));
    r(key + ".point", run.np.x_source[a][run.mp.index[a]] + 1);
    r(key + ".y_approx", approx(run.np.y[a]));
  }
}

struct Options {
  std::string file = "-";
  std::string apex;
  int search = 0;
  std::string svg_path;
  std::optional<int> heavy;
  int fermat = 0;
  bool hesse = false;
  std::vector<std::string> random;
  bool include_apex = false;
  long budget = 100000;
  std::uint64_t seed = 0;
  std::string mode = "construction";
  std::string polygon;
  int resolution = 1000;
};

Configuration load(const Options& o, std::istream& in) { return parse_configuration(read_input(o.file, in)); }

int cmd_gen(const Options& o, std::ostream& out) {
  const int chosen = (o.fermat > 0) + o.hesse + !o.random.empty();
  if (chosen != 1) throw PreconditionError("gen needs exactly one of --fermat, --hesse, --random");
  if (o.fermat > 0) {
    out << serialize(fermat_config(o.fermat));
  } else if (o.hesse) {
    out << serialize(hesse_config());
  } else {
    std::vector<int> counts;
    for (const auto& c : split(o.random[1], ',')) {
      try {
        counts.push_back(std::stoi(c));
      } catch (const std::exception&) {
        throw PreconditionError("bad count '" + c + "'");
      }
    }
    int m = 0;
    std::uint64_t seed = 0;
    try {
      m = std::stoi(o.random[0]);
      seed = std::stoull(o.random[2]);
    } catch (const std::exception&) {
      throw PreconditionError("--random expects m counts seed");
    }
    out << serialize(random_pencil_config(m, counts, o.include_apex, seed));
  }
  return 0;
}

int cmd_lines(const std::string& which, const Options& o, std::istream& in, std::ostream& out) {
  const Configuration c = load(o, in);
  Report r(out);
  r("command", which)("field", c.order)("points", c.size());
  if (which == "lines") {
    const auto lines = spanned_lines(c);
    r("spanned_lines", lines.size());
    report_lines(r, "line", lines, c.order);
  } else if (which == "ordinary") {
    const auto lines = ordinary_lines(c);
    r("ordinary_lines", lines.size());
    report_lines(r, "ordinary", lines, c.order);
  } else {
    const bool col = is_collinear(c);
    r("collinear", boolean(col))("ordinary_lines", ordinary_lines(c).size())("sg", boolean(is_sylvester_gallai(c)));
  }
  return 0;
}

int cmd_pencil(const Options& o, std::istream& in, std::ostream& out) {
  const Configuration c = load(o, in);
  Report r(out);
  r("command", "pencil")("points", c.size());
  if (o.search > 0) {
    const auto found = find_concurrency_points(c, o.search);
    r("max_m", o.search)("candidates", found.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
      const std::string key = "candidate." + std::to_string(i + 1);
      r(key + ".apex", to_string(found[i].apex, c.order))(key + ".m", found[i].m);
    }
    return 0;
  }
  if (o.apex.empty()) throw PreconditionError("pencil needs --apex or --search");
  const ProjPoint apex = parse_apex(o.apex, c.order);
  const PencilStructure ps = pencil_structure(c, apex);
  r("apex", to_string(apex, c.order))("apex_in_set", boolean(ps.apex_in_set()));
  if (ps.apex_index) r("apex_point", *ps.apex_index + 1);
  r("m", ps.m())("counts", join_ints(ps.counts()));
  for (int a = 0; a < ps.m(); ++a) {
    const std::string key = "pencil." + std::to_string(a + 1);
    r(key + ".line", to_string(ps.lines[a], c.order))(key + ".members", join_ints(ps.members[a], 1));
  }
  report_bound(r, theorem_bound_report(c, apex));
  return 0;
}

int cmd_graph(const Options& o, std::istream& in, std::ostream& out) {
  const Configuration c = load(o, in);
  if (o.apex.empty()) throw PreconditionError("graph needs --apex");
  const ProjPoint apex = parse_apex(o.apex, c.order);
  std::optional<int> heavy;
  if (o.heavy) heavy = *o.heavy - 1;
  const PipelineRun run = run_pipeline(c, apex, heavy);
  const int order = run.np.config.order;
  Report r(out);
  r("command", "graph")("apex", to_string(apex, c.order))("m", run.np.m());
  report_graph(r, run, order);
  if (const auto* w = std::get_if<OrdinaryLineWitness>(&run.outcome)) {
    r("outcome", "witness");
    report_witness(r, *w, c.order);
    return 0;
  }
  const SupportGraph& g = std::get<SupportGraph>(run.outcome);
  r("outcome", "graph")("edges", g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const std::string key = "edge." + std::to_string(e + 1);
    r(key, std::to_string(g.edges[e].a + 1) + "-" + std::to_string(g.edges[e].b + 1));
    r(key + ".k", to_string(g.edges[e].k, order))(key + ".d", to_string(g.edges[e].d, order));
    r(key + ".point", run.np.k_source[g.edges[e].infinite_point] + 1);
  }
  const PlanarityCertificate planar = check_planarity(g);
  r("planar", boolean(planar.planar));
  if (!planar.planar) r("crossing", std::to_string(planar.edge1 + 1) + "," + std::to_string(planar.edge2 + 1));
  const AcyclicityCertificate forest = check_acyclic(g);
  r("forest", boolean(forest.forest));
  if (!forest.forest) r("cycle", join_ints(forest.cycle, 1));
  const BoundChain b = bound_chain_report(g, run.np.m());
  r("bound.binomial", b.binom_bound)("bound.planar", b.planar_bound)("bound.forest", b.forest_bound);
  if (!o.svg_path.empty()) {
    std::ofstream file(o.svg_path);
    if (!file) throw PreconditionError("cannot write " + o.svg_path);
    file << svg(g);
    r("svg", o.svg_path);
  }
  return 0;
}

int cmd_find_ordinary(const Options& o, std::istream& in, std::ostream& out) {
  const Configuration c = load(o, in);
  if (o.apex.empty()) throw PreconditionError("find-ordinary needs --apex");
  const ProjPoint apex = parse_apex(o.apex, c.order);
  const OrdinaryLineResult res = find_ordinary_line_concurrent(c, apex);
  Report r(out);
  r("command", "find-ordinary")("apex", to_string(apex, c.order));
  r("status", res.status == OrdinaryLineResult::Status::witness ? "witness" : "bound_not_exceeded");
  report_bound(r, res.bound);
  if (res.witness) report_witness(r, *res.witness, c.order);
  if (res.graph) r("edges", res.graph->edges.size())("forest", boolean(check_acyclic(*res.graph).forest));
  return 0;
}

int cmd_realize(const Options& o, std::istream& in, std::ostream& out) {
  const TargetGraph t = parse_target_graph(read_input(o.file, in));
  RealizeMode mode = RealizeMode::construction;
  if (o.mode == "maximal") {
    mode = RealizeMode::maximal;
  } else if (o.mode != "construction") {
    throw PreconditionError("unknown mode " + o.mode);
  }
  const RealizationResult res = realize(t, o.budget, o.seed, mode);
  Report r(out);
  r("command", "realize")("v", t.v)("edges", t.edges.size())("mode", o.mode)("seed", o.seed);
  r("status", to_string(res.status))("candidates", res.candidates);
  for (std::size_t a = 0; a < res.x.size(); ++a) {
    const std::string key = "point." + std::to_string(a + 1);
    r(key + ".x", to_string(res.x[a], 4))(key + ".y", to_string(res.y[a], 4));
  }
  if (res.witness) {
    const CycleObstruction& w = *res.witness;
    r("cycle", join_ints(res.cycle, 1));
    r("witness.edge", std::to_string(w.a + 1) + "-" + std::to_string(w.b + 1))("witness.vertex", w.c + 1);
    r("witness.k", to_string(w.k, 4))("witness.d", to_string(w.d, 4))("witness.equality", boolean(w.equality));
  }
  if (res.status == RealizationResult::Status::realized) {
    r("verified", boolean(verify_realization(res.x, res.y, t, mode).ok));
  }
  return 0;
}

int cmd_green(const Options& o, std::istream& in, std::ostream& out) {
  const Configuration c = load(o, in);
  if (o.apex.empty()) throw PreconditionError("green-check needs --apex");
  const ProjPoint apex = parse_apex(o.apex, c.order);
  const PipelineRun run = run_pipeline(c, apex);
  const auto* g = std::get_if<SupportGraph>(&run.outcome);
  if (!g) throw PreconditionError("green-check: the pipeline found an ordinary line, there is no support graph");
  if (g->edges.empty()) throw PreconditionError("green-check: support graph has no edges");
  std::vector<int> vertices;
  if (o.polygon.empty()) {
    vertices = convex_hull(g->y);
  } else {
    for (const auto& s : split(o.polygon, ',')) {
      int v = 0;
      try {
        v = std::stoi(s);
      } catch (const std::exception&) {
        throw PreconditionError("bad polygon vertex '" + s + "'");
      }
      if (v < 1 || v > g->vertex_count()) throw PreconditionError("polygon vertex out of range: " + s);
      vertices.push_back(v - 1);
    }
  }
  std::vector<CycloElement> polygon;
  for (int v : vertices) polygon.push_back(g->y[v]);
  const GreenIntegral gi = green_boundary_integral_numeric(envelope_of(*g), polygon, o.resolution);
  Report r(out);
  r("command", "green-check")("apex", to_string(apex, c.order))("polygon", join_ints(vertices, 1));
  r("resolution", o.resolution)("integral_approx", approx(gi.value))("step_approx", approx(gi.step));
  r("within_10h", boolean(std::abs(gi.value) <= 10 * gi.step))("below_minus_h", boolean(gi.value < -gi.step));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Point configurations on concurrent lines over cyclotomic fields", "csg"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "write a configuration");
  gen->add_option("--fermat", o.fermat, "Fermat configuration of order n");
  gen->add_flag("--hesse", o.hesse, "the Hesse configuration");
  gen->add_option("--random", o.random, "m counts seed, counts comma separated")->expected(3);
  gen->add_flag("--include-apex", o.include_apex, "with --random, add the apex to the set");

  std::map<std::string, CLI::App*> file_commands;
  for (const char* name : {"lines", "ordinary", "sg-check", "pencil", "graph", "find-ordinary", "green-check"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("file", o.file, "configuration file, - for standard input");
    file_commands[name] = sub;
  }
  file_commands["lines"]->description("spanned lines");
  file_commands["ordinary"]->description("ordinary lines");
  file_commands["sg-check"]->description("Sylvester-Gallai test");
  file_commands["pencil"]->description("pencil structure and bound");
  file_commands["graph"]->description("support graph pipeline");
  file_commands["find-ordinary"]->description("ordinary line through the pencil argument");
  file_commands["green-check"]->description("numeric Green boundary integral of the envelope");
  for (const char* name : {"pencil", "graph", "find-ordinary", "green-check"}) {
    file_commands[name]->add_option("--apex", o.apex, "apex as \"x;y;z\"");
  }
  file_commands["pencil"]->add_option("--search", o.search, "list apex candidates with m <= max_m");
  file_commands["graph"]->add_option("--svg", o.svg_path, "write the drawing of G");
  file_commands["graph"]->add_option("--heavy", o.heavy, "pencil line sent to infinity, from 1");
  file_commands["green-check"]->add_option("--polygon", o.polygon, "vertices v1,v2,... from 1; default the hull");
  file_commands["green-check"]->add_option("--resolution", o.resolution, "samples per polygon edge");

  auto* rz = app.add_subcommand("realize", "search points whose support graph is the target");
  rz->add_option("file", o.file, "graph file, - for standard input");
  rz->add_option("--budget", o.budget, "candidate count");
  rz->add_option("--seed", o.seed, "random seed");
  rz->add_option("--mode", o.mode, "construction or maximal");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    for (const char* name : {"lines", "ordinary", "sg-check"}) {
      if (file_commands[name]->parsed()) return cmd_lines(name, o, in, out);
    }
    if (file_commands["pencil"]->parsed()) return cmd_pencil(o, in, out);
    if (file_commands["graph"]->parsed()) return cmd_graph(o, in, out);
    if (file_commands["find-ordinary"]->parsed()) return cmd_find_ordinary(o, in, out);
    if (file_commands["green-check"]->parsed()) return cmd_green(o, in, out);
    if (rz->parsed()) return cmd_realize(o, in, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace csg
