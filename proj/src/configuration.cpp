#include "csg/configuration.hpp"

#include <numeric>
#include <random>

namespace csg {

namespace {

void check_order(int order) {
  if (order < 4 || order % 4 != 0) {
    throw PreconditionError("field order must be a positive multiple of 4, got " + std::to_string(order));
  }
}

bool in_field(const ProjPoint& p, int order) {
  for (int i = 0; i < 3; ++i) {
    if (order % p[i].order() != 0) return false;
  }
  return true;
}

// Uniform-ish integer in [lo, hi]. Plain modulo keeps the sequence identical
// across standard library implementations.
long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

CycloElement draw_gaussian(std::mt19937_64& rng, long bound) {
  return CycloElement(draw(rng, -bound, bound)) + CycloElement(draw(rng, -bound, bound)) * CycloElement::imaginary_unit();
}

Vector3<CycloElement> draw_vector(std::mt19937_64& rng, long bound) {
  while (true) {
    Vector3<CycloElement> v(draw_gaussian(rng, bound), draw_gaussian(rng, bound), draw_gaussian(rng, bound));
    if (!(v[0].is_zero() && v[1].is_zero() && v[2].is_zero())) return v;
  }
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  std::size_t b = 0;
  while (b < s.size() && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  std::size_t e = s.size();
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  offset += b;
  return s.substr(b, e - b);
}

}  // namespace

Configuration make_configuration(int order, std::vector<ProjPoint> points) {
  check_order(order);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!in_field(points[i], order)) {
      throw PreconditionError("point " + std::to_string(i) + " not in Q(zeta_" + std::to_string(order) + ")");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (points[i] == points[j]) throw PreconditionError("duplicate point " + std::to_string(i));
    }
  }
  return Configuration{order, std::move(points)};
}

int find_point(const Configuration& c, const ProjPoint& p) {
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    if (c.points[i] == p) return static_cast<int>(i);
  }
  return -1;
}

Configuration fermat_config(int n) {
  if (n < 1) throw PreconditionError("fermat_config: n must be at least 1");
  const int order = std::lcm(n, 4);
  std::vector<CycloElement> w;
  for (int e = 0; e < n; ++e) w.push_back(CycloElement::zeta(n, e).embed(order));
  const CycloElement zero(order, {}), one = CycloElement(1).embed(order);
  std::vector<ProjPoint> points;
  for (int a = 0; a < n; ++a) points.emplace_back(zero, one, -w[a]);
  for (int b = 0; b < n; ++b) points.emplace_back(-w[b], zero, one);
  for (int c = 0; c < n; ++c) points.emplace_back(one, -w[c], zero);
  return make_configuration(order, std::move(points));
}

Configuration hesse_config() { return fermat_config(3); }

Configuration random_pencil_config(int m, const std::vector<int>& counts, bool include_apex, std::uint64_t seed) {
  return sample_pencil(m, counts, include_apex, seed).config;
}

PencilSample sample_pencil(int m, const std::vector<int>& counts, bool include_apex, std::uint64_t seed) {
  if (m < 2) throw PreconditionError("random_pencil_config: m must be at least 2");
  if (static_cast<int>(counts.size()) != m) throw PreconditionError("random_pencil_config: need one count per line");
  int total = 0;
  for (int k : counts) {
    if (k < 0) throw PreconditionError("random_pencil_config: negative count");
    total += k;
  }
  if (total == 0) throw PreconditionError("random_pencil_config: no points besides the apex");

  std::mt19937_64 rng(seed);
  const Vector3<CycloElement> apex = draw_vector(rng, 3);
  const ProjPoint apex_point(apex);

  std::vector<Vector3<CycloElement>> directions;
  std::vector<ProjLine> lines;
  while (static_cast<int>(lines.size()) < m) {
    const Vector3<CycloElement> v = draw_vector(rng, 3);
    const ProjPoint q(v);
    if (q == apex_point) continue;
    const ProjLine l = join(apex_point, q);
    bool fresh = true;
    for (const auto& other : lines) fresh = fresh && other != l;
    if (!fresh) continue;
    directions.push_back(v);
    lines.push_back(l);
  }

  std::vector<ProjPoint> points;
  std::vector<int> line_of;
  for (int a = 0; a < m; ++a) {
    for (int j = 0; j < counts[a]; ++j) {
      for (long attempt = 0;; ++attempt) {
        const CycloElement t = draw_gaussian(rng, 2 + attempt / 16);
        if (t.is_zero()) continue;
        const ProjPoint p(Vector3<CycloElement>(apex + directions[a] * t));
        bool ok = true;
        for (std::size_t q = 0; q < points.size() && ok; ++q) {
          if (points[q] == p) ok = false;
          for (std::size_t r = q + 1; r < points.size() && ok; ++r) {
            if (line_of[q] == a || line_of[r] == a || line_of[q] == line_of[r]) continue;
            if (collinear(p, points[q], points[r])) ok = false;
          }
        }
        if (!ok) continue;
        points.push_back(p);
        line_of.push_back(a);
        break;
      }
    }
  }
  if (include_apex) points.insert(points.begin(), apex_point);
  return PencilSample{make_configuration(4, std::move(points)), apex_point, std::move(lines)};
}

Configuration parse_configuration(std::string_view text) {
  int order = 0;
  std::vector<ProjPoint> points;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t offset = 0;
    line = trim(line, offset);
    if (line.empty()) continue;

    const std::size_t space = line.find_first_of(" \t");
    const std::string_view keyword = line.substr(0, space);
    std::size_t rest_offset = offset + (space == std::string_view::npos ? line.size() : space);
    std::string_view rest = space == std::string_view::npos ? std::string_view() : line.substr(space);
    rest = trim(rest, rest_offset);

    if (keyword == "field") {
      if (order != 0) throw ParseError("second field header", line_no, static_cast<int>(offset) + 1);
      int value = 0;
      for (char ch : rest) {
        if (ch < '0' || ch > '9' || value > 100000) {
          throw ParseError("expected field order", line_no, static_cast<int>(rest_offset) + 1);
        }
        value = value * 10 + (ch - '0');
      }
      if (value < 4 || value % 4 != 0) {
        throw ParseError("field order must be a positive multiple of 4", line_no, static_cast<int>(rest_offset) + 1);
      }
      order = value;
    } else if (keyword == "point") {
      if (order == 0) throw ParseError("point before field header", line_no, static_cast<int>(offset) + 1);
      Vector3<CycloElement> coords;
      std::size_t start = 0;
      for (int i = 0; i < 3; ++i) {
        const std::size_t semi = rest.find(';', start);
        if ((i < 2) != (semi != std::string_view::npos)) {
          const int col = static_cast<int>(rest_offset + (semi == std::string_view::npos ? rest.size() : semi)) + 1;
          throw ParseError("expected three coordinates separated by ';'", line_no, col);
        }
        const std::size_t stop = i < 2 ? semi : rest.size();
        coords[i] = parse_cyclo(rest.substr(start, stop - start), order, line_no,
                                static_cast<int>(rest_offset + start) + 1);
        start = stop + 1;
      }
      if (coords[0].is_zero() && coords[1].is_zero() && coords[2].is_zero()) {
        throw ParseError("zero point", line_no, static_cast<int>(offset) + 1);
      }
      ProjPoint p(coords);
      for (const auto& q : points) {
        if (q == p) throw ParseError("duplicate point", line_no, static_cast<int>(offset) + 1);
      }
      points.push_back(std::move(p));
    } else {
      throw ParseError("unknown keyword '" + std::string(keyword) + "'", line_no, static_cast<int>(offset) + 1);
    }
  }
  if (order == 0) throw ParseError("missing field header", line_no == 0 ? 1 : line_no, 1);
  return Configuration{order, std::move(points)};
}

std::string serialize(const Configuration& c) {
  std::string out = "field " + std::to_string(c.order) + "\n";
  for (const auto& p : c.points) out += "point " + to_string(p, c.order) + "\n";
  return out;
}

}  // namespace csg
