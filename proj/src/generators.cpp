#include "systolic/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace systolic {

namespace {

// Accumulates simplices with per-edge lengths, then emits the sorted complex.
class ComplexBuilder {
 public:
  explicit ComplexBuilder(int vertex_count) : vertex_count_(vertex_count) {}

  void add_edge(int u, int v, double length) {
    if (u > v) std::swap(u, v);
    auto [it, inserted] = edges_.try_emplace({u, v}, length);
    if (!inserted && std::abs(it->second - length) >
                         1e-9 * std::max(1.0, std::abs(length)))
      fail(ErrorCode::invalid_argument,
           "generator produced an edge with two incompatible lengths");
  }

  void add_triangle(int u, int v, int w) {
    std::array<int, 3> t{u, v, w};
    std::sort(t.begin(), t.end());
    triangles_.insert(t);
  }

  MetricComplex build() const {
    Complex2 c;
    c.vertex_count = vertex_count_;
    PLMetric metric;
    for (const auto& [e, len] : edges_) {
      c.edges.push_back(e);
      metric.lengths.push_back(len);
    }
    c.triangles.assign(triangles_.begin(), triangles_.end());
    return MetricComplex::make(std::move(c), std::move(metric));
  }

 private:
  int vertex_count_;
  std::map<std::array<int, 2>, double> edges_;
  std::set<std::array<int, 3>> triangles_;
};

int require_grid_param(double value, const char* name) {
  int n = static_cast<int>(value);
  if (n != value || n < 3)
    fail(ErrorCode::invalid_argument,
         std::string(name) + " must be an integer >= 3");
  return n;
}

double require_positive(double value, const char* name) {
  if (!(value > 0))
    fail(ErrorCode::invalid_argument, std::string(name) + " must be > 0");
  return value;
}

// Flat torus from the lattice spanned by vectors a and b; cells split along
// the (b - a) diagonal so all three lattice directions appear as edges.
MetricComplex lattice_torus(int m, int n, double ax, double ay, double bx,
                            double by) {
  auto vid = [m](int i, int j) { return j * m + i; };
  double len_a = std::hypot(ax, ay);
  double len_b = std::hypot(bx, by);
  double len_d = std::hypot(bx - ax, by - ay);
  ComplexBuilder builder(m * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) {
      int i1 = (i + 1) % m, j1 = (j + 1) % n;
      builder.add_edge(vid(i, j), vid(i1, j), len_a);
      builder.add_edge(vid(i, j), vid(i, j1), len_b);
      builder.add_edge(vid(i1, j), vid(i, j1), len_d);
      builder.add_triangle(vid(i, j), vid(i1, j), vid(i, j1));
      builder.add_triangle(vid(i1, j), vid(i, j1), vid(i1, j1));
    }
  return builder.build();
}

MetricComplex torus_grid(int m, int n, double lx, double ly) {
  return lattice_torus(m, n, lx / m, 0.0, 0.0, ly / n);
}

MetricComplex hex_torus(int m, int n, double scale) {
  return lattice_torus(m, n, scale / m, 0.0, scale / (2.0 * n),
                       scale * std::numbers::sqrt3 / (2.0 * n));
}

MetricComplex klein_grid(int m, int n, double lx, double ly) {
  auto vid = [m](int i, int j) { return j * m + i; };
  double hx = lx / m, hy = ly / n;
  double hd = std::hypot(hx, hy);
  ComplexBuilder builder(m * n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) {
      int i1 = (i + 1) % m;
      // corners: a--b bottom, c--d top; the top row wraps with a mirror
      int a = vid(i, j), b = vid(i1, j);
      int c, d;
      if (j + 1 < n) {
        c = vid(i, j + 1);
        d = vid(i1, j + 1);
      } else {
        c = vid((m - i) % m, 0);
        d = vid((m - i - 1) % m, 0);
      }
      builder.add_edge(a, b, hx);
      builder.add_edge(a, c, hy);
      builder.add_edge(b, d, hy);
      builder.add_edge(c, d, hx);
      builder.add_edge(a, d, hd);
      builder.add_triangle(a, b, d);
      builder.add_triangle(a, c, d);
    }
  return builder.build();
}

MetricComplex rp2_minimal() {
  // Antipodal quotient of the icosahedron: 6 vertices, 15 edges, 10 faces.
  static const std::array<std::array<int, 3>, 10> faces{{{0, 1, 2},
                                                         {0, 1, 3},
                                                         {0, 2, 4},
                                                         {0, 3, 5},
                                                         {0, 4, 5},
                                                         {1, 2, 5},
                                                         {1, 3, 4},
                                                         {1, 4, 5},
                                                         {2, 3, 4},
                                                         {2, 3, 5}}};
  ComplexBuilder builder(6);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) builder.add_edge(u, v, 1.0);
  for (const auto& f : faces) builder.add_triangle(f[0], f[1], f[2]);
  return builder.build();
}

// Triangulated 4g-gon with the standard a b a^-1 b^-1 ... identification.
// Each side is split into 3 boundary segments; an inner ring at half radius
// and a center vertex complete the triangulation, which keeps the quotient
// simplicial.
MetricComplex genus_polygon(int g) {
  const int sides = 4 * g;
  const int ring = 3 * sides;

  // boundary point positions on the polygon (corners on the unit circle)
  std::vector<std::array<double, 2>> q(ring);
  for (int s = 0; s < sides; ++s) {
    double t0 = 2.0 * std::numbers::pi * s / sides;
    double t1 = 2.0 * std::numbers::pi * (s + 1) / sides;
    std::array<double, 2> c0{std::cos(t0), std::sin(t0)};
    std::array<double, 2> c1{std::cos(t1), std::sin(t1)};
    for (int k = 0; k < 3; ++k) {
      double f = k / 3.0;
      q[3 * s + k] = {c0[0] + f * (c1[0] - c0[0]), c0[1] + f * (c1[1] - c0[1])};
    }
  }

  // boundary identification classes via union-find
  std::vector<int> parent(ring);
  for (int t = 0; t < ring; ++t) parent[t] = t;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  for (int block = 0; block < g; ++block)
    for (int off = 0; off < 2; ++off) {
      int s = 4 * block + off;       // a_k or b_k
      int s2 = 4 * block + off + 2;  // its inverse, traversed backwards
      for (int k = 0; k <= 3; ++k)
        unite((3 * s + k) % ring, (3 * s2 + 3 - k) % ring);
    }

  // vertex ids: 0 = center, 1..ring = inner ring, then boundary classes
  std::vector<int> class_id(ring, -1);
  int next = 1 + ring;
  for (int t = 0; t < ring; ++t) {
    int root = find(t);
    if (class_id[root] < 0) class_id[root] = next++;
    class_id[t] = class_id[root];
  }

  auto dist = [](const std::array<double, 2>& a, const std::array<double, 2>& b) {
    return std::hypot(a[0] - b[0], a[1] - b[1]);
  };
  std::array<double, 2> center{0.0, 0.0};
  auto half = [](const std::array<double, 2>& p) {
    return std::array<double, 2>{0.5 * p[0], 0.5 * p[1]};
  };

  ComplexBuilder builder(next);
  for (int k = 0; k < ring; ++k) {
    int k1 = (k + 1) % ring;
    int rk = 1 + k, rk1 = 1 + k1;
    int bk = class_id[k], bk1 = class_id[k1];
    std::array<double, 2> pr = half(q[k]), pr1 = half(q[k1]);
    builder.add_edge(0, rk, dist(center, pr));
    builder.add_edge(rk, rk1, dist(pr, pr1));
    builder.add_edge(rk, bk, dist(pr, q[k]));
    builder.add_edge(rk1, bk, dist(pr1, q[k]));
    builder.add_edge(bk, bk1, dist(q[k], q[k1]));
    builder.add_triangle(0, rk, rk1);
    builder.add_triangle(rk, rk1, bk);
    builder.add_triangle(bk, bk1, rk1);
  }
  return builder.build();
}

MetricComplex combine(const MetricComplex& a, const MetricComplex& b,
                      bool wedge) {
  int shift = a.complex.vertex_count - (wedge ? 1 : 0);
  auto map_b = [&](int v) { return (wedge && v == 0) ? 0 : v + shift; };
  ComplexBuilder builder(a.complex.vertex_count + b.complex.vertex_count -
                         (wedge ? 1 : 0));
  for (int e = 0; e < a.complex.edge_count(); ++e)
    builder.add_edge(a.complex.edges[e][0], a.complex.edges[e][1],
                     a.metric.lengths[e]);
  for (const auto& t : a.complex.triangles) builder.add_triangle(t[0], t[1], t[2]);
  for (int e = 0; e < b.complex.edge_count(); ++e)
    builder.add_edge(map_b(b.complex.edges[e][0]), map_b(b.complex.edges[e][1]),
                     b.metric.lengths[e]);
  for (const auto& t : b.complex.triangles)
    builder.add_triangle(map_b(t[0]), map_b(t[1]), map_b(t[2]));
  return builder.build();
}

double param(const GeneratorSpec& spec, size_t i, double fallback) {
  return i < spec.params.size() ? spec.params[i] : fallback;
}

}  // namespace

MetricComplex generate(const GeneratorSpec& spec) {
  const std::string& f = spec.family;
  if (f == "torus_grid") {
    int m = require_grid_param(param(spec, 0, 0), "m");
    int n = require_grid_param(param(spec, 1, 0), "n");
    return torus_grid(m, n, require_positive(param(spec, 2, 1.0), "Lx"),
                      require_positive(param(spec, 3, 1.0), "Ly"));
  }
  if (f == "hex_torus") {
    int m = require_grid_param(param(spec, 0, 0), "m");
    int n = require_grid_param(param(spec, 1, 0), "n");
    return hex_torus(m, n, require_positive(param(spec, 2, 1.0), "scale"));
  }
  if (f == "klein_grid") {
    int m = require_grid_param(param(spec, 0, 0), "m");
    int n = require_grid_param(param(spec, 1, 0), "n");
    return klein_grid(m, n, require_positive(param(spec, 2, 1.0), "Lx"),
                      require_positive(param(spec, 3, 1.0), "Ly"));
  }
  if (f == "rp2_minimal") return rp2_minimal();
  if (f == "genus_g_polygon") {
    double graw = param(spec, 0, 0);
    int g = static_cast<int>(graw);
    if (g != graw || g < 1)
      fail(ErrorCode::invalid_argument, "genus must be an integer >= 1");
    return genus_polygon(g);
  }
  if (f == "wedge" || f == "disjoint_union") {
    if (spec.operands.size() != 2)
      fail(ErrorCode::invalid_argument, f + " requires two operand specs");
    return combine(generate(spec.operands[0]), generate(spec.operands[1]),
                   f == "wedge");
  }
  fail(ErrorCode::invalid_argument, "unknown generator family: " + f);
}

GeneratorSpec parse_generator_spec(const std::vector<std::string>& tokens) {
  if (tokens.empty())
    fail(ErrorCode::invalid_argument, "empty generator spec");
  GeneratorSpec spec;
  spec.family = tokens[0];
  if (spec.family == "wedge" || spec.family == "disjoint_union") {
    for (size_t i = 1; i < tokens.size(); ++i) {
      std::istringstream is(tokens[i]);
      std::vector<std::string> sub;
      std::string tok;
      while (is >> tok) sub.push_back(tok);
      spec.operands.push_back(parse_generator_spec(sub));
    }
    return spec;
  }
  for (size_t i = 1; i < tokens.size(); ++i) {
    try {
      size_t pos = 0;
      double v = std::stod(tokens[i], &pos);
      if (pos != tokens[i].size()) throw std::invalid_argument(tokens[i]);
      spec.params.push_back(v);
    } catch (const std::exception&) {
      fail(ErrorCode::parse_error, "bad generator parameter: " + tokens[i]);
    }
  }
  return spec;
}

}  // namespace systolic
