#include "systolic/complex.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

namespace systolic {

namespace {

std::string simplex_str(const std::array<int, 2>& e) {
  std::ostringstream os;
  os << "(" << e[0] << "," << e[1] << ")";
  return os.str();
}

std::string simplex_str(const std::array<int, 3>& t) {
  std::ostringstream os;
  os << "(" << t[0] << "," << t[1] << "," << t[2] << ")";
  return os.str();
}

}  // namespace

int Complex2::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  std::array<int, 2> key{u, v};
  auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it == edges.end() || *it != key) return -1;
  return static_cast<int>(it - edges.begin());
}

Validation validate(const Complex2& complex) {
  Validation result;
  auto reject = [&](const std::string& msg) {
    result.ok = false;
    result.message = msg;
    return result;
  };

  const int n = complex.vertex_count;
  for (size_t i = 0; i < complex.edges.size(); ++i) {
    const auto& e = complex.edges[i];
    if (e[0] < 0 || e[1] < 0 || e[0] >= n || e[1] >= n)
      return reject("out-of-range index: edge " + simplex_str(e));
    if (e[0] == e[1])
      return reject("degenerate edge: " + simplex_str(e));
    if (e[0] > e[1])
      return reject("unsorted simplex: edge " + simplex_str(e));
    if (i > 0 && complex.edges[i - 1] == e)
      return reject("duplicate simplex: edge " + simplex_str(e));
    if (i > 0 && complex.edges[i - 1] > e)
      return reject("unsorted simplex list: edge " + simplex_str(e));
  }
  for (size_t i = 0; i < complex.triangles.size(); ++i) {
    const auto& t = complex.triangles[i];
    if (t[0] < 0 || t[2] >= n || t[1] < 0 || t[1] >= n || t[0] >= n || t[2] < 0)
      return reject("out-of-range index: triangle " + simplex_str(t));
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      return reject("degenerate triangle: " + simplex_str(t));
    if (!(t[0] < t[1] && t[1] < t[2]))
      return reject("unsorted simplex: triangle " + simplex_str(t));
    if (i > 0 && complex.triangles[i - 1] == t)
      return reject("duplicate simplex: triangle " + simplex_str(t));
    if (i > 0 && complex.triangles[i - 1] > t)
      return reject("unsorted simplex list: triangle " + simplex_str(t));
    for (auto [a, b] : {std::pair{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}) {
      if (complex.edge_index(a, b) < 0)
        return reject("missing face: edge (" + std::to_string(a) + "," +
                      std::to_string(b) + ") of triangle " + simplex_str(t));
    }
  }
  result.connected = component_count(complex) <= 1;
  return result;
}

void Complex2::finalize() {
  Validation v = validate(*this);
  if (!v.ok) fail(ErrorCode::invalid_complex, v.message);
  triangle_edges.assign(triangles.size(), {0, 0, 0});
  for (size_t t = 0; t < triangles.size(); ++t) {
    const auto& tri = triangles[t];
    triangle_edges[t] = {edge_index(tri[0], tri[1]), edge_index(tri[0], tri[2]),
                         edge_index(tri[1], tri[2])};
  }
}

Complex2 Complex2::make(int vertex_count, std::vector<std::array<int, 2>> edges,
                        std::vector<std::array<int, 3>> triangles) {
  Complex2 c;
  c.vertex_count = vertex_count;
  c.edges = std::move(edges);
  c.triangles = std::move(triangles);
  c.finalize();
  return c;
}

std::vector<int> vertex_components(const Complex2& complex) {
  std::vector<int> comp(complex.vertex_count, -1);
  std::vector<std::vector<int>> adj(complex.vertex_count);
  for (const auto& e : complex.edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  int c = 0;
  for (int s = 0; s < complex.vertex_count; ++s) {
    if (comp[s] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = c;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = c;
          q.push(w);
        }
    }
    ++c;
  }
  return comp;
}

int component_count(const Complex2& complex) {
  auto comp = vertex_components(complex);
  int c = 0;
  for (int id : comp) c = std::max(c, id + 1);
  return c;
}

double triangle_area(double a, double b, double c) {
  if (!(a > 0 && b > 0 && c > 0))
    fail(ErrorCode::degenerate_triangle, "degenerate triangle: side <= 0");
  // Sort a >= b >= c for the numerically stable Heron variant.
  if (a < b) std::swap(a, b);
  if (b < c) std::swap(b, c);
  if (a < b) std::swap(a, b);
  if (!(a < b + c))
    fail(ErrorCode::degenerate_triangle, "degenerate triangle");
  double t = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
  if (!(t > 0)) fail(ErrorCode::degenerate_triangle, "degenerate triangle");
  return 0.25 * std::sqrt(t);
}

MetricComplex MetricComplex::make(Complex2 complex, PLMetric metric) {
  if (complex.triangle_edges.size() != complex.triangles.size())
    complex.finalize();
  if (metric.lengths.size() != complex.edges.size())
    fail(ErrorCode::invalid_argument,
         "metric has " + std::to_string(metric.lengths.size()) +
             " lengths for " + std::to_string(complex.edges.size()) + " edges");
  for (size_t e = 0; e < metric.lengths.size(); ++e)
    if (!(metric.lengths[e] > 0) || !std::isfinite(metric.lengths[e]))
      fail(ErrorCode::invalid_argument,
           "non-positive length at edge " + std::to_string(e));
  MetricComplex mc;
  mc.complex = std::move(complex);
  mc.metric = std::move(metric);
  mc.triangle_areas.reserve(mc.complex.triangles.size());
  for (size_t t = 0; t < mc.complex.triangles.size(); ++t) {
    const auto& te = mc.complex.triangle_edges[t];
    mc.triangle_areas.push_back(triangle_area(mc.metric.lengths[te[0]],
                                              mc.metric.lengths[te[1]],
                                              mc.metric.lengths[te[2]]));
  }
  return mc;
}

double total_area(const MetricComplex& mc) {
  double area = 0.0;
  for (double a : mc.triangle_areas) area += a;
  return area;
}

int euler_characteristic(const Complex2& complex) {
  return complex.vertex_count - complex.edge_count() + complex.triangle_count();
}

}  // namespace systolic
