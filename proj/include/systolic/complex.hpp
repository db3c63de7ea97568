#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "systolic/error.hpp"

namespace systolic {

/// A finite simplicial 2-complex with a fixed global vertex order.
///
/// Vertices are 0..vertex_count-1; the global order is the integer order.
/// Edges are vertex pairs (u < v) and triangles vertex triples (u < v < w),
/// both kept lexicographically sorted and duplicate-free. `triangle_edges`
/// is the face-incidence index (slot 0 = (u,v), slot 1 = (u,w),
/// slot 2 = (v,w)) and is filled by finalize()/make().
struct Complex2 {
  int vertex_count = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::array<int, 3>> triangles;
  std::vector<std::array<int, 3>> triangle_edges;

  /// Index of edge (u,v) in the sorted edge list, or -1 if absent.
  /// Accepts endpoints in either order.
  int edge_index(int u, int v) const;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int triangle_count() const { return static_cast<int>(triangles.size()); }

  /// Validates and builds the triangle->edge incidence index.
  /// Throws Error(invalid_complex) on the first violated invariant.
  void finalize();

  static Complex2 make(int vertex_count, std::vector<std::array<int, 2>> edges,
                       std::vector<std::array<int, 3>> triangles);
};

struct Validation {
  bool ok = true;
  std::string message;   // first violated invariant, empty when ok
  bool connected = true; // connectivity of the 1-skeleton (info only)
};

/// Checks all Complex2 invariants; reports the first violation.
Validation validate(const Complex2& complex);

/// Connected components of the 1-skeleton; returns component id per vertex.
std::vector<int> vertex_components(const Complex2& complex);
int component_count(const Complex2& complex);

/// Positive edge lengths inducing a flat metric on each triangle.
struct PLMetric {
  std::vector<double> lengths;
};

/// Heron area for side lengths (a,b,c); numerically stable form.
/// Throws Error(degenerate_triangle) unless the strict triangle
/// inequalities hold.
double triangle_area(double a, double b, double c);

/// A validated complex together with a metric and cached triangle areas.
struct MetricComplex {
  Complex2 complex;
  PLMetric metric;
  std::vector<double> triangle_areas;

  double edge_length(int e) const { return metric.lengths[e]; }

  static MetricComplex make(Complex2 complex, PLMetric metric);
};

double total_area(const MetricComplex& mc);

/// V - E + F.
int euler_characteristic(const Complex2& complex);

}  // namespace systolic
