#pragma once

#include <string>
#include <vector>

#include "systolic/complex.hpp"

namespace systolic {

/// Specification of a generated complex. Families:
///   torus_grid m n [Lx Ly]     diagonalized grid on a flat Lx x Ly torus
///   hex_torus m n [scale]      60-degree skew lattice quotient
///   klein_grid m n [Lx Ly]     grid with orientation-reversing identification
///   rp2_minimal                6-vertex projective plane, unit lengths
///   genus_g_polygon g          triangulated 4g-gon with standard identifications
///   wedge <a> <b>              one-point union of two generated complexes
///   disjoint_union <a> <b>
/// Grid parameters require m, n >= 3 so the quotient stays simplicial.
struct GeneratorSpec {
  std::string family;
  std::vector<double> params;
  std::vector<GeneratorSpec> operands;
};

MetricComplex generate(const GeneratorSpec& spec);

/// Parses the CLI token form, e.g. {"torus_grid","8","8","1","1"} or
/// {"wedge","torus_grid 4 4","rp2_minimal"} (operand specs quoted).
GeneratorSpec parse_generator_spec(const std::vector<std::string>& tokens);

}  // namespace systolic
