#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "systolic/bitvec.hpp"
#include "systolic/complex.hpp"

namespace systolic {

/// Degree-tagged bit vector over the simplex index set of that degree.
/// Serves both as chain and cochain; the pairing is the mod-2 dot product.
struct Z2Vector {
  int degree = 0;
  BitVec bits;

  bool operator==(const Z2Vector&) const = default;
};

/// Dense GF(2) matrix, rows packed as bit vectors.
struct Z2Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<BitVec> row_bits;  // rows entries, each of width cols

  BitVec apply(const BitVec& x) const;  // y = M x, x of width cols
};

int simplex_count(const Complex2& complex, int degree);

/// Boundary operator del_k: C_k -> C_{k-1}; entries mod 2.
/// k = 1 maps edges to vertices, k = 2 maps triangles to edges.
Z2Matrix boundary_matrix(const Complex2& complex, int k);

bool is_cycle(const Complex2& complex, const Z2Vector& chain);
bool is_cocycle(const Complex2& complex, const Z2Vector& cochain);
bool is_coboundary(const Complex2& complex, const Z2Vector& cochain);

/// Coboundary of a cochain (degree 0 -> 1 or 1 -> 2).
Z2Vector coboundary(const Complex2& complex, const Z2Vector& cochain);

struct HomologyBasis {
  int degree = 0;
  std::vector<Z2Vector> representatives;  // cycles, independent mod boundaries
  int betti() const { return static_cast<int>(representatives.size()); }
};

struct CohomologyBasis {
  int degree = 0;
  std::vector<Z2Vector> representatives;  // cocycles, independent mod coboundaries
  int betti() const { return static_cast<int>(representatives.size()); }
};

/// Reduced Z2 homology: b0 = components - 1 for nonempty complexes.
HomologyBasis homology_basis(const Complex2& complex, int k);
CohomologyBasis cohomology_basis(const Complex2& complex, int k);

/// Ordered simplicial cup product of two 1-cochains: on each triangle
/// [v0<v1<v2] the value is a([v0,v1]) * b([v1,v2]) mod 2.
Z2Vector cup_product(const Complex2& complex, const Z2Vector& a,
                     const Z2Vector& b);

/// Front-face/back-face cup product for degrees p+q <= 2 (testing aid).
Z2Vector cup_product_general(const Complex2& complex, const Z2Vector& a,
                             const Z2Vector& b);

/// Mod-2 pairing of a cochain with a chain of equal degree.
int evaluate(const Z2Vector& cochain, const Z2Vector& chain);

/// Pairing matrix entries <[a_i cup a_j], [Z_k]> for bases of H^1 and H_2.
/// Result is rows indexed by (i,j) pairs flattened row-major: b1 x b1 blocks
/// of width b2.
std::vector<std::vector<std::vector<int>>> cup_pairing_tensor(
    const Complex2& complex, const CohomologyBasis& h1,
    const HomologyBasis& h2);

/// Some pair (a, b) of 1-cocycles with [a cup b] != 0 in H^2, if one exists.
std::optional<std::pair<Z2Vector, Z2Vector>> cup_length_witness(
    const Complex2& complex);

}  // namespace systolic
