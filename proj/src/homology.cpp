#include "systolic/homology.hpp"

#include <algorithm>

namespace systolic {

BitVec Z2Matrix::apply(const BitVec& x) const {
  BitVec y(rows);
  for (int r = 0; r < rows; ++r)
    if (row_bits[r].dot(x)) y.set(r);
  return y;
}

int simplex_count(const Complex2& complex, int degree) {
  switch (degree) {
    case 0:
      return complex.vertex_count;
    case 1:
      return complex.edge_count();
    case 2:
      return complex.triangle_count();
    default:
      fail(ErrorCode::invalid_argument, "degree must be 0, 1 or 2");
  }
}

Z2Matrix boundary_matrix(const Complex2& complex, int k) {
  if (k != 1 && k != 2)
    fail(ErrorCode::invalid_argument, "boundary degree must be 1 or 2");
  Z2Matrix m;
  m.rows = simplex_count(complex, k - 1);
  m.cols = simplex_count(complex, k);
  m.row_bits.assign(m.rows, BitVec(m.cols));
  if (k == 1) {
    for (int e = 0; e < complex.edge_count(); ++e) {
      m.row_bits[complex.edges[e][0]].set(e);
      m.row_bits[complex.edges[e][1]].set(e);
    }
  } else {
    for (int t = 0; t < complex.triangle_count(); ++t)
      for (int s = 0; s < 3; ++s) m.row_bits[complex.triangle_edges[t][s]].set(t);
  }
  return m;
}

namespace {

// Kernel basis of the map x -> Mx by Gaussian elimination on columns.
std::vector<BitVec> kernel_basis(const Z2Matrix& m) {
  // Column vectors with identity augmentation, eliminated top-down.
  struct Col {
    BitVec value;  // image in C_{k-1}
    BitVec combo;  // which original columns were combined
  };
  std::vector<Col> cols(m.cols);
  for (int c = 0; c < m.cols; ++c) {
    cols[c].value = BitVec(m.rows);
    for (int r = 0; r < m.rows; ++r)
      if (m.row_bits[r].test(c)) cols[c].value.set(r);
    cols[c].combo = BitVec(m.cols);
    cols[c].combo.set(c);
  }
  std::vector<BitVec> kernel;
  std::vector<std::pair<int, int>> pivots;  // (row, col index in cols)
  for (int c = 0; c < m.cols; ++c) {
    for (auto [pr, pc] : pivots) {
      if (cols[c].value.test(pr)) {
        cols[c].value ^= cols[pc].value;
        cols[c].combo ^= cols[pc].combo;
      }
    }
    int p = cols[c].value.lowest_set();
    if (p < 0)
      kernel.push_back(cols[c].combo);
    else
      pivots.emplace_back(p, c);
  }
  return kernel;
}

// Column-space basis (as vectors in the target space).
std::vector<BitVec> image_basis(const Z2Matrix& m) {
  Echelon ech;
  std::vector<BitVec> image;
  for (int c = 0; c < m.cols; ++c) {
    BitVec col(m.rows);
    for (int r = 0; r < m.rows; ++r)
      if (m.row_bits[r].test(c)) col.set(r);
    if (ech.insert(col)) image.push_back(col);
  }
  return image;
}

// deg-k coboundary matrix = transpose of boundary_matrix(k+1).
Z2Matrix coboundary_matrix(const Complex2& complex, int k) {
  Z2Matrix m;
  m.rows = simplex_count(complex, k + 1);
  m.cols = simplex_count(complex, k);
  m.row_bits.assign(m.rows, BitVec(m.cols));
  if (k == 0) {
    for (int e = 0; e < complex.edge_count(); ++e) {
      m.row_bits[e].set(complex.edges[e][0]);
      m.row_bits[e].set(complex.edges[e][1]);
    }
  } else if (k == 1) {
    for (int t = 0; t < complex.triangle_count(); ++t)
      for (int s = 0; s < 3; ++s) m.row_bits[t].set(complex.triangle_edges[t][s]);
  } else {
    fail(ErrorCode::invalid_argument, "coboundary degree must be 0 or 1");
  }
  return m;
}

// Extends `sub` (echelonized) to a basis of span(vectors); the extension
// vectors are the quotient representatives.
std::vector<BitVec> quotient_basis(const std::vector<BitVec>& cycles,
                                   const std::vector<BitVec>& boundaries) {
  Echelon ech;
  for (const auto& b : boundaries) ech.insert(b);
  std::vector<BitVec> reps;
  for (const auto& z : cycles)
    if (ech.insert(z)) reps.push_back(z);
  return reps;
}

}  // namespace

bool is_cycle(const Complex2& complex, const Z2Vector& chain) {
  if (chain.degree == 0) return true;
  Z2Matrix bd = boundary_matrix(complex, chain.degree);
  return bd.apply(chain.bits).none();
}

Z2Vector coboundary(const Complex2& complex, const Z2Vector& cochain) {
  if (cochain.degree != 0 && cochain.degree != 1)
    fail(ErrorCode::invalid_argument, "coboundary degree must be 0 or 1");
  Z2Matrix cb = coboundary_matrix(complex, cochain.degree);
  return Z2Vector{cochain.degree + 1, cb.apply(cochain.bits)};
}

bool is_cocycle(const Complex2& complex, const Z2Vector& cochain) {
  if (cochain.degree == 2) return true;
  return coboundary(complex, cochain).bits.none();
}

bool is_coboundary(const Complex2& complex, const Z2Vector& cochain) {
  if (cochain.degree == 0) return cochain.bits.none();
  Z2Matrix cb = coboundary_matrix(complex, cochain.degree - 1);
  Echelon ech;
  for (int c = 0; c < cb.cols; ++c) {
    BitVec col(cb.rows);
    for (int r = 0; r < cb.rows; ++r)
      if (cb.row_bits[r].test(c)) col.set(r);
    ech.insert(col);
  }
  return ech.contains(cochain.bits);
}

HomologyBasis homology_basis(const Complex2& complex, int k) {
  HomologyBasis basis;
  basis.degree = k;
  int nk = simplex_count(complex, k);

  std::vector<BitVec> cycles;
  if (k == 0) {
    // Reduced convention: cycles = kernel of the augmentation C_0 -> Z2.
    Z2Matrix aug;
    aug.rows = 1;
    aug.cols = nk;
    aug.row_bits.assign(1, BitVec(nk));
    for (int v = 0; v < nk; ++v) aug.row_bits[0].set(v);
    cycles = kernel_basis(aug);
  } else {
    cycles = kernel_basis(boundary_matrix(complex, k));
  }

  std::vector<BitVec> boundaries;
  if (k < 2) boundaries = image_basis(boundary_matrix(complex, k + 1));

  for (auto& rep : quotient_basis(cycles, boundaries))
    basis.representatives.push_back(Z2Vector{k, std::move(rep)});
  return basis;
}

CohomologyBasis cohomology_basis(const Complex2& complex, int k) {
  CohomologyBasis basis;
  basis.degree = k;
  int nk = simplex_count(complex, k);

  std::vector<BitVec> cocycles;
  if (k == 2) {
    cocycles.reserve(nk);
    for (int t = 0; t < nk; ++t) {
      BitVec v(nk);
      v.set(t);
      cocycles.push_back(v);
    }
  } else {
    cocycles = kernel_basis(coboundary_matrix(complex, k));
  }

  std::vector<BitVec> coboundaries;
  if (k == 0) {
    // Reduced convention: quotient degree-0 cocycles by the constants.
    BitVec ones(nk);
    for (int v = 0; v < nk; ++v) ones.set(v);
    coboundaries.push_back(ones);
  } else {
    Z2Matrix cb = coboundary_matrix(complex, k - 1);
    Echelon ech;
    for (int c = 0; c < cb.cols; ++c) {
      BitVec col(cb.rows);
      for (int r = 0; r < cb.rows; ++r)
        if (cb.row_bits[r].test(c)) col.set(r);
      if (ech.insert(col)) coboundaries.push_back(col);
    }
  }

  for (auto& rep : quotient_basis(cocycles, coboundaries))
    basis.representatives.push_back(Z2Vector{k, std::move(rep)});
  return basis;
}

Z2Vector cup_product(const Complex2& complex, const Z2Vector& a,
                     const Z2Vector& b) {
  if (a.degree != 1 || b.degree != 1)
    fail(ErrorCode::invalid_argument, "cup_product expects two 1-cochains");
  Z2Vector out{2, BitVec(complex.triangle_count())};
  for (int t = 0; t < complex.triangle_count(); ++t) {
    const auto& te = complex.triangle_edges[t];
    // front edge (v0,v1) = slot 0, back edge (v1,v2) = slot 2
    if (a.bits.test(te[0]) && b.bits.test(te[2])) out.bits.set(t);
  }
  return out;
}

Z2Vector cup_product_general(const Complex2& complex, const Z2Vector& a,
                             const Z2Vector& b) {
  int p = a.degree, q = b.degree;
  if (p + q > 2) fail(ErrorCode::invalid_argument, "cup degree above 2");
  if (p == 1 && q == 1) return cup_product(complex, a, b);
  Z2Vector out{p + q, BitVec(simplex_count(complex, p + q))};
  if (p == 0 && q == 0) {
    for (int v = 0; v < complex.vertex_count; ++v)
      if (a.bits.test(v) && b.bits.test(v)) out.bits.set(v);
  } else if (p + q == 1) {
    for (int e = 0; e < complex.edge_count(); ++e) {
      const auto& ev = complex.edges[e];
      bool val = (p == 0) ? (a.bits.test(ev[0]) && b.bits.test(e))
                          : (a.bits.test(e) && b.bits.test(ev[1]));
      if (val) out.bits.set(e);
    }
  } else {
    for (int t = 0; t < complex.triangle_count(); ++t) {
      const auto& tv = complex.triangles[t];
      bool val = (p == 0) ? (a.bits.test(tv[0]) && b.bits.test(t))
                          : (a.bits.test(t) && b.bits.test(tv[2]));
      if (val) out.bits.set(t);
    }
  }
  return out;
}

int evaluate(const Z2Vector& cochain, const Z2Vector& chain) {
  if (cochain.degree != chain.degree)
    fail(ErrorCode::invalid_argument, "degree mismatch in evaluation");
  return cochain.bits.dot(chain.bits);
}

std::vector<std::vector<std::vector<int>>> cup_pairing_tensor(
    const Complex2& complex, const CohomologyBasis& h1,
    const HomologyBasis& h2) {
  int b1 = h1.betti(), b2 = h2.betti();
  std::vector tensor(b1, std::vector(b1, std::vector<int>(b2, 0)));
  for (int i = 0; i < b1; ++i)
    for (int j = 0; j < b1; ++j) {
      Z2Vector cup = cup_product(complex, h1.representatives[i],
                                 h1.representatives[j]);
      for (int k = 0; k < b2; ++k)
        tensor[i][j][k] = evaluate(cup, h2.representatives[k]);
    }
  return tensor;
}

std::optional<std::pair<Z2Vector, Z2Vector>> cup_length_witness(
    const Complex2& complex) {
  if (complex.triangle_count() == 0) return std::nullopt;
  CohomologyBasis h1 = cohomology_basis(complex, 1);
  if (h1.betti() == 0) return std::nullopt;
  HomologyBasis h2 = homology_basis(complex, 2);
  if (h2.betti() == 0) return std::nullopt;
  for (const auto& a : h1.representatives)
    for (const auto& b : h1.representatives) {
      Z2Vector cup = cup_product(complex, a, b);
      for (const auto& z : h2.representatives)
        if (evaluate(cup, z)) return std::make_pair(a, b);
    }
  return std::nullopt;
}

}  // namespace systolic
