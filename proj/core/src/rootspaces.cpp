#include "f4/rootspaces.hpp"

#include <sstream>
#include <stdexcept>

namespace f4 {

namespace {

Vec elt_vec(const MatQ& A, const Octonion& x, const Octonion& y, const Octonion& z) {
  return to_vec52(F4Elt::from_parts(A, x, y, z));
}

const Octonion kE = Octonion::unit();

Subspace span52(const std::vector<Vec>& rows) { return canonicalize(kF4Dim, rows); }

}  // namespace

Subspace k_space() {
  std::vector<Vec> rows;
  for (int i = 0; i < kWedgeDim + 8; ++i) rows.push_back(to_vec52(F4Elt::basis(i)));
  return span52(rows);
}

Subspace p_star_space() {
  std::vector<Vec> rows;
  for (int i = kWedgeDim + 8; i < kF4Dim; ++i) rows.push_back(to_vec52(F4Elt::basis(i)));
  return span52(rows);
}

Subspace a_space() {
  return span52({elt_vec(MatQ(8, 8), Octonion(), kE, Octonion())});
}

Subspace v_space() {
  std::vector<Vec> rows;
  for (int i = 0; i < 8; ++i) {
    const Octonion x = Octonion::basis(i);
    rows.push_back(elt_vec(MatQ(8, 8), -conj(x), Octonion(), x));
  }
  return span52(rows);
}

Subspace z_space() {
  std::vector<Vec> rows;
  for (int i = 1; i < 8; ++i) {
    const Octonion p = Octonion::basis(i);
    rows.push_back(elt_vec(rmat(p), Octonion(), p, Octonion()));
  }
  return span52(rows);
}

Subspace k0_space() {
  std::vector<Vec> rows;
  for (int i = 1; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      rows.push_back(elt_vec(lambda2(basis_wedge(wedge_index(i, j))), Octonion(), Octonion(),
                             Octonion()));
  return span52(rows);
}

Subspace n_space() { return sum(v_space(), z_space()); }

Subspace an_space() { return sum(a_space(), n_space()); }

Subspace parabolic_space() { return sum(k0_space(), an_space()); }

namespace {

Subspace negative_root_space(int level) {
  std::vector<Vec> rows;
  if (level == 1) {
    for (int i = 0; i < 8; ++i) {
      const Octonion x = Octonion::basis(i);
      rows.push_back(elt_vec(MatQ(8, 8), conj(x), Octonion(), x));
    }
  } else {
    for (int i = 1; i < 8; ++i) {
      const Octonion p = Octonion::basis(i);
      rows.push_back(elt_vec(-rmat(p), Octonion(), p, Octonion()));
    }
  }
  return span52(rows);
}

void verify_eigenrelation(const F4Elt& H, const Subspace& space, int eigenvalue,
                          const char* name) {
  for (const auto& row : space.basis) {
    const F4Elt xi = from_vec52(row);
    const F4Elt lhs = bracket_nc(H, xi);
    const F4Elt rhs = Rat(eigenvalue) * xi;
    if (!(lhs == rhs)) {
      std::ostringstream os;
      os << "root_decomposition: [H, xi] != " << eigenvalue << " xi on basis vector "
         << vec_to_string(row) << " of " << name;
      throw std::logic_error(os.str());
    }
  }
}

}  // namespace

RootSpaceDecomp root_decomposition() {
  RootSpaceDecomp d;
  d.k0 = k0_space();
  d.a = a_space();
  d.g_a = v_space();
  d.g_2a = z_space();
  d.g_ma = negative_root_space(1);
  d.g_m2a = negative_root_space(2);
  d.g_0 = sum(d.k0, d.a);

  const F4Elt H = F4Elt::from_parts(MatQ(8, 8), Octonion(), kE, Octonion());
  verify_eigenrelation(H, d.g_m2a, -2, "g_{-2a}");
  verify_eigenrelation(H, d.g_ma, -1, "g_{-a}");
  verify_eigenrelation(H, d.g_0, 0, "g_0");
  verify_eigenrelation(H, d.g_a, 1, "g_{+a}");
  verify_eigenrelation(H, d.g_2a, 2, "g_{+2a}");
  return d;
}

IwasawaCoords IwasawaCoords::make(MatQ A, Rat s, Octonion x, Octonion p) {
  if (A.rows() != 8 || A.cols() != 8 || !A.is_skew())
    throw std::invalid_argument("IwasawaCoords: A must be skew 8x8");
  for (std::size_t i = 0; i < 8; ++i) {
    if (A(0, i) != 0 || A(i, 0) != 0)
      throw std::invalid_argument("IwasawaCoords: A must lie in so(7) (zero row/column 0)");
  }
  if (!is_pure(p)) throw std::invalid_argument("IwasawaCoords: p must be pure");
  IwasawaCoords c;
  c.A = std::move(A);
  c.s = std::move(s);
  c.x = x;
  c.p = p;
  return c;
}

F4Elt iota(const IwasawaCoords& c) {
  return F4Elt::from_parts(lambda2(c.A) + rmat(c.p), -conj(c.x), c.s * kE + c.p, c.x);
}

IwasawaCoords an_bracket(const IwasawaCoords& c1, const IwasawaCoords& c2) {
  const MatQ& A = c1.A;
  const MatQ& B = c2.A;
  const Octonion &x = c1.x, &y = c2.x;
  const Octonion &p = c1.p, &q = c2.p;
  const Rat &s = c1.s, &t = c2.s;

  const Octonion zc = Octonion::from_coords(lambda(A).apply(y.coords())) -
                      Octonion::from_coords(lambda(B).apply(x.coords())) + s * y - t * x;
  const Octonion rc = Octonion::from_coords(A.apply(q.coords())) -
                      Octonion::from_coords(B.apply(p.coords())) + Rat(2) * s * q -
                      Rat(2) * t * p + mul(x, conj(y)) - mul(y, conj(x));
  return IwasawaCoords::make(commutator(A, B), Rat(0), zc, rc);
}

bool is_bracket_closed(const StructureTable& table, const Subspace& S,
                       std::pair<int, int>* witness) {
  for (std::size_t i = 0; i < S.dim(); ++i) {
    for (std::size_t j = i + 1; j < S.dim(); ++j) {
      const Vec b = table.bracket_vec(S.basis[i], S.basis[j]);
      if (!member(b, S)) {
        if (witness) *witness = {static_cast<int>(i), static_cast<int>(j)};
        return false;
      }
    }
  }
  return true;
}

Subspace bracket_span(const StructureTable& table, const Subspace& S, const Subspace& T) {
  std::vector<Vec> rows;
  for (const auto& s : S.basis)
    for (const auto& t : T.basis) rows.push_back(table.bracket_vec(s, t));
  return canonicalize(kF4Dim, rows);
}

namespace {

void require_subalgebra(const StructureTable& table, const Subspace& S, const char* who) {
  std::pair<int, int> w;
  if (!is_bracket_closed(table, S, &w)) {
    std::ostringstream os;
    os << who << ": input is not a subalgebra; bracket of basis rows " << w.first << " and "
       << w.second << " leaves the span";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

std::vector<Subspace> lower_central_series(const Subspace& S) {
  const StructureTable& table = StructureTable::builtin(Algebra::noncompact);
  require_subalgebra(table, S, "lower_central_series");
  std::vector<Subspace> chain{S};
  while (true) {
    const Subspace next = bracket_span(table, S, chain.back());
    if (next == chain.back()) break;
    chain.push_back(next);
    if (chain.back().dim() == 0) break;
  }
  return chain;
}

std::vector<Subspace> derived_series(const Subspace& S) {
  const StructureTable& table = StructureTable::builtin(Algebra::noncompact);
  require_subalgebra(table, S, "derived_series");
  std::vector<Subspace> chain{S};
  while (true) {
    const Subspace next = bracket_span(table, chain.back(), chain.back());
    if (next == chain.back()) break;
    chain.push_back(next);
    if (chain.back().dim() == 0) break;
  }
  return chain;
}

}  // namespace f4
