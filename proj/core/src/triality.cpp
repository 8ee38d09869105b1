#include "f4/triality.hpp"

#include <stdexcept>

namespace f4 {

namespace {

struct WedgeIndex {
  std::array<std::array<int, 8>, 8> of_pair{};
  std::array<std::pair<int, int>, kWedgeDim> pair_of{};

  WedgeIndex() {
    int k = 0;
    for (int i = 0; i < 8; ++i) {
      for (int j = i + 1; j < 8; ++j) {
        of_pair[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k;
        pair_of[static_cast<std::size_t>(k)] = {i, j};
        ++k;
      }
    }
  }
};

const WedgeIndex& windex() {
  static const WedgeIndex w;
  return w;
}

void require_skew(const MatQ& A, const char* who) {
  if (A.rows() != 8 || A.cols() != 8 || !A.is_skew())
    throw std::invalid_argument(std::string(who) + ": input is not a skew 8x8 matrix");
}

MatQ build_pi() {
  MatQ P(kWedgeDim, kWedgeDim);
  const Rat half(1, 2);
  for (int k = 0; k < kWedgeDim; ++k) {
    const auto [i, j] = wedge_pair(k);
    MatQ img(8, 8);
    if (i >= 1) {
      // pi(e_i ^ e_j) = 1/2 L_{e_j} L_{e_i}, first slot pure
      img = half * (lmat(Octonion::basis(j)) * lmat(Octonion::basis(i)));
    } else {
      // e_0 ^ e_j = -(e_j ^ e_0) with e_j pure
      img = (-half) * lmat(Octonion::basis(j));
    }
    if (!img.is_skew()) throw std::logic_error("pi generator image is not skew");
    const Vec col = skew_to_wedge_coords(img);
    for (int r = 0; r < kWedgeDim; ++r)
      P(static_cast<std::size_t>(r), static_cast<std::size_t>(k)) = col[static_cast<std::size_t>(r)];
  }
  return P;
}

MatQ build_kappa() {
  MatQ K(kWedgeDim, kWedgeDim);
  for (int k = 0; k < kWedgeDim; ++k) {
    const auto [i, j] = wedge_pair(k);
    const int si = (i == 0) ? 1 : -1;
    const int sj = (j == 0) ? 1 : -1;
    K(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) = si * sj;
  }
  return K;
}

MatQ apply_wedge_matrix(const MatQ& F, const MatQ& A, const char* who) {
  require_skew(A, who);
  return wedge_coords_to_skew(F.apply(skew_to_wedge_coords(A)));
}

}  // namespace

MatQ wedge(const Octonion& x, const Octonion& y) {
  MatQ m(8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) m(i, j) = x.c[i] * y.c[j] - y.c[i] * x.c[j];
  return m;
}

MatQ basis_wedge(int k) {
  const auto [i, j] = wedge_pair(k);
  return wedge(Octonion::basis(i), Octonion::basis(j));
}

int wedge_index(int i, int j) {
  if (!(0 <= i && i < j && j < 8)) throw std::invalid_argument("wedge_index: need 0 <= i < j < 8");
  return windex().of_pair[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

std::pair<int, int> wedge_pair(int k) {
  if (k < 0 || k >= kWedgeDim) throw std::invalid_argument("wedge_pair: index out of range");
  return windex().pair_of[static_cast<std::size_t>(k)];
}

Vec skew_to_wedge_coords(const MatQ& A) {
  require_skew(A, "skew_to_wedge_coords");
  Vec w(kWedgeDim);
  for (int k = 0; k < kWedgeDim; ++k) {
    const auto [i, j] = wedge_pair(k);
    w[static_cast<std::size_t>(k)] = A(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  return w;
}

MatQ wedge_coords_to_skew(const Vec& w) {
  if (w.size() != kWedgeDim)
    throw std::invalid_argument("wedge_coords_to_skew: need 28 coordinates");
  MatQ A(8, 8);
  for (int k = 0; k < kWedgeDim; ++k) {
    const auto [i, j] = wedge_pair(k);
    A(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = w[static_cast<std::size_t>(k)];
    A(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = -w[static_cast<std::size_t>(k)];
  }
  return A;
}

const MatQ& pi_matrix() {
  static const MatQ P = build_pi();
  return P;
}

const MatQ& kappa_matrix() {
  static const MatQ K = build_kappa();
  return K;
}

const MatQ& lambda_matrix() {
  static const MatQ L = pi_matrix() * kappa_matrix();
  return L;
}

const MatQ& lambda2_matrix() {
  static const MatQ L2 = lambda_matrix() * lambda_matrix();
  return L2;
}

MatQ pi(const MatQ& A) { return apply_wedge_matrix(pi_matrix(), A, "pi"); }
MatQ kappa(const MatQ& A) { return apply_wedge_matrix(kappa_matrix(), A, "kappa"); }
MatQ lambda(const MatQ& A) { return apply_wedge_matrix(lambda_matrix(), A, "lambda"); }
MatQ lambda2(const MatQ& A) { return apply_wedge_matrix(lambda2_matrix(), A, "lambda2"); }

Octonion triality_defect(const MatQ& A, const Octonion& x, const Octonion& y) {
  const MatQ kl2 = kappa(lambda2(A));
  const MatQ lA = lambda(A);
  const Octonion lhs = Octonion::from_coords(kl2.apply(mul(x, y).coords()));
  const Octonion mid = mul(x, Octonion::from_coords(lA.apply(y.coords())));
  const Octonion rhs = mul(Octonion::from_coords(A.apply(x.coords())), y);
  return lhs - mid - rhs;
}

MatQ so9_embed(const So9Elt& v) {
  MatQ m(9, 9);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) m(i, j) = v.A(i, j);
    m(i, 8) = 2 * v.x.c[i];
    m(8, i) = -2 * v.x.c[i];
  }
  return m;
}

So9Elt so9_bracket(const So9Elt& v, const So9Elt& w) {
  So9Elt r;
  r.A = commutator(v.A, w.A) - Rat(4) * wedge(v.x, w.x);
  r.x = Octonion::from_coords(v.A.apply(w.x.coords())) -
        Octonion::from_coords(w.A.apply(v.x.coords()));
  return r;
}

Subspace so7_wedge_span() {
  std::vector<Vec> rows;
  for (int i = 1; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      rows.push_back(unit_vec(kWedgeDim, static_cast<std::size_t>(wedge_index(i, j))));
  return canonicalize(kWedgeDim, rows);
}

Subspace so4_wedge_span() {
  std::vector<Vec> rows;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      rows.push_back(unit_vec(kWedgeDim, static_cast<std::size_t>(wedge_index(i, j))));
  return canonicalize(kWedgeDim, rows);
}

}  // namespace f4
