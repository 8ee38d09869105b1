#include "f4/geometry.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace f4 {

F4Elt pstar_elt(const PStarVector& v) {
  return F4Elt::from_parts(MatQ(8, 8), Octonion(), v.y, v.z);
}

std::string label_name(TgLabel label) {
  switch (label) {
    case TgLabel::H1: return "H1";
    case TgLabel::H2: return "H2";
    case TgLabel::H3: return "H3";
    case TgLabel::H4: return "H4";
    case TgLabel::H5: return "H5";
    case TgLabel::H6: return "H6";
    case TgLabel::H7: return "H7";
    case TgLabel::H8: return "H8";
    case TgLabel::RH2: return "RH2";
    case TgLabel::CH2: return "CH2";
    case TgLabel::HH2: return "HH2";
    case TgLabel::Full: return "FULL";
    case TgLabel::Unclassified: return "UNCLASSIFIED";
  }
  return "UNCLASSIFIED";
}

TgLabel label_from_name(const std::string& name) {
  static const std::map<std::string, TgLabel> names = {
      {"H1", TgLabel::H1},   {"H2", TgLabel::H2},   {"H3", TgLabel::H3},
      {"H4", TgLabel::H4},   {"H5", TgLabel::H5},   {"H6", TgLabel::H6},
      {"H7", TgLabel::H7},   {"H8", TgLabel::H8},   {"RH2", TgLabel::RH2},
      {"CH2", TgLabel::CH2}, {"HH2", TgLabel::HH2}, {"FULL", TgLabel::Full}};
  const auto it = names.find(name);
  if (it == names.end()) throw std::invalid_argument("unknown label '" + name + "'");
  return it->second;
}

namespace {

bool in_p_star(const Subspace& L) {
  if (L.ambient_dim != kF4Dim) return false;
  for (const auto& row : L.basis) {
    for (std::size_t i = 0; i < kWedgeDim + 8; ++i) {
      if (row[i] != 0) return false;
    }
  }
  return true;
}

}  // namespace

TripleSystemCheck is_lie_triple(const Subspace& L) {
  if (!in_p_star(L)) throw std::invalid_argument("is_lie_triple: L must be contained in p*");
  const StructureTable& table = StructureTable::builtin(Algebra::noncompact);
  TripleSystemCheck res;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      const Vec bij = table.bracket_vec(L.basis[i], L.basis[j]);
      for (std::size_t k = 0; k < L.dim(); ++k) {
        const Vec w = table.bracket_vec(bij, L.basis[k]);
        if (!member(w, L)) {
          res.ok = false;
          res.witness = {static_cast<int>(i), static_cast<int>(j), static_cast<int>(k)};
          return res;
        }
      }
    }
  }
  res.ok = true;
  return res;
}

Subspace generated_subalgebra(Algebra alg, const Subspace& S) {
  if (S.ambient_dim != kF4Dim)
    throw std::invalid_argument("generated_subalgebra: ambient must be the 52-dim algebra");
  const StructureTable& table = StructureTable::builtin(alg);
  Subspace G = canonicalize(kF4Dim, S.basis);
  bool grew = true;
  while (grew && G.dim() < kF4Dim) {
    grew = false;
    const std::vector<Vec> snapshot = G.basis;
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        Vec w = table.bracket_vec(snapshot[i], snapshot[j]);
        if (is_zero_vec(w)) continue;
        if (insert_into_span(G, w)) grew = true;
      }
    }
  }
  return G;
}

Rat sectional_curvature(Algebra alg, const PStarVector& X, const PStarVector& Y) {
  const F4Elt ex = pstar_elt(X);
  const F4Elt ey = pstar_elt(Y);
  const Rat nx = inner(ex, ex);
  const Rat ny = inner(ey, ey);
  if (nx == 0 || ny == 0)
    throw std::invalid_argument("sectional_curvature: zero input vector");
  if (inner(ex, ey) != 0)
    throw std::invalid_argument("sectional_curvature: inputs are not orthogonal");
  const F4Elt b = bracket_c(ex, ey);
  const Rat k = Rat(64) * inner(b, b) / (nx * ny);
  return alg == Algebra::compact ? k : -k;
}

namespace {

Subspace span_pairs(const std::vector<std::pair<Octonion, Octonion>>& gens) {
  std::vector<Vec> rows;
  for (const auto& [y, z] : gens) rows.push_back(to_vec52(pstar_elt(PStarVector{y, z})));
  return canonicalize(kF4Dim, rows);
}

std::vector<Octonion> subalgebra_units(int dim) {
  std::vector<Octonion> out;
  for (int i = 0; i < dim; ++i) out.push_back(Octonion::basis(i));
  return out;
}

}  // namespace

Subspace std_triple(TgLabel label) {
  const Octonion zero;
  switch (label) {
    case TgLabel::H1: case TgLabel::H2: case TgLabel::H3: case TgLabel::H4:
    case TgLabel::H5: case TgLabel::H6: case TgLabel::H7: case TgLabel::H8: {
      const int m = 1 + static_cast<int>(label) - static_cast<int>(TgLabel::H1);
      std::vector<std::pair<Octonion, Octonion>> gens;
      for (const auto& u : subalgebra_units(m)) gens.emplace_back(u, zero);
      return span_pairs(gens);
    }
    case TgLabel::RH2:
      return span_pairs({{Octonion::unit(), zero}, {zero, Octonion::unit()}});
    case TgLabel::CH2: {
      std::vector<std::pair<Octonion, Octonion>> gens;
      for (const auto& u : subalgebra_units(2)) {
        gens.emplace_back(u, zero);
        gens.emplace_back(zero, u);
      }
      return span_pairs(gens);
    }
    case TgLabel::HH2: {
      std::vector<std::pair<Octonion, Octonion>> gens;
      for (const auto& u : subalgebra_units(4)) {
        gens.emplace_back(u, zero);
        gens.emplace_back(zero, u);
      }
      return span_pairs(gens);
    }
    case TgLabel::Full:
      return p_star_space();
    case TgLabel::Unclassified:
      break;
  }
  throw std::invalid_argument("std_triple: no standard representative for this label");
}

namespace {

struct Signature {
  std::size_t dim;
  std::size_t generated_dim;
  auto operator<=>(const Signature&) const = default;
};

// Sectional curvature of a 2-dimensional triple system (compact-form value);
// well defined on the plane.
Rat plane_curvature(const Subspace& L) {
  const Vec& b1 = L.basis[0];
  Vec b2 = L.basis[1];
  const Rat c = inner_vec(b2, b1) / inner_vec(b1, b1);
  b2 = vec_sub(b2, vec_scale(c, b1));
  const F4Elt x = from_vec52(b1);
  const F4Elt y = from_vec52(b2);
  const F4Elt b = bracket_c(x, y);
  return Rat(64) * inner(b, b) / (inner(x, x) * inner(y, y));
}

const std::map<Signature, std::vector<TgLabel>>& signature_table() {
  static const std::map<Signature, std::vector<TgLabel>> table = [] {
    std::map<Signature, std::vector<TgLabel>> t;
    const TgLabel all[] = {TgLabel::H1,  TgLabel::H2,  TgLabel::H3, TgLabel::H4,
                           TgLabel::H5,  TgLabel::H6,  TgLabel::H7, TgLabel::H8,
                           TgLabel::RH2, TgLabel::CH2, TgLabel::HH2, TgLabel::Full};
    for (const TgLabel label : all) {
      const Subspace L = std_triple(label);
      const Subspace G = generated_subalgebra(Algebra::noncompact, L);
      t[Signature{L.dim(), G.dim()}].push_back(label);
    }
    // Validate the table shape once: the only ambiguous signature is the
    // (2,3) pair {H2, RH2}, separated by curvature 32 vs 8.
    for (const auto& [sig, labels] : t) {
      if (labels.size() == 1) continue;
      if (sig != Signature{2, 3} || labels.size() != 2)
        throw std::logic_error("classification table: unexpected signature collision");
    }
    if (plane_curvature(std_triple(TgLabel::RH2)) != Rat(8) ||
        plane_curvature(std_triple(TgLabel::H2)) != Rat(32))
      throw std::logic_error("classification table: curvature tiebreak failed validation");
    return t;
  }();
  return table;
}

}  // namespace

TgLabel classify_triple_system(const Subspace& L) {
  const TripleSystemCheck check = is_lie_triple(L);
  if (!check.ok)
    throw std::invalid_argument("classify_triple_system: input is not a Lie triple system");
  const auto& table = signature_table();
  if (L.dim() == 0) return TgLabel::Unclassified;
  const Subspace G = generated_subalgebra(Algebra::noncompact, L);
  const auto it = table.find(Signature{L.dim(), G.dim()});
  if (it == table.end()) return TgLabel::Unclassified;
  if (it->second.size() == 1) return it->second.front();
  const Rat k = plane_curvature(L);
  if (k == 8) return TgLabel::RH2;
  if (k == 32) return TgLabel::H2;
  return TgLabel::Unclassified;
}

Subspace sp13() {
  std::vector<Vec> rows;
  for (const auto& row : so4_wedge_span().basis) {
    rows.push_back(row);
    rows.push_back(lambda_matrix().apply(row));
    rows.push_back(lambda2_matrix().apply(row));
  }
  return canonicalize(kWedgeDim, rows);
}

Subspace sp14() {
  std::vector<Vec> rows = so4_wedge_span().basis;
  for (int i = 4; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      rows.push_back(unit_vec(kWedgeDim, static_cast<std::size_t>(wedge_index(i, j))));
  return canonicalize(kWedgeDim, rows);
}

Subspace sp12_algebra() {
  std::vector<Vec> rows;
  for (const auto& row : sp13().basis) {
    Vec v(kF4Dim, Rat(0));
    for (int k = 0; k < kWedgeDim; ++k) v[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k)];
    rows.push_back(std::move(v));
  }
  for (int slot = 0; slot < 3; ++slot)
    for (int i = 0; i < 4; ++i)
      rows.push_back(unit_vec(kF4Dim, static_cast<std::size_t>(kWedgeDim + 8 * slot + i)));
  return canonicalize(kF4Dim, rows);
}

Subspace centralizer_in(Algebra alg, const Subspace& S, const Subspace& ambient) {
  if (S.ambient_dim != kF4Dim || ambient.ambient_dim != kF4Dim)
    throw std::invalid_argument("centralizer_in: subspaces must live in the 52-dim algebra");
  const StructureTable& table = StructureTable::builtin(alg);
  const std::size_t m = ambient.dim();
  const std::size_t k = S.dim();
  MatQ M(static_cast<std::size_t>(kF4Dim) * k, m);
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t j = 0; j < k; ++j) {
      const Vec b = table.bracket_vec(ambient.basis[c], S.basis[j]);
      for (std::size_t r = 0; r < kF4Dim; ++r) M(j * kF4Dim + r, c) = b[r];
    }
  }
  const Subspace coeffs = kernel(M);
  std::vector<Vec> rows;
  for (const auto& coeff : coeffs.basis) {
    Vec v(kF4Dim, Rat(0));
    for (std::size_t c = 0; c < m; ++c) {
      if (coeff[c] != 0) v = vec_add(v, vec_scale(coeff[c], ambient.basis[c]));
    }
    rows.push_back(std::move(v));
  }
  return canonicalize(kF4Dim, rows);
}

Subspace normalizer_in(Algebra alg, const Subspace& S, const Subspace& ambient) {
  if (S.ambient_dim != kF4Dim || ambient.ambient_dim != kF4Dim)
    throw std::invalid_argument("normalizer_in: subspaces must live in the 52-dim algebra");
  const StructureTable& table = StructureTable::builtin(alg);
  const std::size_t m = ambient.dim();
  const std::size_t k = S.dim();
  MatQ M(static_cast<std::size_t>(kF4Dim) * k, m);
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t j = 0; j < k; ++j) {
      const Vec b = reduce_against(S, table.bracket_vec(ambient.basis[c], S.basis[j]));
      for (std::size_t r = 0; r < kF4Dim; ++r) M(j * kF4Dim + r, c) = b[r];
    }
  }
  const Subspace coeffs = kernel(M);
  std::vector<Vec> rows;
  for (const auto& coeff : coeffs.basis) {
    Vec v(kF4Dim, Rat(0));
    for (std::size_t c = 0; c < m; ++c) {
      if (coeff[c] != 0) v = vec_add(v, vec_scale(coeff[c], ambient.basis[c]));
    }
    rows.push_back(std::move(v));
  }
  return canonicalize(kF4Dim, rows);
}

}  // namespace f4
