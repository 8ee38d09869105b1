#include "f4/polarity.hpp"

#include <sstream>
#include <stdexcept>

namespace f4 {

namespace {

bool in_p_star_coords(const Subspace& L) {
  if (L.ambient_dim != kF4Dim) return false;
  for (const auto& row : L.basis) {
    for (std::size_t i = 0; i < kWedgeDim + 8; ++i) {
      if (row[i] != 0) return false;
    }
  }
  return true;
}

}  // namespace

PolarityReport section_orthogonality(const Subspace& h, const Subspace& sigma) {
  if (!in_p_star_coords(sigma))
    throw std::invalid_argument("section_orthogonality: sigma must be contained in p*");
  const StructureTable& table = StructureTable::builtin(Algebra::noncompact);
  std::pair<int, int> pair_witness;
  if (!is_bracket_closed(table, h, &pair_witness)) {
    std::ostringstream os;
    os << "section_orthogonality: h is not a subalgebra; bracket of basis rows "
       << pair_witness.first << " and " << pair_witness.second << " leaves the span";
    throw std::invalid_argument(os.str());
  }

  PolarityReport report;
  report.h = h;
  report.sigma = sigma;
  report.sigma_bracket = bracket_span(table, sigma, sigma);
  report.orthogonality_holds = true;
  for (const auto& b : report.sigma_bracket.basis) {
    for (const auto& he : h.basis) {
      const Rat pairing = inner_vec(b, he);
      if (pairing != 0) {
        report.orthogonality_holds = false;
        report.witness = PolarityReport::Witness{b, he, pairing};
        return report;
      }
    }
  }
  return report;
}

Rat nonpolar_witness_h8() {
  return (lmat(Octonion::basis(1)) * rmat(Octonion::basis(1))).trace();
}

namespace {

Subspace checked_closed(const char* name, Subspace s) {
  const StructureTable& table = StructureTable::builtin(Algebra::noncompact);
  std::pair<int, int> w;
  if (!is_bracket_closed(table, s, &w)) {
    std::ostringstream os;
    os << "example subalgebra '" << name << "' is not bracket closed; witness basis pair ("
       << w.first << ", " << w.second << ")";
    throw std::logic_error(os.str());
  }
  return s;
}

}  // namespace

Subspace coordinate_m(int codim) {
  if (codim < 0 || codim > 8) throw std::invalid_argument("coordinate_m: codim in 0..8");
  std::vector<Vec> rows;
  for (int i = 0; i < 8 - codim; ++i) {
    const Octonion x = Octonion::basis(i);
    rows.push_back(to_vec52(F4Elt::from_parts(MatQ(8, 8), -conj(x), Octonion(), x)));
  }
  return canonicalize(kF4Dim, rows);
}

std::map<std::string, Subspace> example_subalgebras() {
  std::map<std::string, Subspace> out;
  out.emplace("n", checked_closed("n", n_space()));
  out.emplace("amz", checked_closed("amz", sum(a_space(), sum(coordinate_m(1), z_space()))));
  // m' = {(0,x,0,x) : x pure}: the pure slice of g_{+a}
  std::vector<Vec> rows;
  for (int i = 1; i < 8; ++i) {
    const Octonion x = Octonion::basis(i);
    rows.push_back(to_vec52(F4Elt::from_parts(MatQ(8, 8), x, Octonion(), x)));
  }
  Subspace mz = sum(canonicalize(kF4Dim, rows), z_space());
  out.emplace("coh2nilp", checked_closed("coh2nilp", std::move(mz)));
  return out;
}

Subspace normalizer_nk0(const Subspace& m) {
  const Subspace v = v_space();
  for (const auto& row : m.basis) {
    if (!member(row, v))
      throw std::invalid_argument("normalizer_nk0: m must be contained in g_{+a}");
  }
  return normalizer_in(Algebra::noncompact, m, k0_space());
}

}  // namespace f4
