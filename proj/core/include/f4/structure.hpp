#pragma once

#include "f4/algebra.hpp"

#include <memory>
#include <vector>

namespace f4 {

// Sparse structure constants of one of the two brackets over the 52 global
// basis vectors: [b_i, b_j] = sum_k c_{ij}^k b_k. The table is computed once
// from the explicit bracket and is the single source of truth for the sweeps,
// the adjoint matrices, the Killing form, and the JSON exports.
class StructureTable {
 public:
  using Entry = std::pair<int, Rat>;  // (k, c_{ij}^k)
  struct Triple {
    int i, j, k;
    Rat c;
  };

  static const StructureTable& builtin(Algebra alg);

  // Rebuilds a table from a sparse triple list with i < j (skew symmetry
  // supplies the rest). Used by the import path of the CLI.
  static StructureTable from_triples(Algebra alg, const std::vector<Triple>& triples);

  Algebra algebra() const { return algebra_; }

  const std::vector<Entry>& entries(int i, int j) const;  // any i, j

  // Bilinear expansion through the table.
  Vec bracket_vec(const Vec& p, const Vec& q) const;

  // Adjoint matrix of basis vector i, materialized on demand and memoized.
  const MatQ& ad(int i) const;

  // Killing pairing tr(ad_i ad_j) of basis vectors, memoized as a matrix.
  const Rat& killing_entry(int i, int j) const;

  // Sorted triple list with i < j, for export.
  std::vector<Triple> triples() const;

  explicit StructureTable(Algebra alg);

 private:
  struct EmptyTag {};
  StructureTable(Algebra alg, EmptyTag);

  struct Cache;
  Algebra algebra_;
  std::vector<std::vector<Entry>> table_;  // (i * 52 + j)
  std::shared_ptr<Cache> cache_;
};

// Killing form B(p, q) = tr(ad_p ad_q) through the table of the algebra.
Rat killing(Algebra alg, const F4Elt& p, const F4Elt& q);

// Smallest ad-invariant subspace containing the seed, by iterated bracketing
// against the basis until the dimension stabilizes. A zero seed is rejected.
Subspace ideal_closure(Algebra alg, const F4Elt& seed);
Subspace ideal_closure(const StructureTable& table, const Vec& seed);

}  // namespace f4
