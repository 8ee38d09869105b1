#include "f4/structure.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace f4 {

struct StructureTable::Cache {
  std::mutex mu;
  std::array<std::optional<MatQ>, kF4Dim> ads;
  std::optional<MatQ> killing_gram;
};

StructureTable::StructureTable(Algebra alg)
    : algebra_(alg), table_(kF4Dim * kF4Dim), cache_(std::make_shared<Cache>()) {
  std::vector<F4Elt> basis;
  basis.reserve(kF4Dim);
  for (int i = 0; i < kF4Dim; ++i) basis.push_back(F4Elt::basis(i));
  for (int i = 0; i < kF4Dim; ++i) {
    for (int j = i + 1; j < kF4Dim; ++j) {
      const Vec v = to_vec52(bracket(alg, basis[static_cast<std::size_t>(i)],
                                     basis[static_cast<std::size_t>(j)]));
      std::vector<Entry> ent;
      for (int k = 0; k < kF4Dim; ++k) {
        if (v[static_cast<std::size_t>(k)] != 0)
          ent.emplace_back(k, v[static_cast<std::size_t>(k)]);
      }
      std::vector<Entry> neg;
      neg.reserve(ent.size());
      for (const auto& [k, c] : ent) neg.emplace_back(k, -c);
      table_[static_cast<std::size_t>(i * kF4Dim + j)] = std::move(ent);
      table_[static_cast<std::size_t>(j * kF4Dim + i)] = std::move(neg);
    }
  }
}

StructureTable::StructureTable(Algebra alg, EmptyTag)
    : algebra_(alg), table_(kF4Dim * kF4Dim), cache_(std::make_shared<Cache>()) {}

const StructureTable& StructureTable::builtin(Algebra alg) {
  static const StructureTable compact_table(Algebra::compact);
  static const StructureTable noncompact_table(Algebra::noncompact);
  return alg == Algebra::compact ? compact_table : noncompact_table;
}

StructureTable StructureTable::from_triples(Algebra alg, const std::vector<Triple>& triples) {
  StructureTable t(alg, EmptyTag{});
  for (const auto& tr : triples) {
    if (tr.i < 0 || tr.j < 0 || tr.k < 0 || tr.i >= kF4Dim || tr.j >= kF4Dim || tr.k >= kF4Dim)
      throw std::invalid_argument("structure table: index out of range");
    if (tr.i >= tr.j)
      throw std::invalid_argument("structure table: triples must have i < j");
    if (tr.c == 0) continue;
    t.table_[static_cast<std::size_t>(tr.i * kF4Dim + tr.j)].emplace_back(tr.k, tr.c);
    t.table_[static_cast<std::size_t>(tr.j * kF4Dim + tr.i)].emplace_back(tr.k, -tr.c);
  }
  for (auto& e : t.table_)
    std::sort(e.begin(), e.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  return t;
}

const std::vector<StructureTable::Entry>& StructureTable::entries(int i, int j) const {
  if (i < 0 || j < 0 || i >= kF4Dim || j >= kF4Dim)
    throw std::invalid_argument("structure table: index out of range");
  return table_[static_cast<std::size_t>(i * kF4Dim + j)];
}

Vec StructureTable::bracket_vec(const Vec& p, const Vec& q) const {
  if (p.size() != kF4Dim || q.size() != kF4Dim)
    throw std::invalid_argument("bracket_vec: need 52 coordinates");
  Vec r(kF4Dim, Rat(0));
  for (int i = 0; i < kF4Dim; ++i) {
    if (p[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < kF4Dim; ++j) {
      if (q[static_cast<std::size_t>(j)] == 0) continue;
      const Rat f = p[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(j)];
      for (const auto& [k, c] : entries(i, j)) r[static_cast<std::size_t>(k)] += f * c;
    }
  }
  return r;
}

const MatQ& StructureTable::ad(int i) const {
  if (i < 0 || i >= kF4Dim) throw std::invalid_argument("ad: index out of range");
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto& slot = cache_->ads[static_cast<std::size_t>(i)];
  if (!slot) {
    MatQ m(kF4Dim, kF4Dim);
    for (int j = 0; j < kF4Dim; ++j) {
      for (const auto& [k, c] : entries(i, j))
        m(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) = c;
    }
    slot = std::move(m);
  }
  return *slot;
}

const Rat& StructureTable::killing_entry(int i, int j) const {
  if (i < 0 || j < 0 || i >= kF4Dim || j >= kF4Dim)
    throw std::invalid_argument("killing_entry: index out of range");
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->killing_gram) {
    // tr(ad_i ad_j) = sum_{k,l} c_{jk}^l c_{il}^k, using only the sparse lists
    MatQ g(kF4Dim, kF4Dim);
    for (int a = 0; a < kF4Dim; ++a) {
      for (int b = a; b < kF4Dim; ++b) {
        Rat s = 0;
        for (int k = 0; k < kF4Dim; ++k) {
          for (const auto& [l, cb] : entries(b, k)) {
            for (const auto& [k2, ca] : entries(a, l)) {
              if (k2 == k) s += ca * cb;
            }
          }
        }
        g(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = s;
        g(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) = s;
      }
    }
    cache_->killing_gram = std::move(g);
  }
  return (*cache_->killing_gram)(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
}

std::vector<StructureTable::Triple> StructureTable::triples() const {
  std::vector<Triple> out;
  for (int i = 0; i < kF4Dim; ++i) {
    for (int j = i + 1; j < kF4Dim; ++j) {
      auto ent = entries(i, j);
      std::sort(ent.begin(), ent.end(),
                [](const Entry& a, const Entry& b) { return a.first < b.first; });
      for (const auto& [k, c] : ent) out.push_back(Triple{i, j, k, c});
    }
  }
  return out;
}

Rat killing(Algebra alg, const F4Elt& p, const F4Elt& q) {
  const StructureTable& t = StructureTable::builtin(alg);
  const Vec a = to_vec52(p);
  const Vec b = to_vec52(q);
  Rat s = 0;
  for (int i = 0; i < kF4Dim; ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < kF4Dim; ++j) {
      if (b[static_cast<std::size_t>(j)] == 0) continue;
      s += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] * t.killing_entry(i, j);
    }
  }
  return s;
}

Subspace ideal_closure(const StructureTable& table, const Vec& seed) {
  if (seed.size() != kF4Dim) throw std::invalid_argument("ideal_closure: need 52 coordinates");
  if (is_zero_vec(seed)) throw std::invalid_argument("ideal_closure: zero seed rejected");
  Subspace S = Subspace::zero(kF4Dim);
  insert_into_span(S, seed);
  std::deque<Vec> work;
  work.push_back(seed);
  while (!work.empty() && S.dim() < kF4Dim) {
    const Vec v = std::move(work.front());
    work.pop_front();
    for (int i = 0; i < kF4Dim && S.dim() < kF4Dim; ++i) {
      Vec w(kF4Dim, Rat(0));
      bool nonzero = false;
      for (int j = 0; j < kF4Dim; ++j) {
        if (v[static_cast<std::size_t>(j)] == 0) continue;
        for (const auto& [k, c] : table.entries(i, j)) {
          w[static_cast<std::size_t>(k)] += v[static_cast<std::size_t>(j)] * c;
          nonzero = true;
        }
      }
      if (!nonzero || is_zero_vec(w)) continue;
      if (insert_into_span(S, w)) work.push_back(std::move(w));
    }
  }
  return S;
}

Subspace ideal_closure(Algebra alg, const F4Elt& seed) {
  return ideal_closure(StructureTable::builtin(alg), to_vec52(seed));
}

}  // namespace f4
