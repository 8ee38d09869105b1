#include "f4/suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace f4 {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(const char* head, long a, long b = -1, long c = -1) {
  std::ostringstream os;
  os << head << "(" << a;
  if (b >= 0) os << "," << b;
  if (c >= 0) os << "," << c;
  os << ")";
  return os.str();
}

void fail(SuiteResult& r, std::string id, std::string witness) {
  r.failures.push_back(CheckFailure{std::move(id), std::move(witness)});
}

void check(SuiteResult& r, bool ok, const std::string& id, const std::string& witness = "") {
  ++r.checks;
  ++r.categories[id.substr(0, id.find('('))];
  if (!ok) fail(r, id, witness);
}

// Splits [0, total) into chunks, runs body(begin, end, local) per chunk and
// merges the locals in chunk order, so the result does not depend on jobs.
template <typename Body>
void parallel_sweep(long total, int jobs, SuiteResult& out, Body body) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || total < 256) {
    body(0L, total, out);
    return;
  }
  const long nchunks = std::min<long>(jobs, total);
  std::vector<SuiteResult> locals(static_cast<std::size_t>(nchunks));
  std::vector<std::thread> threads;
  const long chunk = (total + nchunks - 1) / nchunks;
  for (long t = 0; t < nchunks; ++t) {
    const long begin = t * chunk;
    const long end = std::min(total, begin + chunk);
    threads.emplace_back(
        [&, begin, end, t] { body(begin, end, locals[static_cast<std::size_t>(t)]); });
  }
  for (auto& th : threads) th.join();
  for (const auto& local : locals) {
    out.checks += local.checks;
    out.failures.insert(out.failures.end(), local.failures.begin(), local.failures.end());
    for (const auto& [cat, n] : local.categories) out.categories[cat] += n;
  }
}

// ---------------------------------------------------------------------------
// octonion

SuiteResult suite_octonion(const SuiteOptions&) {
  SuiteResult r;
  r.name = "octonion";
  const Octonion e = Octonion::unit();

  const int seeds[7][3] = {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7},
                           {5, 3, 6}, {6, 1, 7}, {7, 2, 5}};
  for (const auto& s : seeds) {
    const Octonion prod = mul(Octonion::basis(s[0]), Octonion::basis(s[1]));
    check(r, prod == Octonion::basis(s[2]), fmt("octonion/seed-product", s[0], s[1]),
          vec_to_string(prod.coords()));
  }
  check(r, mul(Octonion::basis(3), Octonion::basis(5)) == -Octonion::basis(6),
        "octonion/derived-product(3,5)");

  for (int i = 0; i < 8; ++i) {
    const Octonion b = Octonion::basis(i);
    check(r, mul(e, b) == b, fmt("octonion/left-identity", i));
    check(r, mul(b, e) == b, fmt("octonion/right-identity", i));
    if (i >= 1) check(r, mul(b, b) == -e, fmt("octonion/square", i));
    check(r, conj(conj(b)) == b, fmt("octonion/conj-involution", i));
    check(r, b + conj(b) == Rat(2) * re(b) * e, fmt("octonion/conj-trace", i));
  }

  auto check_pair = [&](const Octonion& x, const Octonion& y, const std::string& kind,
                        long a, long b) {
    check(r, mul(mul(x, x), y) == mul(x, mul(x, y)),
          fmt(("octonion/left-alternative/" + kind).c_str(), a, b));
    check(r, mul(mul(x, y), y) == mul(x, mul(y, y)),
          fmt(("octonion/right-alternative/" + kind).c_str(), a, b));
    check(r, norm2(mul(x, y)) == norm2(x) * norm2(y),
          fmt(("octonion/norm/" + kind).c_str(), a, b));
    check(r, conj(mul(x, y)) == mul(conj(y), conj(x)),
          fmt(("octonion/antiautomorphism/" + kind).c_str(), a, b));
  };
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) check_pair(Octonion::basis(i), Octonion::basis(j), "basis", i, j);

  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  auto random_octonion = [&] {
    Octonion o;
    for (auto& c : o.c) c = Rat(num(rng), den(rng));
    return o;
  };
  for (int t = 0; t < 100; ++t)
    check_pair(random_octonion(), random_octonion(), "random", t, -1);

  return r;
}

// ---------------------------------------------------------------------------
// triality

SuiteResult suite_triality(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "triality";
  const MatQ& P = pi_matrix();
  const MatQ& K = kappa_matrix();
  const MatQ& L = lambda_matrix();
  const MatQ& L2 = lambda2_matrix();
  const MatQ id = MatQ::identity(kWedgeDim);

  check(r, P * P == id, "triality/pi-squared");
  check(r, K * K == id, "triality/kappa-squared");
  check(r, L * L2 == id, "triality/lambda-cubed");
  check(r, K * L2 == P, "triality/kappa-lambda2-is-pi");
  check(r, L * K == P, "triality/lambda-kappa-is-pi");

  const Rat half(1, 2);
  for (int a = 1; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      if (a == b) continue;
      const Octonion ea = Octonion::basis(a);
      const Octonion eb = Octonion::basis(b);
      const MatQ w = wedge(ea, eb);
      check(r, lambda(w) == half * (lmat(conj(eb)) * lmat(conj(ea))),
            fmt("triality/lambda-generator", a, b));
      check(r, lambda2(w) == half * (rmat(conj(eb)) * rmat(conj(ea))),
            fmt("triality/lambda2-generator", a, b));
    }
  }

  for (int i = 1; i < 8; ++i) {
    check(r, tmat(Octonion::basis(i)) == Rat(2) * wedge(Octonion::basis(i), Octonion::unit()),
          fmt("triality/tmat-wedge", i));
  }

  // automorphism property on all wedge basis pairs
  {
    const long total = static_cast<long>(kWedgeDim) * kWedgeDim;
    parallel_sweep(total, opt.jobs, r, [&](long begin, long end, SuiteResult& local) {
      for (long t = begin; t < end; ++t) {
        const int i = static_cast<int>(t / kWedgeDim);
        const int j = static_cast<int>(t % kWedgeDim);
        if (j <= i) continue;
        const MatQ wi = basis_wedge(i);
        const MatQ wj = basis_wedge(j);
        const MatQ br = commutator(wi, wj);
        check(local, pi(br) == commutator(pi(wi), pi(wj)), fmt("triality/pi-bracket", i, j));
        check(local, kappa(br) == commutator(kappa(wi), kappa(wj)),
              fmt("triality/kappa-bracket", i, j));
        check(local, lambda(br) == commutator(lambda(wi), lambda(wj)),
              fmt("triality/lambda-bracket", i, j));
      }
    });
  }

  // infinitesimal triality on all 28 x 8 x 8 basis tuples
  {
    const long total = static_cast<long>(kWedgeDim) * 64;
    parallel_sweep(total, opt.jobs, r, [&](long begin, long end, SuiteResult& local) {
      for (long t = begin; t < end; ++t) {
        const int k = static_cast<int>(t / 64);
        const int x = static_cast<int>((t / 8) % 8);
        const int y = static_cast<int>(t % 8);
        const Octonion defect =
            triality_defect(basis_wedge(k), Octonion::basis(x), Octonion::basis(y));
        check(local, defect.is_zero(), fmt("triality/defect", k, x, y),
              vec_to_string(defect.coords()));
      }
    });
  }

  // so(9) model: embedding is a bracket homomorphism on all basis pairs
  {
    std::vector<So9Elt> basis;
    for (int k = 0; k < kWedgeDim; ++k) basis.push_back(So9Elt{basis_wedge(k), Octonion()});
    for (int i = 0; i < 8; ++i) basis.push_back(So9Elt{MatQ(8, 8), Octonion::basis(i)});
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        const MatQ lhs = so9_embed(so9_bracket(basis[i], basis[j]));
        const MatQ rhs = commutator(so9_embed(basis[i]), so9_embed(basis[j]));
        check(r, lhs == rhs, fmt("triality/so9-hom", static_cast<long>(i), static_cast<long>(j)));
      }
    }
    MatQ flat(36, 81);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const MatQ m = so9_embed(basis[i]);
      for (std::size_t a = 0; a < 9; ++a)
        for (std::size_t b = 0; b < 9; ++b) flat(i, a * 9 + b) = m(a, b);
    }
    check(r, rank(flat) == 36, "triality/so9-injective");
  }

  return r;
}

// ---------------------------------------------------------------------------
// jacobi

SuiteResult suite_jacobi(Algebra alg, const SuiteOptions& opt) {
  SuiteResult r;
  r.name = std::string("jacobi/") + algebra_name(alg);
  const StructureTable* table =
      alg == Algebra::compact ? opt.override_compact : opt.override_noncompact;
  if (table == nullptr) table = &StructureTable::builtin(alg);

  // enumerate unordered triples i < j < k
  std::vector<std::array<int, 3>> triples;
  triples.reserve(22100);
  for (int i = 0; i < kF4Dim; ++i)
    for (int j = i + 1; j < kF4Dim; ++j)
      for (int k = j + 1; k < kF4Dim; ++k) triples.push_back({i, j, k});

  parallel_sweep(static_cast<long>(triples.size()), opt.jobs, r,
                 [&](long begin, long end, SuiteResult& local) {
    std::array<Rat, kF4Dim> acc;
    for (long t = begin; t < end; ++t) {
      const auto [i, j, k] = triples[static_cast<std::size_t>(t)];
      for (auto& a : acc) a = 0;
      auto add = [&](int a, const std::vector<StructureTable::Entry>& inner_list) {
        for (const auto& [m, c] : inner_list)
          for (const auto& [n, c2] : table->entries(a, m))
            acc[static_cast<std::size_t>(n)] += c * c2;
      };
      add(i, table->entries(j, k));
      add(j, table->entries(k, i));
      add(k, table->entries(i, j));
      bool zero = true;
      for (const auto& a : acc) {
        if (a != 0) {
          zero = false;
          break;
        }
      }
      std::string witness;
      if (!zero) {
        Vec v(acc.begin(), acc.end());
        witness = vec_to_string(v);
      }
      check(local, zero, fmt("jacobi/defect", i, j, k), witness);
    }
  });
  return r;
}

// ---------------------------------------------------------------------------
// invariance

int inner_weight(int i) { return i < kWedgeDim ? 2 : 8; }
int theta_weight(int i) {
  if (i < kWedgeDim) return 2;
  return i < kWedgeDim + 8 ? 8 : -8;
}

Rat coeff_of(const std::vector<StructureTable::Entry>& entries, int k) {
  for (const auto& [m, c] : entries) {
    if (m == k) return c;
  }
  return Rat(0);
}

SuiteResult suite_invariance(Algebra alg, const SuiteOptions& opt) {
  SuiteResult r;
  r.name = std::string("invariance/") + algebra_name(alg);
  const StructureTable* table =
      alg == Algebra::compact ? opt.override_compact : opt.override_noncompact;
  if (table == nullptr) table = &StructureTable::builtin(alg);
  const bool compact = alg == Algebra::compact;

  // ad-invariance of the form (the scalar product for the compact algebra,
  // <.,theta(.)> for the non-compact one) on all basis directions
  {
    const long total = static_cast<long>(kF4Dim) * kF4Dim;
    parallel_sweep(total, opt.jobs, r, [&](long begin, long end, SuiteResult& local) {
      for (long t = begin; t < end; ++t) {
        const int p = static_cast<int>(t / kF4Dim);
        const int rr = static_cast<int>(t % kF4Dim);
        const auto& pr = table->entries(p, rr);
        for (int q = 0; q < kF4Dim; ++q) {
          const int wq = compact ? inner_weight(q) : theta_weight(q);
          const int wp = compact ? inner_weight(p) : theta_weight(p);
          const Rat lhs = Rat(wq) * coeff_of(pr, q);
          const Rat rhs = Rat(wp) * coeff_of(table->entries(q, rr), p);
          check(local, lhs + rhs == 0, fmt("invariance/ad", p, q, rr),
                rat_to_string(lhs + rhs));
        }
      }
    });
  }

  if (compact) {
    // tau is a bracket automorphism, has order 3, and preserves the product
    std::vector<F4Elt> basis;
    std::vector<F4Elt> tau_basis;
    for (int i = 0; i < kF4Dim; ++i) {
      basis.push_back(F4Elt::basis(i));
      tau_basis.push_back(tau(basis.back()));
    }
    for (int i = 0; i < kF4Dim; ++i)
      check(r, tau(tau(tau(basis[static_cast<std::size_t>(i)]))) == basis[static_cast<std::size_t>(i)],
            fmt("invariance/tau-order3", i));
    for (int i = 0; i < kF4Dim; ++i) {
      for (int j = 0; j < kF4Dim; ++j) {
        check(r,
              inner(tau_basis[static_cast<std::size_t>(i)], tau_basis[static_cast<std::size_t>(j)]) ==
                  inner(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]),
              fmt("invariance/tau-inner", i, j));
      }
    }
    parallel_sweep(static_cast<long>(kF4Dim) * kF4Dim, opt.jobs, r,
                   [&](long begin, long end, SuiteResult& local) {
      for (long t = begin; t < end; ++t) {
        const int i = static_cast<int>(t / kF4Dim);
        const int j = static_cast<int>(t % kF4Dim);
        if (j <= i) continue;
        const F4Elt lhs = tau(bracket_c(basis[static_cast<std::size_t>(i)],
                                        basis[static_cast<std::size_t>(j)]));
        const F4Elt rhs = bracket_c(tau_basis[static_cast<std::size_t>(i)],
                                    tau_basis[static_cast<std::size_t>(j)]);
        check(local, lhs == rhs, fmt("invariance/tau-bracket", i, j));
      }
    });
  } else {
    // symmetry of <p, theta q> on basis pairs
    for (int i = 0; i < kF4Dim; ++i) {
      for (int j = i + 1; j < kF4Dim; ++j) {
        const F4Elt bi = F4Elt::basis(i);
        const F4Elt bj = F4Elt::basis(j);
        check(r, inner(bi, cartan_involution(bj)) == inner(bj, cartan_involution(bi)),
              fmt("invariance/theta-form-symmetric", i, j));
      }
    }
    // plain scalar product positive definite on p*
    for (int i = kWedgeDim + 8; i < kF4Dim; ++i) {
      for (int j = i; j < kF4Dim; ++j) {
        const Rat v = inner(F4Elt::basis(i), F4Elt::basis(j));
        check(r, i == j ? v == 8 : v == 0, fmt("invariance/pstar-definite", i, j));
      }
    }
  }

  // Killing form is a single negative multiple of the invariant form
  {
    const Rat c = table->killing_entry(0, 0) / Rat(2);
    r.notes.push_back("killing form = c * invariant form with c = " + rat_to_string(c));
    check(r, c < 0, "invariance/killing-constant-negative", rat_to_string(c));
    for (int i = 0; i < kF4Dim; ++i) {
      for (int j = i; j < kF4Dim; ++j) {
        const Rat expected =
            c * Rat(compact ? (i == j ? inner_weight(i) : 0)
                            : (i == j ? theta_weight(i) : 0));
        check(r, table->killing_entry(i, j) == expected, fmt("invariance/killing", i, j),
              rat_to_string(table->killing_entry(i, j)));
      }
    }
  }

  // simplicity: the ideal closure of every basis vector is everything
  for (int i = 0; i < kF4Dim; ++i) {
    const Subspace closure = ideal_closure(*table, unit_vec(kF4Dim, static_cast<std::size_t>(i)));
    check(r, closure.dim() == kF4Dim, fmt("invariance/ideal-closure", i),
          "dim " + std::to_string(closure.dim()));
  }

  return r;
}

// ---------------------------------------------------------------------------
// roots

SuiteResult suite_roots(const SuiteOptions&) {
  SuiteResult r;
  r.name = "roots";
  const RootSpaceDecomp d = root_decomposition();

  check(r, d.g_m2a.dim() == 7, "roots/dim-g-minus-2a");
  check(r, d.g_ma.dim() == 8, "roots/dim-g-minus-a");
  check(r, d.g_0.dim() == 22, "roots/dim-g0");
  check(r, d.g_a.dim() == 8, "roots/dim-g-plus-a");
  check(r, d.g_2a.dim() == 7, "roots/dim-g-plus-2a");
  check(r, d.k0.dim() == 21, "roots/dim-k0");
  check(r, d.a.dim() == 1, "roots/dim-a");
  r.notes.push_back("root space dims (g_{-2a}, g_{-a}, g_0, g_{+a}, g_{+2a}) = (" +
                    std::to_string(d.g_m2a.dim()) + ", " + std::to_string(d.g_ma.dim()) + ", " +
                    std::to_string(d.g_0.dim()) + ", " + std::to_string(d.g_a.dim()) + ", " +
                    std::to_string(d.g_2a.dim()) + ")");

  Subspace total = d.g_m2a;
  for (const Subspace* s : {&d.g_ma, &d.g_0, &d.g_a, &d.g_2a}) total = sum(total, *s);
  check(r, total.dim() == kF4Dim, "roots/direct-sum-dim");
  check(r, sum(d.k0, d.a) == d.g_0, "roots/g0-is-k0-plus-a");

  const F4Elt H = from_vec52(d.a.basis[0]);
  const std::array<const Subspace*, 5> spaces = {&d.g_m2a, &d.g_ma, &d.g_0, &d.g_a, &d.g_2a};
  const std::array<int, 5> levels = {-2, -1, 0, 1, 2};
  for (std::size_t s = 0; s < spaces.size(); ++s) {
    for (const auto& row : spaces[s]->basis) {
      const F4Elt xi = from_vec52(row);
      check(r, bracket_nc(H, xi) == Rat(levels[s]) * xi,
            fmt("roots/eigenrelation", levels[s]), vec_to_string(row));
    }
  }

  const StructureTable& table = StructureTable::builtin(Algebra::noncompact);
  for (std::size_t a = 0; a < spaces.size(); ++a) {
    for (std::size_t b = 0; b < spaces.size(); ++b) {
      const int target = levels[a] + levels[b];
      const Subspace* target_space = nullptr;
      for (std::size_t s = 0; s < spaces.size(); ++s) {
        if (levels[s] == target) target_space = spaces[s];
      }
      for (std::size_t i = 0; i < spaces[a]->dim(); ++i) {
        for (std::size_t j = 0; j < spaces[b]->dim(); ++j) {
          const Vec w = table.bracket_vec(spaces[a]->basis[i], spaces[b]->basis[j]);
          const bool ok = target_space ? member(w, *target_space) : is_zero_vec(w);
          check(r, ok, fmt("roots/grading", levels[a], levels[b], static_cast<long>(i * 64 + j)),
                vec_to_string(w));
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// iwasawa

std::vector<IwasawaCoords> iwasawa_basis() {
  std::vector<IwasawaCoords> basis;
  for (int i = 1; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      basis.push_back(IwasawaCoords::make(basis_wedge(wedge_index(i, j)), 0, Octonion(), Octonion()));
  basis.push_back(IwasawaCoords::make(MatQ(8, 8), 1, Octonion(), Octonion()));
  for (int i = 0; i < 8; ++i)
    basis.push_back(IwasawaCoords::make(MatQ(8, 8), 0, Octonion::basis(i), Octonion()));
  for (int i = 1; i < 8; ++i)
    basis.push_back(IwasawaCoords::make(MatQ(8, 8), 0, Octonion(), Octonion::basis(i)));
  return basis;
}

SuiteResult suite_iwasawa(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "iwasawa";
  const StructureTable& table = StructureTable::builtin(Algebra::noncompact);

  const Subspace k = k_space();
  const Subspace an = an_space();
  const Subspace n = n_space();
  check(r, sum(k, an).dim() == kF4Dim, "iwasawa/k-plus-an-spans");
  check(r, intersect(k, an).dim() == 0, "iwasawa/k-meets-an-trivially");

  check(r, is_bracket_closed(table, n), "iwasawa/n-closed");
  {
    const auto chain = lower_central_series(n);
    std::vector<std::size_t> dims;
    std::string dims_str;
    for (const auto& s : chain) {
      dims.push_back(s.dim());
      dims_str += (dims_str.empty() ? "" : ", ") + std::to_string(s.dim());
    }
    check(r, dims == std::vector<std::size_t>{15, 7, 0}, "iwasawa/n-lower-central-series",
          dims_str);
    r.notes.push_back("lower central series of n has dims (" + dims_str + ")");
  }
  check(r, is_bracket_closed(table, an), "iwasawa/an-closed");
  {
    const auto chain = derived_series(an);
    check(r, chain.back().dim() == 0, "iwasawa/an-solvable",
          "terminates at dim " + std::to_string(chain.back().dim()));
  }

  const Subspace parabolic = parabolic_space();
  check(r, parabolic.dim() == 37, "iwasawa/parabolic-dim");
  check(r, is_bracket_closed(table, parabolic), "iwasawa/parabolic-closed");

  // g0 commutes with a
  const Subspace g0 = sum(k0_space(), a_space());
  const Vec h = a_space().basis[0];
  for (std::size_t i = 0; i < g0.dim(); ++i) {
    check(r, is_zero_vec(table.bracket_vec(g0.basis[i], h)),
          fmt("iwasawa/g0-commutes-a", static_cast<long>(i)));
  }

  // the explicit parabolic bracket agrees with the ambient bracket through iota
  const auto basis = iwasawa_basis();
  {
    std::vector<Vec> images;
    for (const auto& c : basis) images.push_back(to_vec52(iota(c)));
    const Subspace image = canonicalize(kF4Dim, images);
    check(r, image.dim() == 37, "iwasawa/iota-injective");
    check(r, image == parabolic, "iwasawa/iota-image-is-parabolic");
  }
  const long nb = static_cast<long>(basis.size());
  parallel_sweep(nb * nb, opt.jobs, r, [&](long begin, long end, SuiteResult& local) {
    for (long t = begin; t < end; ++t) {
      const long i = t / nb;
      const long j = t % nb;
      if (j <= i) continue;
      const F4Elt lhs = iota(an_bracket(basis[static_cast<std::size_t>(i)],
                                        basis[static_cast<std::size_t>(j)]));
      const F4Elt rhs = bracket_nc(iota(basis[static_cast<std::size_t>(i)]),
                                   iota(basis[static_cast<std::size_t>(j)]));
      check(local, lhs == rhs, fmt("iwasawa/an-bracket", i, j));
    }
  });
  return r;
}

// ---------------------------------------------------------------------------
// geometry

SuiteResult suite_geometry(const SuiteOptions&) {
  SuiteResult r;
  r.name = "geometry";

  const TgLabel labels[] = {TgLabel::H1,  TgLabel::H2,  TgLabel::H3, TgLabel::H4,
                            TgLabel::H5,  TgLabel::H6,  TgLabel::H7, TgLabel::H8,
                            TgLabel::RH2, TgLabel::CH2, TgLabel::HH2, TgLabel::Full};
  const std::size_t expected_generated[] = {1, 3, 6, 10, 15, 21, 28, 36, 3, 8, 21, 52};
  for (std::size_t i = 0; i < 12; ++i) {
    const Subspace L = std_triple(labels[i]);
    check(r, is_lie_triple(L).ok, "geometry/triple-system/" + label_name(labels[i]));
    const Subspace G = generated_subalgebra(Algebra::noncompact, L);
    check(r, G.dim() == expected_generated[i], "geometry/generated-dim/" + label_name(labels[i]),
          "dim " + std::to_string(G.dim()));
    check(r, classify_triple_system(L) == labels[i],
          "geometry/classify/" + label_name(labels[i]), label_name(classify_triple_system(L)));
  }

  // curvature values of the two plane types, and their non-constant mix
  const Octonion e = Octonion::unit();
  const Octonion e1 = Octonion::basis(1);
  const Octonion zero;
  check(r, sectional_curvature(Algebra::compact, {e, zero}, {zero, e}) == 8,
        "geometry/curvature-rh2");
  check(r, sectional_curvature(Algebra::compact, {e, zero}, {e1, zero}) == 32,
        "geometry/curvature-h2");
  check(r, sectional_curvature(Algebra::noncompact, {e, zero}, {zero, e}) == -8,
        "geometry/curvature-rh2-dual");
  {
    // CH2 attains both values over its orthogonal basis pairs
    const PStarVector basis[4] = {{e, zero}, {e1, zero}, {zero, e}, {zero, e1}};
    bool saw8 = false, saw32 = false, other = false;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        const Rat k = sectional_curvature(Algebra::compact, basis[i], basis[j]);
        if (k == 8) saw8 = true;
        else if (k == 32) saw32 = true;
        else other = true;
      }
    }
    check(r, saw8 && saw32, "geometry/ch2-curvature-spread");
    check(r, !other, "geometry/ch2-curvature-values");
  }

  // coordinate subalgebra pairs K x K': triple system iff the factors agree
  {
    const int dims[4] = {1, 2, 4, 8};
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        std::vector<Vec> rows;
        for (int i = 0; i < dims[a]; ++i)
          rows.push_back(to_vec52(pstar_elt({Octonion::basis(i), zero})));
        for (int i = 0; i < dims[b]; ++i)
          rows.push_back(to_vec52(pstar_elt({zero, Octonion::basis(i)})));
        const Subspace L = canonicalize(kF4Dim, rows);
        const bool is_triple = is_lie_triple(L).ok;
        check(r, is_triple == (a == b), fmt("geometry/mixed-factors", dims[a], dims[b]),
              is_triple ? "triple system" : "not a triple system");
      }
    }
  }

  // sp(1)^3, sp(1)^4, sp(1,2) and the centralizing complement
  const Subspace s13 = sp13();
  const Subspace s14 = sp14();
  const Subspace s12 = sp12_algebra();
  check(r, s13.dim() == 9, "geometry/sp13-dim", std::to_string(s13.dim()));
  check(r, s14.dim() == 12, "geometry/sp14-dim", std::to_string(s14.dim()));
  check(r, s12.dim() == 21, "geometry/sp12-dim", std::to_string(s12.dim()));
  check(r, canonicalize(kWedgeDim, [&] {
          std::vector<Vec> rows;
          for (const auto& row : s13.basis) rows.push_back(lambda_matrix().apply(row));
          return rows;
        }()) == s13,
        "geometry/sp13-lambda-invariant");
  check(r, canonicalize(kWedgeDim, [&] {
          std::vector<Vec> rows;
          for (const auto& row : s14.basis) rows.push_back(lambda_matrix().apply(row));
          return rows;
        }()) == s14,
        "geometry/sp14-lambda-invariant");

  const StructureTable& table = StructureTable::builtin(Algebra::noncompact);
  check(r, is_bracket_closed(table, s12), "geometry/sp12-closed");

  auto embed_wedge = [](const Subspace& s) {
    std::vector<Vec> rows;
    for (const auto& row : s.basis) {
      Vec v(kF4Dim, Rat(0));
      for (int k = 0; k < kWedgeDim; ++k) v[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k)];
      rows.push_back(std::move(v));
    }
    return canonicalize(kF4Dim, rows);
  };
  const Subspace s13_52 = embed_wedge(s13);
  {
    bool stable = true;
    for (const auto& a : s13_52.basis)
      for (const auto& b : s12.basis)
        if (!member(table.bracket_vec(a, b), s12)) stable = false;
    check(r, stable, "geometry/sp12-ad-stable-under-sp13");
  }

  // the complement of sp13 in sp14 centralizes sp12
  {
    MatQ gram = MatQ::identity(kWedgeDim);
    const Subspace comp = intersect(s14, orthocomplement(s13, gram));
    check(r, comp.dim() == 3, "geometry/sp13-complement-dim", std::to_string(comp.dim()));
    const Subspace comp52 = embed_wedge(comp);
    bool centralizes = true;
    for (const auto& a : comp52.basis) {
      for (const auto& b : s12.basis) {
        if (!is_zero_vec(table.bracket_vec(a, b))) centralizes = false;
      }
    }
    check(r, centralizes, "geometry/complement-centralizes-sp12");
  }

  return r;
}

// ---------------------------------------------------------------------------
// table1

struct Table1Row {
  const char* name;
  TgLabel label;  // Unclassified marks the fixed-point row
  std::size_t expected_centralizer;
};

const Table1Row kTable1Rows[] = {
    {"pt", TgLabel::Unclassified, 36},
    {"RH2", TgLabel::RH2, 14},
    {"CH2", TgLabel::CH2, 8},
    {"HH2", TgLabel::HH2, 3},
    {"H1", TgLabel::H1, 21},
    {"H2", TgLabel::H2, 15},
    {"H3", TgLabel::H3, 10},
    {"H4", TgLabel::H4, 6},
    {"H5", TgLabel::H5, 3},
    {"H6", TgLabel::H6, 1},
    {"H7", TgLabel::H7, 0},
    {"H8", TgLabel::H8, 0},
};

SuiteResult suite_table1(const SuiteOptions&) {
  SuiteResult r;
  r.name = "table1";
  const Subspace k = k_space();
  for (const auto& row : kTable1Rows) {
    const Subspace L = row.label == TgLabel::Unclassified ? Subspace::zero(kF4Dim)
                                                          : std_triple(row.label);
    const Subspace z = centralizer_in(Algebra::noncompact, L, k);
    check(r, z.dim() == row.expected_centralizer,
          std::string("table1/centralizer/") + row.name, "dim " + std::to_string(z.dim()));
  }

  check(r, normalizer_in(Algebra::noncompact, a_space(), Subspace::full(kF4Dim)).dim() == 22,
        "table1/normalizer-of-a");

  const int codims[] = {0, 1, 2, 3, 5, 6, 7};
  const std::size_t expected[] = {21, 14, 9, 6, 6, 9, 14};
  for (std::size_t i = 0; i < 7; ++i) {
    const Subspace nk0 = normalizer_nk0(coordinate_m(codims[i]));
    check(r, nk0.dim() == expected[i], fmt("table1/normalizer-nk0-codim", codims[i]),
          "dim " + std::to_string(nk0.dim()));
  }
  return r;
}

// ---------------------------------------------------------------------------
// polarity

SuiteResult suite_polarity(const SuiteOptions&) {
  SuiteResult r;
  r.name = "polarity";
  const Octonion e = Octonion::unit();
  const Octonion e1 = Octonion::basis(1);
  const Octonion zero;

  const auto examples = example_subalgebras();
  check(r, examples.at("n").dim() == 15, "polarity/dim-n");
  check(r, examples.at("amz").dim() == 15, "polarity/dim-amz");
  check(r, examples.at("coh2nilp").dim() == 14, "polarity/dim-coh2nilp");

  {
    const auto chain = lower_central_series(examples.at("n"));
    std::vector<std::size_t> dims;
    for (const auto& s : chain) dims.push_back(s.dim());
    check(r, dims == std::vector<std::size_t>{15, 7, 0}, "polarity/n-two-step-nilpotent");
  }

  // the cohomogeneity-two example: orthogonality holds and the section is a
  // real hyperbolic plane
  {
    const Subspace sigma = canonicalize(
        kF4Dim, {to_vec52(pstar_elt({e, zero})), to_vec52(pstar_elt({zero, e}))});
    const PolarityReport report = section_orthogonality(examples.at("coh2nilp"), sigma);
    check(r, report.orthogonality_holds, "polarity/coh2nilp-orthogonal");
    const Subspace expected_bracket = canonicalize(
        kF4Dim, {to_vec52(F4Elt::from_parts(MatQ(8, 8), -e, Octonion(), Octonion()))});
    check(r, report.sigma_bracket == expected_bracket, "polarity/coh2nilp-sigma-bracket");
    check(r, classify_triple_system(sigma) == TgLabel::RH2, "polarity/coh2nilp-section-rh2");
  }

  // the totally geodesic H^8 orbit obstruction
  check(r, nonpolar_witness_h8() == 4, "polarity/h8-witness-value",
        rat_to_string(nonpolar_witness_h8()));
  {
    const F4Elt bracket_side = F4Elt::from_parts(lmat(e1), Octonion(), Octonion(), Octonion());
    const F4Elt z_side = F4Elt::from_parts(rmat(e1), Octonion(), e1, Octonion());
    check(r, inner(bracket_side, z_side) == -4, "polarity/h8-pairing",
          rat_to_string(inner(bracket_side, z_side)));
    const F4Elt lhs = bracket_nc(pstar_elt({zero, e}), pstar_elt({zero, e1}));
    check(r, lhs == Rat(2) * bracket_side, "polarity/h8-bracket-identity");
    // the pairing of the same bracket element against the e2 direction of the
    // 2-alpha space vanishes (regression value)
    const F4Elt z2 = F4Elt::from_parts(rmat(Octonion::basis(2)), Octonion(), Octonion::basis(2),
                                       Octonion());
    check(r, inner(bracket_side, z2) == 0, "polarity/h8-pairing-e2",
          rat_to_string(inner(bracket_side, z2)));

    const Subspace h = sum(a_space(), z_space());
    const Subspace sigma = canonicalize(
        kF4Dim, {to_vec52(pstar_elt({zero, e})), to_vec52(pstar_elt({zero, e1}))});
    const PolarityReport report = section_orthogonality(h, sigma);
    check(r, !report.orthogonality_holds, "polarity/h8-not-orthogonal");
    check(r, report.witness.has_value(), "polarity/h8-witness-present");
  }
  return r;
}

}  // namespace

long SuiteResult::category(const std::string& prefix) const {
  const auto it = categories.find(prefix);
  return it == categories.end() ? 0 : it->second;
}

std::vector<std::string> suite_names() {
  return {"octonion", "triality", "jacobi", "invariance", "roots",
          "iwasawa",  "geometry", "table1", "polarity"};
}

bool suite_uses_algebra(const std::string& suite) {
  return suite == "jacobi" || suite == "invariance";
}

SuiteResult run_suite(const std::string& suite, Algebra alg, const SuiteOptions& opt) {
  const auto start = Clock::now();
  SuiteResult r;
  if (suite == "octonion") r = suite_octonion(opt);
  else if (suite == "triality") r = suite_triality(opt);
  else if (suite == "jacobi") r = suite_jacobi(alg, opt);
  else if (suite == "invariance") r = suite_invariance(alg, opt);
  else if (suite == "roots") r = suite_roots(opt);
  else if (suite == "iwasawa") r = suite_iwasawa(opt);
  else if (suite == "geometry") r = suite_geometry(opt);
  else if (suite == "table1") r = suite_table1(opt);
  else if (suite == "polarity") r = suite_polarity(opt);
  else throw std::invalid_argument("unknown suite '" + suite + "'");
  std::sort(r.failures.begin(), r.failures.end(),
            [](const CheckFailure& a, const CheckFailure& b) { return a.id < b.id; });
  r.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt) {
  std::vector<SuiteResult> out;
  out.push_back(run_suite("octonion", Algebra::compact, opt));
  out.push_back(run_suite("triality", Algebra::compact, opt));
  out.push_back(run_suite("jacobi", Algebra::compact, opt));
  out.push_back(run_suite("jacobi", Algebra::noncompact, opt));
  out.push_back(run_suite("invariance", Algebra::compact, opt));
  out.push_back(run_suite("invariance", Algebra::noncompact, opt));
  out.push_back(run_suite("roots", Algebra::noncompact, opt));
  out.push_back(run_suite("iwasawa", Algebra::noncompact, opt));
  out.push_back(run_suite("geometry", Algebra::noncompact, opt));
  out.push_back(run_suite("table1", Algebra::noncompact, opt));
  out.push_back(run_suite("polarity", Algebra::noncompact, opt));
  return out;
}

}  // namespace f4
