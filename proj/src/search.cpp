#include "htlab/search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "htlab/lagrangian.hpp"
#include "htlab/rng.hpp"

namespace htlab {

namespace {

// integer fast path for candidate batches: vectors with small integer entries,
// brackets evaluated in int64 before any exact-rational machinery runs
struct IntModel {
  size_t n;
  int m;
  // J as signed index maps would assume permutation structure; generators can
  // be arbitrary small-integer matrices, so keep dense int rows
  std::vector<std::vector<long long>> j_entries;  // m matrices, row-major

  explicit IntModel(const HTypeAlgebra& alg) : n(alg.n), m(alg.m) {
    j_entries.resize(static_cast<size_t>(m));
    for (int t = 0; t < m; ++t) {
      auto& flat = j_entries[static_cast<size_t>(t)];
      flat.resize(n * n);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          const Rat& e = alg.rep.J[static_cast<size_t>(t)].at(i, j);
          if (!e.is_integer() || !e.num().is_small())
            throw std::logic_error("IntModel: generator entry is not a small integer");
          flat[i * n + j] = e.num().small_value();
        }
    }
  }

  void apply(int t, const std::vector<long long>& v, std::vector<long long>& out) const {
    const auto& flat = j_entries[static_cast<size_t>(t)];
    for (size_t i = 0; i < n; ++i) {
      long long s = 0;
      const long long* row = &flat[i * n];
      for (size_t j = 0; j < n; ++j) s += row[j] * v[j];
      out[i] = s;
    }
  }

  bool commute(const std::vector<std::vector<long long>>& vecs) const {
    std::vector<long long> jv(n);
    for (size_t a = 0; a < vecs.size(); ++a)
      for (int t = 0; t < m; ++t) {
        apply(t, vecs[a], jv);
        for (size_t b = a + 1; b < vecs.size(); ++b) {
          long long s = 0;
          for (size_t i = 0; i < n; ++i) s += jv[i] * vecs[b][i];
          if (s != 0) return false;
        }
      }
    return true;
  }
};

size_t int_rank(std::vector<std::vector<long long>> rows) {
  // fraction-free elimination; entries stay small for the bounds used here
  size_t rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      long long a = rows[rank][col], b = rows[i][col];
      for (size_t j = 0; j < cols; ++j) rows[i][j] = rows[i][j] * a - rows[rank][j] * b;
      // keep magnitudes in check
      long long g = 0;
      for (size_t j = 0; j < cols; ++j) {
        long long v = rows[i][j] < 0 ? -rows[i][j] : rows[i][j];
        g = g == 0 ? v : std::gcd(g, v);
      }
      if (g > 1)
        for (size_t j = 0; j < cols; ++j) rows[i][j] /= g;
    }
    ++rank;
  }
  return rank;
}

Subspace subspace_from_int_rows(const std::vector<std::vector<long long>>& vecs, size_t ambient) {
  std::vector<Vec> rows;
  for (const auto& v : vecs) {
    Vec r(ambient);
    for (size_t i = 0; i < ambient; ++i) r[i] = Rat(v[i]);
    rows.push_back(std::move(r));
  }
  return Subspace::span_of(rows, ambient);
}

void insert_sorted(std::vector<Subspace>& found, const Subspace& s) {
  auto it = std::lower_bound(found.begin(), found.end(), s,
                             [](const Subspace& a, const Subspace& b) { return Subspace::compare(a, b) < 0; });
  if (it != found.end() && *it == s) return;
  found.insert(it, s);
}

}  // namespace

SearchReport random_horizontal(const HTypeAlgebra& alg, const SearchConfig& cfg) {
  if (cfg.target_dim > alg.n) throw std::invalid_argument("random_horizontal: target exceeds ambient dimension");
  if (cfg.trials < 1 || cfg.coordinate_bound < 1) throw std::invalid_argument("random_horizontal: bad config");

  IntModel model(alg);
  SearchReport report;
  report.seed = cfg.seed;

  for (size_t trial = 0; trial < cfg.trials; ++trial) {
    SplitMix64 gen(SplitMix64::mix(cfg.seed, trial));
    std::vector<std::vector<long long>> vecs(cfg.target_dim, std::vector<long long>(alg.n));
    for (auto& v : vecs)
      for (auto& x : v) x = gen.next_bounded(cfg.coordinate_bound);
    if (!model.commute(vecs)) continue;
    if (int_rank(vecs) != cfg.target_dim) continue;
    Subspace s = subspace_from_int_rows(vecs, alg.n);
    if (!is_horizontal(alg, s)) continue;  // re-check in exact arithmetic
    insert_sorted(report.found, s);
  }
  report.trials_run = cfg.trials;
  return report;
}

namespace {

// primitive grid directions with entries in -b..b, first nonzero positive,
// in lexicographic order
std::vector<std::vector<long long>> grid_directions(size_t n, long long b) {
  std::vector<std::vector<long long>> dirs;
  std::vector<long long> v(n, -b);
  for (;;) {
    size_t first_nonzero = n;
    for (size_t i = 0; i < n; ++i)
      if (v[i] != 0) {
        first_nonzero = i;
        break;
      }
    if (first_nonzero < n && v[first_nonzero] > 0) {
      long long g = 0;
      for (long long x : v) {
        long long a = x < 0 ? -x : x;
        g = g == 0 ? a : std::gcd(g, a);
      }
      if (g == 1) dirs.push_back(v);
    }
    size_t k = n;
    while (k > 0) {
      --k;
      if (v[k] < b) {
        ++v[k];
        for (size_t j = k + 1; j < n; ++j) v[j] = -b;
        break;
      }
      if (k == 0) return dirs;
    }
  }
}

}  // namespace

SearchReport exhaustive_tiny(const HTypeAlgebra& alg, size_t target_dim, long long coordinate_bound) {
  // bound the raw grid before enumerating anything
  double raw = 1;
  for (size_t i = 0; i < alg.n; ++i) raw *= static_cast<double>(2 * coordinate_bound + 1);
  if (raw > 4e8) throw std::invalid_argument("exhaustive_tiny: combinatorial budget exceeded");
  auto dirs = grid_directions(alg.n, coordinate_bound);
  double tuples = 1;
  for (size_t i = 0; i < target_dim; ++i) tuples *= static_cast<double>(dirs.size() - i) / static_cast<double>(i + 1);
  if (tuples > 1e7) throw std::invalid_argument("exhaustive_tiny: combinatorial budget exceeded");

  IntModel model(alg);
  SearchReport report;
  report.exhaustive = true;
  report.grid_bound = coordinate_bound;

  std::vector<size_t> idx(target_dim);
  for (size_t i = 0; i < target_dim; ++i) idx[i] = i;
  if (target_dim > dirs.size()) return report;
  for (;;) {
    ++report.trials_run;
    std::vector<std::vector<long long>> vecs;
    for (size_t i : idx) vecs.push_back(dirs[i]);
    if (model.commute(vecs) && int_rank(vecs) == target_dim) {
      Subspace s = subspace_from_int_rows(vecs, alg.n);
      if (is_horizontal(alg, s)) insert_sorted(report.found, s);
    }
    // next combination
    size_t k = target_dim;
    for (;;) {
      if (k == 0) return report;
      --k;
      if (idx[k] + (target_dim - k) < dirs.size()) {
        ++idx[k];
        for (size_t j = k + 1; j < target_dim; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
    }
  }
}

CheckReport octonion_suite(uint64_t seed) {
  CheckReport report;
  HTypeAlgebra alg = build(HTypeSpec::with_p(8, 1));
  Subspace w_plus = pm1_eigenspace(alg.rep.K, 1);

  bool centralizer_ok = true, noncommute_ok = true, extension_ok = true;
  std::string witness_c, witness_n, witness_e;

  for (int inst = 0; inst < 20; ++inst) {
    SplitMix64 gen(SplitMix64::mix(seed, 0x8000u + static_cast<uint64_t>(inst)));
    // v in the plus eigenspace, nonzero
    Vec coords = gen.next_nonzero_vec(w_plus.dim(), 2);
    Vec v(alg.n);
    for (size_t i = 0; i < w_plus.dim(); ++i) {
      if (coords[i].is_zero()) continue;
      Vec b = w_plus.basis_row(i);
      for (size_t j = 0; j < alg.n; ++j) v[j] += coords[i] * b[j];
    }
    Vec z = gen.next_nonzero_vec(8, 2);
    Rat z2 = dot(z, z);

    Vec jzv = j_action(alg, z, v);
    Vec w = v + jzv;                                    // v + J_z v
    Vec jz_inv_v = scaled(jzv, -z2.inv());              // J_z^{ -1} v = -J_z v / |z|^2
    Vec core = v + jz_inv_v;                            // v + J_z^{-1} v

    // (a) the centralizer of w equals { J_u core : u in the center }
    Subspace cent = centralizer(alg, Subspace::span_of({w}, alg.n));
    std::vector<Vec> image_rows;
    for (int t = 0; t < 8; ++t) image_rows.push_back(alg.rep.J[static_cast<size_t>(t)].apply(core));
    Subspace image = Subspace::span_of(image_rows, alg.n);
    if (cent.dim() != 8 || cent != image) {
      centralizer_ok = false;
      witness_c = "instance " + std::to_string(inst);
    }

    // (b) J_u core and J_u' core do not commute when u, u', z are independent
    Vec u = gen.next_nonzero_vec(8, 2);
    Vec uprime = gen.next_nonzero_vec(8, 2);
    Matrix tri_m(3, 8);
    for (size_t i = 0; i < 8; ++i) {
      tri_m.at(0, i) = z[i];
      tri_m.at(1, i) = u[i];
      tri_m.at(2, i) = uprime[i];
    }
    if (tri_m.rref() == 3) {
      Vec a = j_action(alg, u, core);
      Vec b = j_action(alg, uprime, core);
      if (is_zero(bracket(alg, a, b))) {
        noncommute_ok = false;
        witness_n = "instance " + std::to_string(inst);
      }
    }

    // (c) the greedy extension of span{w} stops at a certified 2-plane
    Subspace ext = extend_horizontal(alg, Subspace::span_of({w}, alg.n));
    if (ext.dim() != 2 || !is_maximal_horizontal(alg, ext)) {
      extension_ok = false;
      witness_e = "instance " + std::to_string(inst);
    }
  }
  report.add("centralizer_matches_formula", centralizer_ok, witness_c);
  report.add("independent_directions_do_not_commute", noncommute_ok, witness_n);
  report.add("extension_stops_at_two_plane", extension_ok, witness_e);

  // (d) both eigenspace halves certify as Lagrangians
  Subspace w_minus = pm1_eigenspace(alg.rep.K, -1);
  bool plus_ok = certify_lagrangian(alg, w_plus, seed).valid();
  bool minus_ok = certify_lagrangian(alg, w_minus, seed).valid();
  report.add("plus_eigenspace_certifies", plus_ok);
  report.add("minus_eigenspace_certifies", minus_ok);
  return report;
}

}  // namespace htlab
