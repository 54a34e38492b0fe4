#include "htlab/htype.hpp"

#include <stdexcept>

#include "htlab/rng.hpp"
#include "htlab/subspace.hpp"

namespace htlab {

HTypeAlgebra build(const HTypeSpec& spec) {
  HTypeAlgebra alg;
  alg.spec = spec;
  alg.rep = assemble(spec);
  alg.n = alg.rep.n;
  alg.m = spec.m;
  return alg;
}

Vec bracket(const HTypeAlgebra& alg, const Vec& u, const Vec& v) {
  if (u.size() != alg.n || v.size() != alg.n) throw std::invalid_argument("bracket: dimension mismatch");
  Vec z(static_cast<size_t>(alg.m));
  for (int t = 0; t < alg.m; ++t) z[static_cast<size_t>(t)] = dot(alg.rep.J[static_cast<size_t>(t)].apply(u), v);
  return z;
}

Vec j_action(const HTypeAlgebra& alg, const Vec& z, const Vec& u) {
  if (z.size() != static_cast<size_t>(alg.m) || u.size() != alg.n)
    throw std::invalid_argument("j_action: dimension mismatch");
  Vec r(alg.n);
  for (int t = 0; t < alg.m; ++t) {
    if (z[static_cast<size_t>(t)].is_zero()) continue;
    Vec ju = alg.rep.J[static_cast<size_t>(t)].apply(u);
    for (size_t i = 0; i < alg.n; ++i)
      if (!ju[i].is_zero()) r[i] += z[static_cast<size_t>(t)] * ju[i];
  }
  return r;
}

Matrix j_matrix(const HTypeAlgebra& alg, const Vec& z) {
  if (z.size() != static_cast<size_t>(alg.m)) throw std::invalid_argument("j_matrix: dimension mismatch");
  Matrix r(alg.n, alg.n);
  for (int t = 0; t < alg.m; ++t) {
    if (z[static_cast<size_t>(t)].is_zero()) continue;
    r = r + alg.rep.J[static_cast<size_t>(t)].scaled(z[static_cast<size_t>(t)]);
  }
  return r;
}

CheckReport verify_htype(const HTypeAlgebra& alg, uint64_t seed) {
  CheckReport report;
  const size_t n = alg.n;
  const size_t m = static_cast<size_t>(alg.m);
  Matrix id = Matrix::identity(n);

  // (a) J_z^2 = -|z|^2 Id on the center basis and 20 random rational z;
  // bilinearity plus polarization extends this to every z.
  bool jz_ok = true;
  std::string jz_witness;
  for (size_t t = 0; t < m && jz_ok; ++t) {
    if (alg.rep.J[t] * alg.rep.J[t] != id.scaled(Rat(-1))) {
      jz_ok = false;
      jz_witness = "center basis vector " + std::to_string(t + 1);
    }
  }
  SplitMix64 gen(SplitMix64::mix(seed, 0x68747970));
  for (int trial = 0; trial < 20 && jz_ok; ++trial) {
    Vec z = gen.next_vec(m, 2);
    Matrix jz = j_matrix(alg, z);
    Rat norm = dot(z, z);
    if (jz * jz != id.scaled(-norm)) {
      jz_ok = false;
      jz_witness = "random z trial " + std::to_string(trial);
    }
  }
  report.add("j_squares_to_minus_norm", jz_ok, jz_witness);

  // (b) skewness on basis pairs: component t of bracket(e_i, e_j) is the
  // (j,i) entry of J_t, so this amounts to exact skew-symmetry of each J_t.
  bool skew_ok = true;
  std::string skew_witness;
  for (size_t t = 0; t < m; ++t) {
    if (alg.rep.J[t].transpose() != -alg.rep.J[t]) {
      skew_ok = false;
      skew_witness = "J_" + std::to_string(t + 1);
      break;
    }
  }
  report.add("bracket_skew_on_basis", skew_ok, skew_witness);

  // (c) ad(u) maps onto the center for random nonzero u: the kernel has
  // dimension exactly n - m.
  bool ad_ok = true;
  std::string ad_witness;
  for (int trial = 0; trial < 20 && ad_ok; ++trial) {
    Vec u = gen.next_nonzero_vec(n, 2);
    Matrix ad(m, n);
    for (size_t t = 0; t < m; ++t) {
      Vec ju = alg.rep.J[t].apply(u);
      for (size_t j = 0; j < n; ++j) ad.at(t, j) = ju[j];
    }
    size_t rank = ad.rref();
    if (rank != m) {
      ad_ok = false;
      ad_witness = "trial " + std::to_string(trial) + " rank " + std::to_string(rank);
    }
  }
  report.add("ad_surjective_onto_center", ad_ok, ad_witness);
  return report;
}

}  // namespace htlab
