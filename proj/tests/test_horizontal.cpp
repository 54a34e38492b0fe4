#include <doctest.h>

#include "htlab/horizontal.hpp"
#include "htlab/rng.hpp"

using namespace htlab;

namespace {

Vec from_plus_eigenspace(const HTypeAlgebra& alg, const Subspace& w_plus, SplitMix64& gen) {
  Vec coords = gen.next_nonzero_vec(w_plus.dim(), 2);
  Vec v(alg.n);
  for (size_t i = 0; i < w_plus.dim(); ++i) {
    if (coords[i].is_zero()) continue;
    Vec b = w_plus.basis_row(i);
    for (size_t j = 0; j < alg.n; ++j) v[j] += coords[i] * b[j];
  }
  return v;
}

}  // namespace

TEST_CASE("lines are horizontal, planes need not be") {
  HTypeAlgebra heis = build(HTypeSpec::with_p(1, 1));
  SplitMix64 gen(1);
  for (int trial = 0; trial < 10; ++trial)
    CHECK(is_horizontal(heis, Subspace::span_of({gen.next_nonzero_vec(2, 2)}, 2)));
  CHECK_FALSE(is_horizontal(heis, Subspace::full(2)));

  // the plane spanned by i, j inside the quaternion model
  HTypeAlgebra quat = build(HTypeSpec::with_p(2, 1));
  Vec i4(4), j4(4);
  i4[1] = Rat(1);
  j4[2] = Rat(1);
  CHECK(is_horizontal(quat, Subspace::span_of({i4, j4}, 4)));
}

TEST_CASE("centralizer extremes") {
  HTypeAlgebra alg = build(HTypeSpec::with_p(4, 1));
  CHECK(centralizer(alg, Subspace::zero(alg.n)) == Subspace::full(alg.n));
  SplitMix64 gen(2);
  for (int trial = 0; trial < 10; ++trial) {
    Vec u = gen.next_nonzero_vec(alg.n, 2);
    CHECK(centralizer(alg, Subspace::span_of({u}, alg.n)).dim() == alg.n - 4);
  }
}

TEST_CASE("centralizer is antitone") {
  HTypeAlgebra alg = build(HTypeSpec::with_p(2, 2));
  SplitMix64 gen(3);
  for (int trial = 0; trial < 10; ++trial) {
    Subspace small = Subspace::span_of({gen.next_nonzero_vec(alg.n, 2)}, alg.n);
    Subspace large = Subspace::sum(small, Subspace::span_of({gen.next_nonzero_vec(alg.n, 2)}, alg.n));
    CHECK(centralizer(alg, small).contains(centralizer(alg, large)));
  }
}

TEST_CASE("horizontality is equivalent to sitting inside the centralizer") {
  HTypeAlgebra alg = build(HTypeSpec::with_p(4, 1));
  SplitMix64 gen(4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec> rows = {gen.next_nonzero_vec(alg.n, 1), gen.next_nonzero_vec(alg.n, 1)};
    Subspace s = Subspace::span_of(rows, alg.n);
    CHECK(is_horizontal(alg, s) == centralizer(alg, s).contains(s));
  }
}

TEST_CASE("octonionic centralizer formula on exact instances") {
  HTypeAlgebra alg = build(HTypeSpec::with_p(8, 1));
  Subspace w_plus = pm1_eigenspace(alg.rep.K, 1);
  SplitMix64 gen(5);
  for (int trial = 0; trial < 5; ++trial) {
    Vec v = from_plus_eigenspace(alg, w_plus, gen);
    Vec z = gen.next_nonzero_vec(8, 2);
    Vec jzv = j_action(alg, z, v);
    Vec w = v + jzv;
    Vec core = v + scaled(jzv, -dot(z, z).inv());  // v + J_z^{-1} v
    Subspace cent = centralizer(alg, Subspace::span_of({w}, alg.n));
    std::vector<Vec> rows;
    for (int t = 0; t < 8; ++t) rows.push_back(alg.rep.J[static_cast<size_t>(t)].apply(core));
    CHECK(cent == Subspace::span_of(rows, alg.n));
    CHECK(cent.dim() == 8);
  }
}

TEST_CASE("maximality of lines, eigenspaces and two-planes") {
  HTypeAlgebra heis = build(HTypeSpec::with_p(1, 1));
  CHECK(is_maximal_horizontal(heis, Subspace::span_of({{Rat(1), Rat(0)}}, 2)));

  HTypeAlgebra oct = build(HTypeSpec::with_p(8, 1));
  Subspace w_plus = pm1_eigenspace(oct.rep.K, 1);
  CHECK(is_maximal_horizontal(oct, w_plus));

  // two-plane span{v + J_z v, J_u(v + J_z^{-1} v)} with u orthogonal to z
  SplitMix64 gen(6);
  Vec v = from_plus_eigenspace(oct, w_plus, gen);
  Vec z(8), u(8);
  z[0] = Rat(1);
  u[1] = Rat(1);
  Vec jzv = j_action(oct, z, v);
  Vec w = v + jzv;
  Vec core = v + scaled(jzv, -dot(z, z).inv());
  Subspace plane = Subspace::span_of({w, j_action(oct, u, core)}, oct.n);
  CHECK(plane.dim() == 2);
  CHECK(is_maximal_horizontal(oct, plane));
}

TEST_CASE("allowed dimension strata") {
  CHECK(allowed_dims(16, 8) == std::set<size_t>{2, 4, 8});
  CHECK(allowed_dims(2, 1) == std::set<size_t>{1});
  CHECK(allowed_dims(4, 3) == std::set<size_t>{1, 2});
}

TEST_CASE("every line is maximal when the distribution has corank one less") {
  for (auto spec : {HTypeSpec::with_p(1, 1), HTypeSpec::with_pair(3, 1, 0), HTypeSpec::with_pair(7, 0, 1)}) {
    HTypeAlgebra alg = build(spec);
    REQUIRE(alg.n == static_cast<size_t>(alg.m) + 1);
    SplitMix64 gen(7);
    for (int trial = 0; trial < 20; ++trial) {
      Vec u = gen.next_nonzero_vec(alg.n, 2);
      CHECK(is_maximal_horizontal(alg, Subspace::span_of({u}, alg.n)));
    }
  }
}

TEST_CASE("greedy extension reaches certified maximal subspaces") {
  HTypeAlgebra oct = build(HTypeSpec::with_p(8, 1));
  Subspace w_plus = pm1_eigenspace(oct.rep.K, 1);
  SplitMix64 gen(8);
  Vec v = from_plus_eigenspace(oct, w_plus, gen);
  Vec z = gen.next_nonzero_vec(8, 2);
  Vec w = v + j_action(oct, z, v);
  Subspace ext = extend_horizontal(oct, Subspace::span_of({w}, oct.n));
  CHECK(ext.dim() == 2);
  CHECK(is_maximal_horizontal(oct, ext));

  HTypeAlgebra heis = build(HTypeSpec::with_p(1, 1));
  CHECK(extend_horizontal(heis, Subspace::zero(2)).dim() == 1);

  HTypeAlgebra quat = build(HTypeSpec::with_p(4, 1));
  Subspace full = extend_horizontal(quat, Subspace::zero(quat.n));
  CHECK(is_maximal_horizontal(quat, full));
  auto dims = allowed_dims(quat.n, 4);
  CHECK(dims.count(full.dim()) == 1);

  CHECK_THROWS(extend_horizontal(heis, Subspace::full(2)));
}

TEST_CASE("strata can mix across bracket-orthogonal copies") {
  // Distinct copies of the module never bracket, so a maximal horizontal
  // subspace of a two-copy algebra can combine per-copy strata of different
  // sizes. In the two-copy m=4 algebra this realizes dimension 6, strictly
  // between the divisors n/2 = 8 and n/4 = 4, while the interval bound
  // n/(m+1) <= dim <= n/2 still holds.
  HTypeAlgebra one = build(HTypeSpec::with_p(4, 1));
  HTypeAlgebra two = build(HTypeSpec::with_p(4, 2));
  Subspace w_plus = pm1_eigenspace(one.rep.K, 1);
  REQUIRE(is_maximal_horizontal(one, w_plus));

  SplitMix64 gen(99);
  Subspace plane;
  for (;;) {
    Vec v = gen.next_nonzero_vec(8, 2);
    Subspace grown = extend_horizontal(one, Subspace::span_of({v}, 8));
    if (grown.dim() == 2) {
      plane = grown;
      break;
    }
  }
  REQUIRE(is_maximal_horizontal(one, plane));

  std::vector<Vec> rows;
  for (size_t i = 0; i < w_plus.dim(); ++i) {
    Vec r(16);
    for (size_t j = 0; j < 8; ++j) r[j] = w_plus.basis_row(i)[j];
    rows.push_back(r);
  }
  for (size_t i = 0; i < plane.dim(); ++i) {
    Vec r(16);
    for (size_t j = 0; j < 8; ++j) r[8 + j] = plane.basis_row(i)[j];
    rows.push_back(r);
  }
  Subspace mixed = Subspace::span_of(rows, 16);
  CHECK(mixed.dim() == 6);
  CHECK(is_maximal_horizontal(two, mixed));
  CHECK(allowed_dims(two.n, 4).count(6) == 0);
  CHECK(6 * (4 + 1) >= two.n);  // interval bounds hold
  CHECK(2 * 6 <= two.n);
}

TEST_CASE("seeded extensions land in the allowed strata") {
  SplitMix64 seeds(9);
  for (auto spec : {HTypeSpec::with_p(2, 2), HTypeSpec::with_p(4, 1), HTypeSpec::with_pair(3, 1, 1)}) {
    HTypeAlgebra alg = build(spec);
    auto dims = allowed_dims(alg.n, static_cast<size_t>(alg.m));
    for (int trial = 0; trial < 15; ++trial) {
      Vec seed_vec = SplitMix64(seeds.next()).next_nonzero_vec(alg.n, 2);
      Subspace result = extend_horizontal(alg, Subspace::span_of({seed_vec}, alg.n));
      CHECK(is_maximal_horizontal(alg, result));
      CHECK(dims.count(result.dim()) == 1);
    }
  }
}

TEST_CASE("maximal subspaces split the space against their twisted images") {
  // dim(S) + dim(sum_t J_t S) = n exactly when S is maximal horizontal
  for (auto spec : {HTypeSpec::with_p(2, 1), HTypeSpec::with_p(4, 1), HTypeSpec::with_p(8, 1)}) {
    HTypeAlgebra alg = build(spec);
    SplitMix64 gen(10);
    for (int trial = 0; trial < 5; ++trial) {
      Vec v = gen.next_nonzero_vec(alg.n, 2);
      Subspace s = extend_horizontal(alg, Subspace::span_of({v}, alg.n));
      REQUIRE(is_maximal_horizontal(alg, s));
      Matrix stacked(0, alg.n);
      for (int t = 0; t < alg.m; ++t)
        stacked = Matrix::vstack(stacked, alg.rep.J[static_cast<size_t>(t)].apply_rows(s.basis()));
      CHECK(s.dim() + Subspace::row_space(stacked).dim() == alg.n);
    }
  }
}

TEST_CASE("operator-closed extension reaches even-part-invariant maxima") {
  // accepted vectors are added together with their even-part orbit, so the
  // result is closed under every J_i J_j; for these algebras that lands on a
  // certified half-dimensional subspace
  for (auto spec : {HTypeSpec::with_p(2, 1), HTypeSpec::with_p(4, 1)}) {
    HTypeAlgebra alg = build(spec);
    std::vector<Matrix> even;
    for (int i = 0; i < alg.m; ++i)
      for (int j = i + 1; j < alg.m; ++j)
        even.push_back(alg.rep.J[static_cast<size_t>(i)] * alg.rep.J[static_cast<size_t>(j)]);
    Subspace l = extend_horizontal(alg, Subspace::zero(alg.n), even);
    CHECK(2 * l.dim() == alg.n);
    for (const auto& op : even) CHECK(l.map_by(op) == l);
    CHECK(is_maximal_horizontal(alg, l));
  }
}
