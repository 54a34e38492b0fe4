#include <doctest.h>

#include "htlab/clifford.hpp"

using namespace htlab;

TEST_CASE("irreducible dimensions follow the mod 8 pattern") {
  CHECK(expected_dim(1) == 2);
  CHECK(expected_dim(2) == 4);
  CHECK(expected_dim(3) == 4);
  CHECK(expected_dim(4) == 8);
  CHECK(expected_dim(5) == 8);
  CHECK(expected_dim(6) == 8);
  CHECK(expected_dim(7) == 8);
  CHECK(expected_dim(8) == 16);
  CHECK(expected_dim(9) == 32);
  CHECK(expected_dim(10) == 64);
  CHECK(expected_dim(11) == 64);
  CHECK(expected_dim(12) == 128);
  CHECK(expected_dim(16) == 256);
}

TEST_CASE("base generator models satisfy every identity") {
  for (int m = 1; m <= 8; ++m) {
    if (m == 3 || m == 7) {
      for (int s : {1, -1}) {
        CliffordRep rep = base_generators(m, s);
        CHECK(rep.n == expected_dim(m));
        CHECK(verify_clifford(rep).all_passed());
        CHECK(rep.K == Matrix::identity(rep.n).scaled(Rat(s)));
      }
    } else {
      CliffordRep rep = base_generators(m);
      CHECK(rep.n == expected_dim(m));
      CHECK(verify_clifford(rep).all_passed());
    }
  }
}

TEST_CASE("the m=1 generator is the quarter turn") {
  CliffordRep rep = base_generators(1);
  CHECK(rep.J[0] == Matrix::from_rows({{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}}));
}

TEST_CASE("periodic models satisfy every identity") {
  for (int m = 9; m <= 12; ++m) {
    if (m % 4 == 3) {
      for (int s : {1, -1}) {
        CliffordRep rep = periodic_generators(m, s);
        CHECK(rep.n == expected_dim(m));
        CHECK(verify_clifford(rep).all_passed());
        CHECK(rep.K == Matrix::identity(rep.n).scaled(Rat(s)));
      }
    } else {
      CliffordRep rep = periodic_generators(m);
      CHECK(rep.n == expected_dim(m));
      CHECK(verify_clifford(rep).all_passed());
    }
  }
}

TEST_CASE("periodic first eight generators act as the octave tensored with identity") {
  CliffordRep v8 = base_generators(8);
  for (int m : {9, 10}) {
    CliffordRep rep = periodic_generators(m);
    Matrix id_rest = Matrix::identity(rep.n / v8.n);
    for (int t = 0; t < 8; ++t)
      CHECK(rep.J[static_cast<size_t>(t)] == Matrix::kronecker(v8.J[static_cast<size_t>(t)], id_rest));
  }
}

TEST_CASE("volume element profile by residue") {
  for (int m = 1; m <= 12; ++m) {
    CliffordRep rep = (m % 4 == 3) ? irreducible_rep(m, 1) : irreducible_rep(m);
    Matrix id = Matrix::identity(rep.n);
    if (m % 4 == 1 || m % 4 == 2) {
      CHECK(rep.K * rep.K == id.scaled(Rat(-1)));
      CHECK(rep.K.transpose() == -rep.K);
    } else {
      CHECK(rep.K * rep.K == id);
      CHECK(rep.K.transpose() == rep.K);
    }
  }
}

TEST_CASE("assembled multiplicities") {
  CHECK(assemble(HTypeSpec::with_p(1, 3)).n == 6);
  CHECK(assemble(HTypeSpec::with_pair(3, 1, 1)).n == 8);
  CHECK(assemble(HTypeSpec::with_p(4, 2)).n == 16);

  // plus copies precede minus copies: K is +1 on the first block
  CliffordRep rep = assemble(HTypeSpec::with_pair(3, 1, 1));
  CHECK(rep.K.at(0, 0) == Rat(1));
  CHECK(rep.K.at(4, 4) == Rat(-1));
  CHECK(verify_clifford(rep).all_passed());
}

TEST_CASE("spec validation") {
  CHECK_THROWS(HTypeSpec::with_p(3, 1));        // m = 3 mod 4 needs the pair form
  CHECK_THROWS(HTypeSpec::with_pair(4, 1, 1));  // and only then
  CHECK_THROWS(HTypeSpec::with_pair(3, 0, 0));
  CHECK_THROWS(HTypeSpec::with_p(4, 0));
  CHECK_THROWS(base_generators(3));             // sign required
  CHECK_THROWS(base_generators(4, 1));          // sign forbidden
  CHECK_THROWS(base_generators(9));
  CHECK_THROWS(periodic_generators(8));
}

TEST_CASE("a perturbed generator fails verification") {
  CliffordRep rep = base_generators(4);
  rep.J[2].at(0, 0) += Rat(1);
  CHECK_FALSE(verify_clifford(rep).all_passed());
}
