#include <doctest.h>

#include "htlab/algebra.hpp"
#include "htlab/rng.hpp"

using namespace htlab;

namespace {

AlgebraElement rand_elem(AlgebraId a, SplitMix64& gen) {
  return AlgebraElement(a, gen.next_vec(algebra_dim(a), 3));
}

}  // namespace

TEST_CASE("quaternion and complex unit tables") {
  auto i = AlgebraElement::basis(AlgebraId::H, 1);
  auto j = AlgebraElement::basis(AlgebraId::H, 2);
  auto k = AlgebraElement::basis(AlgebraId::H, 3);
  CHECK(multiply(i, j) == k);
  CHECK(multiply(j, k) == i);
  CHECK(multiply(k, i) == j);
  CHECK(multiply(i, i) == scale(AlgebraElement::one(AlgebraId::H), Rat(-1)));

  auto ic = AlgebraElement::basis(AlgebraId::C, 1);
  CHECK(multiply(ic, ic) == scale(AlgebraElement::one(AlgebraId::C), Rat(-1)));
}

TEST_CASE("identity element and bilinearity") {
  SplitMix64 gen(5);
  for (AlgebraId a : {AlgebraId::R, AlgebraId::C, AlgebraId::H, AlgebraId::O}) {
    AlgebraElement one = AlgebraElement::one(a);
    AlgebraElement x = rand_elem(a, gen);
    CHECK(multiply(one, x) == x);
    CHECK(multiply(x, one) == x);
    AlgebraElement y = rand_elem(a, gen);
    AlgebraElement z = rand_elem(a, gen);
    CHECK(multiply(add(x, y), z) == add(multiply(x, z), multiply(y, z)));
    CHECK(multiply(x, add(y, z)) == add(multiply(x, y), multiply(x, z)));
  }
}

TEST_CASE("composition law over all octonion basis pairs") {
  for (size_t i = 0; i < 8; ++i)
    for (size_t j = 0; j < 8; ++j) {
      auto a = AlgebraElement::basis(AlgebraId::O, i);
      auto b = AlgebraElement::basis(AlgebraId::O, j);
      CHECK(norm2(multiply(a, b)) == norm2(a) * norm2(b));
    }
}

TEST_CASE("composition law on random samples, all four algebras") {
  SplitMix64 gen(99);
  for (AlgebraId a : {AlgebraId::R, AlgebraId::C, AlgebraId::H, AlgebraId::O}) {
    for (int trial = 0; trial < 100; ++trial) {
      AlgebraElement x = rand_elem(a, gen);
      AlgebraElement y = rand_elem(a, gen);
      CHECK(norm2(multiply(x, y)) == norm2(x) * norm2(y));
    }
  }
}

TEST_CASE("conjugation is an involutive anti-homomorphism") {
  SplitMix64 gen(123);
  auto one_real = AlgebraElement(AlgebraId::R, {Rat(7)});
  CHECK(conjugate(one_real) == one_real);
  auto c = AlgebraElement(AlgebraId::C, {Rat(1), Rat(1)});
  CHECK(conjugate(c) == AlgebraElement(AlgebraId::C, {Rat(1), Rat(-1)}));

  for (AlgebraId a : {AlgebraId::C, AlgebraId::H, AlgebraId::O}) {
    for (int trial = 0; trial < 30; ++trial) {
      AlgebraElement x = rand_elem(a, gen);
      AlgebraElement y = rand_elem(a, gen);
      CHECK(conjugate(conjugate(x)) == x);
      CHECK(conjugate(multiply(x, y)) == multiply(conjugate(y), conjugate(x)));
    }
  }
}

TEST_CASE("imaginary multiplications are skew with square minus norm") {
  CHECK(left_mult_matrix(AlgebraElement::one(AlgebraId::O)).is_identity());
  for (AlgebraId a : {AlgebraId::C, AlgebraId::H, AlgebraId::O}) {
    size_t d = algebra_dim(a);
    SplitMix64 gen(31 + d);
    for (int trial = 0; trial < 20; ++trial) {
      AlgebraElement z = rand_elem(a, gen);
      z.coords[0] = Rat(0);  // purely imaginary
      for (Matrix side : {left_mult_matrix(z), right_mult_matrix(z)}) {
        CHECK(side.transpose() == -side);
        CHECK(side * side == Matrix::identity(d).scaled(-norm2(z)));
      }
    }
  }
}

TEST_CASE("left cancellation through the conjugate") {
  // z (conj(z) x) = |z|^2 x for all basis pairs in the octonions
  for (size_t zi = 0; zi < 8; ++zi)
    for (size_t xi = 0; xi < 8; ++xi) {
      auto z = AlgebraElement::basis(AlgebraId::O, zi);
      auto x = AlgebraElement::basis(AlgebraId::O, xi);
      CHECK(multiply(z, multiply(conjugate(z), x)) == scale(x, norm2(z)));
    }
}

TEST_CASE("multiplication matrices agree with direct products") {
  SplitMix64 gen(777);
  for (int trial = 0; trial < 10; ++trial) {
    AlgebraElement a = rand_elem(AlgebraId::O, gen);
    AlgebraElement x = rand_elem(AlgebraId::O, gen);
    CHECK(left_mult_matrix(a).apply(x.coords) == multiply(a, x).coords);
    CHECK(right_mult_matrix(a).apply(x.coords) == multiply(x, a).coords);
  }
  CHECK_THROWS(multiply(AlgebraElement::one(AlgebraId::H), AlgebraElement::one(AlgebraId::O)));
}
