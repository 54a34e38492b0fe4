#include "htlab/algebra.hpp"

#include <array>
#include <stdexcept>

namespace htlab {

namespace {

// mul_sign[d][i*d+j], mul_index[d][i*d+j] for d in {1,2,4,8}, built once by
// Cayley-Dickson doubling: (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
struct Tables {
  std::array<std::vector<int>, 9> sign;
  std::array<std::vector<size_t>, 9> index;

  Tables() {
    sign[1] = {1};
    index[1] = {0};
    for (size_t d = 2; d <= 8; d *= 2) {
      size_t h = d / 2;
      sign[d].assign(d * d, 0);
      index[d].assign(d * d, 0);
      auto half_sign = [&](size_t i, size_t j) { return sign[h][i * h + j]; };
      auto half_index = [&](size_t i, size_t j) { return index[h][i * h + j]; };
      auto conj_sign = [&](size_t i) { return i == 0 ? 1 : -1; };
      for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < d; ++j) {
          int s;
          size_t k;
          if (i < h && j < h) {  // (e_i,0)(e_j,0) = (e_i e_j, 0)
            s = half_sign(i, j);
            k = half_index(i, j);
          } else if (i < h) {  // (e_i,0)(0,e_j') = (0, e_j' e_i)
            size_t jj = j - h;
            s = half_sign(jj, i);
            k = half_index(jj, i) + h;
          } else if (j < h) {  // (0,e_i')(e_j,0) = (0, e_i' conj(e_j))
            size_t ii = i - h;
            s = conj_sign(j) * half_sign(ii, j);
            k = half_index(ii, j) + h;
          } else {  // (0,e_i')(0,e_j') = (-conj(e_j') e_i', 0)
            size_t ii = i - h, jj = j - h;
            s = -conj_sign(jj) * half_sign(jj, ii);
            k = half_index(jj, ii);
          }
          sign[d][i * d + j] = s;
          index[d][i * d + j] = k;
        }
      }
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

size_t algebra_dim(AlgebraId a) {
  switch (a) {
    case AlgebraId::R: return 1;
    case AlgebraId::C: return 2;
    case AlgebraId::H: return 4;
    case AlgebraId::O: return 8;
  }
  throw std::logic_error("algebra_dim: bad id");
}

AlgebraId algebra_of_dim(size_t dim) {
  switch (dim) {
    case 1: return AlgebraId::R;
    case 2: return AlgebraId::C;
    case 4: return AlgebraId::H;
    case 8: return AlgebraId::O;
  }
  throw std::invalid_argument("algebra_of_dim: dimension must be 1, 2, 4 or 8");
}

std::string algebra_name(AlgebraId a) {
  switch (a) {
    case AlgebraId::R: return "R";
    case AlgebraId::C: return "C";
    case AlgebraId::H: return "H";
    case AlgebraId::O: return "O";
  }
  return "?";
}

AlgebraElement::AlgebraElement(AlgebraId a, Vec c) : alg(a), coords(std::move(c)) {
  if (coords.size() != algebra_dim(alg)) throw std::invalid_argument("AlgebraElement: wrong coordinate count");
}

AlgebraElement AlgebraElement::zero(AlgebraId a) { return AlgebraElement(a, Vec(algebra_dim(a))); }

AlgebraElement AlgebraElement::one(AlgebraId a) { return basis(a, 0); }

AlgebraElement AlgebraElement::basis(AlgebraId a, size_t i) {
  Vec c(algebra_dim(a));
  c.at(i) = Rat(1);
  return AlgebraElement(a, std::move(c));
}

void basis_product(AlgebraId a, size_t i, size_t j, int& sign_out, size_t& index_out) {
  size_t d = algebra_dim(a);
  sign_out = tables().sign[d][i * d + j];
  index_out = tables().index[d][i * d + j];
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.alg != b.alg) throw std::invalid_argument("multiply: algebra mismatch");
  size_t d = algebra_dim(a.alg);
  AlgebraElement r = AlgebraElement::zero(a.alg);
  for (size_t i = 0; i < d; ++i) {
    if (a.coords[i].is_zero()) continue;
    for (size_t j = 0; j < d; ++j) {
      if (b.coords[j].is_zero()) continue;
      int s;
      size_t k;
      basis_product(a.alg, i, j, s, k);
      Rat term = a.coords[i] * b.coords[j];
      r.coords[k] += s > 0 ? term : -term;
    }
  }
  return r;
}

AlgebraElement conjugate(const AlgebraElement& a) {
  AlgebraElement r = a;
  for (size_t i = 1; i < r.coords.size(); ++i) r.coords[i] = -r.coords[i];
  return r;
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.alg != b.alg) throw std::invalid_argument("add: algebra mismatch");
  AlgebraElement r = a;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.alg != b.alg) throw std::invalid_argument("sub: algebra mismatch");
  AlgebraElement r = a;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

AlgebraElement scale(const AlgebraElement& a, const Rat& c) {
  AlgebraElement r = a;
  for (auto& x : r.coords) x *= c;
  return r;
}

Rat norm2(const AlgebraElement& a) { return dot(a.coords, a.coords); }

Matrix left_mult_matrix(const AlgebraElement& a) {
  size_t d = algebra_dim(a.alg);
  Matrix m(d, d);
  for (size_t j = 0; j < d; ++j) {
    AlgebraElement col = multiply(a, AlgebraElement::basis(a.alg, j));
    for (size_t i = 0; i < d; ++i) m.at(i, j) = col.coords[i];
  }
  return m;
}

Matrix right_mult_matrix(const AlgebraElement& a) {
  size_t d = algebra_dim(a.alg);
  Matrix m(d, d);
  for (size_t j = 0; j < d; ++j) {
    AlgebraElement col = multiply(AlgebraElement::basis(a.alg, j), a);
    for (size_t i = 0; i < d; ++i) m.at(i, j) = col.coords[i];
  }
  return m;
}

Matrix conjugation_matrix(AlgebraId a) {
  size_t d = algebra_dim(a);
  Matrix m(d, d);
  m.at(0, 0) = Rat(1);
  for (size_t i = 1; i < d; ++i) m.at(i, i) = Rat(-1);
  return m;
}

}  // namespace htlab
