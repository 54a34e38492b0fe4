#include "htlab/horizontal.hpp"

#include <stdexcept>

namespace htlab {

bool is_horizontal(const HTypeAlgebra& alg, const Subspace& s) {
  if (s.ambient_dim() != alg.n) throw std::invalid_argument("is_horizontal: ambient mismatch");
  const size_t d = s.dim();
  // rows of J_t applied to the basis, one generator at a time
  for (int t = 0; t < alg.m; ++t) {
    Matrix jb = alg.rep.J[static_cast<size_t>(t)].apply_rows(s.basis());
    for (size_t i = 0; i < d; ++i) {
      Vec ji = jb.row(i);
      for (size_t j = i + 1; j < d; ++j) {
        if (!dot(ji, s.basis_row(j)).is_zero()) return false;
      }
    }
  }
  return true;
}

Subspace centralizer(const HTypeAlgebra& alg, const Subspace& s) {
  if (s.ambient_dim() != alg.n) throw std::invalid_argument("centralizer: ambient mismatch");
  if (s.is_zero()) return Subspace::full(alg.n);
  Matrix stacked(0, alg.n);
  for (int t = 0; t < alg.m; ++t)
    stacked = Matrix::vstack(stacked, alg.rep.J[static_cast<size_t>(t)].apply_rows(s.basis()));
  return Subspace::row_space(stacked).orth_complement();
}

bool is_maximal_horizontal(const HTypeAlgebra& alg, const Subspace& s) {
  return is_horizontal(alg, s) && centralizer(alg, s) == s;
}

std::set<size_t> allowed_dims(size_t n, size_t m) {
  if (n < 1 || m < 1) throw std::invalid_argument("allowed_dims: n, m must be >= 1");
  std::set<size_t> dims;
  for (size_t k = 2; k <= m + 1; ++k)
    if (n % k == 0) dims.insert(n / k);
  return dims;
}

namespace {

// span of v together with its images under repeated application of the
// operators, saturated
Subspace operator_orbit_span(const Vec& v, const std::vector<Matrix>& ops, size_t ambient) {
  Subspace span = Subspace::span_of({v}, ambient);
  for (;;) {
    Matrix extra = span.basis();
    Subspace grown = span;
    for (const auto& op : ops) grown = Subspace::sum(grown, Subspace::row_space(op.apply_rows(extra)));
    if (grown == span) return span;
    span = grown;
  }
}

}  // namespace

Subspace extend_horizontal(const HTypeAlgebra& alg, const Subspace& seed,
                           const std::vector<Matrix>& invariance) {
  if (!is_horizontal(alg, seed)) throw std::invalid_argument("extend_horizontal: seed is not horizontal");
  Subspace current = Subspace::row_space(seed.basis());

  bool grew = true;
  while (grew) {
    grew = false;
    Subspace cent = centralizer(alg, current);
    if (cent == current) break;
    for (size_t i = 0; i < cent.dim(); ++i) {
      Vec candidate = cent.basis_row(i);
      if (current.contains(candidate)) continue;
      Subspace trial;
      if (invariance.empty()) {
        // any centralizer vector keeps the span horizontal: new pairs bracket
        // to zero by the centralizer property and skewness
        trial = Subspace::sum(current, Subspace::span_of({candidate}, alg.n));
      } else {
        trial = Subspace::sum(current, operator_orbit_span(candidate, invariance, alg.n));
        if (!is_horizontal(alg, trial)) continue;
      }
      current = trial;
      grew = true;
      break;
    }
  }
  return current;
}

}  // namespace htlab
