#include "htlab/clifford.hpp"

#include <stdexcept>

#include "htlab/algebra.hpp"

namespace htlab {

HTypeSpec HTypeSpec::with_p(int m, int p) {
  HTypeSpec s;
  s.m = m;
  s.p = p;
  s.validate();
  return s;
}

HTypeSpec HTypeSpec::with_pair(int m, int p_plus, int p_minus) {
  HTypeSpec s;
  s.m = m;
  s.p = 0;
  s.p_plus = p_plus;
  s.p_minus = p_minus;
  s.validate();
  return s;
}

void HTypeSpec::validate() const {
  if (m < 1) throw std::invalid_argument("HTypeSpec: m must be >= 1");
  if (uses_signed_pair()) {
    if (p_plus < 0 || p_minus < 0 || (p_plus == 0 && p_minus == 0))
      throw std::invalid_argument("HTypeSpec: need p+ >= 0, p- >= 0, not both zero");
  } else {
    if (p < 1) throw std::invalid_argument("HTypeSpec: need p >= 1");
  }
}

std::string HTypeSpec::str() const {
  if (uses_signed_pair())
    return "(m=" + std::to_string(m) + ", p+=" + std::to_string(p_plus) + ", p-=" + std::to_string(p_minus) + ")";
  return "(m=" + std::to_string(m) + ", p=" + std::to_string(p) + ")";
}

bool CheckReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

void CheckReport::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

size_t expected_dim(int m) {
  if (m < 1) throw std::invalid_argument("expected_dim: m must be >= 1");
  int k = (m % 2 == 0) ? m / 2 : (m - 1) / 2;
  int r = m % 8;
  bool low = (r == 0 || r == 6 || r == 7);
  return size_t{1} << (low ? k : k + 1);
}

namespace {

Matrix product_of(const std::vector<Matrix>& ms) {
  Matrix acc = ms.at(0);
  for (size_t i = 1; i < ms.size(); ++i) acc = acc * ms[i];
  return acc;
}

// J_z(x, y) = (-z * conj(y), conj(x) * z) on F x F, as a matrix in the
// coordinates (x-coords, y-coords).
Matrix pair_model_generator(const AlgebraElement& z) {
  size_t d = algebra_dim(z.alg);
  Matrix c = conjugation_matrix(z.alg);
  Matrix upper = (left_mult_matrix(z) * c).scaled(Rat(-1));
  Matrix lower = right_mult_matrix(z) * c;
  Matrix j(2 * d, 2 * d);
  for (size_t i = 0; i < d; ++i)
    for (size_t k = 0; k < d; ++k) {
      j.at(i, d + k) = upper.at(i, k);
      j.at(d + i, k) = lower.at(i, k);
    }
  return j;
}

CliffordRep make_rep(int m, std::vector<Matrix> gens, std::string construction) {
  CliffordRep rep;
  rep.m = m;
  rep.n = gens.at(0).rows();
  rep.K = product_of(gens);
  rep.J = std::move(gens);
  rep.construction = std::move(construction);
  return rep;
}

bool is_scalar(const Matrix& k, int sign) {
  return k == Matrix::identity(k.rows()).scaled(Rat(sign));
}

// Left- and right-multiplication models by the imaginary units of F; returns
// the one on which the volume element acts as sign * Id.
CliffordRep imaginary_unit_model(int m, AlgebraId alg, int sign) {
  std::vector<Matrix> left, right;
  for (int t = 1; t <= m; ++t) {
    AlgebraElement u = AlgebraElement::basis(alg, static_cast<size_t>(t));
    left.push_back(left_mult_matrix(u));
    right.push_back(right_mult_matrix(u));
  }
  Matrix k_left = product_of(left);
  if (is_scalar(k_left, sign))
    return make_rep(m, std::move(left), "base-left-mult(" + algebra_name(alg) + ")");
  Matrix k_right = product_of(right);
  if (is_scalar(k_right, sign))
    return make_rep(m, std::move(right), "base-right-mult(" + algebra_name(alg) + ")");
  throw std::logic_error("imaginary_unit_model: neither multiplication model has the requested volume sign");
}

}  // namespace

CliffordRep base_generators(int m, std::optional<int> sign) {
  if (m < 1 || m > 8) throw std::invalid_argument("base_generators: m must be in 1..8");
  bool needs_sign = (m == 3 || m == 7);
  if (needs_sign && !sign) throw std::invalid_argument("base_generators: sign required for m = 3, 7");
  if (!needs_sign && sign) throw std::invalid_argument("base_generators: sign only valid for m = 3, 7");
  if (sign && *sign != 1 && *sign != -1) throw std::invalid_argument("base_generators: sign must be +1 or -1");

  switch (m) {
    case 1:
    case 4:
    case 8: {
      AlgebraId alg = algebra_of_dim(static_cast<size_t>(m));
      std::vector<Matrix> gens;
      for (int t = 0; t < m; ++t)
        gens.push_back(pair_model_generator(AlgebraElement::basis(alg, static_cast<size_t>(t))));
      return make_rep(m, std::move(gens), "base-pair(" + algebra_name(alg) + "x" + algebra_name(alg) + ")");
    }
    case 2: {
      // quaternions acted on by left multiplication by i and j; this makes
      // span{i, j} a concrete half-dimensional test subspace
      std::vector<Matrix> gens = {left_mult_matrix(AlgebraElement::basis(AlgebraId::H, 1)),
                                  left_mult_matrix(AlgebraElement::basis(AlgebraId::H, 2))};
      return make_rep(2, std::move(gens), "base-left-mult(H:i,j)");
    }
    case 3:
      return imaginary_unit_model(3, AlgebraId::H, *sign);
    case 7:
      return imaginary_unit_model(7, AlgebraId::O, *sign);
    case 5:
    case 6: {
      CliffordRep seven = base_generators(7, 1);
      std::vector<Matrix> gens(seven.J.begin(), seven.J.begin() + m);
      return make_rep(m, std::move(gens), "base-restrict(m=7,+1 to " + std::to_string(m) + ")");
    }
  }
  throw std::logic_error("base_generators: unreachable");
}

CliffordRep periodic_generators(int m, std::optional<int> sign) {
  if (m <= 8) throw std::invalid_argument("periodic_generators: m must be > 8");
  bool needs_sign = (m % 4 == 3);
  if (needs_sign && !sign) throw std::invalid_argument("periodic_generators: sign required for m = 3 mod 4");
  if (!needs_sign && sign) throw std::invalid_argument("periodic_generators: sign only valid for m = 3 mod 4");

  int s = (m - 1) / 8;
  int r = m - 8 * s;  // 1..8

  CliffordRep v8 = base_generators(8);
  CliffordRep vr = irreducible_rep(r, (r == 3 || r == 7) ? sign : std::nullopt);

  size_t dim8 = v8.n;
  Matrix id8 = Matrix::identity(dim8);
  Matrix idr = Matrix::identity(vr.n);

  auto build = [&](const std::vector<const Matrix*>& factors) {
    Matrix acc = *factors[0];
    for (size_t i = 1; i < factors.size(); ++i) acc = Matrix::kronecker(acc, *factors[i]);
    return acc;
  };

  std::vector<Matrix> gens;
  for (int k = 0; k < s; ++k) {
    for (int t = 0; t < 8; ++t) {
      std::vector<const Matrix*> factors;
      for (int a = 0; a < k; ++a) factors.push_back(&v8.K);
      factors.push_back(&v8.J[static_cast<size_t>(t)]);
      for (int a = k + 1; a < s; ++a) factors.push_back(&id8);
      factors.push_back(&idr);
      gens.push_back(build(factors));
    }
  }
  for (int t = 0; t < r; ++t) {
    std::vector<const Matrix*> factors;
    for (int a = 0; a < s; ++a) factors.push_back(&v8.K);
    factors.push_back(&vr.J[static_cast<size_t>(t)]);
    gens.push_back(build(factors));
  }

  std::string tag = "tensor(v8^" + std::to_string(s) + " (x) " + vr.construction + ")";
  return make_rep(m, std::move(gens), std::move(tag));
}

CliffordRep irreducible_rep(int m, std::optional<int> sign) {
  return m <= 8 ? base_generators(m, sign) : periodic_generators(m, sign);
}

CliffordRep assemble(const HTypeSpec& spec) {
  spec.validate();
  std::vector<CliffordRep> copies;
  if (spec.uses_signed_pair()) {
    CliffordRep plus = spec.p_plus > 0 ? irreducible_rep(spec.m, 1) : CliffordRep{};
    CliffordRep minus = spec.p_minus > 0 ? irreducible_rep(spec.m, -1) : CliffordRep{};
    for (int i = 0; i < spec.p_plus; ++i) copies.push_back(plus);
    for (int i = 0; i < spec.p_minus; ++i) copies.push_back(minus);
  } else {
    CliffordRep one = irreducible_rep(spec.m);
    for (int i = 0; i < spec.p; ++i) copies.push_back(one);
  }

  if (copies.size() == 1) {
    CliffordRep rep = copies[0];
    rep.construction = "assemble[" + spec.str() + "; " + rep.construction + "]";
    return rep;
  }

  CliffordRep rep;
  rep.m = spec.m;
  for (int t = 0; t < spec.m; ++t) {
    std::vector<Matrix> blocks;
    for (const auto& c : copies) blocks.push_back(c.J[static_cast<size_t>(t)]);
    rep.J.push_back(Matrix::block_diag(blocks));
  }
  rep.n = rep.J[0].rows();
  std::vector<Matrix> kblocks;
  for (const auto& c : copies) kblocks.push_back(c.K);
  rep.K = Matrix::block_diag(kblocks);
  rep.construction = "assemble[" + spec.str() + "; " + copies[0].construction + "]";
  return rep;
}

CheckReport verify_clifford(const CliffordRep& rep) {
  CheckReport report;
  size_t n = rep.n;
  Matrix id = Matrix::identity(n);
  Matrix neg_id = id.scaled(Rat(-1));

  bool sq_ok = true;
  std::string sq_witness;
  for (size_t i = 0; i < rep.J.size(); ++i) {
    if (rep.J[i] * rep.J[i] != neg_id) {
      sq_ok = false;
      sq_witness = "J_" + std::to_string(i + 1);
      break;
    }
  }
  report.add("generator_squares_minus_identity", sq_ok, sq_witness);

  bool anti_ok = true;
  std::string anti_witness;
  for (size_t i = 0; i < rep.J.size() && anti_ok; ++i)
    for (size_t j = i + 1; j < rep.J.size(); ++j) {
      if (!(rep.J[i] * rep.J[j] + rep.J[j] * rep.J[i]).is_zero()) {
        anti_ok = false;
        anti_witness = "(J_" + std::to_string(i + 1) + ", J_" + std::to_string(j + 1) + ")";
        break;
      }
    }
  report.add("generators_anticommute", anti_ok, anti_witness);

  bool skew_ok = true;
  std::string skew_witness;
  for (size_t i = 0; i < rep.J.size(); ++i) {
    if (rep.J[i].transpose() != -rep.J[i]) {
      skew_ok = false;
      skew_witness = "J_" + std::to_string(i + 1);
      break;
    }
  }
  report.add("generators_skew_symmetric", skew_ok, skew_witness);

  report.add("volume_is_ordered_product", rep.K == product_of(rep.J));

  Matrix k2 = rep.K * rep.K;
  Matrix kt = rep.K.transpose();
  int residue = rep.m % 4;
  bool profile_ok;
  if (residue == 1 || residue == 2)
    profile_ok = (k2 == neg_id) && (kt == -rep.K);
  else
    profile_ok = (k2 == id) && (kt == rep.K);
  report.add("volume_profile_mod4", profile_ok, "m mod 4 = " + std::to_string(residue));

  bool even_ok = true;
  std::string even_witness;
  for (size_t i = 0; i < rep.J.size() && even_ok; ++i)
    for (size_t j = i + 1; j < rep.J.size(); ++j) {
      Matrix jij = rep.J[i] * rep.J[j];
      if (rep.K * jij != jij * rep.K) {
        even_ok = false;
        even_witness = "(J_" + std::to_string(i + 1) + ", J_" + std::to_string(j + 1) + ")";
        break;
      }
    }
  report.add("volume_commutes_with_even_part", even_ok, even_witness);

  if (rep.m % 2 == 1) {
    bool central_ok = true;
    std::string central_witness;
    for (size_t i = 0; i < rep.J.size(); ++i) {
      if (rep.K * rep.J[i] != rep.J[i] * rep.K) {
        central_ok = false;
        central_witness = "J_" + std::to_string(i + 1);
        break;
      }
    }
    report.add("volume_central_for_odd_m", central_ok, central_witness);
  }

  report.add("dimension_is_multiple_of_irreducible", rep.n % expected_dim(rep.m) == 0,
             "n=" + std::to_string(rep.n) + ", irreducible=" + std::to_string(expected_dim(rep.m)));
  return report;
}

}  // namespace htlab
