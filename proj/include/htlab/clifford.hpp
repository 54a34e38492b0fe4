#pragma once

#include <optional>
#include <string>
#include <vector>

#include "htlab/matrix.hpp"

namespace htlab {

/// Which H-type algebra to build: center dimension m plus multiplicities.
/// For m = 3 mod 4 the two irreducible module classes carry separate
/// multiplicities (p_plus, p_minus); otherwise a single p.
struct HTypeSpec {
  int m = 1;
  int p = 1;
  int p_plus = 0;
  int p_minus = 0;

  static HTypeSpec with_p(int m, int p);
  static HTypeSpec with_pair(int m, int p_plus, int p_minus);

  bool uses_signed_pair() const { return m % 4 == 3; }
  int total_multiplicity() const { return uses_signed_pair() ? p_plus + p_minus : p; }
  void validate() const;  // throws std::invalid_argument on malformed specs
  std::string str() const;
};

/// Explicit matrix generators J_1..J_m of a Clifford module, plus the volume
/// element K = J_1 ... J_m and a provenance tag for the construction used.
struct CliffordRep {
  int m = 0;
  size_t n = 0;
  std::vector<Matrix> J;
  Matrix K;
  std::string construction;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckReport {
  std::vector<Check> checks;
  bool all_passed() const;
  void add(std::string name, bool passed, std::string detail = "");
};

/// Dimension of the irreducible module of C(m), periodic mod 8.
size_t expected_dim(int m);

/// Irreducible module for 1 <= m <= 8 built from the division-algebra models.
/// `sign` is required exactly when m is 3 or 7 and selects the module class
/// on which K acts as sign * Id.
CliffordRep base_generators(int m, std::optional<int> sign = std::nullopt);

/// Irreducible module for m > 8, realized as v8^(tensor s) (x) v_r with
/// m = 8s + r, r in 1..8.
CliffordRep periodic_generators(int m, std::optional<int> sign = std::nullopt);

/// base_generators or periodic_generators depending on m.
CliffordRep irreducible_rep(int m, std::optional<int> sign = std::nullopt);

/// Block-diagonal sum of the irreducible copies the spec asks for; for
/// m = 3 mod 4 all plus copies come before all minus copies.
CliffordRep assemble(const HTypeSpec& spec);

/// Exact verification of every generator identity; failures are reported with
/// a witness, never thrown.
CheckReport verify_clifford(const CliffordRep& rep);

}  // namespace htlab
