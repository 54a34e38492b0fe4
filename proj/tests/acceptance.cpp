// Acceptance suite: one pass/fail line per criterion, exit nonzero if any
// criterion fails. Every check is exact rational arithmetic unless the line
// is explicitly labeled heuristic.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "htlab/lagrangian.hpp"
#include "htlab/report_json.hpp"
#include "htlab/rng.hpp"
#include "htlab/search.hpp"

using namespace htlab;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool passed, const std::string& detail = "") {
  std::string suffix = detail.empty() ? "" : "  [" + detail + "]";
  std::printf("%s  criterion %2d  %s%s\n", passed ? "PASS" : "FAIL", number, name.c_str(), suffix.c_str());
  std::fflush(stdout);
  if (!passed) ++g_failures;
}

std::vector<HTypeSpec> sweep_specs(int max_m, int max_total) {
  std::vector<HTypeSpec> specs;
  for (int m = 1; m <= max_m; ++m) {
    if (m % 4 == 3) {
      for (int pp = 0; pp <= max_total; ++pp)
        for (int pm = 0; pp + pm <= max_total; ++pm)
          if (pp + pm >= 1) specs.push_back(HTypeSpec::with_pair(m, pp, pm));
    } else {
      for (int p = 1; p <= max_total; ++p) specs.push_back(HTypeSpec::with_p(m, p));
    }
  }
  return specs;
}

// --- criterion 1: Clifford axioms and irreducible dimensions, m = 1..12 ----

void criterion_1() {
  bool ok = true;
  std::string detail;
  for (int m = 1; m <= 12 && ok; ++m) {
    std::vector<CliffordRep> reps;
    if (m % 4 == 3) {
      reps.push_back(irreducible_rep(m, 1));
      reps.push_back(irreducible_rep(m, -1));
    } else {
      reps.push_back(irreducible_rep(m));
    }
    for (const auto& rep : reps) {
      if (!verify_clifford(rep).all_passed() || rep.n != expected_dim(m)) {
        ok = false;
        detail = "m=" + std::to_string(m);
        break;
      }
    }
  }
  report(1, "clifford axioms and dimensions, m=1..12, both signs", ok, detail);
}

// --- criterion 2: H-type axioms over the full sweep ------------------------

void criterion_2() {
  bool ok = true;
  std::string detail;
  for (const auto& spec : sweep_specs(12, 3)) {
    HTypeAlgebra alg = build(spec);
    if (!verify_htype(alg, 0).all_passed()) {
      ok = false;
      detail = spec.str();
      break;
    }
    // bracket against the twisted vector recovers the norm, 20 seeded samples
    SplitMix64 gen(SplitMix64::mix(0, 0xACC2));
    for (int trial = 0; trial < 20; ++trial) {
      Vec u = gen.next_vec(alg.n, 2);
      Vec z = gen.next_vec(static_cast<size_t>(alg.m), 2);
      if (bracket(alg, u, j_action(alg, z, u)) != scaled(z, dot(u, u))) {
        ok = false;
        detail = spec.str() + " twisted-bracket";
        break;
      }
    }
    if (!ok) break;
  }
  report(2, "h-type axioms, m<=12, multiplicity<=3", ok, detail);
}

// --- criterion 3: existence table reproduced with certificates -------------

bool expected_existence(const HTypeSpec& spec) {
  switch (spec.m % 8) {
    case 0:
    case 1:
    case 2:
    case 4: return true;
    case 3:
    case 7: return spec.p_plus == spec.p_minus;
    case 5:
    case 6: return spec.p % 2 == 0;
  }
  return false;
}

void criterion_3() {
  bool ok = true;
  std::string detail;
  for (const auto& spec : sweep_specs(12, 3)) {
    if (lag_exists(spec) != expected_existence(spec)) {
      ok = false;
      detail = spec.str() + " existence mismatch";
      break;
    }
    HTypeAlgebra alg = build(spec);
    if (lag_exists(spec)) {
      Subspace l = construct_lagrangian(alg);
      if (!certify_lagrangian(alg, l, 0).valid()) {
        ok = false;
        detail = spec.str() + " certificate";
        break;
      }
    } else if (spec.m % 4 == 3) {
      if (!trace_obstruction(alg).obstructed) {
        ok = false;
        detail = spec.str() + " trace";
        break;
      }
    } else {
      // m = 5, 6 mod 8 with odd multiplicity: labeled heuristic search
      SearchConfig cfg;
      cfg.seed = 0;
      cfg.trials = 1000;
      cfg.coordinate_bound = 2;
      cfg.target_dim = alg.n / 2;
      if (!random_horizontal(alg, cfg).found.empty()) {
        ok = false;
        detail = spec.str() + " heuristic emptiness violated";
        break;
      }
    }
  }
  report(3, "existence table with certificates (emptiness at odd multiplicity: heuristic search)", ok,
         detail);
}

// --- criterion 4: volume element profile ------------------------------------

void criterion_4() {
  bool ok = true;
  std::string detail;
  for (int m = 1; m <= 12 && ok; ++m) {
    std::vector<std::pair<CliffordRep, int>> reps;
    if (m % 4 == 3) {
      reps.emplace_back(irreducible_rep(m, 1), 1);
      reps.emplace_back(irreducible_rep(m, -1), -1);
    } else {
      reps.emplace_back(irreducible_rep(m), 0);
    }
    for (const auto& [rep, sign] : reps) {
      Matrix id = Matrix::identity(rep.n);
      bool profile;
      if (m % 4 == 1 || m % 4 == 2)
        profile = (rep.K * rep.K == id.scaled(Rat(-1))) && (rep.K.transpose() == -rep.K);
      else
        profile = (rep.K * rep.K == id) && (rep.K.transpose() == rep.K);
      bool scalar = sign == 0 || rep.K == id.scaled(Rat(sign));
      if (!profile || !scalar) {
        ok = false;
        detail = "m=" + std::to_string(m);
        break;
      }
    }
  }
  report(4, "volume element profile and irreducible sign action, m=1..12", ok, detail);
}

// --- criterion 5: orbit labels for m = 0 mod 4 ------------------------------

void criterion_5() {
  bool ok = true;
  std::string detail;
  for (int m : {4, 8, 12}) {
    HTypeAlgebra alg = build(HTypeSpec::with_p(m, 3));
    for (int r = 0; r <= 3 && ok; ++r) {
      Subspace l = construct_lagrangian(alg, r);
      LagrangianCertificate cert = certify_lagrangian(alg, l, 0);
      if (!cert.valid() || cert.orbit_type != r) {
        ok = false;
        detail = "m=" + std::to_string(m) + " r=" + std::to_string(r);
      }
    }
    if (!ok) break;
    // invariance of the label under sampled center-fixing automorphisms
    Subspace l1 = construct_lagrangian(alg, 1);
    SplitMix64 gen(SplitMix64::mix(0, static_cast<uint64_t>(m)));
    int sampled = 0;
    while (sampled < 20) {
      ParamBlocks blk = ParamBlocks::make(m % 8 == 0 ? 0 : 4, 3);
      for (size_t k = 0; k < 9; ++k) blk.A[k] = AlgebraElement(AlgebraId::R, {Rat(gen.next_bounded(2))});
      AutCandidate cand = build_aut_from_blocks(alg, blk);
      if (!cand.valid) continue;
      ++sampled;
      Subspace image = apply_aut(alg, cand.xi, l1);
      if (orbit_type(alg, image) != 1) {
        ok = false;
        detail = "m=" + std::to_string(m) + " label not invariant";
        break;
      }
    }
    if (!ok) break;
  }
  report(5, "orbit labels realized and invariant, m in {4,8,12}, p=3", ok, detail);
}

// --- criterion 6: octonionic suite ------------------------------------------

void criterion_6() {
  CheckReport suite = octonion_suite(0);
  bool ok = suite.all_passed();
  std::string detail;
  if (!ok)
    for (const auto& c : suite.checks)
      if (!c.passed) detail += c.name + " ";

  if (allowed_dims(16, 8) != std::set<size_t>{2, 4, 8}) {
    ok = false;
    detail += "allowed_dims ";
  }

  // heuristic, labeled: no 4-dimensional horizontal subspace in 1e5 trials
  HTypeAlgebra alg = build(HTypeSpec::with_p(8, 1));
  SearchConfig cfg;
  cfg.seed = 0;
  cfg.trials = 100000;
  cfg.coordinate_bound = 1;
  cfg.target_dim = 4;
  if (!random_horizontal(alg, cfg).found.empty()) {
    ok = false;
    detail += "dim-4 heuristic emptiness violated";
  }
  report(6, "octonionic suite (incl. heuristic dim-4 emptiness, 1e5 trials)", ok, detail);
}

// --- criterion 7: parametric conditions --------------------------------------

void criterion_7() {
  bool ok = true;
  std::string detail;
  for (int c : {1, 2, 3}) {
    for (int p = 1; p <= 3 && ok; ++p) {
      HTypeAlgebra alg = c == 3 ? build(HTypeSpec::with_pair(3, p, p)) : build(HTypeSpec::with_p(c, p));
      SplitMix64 gen(SplitMix64::mix(0, 0x700 + 16 * static_cast<uint64_t>(c) + static_cast<uint64_t>(p)));
      for (int trial = 0; trial < 100; ++trial) {
        ParamBlocks blk = ParamBlocks::make(c, static_cast<size_t>(p));
        auto fill = [&](std::vector<AlgebraElement>& g) {
          for (auto& e : g) e = AlgebraElement(blk.ring(), gen.next_vec(algebra_dim(blk.ring()), 2));
        };
        fill(blk.A);
        fill(blk.B);
        fill(blk.C);
        fill(blk.D);
        if (trial % 4 == 0) {
          // structured members so the valid branch is exercised too
          blk = ParamBlocks::make(c, static_cast<size_t>(p));
          for (int i = 0; i < p; ++i) {
            blk.A[static_cast<size_t>(i * p + i)] = AlgebraElement::one(blk.ring());
            blk.D[static_cast<size_t>(i * p + i)] = AlgebraElement::one(blk.ring());
          }
          if (c != 3 && p > 1) {
            blk.B[1] = AlgebraElement(blk.ring(), gen.next_vec(algebra_dim(blk.ring()), 1));
            blk.B[static_cast<size_t>(p)] = blk.B[1];
          }
        }
        if (param_isotropy(blk) != is_horizontal(alg, realize(alg, blk))) {
          ok = false;
          detail = "case " + std::to_string(c) + " isotropy contract";
          break;
        }
        AutCandidate cand = build_aut_from_blocks(alg, blk);
        if (cand.valid != is_aut_o(alg, cand.xi)) {
          ok = false;
          detail = "case " + std::to_string(c) + " aut contract";
          break;
        }
      }
    }
    if (!ok) break;
  }
  report(7, "parametric isotropy and symplectic conditions, cases 1..3, 100 samples each", ok, detail);
}

// --- criterion 8: tensor periodicity -----------------------------------------

void criterion_8() {
  bool ok = true;
  std::string detail;
  HTypeAlgebra oct = build(HTypeSpec::with_p(8, 1));
  Subspace w_plus = pm1_eigenspace(oct.rep.K, 1);
  Subspace w_minus = pm1_eigenspace(oct.rep.K, -1);
  for (int r = 1; r <= 3 && ok; ++r) {
    HTypeAlgebra factor = r == 3 ? build(HTypeSpec::with_pair(3, 1, 1)) : build(HTypeSpec::with_p(r, 1));
    Subspace lr = construct_lagrangian(factor);
    HTypeAlgebra ext = tensor_extension(oct, factor);
    if (!verify_clifford(ext.rep).all_passed()) {
      ok = false;
      detail = "extension r=" + std::to_string(r);
      break;
    }
    for (const Subspace& l8 : {w_plus, w_minus}) {
      Subspace t = tensor_lagrangian(oct, l8, factor, lr);
      if (!certify_lagrangian(ext, t, 0).valid()) {
        ok = false;
        detail = "r=" + std::to_string(r);
        break;
      }
    }
  }
  report(8, "tensor periodicity certifies for both eigenspace factors, r in {1,2,3}", ok, detail);
}

// --- criterion 9: dimension strata -------------------------------------------

void criterion_9() {
  // Every returned subspace must certify maximal and land in the divisor set
  // allowed_dims(n, m). The weaker interval bound n/(m+1) <= dim <= n/2 is
  // tracked alongside: at multiplicity 2 the copies of the module are
  // bracket-orthogonal, so maximal subspaces from different per-copy strata
  // combine and can realize dimensions between the divisors (a certified
  // dim-5 example in the (m=4, p=2) algebra below), which makes the divisor
  // clause fail while the interval clause holds.
  bool maximal_ok = true, divisor_ok = true, interval_ok = true;
  std::string detail;
  auto specs = sweep_specs(8, 2);
  size_t runs_per_spec = 1000 / specs.size() + 1;
  size_t total_runs = 0;
  for (const auto& spec : specs) {
    HTypeAlgebra alg = build(spec);
    auto dims = allowed_dims(alg.n, static_cast<size_t>(alg.m));
    for (size_t trial = 0; trial < runs_per_spec && total_runs < 1100; ++trial) {
      SplitMix64 gen(SplitMix64::mix(0, 0x900000 + total_runs));
      ++total_runs;
      Vec seed_vec = gen.next_nonzero_vec(alg.n, 2);
      Subspace result = extend_horizontal(alg, Subspace::span_of({seed_vec}, alg.n));
      size_t d = result.dim();
      if (!is_maximal_horizontal(alg, result)) maximal_ok = false;
      if (dims.count(d) != 1 && divisor_ok) {
        divisor_ok = false;
        detail = "witness " + spec.str() + " dim=" + std::to_string(d);
      }
      if (d * (static_cast<size_t>(alg.m) + 1) < alg.n || 2 * d > alg.n) interval_ok = false;
    }
  }
  bool ok = maximal_ok && divisor_ok && total_runs >= 1000;
  report(9, "seeded extensions certify maximal with divisor-set dimensions, m<=8, mult<=2", ok, detail);
  std::printf("      info: criterion 9 ran %zu extensions; all maximal: %s; interval bound "
              "n/(m+1) <= dim <= n/2 held everywhere: %s\n",
              total_runs, maximal_ok ? "yes" : "NO", interval_ok ? "yes" : "NO");
}

// --- criterion 10: CLI determinism --------------------------------------------

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void criterion_10() {
  const std::string cli = HTLAB_CLI_PATH;
  std::vector<std::string> invocations = {
      "build --m 4 --p 1 --seed 7",
      "verify --m 8 --p 1 --seed 7",
      "lagrangian --m 3 --pplus 1 --pminus 0 --seed 7",
      "lagrangian --m 12 --p 2 --r 1 --seed 7",
      "table1 --max-m 9 --max-p 2 --seed 7",
      "search --m 2 --p 1 --dim 2 --trials 500 --bound 1 --seed 7",
      "octonion --seed 7",
  };
  bool ok = true;
  std::string detail;
  for (const auto& args : invocations) {
    std::string out1 = "/tmp/htlab_accept_a.json";
    std::string out2 = "/tmp/htlab_accept_b.json";
    std::string cmd1 = cli + " " + args + " --out " + out1 + " >/dev/null 2>/dev/null";
    std::string cmd2 = cli + " " + args + " --out " + out2 + " >/dev/null 2>/dev/null";
    int rc1 = std::system(cmd1.c_str());
    int rc2 = std::system(cmd2.c_str());
    if (rc1 != rc2 || slurp(out1).empty() || slurp(out1) != slurp(out2)) {
      ok = false;
      detail = args;
      break;
    }
  }
  // exit code contract: 0 on success, 1 on failed checks, 2 on usage errors
  int rc_ok = std::system((cli + " verify --m 1 --p 1 >/dev/null 2>/dev/null").c_str());
  int rc_fail = std::system((cli + " lagrangian --m 3 --pplus 1 --pminus 0 >/dev/null 2>/dev/null").c_str());
  int rc_usage = std::system((cli + " lagrangian --m 3 --p 1 >/dev/null 2>/dev/null").c_str());
  if (!(WIFEXITED(rc_ok) && WEXITSTATUS(rc_ok) == 0 && WIFEXITED(rc_fail) && WEXITSTATUS(rc_fail) == 1 &&
        WIFEXITED(rc_usage) && WEXITSTATUS(rc_usage) == 2)) {
    ok = false;
    detail += " exit codes";
  }
  report(10, "cli reports byte-identical and exit codes honored", ok, detail);
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  auto t1 = std::chrono::steady_clock::now();
  std::printf("acceptance total: %lld s, %d failure(s)\n",
              static_cast<long long>(std::chrono::duration_cast<std::chrono::seconds>(t1 - t0).count()),
              g_failures);
  return g_failures == 0 ? 0 : 1;
}
