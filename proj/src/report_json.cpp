#include "htlab/report_json.hpp"

namespace htlab {

using nlohmann::json;

json scalar_json(const Rat& r) { return r.str(); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json subspace_json(const Subspace& s) {
  return json{{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", matrix_json(s.basis())}};
}

json spec_json(const HTypeSpec& spec) {
  json j{{"m", spec.m}, {"mult", spec.total_multiplicity()}};
  if (spec.uses_signed_pair()) {
    j["p_plus"] = spec.p_plus;
    j["p_minus"] = spec.p_minus;
  } else {
    j["p"] = spec.p;
  }
  return j;
}

json clifford_json(const CliffordRep& rep) {
  json gens = json::array();
  for (const auto& g : rep.J) gens.push_back(matrix_json(g));
  return json{{"m", rep.m}, {"n", rep.n}, {"construction", rep.construction}, {"generators", std::move(gens)}};
}

json check_report_json(const CheckReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json item{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  return json{{"all_passed", report.all_passed()}, {"checks", std::move(checks)}};
}

json certificate_json(const LagrangianCertificate& cert) {
  json j{{"dim", cert.subspace.dim()},
         {"checks",
          json{{"half_dim", cert.half_dim},
               {"isotropic", cert.isotropic},
               {"cplus_closed", cert.cplus_closed},
               {"complement_lagrangian", cert.complement_lagrangian},
               {"jz_maps_to_complement", cert.jz_maps_to_complement}}},
         {"valid", cert.valid()},
         {"basis", matrix_json(cert.subspace.basis())}};
  if (cert.orbit_type)
    j["orbit_type"] = *cert.orbit_type;
  else
    j["orbit_type"] = nullptr;
  return j;
}

json search_report_json(const SearchReport& report) {
  json found = json::array();
  for (const auto& s : report.found) found.push_back(subspace_json(s));
  json j{{"exhaustive", report.exhaustive},
         {"trials", report.trials_run},
         {"found", std::move(found)},
         {"seed", report.seed}};
  if (report.exhaustive)
    j["grid_bound"] = report.grid_bound;
  else
    j["grid_bound"] = nullptr;
  return j;
}

std::string dump_sorted(const json& j) { return j.dump(2); }

}  // namespace htlab
