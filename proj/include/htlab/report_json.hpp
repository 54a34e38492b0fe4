#pragma once

#include <string>

#include "htlab/clifford.hpp"
#include "htlab/htype.hpp"
#include "htlab/lagrangian.hpp"
#include "htlab/search.hpp"

#include <json.hpp>

namespace htlab {

/// JSON embeddings used by reports and the command-line tool. All keys are
/// emitted in sorted order and rationals as canonical "num/den" strings, so
/// serialized output is byte-stable across runs.
nlohmann::json scalar_json(const Rat& r);
nlohmann::json matrix_json(const Matrix& m);
nlohmann::json subspace_json(const Subspace& s);
nlohmann::json spec_json(const HTypeSpec& spec);
nlohmann::json clifford_json(const CliffordRep& rep);
nlohmann::json check_report_json(const CheckReport& report);
nlohmann::json certificate_json(const LagrangianCertificate& cert);
nlohmann::json search_report_json(const SearchReport& report);

std::string dump_sorted(const nlohmann::json& j);

}  // namespace htlab
