#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramikit/cohomology.hpp"
#include "ramikit/harness.hpp"
#include "ramikit/validation.hpp"

namespace ramikit {

// nlohmann::json keeps object keys sorted, so dump() output is canonical.

/// {"index", "action": {"a": [...], "A": [...]}}, cosets 1-based.
nlohmann::json to_json(const CosetTable &table, const std::vector<std::string> &generators);
nlohmann::json to_json(const AbelianInvariants &a);
nlohmann::json to_json(const Cover &cover, const KnotGroupData &knot);
/// {p, dim_h1_U, dim_unramified, dim_h1_quotient, inflation_bijective}
nlohmann::json to_json(const CheckReport &r);
nlohmann::json to_json(const SuiteReport &r);
nlohmann::json to_json(const KnotGroupData &knot, const ValidationReport &v);

std::string ramification_text(const Cover &cover, const KnotGroupData &knot);

/// Header: label,index,ramification_indices,h1_U,h1_U_torsion_order,h1_quotient,
/// h1_quotient_order,boundary_tori,unramified_h1_p<p>...
std::string census_csv_header(const std::vector<std::uint32_t> &primes);
std::string census_csv_row(const CensusCover &cc, const std::vector<std::uint32_t> &primes);

} // namespace ramikit
