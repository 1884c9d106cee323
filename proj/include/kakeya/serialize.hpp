#pragma once

#include <string>

#include <json.hpp>

#include "kakeya/constructions.hpp"
#include "kakeya/geometry.hpp"
#include "kakeya/search.hpp"
#include "kakeya/verification.hpp"

namespace kakeya {

/// Integral rationals become JSON numbers; half-integers the string "n/2".
nlohmann::json rational_json(const Rational& r);

/// Set file: {"q", "p", "k", "n", "ranks"} with ranks ascending and
/// rank(x) = sum_i rank(x_i) q^i.
nlohmann::json set_file_json(const PointSet& set);
/// Throws Parse on malformed documents or q != p^k.
PointSet set_from_json(const nlohmann::json& doc);

nlohmann::json construction_json(const ConstructionResult& result,
                                 const Assessment& assessment);

/// Fixed column order, see csv_header().
std::string csv_header();
std::string construction_csv_row(const ConstructionResult& result,
                                 const Assessment& assessment);

nlohmann::json bound_json(const BoundReport& bound);
nlohmann::json search_json(const SearchOutcome& outcome);

}  // namespace kakeya
