#pragma once

#include <optional>
#include <string>

#include "pcert/bounds.hpp"
#include "pcert/checks.hpp"
#include "pcert/ring.hpp"

namespace pcert {

// All serializations carry "schema_version": 1 and render numbers as exact
// strings (decimal mantissa times a power of two, or num/den) plus a
// display-only decimal approximation; no bare floats.

std::string verdict_name(Verdict v);

std::string bound_pair_json(const BoundPair& bp, const std::optional<Int>& p_exact,
                            std::optional<Verdict> verdict);
std::string bound_pair_csv_header();
std::string bound_pair_csv_row(const BoundPair& bp, const std::optional<Int>& p_exact,
                               std::optional<Verdict> verdict);
std::string bound_pair_text(const BoundPair& bp, const std::optional<Int>& p_exact,
                            std::optional<Verdict> verdict);

std::string report_json(const VerificationReport& rep);
std::string report_text(const VerificationReport& rep);

// {"t":..,"terms":[{"pi_exp":..,"sqrt6":..,"num":"..","den":".."}],...}
std::string coeff_json(long t, const RingElem& value,
                       const std::optional<std::string>& decimal);
std::string coeff_text(long t, const RingElem& value,
                       const std::optional<std::string>& decimal);

} // namespace pcert
