#pragma once

#include <string>

#include "json.hpp"
#include "supercong/supercongruence.hpp"

namespace supercong {

using Json = nlohmann::ordered_json;

/**
 * One result line.  Key order is part of the format:
 * claim, p, r, d, m, modulus_exp, residual_valuation, pass, precision, seconds.
 * residual_valuation is a number, "inf" (difference exactly zero), or null
 * (record produced by a failed evaluation).
 */
Json record_to_json(const ClaimReport& rep);

/** Inverse of record_to_json on the serialized fields. */
ClaimReport record_from_json(const Json& j);

std::string csv_header();
std::string csv_row(const ClaimReport& rep);

/** First line of every results file: tool name, version, timestamp. */
Json meta_record();

std::string iso_timestamp_utc();

}  // namespace supercong
