#pragma once

#include <optional>
#include <string>

#include "supercong/exact_arith.hpp"

namespace supercong {

enum class ClaimId {
  F1,
  F3,
  GUO_F2,
  GUO_F4,
  SWISHER_F3_CASE1,
  SWISHER_F3_CASE2,
  SWISHER_F3_CASE3,
  THM_1_1,
  THM_1_2,
};

std::string claim_name(ClaimId id);        // "f1", "guo-f2", "thm-1-1", ...
ClaimId parse_claim(const std::string& s); // throws ParseError

struct ClaimParams {
  Integer p;
  unsigned r = 1;
  unsigned d = 4;  // series parameter; 4 for every non-Guo claim
};

/** Throws InvalidParameters with the violated constraint. */
void validate_claim_params(ClaimId id, const ClaimParams& params);
bool claim_params_admissible(ClaimId id, const ClaimParams& params);

struct ClaimReport {
  ClaimId claim = ClaimId::F1;
  Integer p;
  unsigned r = 1;
  unsigned d = 4;
  Integer m;  // truncation index
  std::string lhs;
  std::string rhs;
  unsigned modulus_exp = 0;
  Valuation residual;  // nu_p(lhs - rhs lift); meaningless if errored
  bool pass = false;
  unsigned precision = 0;  // working precision M actually used
  double seconds = 0.0;
  bool errored = false;  // evaluation failed (sweep partial-failure records)
  std::string note;      // diagnostic for errored / NegativeValuation cases
};

/** S(m) = sum_{n=0}^{m} (-1)^n (8n+1) (1/4)_n^3 / (1)_n^3, exactly. */
Rational sum_S(long m);

/** Same with (1/4) -> (1/d) and (8n+1) -> (2dn+1); d >= 2. */
Rational sum_S_general(unsigned d, long m);

/**
 * The sum as p^v * unit with the unit known mod p^M, computed with
 * valuation-tracked term arithmetic in a 2M-digit window.  Throws
 * PrecisionLoss when cancellation eats into the guard digits (raise M).
 */
ValuedNumber sum_S_modular(unsigned d, long m, const Integer& p, unsigned M);

/** Truncations over which the exact-rational path is the default. */
constexpr long kExactPathLimit = 5000;

ClaimReport verify_claim(ClaimId id, const ClaimParams& params,
                         std::optional<unsigned> precision = std::nullopt);

struct ArchimedeanReport {
  long m = 0;
  double value = 0.0;
  double target = 0.0;  // 2*sqrt(2)/pi
  double error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

ArchimedeanReport archimedean_sanity(long m, double tolerance);

}  // namespace supercong
