#pragma once

#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "supercong/supercongruence.hpp"

namespace supercong {

struct SweepSpec {
  ClaimId claim = ClaimId::F3;
  Integer p_min = 3;
  Integer p_max = 3;
  std::vector<unsigned> r_list = {1};
  std::vector<unsigned> d_list = {4};
  // extra residue filter p ≡ second mod first, on top of claim admissibility
  std::optional<std::pair<unsigned, unsigned>> p_filter;
  std::optional<unsigned> precision;
  unsigned jobs = 1;
  bool timing = true;  // off -> seconds written as 0.0 (byte-stable output)
};

struct SweepSummary {
  std::vector<ClaimReport> records;  // ascending (p, r, d)
  size_t passed = 0;
  size_t failed = 0;   // pass = false, evaluation completed
  size_t errored = 0;  // evaluation threw; kept as a failed record
  std::optional<long> min_residual;  // over finite residuals
  bool all_pass() const { return failed == 0 && errored == 0; }
};

/**
 * Enumerates admissible (p, r, d) in sorted order, verifies each claim with
 * `jobs` worker threads, and returns records in enumeration order regardless
 * of scheduling.  Individual failures do not abort the sweep.
 */
SweepSummary run_sweep(const SweepSpec& spec);

/** Meta line first, then one record per line. */
void write_jsonl(const SweepSummary& s, std::ostream& os);
void write_csv(const SweepSummary& s, std::ostream& os);

}  // namespace supercong
