#include "supercong/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "supercong/errors.hpp"
#include "supercong/report.hpp"

namespace supercong {

namespace {

std::vector<unsigned> sorted_unique(std::vector<unsigned> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

SweepSummary run_sweep(const SweepSpec& spec) {
  if (spec.jobs < 1) throw InvalidParameters("run_sweep: requires jobs >= 1");
  if (spec.p_filter && spec.p_filter->first == 0)
    throw InvalidParameters("run_sweep: residue filter modulus must be >= 1");
  const std::vector<unsigned> rs = sorted_unique(spec.r_list);
  const std::vector<unsigned> ds = sorted_unique(spec.d_list);
  if (rs.empty() || ds.empty())
    throw InvalidParameters("run_sweep: empty r or d list");

  std::vector<ClaimParams> tuples;
  Integer p = spec.p_min - 1;
  for (;;) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (p > spec.p_max) break;
    if (p == 2) continue;
    if (spec.p_filter && p % spec.p_filter->first != spec.p_filter->second)
      continue;
    for (unsigned r : rs) {
      for (unsigned d : ds) {
        ClaimParams q{p, r, d};
        if (claim_params_admissible(spec.claim, q)) tuples.push_back(q);
      }
    }
  }

  std::vector<ClaimReport> results(tuples.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tuples.size()) break;
      try {
        results[i] = verify_claim(spec.claim, tuples[i], spec.precision);
      } catch (const std::exception& e) {
        ClaimReport rep;
        rep.claim = spec.claim;
        rep.p = tuples[i].p;
        rep.r = tuples[i].r;
        rep.d = tuples[i].d;
        rep.errored = true;
        rep.pass = false;
        rep.note = e.what();
        results[i] = rep;
      }
    }
  };

  size_t width = std::min<size_t>(spec.jobs, tuples.size());
  if (width <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(width);
    for (size_t i = 0; i < width; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SweepSummary summary;
  summary.records = std::move(results);
  for (auto& rep : summary.records) {
    if (!spec.timing) rep.seconds = 0.0;
    if (rep.errored) {
      ++summary.errored;
    } else if (rep.pass) {
      ++summary.passed;
    } else {
      ++summary.failed;
    }
    if (!rep.errored && !rep.residual.is_infinite()) {
      long v = rep.residual.value();
      if (!summary.min_residual || v < *summary.min_residual)
        summary.min_residual = v;
    }
  }
  return summary;
}

void write_jsonl(const SweepSummary& s, std::ostream& os) {
  os << meta_record().dump() << "\n";
  for (const auto& rep : s.records) os << record_to_json(rep).dump() << "\n";
}

void write_csv(const SweepSummary& s, std::ostream& os) {
  os << csv_header() << "\n";
  for (const auto& rep : s.records) os << csv_row(rep) << "\n";
}

}  // namespace supercong
