#pragma once

#include <vector>

#include "supercong/bivar_poly.hpp"
#include "supercong/exact_arith.hpp"
#include "supercong/padic_gamma.hpp"

namespace supercong {

/**
 * WZ pair:
 *   F(n,k) = (-1)^{n+k} (8n+1) (1/4)_n^2 (1/4)_{n+k} / [ (1)_n^2 (1)_{n-k} (1/4)_k^2 ]
 *   G(n,k) = (-1)^{n+k} 4 (1/4)_n^2 (1/4)_{n+k-1} / [ (1)_{n-1}^2 (1)_{n-k} (1/4)_k^2 ]
 * with 1/(1)_m = 0 for negative m, so F vanishes for k > n and G vanishes for
 * n = 0 or k > n.  They satisfy F(n,k-1) - F(n,k) = G(n+1,k) - G(n,k).
 */
Rational eval_F(long n, long k);
Rational eval_G(long n, long k);

struct GridCell {
  long n;
  long k;
};

struct TelescopingReport {
  long n_max = 0;
  long k_max = 0;
  std::vector<GridCell> violations;  // cells where the identity fails
  bool ok() const { return violations.empty(); }
};

// Checks F(n,k-1) - F(n,k) == G(n+1,k) - G(n,k) exactly for
// 0 <= n <= n_max, 1 <= k <= k_max.
TelescopingReport check_telescoping_grid(long n_max, long k_max);

/**
 * Certificate ratios (valid wherever F(n,k) != 0 and no denominator vanishes):
 *   R1 = F(n,k-1)/F(n,k) = -(k-3/4)^2 / [ (n+k-3/4)(n-k+1) ]
 *   R2 = G(n+1,k)/F(n,k) = -4(n+1/4)^2 / [ (8n+1)(n-k+1) ]
 *   R3 = G(n,k)/F(n,k)   =  4n^2      / [ (n+k-3/4)(8n+1) ]
 * The telescoping identity is R1 - 1 = R2 - R3; clearing the common
 * denominator D = (n+k-3/4)(n-k+1)(8n+1) it becomes the polynomial identity
 *   -(k-3/4)^2 (8n+1) - D + 4(n+1/4)^2 (n+k-3/4) + 4n^2 (n-k+1) = 0.
 */
struct RatioCertificateReport {
  BivarPoly difference;      // expanded cleared-denominator difference
  bool polynomial_zero = false;
  unsigned points_checked = 0;  // grid points where all three ratios validated
  unsigned points_skipped = 0;  // grid points skipped at a denominator pole
  bool numeric_ok = false;
  bool ok() const { return polynomial_zero && numeric_ok; }
};

RatioCertificateReport check_ratio_certificate();

struct Lemma32Violation {
  long k;
  long valuation;
};

// Exact scan of vp(G((p^r+1)/4, k), p) for k = 1..(p^r-3)/4 against the
// bound 3(r-1)/2.  Reports the minimum, every violating k, and tightness.
struct Lemma32Report {
  Integer p;
  unsigned r = 0;
  long k_max = 0;
  long bound = 0;
  long min_valuation = 0;
  long argmin_k = 0;
  std::vector<Lemma32Violation> violations;
  bool tight = false;  // min_valuation == bound
  bool ok = false;     // min_valuation >= bound
};

Lemma32Report check_lemma32(const Integer& p, unsigned r);

// Least lengths j at which ((p^r-2)/4)_j, ((-1-p^r)/4)_j, (1/4)_j acquire a
// p-factor, scanned directly, against the closed forms (p+3)/2, (p+5)/4,
// (3p+3)/4 and the orderings j1 < j3, j2 < j3.
struct LeastIndexReport {
  Integer p;
  unsigned r = 0;
  long j1 = 0, j2 = 0, j3 = 0;                   // scanned
  long j1_formula = 0, j2_formula = 0, j3_formula = 0;
  bool formulas_match = false;
  bool j1_lt_j3 = false;
  bool j2_lt_j3 = false;
};

LeastIndexReport check_least_p_factor_indices(const Integer& p, unsigned r);

// Boundary closed form at m = (p^r-3)/4:
//   F(m,m) ≡ -16 Γ_p(3/4)/Γ_p(1/4)^3 · p^{r-1}   (mod p^r),
// with the exact first step F(m,m) = (2p^r-5) (1/4)_{2m} / (1)_m^2.
struct Lemma33Report {
  Integer p;
  unsigned r = 0;
  unsigned M = 0;
  long m = 0;
  Rational lhs;        // F(m,m)
  Rational rhs_lift;   // canonical lift of the gamma side times p^{r-1}
  Valuation residual;  // vp(lhs - rhs_lift)
  bool congruent = false;     // residual >= r
  bool proof_step_ok = false; // exact identity above
};

Lemma33Report check_lemma33(const Integer& p, unsigned r, unsigned M);

}  // namespace supercong
