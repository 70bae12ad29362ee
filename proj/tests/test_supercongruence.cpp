#include <random>

#include "doctest.h"
#include "supercong/supercongruence.hpp"
#include "supercong/wz_certificate.hpp"

using namespace supercong;

TEST_CASE("sum_S frozen values") {
  CHECK(sum_S(0) == 1);
  CHECK(sum_S(1) == Rational(55, 64));
  CHECK(sum_S(2) == Rational(30285, 32768));
  CHECK(sum_S(6) == Rational(Integer("255619926587025"), Integer("281474976710656")));
  CHECK(vp(sum_S(6), 3) == 2L);
  CHECK(vp(sum_S(60), 3) == 4L);
  CHECK_THROWS_AS(sum_S(-1), InvalidParameters);
}

TEST_CASE("sum_S_general frozen values") {
  CHECK(sum_S_general(3, 1) == Rational(20, 27));
  CHECK(sum_S_general(3, 2) == Rational(644, 729));
  CHECK(sum_S_general(5, 1) == Rational(114, 125));
  CHECK(sum_S_general(4, 2) == sum_S(2));
  CHECK(sum_S_general(2, 0) == 1);
  CHECK_THROWS_AS(sum_S_general(1, 3), InvalidParameters);
  CHECK_THROWS_AS(sum_S_general(4, -2), InvalidParameters);
}

TEST_CASE("sum_S_modular frozen decompositions") {
  ValuedNumber a = sum_S_modular(4, 6, 3, 8);
  CHECK(a.v() == 2);
  CHECK(a.unit().value() == 1429);

  ValuedNumber b = sum_S_modular(3, 8, 5, 6);
  CHECK(b.v() == 2);
  CHECK(b.unit().value() == 9051);

  ValuedNumber c = sum_S_modular(5, 7, 7, 4);
  CHECK(c.v() == 0);
  CHECK(c.unit().value() == 482);

  ValuedNumber d = sum_S_modular(4, 0, 3, 4);
  CHECK(d.v() == 0);
  CHECK(d.unit().value() == 1);

  // v3(S(2)) = 2 exceeds a 1-digit window
  CHECK_THROWS_AS(sum_S_modular(4, 2, 3, 1), PrecisionLoss);
}

TEST_CASE("modular path matches the exact path") {
  std::mt19937_64 rng(271);
  const long primes[] = {3, 5, 7, 11, 13};
  int done = 0;
  while (done < 50) {
    unsigned d = 2 + static_cast<unsigned>(rng() % 5);
    long m = static_cast<long>(rng() % 201);
    Integer p = primes[rng() % 5];
    unsigned M = 2 + static_cast<unsigned>(rng() % 5);
    if (Integer(d) % p == 0) continue;  // terms are not p-integral
    ++done;
    ValuedNumber modular = sum_S_modular(d, m, p, M);
    ValuedNumber exact = valued_from_rational(sum_S_general(d, m), p, M);
    REQUIRE(!exact.is_zero());
    CHECK(modular.v() == exact.v());
    CHECK(modular.unit() == exact.unit());
  }
}

TEST_CASE("claim names round-trip") {
  for (ClaimId id :
       {ClaimId::F1, ClaimId::F3, ClaimId::GUO_F2, ClaimId::GUO_F4,
        ClaimId::SWISHER_F3_CASE1, ClaimId::SWISHER_F3_CASE2,
        ClaimId::SWISHER_F3_CASE3, ClaimId::THM_1_1, ClaimId::THM_1_2})
    CHECK(parse_claim(claim_name(id)) == id);
  CHECK(claim_name(ClaimId::F1) == "f1");
  CHECK(claim_name(ClaimId::GUO_F4) == "guo-f4");
  CHECK(claim_name(ClaimId::SWISHER_F3_CASE1) == "swisher-f3-case1");
  CHECK(claim_name(ClaimId::THM_1_1) == "thm-1-1");
  CHECK_THROWS_AS(parse_claim("f2"), ParseError);
  CHECK_THROWS_AS(parse_claim(""), ParseError);
}

TEST_CASE("claim parameter validation") {
  CHECK_THROWS_AS(validate_claim_params(ClaimId::F1, {Integer(3), 1, 4}),
                  InvalidParameters);  // needs p = 1 mod 4
  CHECK_THROWS_AS(validate_claim_params(ClaimId::F1, {Integer(5), 2, 4}),
                  InvalidParameters);  // r is implicitly 1
  CHECK_THROWS_AS(validate_claim_params(ClaimId::F3, {Integer(5), 1, 4}),
                  InvalidParameters);
  CHECK_THROWS_AS(validate_claim_params(ClaimId::F3, {Integer(3), 1, 3}),
                  InvalidParameters);  // d fixed at 4
  CHECK_THROWS_AS(validate_claim_params(ClaimId::GUO_F2, {Integer(3), 2, 3}),
                  InvalidParameters);  // 9 != 1 mod 3
  CHECK_THROWS_AS(validate_claim_params(ClaimId::GUO_F4, {Integer(7), 1, 3}),
                  InvalidParameters);  // 7 != -1 mod 3
  CHECK_THROWS_AS(
      validate_claim_params(ClaimId::SWISHER_F3_CASE2, {Integer(3), 3, 4}),
      InvalidParameters);  // even r only
  CHECK_THROWS_AS(
      validate_claim_params(ClaimId::SWISHER_F3_CASE3, {Integer(3), 2, 4}),
      InvalidParameters);  // odd r >= 3 only
  CHECK_THROWS_AS(validate_claim_params(ClaimId::THM_1_1, {Integer(3), 1, 4}),
                  InvalidParameters);  // r > 1
  CHECK_THROWS_AS(validate_claim_params(ClaimId::THM_1_2, {Integer(3), 3, 4}),
                  InvalidParameters);  // r > 3
  CHECK_THROWS_AS(validate_claim_params(ClaimId::F1, {Integer(9), 1, 4}),
                  InvalidParameters);  // composite p

  CHECK(claim_params_admissible(ClaimId::F1, {Integer(5), 1, 4}));
  CHECK(!claim_params_admissible(ClaimId::F1, {Integer(7), 1, 4}));
  CHECK(claim_params_admissible(ClaimId::GUO_F4, {Integer(5), 1, 3}));
  CHECK(claim_params_admissible(ClaimId::THM_1_2, {Integer(3), 5, 4}));
}

namespace {
long res_of(const ClaimReport& rep) { return rep.residual.value(); }
}  // namespace

TEST_CASE("verify f1 at p = 5, 13, 17") {
  for (long p : {5L, 13L, 17L}) {
    ClaimReport rep = verify_claim(ClaimId::F1, {Integer(p), 1, 4});
    CHECK(rep.pass);
    CHECK(res_of(rep) == 3);
    CHECK(rep.modulus_exp == 3);
    CHECK(rep.m == (p - 1) / 4);
    CHECK(rep.precision == 5);
    CHECK(!rep.errored);
  }
}

TEST_CASE("verify f3 at p = 3, 7, 11, 19, 23") {
  const std::pair<long, long> table[] = {
      {3, 7}, {7, 3}, {11, 3}, {19, 3}, {23, 3}};
  for (auto [p, residual] : table) {
    ClaimReport rep = verify_claim(ClaimId::F3, {Integer(p), 1, 4});
    CHECK(rep.pass);
    CHECK(res_of(rep) == residual);
    CHECK(rep.m == (3 * p - 1) / 4);
  }
}

TEST_CASE("verify guo claims") {
  ClaimReport a = verify_claim(ClaimId::GUO_F2, {Integer(7), 1, 3});
  CHECK(a.pass);
  CHECK(res_of(a) == 3);
  ClaimReport b = verify_claim(ClaimId::GUO_F2, {Integer(5), 2, 3});
  CHECK(b.pass);
  CHECK(res_of(b) == 4);
  CHECK(b.m == 8);
  ClaimReport c = verify_claim(ClaimId::GUO_F2, {Integer(13), 1, 4});
  CHECK(c.pass);
  CHECK(res_of(c) == 3);
  ClaimReport d = verify_claim(ClaimId::GUO_F4, {Integer(5), 1, 3});
  CHECK(d.pass);
  CHECK(res_of(d) == 3);
  ClaimReport e = verify_claim(ClaimId::GUO_F4, {Integer(3), 1, 4});
  CHECK(e.pass);
  CHECK(res_of(e) == 7);
  ClaimReport f = verify_claim(ClaimId::GUO_F4, {Integer(3), 2, 5});
  CHECK(f.pass);
  CHECK(res_of(f) == 5);
}

TEST_CASE("verify swisher cases") {
  ClaimReport c1 = verify_claim(ClaimId::SWISHER_F3_CASE1, {Integer(5), 2, 4});
  CHECK(c1.pass);
  CHECK(res_of(c1) == 6);
  CHECK(c1.modulus_exp == 6);  // tight

  ClaimReport c2 = verify_claim(ClaimId::SWISHER_F3_CASE2, {Integer(3), 2, 4});
  CHECK(c2.pass);
  CHECK(res_of(c2) == 7);
  CHECK(c2.modulus_exp == 4);

  ClaimReport c3a = verify_claim(ClaimId::SWISHER_F3_CASE3, {Integer(3), 3, 4});
  CHECK(c3a.pass);
  CHECK(res_of(c3a) == 3);
  ClaimReport c3b = verify_claim(ClaimId::SWISHER_F3_CASE3, {Integer(3), 5, 4});
  CHECK(c3b.pass);
  CHECK(res_of(c3b) == 6);
}

TEST_CASE("case 2 residual equals the independent exact computation") {
  // S((3^2-1)/4) - 3^2 S((3^0-1)/4) = 30285/32768 - 9
  ClaimReport rep = verify_claim(ClaimId::SWISHER_F3_CASE2, {Integer(3), 2, 4});
  Valuation direct = vp(sum_S(2) - Rational(9), 3);
  CHECK(rep.residual == direct);
  CHECK(direct == 7L);
}

TEST_CASE("theorem 1.1: holds at p = 3, fails at 7, 11, 19 (r = 3)") {
  ClaimReport ok3 = verify_claim(ClaimId::THM_1_1, {Integer(3), 3, 4});
  CHECK(ok3.pass);
  CHECK(res_of(ok3) == 3);
  CHECK(ok3.m == 6);

  ClaimReport ok5 = verify_claim(ClaimId::THM_1_1, {Integer(3), 5, 4});
  CHECK(ok5.pass);
  CHECK(res_of(ok5) == 5);

  for (long p : {7L, 11L, 19L}) {
    ClaimReport bad = verify_claim(ClaimId::THM_1_1, {Integer(p), 3, 4});
    CHECK(!bad.pass);
    CHECK(!bad.errored);
    CHECK(res_of(bad) == 2);  // one digit short of the claimed modulus
  }
}

TEST_CASE("theorem 1.2 holds where theorem 1.1 fails") {
  ClaimReport rep = verify_claim(ClaimId::THM_1_2, {Integer(3), 5, 4});
  CHECK(rep.pass);
  CHECK(res_of(rep) == 6);

  ClaimReport rep7 = verify_claim(ClaimId::THM_1_2, {Integer(7), 5, 4});
  CHECK(rep7.pass);
  CHECK(res_of(rep7) == 6);
}

TEST_CASE("thm-1-1 truncation sums F(n, 0) from the WZ pair") {
  ClaimReport rep = verify_claim(ClaimId::THM_1_1, {Integer(3), 3, 4});
  CHECK(rep.m == 6);
  Rational acc = 0;
  for (long n = 0; n <= 6; ++n) acc += eval_F(n, 0);
  CHECK(acc == sum_S(6));
}

TEST_CASE("verdict is stable under extra precision") {
  for (unsigned extra = 0; extra <= 2; ++extra) {
    ClaimReport a = verify_claim(ClaimId::F3, {Integer(3), 1, 4}, 5 + extra);
    CHECK(a.pass);
    ClaimReport b = verify_claim(ClaimId::THM_1_1, {Integer(7), 3, 4}, 5 + extra);
    CHECK(!b.pass);
    CHECK(res_of(b) == 2);
  }
  CHECK_THROWS_AS(verify_claim(ClaimId::F3, {Integer(3), 1, 4}, 4),
                  InvalidParameters);  // below modulus_exp + 2
}

TEST_CASE("archimedean sanity") {
  ArchimedeanReport rep = archimedean_sanity(2000, 1e-4);
  CHECK(rep.pass);
  CHECK(rep.error < 1e-4);
  CHECK(rep.error > 0);
  CHECK(rep.target == doctest::Approx(0.9003163161571062));

  ArchimedeanReport coarse = archimedean_sanity(4, 1.0);
  CHECK(coarse.pass);
  // alternating series: only the envelope shrinks
  CHECK(archimedean_sanity(100, 1.0).error < coarse.error);
  CHECK(rep.error < archimedean_sanity(100, 1.0).error);

  CHECK_THROWS_AS(archimedean_sanity(0, 1e-4), InvalidParameters);
}
