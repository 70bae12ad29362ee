#include "supercong/report.hpp"

#include <ctime>

#include "supercong/errors.hpp"
#include "supercong/version.hpp"

namespace supercong {

namespace {

long to_long(const Integer& n, const char* what) {
  if (!n.fits_slong_p())
    throw OutOfRange(std::string(what) + " does not fit a machine word");
  return n.get_si();
}

}  // namespace

Json record_to_json(const ClaimReport& rep) {
  Json j;
  j["claim"] = claim_name(rep.claim);
  j["p"] = to_long(rep.p, "p");
  j["r"] = rep.r;
  j["d"] = rep.d;
  j["m"] = to_long(rep.m, "m");
  j["modulus_exp"] = rep.modulus_exp;
  if (rep.errored)
    j["residual_valuation"] = nullptr;
  else if (rep.residual.is_infinite())
    j["residual_valuation"] = "inf";
  else
    j["residual_valuation"] = rep.residual.value();
  j["pass"] = rep.pass;
  j["precision"] = rep.precision;
  j["seconds"] = rep.seconds;
  return j;
}

ClaimReport record_from_json(const Json& j) {
  ClaimReport rep;
  try {
    rep.claim = parse_claim(j.at("claim").get<std::string>());
    rep.p = Integer(j.at("p").get<long>());
    rep.r = j.at("r").get<unsigned>();
    rep.d = j.at("d").get<unsigned>();
    rep.m = Integer(j.at("m").get<long>());
    rep.modulus_exp = j.at("modulus_exp").get<unsigned>();
    const Json& rv = j.at("residual_valuation");
    if (rv.is_null()) {
      rep.errored = true;
      rep.residual = Valuation::infinity();
    } else if (rv.is_string()) {
      if (rv.get<std::string>() != "inf")
        throw ParseError("residual_valuation: expected a number, \"inf\" or null");
      rep.residual = Valuation::infinity();
    } else {
      rep.residual = Valuation::finite(rv.get<long>());
    }
    rep.pass = j.at("pass").get<bool>();
    rep.precision = j.at("precision").get<unsigned>();
    rep.seconds = j.at("seconds").get<double>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed result record: ") + e.what());
  }
  return rep;
}

std::string csv_header() {
  return "claim,p,r,d,m,modulus_exp,residual_valuation,pass,precision,seconds";
}

std::string csv_row(const ClaimReport& rep) {
  std::string residual;
  if (rep.errored)
    residual = "";
  else
    residual = rep.residual.str();
  return claim_name(rep.claim) + "," + rep.p.get_str() + "," +
         std::to_string(rep.r) + "," + std::to_string(rep.d) + "," +
         rep.m.get_str() + "," + std::to_string(rep.modulus_exp) + "," +
         residual + "," + (rep.pass ? "true" : "false") + "," +
         std::to_string(rep.precision) + "," + Json(rep.seconds).dump();
}

Json meta_record() {
  Json j;
  Json meta;
  meta["tool"] = kToolName;
  meta["version"] = kToolVersion;
  meta["timestamp"] = iso_timestamp_utc();
  j["_meta"] = meta;
  return j;
}

std::string iso_timestamp_utc() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace supercong
