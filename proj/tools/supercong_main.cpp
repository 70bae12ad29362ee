#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "supercong/errors.hpp"
#include "supercong/exact_arith.hpp"
#include "supercong/padic_gamma.hpp"
#include "supercong/pochhammer.hpp"
#include "supercong/report.hpp"
#include "supercong/supercongruence.hpp"
#include "supercong/sweep.hpp"
#include "supercong/version.hpp"
#include "supercong/wz_certificate.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInternal = 3;

using supercong::Integer;
using supercong::Rational;

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw supercong::ParseError("not a rational literal: " + s);
  if (q.get_den() == 0) throw supercong::ParseError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string base_p_digits(Integer v, const Integer& p, unsigned M) {
  std::string out;
  for (unsigned i = 0; i < M; ++i) {
    Integer digit = v % p;
    out += digit.get_str();
    if (i + 1 < M) out += ",";
    v /= p;
  }
  return out;
}

void print_valued(const supercong::ValuedNumber& vn) {
  if (vn.is_zero()) {
    std::cout << "value: exactly 0\n";
    return;
  }
  std::cout << "vp: " << vn.v() << "\n"
            << "unit: " << vn.unit().value().get_str() << " (mod "
            << vn.p().get_str() << "^" << vn.M() << ")\n"
            << "unit base-p digits (little-endian): "
            << base_p_digits(vn.unit().value(), vn.p(), vn.M()) << "\n";
}

void print_claim_report(const supercong::ClaimReport& rep) {
  std::cout << "claim: " << supercong::claim_name(rep.claim)
            << "  p=" << rep.p.get_str() << " r=" << rep.r << " d=" << rep.d
            << "  m=" << rep.m.get_str() << "\n"
            << "lhs:   " << rep.lhs << "\n"
            << "rhs:   " << rep.rhs << "\n"
            << "mod:   " << rep.p.get_str() << "^" << rep.modulus_exp
            << "  residual valuation: "
            << (rep.errored ? std::string("n/a") : rep.residual.str())
            << "  precision: " << rep.precision << "\n";
  if (!rep.note.empty()) std::cout << "note:  " << rep.note << "\n";
  std::cout << (rep.pass ? "PASS" : "FAIL") << " (" << rep.seconds << "s)\n";
}

struct SweepCli {
  std::string claim;
  int64_t p_min = 3;
  int64_t p_max = 0;
  std::vector<unsigned> r_list = {1};
  std::vector<unsigned> d_list = {4};
  std::string p_mod;
  unsigned precision = 0;
  unsigned jobs = 1;
  std::string timing = "on";
  std::string format = "jsonl";
  std::string out;
};

std::string default_out_dir() {
  const char* env = std::getenv("SUPERCONG_OUT_DIR");
  return env && *env ? std::string(env) : std::string(".");
}

std::string strip_known_extension(const std::string& path) {
  for (const char* ext : {".jsonl", ".csv"}) {
    std::string e = ext;
    if (path.size() > e.size() &&
        path.compare(path.size() - e.size(), e.size(), e) == 0)
      return path.substr(0, path.size() - e.size());
  }
  return path;
}

void write_file(const std::string& path,
                const std::function<void(std::ostream&)>& writer) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw supercong::InvalidParameters("cannot open for writing: " + path);
  writer(os);
  os.flush();
  if (!os) throw supercong::Error("write failed: " + path);
}

int run_sweep_cmd(const SweepCli& cli) {
  supercong::SweepSpec spec;
  spec.claim = supercong::parse_claim(cli.claim);
  spec.p_min = cli.p_min;
  spec.p_max = cli.p_max;
  spec.r_list = cli.r_list;
  spec.d_list = cli.d_list;
  if (!cli.p_mod.empty()) {
    auto colon = cli.p_mod.find(':');
    if (colon == std::string::npos)
      throw supercong::ParseError("--p-mod expects MOD:RESIDUE, e.g. 4:3");
    try {
      unsigned mod = std::stoul(cli.p_mod.substr(0, colon));
      unsigned rem = std::stoul(cli.p_mod.substr(colon + 1));
      spec.p_filter = {mod, rem};
    } catch (const std::exception&) {
      throw supercong::ParseError("--p-mod expects MOD:RESIDUE, e.g. 4:3");
    }
  }
  if (cli.precision > 0) spec.precision = cli.precision;
  spec.jobs = cli.jobs;
  spec.timing = cli.timing == "on";

  supercong::SweepSummary summary = supercong::run_sweep(spec);
  if (summary.records.empty())
    std::cerr << "warning: empty admissible parameter set\n";

  std::string base = cli.out.empty()
                         ? default_out_dir() + "/" + cli.claim + "-sweep"
                         : strip_known_extension(cli.out);
  std::vector<std::string> written;
  if (cli.format == "jsonl" || cli.format == "both") {
    std::string path = base + ".jsonl";
    write_file(path, [&](std::ostream& os) { write_jsonl(summary, os); });
    written.push_back(path);
  }
  if (cli.format == "csv" || cli.format == "both") {
    std::string path = base + ".csv";
    write_file(path, [&](std::ostream& os) { write_csv(summary, os); });
    written.push_back(path);
  }

  std::cout << "claim=" << cli.claim << " tuples=" << summary.records.size()
            << " pass=" << summary.passed << " fail=" << summary.failed
            << " error=" << summary.errored << " min_residual="
            << (summary.min_residual ? std::to_string(*summary.min_residual)
                                     : std::string("n/a"));
  for (const auto& path : written) std::cout << " wrote=" << path;
  std::cout << "\n";
  return summary.all_pass() ? kExitPass : kExitFail;
}

int run_wz_cmd(const std::string& check, long nmax, long kmax, int64_t p_in,
               unsigned r, unsigned precision, const std::string& which) {
  using namespace supercong;
  if (check == "grid") {
    TelescopingReport rep = check_telescoping_grid(nmax, kmax);
    std::cout << "telescoping grid " << rep.n_max << "x" << rep.k_max << ": "
              << rep.violations.size() << " violation(s)\n";
    for (const auto& cell : rep.violations)
      std::cout << "  violated at n=" << cell.n << " k=" << cell.k << "\n";
    return rep.ok() ? kExitPass : kExitFail;
  }
  if (check == "certificate") {
    RatioCertificateReport rep = check_ratio_certificate();
    std::cout << "certificate difference polynomial: "
              << rep.difference.str() << "\n"
              << "points validated: " << rep.points_checked
              << " (skipped at poles: " << rep.points_skipped << ")\n"
              << (rep.ok() ? "PASS" : "FAIL") << "\n";
    return rep.ok() ? kExitPass : kExitFail;
  }
  if (p_in <= 0) throw InvalidParameters("--p is required for this check");
  Integer p(p_in);
  if (check == "lemma32") {
    if (r == 0) throw InvalidParameters("--r is required for this check");
    Lemma32Report rep = check_lemma32(p, r);
    std::cout << "vp(G((p^r+1)/4, k)) for k=1.." << rep.k_max
              << ": min=" << rep.min_valuation << " at k=" << rep.argmin_k
              << ", bound=" << rep.bound << (rep.tight ? " (tight)" : "")
              << "\n";
    for (const auto& v : rep.violations)
      std::cout << "  below bound: k=" << v.k << " vp=" << v.valuation << "\n";
    std::cout << (rep.ok ? "PASS" : "FAIL") << "\n";
    return rep.ok ? kExitPass : kExitFail;
  }
  if (check == "lemma33") {
    if (r == 0) throw InvalidParameters("--r is required for this check");
    unsigned M = precision > 0 ? precision : r + 2;
    Lemma33Report rep = check_lemma33(p, r, M);
    std::cout << "F(m,m) at m=" << rep.m << ": residual valuation "
              << rep.residual.str() << " vs modulus exponent " << rep.r
              << "; proof step " << (rep.proof_step_ok ? "exact" : "MISMATCH")
              << "\n"
              << (rep.congruent && rep.proof_step_ok ? "PASS" : "FAIL") << "\n";
    return rep.congruent && rep.proof_step_ok ? kExitPass : kExitFail;
  }
  if (check == "lemma23") {
    if (r == 0) throw InvalidParameters("--r is required for this check");
    unsigned M = precision > 0 ? precision : r + 2;
    bool all_ok = true;
    for (char w : which) {
      Lemma23Report rep = check_lemma23(p, r, w, M);
      std::cout << "(" << w << ") valuation " << rep.lhs_valuation
                << " (stated " << rep.stated_exponent << ", "
                << (rep.valuation_ok ? "ok" : "MISMATCH") << "); unit "
                << rep.lhs_unit.get_str() << " vs " << rep.rhs_unit.get_str()
                << " mod p^" << rep.M << " ("
                << (rep.unit_ok ? "ok" : "MISMATCH") << ")\n";
      all_ok = all_ok && rep.ok();
    }
    std::cout << (all_ok ? "PASS" : "FAIL") << "\n";
    return all_ok ? kExitPass : kExitFail;
  }
  throw supercong::InvalidParameters("unknown wz check: " + check);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(supercong::kToolName) +
               " - exact verification of p-adic supercongruences"};
  app.set_version_flag("--version", supercong::kToolVersion);
  app.require_subcommand(1);

  // gamma
  auto* gamma = app.add_subcommand("gamma", "evaluate Gamma_p(x) mod p^M");
  int64_t g_p = 0;
  std::string g_x;
  unsigned g_M = 1;
  gamma->add_option("--p", g_p, "odd prime")->required();
  gamma->add_option("--x", g_x, "p-integral rational, e.g. 1/4")->required();
  gamma->add_option("--precision", g_M, "precision M (modulus p^M)")
      ->capture_default_str();

  // sum
  auto* sum = app.add_subcommand("sum", "truncated sum S_d(m)");
  unsigned s_d = 4;
  long s_m = 0;
  int64_t s_p = 0;
  unsigned s_M = 6;
  bool s_modular = false;
  sum->add_option("--d", s_d, "series parameter d >= 2")->capture_default_str();
  sum->add_option("--m", s_m, "truncation index")->required();
  sum->add_option("--p", s_p, "odd prime: also report vp and unit part");
  sum->add_option("--precision", s_M, "unit-part precision M")
      ->capture_default_str();
  sum->add_flag("--modular", s_modular,
                "use the valuation-tracked modular path (requires --p)");

  // verify
  auto* verify = app.add_subcommand("verify", "verify one congruence claim");
  std::string v_claim;
  int64_t v_p = 0;
  unsigned v_r = 1;
  unsigned v_d = 4;
  unsigned v_M = 0;
  std::string v_format = "text";
  verify->add_option("--claim", v_claim, "claim name (see README)")->required();
  verify->add_option("--p", v_p, "odd prime")->required();
  verify->add_option("--r", v_r, "exponent r")->capture_default_str();
  verify->add_option("--d", v_d, "divisor d (guo-f2/guo-f4)")
      ->capture_default_str();
  verify->add_option("--precision", v_M,
                     "working precision M (default: modulus exponent + 2)");
  verify->add_option("--format", v_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "verify a claim over a prime range");
  SweepCli sw;
  sweep->add_option("--claim", sw.claim, "claim name")->required();
  sweep->add_option("--p-min", sw.p_min, "lower prime bound")
      ->capture_default_str();
  sweep->add_option("--p-max", sw.p_max, "upper prime bound")->required();
  sweep->add_option("--r", sw.r_list, "exponent list")->capture_default_str();
  sweep->add_option("--d", sw.d_list, "divisor list (guo claims)")
      ->capture_default_str();
  sweep->add_option("--p-mod", sw.p_mod,
                    "extra residue filter MOD:RESIDUE, e.g. 4:3");
  sweep->add_option("--precision", sw.precision,
                    "working precision M (default per claim)");
  sweep->add_option("--jobs", sw.jobs, "parallel workers")
      ->capture_default_str();
  sweep->add_option("--timing", sw.timing,
                    "on|off; off writes seconds as 0.0 for byte-stable files")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
  sweep->add_option("--format", sw.format, "jsonl, csv or both")
      ->check(CLI::IsMember({"jsonl", "csv", "both"}))
      ->capture_default_str();
  sweep->add_option("--out", sw.out,
                    "output path (default: $SUPERCONG_OUT_DIR/<claim>-sweep)");

  // wz
  auto* wz = app.add_subcommand("wz", "WZ-pair and lemma checks");
  std::string w_check;
  long w_nmax = 25, w_kmax = 25;
  int64_t w_p = 0;
  unsigned w_r = 0;
  unsigned w_M = 0;
  std::string w_which = "abc";
  wz->add_option("--check", w_check, "grid|certificate|lemma32|lemma33|lemma23")
      ->required()
      ->check(
          CLI::IsMember({"grid", "certificate", "lemma32", "lemma33", "lemma23"}));
  wz->add_option("--nmax", w_nmax, "grid bound for n")->capture_default_str();
  wz->add_option("--kmax", w_kmax, "grid bound for k")->capture_default_str();
  wz->add_option("--p", w_p, "odd prime (lemma checks)");
  wz->add_option("--r", w_r, "exponent r (lemma checks)");
  wz->add_option("--precision", w_M, "precision M (default r + 2)");
  wz->add_option("--which", w_which, "lemma23 identities to run, subset of abc")
      ->capture_default_str();

  try {
    app.parse(argc, argv);

    if (gamma->parsed()) {
      Integer p(g_p);
      supercong::GammaContext ctx(p, g_M);
      supercong::Residue g = ctx.gamma_rational(parse_rational(g_x));
      std::cout << "Gamma_" << p.get_str() << "(" << g_x << ") mod "
                << p.get_str() << "^" << g_M << " = " << g.value().get_str()
                << "\n"
                << "base-p digits (little-endian): "
                << base_p_digits(g.value(), p, g_M) << "\n";
      return kExitPass;
    }

    if (sum->parsed()) {
      if (s_modular && s_p == 0)
        throw supercong::InvalidParameters("--modular requires --p");
      if (!s_modular) {
        Rational value = supercong::sum_S_general(s_d, s_m);
        std::cout << (s_d == 4 ? "S(" : "S_" + std::to_string(s_d) + "(")
                  << s_m << ") = " << value.get_str() << "\n";
        if (s_p != 0)
          print_valued(
              supercong::valued_from_rational(value, Integer(s_p), s_M));
      } else {
        print_valued(supercong::sum_S_modular(s_d, s_m, Integer(s_p), s_M));
      }
      return kExitPass;
    }

    if (verify->parsed()) {
      supercong::ClaimId id = supercong::parse_claim(v_claim);
      supercong::ClaimParams params{Integer(v_p), v_r, v_d};
      std::optional<unsigned> prec;
      if (v_M > 0) prec = v_M;
      supercong::ClaimReport rep = supercong::verify_claim(id, params, prec);
      if (v_format == "json")
        std::cout << supercong::record_to_json(rep).dump() << "\n";
      else
        print_claim_report(rep);
      return rep.pass ? kExitPass : kExitFail;
    }

    if (sweep->parsed()) return run_sweep_cmd(sw);

    if (wz->parsed())
      return run_wz_cmd(w_check, w_nmax, w_kmax, w_p, w_r, w_M, w_which);

    return kExitInvalid;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInvalid;
  } catch (const supercong::InvalidParameters& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const supercong::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const supercong::NotPIntegral& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const supercong::OutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const supercong::NegativeValuation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const supercong::PrecisionLoss& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const supercong::Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
