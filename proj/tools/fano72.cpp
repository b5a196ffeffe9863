// fano72: tables, certificate and invariant calculators.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>

#include "fano72/arith.hpp"
#include "fano72/basket.hpp"
#include "fano72/km.hpp"
#include "fano72/pipeline.hpp"
#include "fano72/render.hpp"
#include "fano72/rr.hpp"
#include "fano72/wps.hpp"

namespace {

using namespace fano72;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;

unsigned env_threads() {
  const char* raw = std::getenv("FANO72_THREADS");
  if (raw == nullptr || *raw == '\0') return 1;
  try {
    std::size_t used = 0;
    const long v = std::stol(raw, &used);
    if (used != std::string(raw).size() || v < 0) throw std::invalid_argument(raw);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("FANO72_THREADS must be a non-negative integer, got '") + raw + "'");
  }
}

pipeline::Options options_from(const std::string& mode, const std::string& slack) {
  pipeline::Options opts;
  opts.mode = pipeline::parse_mode(mode);
  opts.j_budget_slack = Rational::parse(slack);
  opts.threads = env_threads();
  return opts;
}

int run_tables(int which, const std::string& mode, const std::string& format) {
  const auto fmt = render::parse_format(format);
  if (which < 1 || which > 5) throw std::invalid_argument("--which must be 1..5");
  const auto cert = pipeline::certify_all(options_from(mode, "0"));
  std::cout << render::table(which, cert, fmt);
  return kOk;
}

int run_certify(const std::string& mode, const std::string& slack) {
  const auto cert = pipeline::certify_all(options_from(mode, slack));
  std::cout << render::certificate_json(cert);
  if (cert.bounded()) return kOk;
  std::cerr << render::survivor_listing(cert);
  return kFailure;
}

int run_basket(const std::string& entries, const std::string& degree_text) {
  const Basket b = Basket::parse(entries);
  const Rational degree = Rational::parse(degree_text);
  const auto indices = b.indices();
  const std::int64_t r_x = basket::gorenstein_index(indices);
  const Rational c2c1 = basket::c2c1_from_R(indices);
  const Rational h0 = rr::h0_anticanonical(degree, b);
  std::cout << "basket: " << b.str() << "\n"
            << "r_X: " << r_x << "\n"
            << "c2c1: " << c2c1 << "\n"
            << "c1^3: " << degree << "\n"
            << "h0: " << h0 << "\n"
            << "integral: " << (rr::h0_admissible(degree, b) ? "yes" : "NO") << "\n";
  return kOk;
}

int run_wps(const std::string& weights) {
  const auto w = WpsWeights::parse(weights);
  std::cout << "P(" << w.str() << ")\n"
            << "well-formed: " << (wps::well_formed(w) ? "yes" : "no") << "\n"
            << "degree: " << wps::degree(w) << "\n"
            << "index: " << wps::weil_index(w) << "\n";
  return kOk;
}

int run_km(int q, int verify) {
  if (q < 1) throw std::invalid_argument("--q must be positive");
  std::cout << "q: " << q << "\n"
            << "coefficient: " << km::threefold_coefficient(q) << "\n";
  if (verify <= 0) return kOk;
  bool all_ok = true;
  for (const auto& c : km::verify_threefold_coefficient(verify, env_threads())) {
    std::cout << c.q << " worst=" << c.worst << " witness=" << (c.witness ? c.witness->str() : "semistable")
              << " claimed=" << c.claimed << " " << (c.ok ? "ok" : "FAIL") << "\n";
    all_ok = all_ok && c.ok;
  }
  return all_ok ? kOk : kFailure;
}

int run_jset(const std::string& budget, bool inclusive) {
  const auto values = arith::enumerate_j_with_budget(Rational::parse(budget),
                                                     inclusive ? arith::Bound::inclusive : arith::Bound::strict);
  for (std::size_t i = 0; i < values.size(); ++i) std::cout << (i ? " " : "") << values[i];
  std::cout << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic case analysis for the degree bound of canonical Fano 3-folds"};
  app.require_subcommand(1);

  int which = 0;
  std::string mode = "strict";
  std::string format = "md";
  auto* tables = app.add_subcommand("tables", "Render one of Tables 1-5");
  tables->add_option("--which", which, "Table number 1..5")->required();
  tables->add_option("--mode", mode, "paper or strict");
  tables->add_option("--format", format, "md, markdown, csv or json");

  std::string slack = "0";
  auto* certify = app.add_subcommand("certify", "Run the full case analysis and print the certificate");
  certify->add_option("--mode", mode, "paper or strict");
  certify->add_option("--j1-budget-slack", slack, "Rational added to every J1/J2 budget (harness testing)");

  std::string entries;
  std::string degree;
  auto* basket_cmd = app.add_subcommand("basket", "h0(-K) for a basket and degree");
  basket_cmd->add_option("--entries", entries, "r:b,... or - for the empty basket")->required();
  basket_cmd->add_option("--degree", degree, "(-K)^3 as p/q or a terminating decimal")->required();

  std::string weights;
  auto* wps_cmd = app.add_subcommand("wps", "Degree and index of a weighted projective space");
  wps_cmd->add_option("--weights", weights, "a0,a1,a2,a3")->required();

  int q = 0;
  int verify = 0;
  auto* km_cmd = app.add_subcommand("km", "Kawamata-Miyaoka coefficient for Q-Fano index q");
  km_cmd->add_option("--q", q, "Q-Fano index")->required();
  km_cmd->add_option("--verify", verify, "Also brute-force the coefficient for q = 1..QMAX");

  std::string budget;
  bool inclusive = false;
  auto* jset = app.add_subcommand("jset", "J with sum over prime powers of (p^a - 1/p^a) below a budget");
  jset->add_option("--budget", budget, "p/q or terminating decimal")->required();
  jset->add_flag("--inclusive", inclusive, "Use <= instead of <");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*tables) return run_tables(which, mode, format);
    if (*certify) return run_certify(mode, slack);
    if (*basket_cmd) return run_basket(entries, degree);
    if (*wps_cmd) return run_wps(weights);
    if (*km_cmd) return run_km(q, verify);
    if (*jset) return run_jset(budget, inclusive);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailure;
  }
  return kInputError;
}
