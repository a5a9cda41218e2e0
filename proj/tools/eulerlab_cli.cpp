// Command line front end. Subcommands map one-to-one onto the library
// reports; --format picks csv or json where both exist, --output redirects
// to a file, --zeros points at the zero fixture directory (the
// EULERLAB_ZEROS environment variable overrides the flag).
//
// Exit codes: 0 success, 2 bad usage or a mathematically invalid request,
// 3 missing or unreadable zero fixtures, 4 acceptance failures from
// `verify`.

#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eulerlab/acceptance.hpp"
#include "eulerlab/arith_tables.hpp"
#include "eulerlab/asymptotics.hpp"
#include "eulerlab/characters.hpp"
#include "eulerlab/chebyshev.hpp"
#include "eulerlab/errors.hpp"
#include "eulerlab/report.hpp"
#include "eulerlab/zero_data.hpp"

namespace {

struct GlobalOpts {
  std::string format;  // "", "csv" or "json"
  std::string output;
  std::string zeros_dir = "data/zeros";
  bool zeros_requested = false;  // flag or environment explicitly set it
  CLI::Option* zeros_opt = nullptr;
};

// The EULERLAB_ZEROS environment variable overrides the --zeros flag, so
// wrappers and tests can pin fixtures without touching argv. Called lazily
// from the subcommand callbacks, after flags are parsed.
void finalize_zeros(GlobalOpts& g) {
  if (const char* env = std::getenv("EULERLAB_ZEROS")) {
    g.zeros_dir = env;
    g.zeros_requested = true;
  } else if (g.zeros_opt != nullptr && g.zeros_opt->count() > 0) {
    g.zeros_requested = true;
  }
}

void emit(const GlobalOpts& g, const std::string& payload) {
  if (g.output.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(g.output);
  if (!out) {
    throw std::invalid_argument("cannot open output file: " + g.output);
  }
  out << payload;
}

// Loads fixtures when present. A missing directory is fatal only when the
// user explicitly pointed at one; the default location being absent just
// drops the zero terms, with a note on stderr.
std::optional<eulerlab::ZeroMap> maybe_zeros(GlobalOpts& g) {
  finalize_zeros(g);
  if (std::filesystem::is_directory(g.zeros_dir)) {
    return eulerlab::load_zero_directory(g.zeros_dir);
  }
  if (g.zeros_requested) {
    throw eulerlab::missing_fixture_error("zero directory not found: " +
                                          g.zeros_dir);
  }
  std::cerr << "note: no zero fixtures at '" << g.zeros_dir
            << "'; zero-sum terms omitted\n";
  return std::nullopt;
}

std::string json_dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial Euler products for Dirichlet L-functions"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", g.output, "write output to this file");
  g.zeros_opt = app.add_option("--zeros", g.zeros_dir,
                               "zero fixture directory (default data/zeros; "
                               "EULERLAB_ZEROS overrides)");

  int rc = 0;

  // characters --q N
  auto* sub_chars = app.add_subcommand("characters", "character table mod q");
  std::uint32_t chars_q = 1;
  sub_chars->add_option("--q", chars_q, "modulus")->required();
  sub_chars->callback([&] {
    std::vector<eulerlab::CharacterRow> rows;
    for (const auto& chi : eulerlab::characters_mod(chars_q)) {
      rows.push_back(eulerlab::character_row(chi));
    }
    emit(g, g.format == "json" ? json_dump(eulerlab::characters_json(rows))
                               : eulerlab::characters_csv(rows));
  });

  // sieve --x X --q Q
  auto* sub_sieve =
      app.add_subcommand("sieve", "prime sums by residue class");
  double sieve_x = 0.0;
  std::uint32_t sieve_q = 1;
  sub_sieve->add_option("--x", sieve_x, "upper limit")->required();
  sub_sieve->add_option("--q", sieve_q, "modulus");
  sub_sieve->callback([&] {
    if (!(sieve_x >= 2.0)) {
      throw std::invalid_argument("sieve: need x >= 2");
    }
    eulerlab::PrimeSummary s = eulerlab::chebyshev_ap(
        static_cast<std::uint64_t>(sieve_x), sieve_q);
    emit(g, g.format == "json" ? json_dump(eulerlab::prime_summary_json(s))
                               : eulerlab::prime_summary_csv(s));
  });

  // product --chi L --s-re A [--s-im B] --x X
  auto* sub_prod = app.add_subcommand("product", "partial Euler product");
  std::string prod_chi;
  double prod_sre = 0.0, prod_sim = 0.0, prod_x = 0.0;
  sub_prod->add_option("--chi", prod_chi, "character label q.index")
      ->required();
  sub_prod->add_option("--s-re", prod_sre, "Re s")->required();
  sub_prod->add_option("--s-im", prod_sim, "Im s");
  sub_prod->add_option("--x", prod_x, "prime cutoff")->required();
  sub_prod->callback([&] {
    auto chi = eulerlab::character_by_label(prod_chi);
    eulerlab::PartialProduct pp =
        eulerlab::partial_product({prod_sre, prod_sim}, chi, prod_x);
    if (g.format == "csv") {
      std::string out = "x,log_re,log_im,value_re,value_im,primes_used\n";
      out += eulerlab::fmt17(prod_x) + "," + eulerlab::fmt17(pp.log.real()) +
             "," + eulerlab::fmt17(pp.log.imag()) + "," +
             eulerlab::fmt17(pp.value.real()) + "," +
             eulerlab::fmt17(pp.value.imag()) + "," +
             std::to_string(pp.primes_used) + "\n";
      emit(g, out);
    } else {
      nlohmann::json j;
      j["x"] = prod_x;
      j["s"] = {{"re", prod_sre}, {"im", prod_sim}};
      j["chi"] = chi.label();
      j["log"] = {{"re", pp.log.real()}, {"im", pp.log.imag()}};
      j["value"] = {{"re", pp.value.real()}, {"im", pp.value.imag()}};
      j["primes_used"] = pp.primes_used;
      emit(g, json_dump(j));
    }
  });

  // aim --chi L --s-re A [--s-im B] [--on-critical-line] [--chain-variant]
  //     --x GRID
  auto* sub_aim = app.add_subcommand(
      "aim", "predicted log product with term breakdown");
  std::string aim_chi, aim_x;
  double aim_sre = 0.0, aim_sim = 0.0;
  bool aim_line = false, aim_variant = false;
  sub_aim->add_option("--chi", aim_chi, "character label q.index")
      ->required();
  sub_aim->add_option("--s-re", aim_sre, "Re s")->required();
  sub_aim->add_option("--s-im", aim_sim, "Im s");
  sub_aim->add_flag("--on-critical-line", aim_line,
                    "use the critical-line form (requires Re s = 1/2)");
  sub_aim->add_flag("--chain-variant", aim_variant,
                    "deeper Li chain truncation");
  sub_aim->add_option("--x", aim_x, "cutoff, or grid A:B:k")->required();
  sub_aim->callback([&] {
    auto chi = eulerlab::character_by_label(aim_chi);
    std::vector<double> xs = eulerlab::parse_grid(aim_x);
    auto zeros = maybe_zeros(g);
    const eulerlab::ZeroMap* zp = zeros ? &*zeros : nullptr;
    std::complex<double> s{aim_sre, aim_sim};
    if (xs.size() == 1 && g.format != "csv") {
      eulerlab::TermBreakdown tb =
          eulerlab::rhs_aim(s, chi, xs[0], zp, aim_line, aim_variant);
      emit(g, json_dump(eulerlab::breakdown_to_json(tb)));
    } else {
      eulerlab::SweepReport rep =
          eulerlab::sweep(s, chi, xs, zp, aim_line, aim_variant);
      emit(g, g.format == "json" ? json_dump(eulerlab::sweep_json(rep))
                                 : eulerlab::sweep_csv(rep));
    }
  });

  // ramanujan --s S --x GRID
  auto* sub_ram = app.add_subcommand(
      "ramanujan", "classical zeta product prediction at real s");
  double ram_s = 0.0;
  std::string ram_x;
  sub_ram->add_option("--s", ram_s, "real s > 0")->required();
  sub_ram->add_option("--x", ram_x, "cutoff, or grid A:B:k")->required();
  sub_ram->callback([&] {
    std::vector<double> xs = eulerlab::parse_grid(ram_x);
    auto zeros = maybe_zeros(g);
    const eulerlab::ZeroMap* zp = zeros ? &*zeros : nullptr;
    if (xs.size() == 1 && g.format != "csv") {
      eulerlab::TermBreakdown tb = eulerlab::rhs_ramanujan(ram_s, xs[0], zp);
      emit(g, json_dump(eulerlab::breakdown_to_json(tb)));
      return;
    }
    auto chi = eulerlab::character_by_index(1, 0);
    eulerlab::SweepReport rep;
    rep.s = {ram_s, 0.0};
    rep.chi_label = chi.label();
    rep.on_critical_line = (ram_s == 0.5);
    for (double x : xs) {
      eulerlab::PartialProduct pp =
          eulerlab::partial_product({ram_s, 0.0}, chi, x);
      eulerlab::TermBreakdown tb = eulerlab::rhs_ramanujan(ram_s, x, zp);
      eulerlab::SweepRow row;
      row.x = x;
      row.lhs_log = pp.log;
      row.rhs_log = tb.total_rhs_log;
      row.resid_abs = std::abs(pp.log - tb.total_rhs_log);
      row.e_ratio = tb.max_remainder / (std::sqrt(x) * std::log(x));
      row.li_diag = tb.li_block_norm;
      rep.rows.push_back(row);
    }
    emit(g, g.format == "json" ? json_dump(eulerlab::sweep_json(rep))
                               : eulerlab::sweep_csv(rep));
  });

  // drh --chi L [--t T] --x GRID
  auto* sub_drh = app.add_subcommand(
      "drh", "critical-line limit ratio (log x)^m product / predicted");
  std::string drh_chi, drh_x;
  double drh_t = 0.0;
  sub_drh->add_option("--chi", drh_chi, "character label q.index")
      ->required();
  sub_drh->add_option("--t", drh_t, "ordinate of s = 1/2 + it");
  sub_drh->add_option("--x", drh_x, "cutoff, or grid A:B:k")->required();
  sub_drh->callback([&] {
    auto chi = eulerlab::character_by_label(drh_chi);
    std::vector<double> xs = eulerlab::parse_grid(drh_x);
    auto zeros = maybe_zeros(g);
    const eulerlab::ZeroMap* zp = zeros ? &*zeros : nullptr;
    std::vector<eulerlab::DrhRow> rows;
    for (double x : xs) {
      rows.push_back({x, eulerlab::drh_ratio(chi, drh_t, x, zp)});
    }
    emit(g, g.format == "json" ? json_dump(eulerlab::drh_json(rows))
                               : eulerlab::drh_csv(rows));
  });

  // bv --x X --Q Q
  auto* sub_bv = app.add_subcommand(
      "bv", "sum over moduli of worst prime-count remainders");
  double bv_x = 0.0;
  std::uint32_t bv_q = 1;
  sub_bv->add_option("--x", bv_x, "upper limit")->required();
  sub_bv->add_option("--Q", bv_q, "largest modulus")->required();
  sub_bv->callback([&] {
    double v = eulerlab::bv_sum(static_cast<std::uint64_t>(bv_x), bv_q);
    if (g.format == "csv") {
      emit(g, "x,Q,sum\n" + eulerlab::fmt17(bv_x) + "," +
                  std::to_string(bv_q) + "," + eulerlab::fmt17(v) + "\n");
    } else {
      nlohmann::json j{{"x", bv_x}, {"Q", bv_q}, {"sum", v}};
      emit(g, json_dump(j));
    }
  });

  // appendix --x X [--T T]
  auto* sub_app = app.add_subcommand(
      "appendix", "square root phenomenon diagnostics");
  double app_x = 0.0;
  double app_t = -1.0;
  sub_app->add_option("--x", app_x, "upper limit")->required();
  sub_app->add_option("--T", app_t,
                      "also sum 1/|rho| over zeta zeros up to T");
  sub_app->callback([&] {
    if (!(app_x >= 2.0)) {
      throw std::invalid_argument("appendix: need x >= 2");
    }
    std::uint64_t xi = static_cast<std::uint64_t>(app_x);
    eulerlab::ArithTables tables = eulerlab::arith_tables(xi);
    eulerlab::KahanSum lam;
    for (std::uint64_t n = 1; n <= xi; ++n) {
      lam.add(static_cast<double>(tables.lambda(n)) /
              (static_cast<double>(n) * static_cast<double>(n)));
    }
    std::complex<double> px = eulerlab::p_x({2.0, 0.0}, app_x);
    nlohmann::json j;
    j["x"] = app_x;
    j["mertens"] = eulerlab::mertens(tables, xi);
    j["liouville"] = eulerlab::liouville_sum(tables, xi);
    j["lambda_inv_square_sum"] = lam.value();
    j["sqrt2_residual"] = eulerlab::sqrt2_log_residual(app_x);
    j["p_x_2"] = {{"re", px.real()}, {"im", px.imag()}};
    if (app_t >= 0.0) {
      auto zeros = maybe_zeros(g);
      if (!zeros) {
        throw eulerlab::missing_fixture_error(
            "appendix --T needs the zeta zero fixture");
      }
      auto it = zeros->find("zeta");
      if (it == zeros->end()) {
        throw eulerlab::missing_fixture_error("no list labeled \"zeta\"");
      }
      j["T"] = app_t;
      j["zero_reciprocal_sum"] =
          eulerlab::zero_reciprocal_sum(it->second, app_t);
    }
    if (g.format == "csv") {
      std::string out =
          "x,mertens,liouville,lambda_inv_square_sum,sqrt2_residual,"
          "p_x_2_re,p_x_2_im";
      bool with_t = j.contains("T");
      if (with_t) out += ",T,zero_reciprocal_sum";
      out += "\n";
      out += eulerlab::fmt17(app_x) + "," +
             std::to_string(j["mertens"].get<std::int64_t>()) + "," +
             std::to_string(j["liouville"].get<std::int64_t>()) + "," +
             eulerlab::fmt17(j["lambda_inv_square_sum"].get<double>()) + "," +
             eulerlab::fmt17(j["sqrt2_residual"].get<double>()) + "," +
             eulerlab::fmt17(px.real()) + "," + eulerlab::fmt17(px.imag());
      if (with_t) {
        out += "," + eulerlab::fmt17(app_t) + "," +
               eulerlab::fmt17(j["zero_reciprocal_sum"].get<double>());
      }
      out += "\n";
      emit(g, out);
    } else {
      emit(g, json_dump(j));
    }
  });

  // verify
  auto* sub_verify =
      app.add_subcommand("verify", "run the acceptance criteria");
  sub_verify->callback([&] {
    finalize_zeros(g);
    auto results = eulerlab::run_all(g.zeros_dir);
    bool ok = eulerlab::report_criteria(std::cout, results);
    if (!ok) rc = 4;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const eulerlab::missing_fixture_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const eulerlab::zero_parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const eulerlab::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  return rc;
}
