#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <string>
#include <vector>

#include "eulerlab/report.hpp"

using eulerlab::character_by_label;
using eulerlab::parse_grid;
using eulerlab::TermBreakdown;

TEST_CASE("breakdown json round trips every field", "[report]") {
  auto chi4 = character_by_label("4.1");
  TermBreakdown t =
      eulerlab::rhs_aim({0.3, 0.5}, chi4, 1e4, nullptr, false, true);
  nlohmann::json j = eulerlab::breakdown_to_json(t);
  // Through a string, as a file would see it.
  nlohmann::json j2 = nlohmann::json::parse(j.dump());
  TermBreakdown u = eulerlab::breakdown_from_json(j2);

  CHECK(u.x == t.x);
  CHECK(u.s == t.s);
  CHECK(u.chi_label == t.chi_label);
  CHECK(u.case_tag == t.case_tag);
  CHECK(u.log_l_present == t.log_l_present);
  CHECK(u.li_theta_term == t.li_theta_term);
  CHECK(u.theta_degenerate == t.theta_degenerate);
  CHECK(u.li_block_norm == t.li_block_norm);
  CHECK(u.max_remainder == t.max_remainder);
  REQUIRE(u.li_chain.size() == t.li_chain.size());
  for (std::size_t i = 0; i < t.li_chain.size(); ++i) {
    CHECK(u.li_chain[i].first == t.li_chain[i].first);
    CHECK(u.li_chain[i].second == t.li_chain[i].second);
  }
  REQUIRE(u.power_terms.size() == t.power_terms.size());
  for (std::size_t i = 0; i < t.power_terms.size(); ++i) {
    CHECK(u.power_terms[i].name == t.power_terms[i].name);
    CHECK(u.power_terms[i].value == t.power_terms[i].value);
  }
  CHECK(u.sqrt2_applied == t.sqrt2_applied);
  CHECK(u.zero_term_present == t.zero_term_present);
  CHECK(u.zero_term == t.zero_term);
  CHECK(u.zero_tail_bound == t.zero_tail_bound);
  CHECK(u.total_rhs_log == t.total_rhs_log);

  // A case with log L present and the sqrt 2 flag set.
  TermBreakdown t2 = eulerlab::rhs_aim({0.5, 0.0}, chi4, 1e4, nullptr, true);
  TermBreakdown u2 = eulerlab::breakdown_from_json(
      nlohmann::json::parse(eulerlab::breakdown_to_json(t2).dump()));
  CHECK(u2.log_l_present);
  CHECK(u2.log_l == t2.log_l);
  CHECK(u2.sqrt2_applied);
}

TEST_CASE("seventeen digit formatting survives a round trip", "[report]") {
  for (double v : {3.141592653589793, -1.4603545088095868, 1e-300, 0.0,
                   123456789.123456789}) {
    std::string s = eulerlab::fmt17(v);
    CHECK(std::stod(s) == v);
  }
}

TEST_CASE("sweep csv is deterministic with a pinned header", "[report]") {
  auto chi4 = character_by_label("4.1");
  auto rep =
      eulerlab::sweep({0.75, 0.0}, chi4, {1e3, 1e4}, nullptr, false);
  std::string a = eulerlab::sweep_csv(rep);
  std::string b = eulerlab::sweep_csv(rep);
  CHECK(a == b);
  CHECK(a.substr(0, a.find('\n')) ==
        "x,lhs_re,lhs_im,rhs_re,rhs_im,resid_abs,e_ratio,li_diag");
  // One header plus one line per row.
  CHECK(std::count(a.begin(), a.end(), '\n') == 3);

  auto j = eulerlab::sweep_json(rep);
  CHECK(j["rows"].size() == 2);
  CHECK(j["chi"] == "4.1");
}

TEST_CASE("character table writers", "[report]") {
  std::vector<eulerlab::CharacterRow> rows;
  for (const auto& chi : eulerlab::characters_mod(8)) {
    rows.push_back(eulerlab::character_row(chi));
  }
  std::string csv = eulerlab::characters_csv(rows);
  CHECK(csv.substr(0, csv.find('\n')) ==
        "label,conductor,order,parity,primitive,tau_re,tau_im,abs_tau,"
        "eps_re,eps_im");
  CHECK(csv.find("8.3") != std::string::npos);
  auto j = eulerlab::characters_json(rows);
  CHECK(j.size() == 4);
  CHECK(j[0]["label"] == "8.0");
}

TEST_CASE("prime summary writers", "[report]") {
  auto s = eulerlab::chebyshev_ap(1000, 4);
  std::string csv = eulerlab::prime_summary_csv(s);
  CHECK(csv.substr(0, csv.find('\n')) == "a,theta,psi,pi,remainder");
  auto j = eulerlab::prime_summary_json(s);
  CHECK(j["q"] == 4);
  CHECK(j["classes"].size() == 2);
}

TEST_CASE("drh csv grows a corrected column only when present", "[report]") {
  auto chi4 = character_by_label("4.1");
  eulerlab::DrhRow plain{1e3, eulerlab::drh_ratio(chi4, 0.0, 1e3)};
  std::string csv = eulerlab::drh_csv({plain});
  CHECK(csv.substr(0, csv.find('\n')) ==
        "x,ratio_re,ratio_im,abs_ratio_minus_1,m,sqrt2");

  eulerlab::DrhRow with = plain;
  with.result.corrected = std::complex<double>{1.01, 0.0};
  std::string csv2 = eulerlab::drh_csv({plain, with});
  CHECK(csv2.substr(0, csv2.find('\n')) ==
        "x,ratio_re,ratio_im,abs_ratio_minus_1,m,sqrt2,corrected_re,"
        "corrected_im,abs_corrected_minus_1");
  // The row lacking the value leaves its cells empty.
  auto second_line = csv2.substr(csv2.find('\n') + 1);
  auto first_row = second_line.substr(0, second_line.find('\n'));
  CHECK(first_row.substr(first_row.size() - 3) == ",,,");
}

TEST_CASE("grid parsing", "[report]") {
  auto g = parse_grid("1e3:1e6:1");
  REQUIRE(g.size() == 4);
  CHECK(g[0] == Catch::Approx(1e3));
  CHECK(g[3] == Catch::Approx(1e6));

  auto dense = parse_grid("100:1000:3");
  REQUIRE(dense.size() == 4);
  CHECK(dense[1] == Catch::Approx(100.0 * std::pow(10.0, 1.0 / 3.0)));

  auto single = parse_grid("5e2");
  REQUIRE(single.size() == 1);
  CHECK(single[0] == 500.0);

  CHECK(parse_grid("100:100:7").size() == 1);

  CHECK_THROWS_AS(parse_grid("1:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("a:b:c"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1e3:1e6:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1e3:1e6:1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1e6:1e3:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("1e3:1e6:2:9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("12xyz"), std::invalid_argument);
}
