#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "json.hpp"

#include "disjdom/campaign.hpp"
#include "disjdom/canonical.hpp"
#include "disjdom/solver.hpp"
#include "helpers.hpp"

using namespace disjdom;

namespace {

bool parses_as_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    return !j.is_discarded();
  } catch (...) {
    return false;
  }
}

}  // namespace

TEST_CASE("bound sheet for single trees") {
  FamilyCatalog t1 = enumerate_family(FamilyTag::T1, 8);
  FamilyCatalog t2 = enumerate_family(FamilyTag::T2, 8);

  Tree p7 = testutil::make_path(7);
  BoundsReport r = bounds_report(p7, &t1, &t2);
  CHECK(r.n == 7);
  CHECK(r.l == 2);
  CHECK(r.s == 2);
  CHECK(r.diameter == 6);
  CHECK(r.gamma_d2 == 2);
  CHECK(r.gamma4 == 8);
  CHECK(r.lower4 == 8);
  CHECK(r.upper4 == 11);
  CHECK(r.improved4 == 11);
  CHECK(r.lower_ok);
  CHECK(r.upper_ok);
  CHECK(r.improved_ok);
  CHECK(r.lower_eq);
  CHECK_FALSE(r.upper_eq);
  REQUIRE(r.t1_member.has_value());
  CHECK(*r.t1_member);
  REQUIRE(r.t2_member.has_value());
  CHECK_FALSE(*r.t2_member);
  REQUIRE(r.leafless_ok.has_value());
  CHECK(*r.leafless_ok);
  REQUIRE(r.deg2_supports_ok.has_value());
  CHECK(*r.deg2_supports_ok);
  CHECK_FALSE(r.near_witness_ok.has_value());

  Tree p8 = testutil::make_path(8);
  BoundsReport r8 = bounds_report(p8, &t1, &t2);
  CHECK(r8.upper_eq);
  REQUIRE(r8.t2_member.has_value());
  CHECK(*r8.t2_member);
  REQUIRE(r8.near_witness_ok.has_value());
  CHECK(*r8.near_witness_ok);

  // no catalogs: membership flags stay unset
  Tree p2 = testutil::make_path(2);
  BoundsReport r2 = bounds_report(p2, nullptr, nullptr);
  CHECK_FALSE(r2.t1_member.has_value());
  CHECK_FALSE(r2.leafless_ok.has_value());
  CHECK(r2.gamma_d2 == 1);
  CHECK(r2.lower4 == 3);  // 4*gamma = 4 clears it, outside the claimed range anyway
}

TEST_CASE("report JSON carries every flag") {
  FamilyCatalog t1 = enumerate_family(FamilyTag::T1, 8);
  FamilyCatalog t2 = enumerate_family(FamilyTag::T2, 8);
  Tree p7 = testutil::make_path(7);
  BoundsReport r = bounds_report(p7, &t1, &t2);
  auto j = nlohmann::json::parse(bounds_report_json(r, p7, canonical_form(p7)));
  CHECK(j.at("type") == "tree");
  CHECK(j.at("n") == 7);
  CHECK(j.at("canonical") == canonical_form(p7));
  CHECK(j.at("edges").size() == 6);
  CHECK(j.at("gamma_d2") == 2);
  CHECK(j.at("gamma4") == 8);
  CHECK(j.at("lower4") == 8);
  CHECK(j.at("upper4") == 11);
  CHECK(j.at("improved4") == 11);
  CHECK(j.at("lower_ok") == true);
  CHECK(j.at("lower_eq") == true);
  CHECK(j.at("upper_eq") == false);
  CHECK(j.at("t1_member") == true);
  CHECK(j.at("t2_member") == false);
  CHECK(j.at("leafless_ok") == true);
  CHECK(j.at("deg2_supports_ok") == true);
  CHECK(j.at("near_witness_ok").is_null());
}

TEST_CASE("campaign over all trees up to order 8 is clean") {
  CampaignConfig cfg;
  cfg.max_n = 8;
  CampaignResult res = run_campaign(cfg);
  CHECK(res.ok());
  CHECK(res.violations.empty());
  CHECK(res.tree_count == 46);  // 1+2+3+6+11+23
  CHECK(res.record_lines.size() == 46);
  CHECK(res.min_n == 3);
  CHECK(res.max_n == 8);

  // records arrive in universe order: ascending n, canonical order within n
  auto first = nlohmann::json::parse(res.record_lines.front());
  CHECK(first.at("n") == 3);
  CHECK(first.at("gamma_d2") == 1);
  CHECK(first.at("lower4") == 4);
  CHECK(first.at("lower_eq") == true);
  CHECK(first.at("t1_member") == true);

  int prev_n = 0;
  int t1_at_7 = 0, t2_at_8 = 0;
  for (const auto& line : res.record_lines) {
    auto j = nlohmann::json::parse(line);
    CHECK(j.at("type") == "tree");
    int n = j.at("n").get<int>();
    CHECK(n >= prev_n);
    prev_n = n;
    CHECK(j.at("lower_ok") == true);
    CHECK(j.at("upper_ok") == true);
    CHECK(j.at("improved_ok") == true);
    CHECK(j.at("leafless_ok") == true);
    CHECK(j.at("deg2_supports_ok") == true);
    if (n == 7 && j.at("t1_member") == true) ++t1_at_7;
    if (n == 8 && j.at("t2_member") == true) ++t2_at_8;
  }
  CHECK(t1_at_7 == 2);  // the order-7 star and the order-7 path
  CHECK(t2_at_8 == 1);  // the order-8 path

  auto p2 = nlohmann::json::parse(res.p2_line);
  CHECK(p2.at("type") == "p2-note");
  CHECK(p2.at("n") == 2);

  auto sum = nlohmann::json::parse(res.summary_line);
  CHECK(sum.at("type") == "summary");
  CHECK(sum.at("tree_count") == 46);
  CHECK(sum.at("violation_count") == 0);
  CHECK(sum.at("violations").empty());
  CHECK(sum.at("t1_catalog_size").get<int>() > 0);
  CHECK(sum.at("t2_catalog_size").get<int>() > 0);
  CHECK(sum.at("config").at("gamma_override") == false);
}

TEST_CASE("campaign guards") {
  CampaignConfig cfg;
  cfg.max_n = 2;
  CHECK_THROWS_AS(run_campaign(cfg), PreconditionViolatedError);
  cfg.max_n = 13;
  CHECK_THROWS_AS(run_campaign(cfg), PreconditionViolatedError);
}

TEST_CASE("results do not depend on the worker count") {
  CampaignConfig one;
  one.max_n = 7;
  one.jobs = 1;
  CampaignConfig four;
  four.max_n = 7;
  four.jobs = 4;
  CampaignResult a = run_campaign(one);
  CampaignResult b = run_campaign(four);
  CHECK(a.record_lines == b.record_lines);
  CHECK(a.violations.size() == b.violations.size());
  CHECK(a.p2_line == b.p2_line);
  auto ja = nlohmann::json::parse(a.summary_line);
  auto jb = nlohmann::json::parse(b.summary_line);
  ja.erase("wall_ms");
  jb.erase("wall_ms");
  ja.erase("config");
  jb.erase("config");
  CHECK(ja == jb);
}

TEST_CASE("report file holds records, the P2 note, and the summary") {
  CampaignConfig cfg;
  cfg.max_n = 6;
  CampaignResult res = run_campaign(cfg);
  std::string path = "campaign_report_test.ldjson";
  write_campaign_report(res, path);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  in.close();
  std::remove(path.c_str());

  REQUIRE(lines.size() == res.record_lines.size() + 2);
  for (const auto& l : lines) CHECK(parses_as_json(l));
  CHECK(nlohmann::json::parse(lines[lines.size() - 2]).at("type") == "p2-note");
  CHECK(nlohmann::json::parse(lines.back()).at("type") == "summary");
}

TEST_CASE("an inflated solver is caught") {
  CampaignConfig cfg;
  cfg.max_n = 6;
  cfg.gamma_override = [](const Tree& t) { return gamma_d2_brute(t).gamma_d2 + 1; };
  CampaignResult res = run_campaign(cfg);
  CHECK_FALSE(res.ok());
  bool upper = false, t1eq = false;
  for (const auto& v : res.violations) {
    if (v.claim == "upper-bound") upper = true;
    if (v.claim == "lower-equality-iff-t1-member") t1eq = true;
    CHECK(v.n >= 3);
    CHECK_FALSE(v.detail.empty());
    CHECK(parses_as_json(v.edges));
  }
  CHECK(upper);
  CHECK(t1eq);
  auto sum = nlohmann::json::parse(res.summary_line);
  CHECK(sum.at("violation_count").get<std::size_t>() == res.violations.size());
  CHECK(sum.at("config").at("gamma_override") == true);
}

TEST_CASE("a deflated solver is caught") {
  CampaignConfig cfg;
  cfg.max_n = 6;
  cfg.gamma_override = [](const Tree& t) { return gamma_d2_brute(t).gamma_d2 - 1; };
  CampaignResult res = run_campaign(cfg);
  CHECK_FALSE(res.ok());
  bool lower = false, t2eq = false;
  for (const auto& v : res.violations) {
    if (v.claim == "lower-bound") lower = true;
    if (v.claim == "upper-equality-iff-t2-member") t2eq = true;
  }
  CHECK(lower);
  CHECK(t2eq);
}
