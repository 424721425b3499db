#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "disjdom/family.hpp"
#include "disjdom/tree.hpp"

namespace disjdom {

// Scaled-integer bound record: every comparison is 4*gamma_d2 against the
// integer numerators n-l+3, n+l+s, n+3s-l. No floating point anywhere.
struct BoundsReport {
  int n = 0, l = 0, s = 0, diameter = 0;
  int gamma_d2 = 0;
  int gamma4 = 0, lower4 = 0, upper4 = 0, improved4 = 0;
  bool lower_ok = false, upper_ok = false, improved_ok = false;
  bool lower_eq = false, upper_eq = false;
  std::optional<bool> t1_member;    // unset when no catalog covers this order
  std::optional<bool> t2_member;
  std::optional<bool> leafless_ok;  // n >= 3 only
  std::optional<bool> deg2_supports_ok;     // n >= 3 only
  std::optional<bool> near_witness_ok;   // T2 catalog members only
};

// gamma_fn, when set, replaces the solver for the gamma value entering the
// bound and equality flags (fault-injection hook); witness-style checks
// (leafless set, minimum-set scans) always use the real solver.
BoundsReport bounds_report(const Tree& t, const FamilyCatalog* t1cat, const FamilyCatalog* t2cat,
                           const std::function<int(const Tree&)>& gamma_fn = {});

std::string bounds_report_json(const BoundsReport& r, const Tree& t, const std::string& canonical,
                               const char* type = "tree");

struct Violation {
  std::string claim;
  int n = 0;
  std::string edges;   // JSON array text of the offending tree's edges
  std::string detail;  // observed vs expected
};

struct CampaignConfig {
  int max_n = 10;   // universe is every tree with 3 <= n <= max_n
  int jobs = 1;
  std::function<int(const Tree&)> gamma_override;
};

struct CampaignResult {
  int min_n = 3;
  int max_n = 0;
  int jobs = 1;
  std::uint64_t tree_count = 0;
  std::vector<Violation> violations;  // sorted (claim, n, edges, detail)
  std::int64_t wall_ms = 0;
  std::vector<std::string> record_lines;  // per-tree JSON records, universe order
  std::string p2_line;                    // informational record for the two-vertex path
  std::string summary_line;

  bool ok() const { return violations.empty(); }
};

// Exhaustive verification over all_trees(3..max_n) plus the family catalogs:
// bounds, equality-vs-membership in both directions, leafless minimum sets,
// degree-2-support containment, uniqueness of the T1 minimum set, the T2
// member value, T2 near-witnesses for every leaf, and both structural audits.
// Results do not depend on jobs.
CampaignResult run_campaign(const CampaignConfig& cfg);

// Line-delimited JSON: per-tree records, the P2 note, then the summary object.
void write_campaign_report(const CampaignResult& result, const std::string& path);

}  // namespace disjdom
