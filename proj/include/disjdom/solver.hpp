#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "disjdom/tree.hpp"

namespace disjdom {

// D 2-dominates disjunctively (is a 2DD-set) when every vertex outside D has a
// neighbor in D or at least two D-vertices at distance exactly 2.

enum class Coverage { IN_SET, ADJACENT, TWO_AT_DIST2, UNCOVERED };
const char* coverage_name(Coverage c);

struct VertexJustification {
  Coverage tag = Coverage::UNCOVERED;
  std::vector<int> witnesses;  // one neighbor, or two distance-2 vertices
};

struct DominationCertificate {
  std::vector<int> member_set;                    // sorted, deduplicated D
  std::vector<VertexJustification> per_vertex;    // indexed by vertex
};

struct CheckResult {
  bool ok = false;
  DominationCertificate certificate;
  std::vector<int> uncovered;
};

CheckResult check_2dd_set(const Tree& t, const std::vector<int>& set);
bool is_2dd_set(const Tree& t, const std::vector<int>& set);
bool is_dominating_set(const Tree& t, const std::vector<int>& set);

enum class SolveMethod { Brute, BranchAndBound };
const char* method_name(SolveMethod m);

struct SolveResult {
  int gamma_d2 = 0;
  std::vector<int> witness;
  SolveMethod method = SolveMethod::Brute;
  std::uint64_t nodes_explored = 0;
};

// Default 20; the DISJDOM_CAP environment variable overrides it.
int brute_force_cap();

// Scans subsets by increasing cardinality, lexicographic within each size.
// cap < 0 means brute_force_cap().
SolveResult gamma_d2_brute(const Tree& t, int cap = -1);

// Exact branch and bound over 64-bit vertex masks (n <= 64). Branches on the
// distance-<=2 ball of an uncovered vertex picked to minimize remaining
// options (lowest index on ties); prunes with a disjoint-ball packing bound.
SolveResult gamma_d2_bnb(const Tree& t);

// All minimum 2DD-sets in lexicographic order.
std::vector<std::vector<int>> enumerate_min_2dd_sets(const Tree& t, int cap = -1);

// Lexicographically first minimum 2DD-set avoiding every leaf; nullopt when
// no minimum set does (n >= 3 required).
std::optional<std::vector<int>> leafless_min_witness(const Tree& t, int cap = -1);

// Ordinary domination number, same subset scan; used for cross-checks.
int gamma_classic_brute(const Tree& t, int cap = -1);

}  // namespace disjdom
