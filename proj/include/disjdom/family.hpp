#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "disjdom/canonical.hpp"
#include "disjdom/tree.hpp"

namespace disjdom {

enum class Status : char { A = 'A', B = 'B', C = 'C', D = 'D' };
inline char status_char(Status s) { return static_cast<char>(s); }

enum class FamilyTag { T1, T2 };
const char* family_name(FamilyTag tag);

struct DerivationStep {
  std::string op;  // "O1".."O4"
  int vertex = -1; // attachment vertex in the tree the step was applied to
};

// Tree plus a weak status partition; T2 members carry the original four-vertex
// path of their base, preserved as new vertices are attached.
struct LabeledTree {
  Tree tree;
  std::vector<Status> status;
  std::optional<std::array<int, 4>> basic_path;
  FamilyTag family_tag = FamilyTag::T1;
  std::vector<DerivationStep> derivation;
};

// T1 base: P3 with leaves C and center A. T2 base: P4 with leaves C and the
// two inner vertices A; its vertices form the basic path.
LabeledTree t1_base();
LabeledTree t2_base();

std::string status_string(const LabeledTree& lt);
std::string labeled_canonical_form(const LabeledTree& lt);
// Catalog dedup key: status-aware canonical form, with the basic-path marker
// folded in for T2 members.
std::string family_catalog_key(const LabeledTree& lt);

bool on_basic_path(const LabeledTree& lt, int v);

// For an A-vertex v (not a support, off the basic path): every u closing an
// induced path v-C-D-u with sta(u)=B. For a B-vertex v: every x opening an
// induced path x-C-D-v with sta(x)=A. Supports and basic-path A-vertices get
// the empty set. Status C or D raises WrongStatus.
std::vector<int> corresponding_vertices(const LabeledTree& lt, int v);

// O1 (T1): attach a C-leaf to an A-vertex.
// O2 (T2): attach an A-C path to a B-vertex owning a degree-2 corresponding vertex.
// O3 (both): attach a D-B-A-C path to a degree-1 C-vertex.
// O4 (T2): attach an A-C path to an off-path A-vertex owning a degree-2
//          corresponding vertex.
bool can_apply_O1(const LabeledTree& lt, int v);
bool can_apply_O2(const LabeledTree& lt, int v);
bool can_apply_O3(const LabeledTree& lt, int v);
bool can_apply_O4(const LabeledTree& lt, int v);

LabeledTree apply_O1(const LabeledTree& lt, int v);
LabeledTree apply_O2(const LabeledTree& lt, int v);
LabeledTree apply_O3(const LabeledTree& lt, int v);
LabeledTree apply_O4(const LabeledTree& lt, int v);

struct FamilyCatalog {
  FamilyTag family = FamilyTag::T1;
  int cap = 0;
  // order -> dedup key -> representative
  std::map<int, std::map<std::string, LabeledTree>> members;
  // order -> canonical forms of the underlying unlabeled trees
  std::map<int, std::set<std::string>> unlabeled;

  bool contains_unlabeled(int n, const std::string& canon) const;
  std::vector<const LabeledTree*> all() const;  // ascending (order, key)
  std::size_t size() const;
};

// Breadth-first closure of the base under the family's operations, complete
// for every order up to n_max. n_max may not exceed cap.
FamilyCatalog enumerate_family(FamilyTag tag, int n_max, int cap = 14);

std::vector<int> sa_set(const LabeledTree& lt);

struct AuditReport {
  std::vector<std::string> violations;
  std::vector<std::string> notes;  // informational only
  bool ok() const { return violations.empty(); }
};

// Structural invariants of generated members. audit_T1 checks: supports A and
// leaves C; neighbors of A-vertices are B or C; the A-set 2-dominates
// disjunctively; each status class is independent; non-A vertices have degree
// at most 2. audit_T2 checks: supports A and leaves C; the A-set 2-dominates
// disjunctively; A/B vertices have at most one corresponding vertex and
// degree 2 when none of degree 2 exists; supports have degree 2; degree-2
// C-vertices have one A- and one D-neighbor (the basic-path side condition is
// recorded as a note).
AuditReport audit_T1(const LabeledTree& lt);
AuditReport audit_T2(const LabeledTree& lt);

struct MembershipVerdict {
  bool catalog_member = false;   // unlabeled canonical form found in catalog
  bool equality_member = false;  // 4*gamma_d2 equals n-l+3 (T1) / n+l+s (T2)
  bool agree() const { return catalog_member == equality_member; }
  const char* verdict() const { return catalog_member ? "IN" : "OUT"; }
};

// Both routes are computed independently; a disagreement falsifies the
// characterization and is surfaced by callers as THEOREM_VIOLATION.
MembershipVerdict membership(const Tree& t, FamilyTag tag, const FamilyCatalog& catalog);

// For a T2 member and a leaf v: a set of size (n+l+s)/4 - 1 that 2-dominates
// disjunctively every vertex except v and contains the non-leaf neighbor of
// v's support. nullopt means no such set exists.
std::optional<std::vector<int>> near_witness(const LabeledTree& lt, int leaf);

std::string catalog_to_json(const FamilyCatalog& c);
FamilyCatalog catalog_from_json(const std::string& text);

// Reapplies a derivation from the family base; used to check reproducibility.
LabeledTree replay_derivation(FamilyTag tag, const std::vector<DerivationStep>& steps);

}  // namespace disjdom
