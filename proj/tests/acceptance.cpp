// Acceptance gate: one pass/fail line per release criterion, nonzero exit on
// any failure. Everything here recomputes from scratch; nothing is read from
// the unit-test fixtures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "disjdom/campaign.hpp"
#include "disjdom/canonical.hpp"
#include "disjdom/enumeration.hpp"
#include "disjdom/family.hpp"
#include "disjdom/solver.hpp"
#include "disjdom/tree.hpp"

using namespace disjdom;

namespace {

Tree path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return make_tree(n, e);
}

Tree star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return make_tree(leaves + 1, e);
}

Tree double_star_graph(int a, int b) {
  std::vector<std::pair<int, int>> e{{0, 1}};
  int next = 2;
  for (int i = 0; i < a; ++i) e.push_back({0, next++});
  for (int i = 0; i < b; ++i) e.push_back({1, next++});
  return make_tree(next, e);
}

struct Entry {
  Tree tree;
  std::string canon;
  int n = 0, l = 0, s = 0, gamma = 0;
};

struct Gate {
  int failed = 0;
  std::string note;

  bool run(const char* name, const std::function<bool()>& body) {
    note.clear();
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (ok) {
      std::printf("PASS %s (%lld ms)\n", name, static_cast<long long>(ms));
    } else {
      std::printf("FAIL %s%s%s (%lld ms)\n", name, note.empty() ? "" : ": ",
                  note.c_str(), static_cast<long long>(ms));
      ++failed;
    }
    std::fflush(stdout);
    return ok;
  }
};

std::string describe(const Entry& e) {
  return "n=" + std::to_string(e.n) + " " + to_prufer_line(e.tree);
}

}  // namespace

int main() {
  Gate gate;
  constexpr int kMaxN = 12;
  constexpr int kCatalogN = 14;

  // shared universe: every tree with 3 <= n <= 12, solved exactly
  std::vector<Entry> universe;
  for (int n = 3; n <= kMaxN; ++n)
    for (Tree& t : all_trees(n).items) {
      Entry e;
      e.canon = canonical_form(t);
      auto m = metrics(t);
      e.n = n;
      e.l = m.l;
      e.s = m.s;
      e.gamma = gamma_d2_brute(t).gamma_d2;
      e.tree = std::move(t);
      universe.push_back(std::move(e));
    }

  FamilyCatalog t1cat = enumerate_family(FamilyTag::T1, kCatalogN);
  FamilyCatalog t2cat = enumerate_family(FamilyTag::T2, kCatalogN);

  gate.run("base-values", [&] {
    if (gamma_d2_brute(path_graph(2)).gamma_d2 != 1) return false;
    if (gamma_d2_brute(path_graph(3)).gamma_d2 != 1) return false;
    if (gamma_d2_brute(path_graph(4)).gamma_d2 != 2) return false;
    if (gamma_d2_brute(path_graph(5)).gamma_d2 != 2) return false;
    if (gamma_d2_brute(path_graph(8)).gamma_d2 != 3) return false;
    for (int k = 2; k <= 8; ++k)
      if (gamma_d2_brute(star_graph(k)).gamma_d2 != 1) return false;
    for (int a = 1; a <= 4; ++a)
      for (int b = a; b <= 4; ++b)
        if (gamma_d2_brute(double_star_graph(a, b)).gamma_d2 != 2) return false;
    return true;
  });

  gate.run("lower-bound-on-all-trees-to-12", [&] {
    for (const Entry& e : universe)
      if (4 * e.gamma < e.n - e.l + 3) {
        gate.note = "4*gamma < n-l+3 at " + describe(e);
        return false;
      }
    return true;
  });

  gate.run("upper-bounds-on-all-trees-to-12", [&] {
    for (const Entry& e : universe) {
      if (4 * e.gamma > e.n + e.l + e.s) {
        gate.note = "4*gamma > n+l+s at " + describe(e);
        return false;
      }
      if (4 * e.gamma > e.n + 3 * e.s - e.l) {
        gate.note = "4*gamma > n+3s-l at " + describe(e);
        return false;
      }
    }
    return true;
  });

  gate.run("equality-characterizations-to-12", [&] {
    // literal set equality against catalogs enumerated to exactly 12
    FamilyCatalog t1 = enumerate_family(FamilyTag::T1, kMaxN);
    FamilyCatalog t2 = enumerate_family(FamilyTag::T2, kMaxN);
    std::set<std::pair<int, std::string>> t1proj, t2proj, lower_eq_set, upper_eq_set;
    for (const auto& [n, forms] : t1.unlabeled)
      for (const auto& canon : forms) t1proj.insert({n, canon});
    for (const auto& [n, forms] : t2.unlabeled)
      for (const auto& canon : forms) t2proj.insert({n, canon});
    for (const Entry& e : universe) {
      if (4 * e.gamma == e.n - e.l + 3) lower_eq_set.insert({e.n, e.canon});
      if (4 * e.gamma == e.n + e.l + e.s) upper_eq_set.insert({e.n, e.canon});
    }
    if (lower_eq_set != t1proj) {
      gate.note = "lower-equality trees and the T1 projection differ (" +
                  std::to_string(lower_eq_set.size()) + " vs " + std::to_string(t1proj.size()) +
                  ")";
      return false;
    }
    if (upper_eq_set != t2proj) {
      gate.note = "upper-equality trees and the T2 projection differ (" +
                  std::to_string(upper_eq_set.size()) + " vs " + std::to_string(t2proj.size()) +
                  ")";
      return false;
    }
    return true;
  });

  gate.run("unique-minimum-set-of-t1-members-to-12", [&] {
    for (const LabeledTree* lt : t1cat.all()) {
      if (lt->tree.n > kMaxN) continue;
      auto mins = enumerate_min_2dd_sets(lt->tree);
      if (mins.size() != 1 || mins[0] != sa_set(*lt)) {
        gate.note = "n=" + std::to_string(lt->tree.n) + ", " +
                    std::to_string(mins.size()) + " minimum sets";
        return false;
      }
    }
    return true;
  });

  gate.run("t2-member-value-to-14", [&] {
    for (const LabeledTree* lt : t2cat.all()) {
      auto m = metrics(lt->tree);
      if (4 * gamma_d2_brute(lt->tree).gamma_d2 != lt->tree.n + m.l + m.s) {
        gate.note = "n=" + std::to_string(lt->tree.n);
        return false;
      }
    }
    return true;
  });

  gate.run("t2-near-witnesses-to-14", [&] {
    for (const LabeledTree* lt : t2cat.all())
      for (int leaf : metrics(lt->tree).leaves) {
        auto w = near_witness(*lt, leaf);
        if (!w) {
          gate.note = "n=" + std::to_string(lt->tree.n) + " leaf " + std::to_string(leaf);
          return false;
        }
        auto m = metrics(lt->tree);
        if (static_cast<int>(w->size()) != (lt->tree.n + m.l + m.s) / 4 - 1) {
          gate.note = "wrong witness size at n=" + std::to_string(lt->tree.n);
          return false;
        }
        // must hold the non-leaf neighbor of the leaf's support
        int support = lt->tree.adj[leaf][0];
        bool anchored = false;
        for (int u : lt->tree.adj[support])
          if (u != leaf && lt->tree.degree(u) > 1)
            for (int x : *w)
              if (x == u) anchored = true;
        if (!anchored) {
          gate.note = "witness misses the anchor at n=" + std::to_string(lt->tree.n);
          return false;
        }
      }
    return true;
  });

  gate.run("leafless-minimum-sets-to-12", [&] {
    for (const Entry& e : universe) {
      auto w = leafless_min_witness(e.tree);
      if (!w || static_cast<int>(w->size()) != e.gamma || !is_2dd_set(e.tree, *w)) {
        gate.note = "no leafless minimum set at " + describe(e);
        return false;
      }
      for (int v : *w)
        if (e.tree.degree(v) == 1) {
          gate.note = "witness touches a leaf at " + describe(e);
          return false;
        }
      // every leaf-free minimum set must contain every degree-2 support
      auto m = metrics(e.tree);
      std::vector<int> deg2_supports;
      for (int v : m.supports)
        if (e.tree.degree(v) == 2) deg2_supports.push_back(v);
      for (const auto& set : enumerate_min_2dd_sets(e.tree)) {
        bool leafless = true;
        for (int v : set)
          if (e.tree.degree(v) == 1) leafless = false;
        if (!leafless) continue;
        for (int v : deg2_supports) {
          bool found = false;
          for (int u : set)
            if (u == v) found = true;
          if (!found) {
            gate.note = "degree-2 support outside a leafless minimum set at " + describe(e);
            return false;
          }
        }
      }
    }
    return true;
  });

  gate.run("structural-audits-to-14", [&] {
    for (const LabeledTree* lt : t1cat.all())
      if (!audit_T1(*lt).ok()) {
        gate.note = "T1 n=" + std::to_string(lt->tree.n) + ": " + audit_T1(*lt).violations[0];
        return false;
      }
    for (const LabeledTree* lt : t2cat.all())
      if (!audit_T2(*lt).ok()) {
        gate.note = "T2 n=" + std::to_string(lt->tree.n) + ": " + audit_T2(*lt).violations[0];
        return false;
      }
    return true;
  });

  gate.run("solver-cross-validation", [&] {
    for (const Entry& e : universe) {
      SolveResult bnb = gamma_d2_bnb(e.tree);
      if (bnb.gamma_d2 != e.gamma) {
        gate.note = "brute/bnb mismatch at " + describe(e);
        return false;
      }
      if (!check_2dd_set(e.tree, bnb.witness).ok) return false;
    }
    for (int i = 0; i < 1000; ++i) {
      Tree t = random_tree(13 + i % 8, static_cast<std::uint64_t>(i));
      SolveResult brute = gamma_d2_brute(t, 20);
      SolveResult bnb = gamma_d2_bnb(t);
      if (brute.gamma_d2 != bnb.gamma_d2) {
        gate.note = "mismatch on random tree, seed " + std::to_string(i);
        return false;
      }
      if (!check_2dd_set(t, brute.witness).ok || !check_2dd_set(t, bnb.witness).ok) {
        gate.note = "invalid witness on random tree, seed " + std::to_string(i);
        return false;
      }
    }
    return true;
  });

  gate.run("disjunctive-at-most-classic-to-12", [&] {
    for (const Entry& e : universe)
      if (e.gamma > gamma_classic_brute(e.tree)) {
        gate.note = "gamma_d2 > gamma at " + describe(e);
        return false;
      }
    return true;
  });

  gate.run("generator-cross-validation", [&] {
    for (int n = 1; n <= 12; ++n) {
      std::size_t count = all_trees(n).items.size();
      if (count != free_tree_count(n)) {
        gate.note = "count mismatch with the recurrence at n=" + std::to_string(n);
        return false;
      }
    }
    for (int n = 1; n <= 9; ++n) {
      std::set<std::string> canon;
      for (const Tree& t : all_trees(n).items) canon.insert(canonical_form(t));
      if (canon != prufer_census(n)) {
        gate.note = "class mismatch with the labeled census at n=" + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  std::printf("%d/12 criteria passed\n", 12 - gate.failed);
  return gate.failed == 0 ? 0 : 1;
}
