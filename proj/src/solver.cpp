#include "disjdom/solver.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdlib>

namespace disjdom {

namespace {

struct Masks {
  int n = 0;
  std::vector<std::uint64_t> closed;  // N[v]
  std::vector<std::uint64_t> dist2;   // vertices at distance exactly 2
};

Masks build_masks(const Tree& t) {
  if (t.n > 64) throw CapExceededError("solver handles at most 64 vertices, got " +
                                       std::to_string(t.n));
  Masks m;
  m.n = t.n;
  m.closed.assign(t.n, 0);
  m.dist2.assign(t.n, 0);
  auto dm = distance_matrix(t);
  for (int v = 0; v < t.n; ++v) {
    m.closed[v] = 1ULL << v;
    for (int u = 0; u < t.n; ++u) {
      if (dm[v][u] == 1) m.closed[v] |= 1ULL << u;
      if (dm[v][u] == 2) m.dist2[v] |= 1ULL << u;
    }
  }
  return m;
}

// v is 2-dominated disjunctively: in D, adjacent to D, or two D-vertices at
// distance exactly 2.
inline bool covered(const Masks& m, int v, std::uint64_t D) {
  if (m.closed[v] & D) return true;
  return std::popcount(m.dist2[v] & D) >= 2;
}

inline bool all_covered(const Masks& m, std::uint64_t D) {
  for (int v = 0; v < m.n; ++v)
    if (!covered(m, v, D)) return false;
  return true;
}

std::uint64_t set_to_mask(const Tree& t, const std::vector<int>& set) {
  if (t.n > 64) throw CapExceededError("solver handles at most 64 vertices");
  std::uint64_t D = 0;
  for (int v : set) {
    if (v < 0 || v >= t.n)
      throw BadIndexError("set member " + std::to_string(v) + " out of range for n = " +
                          std::to_string(t.n));
    D |= 1ULL << v;
  }
  return D;
}

std::vector<int> mask_to_set(std::uint64_t D) {
  std::vector<int> out;
  while (D) {
    int v = std::countr_zero(D);
    out.push_back(v);
    D &= D - 1;
  }
  return out;
}

// Lexicographic k-combinations of {0..n-1}; calls f with the index vector,
// stops early when f returns true.
template <typename F>
bool for_each_combination(int n, int k, F&& f) {
  if (k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (f(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

int resolve_cap(int cap) {
  if (cap >= 0) return cap;
  return brute_force_cap();
}

struct BnbSearch {
  const Masks& m;
  std::uint64_t all;
  std::uint64_t best_mask = 0;
  int best_size = 0;
  std::uint64_t nodes = 0;

  explicit BnbSearch(const Masks& masks) : m(masks) {
    all = (m.n == 64) ? ~0ULL : ((1ULL << m.n) - 1);
  }

  // Disjoint "help ball" packing: uncovered vertices whose candidate sets are
  // pairwise disjoint each force one more distinct member of D.
  int packing_bound(std::uint64_t D, std::uint64_t forbidden,
                    const std::vector<int>& uncovered_list) const {
    std::uint64_t used = 0;
    int cnt = 0;
    for (int v : uncovered_list) {
      std::uint64_t help = (m.closed[v] | m.dist2[v]) & ~D & ~forbidden;
      if (help & used) continue;
      used |= help;
      ++cnt;
    }
    return cnt;
  }

  void run(std::uint64_t D, std::uint64_t forbidden, int count) {
    ++nodes;
    std::vector<int> uncovered_list;
    for (int v = 0; v < m.n; ++v)
      if (!covered(m, v, D)) uncovered_list.push_back(v);
    if (uncovered_list.empty()) {
      if (count < best_size) {
        best_size = count;
        best_mask = D;
      }
      return;
    }
    // pick the uncovered vertex with fewest remaining options
    int pick = -1;
    int pick_opts = INT_MAX;
    std::uint64_t pick_cands = 0;
    for (int v : uncovered_list) {
      std::uint64_t cands = (m.closed[v] | m.dist2[v]) & ~D & ~forbidden;
      int opts = std::popcount(cands);
      if (opts == 0) return;  // v can never be covered on this branch
      if (opts < pick_opts) {
        pick_opts = opts;
        pick = v;
        pick_cands = cands;
      }
    }
    if (count + packing_bound(D, forbidden, uncovered_list) >= best_size) return;
    // branch i takes candidate u_i and bans u_1..u_{i-1}, partitioning the
    // remaining solution space
    std::uint64_t cands = pick_cands;
    std::uint64_t banned = forbidden;
    while (cands) {
      int u = std::countr_zero(cands);
      cands &= cands - 1;
      run(D | (1ULL << u), banned, count + 1);
      banned |= 1ULL << u;
    }
  }
};

std::uint64_t greedy_2dd(const Masks& m) {
  std::uint64_t D = 0;
  while (!all_covered(m, D)) {
    int best = -1, best_gain = -1;
    for (int u = 0; u < m.n; ++u) {
      if (D >> u & 1) continue;
      std::uint64_t Du = D | (1ULL << u);
      int gain = 0;
      for (int v = 0; v < m.n; ++v)
        if (!covered(m, v, D) && covered(m, v, Du)) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = u;
      }
    }
    D |= 1ULL << best;
  }
  return D;
}

}  // namespace

const char* coverage_name(Coverage c) {
  switch (c) {
    case Coverage::IN_SET: return "IN_SET";
    case Coverage::ADJACENT: return "ADJACENT";
    case Coverage::TWO_AT_DIST2: return "TWO_AT_DIST2";
    case Coverage::UNCOVERED: return "UNCOVERED";
  }
  return "?";
}

const char* method_name(SolveMethod m) {
  return m == SolveMethod::Brute ? "brute" : "bnb";
}

CheckResult check_2dd_set(const Tree& t, const std::vector<int>& set) {
  Masks m = build_masks(t);
  std::uint64_t D = set_to_mask(t, set);
  CheckResult r;
  r.certificate.member_set = mask_to_set(D);
  r.certificate.per_vertex.assign(t.n, {});
  for (int v = 0; v < t.n; ++v) {
    auto& just = r.certificate.per_vertex[v];
    if (D >> v & 1) {
      just.tag = Coverage::IN_SET;
      continue;
    }
    std::uint64_t nb = m.closed[v] & D;
    if (nb) {
      just.tag = Coverage::ADJACENT;
      just.witnesses = {std::countr_zero(nb)};
      continue;
    }
    std::uint64_t d2 = m.dist2[v] & D;
    if (std::popcount(d2) >= 2) {
      just.tag = Coverage::TWO_AT_DIST2;
      int a = std::countr_zero(d2);
      d2 &= d2 - 1;
      int b = std::countr_zero(d2);
      just.witnesses = {a, b};
      continue;
    }
    just.tag = Coverage::UNCOVERED;
    r.uncovered.push_back(v);
  }
  r.ok = r.uncovered.empty();
  return r;
}

bool is_2dd_set(const Tree& t, const std::vector<int>& set) {
  Masks m = build_masks(t);
  return all_covered(m, set_to_mask(t, set));
}

bool is_dominating_set(const Tree& t, const std::vector<int>& set) {
  Masks m = build_masks(t);
  std::uint64_t D = set_to_mask(t, set);
  for (int v = 0; v < t.n; ++v)
    if (!(m.closed[v] & D) && !(D >> v & 1)) return false;
  return true;
}

int brute_force_cap() {
  if (const char* env = std::getenv("DISJDOM_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v <= 64) return static_cast<int>(v);
  }
  return 20;
}

SolveResult gamma_d2_brute(const Tree& t, int cap) {
  cap = resolve_cap(cap);
  if (t.n > cap)
    throw SizeCapExceededError("n = " + std::to_string(t.n) + " exceeds brute-force cap " +
                               std::to_string(cap) + " (raise DISJDOM_CAP or use --cap)");
  Masks m = build_masks(t);
  SolveResult r;
  r.method = SolveMethod::Brute;
  // the whole vertex set always works, so some k <= n succeeds
  for (int k = 1; k <= t.n; ++k) {
    bool found = for_each_combination(t.n, k, [&](const std::vector<int>& idx) {
      ++r.nodes_explored;
      std::uint64_t D = 0;
      for (int v : idx) D |= 1ULL << v;
      if (!all_covered(m, D)) return false;
      r.gamma_d2 = k;
      r.witness = idx;
      return true;
    });
    if (found) return r;
  }
  throw Error("unreachable: V itself is a 2DD-set");
}

SolveResult gamma_d2_bnb(const Tree& t) {
  Masks m = build_masks(t);
  BnbSearch search(m);
  std::uint64_t seed = greedy_2dd(m);
  search.best_mask = seed;
  search.best_size = std::popcount(seed);
  search.run(0, 0, 0);
  SolveResult r;
  r.method = SolveMethod::BranchAndBound;
  r.gamma_d2 = search.best_size;
  r.witness = mask_to_set(search.best_mask);
  r.nodes_explored = search.nodes;
  return r;
}

std::vector<std::vector<int>> enumerate_min_2dd_sets(const Tree& t, int cap) {
  int gamma = gamma_d2_brute(t, cap).gamma_d2;
  Masks m = build_masks(t);
  std::vector<std::vector<int>> out;
  for_each_combination(t.n, gamma, [&](const std::vector<int>& idx) {
    std::uint64_t D = 0;
    for (int v : idx) D |= 1ULL << v;
    if (all_covered(m, D)) out.push_back(idx);
    return false;
  });
  return out;
}

std::optional<std::vector<int>> leafless_min_witness(const Tree& t, int cap) {
  if (t.n < 3) throw OrderTooSmallError("leafless witness needs n >= 3, got " +
                                        std::to_string(t.n));
  int gamma = gamma_d2_brute(t, cap).gamma_d2;
  Masks m = build_masks(t);
  std::vector<int> inner;
  for (int v = 0; v < t.n; ++v)
    if (t.degree(v) > 1) inner.push_back(v);
  if (gamma > static_cast<int>(inner.size())) return std::nullopt;
  std::optional<std::vector<int>> result;
  for_each_combination(static_cast<int>(inner.size()), gamma, [&](const std::vector<int>& idx) {
    std::uint64_t D = 0;
    for (int i : idx) D |= 1ULL << inner[i];
    if (!all_covered(m, D)) return false;
    std::vector<int> set;
    for (int i : idx) set.push_back(inner[i]);
    result = std::move(set);
    return true;
  });
  return result;
}

int gamma_classic_brute(const Tree& t, int cap) {
  cap = resolve_cap(cap);
  if (t.n > cap)
    throw SizeCapExceededError("n = " + std::to_string(t.n) + " exceeds brute-force cap " +
                               std::to_string(cap));
  Masks m = build_masks(t);
  for (int k = 1; k <= t.n; ++k) {
    bool found = for_each_combination(t.n, k, [&](const std::vector<int>& idx) {
      std::uint64_t D = 0;
      for (int v : idx) D |= 1ULL << v;
      for (int v = 0; v < t.n; ++v)
        if (!(D >> v & 1) && !(m.closed[v] & D)) return false;
      return true;
    });
    if (found) return k;
  }
  throw Error("unreachable: V itself dominates");
}

}  // namespace disjdom
