#include "disjdom/enumeration.hpp"

#include <map>
#include <random>

#include "disjdom/canonical.hpp"

namespace disjdom {

TreeStream all_trees(int n, int cap) {
  if (n < 1) throw PreconditionViolatedError("tree enumeration needs n >= 1");
  if (n > cap)
    throw CapExceededError("n = " + std::to_string(n) + " exceeds enumeration cap " +
                           std::to_string(cap));
  std::map<std::string, Tree> cur;
  cur.emplace(canonical_form(make_tree(1, {})), make_tree(1, {}));
  for (int m = 2; m <= n; ++m) {
    std::map<std::string, Tree> next;
    for (const auto& [canon, t] : cur) {
      auto edges = t.edges();
      for (int v = 0; v < m - 1; ++v) {
        edges.emplace_back(v, m - 1);
        Tree grown = make_tree(m, edges);
        next.emplace(canonical_form(grown), std::move(grown));
        edges.pop_back();
      }
    }
    cur = std::move(next);
  }
  TreeStream out;
  out.n = n;
  for (auto& [canon, t] : cur) out.items.push_back(std::move(t));
  return out;
}

std::set<std::string> prufer_census(int n) {
  if (n < 1) throw PreconditionViolatedError("census needs n >= 1");
  if (n > 9)
    throw CapExceededError("Pruefer census decodes n^(n-2) sequences; capped at n = 9, got " +
                           std::to_string(n));
  std::set<std::string> canon;
  if (n <= 2) {
    canon.insert(canonical_form(n == 1 ? make_tree(1, {}) : make_tree(2, {{0, 1}})));
    return canon;
  }
  std::vector<int> seq(n - 2, 0);
  while (true) {
    canon.insert(canonical_form(from_prufer(seq)));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return canon;
}

std::vector<std::uint64_t> rooted_tree_counts(int n_max) {
  // r[n] rooted trees on n vertices: (n-1) r[n] = sum_{j<n} (sum_{d|j} d r[d]) r[n-j]
  std::vector<std::uint64_t> r(n_max + 1, 0);
  if (n_max >= 1) r[1] = 1;
  std::vector<std::uint64_t> c(n_max + 1, 0);  // c[j] = sum over divisors d of j of d*r[d]
  for (int n = 1; n < n_max; ++n) {
    for (int k = n; k <= n_max; k += n) c[k] += static_cast<std::uint64_t>(n) * r[n];
    std::uint64_t acc = 0;
    for (int j = 1; j <= n; ++j) acc += c[j] * r[n + 1 - j];
    r[n + 1] = acc / n;
  }
  return r;
}

std::uint64_t free_tree_count(int n) {
  if (n < 1) throw PreconditionViolatedError("free tree count needs n >= 1");
  auto r = rooted_tree_counts(n);
  std::uint64_t pairs = 0;
  for (int i = 1; i < n; ++i) pairs += r[i] * r[n - i];
  std::uint64_t half = pairs;
  if (n % 2 == 0) half -= r[n / 2];
  return r[n] - half / 2;
}

Tree random_tree(int n, std::uint64_t seed) {
  if (n < 2) throw OrderTooSmallError("random tree generation needs n >= 2");
  std::mt19937_64 rng(seed);
  // rejection sampling keeps the draw unbiased and identical on every platform
  auto draw = [&](std::uint64_t bound) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = rng();
    } while (x >= limit);
    return x % bound;
  };
  std::vector<int> seq(n - 2);
  for (auto& a : seq) a = static_cast<int>(draw(static_cast<std::uint64_t>(n)));
  return from_prufer(seq);
}

}  // namespace disjdom
