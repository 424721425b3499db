#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "disjdom/tree.hpp"

namespace disjdom {

struct TreeStream {
  int n = 0;
  std::vector<Tree> items;  // one per isomorphism class, ascending canonical string
};

// Leaf-extension generator with canonical-form dedup; 1 <= n <= cap.
TreeStream all_trees(int n, int cap = 14);

// Decodes every Pruefer sequence of length n-2 and collects the distinct
// canonical forms. Exhaustive and slow: n <= 9.
std::set<std::string> prufer_census(int n);

// Counting oracle independent of both generators: rooted-tree counts via the
// Euler-transform recurrence, free-tree counts via the classical dissimilarity
// identity t_n = r_n - ((r^2)_n - [n even] r_{n/2}) / 2.
std::vector<std::uint64_t> rooted_tree_counts(int n_max);
std::uint64_t free_tree_count(int n);

// Uniform over labeled trees through a random Pruefer sequence; deterministic
// for a fixed (n, seed). n >= 2.
Tree random_tree(int n, std::uint64_t seed);

}  // namespace disjdom
