#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "disjdom/tree.hpp"

namespace testutil {

inline disjdom::Tree make_path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return disjdom::make_tree(n, e);
}

inline disjdom::Tree make_star(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return disjdom::make_tree(leaves + 1, e);
}

// centers 0-1, a leaves on 0, b leaves on 1
inline disjdom::Tree make_double_star(int a, int b) {
  std::vector<std::pair<int, int>> e{{0, 1}};
  int next = 2;
  for (int i = 0; i < a; ++i) e.push_back({0, next++});
  for (int i = 0; i < b; ++i) e.push_back({1, next++});
  return disjdom::make_tree(next, e);
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(DISJDOM_TEST_DATA) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline disjdom::Tree relabel(const disjdom::Tree& t, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : t.edges()) e.push_back({perm[u], perm[v]});
  return disjdom::make_tree(t.n, e);
}

inline std::vector<int> random_perm(int n, std::uint64_t seed) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::mt19937_64 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace testutil
