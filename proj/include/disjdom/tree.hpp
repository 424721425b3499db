#pragma once

#include <string>
#include <utility>
#include <vector>

#include "disjdom/errors.hpp"

namespace disjdom {

// Tree on n vertices, 0-indexed, adjacency lists sorted ascending.
// Built through make_tree, which rejects anything that is not a tree.
struct Tree {
  int n = 0;
  std::vector<std::vector<int>> adj;

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool has_edge(int u, int v) const;
  // edges as (u, v) with u < v, sorted lexicographically
  std::vector<std::pair<int, int>> edges() const;
};

Tree make_tree(int n, const std::vector<std::pair<int, int>>& edges);

// Edge-list format: line 1 holds n, then n-1 lines "u v".
Tree parse_tree(const std::string& text);
// Pruefer format: one line "p:" followed by comma-separated entries ("p:" alone means P2).
Tree parse_prufer_line(const std::string& text);
// Dispatches on the "p:" sentinel.
Tree parse_input(const std::string& text);

std::string to_edge_list(const Tree& t);
std::string to_prufer_line(const Tree& t);

Tree from_prufer(const std::vector<int>& seq);
std::vector<int> to_prufer(const Tree& t);

std::vector<int> distances_from(const Tree& t, int v);
std::vector<std::vector<int>> distance_matrix(const Tree& t);

struct TreeMetrics {
  std::vector<int> leaves;
  std::vector<int> supports;  // vertices adjacent to at least one leaf
  int l = 0;
  int s = 0;
  int diameter = 0;
};

// Reporting convention for n = 1: the lone vertex counts as a leaf (l = 1, s = 0).
TreeMetrics metrics(const Tree& t);

}  // namespace disjdom
