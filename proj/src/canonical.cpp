#include "disjdom/canonical.hpp"

#include <algorithm>

namespace disjdom {

namespace {

// BFS order from root plus parent pointers; children are processed by
// walking the order backwards.
void bfs_order(const Tree& t, int root, std::vector<int>& order, std::vector<int>& parent) {
  order.clear();
  order.reserve(t.n);
  parent.assign(t.n, -1);
  order.push_back(root);
  parent[root] = root;
  for (size_t i = 0; i < order.size(); ++i) {
    int u = order[i];
    for (int v : t.adj[u])
      if (parent[v] < 0) {
        parent[v] = u;
        order.push_back(v);
      }
  }
  parent[root] = -1;
}

void check_status(const Tree& t, const std::vector<char>& status) {
  if (static_cast<int>(status.size()) != t.n)
    throw MissingStatusError("status vector has " + std::to_string(status.size()) +
                             " entries for n = " + std::to_string(t.n));
  for (char c : status)
    if (c != 'A' && c != 'B' && c != 'C' && c != 'D')
      throw MissingStatusError(std::string("invalid status letter '") + c + "'");
}

std::string min_over_centroids(const Tree& t, const std::vector<std::string>* ann) {
  std::string best;
  for (int c : centroids(t)) {
    std::string s = ahu_encode(t, c, ann);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

}  // namespace

std::vector<int> centroids(const Tree& t) {
  if (t.n == 1) return {0};
  std::vector<int> order, parent;
  bfs_order(t, 0, order, parent);
  std::vector<int> size(t.n, 1);
  for (size_t i = order.size(); i-- > 1;) size[parent[order[i]]] += size[order[i]];
  std::vector<int> maxcomp(t.n, 0);
  for (int v = 0; v < t.n; ++v) {
    for (int u : t.adj[v])
      if (u != parent[v]) maxcomp[v] = std::max(maxcomp[v], size[u]);
    if (v != order[0]) maxcomp[v] = std::max(maxcomp[v], t.n - size[v]);
  }
  int best = *std::min_element(maxcomp.begin(), maxcomp.end());
  std::vector<int> out;
  for (int v = 0; v < t.n; ++v)
    if (maxcomp[v] == best) out.push_back(v);
  return out;
}

std::string ahu_encode(const Tree& t, int root, const std::vector<std::string>* ann) {
  if (root < 0 || root >= t.n) throw BadIndexError("root out of range");
  std::vector<int> order, parent;
  bfs_order(t, root, order, parent);
  std::vector<std::string> label(t.n);
  std::vector<std::string> kids;
  for (size_t i = order.size(); i-- > 0;) {
    int v = order[i];
    kids.clear();
    for (int u : t.adj[v])
      if (u != parent[v]) kids.push_back(std::move(label[u]));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    if (ann) s += (*ann)[v];
    for (auto& k : kids) s += k;
    s += ')';
    label[v] = std::move(s);
  }
  return label[root];
}

std::string canonical_form(const Tree& t) { return min_over_centroids(t, nullptr); }

std::string labeled_canonical_form(const Tree& t, const std::vector<char>& status) {
  check_status(t, status);
  std::vector<std::string> ann(t.n);
  for (int v = 0; v < t.n; ++v) ann[v] = std::string(1, status[v]);
  return min_over_centroids(t, &ann);
}

std::string path_labeled_canonical_form(const Tree& t, const std::vector<char>& status,
                                        const std::optional<std::array<int, 4>>& basic_path) {
  check_status(t, status);
  if (!basic_path) return labeled_canonical_form(t, status);
  for (int v : *basic_path)
    if (v < 0 || v >= t.n) throw BadIndexError("basic path vertex out of range");
  std::string best;
  // the path read forwards and backwards names the same marked subgraph
  for (int orient = 0; orient < 2; ++orient) {
    std::vector<std::string> ann(t.n);
    for (int v = 0; v < t.n; ++v) ann[v] = std::string(1, status[v]);
    for (int i = 0; i < 4; ++i) {
      int v = (*basic_path)[i];
      ann[v] += static_cast<char>('1' + (orient ? 3 - i : i));
    }
    std::string s = min_over_centroids(t, &ann);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

}  // namespace disjdom
