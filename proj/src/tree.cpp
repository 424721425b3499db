#include "disjdom/tree.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <queue>
#include <set>
#include <string_view>

namespace disjdom {

namespace {

int parse_int(std::string_view tok, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw MalformedLineError(std::string("expected an integer for ") + what + ", got \"" +
                             std::string(tok) + "\"");
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  while (!lines.empty() && split_ws(lines.back()).empty()) lines.pop_back();
  return lines;
}

}  // namespace

bool Tree::has_edge(int u, int v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::vector<std::pair<int, int>> Tree::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(n > 0 ? n - 1 : 0);
  for (int u = 0; u < n; ++u)
    for (int v : adj[u])
      if (v > u) out.emplace_back(u, v);
  return out;
}

Tree make_tree(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw NotATreeError("a tree needs at least one vertex");
  if (static_cast<int>(edges.size()) != n - 1)
    throw NotATreeError("a tree on " + std::to_string(n) + " vertices needs exactly " +
                        std::to_string(n - 1) + " edges, got " + std::to_string(edges.size()));
  Tree t;
  t.n = n;
  t.adj.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw BadIndexError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                          ") out of range for n = " + std::to_string(n));
    if (u == v) throw NotATreeError("self-loop at vertex " + std::to_string(u));
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw NotATreeError("duplicate edge (" + std::to_string(key.first) + ", " +
                          std::to_string(key.second) + ")");
    t.adj[u].push_back(v);
    t.adj[v].push_back(u);
  }
  for (auto& nb : t.adj) std::sort(nb.begin(), nb.end());

  // n-1 distinct edges + connectivity == tree
  std::vector<char> vis(n, 0);
  std::queue<int> q;
  q.push(0);
  vis[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : t.adj[u])
      if (!vis[v]) {
        vis[v] = 1;
        ++reached;
        q.push(v);
      }
  }
  if (reached != n) throw NotATreeError("edge list is not connected");
  return t;
}

Tree parse_tree(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw MalformedLineError("empty input");
  auto head = split_ws(lines[0]);
  if (head.size() != 1)
    throw MalformedLineError("first line must hold the vertex count alone");
  int n = parse_int(head[0], "vertex count");
  if (n < 1) throw MalformedLineError("vertex count must be positive");
  if (static_cast<int>(lines.size()) > n)
    throw MalformedLineError("unexpected extra line: \"" + std::string(lines[n]) + "\"");
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto toks = split_ws(lines[i]);
    if (toks.size() != 2)
      throw MalformedLineError("edge line must hold exactly two endpoints, got \"" +
                               std::string(lines[i]) + "\"");
    int u = parse_int(toks[0], "edge endpoint");
    int v = parse_int(toks[1], "edge endpoint");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw BadIndexError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                          ") out of range for n = " + std::to_string(n));
    edges.emplace_back(u, v);
  }
  return make_tree(n, edges);
}

Tree parse_prufer_line(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw MalformedLineError("empty input");
  if (lines.size() != 1)
    throw MalformedLineError("Pruefer input must be a single line");
  std::string_view line = lines[0];
  size_t at = 0;
  while (at < line.size() && (line[at] == ' ' || line[at] == '\t')) ++at;
  line.remove_prefix(at);
  if (line.substr(0, 2) != "p:")
    throw MalformedLineError("Pruefer input must start with the \"p:\" sentinel");
  line.remove_prefix(2);
  std::vector<int> seq;
  if (!split_ws(line).empty()) {
    size_t start = 0;
    while (start <= line.size()) {
      size_t end = line.find(',', start);
      if (end == std::string_view::npos) end = line.size();
      auto toks = split_ws(line.substr(start, end - start));
      if (toks.size() != 1)
        throw MalformedLineError("bad Pruefer entry \"" +
                                 std::string(line.substr(start, end - start)) + "\"");
      seq.push_back(parse_int(toks[0], "Pruefer entry"));
      if (end == line.size()) break;
      start = end + 1;
    }
  }
  return from_prufer(seq);
}

Tree parse_input(const std::string& text) {
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == 'p' && i + 1 < text.size() && text[i + 1] == ':') return parse_prufer_line(text);
    break;
  }
  return parse_tree(text);
}

std::string to_edge_list(const Tree& t) {
  std::string out = std::to_string(t.n);
  out += '\n';
  for (auto [u, v] : t.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::string to_prufer_line(const Tree& t) {
  auto seq = to_prufer(t);
  std::string out = "p:";
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(seq[i]);
  }
  out += '\n';
  return out;
}

Tree from_prufer(const std::vector<int>& seq) {
  int n = static_cast<int>(seq.size()) + 2;
  for (int a : seq)
    if (a < 0 || a >= n)
      throw OutOfRangeEntryError("Pruefer entry " + std::to_string(a) +
                                 " out of range for n = " + std::to_string(n));
  std::vector<int> deg(n, 1);
  for (int a : seq) ++deg[a];
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push(v);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int a : seq) {
    int v = leaves.top();
    leaves.pop();
    edges.emplace_back(v, a);
    if (--deg[a] == 1) leaves.push(a);
  }
  int u = leaves.top();
  leaves.pop();
  int w = leaves.top();
  edges.emplace_back(u, w);
  return make_tree(n, edges);
}

std::vector<int> to_prufer(const Tree& t) {
  if (t.n < 2) throw OrderTooSmallError("Pruefer code needs n >= 2");
  std::vector<int> deg(t.n);
  for (int v = 0; v < t.n; ++v) deg[v] = t.degree(v);
  std::vector<char> removed(t.n, 0);
  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 0; v < t.n; ++v)
    if (deg[v] == 1) leaves.push(v);
  std::vector<int> seq;
  seq.reserve(t.n - 2);
  for (int step = 0; step < t.n - 2; ++step) {
    int v = leaves.top();
    leaves.pop();
    removed[v] = 1;
    int parent = -1;
    for (int u : t.adj[v])
      if (!removed[u]) {
        parent = u;
        break;
      }
    seq.push_back(parent);
    if (--deg[parent] == 1) leaves.push(parent);
  }
  return seq;
}

std::vector<int> distances_from(const Tree& t, int v) {
  if (v < 0 || v >= t.n) throw BadIndexError("vertex " + std::to_string(v) + " out of range");
  std::vector<int> dist(t.n, -1);
  std::queue<int> q;
  dist[v] = 0;
  q.push(v);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : t.adj[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

std::vector<std::vector<int>> distance_matrix(const Tree& t) {
  std::vector<std::vector<int>> dm(t.n);
  for (int v = 0; v < t.n; ++v) dm[v] = distances_from(t, v);
  return dm;
}

TreeMetrics metrics(const Tree& t) {
  TreeMetrics m;
  if (t.n == 1) {
    m.leaves = {0};
    m.l = 1;
    m.s = 0;
    m.diameter = 0;
    return m;
  }
  std::vector<char> is_leaf(t.n, 0);
  for (int v = 0; v < t.n; ++v)
    if (t.degree(v) == 1) {
      is_leaf[v] = 1;
      m.leaves.push_back(v);
    }
  for (int v = 0; v < t.n; ++v)
    for (int u : t.adj[v])
      if (is_leaf[u]) {
        m.supports.push_back(v);
        break;
      }
  m.l = static_cast<int>(m.leaves.size());
  m.s = static_cast<int>(m.supports.size());
  // double BFS gives the exact diameter on a tree
  auto d0 = distances_from(t, 0);
  int a = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
  auto da = distances_from(t, a);
  m.diameter = *std::max_element(da.begin(), da.end());
  return m;
}

}  // namespace disjdom
