#include "disjdom/family.hpp"

#include <algorithm>
#include <deque>
#include <queue>

#include "json.hpp"

#include "disjdom/solver.hpp"

namespace disjdom {

namespace {

std::vector<char> status_chars(const LabeledTree& lt) {
  std::vector<char> out(lt.status.size());
  for (size_t i = 0; i < lt.status.size(); ++i) out[i] = status_char(lt.status[i]);
  return out;
}

bool is_support(const Tree& t, int v) {
  for (int u : t.adj[v])
    if (t.degree(u) == 1) return true;
  return false;
}

Status sta(const LabeledTree& lt, int v) { return lt.status[v]; }

void check_vertex(const LabeledTree& lt, int v) {
  if (v < 0 || v >= lt.tree.n)
    throw BadIndexError("vertex " + std::to_string(v) + " out of range for n = " +
                        std::to_string(lt.tree.n));
}

// Appends a path of new vertices, the first attached at `attach`.
LabeledTree extend(const LabeledTree& lt, int attach, const std::vector<Status>& chain,
                   const char* op) {
  auto edges = lt.tree.edges();
  int next = lt.tree.n;
  int prev = attach;
  for (size_t i = 0; i < chain.size(); ++i) {
    edges.emplace_back(prev, next);
    prev = next;
    ++next;
  }
  LabeledTree out;
  out.tree = make_tree(next, edges);
  out.status = lt.status;
  for (Status s : chain) out.status.push_back(s);
  out.basic_path = lt.basic_path;
  out.family_tag = lt.family_tag;
  out.derivation = lt.derivation;
  out.derivation.push_back({op, attach});
  return out;
}

bool has_degree2_corresponding(const LabeledTree& lt, int v) {
  for (int u : corresponding_vertices(lt, v))
    if (lt.tree.degree(u) == 2) return true;
  return false;
}

// Component of T - (a,b) containing a, as a sorted vertex list.
std::vector<int> component_without_edge(const Tree& t, int a, int b) {
  std::vector<char> vis(t.n, 0);
  std::vector<int> out;
  std::queue<int> q;
  q.push(a);
  vis[a] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    out.push_back(u);
    for (int w : t.adj[u]) {
      if ((u == a && w == b) || (u == b && w == a)) continue;
      if (!vis[w]) {
        vis[w] = 1;
        q.push(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const char* family_name(FamilyTag tag) { return tag == FamilyTag::T1 ? "T1" : "T2"; }

LabeledTree t1_base() {
  LabeledTree lt;
  lt.tree = make_tree(3, {{0, 1}, {1, 2}});
  lt.status = {Status::C, Status::A, Status::C};
  lt.family_tag = FamilyTag::T1;
  return lt;
}

LabeledTree t2_base() {
  LabeledTree lt;
  lt.tree = make_tree(4, {{0, 1}, {1, 2}, {2, 3}});
  lt.status = {Status::C, Status::A, Status::A, Status::C};
  lt.basic_path = {{0, 1, 2, 3}};
  lt.family_tag = FamilyTag::T2;
  return lt;
}

std::string status_string(const LabeledTree& lt) {
  std::string out;
  for (Status s : lt.status) out += status_char(s);
  return out;
}

std::string labeled_canonical_form(const LabeledTree& lt) {
  return labeled_canonical_form(lt.tree, status_chars(lt));
}

std::string family_catalog_key(const LabeledTree& lt) {
  return path_labeled_canonical_form(lt.tree, status_chars(lt), lt.basic_path);
}

bool on_basic_path(const LabeledTree& lt, int v) {
  if (!lt.basic_path) return false;
  for (int u : *lt.basic_path)
    if (u == v) return true;
  return false;
}

std::vector<int> corresponding_vertices(const LabeledTree& lt, int v) {
  check_vertex(lt, v);
  Status sv = sta(lt, v);
  if (sv == Status::C || sv == Status::D)
    throw WrongStatusError(std::string("corresponding vertices are defined for status A or B, "
                                       "vertex ") +
                           std::to_string(v) + " has status " + status_char(sv));
  const Tree& t = lt.tree;
  std::vector<int> out;
  if (sv == Status::A) {
    if (is_support(t, v) || on_basic_path(lt, v)) return out;
    for (int v1 : t.adj[v]) {
      if (sta(lt, v1) != Status::C) continue;
      for (int v2 : t.adj[v1]) {
        if (v2 == v || sta(lt, v2) != Status::D) continue;
        for (int u : t.adj[v2]) {
          if (u == v1 || sta(lt, u) != Status::B) continue;
          out.push_back(u);
        }
      }
    }
  } else {  // B: walk the pattern from the far end
    for (int v2 : t.adj[v]) {
      if (sta(lt, v2) != Status::D) continue;
      for (int v1 : t.adj[v2]) {
        if (v1 == v || sta(lt, v1) != Status::C) continue;
        for (int x : t.adj[v1]) {
          if (x == v2 || sta(lt, x) != Status::A) continue;
          out.push_back(x);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool can_apply_O1(const LabeledTree& lt, int v) {
  check_vertex(lt, v);
  return lt.family_tag == FamilyTag::T1 && sta(lt, v) == Status::A;
}

bool can_apply_O2(const LabeledTree& lt, int v) {
  check_vertex(lt, v);
  if (lt.family_tag != FamilyTag::T2 || sta(lt, v) != Status::B) return false;
  return has_degree2_corresponding(lt, v);
}

bool can_apply_O3(const LabeledTree& lt, int v) {
  check_vertex(lt, v);
  return sta(lt, v) == Status::C && lt.tree.degree(v) == 1;
}

bool can_apply_O4(const LabeledTree& lt, int v) {
  check_vertex(lt, v);
  if (lt.family_tag != FamilyTag::T2 || sta(lt, v) != Status::A) return false;
  if (on_basic_path(lt, v) || is_support(lt.tree, v)) return false;
  return has_degree2_corresponding(lt, v);
}

LabeledTree apply_O1(const LabeledTree& lt, int v) {
  if (!can_apply_O1(lt, v))
    throw PreconditionViolatedError("O1 needs a T1 member and an A-vertex, got vertex " +
                                    std::to_string(v));
  return extend(lt, v, {Status::C}, "O1");
}

LabeledTree apply_O2(const LabeledTree& lt, int v) {
  if (!can_apply_O2(lt, v))
    throw PreconditionViolatedError(
        "O2 needs a T2 member and a B-vertex with a degree-2 corresponding vertex, got vertex " +
        std::to_string(v));
  return extend(lt, v, {Status::A, Status::C}, "O2");
}

LabeledTree apply_O3(const LabeledTree& lt, int v) {
  if (!can_apply_O3(lt, v))
    throw PreconditionViolatedError("O3 needs a degree-1 C-vertex, got vertex " +
                                    std::to_string(v));
  return extend(lt, v, {Status::D, Status::B, Status::A, Status::C}, "O3");
}

LabeledTree apply_O4(const LabeledTree& lt, int v) {
  if (!can_apply_O4(lt, v))
    throw PreconditionViolatedError(
        "O4 needs a T2 member and an off-path non-support A-vertex with a degree-2 "
        "corresponding vertex, got vertex " +
        std::to_string(v));
  return extend(lt, v, {Status::A, Status::C}, "O4");
}

bool FamilyCatalog::contains_unlabeled(int n, const std::string& canon) const {
  auto it = unlabeled.find(n);
  return it != unlabeled.end() && it->second.count(canon) > 0;
}

std::vector<const LabeledTree*> FamilyCatalog::all() const {
  std::vector<const LabeledTree*> out;
  for (const auto& [n, bucket] : members)
    for (const auto& [key, lt] : bucket) out.push_back(&lt);
  return out;
}

std::size_t FamilyCatalog::size() const {
  std::size_t total = 0;
  for (const auto& [n, bucket] : members) total += bucket.size();
  return total;
}

FamilyCatalog enumerate_family(FamilyTag tag, int n_max, int cap) {
  int base_n = tag == FamilyTag::T1 ? 3 : 4;
  if (n_max < base_n)
    throw PreconditionViolatedError(std::string(family_name(tag)) + " enumeration needs n_max >= " +
                                    std::to_string(base_n));
  if (n_max > cap)
    throw CapExceededError("n_max = " + std::to_string(n_max) + " exceeds enumeration cap " +
                           std::to_string(cap));
  FamilyCatalog cat;
  cat.family = tag;
  cat.cap = n_max;
  std::deque<LabeledTree> work;
  auto add = [&](LabeledTree lt) {
    std::string key = family_catalog_key(lt);
    auto& bucket = cat.members[lt.tree.n];
    if (bucket.count(key)) return;
    cat.unlabeled[lt.tree.n].insert(canonical_form(lt.tree));
    work.push_back(lt);
    bucket.emplace(std::move(key), std::move(lt));
  };
  add(tag == FamilyTag::T1 ? t1_base() : t2_base());
  while (!work.empty()) {
    LabeledTree lt = std::move(work.front());
    work.pop_front();
    int n = lt.tree.n;
    for (int v = 0; v < n; ++v) {
      if (tag == FamilyTag::T1) {
        if (n + 1 <= n_max && can_apply_O1(lt, v)) add(apply_O1(lt, v));
      } else {
        if (n + 2 <= n_max && can_apply_O2(lt, v)) add(apply_O2(lt, v));
        if (n + 2 <= n_max && can_apply_O4(lt, v)) add(apply_O4(lt, v));
      }
      if (n + 4 <= n_max && can_apply_O3(lt, v)) add(apply_O3(lt, v));
    }
  }
  return cat;
}

std::vector<int> sa_set(const LabeledTree& lt) {
  std::vector<int> out;
  for (int v = 0; v < lt.tree.n; ++v)
    if (sta(lt, v) == Status::A) out.push_back(v);
  return out;
}

AuditReport audit_T1(const LabeledTree& lt) {
  if (lt.family_tag != FamilyTag::T1) throw WrongFamilyError("audit_T1 needs a T1 member");
  AuditReport rep;
  const Tree& t = lt.tree;
  auto m = metrics(t);
  for (int v : m.supports)
    if (sta(lt, v) != Status::A)
      rep.violations.push_back("(a) support " + std::to_string(v) + " is not A");
  for (int v : m.leaves)
    if (sta(lt, v) != Status::C)
      rep.violations.push_back("(a) leaf " + std::to_string(v) + " is not C");
  for (int v = 0; v < t.n; ++v) {
    if (sta(lt, v) != Status::A) continue;
    for (int u : t.adj[v])
      if (sta(lt, u) != Status::B && sta(lt, u) != Status::C)
        rep.violations.push_back("(b) neighbor " + std::to_string(u) + " of A-vertex " +
                                 std::to_string(v) + " is " + status_char(sta(lt, u)));
  }
  if (!is_2dd_set(t, sa_set(lt)))
    rep.violations.push_back("(c) the A-set does not 2-dominate disjunctively");
  for (auto [u, v] : t.edges())
    if (sta(lt, u) == sta(lt, v))
      rep.violations.push_back(std::string("(d) status class ") + status_char(sta(lt, u)) +
                               " is not independent: edge (" + std::to_string(u) + ", " +
                               std::to_string(v) + ")");
  for (int v = 0; v < t.n; ++v)
    if (sta(lt, v) != Status::A && t.degree(v) > 2)
      rep.violations.push_back("(e) non-A vertex " + std::to_string(v) + " has degree " +
                               std::to_string(t.degree(v)));
  return rep;
}

AuditReport audit_T2(const LabeledTree& lt) {
  if (lt.family_tag != FamilyTag::T2) throw WrongFamilyError("audit_T2 needs a T2 member");
  AuditReport rep;
  const Tree& t = lt.tree;
  auto m = metrics(t);
  for (int v : m.supports)
    if (sta(lt, v) != Status::A)
      rep.violations.push_back("(a) support " + std::to_string(v) + " is not A");
  for (int v : m.leaves)
    if (sta(lt, v) != Status::C)
      rep.violations.push_back("(a) leaf " + std::to_string(v) + " is not C");
  if (!is_2dd_set(t, sa_set(lt)))
    rep.violations.push_back("(b) the A-set does not 2-dominate disjunctively");
  for (int v = 0; v < t.n; ++v) {
    Status sv = sta(lt, v);
    if (sv != Status::A && sv != Status::B) continue;
    auto corr = corresponding_vertices(lt, v);
    if (corr.size() > 1)
      rep.violations.push_back("(c) vertex " + std::to_string(v) + " has " +
                               std::to_string(corr.size()) + " corresponding vertices");
    bool deg2 = false;
    for (int u : corr)
      if (t.degree(u) == 2) deg2 = true;
    if (!deg2 && t.degree(v) != 2)
      rep.violations.push_back("(c) vertex " + std::to_string(v) +
                               " has no degree-2 corresponding vertex yet degree " +
                               std::to_string(t.degree(v)));
  }
  for (int v : m.supports)
    if (t.degree(v) != 2)
      rep.violations.push_back("(d) support " + std::to_string(v) + " has degree " +
                               std::to_string(t.degree(v)));
  for (int v = 0; v < t.n; ++v) {
    if (sta(lt, v) != Status::C || t.degree(v) != 2) continue;
    int u = t.adj[v][0], w = t.adj[v][1];
    if (sta(lt, u) == Status::D) std::swap(u, w);
    if (sta(lt, u) != Status::A || sta(lt, w) != Status::D) {
      rep.violations.push_back("(e) degree-2 C-vertex " + std::to_string(v) +
                               " lacks an {A, D} neighborhood");
      continue;
    }
    if (t.degree(u) == 2 && lt.basic_path) {
      auto side = component_without_edge(t, v, w);
      bool holds = true;
      for (int b : *lt.basic_path)
        if (!std::binary_search(side.begin(), side.end(), b)) holds = false;
      rep.notes.push_back("(e) component of T - (" + std::to_string(v) + ", " +
                          std::to_string(w) + ") containing " + std::to_string(v) +
                          (holds ? " contains" : " does not contain") + " the basic path");
    }
  }
  return rep;
}

MembershipVerdict membership(const Tree& t, FamilyTag tag, const FamilyCatalog& catalog) {
  if (t.n > catalog.cap)
    throw CapExceededError("membership for n = " + std::to_string(t.n) +
                           " needs a catalog enumerated to at least that order, have cap " +
                           std::to_string(catalog.cap));
  MembershipVerdict v;
  v.catalog_member = catalog.contains_unlabeled(t.n, canonical_form(t));
  auto m = metrics(t);
  int gamma4 = 4 * gamma_d2_brute(t).gamma_d2;
  v.equality_member = tag == FamilyTag::T1 ? gamma4 == t.n - m.l + 3
                                           : gamma4 == t.n + m.l + m.s;
  return v;
}

std::optional<std::vector<int>> near_witness(const LabeledTree& lt, int leaf) {
  if (lt.family_tag != FamilyTag::T2) throw WrongFamilyError("near witness needs a T2 member");
  check_vertex(lt, leaf);
  const Tree& t = lt.tree;
  if (t.degree(leaf) != 1)
    throw NotALeafError("vertex " + std::to_string(leaf) + " has degree " +
                        std::to_string(t.degree(leaf)));
  auto m = metrics(t);
  int total = t.n + m.l + m.s;
  if (total % 4 != 0) return std::nullopt;  // the member value (n+l+s)/4 must be integral
  int want = total / 4 - 1;
  int support = t.adj[leaf][0];
  int required = -1;
  for (int u : t.adj[support])
    if (u != leaf && t.degree(u) > 1) {
      required = u;
      break;
    }
  if (required < 0) return std::nullopt;
  if (want < 1) return std::nullopt;

  auto dm = distance_matrix(t);
  auto near_ok = [&](const std::vector<int>& D) {
    std::vector<char> in(t.n, 0);
    for (int v : D) in[v] = 1;
    for (int v = 0; v < t.n; ++v) {
      if (v == leaf || in[v]) continue;
      bool adj = false;
      int two = 0;
      for (int u : D) {
        if (dm[v][u] == 1) adj = true;
        if (dm[v][u] == 2) ++two;
      }
      if (!adj && two < 2) return false;
    }
    return true;
  };

  std::vector<int> rest;
  for (int v = 0; v < t.n; ++v)
    if (v != required) rest.push_back(v);
  int k = want - 1;
  if (k > static_cast<int>(rest.size())) return std::nullopt;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<int> D = {required};
    for (int i : idx) D.push_back(rest[i]);
    std::sort(D.begin(), D.end());
    if (near_ok(D)) return D;
    int i = k - 1;
    while (i >= 0 && idx[i] == static_cast<int>(rest.size()) - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return std::nullopt;
}

std::string catalog_to_json(const FamilyCatalog& c) {
  nlohmann::json j;
  j["family"] = family_name(c.family);
  j["cap"] = c.cap;
  auto members = nlohmann::json::array();
  for (const auto& [n, bucket] : c.members) {
    for (const auto& [key, lt] : bucket) {
      nlohmann::json jm;
      jm["n"] = n;
      jm["canonical"] = key;
      auto edges = nlohmann::json::array();
      for (auto [u, v] : lt.tree.edges()) edges.push_back({u, v});
      jm["edges"] = std::move(edges);
      jm["status"] = status_string(lt);
      if (lt.basic_path) {
        jm["basic_path"] = *lt.basic_path;
      } else {
        jm["basic_path"] = nullptr;
      }
      auto deriv = nlohmann::json::array();
      for (const auto& step : lt.derivation) deriv.push_back({step.op, step.vertex});
      jm["derivation"] = std::move(deriv);
      members.push_back(std::move(jm));
    }
  }
  j["members"] = std::move(members);
  return j.dump(2) + "\n";
}

FamilyCatalog catalog_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  FamilyCatalog c;
  std::string fam = j.at("family").get<std::string>();
  if (fam == "T1")
    c.family = FamilyTag::T1;
  else if (fam == "T2")
    c.family = FamilyTag::T2;
  else
    throw MalformedLineError("unknown family \"" + fam + "\"");
  c.cap = j.at("cap").get<int>();
  for (const auto& jm : j.at("members")) {
    LabeledTree lt;
    int n = jm.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& je : jm.at("edges")) edges.emplace_back(je.at(0).get<int>(), je.at(1).get<int>());
    lt.tree = make_tree(n, edges);
    std::string st = jm.at("status").get<std::string>();
    if (static_cast<int>(st.size()) != n) throw MissingStatusError("status string length mismatch");
    for (char ch : st) {
      if (ch != 'A' && ch != 'B' && ch != 'C' && ch != 'D')
        throw MissingStatusError(std::string("invalid status letter '") + ch + "'");
      lt.status.push_back(static_cast<Status>(ch));
    }
    if (!jm.at("basic_path").is_null()) {
      std::array<int, 4> bp{};
      for (int i = 0; i < 4; ++i) bp[i] = jm.at("basic_path").at(i).get<int>();
      lt.basic_path = bp;
    }
    lt.family_tag = c.family;
    for (const auto& js : jm.at("derivation"))
      lt.derivation.push_back({js.at(0).get<std::string>(), js.at(1).get<int>()});
    c.unlabeled[n].insert(canonical_form(lt.tree));
    c.members[n].emplace(jm.at("canonical").get<std::string>(), std::move(lt));
  }
  return c;
}

LabeledTree replay_derivation(FamilyTag tag, const std::vector<DerivationStep>& steps) {
  LabeledTree lt = tag == FamilyTag::T1 ? t1_base() : t2_base();
  for (const auto& step : steps) {
    if (step.op == "O1")
      lt = apply_O1(lt, step.vertex);
    else if (step.op == "O2")
      lt = apply_O2(lt, step.vertex);
    else if (step.op == "O3")
      lt = apply_O3(lt, step.vertex);
    else if (step.op == "O4")
      lt = apply_O4(lt, step.vertex);
    else
      throw PreconditionViolatedError("unknown operation \"" + step.op + "\"");
  }
  return lt;
}

}  // namespace disjdom
