#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "disjdom/campaign.hpp"
#include "disjdom/canonical.hpp"
#include "disjdom/enumeration.hpp"
#include "disjdom/family.hpp"
#include "disjdom/solver.hpp"
#include "disjdom/tree.hpp"

namespace {

using namespace disjdom;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file " + path);
  out << text;
}

std::vector<int> parse_set_csv(const std::string& csv) {
  std::vector<int> out;
  size_t start = 0;
  while (start <= csv.size()) {
    size_t end = csv.find(',', start);
    if (end == std::string::npos) end = csv.size();
    std::string tok = csv.substr(start, end - start);
    size_t a = tok.find_first_not_of(" \t");
    size_t b = tok.find_last_not_of(" \t");
    if (a == std::string::npos) throw MalformedLineError("empty entry in vertex set \"" + csv + "\"");
    tok = tok.substr(a, b - a + 1);
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw MalformedLineError("bad vertex index \"" + tok + "\" in set");
    }
    if (end == csv.size()) break;
    start = end + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FamilyTag parse_family(const std::string& name) {
  if (name == "t1" || name == "T1") return FamilyTag::T1;
  if (name == "t2" || name == "T2") return FamilyTag::T2;
  throw MalformedLineError("family must be t1 or t2, got \"" + name + "\"");
}

int cmd_gamma(const std::string& input, const std::string& method, int cap) {
  Tree t = parse_input(read_file(input));
  SolveResult r = method == "bnb" ? gamma_d2_bnb(t) : gamma_d2_brute(t, cap);
  nlohmann::json j;
  j["n"] = t.n;
  j["gamma_d2"] = r.gamma_d2;
  j["witness"] = r.witness;
  j["method"] = method_name(r.method);
  j["nodes_explored"] = r.nodes_explored;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_check_set(const std::string& input, const std::string& set_csv) {
  Tree t = parse_input(read_file(input));
  auto set = parse_set_csv(set_csv);
  CheckResult r = check_2dd_set(t, set);
  nlohmann::json j;
  j["n"] = t.n;
  j["set"] = r.certificate.member_set;
  j["is_2dd_set"] = r.ok;
  auto cert = nlohmann::json::array();
  for (int v = 0; v < t.n; ++v) {
    const auto& just = r.certificate.per_vertex[v];
    nlohmann::json jc;
    jc["v"] = v;
    jc["tag"] = coverage_name(just.tag);
    if (!just.witnesses.empty()) jc["witnesses"] = just.witnesses;
    cert.push_back(std::move(jc));
  }
  j["certificate"] = std::move(cert);
  j["uncovered"] = r.uncovered;
  std::cout << j.dump(2) << "\n";
  return r.ok ? 0 : 1;
}

int cmd_bounds(const std::string& input) {
  Tree t = parse_input(read_file(input));
  if (t.n < 2) throw PreconditionViolatedError("bounds need n >= 2");
  FamilyCatalog t1cat, t2cat;
  const FamilyCatalog* p1 = nullptr;
  const FamilyCatalog* p2 = nullptr;
  if (t.n <= 14) {
    t1cat = enumerate_family(FamilyTag::T1, std::max(3, t.n));
    t2cat = enumerate_family(FamilyTag::T2, std::max(4, t.n));
    p1 = &t1cat;
    p2 = &t2cat;
  } else {
    std::cerr << "note: n > 14, family membership not evaluated\n";
  }
  BoundsReport r = bounds_report(t, p1, p2);
  auto j = nlohmann::json::parse(bounds_report_json(r, t, canonical_form(t), "bounds"));
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_gen_family(const std::string& family, int max_n, const std::string& out) {
  FamilyTag tag = parse_family(family);
  FamilyCatalog cat = enumerate_family(tag, max_n);
  write_file(out, catalog_to_json(cat));
  std::cout << "wrote " << family_name(tag) << " catalog: " << cat.size()
            << " labeled members up to n = " << max_n << " -> " << out << "\n";
  return 0;
}

int cmd_member(const std::string& input, const std::string& family) {
  Tree t = parse_input(read_file(input));
  FamilyTag tag = parse_family(family);
  int base = tag == FamilyTag::T1 ? 3 : 4;
  FamilyCatalog cat = enumerate_family(tag, std::max(base, t.n));
  MembershipVerdict v = membership(t, tag, cat);
  nlohmann::json j;
  j["family"] = family_name(tag);
  j["n"] = t.n;
  j["catalog_member"] = v.catalog_member;
  j["equality_member"] = v.equality_member;
  j["agree"] = v.agree();
  j["verdict"] = v.agree() ? v.verdict() : "THEOREM_VIOLATION";
  std::cout << j.dump(2) << "\n";
  return v.agree() ? 0 : 1;
}

int cmd_enum_trees(int n, int max_n, const std::string& out) {
  if ((n < 0) == (max_n < 0))
    throw PreconditionViolatedError("pass exactly one of --n or --max-n");
  std::filesystem::create_directories(out);
  int lo = n >= 0 ? n : 1;
  int hi = n >= 0 ? n : max_n;
  nlohmann::json counts = nlohmann::json::object();
  std::uint64_t total = 0;
  for (int order = lo; order <= hi; ++order) {
    TreeStream stream = all_trees(order);
    counts[std::to_string(order)] = stream.items.size();
    total += stream.items.size();
    int idx = 0;
    for (const Tree& t : stream.items) {
      char name[64];
      std::snprintf(name, sizeof(name), "tree_n%d_%04d.txt", order, idx++);
      write_file((std::filesystem::path(out) / name).string(), to_edge_list(t));
    }
  }
  nlohmann::json manifest;
  manifest["counts"] = std::move(counts);
  manifest["total"] = total;
  write_file((std::filesystem::path(out) / "manifest.json").string(), manifest.dump(2) + "\n");
  std::cout << "wrote " << total << " trees -> " << out << "\n";
  return 0;
}

int cmd_random_tree(int n, std::uint64_t seed, const std::string& out) {
  Tree t = random_tree(n, seed);
  std::string text = to_edge_list(t);
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
  return 0;
}

int cmd_verify(int max_n, int jobs, const std::string& out) {
  CampaignConfig cfg;
  cfg.max_n = max_n;
  cfg.jobs = jobs;
  CampaignResult res = run_campaign(cfg);
  if (!out.empty()) write_campaign_report(res, out);
  auto j = nlohmann::json::parse(res.summary_line);
  std::cout << j.dump(2) << "\n";
  std::cerr << (res.ok() ? "verification clean" : "VERIFICATION VIOLATIONS FOUND") << " ("
            << res.tree_count << " trees, " << res.wall_ms << " ms)\n";
  return res.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact disjunctive domination on trees: solver, extremal families, verification"};
  app.require_subcommand(1);

  std::string input, set_csv, method = "brute", family, out;
  int cap = -1, max_n = -1, n = -1, jobs = 1;
  std::uint64_t seed = 0;

  auto* g = app.add_subcommand("gamma", "compute the disjunctive domination number");
  g->add_option("--input", input, "tree file (edge list or p: line)")->required();
  g->add_option("--method", method, "brute | bnb")->check(CLI::IsMember({"brute", "bnb"}));
  g->add_option("--cap", cap, "brute-force size cap override");

  auto* c = app.add_subcommand("check-set", "check a vertex set and print a certificate");
  c->add_option("--input", input, "tree file")->required();
  c->add_option("--set", set_csv, "comma-separated vertex indices")->required();

  auto* b = app.add_subcommand("bounds", "bound sheet for one tree");
  b->add_option("--input", input, "tree file")->required();

  auto* f = app.add_subcommand("gen-family", "enumerate an extremal family catalog");
  f->add_option("--family", family, "t1 | t2")->required();
  f->add_option("--max-n", max_n, "largest order to enumerate")->required();
  f->add_option("--out", out, "catalog JSON path")->required();

  auto* m = app.add_subcommand("member", "family membership by catalog and by bound equality");
  m->add_option("--input", input, "tree file")->required();
  m->add_option("--family", family, "t1 | t2")->required();

  auto* e = app.add_subcommand("enum-trees", "write all non-isomorphic trees");
  e->add_option("--n", n, "single order");
  e->add_option("--max-n", max_n, "every order from 1 to this");
  e->add_option("--out", out, "output directory")->required();

  auto* r = app.add_subcommand("random-tree", "uniform random labeled tree");
  r->add_option("--n", n, "order")->required();
  r->add_option("--seed", seed, "RNG seed");
  r->add_option("--out", out, "write here instead of stdout");

  auto* v = app.add_subcommand("verify", "exhaustive verification campaign");
  v->add_option("--max-n", max_n, "largest order (3..12, default 10)");
  v->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  v->add_option("--out", out, "line-delimited JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }

  try {
    if (app.got_subcommand(g)) return cmd_gamma(input, method, cap);
    if (app.got_subcommand(c)) return cmd_check_set(input, set_csv);
    if (app.got_subcommand(b)) return cmd_bounds(input);
    if (app.got_subcommand(f)) return cmd_gen_family(family, max_n, out);
    if (app.got_subcommand(m)) return cmd_member(input, family);
    if (app.got_subcommand(e)) return cmd_enum_trees(n, max_n, out);
    if (app.got_subcommand(r)) return cmd_random_tree(n, seed, out);
    if (app.got_subcommand(v)) return cmd_verify(max_n < 0 ? 10 : max_n, jobs, out);
  } catch (const disjdom::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
