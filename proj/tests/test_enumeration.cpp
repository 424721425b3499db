#include <map>

#include "doctest.h"

#include "disjdom/canonical.hpp"
#include "disjdom/enumeration.hpp"
#include "helpers.hpp"

using namespace disjdom;

TEST_CASE("tree counts by order") {
  const std::vector<std::size_t> expected = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) CHECK(all_trees(n).items.size() == expected[n - 1]);
}

TEST_CASE("streams are deduplicated and ordered") {
  TreeStream s = all_trees(8);
  CHECK(s.n == 8);
  std::string prev;
  for (const Tree& t : s.items) {
    CHECK(t.n == 8);
    std::string c = canonical_form(t);
    CHECK(prev < c);  // strictly ascending, so no duplicates
    prev = c;
  }
}

TEST_CASE("generator matches the exhaustive labeled census") {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> from_stream;
    for (const Tree& t : all_trees(n).items) from_stream.insert(canonical_form(t));
    CHECK(from_stream == prufer_census(n));
  }
}

TEST_CASE("generator matches the counting recurrence") {
  for (int n = 1; n <= 12; ++n)
    CHECK(all_trees(n).items.size() == free_tree_count(n));
  // classical values, up to the enumeration cap
  CHECK(free_tree_count(13) == 1301);
  CHECK(free_tree_count(14) == 3159);
}

TEST_CASE("rooted tree counts") {
  const std::vector<std::uint64_t> expected = {1, 1, 2, 4, 9, 20, 48, 115, 286, 719};
  auto r = rooted_tree_counts(10);
  REQUIRE(r.size() >= 11);
  for (int n = 1; n <= 10; ++n) CHECK(r[n] == expected[n - 1]);
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(all_trees(0), PreconditionViolatedError);
  CHECK_THROWS_AS(all_trees(15), CapExceededError);
  CHECK_THROWS_AS(prufer_census(10), CapExceededError);
}

TEST_CASE("random trees are deterministic in (n, seed)") {
  Tree a = random_tree(50, 7);
  Tree b = random_tree(50, 7);
  CHECK(a.edges() == b.edges());
  CHECK(random_tree(50, 8).edges() != a.edges());
  CHECK(a.n == 50);

  CHECK(random_tree(2, 0).edges() == testutil::make_path(2).edges());
  CHECK_THROWS_AS(random_tree(1, 0), OrderTooSmallError);
}

TEST_CASE("random trees reach every small shape") {
  std::map<std::string, int> seen;
  for (int seed = 0; seed < 200; ++seed) seen[canonical_form(random_tree(4, seed))]++;
  CHECK(seen.size() == 2);  // both four-vertex shapes occur
  for (auto& [canon, count] : seen) CHECK(count > 20);
}
