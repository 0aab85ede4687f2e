#include "forestry/family.hpp"
#include "oracle/brute.hpp"

#include <doctest.h>

#include <set>

using namespace forestry;

namespace {

std::set<std::string> keys(const std::vector<Tree>& trees) {
  std::set<std::string> out;
  for (const auto& t : trees) out.insert(t.key());
  return out;
}

}  // namespace

TEST_CASE("one-colored trees match level-sequence enumeration") {
  auto all = families::all_forests({"1"});
  const std::vector<std::size_t> known{0, 1, 1, 2, 4, 9, 20, 48, 115};
  for (int n = 1; n <= 8; ++n) {
    auto seqs = oracle::level_sequences(n);
    CHECK(seqs.size() == known[n]);
    std::set<std::string> expected;
    for (const auto& s : seqs) {
      auto p = oracle::poset_of_levels(s, "1");
      expected.insert(Forest(p.color, p.parent).key());
    }
    CHECK(expected.size() == seqs.size());
    CHECK(keys(all.connected(n)) == expected);
  }
}

TEST_CASE("two-colored tree counts follow the recurrence") {
  auto counts = oracle::colored_tree_counts(2, 7);
  CHECK(counts[6] == 916);
  auto all = families::all_forests({"a", "b"});
  for (int n = 1; n <= 7; ++n) CHECK(all.connected(n).size() == counts[n]);
}

TEST_CASE("forest enumeration is a multiset count over trees") {
  auto all = families::all_forests({"1"});
  // unlabeled rooted forests on n vertices = rooted trees on n + 1
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_forests(all, n).size() == oracle::level_sequences(n + 1).size());
  auto f = enumerate_forests(families::ladders_one(), 4);
  CHECK(f.size() == 5);  // partitions of 4
}

TEST_CASE("builtin selectors") {
  CHECK(builtin("all:a,b").name() == "all:a,b");
  CHECK(builtin("ladders-1").connected(3).front().key() == "1(1(1))");
  CHECK(builtin("antichains:1,2").connected(2).empty());
  CHECK(builtin("ladders:1,2").connected(3).size() == 8);
  CHECK(builtin("interval-ladders:4").connected(2).size() == 3);
  CHECK(keys(builtin("alt-ladders-2").connected(3)) == std::set<std::string>{"1(2(1))", "2(1(2))"});
  CHECK(builtin("headtail-ladders").connected(3).size() == 4);
  CHECK(builtin("corollas:1,2").connected(3).size() == 6);
  for (const char* bad : {"nope", "all", "all:", "interval-ladders:0", "interval-ladders:x", "alt-ladders-2:3"})
    CHECK_THROWS_AS(builtin(bad), std::invalid_argument);
  CHECK_THROWS(builtin("gen:"));
}

TEST_CASE("membership") {
  auto ht = families::headtail_ladders();
  CHECK(ht.contains(parse_forest("1(1(2))+2")));
  CHECK_FALSE(ht.contains(parse_forest("2(1)")));
  CHECK(ht.contains(Forest()));
  auto cor = families::corollas({"1", "2"});
  CHECK(cor.contains(parse_forest("1(1,2,2)")));
  CHECK_FALSE(cor.contains(parse_forest("1(2(1))")));
  CHECK_FALSE(cor.contains(parse_forest("3")));
}

TEST_CASE("enumerators agree with grafting growth") {
  for (const char* sel : {"ladders-1", "ladders:1,2", "interval-ladders:5", "alt-ladders-2", "periodic-ladders:3",
                          "headtail-ladders", "corollas:1,2,3", "antichains:1,2"}) {
    auto f = builtin(sel);
    for (int n = 1; n <= 5; ++n) CHECK_MESSAGE(keys(f.connected(n)) == keys(enumerate_by_grafting(f, n)), sel << " size " << n);
  }
}

TEST_CASE("builtin families are closed") {
  for (const char* sel : {"all:a,b", "ladders-1", "ladders:1,2", "interval-ladders:5", "alt-ladders-2",
                          "periodic-ladders:3", "headtail-ladders", "corollas:1,2,3", "antichains:1,2", "gen:a(b,c(a))"}) {
    auto report = verify_closed(builtin(sel), 5);
    CHECK_MESSAGE(report.closed, sel);
    CHECK(report.members_checked > 0);
  }
}

TEST_CASE("periodic ladders") {
  auto p = families::periodic_ladders(3);
  for (int n = 1; n <= 7; ++n) CHECK(p.connected(n).size() == 3);
  CHECK(p.contains(parse_forest("3(1(2(3)))")));
  CHECK_FALSE(p.contains(parse_forest("1(3)")));
  // n = 1 degenerates to one-colored ladders
  CHECK(keys(families::periodic_ladders(1).connected(4)) == keys(families::ladders_one().connected(4)));
}

TEST_CASE("ad-hoc families that are not closed") {
  // chains of even length: deleting a leaf gives an odd chain
  auto even_chain = [](const Tree& t) {
    return ladder_colors(t, LadderReading::RootToLeaf).has_value() && t.size() % 2 == 0;
  };
  Family even("even-chains", {"1"}, even_chain, [](int size) {
    std::vector<Tree> out;
    if (size % 2 == 0) out.push_back(make_ladder(std::vector<Color>(size, "1"), LadderReading::RootToLeaf));
    return out;
  });
  CHECK(even.connected(2).size() == 1);
  CHECK(even.connected(3).empty());
  auto report = verify_closed(even, 4);
  CHECK_FALSE(report.closed);
  REQUIRE_FALSE(report.violations.empty());
  CHECK(report.violations.front().member == "1(1)");
  CHECK(report.violations.front().subposet == "1");

  // trees rooted at a, found by the generic enumerator
  Family rooted("rooted-at-a", {"a", "b"}, [](const Tree& t) { return t.color(t.root()) == "a"; });
  CHECK(rooted.connected(2).size() == 2);
  auto r = verify_closed(rooted, 3);
  CHECK_FALSE(r.closed);
  bool saw_b = false;
  for (const auto& v : r.violations) saw_b |= v.subposet == "b";
  CHECK(saw_b);
}

TEST_CASE("closure of generators") {
  auto c = closure({parse_forest("a(b,c)")}, 3);
  CHECK(c == std::set<std::string>{"a", "b", "c", "a(b)", "a(c)", "a(b,c)"});
  auto g = families::generated({parse_forest("a(b(c))")});
  CHECK(g.contains(parse_forest("b(c)+a(b)")));
  // {a, c} is not convex in the chain
  CHECK_FALSE(g.contains(parse_forest("a(c)")));
  CHECK_FALSE(g.contains(parse_forest("c(a)")));
  CHECK_THROWS_AS(closure({parse_forest("a")}, 0), std::invalid_argument);
}

TEST_CASE("enumeration budget") {
  Family small("all-small", {"a", "b"}, [](const Tree&) { return true; }, std::nullopt, EnumerationBudget{4, 1000});
  CHECK(small.connected(4).size() == 52);
  CHECK_THROWS_AS(small.connected(5), BudgetExceeded);
  Family tight("all-tight", {"a", "b"}, [](const Tree&) { return true; }, std::nullopt, EnumerationBudget{12, 10});
  CHECK_THROWS_AS(tight.connected(4), BudgetExceeded);
}
