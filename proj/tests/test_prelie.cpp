#include "forestry/prelie.hpp"
#include "oracle/brute.hpp"

#include <doctest.h>

using namespace forestry;

namespace {

Tree t(const char* text) { return parse_tree(text); }

std::vector<Tree> trees_up_to(const Family& f, int n) {
  std::vector<Tree> out;
  for (int s = 1; s <= n; ++s) out.insert(out.end(), f.connected(s).begin(), f.connected(s).end());
  return out;
}

// Y(j, counts): root j with counts[i] leaves colored i + 1.
Tree corolla(int root, const std::vector<int>& counts) {
  std::vector<Color> colors{std::to_string(root)};
  std::vector<int> parents{-1};
  for (std::size_t i = 0; i < counts.size(); ++i)
    for (int k = 0; k < counts[i]; ++k) {
      colors.push_back(std::to_string(i + 1));
      parents.push_back(0);
    }
  return Tree(Forest(colors, parents));
}

// Ordered pairs of incomparable non-root vertices (u, w) of s with lower
// sets ~ a and ~ b and the rest ~ c.
std::uint64_t brute_two_cuts(const oracle::Poset& a, const oracle::Poset& b, const oracle::Poset& c,
                             const oracle::Poset& s) {
  const int n = static_cast<int>(s.size());
  const std::uint32_t all = (1u << n) - 1;
  auto lower = [&](int v) {
    std::uint32_t m = 0;
    for (int x = 0; x < n; ++x)
      if (oracle::below(s, x, v)) m |= 1u << x;
    return m;
  };
  std::uint64_t count = 0;
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w) {
      if (u == w || s.parent[u] == -1 || s.parent[w] == -1) continue;
      if (oracle::below(s, u, w) || oracle::below(s, w, u)) continue;
      std::uint32_t lu = lower(u), lw = lower(w);
      if (oracle::isomorphic(oracle::restrict(s, lu), a) && oracle::isomorphic(oracle::restrict(s, lw), b) &&
          oracle::isomorphic(oracle::restrict(s, all & ~(lu | lw)), c))
        ++count;
    }
  return count;
}

}  // namespace

TEST_CASE("grafting a vertex onto a(b)") {
  auto fam = families::all_forests({"a", "b"});
  auto p = prelie(t("b"), t("a(b)"), fam);
  CHECK(p.coeff("a(b,b)") == 2);
  CHECK(p.coeff("a(b(b))") == 1);
  CHECK(p.terms().size() == 2);
}

TEST_CASE("structure constants match brute-force edge counts") {
  auto fam = families::all_forests({"a", "b"});
  auto trees = trees_up_to(fam, 3);
  for (const auto& a : trees)
    for (const auto& b : trees) {
      auto p = prelie(a, b, fam);
      for (const auto& s : fam.connected(static_cast<int>(a.size() + b.size()))) {
        auto want = oracle::edge_count(oracle::poset_of(a), oracle::poset_of(b), oracle::poset_of(s));
        CHECK_MESSAGE(p.coeff(s.key()) == Integer(want), a.key() << " |> " << b.key() << " at " << s.key());
      }
      for (const auto& [k, c] : p.terms()) CHECK(c > 0);
    }
}

TEST_CASE("one-colored ladders") {
  auto fam = families::ladders_one();
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      Tree ln = make_ladder(std::vector<Color>(n, "1"), LadderReading::RootToLeaf);
      Tree lm = make_ladder(std::vector<Color>(m, "1"), LadderReading::RootToLeaf);
      Tree lnm = make_ladder(std::vector<Color>(n + m, "1"), LadderReading::RootToLeaf);
      CHECK(prelie(ln, lm, fam) == basis(lnm, fam));
    }
}

TEST_CASE("antichains have zero product") {
  auto fam = families::antichains({"1", "2", "3"});
  for (const auto& x : fam.connected(1))
    for (const auto& y : fam.connected(1)) CHECK(prelie(x, y, fam).is_zero());
}

TEST_CASE("interval ladders") {
  auto fam = families::interval_ladders(5);
  auto L = [](int k, int m) {
    std::vector<Color> c;
    for (int i = k; i <= k + m; ++i) c.push_back(std::to_string(i));
    return make_ladder(c, LadderReading::RootToLeaf);
  };
  for (int p = 1; p <= 5; ++p)
    for (int r = 0; p + r <= 5; ++r)
      for (int k = 1; k <= 5; ++k)
        for (int m = 0; k + m <= 5; ++m) {
          auto lhs = bracket(basis(L(p, r), fam), basis(L(k, m), fam));
          auto rhs = PrimitiveElement(fam);
          if (k + m + 1 == p) rhs = basis(L(k, p + r - k), fam);
          if (p + r + 1 == k) rhs = -basis(L(p, k + m - p), fam);
          CHECK(lhs == rhs);
        }
}

TEST_CASE("corollas, grafting a vertex onto a corolla") {
  auto fam = families::corollas({"1", "2", "3"});
  // the coefficient counts the leaves of color i after grafting
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int a1 = 0; a1 <= 2; ++a1)
        for (int a2 = 0; a2 <= 1; ++a2)
          for (int a3 = 0; a3 <= 1; ++a3) {
            std::vector<int> a{a1, a2, a3};
            auto b = a;
            ++b[i - 1];
            auto p = prelie(Tree::vertex(std::to_string(i)), corolla(j, a), fam);
            CHECK(p == Integer(a[i - 1] + 1) * basis(corolla(j, b), fam));
          }
  // single vertices onto single vertices give one-leaf corollas
  CHECK(bracket(basis(t("1"), fam), basis(t("2"), fam)) == basis(t("2(1)"), fam) - basis(t("1(2)"), fam));
  // nothing grafts onto a leaf, and corollas never graft
  CHECK(prelie(t("1(2)"), t("3"), fam).is_zero());
  CHECK(prelie(t("1(2)"), t("3(1)"), fam).is_zero());
}

TEST_CASE("periodic ladders graft when the colors continue") {
  for (int n = 1; n <= 3; ++n) {
    auto fam = families::periodic_ladders(n);
    auto trees = trees_up_to(fam, 4);
    for (const auto& a : trees)
      for (const auto& b : trees) {
        auto rb = *ladder_colors(b, LadderReading::RootToLeaf);
        auto ra = *ladder_colors(a, LadderReading::RootToLeaf);
        bool continues = std::stoi(ra.front()) == std::stoi(rb.back()) % n + 1;
        auto p = prelie(a, b, fam);
        if (continues) {
          auto joined = rb;
          joined.insert(joined.end(), ra.begin(), ra.end());
          CHECK(p == basis(make_ladder(joined, LadderReading::RootToLeaf), fam));
        } else {
          CHECK(p.is_zero());
        }
      }
  }
}

TEST_CASE("bracket is antisymmetric") {
  auto fam = families::all_forests({"a", "b"});
  auto x = basis(t("a(b)"), fam) + basis(t("b"), fam);
  auto y = basis(t("a"), fam) - basis(t("b(a)"), fam);
  CHECK(bracket(x, x).is_zero());
  CHECK(bracket(x, y) == -bracket(y, x));
}

TEST_CASE("pre-Lie residual") {
  auto fam = families::all_forests({"a", "b"});
  CHECK(prelie_residual(t("a"), t("a"), t("b(a)"), fam).is_zero());
  CHECK(prelie_residual(t("a(b)"), t("b"), t("a"), fam).is_zero());
  auto iv = families::interval_ladders(4);
  auto trees = trees_up_to(iv, 4);
  for (const auto& a : trees)
    for (const auto& b : trees)
      for (const auto& c : trees)
        if (a.size() + b.size() + c.size() <= 6) CHECK(prelie_residual(a, b, c, iv).is_zero());
}

TEST_CASE("two-edge cuts against brute force") {
  auto fam = families::all_forests({"a", "b"});
  CHECK(two_edge_cut_count(t("a"), t("a"), t("a"), t("a(a,a)")) == 2);
  CHECK(two_edge_cut_count(t("a"), t("a"), t("a"), t("a(a(a))")) == 0);
  CHECK(two_edge_cut_count(t("a"), t("a"), t("a"), t("a(a)")) == 0);
  auto trees = trees_up_to(fam, 2);
  for (const auto& a : trees)
    for (const auto& b : trees)
      for (const auto& c : trees) {
        int n = static_cast<int>(a.size() + b.size() + c.size());
        for (const auto& s : fam.connected(n)) {
          auto want = brute_two_cuts(oracle::poset_of(a), oracle::poset_of(b), oracle::poset_of(c), oracle::poset_of(s));
          CHECK(two_edge_cut_count(a, b, c, s) == want);
          CHECK(two_edge_cut_count(b, a, c, s) == want);
        }
      }
}

TEST_CASE("projection to a subfamily") {
  auto all = families::all_forests({"a", "b"});
  auto lad = families::ladders({"a", "b"});
  auto p = project_to_family(prelie(t("b"), t("a(b)"), all), lad);
  CHECK(p == basis(t("a(b(b))"), lad));
  CHECK_THROWS_AS(project_to_family(p, families::all_forests({"c"})), std::invalid_argument);
}

TEST_CASE("pre-Lie product through the Hall product") {
  auto fam = families::all_forests({"a", "b"});
  auto same = prelie_via_hall(t("a"), t("a"), fam);
  CHECK(same.split_coefficient == 2);
  CHECK(same.product == prelie(t("a"), t("a"), fam));
  auto trees = trees_up_to(fam, 3);
  for (const auto& a : trees)
    for (const auto& b : trees) {
      auto v = prelie_via_hall(a, b, fam);
      CHECK(v.product == prelie(a, b, fam));
      CHECK(v.split_coefficient == (a.key() == b.key() ? 2 : 1));
    }
}

TEST_CASE("membership errors") {
  auto fam = families::ladders_one();
  CHECK_THROWS_AS(prelie(t("1(1,1)"), t("1"), fam), std::invalid_argument);
  CHECK_THROWS_AS(basis(t("2"), fam), std::invalid_argument);
  PrimitiveElement::Terms bad;
  bad.add("1+1", 1);
  CHECK_THROWS_AS(PrimitiveElement(fam, bad), std::invalid_argument);
  CHECK(to_hall(basis(t("1(1)"), fam)).coeff("1(1)") == 1);
}
