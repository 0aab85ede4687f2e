#include "forestry/oracles.hpp"

#include <doctest.h>

using namespace forestry;

namespace {

Tree ladder(std::vector<int> colors, LadderReading reading = LadderReading::RootToLeaf) {
  std::vector<Color> c;
  for (int x : colors) c.push_back(std::to_string(x));
  return make_ladder(c, reading);
}

LoopElement loop(LoopSymbol s, int power, Integer c = 1) { return LoopElement::basis(s, power, c); }

}  // namespace

TEST_CASE("matrix commutators") {
  CHECK(matrix_bracket(MatrixElement::elementary(3, 1, 2), MatrixElement::elementary(3, 2, 3)) ==
        MatrixElement::elementary(3, 1, 3));
  CHECK_THROWS_AS(matrix_bracket(MatrixElement(3), MatrixElement(4)), std::invalid_argument);
  IntMatrix lower = IntMatrix::Zero(2, 2);
  lower(1, 0) = 1;
  CHECK_THROWS_AS(MatrixElement{lower}, std::invalid_argument);
}

TEST_CASE("loop commutators") {
  CHECK(loop_bracket(loop(LoopSymbol::E, 0), loop(LoopSymbol::F, 1)) ==
        loop(LoopSymbol::H1, 1) - loop(LoopSymbol::H2, 1));
  CHECK(loop_bracket(loop(LoopSymbol::H1, 1), loop(LoopSymbol::E, 0)) == loop(LoopSymbol::E, 1));
  CHECK(loop_bracket(loop(LoopSymbol::H2, 1), loop(LoopSymbol::F, 1)) == loop(LoopSymbol::F, 2));
  CHECK_THROWS_AS(loop(LoopSymbol::F, 0), std::invalid_argument);
  CHECK_THROWS_AS(loop(LoopSymbol::H1, 0), std::invalid_argument);
}

TEST_CASE("oracle brackets are Lie brackets") {
  std::vector<LoopElement> basis;
  for (int p = 0; p <= 2; ++p) {
    basis.push_back(loop(LoopSymbol::E, p));
    if (p > 0) {
      basis.push_back(loop(LoopSymbol::F, p));
      basis.push_back(loop(LoopSymbol::H1, p));
      basis.push_back(loop(LoopSymbol::H2, p));
    }
  }
  for (const auto& x : basis)
    for (const auto& y : basis) {
      CHECK(loop_bracket(x, y) == LoopElement() - loop_bracket(y, x));
      for (const auto& z : basis) {
        auto j = loop_bracket(x, loop_bracket(y, z)) + loop_bracket(y, loop_bracket(z, x)) + loop_bracket(z, loop_bracket(x, y));
        CHECK(j == LoopElement());
      }
    }
  std::vector<MatrixElement> mats;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) mats.push_back(MatrixElement::elementary(4, i, j));
  for (const auto& x : mats)
    for (const auto& y : mats)
      for (const auto& z : mats) {
        auto j = matrix_bracket(x, matrix_bracket(y, z)) + matrix_bracket(y, matrix_bracket(z, x)) +
                 matrix_bracket(z, matrix_bracket(x, y));
        CHECK(j == MatrixElement(4));
      }
  auto w1 = WordElement::word({"1"}), w2 = WordElement::word({"2"}), w12 = WordElement::word({"1", "2"});
  CHECK(word_bracket(w1, w2) == WordElement::word({"1", "2"}) - WordElement::word({"2", "1"}));
  auto jw = word_bracket(w1, word_bracket(w2, w12)) + word_bracket(w2, word_bracket(w12, w1)) +
            word_bracket(w12, word_bracket(w1, w2));
  CHECK(jw == WordElement());
}

TEST_CASE("phi on interval ladders") {
  auto fam = families::interval_ladders(3);
  CHECK(phi_upper(basis(ladder({1}), fam)) == -MatrixElement::elementary(4, 1, 2));
  auto x = basis(ladder({2, 3}), fam), y = basis(ladder({1}), fam);
  auto lhs = phi_upper(bracket(x, y));
  CHECK(lhs == -MatrixElement::elementary(4, 1, 4));
  CHECK(lhs == matrix_bracket(phi_upper(x), phi_upper(y)));
  CHECK(phi_upper(PrimitiveElement(fam)) == MatrixElement(4));
  CHECK_THROWS_AS(phi_upper(basis(ladder({1}), families::all_forests({"1"}))), std::invalid_argument);
}

TEST_CASE("phi on alternating ladders") {
  auto fam = families::alt_ladders_2();
  CHECK(phi_loop(basis(ladder({1}), fam)) == loop(LoopSymbol::E, 0));
  CHECK(phi_loop(basis(ladder({2}), fam)) == loop(LoopSymbol::F, 1));
  CHECK(phi_loop(basis(ladder({2, 1}), fam)) == LoopElement() - loop(LoopSymbol::H2, 1));
  CHECK(phi_loop(basis(ladder({1, 2}), fam)) == LoopElement() - loop(LoopSymbol::H1, 1));
  CHECK(phi_loop(basis(ladder({1, 2, 1}), fam)) == loop(LoopSymbol::E, 1));
}

TEST_CASE("rho on ladders") {
  auto fam = families::ladders({"1", "2"});
  auto l = basis(ladder({1, 2}, LadderReading::LeafToRoot), fam);
  CHECK(rho_words(l) == WordElement::word({"1", "2"}));
  auto a = ladder({1}, LadderReading::LeafToRoot), b = ladder({2, 2}, LadderReading::LeafToRoot);
  CHECK(rho_words(prelie(a, b, fam)) == word_product(rho_words(basis(a, fam)), rho_words(basis(b, fam))));
  CHECK(rho_words(PrimitiveElement(fam)) == WordElement());
}

TEST_CASE("exact rank") {
  CHECK(exact_rank({}) == 0);
  CHECK(exact_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(exact_rank({{0, 1, 0}, {1, 0, 0}, {1, 1, 0}}) == 2);
  CHECK(exact_rank({{2, 0}, {0, 3}}) == 2);
}

TEST_CASE("isomorphism harness") {
  for (int n = 1; n <= 6; ++n) {
    auto r = verify_homomorphism(upper_triangular_map(n), families::interval_ladders(n), n);
    CHECK_MESSAGE(r.passed(), r.failures.front());
  }
  auto loop_report = verify_homomorphism(loop_map(), families::alt_ladders_2(), 8);
  CHECK(loop_report.passed());
  auto words = verify_homomorphism(word_map({"1", "2"}), families::ladders({"1", "2"}), 5);
  CHECK(words.passed());

  // a map that misses the target degree is reported
  auto bad = upper_triangular_map(3);
  bad.apply = [](const PrimitiveElement& x) { return MatrixElement(4) + (x.is_zero() ? MatrixElement(4) : MatrixElement::elementary(4, 1, 2)); };
  auto r = verify_homomorphism(bad, families::interval_ladders(3), 3);
  CHECK_FALSE(r.passed());
}
