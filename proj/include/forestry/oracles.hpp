#pragma once

// Concrete Lie algebras used as comparison targets: strictly upper
// triangular integer matrices, the positive part of the loop algebra of gl2,
// and the free associative algebra on words under commutators. Also the
// explicit maps from family pre-Lie algebras into them and a harness that
// checks those maps are Lie isomorphisms degree by degree.

#include "forestry/prelie.hpp"

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

namespace forestry {

// ------------------------------------------------------------ matrices

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

class MatrixElement {
 public:
  /// Zero matrix of the given dimension.
  explicit MatrixElement(int dim);
  /// Throws std::invalid_argument unless strictly upper triangular.
  explicit MatrixElement(IntMatrix entries);

  /// E_{i,j} with 1-based indices, i < j.
  static MatrixElement elementary(int dim, int i, int j);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const IntMatrix& entries() const { return entries_; }

  MatrixElement& operator+=(const MatrixElement& other);
  friend MatrixElement operator+(MatrixElement a, const MatrixElement& b) { return a += b; }
  friend MatrixElement operator-(const MatrixElement& a) { return MatrixElement(IntMatrix(-a.entries_)); }
  friend MatrixElement operator-(const MatrixElement& a, const MatrixElement& b) { return a + (-b); }
  friend bool operator==(const MatrixElement& a, const MatrixElement& b) {
    return a.dim() == b.dim() && a.entries_ == b.entries_;
  }

 private:
  IntMatrix entries_;
};

/// xy - yx. Throws std::invalid_argument on a dimension mismatch.
MatrixElement matrix_bracket(const MatrixElement& x, const MatrixElement& y);

// ------------------------------------------------------- loop algebra

enum class LoopSymbol { E, F, H1, H2 };

/// Basis element X (x) t^power of the positive part: e needs power >= 0,
/// f, h1 and h2 need power >= 1.
struct LoopBasis {
  LoopSymbol symbol;
  int power;
  friend auto operator<=>(const LoopBasis&, const LoopBasis&) = default;
};

class LoopElement {
 public:
  using Terms = SparseVector<LoopBasis, Integer>;

  LoopElement() = default;
  /// Throws std::invalid_argument if a term lies outside the positive part.
  explicit LoopElement(Terms terms);
  static LoopElement basis(LoopSymbol symbol, int power, Integer coeff = 1);

  const Terms& terms() const { return terms_; }

  friend LoopElement operator+(const LoopElement& a, const LoopElement& b) { return LoopElement(a.terms_ + b.terms_); }
  friend LoopElement operator-(const LoopElement& a, const LoopElement& b) { return LoopElement(a.terms_ - b.terms_); }
  friend bool operator==(const LoopElement& a, const LoopElement& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// [X t^m, Y t^n] = [X, Y] t^(m+n), with [X, Y] taken in 2x2 matrices.
LoopElement loop_bracket(const LoopElement& x, const LoopElement& y);
std::string to_string(LoopSymbol symbol);

// ------------------------------------------------------------- words

using Word = std::vector<Color>;

class WordElement {
 public:
  using Terms = SparseVector<Word, Integer>;

  WordElement() = default;
  explicit WordElement(Terms terms) : terms_(std::move(terms)) {}
  static WordElement word(Word w, Integer coeff = 1) { return WordElement(Terms::single(std::move(w), coeff)); }

  const Terms& terms() const { return terms_; }

  friend WordElement operator+(const WordElement& a, const WordElement& b) { return WordElement(a.terms_ + b.terms_); }
  friend WordElement operator-(const WordElement& a, const WordElement& b) { return WordElement(a.terms_ - b.terms_); }
  friend bool operator==(const WordElement& a, const WordElement& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

WordElement word_product(const WordElement& x, const WordElement& y);
/// xy - yx under concatenation.
WordElement word_bracket(const WordElement& x, const WordElement& y);

// -------------------------------------------------------------- maps

/// delta_{L(k..k+m)} -> -E_{k, k+m+1} in (n+1) x (n+1) matrices, ladders read
/// root to leaf, n taken from the interval-ladders family of x.
MatrixElement phi_upper(const PrimitiveElement& x);

/// Alternating ladders L(i, len), root colored i:
/// L(1, 2k+1) -> e t^k, L(2, 2k+1) -> f t^(k+1), L(i, 2k) -> -h_i t^k.
LoopElement phi_loop(const PrimitiveElement& x);

/// Ladder with colors a1..ak counted from the leaf -> X_{a1} ... X_{ak}.
WordElement rho_words(const PrimitiveElement& x);

// ------------------------------------------------------------ harness

/// A linear map out of a family's pre-Lie algebra, with what is needed to
/// test it degree by degree.
template <class Target>
struct LieMap {
  std::string name;
  std::function<Target(const PrimitiveElement&)> apply;
  std::function<Target(const Target&, const Target&)> bracket;
  /// Basis of the target in a given degree.
  std::function<std::vector<Target>(int degree)> target_basis;
  /// Coordinates of a target element, keyed by basis label.
  std::function<std::map<std::string, Integer>(const Target&)> coordinates;
};

struct HomomorphismReport {
  std::string map;
  std::string family;
  int max_degree = 0;
  std::size_t checked_pairs = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Exact rank of an integer matrix given as rows.
std::size_t exact_rank(const std::vector<std::vector<Integer>>& rows);

template <class Target>
HomomorphismReport verify_homomorphism(const LieMap<Target>& map, const Family& family, int max_degree) {
  HomomorphismReport report{map.name, family.name(), max_degree, 0, {}};
  std::vector<PrimitiveElement> all;
  for (int d = 1; d <= max_degree; ++d) {
    const auto& trees = family.connected(d);
    std::vector<std::map<std::string, Integer>> images;
    for (const auto& t : trees) {
      all.push_back(basis(t, family));
      images.push_back(map.coordinates(map.apply(all.back())));
    }
    std::vector<Target> target = map.target_basis(d);
    std::vector<std::string> labels;
    for (const auto& b : target) {
      auto coords = map.coordinates(b);
      if (coords.size() != 1) report.failures.push_back("target basis element with " + std::to_string(coords.size()) + " coordinates");
      for (const auto& [label, c] : coords) labels.push_back(label);
    }
    std::vector<std::vector<Integer>> rows;
    for (std::size_t i = 0; i < images.size(); ++i) {
      std::vector<Integer> row(labels.size());
      std::size_t covered = 0;
      for (std::size_t j = 0; j < labels.size(); ++j)
        if (auto it = images[i].find(labels[j]); it != images[i].end()) row[j] = it->second, ++covered;
      if (covered != images[i].size())
        report.failures.push_back("degree " + std::to_string(d) + ": image of '" + trees[i].key() +
                                  "' leaves the degree-" + std::to_string(d) + " target");
      rows.push_back(std::move(row));
    }
    std::size_t rank = exact_rank(rows);
    if (rank != trees.size() || rank != labels.size())
      report.failures.push_back("degree " + std::to_string(d) + ": " + std::to_string(trees.size()) + " basis elements, " +
                                std::to_string(labels.size()) + " target basis elements, image rank " +
                                std::to_string(rank));
  }
  for (const auto& x : all) {
    for (const auto& y : all) {
      ++report.checked_pairs;
      Target lhs = map.apply(bracket(x, y));
      Target rhs = map.bracket(map.apply(x), map.apply(y));
      if (!(lhs == rhs))
        report.failures.push_back("bracket not preserved on (" + x.terms().begin()->first + ", " +
                                  y.terms().begin()->first + ")");
    }
  }
  return report;
}

/// phi_upper together with the strictly upper triangular basis, graded by
/// j - i.
LieMap<MatrixElement> upper_triangular_map(int n);
/// phi_loop with the positive loop basis, graded so that e t^k has degree
/// 2k+1, f t^k has degree 2k-1 and h_i t^k has degree 2k.
LieMap<LoopElement> loop_map();
/// rho_words with words over `alphabet` graded by length.
LieMap<WordElement> word_map(std::vector<Color> alphabet);

}  // namespace forestry
