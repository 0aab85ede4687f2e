#include "forestry/oracles.hpp"

#include <algorithm>

namespace forestry {

namespace {

std::vector<int> integer_colors(const std::vector<Color>& colors) {
  std::vector<int> out;
  for (const auto& c : colors) {
    if (c.empty() || !std::all_of(c.begin(), c.end(), ::isdigit))
      throw std::invalid_argument("expected a numeric color, got '" + c + "'");
    out.push_back(std::stoi(c));
  }
  return out;
}

long long to_small(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("coefficient too large for the matrix oracle");
  return z.get_si();
}

using Mat2 = Eigen::Matrix2i;

Mat2 matrix_of(LoopSymbol s) {
  Mat2 m = Mat2::Zero();
  switch (s) {
    case LoopSymbol::E: m(0, 1) = 1; break;
    case LoopSymbol::F: m(1, 0) = 1; break;
    case LoopSymbol::H1: m(0, 0) = 1; break;
    case LoopSymbol::H2: m(1, 1) = 1; break;
  }
  return m;
}

}  // namespace

// ------------------------------------------------------------- matrices

MatrixElement::MatrixElement(int dim) : entries_(IntMatrix::Zero(dim, dim)) {}

MatrixElement::MatrixElement(IntMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw std::invalid_argument("matrix must be square");
  for (Eigen::Index i = 0; i < entries_.rows(); ++i)
    for (Eigen::Index j = 0; j <= i; ++j)
      if (entries_(i, j) != 0) throw std::invalid_argument("matrix must be strictly upper triangular");
}

MatrixElement MatrixElement::elementary(int dim, int i, int j) {
  if (i < 1 || j > dim || i >= j) throw std::invalid_argument("E_{i,j} needs 1 <= i < j <= dim");
  MatrixElement out(dim);
  out.entries_(i - 1, j - 1) = 1;
  return out;
}

MatrixElement& MatrixElement::operator+=(const MatrixElement& other) {
  if (dim() != other.dim()) throw std::invalid_argument("matrix dimension mismatch");
  entries_ += other.entries_;
  return *this;
}

MatrixElement matrix_bracket(const MatrixElement& x, const MatrixElement& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("matrix dimension mismatch");
  return MatrixElement(IntMatrix(x.entries() * y.entries() - y.entries() * x.entries()));
}

// ---------------------------------------------------------- loop algebra

LoopElement::LoopElement(Terms terms) : terms_(std::move(terms)) {
  for (const auto& [b, c] : terms_) {
    int min_power = b.symbol == LoopSymbol::E ? 0 : 1;
    if (b.power < min_power)
      throw std::invalid_argument(to_string(b.symbol) + " t^" + std::to_string(b.power) +
                                  " is outside the positive loop algebra");
  }
}

LoopElement LoopElement::basis(LoopSymbol symbol, int power, Integer coeff) {
  return LoopElement(Terms::single({symbol, power}, coeff));
}

std::string to_string(LoopSymbol symbol) {
  switch (symbol) {
    case LoopSymbol::E: return "e";
    case LoopSymbol::F: return "f";
    case LoopSymbol::H1: return "h1";
    case LoopSymbol::H2: return "h2";
  }
  return "?";
}

LoopElement loop_bracket(const LoopElement& x, const LoopElement& y) {
  LoopElement::Terms out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      Mat2 ma = matrix_of(a.symbol);
      Mat2 mb = matrix_of(b.symbol);
      Mat2 comm = ma * mb - mb * ma;
      const int power = a.power + b.power;
      Integer scale = ca * cb;
      out.add({LoopSymbol::E, power}, scale * comm(0, 1));
      out.add({LoopSymbol::F, power}, scale * comm(1, 0));
      out.add({LoopSymbol::H1, power}, scale * comm(0, 0));
      out.add({LoopSymbol::H2, power}, scale * comm(1, 1));
    }
  }
  return LoopElement(std::move(out));
}

// ----------------------------------------------------------------- words

WordElement word_product(const WordElement& x, const WordElement& y) {
  WordElement::Terms out;
  for (const auto& [u, cu] : x.terms()) {
    for (const auto& [v, cv] : y.terms()) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add(w, cu * cv);
    }
  }
  return WordElement(std::move(out));
}

WordElement word_bracket(const WordElement& x, const WordElement& y) {
  return word_product(x, y) - word_product(y, x);
}

// ------------------------------------------------------------------- maps

MatrixElement phi_upper(const PrimitiveElement& x) {
  const int n = static_cast<int>(x.family().alphabet().size());
  if (x.family().name() != "interval-ladders:" + std::to_string(n))
    throw std::invalid_argument("phi_upper expects an interval-ladders family, got '" + x.family().name() + "'");
  MatrixElement out(n + 1);
  for (const auto& [key, c] : x.terms()) {
    auto colors = ladder_colors(parse_forest(key), LadderReading::RootToLeaf);
    if (!colors) throw std::invalid_argument("phi_upper: '" + key + "' is not a ladder");
    std::vector<int> seq = integer_colors(*colors);
    for (std::size_t i = 1; i < seq.size(); ++i)
      if (seq[i] != seq[i - 1] + 1) throw std::invalid_argument("phi_upper: '" + key + "' is not an interval ladder");
    const int k = seq.front();
    const int m = static_cast<int>(seq.size()) - 1;
    if (k < 1 || k + m > n) throw std::invalid_argument("phi_upper: '" + key + "' leaves [1, n]");
    IntMatrix e = MatrixElement::elementary(n + 1, k, k + m + 1).entries();
    out += MatrixElement(IntMatrix(-to_small(c) * e));
  }
  return out;
}

LoopElement phi_loop(const PrimitiveElement& x) {
  LoopElement::Terms out;
  for (const auto& [key, c] : x.terms()) {
    auto colors = ladder_colors(parse_forest(key), LadderReading::RootToLeaf);
    if (!colors) throw std::invalid_argument("phi_loop: '" + key + "' is not a ladder");
    std::vector<int> seq = integer_colors(*colors);
    for (std::size_t i = 0; i < seq.size(); ++i)
      if ((seq[i] != 1 && seq[i] != 2) || (i && seq[i] == seq[i - 1]))
        throw std::invalid_argument("phi_loop: '" + key + "' is not an alternating ladder");
    const int root = seq.front();
    const int len = static_cast<int>(seq.size());
    if (len % 2 == 1) {
      const int k = (len - 1) / 2;
      if (root == 1)
        out.add({LoopSymbol::E, k}, c);
      else
        out.add({LoopSymbol::F, k + 1}, c);
    } else {
      out.add({root == 1 ? LoopSymbol::H1 : LoopSymbol::H2, len / 2}, -c);
    }
  }
  return LoopElement(std::move(out));
}

WordElement rho_words(const PrimitiveElement& x) {
  WordElement::Terms out;
  for (const auto& [key, c] : x.terms()) {
    auto colors = ladder_colors(parse_forest(key), LadderReading::LeafToRoot);
    if (!colors) throw std::invalid_argument("rho_words: '" + key + "' is not a ladder");
    out.add(*colors, c);
  }
  return WordElement(std::move(out));
}

// ---------------------------------------------------------------- harness

std::size_t exact_rank(const std::vector<std::vector<Integer>>& rows) {
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[rank][col];
      for (std::size_t j = col; j < cols; ++j) m[r][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

LieMap<MatrixElement> upper_triangular_map(int n) {
  LieMap<MatrixElement> map;
  map.name = "phi-upper";
  map.apply = phi_upper;
  map.bracket = matrix_bracket;
  map.target_basis = [n](int degree) {
    std::vector<MatrixElement> out;
    for (int i = 1; i + degree <= n + 1; ++i) out.push_back(MatrixElement::elementary(n + 1, i, i + degree));
    return out;
  };
  map.coordinates = [](const MatrixElement& x) {
    std::map<std::string, Integer> out;
    for (int i = 0; i < x.dim(); ++i)
      for (int j = 0; j < x.dim(); ++j)
        if (x.entries()(i, j) != 0)
          out["E" + std::to_string(i + 1) + "," + std::to_string(j + 1)] = Integer(static_cast<long>(x.entries()(i, j)));
    return out;
  };
  return map;
}

LieMap<LoopElement> loop_map() {
  LieMap<LoopElement> map;
  map.name = "phi-loop";
  map.apply = phi_loop;
  map.bracket = loop_bracket;
  map.target_basis = [](int degree) {
    std::vector<LoopElement> out;
    if (degree % 2 == 1) {
      out.push_back(LoopElement::basis(LoopSymbol::E, (degree - 1) / 2));
      out.push_back(LoopElement::basis(LoopSymbol::F, (degree + 1) / 2));
    } else {
      out.push_back(LoopElement::basis(LoopSymbol::H1, degree / 2));
      out.push_back(LoopElement::basis(LoopSymbol::H2, degree / 2));
    }
    return out;
  };
  map.coordinates = [](const LoopElement& x) {
    std::map<std::string, Integer> out;
    for (const auto& [b, c] : x.terms()) out[to_string(b.symbol) + "t^" + std::to_string(b.power)] = c;
    return out;
  };
  return map;
}

LieMap<WordElement> word_map(std::vector<Color> alphabet) {
  LieMap<WordElement> map;
  map.name = "rho-words";
  map.apply = rho_words;
  map.bracket = word_bracket;
  map.target_basis = [alphabet](int degree) {
    std::vector<WordElement> out;
    std::vector<std::size_t> digits(degree, 0);
    while (true) {
      Word w;
      for (auto d : digits) w.push_back(alphabet[d]);
      out.push_back(WordElement::word(w));
      int i = degree - 1;
      while (i >= 0 && ++digits[i] == alphabet.size()) digits[i--] = 0;
      if (i < 0) break;
    }
    return out;
  };
  map.coordinates = [](const WordElement& x) {
    std::map<std::string, Integer> out;
    for (const auto& [w, c] : x.terms()) {
      std::string label;
      for (const auto& letter : w) label += "X" + letter + ".";
      out[label] = c;
    }
    return out;
  };
  return map;
}

}  // namespace forestry
