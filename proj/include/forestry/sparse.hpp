#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

namespace forestry {

using Integer = mpz_class;
using Rational = mpq_class;

/// Finitely supported map Key -> Scalar. Zero coefficients are never stored,
/// so two vectors are equal iff their term maps are equal.
template <class Key, class Scalar>
class SparseVector {
 public:
  using map_type = std::map<Key, Scalar>;
  using const_iterator = typename map_type::const_iterator;

  SparseVector() = default;

  static SparseVector single(Key key, Scalar coeff = Scalar(1)) {
    SparseVector v;
    v.add(std::move(key), coeff);
    return v;
  }

  void add(const Key& key, const Scalar& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Scalar coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  SparseVector& operator+=(const SparseVector& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& other) {
    for (const auto& [k, c] : other.terms_) add(k, Scalar(-c));
    return *this;
  }
  SparseVector& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator-(SparseVector a) { return a *= Scalar(-1); }
  friend SparseVector operator*(const Scalar& s, SparseVector a) { return a *= s; }
  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.terms_ == b.terms_; }

 private:
  map_type terms_;
};

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace forestry
