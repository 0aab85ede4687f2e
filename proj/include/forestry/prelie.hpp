#pragma once

// Pre-Lie algebra on the primitive part of the Hall algebra: integer
// combinations of connected family members, with grafting as the product.

#include "forestry/hall.hpp"

namespace forestry {

class PrimitiveElement {
 public:
  using Terms = SparseVector<std::string, Integer>;

  struct Trusted {};

  explicit PrimitiveElement(Family family) : family_(std::move(family)) {}
  /// Throws std::invalid_argument unless every key is a connected member.
  PrimitiveElement(Family family, Terms terms);
  /// For terms whose keys are already known to be connected members.
  PrimitiveElement(Family family, Terms terms, Trusted) : family_(std::move(family)), terms_(std::move(terms)) {}

  const Family& family() const { return family_; }
  const Terms& terms() const { return terms_; }
  Integer coeff(const std::string& key) const { return terms_.coeff(key); }
  bool is_zero() const { return terms_.empty(); }

  PrimitiveElement& operator+=(const PrimitiveElement& other);
  PrimitiveElement& operator-=(const PrimitiveElement& other);
  PrimitiveElement& operator*=(const Integer& s);

  friend PrimitiveElement operator+(PrimitiveElement a, const PrimitiveElement& b) { return a += b; }
  friend PrimitiveElement operator-(PrimitiveElement a, const PrimitiveElement& b) { return a -= b; }
  friend PrimitiveElement operator-(PrimitiveElement a) { return a *= Integer(-1); }
  friend PrimitiveElement operator*(const Integer& s, PrimitiveElement a) { return a *= s; }
  friend bool operator==(const PrimitiveElement& a, const PrimitiveElement& b) { return a.terms_ == b.terms_; }

 private:
  Family family_;
  Terms terms_;
};

/// delta_t for a connected member t.
PrimitiveElement basis(const Tree& t, const Family& family);

/// delta_a |> delta_b = sum_t n(a, b, t) delta_t over the trees t obtained by
/// grafting a onto a vertex of b that lie in the family.
/// Throws std::invalid_argument if a or b is not a connected member.
PrimitiveElement prelie(const Tree& a, const Tree& b, const Family& family);
PrimitiveElement prelie(const PrimitiveElement& x, const PrimitiveElement& y);

/// [x, y] = x |> y - y |> x.
PrimitiveElement bracket(const PrimitiveElement& x, const PrimitiveElement& y);

/// (a|>b)|>c - a|>(b|>c) - (b|>a)|>c + b|>(a|>c); zero iff the left pre-Lie
/// identity holds on the triple.
PrimitiveElement prelie_residual(const Tree& a, const Tree& b, const Tree& c, const Family& family);

/// Ordered pairs of distinct edges (e1, e2) of s forming an admissible cut
/// with P_e1 ~ a, P_e2 ~ b and root component ~ c.
std::size_t two_edge_cut_count(const Tree& a, const Tree& b, const Tree& c, const Tree& s);

/// Drops terms that are not connected members of `family`. The alphabet of
/// `family` must be contained in the alphabet of x's family.
PrimitiveElement project_to_family(const PrimitiveElement& x, const Family& family);

struct HallPreLie {
  PrimitiveElement product;
  /// Coefficient of delta_{a+b} in delta_a * delta_b (2 when a ~ b).
  Rational split_coefficient;
};

/// delta_a * delta_b minus its split-extension term. Throws std::logic_error
/// if anything disconnected survives the subtraction.
HallPreLie prelie_via_hall(const Tree& a, const Tree& b, const Family& family);

HallElement to_hall(const PrimitiveElement& x);

}  // namespace forestry
