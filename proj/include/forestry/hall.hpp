#pragma once

// Ringel-Hall algebra of the incidence category of a closed family:
// finitely supported rational functions on isomorphism classes, with
// convolution over order ideals, the disjoint-union coproduct, counit and
// antipode.

#include "forestry/family.hpp"
#include "forestry/sparse.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>

namespace forestry {

using KeyPair = std::pair<std::string, std::string>;

class HallElement {
 public:
  using Terms = SparseVector<std::string, Rational>;

  struct Trusted {};

  explicit HallElement(Family family) : family_(std::move(family)) {}
  /// Validates that every key is a member of the family.
  HallElement(Family family, Terms terms);
  /// For terms whose keys are already known to be family members.
  HallElement(Family family, Terms terms, Trusted) : family_(std::move(family)), terms_(std::move(terms)) {}

  const Family& family() const { return family_; }
  const Terms& terms() const { return terms_; }
  Rational coeff(const std::string& key) const { return terms_.coeff(key); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * delta_f; throws std::invalid_argument if f is not in the family.
  void add(const Forest& f, const Rational& c);

  HallElement& operator+=(const HallElement& other);
  HallElement& operator-=(const HallElement& other);
  HallElement& operator*=(const Rational& s);

  friend HallElement operator+(HallElement a, const HallElement& b) { return a += b; }
  friend HallElement operator-(HallElement a, const HallElement& b) { return a -= b; }
  friend HallElement operator-(HallElement a) { return a *= Rational(-1); }
  friend HallElement operator*(const Rational& s, HallElement a) { return a *= s; }
  friend bool operator==(const HallElement& a, const HallElement& b) { return a.terms_ == b.terms_; }

 private:
  Family family_;
  Terms terms_;
};

/// Element of H (x) H as a flat map over ordered key pairs.
class TensorElement {
 public:
  using Terms = SparseVector<KeyPair, Rational>;

  explicit TensorElement(Family family) : family_(std::move(family)) {}
  TensorElement(Family family, Terms terms) : family_(std::move(family)), terms_(std::move(terms)) {}

  const Family& family() const { return family_; }
  const Terms& terms() const { return terms_; }
  Rational coeff(const std::string& left, const std::string& right) const { return terms_.coeff({left, right}); }

  TensorElement& operator+=(const TensorElement& other);
  friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms_ == b.terms_; }

 private:
  Family family_;
  Terms terms_;
};

/// delta_f; throws std::invalid_argument if f is not in the family.
HallElement delta(const Forest& f, const Family& family);
HallElement hall_unit(const Family& family);

/// Basis product delta_M * delta_N as counts per canonical key: candidates
/// attach each component of M under a vertex of N or beside N; each
/// surviving candidate Q gets the number of ideals I of Q with I ~ M and
/// Q \ I ~ N. The family must be closed; partial candidates outside it are
/// pruned.
SparseVector<std::string, Integer> delta_product(const Forest& m, const Forest& n, const Family& family);

/// Convolution product. Throws std::invalid_argument on a family mismatch.
HallElement hall_mul(const HallElement& f, const HallElement& g);

/// F^Q_{M,N}: exact sequences M -> Q -> N, i.e. ideal splits of Q of type
/// (M, N) times |Aut M| |Aut N|.
Integer count_extensions(const Forest& m, const Forest& n, const Forest& q);

/// Memoized split profile of a forest, keyed by its canonical form.
const SplitProfile& cached_split_profile(const Forest& q);

TensorElement coproduct(const HallElement& f);
/// (a (x) b)(c (x) d) = ac (x) bd, extended bilinearly.
TensorElement tensor_mul(const TensorElement& x, const TensorElement& y);
/// m o (left (x) right) applied to a tensor.
HallElement multiply_tensor(const TensorElement& t,
                            const std::function<HallElement(const HallElement&)>& left,
                            const std::function<HallElement(const HallElement&)>& right);

/// Convolution inverse of the identity via the graded recursion
/// S(x) = -x - sum S(x') * x'' over the reduced coproduct. The result is
/// asserted integral on delta inputs.
HallElement antipode(const HallElement& f);

Rational counit(const HallElement& f);
std::map<std::size_t, HallElement> split_by_size(const HallElement& f);
std::map<K0Class, HallElement> split_by_k0(const HallElement& f);

/// Throws std::logic_error if any coefficient is not an integer.
void require_integral(const HallElement& f, const std::string& context);

}  // namespace forestry
