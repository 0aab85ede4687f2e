#include "forestry/prelie.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace forestry {

namespace {

void require_member(const Tree& t, const Family& family) {
  if (!family.contains_connected(t))
    throw std::invalid_argument("'" + t.key() + "' is not a connected member of '" + family.name() + "'");
}

void require_same_family(const Family& a, const Family& b) {
  if (!(a == b)) throw std::invalid_argument("family mismatch: '" + a.name() + "' vs '" + b.name() + "'");
}

// sum_t n(a, b, t) delta_t over the distinct graftings t that stay in the
// family, memoized per (family, a, b).
PrimitiveElement::Terms graft_terms(const Tree& a, const Tree& b, const Family& family) {
  using Key = std::tuple<std::string, std::string, std::string>;
  static std::shared_mutex mutex;
  static std::map<Key, PrimitiveElement::Terms> memo;
  Key key{family.name(), a.key(), b.key()};
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  std::map<std::string, Tree> results;
  for (std::size_t v = 0; v < b.size(); ++v) {
    Tree t = graft(a, b, static_cast<int>(v));
    if (!results.contains(t.key()) && family.contains_connected(t)) results.emplace(t.key(), t);
  }
  PrimitiveElement::Terms out;
  for (const auto& [k, t] : results) out.add(k, Integer(static_cast<unsigned long>(structure_constant(a, b, t))));
  std::unique_lock lock(mutex);
  return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

PrimitiveElement::PrimitiveElement(Family family, Terms terms) : family_(std::move(family)), terms_(std::move(terms)) {
  for (const auto& [key, c] : terms_) {
    Forest f = parse_forest(key);
    if (!f.is_connected() || !family_.contains_connected(Tree(f)))
      throw std::invalid_argument("'" + key + "' is not a connected member of '" + family_.name() + "'");
  }
}

PrimitiveElement& PrimitiveElement::operator+=(const PrimitiveElement& other) {
  require_same_family(family_, other.family_);
  terms_ += other.terms_;
  return *this;
}

PrimitiveElement& PrimitiveElement::operator-=(const PrimitiveElement& other) {
  require_same_family(family_, other.family_);
  terms_ -= other.terms_;
  return *this;
}

PrimitiveElement& PrimitiveElement::operator*=(const Integer& s) {
  terms_ *= s;
  return *this;
}

PrimitiveElement basis(const Tree& t, const Family& family) {
  require_member(t, family);
  return PrimitiveElement(family, PrimitiveElement::Terms::single(t.key()), PrimitiveElement::Trusted{});
}

PrimitiveElement prelie(const Tree& a, const Tree& b, const Family& family) {
  require_member(a, family);
  require_member(b, family);
  return PrimitiveElement(family, graft_terms(a, b, family), PrimitiveElement::Trusted{});
}

PrimitiveElement prelie(const PrimitiveElement& x, const PrimitiveElement& y) {
  require_same_family(x.family(), y.family());
  const Family& family = x.family();
  std::vector<std::pair<Tree, Integer>> ys;
  for (const auto& [key, c] : y.terms()) ys.emplace_back(parse_tree(key), c);
  PrimitiveElement::Terms terms;
  for (const auto& [xk, xc] : x.terms()) {
    Tree a = parse_tree(xk);
    for (const auto& [b, yc] : ys) {
      Integer scale = xc * yc;
      for (const auto& [tk, n] : graft_terms(a, b, family)) terms.add(tk, scale * n);
    }
  }
  return PrimitiveElement(family, std::move(terms), PrimitiveElement::Trusted{});
}

PrimitiveElement bracket(const PrimitiveElement& x, const PrimitiveElement& y) { return prelie(x, y) - prelie(y, x); }

PrimitiveElement prelie_residual(const Tree& a, const Tree& b, const Tree& c, const Family& family) {
  PrimitiveElement da = basis(a, family);
  PrimitiveElement db = basis(b, family);
  PrimitiveElement dc = basis(c, family);
  return prelie(prelie(da, db), dc) - prelie(da, prelie(db, dc)) - prelie(prelie(db, da), dc) +
         prelie(db, prelie(da, dc));
}

std::size_t two_edge_cut_count(const Tree& a, const Tree& b, const Tree& c, const Tree& s) {
  if (a.size() + b.size() + c.size() != s.size()) return 0;
  std::size_t count = 0;
  const int n = static_cast<int>(s.size());
  for (int u = 0; u < n; ++u) {
    if (s.parent(u) == -1 || s.subtree_key(u) != a.key()) continue;
    for (int w = 0; w < n; ++w) {
      if (w == u || s.parent(w) == -1 || s.subtree_key(w) != b.key()) continue;
      if (s.below(u, w) || s.below(w, u)) continue;  // not admissible
      VertexSet top(s.size());
      for (int v = 0; v < n; ++v)
        if (!s.below(v, u) && !s.below(v, w)) top.set(v);
      if (subset_key(s, top) == c.key()) ++count;
    }
  }
  return count;
}

PrimitiveElement project_to_family(const PrimitiveElement& x, const Family& family) {
  for (const auto& color : family.alphabet()) {
    const auto& source = x.family().alphabet();
    if (std::find(source.begin(), source.end(), color) == source.end())
      throw std::invalid_argument("project_to_family: color '" + color + "' of '" + family.name() +
                                  "' is not in the alphabet of '" + x.family().name() + "'");
  }
  PrimitiveElement::Terms terms;
  for (const auto& [key, c] : x.terms())
    if (family.contains_connected(parse_tree(key))) terms.add(key, c);
  return PrimitiveElement(family, std::move(terms), PrimitiveElement::Trusted{});
}

HallPreLie prelie_via_hall(const Tree& a, const Tree& b, const Family& family) {
  require_member(a, family);
  require_member(b, family);
  HallElement product = hall_mul(delta(a, family), delta(b, family));
  Forest split = a + b;
  Rational split_coefficient = product.coeff(split.key());
  product -= split_coefficient * delta(split, family);
  require_integral(product, "prelie_via_hall");
  PrimitiveElement::Terms terms;
  for (const auto& [key, c] : product.terms()) {
    Forest f = parse_forest(key);
    if (!f.is_connected())
      throw std::logic_error("prelie_via_hall: disconnected term '" + key + "' survives the subtraction");
    terms.add(key, Integer(c.get_num()));
  }
  return {PrimitiveElement(family, std::move(terms), PrimitiveElement::Trusted{}), split_coefficient};
}

HallElement to_hall(const PrimitiveElement& x) {
  HallElement::Terms terms;
  for (const auto& [key, c] : x.terms()) terms.add(key, Rational(c));
  return HallElement(x.family(), std::move(terms), HallElement::Trusted{});
}

}  // namespace forestry
