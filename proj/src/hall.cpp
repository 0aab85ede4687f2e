#include "forestry/hall.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <unordered_map>

namespace forestry {

namespace {

void require_same_family(const Family& a, const Family& b) {
  if (!(a == b)) throw std::invalid_argument("family mismatch: '" + a.name() + "' vs '" + b.name() + "'");
}

// Sub-multisets of the components of a forest, as (M, N) with M + N ~ f.
std::vector<std::pair<Forest, Forest>> component_splits(const Forest& f) {
  std::map<std::string, std::pair<Tree, std::size_t>> groups;
  for (auto& t : components(f)) {
    auto [it, inserted] = groups.try_emplace(t.key(), t, 0);
    ++it->second.second;
  }
  std::vector<std::pair<Forest, Forest>> out{{Forest(), Forest()}};
  for (const auto& [key, group] : groups) {
    const auto& [tree, mult] = group;
    std::vector<std::pair<Forest, Forest>> next;
    for (const auto& [left, right] : out) {
      for (std::size_t k = 0; k <= mult; ++k) {
        Forest l = left;
        Forest r = right;
        for (std::size_t i = 0; i < k; ++i) l = l + tree;
        for (std::size_t i = k; i < mult; ++i) r = r + tree;
        next.emplace_back(std::move(l), std::move(r));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------- HallElement

HallElement::HallElement(Family family, Terms terms) : family_(std::move(family)), terms_(std::move(terms)) {
  for (const auto& [key, c] : terms_)
    if (!family_.contains(parse_forest(key)))
      throw std::invalid_argument("'" + key + "' is not in family '" + family_.name() + "'");
}

void HallElement::add(const Forest& f, const Rational& c) {
  if (!family_.contains(f)) throw std::invalid_argument("'" + f.key() + "' is not in family '" + family_.name() + "'");
  terms_.add(f.key(), c);
}

HallElement& HallElement::operator+=(const HallElement& other) {
  require_same_family(family_, other.family_);
  terms_ += other.terms_;
  return *this;
}

HallElement& HallElement::operator-=(const HallElement& other) {
  require_same_family(family_, other.family_);
  terms_ -= other.terms_;
  return *this;
}

HallElement& HallElement::operator*=(const Rational& s) {
  terms_ *= s;
  return *this;
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  require_same_family(family_, other.family_);
  terms_ += other.terms_;
  return *this;
}

HallElement delta(const Forest& f, const Family& family) {
  HallElement out(family);
  out.add(f, 1);
  return out;
}

HallElement hall_unit(const Family& family) { return delta(Forest(), family); }

// ----------------------------------------------------------------- product

const SplitProfile& cached_split_profile(const Forest& q) {
  static std::shared_mutex mutex;
  static std::unordered_map<std::string, SplitProfile> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(q.key()); it != cache.end()) return it->second;
  }
  SplitProfile profile = split_profile(q);
  std::unique_lock lock(mutex);
  return cache.try_emplace(q.key(), std::move(profile)).first->second;
}

SparseVector<std::string, Integer> delta_product(const Forest& m, const Forest& n, const Family& family) {
  std::vector<Tree> pieces = components(m);
  std::sort(pieces.begin(), pieces.end(), [](const Tree& a, const Tree& b) { return a.key() < b.key(); });
  const KeyPair type{m.key(), n.key()};
  const int slots = static_cast<int>(n.size());
  std::set<std::string> seen;
  SparseVector<std::string, Integer> out;
  // Piece i goes beside N (slot -1) or under a vertex of N. Equal pieces take
  // nondecreasing slots. A graft whose component leaves the family is cut
  // off at once: that component is a convex subposet of every completion.
  std::function<void(std::size_t, int, const Forest&)> place = [&](std::size_t i, int from, const Forest& q) {
    if (i == pieces.size()) {
      if (seen.insert(q.key()).second && family.contains(q)) {
        const auto& profile = cached_split_profile(q);
        if (auto it = profile.find(type); it != profile.end()) out.add(q.key(), Integer(it->second));
      }
      return;
    }
    for (int slot = from; slot < slots; ++slot) {
      int next_from = i + 1 < pieces.size() && pieces[i + 1].key() == pieces[i].key() ? slot : -1;
      if (slot == -1) {
        place(i + 1, next_from, q + pieces[i]);
        continue;
      }
      Forest grown = graft(pieces[i], q, slot);
      int root = slot;
      while (grown.parent(root) != -1) root = grown.parent(root);
      if (!family.contains_connected(subtree(grown, root))) continue;
      place(i + 1, next_from, grown);
    }
  };
  place(0, -1, n);
  return out;
}

HallElement hall_mul(const HallElement& f, const HallElement& g) {
  require_same_family(f.family(), g.family());
  HallElement::Terms terms;
  for (const auto& [mk, mc] : f.terms()) {
    Forest m = parse_forest(mk);
    for (const auto& [nk, nc] : g.terms()) {
      Forest n = parse_forest(nk);
      Rational scale = mc * nc;
      for (const auto& [qk, count] : delta_product(m, n, f.family())) terms.add(qk, scale * Rational(count));
    }
  }
  return HallElement(f.family(), std::move(terms), HallElement::Trusted{});
}

Integer count_extensions(const Forest& m, const Forest& n, const Forest& q) {
  if (k0_class(m) + k0_class(n) != k0_class(q)) return 0;
  const auto& profile = cached_split_profile(q);
  auto it = profile.find({m.key(), n.key()});
  if (it == profile.end()) return 0;
  return Integer(it->second) * Integer(aut_order(m)) * Integer(aut_order(n));
}

// --------------------------------------------------------------- coproduct

TensorElement coproduct(const HallElement& f) {
  TensorElement::Terms terms;
  for (const auto& [key, c] : f.terms())
    for (const auto& [left, right] : component_splits(parse_forest(key))) terms.add({left.key(), right.key()}, c);
  return TensorElement(f.family(), std::move(terms));
}

TensorElement tensor_mul(const TensorElement& x, const TensorElement& y) {
  require_same_family(x.family(), y.family());
  const Family& family = x.family();
  TensorElement::Terms terms;
  for (const auto& [xk, xc] : x.terms()) {
    for (const auto& [yk, yc] : y.terms()) {
      auto left = delta_product(parse_forest(xk.first), parse_forest(yk.first), family);
      auto right = delta_product(parse_forest(xk.second), parse_forest(yk.second), family);
      Rational scale = xc * yc;
      for (const auto& [lk, lc] : left)
        for (const auto& [rk, rc] : right) terms.add({lk, rk}, scale * Rational(lc * rc));
    }
  }
  return TensorElement(family, std::move(terms));
}

HallElement multiply_tensor(const TensorElement& t, const std::function<HallElement(const HallElement&)>& left,
                            const std::function<HallElement(const HallElement&)>& right) {
  const Family& family = t.family();
  HallElement out(family);
  for (const auto& [pair, c] : t.terms()) {
    HallElement l = left(delta(parse_forest(pair.first), family));
    HallElement r = right(delta(parse_forest(pair.second), family));
    out += c * hall_mul(l, r);
  }
  return out;
}

// ---------------------------------------------------------------- antipode

namespace {

HallElement antipode_of_delta(const Forest& p, const Family& family, std::map<std::string, HallElement>& memo) {
  if (auto it = memo.find(p.key()); it != memo.end()) return it->second;
  HallElement out = -delta(p, family);
  if (p.empty()) {
    out = delta(p, family);
  } else {
    for (const auto& [left, right] : component_splits(p)) {
      if (left.empty() || right.empty()) continue;
      out -= hall_mul(antipode_of_delta(left, family, memo), delta(right, family));
    }
  }
  memo.emplace(p.key(), out);
  return out;
}

}  // namespace

HallElement antipode(const HallElement& f) {
  std::map<std::string, HallElement> memo;
  HallElement out(f.family());
  for (const auto& [key, c] : f.terms()) out += c * antipode_of_delta(parse_forest(key), f.family(), memo);
  bool integral_input = true;
  for (const auto& [key, c] : f.terms()) integral_input = integral_input && c.get_den() == 1;
  if (integral_input) require_integral(out, "antipode");
  return out;
}

// ------------------------------------------------------------------ grading

Rational counit(const HallElement& f) { return f.coeff("0"); }

std::map<std::size_t, HallElement> split_by_size(const HallElement& f) {
  std::map<std::size_t, HallElement> out;
  for (const auto& [key, c] : f.terms()) {
    Forest q = parse_forest(key);
    out.try_emplace(q.size(), f.family()).first->second.add(q, c);
  }
  return out;
}

std::map<K0Class, HallElement> split_by_k0(const HallElement& f) {
  std::map<K0Class, HallElement> out;
  for (const auto& [key, c] : f.terms()) {
    Forest q = parse_forest(key);
    out.try_emplace(k0_class(q), f.family()).first->second.add(q, c);
  }
  return out;
}

void require_integral(const HallElement& f, const std::string& context) {
  for (const auto& [key, c] : f.terms())
    if (c.get_den() != 1)
      throw std::logic_error(context + ": non-integral coefficient " + c.get_str() + " on '" + key + "'");
}

}  // namespace forestry
