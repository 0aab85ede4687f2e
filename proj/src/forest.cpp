#include "forestry/forest.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <numeric>

namespace forestry {

namespace {

std::string join_sorted(std::vector<std::string> parts, char sep) {
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("automorphism count exceeds 64 bits");
  return r;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

// Product of factorials of run lengths in a sorted key list.
std::uint64_t multiplicity_factor(std::vector<std::string> keys) {
  std::sort(keys.begin(), keys.end());
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    r = checked_mul(r, factorial(j - i));
    i = j;
  }
  return r;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Forest forest() {
    skip_ws();
    if (at_end()) fail("expected a forest");
    std::size_t save = pos_;
    if (text_[pos_] == '0') {
      ++pos_;
      skip_ws();
      if (at_end()) return Forest();
      pos_ = save;
    }
    tree(-1);
    skip_ws();
    while (!at_end() && text_[pos_] == '+') {
      ++pos_;
      tree(-1);
      skip_ws();
    }
    if (!at_end()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return Forest(std::move(colors_), std::move(parents_));
  }

 private:
  void tree(int parent) {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (pos_ == start) fail(at_end() ? "expected a color token" : std::string("expected a color token, found '") + text_[pos_] + "'");
    std::string token(text_.substr(start, pos_ - start));
    if (token == "0") throw ParseError("color token '0' is reserved for the empty forest", start);
    int self = static_cast<int>(colors_.size());
    colors_.push_back(std::move(token));
    parents_.push_back(parent);
    skip_ws();
    if (!at_end() && text_[pos_] == '(') {
      ++pos_;
      tree(self);
      skip_ws();
      while (!at_end() && text_[pos_] == ',') {
        ++pos_;
        tree(self);
        skip_ws();
      }
      if (at_end()) fail("unbalanced parentheses: expected ')'");
      if (text_[pos_] != ')') fail(std::string("expected ',' or ')', found '") + text_[pos_] + "'");
      ++pos_;
    }
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Color> colors_;
  std::vector<int> parents_;
};

}  // namespace

bool is_valid_color(std::string_view token) {
  if (token.empty() || token == "0") return false;
  return std::all_of(token.begin(), token.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

// ------------------------------------------------------------------ Forest

Forest::Forest() {
  static const auto empty = std::make_shared<const Data>();
  d_ = empty;
}

Forest::Forest(std::vector<Color> colors, std::vector<int> parents) : d_(build(std::move(colors), std::move(parents))) {}

Forest Forest::vertex(Color color) { return Forest({std::move(color)}, {-1}); }

std::shared_ptr<const Forest::Data> Forest::build(std::vector<Color> colors, std::vector<int> parents) {
  if (colors.size() != parents.size()) throw std::invalid_argument("colors and parents differ in length");
  for (const auto& c : colors)
    if (!is_valid_color(c)) throw std::invalid_argument("invalid color token '" + c + "'");
  auto d = std::make_shared<Data>();
  d->colors = std::move(colors);
  d->parents = std::move(parents);
  const int n = static_cast<int>(d->colors.size());
  d->children.assign(n, {});
  for (int v = 0; v < n; ++v) {
    int p = d->parents[v];
    if (p == -1) {
      d->roots.push_back(v);
    } else if (p < 0 || p >= n || p == v) {
      throw std::invalid_argument("parent index out of range");
    } else {
      d->children[p].push_back(v);
    }
  }
  // Every vertex must be reachable from a root, otherwise there is a cycle.
  d->vertex_keys.assign(n, {});
  std::vector<int> order;
  order.reserve(n);
  for (int r : d->roots) {
    std::vector<int> stack{r};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int c : d->children[v]) stack.push_back(c);
    }
  }
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("parent relation contains a cycle");
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    std::string& k = d->vertex_keys[v];
    k = d->colors[v];
    if (!d->children[v].empty()) {
      std::vector<std::string> parts;
      parts.reserve(d->children[v].size());
      for (int c : d->children[v]) parts.push_back(d->vertex_keys[c]);
      k += '(';
      k += join_sorted(std::move(parts), ',');
      k += ')';
    }
  }
  if (!d->roots.empty()) {
    std::vector<std::string> parts;
    for (int r : d->roots) parts.push_back(d->vertex_keys[r]);
    d->key = join_sorted(std::move(parts), '+');
  }
  return d;
}

bool Forest::below(int u, int v) const {
  for (int w = u; w != -1; w = d_->parents.at(w))
    if (w == v) return true;
  return false;
}

Tree::Tree(Forest f) : Forest(std::move(f)) {
  if (!is_connected()) throw std::invalid_argument("expected a tree (exactly one component), got '" + key() + "'");
}

// ----------------------------------------------------------------- parsing

Forest parse_forest(std::string_view text) { return Parser(text).forest(); }

Tree parse_tree(std::string_view text) {
  Forest f = parse_forest(text);
  if (!f.is_connected()) throw ParseError("expected a single tree", 0);
  return Tree(std::move(f));
}

// ------------------------------------------------------------ construction

Forest disjoint_union(const Forest& a, const Forest& b) {
  std::vector<Color> colors = a.colors();
  std::vector<int> parents = a.parents();
  const int offset = static_cast<int>(a.size());
  for (std::size_t v = 0; v < b.size(); ++v) {
    colors.push_back(b.colors()[v]);
    int p = b.parents()[v];
    parents.push_back(p == -1 ? -1 : p + offset);
  }
  return Forest(std::move(colors), std::move(parents));
}

Subforest induced(const Forest& f, const VertexSet& vertices) {
  Subforest out;
  std::vector<int> local(f.size(), -1);
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (!vertices.test(v)) continue;
    local[v] = static_cast<int>(out.origin.size());
    out.origin.push_back(static_cast<int>(v));
  }
  std::vector<Color> colors;
  std::vector<int> parents;
  for (int v : out.origin) {
    colors.push_back(f.color(v));
    int p = f.parent(v);
    while (p != -1 && !vertices.test(p)) p = f.parent(p);
    parents.push_back(p == -1 ? -1 : local[p]);
  }
  out.forest = Forest(std::move(colors), std::move(parents));
  return out;
}

std::vector<Tree> components(const Forest& f) {
  std::vector<Tree> out;
  for (int r : f.roots()) out.push_back(subtree(f, r));
  return out;
}

Tree subtree(const Forest& f, int v) {
  VertexSet set(f.size());
  for (std::size_t u = 0; u < f.size(); ++u)
    if (f.below(static_cast<int>(u), v)) set.set(u);
  return Tree(induced(f, set).forest);
}

Forest graft(const Tree& scion, const Forest& stock, int v) {
  if (v < 0 || static_cast<std::size_t>(v) >= stock.size())
    throw std::out_of_range("graft: vertex " + std::to_string(v) + " not in stock of size " +
                            std::to_string(stock.size()));
  std::vector<Color> colors = stock.colors();
  std::vector<int> parents = stock.parents();
  const int offset = static_cast<int>(stock.size());
  for (std::size_t u = 0; u < scion.size(); ++u) {
    colors.push_back(scion.colors()[u]);
    int p = scion.parents()[u];
    parents.push_back(p == -1 ? v : p + offset);
  }
  return Forest(std::move(colors), std::move(parents));
}

Tree graft(const Tree& scion, const Tree& stock, int v) {
  return Tree(graft(scion, static_cast<const Forest&>(stock), v));
}

Tree make_ladder(const std::vector<Color>& colors, LadderReading reading) {
  if (colors.empty()) throw std::invalid_argument("a ladder needs at least one vertex");
  std::vector<Color> top_down = colors;
  if (reading == LadderReading::LeafToRoot) std::reverse(top_down.begin(), top_down.end());
  std::vector<int> parents(top_down.size());
  std::iota(parents.begin(), parents.end(), -1);
  return Tree(Forest(std::move(top_down), std::move(parents)));
}

std::optional<std::vector<Color>> ladder_colors(const Forest& f, LadderReading reading) {
  if (!f.is_connected()) return std::nullopt;
  std::vector<Color> out;
  int v = f.roots().front();
  while (true) {
    out.push_back(f.color(v));
    auto ch = f.children(v);
    if (ch.empty()) break;
    if (ch.size() > 1) return std::nullopt;
    v = ch.front();
  }
  if (reading == LadderReading::LeafToRoot) std::reverse(out.begin(), out.end());
  return out;
}

// --------------------------------------------------------- canonical forms

std::string canonical_form(const Forest& f) { return f.key(); }

std::string subset_key(const Forest& f, const VertexSet& vertices) {
  // keys of the topmost selected vertices at or below v
  std::function<void(int, std::vector<std::string>&)> gather;
  std::function<std::string(int)> rec = [&](int v) {
    std::string k = f.color(v);
    std::vector<std::string> parts;
    for (int c : f.children(v)) gather(c, parts);
    if (!parts.empty()) {
      k += '(';
      k += join_sorted(std::move(parts), ',');
      k += ')';
    }
    return k;
  };
  gather = [&](int v, std::vector<std::string>& parts) {
    if (vertices.test(v)) {
      parts.push_back(rec(v));
      return;
    }
    for (int c : f.children(v)) gather(c, parts);
  };
  std::vector<std::string> parts;
  for (int r : f.roots()) gather(r, parts);
  if (parts.empty()) return "0";
  return join_sorted(std::move(parts), '+');
}

std::vector<int> canonical_order(const Forest& f) {
  auto by_key = [&](std::vector<int> vs) {
    std::stable_sort(vs.begin(), vs.end(),
                     [&](int a, int b) { return f.subtree_key(a) < f.subtree_key(b); });
    return vs;
  };
  std::vector<int> out;
  std::function<void(int)> rec = [&](int v) {
    out.push_back(v);
    auto ch = f.children(v);
    for (int c : by_key({ch.begin(), ch.end()})) rec(c);
  };
  auto roots = f.roots();
  for (int r : by_key({roots.begin(), roots.end()})) rec(r);
  return out;
}

std::uint64_t aut_order(const Forest& f) {
  std::uint64_t r = 1;
  for (std::size_t v = 0; v < f.size(); ++v) {
    std::vector<std::string> keys;
    for (int c : f.children(static_cast<int>(v))) keys.push_back(f.subtree_key(c));
    r = checked_mul(r, multiplicity_factor(std::move(keys)));
  }
  std::vector<std::string> keys;
  for (int root : f.roots()) keys.push_back(f.subtree_key(root));
  return checked_mul(r, multiplicity_factor(std::move(keys)));
}

std::vector<std::vector<int>> isomorphisms(const Forest& a, const Forest& b) {
  std::vector<std::vector<int>> out;
  if (a.key() != b.key()) return out;

  // Pending matching problems: match list A onto list B bijectively.
  using Problem = std::pair<std::vector<int>, std::vector<int>>;
  std::vector<int> mapping(a.size(), -1);
  std::function<void(std::deque<Problem>)> solve = [&](std::deque<Problem> pending) {
    while (!pending.empty() && pending.front().first.empty()) pending.pop_front();
    if (pending.empty()) {
      out.push_back(mapping);
      return;
    }
    Problem head = std::move(pending.front());
    pending.pop_front();
    int u = head.first.back();
    head.first.pop_back();
    for (std::size_t j = 0; j < head.second.size(); ++j) {
      int w = head.second[j];
      if (a.subtree_key(u) != b.subtree_key(w)) continue;
      mapping[u] = w;
      std::deque<Problem> next = pending;
      std::vector<int> rest_b = head.second;
      rest_b.erase(rest_b.begin() + static_cast<std::ptrdiff_t>(j));
      next.emplace_front(head.first, std::move(rest_b));
      auto ca = a.children(u);
      auto cb = b.children(w);
      next.emplace_back(std::vector<int>(ca.begin(), ca.end()), std::vector<int>(cb.begin(), cb.end()));
      solve(std::move(next));
    }
    mapping[u] = -1;
  };
  auto ra = a.roots();
  auto rb = b.roots();
  solve({Problem{{ra.begin(), ra.end()}, {rb.begin(), rb.end()}}});
  return out;
}

// ------------------------------------------------------- ideals and cuts

std::vector<VertexSet> ideal_sets(const Forest& f) {
  const std::size_t n = f.size();
  // Ideals of the subtree at v: the whole subtree, or a product of ideals of
  // the child subtrees.
  std::function<std::vector<VertexSet>(int)> rec = [&](int v) {
    std::vector<VertexSet> partial{VertexSet(n)};
    VertexSet whole(n);
    whole.set(v);
    for (int c : f.children(v)) {
      std::vector<VertexSet> sub = rec(c);
      whole |= sub.back();
      std::vector<VertexSet> next;
      next.reserve(partial.size() * sub.size());
      for (const auto& p : partial)
        for (const auto& s : sub) next.push_back(p | s);
      partial = std::move(next);
    }
    partial.push_back(whole);  // last entry is always the whole subtree
    return partial;
  };
  std::vector<VertexSet> out{VertexSet(n)};
  for (int r : f.roots()) {
    std::vector<VertexSet> sub = rec(r);
    std::vector<VertexSet> next;
    next.reserve(out.size() * sub.size());
    for (const auto& p : out)
      for (const auto& s : sub) next.push_back(p | s);
    out = std::move(next);
  }
  return out;
}

std::vector<IdealSplit> order_ideals(const Forest& f) {
  std::vector<IdealSplit> out;
  for (auto& set : ideal_sets(f)) {
    VertexSet rest = ~set;
    out.push_back({set, induced(f, set).forest, induced(f, rest).forest});
  }
  return out;
}

bool is_ideal(const Forest& f, const VertexSet& vertices) {
  if (vertices.size() != f.size()) return false;
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (!vertices.test(v)) continue;
    for (int c : f.children(static_cast<int>(v)))
      if (!vertices.test(c)) return false;
  }
  return true;
}

SplitProfile split_profile(const Forest& f) {
  SplitProfile out;
  for (const auto& set : ideal_sets(f)) ++out[{subset_key(f, set), subset_key(f, ~set)}];
  return out;
}

std::vector<Cut> admissible_cuts(const Tree& t) {
  std::vector<Cut> out;
  for (auto& set : ideal_sets(t)) {
    if (set.test(t.root())) continue;  // the total split has no edge realization
    Cut cut{{}, set, induced(t, set).forest, Tree(induced(t, ~set).forest)};
    for (std::size_t v = 0; v < t.size(); ++v) {
      int p = t.parent(static_cast<int>(v));
      if (set.test(v) && !set.test(p)) cut.edges.emplace_back(static_cast<int>(v), p);
    }
    out.push_back(std::move(cut));
  }
  return out;
}

std::vector<EdgeCut> single_edge_cuts(const Tree& t) {
  std::vector<EdgeCut> out;
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (t.parent(static_cast<int>(v)) == -1) continue;
    VertexSet set(t.size());
    for (std::size_t u = 0; u < t.size(); ++u)
      if (t.below(static_cast<int>(u), static_cast<int>(v))) set.set(u);
    out.push_back({static_cast<int>(v), Tree(induced(t, set).forest), Tree(induced(t, ~set).forest)});
  }
  return out;
}

std::size_t structure_constant(const Tree& t1, const Tree& t2, const Tree& s) {
  if (t1.size() + t2.size() != s.size()) return 0;
  std::size_t count = 0;
  for (std::size_t v = 0; v < s.size(); ++v) {
    if (s.parent(static_cast<int>(v)) == -1 || s.subtree_key(static_cast<int>(v)) != t1.key()) continue;
    VertexSet rest(s.size());
    for (std::size_t u = 0; u < s.size(); ++u)
      if (!s.below(static_cast<int>(u), static_cast<int>(v))) rest.set(u);
    if (subset_key(s, rest) == t2.key()) ++count;
  }
  return count;
}

std::set<std::string> convex_subposets(const Forest& f) {
  std::vector<VertexSet> ideals = ideal_sets(f);
  std::set<std::string> out;
  for (const auto& lower : ideals)
    for (const auto& upper : ideals)
      if (lower.is_subset_of(upper)) out.insert(subset_key(f, upper - lower));
  return out;
}

// -------------------------------------------------------------------- K0

K0Class k0_class(const Forest& f) {
  K0Class out;
  for (const auto& c : f.colors()) ++out[c];
  return out;
}

K0Class operator+(const K0Class& a, const K0Class& b) {
  K0Class out = a;
  for (const auto& [c, n] : b) out[c] += n;
  return out;
}

}  // namespace forestry
