#include "forestry/suites.hpp"

#include "forestry/hall.hpp"
#include "forestry/incidence.hpp"
#include "forestry/prelie.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

namespace forestry {

namespace {

constexpr std::size_t kMaxReported = 25;

class Recorder {
 public:
  explicit Recorder(SuiteResult& result) : result_(result) {}
  ~Recorder() {
    if (suppressed_)
      result_.failures.push_back("... and " + std::to_string(suppressed_) + " more");
  }

  void passed(std::size_t n) { result_.checked += n; }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checked;
    if (ok) return;
    if (result_.failures.size() < kMaxReported)
      result_.failures.push_back(describe());
    else
      ++suppressed_;
  }

 private:
  SuiteResult& result_;
  std::size_t suppressed_ = 0;
};

std::vector<Tree> members_up_to(const Family& family, int max_size) {
  std::vector<Tree> out;
  for (int s = 1; s <= max_size; ++s) {
    const auto& level = family.connected(s);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Forest> forests_up_to(const Family& family, int max_size, bool with_empty = true) {
  std::vector<Forest> out;
  if (with_empty) out.emplace_back();
  for (int s = 1; s <= max_size; ++s) {
    auto level = enumerate_forests(family, s);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

template <class Case>
void sample(std::vector<Case>& cases, const SuiteOptions& options) {
  if (options.samples == 0 || options.samples >= cases.size()) return;
  std::mt19937_64 rng(options.seed);
  std::shuffle(cases.begin(), cases.end(), rng);
  cases.resize(options.samples);
  std::sort(cases.begin(), cases.end());
}

using Pair = std::array<std::size_t, 2>;
using Triple = std::array<std::size_t, 3>;

std::vector<Pair> pairs_within(const std::vector<Tree>& trees, std::size_t total) {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (std::size_t j = 0; j < trees.size(); ++j)
      if (trees[i].size() + trees[j].size() <= total) out.push_back({i, j});
  return out;
}

std::vector<Triple> triples_within(const std::vector<Tree>& trees, std::size_t total) {
  std::vector<Triple> out;
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (std::size_t j = 0; j < trees.size(); ++j)
      for (std::size_t k = 0; k < trees.size(); ++k)
        if (trees[i].size() + trees[j].size() + trees[k].size() <= total) out.push_back({i, j, k});
  return out;
}

std::string show(const PrimitiveElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : x.terms()) out += (out.empty() ? "" : " + ") + c.get_str() + "*" + key;
  return out;
}

std::string show(const HallElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : x.terms()) out += (out.empty() ? "" : " + ") + c.get_str() + "*" + key;
  return out;
}

std::string triple_name(const Tree& a, const Tree& b, const Tree& c) {
  return "(" + a.key() + ", " + b.key() + ", " + c.key() + ")";
}

// ------------------------------------------------------------ pre-Lie side

void prelie_identity(const Family& family, int max_size, const SuiteOptions& options, Recorder& rec) {
  auto trees = members_up_to(family, max_size - 2);
  auto cases = triples_within(trees, max_size);
  sample(cases, options);
  for (auto [i, j, k] : cases) {
    const Tree &a = trees[i], &b = trees[j], &c = trees[k];
    PrimitiveElement r = prelie_residual(a, b, c, family);
    rec.check(r.is_zero(), [&] { return "residual on " + triple_name(a, b, c) + " is " + show(r); });
  }
  auto pairs = pairs_within(trees, max_size);
  for (auto [i, j] : pairs) {
    PrimitiveElement p = prelie(trees[i], trees[j], family);
    bool nonnegative = std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second > 0; });
    rec.check(nonnegative, [&] { return "negative structure constant in " + trees[i].key() + " |> " + trees[j].key(); });
  }
}

void jacobi(const Family& family, int max_size, const SuiteOptions& options, Recorder& rec) {
  auto trees = members_up_to(family, max_size - 1);
  for (auto [i, j] : pairs_within(trees, max_size)) {
    PrimitiveElement x = basis(trees[i], family), y = basis(trees[j], family);
    rec.check(bracket(x, y) == -bracket(y, x), [&] { return "antisymmetry fails on " + trees[i].key() + ", " + trees[j].key(); });
  }
  auto cases = triples_within(trees, max_size);
  sample(cases, options);
  for (auto [i, j, k] : cases) {
    PrimitiveElement x = basis(trees[i], family), y = basis(trees[j], family), z = basis(trees[k], family);
    PrimitiveElement sum = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    rec.check(sum.is_zero(), [&] { return "Jacobi fails on " + triple_name(trees[i], trees[j], trees[k]) + ": " + show(sum); });
  }
}

void two_edge_cuts(const Family& family, int max_size, const SuiteOptions& options, Recorder& rec) {
  using Key3 = std::tuple<std::string, std::string, std::string>;
  std::map<Key3, std::map<std::string, Integer>> tally;
  for (const auto& s : members_up_to(family, max_size)) {
    const int root = s.root();
    for (std::size_t u = 0; u < s.size(); ++u) {
      for (std::size_t w = 0; w < s.size(); ++w) {
        if (u == w || static_cast<int>(u) == root || static_cast<int>(w) == root) continue;
        if (s.below(u, w) || s.below(w, u)) continue;
        VertexSet rest(s.size());
        for (std::size_t v = 0; v < s.size(); ++v) rest.set(v, !s.below(v, u) && !s.below(v, w));
        Key3 key{s.subtree_key(u), s.subtree_key(w), subset_key(s, rest)};
        tally[key][s.key()] += 1;
      }
    }
  }
  auto trees = members_up_to(family, max_size - 2);
  auto cases = triples_within(trees, max_size);
  sample(cases, options);
  for (auto [i, j, k] : cases) {
    const Tree &a = trees[i], &b = trees[j], &c = trees[k];
    PrimitiveElement assoc = prelie(basis(a, family), prelie(b, c, family)) -
                             prelie(prelie(a, b, family), basis(c, family));
    std::map<std::string, Integer> expected;
    if (auto it = tally.find({a.key(), b.key(), c.key()}); it != tally.end()) expected = it->second;
    rec.check(assoc.terms().terms() == expected,
              [&] { return "associator of " + triple_name(a, b, c) + " is " + show(assoc) + ", cut count differs"; });
    std::map<std::string, Integer> swapped;
    if (auto it = tally.find({b.key(), a.key(), c.key()}); it != tally.end()) swapped = it->second;
    rec.check(expected == swapped, [&] { return "cut count not symmetric on " + triple_name(a, b, c); });
    for (const auto& [s_key, count] : expected) {
      Tree s = parse_tree(s_key);
      rec.check(Integer(two_edge_cut_count(a, b, c, s)) == count,
                [&] { return "two_edge_cut_count disagrees on " + triple_name(a, b, c) + ", " + s_key; });
    }
  }
}

void quotient_consistency(const Family& family, int max_size, const SuiteOptions& options, Recorder& rec) {
  Family all = families::all_forests(family.alphabet());
  auto trees = members_up_to(family, max_size);
  std::vector<Pair> cases;
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (std::size_t j = 0; j < trees.size(); ++j) cases.push_back({i, j});
  sample(cases, options);
  for (auto [i, j] : cases) {
    PrimitiveElement inside = prelie(trees[i], trees[j], family);
    PrimitiveElement projected = project_to_family(prelie(trees[i], trees[j], all), family);
    rec.check(inside == projected, [&] {
      return trees[i].key() + " |> " + trees[j].key() + ": " + show(inside) + " vs projected " + show(projected);
    });
  }
}

void via_hall(const Family& family, int max_size, const SuiteOptions& options, Recorder& rec) {
  auto trees = members_up_to(family, max_size - 1);
  auto cases = pairs_within(trees, max_size);
  sample(cases, options);
  for (auto [i, j] : cases) {
    const Tree &a = trees[i], &b = trees[j];
    PrimitiveElement direct = prelie(a, b, family);
    std::string detail;
    bool ok = false;
    try {
      HallPreLie h = prelie_via_hall(a, b, family);
      ok = h.product == direct && h.split_coefficient == (a.key() == b.key() ? 2 : 1);
      detail = show(h.product) + " (split coefficient " + h.split_coefficient.get_str() + ")";
    } catch (const std::logic_error& e) {
      detail = e.what();
    }
    rec.check(ok, [&] { return a.key() + " |> " + b.key() + ": grafting " + show(direct) + ", via Hall " + detail; });
  }
}

// ---------------------------------------------------------------- Hall side

void hall_assoc(const Family& family, int max_size, const SuiteOptions& options, Recorder& rec) {
  auto trees = members_up_to(family, max_size - 1);
  for (auto [i, j] : pairs_within(trees, max_size)) {
    const Tree &m = trees[i], &n = trees[j];
    auto product = delta_product(m, n, family);
    const K0Class degree = k0_class(m) + k0_class(n);
    const Integer auts = Integer(aut_order(m)) * Integer(aut_order(n));
    for (const auto& [q_key, c] : product) {
      Forest q = parse_forest(q_key);
      rec.check(c > 0 && k0_class(q) == degree,
                [&] { return m.key() + " * " + n.key() + ": bad term " + c.get_str() + "*" + q_key; });
      rec.check(c * auts == count_extensions(m, n, q),
                [&] { return "F^" + q_key + "_{" + m.key() + "," + n.key() + "} disagrees with the product"; });
    }
  }
  trees = members_up_to(family, max_size - 2);
  auto cases = triples_within(trees, max_size);
  sample(cases, options);
  for (auto [i, j, k] : cases) {
    HallElement a = delta(trees[i], family), b = delta(trees[j], family), c = delta(trees[k], family);
    HallElement left = hall_mul(hall_mul(a, b), c);
    HallElement right = hall_mul(a, hall_mul(b, c));
    rec.check(left == right, [&] {
      return "associativity fails on " + triple_name(trees[i], trees[j], trees[k]) + ": " + show(left) + " vs " + show(right);
    });
  }
  HallElement one = hall_unit(family);
  for (const auto& t : members_up_to(family, std::min(max_size, 4))) {
    HallElement d = delta(t, family);
    rec.check(hall_mul(one, d) == d && hall_mul(d, one) == d, [&] { return "unit law fails on " + t.key(); });
  }
}

void coassoc(const Family& family, int max_size, const SuiteOptions&, Recorder& rec) {
  using Key3 = std::tuple<std::string, std::string, std::string>;
  for (const auto& p : forests_up_to(family, max_size)) {
    TensorElement d = coproduct(delta(p, family));
    std::map<Key3, Rational> left, right;
    for (const auto& [pair, c] : d.terms()) {
      TensorElement first = coproduct(delta(parse_forest(pair.first), family));
      TensorElement second = coproduct(delta(parse_forest(pair.second), family));
      for (const auto& [inner, ic] : first.terms()) left[{inner.first, inner.second, pair.second}] += c * ic;
      for (const auto& [inner, ic] : second.terms()) right[{pair.first, inner.first, inner.second}] += c * ic;
    }
    rec.check(left == right, [&] { return "coassociativity fails on " + p.key(); });
    bool cocommutative = true;
    for (const auto& [pair, c] : d.terms()) cocommutative = cocommutative && d.coeff(pair.second, pair.first) == c;
    rec.check(cocommutative, [&] { return "cocommutativity fails on " + p.key(); });
    bool unit_coefficients = true;
    for (const auto& [pair, c] : d.terms()) unit_coefficients = unit_coefficients && c == 1;
    rec.check(unit_coefficients && d.coeff(p.key(), "0") == 1 && d.coeff("0", p.key()) == 1,
              [&] { return "coproduct of " + p.key() + " is not a sum of distinct splits"; });
  }
}

void bialgebra(const Family& family, int max_size, const SuiteOptions& options, Recorder& rec) {
  auto forests = forests_up_to(family, max_size);
  std::vector<Pair> cases;
  for (std::size_t i = 0; i < forests.size(); ++i)
    for (std::size_t j = 0; j < forests.size(); ++j)
      if (forests[i].size() + forests[j].size() <= static_cast<std::size_t>(max_size)) cases.push_back({i, j});
  sample(cases, options);
  for (auto [i, j] : cases) {
    HallElement m = delta(forests[i], family), n = delta(forests[j], family);
    rec.check(coproduct(hall_mul(m, n)) == tensor_mul(coproduct(m), coproduct(n)),
              [&] { return "compatibility fails on " + forests[i].key() + ", " + forests[j].key(); });
  }
}

void antipode_suite(const Family& family, int max_size, const SuiteOptions&, Recorder& rec) {
  auto id = [](const HallElement& x) { return x; };
  auto s = [](const HallElement& x) { return antipode(x); };
  for (const auto& p : forests_up_to(family, max_size)) {
    HallElement d = delta(p, family);
    HallElement expected = counit(d) * hall_unit(family);
    TensorElement cop = coproduct(d);
    HallElement left = multiply_tensor(cop, s, id);
    HallElement right = multiply_tensor(cop, id, s);
    rec.check(left == expected && right == expected, [&] {
      return "antipode identity fails on " + p.key() + ": " + show(left) + " / " + show(right);
    });
    if (p.is_connected()) rec.check(antipode(d) == -d, [&] { return "S is not -id on primitive " + p.key(); });
  }
}

// ------------------------------------------------------------ incidence side

void composition_assoc(const Family& family, int max_size, const SuiteOptions&, Recorder& rec) {
  auto objects = forests_up_to(family, max_size);
  const std::size_t n = objects.size();
  std::vector<std::vector<std::vector<Morphism>>> homs(n, std::vector<std::vector<Morphism>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) homs[i][j] = hom_set(objects[i], objects[j]);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& m : homs[i][j]) {
        const std::string name = "morphism " + objects[i].key() + " -> " + objects[j].key();
        rec.check(compose(identity(objects[i]), m) == m && compose(m, identity(objects[j])) == m,
                  [&] { return "identity law fails on " + name; });
        Morphism k = kernel(m);
        Morphism kk = compose(k, m);
        rec.check(kk == zero_morphism(k.source, objects[j]), [&] { return "kernel composite is not zero for " + name; });
        // m = (mono from the quotient) o cokernel(kernel(m))
        Morphism q = cokernel(k);
        Morphism mono{q.target, objects[j], VertexSet(q.target.size()), m.image, std::vector<int>(q.target.size(), -1)};
        for (std::size_t v = 0; v < objects[i].size(); ++v)
          if (q.map[v] != -1) mono.map[q.map[v]] = m.map[v];
        bool factors = false;
        try {
          validate(mono);
          factors = compose(q, mono) == m;
        } catch (const std::invalid_argument&) {
        }
        rec.check(factors, [&] { return name + " does not factor through cokernel(kernel)"; });
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (const auto& f : homs[a][b])
          for (const auto& g : homs[b][c]) {
            Morphism gf = compose(f, g);
            for (std::size_t d = 0; d < n; ++d)
              for (const auto& h : homs[c][d]) {
                bool ok = compose(gf, h) == compose(f, compose(g, h));
                rec.check(ok, [&] {
                  return "associativity fails on " + objects[a].key() + " -> " + objects[b].key() + " -> " +
                         objects[c].key() + " -> " + objects[d].key();
                });
              }
          }
}

void exact_sequences_suite(const Family& family, int max_size, const SuiteOptions&, Recorder& rec) {
  std::vector<std::vector<Forest>> by_size;
  by_size.push_back({Forest()});
  for (int s = 1; s <= max_size; ++s) by_size.push_back(enumerate_forests(family, s));
  for (int qs = 0; qs <= max_size; ++qs) {
    for (const auto& q : by_size[qs]) {
      for (int ms = 0; ms <= qs; ++ms) {
        for (const auto& m : by_size[ms]) {
          for (const auto& n : by_size[qs - ms]) {
            auto seqs = exact_sequences(m, n, q);
            Integer expected = count_extensions(m, n, q);
            rec.check(Integer(seqs.size()) == expected, [&] {
              return "|Ext(" + m.key() + ", " + n.key() + "; " + q.key() + ")| = " + std::to_string(seqs.size()) +
                     ", F^Q = " + expected.get_str();
            });
            if (!seqs.empty())
              rec.check(k0_class(m) + k0_class(n) == k0_class(q), [&] { return "K0 not additive on " + q.key(); });
            for (const auto& s : seqs) {
              bool ok = s.mono.is_mono() && s.epi.is_epi() && s.mono.image == s.epi.kernel;
              try {
                validate(s.mono);
                validate(s.epi);
              } catch (const std::invalid_argument&) {
                ok = false;
              }
              rec.check(ok, [&] { return "malformed exact sequence " + m.key() + " -> " + q.key() + " -> " + n.key(); });
            }
          }
        }
      }
    }
  }
}

void torsor(const Family& family, int max_size, const SuiteOptions&, Recorder& rec) {
  for (const auto& p : forests_up_to(family, max_size)) {
    for (const auto& ideal : ideal_sets(p)) {
      Subforest sub = induced(p, ideal);
      std::size_t monos = 0;
      for (const auto& m : hom_set(sub.forest, p))
        if (m.is_mono() && m.image == ideal) ++monos;
      rec.check(monos == aut_order(sub.forest), [&] {
        return "monomorphisms onto an ideal of type " + sub.forest.key() + " in " + p.key() + ": " +
               std::to_string(monos) + ", |Aut| = " + std::to_string(aut_order(sub.forest));
      });
    }
  }
}

void quotient_bijection(const Family& family, int max_size, const SuiteOptions&, Recorder& rec) {
  for (const auto& p : forests_up_to(family, max_size)) {
    auto ideals = ideal_sets(p);
    for (const auto& i : ideals) {
      Subforest quotient = induced(p, ~i);
      std::vector<int> local(p.size(), -1);
      for (std::size_t v = 0; v < quotient.origin.size(); ++v) local[quotient.origin[v]] = static_cast<int>(v);
      std::set<VertexSet> images;
      bool all_ideals = true;
      for (const auto& j : ideals) {
        if (!i.is_subset_of(j)) continue;
        VertexSet image(quotient.forest.size());
        for (std::size_t v = 0; v < p.size(); ++v)
          if (j.test(v) && !i.test(v)) image.set(local[v]);
        all_ideals = all_ideals && is_ideal(quotient.forest, image);
        images.insert(image);
      }
      auto subobjects = ideal_sets(quotient.forest);
      std::set<VertexSet> expected(subobjects.begin(), subobjects.end());
      rec.check(all_ideals && images == expected,
                [&] { return "subobject/ideal bijection fails for " + p.key() + " modulo " + subset_key(p, i); });
    }
  }
}

void closed(const Family& family, int max_size, const SuiteOptions&, Recorder& rec) {
  ClosureReport report = verify_closed(family, max_size);
  for (const auto& v : report.violations)
    rec.check(false, [&] { return "convex subposet " + v.subposet + " of " + v.member + " is not a member"; });
  rec.passed(report.members_checked - std::min(report.members_checked, report.violations.size()));
  if (report.violations.empty()) rec.check(report.closed, [] { return "family is not closed"; });
}

struct Suite {
  const char* name;
  int default_size;
  void (*run)(const Family&, int, const SuiteOptions&, Recorder&);
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"prelie-identity", 7, prelie_identity},
      {"two-edge-cuts", 6, two_edge_cuts},
      {"jacobi", 7, jacobi},
      {"quotient-consistency", 5, quotient_consistency},
      {"via-hall", 6, via_hall},
      {"hall-assoc", 7, hall_assoc},
      {"coassoc", 7, coassoc},
      {"bialgebra", 6, bialgebra},
      {"antipode", 5, antipode_suite},
      {"closed", 6, closed},
      {"composition-assoc", 3, composition_assoc},
      {"exact-sequences", 4, exact_sequences_suite},
      {"torsor", 4, torsor},
      {"quotient-bijection", 4, quotient_bijection},
  };
  return all;
}

const Suite& find_suite(const std::string& name) {
  for (const auto& s : suites())
    if (name == s.name) return s;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

int default_max_size(const std::string& suite) { return find_suite(suite).default_size; }

SuiteResult run_suite(const std::string& suite, const Family& family, const SuiteOptions& options) {
  const Suite& s = find_suite(suite);
  SuiteResult result{suite, family.name(), options.max_size > 0 ? options.max_size : s.default_size, 0, {}};
  {
    Recorder rec(result);
    s.run(family, result.max_size, options, rec);
  }
  return result;
}

}  // namespace forestry
