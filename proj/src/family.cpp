#include "forestry/family.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace forestry {

struct Family::State {
  std::string name;
  std::vector<Color> alphabet;
  Predicate member;
  std::optional<Enumerator> enumerator;
  EnumerationBudget budget;
  std::recursive_mutex mutex;
  std::map<int, std::vector<Tree>> levels;
};

const std::string& Family::name() const { return state_->name; }
const std::vector<Color>& Family::alphabet() const { return state_->alphabet; }
const EnumerationBudget& Family::budget() const { return state_->budget; }
bool Family::has_enumerator() const { return state_->enumerator.has_value(); }
bool Family::contains_connected(const Tree& t) const { return state_->member(t); }

namespace {

std::vector<Tree> sorted_unique(std::vector<Tree> trees) {
  std::sort(trees.begin(), trees.end(), [](const Tree& a, const Tree& b) { return a.key() < b.key(); });
  trees.erase(std::unique(trees.begin(), trees.end(),
                          [](const Tree& a, const Tree& b) { return a.key() == b.key(); }),
              trees.end());
  return trees;
}

std::vector<Tree> singletons(const Family& family) {
  std::vector<Tree> out;
  for (const auto& c : family.alphabet()) {
    Tree t = Tree::vertex(c);
    if (family.contains_connected(t)) out.push_back(std::move(t));
  }
  return sorted_unique(std::move(out));
}

std::vector<Tree> grow(const Family& family, const std::vector<Tree>& previous) {
  std::map<std::string, Tree> found;
  for (const auto& t : previous) {
    for (std::size_t v = 0; v < t.size(); ++v) {
      for (const auto& c : family.alphabet()) {
        Tree s = graft(Tree::vertex(c), t, static_cast<int>(v));
        if (found.count(s.key()) || !family.contains_connected(s)) continue;
        found.emplace(s.key(), std::move(s));
        if (found.size() > family.budget().max_trees_per_size)
          throw BudgetExceeded("family '" + family.name() + "': more than " +
                               std::to_string(family.budget().max_trees_per_size) + " members of size " +
                               std::to_string(t.size() + 1));
      }
    }
  }
  std::vector<Tree> out;
  out.reserve(found.size());
  for (auto& [k, t] : found) out.push_back(std::move(t));
  return out;
}

std::optional<int> as_index(const Color& c) {
  if (c.empty() || c.size() > 6 || c[0] == '0') return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), value);
  if (ec != std::errc() || ptr != c.data() + c.size()) return std::nullopt;
  return value;
}

std::vector<Color> numbered(int n) {
  std::vector<Color> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

bool in_alphabet(const std::vector<Color>& alphabet, const Color& c) {
  return std::find(alphabet.begin(), alphabet.end(), c) != alphabet.end();
}

bool all_in(const std::vector<Color>& alphabet, const Forest& f) {
  return std::all_of(f.colors().begin(), f.colors().end(), [&](const Color& c) { return in_alphabet(alphabet, c); });
}

/// Root-to-leaf colors of a chain as integers; nullopt if not a numbered chain.
std::optional<std::vector<int>> numbered_chain(const Tree& t, int n) {
  auto colors = ladder_colors(t, LadderReading::RootToLeaf);
  if (!colors) return std::nullopt;
  std::vector<int> out;
  for (const auto& c : *colors) {
    auto i = as_index(c);
    if (!i || *i < 1 || *i > n) return std::nullopt;
    out.push_back(*i);
  }
  return out;
}

std::vector<Tree> ladders_from(const std::vector<std::vector<int>>& sequences) {
  std::vector<Tree> out;
  for (const auto& seq : sequences) {
    std::vector<Color> colors;
    for (int i : seq) colors.push_back(std::to_string(i));
    out.push_back(make_ladder(colors, LadderReading::RootToLeaf));
  }
  return out;
}

void require_alphabet(const std::vector<Color>& alphabet, const std::string& what) {
  if (alphabet.empty()) throw std::invalid_argument(what + ": empty alphabet");
  for (const auto& c : alphabet)
    if (!is_valid_color(c)) throw std::invalid_argument(what + ": invalid color '" + c + "'");
  std::vector<Color> sorted = alphabet;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument(what + ": repeated color");
}

std::string join(const std::vector<Color>& colors) {
  std::string out;
  for (std::size_t i = 0; i < colors.size(); ++i) out += (i ? "," : "") + colors[i];
  return out;
}

// Multisets of `count` items drawn from `kinds` kinds, as count vectors.
void multisets(std::size_t kinds, int count, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (current.size() + 1 == kinds) {
    current.push_back(count);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int k = 0; k <= count; ++k) {
    current.push_back(k);
    multisets(kinds, count - k, current, out);
    current.pop_back();
  }
}

}  // namespace

// ------------------------------------------------------------------ Family

Family::Family(std::string name, std::vector<Color> alphabet, Predicate connected_member,
               std::optional<Enumerator> enumerator, EnumerationBudget budget)
    : state_(std::make_shared<State>()) {
  state_->name = std::move(name);
  state_->alphabet = std::move(alphabet);
  state_->member = std::move(connected_member);
  state_->enumerator = std::move(enumerator);
  state_->budget = budget;
}

bool Family::contains(const Forest& f) const {
  for (const auto& t : components(f))
    if (!state_->member(t)) return false;
  return true;
}

const std::vector<Tree>& Family::connected(int size) const {
  if (size < 1) throw std::invalid_argument("enumeration size must be at least 1");
  if (size > state_->budget.max_size)
    throw BudgetExceeded("family '" + name() + "': size " + std::to_string(size) + " exceeds enumeration budget " +
                         std::to_string(state_->budget.max_size));
  std::lock_guard lock(state_->mutex);
  if (auto it = state_->levels.find(size); it != state_->levels.end()) return it->second;
  std::vector<Tree> level;
  if (state_->enumerator) {
    for (auto& t : (*state_->enumerator)(size))
      if (contains_connected(t)) level.push_back(std::move(t));
    level = sorted_unique(std::move(level));
  } else if (size == 1) {
    level = singletons(*this);
  } else {
    level = grow(*this, connected(size - 1));
  }
  return state_->levels.emplace(size, std::move(level)).first->second;
}

std::vector<Tree> enumerate_by_grafting(const Family& family, int size) {
  if (size < 1) throw std::invalid_argument("enumeration size must be at least 1");
  if (size > family.budget().max_size)
    throw BudgetExceeded("size " + std::to_string(size) + " exceeds enumeration budget");
  std::vector<Tree> level = singletons(family);
  for (int s = 2; s <= size; ++s) level = grow(family, level);
  return level;
}

std::vector<Tree> enumerate_connected(const Family& family, int size) { return family.connected(size); }

namespace {

// Components in non-increasing (size, index) order so each multiset appears once.
void extend_forests(const Family& family, int remaining, int max_size, std::size_t min_index, const Forest& current,
                    std::vector<Forest>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int s = std::min(remaining, max_size); s >= 1; --s) {
    const auto& level = family.connected(s);
    for (std::size_t i = s == max_size ? min_index : 0; i < level.size(); ++i)
      extend_forests(family, remaining - s, s, i, current + level[i], out);
  }
}

}  // namespace

std::vector<Forest> enumerate_forests(const Family& family, int size) {
  std::vector<Forest> out;
  extend_forests(family, size, size, 0, Forest(), out);
  std::sort(out.begin(), out.end(), [](const Forest& a, const Forest& b) { return a.key() < b.key(); });
  return out;
}

// ---------------------------------------------------------------- builtins

namespace families {

Family all_forests(std::vector<Color> alphabet) {
  require_alphabet(alphabet, "all");
  std::string name = "all:" + join(alphabet);
  auto s = alphabet;
  return Family(name, alphabet, [s](const Tree& t) { return all_in(s, t); });
}

Family ladders_one(Color color) {
  require_alphabet({color}, "ladders-1");
  return Family(
      color == "1" ? "ladders-1" : "ladders-1:" + color, {color},
      [color](const Tree& t) {
        auto colors = ladder_colors(t, LadderReading::RootToLeaf);
        return colors && std::all_of(colors->begin(), colors->end(), [&](const Color& c) { return c == color; });
      },
      [color](int size) { return std::vector<Tree>{make_ladder(std::vector<Color>(size, color), LadderReading::RootToLeaf)}; });
}

Family antichains(std::vector<Color> alphabet) {
  require_alphabet(alphabet, "antichains");
  auto s = alphabet;
  return Family(
      "antichains:" + join(alphabet), alphabet, [s](const Tree& t) { return t.size() == 1 && all_in(s, t); },
      [s](int size) {
        std::vector<Tree> out;
        if (size == 1)
          for (const auto& c : s) out.push_back(Tree::vertex(c));
        return out;
      });
}

Family ladders(std::vector<Color> alphabet) {
  require_alphabet(alphabet, "ladders");
  auto s = alphabet;
  return Family(
      "ladders:" + join(alphabet), alphabet,
      [s](const Tree& t) { return ladder_colors(t, LadderReading::RootToLeaf).has_value() && all_in(s, t); },
      [s](int size) {
        std::vector<Tree> out;
        std::vector<std::size_t> digits(size, 0);
        while (true) {
          std::vector<Color> colors;
          for (auto d : digits) colors.push_back(s[d]);
          out.push_back(make_ladder(colors, LadderReading::RootToLeaf));
          int i = size - 1;
          while (i >= 0 && ++digits[i] == s.size()) digits[i--] = 0;
          if (i < 0) break;
        }
        return out;
      });
}

Family interval_ladders(int n) {
  if (n < 1) throw std::invalid_argument("interval-ladders: n must be at least 1");
  return Family(
      "interval-ladders:" + std::to_string(n), numbered(n),
      [n](const Tree& t) {
        auto seq = numbered_chain(t, n);
        if (!seq) return false;
        for (std::size_t i = 1; i < seq->size(); ++i)
          if ((*seq)[i] != (*seq)[i - 1] + 1) return false;
        return true;
      },
      [n](int size) {
        std::vector<std::vector<int>> seqs;
        for (int k = 1; k + size - 1 <= n; ++k) {
          std::vector<int> seq(size);
          std::iota(seq.begin(), seq.end(), k);
          seqs.push_back(seq);
        }
        return ladders_from(seqs);
      });
}

Family alt_ladders_2() {
  return Family(
      "alt-ladders-2", numbered(2),
      [](const Tree& t) {
        auto seq = numbered_chain(t, 2);
        if (!seq) return false;
        for (std::size_t i = 1; i < seq->size(); ++i)
          if ((*seq)[i] == (*seq)[i - 1]) return false;
        return true;
      },
      [](int size) {
        std::vector<std::vector<int>> seqs;
        for (int root = 1; root <= 2; ++root) {
          std::vector<int> seq;
          for (int i = 0; i < size; ++i) seq.push_back((root - 1 + i) % 2 + 1);
          seqs.push_back(seq);
        }
        return ladders_from(seqs);
      });
}

Family periodic_ladders(int n) {
  if (n < 1) throw std::invalid_argument("periodic-ladders: n must be at least 1");
  return Family(
      "periodic-ladders:" + std::to_string(n), numbered(n),
      [n](const Tree& t) {
        auto seq = numbered_chain(t, n);
        if (!seq) return false;
        for (std::size_t i = 1; i < seq->size(); ++i)
          if ((*seq)[i] != (*seq)[i - 1] % n + 1) return false;
        return true;
      },
      [n](int size) {
        std::vector<std::vector<int>> seqs;
        for (int start = 1; start <= n; ++start) {
          std::vector<int> seq;
          for (int i = 0; i < size; ++i) seq.push_back((start - 1 + i) % n + 1);
          seqs.push_back(seq);
        }
        return ladders_from(seqs);
      });
}

Family headtail_ladders() {
  return Family(
      "headtail-ladders", numbered(2),
      [](const Tree& t) {
        auto seq = numbered_chain(t, 2);
        return seq && std::is_sorted(seq->begin(), seq->end());
      },
      [](int size) {
        std::vector<std::vector<int>> seqs;
        for (int ones = 0; ones <= size; ++ones) {
          std::vector<int> seq(ones, 1);
          seq.resize(size, 2);
          seqs.push_back(seq);
        }
        return ladders_from(seqs);
      });
}

Family corollas(std::vector<Color> alphabet) {
  require_alphabet(alphabet, "corollas");
  auto s = alphabet;
  return Family(
      "corollas:" + join(alphabet), alphabet,
      [s](const Tree& t) {
        if (!all_in(s, t)) return false;
        for (int c : t.children(t.root()))
          if (!t.children(c).empty()) return false;
        return true;
      },
      [s](int size) {
        std::vector<Tree> out;
        std::vector<std::vector<int>> leaf_counts;
        std::vector<int> current;
        multisets(s.size(), size - 1, current, leaf_counts);
        for (const auto& root : s) {
          for (const auto& counts : leaf_counts) {
            std::vector<Color> colors{root};
            std::vector<int> parents{-1};
            for (std::size_t i = 0; i < s.size(); ++i)
              for (int k = 0; k < counts[i]; ++k) {
                colors.push_back(s[i]);
                parents.push_back(0);
              }
            out.emplace_back(Forest(colors, parents));
          }
        }
        return out;
      });
}

Family generated(const std::vector<Forest>& generators) {
  std::size_t total = 0;
  std::set<Color> colors;
  std::vector<std::string> names;
  for (const auto& g : generators) {
    total += g.size();
    colors.insert(g.colors().begin(), g.colors().end());
    names.push_back(g.key());
  }
  auto keys = std::make_shared<const std::set<std::string>>(closure(generators, static_cast<int>(std::max<std::size_t>(total, 1))));
  std::sort(names.begin(), names.end());
  std::string name = "gen:";
  for (std::size_t i = 0; i < names.size(); ++i) name += (i ? "+" : "") + names[i];
  return Family(
      name, {colors.begin(), colors.end()}, [keys](const Tree& t) { return keys->count(t.key()) > 0; },
      [keys](int size) {
        std::vector<Tree> out;
        for (const auto& k : *keys) {
          Tree t = parse_tree(k);
          if (static_cast<int>(t.size()) == size) out.push_back(std::move(t));
        }
        return out;
      });
}

}  // namespace families

Family builtin(std::string_view selector) {
  std::string text(selector);
  std::string head = text;
  std::string params;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    head = text.substr(0, colon);
    params = text.substr(colon + 1);
  }
  auto list = [&]() {
    std::vector<Color> out;
    std::stringstream ss(params);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    if (out.empty()) throw std::invalid_argument("family '" + head + "' needs a color list, e.g. " + head + ":a,b");
    return out;
  };
  auto number = [&]() {
    auto n = as_index(params);
    if (!n) throw std::invalid_argument("family '" + head + "' needs a positive integer parameter, e.g. " + head + ":4");
    return *n;
  };
  auto no_params = [&]() {
    if (!params.empty()) throw std::invalid_argument("family '" + head + "' takes no parameters");
  };
  if (head == "all") return families::all_forests(list());
  if (head == "ladders-1") return params.empty() ? families::ladders_one() : families::ladders_one(params);
  if (head == "antichains") return families::antichains(list());
  if (head == "ladders") return families::ladders(list());
  if (head == "interval-ladders") return families::interval_ladders(number());
  if (head == "alt-ladders-2") return no_params(), families::alt_ladders_2();
  if (head == "periodic-ladders") return families::periodic_ladders(number());
  if (head == "headtail-ladders") return no_params(), families::headtail_ladders();
  if (head == "corollas") return families::corollas(list());
  if (head == "gen") {
    Forest f = parse_forest(params);
    if (f.empty()) throw std::invalid_argument("family 'gen' needs at least one generator");
    std::vector<Forest> gens;
    for (auto& t : components(f)) gens.push_back(std::move(t));
    return families::generated(gens);
  }
  throw std::invalid_argument("unknown family '" + head + "'");
}

// ----------------------------------------------------------------- closure

std::set<std::string> closure(const std::vector<Forest>& generators, int max_size) {
  if (max_size < 1) throw std::invalid_argument("closure: max_size must be at least 1");
  std::set<std::string> out;
  std::vector<std::string> frontier;
  auto visit = [&](const Forest& f) {
    for (const auto& key : convex_subposets(f)) {
      if (key == "0") continue;
      Forest q = parse_forest(key);
      for (const auto& t : components(q))
        if (static_cast<int>(t.size()) <= max_size && out.insert(t.key()).second) frontier.push_back(t.key());
    }
  };
  for (const auto& g : generators) visit(g);
  // Convex subposets of convex subposets are convex, so this settles in one
  // round; iterate to the fixpoint anyway.
  while (!frontier.empty()) {
    std::string key = std::move(frontier.back());
    frontier.pop_back();
    visit(parse_forest(key));
  }
  return out;
}

ClosureReport verify_closed(const Family& family, int max_size) {
  ClosureReport report;
  for (int size = 1; size <= max_size; ++size) {
    for (const auto& t : family.connected(size)) {
      ++report.members_checked;
      for (const auto& key : convex_subposets(t)) {
        if (family.contains(parse_forest(key))) continue;
        report.closed = false;
        report.violations.push_back({t.key(), key});
      }
    }
  }
  return report;
}

}  // namespace forestry
