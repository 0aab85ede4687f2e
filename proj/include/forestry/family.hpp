#pragma once

// Closed families of colored forests. A family is determined by its
// connected members: a forest belongs to it iff every component does.

#include "forestry/forest.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace forestry {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationBudget {
  int max_size = 12;
  std::size_t max_trees_per_size = 2'000'000;
};

class Family {
 public:
  using Predicate = std::function<bool(const Tree&)>;
  using Enumerator = std::function<std::vector<Tree>(int size)>;

  /// `connected_member` must be pure; `enumerator`, when given, must return
  /// every connected member with exactly `size` vertices.
  Family(std::string name, std::vector<Color> alphabet, Predicate connected_member,
         std::optional<Enumerator> enumerator = std::nullopt, EnumerationBudget budget = {});

  const std::string& name() const;
  const std::vector<Color>& alphabet() const;
  const EnumerationBudget& budget() const;
  bool has_enumerator() const;

  bool contains(const Forest& f) const;
  bool contains_connected(const Tree& t) const;

  /// Connected members with `size` vertices, sorted by canonical key.
  /// Results are memoized per size. Throws BudgetExceeded past the budget.
  const std::vector<Tree>& connected(int size) const;

  friend bool operator==(const Family& a, const Family& b) { return a.state_ == b.state_ || a.name() == b.name(); }

 private:
  struct State;
  std::shared_ptr<State> state_;
};

/// Parses a family selector such as "all:a,b", "ladders-1", "antichains:1,2",
/// "ladders:1,2", "interval-ladders:4", "alt-ladders-2", "periodic-ladders:3",
/// "headtail-ladders", "corollas:1,2,3" or "gen:<forest>" (closure of the
/// forest's components). Throws std::invalid_argument on unknown names or bad
/// parameters.
Family builtin(std::string_view selector);

namespace families {

Family all_forests(std::vector<Color> alphabet);
Family ladders_one(Color color = "1");
Family antichains(std::vector<Color> alphabet);
Family ladders(std::vector<Color> alphabet);
/// Chains colored k, k+1, ..., k+m root-to-leaf with 1 <= k <= k+m <= n.
Family interval_ladders(int n);
/// Chains over {1, 2} whose colors alternate.
Family alt_ladders_2();
/// Chains colored c, c+1, ... root-to-leaf, cyclically modulo n.
Family periodic_ladders(int n);
/// Chains over {1, 2}: a run of 1's at the root end, then a run of 2's.
Family headtail_ladders();
/// Singletons and depth-one trees over the alphabet.
Family corollas(std::vector<Color> alphabet);
/// The closed family generated by the components of `generators`.
Family generated(const std::vector<Forest>& generators);

}  // namespace families

/// Grows connected members of `size` vertices by grafting single vertices of
/// every alphabet color onto members of size - 1. Complete for closed
/// families, since deleting a leaf is taking a convex subposet.
std::vector<Tree> enumerate_by_grafting(const Family& family, int size);

/// Connected members with exactly `size` vertices, canonically sorted.
std::vector<Tree> enumerate_connected(const Family& family, int size);

/// Members with exactly `size` vertices (any number of components),
/// canonically sorted.
std::vector<Forest> enumerate_forests(const Family& family, int size);

/// Canonical keys of the connected part of the convex-subposet closure of
/// `generators`, truncated to at most `max_size` vertices.
std::set<std::string> closure(const std::vector<Forest>& generators, int max_size);

struct ClosureViolation {
  std::string member;
  std::string subposet;
};

struct ClosureReport {
  bool closed = true;
  std::size_t members_checked = 0;
  std::vector<ClosureViolation> violations;
};

/// Checks that every convex subposet of every connected member with at most
/// `max_size` vertices is again a member.
ClosureReport verify_closed(const Family& family, int max_size);

}  // namespace forestry
