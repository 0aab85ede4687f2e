#include "cli.hpp"

#include "forestry/hall.hpp"
#include "forestry/incidence.hpp"
#include "forestry/json_io.hpp"
#include "forestry/oracles.hpp"
#include "forestry/prelie.hpp"
#include "forestry/suites.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <set>

namespace forestry::cli {

namespace {

struct Options {
  std::string family;
  int max_size = 0;
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<std::string> inputs;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> inputs_or_stdin(const Options& opt, std::istream& in) {
  if (!opt.inputs.empty()) return opt.inputs;
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  return out;
}

std::vector<Forest> read_forests(const Options& opt, std::istream& in, std::size_t min_count, std::size_t max_count) {
  std::vector<Forest> out;
  for (const auto& text : inputs_or_stdin(opt, in)) out.push_back(parse_forest(text));
  if (out.size() < min_count || out.size() > max_count) {
    std::string want = min_count == max_count ? std::to_string(min_count)
                                              : std::to_string(min_count) + ".." + std::to_string(max_count);
    throw UsageError("expected " + want + " forest(s), got " + std::to_string(out.size()));
  }
  return out;
}

Tree as_tree(const Forest& f) {
  if (!f.is_connected()) throw std::invalid_argument("'" + f.key() + "' is not a tree");
  return Tree(f);
}

// Without --family, the family of all forests over the colors that occur.
Family family_for(const Options& opt, const std::vector<Forest>& forests) {
  if (!opt.family.empty()) return builtin(opt.family);
  std::set<Color> colors;
  for (const auto& f : forests) colors.insert(f.colors().begin(), f.colors().end());
  if (colors.empty()) throw UsageError("--family is required when no colors occur in the input");
  return families::all_forests({colors.begin(), colors.end()});
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
    out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

json set_json(const VertexSet& s) {
  json out = json::array();
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) out.push_back(v);
  return out;
}

template <class Terms>
void print_terms(std::ostream& out, const Terms& terms) {
  if (terms.empty()) out << "0\n";
  for (const auto& [key, c] : terms) out << to_string(c) << ' ' << key << '\n';
}

void print_morphism(std::ostream& out, const Morphism& m) {
  out << m.source.key() << " -> " << m.target.key() << "  I1=" << set_text(m.kernel) << " I2=" << set_text(m.image)
      << " map=";
  bool first = true;
  for (std::size_t v = 0; v < m.map.size(); ++v) {
    if (m.map[v] == -1) continue;
    out << (first ? "" : ",") << v << "->" << m.map[v];
    first = false;
  }
  out << (first ? "-" : "") << '\n';
}

std::vector<Morphism> read_morphisms(const Options& opt, std::istream& in, std::size_t count) {
  std::vector<Morphism> out;
  for (const auto& text : inputs_or_stdin(opt, in)) out.push_back(morphism_from_json(json::parse(text)));
  if (out.size() != count)
    throw UsageError("expected " + std::to_string(count) + " morphism(s), got " + std::to_string(out.size()));
  return out;
}

// ------------------------------------------------------------- commands

int cmd_canon(const Options& opt, std::istream& in, std::ostream& out) {
  json result = json::array();
  for (const auto& f : read_forests(opt, in, 1, SIZE_MAX)) {
    if (opt.json)
      result.push_back({{"forest", f.key()}, {"size", f.size()}, {"components", components(f).size()}});
    else
      out << f.key() << '\n';
  }
  if (opt.json) out << result.dump(2) << '\n';
  return kOk;
}

int cmd_aut(const Options& opt, std::istream& in, std::ostream& out) {
  json result = json::array();
  for (const auto& f : read_forests(opt, in, 1, SIZE_MAX)) {
    if (opt.json)
      result.push_back({{"forest", f.key()}, {"aut", aut_order(f)}});
    else
      out << aut_order(f) << '\n';
  }
  if (opt.json) out << result.dump(2) << '\n';
  return kOk;
}

int cmd_ideals(const Options& opt, std::istream& in, std::ostream& out) {
  Forest f = read_forests(opt, in, 1, 1).front();
  json splits = json::array();
  for (const auto& s : order_ideals(f)) {
    if (opt.json)
      splits.push_back({{"vertices", set_json(s.ideal_vertices)}, {"ideal", s.ideal.key()}, {"complement", s.complement.key()}});
    else
      out << set_text(s.ideal_vertices) << "  ideal=" << s.ideal.key() << "  complement=" << s.complement.key() << '\n';
  }
  if (opt.json) out << json{{"forest", f.key()}, {"splits", splits}}.dump(2) << '\n';
  return kOk;
}

int cmd_cuts(const Options& opt, std::istream& in, std::ostream& out) {
  Tree t = as_tree(read_forests(opt, in, 1, 1).front());
  json cuts = json::array();
  for (const auto& c : admissible_cuts(t)) {
    json edges = json::array();
    std::string text;
    for (auto [lo, hi] : c.edges) {
      edges.push_back({lo, hi});
      text += (text.empty() ? "" : ",") + std::to_string(lo) + "-" + std::to_string(hi);
    }
    if (opt.json)
      cuts.push_back({{"edges", edges}, {"lower", c.lower.key()}, {"upper", c.upper.key()}});
    else
      out << "edges=[" << text << "]  lower=" << c.lower.key() << "  upper=" << c.upper.key() << '\n';
  }
  if (opt.json) out << json{{"tree", t.key()}, {"cuts", cuts}}.dump(2) << '\n';
  return kOk;
}

int cmd_convex(const Options& opt, std::istream& in, std::ostream& out) {
  Forest f = read_forests(opt, in, 1, 1).front();
  auto keys = convex_subposets(f);
  if (opt.json) {
    out << json{{"forest", f.key()}, {"convex", std::vector<std::string>(keys.begin(), keys.end())}}.dump(2) << '\n';
  } else {
    for (const auto& k : keys) out << k << '\n';
  }
  return kOk;
}

template <class Element>
void emit(const Options& opt, std::ostream& out, const Element& x) {
  if (opt.json)
    out << to_json(x).dump(2) << '\n';
  else
    print_terms(out, x.terms());
}

int cmd_hall_mul(const Options& opt, std::istream& in, std::ostream& out) {
  auto forests = read_forests(opt, in, 2, SIZE_MAX);
  Family family = family_for(opt, forests);
  HallElement product = delta(forests.front(), family);
  for (std::size_t i = 1; i < forests.size(); ++i) product = hall_mul(product, delta(forests[i], family));
  emit(opt, out, product);
  return kOk;
}

int cmd_coprod(const Options& opt, std::istream& in, std::ostream& out) {
  auto forests = read_forests(opt, in, 1, 1);
  TensorElement t = coproduct(delta(forests.front(), family_for(opt, forests)));
  if (opt.json) {
    out << to_json(t).dump(2) << '\n';
  } else {
    for (const auto& [pair, c] : t.terms()) out << to_string(c) << ' ' << pair.first << " (x) " << pair.second << '\n';
  }
  return kOk;
}

int cmd_antipode(const Options& opt, std::istream& in, std::ostream& out) {
  auto forests = read_forests(opt, in, 1, 1);
  emit(opt, out, antipode(delta(forests.front(), family_for(opt, forests))));
  return kOk;
}

int cmd_prelie(const Options& opt, std::istream& in, std::ostream& out, bool antisymmetrize) {
  auto forests = read_forests(opt, in, 2, 2);
  Family family = family_for(opt, forests);
  Tree a = as_tree(forests[0]);
  Tree b = as_tree(forests[1]);
  emit(opt, out, antisymmetrize ? bracket(basis(a, family), basis(b, family)) : prelie(a, b, family));
  return kOk;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  if (opt.family.empty()) throw UsageError("enumerate needs --family");
  Family family = builtin(opt.family);
  const int max_size = opt.max_size > 0 ? opt.max_size : 7;
  json levels = json::array();
  for (int s = 1; s <= max_size; ++s) {
    const auto& trees = family.connected(s);
    std::vector<std::string> keys;
    for (const auto& t : trees) keys.push_back(t.key());
    if (opt.json) {
      levels.push_back({{"size", s}, {"count", keys.size()}, {"members", keys}});
    } else {
      out << "size " << s << ": " << keys.size() << '\n';
      for (const auto& k : keys) out << "  " << k << '\n';
    }
  }
  if (opt.json) out << json{{"family", family.name()}, {"max_size", max_size}, {"levels", levels}}.dump(2) << '\n';
  return kOk;
}

int cmd_closure(const Options& opt, std::istream& in, std::ostream& out) {
  auto generators = read_forests(opt, in, 1, SIZE_MAX);
  const int max_size = opt.max_size > 0 ? opt.max_size : 7;
  auto keys = closure(generators, max_size);
  if (opt.json) {
    std::vector<std::string> gens;
    for (const auto& g : generators) gens.push_back(g.key());
    out << json{{"generators", gens}, {"max_size", max_size}, {"members", std::vector<std::string>(keys.begin(), keys.end())}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& k : keys) out << k << '\n';
  }
  return kOk;
}

int cmd_hom(const Options& opt, std::istream& in, std::ostream& out) {
  auto forests = read_forests(opt, in, 2, 2);
  auto homs = hom_set(forests[0], forests[1]);
  if (opt.json) {
    json list = json::array();
    for (const auto& m : homs) list.push_back(to_json(m));
    out << list.dump(2) << '\n';
  } else {
    for (const auto& m : homs) print_morphism(out, m);
  }
  return kOk;
}

void emit_morphism(const Options& opt, std::ostream& out, const Morphism& m) {
  if (opt.json)
    out << to_json(m).dump(2) << '\n';
  else
    print_morphism(out, m);
}

int cmd_check(const std::string& suite, const Options& opt, std::ostream& out) {
  const std::string family_name = opt.family.empty() ? "all:a,b" : opt.family;
  Family family = builtin(family_name);
  SuiteOptions options{opt.max_size, opt.samples, opt.seed};
  std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  json results = json::array();
  bool all_passed = true;
  for (const auto& name : names) {
    SuiteResult r = run_suite(name, family, options);
    all_passed = all_passed && r.passed();
    if (opt.json) {
      results.push_back({{"suite", r.suite},
                         {"family", r.family},
                         {"max_size", r.max_size},
                         {"checked", r.checked},
                         {"passed", r.passed()},
                         {"failures", r.failures}});
    } else {
      out << r.suite << " [" << r.family << ", max-size " << r.max_size << "]: " << (r.passed() ? "pass" : "FAIL")
          << " (" << r.checked << " checks)\n";
      for (const auto& f : r.failures) out << "  " << f << '\n';
    }
  }
  if (opt.json) out << (suite == "all" ? results : results.front()).dump(2) << '\n';
  return all_passed ? kOk : kCheckFailed;
}

int cmd_verify_iso(const std::string& which, const Options& opt, std::ostream& out) {
  HomomorphismReport report;
  if (which == "phi-upper") {
    Family family = builtin(opt.family.empty() ? "interval-ladders:5" : opt.family);
    const int n = static_cast<int>(family.alphabet().size());
    report = verify_homomorphism(upper_triangular_map(n), family, opt.max_size > 0 ? opt.max_size : n);
  } else if (which == "phi-loop") {
    Family family = builtin(opt.family.empty() ? "alt-ladders-2" : opt.family);
    report = verify_homomorphism(loop_map(), family, opt.max_size > 0 ? opt.max_size : 8);
  } else if (which == "rho-words") {
    Family family = builtin(opt.family.empty() ? "ladders:1,2" : opt.family);
    report = verify_homomorphism(word_map(family.alphabet()), family, opt.max_size > 0 ? opt.max_size : 5);
  } else {
    throw UsageError("unknown map '" + which + "' (phi-upper, phi-loop, rho-words)");
  }
  if (opt.json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << report.map << " on " << report.family << " up to degree " << report.max_degree << ": "
        << (report.passed() ? "pass" : "FAIL") << " (" << report.checked_pairs << " bracket pairs)\n";
    for (const auto& f : report.failures) out << "  " << f << '\n';
  }
  return report.passed() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hall and pre-Lie algebras of colored rooted forests", "forestry"};
  app.require_subcommand(1);
  Options opt;
  std::string suite;
  std::string map_name;

  auto common = [&](CLI::App* sub, bool positional = true) {
    sub->add_option("--family", opt.family, "family selector, e.g. all:a,b or interval-ladders:4");
    sub->add_option("--max-size", opt.max_size, "size or degree bound");
    sub->add_flag("--json", opt.json, "emit JSON");
    sub->add_option("--seed", opt.seed, "seed for sampled checks");
    sub->add_option("--samples", opt.samples, "check this many random cases instead of all");
    if (positional) sub->add_option("inputs", opt.inputs, "forests (or morphism JSON); stdin if omitted");
    return sub;
  };

  struct Command {
    const char* name;
    const char* help;
  };
  const std::vector<Command> plain = {
      {"canon", "canonical form"},
      {"aut", "automorphism group order"},
      {"ideals", "order ideals with their types"},
      {"cuts", "admissible cuts of a tree"},
      {"convex", "convex subposets up to isomorphism"},
      {"hall-mul", "Hall product of delta functions"},
      {"coprod", "coproduct of a delta function"},
      {"antipode", "antipode of a delta function"},
      {"prelie", "pre-Lie product of two trees"},
      {"bracket", "Lie bracket of two trees"},
      {"closure", "connected part of the closure of generators"},
      {"hom", "all morphisms between two forests"},
      {"compose", "composite of two morphisms (first, then second)"},
      {"kernel", "kernel of a morphism"},
      {"cokernel", "cokernel of a morphism"},
  };
  for (const auto& c : plain) common(app.add_subcommand(c.name, c.help));
  common(app.add_subcommand("enumerate", "connected members by size"), false);
  auto* check = common(app.add_subcommand("check", "run a verification suite"), false);
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  check->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_choices));
  auto* verify = common(app.add_subcommand("verify-iso", "check a Lie isomorphism degree by degree"), false);
  verify->add_option("map", map_name, "phi-upper, phi-loop or rho-words")->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "canon") return cmd_canon(opt, in, out);
    if (command == "aut") return cmd_aut(opt, in, out);
    if (command == "ideals") return cmd_ideals(opt, in, out);
    if (command == "cuts") return cmd_cuts(opt, in, out);
    if (command == "convex") return cmd_convex(opt, in, out);
    if (command == "hall-mul") return cmd_hall_mul(opt, in, out);
    if (command == "coprod") return cmd_coprod(opt, in, out);
    if (command == "antipode") return cmd_antipode(opt, in, out);
    if (command == "prelie") return cmd_prelie(opt, in, out, false);
    if (command == "bracket") return cmd_prelie(opt, in, out, true);
    if (command == "enumerate") return cmd_enumerate(opt, out);
    if (command == "closure") return cmd_closure(opt, in, out);
    if (command == "hom") return cmd_hom(opt, in, out);
    if (command == "compose") {
      auto ms = read_morphisms(opt, in, 2);
      emit_morphism(opt, out, compose(ms[0], ms[1]));
      return kOk;
    }
    if (command == "kernel") {
      emit_morphism(opt, out, kernel(read_morphisms(opt, in, 1).front()));
      return kOk;
    }
    if (command == "cokernel") {
      emit_morphism(opt, out, cokernel(read_morphisms(opt, in, 1).front()));
      return kOk;
    }
    if (command == "check") return cmd_check(suite, opt, out);
    if (command == "verify-iso") return cmd_verify_iso(map_name, opt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::logic_error& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kBadInput;
}

}  // namespace forestry::cli
