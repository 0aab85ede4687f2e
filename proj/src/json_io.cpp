#include "forestry/json_io.hpp"

#include <stdexcept>

namespace forestry {

namespace {

template <class Scalar>
json term_list(const SparseVector<std::string, Scalar>& terms) {
  json out = json::array();
  for (const auto& [key, c] : terms) out.push_back({{"forest", key}, {"coeff", to_string(c)}});
  return out;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::string string_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) throw std::invalid_argument(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

Rational coeff_of(const json& term) {
  const json& c = field(term, "coeff");
  if (c.is_number_integer()) return Rational(Integer(std::to_string(c.get<long long>())));
  if (c.is_string()) return parse_rational(c.get<std::string>());
  throw std::invalid_argument("coeff must be a string or an integer");
}

json index_list(const VertexSet& set, const std::vector<int>& position) {
  std::vector<int> out;
  for (auto v = set.find_first(); v != VertexSet::npos; v = set.find_next(v)) out.push_back(position[v]);
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet index_set(const json& j, std::size_t n, const char* name) {
  if (!j.is_array()) throw std::invalid_argument(std::string("field '") + name + "' must be an array");
  VertexSet out(n);
  for (const auto& v : j) {
    int i = v.get<int>();
    if (i < 0 || static_cast<std::size_t>(i) >= n)
      throw std::invalid_argument(std::string(name) + ": vertex " + std::to_string(i) + " out of range");
    out.set(i);
  }
  return out;
}

void write_tree(const Forest& f, int v, std::string& text, std::vector<int>& position, int& next) {
  position[v] = next++;
  text += f.color(v);
  auto kids = f.children(v);
  if (kids.empty()) return;
  text += '(';
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i) text += ',';
    write_tree(f, kids[i], text, position, next);
  }
  text += ')';
}

}  // namespace

LabeledForest labeled_form(const Forest& f) {
  LabeledForest out{"", std::vector<int>(f.size(), -1)};
  if (f.empty()) {
    out.text = "0";
    return out;
  }
  int next = 0;
  for (std::size_t i = 0; i < f.roots().size(); ++i) {
    if (i) out.text += '+';
    write_tree(f, f.roots()[i], out.text, out.position, next);
  }
  return out;
}

json to_json(const HallElement& f) { return {{"family", f.family().name()}, {"terms", term_list(f.terms())}}; }

json to_json(const TensorElement& t) {
  json terms = json::array();
  for (const auto& [pair, c] : t.terms())
    terms.push_back({{"left", pair.first}, {"right", pair.second}, {"coeff", to_string(c)}});
  return {{"family", t.family().name()}, {"terms", terms}};
}

json to_json(const PrimitiveElement& x) {
  return {{"family", x.family().name()}, {"connected", true}, {"terms", term_list(x.terms())}};
}

json to_json(const Morphism& m) {
  LabeledForest source = labeled_form(m.source);
  LabeledForest target = labeled_form(m.target);
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t v = 0; v < m.map.size(); ++v)
    if (m.map[v] != -1) pairs.emplace_back(source.position[v], target.position[m.map[v]]);
  std::sort(pairs.begin(), pairs.end());
  json map = json::array();
  for (auto [s, t] : pairs) map.push_back({s, t});
  return {{"source", source.text},
          {"target", target.text},
          {"I1", index_list(m.kernel, source.position)},
          {"I2", index_list(m.image, target.position)},
          {"map", map}};
}

json to_json(const HomomorphismReport& r) {
  return {{"map", r.map},
          {"family", r.family},
          {"max_degree", r.max_degree},
          {"checked_pairs", r.checked_pairs},
          {"failures", r.failures}};
}

HallElement hall_from_json(const json& j) {
  Family family = builtin(string_field(j, "family"));
  HallElement out(family);
  const json& terms = field(j, "terms");
  if (!terms.is_array()) throw std::invalid_argument("'terms' must be an array");
  for (const auto& term : terms) out.add(parse_forest(string_field(term, "forest")), coeff_of(term));
  return out;
}

PrimitiveElement primitive_from_json(const json& j) {
  Family family = builtin(string_field(j, "family"));
  PrimitiveElement::Terms terms;
  const json& list = field(j, "terms");
  if (!list.is_array()) throw std::invalid_argument("'terms' must be an array");
  for (const auto& term : list) {
    Rational c = coeff_of(term);
    if (c.get_den() != 1) throw std::invalid_argument("primitive coefficients must be integers");
    terms.add(parse_tree(string_field(term, "forest")).key(), c.get_num());
  }
  return PrimitiveElement(family, std::move(terms));
}

Morphism morphism_from_json(const json& j) {
  Forest source = parse_forest(string_field(j, "source"));
  Forest target = parse_forest(string_field(j, "target"));
  Morphism m{source, target, index_set(field(j, "I1"), source.size(), "I1"),
             index_set(field(j, "I2"), target.size(), "I2"), std::vector<int>(source.size(), -1)};
  const json& pairs = field(j, "map");
  if (!pairs.is_array()) throw std::invalid_argument("'map' must be an array");
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2) throw std::invalid_argument("map entries must be [src, dst] pairs");
    int s = p[0].get<int>();
    int t = p[1].get<int>();
    if (s < 0 || static_cast<std::size_t>(s) >= source.size() || m.map[s] != -1)
      throw std::invalid_argument("map: bad source vertex " + std::to_string(s));
    m.map[s] = t;
  }
  validate(m);
  return m;
}

}  // namespace forestry
