#include "forestry/incidence.hpp"

#include <stdexcept>

namespace forestry {

namespace {

VertexSet full(std::size_t n) { return ~VertexSet(n); }

int induced_parent(const Forest& f, const VertexSet& set, int v) {
  int p = f.parent(v);
  return p != -1 && set.test(p) ? p : -1;
}

std::vector<int> local_indices(const Subforest& sub, std::size_t ambient) {
  std::vector<int> local(ambient, -1);
  for (std::size_t i = 0; i < sub.origin.size(); ++i) local[sub.origin[i]] = static_cast<int>(i);
  return local;
}

}  // namespace

void validate(const Morphism& m) {
  auto fail = [](const std::string& why) { throw std::invalid_argument("invalid morphism: " + why); };
  if (m.kernel.size() != m.source.size() || m.map.size() != m.source.size()) fail("kernel/map size mismatch");
  if (m.image.size() != m.target.size()) fail("image size mismatch");
  if (!is_ideal(m.source, m.kernel)) fail("kernel is not an order ideal");
  if (!is_ideal(m.target, m.image)) fail("image is not an order ideal");
  VertexSet hit(m.target.size());
  const VertexSet rest = ~m.kernel;
  for (std::size_t v = 0; v < m.source.size(); ++v) {
    int w = m.map[v];
    if (m.kernel.test(v)) {
      if (w != -1) fail("kernel vertex " + std::to_string(v) + " is mapped");
      continue;
    }
    if (w < 0 || static_cast<std::size_t>(w) >= m.target.size() || !m.image.test(w))
      fail("vertex " + std::to_string(v) + " does not map into the image");
    if (hit.test(w)) fail("map is not injective");
    hit.set(w);
    if (m.source.color(static_cast<int>(v)) != m.target.color(w)) fail("map does not preserve colors");
    int p = induced_parent(m.source, rest, static_cast<int>(v));
    int q = induced_parent(m.target, m.image, w);
    if ((p == -1 ? -1 : m.map[p]) != q) fail("map does not preserve the order");
  }
  if (hit != m.image) fail("map is not onto the image");
}

Morphism identity(const Forest& p) {
  Morphism m{p, p, VertexSet(p.size()), full(p.size()), {}};
  for (std::size_t v = 0; v < p.size(); ++v) m.map.push_back(static_cast<int>(v));
  return m;
}

Morphism zero_morphism(const Forest& source, const Forest& target) {
  return {source, target, full(source.size()), VertexSet(target.size()), std::vector<int>(source.size(), -1)};
}

std::vector<Morphism> hom_set(const Forest& p1, const Forest& p2) {
  std::vector<Morphism> out;
  std::vector<VertexSet> targets = ideal_sets(p2);
  std::vector<std::string> target_keys;
  for (const auto& set : targets) target_keys.push_back(subset_key(p2, set));
  for (const auto& i1 : ideal_sets(p1)) {
    Subforest rest = induced(p1, ~i1);
    for (std::size_t j = 0; j < targets.size(); ++j) {
      if (target_keys[j] != rest.forest.key()) continue;
      Subforest img = induced(p2, targets[j]);
      for (const auto& iso : isomorphisms(rest.forest, img.forest)) {
        Morphism m{p1, p2, i1, targets[j], std::vector<int>(p1.size(), -1)};
        for (std::size_t i = 0; i < iso.size(); ++i) m.map[rest.origin[i]] = img.origin[iso[i]];
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

Morphism compose(const Morphism& m1, const Morphism& m2) {
  if (!(m1.target == m2.source)) throw std::invalid_argument("compose: morphisms are not composable");
  const Forest& p1 = m1.source;
  const Forest& p3 = m2.target;
  Morphism out{p1, p3, m1.kernel, VertexSet(p3.size()), std::vector<int>(p1.size(), -1)};
  for (std::size_t v = 0; v < p1.size(); ++v) {
    if (m1.kernel.test(v)) continue;
    int w = m1.map[v];
    if (m2.kernel.test(w)) {
      out.kernel.set(v);  // f(v) lies in I2 n I2'
    } else {
      out.map[v] = m2.map[w];
      out.image.set(m2.map[w]);  // g(I2 \ I2')
    }
  }
  return out;
}

Morphism kernel(const Morphism& m) {
  Subforest sub = induced(m.source, m.kernel);
  Morphism out{sub.forest, m.source, VertexSet(sub.forest.size()), m.kernel, sub.origin};
  return out;
}

Morphism cokernel(const Morphism& m) {
  Subforest quotient = induced(m.target, ~m.image);
  std::vector<int> local = local_indices(quotient, m.target.size());
  Morphism out{m.target, quotient.forest, m.image, full(quotient.forest.size()), {}};
  for (std::size_t v = 0; v < m.target.size(); ++v) out.map.push_back(m.image.test(v) ? -1 : local[v]);
  return out;
}

std::vector<ExactSequence> exact_sequences(const Forest& m, const Forest& n, const Forest& q) {
  std::vector<ExactSequence> out;
  if (m.size() + n.size() != q.size()) return out;
  for (const auto& ideal : ideal_sets(q)) {
    if (subset_key(q, ideal) != m.key() || subset_key(q, ~ideal) != n.key()) continue;
    Subforest sub = induced(q, ideal);
    Subforest quotient = induced(q, ~ideal);
    std::vector<Morphism> monos;
    for (const auto& iso : isomorphisms(m, sub.forest)) {
      Morphism i{m, q, VertexSet(m.size()), ideal, std::vector<int>(m.size())};
      for (std::size_t v = 0; v < m.size(); ++v) i.map[v] = sub.origin[iso[v]];
      monos.push_back(std::move(i));
    }
    for (const auto& iso : isomorphisms(quotient.forest, n)) {
      Morphism p{q, n, ideal, full(n.size()), std::vector<int>(q.size(), -1)};
      for (std::size_t i = 0; i < quotient.origin.size(); ++i) p.map[quotient.origin[i]] = iso[i];
      for (const auto& i : monos) out.push_back({i, p});
    }
  }
  return out;
}

}  // namespace forestry
