#pragma once

// The incidence category: objects are forests, a morphism P1 -> P2 is a
// kernel ideal I1 of P1, an image ideal I2 of P2 and a color/order
// isomorphism P1 \ I1 -> I2 given on explicit vertex indices.

#include "forestry/forest.hpp"

#include <vector>

namespace forestry {

struct Morphism {
  Forest source;
  Forest target;
  VertexSet kernel;  // I1, ideal of source
  VertexSet image;   // I2, ideal of target
  /// map[v] is the target vertex of source vertex v, or -1 for v in the kernel.
  std::vector<int> map;

  bool is_mono() const { return kernel.none(); }
  bool is_epi() const { return image.all(); }

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.source == b.source && a.target == b.target && a.kernel == b.kernel && a.image == b.image &&
           a.map == b.map;
  }
};

/// Checks the morphism invariants; throws std::invalid_argument naming the
/// first violated one.
void validate(const Morphism& m);

Morphism identity(const Forest& p);
Morphism zero_morphism(const Forest& source, const Forest& target);

/// Every (I1, I2, f) between the two forests.
std::vector<Morphism> hom_set(const Forest& p1, const Forest& p2);

/// (I1, I2, f) then (I2', I3', g) is (K1, K3, g o f) with
/// K1 = I1 u f^-1(I2 n I2') and K3 = g(I2 \ I2').
/// Throws std::invalid_argument unless m1.target == m2.source.
Morphism compose(const Morphism& m1, const Morphism& m2);

/// (0, I1, id): I1 -> P1, with I1 re-indexed in ascending ambient order.
Morphism kernel(const Morphism& m);
/// (I2, P2 \ I2, id): P2 -> P2 \ I2, with the quotient re-indexed likewise.
Morphism cokernel(const Morphism& m);

struct ExactSequence {
  Morphism mono;
  Morphism epi;
};

/// Pairs (i: M -> Q mono, p: Q -> N epi) with image(i) = kernel(p).
std::vector<ExactSequence> exact_sequences(const Forest& m, const Forest& n, const Forest& q);

}  // namespace forestry
