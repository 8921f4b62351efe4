#pragma once

#include "hilbert/algebra.hpp"
#include "hilbert/morphism.hpp"

namespace hilbert {
namespace fixtures {

/// Three elements x, y incomparable below the top, order-induced implication.
/// Carrier: x = 0, y = 1, 1 = 2.
inline FiniteAlgebra h3() {
  Poset p = make_poset(3, {0b101, 0b110, 0b100});
  return from_poset(p, "H3");
}

/// Four elements a, b < c < 1, order-induced implication.
/// Carrier: a = 0, b = 1, c = 2, 1 = 3.
inline FiniteAlgebra g4() {
  Poset p = make_poset(4, {0b1101, 0b1110, 0b1100, 0b1000});
  return from_poset(p, "G4");
}

/// Chain 0 < 1 < ... < n-1 with order-induced implication.
inline FiniteAlgebra chain(int n) {
  std::vector<Mask> up(n);
  for (int a = 0; a < n; ++a) up[a] = full_mask(n) & ~full_mask(a);
  return from_poset(make_poset(n, std::move(up)), "C" + std::to_string(n));
}

/// Chain with join table and named bottom, for the bounded variants.
inline FiniteAlgebra bounded_chain(int n) {
  FiniteAlgebra alg = with_derived_join(chain(n));
  alg.zero = 0;
  alg.name = "C" + std::to_string(n) + "b";
  return alg;
}

/// The map x -> a, y -> b, 1 -> 1 from H3 to G4; the join-preservation
/// counterexample lives over this morphism.
inline Morphism h3_to_g4() { return Morphism{h3(), g4(), {0, 1, 3}, Variety::Hil}; }

}  // namespace fixtures
}  // namespace hilbert
