#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hilbert/algebra.hpp"
#include "hilbert/morphism.hpp"

namespace hilbert {

/// 1 is a member and the set is closed under modus ponens. Such sets are
/// automatically upsets of the natural order.
inline bool is_implicative_filter(const FiniteAlgebra& alg, Mask f) {
  if (!mask_contains(f, alg.one)) return false;
  bool closed = true;
  for_each_member(f, [&](int a) {
    for (int b = 0; b < alg.size && closed; ++b)
      if (mask_contains(f, alg.arrow(a, b)) && !mask_contains(f, b)) closed = false;
  });
  return closed;
}

/// Least implicative filter containing the seed, by modus-ponens closure.
inline Mask generated_filter(const FiniteAlgebra& alg, Mask seed) {
  Mask f = seed | (Mask{1} << alg.one);
  bool grew = true;
  while (grew) {
    grew = false;
    for_each_member(f, [&](int a) {
      for (int b = 0; b < alg.size; ++b)
        if (!mask_contains(f, b) && mask_contains(f, alg.arrow(a, b))) {
          f |= Mask{1} << b;
          grew = true;
        }
    });
  }
  return f;
}

/// Independent route to the same set, via the nested-implication description:
/// x is generated iff x = 1 or some a in the seed has a->x generated.
inline Mask generated_filter_by_formula(const FiniteAlgebra& alg, Mask seed) {
  Mask f = Mask{1} << alg.one;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < alg.size; ++x) {
      if (mask_contains(f, x)) continue;
      bool in = false;
      for_each_member(seed, [&](int a) { in = in || mask_contains(f, alg.arrow(a, x)); });
      if (in) {
        f |= Mask{1} << x;
        grew = true;
      }
    }
  }
  return f;
}

/// An indexed family of filters ordered by inclusion; realizes the point sets
/// of the dual constructions. Filters are duplicate-free and sorted by mask.
struct FilterPoset {
  FiniteAlgebra base;
  std::vector<Mask> filters;
  Poset order;  // inclusion among the filters

  int index_of(Mask f) const {
    const auto it = std::lower_bound(filters.begin(), filters.end(), f);
    if (it == filters.end() || *it != f) return -1;
    return static_cast<int>(it - filters.begin());
  }
};

inline FilterPoset make_filter_poset(FiniteAlgebra base, std::vector<Mask> filters) {
  std::sort(filters.begin(), filters.end());
  filters.erase(std::unique(filters.begin(), filters.end()), filters.end());
  if (static_cast<int>(filters.size()) > kMaxUniverse)
    throw std::invalid_argument("make_filter_poset: too many filters for the mask representation");
  const int m = static_cast<int>(filters.size());
  std::vector<Mask> up(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (mask_subset(filters[i], filters[j])) up[i] |= Mask{1} << j;
  FilterPoset fp{std::move(base), std::move(filters), make_poset(m, std::move(up))};
  return fp;
}

/// Every implicative filter, enumerated by closing each subset of the carrier.
inline FilterPoset all_filters(const FiniteAlgebra& alg) {
  std::vector<Mask> found;
  const Mask all = full_mask(alg.size);
  for (Mask seed = 0;; ++seed) {
    found.push_back(generated_filter(alg, seed));
    if (seed == all) break;
  }
  return make_filter_poset(alg, std::move(found));
}

/// Proper filters with a unique upper cover in the filter lattice — the finite
/// form of irreducibility. The defining pairwise-intersection condition is the
/// oracle this is tested against.
inline FilterPoset irreducible_filters(const FiniteAlgebra& alg) {
  const FilterPoset fil = all_filters(alg);
  const Mask improper = full_mask(alg.size);
  std::vector<Mask> out;
  for (int i = 0; i < fil.order.size; ++i) {
    if (fil.filters[i] == improper) continue;
    const Mask strictly_above = fil.order.up[i] & ~(Mask{1} << i);
    if (mask_count(minimal_elements(fil.order, strictly_above)) == 1) out.push_back(fil.filters[i]);
  }
  return make_filter_poset(alg, std::move(out));
}

/// Proper filters F with a \/ b in F implying a in F or b in F.
inline FilterPoset prime_filters(const FiniteAlgebra& alg) {
  if (!alg.has_join()) throw std::invalid_argument("prime_filters: join table required");
  const FilterPoset fil = all_filters(alg);
  std::vector<Mask> out;
  for (Mask f : fil.filters) {
    if (f == full_mask(alg.size)) continue;
    bool prime = true;
    for (int a = 0; a < alg.size && prime; ++a)
      for (int b = 0; b < alg.size && prime; ++b)
        if (mask_contains(f, alg.join(a, b)) && !mask_contains(f, a) && !mask_contains(f, b))
          prime = false;
    if (prime) out.push_back(f);
  }
  return make_filter_poset(alg, std::move(out));
}

/// Nonempty up-directed downset of the natural order.
inline bool is_order_ideal(const FiniteAlgebra& alg, Mask ideal) {
  if (ideal == 0) return false;
  const Poset p = natural_order(alg);
  if (!is_downset(p, ideal)) return false;
  bool directed = true;
  for_each_member(ideal, [&](int a) {
    for_each_member(ideal, [&](int b) {
      if ((p.up[a] & p.up[b] & ideal) == 0) directed = false;
    });
  });
  return directed;
}

/// Separation: an irreducible filter containing F and missing the order-ideal
/// I. Existence is guaranteed whenever the preconditions hold; the canonically
/// least witness is returned so outputs are deterministic.
inline Mask separate(const FiniteAlgebra& alg, Mask filter, Mask ideal) {
  if (!is_implicative_filter(alg, filter))
    throw std::invalid_argument("separate: F is not an implicative filter");
  if (!is_order_ideal(alg, ideal)) throw std::invalid_argument("separate: I is not an order-ideal");
  if (filter & ideal) throw std::invalid_argument("separate: F and I are not disjoint");
  for (Mask p : irreducible_filters(alg).filters)
    if (mask_subset(filter, p) && (p & ideal) == 0) return p;
  throw std::logic_error("separate: no witness found");
}

/// Witness for a not in F: an irreducible filter above F avoiding a.
inline Mask extend_avoiding(const FiniteAlgebra& alg, Mask filter, int a) {
  const Poset p = natural_order(alg);
  return separate(alg, filter, p.down[a]);
}

/// Witness for a not<= b: an irreducible filter containing a but not b.
inline Mask separate_elements(const FiniteAlgebra& alg, int a, int b) {
  return extend_avoiding(alg, generated_filter(alg, Mask{1} << a), b);
}

/// Witness for a->b not in F: an irreducible filter above F containing a and
/// missing b.
inline Mask witness_failing_implication(const FiniteAlgebra& alg, Mask filter, int a, int b) {
  return extend_avoiding(alg, generated_filter(alg, filter | (Mask{1} << a)), b);
}

/// Given a morphism f, a filter I of the codomain and an irreducible filter J
/// of the domain with f^-1(I) contained in J, produces an irreducible filter K
/// of the codomain with I contained in K and f^-1(K) = J. Built exactly as the
/// existence proof does: separate the filter generated by I and f(J) from the
/// downset of f(J^c).
inline Mask extend_filter_along(const Morphism& f, Mask filter_i, Mask irreducible_j) {
  const FiniteAlgebra& dom = f.dom;
  const FiniteAlgebra& cod = f.cod;
  if (!is_implicative_filter(cod, filter_i))
    throw std::invalid_argument("extend_filter_along: I is not a filter of the codomain");
  if (irreducible_filters(dom).index_of(irreducible_j) < 0)
    throw std::invalid_argument("extend_filter_along: J is not an irreducible filter of the domain");
  if (!mask_subset(preimage(f, filter_i), irreducible_j))
    throw std::invalid_argument("extend_filter_along: f^-1(I) not contained in J");

  Mask image_j = 0, image_jc = 0;
  for (int a = 0; a < dom.size; ++a) {
    if (mask_contains(irreducible_j, a))
      image_j |= Mask{1} << f.map[a];
    else
      image_jc |= Mask{1} << f.map[a];
  }
  const Mask ideal = down_closure(natural_order(cod), image_jc);
  const Mask seed_filter = generated_filter(cod, filter_i | image_j);
  return separate(cod, seed_filter, ideal);
}

}  // namespace hilbert
