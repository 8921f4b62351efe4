#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hilbert/algebra.hpp"

namespace hilbert {

/// A total value map between carriers, with the preservation contract named by
/// its tag (Hil: 1,->; HilS adds \/; HilS0 adds 0; IS: 1,/\,->; GHey adds \/;
/// Hey adds 0).
struct Morphism {
  FiniteAlgebra dom;
  FiniteAlgebra cod;
  std::vector<int> map;
  Variety tag = Variety::Hil;

  int operator()(int a) const { return map[a]; }

  friend bool operator==(const Morphism& f, const Morphism& g) {
    return f.dom == g.dom && f.cod == g.cod && f.map == g.map;
  }
};

inline bool preserves_join(Variety tag) {
  return tag == Variety::HilS || tag == Variety::HilS0 || tag == Variety::GHey || tag == Variety::Hey;
}
inline bool preserves_meet(Variety tag) {
  return tag == Variety::IS || tag == Variety::GHey || tag == Variety::Hey;
}
inline bool preserves_zero(Variety tag) { return tag == Variety::HilS0 || tag == Variety::Hey; }

inline bool validate_morphism(const Morphism& f) {
  const int n = f.dom.size;
  if (static_cast<int>(f.map.size()) != n) return false;
  for (int v : f.map)
    if (v < 0 || v >= f.cod.size) return false;
  if (f.map[f.dom.one] != f.cod.one) return false;
  if (preserves_zero(f.tag) && f.map[*f.dom.zero] != *f.cod.zero) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (f.map[f.dom.arrow(a, b)] != f.cod.arrow(f.map[a], f.map[b])) return false;
      if (preserves_join(f.tag) && f.map[f.dom.join(a, b)] != f.cod.join(f.map[a], f.map[b]))
        return false;
      if (preserves_meet(f.tag) && f.map[f.dom.meet(a, b)] != f.cod.meet(f.map[a], f.map[b]))
        return false;
    }
  return true;
}

/// f(1) = 1 and f(a->b) <= f(a)->f(b): the maps for which the dual relation
/// still carries filters back to filters.
inline bool is_subpreserving(const Morphism& f) {
  if (f.map[f.dom.one] != f.cod.one) return false;
  for (int a = 0; a < f.dom.size; ++a)
    for (int b = 0; b < f.dom.size; ++b)
      if (!f.cod.leq(f.map[f.dom.arrow(a, b)], f.cod.arrow(f.map[a], f.map[b]))) return false;
  return true;
}

inline Morphism identity_morphism(const FiniteAlgebra& alg, Variety tag = Variety::Hil) {
  Morphism f{alg, alg, std::vector<int>(alg.size), tag};
  std::iota(f.map.begin(), f.map.end(), 0);
  return f;
}

inline Morphism compose_morphisms(const Morphism& g, const Morphism& f) {
  if (g.dom.size != f.cod.size || !(g.dom == f.cod))
    throw std::invalid_argument("compose_morphisms: domains do not match");
  Morphism h{f.dom, g.cod, std::vector<int>(f.dom.size), f.tag};
  for (int a = 0; a < f.dom.size; ++a) h.map[a] = g.map[f.map[a]];
  return h;
}

inline Mask preimage(const Morphism& f, Mask subset_of_cod) {
  Mask out = 0;
  for (int a = 0; a < f.dom.size; ++a)
    if (mask_contains(subset_of_cod, f.map[a])) out |= Mask{1} << a;
  return out;
}

namespace detail {

struct MorphismSearch {
  const FiniteAlgebra& dom;
  const FiniteAlgebra& cod;
  Variety tag;
  std::vector<int> order;  // assignment order over dom elements
  std::vector<int> map;    // -1 = unassigned
  std::vector<Morphism>* out;

  bool consistent() const {
    for (int a = 0; a < dom.size; ++a) {
      if (map[a] < 0) continue;
      for (int b = 0; b < dom.size; ++b) {
        if (map[b] < 0) continue;
        const int ab = dom.arrow(a, b);
        if (map[ab] >= 0 && map[ab] != cod.arrow(map[a], map[b])) return false;
        if (preserves_join(tag)) {
          const int j = dom.join(a, b);
          if (map[j] >= 0 && map[j] != cod.join(map[a], map[b])) return false;
        }
        if (preserves_meet(tag)) {
          const int m = dom.meet(a, b);
          if (map[m] >= 0 && map[m] != cod.meet(map[a], map[b])) return false;
        }
      }
    }
    return true;
  }

  void run(size_t k) {
    if (k == order.size()) {
      Morphism f{dom, cod, map, tag};
      if (validate_morphism(f)) out->push_back(std::move(f));
      return;
    }
    const int a = order[k];
    if (map[a] >= 0) {  // already forced (constants)
      run(k + 1);
      return;
    }
    for (int v = 0; v < cod.size; ++v) {
      map[a] = v;
      if (consistent()) run(k + 1);
      map[a] = -1;
    }
  }
};

}  // namespace detail

/// All morphisms dom -> cod of the given tag, by backtracking over value
/// assignments with pruning on violated equations. Elements are processed in
/// decreasing natural-order height so constraints propagate early. Output is
/// in deterministic (map-lexicographic) order.
inline std::vector<Morphism> enumerate_morphisms(const FiniteAlgebra& dom, const FiniteAlgebra& cod,
                                                 Variety tag) {
  std::vector<int> height(dom.size, 0);
  {
    const Poset p = natural_order(dom);
    // height = length of the longest chain up to the top
    std::vector<int> elems(dom.size);
    std::iota(elems.begin(), elems.end(), 0);
    std::sort(elems.begin(), elems.end(),
              [&](int a, int b) { return mask_count(p.up[a]) < mask_count(p.up[b]); });
    for (int a : elems)
      for_each_member(p.up[a] & ~(Mask{1} << a),
                      [&](int b) { height[a] = std::max(height[a], height[b] + 1); });
  }
  std::vector<int> order(dom.size);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return height[a] < height[b]; });

  detail::MorphismSearch search{dom, cod, tag, order, std::vector<int>(dom.size, -1), nullptr};
  std::vector<Morphism> out;
  search.out = &out;
  search.map[dom.one] = cod.one;
  if (preserves_zero(tag)) search.map[*dom.zero] = *cod.zero;
  search.run(0);
  std::sort(out.begin(), out.end(), [](const Morphism& f, const Morphism& g) { return f.map < g.map; });
  return out;
}

}  // namespace hilbert
