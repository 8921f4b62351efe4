#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilbert/duality.hpp"

namespace hilbert {

enum class ExtKind { IS, GHey, Hey, Dagger };

inline const char* ext_kind_name(ExtKind k) {
  switch (k) {
    case ExtKind::IS: return "is";
    case ExtKind::GHey: return "ghey";
    case ExtKind::Hey: return "hey";
    case ExtKind::Dagger: return "dagger";
  }
  return "?";
}

/// A free-extension construction result: the source algebra, the generated
/// family of upsets over the chosen point set (with embedding), and the family
/// re-encoded as ordinary operation tables.
struct ExtensionResult {
  FiniteAlgebra source;
  UpsetFamily family;  // family.points is X(H) or X*(H); family.embedding present
  FiniteAlgebra presented;
  ExtKind kind = ExtKind::IS;

  const std::vector<int>& embedding() const { return *family.embedding; }
};

namespace detail {

// Round-based saturation of a generator set under the chosen operations,
// inside the (finite) upset algebra of the points.
inline std::vector<Mask> close_under_ops(const Poset& points, std::vector<Mask> gens, bool with_join) {
  std::vector<Mask> family = std::move(gens);
  family.push_back(points.all());
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const size_t sz = family.size();
    std::vector<Mask> fresh;
    auto take = [&](Mask w) {
      if (!std::binary_search(family.begin(), family.end(), w)) fresh.push_back(w);
    };
    for (size_t i = 0; i < sz; ++i)
      for (size_t j = 0; j < sz; ++j) {
        const Mask u = family[i], v = family[j];
        take(u & v);
        take(upset_implication(points, u, v));
        if (with_join) take(u | v);
      }
    if (!fresh.empty()) {
      grew = true;
      family.insert(family.end(), fresh.begin(), fresh.end());
      std::sort(family.begin(), family.end());
      family.erase(std::unique(family.begin(), family.end()), family.end());
    }
  }
  return family;
}

// All intersections of nonempty finite subsets of the embedding images —
// the concrete description of the free meet extension.
inline std::vector<Mask> meet_closure(const std::vector<Mask>& images) {
  std::vector<Mask> family(images.begin(), images.end());
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const size_t sz = family.size();
    std::vector<Mask> fresh;
    for (size_t i = 0; i < sz; ++i)
      for (size_t j = i + 1; j < sz; ++j)
        if (!std::binary_search(family.begin(), family.end(), family[i] & family[j]))
          fresh.push_back(family[i] & family[j]);
    if (!fresh.empty()) {
      grew = true;
      family.insert(family.end(), fresh.begin(), fresh.end());
      std::sort(family.begin(), family.end());
      family.erase(std::unique(family.begin(), family.end()), family.end());
    }
  }
  return family;
}

inline void require_valid(const FiniteAlgebra& alg, Variety tag, const char* who) {
  const ValidationReport rep = validate(alg, tag);
  if (!rep.ok())
    throw std::invalid_argument(std::string(who) + ": input does not validate as " + variety_name(tag) +
                                "\n" + rep.summary());
}

inline ExtensionResult finish_extension(const FiniteAlgebra& source, FilterPoset points,
                                        std::vector<Mask> members, std::vector<Mask> images,
                                        ExtKind kind, Variety presented_tag, FamilyOps ops) {
  UpsetFamily fam = make_upset_family(std::move(points), std::move(members), ops);
  std::vector<int> embed(source.size);
  for (int a = 0; a < source.size; ++a) {
    embed[a] = fam.index_of(images[a]);
    if (embed[a] < 0) throw std::logic_error("extension: embedding image missing from family");
  }
  fam.embedding = std::move(embed);
  ExtensionResult ext{source, std::move(fam), {}, kind};
  const std::string base = source.name.empty() ? "H" : source.name;
  ext.presented = family_algebra(ext.family, presented_tag, base + "^" + ext_kind_name(kind));
  const ValidationReport rep = validate(ext.presented, presented_tag);
  if (!rep.ok())
    throw std::logic_error("extension: presented algebra fails validation\n" + rep.summary());
  return ext;
}

}  // namespace detail

/// The generated implicative-semilattice extension inside the upset algebra of
/// X(H): fixpoint closure of the embedding images under intersection and
/// implication. The result is cross-checked against the independent
/// description as all finite intersections of images before returning.
inline ExtensionResult extend_is(const FiniteAlgebra& alg) {
  detail::require_valid(alg, Variety::Hil, "extend_is");
  const DualSpace d = dual_space(alg);
  std::vector<Mask> members = detail::close_under_ops(d.points.order, d.embedding, false);
  std::vector<Mask> fc = detail::meet_closure(d.embedding);
  if (members != fc)
    throw std::logic_error("extend_is: fixpoint closure differs from the finite-intersection family");
  return detail::finish_extension(alg, d.points, std::move(members), d.embedding, ExtKind::IS,
                                  Variety::IS, FamilyOps::ImplicationMeet);
}

namespace detail {

inline bool all_joins_exist(const FiniteAlgebra& alg) {
  const Poset p = natural_order(alg);
  for (int a = 0; a < alg.size; ++a)
    for (int b = 0; b < alg.size; ++b)
      if (!join_in(p, a, b)) return false;
  return true;
}

}  // namespace detail

/// The generated gH-extension: closure under intersection, union and
/// implication. When the source has all binary joins the result is asserted
/// equal to the full upset algebra of X(H), and its member set is asserted
/// equal to the finite-intersection family.
inline ExtensionResult extend_ghey(const FiniteAlgebra& alg) {
  detail::require_valid(alg, Variety::Hil, "extend_ghey");
  const DualSpace d = dual_space(alg);
  std::vector<Mask> members = detail::close_under_ops(d.points.order, d.embedding, true);
  if (detail::all_joins_exist(alg)) {
    if (members != all_upsets(d.points.order))
      throw std::logic_error("extend_ghey: closure is not the full upset algebra");
    if (members != detail::meet_closure(d.embedding))
      throw std::logic_error("extend_ghey: closure differs from the finite-intersection family");
  }
  return detail::finish_extension(alg, d.points, std::move(members), d.embedding, ExtKind::GHey,
                                  Variety::GHey, FamilyOps::All);
}

/// The Heyting variant; requires a bounded source with joins. The bottom of
/// the extension is the empty set, which is the image of 0 since points are
/// proper filters.
inline ExtensionResult extend_hey(const FiniteAlgebra& alg) {
  detail::require_valid(alg, Variety::HilS0, "extend_hey");
  const DualSpace d = dual_space(alg);
  if (d.embedding[*alg.zero] != 0)
    throw std::logic_error("extend_hey: image of 0 is not the empty upset");
  std::vector<Mask> members = detail::close_under_ops(d.points.order, d.embedding, true);
  if (members != all_upsets(d.points.order))
    throw std::logic_error("extend_hey: closure is not the full upset algebra");
  return detail::finish_extension(alg, d.points, std::move(members), d.embedding, ExtKind::Hey,
                                  Variety::Hey, FamilyOps::All);
}

/// X*(H): every intersection of a nonempty finite subset of X(H), computed as
/// the binary-intersection closure. Singletons put X(H) inside; the empty
/// intersection is excluded, so the degenerate one-element algebra gets an
/// empty point set.
inline FilterPoset star_filter_poset(const FiniteAlgebra& alg) {
  return make_filter_poset(alg, detail::meet_closure(irreducible_filters(alg).filters));
}

/// X*(H) with the embedding a |-> {F : a in F}, certified injective and
/// implication-preserving on the way out.
inline DualSpace star_dual_space(const FiniteAlgebra& alg) {
  DualSpace d{star_filter_poset(alg), {}};
  d.embedding.assign(alg.size, 0);
  for (int a = 0; a < alg.size; ++a)
    for (size_t i = 0; i < d.points.filters.size(); ++i)
      if (mask_contains(d.points.filters[i], a)) d.embedding[a] |= Mask{1} << i;

  const Poset& p = d.points.order;
  if (d.embedding[alg.one] != p.all())
    throw std::logic_error("star_dual_space: image of 1 is not the full point set");
  for (int a = 0; a < alg.size; ++a)
    for (int b = 0; b < alg.size; ++b) {
      if (a != b && d.embedding[a] == d.embedding[b])
        throw std::logic_error("star_dual_space: embedding not injective");
      if (d.embedding[alg.arrow(a, b)] != upset_implication(p, d.embedding[a], d.embedding[b]))
        throw std::logic_error("star_dual_space: embedding does not preserve implication");
    }
  return d;
}

/// The gH-extension over the filter points X*(H); for finite algebras it is
/// asserted equal to the full upset algebra of X*(H).
inline ExtensionResult extend_dagger(const FiniteAlgebra& alg) {
  detail::require_valid(alg, Variety::Hil, "extend_dagger");
  const DualSpace d = star_dual_space(alg);
  std::vector<Mask> members = detail::close_under_ops(d.points.order, d.embedding, true);
  if (members != all_upsets(d.points.order))
    throw std::logic_error("extend_dagger: closure is not the full upset algebra");
  return detail::finish_extension(alg, d.points, std::move(members), d.embedding, ExtKind::Dagger,
                                  Variety::GHey, FamilyOps::All);
}

/// Envelope condition: every member of the family is an intersection of
/// finitely many embedding images. The least expressible superset of U is the
/// intersection of all images above it, so it suffices to compare that with U.
inline bool is_envelope(const ExtensionResult& ext) {
  if (ext.kind != ExtKind::IS) throw std::invalid_argument("is_envelope: IS extension expected");
  for (Mask u : ext.family.members) {
    Mask least = ext.family.points.order.all();
    for (int a = 0; a < ext.source.size; ++a) {
      const Mask image = ext.family.members[ext.embedding()[a]];
      if (mask_subset(u, image)) least &= image;
    }
    if (least != u) return false;
  }
  return true;
}

/// Companion to the filter-extension lemma for X*-points: decomposes J into
/// the irreducible filters above it, extends each component, and intersects
/// the witnesses. The result K satisfies I <= K and f^-1(K) = J.
inline Mask extend_star_filter_along(const Morphism& f, Mask filter_i, Mask star_j) {
  const FilterPoset star_dom = star_filter_poset(f.dom);
  if (star_dom.index_of(star_j) < 0)
    throw std::invalid_argument("extend_star_filter_along: J is not an X* filter of the domain");
  if (!mask_subset(preimage(f, filter_i), star_j))
    throw std::invalid_argument("extend_star_filter_along: f^-1(I) not contained in J");
  Mask k = full_mask(f.cod.size);
  bool any = false;
  for (Mask q : irreducible_filters(f.dom).filters)
    if (mask_subset(star_j, q)) {
      k &= extend_filter_along(f, filter_i, q);
      any = true;
    }
  if (!any) throw std::logic_error("extend_star_filter_along: no irreducible component above J");
  return k;
}

}  // namespace hilbert
