#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilbert/extensions.hpp"

namespace hilbert {

/// R*_f: the dual relation over the filter points X*(cod) x X*(dom).
inline FilterRelation dual_relation_star(const Morphism& f) {
  FilterRelation r{star_filter_poset(f.cod), star_filter_poset(f.dom), {}};
  r.rows.assign(r.source.filters.size(), 0);
  for (size_t i = 0; i < r.source.filters.size(); ++i) {
    const Mask pre = preimage(f, r.source.filters[i]);
    for (size_t j = 0; j < r.target.filters.size(); ++j)
      if (mask_subset(pre, r.target.filters[j])) r.rows[i] |= Mask{1} << j;
  }
  return r;
}

/// The extension-lemma map over the full upset algebras: U |-> {P : R_f(P) <= U}
/// from X(dom)^+ into X(cod)^+. Preserves top, intersection and implication for
/// every morphism; unions only when the morphism preserves joins.
struct AmbientLift {
  Morphism base;
  UpsetFamily dom_family;  // full X(dom)^+
  UpsetFamily cod_family;  // full X(cod)^+
  FilterRelation relation;
  std::vector<int> member_map;  // dom member index -> cod member index

  Mask apply(Mask upset_of_dom_points) const { return box_preimage(relation, upset_of_dom_points); }
};

inline AmbientLift ambient_lift(const Morphism& f) {
  AmbientLift lift{f, {}, {}, dual_relation(f), {}};
  lift.dom_family = upset_algebra(lift.relation.target);
  lift.cod_family = upset_algebra(lift.relation.source);
  lift.member_map.reserve(lift.dom_family.members.size());
  for (Mask u : lift.dom_family.members) {
    const int idx = lift.cod_family.index_of(box_preimage(lift.relation, u));
    if (idx < 0) throw std::logic_error("ambient_lift: image is not an upset");
    lift.member_map.push_back(idx);
  }
  return lift;
}

struct AmbientLiftLaws {
  bool top = true;
  bool meet = true;
  bool implication = true;
  bool join = true;  // expected only for join-preserving morphisms
};

inline AmbientLiftLaws check_ambient_lift(const AmbientLift& l) {
  AmbientLiftLaws laws;
  const UpsetFamily& d = l.dom_family;
  const UpsetFamily& c = l.cod_family;
  laws.top = l.member_map[d.top_index] == c.top_index;
  const int m = d.count();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int mi = l.member_map[i], mj = l.member_map[j];
      if (l.member_map[d.meet_tab[i * m + j]] != c.meet_tab[mi * c.count() + mj]) laws.meet = false;
      if (l.member_map[d.imp_tab[i * m + j]] != c.imp_tab[mi * c.count() + mj]) laws.implication = false;
      if (l.member_map[d.join_tab[i * m + j]] != c.join_tab[mi * c.count() + mj]) laws.join = false;
    }
  return laws;
}

/// A morphism of extensions: the ambient lift (or its X* analogue) restricted
/// to the generated families, commuting with the embeddings.
struct LiftedMorphism {
  Morphism base;
  ExtensionResult source_ext;
  ExtensionResult target_ext;
  std::vector<int> member_map;  // source member index -> target member index

  int apply(int source_member) const { return member_map[source_member]; }
};

namespace detail {

inline Variety lift_base_tag(ExtKind kind) {
  switch (kind) {
    case ExtKind::IS: return Variety::Hil;
    case ExtKind::GHey: return Variety::HilS;
    case ExtKind::Hey: return Variety::HilS0;
    case ExtKind::Dagger: return Variety::Hil;
  }
  return Variety::Hil;
}

inline ExtensionResult extend_by_kind(const FiniteAlgebra& alg, ExtKind kind) {
  switch (kind) {
    case ExtKind::IS: return extend_is(alg);
    case ExtKind::GHey: return extend_ghey(alg);
    case ExtKind::Hey: return extend_hey(alg);
    case ExtKind::Dagger: return extend_dagger(alg);
  }
  throw std::invalid_argument("extend_by_kind: bad kind");
}

}  // namespace detail

/// Lifts a morphism to the chosen extensions. The image is certified to land
/// in the target family and the lift is certified to intertwine the
/// embeddings: lift(embed(a)) = embed(f(a)).
inline LiftedMorphism lift(const Morphism& f, ExtKind kind) {
  Morphism checked = f;
  checked.tag = detail::lift_base_tag(kind);
  if (!validate_morphism(checked))
    throw std::invalid_argument("lift: morphism does not satisfy the base preservation contract");

  LiftedMorphism out{f, detail::extend_by_kind(f.dom, kind), detail::extend_by_kind(f.cod, kind), {}};
  const FilterRelation rel = (kind == ExtKind::Dagger) ? dual_relation_star(f) : dual_relation(f);
  out.member_map.reserve(out.source_ext.family.members.size());
  for (Mask u : out.source_ext.family.members) {
    const int idx = out.target_ext.family.index_of(box_preimage(rel, u));
    if (idx < 0) throw std::logic_error("lift: image leaves the target extension");
    out.member_map.push_back(idx);
  }
  for (int a = 0; a < f.dom.size; ++a)
    if (out.member_map[out.source_ext.embedding()[a]] != out.target_ext.embedding()[f.map[a]])
      throw std::logic_error("lift: embeddings do not intertwine");
  return out;
}

struct FunctorLawReport {
  int identities_checked = 0;
  int compositions_checked = 0;
  bool identities_ok = true;
  bool compositions_ok = true;
  std::string detail;

  bool ok() const { return identities_ok && compositions_ok; }
};

/// Identity and composition preservation of the extension functor over every
/// composable morphism pair among the given algebras.
inline FunctorLawReport verify_functor_laws(const std::vector<FiniteAlgebra>& algebras, ExtKind kind) {
  FunctorLawReport rep;
  const Variety tag = detail::lift_base_tag(kind);
  for (const FiniteAlgebra& alg : algebras) {
    const LiftedMorphism l = lift(identity_morphism(alg, tag), kind);
    ++rep.identities_checked;
    for (size_t i = 0; i < l.member_map.size(); ++i)
      if (l.member_map[i] != static_cast<int>(i)) {
        rep.identities_ok = false;
        rep.detail += "identity lift is not the identity on " + alg.name + "\n";
        break;
      }
  }
  for (const FiniteAlgebra& a : algebras)
    for (const FiniteAlgebra& b : algebras) {
      const std::vector<Morphism> fs = enumerate_morphisms(a, b, tag);
      for (const FiniteAlgebra& c : algebras) {
        const std::vector<Morphism> gs = enumerate_morphisms(b, c, tag);
        for (const Morphism& f : fs) {
          const LiftedMorphism lf = lift(f, kind);
          for (const Morphism& g : gs) {
            const LiftedMorphism lg = lift(g, kind);
            const LiftedMorphism lgf = lift(compose_morphisms(g, f), kind);
            ++rep.compositions_checked;
            bool same = true;
            for (size_t i = 0; i < lf.member_map.size(); ++i)
              if (lgf.member_map[i] != lg.member_map[lf.member_map[i]]) same = false;
            if (!same) {
              rep.compositions_ok = false;
              rep.detail += "composition law fails between " + a.name + ", " + b.name + ", " + c.name + "\n";
            }
          }
        }
      }
    }
  return rep;
}

struct UniversalPropertyReport {
  int maps_checked = 0;
  bool embedding_iso = true;       // phi on the codomain algebra is an isomorphism
  bool factorizations_exist = true;
  bool factorizations_unique = true;
  std::string detail;

  bool ok() const { return embedding_iso && factorizations_exist && factorizations_unique; }
};

namespace detail {

inline Variety rich_tag(ExtKind kind) {
  switch (kind) {
    case ExtKind::IS: return Variety::IS;
    case ExtKind::GHey: return Variety::GHey;
    case ExtKind::Hey: return Variety::Hey;
    case ExtKind::Dagger: break;
  }
  throw std::invalid_argument("rich_tag: no universal property for this kind");
}

}  // namespace detail

/// The universal property of the extension: every base-category morphism
/// f : H -> U(G) factors as U(h) after the unit embedding for exactly one
/// richer-signature morphism h : extension(H) -> G. The mediating morphism is
/// built the way the existence proof does (through the lifted morphism and the
/// inverse of the codomain's embedding isomorphism); uniqueness is established
/// by full enumeration of candidate morphisms.
inline UniversalPropertyReport verify_universal_property(const FiniteAlgebra& h,
                                                         const FiniteAlgebra& g, ExtKind kind) {
  UniversalPropertyReport rep;
  const Variety base = detail::lift_base_tag(kind);
  const Variety rich = detail::rich_tag(kind);
  const FiniteAlgebra ug = reduct(g, base);

  const ExtensionResult ext_h = detail::extend_by_kind(h, kind);
  const ExtensionResult ext_g = detail::extend_by_kind(ug, kind);

  // For G already in the richer variety, the embedding is onto its extension.
  std::vector<int> embed_inverse(ext_g.family.members.size(), -1);
  if (static_cast<int>(ext_g.family.members.size()) != g.size) {
    rep.embedding_iso = false;
    rep.detail += "codomain embedding is not onto its extension\n";
    return rep;
  }
  for (int a = 0; a < g.size; ++a) embed_inverse[ext_g.embedding()[a]] = a;

  const std::vector<Morphism> base_maps = enumerate_morphisms(h, ug, base);
  const std::vector<Morphism> candidates = enumerate_morphisms(ext_h.presented, g, rich);

  for (const Morphism& f : base_maps) {
    ++rep.maps_checked;
    const LiftedMorphism lf = lift(f, kind);
    Morphism mediating{ext_h.presented, g, std::vector<int>(ext_h.presented.size), rich};
    for (size_t i = 0; i < lf.member_map.size(); ++i)
      mediating.map[i] = embed_inverse[lf.member_map[i]];
    if (!validate_morphism(mediating)) {
      rep.factorizations_exist = false;
      rep.detail += "constructed mediating map is not a morphism\n";
      continue;
    }
    int factoring = 0;
    bool constructed_found = false;
    for (const Morphism& k : candidates) {
      bool factors = true;
      for (int a = 0; a < h.size; ++a)
        if (k.map[ext_h.embedding()[a]] != f.map[a]) factors = false;
      if (factors) {
        ++factoring;
        if (k.map == mediating.map) constructed_found = true;
      }
    }
    if (factoring == 0 || !constructed_found) {
      rep.factorizations_exist = false;
      rep.detail += "no factorization found for a base morphism\n";
    }
    if (factoring > 1) {
      rep.factorizations_unique = false;
      rep.detail += "factorization is not unique for a base morphism\n";
    }
  }
  return rep;
}

}  // namespace hilbert
