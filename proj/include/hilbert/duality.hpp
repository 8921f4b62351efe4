#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hilbert/filters.hpp"

namespace hilbert {

/// The point set of the duality together with the embedding a |-> {P : a in P}.
struct DualSpace {
  FilterPoset points;
  std::vector<Mask> embedding;  // indexed by carrier element, masks over points
};

/// X(H) with the table of phi values. phi lands in the upsets of the point
/// poset and is an injective implication-preserving map.
inline DualSpace dual_space(const FiniteAlgebra& alg) {
  DualSpace d{irreducible_filters(alg), {}};
  d.embedding.assign(alg.size, 0);
  for (int a = 0; a < alg.size; ++a)
    for (size_t i = 0; i < d.points.filters.size(); ++i)
      if (mask_contains(d.points.filters[i], a)) d.embedding[a] |= Mask{1} << i;
  return d;
}

enum class FamilyOps { Implication, ImplicationMeet, All };

/// A family of upsets of a point poset, explicitly closed under the chosen
/// operations, with stored operation tables so the family can be re-encoded as
/// an ordinary algebra. Members are kept sorted by mask.
struct UpsetFamily {
  FilterPoset points;
  std::vector<Mask> members;
  int top_index = -1;
  std::optional<int> bottom_index;
  std::vector<int> imp_tab;
  std::vector<int> meet_tab;  // empty unless meet-closed
  std::vector<int> join_tab;  // empty unless join-closed
  std::optional<std::vector<int>> embedding;  // source element -> member index

  int count() const { return static_cast<int>(members.size()); }
  bool meet_closed() const { return !meet_tab.empty(); }
  bool join_closed() const { return !join_tab.empty(); }

  int index_of(Mask m) const {
    const auto it = std::lower_bound(members.begin(), members.end(), m);
    if (it == members.end() || *it != m) return -1;
    return static_cast<int>(it - members.begin());
  }
};

/// Builds the family and its operation tables, verifying that every member is
/// an upset, the full set is present, and the family is closed under the
/// requested operations.
inline UpsetFamily make_upset_family(FilterPoset points, std::vector<Mask> members, FamilyOps ops) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  UpsetFamily fam;
  fam.points = std::move(points);
  fam.members = std::move(members);
  const Poset& p = fam.points.order;
  for (Mask m : fam.members)
    if (!is_upset(p, m)) throw std::invalid_argument("make_upset_family: member is not an upset");
  fam.top_index = fam.index_of(p.all());
  if (fam.top_index < 0) throw std::invalid_argument("make_upset_family: full set missing");
  if (fam.index_of(0) >= 0) fam.bottom_index = fam.index_of(0);

  const int m = fam.count();
  auto closed_index = [&](Mask v, const char* op) {
    const int i = fam.index_of(v);
    if (i < 0) throw std::invalid_argument(std::string("make_upset_family: family not closed under ") + op);
    return i;
  };
  fam.imp_tab.resize(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      fam.imp_tab[i * m + j] = closed_index(upset_implication(p, fam.members[i], fam.members[j]), "=>");
  if (ops != FamilyOps::Implication) {
    fam.meet_tab.resize(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        fam.meet_tab[i * m + j] = closed_index(fam.members[i] & fam.members[j], "meet");
  }
  if (ops == FamilyOps::All) {
    fam.join_tab.resize(static_cast<size_t>(m) * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        fam.join_tab[i * m + j] = closed_index(fam.members[i] | fam.members[j], "join");
  }
  return fam;
}

/// The full upset algebra of a point poset: a (generalized) Heyting algebra,
/// Heyting once the empty set is counted in.
inline UpsetFamily upset_algebra(const FilterPoset& points) {
  return make_upset_family(points, all_upsets(points.order), FamilyOps::All);
}

/// Re-encodes the family as operation tables over member indices; member
/// order is canonical, so equality of presented algebras is table equality.
inline FiniteAlgebra family_algebra(const UpsetFamily& fam, Variety tag, std::string name = "") {
  FiniteAlgebra alg;
  alg.size = fam.count();
  alg.one = fam.top_index;
  alg.name = std::move(name);
  alg.arrow_table = fam.imp_tab;
  if (variety_needs_meet(tag)) {
    if (!fam.meet_closed()) throw std::invalid_argument("family_algebra: meet table unavailable");
    alg.meet_table = fam.meet_tab;
  }
  if (variety_needs_join(tag)) {
    if (!fam.join_closed()) throw std::invalid_argument("family_algebra: join table unavailable");
    alg.join_table = fam.join_tab;
  }
  if (variety_needs_zero(tag)) {
    if (!fam.bottom_index) throw std::invalid_argument("family_algebra: no bottom member");
    alg.zero = *fam.bottom_index;
  }
  return alg;
}

namespace detail {

// Distinct unions of subfamilies of the basic opens; the open sets of the
// point space at finite scale.
inline std::vector<Mask> all_opens(const std::vector<Mask>& basic, int npoints) {
  std::vector<Mask> opens{0};
  for (Mask b : basic) {
    const size_t sz = opens.size();
    for (size_t i = 0; i < sz; ++i) opens.push_back(opens[i] | b);
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  }
  (void)npoints;
  return opens;
}

}  // namespace detail

struct DualAxiomReport {
  bool base_ok = false;           // basic opens generate all opens by unions
  bool implication_closed = false;  // (U n V^c] stays basic
  bool sober = false;             // irreducible closed sets are point closures
  std::string detail;

  bool ok() const { return base_ok && implication_closed && sober; }
};

/// Verifies, in the finite order form, the three dual-space axioms for the
/// basic family {phi(a)^c : a in H} over X(H). Passes for every valid Hilbert
/// algebra, so this doubles as a theorem test.
inline DualAxiomReport check_dual_space_axioms(const FiniteAlgebra& alg) {
  DualAxiomReport rep;
  const DualSpace d = dual_space(alg);
  const Poset& p = d.points.order;
  const Mask all = p.all();

  std::vector<Mask> basic;
  basic.reserve(alg.size);
  for (Mask e : d.embedding) basic.push_back(~e & all);
  std::sort(basic.begin(), basic.end());
  basic.erase(std::unique(basic.begin(), basic.end()), basic.end());

  // base condition: pairwise intersections are unions of smaller basics
  rep.base_ok = true;
  for (Mask u : basic)
    for (Mask v : basic) {
      Mask covered = 0;
      for (Mask w : basic)
        if (mask_subset(w, u & v)) covered |= w;
      if (covered != (u & v)) {
        rep.base_ok = false;
        rep.detail += "base condition fails on a pair of basic opens\n";
        goto base_done;
      }
    }
base_done:

  rep.implication_closed = true;
  for (Mask u : basic)
    for (Mask v : basic) {
      const Mask dc = down_closure(p, u & ~v);
      if (std::find(basic.begin(), basic.end(), dc) == basic.end()) {
        rep.implication_closed = false;
        rep.detail += "(U n V^c] leaves the basic family\n";
        goto imp_done;
      }
    }
imp_done:

  // sobriety: every irreducible closed set is the closure [x) of a unique point
  {
    rep.sober = true;
    const std::vector<Mask> opens = detail::all_opens(basic, p.size);
    std::vector<Mask> closed;
    closed.reserve(opens.size());
    for (Mask o : opens) closed.push_back(~o & all);
    for (Mask y : closed) {
      if (y == 0) continue;
      bool irreducible = true;
      for (Mask z : closed) {
        for (Mask w : closed)
          if (mask_subset(y, z | w) && !mask_subset(y, z) && !mask_subset(y, w)) {
            irreducible = false;
            break;
          }
        if (!irreducible) break;
      }
      if (!irreducible) continue;
      int points_matching = 0;
      for (int x = 0; x < p.size; ++x)
        if (p.up[x] == y) ++points_matching;
      if (points_matching != 1) {
        rep.sober = false;
        rep.detail += "irreducible closed set is not a unique point closure\n";
        break;
      }
    }
  }
  return rep;
}

/// D(X(H)): the family {phi(a)} with the embedding, closed under implication.
inline UpsetFamily dual_algebra(const FiniteAlgebra& alg) {
  const DualSpace d = dual_space(alg);
  UpsetFamily fam = make_upset_family(d.points, d.embedding, FamilyOps::Implication);
  std::vector<int> embed(alg.size);
  for (int a = 0; a < alg.size; ++a) embed[a] = fam.index_of(d.embedding[a]);
  fam.embedding = std::move(embed);
  return fam;
}

struct EvaluationReport {
  FiniteAlgebra presented;       // D(X(H)) as an algebra
  std::vector<Mask> evaluation;  // P |-> {U in D : P in U}, masks over the D carrier
  bool values_irreducible = false;
  bool bijective = false;
  bool order_isomorphism = false;

  bool ok() const { return values_irreducible && bijective && order_isomorphism; }
};

/// The evaluation map X(H) -> X(D(X(H))) and its certificates: every value is
/// an irreducible filter of D(X(H)), the map is a bijection onto them, and it
/// is an order isomorphism.
inline EvaluationReport point_evaluation(const FiniteAlgebra& alg) {
  EvaluationReport rep;
  const DualSpace d = dual_space(alg);
  const UpsetFamily dx = dual_algebra(alg);
  rep.presented = family_algebra(dx, Variety::Hil, alg.name.empty() ? "" : "D(X(" + alg.name + "))");

  const int npts = d.points.order.size;
  rep.evaluation.assign(npts, 0);
  for (int i = 0; i < npts; ++i)
    for (int u = 0; u < dx.count(); ++u)
      if (mask_contains(dx.members[u], i)) rep.evaluation[i] |= Mask{1} << u;

  const FilterPoset xd = irreducible_filters(rep.presented);
  rep.values_irreducible = true;
  std::vector<bool> hit(xd.filters.size(), false);
  for (Mask e : rep.evaluation) {
    const int idx = xd.index_of(e);
    if (idx < 0)
      rep.values_irreducible = false;
    else
      hit[idx] = true;
  }
  rep.bijective = rep.values_irreducible &&
                  std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }) &&
                  [&] {
                    std::vector<Mask> vals = rep.evaluation;
                    std::sort(vals.begin(), vals.end());
                    return std::adjacent_find(vals.begin(), vals.end()) == vals.end();
                  }();
  rep.order_isomorphism = true;
  for (int i = 0; i < npts; ++i)
    for (int j = 0; j < npts; ++j)
      if (d.points.order.leq(i, j) != mask_subset(rep.evaluation[i], rep.evaluation[j]))
        rep.order_isomorphism = false;
  return rep;
}

/// A binary relation between two filter posets; realizes the duals of
/// morphisms. rows[i] is the set of target points related to source point i.
struct FilterRelation {
  FilterPoset source;
  FilterPoset target;
  std::vector<Mask> rows;

  bool contains(int i, int j) const { return mask_contains(rows[i], j); }
};

/// R_f over the irreducible-filter spaces: (P,Q) related iff f^-1(P) <= Q.
/// Source is the codomain's space, target the domain's.
inline FilterRelation dual_relation(const Morphism& f) {
  FilterRelation r{irreducible_filters(f.cod), irreducible_filters(f.dom), {}};
  r.rows.assign(r.source.filters.size(), 0);
  for (size_t i = 0; i < r.source.filters.size(); ++i) {
    const Mask pre = preimage(f, r.source.filters[i]);
    for (size_t j = 0; j < r.target.filters.size(); ++j)
      if (mask_subset(pre, r.target.filters[j])) r.rows[i] |= Mask{1} << j;
  }
  return r;
}

/// {x : R(x) <= u} — the box preimage through the relation; the engine behind
/// every dual map in this library.
inline Mask box_preimage(const FilterRelation& r, Mask u) {
  Mask out = 0;
  for (size_t i = 0; i < r.rows.size(); ++i)
    if (mask_subset(r.rows[i], u)) out |= Mask{1} << i;
  return out;
}

/// The dual map h_R applied to every member of a family of upsets over the
/// relation's target.
inline std::vector<Mask> dual_map(const FilterRelation& r, const UpsetFamily& target_family) {
  std::vector<Mask> out;
  out.reserve(target_family.members.size());
  for (Mask u : target_family.members) out.push_back(box_preimage(r, u));
  return out;
}

/// Relational product: (x,z) related iff some y has (x,y) in r and (y,z) in s.
inline FilterRelation compose_relations(const FilterRelation& r, const FilterRelation& s) {
  if (r.target.filters != s.source.filters)
    throw std::invalid_argument("compose_relations: inner point sets do not match");
  FilterRelation out{r.source, s.target, std::vector<Mask>(r.rows.size(), 0)};
  for (size_t x = 0; x < r.rows.size(); ++x)
    for_each_member(r.rows[x], [&](int y) { out.rows[x] |= s.rows[y]; });
  return out;
}

/// The functional-relation axioms in finite order form: box preimages of basic
/// opens are basic, sections are closed sets, and every related pair (x,y) has
/// a z above x with R(z) equal to the closure of y.
inline bool is_functional_relation(const FilterRelation& r) {
  const DualSpace dsrc = dual_space(r.source.base);
  const DualSpace dtgt = dual_space(r.target.base);
  if (dsrc.points.filters != r.source.filters || dtgt.points.filters != r.target.filters)
    throw std::invalid_argument("is_functional_relation: relation is not over dual spaces");
  const Poset& psrc = r.source.order;
  const Poset& ptgt = r.target.order;

  std::vector<Mask> basic_src, basic_tgt;
  for (Mask e : dsrc.embedding) basic_src.push_back(~e & psrc.all());
  for (Mask e : dtgt.embedding) basic_tgt.push_back(~e & ptgt.all());

  // (HR1): R^-1 of a basic open is a basic open; R^-1(U) = {x : R(x) n U != 0}
  for (Mask u : basic_tgt) {
    Mask pre = 0;
    for (size_t x = 0; x < r.rows.size(); ++x)
      if (r.rows[x] & u) pre |= Mask{1} << x;
    if (std::find(basic_src.begin(), basic_src.end(), pre) == basic_src.end()) return false;
  }

  // (HR2): each section is a closed set of the target space
  const std::vector<Mask> opens_tgt = detail::all_opens(basic_tgt, ptgt.size);
  for (Mask row : r.rows) {
    const Mask complement = ~row & ptgt.all();
    if (std::find(opens_tgt.begin(), opens_tgt.end(), complement) == opens_tgt.end()) return false;
  }

  // (HF)
  for (size_t x = 0; x < r.rows.size(); ++x) {
    bool ok = true;
    for_each_member(r.rows[x], [&](int y) {
      bool found = false;
      for_each_member(psrc.up[static_cast<int>(x)], [&](int z) {
        if (r.rows[z] == ptgt.up[y]) found = true;
      });
      ok = ok && found;
    });
    if (!ok) return false;
  }
  return true;
}

/// The extension condition characterizing homomorphisms among subpreserving
/// maps: every (P,Q) in R_f admits F in X(cod) with P <= F and f^-1(F) = Q.
inline bool morphism_extension_condition(const Morphism& f) {
  const FilterRelation r = dual_relation(f);
  for (size_t i = 0; i < r.source.filters.size(); ++i) {
    bool row_ok = true;
    for_each_member(r.rows[i], [&](int j) {
      bool found = false;
      for (size_t k = 0; k < r.source.filters.size(); ++k)
        if (mask_subset(r.source.filters[i], r.source.filters[k]) &&
            preimage(f, r.source.filters[k]) == r.target.filters[j])
          found = true;
      row_ok = row_ok && found;
    });
    if (!row_ok) return false;
  }
  return true;
}

}  // namespace hilbert
