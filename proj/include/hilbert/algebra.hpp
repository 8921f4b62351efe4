#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hilbert/poset.hpp"

namespace hilbert {

/// The five algebra signatures handled by this library, plus the bounded
/// join-variant. The tag decides which tables/constants must be present and
/// which law set validate() applies.
enum class Variety { Hil, HilS, HilS0, IS, GHey, Hey };

inline const char* variety_name(Variety v) {
  switch (v) {
    case Variety::Hil: return "hil";
    case Variety::HilS: return "hils";
    case Variety::HilS0: return "hils0";
    case Variety::IS: return "is";
    case Variety::GHey: return "ghey";
    case Variety::Hey: return "hey";
  }
  return "?";
}

inline std::optional<Variety> parse_variety(const std::string& s) {
  for (Variety v : {Variety::Hil, Variety::HilS, Variety::HilS0, Variety::IS, Variety::GHey, Variety::Hey})
    if (s == variety_name(v)) return v;
  return std::nullopt;
}

inline bool variety_needs_join(Variety v) {
  return v == Variety::HilS || v == Variety::HilS0 || v == Variety::GHey || v == Variety::Hey;
}
inline bool variety_needs_meet(Variety v) {
  return v == Variety::IS || v == Variety::GHey || v == Variety::Hey;
}
inline bool variety_needs_zero(Variety v) { return v == Variety::HilS0 || v == Variety::Hey; }

/// A finite algebra on carrier {0..size-1} with an implication table, optional
/// join/meet tables, a distinguished top and an optional bottom. Constants are
/// carrier indices, not reserved positions, so permutation-based isomorphism
/// tests stay uniform. Values are immutable after construction by convention;
/// every operation on them is pure.
struct FiniteAlgebra {
  int size = 0;
  int one = 0;
  std::vector<int> arrow_table;  // row-major: arrow_table[a*size+b] = a -> b
  std::optional<std::vector<int>> join_table;
  std::optional<std::vector<int>> meet_table;
  std::optional<int> zero;
  std::string name;

  int arrow(int a, int b) const { return arrow_table[a * size + b]; }
  int join(int a, int b) const { return (*join_table)[a * size + b]; }
  int meet(int a, int b) const { return (*meet_table)[a * size + b]; }
  bool has_join() const { return join_table.has_value(); }
  bool has_meet() const { return meet_table.has_value(); }
  bool leq(int a, int b) const { return arrow(a, b) == one; }

  friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return a.size == b.size && a.one == b.one && a.arrow_table == b.arrow_table &&
           a.join_table == b.join_table && a.meet_table == b.meet_table && a.zero == b.zero;
  }
};

struct LawFailure {
  std::string law;
  std::vector<int> witness;  // the offending tuple, in law order
  std::string detail;
};

/// Structural problems (malformed tables) are reported separately from law
/// failures; a report passes only when both lists are empty.
struct ValidationReport {
  std::vector<LawFailure> structural;
  std::vector<LawFailure> laws;
  bool truncated = false;

  bool ok() const { return structural.empty() && laws.empty(); }

  std::string summary() const {
    if (ok()) return "pass";
    std::ostringstream os;
    for (const auto& f : structural) {
      os << "structural: " << f.law;
      if (!f.detail.empty()) os << " (" << f.detail << ")";
      os << "\n";
    }
    for (const auto& f : laws) {
      os << "law: " << f.law << " at (";
      for (size_t i = 0; i < f.witness.size(); ++i) os << (i ? "," : "") << f.witness[i];
      os << ")";
      if (!f.detail.empty()) os << " " << f.detail;
      os << "\n";
    }
    if (truncated) os << "(failure list truncated)\n";
    return os.str();
  }
};

namespace detail {

class ReportBuilder {
 public:
  explicit ReportBuilder(int cap) : cap_(cap) {}

  bool structural(std::string law, std::string detail) {
    if (room()) report_.structural.push_back({std::move(law), {}, std::move(detail)});
    return false;
  }
  bool fail(std::string law, std::vector<int> witness, std::string detail = "") {
    if (room()) report_.laws.push_back({std::move(law), std::move(witness), std::move(detail)});
    return false;
  }
  bool room() {
    if (count_++ < cap_) return true;
    report_.truncated = true;
    return false;
  }
  ValidationReport take() { return std::move(report_); }
  bool clean() const { return report_.structural.empty() && report_.laws.empty(); }

 private:
  ValidationReport report_;
  int cap_;
  int count_ = 0;
};

inline bool table_in_range(const FiniteAlgebra& alg, const std::vector<int>& table,
                           const char* which, ReportBuilder& rb) {
  const size_t want = static_cast<size_t>(alg.size) * alg.size;
  if (table.size() != want)
    return rb.structural(std::string(which) + " table size",
                         "expected " + std::to_string(want) + " entries, got " + std::to_string(table.size()));
  for (size_t i = 0; i < table.size(); ++i)
    if (table[i] < 0 || table[i] >= alg.size)
      return rb.structural(std::string(which) + " entry out of range",
                           "entry [" + std::to_string(i / alg.size) + "][" + std::to_string(i % alg.size) +
                               "] = " + std::to_string(table[i]));
  return true;
}

inline void check_hilbert_laws(const FiniteAlgebra& alg, ReportBuilder& rb) {
  const int n = alg.size;
  const int one = alg.one;
  for (int a = 0; a < n && rb.room(); ++a)
    for (int b = 0; b < n; ++b) {
      if (alg.arrow(a, alg.arrow(b, a)) != one) {
        rb.fail("a->(b->a) = 1", {a, b});
        break;
      }
    }
  for (int a = 0; a < n && rb.room(); ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int lhs = alg.arrow(a, alg.arrow(b, c));
        const int rhs = alg.arrow(alg.arrow(a, b), alg.arrow(a, c));
        if (alg.arrow(lhs, rhs) != one) {
          rb.fail("(a->(b->c))->((a->b)->(a->c)) = 1", {a, b, c});
          b = c = n;  // report one witness per law
        }
      }
  for (int a = 0; a < n && rb.room(); ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && alg.arrow(a, b) == one && alg.arrow(b, a) == one) {
        rb.fail("a->b = b->a = 1 implies a = b", {a, b});
        a = b = n;
      }
}

// Order for the meet-based signatures: a <= b iff a /\ b = a.
inline bool meet_leq(const FiniteAlgebra& alg, int a, int b) { return alg.meet(a, b) == a; }

inline void check_meet_semilattice(const FiniteAlgebra& alg, ReportBuilder& rb) {
  const int n = alg.size;
  for (int a = 0; a < n && rb.room(); ++a) {
    if (alg.meet(a, a) != a) rb.fail("a /\\ a = a", {a});
    if (alg.meet(a, alg.one) != a) rb.fail("a /\\ 1 = a", {a});
    for (int b = 0; b < n; ++b) {
      if (alg.meet(a, b) != alg.meet(b, a)) {
        rb.fail("a /\\ b = b /\\ a", {a, b});
        break;
      }
      for (int c = 0; c < n; ++c)
        if (alg.meet(alg.meet(a, b), c) != alg.meet(a, alg.meet(b, c))) {
          rb.fail("(a /\\ b) /\\ c = a /\\ (b /\\ c)", {a, b, c});
          b = c = n;
        }
    }
  }
}

inline void check_join_semilattice(const FiniteAlgebra& alg, ReportBuilder& rb) {
  const int n = alg.size;
  for (int a = 0; a < n && rb.room(); ++a) {
    if (alg.join(a, a) != a) rb.fail("a \\/ a = a", {a});
    if (alg.join(a, alg.one) != alg.one) rb.fail("a \\/ 1 = 1", {a});
    for (int b = 0; b < n; ++b) {
      if (alg.join(a, b) != alg.join(b, a)) {
        rb.fail("a \\/ b = b \\/ a", {a, b});
        break;
      }
      for (int c = 0; c < n; ++c)
        if (alg.join(alg.join(a, b), c) != alg.join(a, alg.join(b, c))) {
          rb.fail("(a \\/ b) \\/ c = a \\/ (b \\/ c)", {a, b, c});
          b = c = n;
        }
    }
  }
}

// Residuation: a /\ b <= c iff a <= b -> c, with <= taken from the meet table.
// The implication is also recomputed as max{c : a /\ c <= b} and cross-checked
// against the stored arrow table.
inline void check_residuation(const FiniteAlgebra& alg, ReportBuilder& rb) {
  const int n = alg.size;
  for (int a = 0; a < n && rb.room(); ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const bool lhs = meet_leq(alg, alg.meet(a, b), c);
        const bool rhs = meet_leq(alg, a, alg.arrow(b, c));
        if (lhs != rhs) {
          rb.fail("a /\\ b <= c iff a <= b -> c", {a, b, c});
          b = c = n;
        }
      }
  std::vector<int> candidates;
  for (int a = 0; a < n && rb.room(); ++a)
    for (int b = 0; b < n; ++b) {
      candidates.clear();
      for (int c = 0; c < n; ++c)
        if (meet_leq(alg, alg.meet(a, c), b)) candidates.push_back(c);
      int best = -1;
      for (int c : candidates) {
        bool dominates = true;
        for (int d : candidates) dominates = dominates && meet_leq(alg, d, c);
        if (dominates) {
          best = c;
          break;
        }
      }
      if (best < 0)
        rb.fail("max{c : a /\\ c <= b} exists", {a, b});
      else if (best != alg.arrow(a, b))
        rb.fail("a -> b = max{c : a /\\ c <= b}", {a, b},
                "stored " + std::to_string(alg.arrow(a, b)) + ", residual " + std::to_string(best));
    }
}

inline void check_hils_compatibility(const FiniteAlgebra& alg, ReportBuilder& rb) {
  const int n = alg.size;
  for (int a = 0; a < n && rb.room(); ++a)
    for (int b = 0; b < n; ++b)
      if ((alg.arrow(a, b) == alg.one) != (alg.join(a, b) == b)) {
        rb.fail("a->b = 1 iff a \\/ b = b", {a, b});
        break;
      }
}

inline void check_absorption(const FiniteAlgebra& alg, ReportBuilder& rb) {
  const int n = alg.size;
  for (int a = 0; a < n && rb.room(); ++a)
    for (int b = 0; b < n; ++b) {
      if (alg.meet(a, alg.join(a, b)) != a) rb.fail("a /\\ (a \\/ b) = a", {a, b});
      if (alg.join(a, alg.meet(a, b)) != a) rb.fail("a \\/ (a /\\ b) = a", {a, b});
    }
}

inline void check_zero(const FiniteAlgebra& alg, ReportBuilder& rb) {
  for (int a = 0; a < alg.size && rb.room(); ++a)
    if (alg.arrow(*alg.zero, a) != alg.one) rb.fail("0 <= a", {a});
}

}  // namespace detail

/// Exhaustively validates the algebra against the law set of the given tag.
/// Failures are reported up to `failure_cap` witnesses (default 10).
inline ValidationReport validate(const FiniteAlgebra& alg, Variety tag, int failure_cap = 10) {
  detail::ReportBuilder rb(failure_cap);
  if (alg.size <= 0) {
    rb.structural("empty carrier", "size must be positive");
    return rb.take();
  }
  if (alg.one < 0 || alg.one >= alg.size) {
    rb.structural("top constant out of range", "one = " + std::to_string(alg.one));
    return rb.take();
  }
  if (!detail::table_in_range(alg, alg.arrow_table, "arrow", rb)) return rb.take();
  if (variety_needs_join(tag)) {
    if (!alg.has_join()) return (void)rb.structural("join table missing", ""), rb.take();
    if (!detail::table_in_range(alg, *alg.join_table, "join", rb)) return rb.take();
  }
  if (variety_needs_meet(tag)) {
    if (!alg.has_meet()) return (void)rb.structural("meet table missing", ""), rb.take();
    if (!detail::table_in_range(alg, *alg.meet_table, "meet", rb)) return rb.take();
  }
  if (variety_needs_zero(tag)) {
    if (!alg.zero) return (void)rb.structural("zero constant missing", ""), rb.take();
    if (*alg.zero < 0 || *alg.zero >= alg.size)
      return (void)rb.structural("zero constant out of range", ""), rb.take();
  }

  switch (tag) {
    case Variety::Hil:
      detail::check_hilbert_laws(alg, rb);
      break;
    case Variety::HilS:
    case Variety::HilS0:
      detail::check_hilbert_laws(alg, rb);
      detail::check_join_semilattice(alg, rb);
      detail::check_hils_compatibility(alg, rb);
      if (tag == Variety::HilS0) detail::check_zero(alg, rb);
      break;
    case Variety::IS:
      detail::check_meet_semilattice(alg, rb);
      detail::check_residuation(alg, rb);
      break;
    case Variety::GHey:
    case Variety::Hey:
      detail::check_meet_semilattice(alg, rb);
      detail::check_join_semilattice(alg, rb);
      detail::check_absorption(alg, rb);
      detail::check_residuation(alg, rb);
      if (tag == Variety::Hey) detail::check_zero(alg, rb);
      break;
  }
  return rb.take();
}

inline bool is_valid(const FiniteAlgebra& alg, Variety tag) { return validate(alg, tag).ok(); }

/// The order a <= b iff a->b = 1. Requires a valid Hilbert algebra; the
/// partial-order laws are re-verified by make_poset as a guard.
inline Poset natural_order(const FiniteAlgebra& alg) {
  std::vector<Mask> up(alg.size, 0);
  for (int a = 0; a < alg.size; ++a)
    for (int b = 0; b < alg.size; ++b)
      if (alg.arrow(a, b) == alg.one) up[a] |= Mask{1} << b;
  Poset p = make_poset(alg.size, std::move(up));
  if (p.down[alg.one] != p.all()) throw std::logic_error("natural_order: top is not greatest");
  return p;
}

/// The five derived implication laws that hold in every Hilbert algebra;
/// running them doubles as a validator self-test.
inline ValidationReport derived_law_suite(const FiniteAlgebra& alg, int failure_cap = 10) {
  detail::ReportBuilder rb(failure_cap);
  const int n = alg.size;
  const int one = alg.one;
  for (int a = 0; a < n && rb.room(); ++a) {
    if (alg.arrow(a, a) != one) rb.fail("a->a = 1", {a});
    if (alg.arrow(one, a) != a) rb.fail("1->a = a", {a});
  }
  for (int a = 0; a < n && rb.room(); ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (alg.arrow(a, alg.arrow(b, c)) != alg.arrow(b, alg.arrow(a, c)))
          rb.fail("a->(b->c) = b->(a->c)", {a, b, c});
        if (alg.arrow(a, alg.arrow(b, c)) != alg.arrow(alg.arrow(a, b), alg.arrow(a, c)))
          rb.fail("a->(b->c) = (a->b)->(a->c)", {a, b, c});
        if (!rb.clean()) b = c = n;
      }
  for (int a = 0; a < n && rb.room(); ++a)
    for (int b = 0; b < n; ++b) {
      if (alg.arrow(a, b) != one) continue;  // a <= b
      for (int c = 0; c < n; ++c) {
        if (alg.arrow(alg.arrow(c, a), alg.arrow(c, b)) != one)
          rb.fail("a <= b implies c->a <= c->b", {a, b, c});
        if (alg.arrow(alg.arrow(b, c), alg.arrow(a, c)) != one)
          rb.fail("a <= b implies b->c <= a->c", {a, b, c});
      }
    }
  return rb.take();
}

/// Order-induced implication on a poset with a greatest element:
/// a->b = 1 if a <= b, else b. Both standard small fixtures arise this way.
inline FiniteAlgebra from_poset(const Poset& p, std::string name = "") {
  const auto top = greatest_element(p);
  if (!top) throw std::invalid_argument("from_poset: poset has no greatest element");
  FiniteAlgebra alg;
  alg.size = p.size;
  alg.one = *top;
  alg.name = std::move(name);
  alg.arrow_table.assign(static_cast<size_t>(p.size) * p.size, 0);
  for (int a = 0; a < p.size; ++a)
    for (int b = 0; b < p.size; ++b)
      alg.arrow_table[a * p.size + b] = p.leq(a, b) ? alg.one : b;
  return alg;
}

/// Attaches the join table derived from the natural order; throws if some
/// pair has no least upper bound.
inline FiniteAlgebra with_derived_join(FiniteAlgebra alg) {
  const Poset p = natural_order(alg);
  std::vector<int> join(static_cast<size_t>(alg.size) * alg.size);
  for (int a = 0; a < alg.size; ++a)
    for (int b = 0; b < alg.size; ++b) {
      const auto j = join_in(p, a, b);
      if (!j) throw std::invalid_argument("with_derived_join: join of " + std::to_string(a) + "," +
                                          std::to_string(b) + " does not exist");
      join[a * alg.size + b] = *j;
    }
  alg.join_table = std::move(join);
  return alg;
}

inline FiniteAlgebra with_derived_meet(FiniteAlgebra alg) {
  const Poset p = natural_order(alg);
  std::vector<int> meet(static_cast<size_t>(alg.size) * alg.size);
  for (int a = 0; a < alg.size; ++a)
    for (int b = 0; b < alg.size; ++b) {
      const auto m = meet_in(p, a, b);
      if (!m) throw std::invalid_argument("with_derived_meet: meet of " + std::to_string(a) + "," +
                                          std::to_string(b) + " does not exist");
      meet[a * alg.size + b] = *m;
    }
  alg.meet_table = std::move(meet);
  return alg;
}

/// Forgetful-functor action on objects: literal field dropping.
inline FiniteAlgebra reduct(FiniteAlgebra alg, Variety target) {
  if (!variety_needs_join(target)) alg.join_table.reset();
  if (!variety_needs_meet(target)) alg.meet_table.reset();
  if (!variety_needs_zero(target)) alg.zero.reset();
  return alg;
}

}  // namespace hilbert
