#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilbert {

/// Canonical finite-subset representation: bit i set iff element i is a member.
/// Families of subsets sort deterministically by numeric mask value.
using Mask = std::uint64_t;

inline constexpr int kMaxUniverse = 63;

inline Mask full_mask(int n) {
  if (n < 0 || n > kMaxUniverse)
    throw std::invalid_argument("universe size out of range: " + std::to_string(n));
  return (Mask{1} << n) - 1;
}

inline bool mask_contains(Mask m, int i) { return (m >> i) & Mask{1}; }
inline bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline int mask_count(Mask m) { return std::popcount(m); }

template <typename F>
void for_each_member(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

inline std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  for_each_member(m, [&](int i) { out.push_back(i); });
  return out;
}

/// Finite partial order on {0..size-1}, stored as per-element principal up- and down-sets.
struct Poset {
  int size = 0;
  std::vector<Mask> up;    // up[a] = {b : a <= b}, contains a
  std::vector<Mask> down;  // down[a] = {b : b <= a}, contains a

  bool leq(int a, int b) const { return mask_contains(up[a], b); }
  Mask all() const { return full_mask(size); }
};

/// Builds a Poset from principal up-sets, verifying the partial-order laws.
inline Poset make_poset(int n, std::vector<Mask> up) {
  if (static_cast<int>(up.size()) != n) throw std::invalid_argument("make_poset: bad up-set count");
  Poset p;
  p.size = n;
  p.up = std::move(up);
  p.down.assign(n, 0);
  const Mask all = full_mask(n);
  for (int a = 0; a < n; ++a) {
    if (!mask_subset(p.up[a], all) || !mask_contains(p.up[a], a))
      throw std::invalid_argument("make_poset: relation not reflexive or out of range");
    for_each_member(p.up[a], [&](int b) { p.down[b] |= Mask{1} << a; });
  }
  for (int a = 0; a < n; ++a)
    for_each_member(p.up[a], [&](int b) {
      if (a != b && mask_contains(p.up[b], a))
        throw std::invalid_argument("make_poset: relation not antisymmetric");
      if (!mask_subset(p.up[b], p.up[a]))
        throw std::invalid_argument("make_poset: relation not transitive");
    });
  return p;
}

inline bool is_upset(const Poset& p, Mask u) {
  bool ok = true;
  for_each_member(u, [&](int a) { ok = ok && mask_subset(p.up[a], u); });
  return ok;
}

inline bool is_downset(const Poset& p, Mask u) {
  bool ok = true;
  for_each_member(u, [&](int a) { ok = ok && mask_subset(p.down[a], u); });
  return ok;
}

inline Mask up_closure(const Poset& p, Mask s) {
  Mask out = 0;
  for_each_member(s, [&](int a) { out |= p.up[a]; });
  return out;
}

inline Mask down_closure(const Poset& p, Mask s) {
  Mask out = 0;
  for_each_member(s, [&](int a) { out |= p.down[a]; });
  return out;
}

/// U => V on upsets: complement of the downset generated by U minus V.
inline Mask upset_implication(const Poset& p, Mask u, Mask v) {
  return ~down_closure(p, u & ~v) & p.all();
}

/// Every upset of the poset, sorted by mask. Exhaustive subset scan; fine at the
/// point-set sizes this library works with, guarded for sanity.
inline std::vector<Mask> all_upsets(const Poset& p) {
  if (p.size > 24) throw std::invalid_argument("all_upsets: point set too large");
  std::vector<Mask> out;
  const Mask all = full_mask(p.size);
  for (Mask u = 0;; ++u) {
    if (is_upset(p, u)) out.push_back(u);
    if (u == all) break;
  }
  return out;
}

inline Mask minimal_elements(const Poset& p, Mask s) {
  Mask out = 0;
  for_each_member(s, [&](int a) {
    if ((p.down[a] & s) == (Mask{1} << a)) out |= Mask{1} << a;
  });
  return out;
}

inline Mask maximal_elements(const Poset& p, Mask s) {
  Mask out = 0;
  for_each_member(s, [&](int a) {
    if ((p.up[a] & s) == (Mask{1} << a)) out |= Mask{1} << a;
  });
  return out;
}

inline std::optional<int> greatest_element(const Poset& p) {
  for (int a = 0; a < p.size; ++a)
    if (p.down[a] == p.all()) return a;
  return std::nullopt;
}

inline std::optional<int> least_element(const Poset& p) {
  for (int a = 0; a < p.size; ++a)
    if (p.up[a] == p.all()) return a;
  return std::nullopt;
}

/// Least upper bound of {a,b}, if it exists.
inline std::optional<int> join_in(const Poset& p, int a, int b) {
  const Mask ub = p.up[a] & p.up[b];
  const Mask least = minimal_elements(p, ub);
  if (mask_count(least) != 1) return std::nullopt;
  return std::countr_zero(least);
}

/// Greatest lower bound of {a,b}, if it exists.
inline std::optional<int> meet_in(const Poset& p, int a, int b) {
  const Mask lb = p.down[a] & p.down[b];
  const Mask greatest = maximal_elements(p, lb);
  if (mask_count(greatest) != 1) return std::nullopt;
  return std::countr_zero(greatest);
}

/// Covering pairs (a,b): a < b with nothing strictly between.
inline std::vector<std::pair<int, int>> covers(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < p.size; ++a) {
    Mask strictly_above = p.up[a] & ~(Mask{1} << a);
    for_each_member(minimal_elements(p, strictly_above), [&](int b) { out.emplace_back(a, b); });
  }
  return out;
}

}  // namespace hilbert
