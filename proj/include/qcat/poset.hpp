#pragma once

// Finite (pre)ordered sets and lattices: Galois connections, totally-below
// and way-below relations, complete distributivity, primes and coprimes.
// Subset quantifiers are brute force over bitmasks, so carriers stay small
// (at most 20 elements).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qcat/error.hpp"

namespace qcat {

/// A map between finite carriers, element i ↦ map[i].
using FiniteMap = std::vector<std::size_t>;

class FinitePoset {
 public:
  FinitePoset() = default;

  /// `leq[i][j]` means i ≤ j; must be reflexive and transitive.
  explicit FinitePoset(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
    const std::size_t n = leq_.size();
    if (n > 20) throw InvalidArgument("finite posets are limited to 20 elements");
    for (const auto& row : leq_)
      if (row.size() != n) throw InvalidArgument("order relation must be square");
    for (std::size_t i = 0; i < n; ++i)
      if (!leq_[i][i]) throw InvalidArgument("order relation is not reflexive at " + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq_[i][j])
          for (std::size_t k = 0; k < n; ++k)
            if (leq_[j][k] && !leq_[i][k])
              throw InvalidArgument("order relation is not transitive at (" + std::to_string(i) + "," +
                                    std::to_string(j) + "," + std::to_string(k) + ")");
  }

  std::size_t size() const noexcept { return leq_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  bool equivalent(std::size_t a, std::size_t b) const { return leq_[a][b] && leq_[b][a]; }
  const std::vector<std::vector<bool>>& relation() const noexcept { return leq_; }

  bool is_antisymmetric() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (equivalent(i, j)) return false;
    return true;
  }

  FinitePoset dual() const {
    auto r = leq_;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) r[i][j] = leq_[j][i];
    return FinitePoset(std::move(r));
  }

  bool is_monotone(const FiniteMap& f, const FinitePoset& target) const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (leq(i, j) && !target.leq(f[i], f[j])) return false;
    return true;
  }

  /// A least upper bound of the subset (least index among equivalent ones).
  std::optional<std::size_t> join(std::uint32_t subset) const {
    for (std::size_t c = 0; c < size(); ++c) {
      if (!is_upper_bound(c, subset)) continue;
      bool least = true;
      for (std::size_t u = 0; u < size() && least; ++u)
        if (is_upper_bound(u, subset) && !leq(c, u)) least = false;
      if (least) return c;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> meet(std::uint32_t subset) const {
    for (std::size_t c = 0; c < size(); ++c) {
      if (!is_lower_bound(c, subset)) continue;
      bool greatest = true;
      for (std::size_t l = 0; l < size() && greatest; ++l)
        if (is_lower_bound(l, subset) && !leq(l, c)) greatest = false;
      if (greatest) return c;
    }
    return std::nullopt;
  }

  bool is_upper_bound(std::size_t u, std::uint32_t subset) const {
    for (std::size_t a = 0; a < size(); ++a)
      if ((subset >> a & 1u) && !leq(a, u)) return false;
    return true;
  }
  bool is_lower_bound(std::size_t l, std::uint32_t subset) const {
    for (std::size_t a = 0; a < size(); ++a)
      if ((subset >> a & 1u) && !leq(l, a)) return false;
    return true;
  }

  /// Every subset (including the empty one) has a join.
  bool is_complete_lattice() const {
    if (size() == 0) return false;
    for (std::uint32_t s = 0; s < full(); ++s)
      if (!join(s)) return false;
    return true;
  }

  bool is_lower_set(std::uint32_t subset) const {
    for (std::size_t a = 0; a < size(); ++a)
      if (subset >> a & 1u)
        for (std::size_t b = 0; b < size(); ++b)
          if (leq(b, a) && !(subset >> b & 1u)) return false;
    return true;
  }

  bool is_directed(std::uint32_t subset) const {
    if (subset == 0) return false;
    for (std::size_t a = 0; a < size(); ++a) {
      if (!(subset >> a & 1u)) continue;
      for (std::size_t b = 0; b < size(); ++b) {
        if (!(subset >> b & 1u)) continue;
        bool bounded = false;
        for (std::size_t c = 0; c < size() && !bounded; ++c)
          bounded = (subset >> c & 1u) && leq(a, c) && leq(b, c);
        if (!bounded) return false;
      }
    }
    return true;
  }

  std::uint32_t full() const { return size() == 32 ? 0xffffffffu : (1u << size()); }

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

 private:
  std::vector<std::vector<bool>> leq_;
};

/// A finite poset whose every subset has a join and meet.
class FiniteLattice {
 public:
  explicit FiniteLattice(FinitePoset p) : p_(std::move(p)) {
    if (!p_.is_antisymmetric()) throw InvalidArgument("lattice order must be antisymmetric");
    const std::size_t n = p_.size();
    if (n == 0) throw InvalidArgument("empty lattice");
    join_.assign(n * n, 0);
    meet_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto j = p_.join((1u << a) | (1u << b));
        auto m = p_.meet((1u << a) | (1u << b));
        if (!j || !m) throw InvalidArgument("poset is not a lattice");
        join_[a * n + b] = *j;
        meet_[a * n + b] = *m;
      }
    bottom_ = *p_.join(0);
    top_ = *p_.meet(0);
  }

  const FinitePoset& poset() const noexcept { return p_; }
  std::size_t size() const noexcept { return p_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return p_.leq(a, b); }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }

  std::size_t sup(std::uint32_t subset) const {
    std::size_t acc = bottom_;
    for (std::size_t a = 0; a < size(); ++a)
      if (subset >> a & 1u) acc = join(acc, a);
    return acc;
  }
  std::size_t inf(std::uint32_t subset) const {
    std::size_t acc = top_;
    for (std::size_t a = 0; a < size(); ++a)
      if (subset >> a & 1u) acc = meet(acc, a);
    return acc;
  }

  FiniteLattice dual() const { return FiniteLattice(p_.dual()); }

 private:
  FinitePoset p_;
  std::vector<std::size_t> join_, meet_;
  std::size_t bottom_ = 0, top_ = 0;
};

/// f ⊣ g: f(x) ≤ y ⟺ x ≤ g(y), for f: P → Q and g: Q → P.
inline bool galois_check(const FiniteMap& f, const FiniteMap& g, const FinitePoset& p, const FinitePoset& q) {
  if (f.size() != p.size() || g.size() != q.size()) throw InvalidArgument("map size does not match its domain");
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < q.size(); ++y)
      if (q.leq(f[x], y) != p.leq(x, g[y])) return false;
  return true;
}

/// The left adjoint of a monotone g: Q → P, sending x to the least element of
/// g⁻¹(↑x), if every such preimage has one.
inline std::optional<FiniteMap> left_adjoint_of(const FiniteMap& g, const FinitePoset& p, const FinitePoset& q) {
  FiniteMap f(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::uint32_t pre = 0;
    for (std::size_t y = 0; y < q.size(); ++y)
      if (p.leq(x, g[y])) pre |= 1u << y;
    std::optional<std::size_t> least;
    for (std::size_t y = 0; y < q.size() && !least; ++y)
      if ((pre >> y & 1u) && q.is_lower_bound(y, pre)) least = y;
    if (!least) return std::nullopt;
    f[x] = *least;
  }
  return f;
}

/// The right adjoint of a monotone f: P → Q, sending y to the greatest element of f⁻¹(↓y).
inline std::optional<FiniteMap> right_adjoint_of(const FiniteMap& f, const FinitePoset& p, const FinitePoset& q) {
  FiniteMap g(q.size());
  for (std::size_t y = 0; y < q.size(); ++y) {
    std::uint32_t pre = 0;
    for (std::size_t x = 0; x < p.size(); ++x)
      if (q.leq(f[x], y)) pre |= 1u << x;
    std::optional<std::size_t> greatest;
    for (std::size_t x = 0; x < p.size() && !greatest; ++x)
      if ((pre >> x & 1u) && p.is_upper_bound(x, pre)) greatest = x;
    if (!greatest) return std::nullopt;
    g[y] = *greatest;
  }
  return g;
}

/// x ◁ y: every subset whose join is above y has an element above x.
inline bool totally_below(const FiniteLattice& l, std::size_t x, std::size_t y) {
  for (std::uint32_t a = 0; a < l.poset().full(); ++a) {
    if (!l.leq(y, l.sup(a))) continue;
    bool hit = false;
    for (std::size_t e = 0; e < l.size() && !hit; ++e) hit = (a >> e & 1u) && l.leq(x, e);
    if (!hit) return false;
  }
  return true;
}

/// x ≪ y: as totally_below, restricted to directed subsets.
inline bool way_below(const FiniteLattice& l, std::size_t x, std::size_t y) {
  for (std::uint32_t a = 1; a < l.poset().full(); ++a) {
    if (!l.poset().is_directed(a) || !l.leq(y, l.sup(a))) continue;
    bool hit = false;
    for (std::size_t e = 0; e < l.size() && !hit; ++e) hit = (a >> e & 1u) && l.leq(x, e);
    if (!hit) return false;
  }
  return true;
}

namespace detail {
template <class Rel>
bool each_is_join_of(const FiniteLattice& l, Rel&& rel) {
  for (std::size_t x = 0; x < l.size(); ++x) {
    std::uint32_t below = 0;
    for (std::size_t z = 0; z < l.size(); ++z)
      if (rel(z, x)) below |= 1u << z;
    if (l.sup(below) != x) return false;
  }
  return true;
}
}  // namespace detail

/// Every element is the join of the elements totally below it.
inline bool is_completely_distributive(const FiniteLattice& l) {
  return detail::each_is_join_of(l, [&](std::size_t z, std::size_t x) { return totally_below(l, z, x); });
}

/// Every element is the join of the elements way below it (always true for finite lattices).
inline bool is_continuous_lattice(const FiniteLattice& l) {
  return detail::each_is_join_of(l, [&](std::size_t z, std::size_t x) { return way_below(l, z, x); });
}

/// The lower-set form of complete distributivity: sup ⋂A_i = inf_i sup A_i
/// for every family of lower sets. Exponential in the number of lower sets.
inline bool satisfies_cd_law(const FiniteLattice& l) {
  std::vector<std::uint32_t> lowers;
  for (std::uint32_t s = 0; s < l.poset().full(); ++s)
    if (l.poset().is_lower_set(s)) lowers.push_back(s);
  if (lowers.size() > 24) throw BoundExceeded("too many lower sets for the family enumeration");
  const std::uint64_t families = std::uint64_t{1} << lowers.size();
  for (std::uint64_t fam = 0; fam < families; ++fam) {
    std::uint32_t common = l.poset().full() - 1;
    std::size_t inf_of_sups = l.top();
    for (std::size_t i = 0; i < lowers.size(); ++i) {
      if (!(fam >> i & 1u)) continue;
      common &= lowers[i];
      inf_of_sups = l.meet(inf_of_sups, l.sup(lowers[i]));
    }
    if (l.sup(common) != inf_of_sups) return false;
  }
  return true;
}

/// Coprime per the binary definition x ≤ a∨b ⟹ x ≤ a or x ≤ b; the bottom
/// element is vacuously coprime under it.
inline bool is_coprime(const FiniteLattice& l, std::size_t x) {
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b)
      if (l.leq(x, l.join(a, b)) && !l.leq(x, a) && !l.leq(x, b)) return false;
  return true;
}

inline bool is_prime(const FiniteLattice& l, std::size_t x) {
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b)
      if (l.leq(l.meet(a, b), x) && !l.leq(a, x) && !l.leq(b, x)) return false;
  return true;
}

inline std::vector<std::size_t> coprimes(const FiniteLattice& l) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (is_coprime(l, x)) out.push_back(x);
  return out;
}

/// Coprimes other than the bottom element.
inline std::vector<std::size_t> nonzero_coprimes(const FiniteLattice& l) {
  auto c = coprimes(l);
  std::erase(c, l.bottom());
  return c;
}

inline std::vector<std::size_t> primes(const FiniteLattice& l) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (is_prime(l, x)) out.push_back(x);
  return out;
}

/// Every element is a join of coprimes.
inline bool has_enough_coprimes(const FiniteLattice& l) {
  return detail::each_is_join_of(l, [&](std::size_t z, std::size_t x) { return l.leq(z, x) && is_coprime(l, z); });
}

// --- constructors and the small-lattice catalog -----------------------------

inline FinitePoset poset_from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (auto [a, b] : covers) r[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return FinitePoset(std::move(r));
}

inline FinitePoset chain(std::size_t n) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) r[i][j] = true;
  return FinitePoset(std::move(r));
}

inline FinitePoset antichain(std::size_t n) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  return FinitePoset(std::move(r));
}

/// Subsets of a k-set ordered by inclusion; element i is the bitmask i.
inline FinitePoset boolean_lattice(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i][j] = (i & j) == i;
  return FinitePoset(std::move(r));
}

/// 0 < a, b, c < 1 with pairwise incomparable atoms; 0 is index 0 and 1 is index 4.
inline FinitePoset diamond_m3() { return poset_from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}); }

/// 0 < a < b < 1 and 0 < c < 1.
inline FinitePoset pentagon_n5() { return poset_from_pairs(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}); }

struct NamedLattice {
  std::string name;
  FinitePoset order;
};

/// Every lattice with at most five elements, one per isomorphism class.
inline std::vector<NamedLattice> small_lattice_catalog() {
  return {
      {"chain1", chain(1)},
      {"chain2", chain(2)},
      {"chain3", chain(3)},
      {"chain4", chain(4)},
      {"boolean2", boolean_lattice(2)},
      {"chain5", chain(5)},
      {"m3", diamond_m3()},
      {"n5", pentagon_n5()},
      // boolean square with a new top above it
      {"boolean2+top", poset_from_pairs(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}})},
      // boolean square with a new bottom below it
      {"bottom+boolean2", poset_from_pairs(5, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}})},
  };
}

/// Brute-force isomorphism test by trying every bijection.
inline bool isomorphic(const FinitePoset& a, const FinitePoset& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i)
      for (std::size_t j = 0; j < a.size() && ok; ++j) ok = a.leq(i, j) == b.leq(perm[i], perm[j]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace qcat
