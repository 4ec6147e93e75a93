#pragma once

// Finite p-groups given by explicit multiplication tables, with subgroup
// enumeration and conjugacy classification.  Element ids are 0..order-1 and
// the identity is always id 0.  Orders stay small (powers of p up to a
// configurable ceiling), so the quadratic/cubic table checks are cheap.

#include <algorithm>
#include <cstddef>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "edp/errors.hpp"
#include "edp/exactlin.hpp"

namespace edp {

inline constexpr std::size_t kDefaultSubgroupCeiling = 256;

class FiniteGroup {
 public:
  // Validates the full set of group axioms plus the p-power order condition.
  static FiniteGroup from_table(unsigned p,
                                const std::vector<std::vector<int>>& table) {
    if (!is_prime(p))
      throw validation_error(errc::bad_argument,
                             std::to_string(p) + " is not prime");
    const std::size_t n = table.size();
    if (n == 0)
      throw validation_error(errc::not_a_group, "empty multiplication table");
    FiniteGroup g;
    g.p_ = p;
    g.order_ = n;
    g.table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n)
        throw validation_error(errc::not_a_group,
                               "table is not square at row " +
                                   std::to_string(i));
      for (std::size_t j = 0; j < n; ++j) {
        int v = table[i][j];
        if (v < 0 || static_cast<std::size_t>(v) >= n)
          throw validation_error(errc::not_a_group,
                                 "entry out of range at (" +
                                     std::to_string(i) + ", " +
                                     std::to_string(j) + ")");
        g.table_[i * n + j] = v;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (g.mul(0, static_cast<int>(i)) != static_cast<int>(i) ||
          g.mul(static_cast<int>(i), 0) != static_cast<int>(i))
        throw validation_error(errc::not_a_group,
                               "id 0 is not a two-sided identity");
    }
    g.inv_.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (g.mul(static_cast<int>(a), static_cast<int>(b)) == 0 &&
            g.mul(static_cast<int>(b), static_cast<int>(a)) == 0) {
          g.inv_[a] = static_cast<int>(b);
          break;
        }
      }
      if (g.inv_[a] < 0)
        throw validation_error(errc::not_a_group,
                               "element " + std::to_string(a) +
                                   " has no two-sided inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          int ab_c = g.mul(g.mul(static_cast<int>(a), static_cast<int>(b)),
                           static_cast<int>(c));
          int a_bc = g.mul(static_cast<int>(a),
                           g.mul(static_cast<int>(b), static_cast<int>(c)));
          if (ab_c != a_bc)
            throw validation_error(
                errc::not_a_group,
                "associativity fails at (" + std::to_string(a) + ", " +
                    std::to_string(b) + ", " + std::to_string(c) + ")");
        }
    std::size_t m = n;
    while (m % p == 0) m /= p;
    if (m != 1)
      throw validation_error(errc::not_a_p_group,
                             "order " + std::to_string(n) +
                                 " is not a power of " + std::to_string(p));
    return g;
  }

  unsigned p() const { return p_; }
  std::size_t order() const { return order_; }

  int mul(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * order_ +
                  static_cast<std::size_t>(b)];
  }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

  const std::vector<int>& table() const { return table_; }

  // Deterministic generating set: scan ids in increasing order, keep those
  // outside the closure of what came before.
  std::vector<int> generators() const {
    std::vector<int> gens;
    std::vector<char> in_closure(order_, 0);
    in_closure[0] = 1;
    std::size_t closed = 1;
    for (int g = 1; static_cast<std::size_t>(g) < order_ && closed < order_;
         ++g) {
      if (in_closure[g]) continue;
      gens.push_back(g);
      // refresh the closure
      std::vector<int> members;
      for (std::size_t x = 0; x < order_; ++x)
        if (in_closure[x]) members.push_back(static_cast<int>(x));
      std::queue<int> work;
      work.push(g);
      in_closure[g] = 1;
      members.push_back(g);
      ++closed;
      while (!work.empty()) {
        int a = work.front();
        work.pop();
        std::size_t sz = members.size();
        for (std::size_t i = 0; i < sz; ++i) {
          for (int prod : {mul(a, members[i]), mul(members[i], a)}) {
            if (!in_closure[prod]) {
              in_closure[prod] = 1;
              members.push_back(prod);
              work.push(prod);
              ++closed;
            }
          }
        }
      }
    }
    return gens;
  }

  bool operator==(const FiniteGroup& o) const {
    return p_ == o.p_ && table_ == o.table_;
  }
  bool operator!=(const FiniteGroup& o) const { return !(*this == o); }

 private:
  unsigned p_ = 2;
  std::size_t order_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
};

// A subgroup is its sorted element set; operations take the parent group
// explicitly and re-check closure where it matters.
struct Subgroup {
  std::vector<int> elements;  // sorted, contains 0

  std::size_t order() const { return elements.size(); }
  bool contains(int g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
  }
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
  bool operator<(const Subgroup& o) const { return elements < o.elements; }
};

inline void check_element_ids(const FiniteGroup& g,
                              const std::vector<int>& ids) {
  for (int e : ids)
    if (e < 0 || static_cast<std::size_t>(e) >= g.order())
      throw validation_error(errc::bad_element,
                             "element id " + std::to_string(e) +
                                 " out of range for order " +
                                 std::to_string(g.order()));
}

// Closure of elems (plus the identity) under products; in a finite group
// that closure is automatically inverse-closed.
inline Subgroup subgroup_generated(const FiniteGroup& g,
                                   const std::vector<int>& elems) {
  check_element_ids(g, elems);
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{0};
  in[0] = 1;
  std::queue<int> work;
  for (int e : elems)
    if (!in[e]) {
      in[e] = 1;
      members.push_back(e);
      work.push(e);
    }
  while (!work.empty()) {
    int a = work.front();
    work.pop();
    std::size_t sz = members.size();
    for (std::size_t i = 0; i < sz; ++i) {
      for (int prod : {g.mul(a, members[i]), g.mul(members[i], a)}) {
        if (!in[prod]) {
          in[prod] = 1;
          members.push_back(prod);
          work.push(prod);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{members};
}

inline bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.elements.empty() || h.elements.front() != 0) return false;
  for (int e : h.elements)
    if (e < 0 || static_cast<std::size_t>(e) >= g.order()) return false;
  for (int a : h.elements)
    for (int b : h.elements)
      if (!h.contains(g.mul(a, b))) return false;
  return true;
}

inline void require_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h))
    throw validation_error(errc::bad_element,
                           "element set is not a subgroup of this group");
}

// Deterministic generating set of a subgroup (ids ascending).
inline std::vector<int> subgroup_generators(const FiniteGroup& g,
                                            const Subgroup& h) {
  std::vector<int> gens;
  Subgroup closure{{0}};
  for (int e : h.elements) {
    if (closure.contains(e)) continue;
    gens.push_back(e);
    std::vector<int> seed = closure.elements;
    seed.push_back(e);
    closure = subgroup_generated(g, seed);
    if (closure.order() == h.order()) break;
  }
  return gens;
}

struct SubgroupClass {
  Subgroup representative;  // lexicographically least member
  std::size_t index = 0;    // [G : H]
  std::vector<Subgroup> members;
};

struct SubgroupClassTable {
  std::vector<SubgroupClass> classes;

  std::size_t total_subgroups() const {
    std::size_t n = 0;
    for (const auto& c : classes) n += c.members.size();
    return n;
  }
};

// Every subgroup of G, grouped into conjugacy classes.  Subgroups are found
// bottom-up: each one is reachable from a smaller one by adjoining a single
// element, so a closure-BFS over (subgroup, extra element) pairs is complete.
// Classes are sorted by (index ascending, representative ascending).
inline SubgroupClassTable enumerate_subgroups(
    const FiniteGroup& g, std::size_t ceiling = kDefaultSubgroupCeiling) {
  if (g.order() > ceiling)
    throw limit_error(errc::group_too_large,
                      "group order " + std::to_string(g.order()) +
                          " exceeds the enumeration ceiling " +
                          std::to_string(ceiling));
  std::set<std::vector<int>> seen;
  std::queue<Subgroup> work;
  Subgroup triv{{0}};
  seen.insert(triv.elements);
  work.push(triv);
  while (!work.empty()) {
    Subgroup h = work.front();
    work.pop();
    for (int e = 1; static_cast<std::size_t>(e) < g.order(); ++e) {
      if (h.contains(e)) continue;
      std::vector<int> seed = h.elements;
      seed.push_back(e);
      Subgroup k = subgroup_generated(g, seed);
      if (seen.insert(k.elements).second) work.push(k);
    }
  }

  std::set<std::vector<int>> assigned;
  SubgroupClassTable table;
  for (const auto& elems : seen) {
    if (assigned.count(elems)) continue;
    Subgroup h{elems};
    std::set<std::vector<int>> orbit;
    for (std::size_t c = 0; c < g.order(); ++c) {
      std::vector<int> conj;
      conj.reserve(h.elements.size());
      for (int x : h.elements) conj.push_back(g.conj(static_cast<int>(c), x));
      std::sort(conj.begin(), conj.end());
      orbit.insert(std::move(conj));
    }
    SubgroupClass cls;
    cls.index = g.order() / h.order();
    for (const auto& member : orbit) {
      assigned.insert(member);
      cls.members.push_back(Subgroup{member});
    }
    cls.representative = cls.members.front();  // std::set is lex-sorted
    table.classes.push_back(std::move(cls));
  }
  std::sort(table.classes.begin(), table.classes.end(),
            [](const SubgroupClass& a, const SubgroupClass& b) {
              if (a.index != b.index) return a.index < b.index;
              return a.representative < b.representative;
            });
  return table;
}

// ---------------------------------------------------------------------------
// Stock groups

inline FiniteGroup trivial_group(unsigned p) {
  return FiniteGroup::from_table(p, {{0}});
}

// Cyclic group of order p^k.
inline FiniteGroup cyclic_group(unsigned p, unsigned k) {
  std::size_t n = 1;
  for (unsigned i = 0; i < k; ++i) n *= p;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<int>((i + j) % n);
  return FiniteGroup::from_table(p, t);
}

struct ProductGroup {
  FiniteGroup group;
  std::vector<int> proj1;  // id in the product -> id in the first factor
  std::vector<int> proj2;
};

// Direct product with lexicographic element ids: (a, b) -> a*|G2| + b.
inline ProductGroup product_group(const FiniteGroup& g1,
                                  const FiniteGroup& g2) {
  if (g1.p() != g2.p())
    throw validation_error(errc::prime_mismatch,
                           "product of groups over different primes");
  const std::size_t n1 = g1.order(), n2 = g2.order(), n = n1 * n2;
  if (n > 1024)
    throw limit_error(errc::group_too_large,
                      "product order " + std::to_string(n) + " exceeds 1024");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int x = g1.mul(static_cast<int>(a / n2), static_cast<int>(b / n2));
      int y = g2.mul(static_cast<int>(a % n2), static_cast<int>(b % n2));
      t[a][b] = x * static_cast<int>(n2) + y;
    }
  ProductGroup out{FiniteGroup::from_table(g1.p(), t), {}, {}};
  out.proj1.resize(n);
  out.proj2.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    out.proj1[a] = static_cast<int>(a / n2);
    out.proj2[a] = static_cast<int>(a % n2);
  }
  return out;
}

// Dihedral group of order 8: r^a s^b with id = a + 4b, s r s = r^-1.
inline FiniteGroup dihedral8() {
  auto enc = [](int a, int b) { return ((a % 4 + 4) % 4) + 4 * (b % 2); };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a1 = 0; a1 < 4; ++a1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int a2 = 0; a2 < 4; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) {
          int a = b1 ? a1 - a2 : a1 + a2;
          t[enc(a1, b1)][enc(a2, b2)] = enc(a, b1 + b2);
        }
  return FiniteGroup::from_table(2, t);
}

// Quaternion group of order 8: a^x b^y with id = x + 4y,
// a^4 = 1, b^2 = a^2, b a b^-1 = a^-1.
inline FiniteGroup quaternion8() {
  auto enc = [](int x, int y) { return ((x % 4 + 4) % 4) + 4 * (y % 2); };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x1 = 0; x1 < 4; ++x1)
    for (int y1 = 0; y1 < 2; ++y1)
      for (int x2 = 0; x2 < 4; ++x2)
        for (int y2 = 0; y2 < 2; ++y2) {
          int x = (y1 ? x1 - x2 : x1 + x2) + (y1 && y2 ? 2 : 0);
          t[enc(x1, y1)][enc(x2, y2)] = enc(x, y1 + y2);
        }
  return FiniteGroup::from_table(2, t);
}

// Named small groups used by the CLI generators and the test fixtures.
inline FiniteGroup named_group(const std::string& name) {
  if (name == "z1") return trivial_group(2);
  if (name == "z2") return cyclic_group(2, 1);
  if (name == "z4") return cyclic_group(2, 2);
  if (name == "z8") return cyclic_group(2, 3);
  if (name == "v4") return product_group(cyclic_group(2, 1), cyclic_group(2, 1)).group;
  if (name == "d4") return dihedral8();
  if (name == "q8") return quaternion8();
  if (name == "z3") return cyclic_group(3, 1);
  if (name == "z9") return cyclic_group(3, 2);
  if (name == "z3z3")
    return product_group(cyclic_group(3, 1), cyclic_group(3, 1)).group;
  throw validation_error(errc::bad_argument, "unknown group name: " + name);
}

}  // namespace edp
