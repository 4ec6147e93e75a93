#pragma once

// The exact solver.  For a module X over a finite p-group it computes the
// minimal rank of a permutation module admitting a map onto X with finite
// cokernel of order prime to p, returns the witness map and the cost tower
// behind the minimum, and derives ed = min rank - free rank.
//
// The reduction: a candidate summand with stabilizer class H can contribute
// exactly the classes in V_H = image(X^H) inside the quotient X/(pX + IX),
// and a map is a p-presentation exactly when the contributed classes span
// that quotient.  Minimizing total index over spanning choices is a
// minimum-weight matroid basis problem, solved greedily by ascending index;
// a separate exhaustive search over class multisets double-checks the
// reduction on small instances.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edp/errors.hpp"
#include "edp/exactlin.hpp"
#include "edp/gmodule.hpp"
#include "edp/pgroup.hpp"
#include "edp/presentation.hpp"

namespace edp {

struct CostEntry {
  Subgroup representative;
  std::size_t index = 0;  // [G : H], the cost of one summand of this class
  FpSubspace subspace;    // V_H in cobar coordinates

  CostEntry(Subgroup rep, std::size_t idx, FpSubspace sub)
      : representative(std::move(rep)), index(idx), subspace(std::move(sub)) {}
};

struct CostTable {
  std::vector<CostEntry> entries;  // one per conjugacy class, sorted by
                                   // (index, representative)
  CobarSpace cobar_space;
};

// Conjugate stabilizers yield the same subspace (the projection kills the
// augmentation ideal), so one entry per conjugacy class suffices.
inline CostTable cost_table(const GModule& x,
                            std::size_t ceiling = kDefaultSubgroupCeiling) {
  SubgroupClassTable classes = enumerate_subgroups(x.group, ceiling);
  CostTable out{{}, cobar(x)};
  out.entries.reserve(classes.classes.size());
  for (const SubgroupClass& cls : classes.classes)
    out.entries.emplace_back(
        cls.representative, cls.index,
        fixed_image_subspace(x, cls.representative, out.cobar_space));
  // enumerate_subgroups already sorts by (index, representative)
  return out;
}

struct EdResult {
  std::size_t ed = 0;
  std::size_t min_rank_p = 0;
  std::size_t free_rank = 0;
  PresentationMap witness;
  // (cost level c, dim of the span of the V_H with index <= c)
  std::vector<std::pair<std::size_t, std::size_t>> tower;
};

namespace detail {

// Integer preimage of a cobar class inside a fixed-point lattice: solve for
// coefficients of the projected lattice basis over F_p, then lift them as
// 0..p-1 integers.  Deterministic: reduced echelon solve with free
// variables pinned to zero.
inline IntVec lift_class(const IntMatrix& lattice, const CobarSpace& cb,
                         const FpVec& target) {
  const unsigned p = cb.p;
  const std::size_t k = lattice.cols(), s = cb.dim;
  std::vector<FpVec> cols(k);
  for (std::size_t j = 0; j < k; ++j)
    cols[j] = cb.project(lattice.column(j));
  // row-reduce [cols | target]
  std::vector<FpVec> aug(s, FpVec(k + 1, 0));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = cols[j][i];
    aug[i][k] = target[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < s; ++col) {
    std::size_t pr = row;
    while (pr < s && aug[pr][col] == 0) ++pr;
    if (pr == s) continue;
    std::swap(aug[pr], aug[row]);
    unsigned inv = fp_inv(aug[row][col], p);
    for (unsigned& v : aug[row]) v = fp_mul_add(0, v, inv, p);
    for (std::size_t i = 0; i < s; ++i) {
      if (i == row || aug[i][col] == 0) continue;
      unsigned c = aug[i][col];
      for (std::size_t j = 0; j <= k; ++j)
        aug[i][j] = fp_mul_add(aug[i][j], p - c, aug[row][j], p);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < s; ++i)
    if (aug[i][k] != 0)
      throw error(errc::internal, "class lift is infeasible");
  FpVec coeff(k, 0);
  for (std::size_t i = 0; i < row; ++i) coeff[pivot_col[i]] = aug[i][k];

  IntVec out(lattice.rows());
  for (std::size_t j = 0; j < k; ++j) {
    if (coeff[j] == 0) continue;
    for (std::size_t i = 0; i < lattice.rows(); ++i)
      out[i] += Int(coeff[j]) * lattice.at(i, j);
  }
  return out;
}

}  // namespace detail

// Exact minimum over all p-presentations, with a witness.  The quotient
// X/(pX + IX) = 0 short-circuits to ed = 0 with an empty witness (the module
// is then finite of order prime to p, which is asserted, not assumed).
inline EdResult minimal_p_presentation(
    const GModule& x, std::size_t ceiling = kDefaultSubgroupCeiling) {
  CobarSpace cb = cobar(x);
  ModuleStructure ms = module_structure(x);

  EdResult out;
  out.free_rank = ms.free_rank;

  if (cb.dim == 0) {
    if (ms.free_rank != 0 || ms.p_torsion)
      throw error(errc::internal,
                  "trivial cobar quotient forces a finite prime-to-p module");
    out.ed = 0;
    out.min_rank_p = 0;
    out.witness = make_presentation(make_permutation_module(x.group, {}), x, {});
    return out;
  }

  CostTable ct = cost_table(x, ceiling);
  std::vector<std::pair<FpSubspace, unsigned long long>> sources;
  sources.reserve(ct.entries.size());
  for (const CostEntry& e : ct.entries)
    sources.emplace_back(e.subspace, e.index);
  SpanningTower tower =
      min_cost_spanning_tower(sources, FpSubspace::full(x.p, cb.dim));

  out.min_rank_p = static_cast<std::size_t>(tower.total_cost);
  if (out.min_rank_p < out.free_rank)
    throw error(errc::internal,
                "a p-presentation can never have rank below the free rank");
  out.ed = out.min_rank_p - out.free_rank;
  for (const auto& [c, d] : tower.levels)
    out.tower.emplace_back(static_cast<std::size_t>(c), d);

  // materialize the witness map
  std::vector<Subgroup> summands;
  std::vector<IntVec> images;
  std::vector<std::optional<IntMatrix>> lattice_cache(ct.entries.size());
  for (const SpanningStep& step : tower.chosen) {
    const CostEntry& entry = ct.entries[step.source];
    if (!lattice_cache[step.source])
      lattice_cache[step.source] =
          fixed_preimage_lattice(x, entry.representative);
    summands.push_back(entry.representative);
    images.push_back(
        detail::lift_class(*lattice_cache[step.source], cb, step.vector));
  }
  out.witness = make_presentation(make_permutation_module(x.group, summands),
                                  x, images);
  validate_presentation(out.witness);
  if (!is_p_presentation(out.witness) || out.witness.rank() != out.min_rank_p)
    throw error(errc::internal, "witness failed its own checks");
  return out;
}

// ---------------------------------------------------------------------------
// Independent exhaustive oracle

namespace detail {

inline bool oracle_can_span(const std::vector<const FpSubspace*>& picks,
                            std::size_t i, const FpSubspace& w,
                            std::size_t full_dim) {
  if (w.dim() == full_dim) return true;
  if (i == picks.size()) return false;
  if (w.dim() + (picks.size() - i) < full_dim) return false;
  if (oracle_can_span(picks, i + 1, w, full_dim)) return true;
  for (const FpVec& v : picks[i]->enumerate_normalized()) {
    if (w.contains(v)) continue;
    FpSubspace w2 = w;
    w2.insert(v);
    if (oracle_can_span(picks, i + 1, w2, full_dim)) return true;
  }
  return false;
}

}  // namespace detail

// Exhaustive search over multisets of subgroup classes with total index
// bounded by cost_ceiling: for each multiset, tries every choice of one
// class vector per summand and asks whether some choice spans the whole
// quotient.  Returns the minimal spanning total index minus the free rank.
// Deliberately brute force, and boxed to small instances.
inline std::size_t brute_force_ed(const GModule& x, std::size_t cost_ceiling,
                                  std::size_t ceiling = kDefaultSubgroupCeiling) {
  if (x.group.order() > 8 || x.ngens > 4 || (x.p != 2 && x.p != 3))
    throw limit_error(errc::instance_too_large,
                      "oracle box: group order <= 8, rank <= 4, p in {2, 3}");
  CostTable ct = cost_table(x, ceiling);
  const std::size_t full_dim = ct.cobar_space.dim;

  std::size_t best = cost_ceiling + 1;
  std::vector<std::size_t> stack;
  auto spanning = [&]() {
    std::vector<const FpSubspace*> picks;
    picks.reserve(stack.size());
    for (std::size_t s : stack) picks.push_back(&ct.entries[s].subspace);
    FpSubspace w(x.p, full_dim);
    return detail::oracle_can_span(picks, 0, w, full_dim);
  };
  // DFS over multisets with non-decreasing class position
  auto go = [&](auto&& self, std::size_t start, std::size_t cost) -> void {
    if (spanning()) {
      best = std::min(best, cost);
      return;  // adding summands only costs more
    }
    for (std::size_t s = start; s < ct.entries.size(); ++s) {
      std::size_t c2 = cost + ct.entries[s].index;
      if (c2 > cost_ceiling || c2 >= best) continue;
      stack.push_back(s);
      self(self, s, c2);
      stack.pop_back();
    }
  };
  go(go, 0, 0);
  if (best > cost_ceiling)
    throw limit_error(errc::infeasible,
                      "no spanning multiset within the cost ceiling");
  std::size_t free_rank = module_structure(x).free_rank;
  if (best < free_rank)
    throw error(errc::internal,
                "a spanning multiset can never cost less than the free rank");
  return best - free_rank;
}

// ---------------------------------------------------------------------------
// Derived quantities

// Rank of the maximal split p-torsion subgroup of the center: the dimension
// of X/(pX + IX).
inline std::size_t c_rank(const GModule& x) { return cobar(x).dim; }

struct BoundsResult {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::optional<std::size_t> gap_bound;
};

// Sandwich from user-supplied representation dimensions: minimal faithful
// (up to prime-to-p kernels) below, minimal generically free above.
inline BoundsResult ed_bounds(std::size_t dim_p_faithful_min,
                              std::size_t dim_p_genfree_min,
                              std::size_t dim_g) {
  if (dim_p_faithful_min > dim_p_genfree_min)
    throw validation_error(errc::bad_argument,
                           "faithful minimum exceeds generically free minimum");
  if (dim_g > dim_p_faithful_min)
    throw validation_error(errc::bad_argument,
                           "group dimension exceeds the faithful minimum");
  return BoundsResult{dim_p_faithful_min - dim_g, dim_p_genfree_min - dim_g,
                      std::nullopt};
}

// Upper bound on the faithful/generically-free gap for an extension with
// torus part T: dim T minus the dimension of the subtorus fixed by the
// acting central subgroup.  The input is the torus character lattice with
// that central subgroup acting.
inline std::size_t gap_bound(const GModule& t_lattice) {
  ModuleStructure ms = module_structure(t_lattice);
  if (!ms.invariant_factors.empty())
    throw validation_error(errc::torsion_present,
                           "gap bound requires a torsion-free lattice");
  Subgroup full;
  for (std::size_t g = 0; g < t_lattice.group.order(); ++g)
    full.elements.push_back(static_cast<int>(g));
  IntMatrix fixed = fixed_preimage_lattice(t_lattice, full);
  std::size_t rel_rank = smith_normal_form(t_lattice.relations).rank;
  return ms.free_rank - (fixed.cols() - rel_rank);
}

// Tame test: the acting central subgroup acts trivially on the lattice.
inline bool is_tame(const GModule& t_lattice) {
  for (std::size_t g = 1; g < t_lattice.group.order(); ++g)
    if (t_lattice.actions[g] != IntMatrix::identity(t_lattice.ngens))
      return false;
  return true;
}

struct AdditivityReport {
  std::size_t ed1 = 0;
  std::size_t ed2 = 0;
  std::size_t ed_sum = 0;
  bool holds = false;
};

// ed of the direct sum versus the sum of the parts.  Modules over distinct
// groups are first inflated to the product group.
inline AdditivityReport additivity_check(
    const GModule& x1, const GModule& x2,
    std::size_t ceiling = kDefaultSubgroupCeiling) {
  AdditivityReport out;
  out.ed1 = minimal_p_presentation(x1, ceiling).ed;
  out.ed2 = minimal_p_presentation(x2, ceiling).ed;
  GModule sum = [&] {
    if (x1.group == x2.group) return direct_sum(x1, x2);
    ProductGroup prod = product_group(x1.group, x2.group);
    return direct_sum(inflate(x1, prod.group, prod.proj1),
                      inflate(x2, prod.group, prod.proj2));
  }();
  out.ed_sum = minimal_p_presentation(sum, ceiling).ed;
  out.holds = out.ed_sum == out.ed1 + out.ed2;
  return out;
}

// Wreath products T wr F: n copies of T permuted by F.  When ed(T; p) > 0
// the answer is additive in the copies; otherwise only the finite part
// contributes.
inline std::size_t wreath_ed(std::size_t ed_t, std::size_t n,
                             std::size_t ed_f) {
  if (n == 0)
    throw validation_error(errc::bad_argument, "wreath power must be >= 1");
  return ed_t > 0 ? n * ed_t : ed_f;
}

}  // namespace edp
