#pragma once

// Finitely generated modules over the integral group ring of a finite
// p-group: a generator space Z^n, a column matrix of relations, and one
// integer action matrix per group element.  These are the character modules
// of groups of multiplicative type; the free rank is the dimension of the
// torus part and invariant factors > 1 encode finite multiplicative factors.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "edp/errors.hpp"
#include "edp/exactlin.hpp"
#include "edp/pgroup.hpp"

namespace edp {

struct GModule {
  FiniteGroup group;
  unsigned p = 2;
  std::size_t ngens = 0;
  IntMatrix relations;              // ngens rows, one relation per column
  std::vector<IntMatrix> actions;   // indexed by element id; [0] = identity

  bool operator==(const GModule& o) const {
    return group == o.group && p == o.p && ngens == o.ngens &&
           relations == o.relations && actions == o.actions;
  }
  bool operator!=(const GModule& o) const { return !(*this == o); }
};

// Assembles a module value; actions for missing non-identity elements are
// not tolerated, the identity action is filled in automatically.
inline GModule make_gmodule(FiniteGroup group, std::size_t ngens,
                            IntMatrix relations,
                            const std::map<int, IntMatrix>& actions) {
  GModule x;
  x.p = group.p();
  x.group = std::move(group);
  x.ngens = ngens;
  x.relations = std::move(relations);
  x.actions.assign(x.group.order(), IntMatrix::identity(ngens));
  for (const auto& [g, m] : actions) {
    if (g <= 0 || static_cast<std::size_t>(g) >= x.group.order())
      throw validation_error(errc::bad_element,
                             "action element id " + std::to_string(g) +
                                 " out of range");
    x.actions[static_cast<std::size_t>(g)] = m;
  }
  if (actions.size() + 1 < x.group.order())
    throw validation_error(errc::dimension_mismatch,
                           "missing action matrices for some elements");
  return x;
}

// Checks every structural invariant: shapes, prime agreement, stability of
// the relation lattice under each action, invertibility of every induced
// endomorphism, and the homomorphism identity A_g A_h = A_{gh} modulo the
// relation lattice for all pairs.
inline void validate_module(const GModule& x) {
  if (x.p != x.group.p())
    throw validation_error(errc::prime_mismatch,
                           "module prime " + std::to_string(x.p) +
                               " differs from group prime " +
                               std::to_string(x.group.p()));
  if (x.relations.rows() != x.ngens)
    throw validation_error(errc::dimension_mismatch,
                           "relation matrix must have ngens rows");
  if (x.actions.size() != x.group.order())
    throw validation_error(errc::dimension_mismatch,
                           "one action matrix per group element required");
  for (const IntMatrix& a : x.actions)
    if (a.rows() != x.ngens || a.cols() != x.ngens)
      throw validation_error(errc::dimension_mismatch,
                             "action matrices must be ngens x ngens");
  if (x.actions[0] != IntMatrix::identity(x.ngens))
    throw validation_error(errc::action_not_stable,
                           "identity element must act as the identity");

  LatticeSolver rel(x.relations);
  const std::size_t n = x.group.order();
  for (std::size_t g = 1; g < n; ++g) {
    // relation lattice is preserved
    IntMatrix moved = x.actions[g] * x.relations;
    for (std::size_t j = 0; j < moved.cols(); ++j)
      if (!rel.contains(moved.column(j)))
        throw validation_error(errc::action_not_stable,
                               "action of element " + std::to_string(g) +
                                   " does not preserve the relation lattice");
    // induced endomorphism of Z^n / relations is onto, hence an automorphism
    SmithDecomposition s =
        smith_normal_form(IntMatrix::hstack(x.actions[g], x.relations));
    bool onto = s.rank == x.ngens;
    for (std::size_t t = 0; onto && t < s.rank; ++t)
      if (s.D.at(t, t) != 1) onto = false;
    if (!onto)
      throw validation_error(errc::action_not_stable,
                             "action of element " + std::to_string(g) +
                                 " does not induce an automorphism");
  }
  for (std::size_t g = 1; g < n; ++g)
    for (std::size_t h = 1; h < n; ++h) {
      IntMatrix diff =
          x.actions[g] * x.actions[h] -
          x.actions[static_cast<std::size_t>(
              x.group.mul(static_cast<int>(g), static_cast<int>(h)))];
      for (std::size_t j = 0; j < diff.cols(); ++j)
        if (!rel.contains(diff.column(j)))
          throw validation_error(errc::not_a_homomorphism,
                                 "action homomorphism fails at pair (" +
                                     std::to_string(g) + ", " +
                                     std::to_string(h) + ")");
    }
}

// ---------------------------------------------------------------------------
// Structure (free rank, invariant factors)

struct ModuleStructure {
  std::size_t free_rank = 0;
  std::vector<Int> invariant_factors;  // entries > 1, divisibility chain
  bool p_torsion = false;
};

inline ModuleStructure module_structure(const GModule& x) {
  SmithDecomposition s = smith_normal_form(x.relations);
  ModuleStructure out;
  out.free_rank = x.ngens - s.rank;
  for (std::size_t t = 0; t < s.rank; ++t)
    if (s.D.at(t, t) > 1) out.invariant_factors.push_back(s.D.at(t, t));
  for (const Int& d : out.invariant_factors)
    if (mod_p(d, x.p) == 0) out.p_torsion = true;
  return out;
}

// ---------------------------------------------------------------------------
// The quotient X / (pX + IX)

// The largest quotient of X that is p-torsion with the group acting
// trivially.  `projection` maps generator space F_p^ngens onto canonical
// echelon coordinates F_p^dim; it kills the relations, p-multiples, and the
// augmentation columns (A_g - 1)e_j.
struct CobarSpace {
  unsigned p = 2;
  std::size_t ngens = 0;
  std::size_t dim = 0;
  std::vector<FpVec> projection;  // dim rows of length ngens

  FpVec project_fp(const FpVec& v) const {
    FpVec out(dim, 0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < ngens; ++j)
        out[i] = fp_mul_add(out[i], projection[i][j], v[j], p);
    return out;
  }
  FpVec project(const IntVec& v) const { return project_fp(mod_p(v, p)); }
};

// Columns spanning pX + IX inside F_p^ngens: relations mod p plus the
// augmentation columns for a generating set of the group.  Generators
// suffice because (gh - 1) = g(h - 1) + (g - 1).
inline std::vector<FpVec> cobar_kill_columns(const GModule& x,
                                             bool all_elements = false) {
  std::vector<FpVec> cols;
  for (std::size_t j = 0; j < x.relations.cols(); ++j)
    cols.push_back(mod_p(x.relations.column(j), x.p));
  std::vector<int> gens =
      all_elements ? std::vector<int>() : x.group.generators();
  if (all_elements)
    for (std::size_t g = 1; g < x.group.order(); ++g)
      gens.push_back(static_cast<int>(g));
  for (int g : gens) {
    const IntMatrix& a = x.actions[static_cast<std::size_t>(g)];
    for (std::size_t j = 0; j < x.ngens; ++j) {
      FpVec col(x.ngens);
      for (std::size_t i = 0; i < x.ngens; ++i) {
        Int e = a.at(i, j) - (i == j ? 1 : 0);
        col[i] = mod_p(e, x.p);
      }
      cols.push_back(std::move(col));
    }
  }
  return cols;
}

inline CobarSpace cobar(const GModule& x) {
  FpSubspace killed = fp_span(cobar_kill_columns(x), x.p, x.ngens);
  CobarSpace out;
  out.p = x.p;
  out.ngens = x.ngens;
  out.dim = x.ngens - killed.dim();

  // Canonical coordinates: reduce against the killed subspace and read off
  // the non-pivot positions.
  std::vector<std::size_t> free_cols;
  {
    std::size_t k = 0;
    for (std::size_t j = 0; j < x.ngens; ++j) {
      if (k < killed.pivots().size() && killed.pivots()[k] == j) {
        ++k;
        continue;
      }
      free_cols.push_back(j);
    }
  }
  out.projection.assign(out.dim, FpVec(x.ngens, 0));
  for (std::size_t j = 0; j < x.ngens; ++j) {
    FpVec e(x.ngens, 0);
    e[j] = 1;
    FpVec r = killed.reduce(e);
    for (std::size_t i = 0; i < out.dim; ++i)
      out.projection[i][j] = r[free_cols[i]];
  }
  return out;
}

inline void require_matching_cobar(const GModule& x, const CobarSpace& cb) {
  if (cb.p != x.p || cb.ngens != x.ngens)
    throw validation_error(errc::dimension_mismatch,
                           "cobar space does not match the module");
}

// ---------------------------------------------------------------------------
// Fixed points

// Canonical basis (column Hermite form) of the full preimage in Z^ngens of
// the H-fixed part X^H = { x : h x = x for all h in H }.  Solves the block
// system (A_h - 1)x = relations * y_h over the subgroup generators; the
// relation image is always contained in the result.
inline IntMatrix fixed_preimage_lattice(const GModule& x, const Subgroup& h) {
  require_subgroup(x.group, h);
  std::vector<int> gens = subgroup_generators(x.group, h);
  const std::size_t n = x.ngens, t = x.relations.cols(), k = gens.size();
  if (k == 0) return IntMatrix::identity(n);

  IntMatrix sys(k * n, n + k * t);
  for (std::size_t b = 0; b < k; ++b) {
    const IntMatrix& a = x.actions[static_cast<std::size_t>(gens[b])];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        sys.at(b * n + i, j) = a.at(i, j) - (i == j ? 1 : 0);
      for (std::size_t j = 0; j < t; ++j)
        sys.at(b * n + i, n + b * t + j) = -x.relations.at(i, j);
    }
  }
  IntMatrix kernel = integer_kernel(sys);
  return column_hermite_form(kernel.top_rows(n));
}

// Image of the fixed preimage lattice in the cobar coordinates: the
// subspace of classes available to a transitive summand with stabilizer H.
inline FpSubspace fixed_image_subspace(const GModule& x, const Subgroup& h,
                                       const CobarSpace& cb) {
  require_matching_cobar(x, cb);
  IntMatrix lattice = fixed_preimage_lattice(x, h);
  std::vector<FpVec> images;
  for (std::size_t j = 0; j < lattice.cols(); ++j)
    images.push_back(cb.project(lattice.column(j)));
  return fp_span(images, x.p, cb.dim);
}

// ---------------------------------------------------------------------------
// Sums, inflation, prime-to-p modification

inline GModule direct_sum(const GModule& a, const GModule& b) {
  if (a.p != b.p)
    throw validation_error(errc::prime_mismatch,
                           "direct sum over different primes");
  if (a.group != b.group)
    throw validation_error(errc::group_mismatch,
                           "direct sum over different acting groups; inflate "
                           "to a common product group first");
  GModule out;
  out.group = a.group;
  out.p = a.p;
  out.ngens = a.ngens + b.ngens;
  out.relations = IntMatrix(out.ngens, a.relations.cols() + b.relations.cols());
  for (std::size_t i = 0; i < a.ngens; ++i)
    for (std::size_t j = 0; j < a.relations.cols(); ++j)
      out.relations.at(i, j) = a.relations.at(i, j);
  for (std::size_t i = 0; i < b.ngens; ++i)
    for (std::size_t j = 0; j < b.relations.cols(); ++j)
      out.relations.at(a.ngens + i, a.relations.cols() + j) =
          b.relations.at(i, j);
  out.actions.reserve(out.group.order());
  for (std::size_t g = 0; g < out.group.order(); ++g) {
    IntMatrix m(out.ngens, out.ngens);
    for (std::size_t i = 0; i < a.ngens; ++i)
      for (std::size_t j = 0; j < a.ngens; ++j)
        m.at(i, j) = a.actions[g].at(i, j);
    for (std::size_t i = 0; i < b.ngens; ++i)
      for (std::size_t j = 0; j < b.ngens; ++j)
        m.at(a.ngens + i, a.ngens + j) = b.actions[g].at(i, j);
    out.actions.push_back(std::move(m));
  }
  return out;
}

// Pulls the action back along a group homomorphism hom: big -> x.group
// (given on element ids).  Used to put two modules over a common product
// group before summing.
inline GModule inflate(const GModule& x, const FiniteGroup& big,
                       const std::vector<int>& hom) {
  if (big.p() != x.p)
    throw validation_error(errc::prime_mismatch, "inflation changes p");
  if (hom.size() != big.order())
    throw validation_error(errc::dimension_mismatch,
                           "homomorphism must cover every element");
  check_element_ids(x.group, hom);
  if (hom[0] != 0)
    throw validation_error(errc::bad_element,
                           "homomorphism must preserve the identity");
  for (std::size_t a = 0; a < big.order(); ++a)
    for (std::size_t b = 0; b < big.order(); ++b)
      if (hom[static_cast<std::size_t>(
              big.mul(static_cast<int>(a), static_cast<int>(b)))] !=
          x.group.mul(hom[a], hom[b]))
        throw validation_error(errc::not_a_homomorphism,
                               "inflation map is not a homomorphism");
  GModule out;
  out.group = big;
  out.p = x.p;
  out.ngens = x.ngens;
  out.relations = x.relations;
  out.actions.reserve(big.order());
  for (std::size_t g = 0; g < big.order(); ++g)
    out.actions.push_back(x.actions[static_cast<std::size_t>(hom[g])]);
  return out;
}

// A seeded p-isogeny twin of X: replaces the module by a stable index-q
// sublattice of the generator space (q prime, q != p), which on the group
// side is a q-isogeny and leaves the essential p-dimension unchanged.  The
// stable sublattice is cut out by a group-averaged functional mod q; when no
// such functional survives, a detached Z/q torsion summand is appended
// instead (also a p-isogeny: the group gains a split mu_q factor).
inline GModule prime_to_p_modification(const GModule& x, unsigned q,
                                       std::uint64_t seed) {
  if (!is_prime(q))
    throw validation_error(errc::bad_argument,
                           std::to_string(q) + " is not prime");
  if (q == x.p)
    throw validation_error(errc::bad_argument,
                           "modification prime must differ from p");
  std::mt19937_64 rng(seed);
  const std::size_t n = x.ngens;
  std::uniform_int_distribution<unsigned> pick(0, q - 1);

  for (int attempt = 0; attempt < 64 && n > 0; ++attempt) {
    FpVec u(n);
    bool nonzero = false;
    for (unsigned& e : u) {
      e = pick(rng);
      if (e) nonzero = true;
    }
    if (!nonzero) continue;
    // u must kill the relations mod q, else the functional below is not
    // well defined on the module
    bool kills = true;
    for (std::size_t j = 0; j < x.relations.cols() && kills; ++j) {
      unsigned acc = 0;
      for (std::size_t i = 0; i < n; ++i)
        acc = (acc + u[i] * mod_p(x.relations.at(i, j), q)) % q;
      if (acc != 0) kills = false;
    }
    if (!kills) continue;
    // group-averaged functional: invariant by construction
    FpVec lambda(n, 0);
    for (std::size_t g = 0; g < x.group.order(); ++g)
      for (std::size_t j = 0; j < n; ++j) {
        unsigned acc = 0;
        for (std::size_t i = 0; i < n; ++i)
          acc = (acc + u[i] * mod_p(x.actions[g].at(i, j), q)) % q;
        lambda[j] = (lambda[j] + acc) % q;
      }
    if (std::all_of(lambda.begin(), lambda.end(),
                    [](unsigned v) { return v == 0; }))
      continue;

    // basis of { v : lambda . v = 0 mod q }, an index-q sublattice
    IntMatrix sys(1, n + 1);
    for (std::size_t j = 0; j < n; ++j) sys.at(0, j) = lambda[j];
    sys.at(0, n) = q;
    IntMatrix basis = column_hermite_form(integer_kernel(sys).top_rows(n));
    LatticeSolver solver(basis);

    GModule out;
    out.group = x.group;
    out.p = x.p;
    out.ngens = n;
    out.relations = IntMatrix(n, x.relations.cols());
    for (std::size_t j = 0; j < x.relations.cols(); ++j) {
      auto y = solver.solve(x.relations.column(j));
      if (!y) throw error(errc::internal, "relation escaped the sublattice");
      for (std::size_t i = 0; i < n; ++i) out.relations.at(i, j) = (*y)[i];
    }
    out.actions.reserve(x.group.order());
    bool ok = true;
    for (std::size_t g = 0; g < x.group.order() && ok; ++g) {
      IntMatrix conj(n, n);
      IntMatrix moved = x.actions[g] * basis;
      for (std::size_t j = 0; j < n; ++j) {
        auto y = solver.solve(moved.column(j));
        if (!y) {
          ok = false;  // averaged functional not invariant enough; retry
          break;
        }
        for (std::size_t i = 0; i < n; ++i) conj.at(i, j) = (*y)[i];
      }
      out.actions.push_back(std::move(conj));
    }
    if (ok) return out;
  }

  // fallback: append a detached Z/q torsion generator
  GModule out;
  out.group = x.group;
  out.p = x.p;
  out.ngens = n + 1;
  out.relations = IntMatrix(n + 1, x.relations.cols() + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < x.relations.cols(); ++j)
      out.relations.at(i, j) = x.relations.at(i, j);
  out.relations.at(n, x.relations.cols()) = q;
  out.actions.reserve(x.group.order());
  for (std::size_t g = 0; g < x.group.order(); ++g) {
    IntMatrix m(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = x.actions[g].at(i, j);
    m.at(n, n) = 1;
    out.actions.push_back(std::move(m));
  }
  return out;
}

}  // namespace edp
