#pragma once

// Builders for stock module instances with known invariants: norm-extension
// modules (a permutation module modulo a scaled norm relation), sign tori,
// split tori, mu_{p^r} factors, and plain coset lattices.

#include <cstddef>
#include <utility>
#include <vector>

#include "edp/errors.hpp"
#include "edp/exactlin.hpp"
#include "edp/gmodule.hpp"
#include "edp/pgroup.hpp"
#include "edp/presentation.hpp"

namespace edp {

struct NormExtensionSpec {
  FiniteGroup group;                 // the acting p-group
  std::vector<Subgroup> stabilizers; // one per etale factor
  unsigned r = 0;                    // the p^r scale of the norm relation
};

// P / <p^r . (sum of all coset basis vectors)> where P is the direct sum of
// the coset modules for the given stabilizers.  At r = 0 the relation is the
// bare norm vector and the quotient is the norm-one torus lattice; for
// r >= 1 the quotient gains a Z/p^r on top of it.
inline GModule norm_extension_module(const NormExtensionSpec& spec) {
  if (spec.stabilizers.empty())
    throw validation_error(errc::bad_argument,
                           "at least one stabilizer required");
  PermutationModule perm =
      make_permutation_module(spec.group, spec.stabilizers);
  const unsigned p = spec.group.p();

  Int scale = 1;
  for (unsigned i = 0; i < spec.r; ++i) scale *= p;

  GModule x;
  x.group = spec.group;
  x.p = p;
  x.ngens = perm.rank;
  x.relations = IntMatrix(perm.rank, 1);
  for (std::size_t b = 0; b < perm.rank; ++b) x.relations.at(b, 0) = scale;
  x.actions.reserve(spec.group.order());
  for (std::size_t g = 0; g < spec.group.order(); ++g)
    x.actions.push_back(perm.action_matrix(static_cast<int>(g)));
  validate_module(x);
  return x;
}

// Z^n with the nontrivial element of Z/2 acting by -1; p = 2.
inline GModule sign_torus(std::size_t n) {
  if (n == 0)
    throw validation_error(errc::bad_argument, "sign torus needs n >= 1");
  GModule x;
  x.group = cyclic_group(2, 1);
  x.p = 2;
  x.ngens = n;
  x.relations = IntMatrix(n, 0);
  IntMatrix minus(n, n);
  for (std::size_t i = 0; i < n; ++i) minus.at(i, i) = -1;
  x.actions = {IntMatrix::identity(n), std::move(minus)};
  validate_module(x);
  return x;
}

// Z^n with the trivial group acting.
inline GModule split_torus(std::size_t n, unsigned p) {
  GModule x;
  x.group = trivial_group(p);
  x.p = p;
  x.ngens = n;
  x.relations = IntMatrix(n, 0);
  x.actions = {IntMatrix::identity(n)};
  validate_module(x);
  return x;
}

// Z/p^r with the trivial group acting (one generator, one relation p^r).
inline GModule mu_module(unsigned r, unsigned p) {
  GModule x;
  x.group = trivial_group(p);
  x.p = p;
  x.ngens = 1;
  x.relations = IntMatrix(1, 1);
  Int scale = 1;
  for (unsigned i = 0; i < r; ++i) scale *= p;
  x.relations.at(0, 0) = scale;
  x.actions = {IntMatrix::identity(1)};
  validate_module(x);
  return x;
}

// The coset lattice Z[G/H] with its permutation action and no relations.
inline GModule perm_lattice(const FiniteGroup& group, const Subgroup& h) {
  PermutationModule perm = make_permutation_module(group, {h});
  GModule x;
  x.group = group;
  x.p = group.p();
  x.ngens = perm.rank;
  x.relations = IntMatrix(perm.rank, 0);
  x.actions.reserve(group.order());
  for (std::size_t g = 0; g < group.order(); ++g)
    x.actions.push_back(perm.action_matrix(static_cast<int>(g)));
  validate_module(x);
  return x;
}

}  // namespace edp
