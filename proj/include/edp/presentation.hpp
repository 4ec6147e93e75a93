#pragma once

// Permutation modules, maps from them into a G-module, and the criteria
// that make such a map a p-presentation: the cokernel is finite of order
// prime to p exactly when the induced map on the mod-(p, augmentation)
// quotients is onto.  Both routes are computed and cross-checked.
//
// Kernel reports additionally decide whether the kernel sits inside
// pP + IP, whether its coefficients vanish mod p on the fixed basis
// elements, and whether the group fixes the kernel pointwise.

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "edp/errors.hpp"
#include "edp/exactlin.hpp"
#include "edp/gmodule.hpp"
#include "edp/pgroup.hpp"

namespace edp {

// Direct sum of coset modules Z[G/H_i].  The basis is the disjoint union of
// the left coset spaces, each enumerated by ascending minimal coset
// representative; that ordering is canonical and all reports depend on it.
struct PermutationModule {
  FiniteGroup group;
  std::vector<Subgroup> summands;
  std::size_t rank = 0;

  std::vector<std::size_t> basis_summand;  // basis index -> summand index
  std::vector<int> basis_rep;              // basis index -> minimal coset rep
  // action[g][b] = index of g . (coset b)
  std::vector<std::vector<std::size_t>> action;
  // basis elements fixed by the whole group: exactly the H = G summands
  std::vector<std::size_t> fixed_basis;

  IntMatrix action_matrix(int g) const {
    IntMatrix m(rank, rank);
    for (std::size_t b = 0; b < rank; ++b)
      m.at(action[static_cast<std::size_t>(g)][b], b) = 1;
    return m;
  }

  // v -> g . v in basis coordinates
  IntVec act(int g, const IntVec& v) const {
    IntVec out(rank);
    for (std::size_t b = 0; b < rank; ++b)
      out[action[static_cast<std::size_t>(g)][b]] = v[b];
    return out;
  }
};

inline PermutationModule make_permutation_module(
    const FiniteGroup& group, const std::vector<Subgroup>& summands) {
  PermutationModule p;
  p.group = group;
  p.summands = summands;
  const std::size_t n = group.order();

  std::vector<std::vector<int>> coset_of_summand_elem;  // scratch
  std::vector<std::map<int, std::size_t>> rep_index(summands.size());
  for (std::size_t s = 0; s < summands.size(); ++s) {
    require_subgroup(group, summands[s]);
    std::vector<char> seen(n, 0);
    for (int g = 0; static_cast<std::size_t>(g) < n; ++g) {
      if (seen[g]) continue;
      // left coset gH; g is its minimal element because smaller members
      // would already be marked
      for (int h : summands[s].elements) seen[group.mul(g, h)] = 1;
      rep_index[s].emplace(g, p.basis_rep.size());
      p.basis_summand.push_back(s);
      p.basis_rep.push_back(g);
      if (summands[s].order() == n) p.fixed_basis.push_back(p.basis_rep.size() - 1);
    }
  }
  p.rank = p.basis_rep.size();

  p.action.assign(n, std::vector<std::size_t>(p.rank));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t b = 0; b < p.rank; ++b) {
      std::size_t s = p.basis_summand[b];
      // minimal element of g . (coset of b)
      int best = -1;
      for (int h : summands[s].elements) {
        int e = group.mul(group.mul(static_cast<int>(g), p.basis_rep[b]), h);
        if (best < 0 || e < best) best = e;
      }
      p.action[g][b] = rep_index[s].at(best);
    }
  return p;
}

// Basis (columns) of the sublattice pP + IP: p-multiples of every basis
// vector plus the augmentation columns g.b - b over group generators.
inline IntMatrix p_plus_augmentation_lattice(const PermutationModule& p) {
  std::vector<IntVec> cols;
  for (std::size_t b = 0; b < p.rank; ++b) {
    IntVec v(p.rank);
    v[b] = p.group.p();
    cols.push_back(std::move(v));
  }
  for (int g : p.group.generators())
    for (std::size_t b = 0; b < p.rank; ++b) {
      IntVec v(p.rank);
      v[p.action[static_cast<std::size_t>(g)][b]] += 1;
      v[b] -= 1;
      if (std::any_of(v.begin(), v.end(),
                      [](const Int& x) { return sgn(x) != 0; }))
        cols.push_back(std::move(v));
    }
  return IntMatrix::from_columns(cols, p.rank);
}

// The group-fixed sublattice of P: per transitive summand, the sum of its
// coset basis vectors.
inline IntMatrix group_fixed_lattice(const PermutationModule& p) {
  IntMatrix m(p.rank, p.summands.size());
  for (std::size_t b = 0; b < p.rank; ++b) m.at(b, p.basis_summand[b]) = 1;
  return m;
}

// ---------------------------------------------------------------------------
// Presentation maps

// phi: P -> X, recorded by the image x_i of the distinguished coset of each
// summand.  Equivariance forces the class of x_i to be H_i-fixed; the full
// matrix of phi is then generated deterministically by translating each x_i
// along the canonical coset representatives.
struct PresentationMap {
  PermutationModule domain;
  GModule codomain;
  std::vector<IntVec> images;  // one vector of length codomain.ngens per summand
  IntMatrix lifted_matrix;     // ngens x rank

  std::size_t rank() const { return domain.rank; }
};

inline PresentationMap make_presentation(PermutationModule domain,
                                         GModule codomain,
                                         std::vector<IntVec> images) {
  if (domain.group != codomain.group)
    throw validation_error(errc::group_mismatch,
                           "presentation domain and codomain act through "
                           "different groups");
  if (images.size() != domain.summands.size())
    throw validation_error(errc::dimension_mismatch,
                           "one image vector per summand required");
  for (const IntVec& x : images)
    if (x.size() != codomain.ngens)
      throw validation_error(errc::dimension_mismatch,
                             "image vector length must equal ngens");
  PresentationMap out;
  out.lifted_matrix = IntMatrix(codomain.ngens, domain.rank);
  for (std::size_t b = 0; b < domain.rank; ++b) {
    const IntMatrix& a =
        codomain.actions[static_cast<std::size_t>(domain.basis_rep[b])];
    IntVec col = a.apply(images[domain.basis_summand[b]]);
    for (std::size_t i = 0; i < codomain.ngens; ++i)
      out.lifted_matrix.at(i, b) = col[i];
  }
  out.domain = std::move(domain);
  out.codomain = std::move(codomain);
  out.images = std::move(images);
  return out;
}

// Each image class must be fixed by its stabilizer subgroup, i.e.
// (A_h - 1) x_i must land in the relation lattice for every h in H_i.
inline void validate_presentation(const PresentationMap& phi) {
  const GModule& x = phi.codomain;
  LatticeSolver rel(x.relations);
  for (std::size_t s = 0; s < phi.domain.summands.size(); ++s) {
    for (int h : phi.domain.summands[s].elements) {
      if (h == 0) continue;
      const IntMatrix& a = x.actions[static_cast<std::size_t>(h)];
      IntVec moved = a.apply(phi.images[s]);
      for (std::size_t i = 0; i < x.ngens; ++i) moved[i] -= phi.images[s][i];
      if (!rel.contains(moved))
        throw validation_error(errc::image_not_fixed,
                               "image of summand " + std::to_string(s) +
                                   " is not fixed by its stabilizer");
    }
  }
}

// Cokernel of phi is finite of order prime to p.  Two independent routes:
// the induced classes of the summand images span the whole cobar space, and
// the Smith form of [phi | relations] is full-rank with invariant factors
// prime to p.  The two answers must agree on every input.
inline bool is_p_presentation(const PresentationMap& phi) {
  const GModule& x = phi.codomain;
  CobarSpace cb = cobar(x);

  std::vector<FpVec> classes;
  classes.reserve(phi.images.size());
  for (const IntVec& xi : phi.images) classes.push_back(cb.project(xi));
  bool fp_route = fp_span(classes, x.p, cb.dim).dim() == cb.dim;

  SmithDecomposition s =
      smith_normal_form(IntMatrix::hstack(phi.lifted_matrix, x.relations));
  bool snf_route = s.rank == x.ngens;
  for (std::size_t t = 0; snf_route && t < s.rank; ++t)
    if (mod_p(s.D.at(t, t), x.p) == 0) snf_route = false;

  if (fp_route != snf_route)
    throw error(errc::internal,
                "surjectivity mod (p, augmentation) disagrees with the "
                "Smith-form cokernel test");
  return fp_route;
}

struct KernelReport {
  std::size_t kernel_rank = 0;
  IntMatrix kernel_basis;       // columns, in P coordinates, Hermite form
  bool in_pP_plus_IP = false;   // kernel contained in pP + IP
  bool condition_c = false;     // coefficients at fixed basis elements = 0 mod p
  bool is_trivial_module = false;  // group fixes the kernel pointwise
};

// Full integer kernel of the composite P -> X together with the membership
// and coefficient conditions.  Requires a p-presentation.
inline KernelReport kernel_report(const PresentationMap& phi) {
  if (!is_p_presentation(phi))
    throw validation_error(errc::not_a_p_presentation,
                           "kernel report requires a p-presentation");
  const GModule& x = phi.codomain;
  const std::size_t rank = phi.rank();

  KernelReport out;
  IntMatrix big = integer_kernel(
      IntMatrix::hstack(phi.lifted_matrix, x.relations));
  out.kernel_basis = column_hermite_form(big.top_rows(rank));
  out.kernel_rank = out.kernel_basis.cols();

  std::size_t free_rank = module_structure(x).free_rank;
  if (out.kernel_rank != rank - free_rank)
    throw error(errc::internal,
                "kernel rank must equal rank(P) - free rank of X for a "
                "p-presentation");

  LatticeSolver sub(p_plus_augmentation_lattice(phi.domain));
  out.in_pP_plus_IP = true;
  out.condition_c = true;
  out.is_trivial_module = true;
  std::vector<int> gens = phi.domain.group.generators();
  for (std::size_t j = 0; j < out.kernel_basis.cols(); ++j) {
    IntVec v = out.kernel_basis.column(j);
    if (!sub.contains(v)) out.in_pP_plus_IP = false;
    for (std::size_t b : phi.domain.fixed_basis)
      if (mod_p(v[b], x.p) != 0) out.condition_c = false;
    for (int g : gens)
      if (phi.domain.act(g, v) != v) out.is_trivial_module = false;
  }
  return out;
}

// The membership condition and the coefficient condition are equivalent for
// kernels the group fixes pointwise; this surfaces that equivalence as a
// checkable boolean.
inline bool conditions_b_c_agree(const PresentationMap& phi) {
  KernelReport r = kernel_report(phi);
  if (!r.is_trivial_module)
    throw validation_error(errc::kernel_not_trivial_module,
                           "equivalence is only claimed for kernels fixed "
                           "pointwise by the group");
  return r.in_pP_plus_IP == r.condition_c;
}

// ---------------------------------------------------------------------------
// Presentation text format
//
// One line per summand:  summand <H elem ids comma-separated> ; x = <ints>

struct PresentationText {
  std::vector<std::vector<int>> summand_elems;
  std::vector<IntVec> images;
};

inline PresentationText parse_presentation_text(const std::string& text) {
  PresentationText out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string::size_type hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word != "summand")
      throw parse_error("expected 'summand'", lineno, 1);
    std::string ids;
    if (!(ls >> ids)) throw parse_error("missing element ids", lineno, 1);
    std::vector<int> elems;
    std::istringstream es(ids);
    std::string tok;
    while (std::getline(es, tok, ',')) {
      auto v = parse_int_token(tok);
      if (!v || *v < 0 || *v > 100000)
        throw parse_error("bad element id '" + tok + "'", lineno, 1);
      elems.push_back(static_cast<int>(v->get_si()));
    }
    std::string semi, xword, eq;
    if (!(ls >> semi >> xword >> eq) || semi != ";" || xword != "x" ||
        eq != "=")
      throw parse_error("expected '; x = <integers>'", lineno, 1);
    IntVec img;
    std::string num;
    while (ls >> num) {
      auto v = parse_int_token(num);
      if (!v) throw parse_error("bad integer '" + num + "'", lineno, 1);
      img.push_back(*std::move(v));
    }
    out.summand_elems.push_back(std::move(elems));
    out.images.push_back(std::move(img));
  }
  return out;
}

inline std::string serialize_presentation(const PresentationMap& phi) {
  std::ostringstream os;
  for (std::size_t s = 0; s < phi.domain.summands.size(); ++s) {
    os << "summand ";
    const auto& elems = phi.domain.summands[s].elements;
    for (std::size_t i = 0; i < elems.size(); ++i)
      os << (i ? "," : "") << elems[i];
    os << " ; x =";
    for (const Int& v : phi.images[s]) os << ' ' << v.get_str();
    os << '\n';
  }
  return os.str();
}

// Binds parsed text to a module: element sets must already be subgroups and
// image vectors must have the right length.
inline PresentationMap bind_presentation(const PresentationText& text,
                                         const GModule& x) {
  std::vector<Subgroup> summands;
  for (const auto& elems : text.summand_elems) {
    check_element_ids(x.group, elems);
    std::vector<int> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty() || sorted.front() != 0)
      sorted.insert(sorted.begin(), 0);
    Subgroup h{sorted};
    require_subgroup(x.group, h);
    summands.push_back(std::move(h));
  }
  for (const IntVec& img : text.images)
    if (img.size() != x.ngens)
      throw validation_error(errc::dimension_mismatch,
                             "image vector length must equal module rank");
  return make_presentation(make_permutation_module(x.group, summands), x,
                           text.images);
}

}  // namespace edp
