#pragma once

// Command-line front end.  Reports are line oriented `key = value`; witness
// blocks reuse the presentation text format so they can be fed back into
// `check`.  Exit codes: 0 success, 1 validation failure, 2 parse failure,
// 3 infeasible or over a tractability limit.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edp/constructions.hpp"
#include "edp/errors.hpp"
#include "edp/model.hpp"
#include "edp/presentation.hpp"
#include "edp/solver.hpp"

namespace edp {

struct CommandResult {
  int exit_code = 0;
  std::string report;
};

namespace clidetail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read file '" + path + "'", 0, 0);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline std::size_t subgroup_ceiling() {
  const char* env = std::getenv("EDP_SUBGROUP_CEILING");
  if (env == nullptr || *env == '\0') return kDefaultSubgroupCeiling;
  auto v = parse_int_token(env);
  if (!v || *v < 1 || *v > 4096)
    throw validation_error(errc::bad_argument,
                           "EDP_SUBGROUP_CEILING must be an integer in "
                           "[1, 4096]");
  return static_cast<std::size_t>(v->get_si());
}

inline std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto v = parse_int_token(tok);
    if (!v || *v < 0 || *v > 100000)
      throw validation_error(errc::bad_argument,
                             "bad element id '" + tok + "'");
    out.push_back(static_cast<int>(v->get_si()));
  }
  return out;
}

inline const char* yesno(bool b) { return b ? "true" : "false"; }

inline void print_ed(std::ostringstream& os, const ModelFile& model,
                     const EdResult& r) {
  os << "p = " << model.p << '\n';
  os << "group.order = " << model.group.order() << '\n';
  os << "module.rank = " << model.module.ngens << '\n';
  os << "free_rank = " << r.free_rank << '\n';
  os << "cbar_dim = " << cobar(model.module).dim << '\n';
  os << "min_rank_p = " << r.min_rank_p << '\n';
  os << "ed = " << r.ed << '\n';
  os << "tower =";
  for (const auto& [c, d] : r.tower) os << ' ' << c << ':' << d;
  os << '\n';
  os << "witness.summands = " << r.witness.domain.summands.size() << '\n';
  os << "witness:\n" << serialize_presentation(r.witness);
}

}  // namespace clidetail

inline CommandResult run_command(const std::vector<std::string>& args) {
  std::ostringstream os;
  try {
    CLI::App app{"exact essential p-dimension toolkit for groups of "
                 "multiplicative type"};
    app.require_subcommand(1);

    // ---- ed ----
    std::string ed_file;
    auto* c_ed = app.add_subcommand(
        "ed", "minimal p-presentation and essential p-dimension");
    c_ed->add_option("file", ed_file, "EDP model file")->required();
    c_ed->callback([&] {
      ModelFile model = parse_model(clidetail::read_file(ed_file));
      EdResult r = minimal_p_presentation(model.module,
                                          clidetail::subgroup_ceiling());
      clidetail::print_ed(os, model, r);
    });

    // ---- oracle ----
    std::string oracle_file;
    long oracle_bound = -1;
    auto* c_oracle = app.add_subcommand(
        "oracle", "exhaustive cross-check of the solver on small instances");
    c_oracle->add_option("file", oracle_file, "EDP model file")->required();
    c_oracle->add_option("--bound", oracle_bound,
                         "total index ceiling (default: the solver's own "
                         "minimal rank)");
    c_oracle->callback([&] {
      ModelFile model = parse_model(clidetail::read_file(oracle_file));
      std::size_t ceiling = clidetail::subgroup_ceiling();
      EdResult r = minimal_p_presentation(model.module, ceiling);
      std::size_t bound = oracle_bound < 0
                              ? r.min_rank_p
                              : static_cast<std::size_t>(oracle_bound);
      std::size_t oracle = brute_force_ed(model.module, bound, ceiling);
      os << "ed = " << r.ed << '\n';
      os << "oracle_bound = " << bound << '\n';
      os << "ed_oracle = " << oracle << '\n';
      os << "agree = " << clidetail::yesno(oracle == r.ed) << '\n';
    });

    // ---- cbar ----
    std::string cbar_file;
    auto* c_cbar = app.add_subcommand(
        "cbar", "dimension and projection of X/(pX + IX)");
    c_cbar->add_option("file", cbar_file, "EDP model file")->required();
    c_cbar->callback([&] {
      ModelFile model = parse_model(clidetail::read_file(cbar_file));
      CobarSpace cb = cobar(model.module);
      os << "p = " << model.p << '\n';
      os << "module.rank = " << model.module.ngens << '\n';
      os << "cbar_dim = " << cb.dim << '\n';
      os << "c_rank = " << c_rank(model.module) << '\n';
      for (std::size_t i = 0; i < cb.dim; ++i) {
        os << "projection." << i << " =";
        for (unsigned v : cb.projection[i]) os << ' ' << v;
        os << '\n';
      }
    });

    // ---- check ----
    std::string check_model_file, check_pres_file;
    auto* c_check = app.add_subcommand(
        "check", "validate a presentation file against a model");
    c_check->add_option("file", check_model_file, "EDP model file")
        ->required();
    c_check->add_option("presfile", check_pres_file, "presentation file")
        ->required();
    c_check->callback([&] {
      ModelFile model = parse_model(clidetail::read_file(check_model_file));
      PresentationText text =
          parse_presentation_text(clidetail::read_file(check_pres_file));
      PresentationMap phi = bind_presentation(text, model.module);
      validate_presentation(phi);
      bool isp = is_p_presentation(phi);
      os << "rank = " << phi.rank() << '\n';
      os << "is_p_presentation = " << clidetail::yesno(isp) << '\n';
      if (!isp) return;
      KernelReport kr = kernel_report(phi);
      os << "kernel_rank = " << kr.kernel_rank << '\n';
      os << "in_pP_plus_IP = " << clidetail::yesno(kr.in_pP_plus_IP) << '\n';
      os << "condition_c = " << clidetail::yesno(kr.condition_c) << '\n';
      os << "kernel_trivial_module = "
         << clidetail::yesno(kr.is_trivial_module) << '\n';
      if (kr.is_trivial_module)
        os << "conditions_agree = "
           << clidetail::yesno(kr.in_pP_plus_IP == kr.condition_c) << '\n';
      else
        os << "conditions_agree = n/a\n";
    });

    // ---- bounds ----
    std::size_t b_pfaithful = 0, b_pgenfree = 0, b_dim = 0;
    auto* c_bounds = app.add_subcommand(
        "bounds", "representation-dimension sandwich for ed");
    c_bounds->add_option("--pfaithful", b_pfaithful,
                         "minimal p-faithful representation dimension")
        ->required();
    c_bounds->add_option("--pgenfree", b_pgenfree,
                         "minimal p-generically free representation dimension")
        ->required();
    c_bounds->add_option("--dim", b_dim, "dimension of the group")->required();
    c_bounds->callback([&] {
      BoundsResult r = ed_bounds(b_pfaithful, b_pgenfree, b_dim);
      os << "lower = " << r.lower << '\n';
      os << "upper = " << r.upper << '\n';
    });

    // ---- gap ----
    std::string gap_file;
    auto* c_gap = app.add_subcommand(
        "gap", "bound on the faithful/generically-free gap from the central "
               "action on the torus lattice");
    c_gap->add_option("file", gap_file, "EDP model file (lattice, no "
                                        "relations)")
        ->required();
    c_gap->callback([&] {
      ModelFile model = parse_model(clidetail::read_file(gap_file));
      if (model.module.relations.cols() != 0)
        throw validation_error(errc::torsion_present,
                               "gap expects a lattice without relations");
      os << "gap_bound = " << gap_bound(model.module) << '\n';
    });

    // ---- tame ----
    std::string tame_file;
    auto* c_tame = app.add_subcommand(
        "tame", "does the central subgroup act trivially on the lattice?");
    c_tame->add_option("file", tame_file, "EDP model file")->required();
    c_tame->callback([&] {
      ModelFile model = parse_model(clidetail::read_file(tame_file));
      os << "tame = " << clidetail::yesno(is_tame(model.module)) << '\n';
    });

    // ---- subgroups ----
    std::string sub_file;
    auto* c_sub = app.add_subcommand(
        "subgroups", "conjugacy classes of subgroups of the model group");
    c_sub->add_option("file", sub_file, "EDP model file")->required();
    c_sub->callback([&] {
      ModelFile model = parse_model(clidetail::read_file(sub_file));
      SubgroupClassTable t =
          enumerate_subgroups(model.group, clidetail::subgroup_ceiling());
      os << "group.order = " << model.group.order() << '\n';
      os << "classes = " << t.classes.size() << '\n';
      os << "subgroups = " << t.total_subgroups() << '\n';
      for (std::size_t i = 0; i < t.classes.size(); ++i) {
        const SubgroupClass& cls = t.classes[i];
        os << "class." << i << " = index " << cls.index << " ; rep ";
        const auto& e = cls.representative.elements;
        for (std::size_t k = 0; k < e.size(); ++k) os << (k ? "," : "") << e[k];
        os << " ; size " << cls.members.size() << '\n';
      }
    });

    // ---- wreath ----
    std::size_t w_edt = 0, w_n = 0, w_edf = 0;
    auto* c_wreath =
        app.add_subcommand("wreath", "ed of a wreath product T wr F");
    c_wreath->add_option("--edt", w_edt, "ed(T; p)")->required();
    c_wreath->add_option("--n", w_n, "number of permuted copies")->required();
    c_wreath->add_option("--edf", w_edf, "ed(F; p)")->required();
    c_wreath->callback([&] {
      os << "ed = " << wreath_ed(w_edt, w_n, w_edf) << '\n';
    });

    // ---- sum ----
    std::string sum_file1, sum_file2;
    auto* c_sum = app.add_subcommand(
        "sum", "additivity report for a pair of models");
    c_sum->add_option("file1", sum_file1, "first EDP model file")->required();
    c_sum->add_option("file2", sum_file2, "second EDP model file")->required();
    c_sum->callback([&] {
      ModelFile m1 = parse_model(clidetail::read_file(sum_file1));
      ModelFile m2 = parse_model(clidetail::read_file(sum_file2));
      AdditivityReport r = additivity_check(m1.module, m2.module,
                                            clidetail::subgroup_ceiling());
      os << "ed1 = " << r.ed1 << '\n';
      os << "ed2 = " << r.ed2 << '\n';
      os << "ed_sum = " << r.ed_sum << '\n';
      os << "additive = " << clidetail::yesno(r.holds) << '\n';
    });

    // ---- gen ----
    auto* c_gen = app.add_subcommand("gen", "emit a stock model file");
    c_gen->require_subcommand(1);

    std::size_t sign_n = 1;
    auto* g_sign = c_gen->add_subcommand("sign", "Z^n with Z/2 acting by -1");
    g_sign->add_option("--n", sign_n, "lattice rank")->required();
    g_sign->callback([&] {
      GModule m = sign_torus(sign_n);
      os << serialize_model(ModelFile{m.p, m.group, m});
    });

    std::size_t split_n = 1;
    unsigned split_p = 2;
    auto* g_split =
        c_gen->add_subcommand("split", "Z^n with the trivial group");
    g_split->add_option("--n", split_n, "lattice rank")->required();
    g_split->add_option("--p", split_p, "prime")->required();
    g_split->callback([&] {
      GModule m = split_torus(split_n, split_p);
      os << serialize_model(ModelFile{m.p, m.group, m});
    });

    unsigned mu_r = 1, mu_p = 2;
    auto* g_mu = c_gen->add_subcommand("mu", "Z/p^r with the trivial group");
    g_mu->add_option("--r", mu_r, "torsion exponent")->required();
    g_mu->add_option("--p", mu_p, "prime")->required();
    g_mu->callback([&] {
      GModule m = mu_module(mu_r, mu_p);
      os << serialize_model(ModelFile{m.p, m.group, m});
    });

    std::string norm_group;
    std::vector<std::string> norm_stabs;
    unsigned norm_r = 0;
    auto* g_norm = c_gen->add_subcommand(
        "norm", "permutation module modulo a p^r-scaled norm relation");
    g_norm->add_option("--group", norm_group,
                       "acting group (z1 z2 z4 z8 v4 d4 q8 z3 z9 z3z3)")
        ->required();
    g_norm->add_option("--stab", norm_stabs,
                       "stabilizer generators, comma-separated ids; repeat "
                       "per factor")
        ->required();
    g_norm->add_option("--r", norm_r, "relation scale exponent");
    g_norm->callback([&] {
      FiniteGroup g = named_group(norm_group);
      NormExtensionSpec spec;
      spec.group = g;
      spec.r = norm_r;
      for (const std::string& s : norm_stabs)
        spec.stabilizers.push_back(
            subgroup_generated(g, clidetail::parse_id_list(s)));
      GModule m = norm_extension_module(spec);
      os << serialize_model(ModelFile{m.p, m.group, m});
    });

    std::string permg_group, permg_h;
    auto* g_perm =
        c_gen->add_subcommand("perm", "coset lattice Z[G/H] with no relations");
    g_perm->add_option("--group", permg_group, "acting group name")
        ->required();
    g_perm->add_option("--stab", permg_h,
                       "generators of H, comma-separated element ids")
        ->required();
    g_perm->callback([&] {
      FiniteGroup g = named_group(permg_group);
      Subgroup h = subgroup_generated(g, clidetail::parse_id_list(permg_h));
      GModule m = perm_lattice(g, h);
      os << serialize_model(ModelFile{m.p, m.group, m});
    });

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (const CLI::CallForHelp&) {
      return CommandResult{0, app.help()};
    }
    return CommandResult{0, os.str()};
  } catch (const CLI::ParseError& e) {
    std::ostringstream err;
    err << "error = ParseError\n"
        << "detail = " << e.what() << '\n';
    return CommandResult{2, err.str()};
  } catch (const parse_error& e) {
    std::ostringstream err;
    err << "error = " << errc_name(e.code()) << '\n'
        << "detail = " << e.what() << '\n'
        << "line = " << e.line() << '\n'
        << "column = " << e.column() << '\n';
    return CommandResult{2, err.str()};
  } catch (const limit_error& e) {
    std::ostringstream err;
    err << "error = " << errc_name(e.code()) << '\n'
        << "detail = " << e.what() << '\n';
    return CommandResult{3, err.str()};
  } catch (const error& e) {
    std::ostringstream err;
    err << "error = " << errc_name(e.code()) << '\n'
        << "detail = " << e.what() << '\n';
    return CommandResult{1, err.str()};
  }
}

}  // namespace edp
