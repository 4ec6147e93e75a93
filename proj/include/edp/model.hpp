#pragma once

// The EDP v1 model text format: a prime, a group block (explicit table or
// permutation generators), and a module block (rank, relations, actions).
// Line oriented, `#` comments, whitespace-separated tokens, matrices given
// row-major with `;` between rows.  Parsing is deterministic, and
// serialize/parse round-trips to an identical in-memory value.

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "edp/errors.hpp"
#include "edp/exactlin.hpp"
#include "edp/gmodule.hpp"
#include "edp/pgroup.hpp"

namespace edp {

struct ModelFile {
  unsigned p = 2;
  FiniteGroup group;
  GModule module;  // module.group == group

  bool operator==(const ModelFile& o) const {
    return p == o.p && group == o.group && module == o.module;
  }
};

namespace modeldetail {

inline constexpr std::size_t kParseOrderCap = 1024;

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string::size_type hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      if (raw[i] == '(' || raw[i] == ')' || raw[i] == ';' || raw[i] == ':' ||
          raw[i] == '=') {
        ++i;
      } else {
        while (i < raw.size() &&
               !std::isspace(static_cast<unsigned char>(raw[i])) &&
               raw[i] != '(' && raw[i] != ')' && raw[i] != ';' &&
               raw[i] != ':' && raw[i] != '=')
          ++i;
      }
      toks.push_back(Token{raw.substr(start, i - start), lineno, start + 1});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

inline long token_long(const Token& t, long lo, long hi) {
  auto v = parse_int_token(t.text);
  if (!v || *v < lo || *v > hi)
    throw parse_error("expected an integer in [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "], got '" + t.text + "'",
                      t.line, t.column);
  return v->get_si();
}

// Rows of integers separated by `;` tokens, all rows the same length.
inline std::vector<IntVec> parse_matrix_rows(const std::vector<Token>& toks,
                                             std::size_t from) {
  std::vector<IntVec> rows(1);
  for (std::size_t i = from; i < toks.size(); ++i) {
    if (toks[i].text == ";") {
      rows.emplace_back();
      continue;
    }
    auto v = parse_int_token(toks[i].text);
    if (!v)
      throw parse_error("expected an integer, got '" + toks[i].text + "'",
                        toks[i].line, toks[i].column);
    rows.back().push_back(*std::move(v));
  }
  if (rows.back().empty() && rows.size() > 1) rows.pop_back();
  for (const IntVec& r : rows)
    if (r.size() != rows.front().size())
      throw parse_error("ragged matrix rows", toks[from].line,
                        toks[from].column);
  return rows;
}

struct PermClosure {
  std::vector<std::vector<int>> table;
  std::vector<int> generator_ids;           // id of each input generator
  std::vector<std::pair<int, int>> parent;  // id -> (parent id, generator no)
};

// Deterministic closure of permutation generators: identity gets id 0, then
// breadth-first products elem*gen in input order.
inline PermClosure close_permutations(
    const std::vector<std::vector<int>>& gens, std::size_t degree,
    std::size_t line) {
  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, int> ids;
  std::vector<int> identity(degree);
  for (std::size_t i = 0; i < degree; ++i) identity[i] = static_cast<int>(i);
  elems.push_back(identity);
  ids.emplace(identity, 0);
  PermClosure out;
  out.parent.emplace_back(0, -1);
  std::size_t next = 0;
  while (next < elems.size()) {
    std::vector<int> base = elems[next];
    for (std::size_t g = 0; g < gens.size(); ++g) {
      std::vector<int> prod(degree);
      for (std::size_t x = 0; x < degree; ++x)
        prod[x] = base[static_cast<std::size_t>(gens[g][x])];
      if (ids.emplace(prod, static_cast<int>(elems.size())).second) {
        elems.push_back(prod);
        out.parent.emplace_back(static_cast<int>(next), static_cast<int>(g));
        if (elems.size() > kParseOrderCap)
          throw parse_error("permutation group exceeds the order cap of " +
                                std::to_string(kParseOrderCap),
                            line, 1);
      }
    }
    ++next;
  }
  for (const auto& g : gens) out.generator_ids.push_back(ids.at(g));
  const std::size_t n = elems.size();
  out.table.assign(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<int> prod(degree);
      for (std::size_t x = 0; x < degree; ++x)
        prod[x] = elems[a][static_cast<std::size_t>(elems[b][x])];
      out.table[a][b] = ids.at(prod);
    }
  return out;
}

}  // namespace modeldetail

inline ModelFile parse_model(const std::string& text) {
  using namespace modeldetail;
  auto lines = tokenize(text);

  std::optional<unsigned> prime;
  std::optional<std::size_t> group_order;
  std::optional<std::vector<IntVec>> table_rows;
  std::size_t table_line = 0;
  std::vector<std::vector<int>> perm_gens;
  std::optional<std::size_t> perm_degree;
  std::size_t perm_line = 0;
  std::optional<std::size_t> module_rank;
  std::optional<std::vector<IntVec>> relation_rows;  // nullopt row list = none
  bool relations_none = false;
  std::map<int, std::vector<IntVec>> action_rows;

  for (const auto& toks : lines) {
    const Token& head = toks[0];
    auto need = [&](std::size_t k) {
      if (toks.size() < k)
        throw parse_error("truncated '" + head.text + "' statement", head.line,
                          head.column);
    };
    auto exactly = [&](std::size_t k) {
      need(k);
      if (toks.size() > k)
        throw parse_error("unexpected token '" + toks[k].text + "'",
                          toks[k].line, toks[k].column);
    };
    if (head.text == "p") {
      exactly(2);
      prime = static_cast<unsigned>(token_long(toks[1], 2, 9973));
    } else if (head.text == "group.order") {
      exactly(2);
      group_order = static_cast<std::size_t>(
          token_long(toks[1], 1, static_cast<long>(kParseOrderCap)));
    } else if (head.text == "group.table") {
      need(2);
      table_rows = parse_matrix_rows(toks, 1);
      table_line = head.line;
    } else if (head.text == "group.perm") {
      need(4);
      std::size_t degree = static_cast<std::size_t>(token_long(toks[1], 1, 64));
      if (perm_degree && *perm_degree != degree)
        throw parse_error("permutation degree changed between lines",
                          head.line, head.column);
      perm_degree = degree;
      perm_line = head.line;
      if (toks[2].text != ":")
        throw parse_error("expected ':' after the degree", toks[2].line,
                          toks[2].column);
      std::vector<int> perm(degree);
      for (std::size_t i = 0; i < degree; ++i) perm[i] = static_cast<int>(i);
      std::vector<char> used(degree, 0);
      std::size_t i = 3;
      while (i < toks.size()) {
        if (toks[i].text != "(")
          throw parse_error("expected '(' in cycle notation", toks[i].line,
                            toks[i].column);
        std::vector<int> cyc;
        ++i;
        while (i < toks.size() && toks[i].text != ")") {
          int e = static_cast<int>(
              token_long(toks[i], 0, static_cast<long>(degree) - 1));
          if (used[static_cast<std::size_t>(e)])
            throw parse_error("point repeated in cycles", toks[i].line,
                              toks[i].column);
          used[static_cast<std::size_t>(e)] = 1;
          cyc.push_back(e);
          ++i;
        }
        if (i == toks.size())
          throw parse_error("unterminated cycle", head.line, head.column);
        ++i;  // ')'
        for (std::size_t k = 0; k < cyc.size(); ++k)
          perm[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
      }
      perm_gens.push_back(std::move(perm));
    } else if (head.text == "module.rank") {
      exactly(2);
      module_rank = static_cast<std::size_t>(token_long(toks[1], 0, 4096));
    } else if (head.text == "module.relations") {
      need(2);
      if (toks[1].text == "none") {
        if (toks.size() > 2)
          throw parse_error("unexpected token after 'none'", toks[2].line,
                            toks[2].column);
        relations_none = true;
      } else {
        relation_rows = parse_matrix_rows(toks, 1);
      }
    } else if (head.text == "module.action") {
      need(4);
      int elem = static_cast<int>(
          token_long(toks[1], 0, static_cast<long>(kParseOrderCap) - 1));
      if (elem == 0)
        throw parse_error(
            "the identity element acts as the identity; omit its action line",
            head.line, head.column);
      if (toks[2].text != "=")
        throw parse_error("expected '=' after the element id", toks[2].line,
                          toks[2].column);
      if (!action_rows.emplace(elem, parse_matrix_rows(toks, 3)).second)
        throw parse_error("duplicate action for element " +
                              std::to_string(elem),
                          head.line, head.column);
    } else {
      throw parse_error("unknown statement '" + head.text + "'", head.line,
                        head.column);
    }
  }

  if (!prime) throw parse_error("missing 'p' statement", 0, 0);
  if (!module_rank) throw parse_error("missing 'module.rank' statement", 0, 0);
  if (table_rows && perm_degree)
    throw parse_error("give the group either by table or by permutations",
                      table_line, 1);

  // ---- group ----
  FiniteGroup group;
  std::vector<int> generator_ids;
  std::vector<std::pair<int, int>> parent;
  if (table_rows) {
    if (!group_order)
      throw parse_error("group.table requires group.order", table_line, 1);
    const std::size_t n = *group_order;
    if (table_rows->size() != n)
      throw parse_error("group.table must have group.order rows", table_line,
                        1);
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
      if ((*table_rows)[i].size() != n)
        throw parse_error("group.table rows must have group.order entries",
                          table_line, 1);
      for (std::size_t j = 0; j < n; ++j) {
        const Int& e = (*table_rows)[i][j];
        if (e < 0 || e >= static_cast<long>(n))
          throw parse_error("table entry out of range", table_line, 1);
        t[i][j] = static_cast<int>(e.get_si());
      }
    }
    group = FiniteGroup::from_table(*prime, t);
  } else if (perm_degree) {
    modeldetail::PermClosure pc =
        close_permutations(perm_gens, *perm_degree, perm_line);
    if (group_order && *group_order != pc.table.size())
      throw parse_error("group.order disagrees with the permutation closure",
                        perm_line, 1);
    group = FiniteGroup::from_table(*prime, pc.table);
    generator_ids = pc.generator_ids;
    parent = pc.parent;
  } else {
    throw parse_error("missing group block (group.table or group.perm)", 0, 0);
  }

  // ---- module ----
  const std::size_t rank = *module_rank;
  IntMatrix relations(rank, 0);
  if (relation_rows) {
    if (relations_none)
      throw parse_error("both 'none' and explicit relations given", 0, 0);
    if (relation_rows->size() != rank)
      throw parse_error("module.relations must have module.rank rows", 0, 0);
    const std::size_t t = relation_rows->front().size();
    relations = IntMatrix(rank, t);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < t; ++j)
        relations.at(i, j) = (*relation_rows)[i][j];
  }

  std::map<int, IntMatrix> actions;
  for (const auto& [elem, rows] : action_rows) {
    if (static_cast<std::size_t>(elem) >= group.order())
      throw parse_error("action element id " + std::to_string(elem) +
                            " out of range",
                        0, 0);
    if (rank == 0) {
      actions.emplace(elem, IntMatrix(0, 0));
      continue;
    }
    if (rows.size() != rank || rows.front().size() != rank)
      throw parse_error("module.action matrices must be rank x rank", 0, 0);
    IntMatrix m(rank, rank);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) m.at(i, j) = rows[i][j];
    actions.emplace(elem, std::move(m));
  }
  // degenerate rank: every action is the unique 0x0 matrix
  if (rank == 0)
    for (std::size_t g = 1; g < group.order(); ++g)
      actions.emplace(static_cast<int>(g), IntMatrix(0, 0));

  if (actions.size() + 1 < group.order()) {
    if (!perm_degree)
      throw parse_error(
          "actions required for every non-identity element with a table "
          "group",
          0, 0);
    // generator-only input: every generator must be present, the rest follow
    // by multiplying along the closure words
    for (int gid : generator_ids)
      if (gid != 0 && !actions.count(gid))
        throw parse_error("missing action for generator element " +
                              std::to_string(gid),
                          0, 0);
    for (std::size_t e = 1; e < group.order(); ++e) {
      if (actions.count(static_cast<int>(e))) continue;
      auto [par, gen] = parent[e];
      const IntMatrix* pa = par == 0 ? nullptr : &actions.at(par);
      const IntMatrix& ga = actions.at(generator_ids[static_cast<std::size_t>(
          gen)]);
      actions.emplace(static_cast<int>(e),
                      pa ? (*pa * ga) : ga);
    }
  }

  ModelFile out;
  out.p = *prime;
  out.group = group;
  out.module = make_gmodule(group, rank, std::move(relations), actions);
  validate_module(out.module);
  return out;
}

inline std::string serialize_matrix_rows(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << " ;";
    for (std::size_t j = 0; j < m.cols(); ++j) os << ' ' << m.at(i, j).get_str();
  }
  return os.str();
}

// Canonical serialization: full table form, explicit relations or `none`,
// one action line per non-identity element.
inline std::string serialize_model(const ModelFile& model) {
  std::ostringstream os;
  const std::size_t n = model.group.order();
  os << "p " << model.p << '\n';
  os << "group.order " << n << '\n';
  os << "group.table";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) os << " ;";
    for (std::size_t j = 0; j < n; ++j)
      os << ' '
         << model.group.mul(static_cast<int>(i), static_cast<int>(j));
  }
  os << '\n';
  os << "module.rank " << model.module.ngens << '\n';
  if (model.module.relations.cols() == 0)
    os << "module.relations none\n";
  else
    os << "module.relations" << serialize_matrix_rows(model.module.relations)
       << '\n';
  if (model.module.ngens > 0)
    for (std::size_t g = 1; g < n; ++g)
      os << "module.action " << g << " ="
         << serialize_matrix_rows(model.module.actions[g]) << '\n';
  return os.str();
}

}  // namespace edp
