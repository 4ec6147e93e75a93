#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "edp/exactlin.hpp"

using namespace edp;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c,
                        int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = d(rng);
  return m;
}

// Random unimodular matrix: a product of elementary row operations.
IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int ops = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int k = 0; k < ops; ++k) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    Int q = coef(rng);
    u.row_submul(i, j, q);
  }
  return u;
}

FpVec random_fp_vec(std::mt19937& rng, unsigned p, std::size_t n) {
  std::uniform_int_distribution<unsigned> d(0, p - 1);
  FpVec v(n);
  for (unsigned& x : v) x = d(rng);
  return v;
}

// Exhaustive minimum over all cost-bounded multisets of sources, each use
// contributing one vector of its subspace.  Independent of the greedy path.
bool exhaustive_can_span(const std::vector<const FpSubspace*>& picks,
                         std::size_t i, const FpSubspace& w,
                         const FpSubspace& target) {
  if (w.contains(target)) return true;
  if (i == picks.size()) return false;
  if (w.dim() + (picks.size() - i) < target.dim()) return false;
  if (exhaustive_can_span(picks, i + 1, w, target)) return true;
  for (const FpVec& v : picks[i]->enumerate_normalized()) {
    if (w.contains(v)) continue;
    FpSubspace w2 = w;
    w2.insert(v);
    if (exhaustive_can_span(picks, i + 1, w2, target)) return true;
  }
  return false;
}

unsigned long long exhaustive_min_cost(
    const std::vector<std::pair<FpSubspace, unsigned long long>>& sources,
    const FpSubspace& target, unsigned long long budget) {
  unsigned long long best = budget + 1;
  std::vector<std::size_t> stack;
  // DFS over multisets with non-decreasing source index.
  std::function<void(std::size_t, unsigned long long)> go =
      [&](std::size_t start, unsigned long long cost) {
        std::vector<const FpSubspace*> picks;
        picks.reserve(stack.size());
        for (std::size_t s : stack) picks.push_back(&sources[s].first);
        FpSubspace w(target.p(), target.ambient_dim());
        if (exhaustive_can_span(picks, 0, w, target)) {
          best = std::min(best, cost);
          return;  // supersets only cost more
        }
        for (std::size_t s = start; s < sources.size(); ++s) {
          unsigned long long c2 = cost + sources[s].second;
          if (c2 >= best || c2 > budget) continue;
          stack.push_back(s);
          go(s, c2);
          stack.pop_back();
        }
      };
  go(0, 0);
  return best;
}

}  // namespace

TEST_CASE("smith normal form on pinned examples", "[exactlin]") {
  SECTION("1x1") {
    auto s = smith_normal_form(IntMatrix::from_rows({{2}}));
    CHECK(s.rank == 1);
    CHECK(s.D.at(0, 0) == 2);
  }
  SECTION("identity") {
    auto s = smith_normal_form(IntMatrix::identity(2));
    CHECK(s.rank == 2);
    CHECK(s.D == IntMatrix::identity(2));
  }
  SECTION("norm relation column (p,...,p), p = 3") {
    // Z^3 / im(column) has invariant factor 3 and free rank 2.
    IntMatrix m(3, 1);
    for (std::size_t i = 0; i < 3; ++i) m.at(i, 0) = 3;
    auto s = smith_normal_form(m);
    CHECK(s.rank == 1);
    CHECK(s.D.at(0, 0) == 3);
    CHECK(s.U * m * s.V == s.D);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
  }
}

TEST_CASE("smith normal form reconstruction on random matrices", "[exactlin]") {
  std::mt19937 rng(20260810);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = rng() % 6, c = rng() % 7;
    IntMatrix m = random_matrix(rng, r, c);
    auto s = smith_normal_form(m);
    REQUIRE(s.U * m * s.V == s.D);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    // diagonal, positive, divisibility chain
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(sgn(s.D.at(i, j)) == 0);
    for (std::size_t t = 0; t < std::min(r, c); ++t) {
      if (t < s.rank) {
        CHECK(sgn(s.D.at(t, t)) > 0);
        if (t + 1 < s.rank)
          CHECK(mpz_divisible_p(s.D.at(t + 1, t + 1).get_mpz_t(),
                                s.D.at(t, t).get_mpz_t()) != 0);
      } else {
        CHECK(sgn(s.D.at(t, t)) == 0);
      }
    }
    // determinism: same input, bit-identical output
    auto s2 = smith_normal_form(m);
    CHECK(s.U == s2.U);
    CHECK(s.D == s2.D);
    CHECK(s.V == s2.V);
  }
}

TEST_CASE("integer kernel pinned examples", "[exactlin]") {
  SECTION("row (1,1)") {
    IntMatrix k = integer_kernel(IntMatrix::from_rows({{1, 1}}));
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0) == 1);
    CHECK(k.at(1, 0) == -1);
  }
  SECTION("identity has trivial kernel") {
    CHECK(integer_kernel(IntMatrix::identity(3)).cols() == 0);
  }
  SECTION("rank-1 square matrix") {
    IntMatrix k = integer_kernel(IntMatrix::from_rows({{2, 2}, {2, 2}}));
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0) == 1);
    CHECK(k.at(1, 0) == -1);
  }
}

TEST_CASE("integer kernel properties on random matrices", "[exactlin]") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = rng() % 5, c = rng() % 6;
    IntMatrix m = random_matrix(rng, r, c);
    IntMatrix k = integer_kernel(m);
    auto s = smith_normal_form(m);
    CHECK(k.cols() == c - s.rank);
    for (std::size_t j = 0; j < k.cols(); ++j) {
      IntVec x = k.column(j);
      for (const Int& e : m.apply(x)) CHECK(sgn(e) == 0);
    }
  }
}

TEST_CASE("hermite form is a canonical lattice invariant", "[exactlin]") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix m = random_matrix(rng, r, c);
    IntMatrix h = column_hermite_form(m);
    // right-multiplying by a unimodular matrix fixes the column lattice
    IntMatrix u = random_unimodular(rng, c);
    CHECK(column_hermite_form(m * u) == h);
    // the two bases generate the same lattice
    LatticeSolver a(m), b(h);
    CHECK(a.contains_columns(h));
    CHECK(b.contains_columns(m));
  }
}

TEST_CASE("lattice solver solves and rejects", "[exactlin]") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 4, k = rng() % (n + 1);
    IntMatrix basis = random_matrix(rng, n, k);
    LatticeSolver solver(basis);
    // random lattice element: basis * random coefficients
    IntVec coeff(k);
    for (Int& x : coeff) x = static_cast<int>(rng() % 11) - 5;
    IntVec x = basis.apply(coeff);
    auto y = solver.solve(x);
    REQUIRE(y.has_value());
    CHECK(basis.apply(*y) == x);
  }
  // explicit rejection
  LatticeSolver even(IntMatrix::from_rows({{2}}));
  CHECK(even.contains({Int(4)}));
  CHECK_FALSE(even.contains({Int(3)}));
}

TEST_CASE("fp_span pinned examples", "[exactlin]") {
  SECTION("empty set spans zero") {
    CHECK(fp_span({}, 2, 3).dim() == 0);
  }
  SECTION("two vectors span F_2^2") {
    CHECK(fp_span({{1, 1}, {0, 1}}, 2, 2).dim() == 2);
  }
  SECTION("swap-action augmentation columns over F_2") {
    // (s - 1)e_1 = (1,1) and (s - 1)e_2 = (1,1) mod 2
    FpSubspace s = fp_span({{1, 1}, {1, 1}}, 2, 2);
    CHECK(s.dim() == 1);
    CHECK(s.contains(FpVec{1, 1}));
    CHECK_FALSE(s.contains(FpVec{1, 0}));
  }
  SECTION("rejects non-prime modulus") {
    CHECK_THROWS_AS(fp_span({}, 4, 1), validation_error);
  }
}

TEST_CASE("fp subspace canonical form", "[exactlin]") {
  std::mt19937 rng(5);
  for (unsigned p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t n = 1 + rng() % 4;
      std::vector<FpVec> vecs;
      for (int k = 0; k < 4; ++k) vecs.push_back(random_fp_vec(rng, p, n));
      FpSubspace s = fp_span(vecs, p, n);
      // span is order-independent
      std::reverse(vecs.begin(), vecs.end());
      CHECK(fp_span(vecs, p, n) == s);
      for (const FpVec& v : vecs) CHECK(s.contains(v));
      // every enumerated vector is a member; count matches the dimension
      auto all = s.enumerate_normalized();
      std::size_t expect = 1;
      for (std::size_t i = 0; i < s.dim(); ++i) expect *= p;
      CHECK(all.size() == (expect - 1) / (p - 1));
      for (const FpVec& v : all) CHECK(s.contains(v));
      CHECK(std::is_sorted(all.begin(), all.end()));
    }
  }
}

TEST_CASE("min cost spanning tower pinned examples", "[exactlin]") {
  SECTION("full space at cost 1") {
    auto t = min_cost_spanning_tower({{FpSubspace::full(2, 2), 1}},
                                     FpSubspace::full(2, 2));
    CHECK(t.total_cost == 2);
    CHECK(t.chosen.size() == 2);
  }
  SECTION("useless cheap subspace") {
    auto t = min_cost_spanning_tower(
        {{FpSubspace(2, 1), 1}, {FpSubspace::full(2, 1), 2}},
        FpSubspace::full(2, 1));
    CHECK(t.total_cost == 2);
    CHECK(t.chosen.size() == 1);
    CHECK(t.chosen[0].source == 1);
  }
  SECTION("rank-2 sign lattice data") {
    // invariants subspace empty at cost 1, everything at cost 2
    auto t = min_cost_spanning_tower(
        {{FpSubspace(2, 2), 1}, {FpSubspace::full(2, 2), 2}},
        FpSubspace::full(2, 2));
    CHECK(t.total_cost == 4);
    CHECK(t.chosen.size() == 2);
  }
  SECTION("infeasible target") {
    CHECK_THROWS_AS(min_cost_spanning_tower({{FpSubspace(2, 2), 1}},
                                            FpSubspace::full(2, 2)),
                    limit_error);
  }
}

TEST_CASE("greedy tower matches exhaustive search", "[exactlin][oracle]") {
  std::mt19937 rng(2026);
  int done = 0;
  for (unsigned p : {2u, 3u}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t n = 1 + rng() % 3;  // ambient dim <= 3
      std::size_t nsrc = 1 + rng() % 3;
      std::vector<std::pair<FpSubspace, unsigned long long>> sources;
      FpSubspace join(p, n);
      for (std::size_t s = 0; s < nsrc; ++s) {
        std::vector<FpVec> vecs;
        for (std::size_t k = 0; k < 1 + rng() % 2; ++k)
          vecs.push_back(random_fp_vec(rng, p, n));
        FpSubspace sub = fp_span(vecs, p, n);
        join = join.joined(sub);
        sources.emplace_back(sub, 1 + rng() % 4);
      }
      // target = join of the sources, the feasible regime
      const FpSubspace& target = join;
      if (target.dim() == 0) continue;
      auto greedy = min_cost_spanning_tower(sources, target);
      unsigned long long oracle =
          exhaustive_min_cost(sources, target, greedy.total_cost);
      REQUIRE(greedy.total_cost == oracle);
      // chosen vectors are independent and span the target
      FpSubspace w(p, n);
      for (const auto& step : greedy.chosen) {
        CHECK_FALSE(w.contains(step.vector));
        CHECK(sources[step.source].first.contains(step.vector));
        w.insert(step.vector);
      }
      CHECK(w.contains(target));
      CHECK(greedy.chosen.size() == target.dim());
      // tower is nondecreasing and ends at the join dimension
      for (std::size_t i = 1; i < greedy.levels.size(); ++i)
        CHECK(greedy.levels[i - 1].second <= greedy.levels[i].second);
      CHECK(greedy.levels.back().second == target.dim());
      ++done;
    }
  }
  CHECK(done >= 40);
}
