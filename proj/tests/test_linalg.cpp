#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "algebroid/combinatorics.hpp"
#include "algebroid/matrix.hpp"

using namespace algebroid;

namespace {

// Independent dense Gaussian elimination oracle for rank (no pivoting tricks,
// no reuse of the library's echelon code path).
int rank_oracle(std::vector<QVec> rows, int cols) {
  int r = 0;
  for (int c = 0; c < cols; ++c) {
    int sel = -1;
    for (size_t i = r; i < rows.size(); ++i)
      if (rows[i][c] != 0) {
        sel = static_cast<int>(i);
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (int j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
    if (r == static_cast<int>(rows.size())) break;
  }
  return r;
}

MatrixQ random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  MatrixQ m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      int n = num(rng);
      if (n != 0) m.set(i, j, Rational(n, den(rng)));
    }
  return m;
}

}  // namespace

TEST_CASE("kernel of the identity is trivial") {
  CHECK(kernel_basis(MatrixQ::identity(2)).empty());
}

TEST_CASE("kernel of [1 1]") {
  MatrixQ m(1, 2);
  m.set(0, 0, 1);
  m.set(0, 1, 1);
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == QVec{Rational(1), Rational(-1)});
}

TEST_CASE("kernel dimension against an independent row-reduction oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    MatrixQ m = random_matrix(rng, 5, 7);
    int rk = rank_oracle(m.dense_rows(), 7);
    auto k = kernel_basis(m);
    CHECK(static_cast<int>(k.size()) == 7 - rk);
    for (const auto& v : k) CHECK(is_zero(m.apply(v)));
  }
}

TEST_CASE("rank-nullity holds exactly") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    MatrixQ m = random_matrix(rng, 4, 6);
    CHECK(static_cast<int>(kernel_basis(m).size()) + rank(m) == m.cols());
  }
}

TEST_CASE("solve_linear with identity returns the rhs") {
  QVec b{Rational(3, 2), Rational(-1), Rational(0), Rational(5)};
  auto x = solve_linear(MatrixQ::identity(4), b);
  REQUIRE(x);
  CHECK(*x == b);
}

TEST_CASE("solve_linear reports no solution for 0 x = b, b nonzero") {
  MatrixQ m(2, 3);
  QVec b{Rational(1), Rational(0)};
  CHECK_FALSE(solve_linear(m, b).has_value());
}

TEST_CASE("solve_linear residual vanishes on consistent systems") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    MatrixQ m = random_matrix(rng, 4, 6);
    QVec hidden(6);
    std::uniform_int_distribution<int> num(-2, 2);
    for (auto& v : hidden) v = num(rng);
    QVec b = m.apply(hidden);
    auto x = solve_linear(m, b);
    REQUIRE(x);
    CHECK(m.apply(*x) == b);
  }
}

TEST_CASE("subquotient with cycles equal to boundaries is zero") {
  std::vector<QVec> vs = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  CHECK(subquotient(vs, vs, 2).dim() == 0);
}

TEST_CASE("subquotient with no boundaries has full dimension") {
  std::vector<QVec> vs = {{Rational(1), Rational(2)}, {Rational(0), Rational(1)}};
  auto sq = subquotient(vs, {}, 2);
  CHECK(sq.dim() == 2);
}

TEST_CASE("subquotient of a 3-space by a line") {
  std::vector<QVec> cycles = {unit_vec(4, 0), unit_vec(4, 1), unit_vec(4, 2)};
  std::vector<QVec> boundaries = {vadd(unit_vec(4, 0), unit_vec(4, 1))};
  auto sq = subquotient(cycles, boundaries, 4);
  CHECK(sq.dim() == 2);
  // Representatives reduce to zero under boundary projection: their classes
  // are independent and boundary coordinates vanish.
  for (const auto& r : sq.representative_basis) {
    auto c = sq.coords(r);
    CHECK(!is_zero(c));
  }
  CHECK(sq.is_boundary(boundaries[0]));
}

TEST_CASE("subquotient rejects boundaries outside the cycle span") {
  std::vector<QVec> cycles = {unit_vec(3, 0)};
  std::vector<QVec> boundaries = {unit_vec(3, 1)};
  CHECK_THROWS_AS(subquotient(cycles, boundaries, 3), Error);
}

TEST_CASE("subquotient is idempotent under re-normalization") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    MatrixQ m = random_matrix(rng, 5, 5);
    std::vector<QVec> cycles = m.dense_rows();
    std::vector<QVec> boundaries;
    for (int i = 0; i < 2; ++i) {
      QVec w = zero_vec(5);
      std::uniform_int_distribution<int> c(-2, 2);
      for (const auto& row : cycles) vaxpy(w, c(rng), row);
      boundaries.push_back(w);
    }
    auto sq = subquotient(cycles, boundaries, 5);
    auto sq2 = subquotient(sq.cycle_basis, sq.boundary_basis, 5);
    CHECK(sq2.representative_basis == sq.representative_basis);
    CHECK(sq2.cycle_basis == sq.cycle_basis);
    CHECK(sq2.boundary_basis == sq.boundary_basis);
  }
}

TEST_CASE("span intersection and preimage") {
  std::vector<QVec> a = {unit_vec(3, 0), unit_vec(3, 1)};
  std::vector<QVec> b = {unit_vec(3, 1), unit_vec(3, 2)};
  auto inter = span_intersection(a, b, 3);
  REQUIRE(inter.size() == 1);
  CHECK(inter[0] == unit_vec(3, 1));

  MatrixQ m(2, 2);
  m.set(0, 0, 1);
  m.set(1, 1, 1);
  auto pre = preimage_basis(m, {unit_vec(2, 0)});
  REQUIRE(pre.size() == 1);
  CHECK(pre[0] == unit_vec(2, 0));
}

TEST_CASE("increasing tuples and ranks") {
  auto ts = increasing_tuples(4, 2);
  CHECK(ts.size() == 6);
  for (size_t i = 0; i < ts.size(); ++i) CHECK(tuple_rank(ts[i], 4) == static_cast<int>(i));
}

TEST_CASE("sort_sign computes parity and detects repeats") {
  std::vector<int> t{2, 0, 1};
  CHECK(sort_sign(t) == 1);
  CHECK(t == std::vector<int>{0, 1, 2});
  std::vector<int> u{1, 0};
  CHECK(sort_sign(u) == -1);
  std::vector<int> r{0, 0};
  CHECK(sort_sign(r) == 0);
}

TEST_CASE("shuffles carry the right signs") {
  auto sh = shuffles(1, 1);
  REQUIRE(sh.size() == 2);
  CHECK(sh[0].sign == 1);
  CHECK(sh[1].sign == -1);
  // Sum over all (p,q)-shuffle signs of a known case: (2,1) has 3 shuffles.
  CHECK(shuffles(2, 1).size() == 3);
}
