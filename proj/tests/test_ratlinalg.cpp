#include "doctest.h"

#include <numeric>

#include "ratlinalg/linalg.hpp"
#include "test_util.hpp"

using namespace ratlinalg;
using testutil::det_cofactor;

namespace {

// Vandermonde determinant oracle: prod_{i<j} (x_j - x_i).
Rat vandermonde_det(const std::vector<Rat>& nodes) {
  Rat p(1);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j) p *= nodes[j] - nodes[i];
  return p;
}

const Mat kVander3{{1, 1, 1}, {1, 2, 4}, {1, 3, 9}};

}  // namespace

TEST_SUITE("ratlinalg") {

TEST_CASE("rat arithmetic is exact and canonical") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Rat a = testutil::rand_rat(rng, 50, 40);
    const Rat b = testutil::rand_rat(rng, 50, 40);
    CHECK((a + b) - b == a);
    if (b != 0) CHECK((a / b) * b == a);
    CHECK(denominator(Rat(a + b)) > 0);
  }
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(numerator(Rat(-3, 6)) == -1);
  CHECK(denominator(Rat(-3, 6)) == 2);
}

TEST_CASE("rref identity") {
  const Mat i3 = Mat::identity(3);
  const auto rr = rref(i3);
  CHECK(rr.r == i3);
  CHECK(rr.pivot_cols == std::vector<int>{0, 1, 2});
  CHECK(rr.rank == 3);
}

TEST_CASE("rref proportional rows") {
  const Mat a{{1, 2}, {2, 4}};
  const auto rr = rref(a);
  CHECK(rr.r == Mat{{1, 2}, {0, 0}});
  CHECK(rr.pivot_cols == std::vector<int>{0});
  CHECK(rr.rank == 1);
}

TEST_CASE("rref vandermonde has full rank") {
  // Independent justification: the Vandermonde determinant (2-1)(3-1)(3-2) = 2.
  CHECK(vandermonde_det({Rat(1), Rat(2), Rat(3)}) == 2);
  CHECK(rref(kVander3).rank == 3);
}

TEST_CASE("rref is idempotent") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 25; ++t) {
    const Mat a = testutil::rand_rat_mat(rng, testutil::rand_int(rng, 1, 5),
                                         testutil::rand_int(rng, 1, 5));
    const Mat r = rref(a).r;
    CHECK(rref(r).r == r);
  }
}

TEST_CASE("null_basis forced kernel") {
  const Mat a{{1, 1, 0}, {0, 0, 1}};
  const Mat n = null_basis(a);
  REQUIRE(n.cols() == 1);
  CHECK(is_zero(a * n));
  // Spans {(1,-1,0)}: canonical direction of the single column.
  CHECK(canonicalize_direction(n.col(0)) == Vec{Rat(1), Rat(-1), Rat(0)});
}

TEST_CASE("null_basis trivial kernel") {
  const Mat n = null_basis(Mat::identity(2));
  CHECK(n.rows() == 2);
  CHECK(n.cols() == 0);
}

TEST_CASE("null_basis of a single row") {
  const Mat a{{1, 2, 3}};
  const Mat n = null_basis(a);
  CHECK(n.cols() == 2);
  CHECK(is_zero(a * n));
  CHECK(rank(n) == 2);
}

TEST_CASE("rank-nullity and exact kernel on random matrices") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 60; ++t) {
    const int m = testutil::rand_int(rng, 1, 5), n = testutil::rand_int(rng, 1, 5);
    const Mat a = testutil::rand_mat(rng, m, n);
    const Mat nb = null_basis(a);
    CHECK(is_zero(a * nb));
    CHECK(nb.cols() + rank(a) == n);
    CHECK(rank(nb) == nb.cols());
  }
}

TEST_CASE("particular_solution identity") {
  const Mat a = Mat::identity(3);
  const Vec b{Rat(5), Rat(-1), Rat(7, 2)};
  const auto x = particular_solution(a, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);
}

TEST_CASE("particular_solution underdetermined") {
  const Mat a{{1, 1}};
  const auto x = particular_solution(a, {Rat(3)});
  REQUIRE(x.has_value());
  CHECK(a * *x == Vec{Rat(3)});
}

TEST_CASE("particular_solution inconsistent") {
  const Mat a{{1}, {0}};
  CHECK_FALSE(particular_solution(a, {Rat(0), Rat(1)}).has_value());
}

TEST_CASE("kron definition") {
  const Mat i2 = Mat::identity(2);
  const Mat y{{1}, {2}};
  CHECK(kron(i2, y) == Mat{{1, 0}, {2, 0}, {0, 1}, {0, 2}});
  const Mat a{{1, 2}, {3, 4}};
  CHECK(kron(a, Mat{{1}}) == a);
  CHECK(kron(Mat{{1, 2}}, Mat{{3}}) == Mat{{3, 6}});
}

TEST_CASE("kron dimensions") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 20; ++t) {
    const int m = testutil::rand_int(rng, 1, 3), n = testutil::rand_int(rng, 1, 3);
    const int p = testutil::rand_int(rng, 1, 3), q = testutil::rand_int(rng, 1, 3);
    const Mat k = kron(testutil::rand_mat(rng, m, n), testutil::rand_mat(rng, p, q));
    CHECK(k.rows() == m * p);
    CHECK(k.cols() == n * q);
  }
}

TEST_CASE("det basics") {
  CHECK(det(Mat::identity(4)) == 1);
  CHECK(det(Mat{{1, 1}, {1, 2}}) == vandermonde_det({Rat(1), Rat(2)}));
  CHECK(det(Mat{{1, 2}, {2, 4}}) == 0);
  CHECK_THROWS_AS(det(Mat{{1, 2}}), std::invalid_argument);
}

TEST_CASE("det matches cofactor oracle on random 4x4") {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 25; ++t) {
    const Mat a = testutil::rand_rat_mat(rng, 4, 4);
    CHECK(det(a) == det_cofactor(a));
  }
}

TEST_CASE("pseudoinverse") {
  CHECK(pseudoinverse(Mat::identity(3)) == Mat::identity(3));
  CHECK(pseudoinverse(Mat{{2}}) == Mat{{Rat(1, 2)}});
  // Hand-check: A = [1;1], (A^T A)^{-1} A^T = (1/2)[1 1].
  CHECK(pseudoinverse(Mat{{1}, {1}}) == Mat{{Rat(1, 2), Rat(1, 2)}});
  CHECK_THROWS_AS(pseudoinverse(Mat{{1, 2}, {2, 4}}), std::invalid_argument);
}

TEST_CASE("pseudoinverse is a left inverse on random full-column-rank input") {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 20; ++t) {
    const int n = testutil::rand_int(rng, 1, 3);
    const int m = testutil::rand_int(rng, n, 5);
    const Mat a = testutil::rand_full_col_rank(rng, m, n);
    CHECK(pseudoinverse(a) * a == Mat::identity(n));
  }
}

TEST_CASE("vector norms") {
  const auto r = norms(Vec{Rat(0), Rat(-3), Rat(0), Rat(1)});
  CHECK(r.l0 == 2);
  CHECK(r.l1 == 4);
  CHECK(r.linf == 3);
  const auto z = norms(Vec{Rat(0), Rat(0)});
  CHECK(z.l0 == 0);
  CHECK(z.l1 == 0);
  CHECK(z.linf == 0);
}

TEST_CASE("matrix induced (1,1) norm") {
  const Mat a{{1, -2}, {0, 1}};
  CHECK(norms(a).induced_11 == 3);
  // Cross-check: the l1->l1 norm is attained at a signed unit basis vector.
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    const Mat b = testutil::rand_rat_mat(rng, testutil::rand_int(rng, 1, 4),
                                         testutil::rand_int(rng, 1, 4));
    Rat best;
    for (int j = 0; j < b.cols(); ++j) {
      for (int s : {-1, 1}) {
        Vec e(b.cols(), Rat(0));
        e[j] = s;
        const Rat v = norms(b * e).l1;
        if (v > best) best = v;
      }
    }
    CHECK(norms(b).induced_11 == best);
  }
}

TEST_CASE("all_subsquares_nonsingular") {
  CHECK(all_subsquares_nonsingular(kVander3, 3).all_nonsingular);
  const auto zero_entry = all_subsquares_nonsingular(Mat{{1, 0}, {1, 1}}, 2);
  CHECK_FALSE(zero_entry.all_nonsingular);
  REQUIRE(zero_entry.violation.has_value());
  CHECK(zero_entry.violation->first == std::vector<int>{0});
  CHECK(zero_entry.violation->second == std::vector<int>{1});
  CHECK_FALSE(all_subsquares_nonsingular(Mat::identity(2), 2).all_nonsingular);
}

TEST_CASE("all_subsquares_nonsingular agrees with cofactor-oracle enumeration") {
  std::mt19937_64 rng(18);
  for (int t = 0; t < 10; ++t) {
    const Mat a = testutil::rand_mat(rng, 3, 3, 2);
    bool oracle = true;
    for (int k = 1; k <= 3 && oracle; ++k) {
      std::vector<int> rows(k);
      std::iota(rows.begin(), rows.end(), 0);
      do {
        std::vector<int> cols(k);
        std::iota(cols.begin(), cols.end(), 0);
        do {
          if (det_cofactor(submatrix(a, rows, cols)) == 0) oracle = false;
        } while (oracle && next_combination(cols, 3));
      } while (oracle && next_combination(rows, 3));
    }
    CHECK(all_subsquares_nonsingular(a, 3).all_nonsingular == oracle);
  }
}

TEST_CASE("canonicalize_direction") {
  CHECK(canonicalize_direction(Vec{Rat(-2), Rat(1)}) == Vec{Rat(2), Rat(-1)});
  CHECK(canonicalize_direction(Vec{Rat(1, 2), Rat(1, 3)}) == Vec{Rat(3), Rat(2)});
  CHECK(canonicalize_direction(Vec{Rat(0), Rat(0)}) == Vec{Rat(0), Rat(0)});
}

TEST_CASE("empty shapes are legal values") {
  const Mat a(0, 3);
  CHECK(rank(a) == 0);
  CHECK(null_basis(a) == Mat::identity(3));
  const Mat b(2, 0);
  CHECK(rank(b) == 0);
  CHECK(null_basis(b).cols() == 0);
  CHECK(nnz(a) == 0);
}

}  // TEST_SUITE
