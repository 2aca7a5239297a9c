#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgr/matrix.hpp"

using namespace qgr;

TEST_CASE("rref, rank and kernels") {
  RatMatrix m(3, 4);
  int vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 0, 1, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = vals[i][j];
  CHECK(rank(m) == 2);

  auto k = right_kernel(m);
  CHECK(k.cols() == 2);
  for (std::size_t c = 0; c < k.cols(); ++c) {
    std::vector<Rat> z(4);
    for (std::size_t r = 0; r < 4; ++r) z[r] = k(r, c);
    for (const auto& x : mat_vec(m, z)) CHECK(x == 0);
  }

  auto lk = left_kernel(m);
  CHECK(lk.rows() == 1);
  for (std::size_t r = 0; r < lk.rows(); ++r) {
    std::vector<Rat> x(3);
    for (std::size_t c = 0; c < 3; ++c) x[c] = lk(r, c);
    for (const auto& v : vec_mat(x, m)) CHECK(v == 0);
  }
}

TEST_CASE("solve consistent and inconsistent systems") {
  RatMatrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 1;
  a(1, 1) = 1;
  auto x = solve(a, {Rat(3), Rat(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 2);

  RatMatrix b(2, 1);
  b(0, 0) = 1;
  b(1, 0) = 1;
  CHECK(!solve(b, {Rat(1), Rat(2)}).has_value());
}

TEST_CASE("integer matrix power") {
  IntMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 1;
  m(1, 1) = 1;
  auto p = m.pow(41);
  CHECK(p(0, 1) == 41);
  CHECK(p(0, 0) == 1);
  CHECK(p(1, 0) == 0);
}

TEST_CASE("unipotent inverse and signed powers") {
  IntMatrix n = IntMatrix::identity(3);
  n(0, 1) = 2;
  n(0, 2) = -1;
  n(1, 2) = 5;
  CHECK(n * unipotent_inverse(n) == IntMatrix::identity(3));
  CHECK(unipotent_power(n, Int(-3)) * n.pow(3) == IntMatrix::identity(3));
}

TEST_CASE("binomial polynomial evaluation matches falling factorials") {
  // p(z) = C(z,0) + 3 C(z,2)
  BinomialPolynomial p({Rat(1), Rat(0), Rat(3)});
  CHECK(p.eval(Int(0)) == 1);
  CHECK(p.eval(Int(2)) == 4);
  CHECK(p.eval(Int(-2)) == Rat(1) + Rat(3) * 3);  // C(-2,2) = 3
  CHECK(p.degree() == 2);
  auto mono = p.monomial_coeffs();
  // 1 + 3 z(z-1)/2 = 1 - (3/2) z + (3/2) z^2
  REQUIRE(mono.size() == 3);
  CHECK(mono[0] == 1);
  CHECK(mono[1] == Rat(-3, 2));
  CHECK(mono[2] == Rat(3, 2));
  CHECK(p.leading_monomial_coeff() == Rat(3, 2));
}

TEST_CASE("real root bound gives stable sign beyond it") {
  // z^2 - 13 z + 30 = 30 C(z,0) - 12 C(z,1) + 2 C(z,2), roots 3 and 10
  BinomialPolynomial p({Rat(30), Rat(-12), Rat(2)});
  CHECK(p.eval(Int(10)) == 0);
  CHECK(p.eval(Int(3)) == 0);
  Int b = p.real_root_bound();
  CHECK(p.eval(b + 1) > 0);
  CHECK(p.eval(b + 100) > 0);
}
