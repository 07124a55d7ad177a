#include <doctest.h>

#include <random>

#include "octavo/polynomial.hpp"
#include "octavo/q_analogs.hpp"
#include "oracles.hpp"

using namespace octavo;

namespace {

UniPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 6), coeff(-9, 9);
  std::vector<BigInt> c(deg(rng) + 1);
  for (auto& x : c) x = coeff(rng);
  return UniPoly(std::move(c));
}

BiPoly random_bipoly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 3);
  std::vector<UniPoly> t(deg(rng) + 1);
  for (auto& p : t) p = random_poly(rng);
  return BiPoly(std::move(t));
}

BiPoly xt_plus_one() {
  BiPoly p;
  p.add_term(0, 0, 1);
  p.add_term(1, 1, 1);
  return p;
}

// Product formula evaluated by hand-written products, independent of
// q_analogs.cpp.
UniPoly bracket(int m) { return m == 0 ? UniPoly{1} : UniPoly{1} - UniPoly::monomial(1, m); }

}  // namespace

TEST_CASE("normalization and text form") {
  CHECK(UniPoly{0, 0}.is_zero());
  CHECK(UniPoly{}.degree() == -1);
  CHECK(UniPoly{1, 0, -1, 0, 0, 3}.to_string() == "1 - X^2 + 3*X^5");
  CHECK(UniPoly{0, -1}.to_string() == "-X");
  CHECK(UniPoly{-2, 1}.to_string() == "-2 + X");
  CHECK(UniPoly{}.to_string() == "0");
  auto j = UniPoly{1, 0, -1, 0, 0, 3}.to_json();
  CHECK(j.dump() == R"({"coeffs":["1","0","-1","0","0","3"]})");
  CHECK(UniPoly::from_json(j) == UniPoly{1, 0, -1, 0, 0, 3});
}

TEST_CASE("big coefficients do not overflow") {
  UniPoly p{1, 1};
  UniPoly acc{1};
  for (int i = 0; i < 200; ++i) acc *= p;
  CHECK(acc.coefficient(200) == 1);
  BigInt expected = 1;
  for (int i = 0; i < 200; ++i) expected *= 2;
  BigInt sum = 0;
  for (const auto& c : acc.coeffs()) sum += c;
  CHECK(sum == expected);
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == UniPoly{});
    auto A = random_bipoly(rng), B = random_bipoly(rng), C = random_bipoly(rng);
    CHECK((A * B) * C == A * (B * C));
    CHECK(A * (B + C) == A * B + A * C);
    CHECK(A * B == B * A);
    CHECK((A * B).at_t_minus_one() == A.at_t_minus_one() * B.at_t_minus_one());
  }
}

TEST_CASE("exact division") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_poly(rng);
    auto b = UniPoly{1} - UniPoly::monomial(1, 1 + trial % 5);
    CHECK(exact_divide(a * b, b) == a);
    auto r = divide(a, b);
    CHECK(r.quotient * b + r.remainder == a);
    CHECK(r.remainder.degree() < b.degree());
  }
  CHECK_THROWS_AS(exact_divide(UniPoly{1, 1}, UniPoly{1, 0, 1}), std::domain_error);
  CHECK_THROWS_AS(divide(UniPoly{1}, UniPoly{}), std::domain_error);
}

TEST_CASE("q brackets and factorials") {
  CHECK(q_bracket(0) == UniPoly{1});
  CHECK(q_bracket(3) == UniPoly{1, 0, 0, -1});
  CHECK(q_double_factorial(4) == UniPoly{1, 0, -1} * UniPoly{1, 0, 0, 0, -1});
  CHECK(q_double_factorial(5) == q_double_factorial(4));
  CHECK(q_double_factorial(1) == UniPoly{1});
  CHECK(q_factorial(3) == bracket(1) * bracket(2) * bracket(3));
  for (int m = 0; m <= 9; ++m) {
    UniPoly odd{1};
    for (int i = 1; i <= m; i += 2) odd *= bracket(i);
    CHECK(q_factorial(m) == q_double_factorial(m) * odd);
  }
}

TEST_CASE("gaussian multinomial") {
  std::vector<int> parts{2, 1};
  // [3 choose 1]_X = 1 + X + X^2.
  CHECK(gaussian_multinomial(3, parts) == UniPoly{1, 1, 1});
  std::vector<int> bad{1, 1};
  CHECK_THROWS_AS(gaussian_multinomial(3, bad), std::invalid_argument);
}

TEST_CASE("f on small cases") {
  CHECK(f_poly(1, IndexSet(1)) == UniPoly{1});
  CHECK(f_poly(1, IndexSet(1, {0})) == UniPoly{1, -1});
  CHECK(f_poly(2, IndexSet(2, {0})) == UniPoly{1, -1});
  std::vector<int> negative{-1, 2};
  CHECK(f_poly(4, negative).is_zero());
  CHECK(f_poly_alternate(1, IndexSet(1)) == UniPoly{1});
  CHECK(f_poly_alternate(2, IndexSet(2, {0})) == UniPoly{1, -1});
  // An entry equal to n merges with the terminal n.
  std::vector<int> with_top{1, 3};
  CHECK(f_poly(3, with_top) == f_poly(3, IndexSet(3, {1})));
  std::vector<int> too_big{5};
  CHECK_THROWS_AS(f_poly(3, too_big), std::invalid_argument);
}

TEST_CASE("f by direct products") {
  // f_{4,{1,2}}: (4)! / ((1)! (1)!! (2)!!) = (2)(3)(4) / (2).
  CHECK(f_poly(4, IndexSet(4, {1, 2})) == bracket(3) * bracket(4));
  // f_{4,{0,2}}: (4)! / ((0)! (2)!! (2)!!).
  CHECK(f_poly(4, IndexSet(4, {0, 2})) == exact_divide(bracket(1) * bracket(2) * bracket(3) * bracket(4),
                                                         bracket(2) * bracket(2)));
}

TEST_CASE("denominators divide (n)! and both forms agree for n <= 8") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& I : all_subsets(n)) {
      auto f = f_poly(n, I);
      CHECK(f == f_poly_alternate(n, I));
      CHECK(f.coefficient(0) == 1);
    }
}

TEST_CASE("index shift") {
  auto I = IndexSet(10, {0, 4, 7, 9});
  CHECK(i_shift(I, 5) == std::vector<int>{0, 4, 7, 9});
  CHECK(i_shift(IndexSet(8, {2, 6}), 2) == std::vector<int>{2, 5});
  CHECK(i_shift(IndexSet(8, {2, 3}), 2) == std::vector<int>{2});
  CHECK(i_shift(IndexSet(8, {0, 3}), 1) == std::vector<int>{-1, 2});
  CHECK(i_shift(IndexSet(8, {2, 6}), 1) == std::vector<int>{1, 5});
  CHECK_THROWS_AS(i_shift(I, 0), std::invalid_argument);
  CHECK_THROWS_AS(i_shift(I, 6), std::invalid_argument);
}

TEST_CASE("recursion") {
  CHECK(f_recursion_check(2, IndexSet(2, {0})));
  // Every consecutive difference even: the branch without the -X^n term.
  CHECK(last_odd_gap_index(IndexSet(4, {0, 2})) == 0);
  CHECK(f_recursion_check(4, IndexSet(4, {0, 2})));
  CHECK(last_odd_gap_index(IndexSet(4, {1, 2})) == 1);
  CHECK(last_odd_gap_index(IndexSet(5, {1, 2})) == 2);
  int with_odd = 0, without = 0;
  for (int n = 2; n <= 10; ++n)
    for (const auto& I : all_subsets(n)) {
      (last_odd_gap_index(I) > 0 ? with_odd : without)++;
      CHECK(f_recursion_check(n, I));
    }
  CHECK(with_odd > 0);
  CHECK(without > 0);
}

TEST_CASE("divisibility by Xt + 1") {
  CHECK(divides_xt_plus_one(xt_plus_one()));
  BiPoly one;
  one.add_term(0, 0, 1);
  CHECK_FALSE(divides_xt_plus_one(one));
  BiPoly rank_one = xt_plus_one();  // 1 + tX
  CHECK(divides_xt_plus_one(rank_one));
  BiPoly t_only;
  t_only.add_term(1, 0, 1);
  CHECK_FALSE(divides_xt_plus_one(t_only));
}

TEST_CASE("substitution criterion matches explicit quotient construction") {
  std::mt19937 rng(99);
  int divisible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    BiPoly p = random_bipoly(rng);
    if (trial % 2 == 0) p = p * xt_plus_one();
    const bool by_criterion = divides_xt_plus_one(p);
    CHECK(by_criterion == oracle::xt_plus_one_divides_by_quotient(p));
    divisible += by_criterion;
  }
  CHECK(divisible >= 200);
}

TEST_CASE("bivariate JSON form") {
  BiPoly p = xt_plus_one();
  CHECK(p.to_json().dump() == R"([["1"],["0","1"]])");
  CHECK(p.at_t_minus_one() == UniPoly{1, -1});
}
