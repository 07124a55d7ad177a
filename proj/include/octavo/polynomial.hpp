#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

namespace octavo {

using BigInt = boost::multiprecision::cpp_int;

// Dense polynomial in X over the integers; coeffs()[d] is the X^d
// coefficient. Trailing zeros are always stripped.
class UniPoly {
public:
  UniPoly() = default;
  UniPoly(std::initializer_list<long long> coeffs);
  explicit UniPoly(std::vector<BigInt> coeffs);
  static UniPoly constant(BigInt c);
  static UniPoly monomial(BigInt c, int degree);
  static UniPoly from_counts(const std::vector<std::int64_t>& counts);

  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt coefficient(int d) const;
  // Lowest degree with a nonzero coefficient, -1 for zero.
  int valuation() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  UniPoly operator-() const;
  UniPoly shifted(int degrees) const;  // times X^degrees

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  // "1 - X^2 + 3*X^5"; "0" for the zero polynomial.
  std::string to_string() const;
  nlohmann::json to_json() const;
  static UniPoly from_json(const nlohmann::json& j);

private:
  void normalize();
  std::vector<BigInt> c_;
};

struct DivisionResult {
  UniPoly quotient;
  UniPoly remainder;
};

// Division over Z[X]; requires each quotient step to be integral, which
// holds whenever the divisor's leading coefficient is +-1. Throws
// std::domain_error otherwise or on division by zero.
DivisionResult divide(const UniPoly& a, const UniPoly& b);
// Throws std::domain_error if the remainder is nonzero.
UniPoly exact_divide(const UniPoly& a, const UniPoly& b);

// Polynomial in t whose coefficients are UniPoly in X; terms()[k] is the
// coefficient of t^k.
class BiPoly {
public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> terms);

  const std::vector<UniPoly>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int t_degree() const { return static_cast<int>(t_.size()) - 1; }
  UniPoly t_coefficient(int k) const;
  void add_term(int t_power, int x_power, const BigInt& c);

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  UniPoly at_t_minus_one() const;
  std::string to_string() const;
  nlohmann::json to_json() const;

private:
  void normalize();
  std::vector<UniPoly> t_;
};

// Whether X*t + 1 divides p in Z[X, t]. Writing p = sum_k c_k(X) t^k with
// N = deg_t p, this holds iff sum_k (-1)^k c_k(X) X^{N-k} = 0.
bool divides_xt_plus_one(const BiPoly& p);

}  // namespace octavo
