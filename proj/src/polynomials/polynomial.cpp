#include "octavo/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace octavo {

UniPoly::UniPoly(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) c_.emplace_back(c);
  normalize();
}

UniPoly::UniPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::constant(BigInt c) { return UniPoly(std::vector<BigInt>{std::move(c)}); }

UniPoly UniPoly::monomial(BigInt c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(c);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::from_counts(const std::vector<std::int64_t>& counts) {
  std::vector<BigInt> v(counts.begin(), counts.end());
  return UniPoly(std::move(v));
}

void UniPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt UniPoly::coefficient(int d) const {
  if (d < 0 || d >= static_cast<int>(c_.size())) return 0;
  return c_[d];
}

int UniPoly::valuation() const {
  for (std::size_t d = 0; d < c_.size(); ++d)
    if (c_[d] != 0) return static_cast<int>(d);
  return -1;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t d = 0; d < o.c_.size(); ++d) c_[d] += o.c_[d];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t d = 0; d < o.c_.size(); ++d) c_[d] -= o.c_[d];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<BigInt> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  normalize();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly UniPoly::shifted(int degrees) const {
  if (degrees < 0) throw std::invalid_argument("negative shift");
  if (c_.empty()) return {};
  std::vector<BigInt> v(degrees);
  v.insert(v.end(), c_.begin(), c_.end());
  return UniPoly(std::move(v));
}

std::string UniPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t d = 0; d < c_.size(); ++d) {
    const BigInt& c = c_[d];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (d == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += "X";
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

nlohmann::json UniPoly::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : c_) coeffs.push_back(c.str());
  return {{"coeffs", coeffs}};
}

UniPoly UniPoly::from_json(const nlohmann::json& j) {
  std::vector<BigInt> v;
  for (const auto& s : j.at("coeffs")) v.emplace_back(s.get<std::string>());
  return UniPoly(std::move(v));
}

DivisionResult divide(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<BigInt> rem = a.coeffs();
  const auto& d = b.coeffs();
  const int db = b.degree();
  const BigInt& lead = d.back();
  int dr = static_cast<int>(rem.size()) - 1;
  std::vector<BigInt> quo(dr >= db ? dr - db + 1 : 0);
  for (; dr >= db; --dr) {
    if (rem[dr] == 0) continue;
    if (rem[dr] % lead != 0) throw std::domain_error("polynomial division leaves the integers");
    BigInt q = rem[dr] / lead;
    quo[dr - db] = q;
    for (int i = 0; i <= db; ++i) rem[dr - db + i] -= q * d[i];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly exact_divide(const UniPoly& a, const UniPoly& b) {
  auto r = divide(a, b);
  if (!r.remainder.is_zero())
    throw std::domain_error("inexact division: (" + a.to_string() + ") / (" + b.to_string() + ")");
  return r.quotient;
}

BiPoly::BiPoly(std::vector<UniPoly> terms) : t_(std::move(terms)) { normalize(); }

void BiPoly::normalize() {
  while (!t_.empty() && t_.back().is_zero()) t_.pop_back();
}

UniPoly BiPoly::t_coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(t_.size())) return {};
  return t_[k];
}

void BiPoly::add_term(int t_power, int x_power, const BigInt& c) {
  if (t_power >= static_cast<int>(t_.size())) t_.resize(t_power + 1);
  t_[t_power] += UniPoly::monomial(c, x_power);
  normalize();
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.t_.size() > t_.size()) t_.resize(o.t_.size());
  for (std::size_t k = 0; k < o.t_.size(); ++k) t_[k] += o.t_[k];
  normalize();
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  if (t_.empty() || o.t_.empty()) {
    t_.clear();
    return *this;
  }
  std::vector<UniPoly> out(t_.size() + o.t_.size() - 1);
  for (std::size_t i = 0; i < t_.size(); ++i)
    for (std::size_t j = 0; j < o.t_.size(); ++j) out[i + j] += t_[i] * o.t_[j];
  t_ = std::move(out);
  normalize();
  return *this;
}

UniPoly BiPoly::at_t_minus_one() const {
  UniPoly sum;
  for (std::size_t k = 0; k < t_.size(); ++k) {
    if (k % 2 == 0)
      sum += t_[k];
    else
      sum -= t_[k];
  }
  return sum;
}

std::string BiPoly::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < t_.size(); ++k) {
    if (t_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string coeff = t_[k].to_string();
    if (k == 0) {
      out += "(" + coeff + ")";
      continue;
    }
    out += "(" + coeff + ")*t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

nlohmann::json BiPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& p : t_) terms.push_back(p.to_json().at("coeffs"));
  return terms;
}

bool divides_xt_plus_one(const BiPoly& p) {
  if (p.is_zero()) return true;
  const int top = p.t_degree();
  UniPoly acc;
  for (int k = 0; k <= top; ++k) {
    UniPoly term = p.t_coefficient(k).shifted(top - k);
    if (k % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc.is_zero();
}

}  // namespace octavo
