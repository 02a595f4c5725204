#pragma once

// Exact polynomials in u = q^{-1} with arbitrary precision integer
// coefficients. Every q-deformed quantity in this library lives in Z[u].

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <json.hpp>

namespace qaffine {

class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT: constants convert implicitly
  QPoly(const mpz_class& c);  // NOLINT
  QPoly(std::initializer_list<long> coeffs);
  explicit QPoly(std::vector<mpz_class> coeffs);

  static QPoly u() { return QPoly{0, 1}; }
  static QPoly monomial(const mpz_class& c, std::size_t power);
  static QPoly one_minus_u_pow(unsigned r);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  // Coefficient of u^i, zero beyond the degree.
  mpz_class coeff(std::size_t i) const;
  bool is_constant() const { return coeffs_.size() <= 1; }
  mpz_class constant_term() const { return coeff(0); }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const mpz_class& c);
  QPoly operator-() const;

  // this += a * b without temporaries.
  void add_mul(const QPoly& a, const QPoly& b);
  // this += c * u^shift * a.
  void add_scaled_shift(const QPoly& a, const mpz_class& c, std::size_t shift);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const mpz_class& c) { return a *= c; }
  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Human readable form, e.g. "276*u^2 - 24*u".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<mpz_class> coeffs_;
};

QPoly pow(const QPoly& p, unsigned e);

// Exact substitution of a rational value for u. u = 0 is the q -> infinity
// limit, u = 1 is q = 1 and u = -1 is q = -1.
mpq_class eval_at(const QPoly& p, const mpq_class& u);
mpz_class eval_at(const QPoly& p, long u);

// Returns s with p = (1 - u)^r * s. Throws NotDivisible otherwise.
QPoly exact_div_pow_one_minus_u(const QPoly& p, unsigned r);

// Largest r such that (1 - u)^r divides p; p must be nonzero.
unsigned one_minus_u_valuation(const QPoly& p);

std::string to_string(const mpq_class& q);

// {"var":"u","coeffs":["c0","c1",...]} with decimal string integers.
nlohmann::json to_json(const QPoly& p);
QPoly qpoly_from_json(const nlohmann::json& j);

}  // namespace qaffine
