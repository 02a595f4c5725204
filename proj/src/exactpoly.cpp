#include "qaffine/exactpoly.hpp"

#include <sstream>

#include "qaffine/errors.hpp"

namespace qaffine {

QPoly::QPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

QPoly::QPoly(const mpz_class& c) {
  if (c != 0) coeffs_.push_back(c);
}

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

QPoly::QPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

QPoly QPoly::monomial(const mpz_class& c, std::size_t power) {
  QPoly p;
  if (c == 0) return p;
  p.coeffs_.resize(power + 1);
  p.coeffs_[power] = c;
  return p;
}

QPoly QPoly::one_minus_u_pow(unsigned r) {
  // Binomial row with alternating signs.
  std::vector<mpz_class> c(r + 1);
  mpz_class b = 1;
  for (unsigned k = 0; k <= r; ++k) {
    c[k] = (k % 2 == 0) ? b : mpz_class(-b);
    b = b * (r - k) / (k + 1);
  }
  return QPoly(std::move(c));
}

mpz_class QPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  r.add_mul(a, b);
  return r;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  *this = *this * o;
  return *this;
}

QPoly& QPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

void QPoly::add_mul(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  const std::size_t n = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (coeffs_.size() < n) coeffs_.resize(n);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
    }
  }
  normalize();
}

void QPoly::add_scaled_shift(const QPoly& a, const mpz_class& c,
                             std::size_t shift) {
  if (a.is_zero() || c == 0) return;
  const std::size_t n = a.coeffs_.size() + shift;
  if (coeffs_.size() < n) coeffs_.resize(n);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    mpz_addmul(coeffs_[i + shift].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
               c.get_mpz_t());
  }
  normalize();
}

std::string QPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "u";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

QPoly pow(const QPoly& p, unsigned e) {
  QPoly result(1L);
  QPoly base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

mpq_class eval_at(const QPoly& p, const mpq_class& u) {
  mpq_class acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * u + mpq_class(c[k]);
  }
  acc.canonicalize();
  return acc;
}

mpz_class eval_at(const QPoly& p, long u) {
  mpz_class acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * u + c[k];
  return acc;
}

namespace {

// p = (1 - u) s  <=>  s_i = p_0 + ... + p_i, with p(1) = 0.
bool divide_once(const std::vector<mpz_class>& p, std::vector<mpz_class>& s) {
  s.assign(p.empty() ? 0 : p.size() - 1, 0);
  mpz_class running = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    running += p[i];
    if (i + 1 < p.size()) s[i] = running;
  }
  return running == 0;
}

}  // namespace

QPoly exact_div_pow_one_minus_u(const QPoly& p, unsigned r) {
  std::vector<mpz_class> cur = p.coeffs();
  std::vector<mpz_class> next;
  for (unsigned step = 0; step < r; ++step) {
    if (cur.empty()) return QPoly();
    if (!divide_once(cur, next)) {
      throw NotDivisible("(1-u)^" + std::to_string(r) + " does not divide " +
                         p.to_string() + " (fails at power " +
                         std::to_string(step + 1) + ")");
    }
    cur.swap(next);
  }
  return QPoly(std::move(cur));
}

unsigned one_minus_u_valuation(const QPoly& p) {
  std::vector<mpz_class> cur = p.coeffs();
  std::vector<mpz_class> next;
  unsigned r = 0;
  while (!cur.empty() && divide_once(cur, next)) {
    cur.swap(next);
    ++r;
  }
  return r;
}

std::string to_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

nlohmann::json to_json(const QPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return {{"var", "u"}, {"coeffs", coeffs}};
}

QPoly qpoly_from_json(const nlohmann::json& j) {
  if (j.at("var") != "u") throw Error("QPoly json: unexpected variable");
  std::vector<mpz_class> c;
  for (const auto& x : j.at("coeffs")) {
    if (x.is_string()) {
      c.emplace_back(x.get<std::string>());
    } else {
      c.emplace_back(x.get<long>());
    }
  }
  return QPoly(std::move(c));
}

}  // namespace qaffine
