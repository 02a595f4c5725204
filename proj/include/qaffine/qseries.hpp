#pragma once

// Truncated power series in t with coefficients in Z[u], and the
// q-deformed partition and multi-partition functions built from them.

#include <gmpxx.h>

#include <vector>

#include "qaffine/exactpoly.hpp"
#include "qaffine/report.hpp"

namespace qaffine {

class TSeries {
 public:
  // The zero series with coefficients t^0 .. t^order.
  explicit TSeries(int order);
  TSeries(int order, std::vector<QPoly> coeffs);
  static TSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const QPoly& operator[](int k) const { return coeffs_.at(k); }
  QPoly& operator[](int k) { return coeffs_.at(k); }
  const std::vector<QPoly>& coeffs() const { return coeffs_; }

  TSeries truncated(int order) const;

  // Mixed-order arithmetic truncates at the smaller order.
  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend bool operator==(const TSeries& a, const TSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // this *= (1 + c t^k)
  void mul_binomial(const QPoly& c, int k);
  // this /= (1 - c t^k)
  void div_binomial(const QPoly& c, int k);

  std::vector<mpq_class> eval_at(const mpq_class& u) const;

 private:
  std::vector<QPoly> coeffs_;
};

// Newton iteration; the constant term must be +1 or -1.
TSeries reciprocal(const TSeries& a);
TSeries pow(const TSeries& a, int e);

enum class Deform { WithU, WithoutU };
enum class Direction { Direct, Inverse };

// prod_{k=1}^{T} (1 - [u] t^k)^{+-n} truncated at t^T.
TSeries euler_product(int n, Deform deform, Direction dir, int order);

// eps_{q,n}(k): coefficient of t^k in prod (1 - u t^k)^n. For k <= 40 the
// value is recomputed by summing kappa_q over multi-partitions and the two
// must agree.
QPoly epsilon_qn(int n, int k);
// Series of eps_{q,n} by enumeration: kappa_q summed over partitions,
// combined across the n components.
TSeries epsilon_qn_series_by_enumeration(int n, int order);

// p_{q,n}(k) = sum over multi-partitions of weight k of (1-u)^{d}.
QPoly p_qn(int n, int k);
// prod_k (1 + (1-u)(t^k + t^{2k} + ...))^n.
TSeries p_qn_series(int n, int order);
TSeries p_qn_series_by_enumeration(int n, int order);

// (-1)^m if k = m(3m +- 1)/2, 0 otherwise.
int pentagonal_epsilon(long k);

inline constexpr int kDefaultIdentityOrder = 50;
inline constexpr int kDefaultTauOrder = 200;

// tau(k) as the t^{k-1} coefficient of prod (1 - t^j)^24 truncated at
// `order`; OrderExceeded when k > order + 1.
mpz_class ramanujan_tau(int k, int order = kDefaultTauOrder);

// sum_{n=0}^{T} (u;t)_n / (t;t)_n t^n.
TSeries q_pochhammer_sum(int order);

Report verify_single_partition_recurrence(int order);
Report verify_multi_recurrence(int n, int order);
Report verify_q_binomial(int order);
Report verify_pentagonal(int order);
Report verify_reference_values();

}  // namespace qaffine
