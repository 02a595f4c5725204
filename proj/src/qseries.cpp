#include "qaffine/qseries.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

#include "qaffine/errors.hpp"
#include "qaffine/partitions.hpp"

namespace qaffine {

TSeries::TSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  coeffs_.resize(order + 1);
}

TSeries::TSeries(int order, std::vector<QPoly> coeffs) : TSeries(order) {
  for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) {
    coeffs_[k] = std::move(coeffs[k]);
  }
}

TSeries TSeries::one(int order) {
  TSeries s(order);
  s.coeffs_[0] = QPoly(1L);
  return s;
}

TSeries TSeries::truncated(int order) const {
  TSeries s(order);
  for (int k = 0; k <= std::min(order, this->order()); ++k) s.coeffs_[k] = coeffs_[k];
  return s;
}

TSeries& TSeries::operator+=(const TSeries& o) {
  if (o.order() < order()) coeffs_.resize(o.order() + 1);
  for (int k = 0; k <= order(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  if (o.order() < order()) coeffs_.resize(o.order() + 1);
  for (int k = 0; k <= order(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  const int n = std::min(a.order(), b.order());
  TSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) r.coeffs_[i + j].add_mul(a.coeffs_[i], b.coeffs_[j]);
  }
  return r;
}

void TSeries::mul_binomial(const QPoly& c, int k) {
  if (k <= 0) throw std::invalid_argument("mul_binomial needs k >= 1");
  for (int m = order(); m >= k; --m) coeffs_[m].add_mul(c, coeffs_[m - k]);
}

void TSeries::div_binomial(const QPoly& c, int k) {
  if (k <= 0) throw std::invalid_argument("div_binomial needs k >= 1");
  for (int m = k; m <= order(); ++m) coeffs_[m].add_mul(c, coeffs_[m - k]);
}

std::vector<mpq_class> TSeries::eval_at(const mpq_class& u) const {
  std::vector<mpq_class> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(qaffine::eval_at(c, u));
  return out;
}

TSeries reciprocal(const TSeries& a) {
  const QPoly& c0 = a[0];
  if (!c0.is_constant() || (c0.constant_term() != 1 && c0.constant_term() != -1)) {
    throw std::domain_error("reciprocal needs a unit constant term");
  }
  const int n = a.order();
  TSeries x(0);
  x[0] = c0;  // c0^{-1} = c0 for c0 = +-1
  int prec = 1;
  while (prec < n + 1) {
    const int next = std::min(2 * prec, n + 1);
    TSeries xe = x.truncated(next - 1);
    TSeries err = TSeries::one(next - 1) - a.truncated(next - 1) * xe;
    x = xe + xe * err;
    prec = next;
  }
  return x.truncated(n);
}

TSeries pow(const TSeries& a, int e) {
  if (e < 0) return pow(reciprocal(a), -e);
  TSeries result = TSeries::one(a.order());
  TSeries base = a;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

TSeries euler_product(int n, Deform deform, Direction dir, int order) {
  if (n < 1) throw std::invalid_argument("euler_product needs n >= 1");
  if (order < 0) throw std::invalid_argument("euler_product needs T >= 0");
  const QPoly c = deform == Deform::WithU ? -QPoly::u() : QPoly(-1L);
  TSeries s = TSeries::one(order);
  for (int k = 1; k <= order; ++k) {
    for (int rep = 0; rep < n; ++rep) s.mul_binomial(c, k);
  }
  return dir == Direction::Direct ? s : reciprocal(s);
}

namespace {

constexpr int kEnumerationLimit = 50;

struct SingleTally {
  QPoly kappa_sum;
  QPoly d_sum;
};

// Per-weight sums over single partitions, grown on demand and shared.
const std::vector<SingleTally>& single_partition_tallies(int order) {
  static std::mutex mu;
  static std::vector<SingleTally> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (order > kEnumerationLimit) {
    throw std::out_of_range("partition enumeration limited to weight " +
                            std::to_string(kEnumerationLimit));
  }
  static std::vector<QPoly> powers;  // (1-u)^d
  for (int k = static_cast<int>(cache.size()); k <= order; ++k) {
    SingleTally t;
    PartitionStream s(k);
    while (auto p = s.next()) {
      t.kappa_sum += kappa_q(*p);
      const int d = p->distinct_sizes();
      while (static_cast<int>(powers.size()) <= d) {
        powers.push_back(QPoly::one_minus_u_pow(static_cast<unsigned>(powers.size())));
      }
      t.d_sum += powers[d];
    }
    cache.push_back(std::move(t));
  }
  return cache;
}

}  // namespace

TSeries epsilon_qn_series_by_enumeration(int n, int order) {
  if (n < 1) throw std::invalid_argument("epsilon needs n >= 1");
  const auto& tally = single_partition_tallies(order);
  TSeries one_comp(order);
  for (int k = 0; k <= order; ++k) one_comp[k] = tally[k].kappa_sum;
  return pow(one_comp, n);
}

TSeries p_qn_series_by_enumeration(int n, int order) {
  if (n < 1) throw std::invalid_argument("p_qn needs n >= 1");
  const auto& tally = single_partition_tallies(order);
  TSeries one_comp(order);
  for (int k = 0; k <= order; ++k) one_comp[k] = tally[k].d_sum;
  return pow(one_comp, n);
}

QPoly epsilon_qn(int n, int k) {
  if (k < 0) throw std::invalid_argument("epsilon needs k >= 0");
  QPoly by_product = euler_product(n, Deform::WithU, Direction::Direct, k)[k];
  if (k <= 40) {
    QPoly by_enum = epsilon_qn_series_by_enumeration(n, k)[k];
    if (!(by_enum == by_product)) {
      throw IdentityFailure("eps_{q," + std::to_string(n) + "}(" + std::to_string(k) +
                            "): product " + by_product.to_string() + " vs enumeration " +
                            by_enum.to_string());
    }
  }
  return by_product;
}

TSeries p_qn_series(int n, int order) {
  if (n < 1) throw std::invalid_argument("p_qn needs n >= 1");
  const QPoly one_minus_u{1, -1};
  TSeries s = TSeries::one(order);
  for (int k = 1; k <= order; ++k) {
    for (int rep = 0; rep < n; ++rep) {
      // s += (1-u) * s * t^k / (1 - t^k)
      TSeries g(order);
      for (int m = k; m <= order; ++m) {
        g[m] = s[m - k];
        if (m >= 2 * k) g[m] += g[m - k];
      }
      for (int m = k; m <= order; ++m) s[m].add_mul(one_minus_u, g[m]);
    }
  }
  return s;
}

QPoly p_qn(int n, int k) {
  if (k < 0) throw std::invalid_argument("p_qn needs k >= 0");
  return p_qn_series(n, k)[k];
}

int pentagonal_epsilon(long k) {
  if (k < 0) throw std::invalid_argument("pentagonal_epsilon needs k >= 0");
  for (long m = 0; m * (3 * m - 1) / 2 <= k; ++m) {
    if (m * (3 * m - 1) / 2 == k || m * (3 * m + 1) / 2 == k) {
      return m % 2 == 0 ? 1 : -1;
    }
  }
  return 0;
}

mpz_class ramanujan_tau(int k, int order) {
  if (k < 1) throw std::invalid_argument("tau is indexed from 1");
  if (k > order + 1) {
    throw OrderExceeded("tau(" + std::to_string(k) + ") needs t-order >= " +
                        std::to_string(k - 1) + ", configured " + std::to_string(order));
  }
  TSeries s = euler_product(24, Deform::WithoutU, Direction::Direct, k - 1);
  return s[k - 1].constant_term();
}

TSeries q_pochhammer_sum(int order) {
  TSeries total(order);
  TSeries num = TSeries::one(order);  // (u;t)_n
  TSeries den = TSeries::one(order);  // (t;t)_n
  const QPoly neg_u = -QPoly::u();
  for (int n = 0; n <= order; ++n) {
    if (n > 0) {
      if (n == 1) {
        for (int m = 0; m <= order; ++m) num[m] *= QPoly{1, -1};
      } else {
        num.mul_binomial(neg_u, n - 1);
      }
      den.mul_binomial(QPoly(-1L), n);
    }
    const int rest = order - n;
    TSeries term = num.truncated(rest) * reciprocal(den.truncated(rest));
    for (int m = 0; m <= rest; ++m) total[m + n] += term[m];
  }
  return total;
}

namespace {

std::string k_label(int k) { return "k=" + std::to_string(k); }

// Definition-level route where enumeration is affordable, product otherwise.
TSeries p_series_for_identity(int n, int order) {
  return order <= kEnumerationLimit ? p_qn_series_by_enumeration(n, order)
                                    : p_qn_series(n, order);
}

TSeries eps_series_checked(int n, int order, Report& rep) {
  TSeries by_product = euler_product(n, Deform::WithU, Direction::Direct, order);
  if (order <= kEnumerationLimit) {
    TSeries by_enum = epsilon_qn_series_by_enumeration(n, order);
    for (int k = 0; k <= order; ++k) {
      rep.expect(by_product[k] == by_enum[k], [&] {
        return Mismatch{k_label(k) + " eps product vs enumeration",
                        by_product[k].to_string(), by_enum[k].to_string()};
      });
    }
  }
  return by_product;
}

}  // namespace

Report verify_single_partition_recurrence(int order) {
  Report rep("eps-recurrence", "eps_q(k) - p_q(k) equals the pentagonal sum of p_q");
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  TSeries eps = eps_series_checked(1, order, rep);
  TSeries p = p_series_for_identity(1, order);
  auto p_at = [&](long m) { return m < 0 ? QPoly() : p[static_cast<int>(m)]; };
  for (int k = 1; k <= order; ++k) {
    QPoly lhs = eps[k] - p[k];
    QPoly rhs;
    for (long m = 1; m * (3 * m - 1) / 2 <= k; ++m) {
      QPoly term = p_at(k - m * (3 * m - 1) / 2) + p_at(k - m * (3 * m + 1) / 2);
      if (m % 2 == 0) {
        rhs += term;
      } else {
        rhs -= term;
      }
    }
    rep.expect(lhs == rhs, [&] { return Mismatch{k_label(k), lhs.to_string(), rhs.to_string()}; });
  }
  return rep;
}

Report verify_multi_recurrence(int n, int order) {
  Report rep("multi-eps-recurrence",
             "eps_{q,n}(k) = sum_r eps_{1,n}(r) p_{q,n}(k-r), n=" + std::to_string(n));
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  TSeries eps = eps_series_checked(n, order, rep);
  TSeries p = p_series_for_identity(n, order);
  TSeries eps1 = euler_product(n, Deform::WithoutU, Direction::Direct, order);
  TSeries p_inf = euler_product(n, Deform::WithoutU, Direction::Inverse, order);
  rep.expect(eps[0] == QPoly(1L), [&] { return Mismatch{"k=0", eps[0].to_string(), "1"}; });
  for (int k = 0; k <= order; ++k) {
    // u = 0 value of p_{q,n} is the classical multi-partition count.
    rep.expect(eval_at(p[k], 0L) == p_inf[k].constant_term(), [&] {
      return Mismatch{k_label(k) + " p_{inf,n}", eval_at(p[k], 0L).get_str(),
                      p_inf[k].to_string()};
    });
  }
  for (int k = 1; k <= order; ++k) {
    QPoly rhs;
    mpz_class classical = 0;
    for (int r = 0; r <= k; ++r) {
      rhs.add_mul(eps1[r], p[k - r]);
      classical += eps1[r].constant_term() * p_inf[k - r].constant_term();
    }
    rep.expect(eps[k] == rhs, [&] { return Mismatch{k_label(k), eps[k].to_string(), rhs.to_string()}; });
    rep.expect(classical == 0, [&] {
      return Mismatch{k_label(k) + " u=0 limit", classical.get_str(), "0"};
    });
  }
  if (n == 24) {
    // Same limit phrased through tau(r+1) = eps_{1,24}(r).
    for (int k = 1; k <= order; ++k) {
      mpz_class sum = 0;
      for (int r = 0; r <= k; ++r) {
        sum += ramanujan_tau(r + 1, order) * p_inf[k - r].constant_term();
      }
      rep.expect(sum == 0, [&] {
        return Mismatch{k_label(k) + " sum tau(r+1) p_{inf,24}(k-r)", sum.get_str(), "0"};
      });
    }
  }
  return rep;
}

Report verify_q_binomial(int order) {
  Report rep("q-binomial", "sum (u;t)_n/(t;t)_n t^n = sum p_q(k) t^k and its u=0 limit");
  TSeries lhs = q_pochhammer_sum(order);
  TSeries rhs = p_qn_series(1, order);
  for (int k = 0; k <= order; ++k) {
    rep.expect(lhs[k] == rhs[k], [&] { return Mismatch{k_label(k), lhs[k].to_string(), rhs[k].to_string()}; });
  }
  // sum t^n/(t;t)_n against 1/prod(1-t^k).
  TSeries limit(order);
  TSeries den = TSeries::one(order);
  for (int n = 0; n <= order; ++n) {
    if (n > 0) den.mul_binomial(QPoly(-1L), n);
    TSeries term = reciprocal(den.truncated(order - n));
    for (int m = 0; m + n <= order; ++m) limit[m + n] += term[m];
  }
  TSeries partitions = euler_product(1, Deform::WithoutU, Direction::Inverse, order);
  for (int k = 0; k <= order; ++k) {
    rep.expect(limit[k] == partitions[k], [&] {
      return Mismatch{k_label(k) + " u=0 limit", limit[k].to_string(), partitions[k].to_string()};
    });
  }
  return rep;
}

Report verify_pentagonal(int order) {
  Report rep("pentagonal", "prod (1 - t^k) against the pentagonal closed form");
  TSeries plain = euler_product(1, Deform::WithoutU, Direction::Direct, order);
  TSeries deformed = euler_product(1, Deform::WithU, Direction::Direct, order);
  for (int k = 0; k <= order; ++k) {
    const mpz_class expect = pentagonal_epsilon(k);
    rep.expect(plain[k] == QPoly(expect), [&] {
      return Mismatch{k_label(k), plain[k].to_string(), expect.get_str()};
    });
    const mpz_class at_one = eval_at(deformed[k], 1L);
    rep.expect(at_one == expect, [&] {
      return Mismatch{k_label(k) + " eps_q at u=1", at_one.get_str(), expect.get_str()};
    });
  }
  return rep;
}

Report verify_reference_values() {
  Report rep("reference-values", "published eps, p and tau values");
  auto same = [&](const std::string& where, const QPoly& got, const QPoly& want) {
    rep.expect(got == want, [&] { return Mismatch{where, got.to_string(), want.to_string()}; });
  };
  const QPoly one_minus_u{1, -1};
  same("eps_q(5)", epsilon_qn(1, 5), QPoly{0, -1, 2});
  same("eps_q(6)", epsilon_qn(1, 6), QPoly{0, -1, 2, -1});
  same("eps_{q,24}(2)", epsilon_qn(24, 2), QPoly{0, -24, 276});
  same("p_{q,24}(1)", p_qn(24, 1), one_minus_u * mpz_class(24));
  same("p_{q,24}(2)", p_qn(24, 2),
       pow(one_minus_u, 2) * mpz_class(276) + one_minus_u * mpz_class(48));
  same("tau(1)", QPoly(ramanujan_tau(1)), QPoly(1L));
  same("tau(2)", QPoly(ramanujan_tau(2)), QPoly(-24L));
  same("tau(3)", QPoly(ramanujan_tau(3)), QPoly(252L));
  const mpz_class p24_2 = eval_at(p_qn(24, 2), 0L);
  const mpz_class p24_1 = eval_at(p_qn(24, 1), 0L);
  const mpz_class limit = ramanujan_tau(1) * p24_2 + ramanujan_tau(2) * p24_1 + ramanujan_tau(3);
  same("p_{inf,24}(2)", QPoly(p24_2), QPoly(324L));
  same("tau(1)p(2) + tau(2)p(1) + tau(3)", QPoly(limit), QPoly());
  // The expanded middle step 276(1-u)^2 - 528(1-u) + 252.
  same("expanded recurrence at k=2",
       pow(one_minus_u, 2) * mpz_class(276) - one_minus_u * mpz_class(528) + QPoly(252L),
       QPoly{0, -24, 276});
  return rep;
}

}  // namespace qaffine
