#pragma once

// Lattice-graded series built from an affine root datum: GK products and
// sums, the correction factor A, K^inf_q, K^1_q, Kostant's K, H_{lambda+rho},
// Weyl-Kac characters with a Freudenthal oracle, the basic specialization,
// and the identity verifiers over all of these.
//
// Grading convention: a series coefficient at mu in Q_+ stands for z^mu in
// the K-type products and for z^{-mu} (relative to the highest weight) in
// characters and chi_q.

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include <gmpxx.h>

#include "qaffine/lattice.hpp"
#include "qaffine/partitions.hpp"
#include "qaffine/qseries.hpp"
#include "qaffine/report.hpp"
#include "qaffine/rootdata.hpp"
#include "qaffine/weyl.hpp"

namespace qaffine {

enum class ProductMode {
  Gk,  // prod ((1 - u z^a) / (1 - z^a))^mult   -> K^inf_q
  InverseCs,  // prod (1 - u z^a)^{-mult}         -> K^1_q
  Cs,  // prod (1 - u z^a)^{mult}                 -> H_rho
  Kostant,  // prod (1 - z^a)^{-mult}             -> K
  Denominator,  // prod (1 - z^a)^{mult}
};

// Product over every positive root that reaches the profile. Results are
// memoized per (type, profile, mode).
LatticeSeries gk_product(const RootDatum& d, const TruncProfile& p,
                         ProductMode mode = ProductMode::Gk);

// Weight attached to a combinatorial index: (1-u)^{d(c)} for the GK sum,
// u^{|c|} (|c| counting parts) for the inverse CS sum.
enum class IndexWeight { Gk, InverseCs };

struct RealSlot {
  long k;  // signed index of beta_k
  RootVec beta;
};

// beta_k inside the profile, positive side first (k = 1, 2, ...), then
// k = 0, -1, ...
std::vector<RealSlot> real_slots(const RootDatum& d, const WordH& h, const TruncProfile& p);

// Sum over c supported on `slots` of weight(c) z^{sum c_k beta_k}, tallied
// slot by slot with integer counts per statistic value.
LatticeSeries real_part_sum(const RootDatum& d, const std::vector<RealSlot>& slots,
                            const TruncProfile& p, IndexWeight w);
// Sum over multi-partitions c_0 with n components of weight(c_0) z^{|c_0| delta}.
LatticeSeries imaginary_part_sum(const RootDatum& d, const TruncProfile& p, IndexWeight w);
LatticeSeries gk_sum(const RootDatum& d, const WordH& h, const TruncProfile& p,
                     IndexWeight w = IndexWeight::Gk);

struct CombIndex {
  SupportSeq plus;  // slots k <= 0
  MultiPartition zero;
  SupportSeq minus;  // slots k >= 1

  int d() const { return plus.distinct_slots() + zero.distinct_sizes() + minus.distinct_slots(); }
  // |c_+| + |c_-| + number of parts of c_0.
  long size() const;
};

// Literal enumeration of every index with weight in the profile. Only for
// small profiles; used to cross-check the tallies.
void for_each_comb_index(const RootDatum& d, const WordH& h, const TruncProfile& p,
                         const std::function<void(const CombIndex&, const RootVec&)>& f);

// prod_i prod_j (1 - u^{d_i} t^j) / (1 - u^{d_i + 1} t^j)
TSeries correction_factor_product(const RootDatum& d, int order);
// sum over multi-partitions of Q_{d_1..d_n}(p) t^{|p|}, with
// Q_d(p, j) = u^{(d+1) m_j} - u^{(d+1) m_j - 1} for m_j != 0.
TSeries correction_factor_sum(const RootDatum& d, int order);

// Weyl numerator sum_w sign(w) z^{-shift_w} for lambda + rho.
LatticeSeries weyl_numerator(const RootDatum& d, const Weight& lambda, const TruncProfile& p);
// H_{lambda+rho}(mu; q) as numerator times the GK sum.
LatticeSeries h_poly_via_gk_sum(const RootDatum& d, const Weight& lambda, const TruncProfile& p,
                                const WordH& h);
// H_{lambda+rho}(mu; q) = sum_w sign(w) K^inf_q(mu - shift_w).
LatticeSeries h_poly_via_kinfty(const RootDatum& d, const Weight& lambda, const TruncProfile& p);
// Both routes; IdentityFailure if they differ.
LatticeSeries h_poly(const RootDatum& d, const Weight& lambda, const TruncProfile& p,
                     const WordH& h);

// dim V(lambda)_{lambda - mu} by dividing the Weyl numerator by the denominator.
LatticeSeries character_by_division(const RootDatum& d, const Weight& lambda,
                                    const TruncProfile& p);
// Same multiplicities from the Freudenthal recursion.
LatticeSeries freudenthal_multiplicities(const RootDatum& d, const Weight& lambda,
                                         const TruncProfile& p);
// Division route, cross-checked against Freudenthal (IdentityFailure).
LatticeSeries weyl_kac_character(const RootDatum& d, const Weight& lambda, const TruncProfile& p);

// Vector partitions of beta into positive roots counted with multiplicity,
// by memoized depth-first search over roots in a fixed order.
class KostantOracle {
 public:
  KostantOracle(const RootDatum& d, const TruncProfile& p);
  mpz_class count(const RootVec& beta);

 private:
  mpz_class count_from(const RootVec& beta, std::size_t first);

  std::vector<RootVec> roots_;  // imaginary roots repeated once per color
  std::map<std::pair<RootVec, std::size_t>, mpz_class> memo_;
};

// t^k coefficient = sum of the coefficients with c_0 = k; order D.
TSeries ev_specialize(const LatticeSeries& s);
// Builds the series at C and C + 4 (and further while `adaptive`) and
// returns the specialization once two consecutive caps agree.
TSeries ev_specialize_stable(const std::function<LatticeSeries(const TruncProfile&)>& build,
                             const TruncProfile& p, int max_classical_cap = 64);

Report verify_gk_full(const RootDatum& d, const WordH& h, const TruncProfile& p);
Report verify_gk_real(const RootDatum& d, const WordH& h, const TruncProfile& p, int kmax = 8);
Report verify_gk_imag(const RootDatum& d, const TruncProfile& p, const std::vector<int>& ns,
                      int order);
Report verify_correction_factor(const RootDatum& d, int order);
Report verify_cs_rho(const RootDatum& d, const TruncProfile& p, const WordH& h);
Report verify_cs_general(const RootDatum& d, const Weight& lambda, const TruncProfile& p,
                         const WordH& h);
Report verify_support_law(const RootDatum& d, const Weight& lambda, const TruncProfile& p,
                          const WordH& h);
Report verify_q_kostant(const RootDatum& d, const Weight& lambda, const TruncProfile& p,
                        const WordH& h);
Report verify_kostant_conv(const RootDatum& d, const TruncProfile& p);
Report verify_kostant_recur(const RootDatum& d, const TruncProfile& p);
Report verify_h_via_kinfty(const RootDatum& d, const Weight& lambda, const TruncProfile& p,
                           const WordH& h);
Report verify_gr_tensor(const RootDatum& d, const Weight& lambda, const TruncProfile& p,
                        const WordH& h);
// A1~1 only; all 0 <= m, n <= bound except (0, 0).
Report verify_carlitz(int bound);
// Large ranks (N > 8) need allow_large and D <= 2; H_rho then comes from
// the product form instead of the two-route h_poly.
Report verify_basic_specialization(const RootDatum& d, const TruncProfile& p, const WordH& h,
                                   bool allow_large = false);

}  // namespace qaffine
