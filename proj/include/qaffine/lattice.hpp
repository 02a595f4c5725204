#pragma once

// Q_+-graded series truncated to a profile: c_0 <= D and classical
// height <= C. The profile is an order ideal of Q_+, so truncated products
// are exact in every grade that survives.

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include <json.hpp>

#include "qaffine/exactpoly.hpp"
#include "qaffine/rootdata.hpp"

namespace qaffine {

struct TruncProfile {
  int delta_cap = 0;  // D
  int classical_cap = 0;  // C
  bool adaptive = false;  // recompute at C + 4 before trusting t-coefficients

  bool contains(const RootVec& v) const {
    return in_qplus(v) && delta_degree(v) <= delta_cap && classical_height(v) <= classical_cap;
  }
  friend bool operator==(const TruncProfile& a, const TruncProfile& b) {
    return a.delta_cap == b.delta_cap && a.classical_cap == b.classical_cap;
  }
};

// Every grade of a profile in lexicographic order, with a mixed-radix code
// so that adding grades is adding codes.
class GradeIndex {
 public:
  GradeIndex(int rank, TruncProfile profile);

  int rank() const { return rank_; }
  const TruncProfile& profile() const { return profile_; }
  std::size_t size() const { return grades_.size(); }
  const RootVec& grade(std::size_t i) const { return grades_[i]; }
  long code(std::size_t i) const { return codes_[i]; }
  // -1 when v is outside the profile.
  long find(const RootVec& v) const;
  // Index of grade(i) + v, or -1 if it leaves the profile.
  long shifted(std::size_t i, const RootVec& v) const;
  // Index of grade(i) - v, or -1 if the difference is not in Q_+.
  long unshifted(std::size_t i, const RootVec& v) const;
  // Index of grade(i) + grade(j), or -1.
  long sum(std::size_t i, std::size_t j) const;

 private:
  long encode(const RootVec& v) const;

  int rank_;
  TruncProfile profile_;
  std::vector<long> radix_;
  std::vector<RootVec> grades_;
  std::vector<long> codes_;
  std::vector<int> lookup_;  // code -> grade index or -1
  std::vector<int> c0_;
  std::vector<int> clh_;
};

std::shared_ptr<const GradeIndex> make_grade_index(int rank, const TruncProfile& p);

class LatticeSeries {
 public:
  LatticeSeries(int rank, const TruncProfile& profile);
  explicit LatticeSeries(std::shared_ptr<const GradeIndex> index);
  static LatticeSeries one(int rank, const TruncProfile& profile);

  const GradeIndex& index() const { return *index_; }
  const std::shared_ptr<const GradeIndex>& index_ptr() const { return index_; }
  const TruncProfile& profile() const { return index_->profile(); }
  std::size_t size() const { return coeffs_.size(); }

  const QPoly& at(std::size_t i) const { return coeffs_[i]; }
  QPoly& at(std::size_t i) { return coeffs_[i]; }
  // Zero outside the profile.
  QPoly get(const RootVec& v) const;
  // Throws ProfileMismatch if v is outside the profile.
  void add(const RootVec& v, const QPoly& c);

  // this *= (1 + c z^alpha)
  void mul_binomial(const RootVec& alpha, const QPoly& c);
  // this /= (1 - c z^alpha)
  void div_binomial(const RootVec& alpha, const QPoly& c);

  LatticeSeries& operator+=(const LatticeSeries& o);
  LatticeSeries& operator-=(const LatticeSeries& o);
  friend LatticeSeries operator*(const LatticeSeries& a, const LatticeSeries& b);
  friend bool operator==(const LatticeSeries& a, const LatticeSeries& b);

  // Graded division by a series with constant term +-1.
  LatticeSeries divided_by(const LatticeSeries& den) const;
  // Substitutes u; constant-polynomial series with rational values dropped
  // to integers where exact.
  LatticeSeries eval_at(long u) const;
  bool all_constant() const;
  // Visits nonzero terms in lexicographic grade order.
  void for_each(const std::function<void(const RootVec&, const QPoly&)>& f) const;
  // Same grades, restricted to a smaller profile.
  LatticeSeries restricted(const TruncProfile& p) const;

 private:
  void check_same_profile(const LatticeSeries& o) const;

  std::shared_ptr<const GradeIndex> index_;
  std::vector<QPoly> coeffs_;
};

// [{"grade":[c0,...],"value":{QPoly}}, ...] over nonzero terms.
nlohmann::ordered_json to_json(const LatticeSeries& s);

}  // namespace qaffine
