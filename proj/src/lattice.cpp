#include "qaffine/lattice.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

#include "qaffine/errors.hpp"

namespace qaffine {

GradeIndex::GradeIndex(int rank, TruncProfile profile) : rank_(rank), profile_(profile) {
  if (rank < 1 || profile.delta_cap < 0 || profile.classical_cap < 0) {
    throw std::invalid_argument("bad grade index dimensions");
  }
  const long base = profile.classical_cap + 1;
  radix_.assign(rank, 1);
  for (int i = rank - 2; i >= 0; --i) radix_[i] = radix_[i + 1] * base;
  const long box = (profile.delta_cap + 1) * radix_[0];
  if (box > 50'000'000) throw std::length_error("truncation profile too large");
  lookup_.assign(static_cast<std::size_t>(box), -1);

  RootVec v(rank, 0);
  // Odometer over c_0 in [0, D] and c_1.. with sum <= C, lexicographic.
  std::function<void(int, int)> rec = [&](int pos, int budget) {
    if (pos == rank) {
      lookup_[static_cast<std::size_t>(encode(v))] = static_cast<int>(grades_.size());
      codes_.push_back(encode(v));
      c0_.push_back(v[0]);
      clh_.push_back(classical_height(v));
      grades_.push_back(v);
      return;
    }
    const int hi = pos == 0 ? profile_.delta_cap : budget;
    for (int c = 0; c <= hi; ++c) {
      v[pos] = c;
      rec(pos + 1, pos == 0 ? budget : budget - c);
    }
    v[pos] = 0;
  };
  rec(0, profile_.classical_cap);
}

long GradeIndex::encode(const RootVec& v) const {
  long c = 0;
  for (int i = 0; i < rank_; ++i) c += v[i] * radix_[i];
  return c;
}

long GradeIndex::find(const RootVec& v) const {
  if (static_cast<int>(v.size()) != rank_ || !profile_.contains(v)) return -1;
  return lookup_[static_cast<std::size_t>(encode(v))];
}

long GradeIndex::shifted(std::size_t i, const RootVec& v) const {
  const RootVec& g = grades_[i];
  if (g[0] + v[0] > profile_.delta_cap) return -1;
  if (clh_[i] + classical_height(v) > profile_.classical_cap) return -1;
  for (int k = 0; k < rank_; ++k) {
    if (g[k] + v[k] < 0) return -1;
  }
  return lookup_[static_cast<std::size_t>(codes_[i] + encode(v))];
}

long GradeIndex::unshifted(std::size_t i, const RootVec& v) const {
  const RootVec& g = grades_[i];
  for (int k = 0; k < rank_; ++k) {
    if (g[k] < v[k]) return -1;
  }
  return lookup_[static_cast<std::size_t>(codes_[i] - encode(v))];
}

long GradeIndex::sum(std::size_t i, std::size_t j) const {
  if (c0_[i] + c0_[j] > profile_.delta_cap) return -1;
  if (clh_[i] + clh_[j] > profile_.classical_cap) return -1;
  return lookup_[static_cast<std::size_t>(codes_[i] + codes_[j])];
}

std::shared_ptr<const GradeIndex> make_grade_index(int rank, const TruncProfile& p) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const GradeIndex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(rank, p.delta_cap, p.classical_cap);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto idx = std::make_shared<const GradeIndex>(rank, p);
  cache.emplace(key, idx);
  return idx;
}

LatticeSeries::LatticeSeries(int rank, const TruncProfile& profile)
    : LatticeSeries(make_grade_index(rank, profile)) {}

LatticeSeries::LatticeSeries(std::shared_ptr<const GradeIndex> index)
    : index_(std::move(index)), coeffs_(index_->size()) {}

LatticeSeries LatticeSeries::one(int rank, const TruncProfile& profile) {
  LatticeSeries s(rank, profile);
  s.coeffs_[0] = QPoly(1L);
  return s;
}

QPoly LatticeSeries::get(const RootVec& v) const {
  const long i = index_->find(v);
  return i < 0 ? QPoly() : coeffs_[static_cast<std::size_t>(i)];
}

void LatticeSeries::add(const RootVec& v, const QPoly& c) {
  const long i = index_->find(v);
  if (i < 0) throw ProfileMismatch("grade " + to_string(v) + " outside the profile");
  coeffs_[static_cast<std::size_t>(i)] += c;
}

void LatticeSeries::mul_binomial(const RootVec& alpha, const QPoly& c) {
  for (std::size_t g = coeffs_.size(); g-- > 0;) {
    const long src = index_->unshifted(g, alpha);
    if (src < 0 || coeffs_[static_cast<std::size_t>(src)].is_zero()) continue;
    coeffs_[g].add_mul(c, coeffs_[static_cast<std::size_t>(src)]);
  }
}

void LatticeSeries::div_binomial(const RootVec& alpha, const QPoly& c) {
  for (std::size_t g = 0; g < coeffs_.size(); ++g) {
    const long src = index_->unshifted(g, alpha);
    if (src < 0 || coeffs_[static_cast<std::size_t>(src)].is_zero()) continue;
    coeffs_[g].add_mul(c, coeffs_[static_cast<std::size_t>(src)]);
  }
}

void LatticeSeries::check_same_profile(const LatticeSeries& o) const {
  if (index_->rank() != o.index_->rank() || !(profile() == o.profile())) {
    throw ProfileMismatch("series carry different truncation profiles");
  }
}

LatticeSeries& LatticeSeries::operator+=(const LatticeSeries& o) {
  check_same_profile(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

LatticeSeries& LatticeSeries::operator-=(const LatticeSeries& o) {
  check_same_profile(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

LatticeSeries operator*(const LatticeSeries& a, const LatticeSeries& b) {
  a.check_same_profile(b);
  LatticeSeries r(a.index_);
  const GradeIndex& idx = *a.index_;
  std::vector<std::size_t> nz_b;
  for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
    if (!b.coeffs_[j].is_zero()) nz_b.push_back(j);
  }
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j : nz_b) {
      const long k = idx.sum(i, j);
      if (k >= 0) r.coeffs_[static_cast<std::size_t>(k)].add_mul(a.coeffs_[i], b.coeffs_[j]);
    }
  }
  return r;
}

bool operator==(const LatticeSeries& a, const LatticeSeries& b) {
  return a.profile() == b.profile() && a.index_->rank() == b.index_->rank() &&
         a.coeffs_ == b.coeffs_;
}

LatticeSeries LatticeSeries::divided_by(const LatticeSeries& den) const {
  check_same_profile(den);
  const QPoly& d0 = den.coeffs_[0];
  if (!d0.is_constant() || (d0.constant_term() != 1 && d0.constant_term() != -1)) {
    throw NotDivisible("graded division needs a unit constant term");
  }
  const GradeIndex& idx = *index_;
  LatticeSeries q(index_);
  std::vector<std::size_t> nz_den;
  for (std::size_t j = 1; j < den.coeffs_.size(); ++j) {
    if (!den.coeffs_[j].is_zero()) nz_den.push_back(j);
  }
  // Lexicographic order is a linear extension of the Q_+ order.
  for (std::size_t g = 0; g < coeffs_.size(); ++g) {
    QPoly acc = coeffs_[g];
    for (std::size_t j : nz_den) {
      const long src = idx.unshifted(g, idx.grade(j));
      if (src < 0 || q.coeffs_[static_cast<std::size_t>(src)].is_zero()) continue;
      acc -= den.coeffs_[j] * q.coeffs_[static_cast<std::size_t>(src)];
    }
    if (d0.constant_term() == -1) acc = -acc;
    q.coeffs_[g] = std::move(acc);
  }
  return q;
}

LatticeSeries LatticeSeries::eval_at(long u) const {
  LatticeSeries r(index_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) r.coeffs_[i] = QPoly(qaffine::eval_at(coeffs_[i], u));
  }
  return r;
}

bool LatticeSeries::all_constant() const {
  for (const QPoly& c : coeffs_) {
    if (!c.is_constant()) return false;
  }
  return true;
}

void LatticeSeries::for_each(const std::function<void(const RootVec&, const QPoly&)>& f) const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) f(index_->grade(i), coeffs_[i]);
  }
}

LatticeSeries LatticeSeries::restricted(const TruncProfile& p) const {
  if (p.delta_cap > profile().delta_cap || p.classical_cap > profile().classical_cap) {
    throw ProfileMismatch("restriction to a larger profile");
  }
  LatticeSeries r(index_->rank(), p);
  for (std::size_t i = 0; i < r.size(); ++i) r.coeffs_[i] = get(r.index().grade(i));
  return r;
}

nlohmann::ordered_json to_json(const LatticeSeries& s) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  s.for_each([&](const RootVec& g, const QPoly& c) { obj[to_string(g)] = to_json(c); });
  return obj;
}

}  // namespace qaffine
