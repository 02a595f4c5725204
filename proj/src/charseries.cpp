#include "qaffine/charseries.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <string>
#include <tuple>

#include "qaffine/errors.hpp"

namespace qaffine {

namespace {

LatticeSeries compute_product(const RootDatum& d, const TruncProfile& p, ProductMode mode) {
  LatticeSeries s = LatticeSeries::one(d.rank(), p);
  const QPoly u = QPoly::u();
  for (const RootMult& rm : positive_roots_within(d, p.delta_cap, p.classical_cap)) {
    for (int m = 0; m < rm.mult; ++m) {
      switch (mode) {
        case ProductMode::Gk:
          s.mul_binomial(rm.root, -u);
          s.div_binomial(rm.root, QPoly(1L));
          break;
        case ProductMode::InverseCs:
          s.div_binomial(rm.root, u);
          break;
        case ProductMode::Cs:
          s.mul_binomial(rm.root, -u);
          break;
        case ProductMode::Kostant:
          s.div_binomial(rm.root, QPoly(1L));
          break;
        case ProductMode::Denominator:
          s.mul_binomial(rm.root, QPoly(-1L));
          break;
      }
    }
  }
  return s;
}

std::string grade_label(const RootVec& g) { return "mu=" + to_string(g); }

// Records one check per grade.
void compare_series(Report& rep, const std::string& what, const LatticeSeries& a,
                    const LatticeSeries& b) {
  if (!(a.profile() == b.profile())) {
    rep.fail(what + ": profiles differ");
    return;
  }
  for (std::size_t g = 0; g < a.size(); ++g) {
    rep.expect(a.at(g) == b.at(g), [&] {
      return Mismatch{what + " " + grade_label(a.index().grade(g)), a.at(g).to_string(),
                      b.at(g).to_string()};
    });
  }
}

void compare_tseries(Report& rep, const std::string& what, const TSeries& a, const TSeries& b) {
  const int n = std::min(a.order(), b.order());
  for (int k = 0; k <= n; ++k) {
    rep.expect(a[k] == b[k], [&] {
      return Mismatch{what + " t^" + std::to_string(k), a[k].to_string(), b[k].to_string()};
    });
  }
}

// Runs body into a sub-report, turning library errors into report failures.
template <class Body>
Report guarded(const std::string& id, const std::string& title, Body&& body) {
  Report rep(id, title);
  try {
    body(rep);
  } catch (const std::exception& e) {
    rep.fail(e.what());
  }
  return rep;
}

std::vector<QPoly> powers_of(const QPoly& base, std::size_t count) {
  std::vector<QPoly> out{QPoly(1L)};
  while (out.size() < count) out.push_back(out.back() * base);
  return out;
}

LatticeSeries from_tally(const std::shared_ptr<const GradeIndex>& idx,
                         const std::vector<std::vector<mpz_class>>& tally, IndexWeight w) {
  LatticeSeries s(idx);
  std::size_t width = 1;
  for (const auto& t : tally) width = std::max(width, t.size());
  const auto pw = powers_of(w == IndexWeight::Gk ? QPoly{1, -1} : QPoly::u(), width);
  for (std::size_t g = 0; g < tally.size(); ++g) {
    for (std::size_t st = 0; st < tally[g].size(); ++st) {
      if (tally[g][st] != 0) s.at(g) += pw[st] * tally[g][st];
    }
  }
  return s;
}

}  // namespace

LatticeSeries gk_product(const RootDatum& d, const TruncProfile& p, ProductMode mode) {
  using Key = std::tuple<std::string, int, int, int>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const LatticeSeries>> cache;
  const Key key{d.label, p.delta_cap, p.classical_cap, static_cast<int>(mode)};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto s = std::make_shared<const LatticeSeries>(compute_product(d, p, mode));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, s);
  return *s;
}

std::vector<RealSlot> real_slots(const RootDatum& d, const WordH& h, const TruncProfile& p) {
  const BetaRange br = beta_range(d, h, p.delta_cap);
  std::vector<RealSlot> out;
  for (std::size_t i = 0; i < br.positive.size(); ++i) {
    if (p.contains(br.positive[i])) out.push_back({static_cast<long>(i) + 1, br.positive[i]});
  }
  for (std::size_t i = 0; i < br.nonpositive.size(); ++i) {
    if (p.contains(br.nonpositive[i])) out.push_back({-static_cast<long>(i), br.nonpositive[i]});
  }
  return out;
}

LatticeSeries real_part_sum(const RootDatum& d, const std::vector<RealSlot>& slots,
                            const TruncProfile& p, IndexWeight w) {
  auto idx = make_grade_index(d.rank(), p);
  // tally[g][s]: number of sequences with weight g and statistic s.
  std::vector<std::vector<mpz_class>> tally(idx->size());
  tally[0] = {1};
  for (const RealSlot& slot : slots) {
    auto next = tally;
    for (std::size_t g = 0; g < tally.size(); ++g) {
      if (tally[g].empty()) continue;
      long cur = static_cast<long>(g);
      for (int c = 1;; ++c) {
        cur = idx->shifted(static_cast<std::size_t>(cur), slot.beta);
        if (cur < 0) break;
        const std::size_t inc = w == IndexWeight::Gk ? 1 : static_cast<std::size_t>(c);
        auto& dst = next[static_cast<std::size_t>(cur)];
        if (dst.size() < tally[g].size() + inc) dst.resize(tally[g].size() + inc);
        for (std::size_t st = 0; st < tally[g].size(); ++st) {
          if (tally[g][st] != 0) dst[st + inc] += tally[g][st];
        }
      }
    }
    tally = std::move(next);
  }
  return from_tally(idx, tally, w);
}

LatticeSeries imaginary_part_sum(const RootDatum& d, const TruncProfile& p, IndexWeight w) {
  auto idx = make_grade_index(d.rank(), p);
  std::vector<std::vector<mpz_class>> tally(idx->size());
  for (int j = 0; j <= p.delta_cap; ++j) {
    const long g = idx->find(scale(d.delta, j));
    if (g < 0) break;
    auto& t = tally[static_cast<std::size_t>(g)];
    MultiPartitionStream stream(d.n, j);
    while (auto mp = stream.next()) {
      const std::size_t st = w == IndexWeight::Gk ? static_cast<std::size_t>(mp->distinct_sizes())
                                                  : mp->num_parts();
      if (t.size() <= st) t.resize(st + 1);
      t[st] += 1;
    }
  }
  return from_tally(idx, tally, w);
}

LatticeSeries gk_sum(const RootDatum& d, const WordH& h, const TruncProfile& p, IndexWeight w) {
  return real_part_sum(d, real_slots(d, h, p), p, w) * imaginary_part_sum(d, p, w);
}

long CombIndex::size() const {
  return static_cast<long>(plus.total()) + static_cast<long>(minus.total()) +
         static_cast<long>(zero.num_parts());
}

void for_each_comb_index(const RootDatum& d, const WordH& h, const TruncProfile& p,
                         const std::function<void(const CombIndex&, const RootVec&)>& f) {
  const std::vector<RealSlot> slots = real_slots(d, h, p);
  CombIndex cur;
  std::function<void(std::size_t, const RootVec&)> rec = [&](std::size_t i, const RootVec& wt) {
    if (i == slots.size()) {
      for (int j = 0;; ++j) {
        const RootVec total = add(wt, scale(d.delta, j));
        if (!p.contains(total)) break;
        MultiPartitionStream stream(d.n, j);
        while (auto mp = stream.next()) {
          cur.zero = *mp;
          f(cur, total);
        }
      }
      cur.zero = MultiPartition();
      return;
    }
    const RealSlot& s = slots[i];
    SupportSeq& seq = s.k >= 1 ? cur.minus : cur.plus;
    RootVec w = wt;
    for (unsigned c = 0;; ++c) {
      if (!p.contains(w)) break;
      seq.set(static_cast<int>(s.k), c);
      rec(i + 1, w);
      w = add(w, s.beta);
    }
    seq.set(static_cast<int>(s.k), 0);
  };
  rec(0, RootVec(d.rank(), 0));
}

TSeries correction_factor_product(const RootDatum& d, int order) {
  TSeries s = TSeries::one(order);
  for (int e : d.exponents) {
    const QPoly num = -QPoly::monomial(1, static_cast<std::size_t>(e));
    const QPoly den = QPoly::monomial(1, static_cast<std::size_t>(e + 1));
    for (int j = 1; j <= order; ++j) {
      s.mul_binomial(num, j);
      s.div_binomial(den, j);
    }
  }
  return s;
}

TSeries correction_factor_sum(const RootDatum& d, int order) {
  TSeries s(order);
  const int n = d.n;
  for (int k = 0; k <= order; ++k) {
    MultiPartitionStream stream(n, k);
    while (auto mp = stream.next()) {
      QPoly q(1L);
      for (int i = 0; i < n; ++i) {
        const Partition& part = mp->components()[static_cast<std::size_t>(i)];
        const std::size_t step = static_cast<std::size_t>(d.exponents[static_cast<std::size_t>(i)] + 1);
        std::set<int> sizes(part.parts().begin(), part.parts().end());
        for (int j : sizes) {
          const std::size_t m = static_cast<std::size_t>(part.multiplicity(j));
          // (1 - q) q^{-(d+1) m} written in u = q^{-1}
          q *= QPoly::monomial(1, step * m) - QPoly::monomial(1, step * m - 1);
        }
      }
      s[k] += q;
    }
  }
  return s;
}

LatticeSeries weyl_numerator(const RootDatum& d, const Weight& lambda, const TruncProfile& p) {
  LatticeSeries s(d.rank(), p);
  for (const DotTerm& t : enumerate_dot_terms(d, lambda, p)) s.add(t.shift, QPoly(t.sign));
  return s;
}

LatticeSeries h_poly_via_gk_sum(const RootDatum& d, const Weight& lambda, const TruncProfile& p,
                                const WordH& h) {
  return weyl_numerator(d, lambda, p) * gk_sum(d, h, p, IndexWeight::Gk);
}

LatticeSeries h_poly_via_kinfty(const RootDatum& d, const Weight& lambda, const TruncProfile& p) {
  const LatticeSeries kinf = gk_product(d, p, ProductMode::Gk);
  const auto terms = enumerate_dot_terms(d, lambda, p);
  LatticeSeries out(kinf.index_ptr());
  const GradeIndex& idx = kinf.index();
  for (std::size_t g = 0; g < out.size(); ++g) {
    for (const DotTerm& t : terms) {
      const long src = idx.unshifted(g, t.shift);
      if (src < 0) continue;
      const QPoly& k = kinf.at(static_cast<std::size_t>(src));
      if (t.sign > 0) {
        out.at(g) += k;
      } else {
        out.at(g) -= k;
      }
    }
  }
  return out;
}

LatticeSeries h_poly(const RootDatum& d, const Weight& lambda, const TruncProfile& p,
                     const WordH& h) {
  LatticeSeries a = h_poly_via_gk_sum(d, lambda, p, h);
  LatticeSeries b = h_poly_via_kinfty(d, lambda, p);
  for (std::size_t g = 0; g < a.size(); ++g) {
    if (!(a.at(g) == b.at(g))) {
      throw IdentityFailure("H at " + grade_label(a.index().grade(g)) + ": GK-sum route " +
                            a.at(g).to_string() + " vs K^inf route " + b.at(g).to_string());
    }
  }
  return a;
}

LatticeSeries character_by_division(const RootDatum& d, const Weight& lambda,
                                    const TruncProfile& p) {
  return weyl_numerator(d, lambda, p).divided_by(gk_product(d, p, ProductMode::Denominator));
}

LatticeSeries freudenthal_multiplicities(const RootDatum& d, const Weight& lambda,
                                         const TruncProfile& p) {
  if (!is_dominant(lambda)) throw NotRegularDominant("lambda is not dominant");
  const auto roots = positive_roots_within(d, p.delta_cap, p.classical_cap);
  auto idx = make_grade_index(d.rank(), p);
  std::vector<mpz_class> m(idx->size());
  m[0] = 1;
  for (std::size_t g = 1; g < idx->size(); ++g) {
    const RootVec& beta = idx->grade(g);
    mpz_class rhs = 0;
    for (const RootMult& rm : roots) {
      const RootVec& a = rm.root;
      const long base = weight_root_inner(lambda, a) - root_inner(d.cartan, beta, a);
      const long aa = root_inner(d.cartan, a, a);
      long cur = static_cast<long>(g);
      for (long k = 1;; ++k) {
        cur = idx->unshifted(static_cast<std::size_t>(cur), a);
        if (cur < 0) break;
        const mpz_class& mk = m[static_cast<std::size_t>(cur)];
        if (mk != 0) rhs += mpz_class(rm.mult) * mpz_class(base + k * aa) * mk;
      }
    }
    rhs *= 2;
    const long den = 2 * (weight_root_inner(lambda, beta) + height(beta)) -
                     root_inner(d.cartan, beta, beta);
    if (den == 0) {
      if (rhs != 0) {
        throw IdentityFailure("Freudenthal recursion degenerate at " + grade_label(beta));
      }
      continue;
    }
    if (rhs % den != 0) {
      throw IdentityFailure("Freudenthal recursion not integral at " + grade_label(beta));
    }
    m[g] = rhs / den;
  }
  LatticeSeries s(idx);
  for (std::size_t g = 0; g < m.size(); ++g) {
    if (m[g] != 0) s.at(g) = QPoly(m[g]);
  }
  return s;
}

LatticeSeries weyl_kac_character(const RootDatum& d, const Weight& lambda, const TruncProfile& p) {
  LatticeSeries a = character_by_division(d, lambda, p);
  LatticeSeries b = freudenthal_multiplicities(d, lambda, p);
  for (std::size_t g = 0; g < a.size(); ++g) {
    if (!(a.at(g) == b.at(g))) {
      throw IdentityFailure("character at " + grade_label(a.index().grade(g)) + ": Weyl-Kac " +
                            a.at(g).to_string() + " vs Freudenthal " + b.at(g).to_string());
    }
  }
  return a;
}

KostantOracle::KostantOracle(const RootDatum& d, const TruncProfile& p) {
  for (const RootMult& rm : positive_roots_within(d, p.delta_cap, p.classical_cap)) {
    for (int c = 0; c < rm.mult; ++c) roots_.push_back(rm.root);
  }
}

mpz_class KostantOracle::count(const RootVec& beta) {
  if (!in_qplus(beta)) return 0;
  return count_from(beta, 0);
}

mpz_class KostantOracle::count_from(const RootVec& beta, std::size_t first) {
  if (is_zero(beta)) return 1;
  const auto key = std::make_pair(beta, first);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  mpz_class total = 0;
  for (std::size_t i = first; i < roots_.size(); ++i) {
    RootVec rest = sub(beta, roots_[i]);
    if (in_qplus(rest)) total += count_from(rest, i);
  }
  memo_.emplace(key, total);
  return total;
}

TSeries ev_specialize(const LatticeSeries& s) {
  TSeries t(s.profile().delta_cap);
  s.for_each([&](const RootVec& g, const QPoly& c) { t[delta_degree(g)] += c; });
  return t;
}

TSeries ev_specialize_stable(const std::function<LatticeSeries(const TruncProfile&)>& build,
                             const TruncProfile& p, int max_classical_cap) {
  TruncProfile cur = p;
  TSeries prev = ev_specialize(build(cur));
  for (;;) {
    TruncProfile wider = cur;
    wider.classical_cap += 4;
    TSeries next = ev_specialize(build(wider));
    if (next == prev) return prev;
    if (!p.adaptive || wider.classical_cap + 4 > max_classical_cap) {
      int k = 0;
      while (k <= prev.order() && prev[k] == next[k]) ++k;
      throw NotStabilized("t^" + std::to_string(k) + " coefficient changes between classical caps " +
                          std::to_string(cur.classical_cap) + " and " +
                          std::to_string(wider.classical_cap));
    }
    cur = wider;
    prev = std::move(next);
  }
}

Report verify_gk_full(const RootDatum& d, const WordH& h, const TruncProfile& p) {
  Report rep("gk-full", "GK product equals the sum over combinatorial indices, " + d.label);
  rep.add_part(guarded("gk", "(1-u)^d weighting", [&](Report& r) {
    compare_series(r, "sum vs product", gk_sum(d, h, p, IndexWeight::Gk),
                   gk_product(d, p, ProductMode::Gk));
  }));
  rep.add_part(guarded("inverse-cs", "u^|c| weighting", [&](Report& r) {
    compare_series(r, "sum vs product", gk_sum(d, h, p, IndexWeight::InverseCs),
                   gk_product(d, p, ProductMode::InverseCs));
  }));
  // Literal enumeration of the indices when there are few enough of them.
  mpz_class total = 0;
  gk_product(d, p, ProductMode::Kostant).for_each([&](const RootVec&, const QPoly& c) {
    total += c.constant_term();
  });
  if (total <= 200000) {
    rep.add_part(guarded("enumerated", "literal index enumeration", [&](Report& r) {
      LatticeSeries gk(d.rank(), p), cs(d.rank(), p);
      const QPoly one_minus_u{1, -1};
      for_each_comb_index(d, h, p, [&](const CombIndex& c, const RootVec& wt) {
        gk.add(wt, pow(one_minus_u, static_cast<unsigned>(c.d())));
        cs.add(wt, QPoly::monomial(1, static_cast<std::size_t>(c.size())));
      });
      compare_series(r, "enumerated vs tallied (1-u)^d", gk, gk_sum(d, h, p, IndexWeight::Gk));
      compare_series(r, "enumerated vs tallied u^|c|", cs,
                     gk_sum(d, h, p, IndexWeight::InverseCs));
    }));
  } else {
    rep.note = "literal index enumeration skipped (" + total.get_str() + " indices)";
  }
  return rep;
}

Report verify_gk_real(const RootDatum& d, const WordH& h, const TruncProfile& p, int kmax) {
  Report rep("gk-real", "real-root prefix products against index sums, " + d.label);
  try {
    const BetaRange br = beta_range(d, h, p.delta_cap);
    auto check = [&](const std::string& label, const std::vector<RootVec>& betas) {
      std::vector<RealSlot> slots;
      LatticeSeries gk = LatticeSeries::one(d.rank(), p);
      LatticeSeries cs = LatticeSeries::one(d.rank(), p);
      for (const RootVec& b : betas) {
        if (!p.contains(b)) continue;
        slots.push_back({0, b});
        gk.mul_binomial(b, -QPoly::u());
        gk.div_binomial(b, QPoly(1L));
        cs.div_binomial(b, QPoly::u());
      }
      Report r = guarded(label, label, [&](Report& part) {
        compare_series(part, "(1-u)^d", real_part_sum(d, slots, p, IndexWeight::Gk), gk);
        compare_series(part, "u^|c|", real_part_sum(d, slots, p, IndexWeight::InverseCs), cs);
      });
      rep.add_part(std::move(r));
    };
    for (int k = -kmax; k <= kmax; ++k) {
      std::vector<RootVec> prefix;
      if (k >= 1) {
        prefix.assign(br.positive.begin(), br.positive.begin() + std::min<std::size_t>(k, br.positive.size()));
      } else {
        const std::size_t len = static_cast<std::size_t>(1 - k);
        prefix.assign(br.nonpositive.begin(),
                      br.nonpositive.begin() + std::min(len, br.nonpositive.size()));
      }
      check("R(" + std::to_string(k) + ")", prefix);
    }
    check("R_<", br.positive);
    check("R_>", br.nonpositive);
  } catch (const std::exception& e) {
    rep.fail(e.what());
  }
  return rep;
}

Report verify_gk_imag(const RootDatum& d, const TruncProfile& p, const std::vector<int>& ns,
                      int order) {
  Report rep("gk-imag", "imaginary-root products against multi-partition sums");
  for (int n : ns) {
    rep.add_part(guarded("n=" + std::to_string(n), "multi-partitions with " + std::to_string(n) +
                                                       " components", [&](Report& r) {
      TSeries gk_sum_t(order), cs_sum_t(order);
      const QPoly one_minus_u{1, -1};
      for (int k = 0; k <= order; ++k) {
        MultiPartitionStream stream(n, k);
        while (auto mp = stream.next()) {
          gk_sum_t[k] += pow(one_minus_u, static_cast<unsigned>(mp->distinct_sizes()));
          cs_sum_t[k] += QPoly::monomial(1, mp->num_parts());
        }
      }
      TSeries gk_prod = TSeries::one(order), cs_prod = TSeries::one(order);
      for (int k = 1; k <= order; ++k) {
        for (int c = 0; c < n; ++c) {
          gk_prod.mul_binomial(-QPoly::u(), k);
          gk_prod.div_binomial(QPoly(1L), k);
          cs_prod.div_binomial(QPoly::u(), k);
        }
      }
      compare_tseries(r, "(1-u)^d", gk_sum_t, gk_prod);
      compare_tseries(r, "u^parts", cs_sum_t, cs_prod);
    }));
  }
  rep.add_part(guarded(d.label, "imaginary sector inside the profile", [&](Report& r) {
    LatticeSeries gk = LatticeSeries::one(d.rank(), p);
    LatticeSeries cs = LatticeSeries::one(d.rank(), p);
    for (int k = 1; k <= p.delta_cap; ++k) {
      const RootVec kd = scale(d.delta, k);
      if (!p.contains(kd)) break;
      for (int c = 0; c < d.n; ++c) {
        gk.mul_binomial(kd, -QPoly::u());
        gk.div_binomial(kd, QPoly(1L));
        cs.div_binomial(kd, QPoly::u());
      }
    }
    compare_series(r, "(1-u)^d", imaginary_part_sum(d, p, IndexWeight::Gk), gk);
    compare_series(r, "u^parts", imaginary_part_sum(d, p, IndexWeight::InverseCs), cs);
  }));
  return rep;
}

Report verify_correction_factor(const RootDatum& d, int order) {
  return guarded("correction-factor", "correction factor A, product form vs sum form, " + d.label,
                 [&](Report& r) {
                   compare_tseries(r, "product vs sum", correction_factor_product(d, order),
                                   correction_factor_sum(d, order));
                 });
}

namespace {

void check_orbit_signs(Report& r, const RootDatum& d, const Weight& lambda, const TruncProfile& p,
                       const LatticeSeries& h) {
  // H_{lambda+rho}(mu; 1) is the sign of w where -(w o lambda) = mu, else 0.
  LatticeSeries at_one = h.eval_at(1);
  LatticeSeries signs = weyl_numerator(d, lambda, p);
  compare_series(r, "H at u=1 vs orbit signs", at_one, signs);
}

}  // namespace

Report verify_cs_rho(const RootDatum& d, const TruncProfile& p, const WordH& h) {
  Report rep("cs-rho", "chi_q(V(rho)) product identity and its u=-1 value, " + d.label);
  const Weight zero = zero_weight(d);
  try {
    LatticeSeries hs = h_poly_via_gk_sum(d, zero, p, h);
    LatticeSeries hk = h_poly_via_kinfty(d, zero, p);
    rep.add_part(guarded("two-routes", "GK sum route vs K^inf route",
                         [&](Report& r) { compare_series(r, "H_rho", hs, hk); }));
    rep.add_part(guarded("product", "H_rho vs prod (1 - u z^-a)^mult", [&](Report& r) {
      compare_series(r, "H_rho", hs, gk_product(d, p, ProductMode::Cs));
    }));
    rep.add_part(guarded("u=-1", "H_rho at u=-1 vs character of V(rho)", [&](Report& r) {
      LatticeSeries minus = hs.eval_at(-1);
      compare_series(r, "vs Weyl-Kac", minus, character_by_division(d, rho(d), p));
      compare_series(r, "vs Freudenthal", minus, freudenthal_multiplicities(d, rho(d), p));
    }));
    rep.add_part(guarded("u=1", "H_rho at u=1 vs orbit signs",
                         [&](Report& r) { check_orbit_signs(r, d, zero, p, hs); }));
  } catch (const std::exception& e) {
    rep.fail(e.what());
  }
  return rep;
}

Report verify_cs_general(const RootDatum& d, const Weight& lambda, const TruncProfile& p,
                         const WordH& h) {
  Report rep("cs-general", "Casselman-Shalika identity for lambda=" + to_string(lambda) + ", " +
                               d.label);
  try {
    const LatticeSeries hp = h_poly(d, lambda, p, h);
    const LatticeSeries chi_div = character_by_division(d, lambda, p);
    const LatticeSeries chi = freudenthal_multiplicities(d, lambda, p);
    const LatticeSeries chi_rho = freudenthal_multiplicities(d, rho(d), p);
    rep.add_part(guarded("oracle", "Weyl-Kac division vs Freudenthal",
                         [&](Report& r) { compare_series(r, "dim V(lambda)", chi_div, chi); }));
    rep.add_part(guarded("product", "H_{lambda+rho} = chi(V(lambda)) chi_q(V(rho))", [&](Report& r) {
      compare_series(r, "H", hp, chi * gk_product(d, p, ProductMode::Cs));
    }));
    rep.add_part(guarded("u=0", "H at u=0 is the weight multiplicity of V(lambda)",
                         [&](Report& r) { compare_series(r, "H(u=0)", hp.eval_at(0), chi); }));
    rep.add_part(guarded("u=-1", "H at u=-1 is the multiplicity in V(lambda) x V(rho)",
                         [&](Report& r) { compare_series(r, "H(u=-1)", hp.eval_at(-1), chi * chi_rho); }));
  } catch (const std::exception& e) {
    rep.fail(e.what());
  }
  return rep;
}

Report verify_support_law(const RootDatum& d, const Weight& lambda, const TruncProfile& p,
                          const WordH& h) {
  Report rep("support-law", "supports of H, V(lambda+rho) and V(lambda) x V(rho), lambda=" +
                                to_string(lambda) + ", " + d.label);
  try {
    const LatticeSeries hp = h_poly(d, lambda, p, h);
    const LatticeSeries chi_lr = weyl_kac_character(d, weight_add(lambda, rho(d)), p);
    const LatticeSeries tensor =
        freudenthal_multiplicities(d, lambda, p) * freudenthal_multiplicities(d, rho(d), p);
    const LatticeSeries h_minus = hp.eval_at(-1);
    auto support = [&](Report& r, const std::string& what, const LatticeSeries& a,
                       const LatticeSeries& b) {
      for (std::size_t g = 0; g < a.size(); ++g) {
        const bool x = !a.at(g).is_zero(), y = !b.at(g).is_zero();
        r.expect(x == y, [&] {
          return Mismatch{what + " " + grade_label(a.index().grade(g)), a.at(g).to_string(),
                          b.at(g).to_string()};
        });
      }
    };
    rep.add_part(guarded("H-nonzero", "H(mu) != 0 iff lambda+rho-mu is a weight of V(lambda+rho)",
                         [&](Report& r) { support(r, "H vs V(lambda+rho)", hp, chi_lr); }));
    rep.add_part(guarded("tensor-support", "weights of V(lambda) x V(rho) and V(lambda+rho)",
                         [&](Report& r) { support(r, "tensor vs V(lambda+rho)", tensor, chi_lr); }));
    rep.add_part(guarded("chi-minus-one", "support of H at u=-1",
                         [&](Report& r) { support(r, "H(u=-1) vs V(lambda+rho)", h_minus, chi_lr); }));
  } catch (const std::exception& e) {
    rep.fail(e.what());
  }
  return rep;
}

Report verify_q_kostant(const RootDatum& d, const Weight& lambda, const TruncProfile& p,
                        const WordH& h) {
  Report rep("q-kostant", "q-deformed Kostant multiplicity formula, lambda=" + to_string(lambda) +
                              ", " + d.label);
  try {
    const LatticeSeries hp = h_poly(d, lambda, p, h);
    const LatticeSeries k1 = gk_product(d, p, ProductMode::InverseCs);
    const LatticeSeries chi = freudenthal_multiplicities(d, lambda, p);
    const LatticeSeries rhs = hp * k1;
    rep.add_part(guarded("deformed", "sum_mu H(mu) K^1_q(beta-mu) is u-free and equals dim",
                         [&](Report& r) {
                           for (std::size_t g = 0; g < rhs.size(); ++g) {
                             r.expect(rhs.at(g).is_constant(), [&] {
                               return Mismatch{"u-degree " + grade_label(rhs.index().grade(g)),
                                               rhs.at(g).to_string(), "constant"};
                             });
                           }
                           compare_series(r, "sum vs dim V(lambda)", rhs, chi);
                         }));
    rep.add_part(guarded("u=1", "H at u=1 vs orbit signs",
                         [&](Report& r) { check_orbit_signs(r, d, lambda, p, hp); }));
    rep.add_part(guarded("classical", "dim = sum_w sign K(beta - shift_w)", [&](Report& r) {
      KostantOracle oracle(d, p);
      const auto terms = enumerate_dot_terms(d, lambda, p);
      const GradeIndex& idx = chi.index();
      for (std::size_t g = 0; g < idx.size(); ++g) {
        mpz_class s = 0;
        for (const DotTerm& t : terms) {
          const RootVec rest = sub(idx.grade(g), t.shift);
          if (in_qplus(rest)) s += t.sign * oracle.count(rest);
        }
        r.expect(QPoly(s) == chi.at(g), [&] {
          return Mismatch{grade_label(idx.grade(g)), s.get_str(), chi.at(g).to_string()};
        });
      }
    }));
  } catch (const std::exception& e) {
    rep.fail(e.what());
  }
  return rep;
}

Report verify_kostant_conv(const RootDatum& d, const TruncProfile& p) {
  return guarded("kostant-conv", "K^inf_q * K^1_q = K and the classical limits, " + d.label,
                 [&](Report& r) {
                   const LatticeSeries kinf = gk_product(d, p, ProductMode::Gk);
                   const LatticeSeries k1 = gk_product(d, p, ProductMode::InverseCs);
                   KostantOracle oracle(d, p);
                   LatticeSeries k(d.rank(), p);
                   for (std::size_t g = 0; g < k.size(); ++g) {
                     k.at(g) = QPoly(oracle.count(k.index().grade(g)));
                   }
                   compare_series(r, "K^inf*K^1 vs vector partitions", kinf * k1, k);
                   compare_series(r, "Kostant product vs vector partitions",
                                  gk_product(d, p, ProductMode::Kostant), k);
                   compare_series(r, "K^inf at u=0", kinf.eval_at(0), k);
                   compare_series(r, "K^1 at u=1", k1.eval_at(1), k);
                 });
}

Report verify_kostant_recur(const RootDatum& d, const TruncProfile& p) {
  return guarded("kostant-recur", "recurrence for K^inf_q from K and K^1_q, " + d.label,
                 [&](Report& r) {
                   const LatticeSeries kinf = gk_product(d, p, ProductMode::Gk);
                   const LatticeSeries k1 = gk_product(d, p, ProductMode::InverseCs);
                   KostantOracle oracle(d, p);
                   const GradeIndex& idx = kinf.index();
                   r.expect(kinf.at(0) == QPoly(1L) && k1.at(0) == QPoly(1L), [&] {
                     return Mismatch{"beta=0", kinf.at(0).to_string(), k1.at(0).to_string()};
                   });
                   for (std::size_t g = 1; g < idx.size(); ++g) {
                     QPoly rhs = QPoly(oracle.count(idx.grade(g))) - k1.at(g);
                     for (std::size_t v = 1; v < idx.size(); ++v) {
                       if (v == g) continue;
                       const long rest = idx.unshifted(g, idx.grade(v));
                       if (rest <= 0) continue;
                       rhs -= kinf.at(v) * k1.at(static_cast<std::size_t>(rest));
                     }
                     r.expect(kinf.at(g) == rhs, [&] {
                       return Mismatch{grade_label(idx.grade(g)), kinf.at(g).to_string(),
                                       rhs.to_string()};
                     });
                   }
                 });
}

Report verify_h_via_kinfty(const RootDatum& d, const Weight& lambda, const TruncProfile& p,
                           const WordH& h) {
  Report rep("h-via-kinfty", "H_{lambda+rho} by both routes and its K^1_q expansion, lambda=" +
                                 to_string(lambda) + ", " + d.label);
  try {
    const LatticeSeries hs = h_poly_via_gk_sum(d, lambda, p, h);
    const LatticeSeries hk = h_poly_via_kinfty(d, lambda, p);
    rep.add_part(guarded("two-routes", "numerator x GK sum vs alternating K^inf sum",
                         [&](Report& r) { compare_series(r, "H", hs, hk); }));
    rep.add_part(guarded("expansion", "H via H(.;1), dim V(lambda), K^1_q and K^inf_q", [&](Report& r) {
      const LatticeSeries kinf = gk_product(d, p, ProductMode::Gk);
      const LatticeSeries k1 = gk_product(d, p, ProductMode::InverseCs);
      const LatticeSeries conv = kinf * k1;
      const LatticeSeries chi = freudenthal_multiplicities(d, lambda, p);
      const LatticeSeries h_one = hs.eval_at(1);
      const auto terms = enumerate_dot_terms(d, lambda, p);
      const GradeIndex& idx = kinf.index();
      for (std::size_t g = 0; g < idx.size(); ++g) {
        QPoly rhs = h_one.at(g) + chi.at(g);
        for (const DotTerm& t : terms) {
          const long gamma = idx.unshifted(g, t.shift);
          if (gamma < 0) continue;
          const std::size_t gi = static_cast<std::size_t>(gamma);
          QPoly term = k1.at(gi);
          if (gi != 0) {
            // sum over 0 < nu < gamma of K^inf(nu) K^1(gamma - nu)
            term += conv.at(gi) - k1.at(gi) - kinf.at(gi);
          }
          if (t.sign > 0) {
            rhs -= term;
          } else {
            rhs += term;
          }
        }
        r.expect(hs.at(g) == rhs, [&] {
          return Mismatch{grade_label(idx.grade(g)), hs.at(g).to_string(), rhs.to_string()};
        });
      }
    }));
  } catch (const std::exception& e) {
    rep.fail(e.what());
  }
  return rep;
}

Report verify_gr_tensor(const RootDatum& d, const Weight& lambda, const TruncProfile& p,
                        const WordH& h) {
  Report rep("gr-tensor", "tensor multiplicities from K^inf at u=-1, lambda=" + to_string(lambda) +
                              ", " + d.label);
  try {
    const LatticeSeries tensor =
        freudenthal_multiplicities(d, lambda, p) * freudenthal_multiplicities(d, rho(d), p);
    const LatticeSeries kinf_m1 = gk_product(d, p, ProductMode::Gk).eval_at(-1);
    const auto terms = enumerate_dot_terms(d, lambda, p);
    rep.add_part(guarded("alternating", "sum_w sign K^inf_{-1}(mu - shift_w)", [&](Report& r) {
      const GradeIndex& idx = tensor.index();
      for (std::size_t g = 0; g < idx.size(); ++g) {
        mpz_class s = 0;
        for (const DotTerm& t : terms) {
          const long src = idx.unshifted(g, t.shift);
          if (src >= 0) s += t.sign * kinf_m1.at(static_cast<std::size_t>(src)).constant_term();
        }
        r.expect(QPoly(s) == tensor.at(g), [&] {
          return Mismatch{grade_label(idx.grade(g)), s.get_str(), tensor.at(g).to_string()};
        });
      }
    }));
    rep.add_part(guarded("h-at-minus-one", "H at u=-1 vs tensor multiplicity", [&](Report& r) {
      compare_series(r, "H(u=-1)", h_poly(d, lambda, p, h).eval_at(-1), tensor);
    }));
  } catch (const std::exception& e) {
    rep.fail(e.what());
  }
  return rep;
}

Report verify_carlitz(int bound) {
  Report rep("carlitz", "A1~1 alternating sums over k(k+1)/2, k(k-1)/2 shifts, bound " +
                            std::to_string(bound));
  try {
    const RootDatum d = build_root_datum("A1~1");
    const TruncProfile p{bound, bound, false};
    const WordH h = default_word(d);
    const Weight zero = zero_weight(d);
    rep.add_part(guarded("orbit", "dot shifts are (k(k+1)/2, k(k-1)/2) with sign (-1)^k",
                         [&](Report& r) {
                           std::set<std::pair<RootVec, int>> want, got;
                           for (long k = -2 * bound - 2; k <= 2 * bound + 2; ++k) {
                             RootVec s{static_cast<int>(k * (k + 1) / 2),
                                       static_cast<int>(k * (k - 1) / 2)};
                             if (p.contains(s)) want.insert({s, k % 2 == 0 ? 1 : -1});
                           }
                           for (const DotTerm& t : enumerate_dot_terms(d, zero, p)) {
                             got.insert({t.shift, t.sign});
                           }
                           r.expect(want == got, [&] {
                             return Mismatch{"orbit", std::to_string(got.size()) + " shifts",
                                             std::to_string(want.size()) + " shifts"};
                           });
                         }));
    const LatticeSeries hp = h_poly(d, zero, p, h);
    const LatticeSeries kinf = gk_product(d, p, ProductMode::Gk);
    KostantOracle oracle(d, p);
    rep.add_part(guarded("identity", "H_rho(m,n) = sum_k (-1)^k K^inf_q(...) and its u=0 limit",
                         [&](Report& r) {
                           for (int m = 0; m <= bound; ++m) {
                             for (int n = 0; n <= bound; ++n) {
                               if (m == 0 && n == 0) continue;
                               QPoly sum;
                               mpz_class classical = 0;
                               for (long k = -2 * bound - 2; k <= 2 * bound + 2; ++k) {
                                 const RootVec arg{static_cast<int>(m - k * (k + 1) / 2),
                                                   static_cast<int>(n - k * (k - 1) / 2)};
                                 if (!in_qplus(arg)) continue;
                                 const int sign = k % 2 == 0 ? 1 : -1;
                                 sum += kinf.get(arg) * mpz_class(sign);
                                 classical += sign * oracle.count(arg);
                               }
                               const RootVec mu{m, n};
                               const std::string at = "(m,n)=(" + std::to_string(m) + "," +
                                                      std::to_string(n) + ")";
                               r.expect(hp.get(mu) == sum, [&] {
                                 return Mismatch{at, hp.get(mu).to_string(), sum.to_string()};
                               });
                               r.expect(classical == 0, [&] {
                                 return Mismatch{at + " u=0", classical.get_str(), "0"};
                               });
                               r.expect(eval_at(hp.get(mu), 0L) == 0, [&] {
                                 return Mismatch{at + " H at u=0", hp.get(mu).to_string(), "0"};
                               });
                             }
                           }
                         }));
  } catch (const std::exception& e) {
    rep.fail(e.what());
  }
  return rep;
}

Report verify_basic_specialization(const RootDatum& d, const TruncProfile& p, const WordH& h,
                                   bool allow_large) {
  const int r = d.num_classical_positive();
  const int big_n = d.dim_classical();
  Report rep("basic-specialization", "EV_t of H_rho against (1-u)^r prod (1-u t^k)^N, " + d.label +
                                         " (r=" + std::to_string(r) + ", N=" + std::to_string(big_n) +
                                         ")");
  const bool large = big_n > 8;
  if (large && !allow_large) {
    rep.note = "skipped: N=" + std::to_string(big_n) + " is beyond desk scale without the opt-in flag";
    return rep;
  }
  if (large && p.delta_cap > 2) {
    rep.fail("large-rank specialization is limited to delta cap <= 2");
    return rep;
  }
  try {
    std::function<LatticeSeries(const TruncProfile&)> build;
    if (large) {
      build = [&](const TruncProfile& q) { return gk_product(d, q, ProductMode::Cs); };
    } else {
      build = [&](const TruncProfile& q) { return h_poly(d, zero_weight(d), q, h); };
    }
    const TSeries ev = ev_specialize_stable(build, p);
    TSeries target = euler_product(big_n, Deform::WithU, Direction::Direct, p.delta_cap);
    const QPoly pref = QPoly::one_minus_u_pow(static_cast<unsigned>(r));
    for (int k = 0; k <= p.delta_cap; ++k) target[k] *= pref;
    compare_tseries(rep, "EV_t vs product", ev, target);
    for (int k = 0; k <= p.delta_cap; ++k) {
      const std::string at = "k=" + std::to_string(k);
      QPoly quotient;
      try {
        quotient = exact_div_pow_one_minus_u(ev[k], static_cast<unsigned>(r));
      } catch (const NotDivisible& e) {
        rep.expect(false, [&] { return Mismatch{at + " divisibility", ev[k].to_string(), e.what()}; });
        continue;
      }
      rep.expect(true, [] { return Mismatch{}; });
      const QPoly eps = epsilon_qn(big_n, k);
      rep.expect(quotient == eps, [&] {
        return Mismatch{at + " quotient vs eps_{q,N}", quotient.to_string(), eps.to_string()};
      });
      if (big_n == 24) {
        const mpz_class tau = ramanujan_tau(k + 1);
        rep.expect(eval_at(quotient, 1L) == tau, [&] {
          return Mismatch{at + " quotient at u=1 vs tau(k+1)", eval_at(quotient, 1L).get_str(),
                          tau.get_str()};
        });
      }
    }
  } catch (const std::exception& e) {
    rep.fail(e.what());
  }
  return rep;
}

}  // namespace qaffine
