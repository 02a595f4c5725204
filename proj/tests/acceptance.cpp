// Acceptance run: one PASS/FAIL line per criterion, each with its wall time
// and runtime limit.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qaffine/charseries.hpp"
#include "qaffine/cli.hpp"
#include "qaffine/qseries.hpp"
#include "qaffine/verify.hpp"

using namespace qaffine;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void need(const Report& r) {
    if (!r.passed) {
      ok = false;
      if (detail.empty()) detail = summary_line(r);
    }
  }
  void need(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (detail.empty()) detail = what;
    }
  }
};

struct Criterion {
  int number;
  std::string name;
  std::optional<double> limit_seconds;
  std::function<Outcome()> body;
};

Report for_lambdas(const RootDatum& d, const std::function<Report(const Weight&)>& f,
                   const std::string& id) {
  Report rep(id, id);
  for (const Weight& l : {zero_weight(d), fundamental_weight(d, 0)}) {
    Report part = f(l);
    part.id = "lambda=" + to_string(l);
    rep.add_part(std::move(part));
  }
  return rep;
}

std::vector<Criterion> criteria() {
  return {
      {1, "published constants", 1.0,
       [] {
         Outcome o;
         o.need(verify_reference_values());
         o.need(epsilon_qn(1, 5) == QPoly{0, -1, 2}, "eps_q(5)");
         o.need(epsilon_qn(1, 6) == QPoly{0, -1, 2, -1}, "eps_q(6)");
         o.need(epsilon_qn(24, 2) == QPoly{0, -24, 276}, "eps_{q,24}(2)");
         o.need(p_qn(24, 1) == QPoly{24, -24}, "p_{q,24}(1)");
         const QPoly om{1, -1};
         o.need(p_qn(24, 2) == QPoly(276) * om * om + QPoly(48) * om, "p_{q,24}(2)");
         o.need(ramanujan_tau(1) == 1 && ramanujan_tau(2) == -24 && ramanujan_tau(3) == 252,
                "tau(1..3)");
         const mpz_class p2 = eval_at(p_qn(24, 2), 0L), p1 = eval_at(p_qn(24, 1), 0L);
         o.need(p2 == 324 && p1 * ramanujan_tau(2) == -576 &&
                    p2 + p1 * ramanujan_tau(2) + ramanujan_tau(3) == 0,
                "u=0 check 324 - 576 + 252");
         return o;
       }},
      {2, "single and multi-partition recurrences to k=50", 30.0,
       [] {
         Outcome o;
         o.need(verify_single_partition_recurrence(50));
         for (int n : {1, 2, 3, 24}) o.need(verify_multi_recurrence(n, 50));
         return o;
       }},
      {3, "q-binomial to t^100, its u=0 limit, pentagonal to t^200", 30.0,
       [] {
         Outcome o;
         o.need(verify_q_binomial(100));
         o.need(verify_pentagonal(200));
         return o;
       }},
      {4, "GK two-path equality on A1~1, A2~1 at (6,12); real prefixes |k|<=8; imaginary n=1,2",
       120.0,
       [] {
         Outcome o;
         const TruncProfile p{6, 12, false};
         for (const char* t : {"A1~1", "A2~1"}) {
           const RootDatum d = build_root_datum(t);
           const WordH h = default_word(d);
           o.need(verify_gk_full(d, h, p));
           o.need(verify_gk_real(d, h, p, 8));
           o.need(verify_gk_imag(d, p, {1, 2}, 12));
         }
         return o;
       }},
      {5, "correction factor product = sum to t^6 on A1~1, A2~1", 60.0,
       [] {
         Outcome o;
         for (const char* t : {"A1~1", "A2~1"}) {
           const Report r = verify_correction_factor(build_root_datum(t), 6);
           o.need(r);
           o.need(r.checks == 7, "correction factor order");
         }
         return o;
       }},
      {6, "chi_q(V(rho)) identity and u=-1 value on A1~1 at (5,10)", 120.0,
       [] {
         Outcome o;
         const RootDatum d = build_root_datum("A1~1");
         o.need(verify_cs_rho(d, TruncProfile{5, 10, false}, default_word(d)));
         return o;
       }},
      {7, "Casselman-Shalika suite, lambda in {0, Lambda_0}, A1~1 at (4,8)", 300.0,
       [] {
         Outcome o;
         const RootDatum d = build_root_datum("A1~1");
         const TruncProfile p{4, 8, false};
         const WordH h = default_word(d);
         o.need(for_lambdas(
             d, [&](const Weight& l) { return verify_cs_general(d, l, p, h); }, "cs-general"));
         o.need(for_lambdas(
             d, [&](const Weight& l) { return verify_support_law(d, l, p, h); },
             "support-law"));
         return o;
       }},
      {8, "Kostant suite on A1~1 at (4,8)", 300.0,
       [] {
         Outcome o;
         const RootDatum d = build_root_datum("A1~1");
         const TruncProfile p{4, 8, false};
         const WordH h = default_word(d);
         o.need(verify_kostant_conv(d, p));
         o.need(verify_kostant_recur(d, p));
         o.need(for_lambdas(
             d, [&](const Weight& l) { return verify_q_kostant(d, l, p, h); }, "q-kostant"));
         o.need(for_lambdas(
             d, [&](const Weight& l) { return verify_h_via_kinfty(d, l, p, h); },
             "h-via-kinfty"));
         o.need(for_lambdas(
             d, [&](const Weight& l) { return verify_gr_tensor(d, l, p, h); }, "gr-tensor"));
         return o;
       }},
      {9, "Carlitz identity and u=0 limit for 0<=m,n<=20", 60.0,
       [] {
         Outcome o;
         const Report r = verify_carlitz(20);
         o.need(r);
         return o;
       }},
      {10, "basic specialization on A1~1 to t^4 with stabilization and (1-u)^r divisibility",
       std::nullopt,
       [] {
         Outcome o;
         const RootDatum d = build_root_datum("A1~1");
         const Report r = verify_basic_specialization(d, TruncProfile{4, 10, false}, default_word(d));
         o.need(r);
         o.need(r.checks > 0, "basic specialization ran no checks");
         return o;
       }},
      {11, "verify all twice gives byte-identical reports", std::nullopt,
       [] {
         Outcome o;
         const std::vector<std::string> args = {"verify",      "all",  "--type",         "A1~1",
                                                "--delta-cap", "5",    "--height-cap",   "10",
                                                "--format",    "json"};
         std::ostringstream a, b, err;
         const int ca = run(args, a, err);
         const int cb = run(args, b, err);
         o.need(ca == kExitOk && cb == kExitOk, "verify all exit code " + std::to_string(ca) +
                                                    "/" + std::to_string(cb) + " " + err.str());
         o.need(!a.str().empty() && a.str() == b.str(), "reports differ between runs");
         return o;
       }},
  };
}

}  // namespace

int main() {
  int failures = 0;
  for (const Criterion& c : criteria()) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = o.ok;
    if (c.limit_seconds && secs >= *c.limit_seconds) {
      ok = false;
      if (o.detail.empty()) o.detail = "over the runtime limit";
    }
    if (!ok) ++failures;
    std::ostringstream line;
    line << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL") << " [" << std::fixed
         << std::setprecision(2) << secs << "s";
    if (c.limit_seconds) line << " < " << std::setprecision(0) << *c.limit_seconds << "s";
    line << "] " << c.name;
    if (!o.detail.empty()) line << " -- " << o.detail;
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
