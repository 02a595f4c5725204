#include "qaffine/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <stdexcept>

#include "qaffine/charseries.hpp"
#include "qaffine/errors.hpp"
#include "qaffine/qseries.hpp"

namespace qaffine {

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["title"] = r.title;
  j["passed"] = r.passed;
  j["checks"] = r.checks;
  if (r.first_failure) {
    j["first_failure"] = {{"where", r.first_failure->where},
                          {"lhs", r.first_failure->lhs},
                          {"rhs", r.first_failure->rhs}};
  } else {
    j["first_failure"] = nullptr;
  }
  if (!r.error.empty()) j["error"] = r.error;
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.parts.empty()) {
    j["parts"] = nlohmann::ordered_json::array();
    for (const Report& p : r.parts) j["parts"].push_back(to_json(p));
  }
  return j;
}

std::string summary_line(const Report& r) {
  std::string s = (r.passed ? "PASS " : "FAIL ") + r.id + " (" + std::to_string(r.checks) + " checks)";
  if (r.first_failure) {
    s += ": first failure at " + r.first_failure->where + ": " + r.first_failure->lhs +
         " != " + r.first_failure->rhs;
  } else if (!r.error.empty()) {
    s += ": " + r.error;
  }
  if (!r.note.empty()) s += " [" + r.note + "]";
  return s;
}

VerifyContext make_context(const std::string& type, const TruncProfile& profile) {
  VerifyContext ctx{build_root_datum(type), profile, {}, {}, std::nullopt, std::nullopt, 20, false};
  ctx.word = default_word(ctx.datum);
  return ctx;
}

namespace {

using Runner = std::function<Report(const VerifyContext&)>;

int order_or(const VerifyContext& c, int fallback) { return c.t_order.value_or(fallback); }

std::vector<Weight> lambdas_of(const VerifyContext& c) {
  if (!c.lambdas.empty()) return c.lambdas;
  return {zero_weight(c.datum), fundamental_weight(c.datum, 0)};
}

// One part per lambda, or the single report when only one lambda is asked for.
Report per_lambda(const std::string& id, const std::string& title, const VerifyContext& c,
                  const std::function<Report(const Weight&)>& one) {
  const auto ls = lambdas_of(c);
  if (ls.size() == 1) return one(ls.front());
  Report rep(id, title);
  for (const Weight& l : ls) {
    Report part = one(l);
    part.id = "lambda=" + to_string(l);
    rep.add_part(std::move(part));
  }
  return rep;
}

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"reference-values", [](const VerifyContext&) { return verify_reference_values(); }},
      {"eps-recurrence",
       [](const VerifyContext& c) {
         return verify_single_partition_recurrence(order_or(c, kDefaultIdentityOrder));
       }},
      {"multi-eps-recurrence",
       [](const VerifyContext& c) {
         const int order = order_or(c, kDefaultIdentityOrder);
         if (c.n) return verify_multi_recurrence(*c.n, order);
         Report rep("multi-eps-recurrence", "multi-partition recurrence for n in {1, 2, 3, 24}");
         for (int n : {1, 2, 3, 24}) {
           Report part = verify_multi_recurrence(n, order);
           part.id = "n=" + std::to_string(n);
           rep.add_part(std::move(part));
         }
         return rep;
       }},
      {"q-binomial", [](const VerifyContext& c) { return verify_q_binomial(order_or(c, 100)); }},
      {"pentagonal", [](const VerifyContext& c) { return verify_pentagonal(order_or(c, 200)); }},
      {"gk-full",
       [](const VerifyContext& c) { return verify_gk_full(c.datum, c.word, c.profile); }},
      {"gk-real",
       [](const VerifyContext& c) { return verify_gk_real(c.datum, c.word, c.profile); }},
      {"gk-imag",
       [](const VerifyContext& c) {
         return verify_gk_imag(c.datum, c.profile, {1, 2}, order_or(c, 12));
       }},
      {"correction-factor",
       [](const VerifyContext& c) {
         return verify_correction_factor(c.datum, order_or(c, c.profile.delta_cap));
       }},
      {"cs-rho", [](const VerifyContext& c) { return verify_cs_rho(c.datum, c.profile, c.word); }},
      {"cs-general",
       [](const VerifyContext& c) {
         return per_lambda("cs-general", "Casselman-Shalika identity", c, [&](const Weight& l) {
           return verify_cs_general(c.datum, l, c.profile, c.word);
         });
       }},
      {"support-law",
       [](const VerifyContext& c) {
         return per_lambda("support-law", "support law and support equality", c,
                           [&](const Weight& l) {
                             return verify_support_law(c.datum, l, c.profile, c.word);
                           });
       }},
      {"q-kostant",
       [](const VerifyContext& c) {
         return per_lambda("q-kostant", "q-deformed Kostant multiplicity formula", c,
                           [&](const Weight& l) {
                             return verify_q_kostant(c.datum, l, c.profile, c.word);
                           });
       }},
      {"kostant-conv", [](const VerifyContext& c) { return verify_kostant_conv(c.datum, c.profile); }},
      {"kostant-recur",
       [](const VerifyContext& c) { return verify_kostant_recur(c.datum, c.profile); }},
      {"h-via-kinfty",
       [](const VerifyContext& c) {
         return per_lambda("h-via-kinfty", "H via K^inf_q and its K^1_q expansion", c,
                           [&](const Weight& l) {
                             return verify_h_via_kinfty(c.datum, l, c.profile, c.word);
                           });
       }},
      {"gr-tensor",
       [](const VerifyContext& c) {
         return per_lambda("gr-tensor", "tensor multiplicities at u=-1", c, [&](const Weight& l) {
           return verify_gr_tensor(c.datum, l, c.profile, c.word);
         });
       }},
      {"carlitz", [](const VerifyContext& c) { return verify_carlitz(c.carlitz_bound); }},
      {"basic-specialization",
       [](const VerifyContext& c) {
         TruncProfile p = c.profile;
         p.adaptive = true;
         return verify_basic_specialization(c.datum, p, c.word, c.allow_large);
       }},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& verifier_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& e : registry()) v.push_back(e.first);
    return v;
  }();
  return ids;
}

bool is_verifier_id(const std::string& id) {
  const auto& ids = verifier_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

Report run_verifier(const std::string& id, const VerifyContext& ctx) {
  for (const auto& [name, run] : registry()) {
    if (name != id) continue;
    try {
      return run(ctx);
    } catch (const std::exception& e) {
      Report rep(id, id);
      rep.fail(e.what());
      return rep;
    }
  }
  throw std::invalid_argument("unknown verifier id '" + id + "'");
}

Report run_all(const VerifyContext& ctx, int jobs) {
  Report all("all", "every registered identity on " + ctx.datum.label);
  const auto& ids = verifier_ids();
  std::vector<Report> out(ids.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < ids.size(); ++i) out[i] = run_verifier(ids[i], ctx);
  } else {
    std::size_t next = 0;
    while (next < ids.size()) {
      std::vector<std::future<Report>> batch;
      const std::size_t end = std::min(ids.size(), next + static_cast<std::size_t>(jobs));
      for (std::size_t i = next; i < end; ++i) {
        batch.push_back(std::async(std::launch::async, [&ctx, &ids, i] {
          return run_verifier(ids[i], ctx);
        }));
      }
      for (std::size_t i = next; i < end; ++i) out[i] = batch[i - next].get();
      next = end;
    }
  }
  for (Report& r : out) all.add_part(std::move(r));
  return all;
}

}  // namespace qaffine
