#pragma once

// Registry of every identity verifier and the `verify all` batch runner.

#include <optional>
#include <string>
#include <vector>

#include "qaffine/lattice.hpp"
#include "qaffine/report.hpp"
#include "qaffine/rootdata.hpp"

namespace qaffine {

struct VerifyContext {
  RootDatum datum;
  TruncProfile profile;
  WordH word;
  std::vector<Weight> lambdas;  // empty: {0, Lambda_0}
  std::optional<int> n;  // multi-eps-recurrence: one n instead of {1, 2, 3, 24}
  std::optional<int> t_order;  // overrides each q-series verifier's default order
  int carlitz_bound = 20;
  bool allow_large = false;
};

VerifyContext make_context(const std::string& type, const TruncProfile& profile);

// Ids in the order `verify all` runs and reports them.
const std::vector<std::string>& verifier_ids();
bool is_verifier_id(const std::string& id);

Report run_verifier(const std::string& id, const VerifyContext& ctx);
// Every registered verifier; with jobs > 1 they run concurrently and the
// reports are merged back in registry order.
Report run_all(const VerifyContext& ctx, int jobs = 1);

}  // namespace qaffine
