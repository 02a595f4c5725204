#include "qaffine/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

#include "qaffine/charseries.hpp"
#include "qaffine/errors.hpp"
#include "qaffine/qseries.hpp"
#include "qaffine/verify.hpp"

namespace qaffine {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string target;  // verifier id, gk mode or kostant kind
  std::string type = "A1~1";
  int delta_cap = 5;
  int height_cap = 10;
  std::optional<int> t_order;
  std::string format = "tsv";
  std::string word;  // empty: default word
  std::string lambda;  // empty: command default
  std::vector<std::string> evals;
  int jobs = 1;
  int carlitz_bound = 20;
  bool allow_large_rank = false;
  std::optional<int> n;
  std::optional<int> k;
};

nlohmann::ordered_json header(const RunConfig& c, const std::string& word_used) {
  nlohmann::ordered_json j;
  j["command"] = c.command;
  j["target"] = c.target;
  j["type"] = c.type;
  j["delta_cap"] = c.delta_cap;
  j["height_cap"] = c.height_cap;
  j["t_order"] = c.t_order ? nlohmann::ordered_json(*c.t_order) : nlohmann::ordered_json(nullptr);
  j["format"] = c.format;
  j["word"] = word_used;
  j["lambda"] = c.lambda;
  j["eval"] = c.evals;
  j["jobs"] = c.jobs;
  j["carlitz_bound"] = c.carlitz_bound;
  j["allow_large_rank"] = c.allow_large_rank;
  j["n"] = c.n ? nlohmann::ordered_json(*c.n) : nlohmann::ordered_json(nullptr);
  j["k"] = c.k ? nlohmann::ordered_json(*c.k) : nlohmann::ordered_json(nullptr);
  return j;
}

std::vector<mpq_class> parse_evals(const std::vector<std::string>& evals) {
  std::vector<mpq_class> out;
  for (const std::string& e : evals) {
    if (e.rfind("u=", 0) != 0) throw UsageError("--eval expects u=<rational>, got '" + e + "'");
    mpq_class q;
    if (q.set_str(e.substr(2), 10) != 0) throw UsageError("bad rational in --eval '" + e + "'");
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

Weight parse_lambda(const RootDatum& d, const std::string& text) {
  Weight w = zero_weight(d);
  if (text.empty()) return w;
  std::stringstream ss(text);
  std::string item;
  std::vector<int> v;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      v.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad --lambda entry '" + item + "'");
    }
  }
  if (static_cast<int>(v.size()) != d.rank()) {
    throw UsageError("--lambda needs " + std::to_string(d.rank()) + " Lambda-coordinates for " +
                     d.label);
  }
  for (int x : v) {
    if (x < 0) throw UsageError("--lambda must be dominant (all coordinates >= 0)");
  }
  w.pairing = v;
  return w;
}

// Polynomial output: the coefficient list, or its values at the --eval points.
struct Printer {
  std::vector<mpq_class> points;
  std::vector<std::string> labels;

  nlohmann::ordered_json json(const QPoly& p) const {
    if (points.empty()) {
      nlohmann::ordered_json j;
      j["var"] = "u";
      j["coeffs"] = nlohmann::ordered_json::array();
      for (const auto& c : p.coeffs()) j["coeffs"].push_back(c.get_str());
      return j;
    }
    nlohmann::ordered_json j;
    for (std::size_t i = 0; i < points.size(); ++i) j[labels[i]] = to_string(eval_at(p, points[i]));
    return j;
  }

  std::string tsv(const QPoly& p) const {
    std::string s;
    if (points.empty()) {
      if (p.is_zero()) return "0";
      for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) s += '\t';
        s += p.coeffs()[i].get_str();
      }
      return s;
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i) s += '\t';
      s += to_string(eval_at(p, points[i]));
    }
    return s;
  }

  std::string tsv_value_header() const {
    if (points.empty()) return "u^0\tu^1\t...";
    std::string s;
    for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "\t" : "") + labels[i];
    return s;
  }
};

void print_tseries(std::ostream& out, const RunConfig& c, const Printer& pr, const TSeries& s) {
  if (c.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (int k = 0; k <= s.order(); ++k) j.push_back(pr.json(s[k]));
    out << j.dump() << "\n";
  } else {
    out << "# k\t" << pr.tsv_value_header() << "\n";
    for (int k = 0; k <= s.order(); ++k) out << k << '\t' << pr.tsv(s[k]) << "\n";
  }
}

void print_poly(std::ostream& out, const RunConfig& c, const Printer& pr, const QPoly& p) {
  if (c.format == "json") {
    out << pr.json(p).dump() << "\n";
  } else {
    out << pr.tsv(p) << "\n";
  }
}

void print_lattice(std::ostream& out, const RunConfig& c, const Printer& pr,
                   const LatticeSeries& s) {
  if (c.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    s.for_each([&](const RootVec& g, const QPoly& p) { j[to_string(g)] = pr.json(p); });
    out << j.dump() << "\n";
    return;
  }
  out << "#";
  for (int i = 0; i < s.index().rank(); ++i) out << (i ? "\t" : " ") << "c" << i;
  out << '\t' << pr.tsv_value_header() << "\n";
  s.for_each([&](const RootVec& g, const QPoly& p) {
    for (std::size_t i = 0; i < g.size(); ++i) out << (i ? "\t" : "") << g[i];
    out << '\t' << pr.tsv(p) << "\n";
  });
}

void print_report_tsv(std::ostream& out, const Report& r, const std::string& prefix) {
  out << prefix << r.id << '\t' << (r.passed ? "pass" : "fail") << '\t' << r.checks << '\t';
  if (r.first_failure) {
    out << r.first_failure->where << '\t' << r.first_failure->lhs << '\t' << r.first_failure->rhs;
  } else if (!r.error.empty()) {
    out << r.error;
  } else if (!r.note.empty()) {
    out << r.note;
  }
  out << "\n";
  for (const Report& p : r.parts) print_report_tsv(out, p, prefix + r.id + "/");
}

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

int execute(const RunConfig& c, std::ostream& out) {
  Printer pr;
  pr.points = parse_evals(c.evals);
  pr.labels = c.evals;
  if (c.format != "json" && c.format != "tsv") throw UsageError("--format must be json or tsv");
  if (c.delta_cap < 0 || c.height_cap < 0) throw UsageError("caps must be non-negative");

  if (c.command == "eps" || c.command == "pqn") {
    const int n = require(c.n, "--n");
    if (n < 1) throw UsageError("--n must be positive");
    const bool eps = c.command == "eps";
    if (c.k) {
      if (*c.k < 0) throw UsageError("--k must be non-negative");
      print_poly(out, c, pr, eps ? epsilon_qn(n, *c.k) : p_qn(n, *c.k));
    } else {
      const int order = c.t_order.value_or(10);
      print_tseries(out, c, pr,
                    eps ? euler_product(n, Deform::WithU, Direction::Direct, order)
                        : p_qn_series(n, order));
    }
    return kExitOk;
  }
  if (c.command == "tau") {
    if (c.k) {
      if (*c.k < 1) throw UsageError("--k must be >= 1");
      const int order = std::max(c.t_order.value_or(kDefaultTauOrder), *c.k - 1);
      const std::string v = ramanujan_tau(*c.k, order).get_str();
      if (c.format == "json") {
        out << nlohmann::ordered_json(v).dump() << "\n";
      } else {
        out << v << "\n";
      }
    } else {
      const int last = c.t_order.value_or(10);
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      if (c.format != "json") out << "# k\ttau\n";
      for (int k = 1; k <= last; ++k) {
        const std::string v = ramanujan_tau(k, std::max(last, kDefaultTauOrder)).get_str();
        if (c.format == "json") {
          j.push_back(v);
        } else {
          out << k << '\t' << v << "\n";
        }
      }
      if (c.format == "json") out << j.dump() << "\n";
    }
    return kExitOk;
  }

  VerifyContext ctx = make_context(c.type, TruncProfile{c.delta_cap, c.height_cap, false});
  if (!c.word.empty()) {
    try {
      ctx.word = parse_word(c.word, ctx.datum.rank());
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad --word: ") + e.what());
    }
  }
  const RootDatum& d = ctx.datum;
  const Weight lambda = parse_lambda(d, c.lambda);
  if (!c.lambda.empty()) ctx.lambdas = {lambda};
  ctx.n = c.n;
  ctx.t_order = c.t_order;
  ctx.carlitz_bound = c.carlitz_bound;
  ctx.allow_large = c.allow_large_rank;
  const TruncProfile& p = ctx.profile;

  if (c.command == "verify") {
    if (c.target.empty()) throw UsageError("verify needs an id (or 'all')");
    if (c.target != "all" && !is_verifier_id(c.target)) {
      throw UsageError("unknown verifier id '" + c.target + "'");
    }
    const Report r = c.target == "all" ? run_all(ctx, c.jobs) : run_verifier(c.target, ctx);
    if (c.format == "json") {
      nlohmann::ordered_json j;
      j["config"] = header(c, to_string(ctx.word));
      j["report"] = to_json(r);
      out << j.dump(2) << "\n";
    } else {
      out << "# id\tstatus\tchecks\tdetail\n";
      print_report_tsv(out, r, "");
    }
    return r.passed ? kExitOk : kExitVerifyFailed;
  }
  if (c.command == "gk") {
    const std::string mode = c.target.empty() ? "gk" : c.target;
    LatticeSeries s(d.rank(), p);
    if (mode == "gk") {
      s = gk_product(d, p, ProductMode::Gk);
    } else if (mode == "gk-sum") {
      s = gk_sum(d, ctx.word, p, IndexWeight::Gk);
    } else if (mode == "inverse-cs") {
      s = gk_product(d, p, ProductMode::InverseCs);
    } else if (mode == "cs") {
      s = gk_product(d, p, ProductMode::Cs);
    } else if (mode == "kostant") {
      s = gk_product(d, p, ProductMode::Kostant);
    } else if (mode == "denominator") {
      s = gk_product(d, p, ProductMode::Denominator);
    } else {
      throw UsageError("gk mode must be gk, gk-sum, inverse-cs, cs, kostant or denominator");
    }
    print_lattice(out, c, pr, s);
    return kExitOk;
  }
  if (c.command == "kostant") {
    const std::string kind = c.target.empty() ? "inf" : c.target;
    if (kind == "inf") {
      print_lattice(out, c, pr, gk_product(d, p, ProductMode::Gk));
    } else if (kind == "one") {
      print_lattice(out, c, pr, gk_product(d, p, ProductMode::InverseCs));
    } else if (kind == "classical") {
      KostantOracle oracle(d, p);
      LatticeSeries s(d.rank(), p);
      for (std::size_t g = 0; g < s.size(); ++g) s.at(g) = QPoly(oracle.count(s.index().grade(g)));
      print_lattice(out, c, pr, s);
    } else {
      throw UsageError("kostant kind must be inf, one or classical");
    }
    return kExitOk;
  }
  if (c.command == "hpoly") {
    print_lattice(out, c, pr, h_poly(d, lambda, p, ctx.word));
    return kExitOk;
  }
  if (c.command == "character") {
    print_lattice(out, c, pr, weyl_kac_character(d, lambda, p));
    return kExitOk;
  }
  if (c.command == "specialize") {
    TruncProfile ap = p;
    ap.adaptive = true;
    const bool large = d.dim_classical() > 8;
    if (large && !c.allow_large_rank) {
      throw UsageError("types with N > 8 need --allow-large-rank");
    }
    if (large && (p.delta_cap > 2 || !c.lambda.empty())) {
      throw UsageError("large-rank specialization supports only lambda = 0 and --delta-cap <= 2");
    }
    std::function<LatticeSeries(const TruncProfile&)> build;
    if (large) {
      build = [&](const TruncProfile& q) { return gk_product(d, q, ProductMode::Cs); };
    } else {
      build = [&](const TruncProfile& q) { return h_poly(d, lambda, q, ctx.word); };
    }
    print_tseries(out, c, pr, ev_specialize_stable(build, ap));
    return kExitOk;
  }
  throw UsageError("unknown command '" + c.command + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exact q-deformed partition functions and affine character series", "qaffine"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file; flags win")->envname("QAFFINE_CONFIG");

  std::optional<int> t_order, n, k;
  app.add_option("--type", c.type, "affine type, e.g. A1~1, D4~1, E6~1");
  app.add_option("--delta-cap", c.delta_cap, "truncation D on the delta degree");
  app.add_option("--height-cap", c.height_cap, "truncation C on the classical height");
  app.add_option("--t-order", t_order, "order of t-series");
  app.add_option("--format", c.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--word", c.word, "reduced word override, e.g. 1,0|0,1");
  app.add_option("--lambda", c.lambda, "comma separated Lambda-coordinates");
  app.add_option("--eval", c.evals, "evaluate at u=<rational> (repeatable)");
  app.add_option("--jobs", c.jobs, "parallel verifiers for verify all")->check(CLI::PositiveNumber);
  app.add_option("--carlitz-bound", c.carlitz_bound, "m, n bound for the carlitz verifier");
  app.add_flag("--allow-large-rank", c.allow_large_rank, "permit N > 8 specializations (D <= 2)");
  app.add_option("--n", n, "number of partition components");
  app.add_option("--k", k, "coefficient index");

  struct Sub {
    const char* name;
    const char* help;
    const char* target_help;
  };
  const Sub subs[] = {
      {"eps", "eps_{q,n}(k) or its generating series", nullptr},
      {"pqn", "p_{q,n}(k) or its generating series", nullptr},
      {"tau", "Ramanujan tau", nullptr},
      {"gk", "GK-type product series", "gk|gk-sum|inverse-cs|cs|kostant|denominator"},
      {"hpoly", "H_{lambda+rho}(mu; q)", nullptr},
      {"kostant", "Kostant partition functions", "inf|one|classical"},
      {"character", "weight multiplicities of V(lambda)", nullptr},
      {"specialize", "basic specialization of H_{lambda+rho}", nullptr},
      {"verify", "run an identity verifier", "verifier id or all"},
  };
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->fallthrough();
    if (s.target_help) sub->add_option("target", c.target, s.target_help);
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  c.command = app.get_subcommands().front()->get_name();
  c.t_order = t_order;
  c.n = n;
  c.k = k;

  try {
    return execute(c, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedType& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
}

}  // namespace qaffine
