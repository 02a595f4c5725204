#include "qaffine/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qaffine/errors.hpp"

namespace qaffine {

int height(const RootVec& v) { return std::accumulate(v.begin(), v.end(), 0); }

int classical_height(const RootVec& v) {
  return std::accumulate(v.begin() + 1, v.end(), 0);
}

bool in_qplus(const RootVec& v) {
  return std::all_of(v.begin(), v.end(), [](int c) { return c >= 0; });
}

bool is_zero(const RootVec& v) {
  return std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
}

RootVec add(const RootVec& a, const RootVec& b) {
  RootVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.at(i);
  return r;
}

RootVec sub(const RootVec& a, const RootVec& b) {
  RootVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.at(i);
  return r;
}

RootVec scale(const RootVec& a, int k) {
  RootVec r(a);
  for (int& c : r) c *= k;
  return r;
}

RootVec unit_root(int rank, int i) {
  RootVec r(rank, 0);
  r.at(i) = 1;
  return r;
}

std::string to_string(const RootVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::pair<Family, int> parse_type(const std::string& type) {
  static const std::regex re(R"(^([ADEade])_?(\d+)(~1|\^\(1\)|\^1)?$)");
  std::smatch m;
  if (!std::regex_match(type, m, re)) {
    throw UnsupportedType("unsupported affine type '" + type +
                          "' (expected A_n, D_n or E_n, untwisted, e.g. A1~1)");
  }
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(m[1].str()[0])));
  const int n = std::stoi(m[2].str());
  Family family = f == 'A' ? Family::A : f == 'D' ? Family::D : Family::E;
  if ((family == Family::A && n < 1) || (family == Family::D && n < 4) ||
      (family == Family::E && (n < 6 || n > 8))) {
    throw UnsupportedType("no such simply-laced type: " + type);
  }
  return {family, n};
}

IntMatrix classical_cartan_matrix(Family family, int n) {
  IntMatrix a(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j) {  // 1-based node labels
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (family) {
    case Family::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case Family::E:
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < n; ++i) link(i, i + 1);
      break;
  }
  return a;
}

namespace {

std::vector<int> exponents_for(Family family, int n) {
  switch (family) {
    case Family::A: {
      std::vector<int> e(n);
      std::iota(e.begin(), e.end(), 1);
      return e;
    }
    case Family::D: {
      std::vector<int> e;
      for (int k = 1; k <= 2 * n - 3; k += 2) e.push_back(k);
      e.push_back(n - 1);
      std::sort(e.begin(), e.end());
      return e;
    }
    case Family::E:
      if (n == 6) return {1, 4, 5, 7, 8, 11};
      if (n == 7) return {1, 5, 7, 9, 11, 13, 17};
      return {1, 7, 11, 13, 17, 19, 23, 29};
  }
  return {};
}

std::string family_letter(Family f) {
  return f == Family::A ? "A" : f == Family::D ? "D" : "E";
}

bool height_lex_less(const RootVec& x, const RootVec& y) {
  const int hx = height(x), hy = height(y);
  if (hx != hy) return hx < hy;
  return x < y;
}

}  // namespace

int root_pairing(const IntMatrix& a, const RootVec& v, int i) {
  int s = 0;
  for (std::size_t j = 0; j < v.size(); ++j) s += a[i][j] * v[j];
  return s;
}

RootVec reflect_root(const IntMatrix& a, int i, RootVec v) {
  v[i] -= root_pairing(a, v, i);
  return v;
}

long root_inner(const IntMatrix& a, const RootVec& x, const RootVec& y) {
  long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) s += static_cast<long>(x[i]) * a[i][j] * y[j];
  }
  return s;
}

RootDatum build_root_datum(const std::string& type) {
  const auto [family, n] = parse_type(type);
  RootDatum d;
  d.family = family;
  d.n = n;
  d.label = family_letter(family) + std::to_string(n) + "~1";
  d.classical_cartan = classical_cartan_matrix(family, n);

  // Classical positive roots by closure under simple reflections.
  std::set<RootVec> seen;
  std::vector<RootVec> todo;
  for (int i = 0; i < n; ++i) {
    RootVec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    RootVec v = todo.back();
    todo.pop_back();
    for (int i = 0; i < n; ++i) {
      RootVec w = reflect_root(d.classical_cartan, i, v);
      if (in_qplus(w) && seen.insert(w).second) todo.push_back(w);
    }
  }
  RootVec theta_cl;
  for (const RootVec& v : seen) {
    if (theta_cl.empty() || height(v) > height(theta_cl)) theta_cl = v;
  }
  for (const RootVec& v : seen) {
    RootVec aff(n + 1, 0);
    std::copy(v.begin(), v.end(), aff.begin() + 1);
    d.classical_positive.push_back(aff);
  }
  std::sort(d.classical_positive.begin(), d.classical_positive.end(), height_lex_less);

  d.cartan.assign(n + 1, std::vector<int>(n + 1, 0));
  d.cartan[0][0] = 2;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) d.cartan[i + 1][j + 1] = d.classical_cartan[i][j];
    const int p = root_pairing(d.classical_cartan, theta_cl, i);
    d.cartan[0][i + 1] = -p;
    d.cartan[i + 1][0] = -p;
  }
  d.theta.assign(n + 1, 0);
  std::copy(theta_cl.begin(), theta_cl.end(), d.theta.begin() + 1);
  d.marks = d.theta;
  d.marks[0] = 1;
  d.delta = d.marks;
  d.coxeter_number = height(theta_cl) + 1;
  d.exponents = exponents_for(family, n);
  return d;
}

Weight zero_weight(const RootDatum& d) { return Weight{std::vector<int>(d.rank(), 0), 0}; }

Weight rho(const RootDatum& d) { return Weight{std::vector<int>(d.rank(), 1), 0}; }

Weight fundamental_weight(const RootDatum& d, int i) {
  Weight w = zero_weight(d);
  w.pairing.at(i) = 1;
  return w;
}

Weight weight_add(const Weight& x, const Weight& y) {
  Weight r = x;
  for (std::size_t i = 0; i < r.pairing.size(); ++i) r.pairing[i] += y.pairing.at(i);
  r.delta += y.delta;
  return r;
}

Weight weight_sub(const Weight& x, const Weight& y) {
  Weight r = x;
  for (std::size_t i = 0; i < r.pairing.size(); ++i) r.pairing[i] -= y.pairing.at(i);
  r.delta -= y.delta;
  return r;
}

Weight weight_of_root(const RootDatum& d, const RootVec& v) {
  Weight w = zero_weight(d);
  for (int j = 0; j < d.rank(); ++j) w.pairing[j] = root_pairing(d.cartan, v, j);
  w.delta = v.at(0);
  return w;
}

Weight reflect_weight(const RootDatum& d, int i, Weight w) {
  const int p = w.pairing.at(i);
  if (p == 0) return w;
  for (int j = 0; j < d.rank(); ++j) w.pairing[j] -= p * d.cartan[j][i];
  if (i == 0) w.delta -= p;
  return w;
}

int level(const RootDatum& d, const Weight& w) {
  int s = 0;
  for (int i = 0; i < d.rank(); ++i) s += d.marks[i] * w.pairing.at(i);
  return s;
}

bool is_dominant(const Weight& w) {
  return std::all_of(w.pairing.begin(), w.pairing.end(), [](int p) { return p >= 0; });
}

bool is_regular_dominant(const Weight& w) {
  return std::all_of(w.pairing.begin(), w.pairing.end(), [](int p) { return p > 0; });
}

long weight_root_inner(const Weight& w, const RootVec& beta) {
  long s = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) s += static_cast<long>(beta[i]) * w.pairing.at(i);
  return s;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < w.pairing.size(); ++i) os << (i ? "," : "") << w.pairing[i];
  os << "; delta " << w.delta.get_str() << "]";
  return os.str();
}

std::vector<RootMult> positive_roots_within(const RootDatum& d, int delta_cap,
                                            int classical_cap) {
  std::vector<RootMult> out;
  auto keep = [&](const RootVec& v) { return classical_height(v) <= classical_cap; };
  for (int k = 0; k <= delta_cap; ++k) {
    const RootVec kd = scale(d.delta, k);
    for (const RootVec& a : d.classical_positive) {
      RootVec up = add(a, kd);
      if (keep(up)) out.push_back({up, 1, false});
      if (k >= 1) {
        RootVec down = sub(kd, a);
        if (keep(down)) out.push_back({down, 1, false});
      }
    }
    if (k >= 1 && keep(kd)) out.push_back({kd, d.n, true});
  }
  std::sort(out.begin(), out.end(),
            [](const RootMult& x, const RootMult& y) { return height_lex_less(x.root, y.root); });
  return out;
}

std::vector<RootMult> positive_roots_up_to(const RootDatum& d, int height_cap) {
  if (height_cap < 1) throw std::invalid_argument("height cap must be >= 1");
  std::vector<RootMult> all = positive_roots_within(d, height_cap, height_cap);
  std::erase_if(all, [&](const RootMult& r) { return height(r.root) > height_cap; });
  return all;
}

int WordH::at(long k) const {
  if (k >= 1) {
    return positive.at(static_cast<std::size_t>((k - 1) % static_cast<long>(positive.size())));
  }
  return negative.at(static_cast<std::size_t>((-k) % static_cast<long>(negative.size())));
}

WordH WordH::periodic(const std::vector<int>& period) {
  if (period.empty()) throw std::invalid_argument("empty word period");
  WordH h;
  h.positive = period;
  const long len = static_cast<long>(period.size());
  for (long j = 0; j < len; ++j) {
    h.negative.push_back(period[static_cast<std::size_t>(((-j - 1) % len + len) % len)]);
  }
  return h;
}

namespace {

// Columns of m are w(alpha_j); returns beta_1, beta_2, ... for the sequence
// j_1, j_2, ... produced by next(), stopping once a whole block of `block`
// consecutive betas has c_0 > delta_cap.
template <class Next>
std::vector<RootVec> betas_along(const RootDatum& d, Next next, std::size_t block,
                                 int delta_cap, const std::string& side) {
  const int r = d.rank();
  IntMatrix m(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) m[i][i] = 1;
  std::vector<RootVec> out;
  std::size_t run_high = 0;
  constexpr std::size_t kMaxSteps = 1000000;
  for (std::size_t step = 1; step <= kMaxSteps; ++step) {
    const int i = next(step);
    RootVec beta(r);
    for (int c = 0; c < r; ++c) beta[c] = m[c][i];
    if (!in_qplus(beta) || is_zero(beta)) {
      throw NotReduced("word is not reduced: " + side + " beta #" + std::to_string(step) +
                       " = " + to_string(beta));
    }
    out.push_back(beta);
    // m <- m * s_i
    for (int j = 0; j < r; ++j) {
      const int a = d.cartan[i][j];
      if (j == i || a == 0) continue;
      for (int c = 0; c < r; ++c) m[c][j] -= a * m[c][i];
    }
    for (int c = 0; c < r; ++c) m[c][i] = -m[c][i];
    run_high = delta_degree(beta) > delta_cap ? run_high + 1 : 0;
    if (run_high >= block && step % block == 0) return out;
  }
  throw Error("word never leaves delta cap " + std::to_string(delta_cap));
}

}  // namespace

BetaRange beta_range(const RootDatum& d, const WordH& h, int delta_cap) {
  BetaRange br;
  br.positive = betas_along(
      d, [&](std::size_t s) { return h.at(static_cast<long>(s)); }, h.positive.size(), delta_cap,
      "positive");
  br.nonpositive = betas_along(
      d, [&](std::size_t s) { return h.at(1 - static_cast<long>(s)); }, h.negative.size(),
      delta_cap, "non-positive");
  return br;
}

RootVec beta_sequence(const RootDatum& d, const WordH& h, long k) {
  // beta_k = s_{j_1} ... s_{j_{m-1}} (alpha_{j_m}), j read away from the cut.
  const long m = k >= 1 ? k : 1 - k;
  auto j_at = [&](long s) { return k >= 1 ? h.at(s) : h.at(1 - s); };
  for (long s = 1; s <= m; ++s) {
    RootVec v = unit_root(d.rank(), j_at(s));
    for (long t = s - 1; t >= 1; --t) v = reflect_root(d.cartan, j_at(t), v);
    if (!in_qplus(v)) {
      throw NotReduced("word is not reduced at beta_" + std::to_string(k >= 1 ? s : 1 - s) +
                       " = " + to_string(v));
    }
    if (s == m) return v;
  }
  return {};
}

WordH default_word(const RootDatum& d) {
  // Sort rho + h * mu back into the dominant chamber, where mu = 2 rho_cl and
  // h is the level of rho; the recorded reflections spell the translation by
  // mu, and powers of a translation by a regular weight stay reduced.
  const int r = d.rank();
  const int hv = d.dual_coxeter_number();
  std::vector<long> p(r);
  for (int i = 1; i < r; ++i) p[i] = 1 + 2L * hv;
  p[0] = 1 - 2L * hv * (d.coxeter_number - 1);
  std::vector<int> word;
  for (;;) {
    int pick = -1;
    for (int i = 0; i < r; ++i) {
      if (p[i] < 0) {
        pick = i;
        break;
      }
    }
    if (pick < 0) break;
    const long c = p[pick];
    for (int j = 0; j < r; ++j) p[j] -= c * d.cartan[j][pick];
    word.push_back(pick);
  }
  for (int i = 0; i < r; ++i) {
    if (p[i] != 1) throw Error("default word construction did not reach rho");
  }
  // Orientation: let beta_1 .. beta_L include a classical root.
  WordH h = WordH::periodic(word);
  bool has_classical = false;
  for (std::size_t k = 1; k <= word.size(); ++k) {
    if (delta_degree(beta_sequence(d, h, static_cast<long>(k))) == 0) has_classical = true;
  }
  if (!has_classical) {
    std::reverse(word.begin(), word.end());
    h = WordH::periodic(word);
  }
  return h;
}

WordH parse_word(const std::string& text, int rank) {
  auto parse_list = [&](const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 0 || v >= rank) {
        throw std::invalid_argument("bad word index '" + item + "'");
      }
      out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty word");
    return out;
  };
  const auto bar = text.find('|');
  if (bar == std::string::npos) return WordH::periodic(parse_list(text));
  WordH h;
  h.positive = parse_list(text.substr(0, bar));
  h.negative = parse_list(text.substr(bar + 1));
  return h;
}

std::string to_string(const WordH& h) {
  std::string s;
  for (std::size_t i = 0; i < h.positive.size(); ++i) s += (i ? "," : "") + std::to_string(h.positive[i]);
  s += "|";
  for (std::size_t i = 0; i < h.negative.size(); ++i) s += (i ? "," : "") + std::to_string(h.negative[i]);
  return s;
}

}  // namespace qaffine
