#pragma once

// Untwisted affine root data of simply-laced type. Roots live in simple-root
// coordinates (c_0, ..., c_n); weights are stored through their pairings
// with the coroots h_0..h_n plus a rational delta coefficient.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace qaffine {

using IntMatrix = std::vector<std::vector<int>>;
using RootVec = std::vector<int>;

int height(const RootVec& v);
// c_0, the degree in delta.
inline int delta_degree(const RootVec& v) { return v.at(0); }
// sum of c_i for i >= 1.
int classical_height(const RootVec& v);
bool in_qplus(const RootVec& v);
bool is_zero(const RootVec& v);
RootVec add(const RootVec& a, const RootVec& b);
RootVec sub(const RootVec& a, const RootVec& b);
RootVec scale(const RootVec& a, int k);
RootVec unit_root(int rank, int i);
// "(c0,c1,...)"
std::string to_string(const RootVec& v);

enum class Family { A, D, E };

struct RootDatum {
  std::string label;  // canonical spelling, e.g. "A1~1"
  Family family = Family::A;
  int n = 0;  // classical rank
  IntMatrix cartan;  // (n+1) x (n+1), index 0 is the affine node
  IntMatrix classical_cartan;  // n x n, Bourbaki numbering shifted by one
  std::vector<int> marks;  // delta = sum a_i alpha_i
  RootVec delta;
  RootVec theta;  // highest classical root, c_0 = 0
  std::vector<RootVec> classical_positive;  // c_0 = 0, by height then lex
  std::vector<int> exponents;
  int coxeter_number = 0;

  int rank() const { return n + 1; }
  // r = |positive classical roots|
  int num_classical_positive() const {
    return static_cast<int>(classical_positive.size());
  }
  // N = dim g_cl = 2r + n
  int dim_classical() const { return 2 * num_classical_positive() + n; }
  // Simply-laced, so the dual Coxeter number equals the Coxeter number.
  int dual_coxeter_number() const { return coxeter_number; }
};

// Accepts "A1~1", "A_1^(1)", "A1^(1)" and "A1"; families A, D, E only.
RootDatum build_root_datum(const std::string& type);
std::pair<Family, int> parse_type(const std::string& type);
IntMatrix classical_cartan_matrix(Family family, int n);

// <v, h_i> for v in the root lattice.
int root_pairing(const IntMatrix& a, const RootVec& v, int i);
RootVec reflect_root(const IntMatrix& a, int i, RootVec v);
// (x|y) = x^T A y; valid as the invariant form for symmetric A.
long root_inner(const IntMatrix& a, const RootVec& x, const RootVec& y);

struct Weight {
  std::vector<int> pairing;  // <lambda, h_i>, i = 0..n
  mpq_class delta = 0;  // coefficient of delta

  friend bool operator==(const Weight& x, const Weight& y) {
    return x.pairing == y.pairing && x.delta == y.delta;
  }
};

Weight zero_weight(const RootDatum& d);
Weight rho(const RootDatum& d);
Weight fundamental_weight(const RootDatum& d, int i);
Weight weight_add(const Weight& x, const Weight& y);
Weight weight_sub(const Weight& x, const Weight& y);
// alpha_i = sum_j A_{ji} Lambda_j + [i = 0] delta, extended linearly.
Weight weight_of_root(const RootDatum& d, const RootVec& v);
Weight reflect_weight(const RootDatum& d, int i, Weight w);
int level(const RootDatum& d, const Weight& w);
bool is_dominant(const Weight& w);
bool is_regular_dominant(const Weight& w);
// (lambda|beta) for beta in the root lattice; ignores the delta part of
// lambda since (delta|alpha_i) = 0.
long weight_root_inner(const Weight& w, const RootVec& beta);
std::string to_string(const Weight& w);

struct RootMult {
  RootVec root;
  int mult = 1;
  bool imaginary = false;
};

// Positive roots with c_0 <= delta_cap and classical height <= classical_cap,
// sorted by height then lexicographically.
std::vector<RootMult> positive_roots_within(const RootDatum& d, int delta_cap,
                                            int classical_cap);
std::vector<RootMult> positive_roots_up_to(const RootDatum& d, int height_cap);

// Doubly infinite index word h. i_k for k >= 1 cycles through `positive`,
// i_k for k <= 0 cycles through `negative` (negative[j] = i_{-j}).
struct WordH {
  std::vector<int> positive;
  std::vector<int> negative;

  int at(long k) const;
  // The periodic word with i_k = period[(k - 1) mod L] for all k.
  static WordH periodic(const std::vector<int>& period);
};

// Periodic word of a translation by a regular coweight; see rootdata.cpp.
WordH default_word(const RootDatum& d);
// "1,0" for a periodic word, "1,0|0,1" for explicit positive|negative halves.
WordH parse_word(const std::string& text, int rank);
std::string to_string(const WordH& h);

// beta_k; throws NotReduced if a non-positive root appears on the way.
RootVec beta_sequence(const RootDatum& d, const WordH& h, long k);

struct BetaRange {
  std::vector<RootVec> positive;  // beta_1, beta_2, ...
  std::vector<RootVec> nonpositive;  // beta_0, beta_{-1}, ...
};

// Both halves, generated until a full period has c_0 > delta_cap.
BetaRange beta_range(const RootDatum& d, const WordH& h, int delta_cap);

}  // namespace qaffine
