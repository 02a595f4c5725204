#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "qaffine/errors.hpp"
#include "qaffine/rootdata.hpp"

using namespace qaffine;

namespace {

// Classical roots as the reflection closure of the simple roots, lifted to
// affine coordinates with c_0 = 0.
std::set<RootVec> classical_roots_by_closure(const RootDatum& d) {
  const int r = d.rank();
  std::set<RootVec> roots;
  std::vector<RootVec> todo;
  for (int i = 1; i < r; ++i) {
    roots.insert(unit_root(r, i));
    todo.push_back(unit_root(r, i));
  }
  while (!todo.empty()) {
    RootVec v = todo.back();
    todo.pop_back();
    for (int i = 1; i < r; ++i) {
      RootVec w = reflect_root(d.cartan, i, v);
      w[0] = 0;
      if (roots.insert(w).second) todo.push_back(w);
    }
  }
  return roots;
}

std::set<RootVec> real_positive_within(const RootDatum& d, int D, int C) {
  std::set<RootVec> out;
  for (const RootVec& a : classical_roots_by_closure(d)) {
    for (int k = 0; k <= D; ++k) {
      RootVec b = add(a, scale(d.delta, k));
      if (in_qplus(b) && !is_zero(b) && classical_height(b) <= C) out.insert(b);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("type parsing") {
  CHECK(build_root_datum("A1~1").label == "A1~1");
  CHECK(build_root_datum("A_1^(1)").label == "A1~1");
  CHECK(build_root_datum("d4").label == "D4~1");
  CHECK_THROWS_AS(build_root_datum("B3~1"), UnsupportedType);
  CHECK_THROWS_AS(build_root_datum("D3~1"), UnsupportedType);
  CHECK_THROWS_AS(build_root_datum("E9"), UnsupportedType);
  CHECK_THROWS_AS(build_root_datum("A0"), UnsupportedType);
}

TEST_CASE("classical data") {
  struct Row {
    const char* type;
    int dim;
    int coxeter;
    std::vector<int> marks;
  };
  const std::vector<Row> rows = {
      {"A1~1", 3, 2, {1, 1}},
      {"A2~1", 8, 3, {1, 1, 1}},
      {"A4~1", 24, 5, {1, 1, 1, 1, 1}},
      {"D4~1", 28, 6, {1, 1, 2, 1, 1}},
      {"D5~1", 45, 8, {1, 1, 2, 2, 1, 1}},
      {"E6~1", 78, 12, {1, 1, 2, 2, 3, 2, 1}},
      {"E7~1", 133, 18, {1, 2, 2, 3, 4, 3, 2, 1}},
      {"E8~1", 248, 30, {1, 2, 3, 4, 6, 5, 4, 3, 2}},
  };
  for (const Row& row : rows) {
    CAPTURE(row.type);
    const RootDatum d = build_root_datum(row.type);
    CHECK(d.dim_classical() == row.dim);
    CHECK(d.coxeter_number == row.coxeter);
    CHECK(d.marks == row.marks);
    for (int i = 0; i < d.rank(); ++i) CHECK(root_pairing(d.cartan, d.delta, i) == 0);
    int exp_sum = 0;
    for (int e : d.exponents) exp_sum += e;
    CHECK(exp_sum == d.num_classical_positive());
    CHECK(height(d.theta) == d.coxeter_number - 1);
    CHECK(classical_roots_by_closure(d).size() == 2 * d.classical_positive.size());
  }
}

TEST_CASE("weights") {
  const RootDatum d = build_root_datum("A2~1");
  const Weight r = rho(d);
  CHECK(r.pairing == std::vector<int>{1, 1, 1});
  CHECK(level(d, r) == 3);
  CHECK(level(d, fundamental_weight(d, 0)) == 1);
  CHECK(is_regular_dominant(r));
  CHECK_FALSE(is_regular_dominant(zero_weight(d)));
  const Weight w = weight_of_root(d, unit_root(3, 1));
  CHECK(w.pairing == std::vector<int>{-1, 2, -1});
  CHECK(reflect_weight(d, 1, r).pairing == std::vector<int>{2, -1, 2});
  CHECK(weight_root_inner(r, d.delta) == 3);
}

TEST_CASE("positive roots with multiplicities") {
  const RootDatum d = build_root_datum("A1~1");
  const auto roots = positive_roots_within(d, 2, 3);
  std::map<RootVec, int> m;
  for (const auto& rm : roots) m[rm.root] = rm.mult;
  CHECK(m.size() == 7);
  CHECK(m.at({1, 1}) == 1);
  CHECK(m.at({0, 1}) == 1);
  CHECK(m.at({2, 1}) == 1);
  CHECK(m.count({2, 2}) == 1);
  CHECK(m.count({2, 3}) == 1);
  const RootDatum d4 = build_root_datum("D4~1");
  for (const auto& rm : positive_roots_within(d4, 2, 12)) {
    CHECK(rm.mult == (rm.imaginary ? 4 : 1));
  }
}

TEST_CASE("default word exhausts the positive real roots") {
  for (const char* t : {"A1~1", "A2~1", "A3~1", "D4~1"}) {
    CAPTURE(t);
    const RootDatum d = build_root_datum(t);
    const WordH h = default_word(d);
    const int D = 3, C = 12;
    const BetaRange br = beta_range(d, h, D);
    std::multiset<RootVec> seen;
    for (const auto& b : br.positive) {
      if (b[0] <= D && classical_height(b) <= C) seen.insert(b);
    }
    for (const auto& b : br.nonpositive) {
      if (b[0] <= D && classical_height(b) <= C) seen.insert(b);
    }
    const auto want = real_positive_within(d, D, C);
    CHECK(seen.size() == want.size());
    CHECK(std::set<RootVec>(seen.begin(), seen.end()) == want);
  }
}

TEST_CASE("word parsing and reducedness") {
  const RootDatum d = build_root_datum("A1~1");
  CHECK(to_string(default_word(d)) == "1,0|0,1");
  const WordH h = parse_word("1,0|0,1", 2);
  CHECK(h.at(1) == 1);
  CHECK(h.at(2) == 0);
  CHECK(h.at(0) == 0);
  CHECK(h.at(-1) == 1);
  CHECK(beta_sequence(d, h, 1) == RootVec{0, 1});
  CHECK(beta_sequence(d, h, 2) == RootVec{1, 2});
  CHECK(beta_sequence(d, h, 0) == RootVec{1, 0});
  CHECK_THROWS(parse_word("1,7", 2));
  CHECK_THROWS_AS(beta_sequence(d, parse_word("1,1", 2), 2), NotReduced);
}
