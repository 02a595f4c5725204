#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "qaffine/errors.hpp"
#include "qaffine/weyl.hpp"

using namespace qaffine;

namespace {

// Every word up to `max_len`, keeping the shifts inside the profile. Words
// that are not reduced give repeats, which the map collapses.
std::map<RootVec, int> brute_force_terms(const RootDatum& d, const Weight& lambda,
                                         const TruncProfile& p, int max_len) {
  std::map<RootVec, int> out;
  std::vector<WeylElement> level{WeylElement{}};
  for (int len = 0; len <= max_len; ++len) {
    std::vector<WeylElement> next;
    for (const WeylElement& w : level) {
      const Weight x = dot_action(d, w, lambda);
      RootVec shift = dot_shift(d.cartan, w, lambda.pairing);
      // -(w o lambda) recovered from pairings must match the word computation
      CHECK(weight_of_root(d, shift).pairing == weight_sub(zero_weight(d), x).pairing);
      if (p.contains(shift)) out[shift] = w.sign();
      for (int i = 0; i < d.rank(); ++i) {
        WeylElement c = w;
        c.word.push_back(i);
        next.push_back(c);
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("A1 dot terms at small caps") {
  const RootDatum d = build_root_datum("A1~1");
  const Weight zero = zero_weight(d);
  auto terms = enumerate_dot_terms(d, zero, 3);
  REQUIRE(terms.size() == 3);
  CHECK(terms[0].shift == RootVec{0, 0});
  CHECK(terms[0].sign == 1);
  CHECK(terms[1].shift == RootVec{0, 1});
  CHECK(terms[1].sign == -1);
  CHECK(terms[2].shift == RootVec{1, 0});
  CHECK(terms[2].sign == -1);
  terms = enumerate_dot_terms(d, zero, 4);
  REQUIRE(terms.size() == 5);
  CHECK(terms[3].shift == RootVec{1, 3});
  CHECK(terms[3].sign == 1);
  CHECK(terms[4].shift == RootVec{3, 1});
}

TEST_CASE("enumeration matches brute force over all words") {
  struct Case {
    const char* type;
    std::vector<int> lambda;
    TruncProfile p;
    int len;
  };
  const std::vector<Case> cases = {
      {"A1~1", {0, 0}, {6, 6, false}, 8},
      {"A1~1", {1, 0}, {5, 5, false}, 8},
      {"A1~1", {2, 3}, {6, 6, false}, 6},
      {"A2~1", {0, 0, 0}, {3, 6, false}, 6},
      {"A2~1", {1, 0, 2}, {2, 6, false}, 5},
  };
  for (const Case& c : cases) {
    CAPTURE(c.type);
    const RootDatum d = build_root_datum(c.type);
    Weight l = zero_weight(d);
    l.pairing = c.lambda;
    const auto want = brute_force_terms(d, l, c.p, c.len);
    std::map<RootVec, int> got;
    for (const DotTerm& t : enumerate_dot_terms(d, l, c.p)) {
      CHECK(dot_shift(d.cartan, t.w, l.pairing) == t.shift);
      CHECK(t.w.sign() == t.sign);
      CHECK(got.emplace(t.shift, t.sign).second);
    }
    CHECK(got == want);
  }
}

TEST_CASE("lambda + rho must be regular dominant") {
  const RootDatum d = build_root_datum("A1~1");
  Weight l = zero_weight(d);
  l.pairing = {-1, 0};
  CHECK_THROWS_AS(enumerate_dot_terms(d, l, 4), NotRegularDominant);
}

TEST_CASE("finite Cartan matrices work too") {
  // A2: six Weyl group elements, shifts 0, a1, a2, 2a1+a2, a1+2a2, 2a1+2a2
  const IntMatrix a2 = {{2, -1}, {-1, 2}};
  const auto terms = enumerate_dot_terms(a2, {0, 0}, [](const RootVec&) { return true; });
  std::set<RootVec> shifts;
  int signs = 0;
  for (const auto& t : terms) {
    shifts.insert(t.shift);
    signs += t.sign;
  }
  CHECK(shifts == std::set<RootVec>{{0, 0}, {1, 0}, {0, 1}, {2, 1}, {1, 2}, {2, 2}});
  CHECK(signs == 0);
}
