#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaffine/charseries.hpp"
#include "qaffine/errors.hpp"

using namespace qaffine;

namespace {

const QPoly kOneMinusU{1, -1};

}  // namespace

TEST_CASE("A1 low-degree values") {
  const RootDatum d = build_root_datum("A1~1");
  const TruncProfile p{3, 6, false};
  const LatticeSeries kinf = gk_product(d, p, ProductMode::Gk);
  const LatticeSeries k1 = gk_product(d, p, ProductMode::InverseCs);
  CHECK(kinf.get({1, 1}) == kOneMinusU + kOneMinusU * kOneMinusU);
  CHECK(eval_at(kinf.get({1, 1}), 0L) == 2);
  CHECK(k1.get({1, 0}) == QPoly::u());
  CHECK(eval_at(k1.get({1, 1}), 1L) == 2);
  const LatticeSeries h = h_poly(d, zero_weight(d), p, default_word(d));
  CHECK(h.get({1, 0}) == -QPoly::u());
  CHECK(h.get({0, 0}) == QPoly(1L));
  KostantOracle k(d, p);
  CHECK(k.count({1, 1}) == 2);
  CHECK(k.count({0, 0}) == 1);
  CHECK(k.count({-1, 2}) == 0);
}

TEST_CASE("basic representation of A1~1 has p(k) at Lambda_0 - k delta") {
  const RootDatum d = build_root_datum("A1~1");
  const TruncProfile p{8, 8, false};
  const Weight l0 = fundamental_weight(d, 0);
  const LatticeSeries chi = weyl_kac_character(d, l0, p);
  const int part[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int k = 0; k <= 8; ++k) CHECK(chi.get({k, k}) == QPoly(part[k]));
  CHECK(chi.get({1, 0}) == QPoly(1L));
  CHECK(chi.get({0, 1}) == QPoly());
}

TEST_CASE("Weyl-Kac division agrees with Freudenthal on A2~1") {
  const RootDatum d = build_root_datum("A2~1");
  const TruncProfile p{2, 6, false};
  Weight l = zero_weight(d);
  l.pairing = {1, 0, 1};
  CHECK_NOTHROW(weyl_kac_character(d, l, p));
  CHECK_NOTHROW(weyl_kac_character(d, rho(d), p));
}

TEST_CASE("GK sum equals the product for several types") {
  for (const char* t : {"A1~1", "A2~1", "A3~1", "D4~1"}) {
    CAPTURE(t);
    const RootDatum d = build_root_datum(t);
    const TruncProfile p{2, 8, false};
    const WordH h = default_word(d);
    CHECK(gk_sum(d, h, p, IndexWeight::Gk) == gk_product(d, p, ProductMode::Gk));
    CHECK(gk_sum(d, h, p, IndexWeight::InverseCs) == gk_product(d, p, ProductMode::InverseCs));
  }
}

TEST_CASE("correction factor, first coefficient by hand") {
  const RootDatum d = build_root_datum("A1~1");
  // (1 - u t) / (1 - u^2 t) = 1 + (u^2 - u) t + ...
  CHECK(correction_factor_product(d, 3)[1] == QPoly{0, -1, 1});
  CHECK(correction_factor_sum(d, 3)[1] == QPoly{0, -1, 1});
}

TEST_CASE("specialization stabilization") {
  const RootDatum d = build_root_datum("A1~1");
  const WordH h = default_word(d);
  auto build = [&](const TruncProfile& q) { return h_poly(d, zero_weight(d), q, h); };
  CHECK_THROWS_AS(ev_specialize_stable(build, TruncProfile{4, 2, false}), NotStabilized);
  const TSeries t = ev_specialize_stable(build, TruncProfile{4, 2, true});
  TSeries want = euler_product(3, Deform::WithU, Direction::Direct, 4);
  for (int k = 0; k <= 4; ++k) CHECK(t[k] == want[k] * kOneMinusU);
}

TEST_CASE("verifiers on small profiles") {
  const RootDatum d = build_root_datum("A2~1");
  const TruncProfile p{2, 6, false};
  const WordH h = default_word(d);
  const Weight l = fundamental_weight(d, 1);
  CHECK(verify_gk_full(d, h, p).passed);
  CHECK(verify_gk_real(d, h, p, 4).passed);
  CHECK(verify_gk_imag(d, p, {1, 2, 3}, 6).passed);
  CHECK(verify_correction_factor(d, 5).passed);
  CHECK(verify_cs_rho(d, p, h).passed);
  CHECK(verify_cs_general(d, l, p, h).passed);
  CHECK(verify_support_law(d, l, p, h).passed);
  CHECK(verify_q_kostant(d, l, p, h).passed);
  CHECK(verify_kostant_conv(d, p).passed);
  CHECK(verify_kostant_recur(d, p).passed);
  CHECK(verify_h_via_kinfty(d, l, p, h).passed);
  CHECK(verify_gr_tensor(d, l, p, h).passed);
  CHECK(verify_carlitz(6).passed);
  CHECK(verify_basic_specialization(d, TruncProfile{2, 6, true}, h).passed);
}

TEST_CASE("a broken word is reported, not hidden") {
  const RootDatum d = build_root_datum("A1~1");
  const Report r = verify_gk_full(d, parse_word("1,1", 2), TruncProfile{2, 4, false});
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.error.empty());
  const Report s = verify_gk_full(d, parse_word("1|0", 2), TruncProfile{2, 4, false});
  CHECK_FALSE(s.passed);
  CHECK(summary_line(s).rfind("FAIL gk-full", 0) == 0);
}

TEST_CASE("large ranks are opt-in") {
  const RootDatum d = build_root_datum("A4~1");
  const WordH h = default_word(d);
  const Report skipped = verify_basic_specialization(d, TruncProfile{2, 8, true}, h);
  CHECK(skipped.passed);
  CHECK(skipped.checks == 0);
  CHECK_FALSE(skipped.note.empty());
  const Report run = verify_basic_specialization(d, TruncProfile{2, 8, true}, h, true);
  CHECK(run.passed);
  CHECK(run.checks > 0);
  const Report too_deep = verify_basic_specialization(d, TruncProfile{3, 8, true}, h, true);
  CHECK_FALSE(too_deep.passed);
}
