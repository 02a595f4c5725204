#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaffine/errors.hpp"
#include "qaffine/partitions.hpp"
#include "qaffine/qseries.hpp"

using namespace qaffine;

namespace {

// Brute-force sums over multi-partitions, independent of the product code.
QPoly eps_brute(int n, int k) {
  QPoly s;
  for (const auto& mp : enumerate_multipartitions(n, k)) s += kappa_q(mp);
  return s;
}

QPoly p_brute(int n, int k) {
  QPoly s;
  for (const auto& mp : enumerate_multipartitions(n, k)) {
    s += pow(QPoly{1, -1}, static_cast<unsigned>(mp.distinct_sizes()));
  }
  return s;
}

}  // namespace

TEST_CASE("published constants") {
  CHECK(epsilon_qn(1, 5) == QPoly{0, -1, 2});
  CHECK(epsilon_qn(1, 6) == QPoly{0, -1, 2, -1});
  CHECK(epsilon_qn(24, 2) == QPoly{0, -24, 276});
  CHECK(p_qn(24, 1) == QPoly{24, -24});
  CHECK(p_qn(24, 2) == QPoly{276} * QPoly::one_minus_u_pow(2) + QPoly{48} * QPoly{1, -1});
  CHECK(ramanujan_tau(1) == 1);
  CHECK(ramanujan_tau(2) == -24);
  CHECK(ramanujan_tau(3) == 252);
  CHECK(eval_at(p_qn(24, 2), 0L) + eval_at(p_qn(24, 1), 0L) * ramanujan_tau(2) + ramanujan_tau(3) == 0);
}

TEST_CASE("tau against tabulated values") {
  const long tau[] = {1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920, 534612, -370944};
  for (int k = 1; k <= 12; ++k) CHECK(ramanujan_tau(k) == tau[k - 1]);
  CHECK_THROWS_AS(ramanujan_tau(20, 10), OrderExceeded);
}

TEST_CASE("product forms agree with brute-force multi-partition sums") {
  for (int n : {1, 2, 3}) {
    for (int k = 0; k <= 8; ++k) {
      CHECK(epsilon_qn(n, k) == eps_brute(n, k));
      CHECK(p_qn(n, k) == p_brute(n, k));
    }
  }
  CHECK(epsilon_qn(24, 3) == eps_brute(24, 3));
  CHECK(p_qn(24, 3) == p_brute(24, 3));
}

TEST_CASE("series helpers") {
  const TSeries e = euler_product(1, Deform::WithoutU, Direction::Direct, 30);
  for (int k = 0; k <= 30; ++k) CHECK(e[k] == QPoly(pentagonal_epsilon(k)));
  CHECK(pentagonal_epsilon(5) == 1);
  CHECK(pentagonal_epsilon(7) == 1);
  CHECK(pentagonal_epsilon(2) == -1);
  CHECK(pentagonal_epsilon(4) == 0);
  const TSeries inv = euler_product(2, Deform::WithU, Direction::Inverse, 12);
  const TSeries dir = euler_product(2, Deform::WithU, Direction::Direct, 12);
  CHECK(inv * dir == TSeries::one(12));
  CHECK(reciprocal(dir) == inv);
  CHECK(pow(dir, 2) == dir * dir);
}

TEST_CASE("p_q at u=1 and u=0") {
  for (int k = 1; k <= 10; ++k) CHECK(eval_at(p_qn(3, k), 1L) == 0);
  // number of 2-component multi-partitions
  CHECK(eval_at(p_qn(2, 6), 0L) == 65);
}

TEST_CASE("verifiers pass at their default orders") {
  CHECK(verify_reference_values().passed);
  CHECK(verify_single_partition_recurrence(30).passed);
  CHECK(verify_multi_recurrence(2, 20).passed);
  CHECK(verify_multi_recurrence(24, 12).passed);
  CHECK(verify_q_binomial(40).passed);
  CHECK(verify_pentagonal(60).passed);
}
