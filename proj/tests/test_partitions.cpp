#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qaffine/partitions.hpp"

using namespace qaffine;

TEST_CASE("partition counts") {
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int k = 0; k <= 12; ++k) CHECK(enumerate_partitions(k).size() == static_cast<std::size_t>(p[k]));
}

TEST_CASE("stream yields each partition once, weakly decreasing") {
  PartitionStream s(9);
  std::set<std::vector<int>> seen;
  while (auto x = s.next()) {
    CHECK(x->weight() == 9);
    CHECK(std::is_sorted(x->parts().rbegin(), x->parts().rend()));
    CHECK(seen.insert(x->parts()).second);
  }
  CHECK(seen.size() == 30);
}

TEST_CASE("multi-partition counts") {
  // coefficients of prod (1 - t^j)^{-2} and ^{-3}
  const int two[] = {1, 2, 5, 10, 20, 36, 65};
  const int three[] = {1, 3, 9, 22, 51, 108, 221};
  for (int k = 0; k <= 6; ++k) {
    CHECK(enumerate_multipartitions(2, k).size() == static_cast<std::size_t>(two[k]));
    CHECK(enumerate_multipartitions(3, k).size() == static_cast<std::size_t>(three[k]));
  }
  MultiPartitionStream s(24, 2);
  int count = 0;
  while (s.next()) ++count;
  CHECK(count == 324);
}

TEST_CASE("statistics") {
  const Partition p({3, 3, 1});
  CHECK(p.weight() == 7);
  CHECK(p.num_parts() == 3);
  CHECK(p.distinct_sizes() == 2);
  CHECK(p.multiplicity(3) == 2);
  CHECK_FALSE(p.has_distinct_parts());
  const MultiPartition mp({Partition({2, 1}), Partition(), Partition({2})});
  CHECK(mp.weight() == 5);
  CHECK(mp.num_parts() == 3);
  CHECK(mp.distinct_sizes() == 3);
}

TEST_CASE("kappa_q") {
  CHECK(kappa_q(Partition({3, 3, 1})) == QPoly());
  CHECK(kappa_q(Partition({4, 1})) == QPoly{0, 0, 1});
  CHECK(kappa_q(Partition({5})) == QPoly{0, -1});
  CHECK(kappa_q(MultiPartition({Partition({2}), Partition({1})})) == QPoly{0, 0, 1});
  CHECK(kappa_q(MultiPartition({Partition({1, 1}), Partition()})) == QPoly());
}

TEST_CASE("support sequences") {
  SupportSeq s;
  s.set(-2, 3);
  s.set(1, 1);
  s.set(4, 0);
  CHECK(s.total() == 4);
  CHECK(s.distinct_slots() == 2);
  CHECK(s.at(4) == 0);
}

TEST_CASE("json layout") {
  CHECK(to_json(Partition({3, 1})).dump() == "[3,1]");
  CHECK(to_json(MultiPartition({Partition({1}), Partition()})).dump() == "[[1],[]]");
}
