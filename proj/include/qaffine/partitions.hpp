#pragma once

// Integer partitions, multi-partitions and finitely supported sequences,
// together with the statistics |.|, d(.) and kappa_q used throughout.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "qaffine/exactpoly.hpp"

namespace qaffine {

class Partition {
 public:
  Partition() = default;
  // Parts in any order; zeros are rejected.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  std::size_t num_parts() const { return parts_.size(); }
  // Number of distinct part sizes, d(p) = #{r : m_r != 0}.
  int distinct_sizes() const;
  int multiplicity(int r) const;
  bool has_distinct_parts() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<Partition> components)
      : components_(std::move(components)) {}

  const std::vector<Partition>& components() const { return components_; }
  std::size_t size() const { return components_.size(); }
  int weight() const;
  int distinct_sizes() const;
  std::size_t num_parts() const;

  friend bool operator==(const MultiPartition&, const MultiPartition&) = default;

 private:
  std::vector<Partition> components_;
};

// Almost-everywhere-zero map from a slot index to a count. Slots are
// non-positive for the c_+ sequences and positive for c_-.
class SupportSeq {
 public:
  void set(int slot, unsigned count);
  unsigned at(int slot) const;
  const std::map<int, unsigned>& entries() const { return entries_; }
  int distinct_slots() const { return static_cast<int>(entries_.size()); }
  unsigned total() const;

 private:
  std::map<int, unsigned> entries_;
};

// Streams every partition of k exactly once, starting from (k) and moving
// in lexicographically decreasing order.
class PartitionStream {
 public:
  explicit PartitionStream(int k);
  std::optional<Partition> next();

 private:
  int k_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> cur_;
};

// Streams every n-component multi-partition of total weight k. Weight
// distributions are visited in decreasing lexicographic order, then the
// component partitions as an odometer with the last component fastest.
class MultiPartitionStream {
 public:
  MultiPartitionStream(int n, int k);
  std::optional<MultiPartition> next();

 private:
  bool advance_composition();
  void load_composition();

  int n_;
  int k_;
  bool done_ = false;
  bool fresh_ = true;
  std::vector<int> comp_;
  std::vector<std::vector<Partition>> lists_;
  std::vector<std::size_t> pos_;
};

std::vector<Partition> enumerate_partitions(int k);
std::vector<MultiPartition> enumerate_multipartitions(int n, int k);

// (-u)^{#parts} when all part sizes are distinct, 0 otherwise.
QPoly kappa_q(const Partition& p);
QPoly kappa_q(const MultiPartition& p);

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const MultiPartition& p);

}  // namespace qaffine
