#include "qaffine/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qaffine {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::distinct_sizes() const {
  int d = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i == 0 || parts_[i] != parts_[i - 1]) ++d;
  }
  return d;
}

int Partition::multiplicity(int r) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), r));
}

bool Partition::has_distinct_parts() const {
  return distinct_sizes() == static_cast<int>(parts_.size());
}

int MultiPartition::weight() const {
  int w = 0;
  for (const auto& c : components_) w += c.weight();
  return w;
}

int MultiPartition::distinct_sizes() const {
  int d = 0;
  for (const auto& c : components_) d += c.distinct_sizes();
  return d;
}

std::size_t MultiPartition::num_parts() const {
  std::size_t n = 0;
  for (const auto& c : components_) n += c.num_parts();
  return n;
}

void SupportSeq::set(int slot, unsigned count) {
  if (count == 0) {
    entries_.erase(slot);
  } else {
    entries_[slot] = count;
  }
}

unsigned SupportSeq::at(int slot) const {
  auto it = entries_.find(slot);
  return it == entries_.end() ? 0U : it->second;
}

unsigned SupportSeq::total() const {
  unsigned t = 0;
  for (const auto& [slot, c] : entries_) t += c;
  return t;
}

PartitionStream::PartitionStream(int k) : k_(k) {
  if (k < 0) throw std::invalid_argument("partition weight must be >= 0");
}

std::optional<Partition> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (k_ > 0) cur_.assign(1, k_);
    if (k_ == 0) done_ = true;
    return Partition(cur_);
  }
  // Rightmost part larger than one.
  std::size_t i = cur_.size();
  while (i > 0 && cur_[i - 1] == 1) --i;
  if (i == 0) {
    done_ = true;
    return std::nullopt;
  }
  --i;
  int remainder = static_cast<int>(cur_.size() - i - 1);
  const int part = --cur_[i];
  remainder += 1;
  cur_.resize(i + 1);
  while (remainder > 0) {
    const int take = std::min(part, remainder);
    cur_.push_back(take);
    remainder -= take;
  }
  return Partition(cur_);
}

MultiPartitionStream::MultiPartitionStream(int n, int k) : n_(n), k_(k) {
  if (n < 1) throw std::invalid_argument("multi-partition needs n >= 1");
  if (k < 0) throw std::invalid_argument("multi-partition weight must be >= 0");
  comp_.assign(n_, 0);
  comp_[0] = k_;
  load_composition();
}

void MultiPartitionStream::load_composition() {
  lists_.clear();
  for (int w : comp_) lists_.push_back(enumerate_partitions(w));
  pos_.assign(n_, 0);
}

// Next composition of k into n parts in decreasing lexicographic order.
bool MultiPartitionStream::advance_composition() {
  // Find rightmost position j < n-1 with comp_[j] > 0, move one unit to the
  // right and collect everything after it into position j+1.
  int j = n_ - 2;
  while (j >= 0 && comp_[j] == 0) --j;
  if (j < 0) return false;
  int tail = 0;
  for (int t = j + 1; t < n_; ++t) {
    tail += comp_[t];
    comp_[t] = 0;
  }
  --comp_[j];
  comp_[j + 1] = tail + 1;
  return true;
}

std::optional<MultiPartition> MultiPartitionStream::next() {
  if (done_) return std::nullopt;
  if (!fresh_) {
    int c = n_ - 1;
    while (c >= 0) {
      if (++pos_[c] < lists_[c].size()) break;
      pos_[c] = 0;
      --c;
    }
    if (c < 0) {
      if (!advance_composition()) {
        done_ = true;
        return std::nullopt;
      }
      load_composition();
    }
  }
  fresh_ = false;
  std::vector<Partition> parts;
  parts.reserve(n_);
  for (int c = 0; c < n_; ++c) parts.push_back(lists_[c][pos_[c]]);
  return MultiPartition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int k) {
  std::vector<Partition> out;
  PartitionStream s(k);
  while (auto p = s.next()) out.push_back(std::move(*p));
  return out;
}

std::vector<MultiPartition> enumerate_multipartitions(int n, int k) {
  std::vector<MultiPartition> out;
  MultiPartitionStream s(n, k);
  while (auto p = s.next()) out.push_back(std::move(*p));
  return out;
}

QPoly kappa_q(const Partition& p) {
  if (!p.has_distinct_parts()) return QPoly();
  const auto np = p.num_parts();
  return QPoly::monomial(np % 2 == 0 ? 1 : -1, np);
}

QPoly kappa_q(const MultiPartition& p) {
  QPoly r(1L);
  for (const auto& c : p.components()) {
    r *= kappa_q(c);
    if (r.is_zero()) break;
  }
  return r;
}

nlohmann::json to_json(const Partition& p) { return p.parts(); }

nlohmann::json to_json(const MultiPartition& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : p.components()) j.push_back(to_json(c));
  return j;
}

}  // namespace qaffine
