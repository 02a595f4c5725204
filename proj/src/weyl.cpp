#include "qaffine/weyl.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qaffine/errors.hpp"

namespace qaffine {

Weight weyl_act(const RootDatum& d, const WeylElement& w, const Weight& lambda) {
  Weight x = lambda;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) x = reflect_weight(d, *it, x);
  return x;
}

Weight dot_action(const RootDatum& d, const WeylElement& w, const Weight& lambda) {
  const Weight shifted = weight_add(lambda, rho(d));
  return weight_sub(weyl_act(d, w, shifted), shifted);
}

RootVec dot_shift(const IntMatrix& cartan, const WeylElement& w, const std::vector<int>& lambda) {
  // Track x = w'(lambda + rho) through pairings only; each s_i subtracts
  // <x, h_i> alpha_i.
  const int r = static_cast<int>(cartan.size());
  std::vector<long> p(r);
  for (int i = 0; i < r; ++i) p[i] = lambda.at(i) + 1;
  RootVec shift(r, 0);
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    const int i = *it;
    const long c = p[i];
    shift[i] += static_cast<int>(c);
    for (int j = 0; j < r; ++j) p[j] -= c * cartan[j][i];
  }
  return shift;
}

std::vector<DotTerm> enumerate_dot_terms(const IntMatrix& cartan, const std::vector<int>& lambda,
                                         const std::function<bool(const RootVec&)>& keep) {
  const int r = static_cast<int>(cartan.size());
  struct Node {
    std::vector<long> p;  // pairings of w(lambda + rho)
    RootVec shift;
    WeylElement w;
  };
  Node root{std::vector<long>(r), RootVec(r, 0), {}};
  for (int i = 0; i < r; ++i) {
    root.p[i] = static_cast<long>(lambda.at(i)) + 1;
    if (root.p[i] <= 0) {
      throw NotRegularDominant("lambda + rho is not regular dominant: <lambda + rho, h_" +
                               std::to_string(i) + "> = " + std::to_string(root.p[i]));
    }
  }
  std::vector<DotTerm> out;
  if (!keep(root.shift)) return out;
  std::set<RootVec> seen{root.shift};
  std::vector<Node> level{root};
  while (!level.empty()) {
    std::vector<Node> next;
    for (const Node& node : level) {
      out.push_back({node.w.sign(), node.shift, node.w});
      for (int i = 0; i < r; ++i) {
        const long c = node.p[i];
        if (c <= 0) continue;  // s_i w would be shorter
        Node child;
        child.shift = node.shift;
        child.shift[i] += static_cast<int>(c);
        if (height(child.shift) <= height(node.shift)) {
          throw Error("dot-term height failed to increase along a BFS edge");
        }
        if (!keep(child.shift) || !seen.insert(child.shift).second) continue;
        child.p = node.p;
        for (int j = 0; j < r; ++j) child.p[j] -= c * cartan[j][i];
        child.w.word.reserve(node.w.word.size() + 1);
        child.w.word.push_back(i);
        child.w.word.insert(child.w.word.end(), node.w.word.begin(), node.w.word.end());
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const DotTerm& a, const DotTerm& b) {
    const int ha = height(a.shift), hb = height(b.shift);
    if (ha != hb) return ha < hb;
    return a.shift < b.shift;
  });
  return out;
}

std::vector<DotTerm> enumerate_dot_terms(const RootDatum& d, const Weight& lambda, int height_cap) {
  return enumerate_dot_terms(d.cartan, lambda.pairing,
                             [&](const RootVec& v) { return height(v) <= height_cap; });
}

std::vector<DotTerm> enumerate_dot_terms(const RootDatum& d, const Weight& lambda,
                                         const TruncProfile& profile) {
  return enumerate_dot_terms(d.cartan, lambda.pairing,
                             [&](const RootVec& v) { return profile.contains(v); });
}

}  // namespace qaffine
