#pragma once

// Weyl group elements as words, the dot action, and the bounded enumeration
// of dot-action terms. Works for any Cartan matrix (affine or finite).

#include <functional>
#include <vector>

#include "qaffine/lattice.hpp"
#include "qaffine/rootdata.hpp"

namespace qaffine {

struct WeylElement {
  std::vector<int> word;  // s_{word[0]} s_{word[1]} ...

  int length() const { return static_cast<int>(word.size()); }
  int sign() const { return word.size() % 2 == 0 ? 1 : -1; }
};

// w(lambda), applying the word right to left.
Weight weyl_act(const RootDatum& d, const WeylElement& w, const Weight& lambda);
// w o lambda = w(lambda + rho) - lambda - rho.
Weight dot_action(const RootDatum& d, const WeylElement& w, const Weight& lambda);
// -(w o lambda) in root coordinates. Requires lambda + rho regular dominant
// only for the Q_+ guarantee; computed directly from the word.
RootVec dot_shift(const IntMatrix& cartan, const WeylElement& w, const std::vector<int>& lambda);

struct DotTerm {
  int sign = 1;
  RootVec shift;  // -(w o lambda), in Q_+
  WeylElement w;
};

// All w with keep(-(w o lambda)), each once, sorted by height then lex.
// Branches are pruned as soon as keep fails, which is sound because the
// shift grows along every length-increasing edge (asserted).
std::vector<DotTerm> enumerate_dot_terms(const IntMatrix& cartan, const std::vector<int>& lambda,
                                         const std::function<bool(const RootVec&)>& keep);
std::vector<DotTerm> enumerate_dot_terms(const RootDatum& d, const Weight& lambda, int height_cap);
std::vector<DotTerm> enumerate_dot_terms(const RootDatum& d, const Weight& lambda,
                                         const TruncProfile& profile);

}  // namespace qaffine
