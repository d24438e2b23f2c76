#pragma once

// Two independent evaluations of sum_h (-1)^{l(h)} prod_j W(h)(j), both
// reading M and W off their definitions rather than off any closed form.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "naks/rational.hpp"

namespace oracle {

struct HeightSumParams {
  naks::BigInt a;            // q^{d-1}
  naks::BigInt top;          // numerator threshold at value n
  unsigned n;
};

inline HeightSumParams height_params(std::uint64_t q, unsigned d, unsigned n, bool modified) {
  naks::BigInt a = naks::pow(naks::BigInt(static_cast<unsigned long>(q)), d - 1);
  naks::BigInt top = modified ? naks::projective_line_count(q, d) : a;
  return {a, top, n};
}

/// Depth-first over h, appending one value at a time and stopping as soon
/// as a weight vanishes. Throws when more than `term_cap` terms are visited.
inline naks::Rational height_sum_dfs(std::uint64_t q, unsigned d, unsigned n, bool modified,
                                     std::uint64_t term_cap = 2'000'000) {
  const auto prm = height_params(q, d, n, modified);
  std::vector<unsigned> h;
  std::uint64_t terms = 0;
  naks::Rational total = 0;

  std::function<void(const naks::Rational&)> visit = [&](const naks::Rational& term) {
    if (++terms > term_cap) throw std::runtime_error("height DFS exceeded its term cap");
    total += term;
    for (unsigned v = 1; v <= n; ++v) {
      // M of the appended value by scanning back.
      unsigned long m = 1;
      for (std::size_t k = h.size(); k-- > 0;) {
        if (h[k] > v) break;
        if (h[k] == v) ++m;
      }
      const naks::BigInt& thr = v == n ? prm.top : prm.a;
      if (naks::BigInt(m) >= thr) continue;
      naks::Rational w(thr - m, prm.a * naks::BigInt(m + 1));
      w.canonicalize();
      h.push_back(v);
      visit(-term * w);
      h.pop_back();
    }
  };
  visit(naks::Rational(1));
  return total;
}

/// Dynamic program over the multiplicity state: per value v, the count of
/// v's since the last value above v.
inline naks::Rational height_sum_states(std::uint64_t q, unsigned d, unsigned n, bool modified,
                                        std::uint64_t state_cap = 200'000) {
  const auto prm = height_params(q, d, n, modified);
  std::vector<std::uint64_t> radix(n), stride(n + 1, 1);
  for (unsigned v = 0; v < n; ++v) {
    const naks::BigInt& thr = v + 1 == n ? prm.top : prm.a;
    radix[v] = thr.get_ui();
    stride[v + 1] = stride[v] * radix[v];
    if (stride[v + 1] > state_cap) throw std::runtime_error("height DP exceeded its state cap");
  }
  std::vector<naks::Rational> acc(stride[n]);
  acc[0] = 1;
  naks::Rational total = 0;
  for (std::uint64_t s = 0; s < stride[n]; ++s) {
    if (acc[s] == 0) continue;
    total += acc[s];
    for (unsigned v = 0; v < n; ++v) {
      const std::uint64_t m = s / stride[v] % radix[v] + 1;
      if (m >= radix[v]) continue;
      naks::Rational w(naks::BigInt(static_cast<unsigned long>(radix[v] - m)),
                       prm.a * naks::BigInt(static_cast<unsigned long>(m + 1)));
      w.canonicalize();
      acc[s - s % stride[v] + stride[v]] -= acc[s] * w;
    }
  }
  return total;
}

}  // namespace oracle
