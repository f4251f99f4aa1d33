#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "krows/bdd.hpp"
#include "krows/types.hpp"

namespace krows {

/// Coefficients N_0..N_n of the counting polynomial: coeffs[k] is the number
/// of models with exactly k ones.
using GenPoly = std::vector<BigInt>;

namespace detail {

// In-place multiplication by (1+z)^m, degree capped at n.
inline void mul_pow_1z(GenPoly& p, int m, int n) {
  for (int rep = 0; rep < m; ++rep)
    for (int i = n; i >= 1; --i) p[i] += p[i - 1];
}

} // namespace detail

/// Exact |Mod(phi)|. Integer weights per node (the count over the node's
/// trailing variables) replace the textbook probability recurrence: a parent
/// scales each son's count by 2^gap for the variables skipped on that edge,
/// and the root count picks up 2^(var(root)-1) for the leading free
/// variables.
inline BigInt count_models(const Bdd& bdd) {
  std::vector<BigInt> count(bdd.num_nodes());
  auto son_count = [&](NodeId s) -> BigInt {
    if (s.is_bot()) return 0;
    if (s.is_top()) return 1;
    return count[s.index()];
  };
  for (int32_t i = 0; i < bdd.num_nodes(); ++i) {
    const BddNode& nd = bdd.node(i);
    count[i] = (son_count(nd.lo) << (bdd.var_of(nd.lo) - nd.var - 1)) +
               (son_count(nd.hi) << (bdd.var_of(nd.hi) - nd.var - 1));
  }
  // var_of(T) = var_of(F) = n+1, so terminal roots fall out of the same
  // formula: T gives 1 << n, F gives 0.
  return son_count(bdd.root()) << (bdd.var_of(bdd.root()) - 1);
}

/// |Mod(phi)| / 2^n as an exact rational in lowest terms.
inline Rational acceptance_probability(const Bdd& bdd) {
  return Rational(count_models(bdd), pow2(static_cast<unsigned>(bdd.nvars())));
}

/// Exact coefficients of G(z) = sum_k N_k z^k, via the per-node recurrence
/// G(alpha) = (1+z)^gap0 G(lo) + z (1+z)^gap1 G(hi) over the shelling order,
/// with G(bot) = 0, G(top) = 1, terminals at level n+1, and a final
/// (1+z)^(var(root)-1) factor for the leading free variables.
inline GenPoly gen_poly(const Bdd& bdd) {
  const int n = bdd.nvars();
  std::vector<GenPoly> poly(bdd.num_nodes());

  auto son_poly = [&](NodeId s) -> GenPoly {
    GenPoly p(n + 1, BigInt(0));
    if (s.is_top()) p[0] = 1;
    else if (!s.is_bot()) p = poly[s.index()];
    return p;
  };

  for (int32_t i = 0; i < bdd.num_nodes(); ++i) {
    const BddNode& nd = bdd.node(i);
    GenPoly acc(n + 1, BigInt(0));
    if (!nd.lo.is_bot()) {
      GenPoly lo = son_poly(nd.lo);
      detail::mul_pow_1z(lo, bdd.var_of(nd.lo) - nd.var - 1, n);
      for (int k = 0; k <= n; ++k) acc[k] += lo[k];
    }
    if (!nd.hi.is_bot()) {
      GenPoly hi = son_poly(nd.hi);
      detail::mul_pow_1z(hi, bdd.var_of(nd.hi) - nd.var - 1, n);
      for (int k = n; k >= 1; --k) acc[k] += hi[k - 1]; // the z factor
    }
    poly[i] = std::move(acc);
  }

  GenPoly result = son_poly(bdd.root());
  detail::mul_pow_1z(result, bdd.var_of(bdd.root()) - 1, n);
  return result;
}

/// N_k = |Mod(phi, k)|.
inline BigInt count_k(const Bdd& bdd, int k) {
  if (k < 0 || k > bdd.nvars())
    throw std::out_of_range("k=" + std::to_string(k) + " out of [0," +
                            std::to_string(bdd.nvars()) + "]");
  return gen_poly(bdd)[k];
}

} // namespace krows
