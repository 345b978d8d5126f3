#ifndef HYPEREHRHART_ORACLE_HPP
#define HYPEREHRHART_ORACLE_HPP

// Independent routes to the equivariant H*-coefficients: lattice points of
// fixed polytopes, Ehrhart series numerators, and Katzman's closed form.
// Nothing here calls into hstar.hpp's coefficient formula.

#include <cstdint>
#include <string>
#include <vector>

#include "hyperehrhart/arith.hpp"
#include "hyperehrhart/hstar.hpp"
#include "hyperehrhart/symgroup.hpp"

namespace hyperehrhart {

/// Truncated formal power series c_0 + c_1 t + ... + c_T t^T.
struct PowerSeriesPrefix {
  std::vector<BigInt> coeffs;
  std::int64_t order() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
  BigInt at(std::int64_t i) const {
    return i >= 0 && i < static_cast<std::int64_t>(coeffs.size()) ? coeffs[static_cast<std::size_t>(i)] : BigInt(0);
  }
};

/// prod_i 1/(1 - t^{s_i}) up to t^T.
inline PowerSeriesPrefix u_series(const CycleType& ct, std::int64_t truncation) {
  if (truncation < 0) throw InputError("u_series: truncation must be non-negative");
  std::vector<BigInt> c(static_cast<std::size_t>(truncation) + 1, 0);
  c[0] = 1;
  for (int s : ct.parts()) {
    // Multiplying by 1/(1 - t^s) is a running sum with stride s.
    for (std::int64_t i = s; i <= truncation; ++i) c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - s)];
  }
  return {std::move(c)};
}

/// |(d Delta_{k,n})_sigma cap Z^n| = #{x in {0..d}^r : sum_i x_i s_i = kd}.
inline BigInt fixed_point_count(std::int64_t k, std::int64_t n, const CycleType& ct, std::int64_t d) {
  detail::require_hypersimplex(k, n, "fixed_point_count");
  detail::require_class(n, ct, "fixed_point_count");
  if (d < 0) throw InputError("fixed_point_count: dilation must be non-negative");
  const std::int64_t target = k * d;
  std::vector<BigInt> ways(static_cast<std::size_t>(target) + 1, 0);
  ways[0] = 1;
  for (int s : ct.parts()) {
    std::vector<BigInt> next(ways.size(), 0);
    for (std::int64_t total = 0; total <= target; ++total) {
      if (ways[static_cast<std::size_t>(total)] == 0) continue;
      for (std::int64_t x = 0; x <= d; ++x) {
        const std::int64_t t = total + x * s;
        if (t > target) break;
        next[static_cast<std::size_t>(t)] += ways[static_cast<std::size_t>(total)];
      }
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(target)];
}

/// Ehrhart series prefix of the fixed polytope: fixed_point_count for d = 0..T.
inline PowerSeriesPrefix fixed_ehrhart_series(std::int64_t k, std::int64_t n, const CycleType& ct,
                                              std::int64_t truncation) {
  PowerSeriesPrefix series;
  for (std::int64_t d = 0; d <= truncation; ++d) series.coeffs.push_back(fixed_point_count(k, n, ct, d));
  return series;
}

/// The fixed Ehrhart series times prod_i (1 - t^{s_i}), through order D + n.
inline std::vector<BigInt> numerator_window(std::int64_t k, std::int64_t n, const CycleType& ct) {
  const std::int64_t truncation = hstar_degree(k, n) + n;
  std::vector<BigInt> c = fixed_ehrhart_series(k, n, ct, truncation).coeffs;
  for (int s : ct.parts()) {
    for (std::int64_t i = truncation; i >= s; --i) c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - s)];
  }
  return c;
}

/// H*_0(sigma) .. H*_D(sigma) read off the Ehrhart series of the fixed polytope.
/// Throws InternalInconsistency if any of the n guard coefficients past D is nonzero.
inline std::vector<BigInt> numerator_from_series(std::int64_t k, std::int64_t n, const CycleType& ct) {
  const std::int64_t degree = hstar_degree(k, n);
  std::vector<BigInt> window = numerator_window(k, n, ct);
  for (std::size_t i = static_cast<std::size_t>(degree) + 1; i < window.size(); ++i) {
    if (window[i] != 0) {
      throw InternalInconsistency("numerator_from_series: coefficient " + std::to_string(i) + " of (k,n)=(" +
                                  std::to_string(k) + "," + std::to_string(n) + ") class " + ct.to_string() +
                                  " is " + window[i].str() + ", expected 0");
    }
  }
  window.resize(static_cast<std::size_t>(degree) + 1);
  return window;
}

/// sum_{s=0}^{k-1} (-1)^s binom(n,s) binom(d(k-s) - s + n - 1, n - 1).
inline BigInt katzman_identity_count(std::int64_t k, std::int64_t n, std::int64_t d) {
  detail::require_hypersimplex(k, n, "katzman_identity_count");
  if (d < 0) throw InputError("katzman_identity_count: dilation must be non-negative");
  BigInt total = 0;
  for (std::int64_t s = 0; s < k; ++s) {
    const BigInt term = binomial(n, s) * binomial(d * (k - s) - s + n - 1, n - 1);
    if (s % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

/// Counts x in {0..d}^n with sum x = kd and x_{p(i)} = x_i directly. n <= 8, d <= 6.
inline BigInt direct_lattice_enum(std::int64_t k, std::int64_t n, const Permutation& p, std::int64_t d) {
  detail::require_hypersimplex(k, n, "direct_lattice_enum");
  if (p.degree() != n) throw InputError("direct_lattice_enum: permutation degree differs from n");
  if (n > 8 || d > 6) throw InputError("direct_lattice_enum: limited to n <= 8 and d <= 6");
  if (d < 0) throw InputError("direct_lattice_enum: dilation must be non-negative");
  std::vector<std::int64_t> x(static_cast<std::size_t>(n), 0);
  std::int64_t count = 0;
  while (true) {
    std::int64_t total = 0;
    for (auto v : x) total += v;
    if (total == k * d) {
      bool fixed = true;
      for (int i = 1; i <= n && fixed; ++i) fixed = x[static_cast<std::size_t>(p(i) - 1)] == x[static_cast<std::size_t>(i - 1)];
      if (fixed) ++count;
    }
    std::size_t pos = 0;
    while (pos < x.size() && ++x[pos] > d) x[pos++] = 0;
    if (pos == x.size()) break;
  }
  return count;
}

/// sum_{S subset [r]} (-1)^{|S|} u_{m - k * sum(S)}.
inline BigInt phi_from_u_series(std::int64_t k, const CycleType& ct, std::int64_t m) {
  if (m < 0) return 0;
  const auto u = u_series(ct, m);
  const auto& parts = ct.parts();
  const std::size_t r = parts.size();
  if (r > 20) throw InputError("phi_from_u_series: too many cycles for subset expansion");
  BigInt total = 0;
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    std::int64_t sum = 0;
    int bits = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask & (1u << i)) {
        sum += parts[i];
        ++bits;
      }
    }
    const BigInt term = u.at(m - k * sum);
    if (bits % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

/// H*_m(sigma) from the subset-sum expansion over u-series coefficients:
/// sum_S (-1)^{|S|} sum_h c_h u_{(m - sum S)(k-h) - h}.
inline BigInt katzman_lemma_coeff(std::int64_t k, std::int64_t n, const CycleType& ct, std::int64_t m) {
  detail::require_hypersimplex(k, n, "katzman_lemma_coeff");
  detail::require_class(n, ct, "katzman_lemma_coeff");
  const auto coeffs = inclusion_coefficients(k, ct.multiplicities());
  const auto& parts = ct.parts();
  const std::size_t r = parts.size();
  if (r > 20) throw InputError("katzman_lemma_coeff: too many cycles for subset expansion");
  const auto u = u_series(ct, std::max<std::int64_t>(m * k, 0));
  BigInt total = 0;
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    std::int64_t sum = 0;
    int bits = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask & (1u << i)) {
        sum += parts[i];
        ++bits;
      }
    }
    BigInt inner = 0;
    for (std::int64_t h = 0; h < k; ++h) inner += coeffs[static_cast<std::size_t>(h)] * u.at((m - sum) * (k - h) - h);
    if (bits % 2 == 0) {
      total += inner;
    } else {
      total -= inner;
    }
  }
  return total;
}

}  // namespace hyperehrhart

#endif  // HYPEREHRHART_ORACLE_HPP
