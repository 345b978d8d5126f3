#ifndef HYPEREHRHART_HSTAR_HPP
#define HYPEREHRHART_HSTAR_HPP

// Closed forms for the S_n-equivariant H*-polynomial of the hypersimplex
// Delta_{k,n}, its evaluation at t = 1, the inclusion-exclusion count of
// non-hypersimplicial fixed DOSPs, and the supporting integer sequences.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "hyperehrhart/arith.hpp"
#include "hyperehrhart/class_function.hpp"
#include "hyperehrhart/parallel.hpp"
#include "hyperehrhart/symgroup.hpp"

namespace hyperehrhart {

/// (I_1, ..., I_{k-1}) with weight sum_i i*I_i and size sum_i I_i.
struct IVector {
  std::vector<std::int64_t> entries;

  std::int64_t weight() const {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) w += static_cast<std::int64_t>(i + 1) * entries[i];
    return w;
  }
  std::int64_t size() const { return std::accumulate(entries.begin(), entries.end(), std::int64_t{0}); }

  friend bool operator==(const IVector&, const IVector&) = default;
};

namespace detail {

inline void ivectors_rec(std::size_t pos, std::int64_t remaining, std::vector<std::int64_t>& current,
                         std::vector<IVector>& out) {
  if (pos == current.size()) {
    if (remaining == 0) out.push_back(IVector{current});
    return;
  }
  const auto part = static_cast<std::int64_t>(pos + 1);
  for (std::int64_t c = remaining / part; c >= 0; --c) {
    current[pos] = c;
    ivectors_rec(pos + 1, remaining - c * part, current, out);
  }
  current[pos] = 0;
}

// Same as enum_ivectors, but also accepts k = 1 (a single empty vector of weight 0).
inline std::vector<IVector> ivectors(std::int64_t h, std::int64_t k) {
  std::vector<IVector> out;
  if (h < 0) return out;
  std::vector<std::int64_t> current(static_cast<std::size_t>(k - 1), 0);
  ivectors_rec(0, h, current, out);
  return out;
}

inline std::int64_t lambda_at(std::span<const std::int64_t> lambda, std::size_t part) {
  return part >= 1 && part <= lambda.size() ? lambda[part - 1] : 0;
}

inline BigInt binomial_product(const IVector& iv, std::span<const std::int64_t> lambda) {
  BigInt prod = 1;
  for (std::size_t j = 0; j < iv.entries.size() && prod != 0; ++j) {
    prod *= binomial(lambda_at(lambda, j + 1), iv.entries[j]);
  }
  return prod;
}

}  // namespace detail

/// All I in Z_{>=0}^{k-1} with sum_i i*I_i = h, largest I_1 first.
inline std::vector<IVector> enum_ivectors(std::int64_t h, std::int64_t k) {
  if (k < 2) throw InputError("enum_ivectors: k must be at least 2");
  if (h < 0) throw InputError("enum_ivectors: h must be non-negative");
  return detail::ivectors(h, k);
}

/// sum over I in I_h of (-1)^{|I|} prod_j binom(lambda_j, I_j), for h = 0..k-1.
/// lambda[i-1] is the number of parts equal to i.
inline std::vector<BigInt> inclusion_coefficients(std::int64_t k, std::span<const std::int64_t> lambda) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(std::max<std::int64_t>(k, 0)));
  for (std::int64_t h = 0; h < k; ++h) {
    BigInt sum = 0;
    for (const auto& iv : detail::ivectors(h, k)) {
      const BigInt prod = detail::binomial_product(iv, lambda);
      if (iv.size() % 2 == 0) {
        sum += prod;
      } else {
        sum -= prod;
      }
    }
    coeffs[static_cast<std::size_t>(h)] = sum;
  }
  return coeffs;
}

/// |{f : [r] -> {0..k-1} : sum_i f(i) s_i = m}| by a knapsack over the parts.
inline BigInt count_phi(std::int64_t k, const CycleType& ct, std::int64_t m) {
  if (k < 1) throw InputError("count_phi: k must be positive");
  if (m < 0) return 0;
  std::vector<BigInt> ways(static_cast<std::size_t>(m) + 1, 0);
  ways[0] = 1;
  for (int s : ct.parts()) {
    std::vector<BigInt> next(ways.size(), 0);
    for (std::int64_t total = 0; total <= m; ++total) {
      if (ways[static_cast<std::size_t>(total)] == 0) continue;
      for (std::int64_t v = 0; v < k; ++v) {
        const std::int64_t t = total + v * s;
        if (t > m) break;
        next[static_cast<std::size_t>(t)] += ways[static_cast<std::size_t>(total)];
      }
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(m)];
}

/// Literal enumeration of the functions counted by count_phi. Limited to r <= 8.
inline BigInt count_phi_enumerate(std::int64_t k, const CycleType& ct, std::int64_t m) {
  if (k < 1) throw InputError("count_phi_enumerate: k must be positive");
  if (ct.num_parts() > 8) throw InputError("count_phi_enumerate: at most 8 cycles");
  if (m < 0) return 0;
  const auto& parts = ct.parts();
  std::vector<std::int64_t> f(parts.size(), 0);
  std::int64_t count = 0;
  while (true) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) total += f[i] * parts[i];
    if (total == m) ++count;
    std::size_t pos = 0;
    while (pos < f.size() && ++f[pos] == k) f[pos++] = 0;
    if (pos == f.size()) break;
  }
  return count;
}

inline std::int64_t hstar_degree(std::int64_t k, std::int64_t n) { return (k - 1) * n / k; }

namespace detail {

inline void require_hypersimplex(std::int64_t k, std::int64_t n, const char* where) {
  if (k < 1 || k >= n) {
    throw InputError(std::string(where) + ": need 1 <= k < n, got k=" + std::to_string(k) +
                     " n=" + std::to_string(n));
  }
}

inline void require_class(std::int64_t n, const CycleType& ct, const char* where) {
  if (ct.n() != n) {
    throw InputError(std::string(where) + ": cycle type " + ct.to_string() + " does not partition " +
                     std::to_string(n));
  }
}

}  // namespace detail

/// H*_m(sigma) = sum_h c_h(sigma) |Phi_{k-h}(sigma, m(k-h) - h)|.
inline BigInt hstar_coeff(std::int64_t k, std::int64_t n, const CycleType& ct, std::int64_t m) {
  detail::require_hypersimplex(k, n, "hstar_coeff");
  detail::require_class(n, ct, "hstar_coeff");
  if (m < 0) throw InputError("hstar_coeff: m must be non-negative");
  const auto lambda = ct.multiplicities();
  const auto coeffs = inclusion_coefficients(k, lambda);
  BigInt total = 0;
  for (std::int64_t h = 0; h < k; ++h) {
    const BigInt& c = coeffs[static_cast<std::size_t>(h)];
    if (c == 0) continue;
    total += c * count_phi(k - h, ct, m * (k - h) - h);
  }
  return total;
}

/// Coefficients H*_0 .. H*_D of the equivariant H*-polynomial, D = floor((k-1)n/k).
struct HStarPolynomial {
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::vector<ClassFunction> coeffs;

  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }

  ClassFunction at_one() const {
    ClassFunction sum(static_cast<int>(n));
    for (const auto& c : coeffs) sum += c;
    return sum;
  }
};

inline HStarPolynomial hstar_polynomial(std::int64_t k, std::int64_t n, unsigned jobs = 1) {
  detail::require_hypersimplex(k, n, "hstar_polynomial");
  const std::int64_t degree = hstar_degree(k, n);
  const auto& classes = class_list(static_cast<int>(n));
  const auto columns = parallel_map(classes.size(), jobs, [&](std::size_t idx) {
    std::vector<BigInt> column;
    for (std::int64_t m = 0; m <= degree; ++m) column.push_back(hstar_coeff(k, n, classes[idx], m));
    return column;
  });
  HStarPolynomial poly{k, n, {}};
  for (std::int64_t m = 0; m <= degree; ++m) {
    ClassFunction f(static_cast<int>(n));
    for (std::size_t idx = 0; idx < classes.size(); ++idx) f[idx] = columns[idx][static_cast<std::size_t>(m)];
    poly.coeffs.push_back(std::move(f));
  }
  return poly;
}

/// H*[1](sigma) = g sum_h c_h(sigma) (k-h)^{r-1}; equals the number of
/// sigma-fixed hypersimplicial (k,n)-DOSPs.
inline BigInt hstar_at_one(std::int64_t k, std::int64_t n, const CycleType& ct) {
  if (k < 2) throw InputError("hstar_at_one: closed form needs k >= 2 (sum hstar_polynomial for k = 1)");
  detail::require_hypersimplex(k, n, "hstar_at_one");
  detail::require_class(n, ct, "hstar_at_one");
  const auto coeffs = inclusion_coefficients(k, ct.multiplicities());
  const std::int64_t r = ct.num_parts();
  BigInt total = 0;
  for (std::int64_t h = 0; h < k; ++h) total += coeffs[static_cast<std::size_t>(h)] * ipow(BigInt(k - h), r - 1);
  return gcd_with_k(k, ct) * total;
}

/// The same value via sum_h c_h g_h (k-h)^{r-1} [g | h] with g_h = gcd(k-h, parts).
inline BigInt hstar_at_one_unsimplified(std::int64_t k, std::int64_t n, const CycleType& ct) {
  if (k < 2) throw InputError("hstar_at_one_unsimplified: needs k >= 2");
  detail::require_hypersimplex(k, n, "hstar_at_one_unsimplified");
  detail::require_class(n, ct, "hstar_at_one_unsimplified");
  const auto coeffs = inclusion_coefficients(k, ct.multiplicities());
  const std::int64_t r = ct.num_parts();
  const std::int64_t g = gcd_with_k(k, ct);
  BigInt total = 0;
  for (std::int64_t h = 0; h < k; ++h) {
    if (h % g != 0) continue;
    const std::int64_t g_h = gcd_with_k(k - h, ct);
    total += coeffs[static_cast<std::size_t>(h)] * g_h * ipow(BigInt(k - h), r - 1);
  }
  return total;
}

/// Eulerian number A(n, k): permutations of [n] with exactly k ascents.
inline BigInt eulerian(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) return 0;
  if (n == 0) return k == 0 ? 1 : 0;
  if (k >= n) return 0;
  std::vector<BigInt> row{1};  // n = 0
  for (std::int64_t m = 1; m <= n; ++m) {
    std::vector<BigInt> next(static_cast<std::size_t>(m), 0);
    for (std::int64_t j = 0; j < m; ++j) {
      BigInt v = 0;
      if (j < static_cast<std::int64_t>(row.size())) v += (j + 1) * row[static_cast<std::size_t>(j)];
      if (j >= 1 && j - 1 < static_cast<std::int64_t>(row.size())) v += (m - j) * row[static_cast<std::size_t>(j - 1)];
      next[static_cast<std::size_t>(j)] = v;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

/// sum_{h=0}^{k-1} (-1)^h binom(n,h) (k-h)^{n-1}, the normalized volume of Delta_{k,n}.
inline BigInt hypersimplex_volume_alternating(std::int64_t k, std::int64_t n) {
  BigInt total = 0;
  for (std::int64_t h = 0; h < k; ++h) {
    const BigInt term = binomial(n, h) * ipow(BigInt(k - h), n - 1);
    if (h % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

/// Stirling number of the second kind {n over k}.
inline BigInt stirling2(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n == 0) return 1;
  if (k == 0) return 0;
  std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (std::int64_t m = 1; m <= n; ++m) {
    for (std::int64_t j = std::min(m, k); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] = j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

/// x^n = sum_j {n j} (x)_j, with (x)_j the falling factorial.
inline bool check_stirling_falling(std::int64_t n, std::int64_t x) {
  if (n < 0) throw InputError("check_stirling_falling: n must be non-negative");
  BigInt sum = 0;
  for (std::int64_t j = 0; j <= n; ++j) sum += stirling2(n, j) * falling_factorial(BigInt(x), j);
  return sum == ipow(BigInt(x), n);
}

/// Evaluates y^{1-j} sum_{h=1}^{j} (-1)^{h+1} {j h} (y+1)...(y+h-1) exactly and
/// compares with (-1)^{j+1}.
inline bool check_F_identity(std::int64_t j, const Rational& y) {
  if (j < 1) throw InputError("check_F_identity: j must be positive");
  if (y <= 0) throw InputError("check_F_identity: y must be positive");
  Rational sum = 0;
  for (std::int64_t h = 1; h <= j; ++h) {
    Rational rising = 1;
    for (std::int64_t t = 1; t <= h - 1; ++t) rising *= y + t;
    const Rational term = Rational(stirling2(j, h)) * rising;
    if (h % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  Rational scale = 1;
  for (std::int64_t t = 0; t < j - 1; ++t) scale /= y;
  const Rational value = scale * sum;
  return value == Rational(j % 2 == 1 ? 1 : -1);
}

/// Number of sigma-fixed DOSPs with turning number of order `order` in which a
/// pairwise disjoint family of h sigma-orbit unions covering i elements and j
/// cycles are all unions of bad blocks. Zero when order does not divide k - i.
inline BigInt nonhyp_intersection_count(std::int64_t k, std::int64_t i, std::int64_t j, std::int64_t h,
                                        std::int64_t order, std::int64_t r) {
  if (order < 1 || h < 1 || j < 1 || j > r || i >= k) {
    throw InputError("nonhyp_intersection_count: parameters out of range");
  }
  if ((k - i) % order != 0) return 0;
  const std::int64_t y = (k - i) / order;
  BigInt ratio = 1;  // (y+h-1)! / y!
  for (std::int64_t t = y + 1; t <= y + h - 1; ++t) ratio *= t;
  return ratio * ipow(BigInt(order), j - 1) * ipow(BigInt(k - i), r - j);
}

/// Inclusion-exclusion count of sigma-fixed non-hypersimplicial (k,n)-DOSPs,
/// summed over the turning numbers tau with g*tau = 0.
inline BigInt nonhyp_count(std::int64_t k, std::int64_t n, const CycleType& ct) {
  if (k < 2) throw InputError("nonhyp_count: needs k >= 2");
  detail::require_hypersimplex(k, n, "nonhyp_count");
  detail::require_class(n, ct, "nonhyp_count");
  const auto lambda = ct.multiplicities();
  const std::int64_t r = ct.num_parts();
  const std::int64_t g = gcd_with_k(k, ct);

  // cycles[i][j] = sum over I in I_i with |I| = j of prod binom(lambda, I).
  std::vector<std::vector<BigInt>> cycles(static_cast<std::size_t>(k), std::vector<BigInt>(static_cast<std::size_t>(k), 0));
  for (std::int64_t i = 1; i < k; ++i) {
    for (const auto& iv : detail::ivectors(i, k)) {
      cycles[static_cast<std::size_t>(i)][static_cast<std::size_t>(iv.size())] += detail::binomial_product(iv, lambda);
    }
  }

  BigInt total = 0;
  for (std::int64_t beta = 0; beta < g; ++beta) {
    const std::int64_t tau = beta * (k / g);
    const std::int64_t order = k / std::gcd(k, tau);
    for (std::int64_t h = 1; h < k; ++h) {
      BigInt inner = 0;
      for (std::int64_t i = h; i < k; ++i) {
        for (std::int64_t j = 1; j <= i; ++j) {
          const BigInt& ways = cycles[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          if (ways == 0) continue;
          const BigInt s = stirling2(j, h);
          if (s == 0) continue;
          inner += nonhyp_intersection_count(k, i, j, h, order, r) * ways * s;
        }
      }
      if (h % 2 == 1) {
        total += inner;
      } else {
        total -= inner;
      }
    }
  }
  return total;
}

/// gcd({k} and {i : lambda_i >= 1}); lambda[i-1] = lambda_i.
inline std::int64_t recurrence_gcd(std::int64_t k, std::span<const std::int64_t> lambda) {
  std::int64_t g = k < 0 ? -k : k;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] >= 1) g = std::gcd(g, static_cast<std::int64_t>(i + 1));
  }
  return g;
}

namespace detail {

inline void require_lambda(std::span<const std::int64_t> lambda, std::int64_t r) {
  for (auto v : lambda) {
    if (v < 0) throw InputError("multiplicity vector has a negative entry");
  }
  if (r < 1) throw InputError("r must be positive");
}

}  // namespace detail

/// B(k, lambda, r) = g(k,lambda) sum_h c_h(lambda) (k-h)^{r-1}, and 0 for k < 1.
/// lambda is a free multiplicity vector: it need not describe a cycle type with r parts.
inline BigInt recurrence_b(std::int64_t k, std::span<const std::int64_t> lambda, std::int64_t r) {
  detail::require_lambda(lambda, r);
  if (k < 1) return 0;
  const auto coeffs = inclusion_coefficients(k, lambda);
  BigInt total = 0;
  for (std::int64_t h = 0; h < k; ++h) total += coeffs[static_cast<std::size_t>(h)] * ipow(BigInt(k - h), r - 1);
  return recurrence_gcd(k, lambda) * total;
}

/// Checks the base cases and, for every a in [k-1] with lambda_a >= 1,
/// B(k,l,r) = g(k,l)/g(k,l') B(k,l',r) - g(k,l)/g(k-a,l') B(k-a,l',r) with l' = l - e_a.
inline bool check_recurrence(std::int64_t k, std::span<const std::int64_t> lambda, std::int64_t r) {
  detail::require_lambda(lambda, r);
  const BigInt value = recurrence_b(k, lambda, r);
  if (k < 1) return value == 0;
  const std::int64_t g = recurrence_gcd(k, lambda);
  bool small_parts = false;
  bool ok = true;
  for (std::int64_t a = 1; a < k; ++a) {
    if (detail::lambda_at(lambda, static_cast<std::size_t>(a)) < 1) continue;
    small_parts = true;
    std::vector<std::int64_t> reduced(lambda.begin(), lambda.end());
    --reduced[static_cast<std::size_t>(a - 1)];
    const Rational rhs = Rational(g, recurrence_gcd(k, reduced)) * Rational(recurrence_b(k, reduced, r)) -
                         Rational(g, recurrence_gcd(k - a, reduced)) * Rational(recurrence_b(k - a, reduced, r));
    ok = ok && rhs == Rational(value);
  }
  if (!small_parts) ok = ok && value == g * ipow(BigInt(k), r - 1);
  return ok;
}

}  // namespace hyperehrhart

#endif  // HYPEREHRHART_HSTAR_HPP
