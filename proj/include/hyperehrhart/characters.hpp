#ifndef HYPEREHRHART_CHARACTERS_HPP
#define HYPEREHRHART_CHARACTERS_HPP

// Permutation characters on subsets and two-part partitions, irreducible
// characters of S_n, and decomposition of class functions.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hyperehrhart/arith.hpp"
#include "hyperehrhart/class_function.hpp"
#include "hyperehrhart/hstar.hpp"
#include "hyperehrhart/symgroup.hpp"

namespace hyperehrhart {

/// Irreducible characters of S_n are indexed by partitions of n.
using IrreducibleLabel = CycleType;

namespace detail {

inline void require_subset_size(int n, int m, const char* where) {
  if (m < 0 || m > n) {
    throw InputError(std::string(where) + ": m = " + std::to_string(m) + " outside 0.." + std::to_string(n));
  }
}

inline std::uint32_t subset_image(const std::vector<int>& images, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (mask & (1u << i)) out |= 1u << (images[i] - 1);
  }
  return out;
}

inline void require_small_for_subsets(int n, const char* where) {
  if (n > 20) throw InputError(std::string(where) + ": subset enumeration limited to n <= 20");
}

}  // namespace detail

/// Number of sigma-fixed m-subsets: coefficient of x^m in prod_i (1 + x^{s_i}).
inline ClassFunction rho_m(int n, int m) {
  detail::require_subset_size(n, m, "rho_m");
  return ClassFunction::from(n, [m](const CycleType& ct) {
    std::vector<BigInt> poly(static_cast<std::size_t>(m) + 1, 0);
    poly[0] = 1;
    for (int s : ct.parts()) {
      for (int e = m; e >= s; --e) poly[static_cast<std::size_t>(e)] += poly[static_cast<std::size_t>(e - s)];
    }
    return poly[static_cast<std::size_t>(m)];
  });
}

/// Brute-force count of m-subsets A with p(A) = A.
inline BigInt fixed_subsets_brute(const Permutation& p, int m) {
  const int n = p.degree();
  detail::require_small_for_subsets(n, "fixed_subsets_brute");
  std::int64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) == m && detail::subset_image(p.images(), mask) == mask) ++count;
  }
  return count;
}

/// Brute-force count of m-subsets A with p(A) equal to the complement of A.
inline BigInt complement_swapped_subsets(const Permutation& p, int m) {
  const int n = p.degree();
  detail::require_small_for_subsets(n, "complement_swapped_subsets");
  const std::uint32_t full = (1u << n) - 1;
  std::int64_t count = 0;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (std::popcount(mask) == m && detail::subset_image(p.images(), mask) == (full ^ mask)) ++count;
  }
  return count;
}

/// Number of sigma-fixed unordered pairs {A, [n] \ A} with |A| = m.
inline ClassFunction tau_m(int n, int m) {
  detail::require_subset_size(n, m, "tau_m");
  if (2 * m != n) return rho_m(n, m);
  if (n > 14) throw InputError("tau_m: middle size is computed by subset enumeration, limited to n <= 14");
  const ClassFunction rho = rho_m(n, m);
  return ClassFunction::from(n, [&](const CycleType& ct) {
    const BigInt twice = rho(ct) + complement_swapped_subsets(canonical_representative(ct), m);
    if (twice % 2 != 0) throw InternalInconsistency("tau_m: odd count of fixed ordered halves");
    return BigInt(twice / 2);
  });
}

/// (1/n!) sum_ct |ct| a(ct) b(ct).
inline Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.n() != b.n()) throw InputError("inner_product: class functions of different degree");
  BigInt total = 0;
  for (std::size_t i = 0; i < a.classes().size(); ++i) total += class_size(a.classes()[i]) * a[i] * b[i];
  return Rational(total, factorial(a.n()));
}

/// n! / product of hook lengths.
inline BigInt hook_length_dimension(const IrreducibleLabel& lab) {
  const auto& rows = lab.parts();
  BigInt hooks = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < rows[i]; ++j) {
      int below = 0;
      for (std::size_t r = i + 1; r < rows.size() && rows[r] > j; ++r) ++below;
      hooks *= rows[i] - j + below;
    }
  }
  return factorial(lab.n()) / hooks;
}

namespace detail {

// Murnaghan-Nakayama on beta-sets. Parts are consumed largest first, so the
// remaining cycle parts are always a suffix of ct.parts(); the memo key is
// (current shape, suffix length).
class MnEvaluator {
 public:
  explicit MnEvaluator(const CycleType& ct) : parts_(ct.parts()) {}

  BigInt eval(const std::vector<int>& shape, std::size_t next) {
    if (next == parts_.size()) return shape.empty() ? 1 : 0;
    auto key = std::make_pair(shape, next);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int s = parts_[next];
    const std::size_t len = shape.size();
    std::vector<int> beta(len);
    for (std::size_t i = 0; i < len; ++i) beta[i] = shape[i] + static_cast<int>(len - 1 - i);
    BigInt total = 0;
    for (std::size_t i = 0; i < len; ++i) {
      const int target = beta[i] - s;
      if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
      int jumped = 0;
      for (int b : beta) {
        if (b > target && b < beta[i]) ++jumped;
      }
      std::vector<int> moved = beta;
      moved[i] = target;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> smaller;
      for (std::size_t j = 0; j < len; ++j) {
        const int row = moved[j] - static_cast<int>(len - 1 - j);
        if (row > 0) smaller.push_back(row);
      }
      const BigInt sub = eval(smaller, next + 1);
      if (jumped % 2 == 0) {
        total += sub;
      } else {
        total -= sub;
      }
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::vector<int> parts_;
  std::map<std::pair<std::vector<int>, std::size_t>, BigInt> memo_;
};

}  // namespace detail

/// chi^lab evaluated at the class ct, by border-strip removal.
inline BigInt mn_character(const IrreducibleLabel& lab, const CycleType& ct) {
  if (lab.n() != ct.n()) throw InputError("mn_character: label and class partition different n");
  detail::MnEvaluator evaluator(ct);
  return evaluator.eval(lab.parts(), 0);
}

/// Rows of the character table of S_n in class_list(n) order; computed once per n.
inline const std::vector<ClassFunction>& character_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<ClassFunction>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<ClassFunction> rows;
  for (const auto& lab : class_list(n)) {
    ClassFunction chi = ClassFunction::from(n, [&](const CycleType& ct) { return mn_character(lab, ct); });
    if (chi(CycleType::identity(n)) != hook_length_dimension(lab)) {
      throw InternalInconsistency("mn_character: dimension of " + lab.to_string() + " disagrees with hook lengths");
    }
    rows.push_back(std::move(chi));
  }
  return cache.emplace(n, std::move(rows)).first->second;
}

struct Decomposition {
  int n = 0;
  std::vector<std::pair<IrreducibleLabel, BigInt>> multiplicities;  // every label, class_list order

  BigInt of(const IrreducibleLabel& lab) const {
    for (const auto& [l, m] : multiplicities) {
      if (l == lab) return m;
    }
    throw InputError("Decomposition: unknown label " + lab.to_string());
  }

  bool is_effective() const {
    return std::all_of(multiplicities.begin(), multiplicities.end(), [](const auto& e) { return e.second >= 0; });
  }

  /// "lambda: multiplicity" lines for the nonzero terms.
  std::string to_string() const {
    std::string out;
    for (const auto& [lab, m] : multiplicities) {
      if (m != 0) out += lab.to_string() + ": " + m.str() + "\n";
    }
    return out;
  }
};

/// Multiplicities <f, chi_lambda>; throws InputError if any is non-integral.
inline Decomposition decompose(const ClassFunction& f) {
  const int n = f.n();
  const auto& table = character_table(n);
  Decomposition out;
  out.n = n;
  ClassFunction rebuilt(n);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Rational q = inner_product(f, table[i]);
    if (boost::multiprecision::denominator(q) != 1) {
      throw InputError("decompose: multiplicity of " + class_list(n)[i].to_string() + " is " + to_string(q) +
                       "; input is not a virtual character");
    }
    const BigInt m = boost::multiprecision::numerator(q);
    out.multiplicities.emplace_back(class_list(n)[i], m);
    rebuilt += m * table[i];
  }
  if (rebuilt != f) throw InternalInconsistency("decompose: reconstruction differs from input");
  return out;
}

/// Outcome of each identity of the k = 2 coefficient theorem.
struct K2Report {
  int n = 0;
  std::vector<std::pair<std::string, bool>> checks;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
  }
};

inline K2Report k2_theorem_report(int n) {
  if (n < 3) throw InputError("k2_theorem_check: n must be at least 3");
  const HStarPolynomial poly = hstar_polynomial(2, n);
  const ClassFunction chi0 = ClassFunction::constant(n, 1);
  K2Report report;
  report.n = n;
  auto coeff = [&](int m) { return m <= poly.degree() ? poly.coeffs[static_cast<std::size_t>(m)] : ClassFunction(n); };
  report.checks.emplace_back("H*_0 = chi_0", coeff(0) == chi0);
  report.checks.emplace_back("H*_1 = rho_2 - rho_1", coeff(1) == rho_m(n, 2) - rho_m(n, 1));
  bool middle = true;
  for (int m = 2; m <= n / 2; ++m) middle = middle && coeff(m) == rho_m(n, 2 * m);
  report.checks.emplace_back("H*_m = rho_2m for 2 <= m <= n/2", middle);
  report.checks.emplace_back("degree = floor(n/2)", poly.degree() == n / 2);
  // At n = 3 the leading index is 1, where the H*_1 identity applies instead.
  if (n / 2 >= 2) {
    if (n % 2 == 1) {
      report.checks.emplace_back("leading coefficient = rho_1", coeff((n - 1) / 2) == rho_m(n, 1));
    } else {
      report.checks.emplace_back("leading coefficient = chi_0", coeff(n / 2) == chi0);
    }
  }
  if (n <= 14) {
    ClassFunction taus = chi0;
    for (int m = 2; m <= n / 2; ++m) taus += tau_m(n, m);
    report.checks.emplace_back("H*[1] = chi_0 + tau_2 + ... + tau_{n/2}", poly.at_one() == taus);
  }
  return report;
}

inline bool k2_theorem_check(int n) { return k2_theorem_report(n).passed(); }

/// sum_m rho_{2m} = sum_m tau_m for even n, with both sides also counted by
/// enumerating subsets for each class representative.
inline bool even_subsets_vs_partitions_check(int n) {
  if (n % 2 != 0) throw InputError("even_subsets_vs_partitions_check: n must be even");
  if (n < 2 || n > 14) throw InputError("even_subsets_vs_partitions_check: n must lie in 2..14");
  ClassFunction left(n);
  ClassFunction right(n);
  for (int m = 0; m <= n / 2; ++m) {
    left += rho_m(n, 2 * m);
    right += tau_m(n, m);
  }
  if (left != right) return false;
  const std::uint32_t full = (1u << n) - 1;
  for (const auto& ct : class_list(n)) {
    const Permutation p = canonical_representative(ct);
    std::int64_t even_fixed = 0;
    std::int64_t pair_ends = 0;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      const std::uint32_t image = detail::subset_image(p.images(), mask);
      if (image == mask && std::popcount(mask) % 2 == 0) ++even_fixed;
      if (image == mask || image == (full ^ mask)) ++pair_ends;
    }
    if (BigInt(even_fixed) != left(ct) || BigInt(pair_ends / 2) != right(ct)) return false;
  }
  return true;
}

}  // namespace hyperehrhart

#endif  // HYPEREHRHART_CHARACTERS_HPP
