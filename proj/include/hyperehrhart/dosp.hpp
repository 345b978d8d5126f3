#ifndef HYPEREHRHART_DOSP_HPP
#define HYPEREHRHART_DOSP_HPP

// Decorated ordered set partitions, stored as functions [n] -> Z/kZ modulo a
// constant shift (canonical representative: f(1) = 0).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hyperehrhart/arith.hpp"
#include "hyperehrhart/hstar.hpp"
#include "hyperehrhart/symgroup.hpp"

namespace hyperehrhart {

inline constexpr std::int64_t kDospEnumerationLimit = 20'000'000;

class Dosp {
 public:
  Dosp() = default;

  /// values[i-1] = f(i). Values must lie in 0..k-1; the result is shifted so f(1) = 0.
  Dosp(int k, std::vector<int> values) : k_(k), f_(std::move(values)) {
    if (k_ < 1) throw InputError("DOSP modulus k must be positive");
    if (f_.empty()) throw InputError("DOSP ground set must be non-empty");
    for (int v : f_) {
      if (v < 0 || v >= k_) throw InputError("DOSP value " + std::to_string(v) + " outside 0.." + std::to_string(k_ - 1));
    }
    const int shift = f_[0];
    for (int& v : f_) v = static_cast<int>(mod_floor(v - shift, k_));
  }

  /// Comma-separated residues, e.g. "0,0,1,1".
  static Dosp parse_function(int k, std::string_view text) {
    std::vector<int> values;
    std::string token;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, token, ',')) {
      try {
        values.push_back(std::stoi(token));
      } catch (const std::exception&) {
        throw InputError("bad residue '" + token + "' in DOSP function form");
      }
    }
    return Dosp(k, std::move(values));
  }

  int k() const { return k_; }
  int n() const { return static_cast<int>(f_.size()); }
  const std::vector<int>& values() const { return f_; }
  int operator()(int i) const { return f_.at(static_cast<std::size_t>(i - 1)); }

  std::string to_function_string() const {
    std::string out;
    for (std::size_t i = 0; i < f_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(f_[i]);
    }
    return out;
  }

  friend bool operator==(const Dosp&, const Dosp&) = default;
  friend auto operator<=>(const Dosp& a, const Dosp& b) {
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    return a.f_ <=> b.f_;
  }

 private:
  int k_ = 1;
  std::vector<int> f_;
};

/// One pair (L, l) of a DOSP in block form.
struct DospBlock {
  std::vector<int> elements;  // sorted
  int decoration = 0;

  friend bool operator==(const DospBlock&, const DospBlock&) = default;
  friend auto operator<=>(const DospBlock&, const DospBlock&) = default;
};

/// Cyclic block sequence ((L_1, l_1), ..., (L_r, l_r)), stored in its
/// lexicographically least rotation.
struct DospBlocks {
  std::vector<DospBlock> blocks;

  int k() const {
    int k = 0;
    for (const auto& b : blocks) k += b.decoration;
    return k;
  }
  int n() const {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.elements.size());
    return n;
  }

  void canonicalize() {
    for (auto& b : blocks) std::sort(b.elements.begin(), b.elements.end());
    if (blocks.empty()) return;
    std::vector<DospBlock> best = blocks;
    for (std::size_t s = 1; s < blocks.size(); ++s) {
      std::vector<DospBlock> rotated(blocks.begin() + static_cast<std::ptrdiff_t>(s), blocks.end());
      rotated.insert(rotated.end(), blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(s));
      if (rotated < best) best = std::move(rotated);
    }
    blocks = std::move(best);
  }

  /// "(1 3 5|1)(7 9|2)".
  std::string to_string() const {
    std::string out;
    for (const auto& b : blocks) {
      out += '(';
      for (std::size_t i = 0; i < b.elements.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(b.elements[i]);
      }
      out += '|' + std::to_string(b.decoration) + ')';
    }
    return out;
  }

  static DospBlocks parse(std::string_view text) {
    DospBlocks out;
    std::size_t pos = 0;
    auto skip_space = [&]() {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    auto read_int = [&]() {
      skip_space();
      std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (start == pos) throw InputError("expected a number at offset " + std::to_string(start) + " of DOSP '" + std::string(text) + "'");
      return std::stoi(std::string(text.substr(start, pos - start)));
    };
    skip_space();
    while (pos < text.size()) {
      if (text[pos] != '(') throw InputError("expected '(' at offset " + std::to_string(pos) + " of DOSP '" + std::string(text) + "'");
      ++pos;
      DospBlock block;
      skip_space();
      while (pos < text.size() && text[pos] != '|') {
        block.elements.push_back(read_int());
        skip_space();
      }
      if (pos >= text.size()) throw InputError("missing '|' in DOSP block");
      ++pos;
      block.decoration = read_int();
      skip_space();
      if (pos >= text.size() || text[pos] != ')') throw InputError("missing ')' in DOSP block");
      ++pos;
      out.blocks.push_back(std::move(block));
      skip_space();
    }
    out.canonicalize();
    return out;
  }

  friend bool operator==(const DospBlocks&, const DospBlocks&) = default;
};

/// L_j = f^{-1}(v_j) for the occupied residues v_1 = 0 < v_2 < ... < v_r;
/// l_j is the gap to the next occupied residue (cyclically).
inline DospBlocks to_blocks(const Dosp& d) {
  std::vector<std::vector<int>> by_value(static_cast<std::size_t>(d.k()));
  for (int i = 1; i <= d.n(); ++i) by_value[static_cast<std::size_t>(d(i))].push_back(i);
  std::vector<int> occupied;
  for (int v = 0; v < d.k(); ++v) {
    if (!by_value[static_cast<std::size_t>(v)].empty()) occupied.push_back(v);
  }
  DospBlocks out;
  for (std::size_t j = 0; j < occupied.size(); ++j) {
    const int next = j + 1 < occupied.size() ? occupied[j + 1] : d.k();
    out.blocks.push_back({by_value[static_cast<std::size_t>(occupied[j])], next - occupied[j]});
  }
  out.canonicalize();
  return out;
}

/// f(i) = l_1 + ... + l_{j-1} for i in L_j.
inline Dosp from_blocks(const DospBlocks& b) {
  if (b.blocks.empty()) throw InputError("DOSP needs at least one block");
  const int n = b.n();
  const int k = b.k();
  std::vector<int> values(static_cast<std::size_t>(n), -1);
  int offset = 0;
  for (const auto& block : b.blocks) {
    if (block.elements.empty()) throw InputError("DOSP blocks must be non-empty");
    if (block.decoration < 1) throw InputError("DOSP decorations must be positive");
    for (int e : block.elements) {
      if (e < 1 || e > n) throw InputError("DOSP element " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
      if (values[static_cast<std::size_t>(e - 1)] != -1) throw InputError("DOSP element " + std::to_string(e) + " appears twice");
      values[static_cast<std::size_t>(e - 1)] = offset;
    }
    offset += block.decoration;
  }
  return Dosp(k, std::move(values));
}

namespace detail {

// Block-size test on a raw function; scratch must have size >= k.
inline bool hypersimplicial_raw(std::span<const int> f, int k, std::vector<int>& scratch) {
  std::fill(scratch.begin(), scratch.begin() + k, 0);
  for (int v : f) ++scratch[static_cast<std::size_t>(v)];
  int first = -1;
  int prev = -1;
  for (int v = 0; v < k; ++v) {
    if (scratch[static_cast<std::size_t>(v)] == 0) continue;
    if (prev >= 0 && scratch[static_cast<std::size_t>(prev)] <= v - prev) return false;
    if (first < 0) first = v;
    prev = v;
  }
  return scratch[static_cast<std::size_t>(prev)] > k - prev + first;
}

inline std::int64_t winding_raw(std::span<const int> f, int k) {
  std::int64_t sum = 0;
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) sum += mod_floor(f[(i + 1) % n] - f[i], k);
  if (sum % k != 0) throw InternalInconsistency("cyclic distance sum not divisible by k");
  return sum / k;
}

}  // namespace detail

/// True iff every block satisfies |L_i| > l_i.
inline bool is_hypersimplicial(const Dosp& d) {
  std::vector<int> scratch(static_cast<std::size_t>(d.k()));
  return detail::hypersimplicial_raw(d.values(), d.k(), scratch);
}

/// (d(1,2) + ... + d(n-1,n) + d(n,1)) / k with d(i,j) = f(j) - f(i) mod k.
inline std::int64_t winding_number(const Dosp& d) { return detail::winding_raw(d.values(), d.k()); }

/// (sigma . f)(i) = f(sigma^{-1}(i)), re-canonicalized.
inline Dosp act(const Permutation& p, const Dosp& d) {
  if (p.degree() != d.n()) throw InputError("act: permutation degree differs from DOSP size");
  const Permutation inv = p.inverse();
  std::vector<int> values(static_cast<std::size_t>(d.n()));
  for (int i = 1; i <= d.n(); ++i) values[static_cast<std::size_t>(i - 1)] = d(inv(i));
  return Dosp(d.k(), std::move(values));
}

/// The tau in Z/kZ with (sigma . f)(i) = f(i) + tau for all i. Requires act(p, d) == d.
inline std::int64_t turning_number(const Permutation& p, const Dosp& d) {
  if (act(p, d) != d) throw PreconditionError("turning_number: DOSP is not fixed by the permutation");
  return mod_floor(d(p.inverse()(1)) - d(1), d.k());
}

struct DospFilter {
  bool hypersimplicial_only = false;
  std::optional<Permutation> fixed_by;
  std::optional<std::int64_t> winding;
};

namespace detail {

inline void require_enumeration_budget(std::int64_t k, std::int64_t n) {
  if (k < 1 || n < 1) throw InputError("DOSP enumeration needs k, n >= 1");
  BigInt total = ipow(BigInt(k), n - 1);
  if (total > kDospEnumerationLimit) {
    throw InputError("DOSP enumeration of k^(n-1) = " + total.str() + " functions exceeds the limit of " +
                     std::to_string(kDospEnumerationLimit));
  }
}

// Exhaustive depth-first search over f with f(1) = 0. With a permutation
// filter, a branch is cut as soon as two assigned positions i, sigma^{-1}(i)
// disagree on the shift f(sigma^{-1}(i)) - f(i).
template <typename Visitor>
class DospSearch {
 public:
  DospSearch(int k, int n, const DospFilter& filter, Visitor& visit)
      : k_(k), n_(n), filter_(filter), visit_(visit), f_(static_cast<std::size_t>(n), 0),
        scratch_(static_cast<std::size_t>(k)), checks_(static_cast<std::size_t>(n)) {
    if (filter.fixed_by) {
      if (filter.fixed_by->degree() != n) throw InputError("fixed_by permutation has the wrong degree");
      const Permutation inv = filter.fixed_by->inverse();
      for (int i = 0; i < n; ++i) {
        const int j = inv(i + 1) - 1;
        checks_[static_cast<std::size_t>(std::max(i, j))].push_back({j, i});
      }
    }
  }

  void run() {
    std::int64_t tau = -1;
    if (!consistent(0, tau)) return;
    descend(1, tau);
  }

 private:
  struct Check {
    int from;  // sigma^{-1}(i)
    int to;    // i
  };

  bool consistent(int pos, std::int64_t& tau) const {
    for (const auto& c : checks_[static_cast<std::size_t>(pos)]) {
      const std::int64_t shift = mod_floor(f_[static_cast<std::size_t>(c.from)] - f_[static_cast<std::size_t>(c.to)], k_);
      if (tau < 0) {
        tau = shift;
      } else if (shift != tau) {
        return false;
      }
    }
    return true;
  }

  void descend(int pos, std::int64_t tau) {
    if (pos == n_) {
      leaf();
      return;
    }
    for (int v = 0; v < k_; ++v) {
      f_[static_cast<std::size_t>(pos)] = v;
      std::int64_t t = tau;
      if (consistent(pos, t)) descend(pos + 1, t);
    }
    f_[static_cast<std::size_t>(pos)] = 0;
  }

  void leaf() {
    if (filter_.hypersimplicial_only && !hypersimplicial_raw(f_, k_, scratch_)) return;
    if (filter_.winding && winding_raw(f_, k_) != *filter_.winding) return;
    visit_(std::span<const int>(f_));
  }

  int k_;
  int n_;
  const DospFilter& filter_;
  Visitor& visit_;
  std::vector<int> f_;
  std::vector<int> scratch_;
  std::vector<std::vector<Check>> checks_;
};

}  // namespace detail

/// Calls visit(span<const int> f) for every canonical (k,n)-DOSP passing the filter.
template <typename Visitor>
void for_each_dosp(int k, int n, const DospFilter& filter, Visitor&& visit) {
  detail::require_enumeration_budget(k, n);
  detail::DospSearch<std::remove_reference_t<Visitor>> search(k, n, filter, visit);
  search.run();
}

inline std::vector<Dosp> enumerate_dosps(int k, int n, const DospFilter& filter = {}) {
  std::vector<Dosp> out;
  for_each_dosp(k, n, filter, [&](std::span<const int> f) { out.emplace_back(k, std::vector<int>(f.begin(), f.end())); });
  return out;
}

/// Brute-force count of DOSPs fixed by the canonical representative of ct.
inline BigInt count_fixed(int k, int n, const CycleType& ct, bool hypersimplicial_only) {
  if (ct.n() != n) throw InputError("count_fixed: cycle type does not partition n");
  DospFilter filter;
  filter.hypersimplicial_only = hypersimplicial_only;
  filter.fixed_by = canonical_representative(ct);
  std::int64_t count = 0;
  for_each_dosp(k, n, filter, [&](std::span<const int>) { ++count; });
  return count;
}

/// Brute-force histogram over winding number 0..n-1 of hypersimplicial DOSPs fixed by p.
inline std::vector<BigInt> fixed_winding_histogram(int k, int n, const Permutation& p) {
  DospFilter filter;
  filter.hypersimplicial_only = true;
  filter.fixed_by = p;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
  for_each_dosp(k, n, filter, [&](std::span<const int> f) { ++counts[static_cast<std::size_t>(detail::winding_raw(f, k))]; });
  return {counts.begin(), counts.end()};
}

/// Visits every DOSP fixed by p by choosing the common shift f(sigma(x)) - f(x)
/// among the g multiples of k/g and the value at the minimum of each other cycle.
template <typename Visitor>
void for_each_constructive_fixed(int k, int n, const Permutation& p, Visitor&& visit) {
  if (k < 1) throw InputError("constructive_fixed: k must be positive");
  if (p.degree() != n) throw InputError("constructive_fixed: permutation degree differs from n");
  const auto cycles = p.cycles();
  const CycleType ct = p.cycle_type();
  const std::int64_t g = gcd_with_k(k, ct);
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  std::vector<int> alpha(cycles.size(), 0);  // alpha[0] stays 0: f(1) = 0
  for (std::int64_t beta = 0; beta < g; ++beta) {
    const std::int64_t shift = beta * (k / g);
    std::fill(alpha.begin(), alpha.end(), 0);
    while (true) {
      for (std::size_t c = 0; c < cycles.size(); ++c) {
        for (std::size_t t = 0; t < cycles[c].size(); ++t) {
          f[static_cast<std::size_t>(cycles[c][t] - 1)] =
              static_cast<int>(mod_floor(alpha[c] + static_cast<std::int64_t>(t) * shift, k));
        }
      }
      visit(std::span<const int>(f));
      std::size_t pos = 1;
      while (pos < alpha.size() && ++alpha[pos] == k) alpha[pos++] = 0;
      if (pos >= alpha.size()) break;
    }
  }
}

/// The g * k^{r-1} DOSPs fixed by p, without enumerating all of Z/kZ^n.
inline std::vector<Dosp> constructive_fixed(int k, int n, const Permutation& p) {
  std::vector<Dosp> out;
  for_each_constructive_fixed(k, n, p, [&](std::span<const int> f) { out.emplace_back(k, std::vector<int>(f.begin(), f.end())); });
  return out;
}

/// Number of S_n-orbits on (hypersimplicial) (k,n)-DOSPs via Burnside's lemma,
/// using closed-form fixed-point counts.
inline BigInt burnside_orbit_count(int k, int n, bool hypersimplicial_only) {
  if (k < 1 || n < 1) throw InputError("burnside_orbit_count: k, n must be positive");
  if (n > kMaxDegree) throw InputError("burnside_orbit_count: n too large");
  BigInt weighted = 0;
  for (const auto& ct : class_list(n)) {
    BigInt fixed;
    if (!hypersimplicial_only) {
      fixed = gcd_with_k(k, ct) * ipow(BigInt(k), ct.num_parts() - 1);
    } else if (k >= 2 && k < n) {
      fixed = hstar_at_one(k, n, ct);
    } else {
      std::int64_t count = 0;
      std::vector<int> scratch(static_cast<std::size_t>(k));
      for_each_constructive_fixed(k, n, canonical_representative(ct), [&](std::span<const int> f) {
        if (detail::hypersimplicial_raw(f, k, scratch)) ++count;
      });
      fixed = count;
    }
    weighted += class_size(ct) * fixed;
  }
  const BigInt order = factorial(n);
  if (weighted % order != 0) {
    throw InternalInconsistency("burnside_orbit_count: weighted fixed-point sum " + weighted.str() +
                                " is not divisible by " + order.str());
  }
  return weighted / order;
}

}  // namespace hyperehrhart

#endif  // HYPEREHRHART_DOSP_HPP
