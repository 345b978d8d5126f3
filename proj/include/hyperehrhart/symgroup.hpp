#ifndef HYPEREHRHART_SYMGROUP_HPP
#define HYPEREHRHART_SYMGROUP_HPP

// Conjugacy classes of S_n (integer partitions) and concrete permutations.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperehrhart/arith.hpp"

namespace hyperehrhart {

inline constexpr int kMaxDegree = 30;

/// A conjugacy class of S_n, stored as a non-increasing list of cycle lengths.
class CycleType {
 public:
  CycleType() = default;

  explicit CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InputError("cycle type must have at least one part");
    for (int p : parts_) {
      if (p < 1) throw InputError("cycle type parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    if (n_ > kMaxDegree) {
      throw InputError("degree " + std::to_string(n_) + " exceeds the supported maximum of " +
                       std::to_string(kMaxDegree));
    }
  }

  /// Parses "3,2,1" (any order; normalized to non-increasing).
  static CycleType parse(std::string_view text) {
    std::vector<int> parts;
    std::string token;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, token, ',')) {
      const auto first = token.find_first_not_of(" \t");
      if (first == std::string::npos) throw InputError("empty part in cycle type '" + std::string(text) + "'");
      const auto last = token.find_last_not_of(" \t");
      token = token.substr(first, last - first + 1);
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw InputError("bad part '" + token + "' in cycle type");
      }
      if (used != token.size()) throw InputError("bad part '" + token + "' in cycle type");
      parts.push_back(value);
    }
    return CycleType(std::move(parts));
  }

  static CycleType identity(int n) { return CycleType(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }

  /// lambda_i: number of parts equal to i (0 outside 1..n).
  int multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
  }

  /// (lambda_1, ..., lambda_n); element i-1 counts the parts equal to i.
  std::vector<std::int64_t> multiplicities() const {
    std::vector<std::int64_t> lam(static_cast<std::size_t>(n_), 0);
    for (int p : parts_) ++lam[static_cast<std::size_t>(p - 1)];
    return lam;
  }

  bool is_identity() const { return parts_.front() == 1; }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType& a, const CycleType& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                           std::vector<CycleType>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace detail

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<CycleType> partitions_of(int n) {
  if (n < 1 || n > kMaxDegree) {
    throw InputError("partitions_of: n must be in [1, " + std::to_string(kMaxDegree) + "], got " +
                     std::to_string(n));
  }
  std::vector<CycleType> out;
  std::vector<int> current;
  detail::partitions_rec(n, n, current, out);
  return out;
}

/// Shared, lazily built partition list for n. Thread-safe.
inline const std::vector<CycleType>& class_list(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<CycleType>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, partitions_of(n)).first;
  return it->second;
}

/// Position of ct in class_list(ct.n()).
inline std::size_t class_index(const CycleType& ct) {
  const auto& list = class_list(ct.n());
  auto it = std::lower_bound(list.begin(), list.end(), ct, std::greater<>());
  if (it == list.end() || *it != ct) throw InputError("unknown cycle type " + ct.to_string());
  return static_cast<std::size_t>(it - list.begin());
}

/// n! / prod_i (i^lambda_i * lambda_i!).
inline BigInt class_size(const CycleType& ct) {
  BigInt denom = 1;
  const auto lam = ct.multiplicities();
  for (std::size_t i = 0; i < lam.size(); ++i) {
    denom *= ipow(BigInt(static_cast<std::int64_t>(i + 1)), lam[i]) * factorial(lam[i]);
  }
  return factorial(ct.n()) / denom;
}

/// gcd of k and all distinct part sizes.
inline std::int64_t gcd_with_k(std::int64_t k, const CycleType& ct) {
  if (k < 1) throw InputError("gcd_with_k: k must be positive");
  std::int64_t g = k;
  for (int p : ct.parts()) g = std::gcd(g, static_cast<std::int64_t>(p));
  return g;
}

/// A permutation of [n]. All indices in the public interface are 1-based.
class Permutation {
 public:
  Permutation() = default;

  /// images[i-1] = sigma(i).
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    if (n < 1) throw InputError("permutation must have positive degree");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : images_) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
        throw InputError("image list is not a bijection of [" + std::to_string(n) + "]");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
  }

  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int a = cycle[i];
        if (a < 1 || a > n) {
          throw InputError("cycle element " + std::to_string(a) + " outside [1, " + std::to_string(n) + "]");
        }
        if (used[static_cast<std::size_t>(a)]) {
          throw InputError("element " + std::to_string(a) + " appears in more than one cycle");
        }
        used[static_cast<std::size_t>(a)] = true;
        images[static_cast<std::size_t>(a - 1)] = cycle[(i + 1) % cycle.size()];
      }
    }
    return Permutation(std::move(images));
  }

  /// Accepts cycle notation "(1 2 3)(4 5)" or a one-line image list "2,3,1,5,4".
  /// For cycle notation the degree is `n` if positive, otherwise the largest element.
  static Permutation parse(std::string_view text, int n = 0) {
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string_view::npos) throw InputError("empty permutation");
    if (text[first] == '(') {
      std::vector<std::vector<int>> cycles;
      std::vector<int> current;
      bool open = false;
      int max_elem = 0;
      std::string number;
      auto flush = [&]() {
        if (!number.empty()) {
          current.push_back(std::stoi(number));
          max_elem = std::max(max_elem, current.back());
          number.clear();
        }
      };
      for (char c : text) {
        if (c == '(') {
          if (open) throw InputError("nested '(' in cycle notation");
          open = true;
          current.clear();
        } else if (c == ')') {
          if (!open) throw InputError("unmatched ')' in cycle notation");
          flush();
          open = false;
          if (!current.empty()) cycles.push_back(current);
        } else if (c >= '0' && c <= '9') {
          if (!open) throw InputError("digit outside parentheses in cycle notation");
          number += c;
        } else if (c == ' ' || c == ',' || c == '\t') {
          flush();
        } else {
          throw InputError(std::string("unexpected character '") + c + "' in cycle notation");
        }
      }
      if (open) throw InputError("unterminated cycle in cycle notation");
      const int degree = n > 0 ? n : max_elem;
      if (degree < 1) throw InputError("cannot infer degree of the identity; pass n");
      if (max_elem > degree) throw InputError("cycle element exceeds degree");
      return from_cycles(degree, cycles);
    }
    std::vector<int> images;
    std::string token;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, token, ',')) {
      try {
        std::size_t used = 0;
        images.push_back(std::stoi(token, &used));
      } catch (const std::exception&) {
        throw InputError("bad image '" + token + "' in one-line permutation");
      }
    }
    if (n > 0 && static_cast<int>(images.size()) != n) throw InputError("one-line permutation has wrong length");
    return Permutation(std::move(images));
  }

  int degree() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }

  int operator()(int i) const {
    if (i < 1 || i > degree()) throw InputError("point " + std::to_string(i) + " outside the permutation's domain");
    return images_[static_cast<std::size_t>(i - 1)];
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
  }

  /// (p * q)(i) = p(q(i)).
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw InputError("cannot compose permutations of different degree");
    std::vector<int> images(p.images_.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      images[i] = p.images_[static_cast<std::size_t>(q.images_[i] - 1)];
    }
    return Permutation(std::move(images));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
  }

  /// Cycles (including fixed points), each starting at its minimum, ordered by minimum.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size() + 1, false);
    for (int start = 1; start <= degree(); ++start) {
      if (seen[static_cast<std::size_t>(start)]) continue;
      std::vector<int> cycle;
      for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
        seen[static_cast<std::size_t>(x)] = true;
        cycle.push_back(x);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  CycleType cycle_type() const {
    std::vector<int> parts;
    for (const auto& c : cycles()) parts.push_back(static_cast<int>(c.size()));
    return CycleType(std::move(parts));
  }

  /// Cycle notation without fixed points; "()" for the identity.
  std::string to_string() const {
    std::string out;
    for (const auto& c : cycles()) {
      if (c.size() < 2) continue;
      out += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(c[i]);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

/// The permutation (1 .. s_1)(s_1+1 .. s_1+s_2)... with cycle blocks in part order.
inline Permutation canonical_representative(const CycleType& ct) {
  std::vector<int> images(static_cast<std::size_t>(ct.n()));
  int start = 1;
  for (int len : ct.parts()) {
    for (int j = 0; j < len; ++j) {
      images[static_cast<std::size_t>(start + j - 1)] = start + (j + 1) % len;
    }
    start += len;
  }
  return Permutation(std::move(images));
}

/// {p(i) : i in subset}, returned sorted.
inline std::vector<int> apply_to_subset(const Permutation& p, std::span<const int> subset) {
  std::vector<int> out;
  out.reserve(subset.size());
  for (int i : subset) out.push_back(p(i));
  std::sort(out.begin(), out.end());
  return out;
}

/// a = (1 2 ... n) and the reflection b = (1 n)(2 n-1)...
inline std::pair<Permutation, Permutation> dihedral_generators(int n) {
  if (n < 3) throw InputError("dihedral_generators: n must be at least 3");
  std::vector<int> rotation(static_cast<std::size_t>(n));
  std::vector<int> reflection(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    rotation[static_cast<std::size_t>(i - 1)] = i % n + 1;
    reflection[static_cast<std::size_t>(i - 1)] = n + 1 - i;
  }
  return {Permutation(std::move(rotation)), Permutation(std::move(reflection))};
}

/// All elements of the group generated by `gens` (breadth-first closure), sorted.
inline std::vector<Permutation> group_closure(std::span<const Permutation> gens, int n) {
  std::set<Permutation> seen{Permutation::identity(n)};
  std::queue<Permutation> frontier;
  frontier.push(Permutation::identity(n));
  while (!frontier.empty()) {
    const Permutation current = frontier.front();
    frontier.pop();
    for (const auto& g : gens) {
      Permutation next = g * current;
      if (seen.insert(next).second) frontier.push(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace hyperehrhart

#endif  // HYPEREHRHART_SYMGROUP_HPP
