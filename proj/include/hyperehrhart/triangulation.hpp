#ifndef HYPEREHRHART_TRIANGULATION_HPP
#define HYPEREHRHART_TRIANGULATION_HPP

// Combinatorial symmetry checks for triangulations of Delta_{k,n}. A
// triangulation is taken as a list of simplices, each a list of n vertices,
// each vertex a k-subset of [n]. Only set closure under permutations is
// tested; no geometry.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperehrhart/arith.hpp"
#include "hyperehrhart/hstar.hpp"
#include "hyperehrhart/symgroup.hpp"

namespace hyperehrhart {

using Vertex = std::vector<int>;     // sorted k-subset of [n]
using Simplex = std::vector<Vertex>;  // vertices in source order

inline std::string vertex_to_string(const Vertex& v) {
  const bool compact = std::all_of(v.begin(), v.end(), [](int e) { return e < 10; });
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i && !compact) out += '.';
    out += std::to_string(v[i]);
  }
  return out;
}

/// "[12,13,14,24]".
inline std::string simplex_to_string(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += vertex_to_string(s[i]);
  }
  return out + "]";
}

inline Simplex simplex_key(Simplex s) {
  std::sort(s.begin(), s.end());
  return s;
}

struct Triangulation {
  int k = 0;
  int n = 0;
  std::vector<Simplex> simplices;

  /// Throws InputError describing the first violated invariant.
  void validate() const {
    if (k < 1 || k >= n) throw InputError("triangulation: need 1 <= k < n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
    std::set<Simplex> seen;
    for (std::size_t si = 0; si < simplices.size(); ++si) {
      const Simplex& s = simplices[si];
      const std::string where = "simplex " + std::to_string(si + 1);
      if (static_cast<int>(s.size()) != n) {
        throw InputError(where + " has " + std::to_string(s.size()) + " vertices, expected " + std::to_string(n));
      }
      for (const Vertex& v : s) {
        if (static_cast<int>(v.size()) != k) {
          throw InputError(where + ": vertex " + vertex_to_string(v) + " has size " + std::to_string(v.size()) + ", expected " + std::to_string(k));
        }
        if (!std::is_sorted(v.begin(), v.end()) || std::adjacent_find(v.begin(), v.end()) != v.end()) {
          throw InputError(where + ": vertex " + vertex_to_string(v) + " is not a strictly increasing subset");
        }
        if (v.front() < 1 || v.back() > n) throw InputError(where + ": vertex " + vertex_to_string(v) + " leaves [1, " + std::to_string(n) + "]");
      }
      const Simplex key = simplex_key(s);
      if (std::adjacent_find(key.begin(), key.end()) != key.end()) throw InputError(where + " repeats a vertex");
      if (!seen.insert(key).second) throw InputError(where + " duplicates an earlier simplex");
    }
  }

  bool contains(const Simplex& s) const {
    const Simplex key = simplex_key(s);
    return std::any_of(simplices.begin(), simplices.end(), [&](const Simplex& t) { return simplex_key(t) == key; });
  }

  /// Equality as sets of vertex sets.
  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    if (a.k != b.k || a.n != b.n) return false;
    std::set<Simplex> sa, sb;
    for (const auto& s : a.simplices) sa.insert(simplex_key(s));
    for (const auto& s : b.simplices) sb.insert(simplex_key(s));
    return sa == sb;
  }
};

/// The four simplices of the triangulation of Delta_{2,4} with dihedral symmetry.
inline Triangulation builtin_delta24() {
  return {2, 4, {
      {{1, 2}, {1, 3}, {1, 4}, {2, 4}},
      {{2, 3}, {2, 4}, {1, 2}, {1, 3}},
      {{3, 4}, {1, 3}, {2, 3}, {2, 4}},
      {{1, 4}, {2, 4}, {3, 4}, {1, 3}},
  }};
}

/// Vertexwise image, keeping the source vertex order.
inline Simplex apply_to_simplex(const Permutation& p, const Simplex& s) {
  Simplex out;
  out.reserve(s.size());
  for (const Vertex& v : s) out.push_back(apply_to_subset(p, v));
  return out;
}

struct InvarianceWitness {
  Permutation generator;
  Simplex simplex;
  Simplex image;
};

struct InvarianceResult {
  bool invariant = true;
  std::optional<InvarianceWitness> witness;
};

/// True iff g(simplex) lies in T for every generator and simplex; otherwise the
/// first failure, scanning generators then simplices in order.
inline InvarianceResult check_invariance(const Triangulation& t, const std::vector<Permutation>& gens) {
  t.validate();
  std::set<Simplex> keys;
  for (const auto& s : t.simplices) keys.insert(simplex_key(s));
  for (const auto& g : gens) {
    if (g.degree() != t.n) throw InputError("check_invariance: generator " + g.to_string() + " has the wrong degree");
    for (const auto& s : t.simplices) {
      Simplex image = apply_to_simplex(g, s);
      if (!keys.count(simplex_key(image))) return {false, InvarianceWitness{g, s, std::move(image)}};
    }
  }
  return {};
}

struct SymmetryGroup {
  std::vector<Permutation> elements;    // sorted by images
  std::vector<Permutation> generators;  // greedy, in element order
  std::size_t order() const { return elements.size(); }
};

/// {sigma in S_n : sigma(T) = T} by scanning all of S_n. Requires n <= 8.
inline SymmetryGroup symmetry_subgroup(const Triangulation& t) {
  t.validate();
  if (t.n > 8) throw InputError("symmetry_subgroup: n > 8; use check_invariance with explicit generators");
  std::set<Simplex> keys;
  for (const auto& s : t.simplices) keys.insert(simplex_key(s));
  SymmetryGroup group;
  std::vector<int> images(static_cast<std::size_t>(t.n));
  for (int i = 0; i < t.n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  do {
    const Permutation p(images);
    const bool keeps = std::all_of(t.simplices.begin(), t.simplices.end(),
                                   [&](const Simplex& s) { return keys.count(simplex_key(apply_to_simplex(p, s))) > 0; });
    if (keeps) group.elements.push_back(p);
  } while (std::next_permutation(images.begin(), images.end()));

  std::vector<Permutation> generated{Permutation::identity(t.n)};
  for (const auto& p : group.elements) {
    if (std::binary_search(generated.begin(), generated.end(), p)) continue;
    group.generators.push_back(p);
    generated = group_closure(group.generators, t.n);
  }
  if (generated.size() != group.elements.size()) {
    throw InternalInconsistency("symmetry_subgroup: generators do not close up to the stabilizer");
  }
  return group;
}

/// Warning text if the simplex count differs from the normalized volume A(n-1, k-1).
inline std::optional<std::string> volume_warning(const Triangulation& t) {
  const BigInt expected = eulerian(t.n - 1, t.k - 1);
  if (BigInt(t.simplices.size()) == expected) return std::nullopt;
  return "warning: " + std::to_string(t.simplices.size()) + " simplices, but the normalized volume of Delta_{" +
         std::to_string(t.k) + "," + std::to_string(t.n) + "} is " + expected.str();
}

namespace detail {

inline bool has_json_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".json";
}

inline Triangulation parse_triangulation_text(std::istream& in) {
  Triangulation t;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!have_header) {
      if (std::sscanf(line.c_str() + first, "k=%d n=%d", &t.k, &t.n) != 2) {
        throw InputError(where + "expected header 'k=<int> n=<int>'");
      }
      have_header = true;
      continue;
    }
    Simplex s;
    std::size_t pos = first;
    while (pos < line.size()) {
      if (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r') {
        ++pos;
        continue;
      }
      if (line[pos] != '[') throw InputError(where + "expected '[' at column " + std::to_string(pos + 1));
      const auto close = line.find(']', pos);
      if (close == std::string::npos) throw InputError(where + "unterminated vertex at column " + std::to_string(pos + 1));
      std::istringstream body(line.substr(pos + 1, close - pos - 1));
      Vertex v;
      std::string token;
      while (body >> token) {
        if (!std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); })) {
          throw InputError(where + "bad vertex element '" + token + "'");
        }
        v.push_back(std::stoi(token));
      }
      s.push_back(std::move(v));
      pos = close + 1;
    }
    t.simplices.push_back(std::move(s));
  }
  if (!have_header) throw InputError("triangulation file has no 'k=.. n=..' header");
  return t;
}

inline Triangulation parse_triangulation_json(std::istream& in) {
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    Triangulation t;
    t.k = j.at("k").get<int>();
    t.n = j.at("n").get<int>();
    t.simplices = j.at("simplices").get<std::vector<Simplex>>();
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("triangulation JSON: ") + e.what());
  }
}

}  // namespace detail

/// Reads ".json" files as {"k","n","simplices"}, anything else as the text
/// format. Validates invariants; a volume mismatch is appended to *warnings.
inline Triangulation load_triangulation(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open triangulation file " + path.string());
  Triangulation t = detail::has_json_extension(path) ? detail::parse_triangulation_json(in) : detail::parse_triangulation_text(in);
  t.validate();
  if (auto w = volume_warning(t); w && warnings) warnings->push_back(*w);
  return t;
}

inline std::string format_triangulation_text(const Triangulation& t) {
  std::string out = "k=" + std::to_string(t.k) + " n=" + std::to_string(t.n) + "\n";
  for (const auto& s : t.simplices) {
    for (const auto& v : s) {
      out += '[';
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
      out += ']';
    }
    out += '\n';
  }
  return out;
}

inline void save_triangulation(const Triangulation& t, const std::filesystem::path& path) {
  t.validate();
  std::ofstream out(path);
  if (!out) throw InputError("cannot write triangulation file " + path.string());
  if (detail::has_json_extension(path)) {
    out << nlohmann::json{{"k", t.k}, {"n", t.n}, {"simplices", t.simplices}}.dump(2) << '\n';
  } else {
    out << format_triangulation_text(t);
  }
}

}  // namespace hyperehrhart

#endif  // HYPEREHRHART_TRIANGULATION_HPP
