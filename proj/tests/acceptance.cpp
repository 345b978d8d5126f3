// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperehrhart.hpp"
#include "hyperehrhart/cli.hpp"

using namespace hyperehrhart;

namespace {

// Wall-clock budgets in seconds.
constexpr double kBudgetTable = 1.0;
constexpr double kBudgetOracle = 120.0;
constexpr double kBudgetVolume = 300.0;
constexpr double kBudgetEffective = 120.0;
constexpr double kBudgetTriangulation = 1.0;

// Criterion 3/4 range.
constexpr std::int64_t kBruteLimit = 2'000'000;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string note;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget;  // 0 = no runtime bound
  std::function<void(Outcome&)> body;
};

std::vector<std::string> strings(const nlohmann::json& a) {
  std::vector<std::string> out;
  for (const auto& v : a) out.push_back(v.get<std::string>());
  return out;
}

void table_golden(Outcome& o) {
  std::ostringstream out, err;
  const int code = cli::dispatch({"hstar", "--k", "2", "--n", "4", "--format", "json", "--rho"}, out, err);
  o.expect(code == 0, "hstar exited with " + std::to_string(code));
  if (code != 0) return;
  const auto j = nlohmann::json::parse(out.str());
  // Columns (1^4), (2,1,1), (2,2), (3,1), (4).
  const std::vector<std::vector<int>> order{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
  const std::vector<std::vector<std::string>> coeff_rows{
      {"1", "1", "1", "1", "1"}, {"2", "0", "2", "-1", "0"}, {"1", "1", "1", "1", "1"}};
  const std::vector<std::vector<std::string>> rho_rows{{"4", "2", "0", "1", "0"}, {"6", "2", "2", "0", "0"}};
  const auto& classes = j.at("classes");
  const auto& rho = j.at("rho");
  o.expect(classes.size() == 5 && rho.size() == 2, "unexpected class or rho count");
  if (!o.ok) return;
  for (std::size_t c = 0; c < order.size(); ++c) {
    auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& e) { return e.at("cycle_type").template get<std::vector<int>>() == order[c]; });
    o.expect(it != classes.end(), "missing class");
    if (it == classes.end()) return;
    const auto idx = static_cast<std::size_t>(std::distance(classes.begin(), it));
    const auto coeffs = strings(it->at("coeffs"));
    for (std::size_t m = 0; m < 3; ++m) o.expect(coeffs.at(m) == coeff_rows[m][c], "H*_" + std::to_string(m) + " column " + std::to_string(c));
    for (std::size_t m = 0; m < 2; ++m) o.expect(strings(rho[m].at("values")).at(idx) == rho_rows[m][c], "rho_" + std::to_string(m + 1));
  }
}

void oracle_equivalence(Outcome& o) {
  for (int n = 2; n <= 9; ++n) {
    for (int k = 1; k < n; ++k) {
      for (const auto& ct : class_list(n)) {
        const auto window = numerator_window(k, n, ct);
        const auto deg = static_cast<std::size_t>(hstar_degree(k, n));
        const std::string where = std::to_string(k) + "," + std::to_string(n) + " (" + ct.to_string() + ")";
        o.expect(window.size() == deg + 1 + static_cast<std::size_t>(n), "window size at " + where);
        for (std::size_t m = 0; m < window.size(); ++m) {
          const BigInt expected = m <= deg ? hstar_coeff(k, n, ct, static_cast<std::int64_t>(m)) : BigInt(0);
          o.expect(window[m] == expected, "coefficient " + std::to_string(m) + " at " + where);
        }
      }
    }
  }
}

bool in_brute_range(int k, int n) { return ipow(BigInt(k), n - 1) <= kBruteLimit; }

void volume_theorem(Outcome& o) {
  o.expect(in_brute_range(2, 14) && in_brute_range(3, 10), "range too small");
  std::size_t classes = 0;
  for (int k = 2; in_brute_range(k, k + 1); ++k) {
    for (int n = k + 1; in_brute_range(k, n); ++n) {
      for (const auto& ct : class_list(n)) {
        o.expect(count_fixed(k, n, ct, true) == hstar_at_one(k, n, ct),
                 std::to_string(k) + "," + std::to_string(n) + " (" + ct.to_string() + ")");
        ++classes;
      }
    }
  }
  o.note = std::to_string(classes) + " classes";
}

void nonhyp(Outcome& o) {
  for (int k = 2; in_brute_range(k, k + 1); ++k) {
    for (int n = k + 1; in_brute_range(k, n); ++n) {
      for (const auto& ct : class_list(n)) {
        const std::string where = std::to_string(k) + "," + std::to_string(n) + " (" + ct.to_string() + ")";
        const BigInt formula = nonhyp_count(k, n, ct);
        o.expect(formula == count_fixed(k, n, ct, false) - count_fixed(k, n, ct, true), "brute force at " + where);
        o.expect(formula == gcd_with_k(k, ct) * ipow(BigInt(k), ct.num_parts() - 1) - hstar_at_one(k, n, ct), "complement at " + where);
      }
    }
  }
}

void winding_histograms(Outcome& o) {
  for (int k : {2, 3}) {
    for (int n = k + 1; n <= 9; ++n) {
      const auto [a, b] = dihedral_generators(n);
      Permutation power = Permutation::identity(n);
      for (int e = 0; e < n; ++e, power = a * power) {
        const auto hist = fixed_winding_histogram(k, n, power);
        for (int m = 0; m < n; ++m) {
          const BigInt expected = m <= hstar_degree(k, n) ? hstar_coeff(k, n, power.cycle_type(), m) : BigInt(0);
          o.expect(hist[static_cast<std::size_t>(m)] == expected,
                   std::to_string(k) + "," + std::to_string(n) + " " + power.to_string() + " m=" + std::to_string(m));
        }
      }
    }
  }
}

// A(n, j) counted from the recurrence A(n, j) = (j+1) A(n-1, j) + (n-j) A(n-1, j-1).
BigInt eulerian_recurrence(int n, int j) {
  std::vector<BigInt> row{1};  // A(1, 0)
  if (n < 1) return BigInt(n == 0 && j == 0 ? 1 : 0);
  for (int m = 2; m <= n; ++m) {
    std::vector<BigInt> next(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
      if (i < m - 1) next[static_cast<std::size_t>(i)] += (i + 1) * row[static_cast<std::size_t>(i)];
      if (i > 0) next[static_cast<std::size_t>(i)] += (m - i) * row[static_cast<std::size_t>(i - 1)];
    }
    row = std::move(next);
  }
  return j >= 0 && j < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(j)] : BigInt(0);
}

void eulerian_values(Outcome& o) {
  for (int n = 3; n <= 10; ++n) {
    for (int k = 2; k < n; ++k) {
      const BigInt value = hstar_at_one(k, n, CycleType::identity(n));
      const std::string where = std::to_string(k) + "," + std::to_string(n);
      o.expect(value == eulerian_recurrence(n - 1, k - 1), "recurrence at " + where);
      o.expect(value == hypersimplex_volume_alternating(k, n), "alternating sum at " + where);
    }
  }
}

void k2_suite(Outcome& o) {
  for (int n = 3; n <= 12; ++n) o.expect(k2_theorem_check(n), "k2 theorem at n=" + std::to_string(n));
  for (int n = 4; n <= 12; ++n) {
    o.expect(inner_product(ClassFunction::constant(n, 1), hstar_polynomial(2, n).coeffs[1]) == 0, "trivial summand at n=" + std::to_string(n));
  }
  for (int n = 2; n <= 14; n += 2) o.expect(even_subsets_vs_partitions_check(n), "even subsets at n=" + std::to_string(n));
}

void effectiveness(Outcome& o) {
  auto sweep = [&](int k, int top) {
    for (int n = k + 1; n <= top; ++n) {
      const auto poly = hstar_polynomial(k, n);
      for (std::size_t m = 0; m < poly.coeffs.size(); ++m) {
        o.expect(decompose(poly.coeffs[m]).is_effective(), std::to_string(k) + "," + std::to_string(n) + " H*_" + std::to_string(m));
      }
    }
  };
  sweep(2, 10);
  sweep(3, 8);
  const auto dec = decompose(hstar_polynomial(2, 4).coeffs[1]);
  for (const auto& [lab, mult] : dec.multiplicities) {
    o.expect(mult == (lab == CycleType({2, 2}) ? 1 : 0), "(2,4) H*_1 multiplicity of " + lab.to_string());
  }
}

void recurrence_and_identities(Outcome& o) {
  for (int n = 3; n <= 9; ++n) {
    for (int k = 2; k < n; ++k) {
      for (const auto& ct : class_list(n)) {
        o.expect(check_recurrence(k, ct.multiplicities(), ct.num_parts()), "recurrence at k=" + std::to_string(k) + " (" + ct.to_string() + ")");
      }
    }
  }
  const std::vector<Rational> ys{Rational(1), Rational(2), Rational(3), Rational(1, 2), Rational(3, 2), Rational(5, 3)};
  for (int j = 1; j <= 12; ++j) {
    for (const auto& y : ys) o.expect(check_F_identity(j, y), "F_" + std::to_string(j) + "(" + to_string(y) + ")");
  }
  for (int n = 0; n <= 10; ++n) {
    for (int x = -3; x <= 6; ++x) o.expect(check_stirling_falling(n, x), "Stirling n=" + std::to_string(n) + " x=" + std::to_string(x));
  }
}

void turning_goldens(Outcome& o) {
  const Dosp d = from_blocks(DospBlocks::parse("(1 3 5|1)(7 9|2)(2 4 6|1)(8 10|2)"));
  o.expect(turning_number(Permutation::parse("(1 2 3 4 5 6)(7 8 9 10)", 10), d) == 3, "turning number");

  const Permutation sigma = Permutation::parse("(1 2 3 4)(5 6)", 6);
  DospFilter filter;
  filter.fixed_by = sigma;
  std::set<std::string> listed;
  for (const auto& f : enumerate_dosps(3, 6, filter)) listed.insert(to_blocks(f).to_string());
  o.expect(listed == std::set<std::string>{"(1 2 3 4 5 6|3)", "(1 2 3 4|2)(5 6|1)", "(1 2 3 4|1)(5 6|2)"}, "fixed DOSPs of (1 2 3 4)(5 6)");

  for (int n = 1; n <= 9; ++n) {
    for (int k = 1; k <= 7; ++k) {
      if (ipow(BigInt(k), n - 1) > 200000) continue;
      for (const auto& ct : class_list(n)) {
        const auto p = canonical_representative(ct);
        auto built = constructive_fixed(k, n, p);
        auto brute = enumerate_dosps(k, n, {false, p, {}});
        std::sort(built.begin(), built.end());
        std::sort(brute.begin(), brute.end());
        o.expect(built == brute, "constructive vs brute at " + std::to_string(k) + "," + std::to_string(n) + " (" + ct.to_string() + ")");
      }
    }
  }
}

void triangulation(Outcome& o) {
  const auto t = builtin_delta24();
  o.expect(check_invariance(t, {Permutation::parse("(1 2 3 4)"), Permutation::parse("(1 3)", 4)}).invariant, "dihedral invariance");
  const auto res = check_invariance(t, {Permutation::parse("(1 2)", 4)});
  o.expect(!res.invariant && res.witness && simplex_to_string(res.witness->image) == "[12,23,24,14]", "(1 2) witness");
  o.expect(symmetry_subgroup(t).order() == 8, "symmetry group order");
  o.expect(t.simplices.size() == 4 && eulerian(3, 1) == 4, "simplex count");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "hstar table for k=2 n=4 with rho rows", kBudgetTable, table_golden},
      {2, "closed form equals series numerator, guard window zero (n <= 9)", kBudgetOracle, oracle_equivalence},
      {3, "hstar_at_one equals brute-force fixed hypersimplicial DOSPs (k^(n-1) <= 2e6)", kBudgetVolume, volume_theorem},
      {4, "non-hypersimplicial count against brute force and complement", 0, nonhyp},
      {5, "winding histograms match H*_m for powers of the n-cycle", 0, winding_histograms},
      {6, "identity hstar_at_one equals Eulerian numbers (n <= 10)", 0, eulerian_values},
      {7, "k=2 theorem suite", 0, k2_suite},
      {8, "effectiveness and the (2,2) decomposition", kBudgetEffective, effectiveness},
      {9, "recurrence, F identity and Stirling identity", 0, recurrence_and_identities},
      {10, "turning number and fixed DOSP goldens, constructive equals brute force", 0, turning_goldens},
      {11, "triangulation symmetry of the k=2 n=4 example", kBudgetTriangulation, triangulation},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget > 0 && secs > c.budget) o.expect(false, "runtime over budget");
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << timing << "]";
    if (!o.note.empty()) std::cout << " (" << o.note << ")";
    if (!o.ok) std::cout << " -- " << o.detail;
    std::cout << std::endl;
    failures += !o.ok;
  }

  std::vector<std::string> warnings;
  const auto t25 = load_triangulation(std::string(HYPEREHRHART_TEST_DATA) + "/delta25.txt", &warnings);
  const auto [a, b] = dihedral_generators(5);
  std::cout << "INFO k=2 n=5 sorted triangulation dihedral-invariant: " << (check_invariance(t25, {a, b}).invariant ? "yes" : "no")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
