#ifndef HYPEREHRHART_CLI_HPP
#define HYPEREHRHART_CLI_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperehrhart/arith.hpp"
#include "hyperehrhart/characters.hpp"
#include "hyperehrhart/class_function.hpp"
#include "hyperehrhart/dosp.hpp"
#include "hyperehrhart/hstar.hpp"
#include "hyperehrhart/oracle.hpp"
#include "hyperehrhart/parallel.hpp"
#include "hyperehrhart/symgroup.hpp"
#include "hyperehrhart/triangulation.hpp"

namespace hyperehrhart::cli {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Report };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Report: return "report";
  }
  return "report";
}

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  Status status = Status::Report;
  Json payload = Json::object();
  std::string text;
  std::optional<std::string> csv;
  std::vector<std::string> witnesses;
  double wall_seconds = 0.0;
};

inline int exit_code(const RunReport& r) { return r.status == Status::Fail ? 1 : 0; }

struct Options {
  int k = 0;
  int n = 0;
  std::string cls;
  std::vector<std::string> perms;
  std::optional<int> coeff;
  std::string format = "table";
  std::string file;
  unsigned jobs = default_jobs();
  std::uint64_t seed = 0;
  bool rho = false;
  bool hypersimplicial = false;
  std::optional<std::int64_t> winding;
};

namespace detail {

inline Json to_json(const CycleType& ct) { return Json(ct.parts()); }

inline std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (row.size() > width.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      } else {
        out << "  " << std::right << std::setw(static_cast<int>(width[c])) << row[c];
      }
    }
    out << '\n';
  }
  return out.str();
}

inline void require_kn(const Options& o) {
  if (o.k < 1 || o.n < 1) throw InputError("--k and --n are required");
}

inline std::optional<Permutation> single_perm(const Options& o) {
  if (o.perms.empty()) return std::nullopt;
  if (o.perms.size() > 1) throw InputError("this command takes a single --perm");
  return Permutation::parse(o.perms.front(), o.n);
}

inline std::vector<CycleType> selected_classes(const Options& o) {
  if (!o.cls.empty()) {
    if (!o.perms.empty()) throw InputError("--class and --perm are mutually exclusive");
    CycleType ct = CycleType::parse(o.cls);
    if (ct.n() != o.n) throw InputError("--class " + o.cls + " does not partition n = " + std::to_string(o.n));
    return {ct};
  }
  if (auto p = single_perm(o)) return {p->cycle_type()};
  return class_list(o.n);
}

// Pass/fail bookkeeping for the verify family.
class Checks {
 public:
  explicit Checks(RunReport& r) : report_(r) {}
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) report_.witnesses.push_back(what);
  }
  void finish() {
    report_.status = report_.witnesses.empty() ? Status::Pass : Status::Fail;
    std::string text = report_.command;
    for (const auto& [key, value] : report_.parameters) text += " " + key + "=" + value;
    text += "\nchecks: " + std::to_string(count_) + "\n";
    for (const auto& w : report_.witnesses) text += "FAIL: " + w + "\n";
    text += std::string("status: ") + status_name(report_.status) + "\n";
    report_.text = std::move(text);
    report_.payload = Json{{"command", report_.command},
                           {"parameters", Json::object()},
                           {"status", status_name(report_.status)},
                           {"checks", count_},
                           {"witnesses", report_.witnesses}};
    for (const auto& [key, value] : report_.parameters) report_.payload["parameters"][key] = value;
  }

 private:
  RunReport& report_;
  std::size_t count_ = 0;
};

inline std::string bigints(const std::vector<BigInt>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
  return out + ")";
}

}  // namespace detail

inline RunReport run_hstar(const Options& o) {
  detail::require_kn(o);
  RunReport r{"hstar", {{"k", std::to_string(o.k)}, {"n", std::to_string(o.n)}}};
  const auto classes = detail::selected_classes(o);
  const std::int64_t degree = hstar_degree(o.k, o.n);
  if (o.coeff && (*o.coeff < 0 || *o.coeff > degree)) {
    throw InputError("--coeff " + std::to_string(*o.coeff) + " outside 0.." + std::to_string(degree));
  }
  const std::int64_t lo = o.coeff ? *o.coeff : 0;
  const std::int64_t hi = o.coeff ? *o.coeff : degree;
  const auto columns = parallel_map(classes.size(), o.jobs, [&](std::size_t i) {
    std::vector<BigInt> col;
    for (std::int64_t m = lo; m <= hi; ++m) col.push_back(hstar_coeff(o.k, o.n, classes[i], m));
    return col;
  });

  r.payload = Json{{"k", o.k}, {"n", o.n}, {"degree", degree}, {"classes", Json::array()}};
  if (o.coeff) r.payload["coeff"] = *o.coeff;
  std::vector<std::vector<std::string>> rows{{"cycle type"}, {"class size"}};
  for (std::int64_t m = lo; m <= hi; ++m) rows.push_back({"H*_" + std::to_string(m)});
  std::vector<int> rho_rows;
  if (o.rho) {
    for (int m = 1; m <= o.n / 2; ++m) rho_rows.push_back(m);
  }
  std::vector<ClassFunction> rhos;
  for (int m : rho_rows) {
    rhos.push_back(rho_m(o.n, m));
    rows.push_back({"rho_" + std::to_string(m)});
  }
  std::string csv = "cycle_type,class_size";
  for (std::int64_t m = lo; m <= hi; ++m) csv += ",H*_" + std::to_string(m);
  for (int m : rho_rows) csv += ",rho_" + std::to_string(m);
  csv += '\n';

  for (std::size_t i = 0; i < classes.size(); ++i) {
    const CycleType& ct = classes[i];
    const BigInt size = class_size(ct);
    Json entry{{"cycle_type", detail::to_json(ct)}, {"class_size", size.str()}, {"coeffs", Json::array()}};
    rows[0].push_back("(" + ct.to_string() + ")");
    rows[1].push_back(size.str());
    std::string line = "\"" + ct.to_string() + "\"," + size.str();
    for (std::size_t m = 0; m < columns[i].size(); ++m) {
      entry["coeffs"].push_back(columns[i][m].str());
      rows[2 + m].push_back(columns[i][m].str());
      line += "," + columns[i][m].str();
    }
    for (std::size_t j = 0; j < rhos.size(); ++j) {
      rows[2 + columns[i].size() + j].push_back(rhos[j](ct).str());
      line += "," + rhos[j](ct).str();
    }
    r.payload["classes"].push_back(std::move(entry));
    csv += line + '\n';
  }
  if (o.rho) {
    r.payload["rho"] = Json::array();
    for (std::size_t j = 0; j < rhos.size(); ++j) {
      Json values = Json::array();
      for (const auto& ct : classes) values.push_back(rhos[j](ct).str());
      r.payload["rho"].push_back(Json{{"m", rho_rows[j]}, {"values", values}});
    }
  }
  r.text = "H*(Delta_{" + std::to_string(o.k) + "," + std::to_string(o.n) + "}; S_" + std::to_string(o.n) +
           "), degree " + std::to_string(degree) + "\n" + detail::render_table(rows);
  r.csv = csv;
  return r;
}

inline RunReport run_hstar_at_one(const Options& o) {
  detail::require_kn(o);
  if (o.k < 2) throw InputError("hstar-at-one needs k >= 2");
  RunReport r{"hstar-at-one", {{"k", std::to_string(o.k)}, {"n", std::to_string(o.n)}}};
  const auto classes = detail::selected_classes(o);
  const auto values = parallel_map(classes.size(), o.jobs, [&](std::size_t i) { return hstar_at_one(o.k, o.n, classes[i]); });
  r.payload = Json{{"k", o.k}, {"n", o.n}, {"classes", Json::array()}};
  std::vector<std::vector<std::string>> rows{{"cycle type", "class size", "H*[1]", "all fixed"}};
  std::string csv = "cycle_type,class_size,hstar_at_one,all_fixed\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const CycleType& ct = classes[i];
    const BigInt all = gcd_with_k(o.k, ct) * ipow(BigInt(o.k), ct.num_parts() - 1);
    const BigInt size = class_size(ct);
    r.payload["classes"].push_back(Json{{"cycle_type", detail::to_json(ct)}, {"class_size", size.str()},
                                        {"value", values[i].str()}, {"all_fixed", all.str()}});
    rows.push_back({"(" + ct.to_string() + ")", size.str(), values[i].str(), all.str()});
    csv += "\"" + ct.to_string() + "\"," + size.str() + "," + values[i].str() + "," + all.str() + "\n";
  }
  r.text = detail::render_table(rows);
  r.csv = csv;
  return r;
}

namespace detail {

inline DospFilter dosp_filter(const Options& o) {
  DospFilter filter;
  filter.hypersimplicial_only = o.hypersimplicial;
  filter.winding = o.winding;
  if (!o.cls.empty()) {
    filter.fixed_by = canonical_representative(selected_classes(o).front());
  } else {
    filter.fixed_by = single_perm(o);
  }
  return filter;
}

inline bool within_budget(int k, int n) { return ipow(BigInt(k), n - 1) <= kDospEnumerationLimit; }

// Streams the matching DOSPs, through the constructive path when a fixing
// permutation is given and brute force would exceed the budget.
template <typename Visitor>
void visit_dosps(const Options& o, const DospFilter& filter, Visitor&& visit) {
  if (within_budget(o.k, o.n) || !filter.fixed_by) {
    for_each_dosp(o.k, o.n, filter, visit);
    return;
  }
  std::vector<int> scratch(static_cast<std::size_t>(o.k));
  for_each_constructive_fixed(o.k, o.n, *filter.fixed_by, [&](std::span<const int> f) {
    if (filter.hypersimplicial_only && !hyperehrhart::detail::hypersimplicial_raw(f, o.k, scratch)) return;
    if (filter.winding && hyperehrhart::detail::winding_raw(f, o.k) != *filter.winding) return;
    visit(f);
  });
}

inline std::vector<std::pair<std::string, std::string>> dosp_parameters(const Options& o, const DospFilter& filter) {
  std::vector<std::pair<std::string, std::string>> p{{"k", std::to_string(o.k)}, {"n", std::to_string(o.n)}};
  if (filter.fixed_by) p.emplace_back("perm", filter.fixed_by->to_string());
  p.emplace_back("hypersimplicial", filter.hypersimplicial_only ? "true" : "false");
  if (filter.winding) p.emplace_back("winding", std::to_string(*filter.winding));
  return p;
}

inline Json parameters_json(const std::vector<std::pair<std::string, std::string>>& params) {
  Json out = Json::object();
  for (const auto& [key, value] : params) out[key] = value;
  return out;
}

}  // namespace detail

inline RunReport run_dosp_count(const Options& o) {
  detail::require_kn(o);
  const DospFilter filter = detail::dosp_filter(o);
  RunReport r{"dosp count", detail::dosp_parameters(o, filter)};
  BigInt count = 0;
  detail::visit_dosps(o, filter, [&](std::span<const int>) { ++count; });
  r.payload = Json{{"parameters", detail::parameters_json(r.parameters)}, {"count", count.str()}};
  r.text = count.str() + "\n";
  return r;
}

inline RunReport run_dosp_list(const Options& o) {
  detail::require_kn(o);
  const DospFilter filter = detail::dosp_filter(o);
  RunReport r{"dosp list", detail::dosp_parameters(o, filter)};
  std::vector<Dosp> found;
  detail::visit_dosps(o, filter, [&](std::span<const int> f) { found.emplace_back(o.k, std::vector<int>(f.begin(), f.end())); });
  std::sort(found.begin(), found.end());
  Json list = Json::array();
  std::vector<std::vector<std::string>> rows{{"blocks", "function", "winding"}};
  std::string csv = "blocks,function,winding\n";
  for (const auto& d : found) {
    const std::string blocks = to_blocks(d).to_string();
    const std::string w = std::to_string(winding_number(d));
    list.push_back(Json{{"blocks", blocks}, {"function", d.values()}, {"winding", winding_number(d)}});
    rows.push_back({blocks, d.to_function_string(), w});
    csv += "\"" + blocks + "\",\"" + d.to_function_string() + "\"," + w + "\n";
  }
  r.payload = Json{{"parameters", detail::parameters_json(r.parameters)}, {"count", found.size()}, {"dosps", list}};
  r.text = detail::render_table(rows);
  r.csv = csv;
  return r;
}

inline RunReport run_verify_oracle(const Options& o) {
  detail::require_kn(o);
  RunReport r{"verify oracle", {{"k", std::to_string(o.k)}, {"n", std::to_string(o.n)}}};
  detail::Checks checks(r);
  const auto golden = numerator_from_series(2, 4, CycleType({2, 1, 1}));
  checks.expect(golden == std::vector<BigInt>{1, 0, 1}, "series numerator for (2,4) at (2,1,1) is " + detail::bigints(golden) + ", expected (1,0,1)");

  const auto& classes = class_list(o.n);
  const auto results = parallel_map(classes.size(), o.jobs, [&](std::size_t i) {
    std::vector<std::string> failures;
    const CycleType& ct = classes[i];
    std::vector<BigInt> formula;
    for (std::int64_t m = 0; m <= hstar_degree(o.k, o.n); ++m) formula.push_back(hstar_coeff(o.k, o.n, ct, m));
    try {
      const auto series = numerator_from_series(o.k, o.n, ct);
      if (series != formula) {
        failures.push_back("class (" + ct.to_string() + "): formula " + detail::bigints(formula) + " vs series " + detail::bigints(series));
      }
    } catch (const InternalInconsistency& e) {
      failures.push_back(e.what());
    }
    return failures;
  });
  for (std::size_t i = 0; i < classes.size(); ++i) {
    checks.expect(results[i].empty(), results[i].empty() ? "" : results[i].front());
  }
  for (std::int64_t d = 0; d <= 4; ++d) {
    const BigInt direct = fixed_point_count(o.k, o.n, CycleType::identity(o.n), d);
    const BigInt closed = katzman_identity_count(o.k, o.n, d);
    checks.expect(direct == closed, "identity lattice count at d=" + std::to_string(d) + ": " + direct.str() + " vs " + closed.str());
  }
  checks.finish();
  return r;
}

inline RunReport run_verify_dosp(const Options& o) {
  detail::require_kn(o);
  if (o.k < 2 || o.k >= o.n) throw InputError("verify dosp needs 2 <= k < n");
  if (!detail::within_budget(o.k, o.n)) throw InputError("verify dosp: k^(n-1) exceeds the enumeration budget");
  RunReport r{"verify dosp", {{"k", std::to_string(o.k)}, {"n", std::to_string(o.n)}}};
  detail::Checks checks(r);

  const Permutation ex41 = Permutation::parse("(1 2 3 4)(5 6)", 6);
  checks.expect(enumerate_dosps(3, 6, {false, ex41, {}}).size() == 3, "DOSPs with k=3 fixed by (1 2 3 4)(5 6): expected 3");
  const Dosp ex4 = from_blocks(DospBlocks::parse("(1 3 5|1)(7 9|2)(2 4 6|1)(8 10|2)"));
  checks.expect(turning_number(Permutation::parse("(1 2 3 4 5 6)(7 8 9 10)", 10), ex4) == 3, "turning number of the k=6, n=10 example: expected 3");

  for (const auto& ct : class_list(o.n)) {
    const Permutation p = canonical_representative(ct);
    const std::string where = "class (" + ct.to_string() + ")";
    const std::int64_t g = gcd_with_k(o.k, ct);
    auto brute = enumerate_dosps(o.k, o.n, {false, p, {}});
    auto built = constructive_fixed(o.k, o.n, p);
    std::sort(brute.begin(), brute.end());
    std::sort(built.begin(), built.end());
    checks.expect(brute == built, where + ": constructive fixed set differs from brute force");
    const BigInt all = g * ipow(BigInt(o.k), ct.num_parts() - 1);
    checks.expect(BigInt(brute.size()) == all, where + ": " + std::to_string(brute.size()) + " fixed DOSPs, expected " + all.str());
    std::int64_t hyp = 0;
    bool turning_ok = true;
    for (const auto& d : brute) {
      if (is_hypersimplicial(d)) ++hyp;
      turning_ok = turning_ok && mod_floor(g * turning_number(p, d), o.k) == 0;
    }
    checks.expect(turning_ok, where + ": some turning number has g*tau != 0");
    const BigInt closed = hstar_at_one(o.k, o.n, ct);
    checks.expect(BigInt(hyp) == closed, where + ": " + std::to_string(hyp) + " hypersimplicial fixed, closed form " + closed.str());
    const BigInt nonhyp = nonhyp_count(o.k, o.n, ct);
    checks.expect(BigInt(brute.size() - static_cast<std::size_t>(hyp)) == nonhyp, where + ": non-hypersimplicial count " + nonhyp.str());
  }

  const auto [a, b] = dihedral_generators(o.n);
  Permutation power = Permutation::identity(o.n);
  for (int e = 0; e < o.n; ++e) {
    const auto hist = fixed_winding_histogram(o.k, o.n, power);
    std::vector<BigInt> expected;
    for (std::int64_t m = 0; m < o.n; ++m) {
      expected.push_back(m <= hstar_degree(o.k, o.n) ? hstar_coeff(o.k, o.n, power.cycle_type(), m) : BigInt(0));
    }
    checks.expect(hist == expected, "winding histogram fixed by " + power.to_string() + ": " + detail::bigints(hist) + " vs " + detail::bigints(expected));
    power = a * power;
  }
  checks.finish();
  return r;
}

inline RunReport run_verify_recurrence(const Options& o) {
  detail::require_kn(o);
  RunReport r{"verify recurrence", {{"k", std::to_string(o.k)}, {"n", std::to_string(o.n)}}};
  detail::Checks checks(r);
  const std::vector<std::int64_t> four_fixed{4, 0, 0, 0};
  checks.expect(recurrence_b(2, four_fixed, 4) == 4, "B(2,(4,0,0,0),4) expected 4");
  for (const auto& ct : class_list(o.n)) {
    checks.expect(check_recurrence(o.k, ct.multiplicities(), ct.num_parts()), "recurrence fails at class (" + ct.to_string() + ")");
  }
  std::vector<std::int64_t> identity(static_cast<std::size_t>(o.n), 0);
  identity[0] = o.n;
  const BigInt b = recurrence_b(o.k, identity, o.n);
  checks.expect(b == eulerian(o.n - 1, o.k - 1), "B at the identity is " + b.str() + ", expected A(n-1,k-1)");
  checks.finish();
  return r;
}

inline RunReport run_verify_k2(const Options& o) {
  if (o.n < 3) throw InputError("verify k2 needs --n >= 3");
  RunReport r{"verify k2", {{"n", std::to_string(o.n)}}};
  detail::Checks checks(r);
  const ClassFunction h1 = hstar_polynomial(2, 4).coeffs[1];
  checks.expect(h1(CycleType({1, 1, 1, 1})) == 2 && h1(CycleType({2, 1, 1})) == 0 && h1(CycleType({2, 2})) == 2 &&
                    h1(CycleType({3, 1})) == -1 && h1(CycleType({4})) == 0,
                "H*_1 for (2,4) differs from (2,0,2,-1,0)");
  for (const auto& [name, ok] : k2_theorem_report(o.n).checks) checks.expect(ok, name + " fails at n=" + std::to_string(o.n));
  if (o.n >= 4) {
    const Rational ip = inner_product(ClassFunction::constant(o.n, 1), hstar_polynomial(2, o.n).coeffs[1]);
    checks.expect(ip == 0, "<chi_0, H*_1> = " + to_string(ip));
  }
  if (o.n % 2 == 0 && o.n <= 14) checks.expect(even_subsets_vs_partitions_check(o.n), "even subsets vs two-part partitions");
  checks.finish();
  return r;
}

inline RunReport run_verify_stirling(const Options& o) {
  const int top = o.n > 0 ? o.n : 10;
  RunReport r{"verify stirling", {{"n", std::to_string(top)}}};
  detail::Checks checks(r);
  checks.expect(stirling2(3, 2) == 3, "{3 2} expected 3");
  checks.expect(check_F_identity(4, Rational(1)), "F_4(1)");
  checks.expect(check_F_identity(6, Rational(3, 2)), "F_6(3/2)");
  for (int n = 0; n <= top; ++n) {
    for (int x = -3; x <= 6; ++x) checks.expect(check_stirling_falling(n, x), "x^n = sum {n j}(x)_j at n=" + std::to_string(n) + " x=" + std::to_string(x));
  }
  const std::vector<Rational> ys{Rational(1), Rational(2), Rational(3), Rational(1, 2), Rational(3, 2), Rational(5, 3)};
  for (int j = 1; j <= std::max(top, 12); ++j) {
    for (const auto& y : ys) checks.expect(check_F_identity(j, y), "F_" + std::to_string(j) + "(" + to_string(y) + ")");
  }
  checks.finish();
  return r;
}

inline RunReport run_verify_nonhyp(const Options& o) {
  detail::require_kn(o);
  if (o.k < 2 || o.k >= o.n) throw InputError("verify nonhyp needs 2 <= k < n");
  RunReport r{"verify nonhyp", {{"k", std::to_string(o.k)}, {"n", std::to_string(o.n)}}};
  detail::Checks checks(r);
  checks.expect(nonhyp_count(2, 4, CycleType({1, 1, 1, 1})) + 4 == 8, "non-hypersimplicial count for (2,4) at the identity plus 4 should be 8");
  const bool brute = detail::within_budget(o.k, o.n);
  for (const auto& ct : class_list(o.n)) {
    const std::string where = "class (" + ct.to_string() + ")";
    const BigInt formula = nonhyp_count(o.k, o.n, ct);
    const BigInt all = gcd_with_k(o.k, ct) * ipow(BigInt(o.k), ct.num_parts() - 1);
    checks.expect(formula == all - hstar_at_one(o.k, o.n, ct), where + ": " + formula.str() + " != g k^(r-1) - H*[1]");
    if (brute) {
      const BigInt counted = count_fixed(o.k, o.n, ct, false) - count_fixed(o.k, o.n, ct, true);
      checks.expect(formula == counted, where + ": formula " + formula.str() + " vs brute force " + counted.str());
    }
  }
  checks.finish();
  return r;
}

inline RunReport run_decompose(const Options& o) {
  detail::require_kn(o);
  RunReport r{"decompose", {{"k", std::to_string(o.k)}, {"n", std::to_string(o.n)}}};
  const HStarPolynomial poly = hstar_polynomial(o.k, o.n, o.jobs);
  if (o.coeff && (*o.coeff < 0 || *o.coeff > poly.degree())) throw InputError("--coeff outside 0..degree");
  r.payload = Json{{"k", o.k}, {"n", o.n}, {"coefficients", Json::array()}};
  std::string text;
  for (std::int64_t m = 0; m <= poly.degree(); ++m) {
    if (o.coeff && m != *o.coeff) continue;
    const Decomposition dec = decompose(poly.coeffs[static_cast<std::size_t>(m)]);
    Json mult = Json::object();
    for (const auto& [lab, value] : dec.multiplicities) {
      if (value != 0) mult[lab.to_string()] = value.str();
    }
    r.payload["coefficients"].push_back(Json{{"m", m}, {"effective", dec.is_effective()}, {"multiplicities", mult}});
    text += "H*_" + std::to_string(m) + (dec.is_effective() ? "" : " (not effective)") + "\n";
    std::istringstream lines(dec.to_string());
    for (std::string line; std::getline(lines, line);) text += "  " + line + "\n";
  }
  r.text = text;
  return r;
}

namespace detail {

inline Triangulation triangulation_input(const Options& o, std::vector<std::string>& warnings) {
  if (o.file.empty()) return builtin_delta24();
  return load_triangulation(o.file, &warnings);
}

inline Json perm_list(const std::vector<Permutation>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace detail

inline RunReport run_triangulation_check(const Options& o) {
  std::vector<std::string> warnings;
  const Triangulation t = detail::triangulation_input(o, warnings);
  std::vector<Permutation> gens;
  for (const auto& text : o.perms) gens.push_back(Permutation::parse(text, t.n));
  if (gens.empty()) {
    const auto [a, b] = dihedral_generators(t.n);
    gens = {a, b};
  }
  RunReport r{"triangulation check", {{"k", std::to_string(t.k)}, {"n", std::to_string(t.n)}}};
  const InvarianceResult res = check_invariance(t, gens);
  r.payload = Json{{"k", t.k}, {"n", t.n}, {"simplices", t.simplices.size()}, {"generators", detail::perm_list(gens)},
                   {"invariant", res.invariant}, {"warnings", warnings}};
  std::string text = "simplices: " + std::to_string(t.simplices.size()) + "\n";
  for (const auto& w : warnings) text += w + "\n";
  text += std::string("invariant: ") + (res.invariant ? "yes" : "no") + "\n";
  if (res.witness) {
    const auto& w = *res.witness;
    r.payload["witness"] = Json{{"generator", w.generator.to_string()}, {"simplex", simplex_to_string(w.simplex)},
                                {"image", simplex_to_string(w.image)}};
    text += "witness: " + w.generator.to_string() + " maps " + simplex_to_string(w.simplex) + " to " +
            simplex_to_string(w.image) + ", which is not a simplex\n";
  }
  r.text = text;
  return r;
}

inline RunReport run_triangulation_group(const Options& o) {
  std::vector<std::string> warnings;
  const Triangulation t = detail::triangulation_input(o, warnings);
  RunReport r{"triangulation group", {{"k", std::to_string(t.k)}, {"n", std::to_string(t.n)}}};
  const SymmetryGroup g = symmetry_subgroup(t);
  r.payload = Json{{"k", t.k}, {"n", t.n}, {"simplices", t.simplices.size()}, {"order", g.order()},
                   {"generators", detail::perm_list(g.generators)}, {"warnings", warnings}};
  std::string text = "simplices: " + std::to_string(t.simplices.size()) + "\n";
  for (const auto& w : warnings) text += w + "\n";
  text += "order: " + std::to_string(g.order()) + "\ngenerators:";
  for (const auto& p : g.generators) text += " " + p.to_string();
  r.text = text + "\n";
  return r;
}

inline void render(const RunReport& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << r.payload.dump(2) << '\n';
  } else if (format == "csv") {
    if (!r.csv) throw InputError(r.command + " has no csv output");
    out << *r.csv;
  } else {
    out << r.text;
  }
}

/// Parses args (without the program name), runs the command and writes its
/// output. Returns 0 on pass or report, 1 on a failed verification, 2 on usage errors.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Equivariant Ehrhart computations for hypersimplices", "hyperehrhart"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool needs_kn) {
    auto* k = sub->add_option("--k", o.k, "hypersimplex parameter k");
    auto* n = sub->add_option("--n", o.n, "ground set size n");
    if (needs_kn) {
      k->required();
      n->required();
    }
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table", "csv"}));
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "accepted for interface stability; unused");
  };

  std::function<RunReport()> action;
  auto bind = [&](CLI::App* sub, RunReport (*fn)(const Options&)) { sub->callback([&action, fn, &o] { action = [fn, &o] { return fn(o); }; }); };

  auto* hstar = app.add_subcommand("hstar", "H* coefficients per conjugacy class");
  common(hstar, true);
  hstar->add_option("--class", o.cls, "restrict to one cycle type, e.g. 3,2,1");
  hstar->add_option("--perm", o.perms, "restrict to the class of a permutation");
  hstar->add_option("--coeff", o.coeff, "only the coefficient of t^m");
  hstar->add_flag("--rho", o.rho, "append the subset permutation characters rho_m");
  bind(hstar, run_hstar);

  auto* at_one = app.add_subcommand("hstar-at-one", "H*[1] per conjugacy class");
  common(at_one, true);
  at_one->add_option("--class", o.cls, "restrict to one cycle type");
  at_one->add_option("--perm", o.perms, "restrict to the class of a permutation");
  bind(at_one, run_hstar_at_one);

  auto* dosp = app.add_subcommand("dosp", "decorated ordered set partitions");
  dosp->require_subcommand(1);
  for (auto [name, fn] : {std::pair{"count", run_dosp_count}, std::pair{"list", run_dosp_list}}) {
    auto* sub = dosp->add_subcommand(name, std::string(name) + " DOSPs matching the filters");
    common(sub, true);
    sub->add_option("--perm", o.perms, "only DOSPs fixed by this permutation");
    sub->add_option("--class", o.cls, "only DOSPs fixed by the canonical representative of this class");
    sub->add_flag("--hypersimplicial", o.hypersimplicial, "only hypersimplicial DOSPs");
    sub->add_option("--winding", o.winding, "only DOSPs with this winding number");
    bind(sub, fn);
  }

  auto* verify = app.add_subcommand("verify", "cross-check closed forms against independent computations");
  verify->require_subcommand(1);
  const std::vector<std::tuple<const char*, RunReport (*)(const Options&), bool, const char*>> verifiers{
      {"oracle", run_verify_oracle, true, "coefficient formula vs fixed-polytope Ehrhart series"},
      {"dosp", run_verify_dosp, true, "fixed DOSP counts, constructive sets and winding histograms"},
      {"recurrence", run_verify_recurrence, true, "recurrence for the equivariant volume"},
      {"k2", run_verify_k2, false, "coefficient theorem for k = 2"},
      {"stirling", run_verify_stirling, false, "Stirling number identities"},
      {"nonhyp", run_verify_nonhyp, true, "inclusion-exclusion count of non-hypersimplicial fixed DOSPs"},
  };
  for (const auto& [name, fn, needs_kn, help] : verifiers) {
    auto* sub = verify->add_subcommand(name, help);
    common(sub, needs_kn);
    bind(sub, fn);
  }

  auto* decomp = app.add_subcommand("decompose", "irreducible multiplicities of each H* coefficient");
  common(decomp, true);
  decomp->add_option("--coeff", o.coeff, "only the coefficient of t^m");
  bind(decomp, run_decompose);

  auto* tri = app.add_subcommand("triangulation", "symmetry of a triangulation (default: the built-in one for k=2, n=4)");
  tri->require_subcommand(1);
  auto* check = tri->add_subcommand("check", "invariance under generators (default: dihedral)");
  check->add_option("--file", o.file, "triangulation file (.json or text)");
  check->add_option("--perm", o.perms, "generator; repeatable");
  check->add_option("--format", o.format)->check(CLI::IsMember({"json", "table"}));
  bind(check, run_triangulation_check);
  auto* group = tri->add_subcommand("group", "full stabilizer in S_n (n <= 8)");
  group->add_option("--file", o.file, "triangulation file (.json or text)");
  group->add_option("--format", o.format)->check(CLI::IsMember({"json", "table"}));
  bind(group, run_triangulation_group);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (!action) {
    err << app.help();
    return 2;
  }
  try {
    const auto start = std::chrono::steady_clock::now();
    RunReport report = action();
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    render(report, o.format, out);
    err << "elapsed: " << std::fixed << std::setprecision(3) << report.wall_seconds << " s\n";
    return exit_code(report);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InternalInconsistency& e) {
    err << "inconsistency: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hyperehrhart::cli

#endif  // HYPEREHRHART_CLI_HPP
