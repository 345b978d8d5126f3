// Randomized properties with fixed seeds so failures reproduce.
#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "hyperehrhart/characters.hpp"
#include "hyperehrhart/dosp.hpp"
#include "hyperehrhart/hstar.hpp"
#include "hyperehrhart/oracle.hpp"

using namespace hyperehrhart;

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Permutation random_permutation(Rng& rng, int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

// Uniform over permutations, so classes appear with probability |C|/n!.
CycleType random_cycle_type(Rng& rng, int n) { return random_permutation(rng, n).cycle_type(); }

// Uniform over partitions instead.
CycleType random_partition(Rng& rng, int n) {
  const auto& all = class_list(n);
  return all[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(all.size()) - 1))];
}

Dosp random_dosp(Rng& rng, int k, int n) {
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int& v : values) v = uniform(rng, 0, k - 1);
  return Dosp(k, values);
}

// A random DOSP fixed by p: one of its constructive fixed points.
Dosp random_fixed_dosp(Rng& rng, int k, const Permutation& p) {
  const auto fixed = constructive_fixed(k, p.degree(), p);
  return fixed[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(fixed.size()) - 1))];
}

constexpr int kTrials = 300;

}  // namespace

TEST(Properties, ActionIsHomomorphism) {
  Rng rng(11);
  for (int t = 0; t < kTrials; ++t) {
    const int n = uniform(rng, 2, 12);
    const int k = uniform(rng, 1, 6);
    const auto p = random_permutation(rng, n);
    const auto q = random_permutation(rng, n);
    const auto d = random_dosp(rng, k, n);
    EXPECT_EQ(act(p * q, d), act(p, act(q, d)));
    EXPECT_EQ(act(Permutation::identity(n), d), d);
    EXPECT_EQ(act(p.inverse(), act(p, d)), d);
  }
}

TEST(Properties, ActionPreservesHypersimpliciality) {
  Rng rng(12);
  for (int t = 0; t < kTrials; ++t) {
    const int n = uniform(rng, 2, 12);
    const int k = uniform(rng, 2, 6);
    const auto d = random_dosp(rng, k, n);
    const auto p = random_permutation(rng, n);
    EXPECT_EQ(is_hypersimplicial(act(p, d)), is_hypersimplicial(d));
  }
}

TEST(Properties, WindingRange) {
  Rng rng(13);
  for (int t = 0; t < kTrials; ++t) {
    const int n = uniform(rng, 1, 14);
    const int k = uniform(rng, 1, 7);
    const auto d = random_dosp(rng, k, n);
    const auto w = winding_number(d);
    EXPECT_GE(w, 0);
    EXPECT_LE(w, std::max(0, n - 1));
    if (is_hypersimplicial(d) && n > k) EXPECT_LE(w, hstar_degree(k, n));
  }
}

TEST(Properties, BlockRoundTrip) {
  Rng rng(14);
  for (int t = 0; t < kTrials; ++t) {
    const int n = uniform(rng, 1, 14);
    const int k = uniform(rng, 1, 7);
    const auto d = random_dosp(rng, k, n);
    const auto b = to_blocks(d);
    EXPECT_EQ(from_blocks(b), d);
    EXPECT_EQ(DospBlocks::parse(b.to_string()).to_string(), b.to_string());
    int decorations = 0;
    int elements = 0;
    for (const auto& block : b.blocks) {
      decorations += block.decoration;
      elements += static_cast<int>(block.elements.size());
    }
    EXPECT_EQ(decorations, k);
    EXPECT_EQ(elements, n);
  }
}

TEST(Properties, TurningNumberOfRandomFixedDosp) {
  Rng rng(15);
  for (int t = 0; t < 100; ++t) {
    const int n = uniform(rng, 2, 10);
    const int k = uniform(rng, 2, 8);
    const auto p = random_permutation(rng, n);
    const auto d = random_fixed_dosp(rng, k, p);
    EXPECT_EQ(act(p, d), d);
    const auto tau = turning_number(p, d);
    EXPECT_EQ(mod_floor(gcd_with_k(k, p.cycle_type()) * tau, k), 0);
  }
}

TEST(Properties, FixedCountIsClassFunction) {
  Rng rng(16);
  for (int t = 0; t < 60; ++t) {
    const int n = uniform(rng, 3, 8);
    const int k = uniform(rng, 2, std::min(n - 1, 4));
    const auto p = random_permutation(rng, n);
    const auto q = random_permutation(rng, n);
    const auto conj = q * p * q.inverse();
    DospFilter fp, fc;
    fp.hypersimplicial_only = fc.hypersimplicial_only = true;
    fp.fixed_by = p;
    fc.fixed_by = conj;
    EXPECT_EQ(enumerate_dosps(k, n, fp).size(), enumerate_dosps(k, n, fc).size());
    EXPECT_EQ(BigInt(enumerate_dosps(k, n, fp).size()), count_fixed(k, n, p.cycle_type(), true));
  }
}

TEST(Properties, RandomClassFormulaMatchesOracle) {
  Rng rng(17);
  for (int t = 0; t < 80; ++t) {
    const int n = uniform(rng, 2, 11);
    const int k = uniform(rng, 1, n - 1);
    const auto ct = t % 2 ? random_partition(rng, n) : random_cycle_type(rng, n);
    const auto series = numerator_from_series(k, n, ct);
    for (std::size_t m = 0; m < series.size(); ++m) {
      EXPECT_EQ(series[m], hstar_coeff(k, n, ct, static_cast<std::int64_t>(m))) << k << "," << n << " " << ct.to_string();
    }
    if (k >= 2) EXPECT_EQ(hstar_at_one(k, n, ct), hstar_at_one_unsimplified(k, n, ct));
  }
}

TEST(Properties, RandomCoefficientClassFunctionAtOne) {
  Rng rng(18);
  for (int t = 0; t < 40; ++t) {
    const int n = uniform(rng, 3, 12);
    const int k = uniform(rng, 2, n - 1);
    const auto ct = random_partition(rng, n);
    BigInt sum = 0;
    for (std::int64_t m = 0; m <= hstar_degree(k, n); ++m) sum += hstar_coeff(k, n, ct, m);
    EXPECT_EQ(sum, hstar_at_one(k, n, ct));
    EXPECT_EQ(sum + nonhyp_count(k, n, ct), gcd_with_k(k, ct) * ipow(BigInt(k), ct.num_parts() - 1));
  }
}

TEST(Properties, DecomposeReconstructs) {
  Rng rng(19);
  for (int t = 0; t < 40; ++t) {
    const int n = uniform(rng, 1, 8);
    // Random non-negative combination of irreducibles.
    const auto& table = character_table(n);
    ClassFunction f(n);
    std::vector<BigInt> mult;
    for (const auto& chi : table) {
      mult.push_back(uniform(rng, -2, 3));
      f += mult.back() * chi;
    }
    const auto dec = decompose(f);
    const auto& labels = class_list(n);
    for (std::size_t i = 0; i < labels.size(); ++i) EXPECT_EQ(dec.of(labels[i]), mult[i]);
    EXPECT_EQ(dec.is_effective(), std::all_of(mult.begin(), mult.end(), [](const BigInt& m) { return m >= 0; }));
  }
}

TEST(Properties, RhoIsPermutationCharacter) {
  Rng rng(20);
  for (int t = 0; t < 60; ++t) {
    const int n = uniform(rng, 1, 10);
    const int m = uniform(rng, 0, n);
    const auto p = random_permutation(rng, n);
    EXPECT_EQ(rho_m(n, m)(p.cycle_type()), fixed_subsets_brute(p, m));
  }
}
