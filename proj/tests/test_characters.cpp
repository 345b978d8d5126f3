#include <gtest/gtest.h>

#include <vector>

#include "hyperehrhart/characters.hpp"
#include "hyperehrhart/dosp.hpp"
#include "hyperehrhart/hstar.hpp"

using namespace hyperehrhart;

namespace {

ClassFunction brute_rho(int n, int m) {
  return ClassFunction::from(n, [m](const CycleType& ct) { return fixed_subsets_brute(canonical_representative(ct), m); });
}

std::vector<BigInt> values_in(const ClassFunction& f, const std::vector<CycleType>& order) {
  std::vector<BigInt> out;
  for (const auto& ct : order) out.push_back(f(ct));
  return out;
}

const std::vector<CycleType> kTableOrder{CycleType({1, 1, 1, 1}), CycleType({2, 1, 1}), CycleType({2, 2}), CycleType({3, 1}),
                                         CycleType({4})};

}  // namespace

TEST(Rho, TableRows) {
  EXPECT_EQ(values_in(rho_m(4, 2), kTableOrder), (std::vector<BigInt>{6, 2, 2, 0, 0}));
  EXPECT_EQ(values_in(rho_m(4, 1), kTableOrder), (std::vector<BigInt>{4, 2, 0, 1, 0}));
  EXPECT_EQ(rho_m(6, 0), ClassFunction::constant(6, 1));
  EXPECT_THROW(rho_m(4, 5), InputError);
  EXPECT_THROW(rho_m(4, -1), InputError);
}

TEST(Rho, MatchesSubsetEnumerationAndComplement) {
  for (int n = 1; n <= 12; ++n) {
    for (int m = 0; m <= n; ++m) {
      EXPECT_EQ(rho_m(n, m), rho_m(n, n - m));
      if (n <= 10) EXPECT_EQ(rho_m(n, m), brute_rho(n, m)) << n << " " << m;
    }
  }
}

TEST(Tau, Examples) {
  EXPECT_EQ(tau_m(4, 2)(CycleType({4})), 1);
  EXPECT_EQ(tau_m(5, 2), rho_m(5, 2));
  const CycleType four({4});
  EXPECT_EQ(tau_m(4, 0)(four) + tau_m(4, 1)(four) + tau_m(4, 2)(four), 2);
  EXPECT_EQ(rho_m(4, 0)(four) + rho_m(4, 2)(four) + rho_m(4, 4)(four), 2);
  EXPECT_THROW(tau_m(16, 8), InputError);
  EXPECT_THROW(tau_m(4, 5), InputError);
}

TEST(Tau, MiddleValueIsOrbitCountOfPairs) {
  // Direct count of fixed unordered pairs {A, complement} with |A| = n/2.
  for (int n : {2, 4, 6, 8}) {
    const auto tau = tau_m(n, n / 2);
    for (const auto& ct : class_list(n)) {
      const auto p = canonical_representative(ct);
      const std::uint32_t full = (1u << n) - 1;
      std::int64_t ends = 0;
      for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (std::popcount(mask) != n / 2) continue;
        std::uint32_t image = 0;
        for (int i = 0; i < n; ++i) {
          if (mask & (1u << i)) image |= 1u << (p(i + 1) - 1);
        }
        ends += image == mask || image == (full ^ mask);
      }
      EXPECT_EQ(tau(ct), ends / 2) << n << " " << ct.to_string();
    }
  }
}

TEST(InnerProduct, Examples) {
  const auto chi0 = ClassFunction::constant(4, 1);
  EXPECT_EQ(inner_product(chi0, chi0), 1);
  EXPECT_EQ(inner_product(chi0, rho_m(4, 2) - rho_m(4, 1)), 0);
  EXPECT_EQ(inner_product(chi0, rho_m(4, 2)), 1);
  EXPECT_THROW(inner_product(chi0, ClassFunction::constant(3, 1)), InputError);
  EXPECT_EQ(inner_product(chi0, ClassFunction::from(4, [](const CycleType& ct) { return BigInt(ct.is_identity() ? 1 : 0); })),
            Rational(1, 24));
}

TEST(Characters, Examples) {
  for (const auto& ct : class_list(5)) EXPECT_EQ(mn_character(CycleType({5}), ct), 1);
  const auto chi22 = ClassFunction::from(4, [](const CycleType& ct) { return mn_character(CycleType({2, 2}), ct); });
  EXPECT_EQ(values_in(chi22, kTableOrder), (std::vector<BigInt>{2, 0, 2, -1, 0}));
  EXPECT_EQ(chi22, brute_rho(4, 2) - brute_rho(4, 1));
  EXPECT_EQ(chi22, hstar_polynomial(2, 4).coeffs[1]);
  for (int n = 2; n <= 9; ++n) {
    std::vector<int> transposition(static_cast<std::size_t>(n - 1), 1);
    transposition[0] = 2;
    EXPECT_EQ(mn_character(CycleType::identity(n), CycleType(transposition)), -1);
  }
  EXPECT_THROW(mn_character(CycleType({2, 2}), CycleType({3})), InputError);
}

TEST(Characters, DimensionsAndOrthogonality) {
  for (int n = 1; n <= 8; ++n) {
    const auto& table = character_table(n);
    const auto& labels = class_list(n);
    BigInt sum_squares = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
      const BigInt dim = table[i](CycleType::identity(n));
      EXPECT_EQ(dim, hook_length_dimension(labels[i]));
      sum_squares += dim * dim;
      for (std::size_t j = 0; j < table.size(); ++j) EXPECT_EQ(inner_product(table[i], table[j]), i == j ? 1 : 0) << n;
    }
    EXPECT_EQ(sum_squares, factorial(n));
  }
}

TEST(Characters, SignCharacter) {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& ct : class_list(n)) {
      const int sign = (n - ct.num_parts()) % 2 == 0 ? 1 : -1;
      EXPECT_EQ(mn_character(CycleType::identity(n), ct), sign);
    }
  }
}

TEST(Decompose, Examples) {
  const auto dec = decompose(hstar_polynomial(2, 4).coeffs[1]);
  for (const auto& [lab, m] : dec.multiplicities) EXPECT_EQ(m, lab == CycleType({2, 2}) ? 1 : 0);
  EXPECT_EQ(dec.to_string(), "2,2: 1\n");
  const auto trivial = decompose(ClassFunction::constant(6, 1));
  EXPECT_EQ(trivial.of(CycleType({6})), 1);
  EXPECT_EQ(trivial.to_string(), "6: 1\n");
  const auto natural = decompose(rho_m(4, 1));
  EXPECT_EQ(natural.of(CycleType({4})), 1);
  EXPECT_EQ(natural.of(CycleType({3, 1})), 1);
  EXPECT_EQ(natural.to_string(), "4: 1\n3,1: 1\n");
  EXPECT_THROW(natural.of(CycleType({5})), InputError);
}

TEST(Decompose, RejectsNonCharacters) {
  auto f = ClassFunction(4);
  f.set(CycleType::identity(4), 1);
  EXPECT_THROW(decompose(f), InputError);
}

TEST(Decompose, HStarCoefficientsAreEffective) {
  for (int n = 3; n <= 10; ++n) {
    for (const auto& c : hstar_polynomial(2, n).coeffs) EXPECT_TRUE(decompose(c).is_effective()) << n;
  }
  for (int n = 4; n <= 8; ++n) {
    for (const auto& c : hstar_polynomial(3, n).coeffs) EXPECT_TRUE(decompose(c).is_effective()) << n;
  }
}

TEST(Decompose, FirstCoefficientForKTwoTabulated) {
  // Recorded, not asserted: whether H*_1 is the single irreducible (n-2,2).
  for (int n = 4; n <= 10; ++n) {
    const auto dec = decompose(hstar_polynomial(2, n).coeffs[1]);
    std::vector<int> shape{n - 2, 2};
    RecordProperty("H1_n" + std::to_string(n), dec.to_string());
    EXPECT_GE(dec.of(CycleType(shape)), 0);
  }
}

TEST(K2Theorem, Holds) {
  for (int n = 3; n <= 12; ++n) {
    const auto report = k2_theorem_report(n);
    for (const auto& [name, ok] : report.checks) EXPECT_TRUE(ok) << name << " n=" << n;
  }
  EXPECT_THROW(k2_theorem_check(2), InputError);
}

TEST(K2Theorem, NoTrivialSummandInFirstCoefficient) {
  for (int n = 4; n <= 12; ++n) {
    EXPECT_EQ(inner_product(ClassFunction::constant(n, 1), hstar_polynomial(2, n).coeffs[1]), 0) << n;
  }
}

TEST(K2Theorem, AtOneIsPermutationCharacterOfPartitions) {
  for (int n = 3; n <= 12; ++n) {
    ClassFunction expected = ClassFunction::constant(n, 1);
    for (int m = 2; m <= n / 2; ++m) expected += tau_m(n, m);
    EXPECT_EQ(hstar_polynomial(2, n).at_one(), expected) << n;
  }
}

TEST(EvenSubsets, Lemma) {
  for (int n = 2; n <= 14; n += 2) EXPECT_TRUE(even_subsets_vs_partitions_check(n)) << n;
  EXPECT_THROW(even_subsets_vs_partitions_check(5), InputError);
  const CycleType cycle({6});
  ClassFunction left(6), right(6);
  for (int m = 0; m <= 3; ++m) {
    left += rho_m(6, 2 * m);
    right += tau_m(6, m);
  }
  EXPECT_EQ(left(cycle), 2);
  EXPECT_EQ(right(cycle), 2);
}

TEST(Burnside, TrivialMultiplicityOfAtOne) {
  for (int n = 3; n <= 7; ++n) {
    for (int k = 2; k < n; ++k) {
      const Rational orbits = inner_product(ClassFunction::constant(n, 1), hstar_polynomial(k, n).at_one());
      EXPECT_EQ(orbits, Rational(burnside_orbit_count(k, n, true))) << k << "," << n;
    }
  }
}
