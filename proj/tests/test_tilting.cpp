#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "verkit/digits.hpp"
#include "verkit/error.hpp"
#include "verkit/tilting.hpp"

using namespace verkit;

namespace {

TiltingSum ts(std::map<long, long> m) {
  TiltingSum s;
  for (auto [k, v] : m) s.add(k, v);
  return s;
}

}  // namespace

TEST(Tilting, BaseCasesAndRecursion) {
  SymChar::Coeffs t3{{-3, 1}, {-1, 2}, {1, 2}, {3, 1}};
  EXPECT_EQ(tilting_char(3, 3), SymChar(t3));
  EXPECT_EQ(tilting_char(3, 5), weyl_char(5));
  EXPECT_EQ(weyl_expand(tilting_char(5, 10)), (std::map<long, Integer>{{8, 1}, {10, 1}}));
  for (long p : {2L, 3L, 5L, 7L}) {
    for (long m = 0; m <= p - 1; ++m) EXPECT_EQ(tilting_char(p, m), weyl_char(m));
    for (long m = p; m <= 2 * p - 2; ++m) EXPECT_EQ(tilting_char(p, m), weyl_char(m) + weyl_char(2 * p - 2 - m));
    // overlap of the base case with the product rule at b = 0
    EXPECT_EQ(tilting_char(p, 2 * p - 2), mul(tilting_char(p, 2 * p - 2), frobenius_twist(tilting_char(p, 0), p)));
  }
}

TEST(Tilting, WeylSupportIsDescendants) {
  for (auto [p, n] : std::vector<std::pair<long, int>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    for (long m = ipow(p, n - 1) - 1; m <= ipow(p, n) - 2; ++m) {
      auto d = weyl_expand(tilting_char(p, m));
      std::set<long> support;
      for (const auto& [j, c] : d) {
        EXPECT_EQ(c, 1);
        support.insert(j + 1);
      }
      EXPECT_EQ(support, descendants(m + 1, p, n)) << "p=" << p << " m=" << m;
    }
  }
}

TEST(Tilting, ConcurrentMemo) {
  std::vector<std::thread> th;
  std::vector<SymChar> got(8);
  for (int t = 0; t < 8; ++t) th.emplace_back([&, t] { got[t] = tilting_char(11, 300 + t % 2); });
  for (auto& x : th) x.join();
  for (int t = 2; t < 8; ++t) EXPECT_EQ(got[t], got[t % 2]);
}

TEST(Tilting, DecomposeExamples) {
  EXPECT_EQ(decompose_tilting(3, mul(tilting_char(3, 1), tilting_char(3, 1))), ts({{0, 1}, {2, 1}}));
  for (long p : {2L, 3L, 5L, 7L})
    EXPECT_EQ(decompose_tilting(p, mul(tilting_char(p, 1), tilting_char(p, p - 1))), ts({{p, 1}}));
  EXPECT_EQ(decompose_tilting(5, mul(tilting_char(5, 2), tilting_char(5, 2))), ts({{0, 1}, {2, 1}, {4, 1}}));
  EXPECT_THROW(decompose_tilting(3, Integer(-1) * weyl_char(3)), Error);
  try {
    decompose_tilting(3, weyl_char(3));  // W3 alone is not tilting at p=3
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NegativeLeadingCoefficient);
  }
}

TEST(Tilting, DecomposeRoundTrip) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const long p = std::vector<long>{2, 3, 5}[rng() % 3];
    TiltingSum s;
    for (int t = 0; t < 4; ++t) s.add(static_cast<long>(rng() % 30), static_cast<long>(rng() % 4));
    EXPECT_EQ(decompose_tilting(p, character_of(p, s)), s);
  }
}

TEST(Tilting, TensorDecompose) {
  EXPECT_EQ(tensor_decompose(3, 1, 1), ts({{0, 1}, {2, 1}}));
  EXPECT_EQ(tensor_decompose(3, 1, 2), ts({{3, 1}}));
  for (long i = 0; i <= 2; ++i) EXPECT_EQ(tensor_decompose(3, i, 10 - i).at(10), 1);
}

TEST(Tilting, TopWeightSummand) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 200; ++k) {
    const long p = std::vector<long>{2, 3, 5, 7}[rng() % 4];
    const long i = static_cast<long>(rng() % 40), j = static_cast<long>(rng() % 40);
    auto s = tensor_decompose(p, i, j);
    EXPECT_EQ(s.at(i + j), 1);
    EXPECT_EQ(character_of(p, s), mul(tilting_char(p, i), tilting_char(p, j)));
    EXPECT_EQ(s, tensor_decompose(p, j, i));
  }
}

TEST(Tilting, Truncate) {
  EXPECT_EQ(truncate(3, 1, ts({{2, 1}, {0, 1}})), ts({{0, 1}}));
  EXPECT_EQ(truncate(3, 2, ts({{4, 1}, {3, 2}})), ts({{4, 1}, {3, 2}}));
  EXPECT_EQ(truncate(2, 2, ts({{3, 5}, {1, 1}})), ts({{1, 1}}));
}

TEST(Tilting, HomDim) {
  EXPECT_EQ(hom_dim(3, 0, 0), 1);
  EXPECT_EQ(hom_dim(3, 4, 6), 1);
  EXPECT_EQ(hom_dim(3, 16, 16), 4);
  for (long i = 0; i < 26; ++i)
    for (long j = 0; j < 26; ++j) {
      EXPECT_EQ(hom_dim(3, i, j), hom_dim(3, j, i));
      if (i == j) EXPECT_GE(hom_dim(3, i, i), 1);
    }
}

TEST(Tilting, InvariantDims) {
  for (auto [p, n] : std::vector<std::pair<long, int>>{{2, 1}, {2, 3}, {3, 2}, {5, 2}}) EXPECT_EQ(invariant_dims(p, n, 4)[0], 1);
  for (const auto& d : invariant_dims(3, 1, 12)) EXPECT_EQ(d, 1);
  EXPECT_EQ(invariant_dims(3, 2, 2)[2], 2);
}

TEST(Tilting, StepwiseTruncationMatchesFullPower) {
  // oracle: decompose the full tensor power, truncate once at the end
  for (auto [p, n] : std::vector<std::pair<long, int>>{{2, 2}, {2, 3}, {3, 2}, {5, 1}, {5, 2}}) {
    auto d = invariant_dims(p, n, 5);
    SymChar pw = weyl_char(0);
    for (int m = 0; m <= 5; ++m) {
      auto full = truncate(p, n, decompose_tilting(p, pw));
      Integer s = 0;
      for (int l = 0; l < n; ++l) s += full.at(2 * ipow(p, l) - 2);
      EXPECT_EQ(d[m], s) << "p=" << p << " n=" << n << " m=" << m;
      pw = mul(mul(pw, weyl_char(1)), weyl_char(1));
    }
  }
}

TEST(Tilting, SeriesFn) {
  auto a = series_fn(2, 1, 6);
  EXPECT_EQ(a[0], 1);
  for (int m = 1; m <= 6; ++m) EXPECT_EQ(a[m], 0);
  auto b = series_fn(2, 2, 8);
  EXPECT_EQ(b[0], 1);
  for (int m = 1; m <= 8; ++m) EXPECT_EQ(b[m], pow_int(2, m - 1));
  EXPECT_EQ(series_fn(3, 2, 2)[2], 2);
  for (auto [p, n] : std::vector<std::pair<long, int>>{{2, 3}, {3, 1}, {3, 3}, {5, 2}, {7, 2}})
    EXPECT_EQ(series_fn(p, n, 12), invariant_dims(p, n, 12)) << p << "," << n;
}

TEST(Tilting, ChebyshevS) {
  EXPECT_EQ(chebyshev_S(0), std::vector<Integer>{1});
  EXPECT_EQ(chebyshev_S(1), (std::vector<Integer>{0, 1}));
  EXPECT_EQ(chebyshev_S(2), (std::vector<Integer>{-1, 0, 1}));
  EXPECT_EQ(chebyshev_S(3), (std::vector<Integer>{0, -2, 0, 1}));
}
