#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bnls/bn_core.hpp"

using namespace bnls;

TEST_CASE("rho values") {
  CHECK(rho(34, 1, 17) == -2);
  CHECK(rho(34, 4, 31) == -1);
  CHECK(rho(34, 2, 24) == -2);
  CHECK(rho(1, 1, 4) == 5);
  CHECK(rho(2, 1, 2) == 0);
  // second factor vanishes at d = g + r
  for (Int g : {0, 1, 5, 34})
    for (Int r : {0, 1, 2, 7}) CHECK(rho(g, r, g + r) == g);
}

TEST_CASE("rho integer identity") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Int> dist(0, 200);
  for (int i = 0; i < 2000; ++i) {
    const Int g = dist(rng), r = dist(rng), d = dist(rng);
    CHECK(rho(g, r, d) + (r + 1) * (g - d + r) == g);
  }
}

TEST_CASE("rho input bounds") {
  CHECK_THROWS_AS(rho(-1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(rho(0, 0, kMaxInput + 1), std::invalid_argument);
}

TEST_CASE("vanishing sequence validation") {
  const GrdParams params(2, 1, 3);
  CHECK_NOTHROW(VanishingSeq({0, 3}, params));
  CHECK_THROWS_AS(VanishingSeq({3, 0}, params), std::invalid_argument);
  CHECK_THROWS_AS(VanishingSeq({0, 4}, params), std::invalid_argument);
  CHECK_THROWS_AS(VanishingSeq({0, 1, 2}, params), std::invalid_argument);
  CHECK_THROWS_AS(GrdParams(2, 4, 3), std::invalid_argument);
}

TEST_CASE("ramification conversion round trip") {
  const GrdParams params(5, 2, 6);
  const VanishingSeq seq({0, 2, 5}, params);
  CHECK(seq.ramification() == std::vector<Int>{0, 1, 3});
  CHECK(vanishing_from_ramification(seq.ramification(), params) == seq);

  const std::vector<Int> alpha{0, 1};
  CHECK(vanishing_from_ramification(alpha, GrdParams(1, 1, 4)).values ==
        std::vector<Int>{0, 2});
  const VanishingSeq identity({0, 1, 2}, GrdParams(3, 2, 4));
  CHECK(identity.ramification() == std::vector<Int>{0, 0, 0});

  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Int r = std::uniform_int_distribution<Int>(0, 4)(rng);
    const Int d = std::uniform_int_distribution<Int>(r, r + 10)(rng);
    // random strictly increasing sequence
    std::vector<Int> pool(static_cast<std::size_t>(d) + 1);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(static_cast<std::size_t>(r) + 1);
    std::sort(pool.begin(), pool.end());
    const GrdParams params2(10, r, d);
    const VanishingSeq seq2(pool, params2);
    CHECK(vanishing_from_ramification(seq2.ramification(), params2) == seq2);
  }
}

TEST_CASE("adjusted rho") {
  const GrdParams e(1, 1, 4);
  CHECK(adjusted_rho(e, {VanishingSeq({0, 2}, e), VanishingSeq({1, 3}, e)}) == 1);
  CHECK(adjusted_rho(GrdParams(7, 1, 4), {}) == rho(7, 1, 4));
  const GrdParams two(2, 1, 2);
  CHECK(adjusted_rho(two, {VanishingSeq({0, 1}, two)}) == 0);
  // context mismatch
  CHECK_THROWS_AS(adjusted_rho(e, {VanishingSeq({0, 1}, two)}),
                  std::invalid_argument);
}

TEST_CASE("eh criterion") {
  CHECK(eh_exists(2, 1, 2, std::vector<Int>{0, 0}));
  CHECK_FALSE(eh_exists(2, 1, 2, std::vector<Int>{0, 1}));
  CHECK(eh_exists(16, 2, 24, std::vector<Int>{0, 0, 0}));

  CHECK(eh_dimension(2, 1, 2, std::vector<Int>{0, 0}) == 0);
  CHECK(eh_dimension(16, 2, 24, std::vector<Int>{0, 0, 0}) == rho(16, 2, 24));
  CHECK(eh_dimension(16, 2, 24, std::vector<Int>{0, 0, 0}) == 34);
  CHECK(eh_dimension(2, 1, 2, std::vector<Int>{0, 1}) == -1);

  CHECK_THROWS_AS(eh_exists(2, 1, 2, std::vector<Int>{1, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eh_exists(2, 1, 2, std::vector<Int>{0, 2}),
                  std::invalid_argument);
}

TEST_CASE("eh existence implies nonnegative dimension") {
  // The plus-clipped sum dominates the raw sum, so existence forces
  // eh_dimension >= 0.
  for (Int g = 0; g <= 8; ++g)
    for (Int r = 0; r <= 2; ++r)
      for (Int d = r; d <= 8; ++d) {
        std::vector<Int> alpha(static_cast<std::size_t>(r) + 1, 0);
        // enumerate nondecreasing ramification sequences bounded by d - r
        while (true) {
          if (eh_exists(g, r, d, alpha))
            CHECK(eh_dimension(g, r, d, alpha) >= 0);
          std::size_t i = alpha.size();
          while (i-- > 0) {
            if (alpha[i] < d - r) {
              ++alpha[i];
              for (std::size_t j = i + 1; j < alpha.size(); ++j)
                alpha[j] = alpha[i];
              break;
            }
            if (i == 0) goto next_params;
          }
        }
      next_params:;
      }
}

TEST_CASE("eh antitone in alpha") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const Int g = std::uniform_int_distribution<Int>(0, 10)(rng);
    const Int r = std::uniform_int_distribution<Int>(0, 3)(rng);
    const Int d = std::uniform_int_distribution<Int>(r, 12)(rng);
    std::vector<Int> hi(static_cast<std::size_t>(r) + 1), lo(hi.size());
    Int cur = 0;
    for (std::size_t j = 0; j < hi.size(); ++j) {
      cur += std::uniform_int_distribution<Int>(0, 2)(rng);
      hi[j] = std::min(cur, d - r);
    }
    for (std::size_t j = 0; j < lo.size(); ++j)
      lo[j] = std::uniform_int_distribution<Int>(0, hi[j])(rng);
    for (std::size_t j = 1; j < lo.size(); ++j)
      lo[j] = std::max(lo[j], lo[j - 1]);
    if (eh_exists(g, r, d, hi)) CHECK(eh_exists(g, r, d, lo));
  }
}
