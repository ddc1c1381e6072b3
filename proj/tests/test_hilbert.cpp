#include "cigenus/hilbert.hpp"

#include <doctest.h>

using namespace cigenus;

TEST_CASE("IdealSpec validates and canonicalizes") {
  IdealSpec ideal(2, {5, 2, 2});
  CHECK(ideal.gen_degrees == std::vector<long long>{2, 2, 5});
  CHECK(ideal.r() == 3);
  CHECK_THROWS_AS(IdealSpec(1, {2, 2, 2}), std::invalid_argument);  // r > ambient + 1
  CHECK_THROWS_AS(IdealSpec(2, {0}), std::invalid_argument);
  CHECK_THROWS_AS(IdealSpec(-1, {}), std::invalid_argument);
}

TEST_CASE("signed partial sums enumerate every nonempty subset") {
  auto sums = signed_partial_sums({2, 2, 5});
  CHECK(sums.size() == 7);  // 2^3 - 1
  int sign_total = 0;
  for (const SignedSum& s : sums) {
    sign_total += s.sign;
  }
  CHECK(sign_total == 1);  // corrected convention

  auto single = signed_partial_sums({3});
  REQUIRE(single.size() == 1);
  CHECK(single[0].t == 3);
  CHECK(single[0].sign == 1);

  auto written = signed_partial_sums({3}, SignConvention::as_written);
  CHECK(written[0].sign == -1);
}

TEST_CASE("ideal slice dimensions") {
  CHECK(ideal_slice_dim(IdealSpec(2, {2}), 3) == 3);
  CHECK(ideal_slice_dim(IdealSpec(2, {2, 2}), 4) == 11);
  CHECK(ideal_slice_dim(IdealSpec(3, {2, 3, 4}), 0) == 0);
  CHECK(ideal_slice_dim(IdealSpec(4, {1, 1, 2}), 0) == 0);
}

TEST_CASE("as-written sign convention contradicts the r=1 slice count") {
  IdealSpec ideal(2, {2});
  Int monomials = binom_trunc(5, 2) - quotient_hf_monomial_oracle(ideal, 3);
  CHECK(ideal_slice_dim(ideal, 3, SignConvention::corrected) == monomials);
  CHECK(ideal_slice_dim(ideal, 3, SignConvention::as_written) == -monomials);
}

TEST_CASE("quotient Hilbert function fixtures") {
  IdealSpec two_conics(2, {2, 2});
  std::vector<Int> expected = {1, 3, 4, 4, 4};
  for (long long level = 0; level < 5; ++level) {
    CHECK(quotient_hf(two_conics, level) == expected[static_cast<size_t>(level)]);
  }
  CHECK(quotient_hf(IdealSpec(2, {}), 5) == 21);
  for (long long level = 7; level < 12; ++level) {
    CHECK(quotient_hf(IdealSpec(2, {2, 2, 5}), level) == 0);
  }
  CHECK(quotient_hf(IdealSpec(2, {1, 1, 1}), 0) == 1);  // only the constants survive
}

TEST_CASE("series oracle") {
  CHECK(quotient_hf_series_oracle(IdealSpec(2, {2, 2}), 4) ==
        std::vector<Int>{1, 3, 4, 4, 4});
  CHECK(quotient_hf_series_oracle(IdealSpec(0, {1}), 3) == std::vector<Int>{1, 0, 0, 0});
  CHECK(quotient_hf_series_oracle(IdealSpec(3, {}), 2) == std::vector<Int>{1, 4, 10});
  CHECK_THROWS_AS(quotient_hf_series_oracle(IdealSpec(2, {2}), -1), std::invalid_argument);
}

TEST_CASE("monomial oracle") {
  CHECK(quotient_hf_monomial_oracle(IdealSpec(2, {2, 2}), 4) == 4);
  CHECK(quotient_hf_monomial_oracle(IdealSpec(1, {3}), 2) == 3);
  CHECK(quotient_hf_monomial_oracle(IdealSpec(2, {1}), 0) == 1);
  CHECK(quotient_hf_monomial_oracle(IdealSpec(2, {2}), -1) == 0);
  CHECK_THROWS_AS(quotient_hf_monomial_oracle(IdealSpec(9, {}), 40), budget_error);
}

TEST_CASE("triple agreement on a small randomized-free grid") {
  for (int ambient = 0; ambient <= 3; ++ambient) {
    std::vector<std::vector<long long>> degree_sets = {{}, {1}, {2}, {3}, {1, 2}, {2, 2}, {2, 3}};
    for (const auto& degrees : degree_sets) {
      if (static_cast<long long>(degrees.size()) > ambient + 1) {
        continue;
      }
      IdealSpec ideal(ambient, degrees);
      std::vector<Int> series = quotient_hf_series_oracle(ideal, 10);
      for (long long level = 0; level <= 10; ++level) {
        Int closed = quotient_hf(ideal, level);
        CHECK(closed == series[static_cast<size_t>(level)]);
        CHECK(closed == quotient_hf_monomial_oracle(ideal, level));
        CHECK(ideal_slice_dim(ideal, level) + closed ==
              binom_trunc(Int(level) + ambient, Int(ambient)));
      }
    }
  }
}

TEST_CASE("zero-dimensional quotients stabilize at the degree product") {
  IdealSpec ideal(2, {2, 3});
  std::vector<Int> hf = quotient_hf_series_oracle(ideal, 8);
  for (size_t l = 1; l < hf.size(); ++l) {
    CHECK(hf[l] >= hf[l - 1]);
  }
  for (size_t l = 3; l < hf.size(); ++l) {
    CHECK(hf[l] == 6);
  }
}

TEST_CASE("Artinian quotients vanish past the socle and are symmetric") {
  IdealSpec ideal(2, {2, 2, 5});
  const long long socle = 1 + 1 + 4;
  for (long long l = 0; l <= socle; ++l) {
    CHECK(quotient_hf(ideal, l) == quotient_hf(ideal, socle - l));
  }
  CHECK(quotient_hf(ideal, socle) == 1);
  CHECK(quotient_hf(ideal, socle + 1) == 0);
}
