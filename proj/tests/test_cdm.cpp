/*
 * Copyright 2026 the rdftfb authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rdftfb/cdm.hpp"
#include "rdftfb/errors.hpp"
#include "test_support.hpp"

using namespace rdftfb;

namespace {

PrototypeFilter narrow_synthetic(std::size_t length) {
  // Indexing fixture; the tiny nominal bandwidth keeps every factor the
  // tests use inside the aliasing bound.
  PrototypeFilter proto;
  for (std::size_t i = 0; i < length; ++i) {
    proto.coeffs.push_back(static_cast<double>(i + 1));
  }
  proto.symmetric = PrototypeFilter::is_symmetric(proto.coeffs);
  proto.nominal_bandwidth = 0.01;
  return proto;
}

}  // namespace

TEST_CASE("every second coefficient is retained and grouped") {
  const auto proto = narrow_synthetic(5);  // {1,2,3,4,5}
  const auto result = decimate_coefficients(proto, 2);
  CHECK(result.coeffs == std::vector<double>{1.0, 3.0, 5.0});
  CHECK(result.source_length == 5);
  CHECK(result.factor == 2);
}

TEST_CASE("factor 1 is the identity") {
  const auto proto = narrow_synthetic(17);
  const auto result = decimate_coefficients(proto, 1);
  CHECK(result.coeffs == proto.coeffs);
}

TEST_CASE("60 taps by 4 keeps indices 0,4,...,56") {
  const auto proto = narrow_synthetic(60);
  const auto result = decimate_coefficients(proto, 4);
  REQUIRE(result.coeffs.size() == 15);
  for (std::size_t i = 0; i < result.coeffs.size(); ++i) {
    CHECK(result.coeffs[i] == proto.coeffs[4 * i]);
  }
}

TEST_CASE("length law: ceil(L/M), exhaustively for L<=64, M<=8") {
  for (std::size_t length = 1; length <= 64; ++length) {
    std::vector<double> coeffs(length, 1.0);
    for (int factor = 1; factor <= 8; ++factor) {
      const auto out = decimate_vector(coeffs, factor);
      const std::size_t expect =
          (length + static_cast<std::size_t>(factor) - 1) /
          static_cast<std::size_t>(factor);
      CHECK(out.size() == expect);
    }
  }
}

TEST_CASE("composition: decimate by a then b equals decimate by a*b") {
  const auto proto = narrow_synthetic(64);
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      if (a * b > 64) continue;
      const auto once = decimate_vector(proto.coeffs, a * b);
      const auto twice = decimate_vector(decimate_vector(proto.coeffs, a), b);
      CHECK(once == twice);
    }
  }
}

TEST_CASE("aliasing bound is strict") {
  const auto pass5 = check_aliasing(0.125, 5);
  CHECK(pass5.pass);
  CHECK(pass5.margin == doctest::Approx(0.375));

  const auto pass7 = check_aliasing(0.125, 7);
  CHECK(pass7.pass);
  CHECK(pass7.margin == doctest::Approx(0.125));

  const auto fail8 = check_aliasing(0.125, 8);
  CHECK(!fail8.pass);       // equality violates the strict bound
  CHECK(fail8.margin == doctest::Approx(0.0));
}

TEST_CASE("aliasing preconditions") {
  CHECK_THROWS_AS(check_aliasing(0.0, 2), Error);
  CHECK_THROWS_AS(check_aliasing(1.0, 1), Error);
  CHECK_THROWS_AS(check_aliasing(0.25, 0), Error);
}

TEST_CASE("decimation guards: bad factor and aliasing carry distinct codes") {
  const auto& proto = testutil::reference_prototype();
  try {
    decimate_coefficients(proto, 0);
    FAIL("expected invalid factor");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid);
  }
  try {
    decimate_coefficients(proto, 8);  // 8 * 0.1249 crosses the bound
    FAIL("expected aliasing error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::aliasing);
  }
}

TEST_CASE("factor 1 works even when the bandwidth is unmeasurable") {
  PrototypeFilter proto;
  proto.coeffs = {1.0};
  proto.symmetric = true;
  CHECK_NOTHROW(decimate_coefficients(proto, 1));
  CHECK_THROWS_AS(decimate_coefficients(proto, 2), Error);
}

TEST_CASE("decimated response: factor 1 identical to the prototype") {
  const auto& proto = testutil::reference_prototype();
  const auto direct = frequency_response(proto.coeffs, 512);
  const auto via_cdm = decimated_response(proto, 1, 512);
  for (std::size_t i = 0; i < direct.size(); ++i) {
    CHECK(direct.values[i] == via_cdm.values[i]);
  }
}

TEST_CASE("bandwidth stretches by the factor on the reference prototype") {
  const auto& proto = testutil::reference_prototype();
  const auto base = measure_edges(decimated_response(proto, 1, 4096), -6.0);
  for (int m = 1; m <= 5; ++m) {
    const auto edges = measure_edges(decimated_response(proto, m, 4096), -6.0);
    const double expect = m * base.high;
    CHECK(edges.high >= 0.85 * expect);
    CHECK(edges.high <= 1.15 * expect);
  }
}

TEST_CASE("stopband degrades (within slack) as the factor grows") {
  const auto& proto = testutil::reference_prototype();
  const auto spec = testutil::reference_spec();
  auto attenuation = [&](int m) {
    const auto resp = decimated_response(proto, m, 4096);
    double peak = -1e9, worst = -1e9;
    for (double v : resp.magnitude_db) peak = std::max(peak, v);
    for (std::size_t i = 0; i < resp.size(); ++i) {
      if (resp.grid[i] >= m * spec.stopband_edge) {
        worst = std::max(worst, resp.magnitude_db[i]);
      }
    }
    return peak - worst;
  };
  double previous = attenuation(1);
  for (int m = 2; m <= 5; ++m) {
    const double current = attenuation(m);
    CHECK(current <= previous + 3.0);  // never improves beyond the slack
    previous = current;
  }
}
