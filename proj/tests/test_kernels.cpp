// Copyright 2026 The symdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "symdec/kernels.hpp"
#include "symdec/philox.hpp"

using namespace symdec;
using namespace symdec::kernels;

namespace {

std::vector<double> random_vector(std::size_t n, PhiloxStream& rng) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.next_normal(0.0, 1.0);
  return v;
}

}  // namespace

TEST_CASE("backend inventory always contains the scalar reference") {
  const std::vector<Backend> backends = available_backends();
  REQUIRE_FALSE(backends.empty());
  bool has_scalar = false;
  for (Backend b : backends) {
    if (b == Backend::Scalar) has_scalar = true;
    CHECK(backend_name(b) != nullptr);
  }
  CHECK(has_scalar);

  // The active backend is one of the available ones.
  bool active_listed = false;
  for (Backend b : backends)
    if (b == active_backend()) active_listed = true;
  CHECK(active_listed);
}

TEST_CASE("scalar reference computes the textbook results") {
  const Ops& K = ops_for(Backend::Scalar);

  const std::vector<double> a = {1.0, 2.0, 3.0};
  const std::vector<double> b = {4.0, -5.0, 6.0};
  CHECK(K.dot(a.data(), b.data(), 3) == doctest::Approx(12.0));
  CHECK(K.dot(a.data(), b.data(), 0) == 0.0);

  std::vector<double> y = {1.0, 1.0, 1.0};
  K.axpy(2.0, a.data(), y.data(), 3);
  CHECK(y == std::vector<double>{3.0, 5.0, 7.0});

  std::vector<double> r = {-1.0, 0.0, 2.5, -0.0};
  K.relu(r.data(), 4);
  CHECK(r[0] == 0.0);
  CHECK(r[1] == 0.0);
  CHECK(r[2] == 2.5);
  CHECK(r[3] == 0.0);
}

TEST_CASE("scalar adam step matches the update rule") {
  const Ops& K = ops_for(Backend::Scalar);
  const double lr = 1e-3, b1 = 0.9, b2 = 0.999, eps = 1e-8;
  double p = 0.0, m = 0.0, v = 0.0;
  const double g = 0.5;
  // First step: bias-corrected m-hat = g, v-hat = g^2.
  const double m_corr = 1.0 / (1.0 - b1);
  const double v_corr = 1.0 / (1.0 - b2);
  K.adam_step(&p, &m, &v, &g, 1, lr, b1, b2, eps, m_corr, v_corr);
  CHECK(m == doctest::Approx((1 - b1) * g).epsilon(1e-12));
  CHECK(v == doctest::Approx((1 - b2) * g * g).epsilon(1e-12));
  const double expected = -lr * g / (std::sqrt(g * g) + eps);
  CHECK(p == doctest::Approx(expected).epsilon(1e-9));
  // Close to a pure sign step for |g| >> eps.
  CHECK(p == doctest::Approx(-lr).epsilon(1e-6));
}

TEST_CASE("vectorized backends agree with the scalar reference") {
  const Ops& S = ops_for(Backend::Scalar);
  PhiloxStream rng(0x5e1f, 0);

  for (Backend b : available_backends()) {
    if (b == Backend::Scalar) continue;
    const Ops& K = ops_for(b);
    INFO("backend ", backend_name(b));

    for (std::size_t n : {std::size_t{1}, std::size_t{3}, std::size_t{8},
                          std::size_t{17}, std::size_t{64}, std::size_t{1000},
                          std::size_t{1003}}) {
      const std::vector<double> a = random_vector(n, rng);
      const std::vector<double> x = random_vector(n, rng);

      // dot: same value up to reassociation rounding.
      const double want = S.dot(a.data(), x.data(), n);
      const double got = K.dot(a.data(), x.data(), n);
      const double scale =
          std::max({1.0, std::abs(want), std::abs(got)});
      CHECK(std::abs(want - got) / scale < 1e-12 * static_cast<double>(n + 1));

      // axpy: elementwise, at most one rounding difference (fma).
      std::vector<double> y1 = random_vector(n, rng);
      std::vector<double> y2 = y1;
      S.axpy(1.7, a.data(), y1.data(), n);
      K.axpy(1.7, a.data(), y2.data(), n);
      for (std::size_t i = 0; i < n; ++i)
        CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-14));

      // relu: exact.
      std::vector<double> r1 = random_vector(n, rng);
      std::vector<double> r2 = r1;
      S.relu(r1.data(), n);
      K.relu(r2.data(), n);
      CHECK(r1 == r2);

      // adam: elementwise with rounding tolerance.
      std::vector<double> p1 = random_vector(n, rng), p2 = p1;
      std::vector<double> m1 = random_vector(n, rng), m2 = m1;
      std::vector<double> v1(n, 0.01), v2(n, 0.01);
      const std::vector<double> grad = random_vector(n, rng);
      S.adam_step(p1.data(), m1.data(), v1.data(), grad.data(), n, 1e-3, 0.9,
                  0.999, 1e-8, 1.25, 1.5);
      K.adam_step(p2.data(), m2.data(), v2.data(), grad.data(), n, 1e-3, 0.9,
                  0.999, 1e-8, 1.25, 1.5);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(p1[i] == doctest::Approx(p2[i]).epsilon(1e-12));
        CHECK(m1[i] == doctest::Approx(m2[i]).epsilon(1e-12));
        CHECK(v1[i] == doctest::Approx(v2[i]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("set_backend switches and rejects unavailable targets") {
  const Backend before = active_backend();
  set_backend(Backend::Scalar);
  CHECK(active_backend() == Backend::Scalar);
  const double a = 2.0, b = 3.0;
  CHECK(ops().dot(&a, &b, 1) == 6.0);

  bool neon_available = false;
  for (Backend bk : available_backends())
    if (bk == Backend::Neon) neon_available = true;
  if (!neon_available)
    CHECK_THROWS_AS(set_backend(Backend::Neon), std::runtime_error);

  set_backend(before);
  CHECK(active_backend() == before);
}
