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

// 512-bit variants; compiled with -mavx512f and dispatched at runtime.

#include <immintrin.h>

#include <cmath>
#include <cstddef>

namespace symdec::kernels::detail {

double dot_avx512(const double* a, const double* b, std::size_t n) {
  __m512d acc0 = _mm512_setzero_pd();
  __m512d acc1 = _mm512_setzero_pd();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    acc0 = _mm512_fmadd_pd(_mm512_loadu_pd(a + i), _mm512_loadu_pd(b + i), acc0);
    acc1 = _mm512_fmadd_pd(_mm512_loadu_pd(a + i + 8), _mm512_loadu_pd(b + i + 8),
                           acc1);
  }
  for (; i + 8 <= n; i += 8)
    acc0 = _mm512_fmadd_pd(_mm512_loadu_pd(a + i), _mm512_loadu_pd(b + i), acc0);
  double total = _mm512_reduce_add_pd(_mm512_add_pd(acc0, acc1));
  for (; i < n; ++i) total += a[i] * b[i];
  return total;
}

void axpy_avx512(double alpha, const double* x, double* y, std::size_t n) {
  __m512d va = _mm512_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m512d vy = _mm512_loadu_pd(y + i);
    vy = _mm512_fmadd_pd(va, _mm512_loadu_pd(x + i), vy);
    _mm512_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void relu_avx512(double* x, std::size_t n) {
  __m512d zero = _mm512_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8)
    _mm512_storeu_pd(x + i, _mm512_max_pd(_mm512_loadu_pd(x + i), zero));
  for (; i < n; ++i)
    if (x[i] < 0.0) x[i] = 0.0;
}

void adam_step_avx512(double* p, double* m, double* v, const double* g,
                      std::size_t n, double lr, double b1, double b2,
                      double eps, double m_corr, double v_corr) {
  __m512d vb1 = _mm512_set1_pd(b1);
  __m512d vb1c = _mm512_set1_pd(1.0 - b1);
  __m512d vb2 = _mm512_set1_pd(b2);
  __m512d vb2c = _mm512_set1_pd(1.0 - b2);
  __m512d vlr = _mm512_set1_pd(lr);
  __m512d veps = _mm512_set1_pd(eps);
  __m512d vmc = _mm512_set1_pd(m_corr);
  __m512d vvc = _mm512_set1_pd(v_corr);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m512d vg = _mm512_loadu_pd(g + i);
    __m512d vm = _mm512_fmadd_pd(vb1c, vg, _mm512_mul_pd(vb1, _mm512_loadu_pd(m + i)));
    __m512d vv = _mm512_fmadd_pd(vb2c, _mm512_mul_pd(vg, vg),
                                 _mm512_mul_pd(vb2, _mm512_loadu_pd(v + i)));
    _mm512_storeu_pd(m + i, vm);
    _mm512_storeu_pd(v + i, vv);
    __m512d denom =
        _mm512_add_pd(_mm512_sqrt_pd(_mm512_mul_pd(vv, vvc)), veps);
    __m512d update =
        _mm512_div_pd(_mm512_mul_pd(vlr, _mm512_mul_pd(vm, vmc)), denom);
    _mm512_storeu_pd(p + i, _mm512_sub_pd(_mm512_loadu_pd(p + i), update));
  }
  for (; i < n; ++i) {
    m[i] = b1 * m[i] + (1.0 - b1) * g[i];
    v[i] = b2 * v[i] + (1.0 - b2) * g[i] * g[i];
    p[i] -= lr * (m[i] * m_corr) / (std::sqrt(v[i] * v_corr) + eps);
  }
}

}  // namespace symdec::kernels::detail
