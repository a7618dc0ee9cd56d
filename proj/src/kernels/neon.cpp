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

// 128-bit variants for aarch64; NEON double support is baseline there, so no
// special compile flags or runtime probing are needed.

#include <arm_neon.h>

#include <cmath>
#include <cstddef>

namespace symdec::kernels::detail {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  for (; i + 2 <= n; i += 2)
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
  double total = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) total += a[i] * b[i];
  return total;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
  float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void relu_neon(double* x, std::size_t n) {
  float64x2_t zero = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(x + i, vmaxq_f64(vld1q_f64(x + i), zero));
  for (; i < n; ++i)
    if (x[i] < 0.0) x[i] = 0.0;
}

void adam_step_neon(double* p, double* m, double* v, const double* g,
                    std::size_t n, double lr, double b1, double b2, double eps,
                    double m_corr, double v_corr) {
  float64x2_t vb1 = vdupq_n_f64(b1);
  float64x2_t vb1c = vdupq_n_f64(1.0 - b1);
  float64x2_t vb2 = vdupq_n_f64(b2);
  float64x2_t vb2c = vdupq_n_f64(1.0 - b2);
  float64x2_t vlr = vdupq_n_f64(lr);
  float64x2_t veps = vdupq_n_f64(eps);
  float64x2_t vmc = vdupq_n_f64(m_corr);
  float64x2_t vvc = vdupq_n_f64(v_corr);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t vg = vld1q_f64(g + i);
    float64x2_t vm = vfmaq_f64(vmulq_f64(vb1, vld1q_f64(m + i)), vb1c, vg);
    float64x2_t vv =
        vfmaq_f64(vmulq_f64(vb2, vld1q_f64(v + i)), vb2c, vmulq_f64(vg, vg));
    vst1q_f64(m + i, vm);
    vst1q_f64(v + i, vv);
    float64x2_t denom = vaddq_f64(vsqrtq_f64(vmulq_f64(vv, vvc)), veps);
    float64x2_t update =
        vdivq_f64(vmulq_f64(vlr, vmulq_f64(vm, vmc)), denom);
    vst1q_f64(p + i, vsubq_f64(vld1q_f64(p + i), update));
  }
  for (; i < n; ++i) {
    m[i] = b1 * m[i] + (1.0 - b1) * g[i];
    v[i] = b2 * v[i] + (1.0 - b2) * g[i] * g[i];
    p[i] -= lr * (m[i] * m_corr) / (std::sqrt(v[i] * v_corr) + eps);
  }
}

}  // namespace symdec::kernels::detail
