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

#ifndef SYMDEC_KERNELS_HPP
#define SYMDEC_KERNELS_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace symdec::kernels {

// Dense double-precision primitives behind the network math. A scalar
// reference implementation always exists; vectorized variants are selected
// at startup from CPU capabilities and can be overridden with the
// SYMDEC_KERNELS environment variable (scalar | avx2 | avx512 | neon) or
// set_backend(). All variants compute the same quantities; accumulation
// order differs, so results agree to rounding, not bit-for-bit.
enum class Backend { Scalar, Avx2, Avx512, Neon };

struct Ops {
  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // x[i] = max(x[i], 0)
  void (*relu)(double* x, std::size_t n);
  // One Adam step over a parameter block:
  //   m[i] = b1*m[i] + (1-b1)*g[i]
  //   v[i] = b2*v[i] + (1-b2)*g[i]^2
  //   p[i] -= lr * (m[i]*m_corr) / (sqrt(v[i]*v_corr) + eps)
  // with m_corr = 1/(1-b1^t), v_corr = 1/(1-b2^t) precomputed by the caller.
  void (*adam_step)(double* p, double* m, double* v, const double* g,
                    std::size_t n, double lr, double b1, double b2, double eps,
                    double m_corr, double v_corr);
};

const Ops& ops();
Backend active_backend();
const char* backend_name(Backend b);
std::vector<Backend> available_backends();
void set_backend(Backend b);  // throws std::runtime_error if unsupported

const Ops& ops_for(Backend b);  // direct access, for equivalence tests

}  // namespace symdec::kernels

#endif
