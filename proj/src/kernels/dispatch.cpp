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

#include "symdec/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace symdec::kernels {

namespace detail {

double dot_scalar(const double*, const double*, std::size_t);
void axpy_scalar(double, const double*, double*, std::size_t);
void relu_scalar(double*, std::size_t);
void adam_step_scalar(double*, double*, double*, const double*, std::size_t,
                      double, double, double, double, double, double);

#if SYMDEC_BUILD_AVX2
double dot_avx2(const double*, const double*, std::size_t);
void axpy_avx2(double, const double*, double*, std::size_t);
void relu_avx2(double*, std::size_t);
void adam_step_avx2(double*, double*, double*, const double*, std::size_t,
                    double, double, double, double, double, double);
#endif

#if SYMDEC_BUILD_AVX512
double dot_avx512(const double*, const double*, std::size_t);
void axpy_avx512(double, const double*, double*, std::size_t);
void relu_avx512(double*, std::size_t);
void adam_step_avx512(double*, double*, double*, const double*, std::size_t,
                      double, double, double, double, double, double);
#endif

#if SYMDEC_BUILD_NEON
double dot_neon(const double*, const double*, std::size_t);
void axpy_neon(double, const double*, double*, std::size_t);
void relu_neon(double*, std::size_t);
void adam_step_neon(double*, double*, double*, const double*, std::size_t,
                    double, double, double, double, double, double);
#endif

}  // namespace detail

namespace {

const Ops kScalarOps = {detail::dot_scalar, detail::axpy_scalar,
                        detail::relu_scalar, detail::adam_step_scalar};
#if SYMDEC_BUILD_AVX2
const Ops kAvx2Ops = {detail::dot_avx2, detail::axpy_avx2, detail::relu_avx2,
                      detail::adam_step_avx2};
#endif
#if SYMDEC_BUILD_AVX512
const Ops kAvx512Ops = {detail::dot_avx512, detail::axpy_avx512,
                        detail::relu_avx512, detail::adam_step_avx512};
#endif
#if SYMDEC_BUILD_NEON
const Ops kNeonOps = {detail::dot_neon, detail::axpy_neon, detail::relu_neon,
                      detail::adam_step_neon};
#endif

bool cpu_supports(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if SYMDEC_BUILD_AVX2
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::Avx512:
#if SYMDEC_BUILD_AVX512
      return __builtin_cpu_supports("avx512f");
#else
      return false;
#endif
    case Backend::Neon:
#if SYMDEC_BUILD_NEON
      return true;  // baseline on aarch64
#else
      return false;
#endif
  }
  return false;
}

Backend pick_default() {
  if (const char* env = std::getenv("SYMDEC_KERNELS")) {
    if (!std::strcmp(env, "scalar")) return Backend::Scalar;
    if (!std::strcmp(env, "avx2") && cpu_supports(Backend::Avx2))
      return Backend::Avx2;
    if (!std::strcmp(env, "avx512") && cpu_supports(Backend::Avx512))
      return Backend::Avx512;
    if (!std::strcmp(env, "neon") && cpu_supports(Backend::Neon))
      return Backend::Neon;
    // Unrecognized or unsupported request: fall through to autodetect.
  }
  if (cpu_supports(Backend::Avx512)) return Backend::Avx512;
  if (cpu_supports(Backend::Avx2)) return Backend::Avx2;
  if (cpu_supports(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

Backend& current() {
  static Backend backend = pick_default();
  return backend;
}

}  // namespace

const Ops& ops_for(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return kScalarOps;
#if SYMDEC_BUILD_AVX2
    case Backend::Avx2:
      return kAvx2Ops;
#endif
#if SYMDEC_BUILD_AVX512
    case Backend::Avx512:
      return kAvx512Ops;
#endif
#if SYMDEC_BUILD_NEON
    case Backend::Neon:
      return kNeonOps;
#endif
    default:
      throw std::runtime_error("kernel backend not built on this platform");
  }
}

const Ops& ops() { return ops_for(current()); }

Backend active_backend() { return current(); }

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
    case Backend::Avx512:
      return "avx512";
    case Backend::Neon:
      return "neon";
  }
  return "unknown";
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out = {Backend::Scalar};
  if (cpu_supports(Backend::Avx2)) out.push_back(Backend::Avx2);
  if (cpu_supports(Backend::Avx512)) out.push_back(Backend::Avx512);
  if (cpu_supports(Backend::Neon)) out.push_back(Backend::Neon);
  return out;
}

void set_backend(Backend b) {
  if (!cpu_supports(b))
    throw std::runtime_error("kernel backend not supported on this machine");
  current() = b;
}

}  // namespace symdec::kernels
