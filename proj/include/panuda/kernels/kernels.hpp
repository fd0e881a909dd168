// Copyright 2026 The panuda Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Data-parallel pixel and parameter kernels. Every kernel has a portable
// scalar reference and an AVX2 variant; the variant is picked once at
// runtime from CPUID and can be pinned with PANUDA_SIMD=scalar|avx2.
// Both variants produce bit-identical results (no FMA contraction, same
// operation order), so the choice never affects reproducibility.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace panuda::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);
Isa active_isa();
/// Overrides the dispatch choice; throws if the ISA is unavailable on this CPU.
void force_isa(Isa isa);

/// teacher[i] = alpha * teacher[i] + (1 - alpha) * student[i]
void ema_update(std::span<float> teacher, std::span<const float> student, float alpha);
void ema_update(std::span<double> teacher, std::span<const double> student, double alpha);

/// Per-pixel argmax over planar class scores (probs[c * pixels + i]); ties go to
/// the lowest class. Returns how many pixels have a maximum strictly above tau.
std::size_t argmax_confidence(std::span<const float> probs, int classes, std::span<std::uint8_t> out_class, float tau);
std::size_t argmax_confidence(std::span<const double> probs, int classes, std::span<std::uint8_t> out_class, double tau);

/// out[i] = mask[i] ? a[i] : b[i]
void select(std::span<const std::uint8_t> mask, std::span<const float> a, std::span<const float> b, std::span<float> out);

/// For every query point, the index of the nearest center in squared
/// Euclidean distance; ties go to the lowest index. Requires >= 1 center.
void nearest_center(std::span<const float> qy, std::span<const float> qx, std::span<const float> cy, std::span<const float> cx,
                    std::span<std::int32_t> out);

// Direct access to each implementation, for equivalence tests and benchmarks.
namespace scalar {
void ema_update(float* teacher, const float* student, std::size_t n, float alpha);
void ema_update(double* teacher, const double* student, std::size_t n, double alpha);
std::size_t argmax_confidence(const float* probs, int classes, std::size_t pixels, float tau, std::uint8_t* out);
std::size_t argmax_confidence(const double* probs, int classes, std::size_t pixels, double tau, std::uint8_t* out);
void select(const std::uint8_t* mask, const float* a, const float* b, float* out, std::size_t n);
void nearest_center(const float* qy, const float* qx, std::size_t n, const float* cy, const float* cx, std::size_t k, std::int32_t* out);
}  // namespace scalar

#if defined(PANUDA_HAVE_AVX2)
namespace avx2 {
void ema_update(float* teacher, const float* student, std::size_t n, float alpha);
void ema_update(double* teacher, const double* student, std::size_t n, double alpha);
std::size_t argmax_confidence(const float* probs, int classes, std::size_t pixels, float tau, std::uint8_t* out);
std::size_t argmax_confidence(const double* probs, int classes, std::size_t pixels, double tau, std::uint8_t* out);
void select(const std::uint8_t* mask, const float* a, const float* b, float* out, std::size_t n);
void nearest_center(const float* qy, const float* qx, std::size_t n, const float* cy, const float* cx, std::size_t k, std::int32_t* out);
}  // namespace avx2
#endif

}  // namespace panuda::kernels
