#pragma once

// Composition kernels for byte-encoded transformations. Every variant
// computes out[x] = f[g[x]] for x < n, where f and g have n entries, all
// below n. The scalar kernel is the reference; SIMD variants are selected at
// runtime and must agree with it bit for bit.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace substfactor::kernels {

enum class Isa { scalar, ssse3, avx2, neon };

using ComposeFn = void (*)(const std::uint8_t* f, const std::uint8_t* g,
                           std::uint8_t* out, std::size_t n);

void compose_scalar(const std::uint8_t* f, const std::uint8_t* g, std::uint8_t* out,
                    std::size_t n);

//! The kernel for isa, or nullptr when it is not compiled in or the CPU
//! lacks the instructions.
ComposeFn compose_kernel(Isa isa);

//! Variants usable on this machine, scalar first.
std::vector<Isa> available_isas();

//! The variant used by compose(). Best available, unless the environment
//! variable SUBSTFACTOR_ISA names another available one.
Isa active_isa();

std::string_view isa_name(Isa isa);

void compose(const std::uint8_t* f, const std::uint8_t* g, std::uint8_t* out,
             std::size_t n);

}  // namespace substfactor::kernels
