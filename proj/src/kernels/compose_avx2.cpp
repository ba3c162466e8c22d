#include <immintrin.h>

#include <cstring>

#include "substfactor/kernels.hpp"

#if defined(__AVX2__)

namespace substfactor::kernels {

// Same chunked lookup as the SSSE3 kernel, 32 indices per step. vpshufb
// works within 128-bit lanes, so each chunk of f is broadcast to both lanes.
void compose_avx2(const std::uint8_t* f, const std::uint8_t* g, std::uint8_t* out,
                  std::size_t n) {
  if (n > 64) {
    compose_scalar(f, g, out, n);
    return;
  }
  alignas(32) std::uint8_t table[64] = {};
  alignas(32) std::uint8_t idx[64] = {};
  alignas(32) std::uint8_t res[64];
  std::memcpy(table, f, n);
  std::memcpy(idx, g, n);
  const std::size_t chunks = (n + 15) / 16;
  const std::size_t blocks = (n + 31) / 32;
  const __m256i low = _mm256_set1_epi8(0x0F);
  __m256i lanes[4];
  for (std::size_t c = 0; c < chunks; ++c) {
    lanes[c] = _mm256_broadcastsi128_si256(
        _mm_load_si128(reinterpret_cast<const __m128i*>(table + 16 * c)));
  }
  for (std::size_t b = 0; b < blocks; ++b) {
    const __m256i v = _mm256_load_si256(reinterpret_cast<const __m256i*>(idx + 32 * b));
    const __m256i lo = _mm256_and_si256(v, low);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t c = 0; c < chunks; ++c) {
      const __m256i sel = _mm256_cmpeq_epi8(hi, _mm256_set1_epi8(static_cast<char>(c)));
      acc = _mm256_or_si256(acc, _mm256_and_si256(sel, _mm256_shuffle_epi8(lanes[c], lo)));
    }
    _mm256_store_si256(reinterpret_cast<__m256i*>(res + 32 * b), acc);
  }
  std::memcpy(out, res, n);
}

}  // namespace substfactor::kernels

#endif
