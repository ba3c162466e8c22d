#include <tmmintrin.h>

#include <cstring>

#include "substfactor/kernels.hpp"

#if defined(__SSSE3__)

namespace substfactor::kernels {

// Table lookup in 16-byte chunks of f: pshufb on the low nibble of each
// index, keeping the lanes whose high nibble selects the chunk. Degrees above
// 64 go to the scalar loop, where the chunk count stops paying off.
void compose_ssse3(const std::uint8_t* f, const std::uint8_t* g, std::uint8_t* out,
                   std::size_t n) {
  if (n > 64) {
    compose_scalar(f, g, out, n);
    return;
  }
  alignas(16) std::uint8_t table[64] = {};
  alignas(16) std::uint8_t idx[64] = {};
  alignas(16) std::uint8_t res[64];
  std::memcpy(table, f, n);
  std::memcpy(idx, g, n);
  const std::size_t chunks = (n + 15) / 16;
  const __m128i low = _mm_set1_epi8(0x0F);
  for (std::size_t b = 0; b < chunks; ++b) {
    const __m128i v = _mm_load_si128(reinterpret_cast<const __m128i*>(idx + 16 * b));
    const __m128i lo = _mm_and_si128(v, low);
    const __m128i hi = _mm_and_si128(_mm_srli_epi16(v, 4), low);
    __m128i acc = _mm_setzero_si128();
    for (std::size_t c = 0; c < chunks; ++c) {
      const __m128i t = _mm_load_si128(reinterpret_cast<const __m128i*>(table + 16 * c));
      const __m128i sel = _mm_cmpeq_epi8(hi, _mm_set1_epi8(static_cast<char>(c)));
      acc = _mm_or_si128(acc, _mm_and_si128(sel, _mm_shuffle_epi8(t, lo)));
    }
    _mm_store_si128(reinterpret_cast<__m128i*>(res + 16 * b), acc);
  }
  std::memcpy(out, res, n);
}

}  // namespace substfactor::kernels

#endif
