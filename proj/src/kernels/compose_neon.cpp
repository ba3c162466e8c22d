#include <cstring>

#include "substfactor/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace substfactor::kernels {

// tbl over four q registers covers a 64-byte table in one instruction.
void compose_neon(const std::uint8_t* f, const std::uint8_t* g, std::uint8_t* out,
                  std::size_t n) {
  if (n > 64) {
    compose_scalar(f, g, out, n);
    return;
  }
  std::uint8_t table[64] = {};
  std::uint8_t idx[64] = {};
  std::uint8_t res[64];
  std::memcpy(table, f, n);
  std::memcpy(idx, g, n);
  uint8x16x4_t t;
  t.val[0] = vld1q_u8(table);
  t.val[1] = vld1q_u8(table + 16);
  t.val[2] = vld1q_u8(table + 32);
  t.val[3] = vld1q_u8(table + 48);
  for (std::size_t b = 0; b < (n + 15) / 16; ++b) {
    vst1q_u8(res + 16 * b, vqtbl4q_u8(t, vld1q_u8(idx + 16 * b)));
  }
  std::memcpy(out, res, n);
}

}  // namespace substfactor::kernels

#endif
