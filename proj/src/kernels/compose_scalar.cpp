#include "substfactor/kernels.hpp"

namespace substfactor::kernels {

void compose_scalar(const std::uint8_t* f, const std::uint8_t* g, std::uint8_t* out,
                    std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) out[x] = f[g[x]];
}

}  // namespace substfactor::kernels
