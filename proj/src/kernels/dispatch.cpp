#include <cstdlib>
#include <string>

#include "substfactor/kernels.hpp"

namespace substfactor::kernels {

#if defined(SUBSTFACTOR_HAVE_X86_KERNELS)
void compose_ssse3(const std::uint8_t*, const std::uint8_t*, std::uint8_t*, std::size_t);
void compose_avx2(const std::uint8_t*, const std::uint8_t*, std::uint8_t*, std::size_t);
#endif
#if defined(SUBSTFACTOR_HAVE_NEON_KERNELS)
void compose_neon(const std::uint8_t*, const std::uint8_t*, std::uint8_t*, std::size_t);
#endif

ComposeFn compose_kernel(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &compose_scalar;
    case Isa::ssse3:
#if defined(SUBSTFACTOR_HAVE_X86_KERNELS)
      if (__builtin_cpu_supports("ssse3")) return &compose_ssse3;
#endif
      return nullptr;
    case Isa::avx2:
#if defined(SUBSTFACTOR_HAVE_X86_KERNELS)
      if (__builtin_cpu_supports("avx2")) return &compose_avx2;
#endif
      return nullptr;
    case Isa::neon:
#if defined(SUBSTFACTOR_HAVE_NEON_KERNELS)
      return &compose_neon;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::ssse3, Isa::avx2, Isa::neon}) {
    if (compose_kernel(isa) != nullptr) out.push_back(isa);
  }
  return out;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::ssse3: return "ssse3";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

namespace {

Isa select_isa() {
  const std::vector<Isa> isas = available_isas();
  if (const char* env = std::getenv("SUBSTFACTOR_ISA")) {
    for (Isa isa : isas) {
      if (isa_name(isa) == env) return isa;
    }
  }
  return isas.back();
}

}  // namespace

Isa active_isa() {
  static const Isa isa = select_isa();
  return isa;
}

void compose(const std::uint8_t* f, const std::uint8_t* g, std::uint8_t* out,
             std::size_t n) {
  static const ComposeFn fn = compose_kernel(active_isa());
  fn(f, g, out, n);
}

}  // namespace substfactor::kernels
