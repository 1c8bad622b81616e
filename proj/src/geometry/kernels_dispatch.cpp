#include <cstdlib>
#include <cstring>
#include <type_traits>

#include "kernel_params.hpp"
#include "movable/error.hpp"
#include "movable/kernels.hpp"

namespace movable::kernels {

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(MOVABLE_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

namespace {

Isa select() {
  if (const char* forced = std::getenv("MOVABLE_SIMD"); forced && std::strcmp(forced, "scalar") == 0) {
    return Isa::scalar;
  }
  return available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

}  // namespace

Isa active() {
  static const Isa isa = select();
  return isa;
}

void contains_batch(Isa isa, const Shape& shape, std::span<const double> xs,
                    std::span<const double> ys, std::span<std::uint8_t> out) {
  if (xs.size() != ys.size() || xs.size() != out.size()) {
    throw Error(ErrorCode::invalid_argument, "batch spans must have equal length");
  }
  if (!available(isa)) {
    throw Error(ErrorCode::invalid_argument, "kernel variant not available on this CPU");
  }
  const detail::Batch batch{xs.data(), ys.data(), out.data(), xs.size()};
  std::visit(
      [&](const auto& s) {
        const auto params = detail::prepare(s);
        using P = std::decay_t<decltype(params)>;
#if defined(MOVABLE_HAVE_AVX2)
        if (isa == Isa::avx2) {
          if constexpr (std::is_same_v<P, detail::CircleParams>) {
            detail::circle_avx2(params, batch);
          } else if constexpr (std::is_same_v<P, detail::StripParams>) {
            detail::strip_avx2(params, batch);
          } else {
            detail::polygon_avx2(params, batch);
          }
          return;
        }
#endif
        if constexpr (std::is_same_v<P, detail::CircleParams>) {
          detail::circle_scalar(params, batch);
        } else if constexpr (std::is_same_v<P, detail::StripParams>) {
          detail::strip_scalar(params, batch);
        } else {
          detail::polygon_scalar(params, batch);
        }
      },
      shape);
}

void contains_batch(const Shape& shape, std::span<const double> xs, std::span<const double> ys,
                    std::span<std::uint8_t> out) {
  contains_batch(active(), shape, xs, ys, out);
}

}  // namespace movable::kernels
