// NEON variants of the GF(2) word kernels (aarch64).

#if defined(__aarch64__) || defined(__ARM_NEON)

#include <arm_neon.h>

#include <bit>
#include <cstddef>

#include "pgq/kernels.hpp"

namespace pgq::kernels {

namespace {

void xor_rows_neon(Word* dst, const Word* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t d = vld1q_u64(dst + i);
        uint64x2_t s = vld1q_u64(src + i);
        vst1q_u64(dst + i, veorq_u64(d, s));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

inline std::uint64_t popcount_u64x2(uint64x2_t v) {
    uint8x16_t cnt = vcntq_u8(vreinterpretq_u8_u64(v));
    return vaddvq_u8(cnt);
}

std::size_t popcount_neon(const Word* a, std::size_t n) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) total += popcount_u64x2(vld1q_u64(a + i));
    for (; i < n; ++i) total += std::popcount(a[i]);
    return total;
}

std::size_t and_popcount_neon(const Word* a, const Word* b, std::size_t n) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        total += popcount_u64x2(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < n; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

constexpr Backend kNeon{"neon", xor_rows_neon, popcount_neon, and_popcount_neon};

}  // namespace

const Backend* neon() { return &kNeon; }

}  // namespace pgq::kernels

#endif
