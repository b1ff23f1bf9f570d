#include "pgq/kernels.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>

namespace pgq::kernels {

namespace {

void xor_rows_scalar(Word* dst, const Word* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

std::size_t popcount_scalar(const Word* a, std::size_t n) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i]);
    return total;
}

std::size_t and_popcount_scalar(const Word* a, const Word* b, std::size_t n) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

constexpr Backend kScalar{"scalar", xor_rows_scalar, popcount_scalar, and_popcount_scalar};

std::atomic<const Backend*> g_active{nullptr};

const Backend* pick_default() {
    if (const char* env = std::getenv("PGQLDPC_KERNEL")) {
        std::string_view want(env);
        if (want == "scalar") return &kScalar;
        if (want == "avx2" && avx2()) return avx2();
        if (want == "neon" && neon()) return neon();
        // fall through to auto for unknown/unavailable values
    }
    if (const Backend* b = avx2()) return b;
    if (const Backend* b = neon()) return b;
    return &kScalar;
}

}  // namespace

const Backend& scalar() { return kScalar; }

#if !defined(PGQ_HAVE_AVX2_TU)
const Backend* avx2() { return nullptr; }
#endif
#if !defined(PGQ_HAVE_NEON_TU)
const Backend* neon() { return nullptr; }
#endif

const Backend& active() {
    const Backend* b = g_active.load(std::memory_order_acquire);
    if (!b) {
        b = pick_default();
        g_active.store(b, std::memory_order_release);
    }
    return *b;
}

bool select(std::string_view name) {
    const Backend* b = nullptr;
    if (name == "scalar") {
        b = &kScalar;
    } else if (name == "avx2") {
        b = avx2();
    } else if (name == "neon") {
        b = neon();
    } else if (name == "auto") {
        if (const Backend* v = avx2())
            b = v;
        else if (const Backend* v = neon())
            b = v;
        else
            b = &kScalar;
    }
    if (!b) return false;
    g_active.store(b, std::memory_order_release);
    return true;
}

std::vector<const Backend*> compiled_backends() {
    std::vector<const Backend*> out{&kScalar};
    if (const Backend* b = avx2()) out.push_back(b);
    if (const Backend* b = neon()) out.push_back(b);
    return out;
}

}  // namespace pgq::kernels
