#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

// Word-level GF(2) kernels behind every matrix/vector operation in the
// library. A scalar reference implementation always exists; AVX2 (x86) and
// NEON (aarch64) variants are compiled when the target supports them and
// selected at runtime. The variants must be bit-identical to the scalar
// reference; tests/test_kernels.cpp enforces that.

namespace pgq::kernels {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

struct Backend {
    const char* name;
    // dst[i] ^= src[i] for i < n
    void (*xor_rows)(Word* dst, const Word* src, std::size_t n);
    // popcount over a[0..n)
    std::size_t (*popcount)(const Word* a, std::size_t n);
    // popcount of (a & b) over [0..n)
    std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t n);
};

const Backend& scalar();

// Null when the variant was not compiled in or the CPU lacks the feature.
const Backend* avx2();
const Backend* neon();

// Currently selected backend. Defaults to the best available variant,
// overridable with the PGQLDPC_KERNEL environment variable
// (scalar | avx2 | neon | auto).
const Backend& active();

// Returns false if the named backend is unavailable on this machine.
bool select(std::string_view name);

std::vector<const Backend*> compiled_backends();

}  // namespace pgq::kernels
