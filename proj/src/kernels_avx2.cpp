#include "epsilon/kernels.hpp"

#include <immintrin.h>

#include "epsilon/error.hpp"

namespace eps {

// Two blocks of p consecutive table entries per register, one per 128-bit
// lane.  Within a block only the constant coordinate varies, so y - a_j is a
// byte rotation (pshufb), and the weight w_j * v mod (p-1) a second pshufb.
std::vector<uint64_t> kummer_histogram_avx2(const NormLogTable &T, const LinearKummerJob &job) {
    const uint32_t p = T.p(), pm1 = p - 1;
    if (job.p != p || job.n != T.n() || job.a.size() != job.w.size())
        fail("internal", "kernel job does not match its table");
    const size_t J = job.a.size();
    // 32-byte shuffle controls and weight tables, one pair per branch point.
    std::vector<uint8_t> rot_bytes(32 * J), wt_bytes(32 * J);
    for (size_t j = 0; j < J; ++j) {
        uint8_t *r = &rot_bytes[32 * j], *w = &wt_bytes[32 * j];
        for (uint32_t c = 0; c < 16; ++c) {
            uint8_t rc = c < p ? static_cast<uint8_t>((c + p - job.a[j] % p) % p) : 0x80;
            uint8_t wc = c < pm1 ? static_cast<uint8_t>((static_cast<uint64_t>(job.w[j]) * c) % pm1) : 0;
            r[c] = r[c + 16] = rc;
            w[c] = w[c + 16] = wc;
        }
    }
    auto rot = [&](size_t j) { return _mm256_loadu_si256(reinterpret_cast<const __m256i *>(&rot_bytes[32 * j])); };
    auto wt = [&](size_t j) { return _mm256_loadu_si256(reinterpret_cast<const __m256i *>(&wt_bytes[32 * j])); };
    alignas(32) uint8_t padb[32];
    for (uint32_t c = 0; c < 16; ++c) padb[c] = padb[c + 16] = c < p ? 0 : 0xff;
    const __m256i pad = _mm256_load_si256(reinterpret_cast<const __m256i *>(padb));
    const __m256i mod = _mm256_set1_epi8(static_cast<char>(pm1));
    const __m256i zero = _mm256_setzero_si256();

    std::vector<uint64_t> hist(pm1, 0);
    __m256i cnt[15], tot[15];
    for (uint32_t v = 0; v < pm1; ++v) cnt[v] = tot[v] = zero;

    const uint8_t *D = T.data();
    const uint64_t blocks = T.size() / p;
    uint64_t b = 1;
    unsigned pending = 0;
    auto flush = [&]() {
        for (uint32_t v = 0; v < pm1; ++v) {
            tot[v] = _mm256_add_epi64(tot[v], _mm256_sad_epu8(cnt[v], zero));
            cnt[v] = zero;
        }
        pending = 0;
    };
    for (; b + 1 < blocks; b += 2) {
        const uint8_t *blk = D + b * p;
        __m128i lo = _mm_loadu_si128(reinterpret_cast<const __m128i *>(blk));
        __m128i hi = _mm_loadu_si128(reinterpret_cast<const __m128i *>(blk + p));
        __m256i x = _mm256_inserti128_si256(_mm256_castsi128_si256(lo), hi, 1);
        __m256i s = zero;
        for (size_t j = 0; j < J; ++j) {
            __m256i t = _mm256_shuffle_epi8(wt(j), _mm256_shuffle_epi8(x, rot(j)));
            s = _mm256_add_epi8(s, t);
            s = _mm256_min_epu8(s, _mm256_sub_epi8(s, mod));
        }
        s = _mm256_or_si256(s, pad);
        for (uint32_t v = 0; v < pm1; ++v)
            cnt[v] = _mm256_sub_epi8(cnt[v], _mm256_cmpeq_epi8(s, _mm256_set1_epi8(static_cast<char>(v))));
        if (++pending == 255) flush();
    }
    flush();
    for (uint32_t v = 0; v < pm1; ++v) {
        alignas(32) uint64_t parts[4];
        _mm256_store_si256(reinterpret_cast<__m256i *>(parts), tot[v]);
        hist[v] = parts[0] + parts[1] + parts[2] + parts[3];
    }
    // Leftover block, if the count of nonzero blocks is odd.
    for (; b < blocks; ++b) {
        const uint8_t *blk = D + b * p;
        for (uint32_t c = 0; c < p; ++c) {
            uint32_t s = 0;
            for (size_t j = 0; j < J; ++j) {
                uint32_t v = blk[(c + p - job.a[j] % p) % p];
                s = (s + static_cast<uint32_t>((static_cast<uint64_t>(job.w[j]) * v) % pm1)) % pm1;
            }
            ++hist[s];
        }
    }
    return hist;
}

} // namespace eps
