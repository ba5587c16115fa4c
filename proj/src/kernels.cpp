#include "epsilon/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <map>
#include <mutex>
#include <sys/mman.h>

#include "epsilon/arith.hpp"
#include "epsilon/error.hpp"
#include "epsilon/field.hpp"

namespace eps {

namespace {

using Vec = std::vector<uint32_t>;

// a * b mod (x^n + sum m_i x^i) over F_p.
Vec mulmod(const Vec &a, const Vec &b, const Vec &m, uint32_t p) {
    const size_t n = m.size();
    std::vector<uint64_t> r(2 * n - 1, 0);
    for (size_t i = 0; i < n; ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < n; ++j) r[i + j] = (r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p;
    }
    for (size_t i = 2 * n - 1; i-- > n;) {
        uint64_t t = r[i];
        if (!t) continue;
        for (size_t k = 0; k < n; ++k) r[i - n + k] = (r[i - n + k] + (p - t) * m[k]) % p;
    }
    Vec out(n);
    for (size_t i = 0; i < n; ++i) out[i] = static_cast<uint32_t>(r[i]);
    return out;
}

Vec powx(uint64_t e, const Vec &m, uint32_t p) {
    const size_t n = m.size();
    Vec r(n, 0), b(n, 0);
    r[0] = 1;
    if (n == 1) b[0] = (p - m[0]) % p;   // x = -m_0
    else b[1] = 1;
    while (e) {
        if (e & 1) r = mulmod(r, b, m, p);
        e >>= 1;
        if (e) b = mulmod(b, b, m, p);
    }
    return r;
}

bool is_primitive(const Vec &m, uint32_t p, uint64_t Q1, const std::vector<std::pair<uint64_t, int>> &fac) {
    Vec one(m.size(), 0);
    one[0] = 1;
    if (m[0] == 0) return false;
    if (powx(Q1, m, p) != one) return false;
    for (auto [r, e] : fac)
        if (powx(Q1 / r, m, p) == one) return false;
    return true;
}

// x < 2^32 divided by a runtime constant d via one 128-bit multiply.
struct FastDiv {
    uint64_t M;
    unsigned s;
    explicit FastDiv(uint64_t d) {
        unsigned l = 0;
        while ((1ull << l) < d) ++l;
        s = 32 + l;
        M = static_cast<uint64_t>(((static_cast<unsigned __int128>(1) << s) / d) + 1);
    }
    uint64_t operator()(uint64_t x) const {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(x) * M) >> s);
    }
};

} // namespace

std::vector<uint32_t> primitive_polynomial(uint32_t p, uint32_t n) {
    static std::mutex mu;
    static std::map<std::pair<uint32_t, uint32_t>, Vec> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, n});
    if (it != cache.end()) return it->second;
    const uint64_t Q1 = ipow(p, n) - 1;
    const auto fac = factorize(Q1);
    // Enumerate polynomials with support in degrees < K for growing K.
    for (uint32_t K = 1; K <= n; ++K) {
        uint64_t count = ipow(p, K);
        for (uint64_t code = 0; code < count; ++code) {
            Vec m(n, 0);
            uint64_t c = code;
            for (uint32_t i = 0; i < K; ++i) {
                m[i] = static_cast<uint32_t>(c % p);
                c /= p;
            }
            if (K > 1 && m[K - 1] == 0) continue;
            if (is_primitive(m, p, Q1, fac)) {
                cache[{p, n}] = m;
                return m;
            }
        }
    }
    fail("internal", "no primitive polynomial found");
}

bool kernel_supports(uint32_t p, uint32_t n) {
    if (!is_prime(p) || p < 3 || p > kMaxKernelPrime || n < 2) return false;
    return ipow(p, n) < (1ull << 32) - 64;
}

NormLogTable::NormLogTable(uint32_t p, uint32_t n) : p_(p), n_(n) {
    if (!kernel_supports(p, n)) fail("unsupported-kernel", "norm-log kernel needs 3 <= p <= 13 and n >= 2");
    size_ = ipow(p, n);
    modulus_ = primitive_polynomial(p, n);
    const size_t huge = 1u << 21;
    alloc_ = ((size_ + 64 + huge - 1) / huge) * huge;
    data_ = static_cast<uint8_t *>(std::aligned_alloc(huge, alloc_));
    if (!data_) fail("out-of-memory", "cannot allocate the norm-log table");
#ifdef MADV_HUGEPAGE
    madvise(data_, alloc_, MADV_HUGEPAGE);
#endif
    std::memset(data_ + size_, 0, alloc_ - size_);
    data_[0] = 0xff;

    // K = number of low digits touched by the reduction x^n = -sum m_i x^i.
    uint32_t K = 1;
    for (uint32_t i = 0; i < n; ++i)
        if (modulus_[i]) K = i + 1;
    const uint64_t pK = ipow(p, K), P1 = ipow(p, n - 1);
    // add_low[top * pK + lo] = low digits after adding -top * m_i digitwise.
    std::vector<uint32_t> add_low(static_cast<size_t>(p) * pK);
    for (uint32_t top = 0; top < p; ++top)
        for (uint64_t lo = 0; lo < pK; ++lo) {
            uint64_t v = lo, out = 0, pw = 1;
            for (uint32_t i = 0; i < K; ++i) {
                uint32_t d = static_cast<uint32_t>(v % p);
                v /= p;
                uint32_t nd = static_cast<uint32_t>((d + static_cast<uint64_t>(p - top) % p * modulus_[i]) % p);
                out += nd * pw;
                pw *= p;
            }
            add_low[top * pK + lo] = static_cast<uint32_t>(out);
        }

    // N(b) = (-1)^n m_0, and N(b^j) = N(b)^j.
    FqPtr Fp = Fq::make(p, 1);
    uint32_t nb = modulus_[0] % p;
    if (n % 2) nb = (p - nb) % p;
    const uint32_t pm1 = p - 1;
    const uint32_t e = Fp->log(Fp->from_int(nb)) % pm1;
    const FastDiv div_top(P1), div_low(pK);

    uint64_t idx = 1;
    uint32_t v = 0;
    const uint64_t steps = size_ - 1;
    uint8_t *T = data_;
    const uint32_t *AL = add_low.data();
    for (uint64_t j = 0; j < steps; ++j) {
        T[idx] = static_cast<uint8_t>(v);
        v += e;
        if (v >= pm1) v -= pm1;
        const uint64_t top = div_top(idx);
        const uint64_t sh = (idx - top * P1) * p;
        const uint64_t lo = sh - div_low(sh) * pK;
        idx = sh - lo + AL[top * pK + lo];
    }
    if (idx != 1) fail("internal", "norm-log walk did not close up");
}

NormLogTable::~NormLogTable() { std::free(data_); }

std::vector<uint64_t> kummer_histogram_scalar(const NormLogTable &T, const LinearKummerJob &job) {
    const uint32_t p = T.p(), pm1 = p - 1;
    if (job.p != p || job.n != T.n() || job.a.size() != job.w.size())
        fail("internal", "kernel job does not match its table");
    std::vector<uint64_t> hist(pm1, 0);
    const size_t J = job.a.size();
    std::vector<std::vector<uint8_t>> W(J, std::vector<uint8_t>(pm1));
    std::vector<std::vector<uint8_t>> rot(J, std::vector<uint8_t>(p));
    for (size_t j = 0; j < J; ++j) {
        for (uint32_t v = 0; v < pm1; ++v) W[j][v] = static_cast<uint8_t>((static_cast<uint64_t>(job.w[j]) * v) % pm1);
        for (uint32_t c = 0; c < p; ++c) rot[j][c] = static_cast<uint8_t>((c + p - job.a[j] % p) % p);
    }
    const uint8_t *D = T.data();
    const uint64_t blocks = T.size() / p;
    for (uint64_t b = 1; b < blocks; ++b) {
        const uint8_t *blk = D + b * p;
        for (uint32_t c = 0; c < p; ++c) {
            uint32_t s = 0;
            for (size_t j = 0; j < J; ++j) {
                s += W[j][blk[rot[j][c]]];
                if (s >= pm1) s -= pm1;
            }
            ++hist[s];
        }
    }
    return hist;
}

#if defined(__x86_64__) || defined(__i386__)
bool avx2_available() { return __builtin_cpu_supports("avx2"); }
#else
bool avx2_available() { return false; }
#endif

std::vector<uint64_t> kummer_histogram(const NormLogTable &T, const LinearKummerJob &job) {
    if (avx2_available()) return kummer_histogram_avx2(T, job);
    return kummer_histogram_scalar(T, job);
}

} // namespace eps
