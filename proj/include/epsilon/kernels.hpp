#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace eps {

// Character sums of products of Kummer sheaves with rational branch points
// over F_{p^n}, p prime, p <= 13:  for every y in F_{p^n} \ F_p, the exponent
//   E(y) = sum_j w_j * dlog_g N(y - a_j)  mod (p - 1)
// with g the canonical generator of F_p.  The kernels return the histogram
// of E over those y.
struct LinearKummerJob {
    uint32_t p = 0;
    uint32_t n = 0;
    std::vector<uint32_t> a;   // branch points in F_p
    std::vector<uint32_t> w;   // weights mod p - 1
};

// dlog_g N(y) mod (p-1) for every y in F_{p^n}, indexed by sum c_i p^i in the
// basis 1, b, .., b^{n-1} of a fixed primitive element b.  Padded by 32 bytes.
class NormLogTable {
public:
    NormLogTable(uint32_t p, uint32_t n);
    ~NormLogTable();
    NormLogTable(const NormLogTable &) = delete;
    NormLogTable &operator=(const NormLogTable &) = delete;

    uint32_t p() const { return p_; }
    uint32_t n() const { return n_; }
    uint64_t size() const { return size_; }
    const uint8_t *data() const { return data_; }
    // Lower coefficients m_0.. of the primitive polynomial x^n + ... + m_0.
    const std::vector<uint32_t> &modulus() const { return modulus_; }

private:
    uint32_t p_, n_;
    uint64_t size_;
    uint8_t *data_ = nullptr;
    size_t alloc_ = 0;
    std::vector<uint32_t> modulus_;
};

constexpr uint32_t kMaxKernelPrime = 13;

bool kernel_supports(uint32_t p, uint32_t n);
bool avx2_available();

std::vector<uint64_t> kummer_histogram_scalar(const NormLogTable &T, const LinearKummerJob &job);
std::vector<uint64_t> kummer_histogram_avx2(const NormLogTable &T, const LinearKummerJob &job);
// Picks the AVX2 variant when the CPU has it.
std::vector<uint64_t> kummer_histogram(const NormLogTable &T, const LinearKummerJob &job);

// Lower coefficients of a primitive polynomial of degree n over F_p with the
// fewest low-order terms found first.
std::vector<uint32_t> primitive_polynomial(uint32_t p, uint32_t n);

} // namespace eps
