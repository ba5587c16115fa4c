#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace eps {

// Field elements are indices sum c_i p^i of their coordinates in the basis
// 1, g, .., g^{f-1}, where g is the class of x modulo the defining polynomial.
using Elem = uint32_t;

class Fq;
using FqPtr = std::shared_ptr<const Fq>;

// Largest field cardinality for which log/exp tables are built.
constexpr uint64_t kMaxTabulatedField = 1ull << 22;

class Fq {
public:
    // Cached by (p, f).  The defining polynomial is the monic irreducible of
    // degree f whose lower coefficients, read as base-p digits, form the
    // smallest integer; the generator is the smallest primitive element index.
    static FqPtr make(uint32_t p, uint32_t f);
    static void clear_cache();

    uint32_t p() const { return p_; }
    uint32_t f() const { return f_; }
    uint64_t q() const { return q_; }
    uint64_t order() const { return q_ - 1; }   // of the multiplicative group
    const std::vector<uint32_t> &modulus() const { return modulus_; }
    Elem generator() const { return gen_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, int64_t e) const;
    Elem frobenius(Elem a, unsigned k = 1) const;   // a^{p^k}

    // Discrete log with respect to generator(); throws on zero.
    uint32_t log(Elem a) const;
    Elem exp(int64_t e) const;
    // Raw table access for hot loops (log of zero is kNoLog).
    static constexpr uint32_t kNoLog = 0xffffffffu;
    const uint32_t *log_table() const { return log_.data(); }
    const uint32_t *exp_table() const { return exp_.data(); }
    const uint32_t *zech_table() const { return zech_.data(); }

    Elem from_int(int64_t v) const;
    Elem from_coeffs(const std::vector<uint32_t> &c) const;
    std::vector<uint32_t> coeffs(Elem a) const;
    uint32_t trace_to_prime(Elem a) const;   // Tr_{F_q/F_p}, an integer in [0, p)
    bool in_prime_field(Elem a) const { return a < p_; }

    // Polynomial in g, e.g. "2*g^2 + g + 1"; plain integers for prime fields.
    std::string str(Elem a) const;

    Fq(uint32_t p, uint32_t f);   // use make()

private:
    uint32_t p_, f_;
    uint64_t q_;
    std::vector<uint32_t> modulus_;
    Elem gen_ = 1;
    std::vector<uint32_t> exp_, log_, zech_;
    std::vector<uint32_t> trace_basis_;
};

// Embedding of F_{p^a} into F_{p^{ab}}, with norm and trace back down.
class FieldEmbedding {
public:
    static std::shared_ptr<const FieldEmbedding> make(const FqPtr &small, const FqPtr &big);

    const FqPtr &small() const { return small_; }
    const FqPtr &big() const { return big_; }
    uint32_t degree() const { return big_->f() / small_->f(); }

    Elem map(Elem a) const { return image_[a]; }
    bool in_image(Elem z) const;
    Elem preimage(Elem z) const;          // z must lie in the image
    Elem norm(Elem y) const;              // N_{big/small}(y) in small
    Elem trace(Elem y) const;             // Tr_{big/small}(y) in small
    // N(generator of big) = generator(small)^norm_exponent().
    uint64_t norm_exponent() const { return e_norm_; }

    FieldEmbedding(FqPtr small, FqPtr big);

private:
    FqPtr small_, big_;
    std::vector<Elem> image_;
    uint64_t j0_ = 1;      // image of small generator = G^{j0 (Q-1)/(q-1)}
    uint64_t e_norm_ = 1;
};

// Extension of F of relative degree n (same prime, degree f*n).
FqPtr field_extend(const FqPtr &F, uint32_t n);

} // namespace eps
