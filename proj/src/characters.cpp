#include "epsilon/characters.hpp"

#include "epsilon/arith.hpp"
#include "epsilon/error.hpp"

namespace eps {

MultChar::MultChar(FqPtr F, int64_t exponent) : field(std::move(F)) {
    k = mod(exponent, static_cast<int64_t>(field->order()));
}

uint64_t MultChar::order() const {
    uint64_t n = field->order();
    return n / std::gcd(n, static_cast<uint64_t>(k));
}

MultChar MultChar::pow(int64_t e) const {
    int64_t n = static_cast<int64_t>(field->order());
    return MultChar(field, static_cast<int64_t>((static_cast<__int128>(k) * mod(e, n)) % n));
}

MultChar operator*(const MultChar &a, const MultChar &b) {
    if (a.field != b.field) fail("field-mismatch", "characters over different fields");
    return MultChar(a.field, a.k + b.k);
}

uint64_t MultChar::exponent_at(Elem x) const {
    if (x == 0) fail("zero-input", "multiplicative character evaluated at 0");
    const uint64_t n = field->order(), d = order();
    const uint64_t kd = static_cast<uint64_t>(k) / (n / d);   // chi = (zeta_d)^{kd * log}
    return static_cast<uint64_t>((static_cast<unsigned __int128>(kd) * field->log(x)) % d);
}

std::string MultChar::str() const {
    return "chi[" + std::to_string(k) + "] over F_" + std::to_string(field->q());
}

AddChar::AddChar(FqPtr F, Elem c) : field(std::move(F)), shift(c) {
    if (c == 0 || c >= field->q()) fail("trivial-additive-character", "additive shift must be a nonzero element");
}

uint32_t discrete_log(const FqPtr &F, Elem x) { return F->log(x); }

CycNum char_eval(const MultChar &chi, Elem x) {
    uint64_t d = chi.order();
    return CycNum::zeta(static_cast<uint32_t>(d), static_cast<int64_t>(chi.exponent_at(x)));
}

CycNum add_char_eval(const AddChar &psi, Elem x) {
    return CycNum::zeta(psi.field->p(), psi.exponent_at(x));
}

MultChar char_inflate(const MultChar &chi, uint32_t n) {
    if (n == 1) return chi;
    FqPtr big = field_extend(chi.field, n);
    auto emb = FieldEmbedding::make(chi.field, big);
    const uint64_t step = (big->q() - 1) / (chi.field->q() - 1);
    unsigned __int128 K = static_cast<unsigned __int128>(chi.k) * emb->norm_exponent();
    K %= chi.field->order();
    return MultChar(big, static_cast<int64_t>(K * step % big->order()));
}

AddChar add_char_inflate(const AddChar &psi, uint32_t n) {
    if (n == 1) return psi;
    FqPtr big = field_extend(psi.field, n);
    auto emb = FieldEmbedding::make(psi.field, big);
    return AddChar(big, emb->map(psi.shift));
}

bool char_descends(const MultChar &theta, uint32_t sub_degree) {
    if (theta.field->f() % sub_degree != 0) return false;
    uint64_t qs = ipow(theta.field->p(), sub_degree);
    return (qs - 1) % theta.order() == 0;
}

MultChar char_descend(const MultChar &theta, const FqPtr &sub) {
    if (!char_descends(theta, sub->f()))
        fail("no-descent", theta.str() + " does not factor through the norm to F_" + std::to_string(sub->q()));
    auto emb = FieldEmbedding::make(sub, theta.field);
    const uint64_t step = (theta.field->q() - 1) / (sub->q() - 1);
    const int64_t n = static_cast<int64_t>(sub->order());
    int64_t t = static_cast<int64_t>(static_cast<uint64_t>(theta.k) / step);
    int64_t einv = n == 1 ? 0 : inv_mod(static_cast<int64_t>(emb->norm_exponent()), n);
    return MultChar(sub, static_cast<int64_t>((static_cast<__int128>(t) * einv) % (n == 0 ? 1 : n)));
}

} // namespace eps
