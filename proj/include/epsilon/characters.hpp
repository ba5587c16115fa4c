#pragma once

#include <cstdint>
#include <string>

#include "epsilon/cyclotomic.hpp"
#include "epsilon/field.hpp"

namespace eps {

// chi(generator) = zeta_{q-1}^k.  Values are returned in Q(zeta_d), d = ord(chi),
// with zeta_d read as zeta_{q-1}^{(q-1)/d}.
struct MultChar {
    FqPtr field;
    int64_t k = 0;

    MultChar() = default;
    MultChar(FqPtr F, int64_t exponent);

    uint64_t order() const;
    bool is_trivial() const { return k == 0; }
    MultChar inverse() const { return MultChar(field, -k); }
    MultChar pow(int64_t e) const;
    friend MultChar operator*(const MultChar &a, const MultChar &b);
    friend bool operator==(const MultChar &a, const MultChar &b) { return a.field == b.field && a.k == b.k; }

    // chi(x) as an exponent e with chi(x) = zeta_{order}^e.
    uint64_t exponent_at(Elem x) const;
    std::string str() const;
};

// psi_c(x) = zeta_p^{Tr_{F_q/F_p}(c x)}, c != 0.
struct AddChar {
    FqPtr field;
    Elem shift = 1;

    AddChar() = default;
    AddChar(FqPtr F, Elem c);
    static AddChar canonical(const FqPtr &F) { return AddChar(F, 1); }
    uint32_t exponent_at(Elem x) const { return field->trace_to_prime(field->mul(shift, x)); }
};

uint32_t discrete_log(const FqPtr &F, Elem x);
CycNum char_eval(const MultChar &chi, Elem x);
CycNum add_char_eval(const AddChar &psi, Elem x);

// chi o Norm_{F_{q^n}/F_q}.
MultChar char_inflate(const MultChar &chi, uint32_t n);
// psi o Tr_{F_{q^n}/F_q}.
AddChar add_char_inflate(const AddChar &psi, uint32_t n);

// The character theta' of the subfield F_{q^s} with theta = theta' o Norm, if any.
bool char_descends(const MultChar &theta, uint32_t sub_degree);
MultChar char_descend(const MultChar &theta, const FqPtr &sub);

} // namespace eps
