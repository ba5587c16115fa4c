#pragma once

#include <utility>
#include <vector>

#include "epsilon/characters.hpp"
#include "epsilon/cyclotomic.hpp"
#include "epsilon/theta.hpp"

namespace eps {

// tau_k(chi, psi) = -sum_{a in k^x} chi^{-1}(a) psi(a).
CycNum gauss_sum(const MultChar &chi, const AddChar &psi);

// Sum over x != 0, 1 of chi(x) rho(1 - x).
CycNum classical_jacobi_sum(const MultChar &chi, const MultChar &rho);

// Entries carry the characters chi_i of k_i^x; the sum uses their inverses.
struct JacobiDatum {
    FqPtr base;
    std::vector<MultChar> chars;

    // prod_i N(chi_i) trivial, i.e. the product of the restrictions of the
    // chi_i to F_q^x inside k_i^x is trivial.
    bool is_valid() const;
};

// prod_i tau_{k_i}(chibar_i, psi0 o Tr).  Throws not-a-jacobi-datum.
CycNum jacobi_sum(const JacobiDatum &datum, const AddChar &psi0);

// Semi-simplified tame monodromy: each entry stands for the Galois orbit of a
// character of k_i^x, already reduced to its exact order.
struct TameMonodromy {
    FqPtr base;
    std::vector<MultChar> chars;
};

// Exponent a of the character prod_i chi_i|_{F_q^x} of F_q^x.
int64_t determinant_exponent(const TameMonodromy &V);
ThetaClass jacobi_character_class(const TameMonodromy &V);

// s(k)/(p-1) with s the base-p digit sum of k mod q-1, chi(g) = zeta^k.
Rat stickelberger_valuation(const MultChar &chi);

// (tau(chi o N, psi o Tr), tau(chi, psi)^n)
std::pair<CycNum, CycNum> hasse_davenport(const MultChar &chi, const AddChar &psi, uint32_t n);

} // namespace eps
