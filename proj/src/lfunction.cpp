#include "epsilon/lfunction.hpp"

#include <atomic>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include "epsilon/arith.hpp"
#include "epsilon/error.hpp"
#include "epsilon/kernels.hpp"

namespace eps {

namespace {

std::atomic<unsigned> g_jobs{1};

// Recently built norm-log tables, bounded in total bytes.
class TableCache {
public:
    std::shared_ptr<const NormLogTable> get(uint32_t p, uint32_t n) {
        std::lock_guard<std::mutex> lock(mu_);
        for (auto it = entries_.begin(); it != entries_.end(); ++it)
            if (it->first == std::make_pair(p, n)) {
                entries_.splice(entries_.begin(), entries_, it);
                return it->second;
            }
        auto t = std::make_shared<const NormLogTable>(p, n);
        entries_.emplace_front(std::make_pair(p, n), t);
        uint64_t total = 0;
        for (auto it = entries_.begin(); it != entries_.end();) {
            total += it->second->size();
            if (it != entries_.begin() && total > kBudget) it = entries_.erase(it);
            else ++it;
        }
        return t;
    }

private:
    static constexpr uint64_t kBudget = 1ull << 30;
    std::mutex mu_;
    std::list<std::pair<std::pair<uint32_t, uint32_t>, std::shared_ptr<const NormLogTable>>> entries_;
};

TableCache &table_cache() {
    static TableCache c;
    return c;
}

CycNum from_histogram(uint32_t q1, uint32_t p, const std::vector<int64_t> &hist) {
    // hist[e * p + j] counts zeta_{q-1}^e zeta_p^j.
    bool no_e = true, no_j = true;
    for (uint32_t e = 0; e < q1; ++e)
        for (uint32_t j = 0; j < p; ++j)
            if (hist[static_cast<size_t>(e) * p + j]) {
                no_e = no_e && e == 0;
                no_j = no_j && j == 0;
            }
    if (no_j) {
        std::vector<int64_t> counts(q1, 0);
        for (uint32_t e = 0; e < q1; ++e) counts[e] = hist[static_cast<size_t>(e) * p];
        return CycNum::from_counts(q1, counts);
    }
    if (no_e) return CycNum::from_counts(p, std::vector<int64_t>(hist.begin(), hist.begin() + p));
    const uint32_t M = q1 * p;
    std::vector<int64_t> counts(M, 0);
    for (uint32_t e = 0; e < q1; ++e)
        for (uint32_t j = 0; j < p; ++j) {
            int64_t c = hist[static_cast<size_t>(e) * p + j];
            if (c) counts[(static_cast<uint64_t>(e) * p + static_cast<uint64_t>(j) * q1) % M] += c;
        }
    return CycNum::from_counts(M, counts);
}

CycNum finish(const SheafExpr &S, CycNum sum, uint32_t n) {
    if (!S.twist().is_one()) sum *= S.twist().pow(n);
    // trace_at_infinity already carries the twist
    if (!S.bad_at(ClosedPoint::infinity(S.field()))) sum += trace_at_infinity(S, n);
    return sum;
}

} // namespace

void set_point_count_jobs(unsigned jobs) { g_jobs.store(jobs == 0 ? 1 : jobs); }
unsigned point_count_jobs() { return g_jobs.load(); }

CycNum point_count_generic(const SheafExpr &S, uint32_t n) {
    const FqPtr &F = S.field();
    const uint64_t Qbig = ipow(F->q(), n);
    if (Qbig > kMaxTabulatedField)
        fail("field-too-large", "enumeration over F_" + std::to_string(F->q()) + "^" + std::to_string(n) + " exceeds the table limit");
    FqPtr E = field_extend(F, n);
    auto emb = FieldEmbedding::make(F, E);
    const uint32_t q1 = static_cast<uint32_t>(F->order()), p = F->p();
    const uint64_t eN = emb->norm_exponent() % q1;
    const uint64_t base = (static_cast<uint64_t>(n) * static_cast<uint64_t>(S.kummer_const_log())) % q1;

    std::vector<std::vector<Elem>> polys;
    std::vector<uint64_t> weights;
    for (auto &[P, w] : S.kummer_weights()) {
        std::vector<Elem> c;
        for (Elem a : P.coeffs()) c.push_back(emb->map(a));
        polys.push_back(std::move(c));
        weights.push_back(static_cast<uint64_t>(w) * eN % q1);
    }
    const bool has_as = S.has_as() && !S.as_function().is_zero();
    std::vector<Elem> asn, asd;
    if (has_as) {
        for (Elem a : S.as_function().num().coeffs()) asn.push_back(emb->map(a));
        for (Elem a : S.as_function().den().coeffs()) asd.push_back(emb->map(a));
    }
    auto horner = [&](const std::vector<Elem> &c, Elem y) {
        Elem acc = 0;
        for (size_t i = c.size(); i-- > 0;) acc = E->add(E->mul(acc, y), c[i]);
        return acc;
    };

    const unsigned jobs = std::max(1u, std::min<unsigned>(point_count_jobs(), static_cast<unsigned>(Qbig / 4096 + 1)));
    std::vector<std::vector<int64_t>> hists(jobs, std::vector<int64_t>(static_cast<size_t>(q1) * p, 0));
    auto work = [&](unsigned t) {
        auto &h = hists[t];
        const uint64_t lo = Qbig * t / jobs, hi = Qbig * (t + 1) / jobs;
        for (uint64_t yi = lo; yi < hi; ++yi) {
            const Elem y = static_cast<Elem>(yi);
            uint64_t e = base;
            bool bad = false;
            for (size_t j = 0; j < polys.size(); ++j) {
                Elem z = horner(polys[j], y);
                if (z == 0) {
                    bad = true;
                    break;
                }
                e += weights[j] * E->log(z);
            }
            if (bad) continue;
            uint32_t tr = 0;
            if (has_as) {
                Elem d = horner(asd, y);
                if (d == 0) continue;
                tr = E->trace_to_prime(E->div(horner(asn, y), d));
            }
            ++h[(e % q1) * p + tr];
        }
    };
    if (jobs == 1) work(0);
    else {
        std::vector<std::thread> th;
        for (unsigned t = 0; t < jobs; ++t) th.emplace_back(work, t);
        for (auto &x : th) x.join();
    }
    std::vector<int64_t> total(static_cast<size_t>(q1) * p, 0);
    for (auto &h : hists)
        for (size_t i = 0; i < h.size(); ++i) total[i] += h[i];
    return finish(S, from_histogram(q1, p, total), n);
}

bool fast_path_applies(const SheafExpr &S, uint32_t n) {
    const FqPtr &F = S.field();
    if (F->f() != 1 || !kernel_supports(F->p(), n)) return false;
    if (S.has_as() && !S.as_function().is_zero()) return false;
    for (auto &[P, w] : S.kummer_weights())
        if (P.degree() != 1) return false;
    return true;
}

CycNum point_count_fast(const SheafExpr &S, uint32_t n, bool use_avx2) {
    if (!fast_path_applies(S, n)) fail("internal", "fast point count does not apply");
    const FqPtr &F = S.field();
    const uint32_t p = F->p(), q1 = p - 1;
    LinearKummerJob job{p, n, {}, {}};
    for (auto &[P, w] : S.kummer_weights()) {
        job.a.push_back(F->neg(P.coeff(0)));
        job.w.push_back(static_cast<uint32_t>(w));
    }
    auto T = table_cache().get(p, n);
    std::vector<uint64_t> h = use_avx2 && avx2_available() ? kummer_histogram_avx2(*T, job) : kummer_histogram_scalar(*T, job);
    const uint64_t base = (static_cast<uint64_t>(n) * static_cast<uint64_t>(S.kummer_const_log())) % q1;
    std::vector<int64_t> counts(q1, 0);
    for (uint32_t v = 0; v < q1; ++v) counts[(v + base) % q1] += static_cast<int64_t>(h[v]);
    // Points of F_p: N(y - a) = (y - a)^n.
    for (Elem y = 0; y < p; ++y) {
        uint64_t e = base;
        bool bad = false;
        for (size_t j = 0; j < job.a.size(); ++j) {
            Elem z = F->sub(y, job.a[j]);
            if (z == 0) {
                bad = true;
                break;
            }
            e += static_cast<uint64_t>(job.w[j]) * n % q1 * F->log(z);
        }
        if (!bad) ++counts[e % q1];
    }
    return finish(S, CycNum::from_counts(q1, counts), n);
}

std::vector<CycNum> point_count_traces(const SheafExpr &S, uint32_t N) {
    std::vector<CycNum> out;
    for (uint32_t n = 1; n <= N; ++n) {
        if (n >= 2 && fast_path_applies(S, n)) out.push_back(point_count_fast(S, n, true));
        else out.push_back(point_count_generic(S, n));
    }
    return out;
}

LPolynomial l_polynomial(const SheafExpr &S) {
    if (S.bad_points().empty())
        fail("cohomology-obstruction", "sheaf is lisse on all of P^1, so H^0 or H^2 may be nonzero");
    const int64_t d = -euler_char(S);
    if (d < 0) fail("degree-inconsistency", "negative L-function degree");
    LPolynomial L;
    L.S = point_count_traces(S, static_cast<uint32_t>(d + 1));
    // Newton: k c_k = sum_{i=1}^k S_i c_{k-i}.
    std::vector<CycNum> c{CycNum(1)};
    for (int64_t k = 1; k <= d + 1; ++k) {
        CycNum acc(0);
        for (int64_t i = 1; i <= k; ++i) acc += L.S[static_cast<size_t>(i - 1)] * c[static_cast<size_t>(k - i)];
        c.push_back(acc.scaled(Rat(1, static_cast<unsigned long>(k))));
    }
    if (!c.back().is_zero())
        fail("degree-inconsistency", "coefficient of t^" + std::to_string(d + 1) + " is " + c.back().str());
    c.pop_back();
    L.coeffs = std::move(c);
    return L;
}

ThetaClass det_cohomology_geometric_constant(const CycNum &alpha, uint64_t q) {
    if (alpha.is_zero()) fail("zero-class", "twist must be nonzero");
    return ThetaClass::of(alpha).pow(Rat(2)) * ThetaClass::power_of(Int(static_cast<unsigned long>(q)), Rat(1));
}

GlobalEpsilon global_epsilon(const SheafExpr &S) {
    GlobalEpsilon g;
    const uint64_t q = S.field()->q();
    if (S.bad_points().empty() && S.is_constant()) {
        // H^0 and H^2 with eigenvalues alpha and alpha q.
        g.constant_case = true;
        g.exact = (S.twist() * S.twist()).scaled(Rat(static_cast<unsigned long>(q))).inverse();
        g.det_rgamma = det_cohomology_geometric_constant(S.twist(), q);
        g.cls = g.det_rgamma.inverse();
        return g;
    }
    LPolynomial L = l_polynomial(S);
    // Only H^1 survives: L = det(1 - Frob t | H^1), leading coefficient det(-Frob | H^1).
    g.exact = L.coeffs.back();
    g.cls = ThetaClass::of(g.exact);
    g.det_rgamma = g.cls.inverse();
    return g;
}

} // namespace eps
