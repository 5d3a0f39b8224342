#include "qroots/enclosure.hpp"

#include <map>
#include <mutex>

namespace qroots {

namespace {

// Directed rounding to denominator 2^bits keeps numerators from growing
// through long interval computations.
Rat round_down(const Rat& x, int bits) {
    Int scaled;
    mpz_mul_2exp(scaled.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(bits));
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
    Rat r(q, Int(1) << bits);
    r.canonicalize();
    return r;
}

Rat round_up(const Rat& x, int bits) {
    Int scaled;
    mpz_mul_2exp(scaled.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(bits));
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
    Rat r(q, Int(1) << bits);
    r.canonicalize();
    return r;
}

RatInterval outward(const RatInterval& iv, int bits) {
    return {round_down(iv.lo, bits), round_up(iv.hi, bits)};
}

RatInterval add(const RatInterval& a, const RatInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
RatInterval sub(const RatInterval& a, const RatInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

RatInterval scale(const RatInterval& a, const Rat& s) {
    if (sgn(s) >= 0) return {s * a.lo, s * a.hi};
    return {s * a.hi, s * a.lo};
}

// Alternating series sum_{i>=0} (-1)^i t_i with t_i positive decreasing:
// consecutive partial sums bracket the limit.
RatInterval arctan_inv(unsigned long m, int bits) {
    // arctan(1/m) = sum (-1)^i / ((2i+1) m^(2i+1))
    Rat msq = Rat(Int(m) * Int(m));
    Rat term(1, m);
    Rat partial(0);
    RatInterval enc{Rat(0), Rat(1, m)};
    Rat tol = Rat(1, Int(1) << (bits + 4));
    for (unsigned long i = 0;; ++i) {
        Rat t = term / Rat(2 * i + 1);
        if (i % 2 == 0) {
            partial += t;
            enc.hi = partial;
        } else {
            partial -= t;
            enc.lo = partial;
        }
        term /= msq;
        if (t < tol && i >= 1) break;
    }
    if (enc.lo > enc.hi) std::swap(enc.lo, enc.hi);
    return enc;
}

}  // namespace

Cmp certified_less(const Rat& q, const RatInterval& enc) {
    if (q < enc.lo) return Cmp::CertifiedTrue;
    if (q >= enc.hi) return Cmp::CertifiedFalse;
    if (enc.lo == enc.hi) return q < enc.lo ? Cmp::CertifiedTrue : Cmp::CertifiedFalse;
    return Cmp::Indeterminate;
}

RatInterval pi_enclosure(int precision_bits) {
    int work = precision_bits + 8;
    // Machin: pi = 16 arctan(1/5) - 4 arctan(1/239)
    RatInterval a5 = arctan_inv(5, work);
    RatInterval a239 = arctan_inv(239, work);
    RatInterval pi = sub(scale(a5, Rat(16)), scale(a239, Rat(4)));
    return outward(pi, work);
}

RatInterval cos_enclosure(const Rat& x, int precision_bits) {
    if (sgn(x) < 0 || x > Rat(3, 2)) throw bad_params("cos_enclosure domain is [0, 3/2]");
    int work = precision_bits + 8;
    // cos x = sum (-1)^i x^(2i) / (2i)!; terms decrease for x <= 3/2 from i >= 1,
    // so consecutive partial sums bracket the value.
    Rat xsq = x * x;
    Rat term(1);
    Rat partial(0);
    RatInterval enc{Rat(-1), Rat(1)};
    Rat tol = Rat(1, Int(1) << work);
    for (unsigned long i = 0;; ++i) {
        if (i % 2 == 0) {
            partial += term;
            enc.hi = partial;
        } else {
            partial -= term;
            enc.lo = partial;
        }
        // Terms decrease from i = 1 for x <= 3/2, so once the term just added
        // is below tol the bracket [S_odd, S_even] is that tight.
        bool tight = term < tol;
        term = term * xsq / Rat(Int(2 * i + 1) * Int(2 * i + 2));
        if (tight && i >= 1) break;
    }
    if (enc.lo > enc.hi) std::swap(enc.lo, enc.hi);
    return outward(enc, work);
}

namespace {

RatInterval cos_on_interval(const RatInterval& theta, int bits) {
    // cos is decreasing on [0, pi/2] and theta is within [0, 3/2] here.
    RatInterval at_hi = cos_enclosure(theta.hi, bits);
    RatInterval at_lo = cos_enclosure(theta.lo, bits);
    return {at_hi.lo, at_lo.hi};
}

CertifiedConstant compute_inv_cos_sq(int m, int precision_bits) {
    CertifiedConstant c;
    c.target = "1/cos^2(pi/" + std::to_string(m + 2) + ")";
    c.precision_bits = precision_bits;
    // Exact classical values: cos(pi/3) = 1/2, cos(pi/4) = sqrt(2)/2, cos(pi/6) = sqrt(3)/2.
    if (m == 1) {
        c.lower = c.upper = Rat(4);
        return c;
    }
    if (m == 2) {
        c.lower = c.upper = Rat(2);
        return c;
    }
    if (m == 4) {
        c.lower = c.upper = make_rat(4, 3);
        return c;
    }
    int work = precision_bits + 16;
    RatInterval pi = pi_enclosure(work);
    RatInterval theta = scale(pi, make_rat(1, m + 2));
    RatInterval cosv = cos_on_interval(theta, work);
    // cos(pi/(m+2)) >= cos(pi/3) = 1/2 > 0 for m >= 1: squaring is monotone.
    RatInterval sq{cosv.lo * cosv.lo, cosv.hi * cosv.hi};
    RatInterval inv{Rat(1) / sq.hi, Rat(1) / sq.lo};
    inv = outward(inv, work);
    c.lower = inv.lo;
    c.upper = inv.hi;
    return c;
}

std::mutex cache_mutex;
std::map<int, CertifiedConstant> cache;  // tightest enclosure seen per m

}  // namespace

CertifiedConstant certified_inv_cos_sq(int m, int precision_bits) {
    if (m < 1) throw bad_params("certified_inv_cos_sq requires m >= 1");
    CertifiedConstant fresh = compute_inv_cos_sq(m, precision_bits);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(m);
    if (it == cache.end()) {
        cache.emplace(m, fresh);
        return fresh;
    }
    CertifiedConstant& best = it->second;
    // Intersect: both enclose the same real, so the intersection is nonempty
    // and comparisons can only move from Indeterminate to decided.
    if (fresh.lower > best.lower) best.lower = fresh.lower;
    if (fresh.upper < best.upper) best.upper = fresh.upper;
    best.precision_bits = std::max(best.precision_bits, precision_bits);
    CertifiedConstant out = best;
    out.precision_bits = precision_bits;
    return out;
}

}  // namespace qroots
