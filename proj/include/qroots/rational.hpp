#ifndef QROOTS_RATIONAL_HPP
#define QROOTS_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qroots {

using Int = mpz_class;
using Rat = mpq_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct degree_too_small : error { using error::error; };
struct invalid_scale : error { using error::error; };
struct invalid_q_sequence : error { using error::error; };
struct index_error : error { using error::error; };
struct zero_polynomial : error { using error::error; };
struct bad_interval : error { using error::error; };
struct bad_params : error { using error::error; };
struct bad_input : error { using error::error; };
struct bad_spec : error { using error::error; };
struct parse_error : error { using error::error; };

/// Rational p/q in lowest terms. mpq_class(p, q) alone does not canonicalize.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw bad_input("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline int sign_of(const Rat& r) { return sgn(r); }

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;  // powers of canonical rationals stay canonical
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    if (k > n) return Int(0);
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

/// True iff r is the square of a rational; root receives the nonnegative square root.
bool rational_square_root(const Rat& r, Rat& root);

/// Parses an optionally signed integer or "p/q" fraction, result in lowest terms.
Rat parse_rational(const std::string& text);

}  // namespace qroots

#endif
