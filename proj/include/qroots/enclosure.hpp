#ifndef QROOTS_ENCLOSURE_HPP
#define QROOTS_ENCLOSURE_HPP

#include <string>

#include "qroots/rational.hpp"

namespace qroots {

/// Closed rational interval [lo, hi] guaranteed to contain a target real.
struct RatInterval {
    Rat lo, hi;

    Rat width() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

/// Three-way comparison of an exact rational against an enclosed real:
/// -1 certified below, +1 certified not-below, 0 undecidable at this width.
enum class Cmp { CertifiedTrue, CertifiedFalse, Indeterminate };

/// Decides q < target for target in enc (strict comparison).
Cmp certified_less(const Rat& q, const RatInterval& enc);

/// Enclosure of pi with width <= 2^-precision_bits.
RatInterval pi_enclosure(int precision_bits);

/// Enclosure of cos(x) for a rational x in [0, 3/2].
RatInterval cos_enclosure(const Rat& x, int precision_bits);

/// Rational enclosure of 1/cos^2(pi/(m+2)); exact (lo == hi) for m in {1,2,4}.
struct CertifiedConstant {
    Rat lower, upper;
    std::string target;  // symbolic description
    int precision_bits = 0;

    bool exact() const { return lower == upper; }
    RatInterval interval() const { return {lower, upper}; }
};

/// Monotone in precision: enclosures for the same m only ever tighten, so a
/// comparison decided at some precision stays decided at any higher one.
CertifiedConstant certified_inv_cos_sq(int m, int precision_bits);

}  // namespace qroots

#endif
