#ifndef QROOTS_ROOTS_HPP
#define QROOTS_ROOTS_HPP

#include <utility>
#include <vector>

#include "qroots/poly.hpp"

namespace qroots {

/// Number of sign changes in a sequence after deleting zero entries.
int sign_changes(const std::vector<Rat>& seq);

/// Yun decomposition: p = lc * prod factor_i^mult_i with monic, square-free,
/// pairwise coprime factors. Throws zero_polynomial on the zero polynomial.
std::vector<std::pair<Poly, int>> square_free_decompose(const Poly& p);

/// Canonical Sturm chain of a square-free polynomial, held as primitive
/// integer coefficient vectors (positive scaling preserves sign variations).
class SturmChain {
  public:
    explicit SturmChain(const Poly& square_free);

    int variations_at(const Rat& x) const;
    int variations_neg_inf() const;
    int variations_pos_inf() const;

    /// Distinct roots in the half-open interval (lo, hi].
    int count_half_open(const Rat& lo, const Rat& hi) const;
    /// Distinct roots on the whole real line.
    int count_line() const;

    size_t size() const { return elems_.size(); }
    /// Chain element signs at x, zeros included (for diagnostics and tests).
    std::vector<int> signs_at(const Rat& x) const;

  private:
    std::vector<std::vector<Int>> elems_;  // ascending degree, primitive
};

/// All real roots of p lie strictly inside (-bound, bound).
Rat cauchy_root_bound(const Poly& p);

struct RootInterval {
    Rat lo, hi;        // lo == hi marks an exact rational root
    int multiplicity;  // multiplicity of the enclosed root in the original p
};

struct RootReport {
    int total_with_multiplicity = 0;  // number of real roots counted with multiplicity
    int distinct_count = 0;
    std::vector<std::pair<Poly, int>> square_free_factors;
    std::vector<RootInterval> isolating_intervals;  // ascending, pairwise disjoint closures
};

/// Exact real-root count with multiplicity: Yun decomposition, Sturm per
/// factor over the whole line, bisection refinement until the isolating
/// intervals are pairwise disjoint.
RootReport count_real_roots(const Poly& p);

/// Distinct real roots in (lo, hi) or [lo, hi]; endpoint membership decided
/// by direct evaluation. Requires lo < hi.
int count_in_interval(const Poly& p, const Rat& lo, const Rat& hi, bool closed);

/// Isolating intervals for one square-free polynomial (multiplicity field 1).
std::vector<RootInterval> isolate_real_roots(const Poly& square_free);

}  // namespace qroots

#endif
