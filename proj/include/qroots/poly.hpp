#ifndef QROOTS_POLY_HPP
#define QROOTS_POLY_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qroots/rational.hpp"

namespace qroots {

/// Univariate polynomial with exact rational coefficients, stored densely in
/// ascending degree. The zero polynomial has an empty coefficient list and
/// degree() == -1; every nonzero polynomial has a nonzero leading coefficient.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const Rat& a) { return Poly({a}); }
    /// c * x^k
    static Poly monomial(const Rat& c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of x^k; zero outside the stored range.
    const Rat& operator[](int k) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& leading() const;

    Rat eval(const Rat& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& s, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const;

    /// The antiderivative F with F' = *this and F(at) = 0.
    Poly antiderivative_vanishing_at(const Rat& at) const;

    /// Sum of the terms a_i x^i .. a_j x^j, not divided by x^i. 0 <= i <= j <= degree.
    Poly segment(int i, int j) const;

    /// x^n P(1/x): the reversed coefficient list. If a_0 = 0 the result has
    /// lower degree than the input (detectable by comparing degrees).
    Poly reverse() const;

    /// a * P(b x) with a, b != 0; leaves the q-sequence unchanged index-by-index.
    Poly scale_transform(const Rat& a, const Rat& b) const;

    Poly monic() const;

    std::string to_string() const;

  private:
    void trim();
    std::vector<Rat> c_;
};

/// Euclidean division: p = q*d + r with deg r < deg d.
std::pair<Poly, Poly> divrem(const Poly& p, const Poly& d);

/// Exact quotient; throws bad_input if the division leaves a remainder.
Poly exact_div(const Poly& p, const Poly& d);

/// Monic gcd (gcd of zero polynomials is zero).
Poly poly_gcd(Poly a, Poly b);

/// The ratios q_k = a_k^2 / (a_{k-1} a_{k+1}). An entry is present exactly
/// when both neighbor coefficients are nonzero; values may be zero (a_k = 0)
/// or negative (sign-mixed coefficients).
struct QSeq {
    int degree = 0;
    std::map<int, Rat> entries;

    bool total() const { return static_cast<int>(entries.size()) == degree - 1; }
    bool has(int k) const { return entries.count(k) != 0; }
    const Rat& at(int k) const { return entries.at(k); }
};

/// Requires degree >= 2 (DegreeTooSmall otherwise).
QSeq q_sequence(const Poly& p);

/// Which coefficient parity classes are strictly positive.
enum class PositivityClass { AllPositive, EvenPositive, OddPositive, Other };

PositivityClass positivity_class(const Poly& p);
bool all_coeffs_positive(const Poly& p);
bool even_coeffs_positive(const Poly& p);
bool odd_coeffs_positive(const Poly& p);

/// Unique positive-coefficient polynomial of degree len(q)+1 with the given
/// a_0, a_1 and q-sequence; requires a0, a1 > 0 and every q_k > 0.
Poly coeffs_from_q(const Rat& a0, const Rat& a1, const std::vector<Rat>& q);

}  // namespace qroots

#endif
