#include "qroots/poly.hpp"

#include <algorithm>
#include <sstream>

namespace qroots {

bool rational_square_root(const Rat& r, Rat& root) {
    if (sgn(r) < 0) return false;
    if (sgn(r) == 0) {
        root = 0;
        return true;
    }
    Int num_root, den_root;
    if (!mpz_perfect_square_p(r.get_num_mpz_t())) return false;
    if (!mpz_perfect_square_p(r.get_den_mpz_t())) return false;
    mpz_sqrt(num_root.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), r.get_den_mpz_t());
    root = Rat(num_root, den_root);  // already in lowest terms
    return true;
}

Rat parse_rational(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    if (s.empty()) throw parse_error("empty rational literal");
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw parse_error("bad rational literal: '" + text + "'");
    if (r.get_den() == 0) throw parse_error("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

void Poly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Poly Poly::monomial(const Rat& c, int k) {
    if (sgn(c) == 0 || k < 0) return Poly();
    std::vector<Rat> v(static_cast<size_t>(k) + 1, Rat(0));
    v.back() = c;
    return Poly(std::move(v));
}

const Rat& Poly::operator[](int k) const {
    static const Rat zero_rat(0);
    if (k < 0 || k > degree()) return zero_rat;
    return c_[static_cast<size_t>(k)];
}

const Rat& Poly::leading() const {
    if (is_zero()) throw zero_polynomial("leading coefficient of zero polynomial");
    return c_.back();
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly operator*(const Rat& s, const Poly& p) {
    if (sgn(s) == 0) return Poly();
    Poly r(p);
    for (auto& c : r.c_) c *= s;
    return r;
}

Poly Poly::derivative() const {
    if (degree() < 1) return Poly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    return Poly(std::move(r));
}

Poly Poly::antiderivative_vanishing_at(const Rat& at) const {
    std::vector<Rat> r(c_.size() + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i + 1] = c_[i] / Rat(static_cast<long>(i + 1));
    Poly f(std::move(r));
    if (f.is_zero()) return f;
    f.c_[0] -= f.eval(at);
    f.trim();
    return f;
}

Poly Poly::segment(int i, int j) const {
    if (i < 0 || j > degree() || i > j) throw index_error("segment indices out of range");
    std::vector<Rat> r(static_cast<size_t>(j) + 1, Rat(0));
    for (int k = i; k <= j; ++k) r[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)];
    return Poly(std::move(r));
}

Poly Poly::reverse() const {
    std::vector<Rat> r(c_.rbegin(), c_.rend());
    return Poly(std::move(r));
}

Poly Poly::scale_transform(const Rat& a, const Rat& b) const {
    if (sgn(a) == 0 || sgn(b) == 0) throw invalid_scale("scale_transform requires a, b != 0");
    std::vector<Rat> r(c_.size());
    Rat bp(1);
    for (size_t i = 0; i < c_.size(); ++i) {
        r[i] = a * c_[i] * bp;
        bp *= b;
    }
    return Poly(std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return Rat(Rat(1) / leading()) * *this;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& a = (*this)[k];
        if (sgn(a) == 0) continue;
        if (!first) os << (sgn(a) > 0 ? " + " : " - ");
        else if (sgn(a) < 0) os << "-";
        Rat mag = abs(a);
        if (k == 0 || mag != 1) os << mag.get_str();
        if (k > 0) {
            if (mag != 1) os << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::pair<Poly, Poly> divrem(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw zero_polynomial("division by zero polynomial");
    Poly r = p;
    std::vector<Rat> q;
    int dd = d.degree();
    if (r.degree() >= dd) q.assign(static_cast<size_t>(r.degree() - dd) + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= dd) {
        Rat c = r.leading() / d.leading();
        int k = r.degree() - dd;
        q[static_cast<size_t>(k)] = c;
        r -= Poly::monomial(c, k) * d;
    }
    return {Poly(std::move(q)), r};
}

Poly exact_div(const Poly& p, const Poly& d) {
    auto [q, r] = divrem(p, d);
    if (!r.is_zero()) throw bad_input("exact_div: nonzero remainder");
    return q;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

QSeq q_sequence(const Poly& p) {
    if (p.degree() < 2) throw degree_too_small("q_sequence requires degree >= 2");
    QSeq s;
    s.degree = p.degree();
    for (int k = 1; k <= p.degree() - 1; ++k) {
        const Rat& lo = p[k - 1];
        const Rat& hi = p[k + 1];
        if (sgn(lo) == 0 || sgn(hi) == 0) continue;
        s.entries.emplace(k, p[k] * p[k] / (lo * hi));
    }
    return s;
}

bool all_coeffs_positive(const Poly& p) {
    if (p.is_zero()) return false;
    for (const Rat& c : p.coeffs())
        if (sgn(c) <= 0) return false;
    return true;
}

bool even_coeffs_positive(const Poly& p) {
    if (p.is_zero()) return false;
    for (int k = 0; k <= p.degree(); k += 2)
        if (sgn(p[k]) <= 0) return false;
    return true;
}

bool odd_coeffs_positive(const Poly& p) {
    if (p.is_zero()) return false;
    for (int k = 1; k <= p.degree(); k += 2)
        if (sgn(p[k]) <= 0) return false;
    return true;
}

PositivityClass positivity_class(const Poly& p) {
    bool even = even_coeffs_positive(p);
    bool odd = odd_coeffs_positive(p) && p.degree() >= 1;
    if (even && odd) return PositivityClass::AllPositive;
    if (even) return PositivityClass::EvenPositive;
    if (odd) return PositivityClass::OddPositive;
    return PositivityClass::Other;
}

Poly coeffs_from_q(const Rat& a0, const Rat& a1, const std::vector<Rat>& q) {
    if (sgn(a0) <= 0 || sgn(a1) <= 0) throw invalid_q_sequence("coeffs_from_q requires a0, a1 > 0");
    for (const Rat& v : q)
        if (sgn(v) <= 0) throw invalid_q_sequence("coeffs_from_q requires all q_k > 0");
    // a_{k+1} = a_k^2 / (a_{k-1} q_k), the recurrence form of the closed formula.
    std::vector<Rat> c{a0, a1};
    for (size_t k = 1; k <= q.size(); ++k) {
        c.push_back(c[k] * c[k] / (c[k - 1] * q[k - 1]));
    }
    return Poly(std::move(c));
}

}  // namespace qroots
