#include "qroots/roots.hpp"

#include <algorithm>
#include <deque>

namespace qroots {

namespace {

// Primitive integer coefficient vector with the sign of the input preserved.
std::vector<Int> to_primitive(const Poly& p) {
    std::vector<Int> out;
    if (p.is_zero()) return out;
    Int den_lcm(1);
    for (const Rat& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    out.reserve(p.coeffs().size());
    Int content(0);
    for (const Rat& c : p.coeffs()) {
        Int v = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (content > 1)
        for (Int& v : out) v /= content;
    return out;
}

int sign_at(const std::vector<Int>& c, const Rat& x) {
    // sign of sum c_k * u^k * v^(n-k) for x = u/v in lowest terms
    const Int& u = x.get_num();
    const Int& v = x.get_den();
    Int acc(0);
    Int vpow(1);
    // Horner from the top: acc = ((c_n*u + c_{n-1}*v)*u + c_{n-2}*v^2)*u + ...
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * u + *it * vpow;
        if (it + 1 != c.rend()) vpow *= v;
    }
    return sgn(acc);
}

int leading_sign(const std::vector<Int>& c) { return sgn(c.back()); }

int count_variations(const std::vector<int>& signs) {
    int changes = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace

int sign_changes(const std::vector<Rat>& seq) {
    int changes = 0;
    int prev = 0;
    for (const Rat& v : seq) {
        int s = sgn(v);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

std::vector<std::pair<Poly, int>> square_free_decompose(const Poly& p) {
    if (p.is_zero()) throw zero_polynomial("square_free_decompose of zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() == 0) return out;

    // Yun's algorithm on the monic normalization.
    Poly f = p.monic();
    Poly fp = f.derivative();
    Poly u = poly_gcd(f, fp);
    Poly v = exact_div(f, u);
    Poly w = exact_div(fp, u);
    int i = 1;
    while (v.degree() > 0) {
        Poly z = w - v.derivative();
        Poly h = poly_gcd(v, z);
        if (h.degree() > 0) out.emplace_back(h, i);
        v = exact_div(v, h);
        w = exact_div(z, h);
        ++i;
    }
    return out;
}

SturmChain::SturmChain(const Poly& square_free) {
    if (square_free.is_zero()) throw zero_polynomial("Sturm chain of zero polynomial");
    Poly s0 = square_free;
    Poly s1 = square_free.derivative();
    elems_.push_back(to_primitive(s0));
    while (!s1.is_zero()) {
        elems_.push_back(to_primitive(s1));
        Poly r = -divrem(s0, s1).second;
        s0 = std::move(s1);
        s1 = std::move(r);
    }
}

std::vector<int> SturmChain::signs_at(const Rat& x) const {
    std::vector<int> s;
    s.reserve(elems_.size());
    for (const auto& e : elems_) s.push_back(sign_at(e, x));
    return s;
}

int SturmChain::variations_at(const Rat& x) const { return count_variations(signs_at(x)); }

int SturmChain::variations_pos_inf() const {
    std::vector<int> s;
    s.reserve(elems_.size());
    for (const auto& e : elems_) s.push_back(leading_sign(e));
    return count_variations(s);
}

int SturmChain::variations_neg_inf() const {
    std::vector<int> s;
    s.reserve(elems_.size());
    for (const auto& e : elems_) {
        int deg = static_cast<int>(e.size()) - 1;
        s.push_back(deg % 2 == 0 ? leading_sign(e) : -leading_sign(e));
    }
    return count_variations(s);
}

int SturmChain::count_half_open(const Rat& lo, const Rat& hi) const {
    if (lo >= hi) throw bad_interval("count_half_open requires lo < hi");
    return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_line() const { return variations_neg_inf() - variations_pos_inf(); }

Rat cauchy_root_bound(const Poly& p) {
    if (p.is_zero()) throw zero_polynomial("root bound of zero polynomial");
    Rat m(0);
    for (int k = 0; k < p.degree(); ++k) {
        Rat r = abs(p[k] / p.leading());
        if (r > m) m = r;
    }
    return Rat(1) + m;
}

namespace {

struct Task {
    Rat lo, hi;  // half-open (lo, hi]
    int count;
};

// Isolating intervals of a square-free polynomial; exact rational roots come
// out as degenerate [r, r] intervals.
std::vector<RootInterval> isolate(const Poly& f, const SturmChain& chain) {
    std::vector<RootInterval> out;
    Rat bound = cauchy_root_bound(f);
    int total = chain.count_half_open(-bound, bound);
    if (total == 0) return out;
    std::deque<Task> queue{{-bound, bound, total}};
    while (!queue.empty()) {
        Task t = queue.front();
        queue.pop_front();
        if (t.count == 0) continue;
        if (t.count == 1) {
            out.push_back({t.lo, t.hi, 1});
            continue;
        }
        Rat mid = (t.lo + t.hi) / 2;
        if (sgn(f.eval(mid)) == 0) {
            out.push_back({mid, mid, 1});
            // Re-establish non-root split points around the exact root.
            Rat eps = (t.hi - t.lo) / 4;
            while (true) {
                Rat a = mid - eps, b = mid + eps;
                if (a > t.lo && b < t.hi && sgn(f.eval(a)) != 0 && sgn(f.eval(b)) != 0 &&
                    chain.count_half_open(a, b) == 1) {
                    int left = chain.count_half_open(t.lo, a);
                    int right = chain.count_half_open(b, t.hi);
                    if (left > 0) queue.push_back({t.lo, a, left});
                    if (right > 0) queue.push_back({b, t.hi, right});
                    break;
                }
                eps /= 2;
            }
        } else {
            int left = chain.count_half_open(t.lo, mid);
            if (left > 0) queue.push_back({t.lo, mid, left});
            if (t.count - left > 0) queue.push_back({mid, t.hi, t.count - left});
        }
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) {
        return a.lo + a.hi < b.lo + b.hi;
    });
    return out;
}

// Shrink an isolating interval around its unique root.
void shrink(RootInterval& iv, const Poly& f, const SturmChain& chain) {
    if (iv.lo == iv.hi) return;
    Rat mid = (iv.lo + iv.hi) / 2;
    if (sgn(f.eval(mid)) == 0) {
        iv.lo = iv.hi = mid;
        return;
    }
    if (chain.count_half_open(iv.lo, mid) == 1)
        iv.hi = mid;
    else
        iv.lo = mid;
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const Poly& square_free) {
    SturmChain chain(square_free);
    return isolate(square_free, chain);
}

RootReport count_real_roots(const Poly& p) {
    if (p.is_zero()) throw zero_polynomial("count_real_roots of zero polynomial");
    RootReport rep;
    rep.square_free_factors = square_free_decompose(p);

    struct FactorData {
        Poly f;
        SturmChain chain;
        int mult;
    };
    std::vector<FactorData> factors;
    std::vector<std::pair<RootInterval, size_t>> intervals;  // interval, factor index
    for (const auto& [f, mult] : rep.square_free_factors) {
        factors.push_back({f, SturmChain(f), mult});
        auto ivs = isolate(f, factors.back().chain);
        rep.distinct_count += static_cast<int>(ivs.size());
        rep.total_with_multiplicity += mult * static_cast<int>(ivs.size());
        for (auto& iv : ivs) {
            iv.multiplicity = mult;
            intervals.emplace_back(iv, factors.size() - 1);
        }
    }

    // Refine until interval closures are pairwise disjoint across factors.
    std::sort(intervals.begin(), intervals.end(), [](const auto& a, const auto& b) {
        return a.first.lo + a.first.hi < b.first.lo + b.first.hi;
    });
    bool dirty = intervals.size() > 1;
    while (dirty) {
        dirty = false;
        for (size_t i = 0; i + 1 < intervals.size(); ++i) {
            auto& a = intervals[i];
            auto& b = intervals[i + 1];
            if (a.first.hi >= b.first.lo) {
                shrink(a.first, factors[a.second].f, factors[a.second].chain);
                shrink(b.first, factors[b.second].f, factors[b.second].chain);
                dirty = true;
            }
        }
        if (dirty)
            std::sort(intervals.begin(), intervals.end(), [](const auto& x, const auto& y) {
                return x.first.lo + x.first.hi < y.first.lo + y.first.hi;
            });
    }
    for (auto& [iv, idx] : intervals) rep.isolating_intervals.push_back(iv);
    return rep;
}

int count_in_interval(const Poly& p, const Rat& lo, const Rat& hi, bool closed) {
    if (lo >= hi) throw bad_interval("count_in_interval requires lo < hi");
    if (p.is_zero()) throw zero_polynomial("count_in_interval of zero polynomial");
    Poly g = poly_gcd(p, p.derivative());
    Poly f = g.degree() > 0 ? exact_div(p, g).monic() : p.monic();
    if (f.degree() == 0) return 0;
    SturmChain chain(f);
    int n = chain.count_half_open(lo, hi);  // roots in (lo, hi]
    bool root_at_lo = sgn(p.eval(lo)) == 0;
    bool root_at_hi = sgn(p.eval(hi)) == 0;
    if (closed) {
        if (root_at_lo) ++n;
    } else {
        if (root_at_hi) --n;
    }
    return n;
}

}  // namespace qroots
