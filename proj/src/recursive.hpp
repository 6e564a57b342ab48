#pragma once

// Polynomials in one distinguished variable, stored as dense coefficient
// vectors over a coefficient ring C (Scalar, UniPoly or MultiPoly).

#include "linefan/multipoly.hpp"
#include "linefan/unipoly.hpp"

#include <vector>

namespace linefan::detail {

inline bool is_zero(const Scalar& c) { return c.is_zero(); }
inline bool is_zero(const UniPoly& c) { return c.is_zero(); }
inline bool is_zero(const MultiPoly& c) { return c.is_zero(); }

inline Scalar exact(const Scalar& a, const Scalar& b) { return a / b; }
inline UniPoly exact(const UniPoly& a, const UniPoly& b) { return exact_div(a, b); }
inline MultiPoly exact(const MultiPoly& a, const MultiPoly& b) { return a.exact_quotient(b); }

template <typename C>
using Rec = std::vector<C>;

template <typename C>
void trim(Rec<C>& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <typename C>
int degree(const Rec<C>& p) {
    return static_cast<int>(p.size()) - 1;
}

template <typename C>
C power(const C& base, int e, const C& one) {
    C r = one;
    for (int k = 0; k < e; ++k) r = r * base;
    return r;
}

// lc(b)^(deg a - deg b + 1) * a mod b
template <typename C>
Rec<C> prem(Rec<C> a, const Rec<C>& b, const C& one) {
    int db = degree(b);
    int e = degree(a) - db + 1;
    if (e <= 0) return a;
    const C& lb = b.back();
    while (degree(a) >= db && !a.empty()) {
        int shift = degree(a) - db;
        C la = a.back();
        for (auto& c : a) c = c * lb;
        for (int j = 0; j <= db; ++j) {
            if (!is_zero(b[j])) a[shift + j] = a[shift + j] - la * b[j];
        }
        trim(a);
        --e;
    }
    if (e > 0) {
        C f = power(lb, e, one);
        for (auto& c : a) c = c * f;
    }
    return a;
}

// Subresultant PRS resultant of a and b (both nonzero).
template <typename C>
C subresultant(Rec<C> a, Rec<C> b, const C& one) {
    int s = 1;
    if (degree(a) < degree(b)) {
        if (degree(a) % 2 == 1 && degree(b) % 2 == 1) s = -1;
        std::swap(a, b);
    }
    auto sign = [&](const C& v) { return s < 0 ? C(-v) : v; };
    if (degree(b) == 0) return sign(power(b[0], degree(a), one));
    C g = one;
    C h = one;
    for (;;) {
        int delta = degree(a) - degree(b);
        if (degree(a) % 2 == 1 && degree(b) % 2 == 1) s = -s;
        Rec<C> r = prem(a, b, one);
        a = std::move(b);
        if (r.empty()) return one - one;
        C divisor = g * power(h, delta, one);
        for (auto& c : r) c = exact(c, divisor);
        b = std::move(r);
        g = a.back();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = exact(power(g, delta, one), power(h, delta - 1, one));
        }
        if (degree(b) == 0) break;
    }
    int da = degree(a);
    C res = exact(power(b[0], da, one), power(h, da - 1, one));
    return sign(res);
}

}  // namespace linefan::detail
