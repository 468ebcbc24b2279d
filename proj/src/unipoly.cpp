#include "curvasym/unipoly.hpp"

#include <stdexcept>

namespace curvasym {

void rp_normalize(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rp_add(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    rp_normalize(r);
    return r;
}

RatPoly rp_sub(const RatPoly& a, const RatPoly& b) {
    RatPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    rp_normalize(r);
    return r;
}

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    rp_normalize(r);
    return r;
}

RatPoly rp_scale(const RatPoly& a, const Rational& c) {
    if (c == 0) return {};
    RatPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

RatPoly rp_derivative(const RatPoly& a) {
    if (a.size() <= 1) return {};
    RatPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Rational(static_cast<long>(i));
    rp_normalize(r);
    return r;
}

std::pair<RatPoly, RatPoly> rp_divrem(const RatPoly& a, const RatPoly& b) {
    if (b.empty()) throw std::invalid_argument("division by zero polynomial");
    if (a.size() < b.size()) return {{}, a};
    RatPoly rem = a;
    RatPoly quot(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    for (std::size_t k = a.size(); k-- >= b.size();) {
        Rational c = rem[k] / lead;
        if (c != 0) {
            quot[k - b.size() + 1] = c;
            for (std::size_t j = 0; j < b.size(); ++j) rem[k - b.size() + 1 + j] -= c * b[j];
        }
        if (k == 0) break;
    }
    rp_normalize(quot);
    rp_normalize(rem);
    return {std::move(quot), std::move(rem)};
}

RatPoly rp_div_exact(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = rp_divrem(a, b);
    if (!r.empty()) throw std::logic_error("inexact univariate division");
    return q;
}

RatPoly rp_gcd(RatPoly a, RatPoly b) {
    while (!b.empty()) {
        auto [q, r] = rp_divrem(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        Rational inv = 1 / a.back();
        for (auto& c : a) c *= inv;
    }
    return a;
}

RatPoly rp_square_free_part(const RatPoly& p) {
    if (p.size() <= 1) return p;
    RatPoly g = rp_gcd(p, rp_derivative(p));
    if (rp_degree(g) <= 0) return p;
    return rp_div_exact(p, g);
}

Rational rp_eval(const RatPoly& p, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

Complex rp_eval(const RatPoly& p, Complex x) {
    Complex acc(0.0, 0.0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + to_double(p[i]);
    return acc;
}

RatPoly rp_deflate(const RatPoly& p, const Rational& root) {
    if (p.empty()) throw std::logic_error("deflating zero polynomial");
    // Synthetic division by (x - root).
    RatPoly q(p.size() - 1, Rational(0));
    Rational carry = p.back();
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = p[i] + carry * root;
    }
    if (carry != 0) throw std::logic_error("deflation by a non-root");
    rp_normalize(q);
    return q;
}

}  // namespace curvasym
