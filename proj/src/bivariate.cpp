#include "curvasym/bivariate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace curvasym {

int Poly2::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

int Poly2::degree_first() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int Poly2::degree_second() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

void Poly2::add_term(int i, int j, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly2 Poly2::operator-() const {
    Poly2 r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        }
    }
    return r;
}

Poly2 Poly2::pow(unsigned e) const {
    Poly2 acc(Rational(1));
    Poly2 base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

Rational Poly2::eval(const Rational& a, const Rational& b) const {
    Rational acc(0);
    for (const auto& [k, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < k.first; ++i) t *= a;
        for (int j = 0; j < k.second; ++j) t *= b;
        acc += t;
    }
    return acc;
}

std::vector<Complex> Poly2::eval_first(Complex x0) const {
    std::vector<Complex> out(static_cast<std::size_t>(std::max(0, degree_second() + 1)),
                             Complex(0.0, 0.0));
    for (const auto& [k, c] : terms_) {
        out[static_cast<std::size_t>(k.second)] += to_double(c) * cpow_int(x0, k.first);
    }
    return out;
}

std::vector<RatPoly> Poly2::second_major() const {
    std::vector<RatPoly> rows(static_cast<std::size_t>(std::max(0, degree_second() + 1)));
    for (const auto& [k, c] : terms_) {
        auto& row = rows[static_cast<std::size_t>(k.second)];
        if (static_cast<int>(row.size()) <= k.first) row.resize(k.first + 1, Rational(0));
        row[static_cast<std::size_t>(k.first)] = c;
    }
    for (auto& row : rows) rp_normalize(row);
    return rows;
}

Poly2 Poly2::from_second_major(const std::vector<RatPoly>& rows) {
    Poly2 p;
    for (std::size_t j = 0; j < rows.size(); ++j) {
        for (std::size_t i = 0; i < rows[j].size(); ++i) {
            p.add_term(static_cast<int>(i), static_cast<int>(j), rows[j][i]);
        }
    }
    return p;
}

CPoly2::CPoly2(const ChartPoly& p) {
    for (const auto& [k, c] : p.terms()) terms_[k] = Complex(to_double(c), 0.0);
}

Complex CPoly2::eval(Complex y, Complex z) const {
    Complex acc(0.0, 0.0);
    for (const auto& [k, c] : terms_) acc += c * cpow_int(y, k.first) * cpow_int(z, k.second);
    return acc;
}

namespace {

void append_power(std::ostringstream& os, const char* var, int e, bool& first_factor) {
    if (e == 0) return;
    if (!first_factor) os << "*";
    first_factor = false;
    os << var;
    if (e > 1) os << "^" << e;
}

}  // namespace

std::string to_string(const Poly2& p, const char* first, const char* second) {
    if (p.is_zero()) return "0";
    // Descending total degree, then descending first-variable degree.
    std::vector<std::pair<Poly2::Key, Rational>> items(p.terms().begin(), p.terms().end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second;
        int db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool leading = true;
    for (const auto& [k, c] : items) {
        Rational mag = c;
        if (leading) {
            if (c < 0) {
                os << "-";
                mag = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) mag = -c;
        }
        leading = false;
        bool first_factor = true;
        bool is_constant_term = (k.first == 0 && k.second == 0);
        if (mag != 1 || is_constant_term) {
            os << rational_to_string(mag);
            first_factor = false;
        }
        append_power(os, first, k.first, first_factor);
        append_power(os, second, k.second, first_factor);
    }
    return os.str();
}

TriPoly homogenize(const BivariatePoly& f) {
    TriPoly F;
    int d = f.total_degree();
    for (const auto& [k, c] : f.terms()) {
        F[{k.first, k.second, d - k.first - k.second}] = c;
    }
    return F;
}

BivariatePoly leading_form(const BivariatePoly& f) {
    BivariatePoly lf;
    int d = f.total_degree();
    for (const auto& [k, c] : f.terms()) {
        if (k.first + k.second == d) lf.add_term(k.first, k.second, c);
    }
    return lf;
}

ChartPoly restrict_chart(const TriPoly& F) {
    ChartPoly g;
    for (const auto& [k, c] : F) g.add_term(k[1], k[2], c);
    return g;
}

ChartPoly shift_y(const ChartPoly& g, const Rational& m) {
    if (m == 0) return g;
    ChartPoly out;
    for (const auto& [k, c] : g.terms()) {
        int j = k.first;
        // y^j -> sum_l C(j,l) m^(j-l) y^l
        Rational mp(1);
        for (int l = j; l >= 0; --l) {
            out.add_term(l, k.second, c * binomial(j, l) * mp);
            mp *= m;
        }
    }
    return out;
}

CPoly2 shift_y(const ChartPoly& g, Complex m) {
    CPoly2 out;
    for (const auto& [k, c] : g.terms()) {
        int j = k.first;
        Complex mp(1.0, 0.0);
        for (int l = j; l >= 0; --l) {
            Complex add = to_double(c) * to_double(binomial(j, l)) * mp;
            auto [it, inserted] = out.terms().try_emplace({l, k.second}, add);
            if (!inserted) it->second += add;
            mp *= m;
        }
    }
    // Exact zeros (and only exact ones) are pruned; noise is the expander's concern.
    for (auto it = out.terms().begin(); it != out.terms().end();) {
        if (it->second == Complex(0.0, 0.0)) it = out.terms().erase(it);
        else ++it;
    }
    return out;
}

BivariatePoly apply_shear(const BivariatePoly& f, long lambda) {
    if (lambda == 0) return f;
    BivariatePoly out;
    Rational lam(lambda);
    for (const auto& [k, c] : f.terms()) {
        int i = k.first;
        // x^i -> sum_t C(i,t) lambda^(i-t) x^t y^(i-t)
        Rational lp(1);
        for (int t = i; t >= 0; --t) {
            out.add_term(t, k.second + (i - t), c * binomial(i, t) * lp);
            lp *= lam;
        }
    }
    return out;
}

namespace {

// Content of f in Q[x] (gcd of the y-coefficients) and the primitive part.
RatPoly content_y(const std::vector<RatPoly>& rows) {
    RatPoly g;
    for (const auto& row : rows) {
        if (!row.empty()) g = rp_gcd(g, row);
        if (rp_degree(g) == 0) break;
    }
    return g;
}

std::vector<RatPoly> divide_rows(const std::vector<RatPoly>& rows, const RatPoly& d) {
    std::vector<RatPoly> out(rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
        if (!rows[j].empty()) out[j] = rp_div_exact(rows[j], d);
    }
    return out;
}

int top_row(const std::vector<RatPoly>& rows) {
    for (std::size_t j = rows.size(); j-- > 0;) {
        if (!rows[j].empty()) return static_cast<int>(j);
    }
    return -1;
}

// Pseudo-remainder of a by b in Q[x][y]: lead(b)^(da-db+1) * a mod b, exact in Q[x].
std::vector<RatPoly> pseudo_rem(std::vector<RatPoly> a, const std::vector<RatPoly>& b) {
    int db = top_row(b);
    const RatPoly& lb = b[static_cast<std::size_t>(db)];
    int da = top_row(a);
    while (da >= db && da >= 0) {
        RatPoly la = a[static_cast<std::size_t>(da)];
        // a <- lb*a - la*y^(da-db)*b
        for (auto& row : a) row = rp_mul(row, lb);
        for (int j = 0; j <= db; ++j) {
            if (b[static_cast<std::size_t>(j)].empty()) continue;
            std::size_t tj = static_cast<std::size_t>(j + da - db);
            a[tj] = rp_sub(a[tj], rp_mul(la, b[static_cast<std::size_t>(j)]));
        }
        int nda = top_row(a);
        if (nda >= da) throw std::logic_error("pseudo-division failed to reduce degree");
        da = nda;
    }
    return a;
}

// Primitive part after dividing out the Q[x]-content; rows must be nonzero somewhere.
std::vector<RatPoly> primitive_part(const std::vector<RatPoly>& rows) {
    RatPoly c = content_y(rows);
    if (rp_degree(c) <= 0) return rows;
    return divide_rows(rows, c);
}

// gcd in Q[x][y] via the primitive polynomial remainder sequence; inputs are
// primitivized on entry, result is primitive with monic leading x-coefficient.
std::vector<RatPoly> gcd_primitive(std::vector<RatPoly> a, std::vector<RatPoly> b) {
    if (top_row(a) >= 0) a = primitive_part(a);
    if (top_row(b) >= 0) b = primitive_part(b);
    if (top_row(a) < top_row(b)) std::swap(a, b);
    while (top_row(b) >= 0) {
        std::vector<RatPoly> r = pseudo_rem(a, b);
        if (top_row(r) >= 0) r = primitive_part(r);
        a = std::move(b);
        b = std::move(r);
    }
    // Normalize: monic leading coefficient of the top y-row.
    int da = top_row(a);
    if (da >= 0) {
        const Rational lead = a[static_cast<std::size_t>(da)].back();
        if (lead != 1) {
            Rational inv = 1 / lead;
            for (auto& row : a) row = rp_scale(row, inv);
        }
    }
    return a;
}

std::vector<RatPoly> derivative_y(const std::vector<RatPoly>& rows) {
    if (rows.size() <= 1) return {};
    std::vector<RatPoly> out(rows.size() - 1);
    for (std::size_t j = 1; j < rows.size(); ++j) {
        out[j - 1] = rp_scale(rows[j], Rational(static_cast<long>(j)));
    }
    return out;
}

// Exact division in Q[x][y]; throws std::logic_error when not exact.
std::vector<RatPoly> divide_exact_y(std::vector<RatPoly> a, const std::vector<RatPoly>& b) {
    int db = top_row(b);
    if (db < 0) throw std::invalid_argument("division by zero polynomial");
    int da = top_row(a);
    if (da < 0) return {};
    std::vector<RatPoly> q(static_cast<std::size_t>(da - db + 1));
    const RatPoly& lb = b[static_cast<std::size_t>(db)];
    while (da >= db) {
        RatPoly qc = rp_div_exact(a[static_cast<std::size_t>(da)], lb);
        q[static_cast<std::size_t>(da - db)] = qc;
        for (int j = 0; j <= db; ++j) {
            if (b[static_cast<std::size_t>(j)].empty()) continue;
            std::size_t tj = static_cast<std::size_t>(j + da - db);
            a[tj] = rp_sub(a[tj], rp_mul(qc, b[static_cast<std::size_t>(j)]));
        }
        int nda = top_row(a);
        if (nda >= da) throw std::logic_error("exact bivariate division failed");
        da = nda;
        while (da >= db && a[static_cast<std::size_t>(da)].empty()) --da;
    }
    if (top_row(a) >= 0) throw std::logic_error("inexact bivariate division");
    return q;
}

}  // namespace

BivariatePoly square_free_part(const BivariatePoly& f) {
    if (f.is_zero() || f.total_degree() <= 0) return f;
    std::vector<RatPoly> rows = f.second_major();
    int dy = top_row(rows);
    if (dy <= 0) {
        // No y at all: univariate in x.
        RatPoly sf = rp_square_free_part(rows[0]);
        std::vector<RatPoly> out{sf};
        return Poly2::from_second_major(out);
    }
    RatPoly cont = content_y(rows);
    std::vector<RatPoly> prim = (rp_degree(cont) > 0) ? divide_rows(rows, cont) : rows;
    std::vector<RatPoly> g = gcd_primitive(prim, derivative_y(prim));
    std::vector<RatPoly> reduced = (top_row(g) >= 1) ? divide_exact_y(prim, g) : prim;
    // The pure-x content (content_y is monic, so degree 0 means content 1) contributes
    // vertical lines; keep each exactly once.
    RatPoly cont_sf = rp_square_free_part(cont);
    if (rp_degree(cont_sf) > 0) {
        for (auto& row : reduced) row = rp_mul(row, cont_sf);
    }
    return Poly2::from_second_major(reduced);
}

RatPoly leading_form_slope_poly(const BivariatePoly& lf) {
    int d = lf.total_degree();
    RatPoly p(static_cast<std::size_t>(std::max(0, d + 1)), Rational(0));
    for (const auto& [k, c] : lf.terms()) p[static_cast<std::size_t>(k.second)] = c;
    rp_normalize(p);
    return p;
}

bool vanishes_at_vertical(const BivariatePoly& lf) {
    int d = lf.total_degree();
    return lf.coeff(0, d) == 0;
}

}  // namespace curvasym
