#include "curvasym/puiseux.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "curvasym/errors.hpp"

namespace curvasym {

NewtonPolygon build_newton_polygon(const FracPoly& h) {
    NewtonPolygon np;
    np.support.reserve(h.size());
    for (const auto& [k, c] : h) np.support.push_back(k);

    // Column minima (i, v_i); FracPoly order makes them easy to collect in order.
    std::vector<std::pair<long, Rational>> pts;
    for (const auto& [k, c] : h) {
        if (!pts.empty() && pts.back().first == k.first) continue;  // first = min exponent
        pts.push_back(k);
    }

    // Monotone-chain lower hull; exact rational cross products, collinear points merged.
    std::vector<std::pair<long, Rational>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            Rational cross = Rational(b.first - a.first) * (p.second - a.second) -
                             (b.second - a.second) * Rational(p.first - a.first);
            if (cross <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(p);
    }

    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        PolygonEdge edge;
        edge.from = hull[s];
        edge.to = hull[s + 1];
        edge.slope = (edge.to.second - edge.from.second) /
                     Rational(edge.to.first - edge.from.first);
        edge.char_poly.coeffs.assign(
            static_cast<std::size_t>(edge.to.first - edge.from.first) + 1,
            Complex(0.0, 0.0));
        for (long i = edge.from.first; i <= edge.to.first; ++i) {
            Rational j = edge.from.second + edge.slope * Rational(i - edge.from.first);
            auto it = h.find({i, j});
            if (it != h.end()) {
                edge.char_poly.coeffs[static_cast<std::size_t>(i - edge.from.first)] =
                    it->second;
            }
        }
        np.edges.push_back(std::move(edge));
    }
    return np;
}

FracPoly to_frac_poly(const CPoly2& g, double zero_tol) {
    double max_mod = 0.0;
    for (const auto& [k, c] : g.terms()) max_mod = std::max(max_mod, std::abs(c));
    FracPoly h;
    for (const auto& [k, c] : g.terms()) {
        if (std::abs(c) > zero_tol * max_mod) {
            h[{static_cast<long>(k.first), Rational(k.second)}] = c;
        }
    }
    return h;
}

namespace {

// Dense truncated series over z^(1/N): c[j] is the coefficient of z^(j/N).
using ZSeries = std::vector<Complex>;

ZSeries zs_mul(const ZSeries& a, const ZSeries& b) {
    ZSeries r(a.size(), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == Complex(0.0, 0.0)) continue;
        for (std::size_t j = 0; i + j < r.size() && j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

ZSeries zs_div(const ZSeries& n, const ZSeries& d) {
    ZSeries q(n.size(), Complex(0.0, 0.0));
    for (std::size_t k = 0; k < n.size(); ++k) {
        Complex acc = n[k];
        for (std::size_t t = 1; t <= k; ++t) {
            if (t < d.size()) acc -= d[t] * q[k - t];
        }
        q[k] = acc / d[0];
    }
    return q;
}

long integer_index(const Rational& e, long N) {
    Rational scaled = e * Rational(N);
    if (denominator_long(scaled) != 1) {
        throw ExpansionError("exponent left the 1/N lattice during lifting");
    }
    return numerator_long(scaled);
}

struct Engine {
    const ExpandOptions& opts;
    Rational W;  // series complete through this exponent
    std::vector<PuiseuxSeries> raw;
    std::vector<std::string> diagnostics;

    void diag(const std::string& msg) { diagnostics.push_back(msg); }

    void emit(const std::vector<PuiseuxTerm>& path, long N, int copies) {
        PuiseuxSeries s;
        s.ramification = N;
        s.watermark = W;
        for (const auto& t : path) {
            if (t.exponent <= W && t.coeff != Complex(0.0, 0.0)) s.terms.push_back(t);
        }
        for (int c = 0; c < copies; ++c) raw.push_back(s);
    }

    FracPoly substitute(const FracPoly& h, const Rational& gamma, Complex a) const {
        std::map<std::pair<long, Rational>, Complex, FracKeyLess> acc;
        std::map<std::pair<long, Rational>, double, FracKeyLess> max_part;
        for (const auto& [k, c] : h) {
            const long i = k.first;
            Rational ze = k.second + gamma * Rational(i);
            // y^i with y = z^gamma (a + u): binomial expansion over the new unknown u.
            Complex apow(1.0, 0.0);  // a^(i-k) built from the top down
            std::vector<Complex> apows(static_cast<std::size_t>(i) + 1);
            for (long t = 0; t <= i; ++t) {
                apows[static_cast<std::size_t>(t)] = apow;  // a^t
                apow *= a;
            }
            for (long k2 = 0; k2 <= i; ++k2) {
                Complex part = c * to_double(binomial(static_cast<unsigned>(i),
                                                      static_cast<unsigned>(k2))) *
                               apows[static_cast<std::size_t>(i - k2)];
                std::pair<long, Rational> key{k2, ze};
                acc[key] += part;
                double m = std::abs(part);
                auto [it, fresh] = max_part.try_emplace(key, m);
                if (!fresh && m > it->second) it->second = m;
            }
        }
        // Cancellation-aware cleanup: a slot whose sum is dwarfed by its largest
        // contribution is numerically zero.
        FracPoly out;
        for (const auto& [k, v] : acc) {
            if (std::abs(v) > opts.tol * max_part[k]) out[k] = v;
        }
        if (out.empty()) throw ExpansionError("substitution annihilated the polynomial");
        // Normalize so the minimal z-exponent is zero.
        Rational L(0);
        bool first = true;
        for (const auto& [k, v] : out) {
            if (first || k.second < L) L = k.second;
            first = false;
        }
        if (L != 0) {
            FracPoly shifted;
            for (const auto& [k, v] : out) shifted[{k.first, k.second - L}] = v;
            out = std::move(shifted);
        }
        return out;
    }

    void lift(const FracPoly& h, std::vector<PuiseuxTerm>& path, const Rational& B,
              long N) {
        Rational rel = W - B;
        long M = 0;
        if (rel > 0) {
            Rational scaled = rel * Rational(N);
            mpz_class fl;
            mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num().get_mpz_t(),
                       scaled.get_den().get_mpz_t());
            if (!fl.fits_slong_p()) throw ExpansionError("lifting depth overflow");
            M = fl.get_si();
        }
        const std::size_t len = static_cast<std::size_t>(M) + 1;

        // y-derivative once; both h and hy are evaluated as truncated series in u.
        FracPoly hy;
        for (const auto& [k, c] : h) {
            if (k.first >= 1) hy[{k.first - 1, k.second}] = c * static_cast<double>(k.first);
        }
        if (hy.empty()) throw ExpansionError("lifting on a y-free polynomial");

        long imax = 0;
        double hmax = 0.0;
        for (const auto& [k, c] : h) {
            imax = std::max(imax, k.first);
            hmax = std::max(hmax, std::abs(c));
        }

        auto eval = [&](const FracPoly& p, const ZSeries& u) {
            // Powers of u up to the max y-degree, all truncated.
            std::vector<ZSeries> pw;
            pw.reserve(static_cast<std::size_t>(imax) + 1);
            ZSeries one(len, Complex(0.0, 0.0));
            one[0] = Complex(1.0, 0.0);
            pw.push_back(one);
            for (long i = 1; i <= imax; ++i) pw.push_back(zs_mul(pw.back(), u));
            ZSeries r(len, Complex(0.0, 0.0));
            for (const auto& [k, c] : p) {
                long j0 = integer_index(k.second, N);
                if (j0 > M) continue;
                const ZSeries& up = pw[static_cast<std::size_t>(k.first)];
                for (std::size_t j = 0; j0 + static_cast<long>(j) <= M && j < up.size();
                     ++j) {
                    r[static_cast<std::size_t>(j0) + j] += c * up[j];
                }
            }
            return r;
        };

        ZSeries u(len, Complex(0.0, 0.0));
        int iterations = 3;
        while ((1L << iterations) < M + 2) ++iterations;
        iterations += 2;
        for (int it = 0; it < iterations; ++it) {
            ZSeries f = eval(h, u);
            ZSeries fd = eval(hy, u);
            if (std::abs(fd[0]) <= 1e-12 * std::max(1.0, hmax)) {
                throw ExpansionError("Newton lifting hit a degenerate derivative");
            }
            u = [&] {
                ZSeries delta = zs_div(f, fd);
                ZSeries next(len);
                for (std::size_t j = 0; j < len; ++j) next[j] = u[j] - delta[j];
                return next;
            }();
        }

        // The lifted tail must actually solve the equation to truncation depth.
        ZSeries resid = eval(h, u);
        double rmax = 0.0;
        for (const auto& v : resid) rmax = std::max(rmax, std::abs(v));
        if (rmax > 1e-6 * std::max(1.0, hmax)) {
            throw ExpansionError("Newton lifting failed to converge");
        }
        double uscale = 0.0;
        for (std::size_t j = 1; j < len; ++j) uscale = std::max(uscale, std::abs(u[j]));
        if (std::abs(u[0]) > 1e-6 * std::max(1.0, uscale)) {
            throw ExpansionError("lifted solution has a spurious constant term");
        }

        std::size_t base_len = path.size();
        for (long j = 1; j <= M; ++j) {
            Complex c = u[static_cast<std::size_t>(j)];
            if (std::abs(c) > opts.tol * uscale && uscale > 0.0) {
                path.push_back({B + Rational(j) / Rational(N), c});
            }
        }
        emit(path, N, 1);
        path.resize(base_len);
    }

    void explore(const FracPoly& h, std::vector<PuiseuxTerm>& path, const Rational& B,
                 long Q, int singular_depth) {
        long i_low = h.begin()->first.first;
        if (i_low >= 1) {
            // y = 0 solves the residual exactly: the accumulated path terminates here.
            if (i_low > 1) {
                diag("repeated exact zero solution (multiplicity " +
                     std::to_string(i_low) + "); input may not be square-free");
            }
            emit(path, Q, static_cast<int>(i_low));
        }

        NewtonPolygon np = build_newton_polygon(h);
        for (const auto& edge : np.edges) {
            if (!(edge.slope < 0)) continue;
            Rational gamma = -edge.slope;
            long q_step = denominator_long(gamma * Rational(Q));
            long Q2 = Q * q_step;
            if (Q2 > 1000000L) throw ExpansionError("ramification index overflow");

            std::vector<RootCluster> roots = find_roots(edge.char_poly, {opts.tol, 200});
            for (std::size_t a = 0; a < roots.size(); ++a) {
                for (std::size_t b = a + 1; b < roots.size(); ++b) {
                    double sep = std::abs(roots[a].value - roots[b].value);
                    if (sep < 10.0 * opts.tol * (1.0 + std::abs(roots[a].value))) {
                        std::ostringstream os;
                        os << "root clustering ambiguity: characteristic roots "
                           << "separated by " << sep;
                        diag(os.str());
                    }
                }
            }

            for (const auto& rc : roots) {
                Rational E = B + gamma;
                path.push_back({E, rc.value});
                FracPoly h2 = substitute(h, gamma, rc.value);
                // For an exact m-fold characteristic root the u^j entries of the
                // lowest z-stratum vanish identically for j < m. The numeric root
                // leaves cancellation noise there, which would fake extra edges.
                for (long j = 0; j < rc.multiplicity; ++j) {
                    h2.erase({j, Rational(0)});
                }
                if (h2.empty()) {
                    throw ExpansionError("substitution annihilated the polynomial");
                }
                if (rc.multiplicity == 1) {
                    if (opts.polygon_only) {
                        if (E >= W) emit(path, Q2, 1);
                        else explore(h2, path, E, Q2, singular_depth);
                    } else {
                        lift(h2, path, E, Q2);
                    }
                } else {
                    if (singular_depth + 1 > opts.singular_cap) {
                        throw ExpansionError("polygon recursion cap exceeded");
                    }
                    explore(h2, path, E, Q2, singular_depth + 1);
                }
                path.pop_back();
            }
        }
    }
};

// Total order used to report classes deterministically: ramification first, then the
// term sequence (exponent ascending, coefficient real part descending).
bool class_order(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    if (a.ramification != b.ramification) return a.ramification < b.ramification;
    std::size_t n = std::min(a.terms.size(), b.terms.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (a.terms[k].exponent != b.terms[k].exponent) {
            return a.terms[k].exponent < b.terms[k].exponent;
        }
        double dr = a.terms[k].coeff.real() - b.terms[k].coeff.real();
        if (std::abs(dr) > 1e-9) return dr > 0;
        double di = a.terms[k].coeff.imag() - b.terms[k].coeff.imag();
        if (std::abs(di) > 1e-9) return di > 0;
    }
    return a.terms.size() < b.terms.size();
}

}  // namespace

ExpansionResult expand_at_origin(const CPoly2& g, const ExpandOptions& opts) {
    if (g.is_zero()) throw ExpansionError("expansion of the zero polynomial");
    FracPoly h = to_frac_poly(g, opts.tol);
    if (h.empty()) throw ExpansionError("expansion of a numerically zero polynomial");

    // Normalize the global z-order to zero (harmless for solutions, keeps v-values small).
    Rational L(0);
    bool first = true;
    for (const auto& [k, v] : h) {
        if (first || k.second < L) L = k.second;
        first = false;
    }
    if (L != 0) {
        FracPoly shifted;
        for (const auto& [k, v] : h) shifted[{k.first, k.second - L}] = v;
        h = std::move(shifted);
    }
    if (h.count({0, Rational(0)}) > 0) {
        throw ExpansionError("chart polynomial does not vanish at the origin");
    }

    Engine eng{opts, Rational(1) - opts.min_exponent, {}, {}};

    // Solution budget: exact zero column plus the horizontal extent of negative edges.
    long i_low = h.begin()->first.first;
    long expected = i_low;
    {
        NewtonPolygon np = build_newton_polygon(h);
        for (const auto& e : np.edges) {
            if (e.slope < 0) expected += e.to.first - e.from.first;
        }
    }

    std::vector<PuiseuxTerm> path;
    eng.explore(h, path, Rational(0), 1, 0);

    // Group raw solutions into conjugacy classes via canonical forms.
    struct Group {
        PuiseuxSeries rep;
        int members = 0;
    };
    std::vector<Group> groups;
    const double cls_tol = std::max(1e-9, 100.0 * opts.tol);
    for (const auto& s : eng.raw) {
        PuiseuxSeries canon = canonical_representative(s);
        bool placed = false;
        for (auto& grp : groups) {
            if (grp.rep.ramification != canon.ramification) continue;
            if (grp.rep.terms.size() != canon.terms.size()) continue;
            bool match = true;
            for (std::size_t k = 0; k < canon.terms.size() && match; ++k) {
                if (grp.rep.terms[k].exponent != canon.terms[k].exponent) match = false;
                else if (std::abs(grp.rep.terms[k].coeff - canon.terms[k].coeff) >
                         cls_tol * (1.0 + std::abs(grp.rep.terms[k].coeff))) {
                    match = false;
                }
            }
            if (match) {
                grp.members += 1;
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({std::move(canon), 1});
    }

    ExpansionResult result;
    result.diagnostics = std::move(eng.diagnostics);
    long total = 0;
    for (const auto& grp : groups) {
        long N = grp.rep.ramification;
        int copies = grp.members / static_cast<int>(N);
        if (grp.members % N != 0) {
            std::ostringstream os;
            os << "conjugacy accounting: " << grp.members << " solutions in a class of "
               << "ramification " << N;
            result.diagnostics.push_back(os.str());
            copies = std::max(copies, 1);
        }
        for (int c = 0; c < copies; ++c) result.classes.push_back(grp.rep);
        total += N * copies;
    }
    if (total != expected) {
        std::ostringstream os;
        os << "class count " << total << " does not match polygon budget " << expected;
        result.diagnostics.push_back(os.str());
    }
    std::sort(result.classes.begin(), result.classes.end(), class_order);
    return result;
}

std::vector<PuiseuxSeries> expand_at_origin(const CPoly2& g, const Rational& min_exponent,
                                            double tol) {
    ExpandOptions opts;
    opts.min_exponent = min_exponent;
    opts.tol = tol;
    return expand_at_origin(g, opts).classes;
}

std::vector<PuiseuxTerm> conjugate_terms(const std::vector<PuiseuxTerm>& terms, long N,
                                         long l) {
    std::vector<PuiseuxTerm> out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
        Rational scaled = t.exponent * Rational(N);
        if (denominator_long(scaled) != 1) {
            throw std::invalid_argument("term exponent outside the 1/N lattice");
        }
        long i = numerator_long(scaled);
        out.push_back({t.exponent, t.coeff * root_of_unity(l * (i % N), N)});
    }
    return out;
}

std::vector<PuiseuxSeries> conjugates(const PuiseuxSeries& s) {
    std::vector<PuiseuxSeries> out;
    out.reserve(static_cast<std::size_t>(s.ramification));
    for (long l = 0; l < s.ramification; ++l) {
        PuiseuxSeries c = s;
        c.terms = conjugate_terms(s.terms, s.ramification, l);
        out.push_back(std::move(c));
    }
    return out;
}

int compare_coeff_sequences(const std::vector<PuiseuxTerm>& a,
                            const std::vector<PuiseuxTerm>& b, double tie_tol) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        double dr = a[k].coeff.real() - b[k].coeff.real();
        if (dr > tie_tol) return 1;
        if (dr < -tie_tol) return -1;
        double di = a[k].coeff.imag() - b[k].coeff.imag();
        if (di > tie_tol) return 1;
        if (di < -tie_tol) return -1;
    }
    if (a.size() != b.size()) return a.size() > b.size() ? 1 : -1;
    return 0;
}

long canonical_conjugation_index(const std::vector<PuiseuxTerm>& terms, long N) {
    long best = 0;
    std::vector<PuiseuxTerm> best_terms = terms;
    for (long l = 1; l < N; ++l) {
        std::vector<PuiseuxTerm> cand = conjugate_terms(terms, N, l);
        if (compare_coeff_sequences(cand, best_terms, 1e-9) > 0) {
            best = l;
            best_terms = std::move(cand);
        }
    }
    return best;
}

PuiseuxSeries canonical_representative(const PuiseuxSeries& s) {
    long l = canonical_conjugation_index(s.terms, s.ramification);
    if (l == 0) return s;
    PuiseuxSeries out = s;
    out.terms = conjugate_terms(s.terms, s.ramification, l);
    return out;
}

Complex evaluate_terms(const std::vector<PuiseuxTerm>& terms, long N, Complex z0,
                       long leaf) {
    if (z0 == Complex(0.0, 0.0)) {
        throw std::invalid_argument("series evaluation at z = 0");
    }
    Complex w = principal_root(z0, N) * root_of_unity(leaf, N);
    Complex acc(0.0, 0.0);
    for (const auto& t : terms) {
        Rational scaled = t.exponent * Rational(N);
        if (denominator_long(scaled) != 1) {
            throw std::invalid_argument("term exponent outside the 1/N lattice");
        }
        acc += t.coeff * cpow_int(w, numerator_long(scaled));
    }
    return acc;
}

Complex evaluate_series(const PuiseuxSeries& s, Complex z0, long leaf) {
    return evaluate_terms(s.terms, s.ramification, z0, leaf);
}

}  // namespace curvasym
