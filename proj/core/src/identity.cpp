#include <qpart/identity.hpp>

#include <qpart/bijection.hpp>
#include <qpart/genfun.hpp>
#include <qpart/hypergeom.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace qpart
{

namespace
{

// ---- small algebra helpers -------------------------------------------------

QSeries mono(long c, Exponent e)
{
    return QSeries::monomial(Integer(c), e);
}

QSeries one()
{
    return QSeries::one();
}

long tri(long j)
{
    return j * (j + 1) / 2;
}

long alt(long j)
{
    return j % 2 == 0 ? 1 : -1;
}

long floor_div(long a, long b)
{
    const long q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

QSeries delta(bool cond, long c, Exponent e)
{
    return cond ? mono(c, e) : QSeries();
}

// (sign q^e; q^step)_n, exact
QSeries poch(long sign, Exponent e, Exponent step, Exponent n)
{
    return pochhammer({static_cast<int>(sign), e}, step, n);
}

QSeries poch_inf(long sign, Exponent e, Exponent step, Exponent order)
{
    return pochhammer({static_cast<int>(sign), e}, step, std::nullopt, order);
}

QSeries gb(Exponent top, Exponent bottom, Exponent base = 1)
{
    return gauss_binomial(top, bottom, base);
}

// Coefficients at exponents >= e only.
QSeries drop_below(const QSeries &s, Exponent e)
{
    QSeries out = s.order() ? QSeries::zero(s.order()) : QSeries();
    for (const auto &[x, c] : s.terms()) {
        if (x >= e) {
            out += QSeries::monomial(c, x);
        }
    }
    return out;
}

QSeries oracle(Family f, Exponent T, long m = 0, long L = 0, long k = 0, long r = 0)
{
    return oracle_series({f, m, L, k, r, T});
}

QSeries bounded_oracle(Family f, long m, long L)
{
    return oracle_series({f, m, L, 0, 0, std::nullopt});
}

QSeries formula(Family f, Formula fm, std::optional<Exponent> T, long m = 0, long L = 0, long k = 0, long r = 0,
                long period = 1)
{
    return formula_series({f, m, L, k, r, T}, fm, period);
}

QSeries Q(long m, Exponent T)
{
    return oracle(Family::Q, T, m);
}
QSeries QL(long m, long L)
{
    return bounded_oracle(Family::QL, m, L);
}
QSeries PL(long m, long L)
{
    return bounded_oracle(Family::PL, m, L);
}
QSeries G(long k, Exponent T)
{
    return oracle(Family::G, T, 0, 0, k);
}
QSeries C(long k, Exponent T)
{
    return oracle(Family::C, T, 0, 0, k);
}
QSeries Chat(long k, Exponent T)
{
    return oracle(Family::Chat, T, 0, 0, k);
}
QSeries Ghat(long k, Exponent T)
{
    return G(k, T) - G(k - 1, T);
}
QSeries Etilde(long r, Exponent T)
{
    return oracle(Family::Etilde, T, 0, 0, 0, r);
}

long get(const ParamMap &p, const char *name)
{
    return p.at(name);
}

// ---- grids -----------------------------------------------------------------

struct Axis {
    std::string name;
    long lo;
    long hi;
};

std::vector<ParamMap> grid(const std::vector<Axis> &axes, const std::function<bool(const ParamMap &)> &keep = {})
{
    std::vector<ParamMap> out{ParamMap{}};
    for (const Axis &a : axes) {
        std::vector<ParamMap> next;
        for (const ParamMap &p : out) {
            for (long v = a.lo; v <= a.hi; ++v) {
                ParamMap q = p;
                q[a.name] = v;
                next.push_back(std::move(q));
            }
        }
        out = std::move(next);
    }
    if (keep) {
        std::erase_if(out, [&](const ParamMap &p) { return !keep(p); });
    }
    return out;
}

std::string q_power(long sign, long e)
{
    std::string s = sign < 0 ? "-" : "";
    return s + "q^" + std::to_string(e);
}

// ---- shared sides ----------------------------------------------------------

// sum_{j=1}^L (-1)^{j-1} q^{T_{j-1}+kj} (1-q^j) / (q)_{L-j}
QSeries crank_finite_lhs(long k, long L, Exponent T)
{
    QSeries out = QSeries::zero(T);
    for (long j = 1; j <= L; ++j) {
        const QSeries num = mono(alt(j - 1), tri(j - 1) + k * j) * QSeries::one_minus({1, j});
        out += divide(num, q_factorial(L - j), T);
    }
    return out;
}

// (1-q) sum_{mu=0}^{L-1} q^{(mu+1)(mu+k)+mu} / (q)_mu [L-1+k over mu+k]
QSeries crank_finite_rhs(long k, long L, Exponent T)
{
    QSeries out = QSeries::zero(T);
    for (long mu = 0; mu <= L - 1; ++mu) {
        out += divide(gb(L - 1 + k, mu + k).shifted((mu + 1) * (mu + k) + mu), q_factorial(mu), T);
    }
    return (out * QSeries::one_minus({1, 1})).truncated(T);
}

// (1-q) sum_{i=0}^{L-1} q^{i^2+(2+k)i+k} / (q)_i [L-1+k over i+k]
QSeries crank_finite_final(long k, long L, Exponent T)
{
    QSeries out = QSeries::zero(T);
    for (long i = 0; i <= L - 1; ++i) {
        out += divide(gb(L - 1 + k, i + k).shifted(i * i + (2 + k) * i + k), q_factorial(i), T);
    }
    return (out * QSeries::one_minus({1, 1})).truncated(T);
}

// Both sides of the finite crank identity times (q)_{L-1}, as polynomials.
IdentitySides crank_finite_cleared(long k, long L)
{
    QSeries lhs;
    for (long j = 1; j <= L; ++j) {
        lhs += mono(alt(j - 1), tri(j - 1) + k * j) * QSeries::one_minus({1, j}) * poch(1, L - j + 1, 1, j - 1);
    }
    QSeries rhs;
    for (long mu = 0; mu <= L - 1; ++mu) {
        rhs += gb(L - 1 + k, mu + k).shifted((mu + 1) * (mu + k) + mu) * poch(1, mu + 1, 1, L - 1 - mu);
    }
    return {lhs, rhs * QSeries::one_minus({1, 1})};
}

QSeries distinct_odd(Exponent T)
{
    return distinct_odd_generating(T);
}

// Left side of the free-parameter double sum at a = q^A.
QSeries free_parameter_lhs(long A, Exponent T)
{
    QSeries out = QSeries::zero(T);
    for (long j = 0; j * j <= T; ++j) {
        for (long i = 0; j * j + 2 * i <= T; ++i) {
            const QSeries num = poch(1, A + 2 * i + 2, 2, j) * poch(1, A + 2 * i + 2 * j, 2, i);
            const QSeries den = poch(1, 2, 2, j) * poch(1, 2, 2, i);
            out += divide(num.shifted(j * j + 2 * i), den, T);
        }
    }
    return out;
}

// E sum_n (-a)^n q^{2n^2+n} at a = q^A.
QSeries free_parameter_closed(long A, Exponent T)
{
    QSeries s;
    for (long n = 0; 2 * n * n + n + A * n <= T; ++n) {
        s += mono(alt(n), 2 * n * n + n + A * n);
    }
    return (s * distinct_odd(T)).truncated(T);
}

QSeries free_parameter_quadruple(long A, Exponent T)
{
    const auto e = [A](long i, long j, long s, long t) {
        return (j + t) * (j + t) + 2 * (i + s) + 2 * s * (i + j + s + t) + s * (s - 1) + t * t + t + 2 * t * (i + s) +
               A * (s + t);
    };
    QSeries out = QSeries::zero(T);
    // The exponent is nondecreasing in each index, so each loop stops at the
    // first overshoot with the inner indices at zero.
    for (long i = 0; e(i, 0, 0, 0) <= T; ++i) {
        for (long j = 0; e(i, j, 0, 0) <= T; ++j) {
            for (long s = 0; e(i, j, s, 0) <= T; ++s) {
                for (long t = 0; e(i, j, s, t) <= T; ++t) {
                    const QSeries den = poch(1, 2, 2, i) * poch(1, 2, 2, j) * poch(1, 2, 2, s) * poch(1, 2, 2, t);
                    out += divide(mono(alt(s + t), e(i, j, s, t)), den, T);
                }
            }
        }
    }
    return out;
}

QSeries free_parameter_double(long A, Exponent T)
{
    QSeries out = QSeries::zero(T);
    for (long s = 0; 3 * s * s + s + A * s <= T; ++s) {
        for (long t = 0;; ++t) {
            const long e = 2 * t * t + 4 * s * t + 3 * s * s + s + t + A * (s + t);
            if (e > T) {
                break;
            }
            const QSeries ratio = divide(poch_inf(-1, 1 + 2 * s + 2 * t, 2, T), poch_inf(1, 2 + 2 * s + 2 * t, 2, T), T);
            out += divide(mono(alt(s + t), e) * ratio, poch(1, 2, 2, s) * poch(1, 2, 2, t), T);
        }
    }
    return out;
}

QSeries free_parameter_single(long A, Exponent T)
{
    QSeries s = QSeries::zero(T);
    for (long n = 0; 2 * n * n + n + A * n <= T; ++n) {
        QSeries inner;
        for (long t = 0; t <= n; ++t) {
            inner += gb(n, t, 2).shifted(t * t);
        }
        s += divide(mono(alt(n), 2 * n * n + n + A * n) * inner, poch(-1, 1, 2, n), T);
    }
    return (s * distinct_odd(T)).truncated(T);
}

// Heine's second transformation with c -> 0 at a = q^2, b = q^{1-L}, z = q^{L+k}:
// (bz)_inf/(z)_inf sum_i (b)_i / ((q)_i (bz)_i) (-1)^i q^{T_{i-1}} (az)^i.
QSeries heine_limit_rhs(long k, long L, Exponent T)
{
    QSeries s = QSeries::zero(T);
    for (long i = 0; i <= L - 1; ++i) {
        const QSeries num = poch(1, 1 - L, 1, i).shifted(tri(i - 1) + (L + k + 2) * i) * Integer(alt(i));
        s += divide(num, q_factorial(i) * poch(1, 1 + k, 1, i), T);
    }
    const QSeries ratio = divide(poch_inf(1, 1 + k, 1, T), poch_inf(1, L + k, 1, T), T);
    return (ratio * s).truncated(T);
}

QSeries heine_sum_form(long k, long L, Exponent T)
{
    QSeries s = QSeries::zero(T);
    for (long i = 0; i <= L - 1; ++i) {
        const QSeries num = poch(1, 1 - L, 1, i).shifted(tri(i - 1) + (L + k + 2) * i) * Integer(alt(i));
        s += divide(num, q_factorial(i) * poch(1, 1 + k, 1, i), T);
    }
    const QSeries pre = divide(QSeries::one_minus({1, 1}).shifted(k) * poch(1, 1 + k, 1, L - 1), q_factorial(L - 1), T);
    return (pre * s).truncated(T);
}

QSeries tabulate(long count, const std::function<Integer(long)> &coeff)
{
    QSeries out;
    for (long n = 0; n < count; ++n) {
        out += QSeries::monomial(coeff(n), n);
    }
    return out;
}

// sum_n modulus * count(k, modulus, modulus*n + offset) q^n against sum_n p(modulus*n + offset) q^n.
IdentitySides congruence_sides(long modulus, long offset, long nmax, long k, bool use_crank)
{
    const QSeries p = partition_generating(modulus * nmax + offset);
    const QSeries lhs = tabulate(nmax + 1, [&](long n) {
        const RankCrankTable t = rank_crank_table(modulus, modulus * n + offset);
        const auto &counts = use_crank ? t.crank_counts : t.rank_counts;
        return Integer(modulus * counts[static_cast<std::size_t>(k)]);
    });
    const QSeries rhs = tabulate(nmax + 1, [&](long n) { return p.coefficient(modulus * n + offset); });
    return {lhs, rhs};
}

// ---- registry ----------------------------------------------------------------

using Def = IdentityDefinition;
constexpr auto EXACT = CompareMode::exact_polynomial;
constexpr auto TRUNC = CompareMode::truncated_series;

std::vector<Def> make_registry()
{
    std::vector<Def> r;
    const auto add = [&r](Def d) {
        if (d.grid.empty()) {
            d.grid.push_back({});
        }
        r.push_back(std::move(d));
    };

    // -- pentagonal ------------------------------------------------------------
    add({"pentagonal.euler", "(q)_inf^{-1} sum_{j in Z} (-1)^j q^{j(3j-1)/2} = 1", TRUNC, 100, true, {}, {},
         [](const ParamMap &, Exponent T) {
             QSeries s;
             for (long j = -T; j <= T; ++j) {
                 if (j * (3 * j - 1) / 2 <= T) {
                     s += mono(alt(j), j * (3 * j - 1) / 2);
                 }
             }
             return IdentitySides{(s * partition_generating(T)).truncated(T), one()};
         }});
    add({"pentagonal.schur", "sum_j (-1)^j q^{j(3j-1)/2} [2L over L+floor(3j/2)] = 1", EXACT, 0, true,
         grid({{"L", 0, 12}}), {}, [](const ParamMap &p, Exponent) {
             const long L = get(p, "L");
             QSeries s;
             for (long j = -2 * L - 2; j <= 2 * L + 2; ++j) {
                 s += (gb(2 * L, L + floor_div(3 * j, 2)) * Integer(alt(j))).shifted(j * (3 * j - 1) / 2);
             }
             return IdentitySides{s, one()};
         }});
    add({"pentagonal.polynomial-euler", "sum_j (-1)^j q^{j(3j+1)/2} [2L-j over L+j] = 1", EXACT, 0, true,
         grid({{"L", 0, 12}}), {}, [](const ParamMap &p, Exponent) {
             const long L = get(p, "L");
             QSeries s;
             for (long j = -2 * L - 2; j <= 2 * L + 2; ++j) {
                 s += (gb(2 * L - j, L + j) * Integer(alt(j))).shifted(j * (3 * j + 1) / 2);
             }
             return IdentitySides{s, one()};
         }});
    add({"pentagonal.polynomial",
         "sum_j (-1)^j q^{j(3j-1)/2+sigma j} [2L+sigma-au(n,j) over L+sigma+floor((n+1)j/n)] = 1 - delta_{sigma,-1}",
         EXACT, 0, true, grid({{"n", 1, 6}, {"sigma", -1, 1}, {"L", 0, 12}}), {}, [](const ParamMap &p, Exponent) {
             const int sigma = static_cast<int>(get(p, "sigma"));
             return IdentitySides{pentagonal_sum_general(get(p, "n"), sigma, get(p, "L")),
                                  sigma == -1 ? QSeries() : one()};
         }});

    // -- unbounded rank ---------------------------------------------------------
    add({"rank.complement", "Q_m + Q_{1-m} + 1 = 1/(q)_inf", TRUNC, 40, true, grid({{"m", -5, 5}}), {},
         [](const ParamMap &p, Exponent T) {
             const long m = get(p, "m");
             return IdentitySides{Q(m, T) + Q(1 - m, T) + one(), partition_generating(T)};
         }});
    add({"rank.adjoint", "Q_m = q^{m+1} (Q_{-2-m} + 1), m >= 0", TRUNC, 40, true, grid({{"m", 0, 5}}), {},
         [](const ParamMap &p, Exponent T) {
             const long m = get(p, "m");
             return IdentitySides{Q(m, T), (Q(-2 - m, T) + one()).shifted(m + 1)};
         }});
    add({"rank.adjoint-sum", "Q_m + q^{m+1} Q_{m+3} = q^{m+1}/(q)_inf, m >= 0", TRUNC, 40, true,
         grid({{"m", 0, 5}}), {}, [](const ParamMap &p, Exponent T) {
             const long m = get(p, "m");
             return IdentitySides{Q(m, T) + Q(m + 3, T).shifted(m + 1), partition_generating(T).shifted(m + 1)};
         }});
    add({"rank.tail-sum", "Q_m = (q)_inf^{-1} sum_{j>=1} (-1)^{j-1} q^{j(3j-1)/2+mj} against the rank census",
         TRUNC, 40, true, grid({{"m", 0, 5}}), {}, [](const ParamMap &p, Exponent T) {
             const long m = get(p, "m");
             return IdentitySides{Q(m, T), formula(Family::Q, Formula::rank_tail_sum, T, m)};
         }});
    add({"rank.exact-sum",
         "P_m = (q)_inf^{-1} sum_{j>=1} (-1)^{j-1} q^{j(3j-1)/2+|m|j} (1-q^j) against the rank census", TRUNC, 40,
         true, grid({{"m", -5, 5}}), {}, [](const ParamMap &p, Exponent T) {
             const long m = get(p, "m");
             return IdentitySides{oracle(Family::P, T, m), formula(Family::P, Formula::rank_exact_sum, T, m)};
         }});
    add({"rank.difference", "P_m = Q_m - Q_{m+1}", TRUNC, 40, true, grid({{"m", -5, 5}}), {},
         [](const ParamMap &p, Exponent T) {
             const long m = get(p, "m");
             return IdentitySides{oracle(Family::P, T, m), Q(m, T) - Q(m + 1, T)};
         }});
    add({"rank.symmetry", "P_m = P_{-m}", TRUNC, 40, true, grid({{"m", 1, 5}}), {},
         [](const ParamMap &p, Exponent T) {
             const long m = get(p, "m");
             return IdentitySides{oracle(Family::P, T, m), oracle(Family::P, T, -m)};
         }});

    // -- congruences -------------------------------------------------------------
    const auto congruence = [&add](std::string id, std::string stmt, long modulus, long offset, long nmax,
                                   bool use_crank) {
        add({std::move(id), std::move(stmt), EXACT, 0, true, grid({{"k", 0, modulus - 1}}), {},
             [=](const ParamMap &p, Exponent) {
                 return congruence_sides(modulus, offset, nmax, get(p, "k"), use_crank);
             }});
    };
    congruence("congruence.rank-mod5", "5 N(k,5,5n+4) = p(5n+4), n <= 6", 5, 4, 6, false);
    congruence("congruence.rank-mod7", "7 N(k,7,7n+5) = p(7n+5), n <= 4", 7, 5, 4, false);
    congruence("congruence.crank-mod5", "5 M(k,5,5n+4) = p(5n+4), n <= 6", 5, 4, 6, true);
    congruence("congruence.crank-mod7", "7 M(k,7,7n+5) = p(7n+5), n <= 4", 7, 5, 4, true);
    congruence("congruence.crank-mod11", "11 M(k,11,11n+6) = p(11n+6), n <= 3", 11, 6, 3, true);

    // -- Gaussian polynomials ------------------------------------------------------
    add({"qbinom.pascal", "[n+m over n] = q^n [n+m-1 over n] + [n+m-1 over n-1], n+m >= 1", EXACT, 0, true,
         grid({{"n", 0, 12}, {"m", 0, 12}}, [](const ParamMap &p) { return get(p, "n") + get(p, "m") >= 1; }), {},
         [](const ParamMap &p, Exponent) {
             const long n = get(p, "n");
             const long m = get(p, "m");
             return IdentitySides{qbinom(n, m), qbinom(n, m - 1).shifted(n) + qbinom(n - 1, m)};
         }});
    add({"qbinom.box-census", "[n+m over n] counts partitions in an n x m box", EXACT, 0, true,
         grid({{"n", 0, 8}, {"m", 0, 8}}), {}, [](const ParamMap &p, Exponent) {
             const long n = get(p, "n");
             const long m = get(p, "m");
             QSeries census;
             EnumerationOptions opts;
             opts.max_part = static_cast<Part>(m);
             opts.max_parts = n;
             for (long w = 0; w <= n * m; ++w) {
                 census += mono(static_cast<long>(enumerate_partitions(w, opts).size()), w);
             }
             return IdentitySides{qbinom(n, m), census};
         }});
    add({"qbinom.symmetry", "[2L over L+a] = [2L over L-a]", EXACT, 0, true,
         grid({{"L", 0, 10}, {"a", -11, 11}}, [](const ParamMap &p) { return std::labs(get(p, "a")) <= get(p, "L") + 1; }),
         {}, [](const ParamMap &p, Exponent) {
             const long L = get(p, "L");
             const long a = get(p, "a");
             return IdentitySides{gb(2 * L, L + a), gb(2 * L, L - a)};
         }});
    add({"qbinom.base-two-binomial-theorem", "sum_n q^{n^2-n} z^n [L over n]_{q^2} = (-z;q^2)_L at z = +-q^s",
         EXACT, 0, true, grid({{"L", 0, 8}, {"s", 0, 4}, {"sign", -1, 1}}, [](const ParamMap &p) { return get(p, "sign") != 0; }),
         {}, [](const ParamMap &p, Exponent) {
             const long L = get(p, "L");
             const long s = get(p, "s");
             const long sg = get(p, "sign");
             QSeries lhs;
             for (long n = 0; n <= L; ++n) {
                 lhs += (gb(L, n, 2) * Integer(n % 2 == 0 ? 1 : sg)).shifted(n * n - n + s * n);
             }
             return IdentitySides{lhs, poch(-sg, s, 2, L)};
         },
         [](const ParamMap &p) { return "z = " + q_power(get(p, "sign"), get(p, "s")); }});

    // -- bounded rank -------------------------------------------------------------
    add({"bounded-rank.top-row", "Q_m^L - Q_m^{L-1} = q^L [2L-m-1 over L]", EXACT, 0, true,
         grid({{"m", -3, 3}, {"L", 1, 8}}), {}, [](const ParamMap &p, Exponent) {
             const long m = get(p, "m");
             const long L = get(p, "L");
             return IdentitySides{QL(m, L) - QL(m, L - 1), gb(2 * L - m - 1, L).shifted(L)};
         }});
    add({"bounded-rank.complement", "Q_m^L + Q_{1-m}^{L-m} + 1 = [2L-m over L], L > m", EXACT, 0, true,
         grid({{"m", -3, 4}, {"L", 0, 8}}, [](const ParamMap &p) { return get(p, "L") > get(p, "m"); }), {},
         [](const ParamMap &p, Exponent) {
             const long m = get(p, "m");
             const long L = get(p, "L");
             return IdentitySides{QL(m, L) + QL(1 - m, L - m) + one(), gb(2 * L - m, L)};
         }});
    add({"bounded-rank.adjoint", "Q_m^L = q^{m+1} (Q_{-2-m}^{L-1-m} + 1), L > m >= 0", EXACT, 0, true,
         grid({{"m", 0, 4}, {"L", 1, 8}}, [](const ParamMap &p) { return get(p, "L") > get(p, "m"); }), {},
         [](const ParamMap &p, Exponent) {
             const long m = get(p, "m");
             const long L = get(p, "L");
             return IdentitySides{QL(m, L), (QL(-2 - m, L - 1 - m) + one()).shifted(m + 1)};
         }});
    add({"bounded-rank.advance-two-step", "Q_m^L + q^{m+1} Q_{m+3}^{L+2} = q^{m+1} [2L-m+1 over L+2], m >= 0",
         EXACT, 0, true, grid({{"m", 0, 4}, {"L", 0, 8}}), {}, [](const ParamMap &p, Exponent) {
             const long m = get(p, "m");
             const long L = get(p, "L");
             return IdentitySides{QL(m, L) + QL(m + 3, L + 2).shifted(m + 1), gb(2 * L - m + 1, L + 2).shifted(m + 1)};
         }});
    add({"bounded-rank.advance-one-step", "Q_m^L + q^{m+1} Q_{m+3}^{L+1} = q^{m+1} [2L-m over L+1], m >= 0", EXACT,
         0, true, grid({{"m", 0, 4}, {"L", 0, 8}}), {}, [](const ParamMap &p, Exponent) {
             const long m = get(p, "m");
             const long L = get(p, "L");
             return IdentitySides{QL(m, L) + QL(m + 3, L + 1).shifted(m + 1), gb(2 * L - m, L + 1).shifted(m + 1)};
         }});
    add({"bounded-rank.advance-one-step-extended",
         "delta_{m,-1} + Q_m^L + q^{m+1} Q_{m+3}^{L+1} = q^{m+1} [2L-m over L+1], m >= -1", EXACT, 0, true,
         grid({{"m", -1, 4}, {"L", 0, 8}}), {}, [](const ParamMap &p, Exponent) {
             const long m = get(p, "m");
             const long L = get(p, "L");
             return IdentitySides{delta(m == -1, 1, 0) + QL(m, L) + QL(m + 3, L + 1).shifted(m + 1),
                                  gb(2 * L - m, L + 1).shifted(m + 1)};
         }});
    add({"bounded-rank.central-complement", "Q_0^L + Q_1^L + 1 = [2L over L]", EXACT, 0, true,
         grid({{"L", 0, 10}}), {}, [](const ParamMap &p, Exponent) {
             const long L = get(p, "L");
             return IdentitySides{QL(0, L) + QL(1, L) + one(), gb(2 * L, L)};
         }});
    add({"bounded-rank.shifted-complement", "1 + Q_{-1}^{L-1} + Q_2^L = [2L-1 over L-1]", EXACT, 0, true,
         grid({{"L", 1, 10}}), {}, [](const ParamMap &p, Exponent) {
             const long L = get(p, "L");
             return IdentitySides{one() + QL(-1, L - 1) + QL(2, L), gb(2 * L - 1, L - 1)};
         }});
    add({"bounded-rank.difference", "P_m^L = Q_m^L - Q_{m+1}^L", EXACT, 0, true,
         grid({{"m", -4, 4}, {"L", 0, 8}}), {}, [](const ParamMap &p, Exponent) {
             const long m = get(p, "m");
             const long L = get(p, "L");
             return IdentitySides{PL(m, L), QL(m, L) - QL(m + 1, L)};
         }});
    add({"bounded-rank.conjugation-symmetry", "P_{-m}^L = P_m^{L+m}, m >= 1", EXACT, 0, true,
         grid({{"m", 1, 4}, {"L", 0, 8}}), {}, [](const ParamMap &p, Exponent) {
             const long m = get(p, "m");
             const long L = get(p, "L");
             return IdentitySides{PL(-m, L), PL(m, L + m)};
         }});
    add({"bounded-rank.exact-sum", "P_m^L as a difference of two signed Gaussian sums, against the bounded census",
         EXACT, 0, true, grid({{"m", -4, 4}, {"L", 0, 8}}), {}, [](const ParamMap &p, Exponent) {
             const long m = get(p, "m");
             const long L = get(p, "L");
             return IdentitySides{PL(m, L), formula(Family::PL, Formula::bounded_rank_exact, std::nullopt, m, L)};
         }});

    struct Shape {
        const char *suffix;
        Formula formula;
        IterationScheme scheme;
        const char *word;
    };
    const Shape shapes[] = {
        {"advance-two", Formula::bounded_rank_advance_two, IterationScheme::constant(Step::advance_two), "2 2 2 ..."},
        {"advance-one", Formula::bounded_rank_advance_one, IterationScheme::constant(Step::advance_one), "1 1 1 ..."},
        {"alternate-two", Formula::bounded_rank_alternate_two, IterationScheme::alternating(Step::advance_two),
         "2 1 2 1 ..."},
        {"alternate-one", Formula::bounded_rank_alternate_one, IterationScheme::alternating(Step::advance_one),
         "1 2 1 2 ..."},
    };
    for (const Shape &sh : shapes) {
        const Formula f = sh.formula;
        const IterationScheme scheme = sh.scheme;
        add({std::string("bounded-rank.sum-") + sh.suffix, "Q_m^L closed form " + to_string(f) + " against the bounded census",
             EXACT, 0, true, grid({{"m", 0, 3}, {"L", 0, 10}}), {}, [f](const ParamMap &p, Exponent) {
                 const long m = get(p, "m");
                 const long L = get(p, "L");
                 return IdentitySides{QL(m, L), formula(Family::QL, f, std::nullopt, m, L)};
             }});
        add({std::string("bounded-rank.iteration-") + sh.suffix,
             std::string("rewrite word ") + sh.word + " reproduces " + to_string(f), EXACT, 0, true,
             grid({{"m", 0, 3}, {"L", 0, 10}}), {}, [f, scheme](const ParamMap &p, Exponent) {
                 const long m = get(p, "m");
                 const long L = get(p, "L");
                 return IdentitySides{iterate_QmL(scheme, m, L), formula(Family::QL, f, std::nullopt, m, L)};
             }});
    }
    add({"bounded-rank.sum-periodic-one", "delta_{m,-1} + Q_m^L as the period-n sum, against the bounded census",
         EXACT, 0, true, grid({{"n", 1, 4}, {"m", -1, 3}, {"L", 0, 10}}), {}, [](const ParamMap &p, Exponent) {
             const long m = get(p, "m");
             const long L = get(p, "L");
             return IdentitySides{delta(m == -1, 1, 0) + QL(m, L),
                                  formula(Family::QL, Formula::bounded_rank_periodic_one, std::nullopt, m, L, 0, 0,
                                          get(p, "n"))};
         }});
    add({"bounded-rank.sum-periodic-two", "Q_m^L as the second period-n sum, against the bounded census", EXACT, 0,
         true, grid({{"n", 1, 4}, {"m", 0, 3}, {"L", 0, 10}}), {}, [](const ParamMap &p, Exponent) {
             const long m = get(p, "m");
             const long L = get(p, "L");
             return IdentitySides{QL(m, L), formula(Family::QL, Formula::bounded_rank_periodic_two, std::nullopt, m, L,
                                                    0, 0, get(p, "n"))};
         }});
    add({"bounded-rank.iteration-periodic-one", "rewrite word (1^{n-1} 2)* reproduces the period-n sum", EXACT, 0,
         true, grid({{"n", 1, 4}, {"m", -1, 3}, {"L", 0, 10}}), {}, [](const ParamMap &p, Exponent) {
             const long n = get(p, "n");
             const long m = get(p, "m");
             const long L = get(p, "L");
             return IdentitySides{
                 iterate_QmL(IterationScheme::periodic(n, Step::advance_one, Step::advance_two), m, L),
                 formula(Family::QL, Formula::bounded_rank_periodic_one, std::nullopt, m, L, 0, 0, n)};
         }});
    add({"bounded-rank.iteration-periodic-two", "rewrite word (2^{n-1} 1)* reproduces the second period-n sum", EXACT,
         0, true, grid({{"n", 1, 4}, {"m", 0, 3}, {"L", 0, 10}}), {}, [](const ParamMap &p, Exponent) {
             const long n = get(p, "n");
             const long m = get(p, "m");
             const long L = get(p, "L");
             return IdentitySides{
                 iterate_QmL(IterationScheme::periodic(n, Step::advance_two, Step::advance_one), m, L),
                 formula(Family::QL, Formula::bounded_rank_periodic_two, std::nullopt, m, L, 0, 0, n)};
         }});

    // -- crank and rank-set --------------------------------------------------------
    add({"crank.sum", "Chat_k = (q)_inf^{-1} sum_{j>=1} (-1)^{j-1} q^{T_{j-1}+j|k|} (1-q^j) + q(delta_{k,0} - delta_{k,1})",
         TRUNC, 30, true, grid({{"k", -6, 6}}), {}, [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             return IdentitySides{Chat(k, T), formula(Family::Chat, Formula::crank_sum, T, 0, 0, k)};
         }});
    add({"crank.sum-correction", "crank census minus the pentagonal part = q(delta_{k,0} - delta_{k,1})", TRUNC, 30,
         true, grid({{"k", -6, 6}}), {}, [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             return IdentitySides{Chat(k, T) - crank_pentagonal_part(k, T), delta(k == 0, 1, 1) + delta(k == 1, -1, 1)};
         }});
    add({"crank.split-sum", "Chat_k as a difference of rank-set sums, k >= 0", TRUNC, 30, true, grid({{"k", 0, 6}}), {},
         [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             return IdentitySides{Chat(k, T), formula(Family::Chat, Formula::crank_split_sum, T, 0, 0, k)};
         }});
    add({"crank.rank-set", "C_k = G_k + q delta_{k,0}", TRUNC, 30, true, grid({{"k", -6, 6}}), {},
         [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             return IdentitySides{C(k, T), G(k, T) + delta(k == 0, 1, 1)};
         }});
    add({"crank.rank-set-zero", "c_0(n) = g_0(n) + delta_{n,1}", TRUNC, 30, true, {}, {},
         [](const ParamMap &, Exponent T) { return IdentitySides{C(0, T), G(0, T) + mono(1, 1)}; }});
    add({"crank.rank-set-difference", "Chat_k = Ghat_k + q(delta_{k,0} - delta_{k,1})", TRUNC, 30, true,
         grid({{"k", -6, 6}}), {}, [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             return IdentitySides{Chat(k, T), Ghat(k, T) + delta(k == 0, 1, 1) + delta(k == 1, -1, 1)};
         }});
    add({"crank.negated-rank-set", "Chat_{-k} = Ghat_k + q delta_{k,0}, k >= 0", TRUNC, 30, true, grid({{"k", 0, 6}}),
         {}, [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             return IdentitySides{Chat(-k, T), Ghat(k, T) + delta(k == 0, 1, 1)};
         }});
    add({"crank.symmetry", "Chat_{-k} = Chat_k + q delta_{k,1}, k >= 0", TRUNC, 30, true, grid({{"k", 0, 6}}), {},
         [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             return IdentitySides{Chat(-k, T), Chat(k, T) + delta(k == 1, 1, 1)};
         }});
    add({"crank.pseudo-conjugation",
         "chat_{-k}(n) = #{crank k partitions sent to crank -k by pseudo-conjugation} + delta_{n,1} delta_{k,1}",
         TRUNC, 30, true, grid({{"k", 0, 6}}), {}, [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             QSeries rhs = QSeries::zero(T);
             for (long n = 0; n <= T; ++n) {
                 long c = 0;
                 for (const Partition &x : partitions_of(n)) {
                     if (n <= 1) {
                         c += (n == 0 ? k == 0 : crank(x) == k) ? 1 : 0;
                     } else if (crank(x) == k && crank(pseudo_conjugate(x)) == -k) {
                         ++c;
                     }
                 }
                 rhs += mono(c, n);
             }
             return IdentitySides{Chat(-k, T), rhs + delta(k == 1, 1, 1)};
         }});
    add({"rank-set.complement", "G_{-k} + G_{k-1} = 1/(q)_inf", TRUNC, 30, true, grid({{"k", -6, 6}}), {},
         [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             return IdentitySides{G(-k, T) + G(k - 1, T), partition_generating(T)};
         }});
    add({"rank-set.insertion", "G_k + q^{k+1} G_{k+1} = 1/(q)_inf, k >= -1", TRUNC, 30, true, grid({{"k", -1, 6}}), {},
         [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             return IdentitySides{G(k, T) + G(k + 1, T).shifted(k + 1), partition_generating(T)};
         }});
    add({"rank-set.sum", "G_k = (q)_inf^{-1} sum_{j>=0} (-1)^j q^{T_j+kj}, k >= -1", TRUNC, 30, true,
         grid({{"k", -1, 6}}), {}, [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             return IdentitySides{G(k, T), formula(Family::G, Formula::rank_set_sum, T, 0, 0, k)};
         }});
    add({"rank-set.difference-symmetry", "Ghat_{-k} = Ghat_k", TRUNC, 30, true, grid({{"k", 0, 6}}), {},
         [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             return IdentitySides{Ghat(-k, T), Ghat(k, T)};
         }});
    add({"rank-set.insertion-count", "g_k(n) = p(n+k) - g_{k-1}(n+k), k >= 0", TRUNC, 30, true, grid({{"k", 0, 6}}), {},
         [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             const QSeries shifted = drop_below(partition_generating(T + k) - G(k - 1, T + k), k).shifted(-k);
             return IdentitySides{G(k, T), shifted};
         }});

    // -- bounded crank and rank-set ----------------------------------------------------
    const auto bounded_grid = [](long lo_k, long maxL) {
        return grid({{"k", lo_k, maxL}, {"L", 1, maxL}}, [](const ParamMap &p) { return get(p, "k") <= get(p, "L"); });
    };
    add({"bounded-crank.rank-set", "C_k^L = G_k^L + (1-q)/(q)_k + (q-1)[L+k over k] + q delta_{k,0}", TRUNC, 30, true,
         bounded_grid(0, 6), {}, [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             const long L = get(p, "L");
             const QSeries rhs = oracle(Family::GL, T, 0, L, k) + divide(QSeries::one_minus({1, 1}), q_factorial(k), T) -
                                 QSeries::one_minus({1, 1}) * gb(L + k, k) + delta(k == 0, 1, 1);
             return IdentitySides{oracle(Family::CL, T, 0, L, k), rhs.truncated(T)};
         }});
    add({"bounded-rank-set.insertion", "G_k^L + q^{k+1} G_{k+1}^{L-1} = 1/(q)_L", TRUNC, 30, true, bounded_grid(0, 6),
         {}, [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             const long L = get(p, "L");
             return IdentitySides{oracle(Family::GL, T, 0, L, k) + oracle(Family::GL, T, 0, L - 1, k + 1).shifted(k + 1),
                                  invert(q_factorial(L), T)};
         }});
    add({"bounded-rank-set.sum", "G_k^L = sum_{j=0}^L (-1)^j q^{T_j+kj} / (q)_{L-j}", TRUNC, 30, true,
         bounded_grid(0, 6), {}, [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             const long L = get(p, "L");
             return IdentitySides{oracle(Family::GL, T, 0, L, k),
                                  formula(Family::GL, Formula::bounded_rank_set_sum, T, 0, L, k)};
         }});
    add({"bounded-crank.difference", "Chat_k^L = C_k^L - C_{k-1}^L", TRUNC, 30, true,
         grid({{"k", -3, 6}, {"L", 1, 6}}), {}, [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             const long L = get(p, "L");
             return IdentitySides{oracle(Family::ChatL, T, 0, L, k),
                                  oracle(Family::CL, T, 0, L, k) - oracle(Family::CL, T, 0, L, k - 1)};
         }});
    add({"bounded-crank.alternating-sum", "Chat_k^L as an alternating sum over j, against the census", TRUNC, 30, true,
         bounded_grid(1, 6), {}, [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             const long L = get(p, "L");
             return IdentitySides{oracle(Family::ChatL, T, 0, L, k),
                                  formula(Family::ChatL, Formula::bounded_crank_alternating, T, 0, L, k)};
         }});
    add({"bounded-crank.dissection-sum", "Chat_k^L split by the number of ones, against the census", TRUNC, 30, true,
         bounded_grid(1, 6), {}, [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             const long L = get(p, "L");
             return IdentitySides{oracle(Family::ChatL, T, 0, L, k),
                                  formula(Family::ChatL, Formula::bounded_crank_dissection, T, 0, L, k)};
         }});

    // -- finite crank identity and its Heine route ---------------------------------------
    const std::string finite_stmt =
        "sum_{j=1}^L (-1)^{j-1} q^{T_{j-1}+kj} (1-q^j)/(q)_{L-j} = (1-q) sum_mu q^{(mu+1)(mu+k)+mu}/(q)_mu [L-1+k over mu+k]";
    add({"heine.finite-identity", finite_stmt + ", 0 < k <= L", TRUNC, 60, true, bounded_grid(1, 8), {},
         [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             const long L = get(p, "L");
             return IdentitySides{crank_finite_lhs(k, L, T), crank_finite_rhs(k, L, T)};
         }});
    add({"heine.finite-identity-exploratory", finite_stmt + " at k = 0 (not claimed)", TRUNC, 60, false,
         grid({{"k", 0, 0}, {"L", 1, 8}}), {}, [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             const long L = get(p, "L");
             return IdentitySides{crank_finite_lhs(k, L, T), crank_finite_rhs(k, L, T)};
         }});
    add({"heine.finite-identity-cleared", finite_stmt + ", both sides times (q)_{L-1}", EXACT, 0, true,
         bounded_grid(1, 8), {}, [](const ParamMap &p, Exponent) { return crank_finite_cleared(get(p, "k"), get(p, "L")); }});
    add({"heine.final-form",
         "alternating side = (1-q) sum_{i=0}^{L-1} q^{i^2+(2+k)i+k}/(q)_i [L-1+k over i+k]", TRUNC, 60, true,
         bounded_grid(1, 8), {}, [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             const long L = get(p, "L");
             return IdentitySides{crank_finite_lhs(k, L, T), crank_finite_final(k, L, T)};
         }});
    add({"heine.final-form-termwise", "the two right-hand sums agree term by term (times (q)_{L-1})", EXACT, 0, true,
         bounded_grid(1, 8), {}, [](const ParamMap &p, Exponent) {
             const long k = get(p, "k");
             const long L = get(p, "L");
             QSeries a;
             QSeries b;
             for (long i = 0; i <= L - 1; ++i) {
                 const QSeries common = gb(L - 1 + k, i + k) * poch(1, i + 1, 1, L - 1 - i);
                 a += common.shifted((i + 1) * (i + k) + i);
                 b += common.shifted(i * i + (2 + k) * i + k);
             }
             return IdentitySides{a, b};
         }});
    add({"heine.hypergeometric-form", "alternating side = q^k (1-q)/(q)_{L-1} lim_{c->0} 2phi1(q^2, q^{1-L}; c; q^{L+k})",
         TRUNC, 60, true, bounded_grid(1, 8), {}, [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             const long L = get(p, "L");
             const QSeries phi = phi21_partial({1, 2}, {1, 1 - L}, LimitZero{}, {1, L + k}, L + 1, T);
             const QSeries pre = divide(QSeries::one_minus({1, 1}).shifted(k), q_factorial(L - 1), T);
             return IdentitySides{crank_finite_lhs(k, L, T), (pre * phi).truncated(T)};
         },
         [](const ParamMap &p) {
             return "a = q^2, b = q^" + std::to_string(1 - get(p, "L")) + ", c -> 0, z = q^" +
                    std::to_string(get(p, "L") + get(p, "k"));
         }});
    add({"heine.transformed-form",
         "alternating side = q^k(1-q)(q^{1+k})_{L-1}/(q)_{L-1} sum_i (-1)^i (q^{1-L})_i/((q)_i (q^{1+k})_i) q^{T_{i-1}+(L+k+2)i}",
         TRUNC, 60, true, bounded_grid(1, 8), {}, [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             const long L = get(p, "L");
             return IdentitySides{crank_finite_lhs(k, L, T), heine_sum_form(k, L, T)};
         }});
    add({"heine.transformation-limit",
         "Heine's second transformation with c -> 0 at a = q^2, b = q^{1-L}, z = q^{L+k}", TRUNC, 40, true,
         grid({{"k", 0, 4}, {"L", 1, 6}}), {}, [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             const long L = get(p, "L");
             return IdentitySides{phi21_partial({1, 2}, {1, 1 - L}, LimitZero{}, {1, L + k}, L + 1, T),
                                  heine_limit_rhs(k, L, T)};
         },
         [](const ParamMap &p) {
             return "a = q^2, b = q^" + std::to_string(1 - get(p, "L")) + ", c -> 0, z = q^" +
                    std::to_string(get(p, "L") + get(p, "k"));
         }});
    add({"heine.transformation",
         "2phi1(a,b;c;z) = (c/b)_inf (bz)_inf / ((c)_inf (z)_inf) 2phi1(abz/c, b; bz; c/b) at monomial a, b, c, z",
         TRUNC, 30, true, grid({{"a", 1, 3}, {"b", 1, 2}, {"gap", 1, 2}, {"z", 1, 2}}), {},
         [](const ParamMap &p, Exponent T) {
             const long a = get(p, "a");
             const long b = get(p, "b");
             const long c = b + get(p, "gap");
             const long z = get(p, "z");
             const long terms = T + 2;
             const QSeries lhs = phi21_partial({1, a}, {1, b}, QMonomial{1, c}, {1, z}, terms, T);
             const QSeries pre = divide(poch_inf(1, c - b, 1, T) * poch_inf(1, b + z, 1, T),
                                        poch_inf(1, c, 1, T) * poch_inf(1, z, 1, T), T);
             const QSeries phi = phi21_partial({1, a + b + z - c}, {1, b}, QMonomial{1, b + z}, {1, c - b}, terms, T);
             return IdentitySides{lhs, (pre * phi).truncated(T)};
         },
         [](const ParamMap &p) {
             return "a = q^" + std::to_string(get(p, "a")) + ", b = q^" + std::to_string(get(p, "b")) + ", c = q^" +
                    std::to_string(get(p, "b") + get(p, "gap")) + ", z = q^" + std::to_string(get(p, "z"));
         }});
    add({"heine.factorial-ratio", "(q)_{L-j} (q^{1-L})_{j-1} = (q)_{L-1} (-1)^{j-1} q^{T_{j-2}-(L-1)(j-1)}", EXACT, 0,
         true, grid({{"j", 1, 8}, {"L", 1, 8}}, [](const ParamMap &p) { return get(p, "j") <= get(p, "L"); }), {},
         [](const ParamMap &p, Exponent) {
             const long j = get(p, "j");
             const long L = get(p, "L");
             return IdentitySides{q_factorial(L - j) * poch(1, 1 - L, 1, j - 1),
                                  (q_factorial(L - 1) * Integer(alt(j - 1))).shifted(tri(j - 2) - (L - 1) * (j - 1))};
         }});
    add({"heine.binomial-form",
         "(-1)^i (q^{1+k})_{L-1}/(q)_{L-1} (q^{1-L})_i/(q^{1+k})_i = q^{T_i-Li} [L-1+k over i+k], cleared", EXACT, 0,
         true, grid({{"k", 0, 4}, {"L", 1, 8}, {"i", 0, 7}}, [](const ParamMap &p) { return get(p, "i") < get(p, "L"); }),
         {}, [](const ParamMap &p, Exponent) {
             const long k = get(p, "k");
             const long L = get(p, "L");
             const long i = get(p, "i");
             const QSeries lhs = poch(1, 1 + k + i, 1, L - 1 - i) * poch(1, 1 - L, 1, i) * Integer(alt(i));
             return IdentitySides{lhs, (gb(L - 1 + k, i + k) * q_factorial(L - 1)).shifted(tri(i) - L * i)};
         }});
    add({"qpoch.shift-ratio", "(1-q^{1+j}) (q)_j = (1-q) (q^2)_j", EXACT, 0, true, grid({{"j", 0, 10}}), {},
         [](const ParamMap &p, Exponent) {
             const long j = get(p, "j");
             return IdentitySides{QSeries::one_minus({1, 1 + j}) * q_factorial(j),
                                  QSeries::one_minus({1, 1}) * poch(1, 2, 1, j)};
         }});
    add({"qpoch.infinite-ratio", "(q^{1+k})_inf / (q^{L+k})_inf = (q^{1+k})_{L-1}", TRUNC, 40, true,
         grid({{"k", 0, 4}, {"L", 1, 8}}), {}, [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             const long L = get(p, "L");
             return IdentitySides{divide(poch_inf(1, 1 + k, 1, T), poch_inf(1, L + k, 1, T), T), poch(1, 1 + k, 1, L - 1)};
         }});

    // -- 2-modular / M2-rank ----------------------------------------------------------
    add({"mod2.count", "E = (-q;q^2)_inf / (q^2;q^2)_inf against the class-E census", TRUNC, 30, true, {}, {},
         [](const ParamMap &, Exponent T) {
             return IdentitySides{oracle(Family::E, T), formula(Family::E, Formula::distinct_odd_product, T)};
         }});
    add({"m2-rank.complement", "Etilde_r + Etilde_{1-r} + 1 = E", TRUNC, 30, true, grid({{"r", -3, 4}}), {},
         [](const ParamMap &p, Exponent T) {
             const long r = get(p, "r");
             return IdentitySides{Etilde(r, T) + Etilde(1 - r, T) + one(), distinct_odd(T)};
         }});
    add({"m2-rank.adjoint", "Etilde_r = q^{2r+1} (Etilde_{-1-r} + 1), r >= 0", TRUNC, 30, true, grid({{"r", 0, 5}}), {},
         [](const ParamMap &p, Exponent T) {
             const long r = get(p, "r");
             return IdentitySides{Etilde(r, T), (Etilde(-1 - r, T) + one()).shifted(2 * r + 1)};
         }});
    add({"m2-rank.adjoint-sum", "Etilde_r + q^{2r+1} Etilde_{2+r} = q^{2r+1} E, r >= 0", TRUNC, 30, true,
         grid({{"r", 0, 5}}), {}, [](const ParamMap &p, Exponent T) {
             const long r = get(p, "r");
             return IdentitySides{Etilde(r, T) + Etilde(r + 2, T).shifted(2 * r + 1), distinct_odd(T).shifted(2 * r + 1)};
         }});
    add({"m2-rank.tail-sum", "Etilde_r = E sum_{j>=1} (-1)^{j-1} q^{2rj+j(2j-1)} against the census", TRUNC, 30, true,
         grid({{"r", 0, 5}}), {}, [](const ParamMap &p, Exponent T) {
             const long r = get(p, "r");
             return IdentitySides{Etilde(r, T), formula(Family::Etilde, Formula::m2_rank_tail_sum, T, 0, 0, 0, r)};
         }});
    add({"m2-rank.head-sum", "Ehat_r = E sum_{j>=0} (-1)^j q^{2rj+j(2j+1)} against the census", TRUNC, 30, true,
         grid({{"r", 0, 5}}), {}, [](const ParamMap &p, Exponent T) {
             const long r = get(p, "r");
             return IdentitySides{oracle(Family::Ehat, T, 0, 0, 0, r),
                                  formula(Family::Ehat, Formula::m2_rank_head_sum, T, 0, 0, 0, r)};
         }});
    add({"m2-rank.head-double-sum", "Ehat_r as a double sum of base-q^2 Gaussian products, against the census", TRUNC,
         30, true, grid({{"r", 0, 5}}), {}, [](const ParamMap &p, Exponent T) {
             const long r = get(p, "r");
             return IdentitySides{oracle(Family::Ehat, T, 0, 0, 0, r),
                                  formula(Family::Ehat, Formula::m2_rank_head_double_sum, T, 0, 0, 0, r)};
         }});
    add({"m2-rank.double-sum-identity", "double sum = E sum_{j>=0} (-1)^j q^{2rj+j(2j+1)}", TRUNC, 40, true,
         grid({{"r", 0, 5}}), {}, [](const ParamMap &p, Exponent T) {
             const long r = get(p, "r");
             return IdentitySides{formula(Family::Ehat, Formula::m2_rank_head_double_sum, T, 0, 0, 0, r),
                                  formula(Family::Ehat, Formula::m2_rank_head_sum, T, 0, 0, 0, r)};
         }});
    add({"gauss.bilateral", "E sum_{j in Z} (-1)^j q^{j(2j+1)} = 1", TRUNC, 100, true, {}, {},
         [](const ParamMap &, Exponent T) {
             QSeries s;
             for (long j = -T; j <= T; ++j) {
                 if (j * (2 * j + 1) <= T) {
                     s += mono(alt(j), j * (2 * j + 1));
                 }
             }
             return IdentitySides{(distinct_odd(T) * s).truncated(T), one()};
         }});
    add({"gauss.product-inverse", "(q^2;q^2)_inf / (-q;q^2)_inf = sum_{j in Z} (-1)^j q^{j(2j+1)}", TRUNC, 100, true,
         {}, {}, [](const ParamMap &, Exponent T) {
             QSeries s;
             for (long j = -T; j <= T; ++j) {
                 if (j * (2 * j + 1) <= T) {
                     s += mono(alt(j), j * (2 * j + 1));
                 }
             }
             return IdentitySides{divide(poch_inf(1, 2, 2, T), poch_inf(-1, 1, 2, T), T), s};
         }});
    add({"gauss.triangular", "(q^2;q^2)_inf / (q;q^2)_inf = sum_{j>=0} q^{T_j}", TRUNC, 100, true, {}, {},
         [](const ParamMap &, Exponent T) {
             QSeries s;
             for (long j = 0; tri(j) <= T; ++j) {
                 s += mono(1, tri(j));
             }
             return IdentitySides{divide(poch_inf(1, 2, 2, T), poch_inf(1, 1, 2, T), T), s};
         }});
    add({"gauss.bilateral-triangular", "sum_{j in Z} q^{j(2j+1)} = sum_{j>=0} q^{T_j}", TRUNC, 100, true, {}, {},
         [](const ParamMap &, Exponent T) {
             QSeries a;
             for (long j = -T; j <= T; ++j) {
                 if (j * (2 * j + 1) <= T) {
                     a += mono(1, j * (2 * j + 1));
                 }
             }
             QSeries b;
             for (long j = 0; tri(j) <= T; ++j) {
                 b += mono(1, tri(j));
             }
             return IdentitySides{a.truncated(T), b.truncated(T)};
         }});

    // -- free parameter a = q^{2r} -------------------------------------------------------
    const auto a_spec = [](const ParamMap &p) { return "a = q^" + std::to_string(2 * get(p, "r")); };
    const auto free_grid = grid({{"r", 0, 5}});
    add({"free-parameter.evaluation",
         "sum_{i,j} q^{j^2+2i} (aq^{2i+2};q^2)_j (aq^{2i+2j};q^2)_i / ((q^2;q^2)_j (q^2;q^2)_i) = E sum_j (-1)^j q^{2j^2+j} a^j",
         TRUNC, 40, true, free_grid, {}, [](const ParamMap &p, Exponent T) {
             const long A = 2 * get(p, "r");
             return IdentitySides{free_parameter_lhs(A, T), free_parameter_closed(A, T)};
         },
         a_spec});
    add({"free-parameter.quadruple-sum", "double-sum side = its q-binomial expansion over i, j, s, t", TRUNC, 40, true,
         free_grid, {}, [](const ParamMap &p, Exponent T) {
             const long A = 2 * get(p, "r");
             return IdentitySides{free_parameter_lhs(A, T), free_parameter_quadruple(A, T)};
         },
         a_spec});
    add({"free-parameter.double-sum",
         "quadruple sum = sum_{s,t} (-a)^{s+t} q^{2t^2+4st+3s^2+s+t} (-q^{1+2s+2t};q^2)_inf / ((q^2;q^2)_s (q^2;q^2)_t (q^{2+2s+2t};q^2)_inf)",
         TRUNC, 40, true, free_grid, {}, [](const ParamMap &p, Exponent T) {
             const long A = 2 * get(p, "r");
             return IdentitySides{free_parameter_quadruple(A, T), free_parameter_double(A, T)};
         },
         a_spec});
    add({"free-parameter.single-sum",
         "double sum = E sum_n (-a)^n q^{2n^2+n} / (-q;q^2)_n sum_{s<=n} q^{s^2} [n over s]_{q^2}", TRUNC, 40, true,
         free_grid, {}, [](const ParamMap &p, Exponent T) {
             const long A = 2 * get(p, "r");
             return IdentitySides{free_parameter_double(A, T), free_parameter_single(A, T)};
         },
         a_spec});
    add({"free-parameter.closed-form", "single sum = E sum_n (-a)^n q^{2n^2+n}", TRUNC, 40, true, free_grid, {},
         [](const ParamMap &p, Exponent T) {
             const long A = 2 * get(p, "r");
             return IdentitySides{free_parameter_single(A, T), free_parameter_closed(A, T)};
         },
         a_spec});
    add({"free-parameter.tail-product",
         "(-q^{1+2N};q^2)_inf / (q^{2+2N};q^2)_inf = E (q^2;q^2)_N / (-q;q^2)_N", TRUNC, 40, true,
         grid({{"N", 0, 10}}), {}, [](const ParamMap &p, Exponent T) {
             const long N = get(p, "N");
             return IdentitySides{divide(poch_inf(-1, 1 + 2 * N, 2, T), poch_inf(1, 2 + 2 * N, 2, T), T),
                                  divide(distinct_odd(T) * poch(1, 2, 2, N), poch(-1, 1, 2, N), T)};
         }});
    add({"cauchy.base-two", "sum_n (-aq;q^2)_n/(q^2;q^2)_n t^n q^{2n} = (-atq^3;q^2)_inf / (tq^2;q^2)_inf", TRUNC, 40,
         true, grid({{"s", 1, 5}, {"u", 1, 5}, {"sign", -1, 1}}, [](const ParamMap &p) { return get(p, "sign") != 0; }),
         {}, [](const ParamMap &p, Exponent T) {
             const long s = get(p, "s");
             const long u = get(p, "u");
             const long sg = get(p, "sign");
             QSeries lhs = QSeries::zero(T);
             for (long n = 0; (s + 2) * n <= T; ++n) {
                 lhs += divide(poch(-sg, u + 1, 2, n).shifted((s + 2) * n), poch(1, 2, 2, n), T);
             }
             return IdentitySides{lhs, divide(poch_inf(-sg, u + s + 3, 2, T), poch_inf(1, s + 2, 2, T), T)};
         },
         [](const ParamMap &p) {
             return "a = " + q_power(get(p, "sign"), get(p, "u")) + ", t = q^" + std::to_string(get(p, "s"));
         }});
    add({"euler.distinct-even", "sum_j q^{j(j+1)} z^j / (q^2;q^2)_j = (-zq^2;q^2)_inf", TRUNC, 40, true,
         grid({{"s", 0, 5}, {"sign", -1, 1}}, [](const ParamMap &p) { return get(p, "sign") != 0; }), {},
         [](const ParamMap &p, Exponent T) {
             const long s = get(p, "s");
             const long sg = get(p, "sign");
             QSeries lhs = QSeries::zero(T);
             for (long j = 0; j * (j + 1) + s * j <= T; ++j) {
                 lhs += divide(mono(j % 2 == 0 ? 1 : sg, j * (j + 1) + s * j), poch(1, 2, 2, j), T);
             }
             return IdentitySides{lhs, poch_inf(-sg, s + 2, 2, T)};
         },
         [](const ParamMap &p) { return "z = " + q_power(get(p, "sign"), get(p, "s")); }});
    add({"euler.partition-product", "sum_n z^n / (q)_n = 1 / (z;q)_inf", TRUNC, 40, true,
         grid({{"s", 1, 5}, {"sign", -1, 1}}, [](const ParamMap &p) { return get(p, "sign") != 0; }), {},
         [](const ParamMap &p, Exponent T) {
             const long s = get(p, "s");
             const long sg = get(p, "sign");
             QSeries lhs = QSeries::zero(T);
             for (long n = 0; s * n <= T; ++n) {
                 lhs += divide(mono(n % 2 == 0 ? 1 : sg, s * n), q_factorial(n), T);
             }
             return IdentitySides{lhs, invert(poch_inf(sg, s, 1, T), T)};
         },
         [](const ParamMap &p) { return "z = " + q_power(get(p, "sign"), get(p, "s")); }});

    // -- k-rank -----------------------------------------------------------------------
    add({"k-rank.tail-sum", "FG_{k,m} = (q)_inf^{-1} sum_{j>=1} (-1)^{j-1} q^{j((2k-1)j-1)/2+mj} against the census",
         TRUNC, 25, true, grid({{"k", 2, 4}, {"m", 0, 3}}), {}, [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             const long m = get(p, "m");
             return IdentitySides{oracle(Family::FG, T, m, 0, k), formula(Family::FG, Formula::k_rank_tail_sum, T, m, 0, k)};
         }});
    add({"k-rank.functional-equation", "FG_{k,m} + q^{k+m-1} FG_{k,2k-1+m} = q^{k+m-1}/(q)_inf from the sum form",
         TRUNC, 60, true, grid({{"k", 2, 4}, {"m", 0, 3}}), {}, [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             const long m = get(p, "m");
             const QSeries lhs = formula(Family::FG, Formula::k_rank_tail_sum, T, m, 0, k) +
                                 formula(Family::FG, Formula::k_rank_tail_sum, T, 2 * k - 1 + m, 0, k).shifted(k + m - 1);
             return IdentitySides{lhs, partition_generating(T).shifted(k + m - 1)};
         }});
    add({"k-rank.functional-equation-census", "FG_{k,m} + q^{k+m-1} FG_{k,2k-1+m} = q^{k+m-1}/(q)_inf on the census",
         TRUNC, 25, true, grid({{"k", 2, 4}, {"m", 0, 3}}), {}, [](const ParamMap &p, Exponent T) {
             const long k = get(p, "k");
             const long m = get(p, "m");
             const QSeries lhs = oracle(Family::FG, T, m, 0, k) + oracle(Family::FG, T, 2 * k - 1 + m, 0, k).shifted(k + m - 1);
             return IdentitySides{lhs, partition_generating(T).shifted(k + m - 1)};
         }});
    add({"k-rank.two-is-rank", "FG_{2,m} = Q_m", TRUNC, 25, true, grid({{"m", 0, 3}}), {},
         [](const ParamMap &p, Exponent T) {
             const long m = get(p, "m");
             return IdentitySides{oracle(Family::FG, T, m, 0, 2), Q(m, T)};
         }});

    // -- pseudo-conjugation fixed points -------------------------------------------------
    add({"self-pseudo-conjugate.sum", "SPC = 1 + q + sum_{M>=1, gamma>=0} q^{M(M+1)+M+gamma}/(q^4;q^2)_{M-1}", TRUNC, 30,
         true, {}, {}, [](const ParamMap &, Exponent T) {
             return IdentitySides{oracle(Family::SPC, T), formula(Family::SPC, Formula::self_pseudo_conjugate_sum, T)};
         }});
    add({"self-pseudo-conjugate.single-sum", "SPC = (1+q) sum_{M>=0} q^{M(M+1)+M}/(q^2;q^2)_M", TRUNC, 30, true, {}, {},
         [](const ParamMap &, Exponent T) {
             QSeries s = QSeries::zero(T);
             for (long M = 0; M * (M + 1) + M <= T; ++M) {
                 s += divide(mono(1, M * (M + 1) + M), poch(1, 2, 2, M), T);
             }
             return IdentitySides{oracle(Family::SPC, T), (s * (one() + mono(1, 1))).truncated(T)};
         }});
    add({"self-pseudo-conjugate.product", "SPC = (-q;q^2)_inf against the fixed-point census", TRUNC, 30, true, {}, {},
         [](const ParamMap &, Exponent T) {
             return IdentitySides{oracle(Family::SPC, T), formula(Family::SPC, Formula::self_pseudo_conjugate_product, T)};
         }});
    add({"self-pseudo-conjugate.sum-product", "sum form of SPC = (-q;q^2)_inf", TRUNC, 60, true, {}, {},
         [](const ParamMap &, Exponent T) {
             return IdentitySides{formula(Family::SPC, Formula::self_pseudo_conjugate_sum, T),
                                  formula(Family::SPC, Formula::self_pseudo_conjugate_product, T)};
         }});

    // -- cubic sum -----------------------------------------------------------------------
    add({"cubic.closed-form",
         "sum_k (q^{-N})_{2k} / ((q)_k (q^{-N})_k) q^k = (-1)^{floor(N/3)} q^{-N(N-1)/6} or 0 when N = 2 mod 3", EXACT,
         0, true, grid({{"N", 0, 30}}), {}, [](const ParamMap &p, Exponent) {
             const long N = get(p, "N");
             return IdentitySides{cubic_sum(N), cubic_sum_closed_form(N)};
         }});

    std::sort(r.begin(), r.end(), [](const Def &a, const Def &b) { return a.id < b.id; });
    return r;
}

bool same_keys(const ParamMap &a, const ParamMap &b)
{
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(),
                                              [](const auto &x, const auto &y) { return x.first == y.first; });
}

IdentityReport run_definition(const Def &def, const ParamMap &params, std::optional<Exponent> truncation)
{
    IdentityReport rep;
    rep.check.id = def.id;
    rep.check.params = params;
    rep.mode = def.mode;
    rep.gating = def.gating;
    if (def.mode == CompareMode::truncated_series) {
        rep.check.truncation = truncation.value_or(def.default_truncation);
    }
    if (def.specialization) {
        rep.specialization = def.specialization(params);
    }
    const auto start = std::chrono::steady_clock::now();
    try {
        const Exponent T = rep.check.truncation.value_or(0);
        if (T < 0) {
            throw std::domain_error("truncation must be nonnegative");
        }
        const auto [lhs, rhs] = def.build(params, T);
        rep.comparison = compare(lhs, rhs, def.mode);
        rep.pass = rep.comparison.equal;
    } catch (const std::exception &e) {
        rep.error = e.what();
        rep.pass = false;
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

} // namespace

const std::vector<IdentityDefinition> &identity_registry()
{
    static const std::vector<IdentityDefinition> registry = make_registry();
    return registry;
}

const IdentityDefinition *find_identity(std::string_view id)
{
    for (const auto &d : identity_registry()) {
        if (d.id == id) {
            return &d;
        }
    }
    return nullptr;
}

IdentityReport run(const IdentityCheck &check)
{
    const IdentityDefinition *def = find_identity(check.id);
    if (!def) {
        throw std::invalid_argument("unknown identity: " + check.id);
    }
    if (!same_keys(check.params, def->grid.front())) {
        std::string names;
        for (const auto &[k, v] : def->grid.front()) {
            names += (names.empty() ? "" : ", ") + k;
        }
        throw std::domain_error(check.id + " takes parameters {" + names + "}");
    }
    if (def->in_domain) {
        if (!def->in_domain(check.params)) {
            throw std::domain_error(check.id + ": parameters outside the domain");
        }
    } else if (std::find(def->grid.begin(), def->grid.end(), check.params) == def->grid.end()) {
        throw std::domain_error(check.id + ": parameters outside the registered grid");
    }
    return run_definition(*def, check.params, check.truncation);
}

std::vector<IdentityReport> run_suite(std::string_view filter, std::optional<Exponent> truncation, unsigned jobs)
{
    std::vector<std::pair<const IdentityDefinition *, const ParamMap *>> tasks;
    for (const auto &def : identity_registry()) {
        if (filter.empty() || glob_match(filter, def.id)) {
            for (const auto &p : def.grid) {
                tasks.emplace_back(&def, &p);
            }
        }
    }
    std::vector<IdentityReport> reports(tasks.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&]() {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            reports[i] = run_definition(*tasks[i].first, *tasks[i].second, truncation);
        }
    };
    const unsigned n = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    pool.clear();
    // Tasks were queued in registry order already; the sort makes the contract explicit.
    std::stable_sort(reports.begin(), reports.end(), [](const IdentityReport &a, const IdentityReport &b) {
        return std::tie(a.check.id, a.check.params) < std::tie(b.check.id, b.check.params);
    });
    return reports;
}

bool glob_match(std::string_view pattern, std::string_view text)
{
    // Iterative matcher with single-star backtracking.
    std::size_t p = 0;
    std::size_t t = 0;
    std::size_t star = std::string_view::npos;
    std::size_t mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string_view::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') {
        ++p;
    }
    return p == pattern.size();
}

bool all_gating_pass(const std::vector<IdentityReport> &reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const IdentityReport &r) { return r.pass || !r.gating; });
}

std::string to_string(CompareMode mode)
{
    return mode == CompareMode::exact_polynomial ? "exact-polynomial" : "truncated-series";
}

std::string reports_to_json(const std::vector<IdentityReport> &reports, bool with_timing, int indent)
{
    using nlohmann::json;
    json out = json::array();
    for (const auto &r : reports) {
        json j;
        j["id"] = r.check.id;
        j["params"] = json::object();
        for (const auto &[k, v] : r.check.params) {
            j["params"][k] = v;
        }
        j["truncation"] = r.check.truncation ? json(*r.check.truncation) : json(nullptr);
        j["mode"] = to_string(r.mode);
        j["gating"] = r.gating;
        j["pass"] = r.pass;
        j["specialization"] = r.specialization.empty() ? json(nullptr) : json(r.specialization);
        const auto &c = r.comparison;
        j["verified_range"] = c.lo <= c.hi ? json::array({c.lo, c.hi}) : json(nullptr);
        if (c.first_mismatch) {
            j["first_mismatch"] = {{"exponent", c.first_mismatch->exponent},
                                   {"lhs", c.first_mismatch->lhs.get_str()},
                                   {"rhs", c.first_mismatch->rhs.get_str()}};
        } else {
            j["first_mismatch"] = nullptr;
        }
        j["error"] = r.error ? json(*r.error) : json(nullptr);
        if (with_timing) {
            j["elapsed_ms"] = r.elapsed_ms;
        }
        out.push_back(std::move(j));
    }
    return out.dump(indent);
}

} // namespace qpart
