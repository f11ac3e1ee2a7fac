#pragma once

#include <variant>

#include <qpart/series.hpp>

namespace qpart
{

/// Exponent offset au(n, j) of the generalized polynomial pentagonal sums:
/// -j for n = 1, 0 for n = 2, sum_{k=1}^{n-2} floor((j+k)/n) for n > 2,
/// and odd in j. Throws std::domain_error for n <= 0.
long au(long n, long j);

/// floor((n+1) j / n), the companion shift of au in the bottom index.
long pentagonal_shift(long n, long j);

/// sum_j (-1)^j q^{j(3j-1)/2 + sigma j} [2L + sigma - au(n,j) over L + sigma + floor((n+1)j/n)].
/// Finite support: only |j| <= 2L + 2 can contribute. Evaluates to
/// 1 - delta_{sigma,-1} as an exact polynomial.
QSeries pentagonal_sum_general(long n, int sigma, long L);

/// Marker for the c -> 0 limit of a lower 2phi1 parameter: (c)_n is replaced by 1.
struct LimitZero {
};

using LowerParam = std::variant<QMonomial, LimitZero>;

/// First `terms` terms (n = 0 .. terms-1) of
///   sum_n (a)_n (b)_n / ((c)_n (q)_n) z^n
/// known through `order`. Throws std::domain_error when a denominator
/// Pochhammer factor vanishes.
QSeries phi21_partial(const QMonomial &a, const QMonomial &b, const LowerParam &c, const QMonomial &z,
                      long terms, Exponent order);

/// sum_{k=0}^{floor(N/2)} (q^-N;q)_{2k} / ((q;q)_k (q^-N;q)_k) q^k as an exact
/// Laurent polynomial. Each summand is q-integral, so no truncation is involved.
QSeries cubic_sum(long N);

/// (-1)^{floor(N/3)} q^{-N(N-1)/6} when N != 2 mod 3, else 0.
QSeries cubic_sum_closed_form(long N);

} // namespace qpart
