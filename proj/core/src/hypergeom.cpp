#include <qpart/hypergeom.hpp>

#include <stdexcept>

namespace qpart
{

namespace
{

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

} // namespace

long au(long n, long j)
{
    if (n <= 0) {
        throw std::domain_error("au(n, j) needs n >= 1");
    }
    if (j < 0) {
        return -au(n, -j);
    }
    if (n == 1) {
        return -j;
    }
    if (n == 2) {
        return 0;
    }
    long s = 0;
    for (long k = 1; k <= n - 2; ++k) {
        s += floor_div(j + k, n);
    }
    return s;
}

long pentagonal_shift(long n, long j)
{
    if (n <= 0) {
        throw std::domain_error("pentagonal_shift needs n >= 1");
    }
    return floor_div((n + 1) * j, n);
}

QSeries pentagonal_sum_general(long n, int sigma, long L)
{
    if (sigma < -1 || sigma > 1) {
        throw std::domain_error("sigma must be -1, 0 or 1");
    }
    if (L < 0) {
        throw std::domain_error("L must be nonnegative");
    }
    QSeries sum;
    for (long j = -(2 * L + 2); j <= 2 * L + 2; ++j) {
        QSeries b = gauss_binomial(2 * L + sigma - au(n, j), L + sigma + pentagonal_shift(n, j));
        if (b.is_zero()) {
            continue;
        }
        const Exponent e = j * (3 * j - 1) / 2 + sigma * j;
        b = b.shifted(e);
        if (j % 2 != 0) {
            b = -b;
        }
        sum += b;
    }
    return sum;
}

QSeries phi21_partial(const QMonomial &a, const QMonomial &b, const LowerParam &c, const QMonomial &z,
                      long terms, Exponent order)
{
    if (terms < 0) {
        throw std::domain_error("phi21_partial needs a nonnegative number of terms");
    }
    QSeries sum = QSeries::zero(order);
    // Running numerator and denominator products, kept exact.
    QSeries num = QSeries::one();
    QSeries den = QSeries::one();
    QMonomial zpow{1, 0};
    for (long n = 0; n < terms; ++n) {
        if (n > 0) {
            num *= QSeries::one_minus({a.sign, a.exponent + n - 1});
            num *= QSeries::one_minus({b.sign, b.exponent + n - 1});
            if (const auto *cm = std::get_if<QMonomial>(&c)) {
                den *= QSeries::one_minus({cm->sign, cm->exponent + n - 1});
            }
            den *= QSeries::one_minus({1, n});
            zpow = zpow * z;
        }
        if (den.is_zero()) {
            throw std::domain_error("phi21_partial: lower Pochhammer factor vanishes at n = " + std::to_string(n));
        }
        if (num.is_zero()) {
            // Terminating series: every later numerator contains this zero factor.
            break;
        }
        QSeries term = num.shifted(zpow.exponent);
        if (zpow.sign < 0) {
            term = -term;
        }
        sum += divide(term, den, order);
    }
    return sum;
}

QSeries cubic_sum(long N)
{
    if (N < 0) {
        throw std::domain_error("cubic_sum needs N >= 0");
    }
    QSeries sum;
    for (long k = 0; 2 * k <= N; ++k) {
        // (q^-N)_{2k} / (q^-N)_k = prod_{j=k}^{2k-1} (1 - q^{j-N})
        QSeries num = QSeries::one();
        for (long j = k; j < 2 * k; ++j) {
            num *= QSeries::one_minus({1, j - N});
        }
        num = num.shifted(k);
        sum += divide_exact(num, q_factorial(k));
    }
    return sum;
}

QSeries cubic_sum_closed_form(long N)
{
    if (N < 0) {
        throw std::domain_error("cubic_sum needs N >= 0");
    }
    if (N % 3 == 2) {
        return QSeries();
    }
    const long sign = (N / 3) % 2 == 0 ? 1 : -1;
    return QSeries::monomial(Integer(sign), -(N * (N - 1) / 6));
}

} // namespace qpart
