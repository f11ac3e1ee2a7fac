#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qpart
{

using Integer = mpz_class;

// An exponent or truncation order of a series in q.
using Exponent = std::int64_t;

/// The exact value sign * q^exponent. Used for the parameters of
/// q-Pochhammer symbols and basic hypergeometric sums.
struct QMonomial {
    int sign = 1;
    Exponent exponent = 0;

    static QMonomial q_pow(Exponent e) { return {1, e}; }
    static QMonomial minus_q_pow(Exponent e) { return {-1, e}; }

    QMonomial operator*(const QMonomial &o) const { return {sign * o.sign, exponent + o.exponent}; }
    friend bool operator==(const QMonomial &, const QMonomial &) = default;
};

std::string to_string(const QMonomial &m);

/**
 * Truncated Laurent series in q with arbitrary-precision coefficients.
 *
 * A series either is exact (a Laurent polynomial, authoritative at every
 * exponent) or carries an order T: coefficients at exponents <= T are known,
 * everything above T is unknown and never stored. Stored coefficients are
 * never zero.
 *
 * Arithmetic propagates authority: a sum is known through the smaller of the
 * two orders, a product through min(T_x + v_y, T_y + v_x) where v is the
 * lowest exponent actually present (a truncated zero counts as T + 1).
 */
class QSeries
{
public:
    using Terms = std::map<Exponent, Integer>;

    /// Exact zero.
    QSeries() = default;

    static QSeries zero(std::optional<Exponent> order = std::nullopt);
    static QSeries one();
    static QSeries monomial(const Integer &c, Exponent e);
    static QSeries monomial(const QMonomial &m);
    /// 1 - m, the generic factor of a q-Pochhammer product.
    static QSeries one_minus(const QMonomial &m);
    /// Exact polynomial sum c_i q^(start + i).
    static QSeries from_coefficients(const std::vector<Integer> &coeffs, Exponent start = 0,
                                     std::optional<Exponent> order = std::nullopt);

    bool is_exact() const { return !order_.has_value(); }
    const std::optional<Exponent> &order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms &terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of q^e. Throws std::out_of_range above the order.
    Integer coefficient(Exponent e) const;

    std::optional<Exponent> min_exponent() const;
    std::optional<Exponent> max_exponent() const;

    /// Lowest exponent that is not known to be zero (order + 1 for a truncated zero).
    std::optional<Exponent> valuation() const;

    QSeries truncated(Exponent order) const;
    QSeries with_order(std::optional<Exponent> order) const;

    /// Multiply by q^e.
    QSeries shifted(Exponent e) const;
    /// Substitute q -> -q.
    QSeries negate_variable() const;

    QSeries &operator+=(const QSeries &o);
    QSeries &operator-=(const QSeries &o);
    QSeries &operator*=(const QSeries &o);
    QSeries &operator*=(const Integer &c);

    friend QSeries operator+(QSeries a, const QSeries &b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries &b) { return a -= b; }
    friend QSeries operator*(const QSeries &a, const QSeries &b);
    friend QSeries operator*(QSeries a, const Integer &c) { return a *= c; }
    friend QSeries operator*(const Integer &c, QSeries a) { return a *= c; }
    QSeries operator-() const;

    /// Structural equality: same terms and same order.
    friend bool operator==(const QSeries &, const QSeries &) = default;

    /// Ascending rendering, e.g. "1 - q - q^2 + 2*q^-3 + O(q^11)".
    std::string to_string() const;

private:
    void add_term(Exponent e, const Integer &c);
    void drop_above_order();

    Terms terms_;
    std::optional<Exponent> order_;
};

QSeries add(const QSeries &x, const QSeries &y);
QSeries mul(const QSeries &x, const QSeries &y);

/// Power-series inverse. Needs a lowest coefficient of +-1. For an exact
/// operand an order must be given; otherwise it is derived from x.
QSeries invert(const QSeries &x, std::optional<Exponent> order = std::nullopt);

/// num / den known through `order` (or less when the inputs carry less).
QSeries divide(const QSeries &num, const QSeries &den, Exponent order);

/// Exact Laurent-polynomial division. Throws std::domain_error when den does
/// not divide num or den's lowest coefficient is not a unit.
QSeries divide_exact(const QSeries &num, const QSeries &den);

/// (a; q^step)_n = prod_{j<n} (1 - a q^(step*j)); `n == nullopt` means the
/// infinite product, which needs step > 0 and is known through `order`.
/// Factors with nonpositive exponent are expanded exactly.
QSeries pochhammer(const QMonomial &a, Exponent step, std::optional<Exponent> n,
                   std::optional<Exponent> order = std::nullopt);

inline QSeries q_factorial(Exponent n, std::optional<Exponent> order = std::nullopt)
{
    return pochhammer(QMonomial::q_pow(1), 1, n, order);
}

/// Gaussian polynomial generating partitions in an n x m box:
/// (q)_{n+m} / ((q)_n (q)_m) for n, m >= 0 and 0 otherwise. Degree n*m.
QSeries qbinom(Exponent n, Exponent m);

/// [top over bottom] in base q^base, i.e. qbinom(bottom, top - bottom)
/// with q replaced by q^base.
QSeries gauss_binomial(Exponent top, Exponent bottom, Exponent base = 1);

/// Result of comparing two series over their common authoritative range.
struct SeriesComparison {
    bool equal = true;
    /// Inclusive exponent interval actually compared; empty when lo > hi.
    Exponent lo = 0;
    Exponent hi = -1;
    struct Mismatch {
        Exponent exponent;
        Integer lhs;
        Integer rhs;
    };
    std::optional<Mismatch> first_mismatch;
};

enum class CompareMode { exact_polynomial, truncated_series };

/// In exact mode both operands must be exact and agree at every exponent.
/// In truncated mode they are compared at exponents <= min(order).
SeriesComparison compare(const QSeries &lhs, const QSeries &rhs, CompareMode mode);

} // namespace qpart
