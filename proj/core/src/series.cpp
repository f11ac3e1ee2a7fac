#include <qpart/series.hpp>

#include <algorithm>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qpart
{

namespace
{

constexpr Exponent kInfinity = std::numeric_limits<Exponent>::max() / 4;

Exponent order_or_inf(const std::optional<Exponent> &o)
{
    return o ? *o : kInfinity;
}

std::optional<Exponent> inf_to_opt(Exponent e)
{
    if (e >= kInfinity) {
        return std::nullopt;
    }
    return e;
}

// Dense coefficient buffer over [lo, lo + size).
struct Dense {
    Exponent lo = 0;
    std::vector<Integer> c;
};

QSeries from_dense(const Dense &d, std::optional<Exponent> order)
{
    return QSeries::from_coefficients(d.c, d.lo, order);
}

} // namespace

std::string to_string(const QMonomial &m)
{
    std::ostringstream os;
    if (m.sign < 0) {
        os << '-';
    }
    if (m.exponent == 0) {
        os << '1';
    } else if (m.exponent == 1) {
        os << 'q';
    } else {
        os << "q^" << m.exponent;
    }
    return os.str();
}

QSeries QSeries::zero(std::optional<Exponent> order)
{
    QSeries s;
    s.order_ = order;
    return s;
}

QSeries QSeries::one()
{
    return monomial(Integer(1), 0);
}

QSeries QSeries::monomial(const Integer &c, Exponent e)
{
    QSeries s;
    s.add_term(e, c);
    return s;
}

QSeries QSeries::monomial(const QMonomial &m)
{
    return monomial(Integer(m.sign), m.exponent);
}

QSeries QSeries::one_minus(const QMonomial &m)
{
    QSeries s = one();
    s.add_term(m.exponent, Integer(-m.sign));
    return s;
}

QSeries QSeries::from_coefficients(const std::vector<Integer> &coeffs, Exponent start,
                                   std::optional<Exponent> order)
{
    QSeries s;
    s.order_ = order;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Exponent e = start + static_cast<Exponent>(i);
        if (order && e > *order) {
            break;
        }
        if (sgn(coeffs[i]) != 0) {
            s.terms_.emplace_hint(s.terms_.end(), e, coeffs[i]);
        }
    }
    return s;
}

void QSeries::add_term(Exponent e, const Integer &c)
{
    if (sgn(c) == 0 || (order_ && e > *order_)) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) {
            terms_.erase(it);
        }
    }
}

void QSeries::drop_above_order()
{
    if (order_) {
        terms_.erase(terms_.upper_bound(*order_), terms_.end());
    }
}

Integer QSeries::coefficient(Exponent e) const
{
    if (order_ && e > *order_) {
        throw std::out_of_range("coefficient of q^" + std::to_string(e) + " is beyond the series order "
                                + std::to_string(*order_));
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<Exponent> QSeries::min_exponent() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.begin()->first;
}

std::optional<Exponent> QSeries::max_exponent() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.rbegin()->first;
}

std::optional<Exponent> QSeries::valuation() const
{
    if (!terms_.empty()) {
        return terms_.begin()->first;
    }
    if (order_) {
        return *order_ + 1;
    }
    return std::nullopt;
}

QSeries QSeries::truncated(Exponent order) const
{
    QSeries s = *this;
    s.order_ = order_ ? std::min(*order_, order) : order;
    s.drop_above_order();
    return s;
}

QSeries QSeries::with_order(std::optional<Exponent> order) const
{
    if (!order) {
        return *this;
    }
    return truncated(*order);
}

QSeries QSeries::shifted(Exponent e) const
{
    QSeries s;
    if (order_) {
        s.order_ = *order_ + e;
    }
    for (const auto &[k, c] : terms_) {
        s.terms_.emplace_hint(s.terms_.end(), k + e, c);
    }
    return s;
}

QSeries QSeries::negate_variable() const
{
    QSeries s = *this;
    for (auto &[k, c] : s.terms_) {
        if (k % 2 != 0) {
            c = -c;
        }
    }
    return s;
}

QSeries &QSeries::operator+=(const QSeries &o)
{
    if (o.order_ && (!order_ || *o.order_ < *order_)) {
        order_ = o.order_;
        drop_above_order();
    }
    for (const auto &[e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

QSeries &QSeries::operator-=(const QSeries &o)
{
    return *this += -o;
}

QSeries QSeries::operator-() const
{
    QSeries s = *this;
    for (auto &[e, c] : s.terms_) {
        c = -c;
    }
    return s;
}

QSeries &QSeries::operator*=(const Integer &c)
{
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, v] : terms_) {
        v *= c;
    }
    return *this;
}

QSeries &QSeries::operator*=(const QSeries &o)
{
    *this = mul(*this, o);
    return *this;
}

QSeries operator*(const QSeries &a, const QSeries &b)
{
    return mul(a, b);
}

std::string QSeries::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        Integer mag = abs(c);
        if (first) {
            if (sgn(c) < 0) {
                os << '-';
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) {
            os << mag.get_str() << '*';
        }
        os << 'q';
        if (e != 1) {
            os << '^' << e;
        }
    }
    if (order_) {
        if (!first) {
            os << " + ";
        }
        os << "O(q^" << (*order_ + 1) << ')';
    } else if (first) {
        os << '0';
    }
    return os.str();
}

QSeries add(const QSeries &x, const QSeries &y)
{
    return x + y;
}

QSeries mul(const QSeries &x, const QSeries &y)
{
    if ((x.is_zero() && x.is_exact()) || (y.is_zero() && y.is_exact())) {
        return QSeries();
    }
    const Exponent vx = *x.valuation();
    const Exponent vy = *y.valuation();
    Exponent out_order = kInfinity;
    if (x.order()) {
        out_order = std::min(out_order, *x.order() + vy);
    }
    if (y.order()) {
        out_order = std::min(out_order, *y.order() + vx);
    }
    if (x.is_zero() || y.is_zero()) {
        return QSeries::zero(inf_to_opt(out_order));
    }

    const Exponent lo = *x.min_exponent() + *y.min_exponent();
    Exponent hi = *x.max_exponent() + *y.max_exponent();
    hi = std::min(hi, out_order);
    if (hi < lo) {
        return QSeries::zero(inf_to_opt(out_order));
    }
    Dense d;
    d.lo = lo;
    d.c.assign(static_cast<std::size_t>(hi - lo + 1), Integer(0));
    for (const auto &[ea, ca] : x.terms()) {
        if (ea + *y.min_exponent() > hi) {
            break;
        }
        for (const auto &[eb, cb] : y.terms()) {
            const Exponent e = ea + eb;
            if (e > hi) {
                break;
            }
            Integer &slot = d.c[static_cast<std::size_t>(e - lo)];
            mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
    }
    return from_dense(d, inf_to_opt(out_order));
}

QSeries invert(const QSeries &x, std::optional<Exponent> order)
{
    if (x.is_zero()) {
        throw std::domain_error("cannot invert a zero series");
    }
    const Exponent v = *x.min_exponent();
    const Integer lead = x.terms().begin()->second;
    if (lead != 1 && lead != -1) {
        throw std::domain_error("cannot invert: lowest coefficient " + lead.get_str() + " is not a unit");
    }
    Exponent result_order;
    if (x.order()) {
        result_order = *x.order() - 2 * v;
        if (order) {
            result_order = std::min(result_order, *order);
        }
    } else if (order) {
        result_order = *order;
    } else {
        if (x.term_count() == 1) {
            return QSeries::monomial(lead, -v);
        }
        throw std::invalid_argument("inverting an exact non-monomial needs a truncation order");
    }

    const Exponent count = result_order + v + 1;
    if (count <= 0) {
        return QSeries::zero(result_order);
    }
    // x = q^v * u with u_0 = lead; 1/x = q^-v * sum y_n q^n.
    std::vector<std::pair<Exponent, Integer>> u;
    for (auto it = std::next(x.terms().begin()); it != x.terms().end(); ++it) {
        const Exponent i = it->first - v;
        if (i >= count) {
            break;
        }
        u.emplace_back(i, it->second);
    }
    std::vector<Integer> y(static_cast<std::size_t>(count));
    y[0] = lead;
    Integer acc;
    for (Exponent n = 1; n < count; ++n) {
        acc = 0;
        for (const auto &[i, ui] : u) {
            if (i > n) {
                break;
            }
            mpz_addmul(acc.get_mpz_t(), ui.get_mpz_t(), y[static_cast<std::size_t>(n - i)].get_mpz_t());
        }
        y[static_cast<std::size_t>(n)] = lead == 1 ? Integer(-acc) : acc;
    }
    return QSeries::from_coefficients(y, -v, result_order);
}

QSeries divide(const QSeries &num, const QSeries &den, Exponent order)
{
    if (num.is_zero() && num.is_exact()) {
        return QSeries();
    }
    const Exponent vn = *num.valuation();
    QSeries r = mul(num, invert(den, order - vn));
    return r.truncated(order);
}

QSeries divide_exact(const QSeries &num, const QSeries &den)
{
    if (!num.is_exact() || !den.is_exact()) {
        throw std::invalid_argument("divide_exact needs exact operands");
    }
    if (den.is_zero()) {
        throw std::domain_error("division by zero polynomial");
    }
    if (num.is_zero()) {
        return QSeries();
    }
    const Exponent dv = *den.min_exponent();
    const Integer lead = den.terms().begin()->second;
    if (lead != 1 && lead != -1) {
        throw std::domain_error("divide_exact: divisor lowest coefficient is not a unit");
    }
    const Exponent dmax = *den.max_exponent();
    const Exponent nlo = *num.min_exponent();
    const Exponent nhi = *num.max_exponent();
    const Exponent qlo = nlo - dv;
    const Exponent qhi = nhi - dmax;
    if (qhi < qlo) {
        throw std::domain_error("divide_exact: divisor does not divide dividend");
    }
    std::vector<Integer> rem(static_cast<std::size_t>(nhi - nlo + 1));
    for (const auto &[e, c] : num.terms()) {
        rem[static_cast<std::size_t>(e - nlo)] = c;
    }
    std::vector<Integer> quot(static_cast<std::size_t>(qhi - qlo + 1));
    for (Exponent k = qlo; k <= qhi; ++k) {
        const Integer &r = rem[static_cast<std::size_t>(k + dv - nlo)];
        if (sgn(r) == 0) {
            continue;
        }
        Integer qk = lead == 1 ? r : Integer(-r);
        for (const auto &[e, c] : den.terms()) {
            Integer &slot = rem[static_cast<std::size_t>(k + e - nlo)];
            mpz_submul(slot.get_mpz_t(), qk.get_mpz_t(), c.get_mpz_t());
        }
        quot[static_cast<std::size_t>(k - qlo)] = std::move(qk);
    }
    for (const auto &c : rem) {
        if (sgn(c) != 0) {
            throw std::domain_error("divide_exact: divisor does not divide dividend");
        }
    }
    return QSeries::from_coefficients(quot, qlo);
}

QSeries pochhammer(const QMonomial &a, Exponent step, std::optional<Exponent> n,
                   std::optional<Exponent> order)
{
    if (!n) {
        if (step <= 0) {
            throw std::domain_error("infinite q-Pochhammer product needs a positive step");
        }
        if (!order) {
            throw std::invalid_argument("infinite q-Pochhammer product needs a truncation order");
        }
    } else if (*n < 0) {
        throw std::domain_error("q-Pochhammer length must be nonnegative");
    }

    // Factors with nonpositive exponent are expanded exactly; the rest are
    // truncated with enough headroom to absorb the exact part's low terms.
    QSeries exact_part = QSeries::one();
    std::vector<Exponent> positive;
    for (Exponent j = 0; !n || j < *n; ++j) {
        const Exponent e = a.exponent + step * j;
        if (e <= 0) {
            exact_part *= QSeries::one_minus({a.sign, e});
            if (exact_part.is_zero()) {
                return QSeries();
            }
            continue;
        }
        if (!n && e > *order - std::min<Exponent>(0, *exact_part.min_exponent())) {
            break;
        }
        positive.push_back(e);
    }

    if (order) {
        // The exact part may sit below zero; its lowest exponent shifts authority.
        const Exponent low = std::min<Exponent>(0, *exact_part.min_exponent());
        const Exponent work = *order - low;
        std::vector<Integer> d(static_cast<std::size_t>(std::max<Exponent>(work, 0) + 1));
        d[0] = 1;
        Exponent deg = 0;
        for (Exponent e : positive) {
            if (e > work) {
                continue;
            }
            const Integer s(a.sign);
            const Exponent top = std::min(work, deg + e);
            for (Exponent k = top; k >= e; --k) {
                mpz_submul(d[static_cast<std::size_t>(k)].get_mpz_t(), s.get_mpz_t(),
                           d[static_cast<std::size_t>(k - e)].get_mpz_t());
            }
            deg = top;
        }
        QSeries pos = QSeries::from_coefficients(d, 0, work);
        QSeries r = mul(exact_part, pos);
        return r.truncated(*order);
    }

    Exponent deg = 0;
    for (Exponent e : positive) {
        deg += e;
    }
    std::vector<Integer> d(static_cast<std::size_t>(deg + 1));
    d[0] = 1;
    Exponent cur = 0;
    const Integer s(a.sign);
    for (Exponent e : positive) {
        for (Exponent k = cur + e; k >= e; --k) {
            mpz_submul(d[static_cast<std::size_t>(k)].get_mpz_t(), s.get_mpz_t(),
                       d[static_cast<std::size_t>(k - e)].get_mpz_t());
        }
        cur += e;
    }
    return mul(exact_part, QSeries::from_coefficients(d, 0));
}

namespace
{

std::vector<Integer> gaussian_dense(Exponent n, Exponent m)
{
    const Exponent k = std::min(n, m);
    const Exponent big = std::max(n, m);
    std::vector<Integer> p(static_cast<std::size_t>(k * (big + 1) + 1));
    p[0] = 1;
    Exponent deg = 0;
    for (Exponent j = 1; j <= k; ++j) {
        // multiply by (1 - q^(big + j))
        const Exponent s = big + j;
        for (Exponent e = deg + s; e >= s; --e) {
            p[static_cast<std::size_t>(e)] -= p[static_cast<std::size_t>(e - s)];
        }
        deg += s;
        // divide by (1 - q^j)
        for (Exponent e = j; e <= deg; ++e) {
            p[static_cast<std::size_t>(e)] += p[static_cast<std::size_t>(e - j)];
        }
        deg -= j;
    }
    p.resize(static_cast<std::size_t>(deg + 1));
    return p;
}

} // namespace

QSeries qbinom(Exponent n, Exponent m)
{
    if (n < 0 || m < 0) {
        return QSeries();
    }
    static std::mutex mu;
    static std::map<std::pair<Exponent, Exponent>, QSeries> cache;
    const auto key = std::minmax(n, m);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) {
            return it->second;
        }
    }
    QSeries r = QSeries::from_coefficients(gaussian_dense(n, m), 0);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(r)).first->second;
}

QSeries gauss_binomial(Exponent top, Exponent bottom, Exponent base)
{
    QSeries g = qbinom(bottom, top - bottom);
    if (base == 1 || g.is_zero()) {
        return g;
    }
    if (base <= 0) {
        throw std::domain_error("gauss_binomial base must be positive");
    }
    std::vector<Integer> dense(static_cast<std::size_t>(*g.max_exponent() * base + 1));
    for (const auto &[e, c] : g.terms()) {
        dense[static_cast<std::size_t>(e * base)] = c;
    }
    return QSeries::from_coefficients(dense, 0);
}

SeriesComparison compare(const QSeries &lhs, const QSeries &rhs, CompareMode mode)
{
    SeriesComparison out;
    if (mode == CompareMode::exact_polynomial && (!lhs.is_exact() || !rhs.is_exact())) {
        throw std::invalid_argument("exact-polynomial comparison needs exact operands");
    }
    Exponent lo = 0;
    if (lhs.min_exponent()) {
        lo = std::min(lo, *lhs.min_exponent());
    }
    if (rhs.min_exponent()) {
        lo = std::min(lo, *rhs.min_exponent());
    }
    Exponent hi;
    if (lhs.is_exact() && rhs.is_exact()) {
        hi = 0;
        if (lhs.max_exponent()) {
            hi = std::max(hi, *lhs.max_exponent());
        }
        if (rhs.max_exponent()) {
            hi = std::max(hi, *rhs.max_exponent());
        }
    } else {
        hi = std::min(order_or_inf(lhs.order()), order_or_inf(rhs.order()));
    }
    out.lo = lo;
    out.hi = hi;

    auto a = lhs.terms().lower_bound(lo);
    auto b = rhs.terms().lower_bound(lo);
    const auto a_end = lhs.terms().upper_bound(hi);
    const auto b_end = rhs.terms().upper_bound(hi);
    while (a != a_end || b != b_end) {
        Exponent e;
        Integer ca(0), cb(0);
        if (b == b_end || (a != a_end && a->first < b->first)) {
            e = a->first;
            ca = a->second;
            ++a;
        } else if (a == a_end || b->first < a->first) {
            e = b->first;
            cb = b->second;
            ++b;
        } else {
            e = a->first;
            ca = a->second;
            cb = b->second;
            ++a;
            ++b;
        }
        if (ca != cb) {
            out.equal = false;
            out.first_mismatch = SeriesComparison::Mismatch{e, ca, cb};
            break;
        }
    }
    return out;
}

} // namespace qpart
