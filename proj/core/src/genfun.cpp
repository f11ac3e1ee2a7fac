#include <qpart/genfun.hpp>

#include <qpart/bijection.hpp>
#include <qpart/hypergeom.hpp>
#include <qpart/mod2.hpp>

#include <array>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace qpart
{

namespace
{

constexpr std::array<std::pair<Family, const char *>, 15> kFamilyNames{{
    {Family::Q, "Q"},
    {Family::QL, "QL"},
    {Family::P, "P"},
    {Family::PL, "PL"},
    {Family::G, "G"},
    {Family::GL, "GL"},
    {Family::C, "C"},
    {Family::CL, "CL"},
    {Family::Chat, "Chat"},
    {Family::ChatL, "ChatL"},
    {Family::E, "E"},
    {Family::Etilde, "Etilde"},
    {Family::Ehat, "Ehat"},
    {Family::FG, "FG"},
    {Family::SPC, "SPC"},
}};

struct FormulaInfo {
    Formula formula;
    const char *name;
    Family family;
};

constexpr std::array<FormulaInfo, 22> kFormulas{{
    {Formula::rank_tail_sum, "rank-tail-sum", Family::Q},
    {Formula::rank_exact_sum, "rank-exact-sum", Family::P},
    {Formula::bounded_rank_advance_two, "bounded-rank-advance-two", Family::QL},
    {Formula::bounded_rank_advance_one, "bounded-rank-advance-one", Family::QL},
    {Formula::bounded_rank_alternate_two, "bounded-rank-alternate-two", Family::QL},
    {Formula::bounded_rank_alternate_one, "bounded-rank-alternate-one", Family::QL},
    {Formula::bounded_rank_periodic_one, "bounded-rank-periodic-one", Family::QL},
    {Formula::bounded_rank_periodic_two, "bounded-rank-periodic-two", Family::QL},
    {Formula::bounded_rank_exact, "bounded-rank-exact", Family::PL},
    {Formula::crank_sum, "crank-sum", Family::Chat},
    {Formula::crank_split_sum, "crank-split-sum", Family::Chat},
    {Formula::rank_set_sum, "rank-set-sum", Family::G},
    {Formula::bounded_rank_set_sum, "bounded-rank-set-sum", Family::GL},
    {Formula::bounded_crank_alternating, "bounded-crank-alternating", Family::ChatL},
    {Formula::bounded_crank_dissection, "bounded-crank-dissection", Family::ChatL},
    {Formula::distinct_odd_product, "distinct-odd-product", Family::E},
    {Formula::m2_rank_tail_sum, "m2-rank-tail-sum", Family::Etilde},
    {Formula::m2_rank_head_sum, "m2-rank-head-sum", Family::Ehat},
    {Formula::m2_rank_head_double_sum, "m2-rank-head-double-sum", Family::Ehat},
    {Formula::k_rank_tail_sum, "k-rank-tail-sum", Family::FG},
    {Formula::self_pseudo_conjugate_sum, "self-pseudo-conjugate-sum", Family::SPC},
    {Formula::self_pseudo_conjugate_product, "self-pseudo-conjugate-product", Family::SPC},
}};

const FormulaInfo &info(Formula f)
{
    for (const auto &fi : kFormulas) {
        if (fi.formula == f) {
            return fi;
        }
    }
    throw std::logic_error("unknown formula");
}

void require(bool ok, const std::string &what)
{
    if (!ok) {
        throw std::domain_error(what);
    }
}

Exponent need_order(const SeriesSpec &spec)
{
    require(spec.order.has_value(), to_string(spec.family) + " is an infinite series and needs a truncation order");
    require(*spec.order >= 0, "truncation order must be nonnegative");
    return *spec.order;
}

long floor_div(long a, long b)
{
    const long q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

long tri(long j)
{
    return j * (j + 1) / 2;
}

int alt(long j)
{
    return j % 2 == 0 ? 1 : -1;
}

QSeries mono(long sign, Exponent e)
{
    return QSeries::monomial(Integer(sign), e);
}

QSeries over_qinf(const QSeries &s, Exponent order)
{
    return (s * partition_generating(order)).truncated(order);
}

QSeries delta_term(bool cond, long sign, Exponent e)
{
    return cond ? mono(sign, e) : QSeries::zero();
}

// ---- census -------------------------------------------------------------

template <class Pred>
QSeries census(Exponent order, Pred counted)
{
    QSeries::Terms terms;
    for (long n = 0; n <= order; ++n) {
        long c = 0;
        for (const Partition &p : partitions_of(n)) {
            c += counted(p) ? 1 : 0;
        }
        if (c != 0) {
            terms[n] = c;
        }
    }
    QSeries out = QSeries::zero(order);
    for (const auto &[e, c] : terms) {
        out += QSeries::monomial(c, e);
    }
    return out.truncated(order);
}

// Partitions inside an L x height box, exact unless an order is given.
template <class Pred>
QSeries box_census(long L, long height, std::optional<Exponent> order, Pred counted)
{
    QSeries out;
    if (L < 0 || height < 0) {
        return order ? QSeries::zero(order) : out;
    }
    long top = L * height;
    if (order) {
        top = std::min<long>(top, *order);
    }
    EnumerationOptions opts;
    opts.max_part = static_cast<Part>(L);
    opts.max_parts = height;
    for (long n = 0; n <= top; ++n) {
        long c = 0;
        for_each_partition(n, opts, [&](const Partition &p) { c += counted(p) ? 1 : 0; });
        if (c != 0) {
            out += QSeries::monomial(Integer(c), n);
        }
    }
    return order ? out.truncated(*order) : out;
}

// ---- pieces shared by several formulas ----------------------------------

// sum_{j>=1} (-1)^{j-1} q^{j(3j-1)/2 + mj} binom(j), with binom returning
// {top, bottom}. The Gaussian polynomials vanish long before jmax.
template <class Binom>
QSeries bounded_pentagonal(long m, long L, Binom binom, bool plus_form = false)
{
    QSeries s;
    const long jmax = 2 * L + std::labs(m) + 4;
    for (long j = 1; j <= jmax; ++j) {
        const auto [top, bottom] = binom(j);
        const QSeries g = gauss_binomial(top, bottom);
        if (g.is_zero()) {
            continue;
        }
        const Exponent e = (plus_form ? j * (3 * j + 1) / 2 : j * (3 * j - 1) / 2) + m * j;
        s += (g * Integer(alt(j - 1))).shifted(e);
    }
    return s;
}

QSeries rank_set_series(long k, Exponent order)
{
    require(k >= -1, "rank-set sum needs k >= -1");
    QSeries s;
    for (long j = 0; tri(j) + k * j <= order; ++j) {
        s += mono(alt(j), tri(j) + k * j);
    }
    return over_qinf(s, order);
}

QSeries bounded_rank_set(long k, long L, Exponent order)
{
    QSeries out = QSeries::zero(order);
    for (long j = 0; j <= L; ++j) {
        const Exponent e = tri(j) + k * j;
        if (e > order) {
            continue;
        }
        out += divide(mono(alt(j), e), q_factorial(L - j), order);
    }
    return out;
}

// (1-q) q^k
QSeries bounded_crank_correction(long k)
{
    return QSeries::one_minus(QMonomial::q_pow(1)).shifted(k);
}

QSeries crank_alternating(long k, long L, Exponent order)
{
    QSeries out = QSeries::zero(order);
    for (long j = 1; j <= L; ++j) {
        const Exponent e = tri(j - 1) + k * j;
        if (e > order) {
            continue;
        }
        const QSeries num = mono(alt(j - 1), e) * QSeries::one_minus(QMonomial::q_pow(j));
        out += divide(num, q_factorial(L - j), order);
    }
    if (k > 1) {
        out += divide(bounded_crank_correction(k), q_factorial(k), order);
    }
    out -= bounded_crank_correction(k) * gauss_binomial(L - 1 + k, k);
    return out.truncated(order);
}

QSeries crank_dissection(long k, long L, Exponent order)
{
    QSeries out = QSeries::zero(order);
    if (k > 1) {
        out += divide(bounded_crank_correction(k), q_factorial(k), order);
    }
    for (long mu = 1; mu <= L - 1; ++mu) {
        const Exponent e = (mu + 1) * (mu + k) + mu;
        if (e > order) {
            break;
        }
        const QSeries num = gauss_binomial(L - 1 + k, mu + k).shifted(e);
        out += divide(num, pochhammer(QMonomial::q_pow(2), 1, mu - 1), order);
    }
    return out.truncated(order);
}

QSeries m2_signed_sum(long r, Exponent order, long j0, bool plus_one)
{
    QSeries s;
    for (long j = j0;; ++j) {
        const Exponent e = 2 * r * j + j * (2 * j + (plus_one ? 1 : -1));
        if (e > order) {
            break;
        }
        s += mono(plus_one ? alt(j) : alt(j - 1), e);
    }
    return (s * distinct_odd_generating(order)).truncated(order);
}

// [top over bottom] in base q^2 through (q^{2(1+top-bottom)};q^2)_bottom / (q^2;q^2)_bottom,
// which is 1 at bottom = 0 even when top = -1.
QSeries base_two_binomial(long top, long bottom)
{
    if (bottom == 0) {
        return QSeries::one();
    }
    return gauss_binomial(top, bottom, 2);
}

QSeries m2_double_sum(long r, Exponent order)
{
    QSeries out;
    for (long j = 0; j * j <= order; ++j) {
        for (long i = 0; j * j + 2 * i <= order; ++i) {
            const QSeries t = base_two_binomial(i + j + r, j) * base_two_binomial(2 * i + j + r - 1, i);
            out += t.shifted(j * j + 2 * i);
        }
    }
    return out.truncated(order);
}

QSeries spc_sum(Exponent order)
{
    QSeries out = QSeries::one() + mono(1, 1);
    for (long M = 1; M * (M + 1) + M <= order; ++M) {
        QSeries inner;
        for (Exponent e = M * (M + 1) + M; e <= order; ++e) {
            inner += mono(1, e);
        }
        out += divide(inner, pochhammer(QMonomial::q_pow(4), 2, M - 1), order);
    }
    return out.truncated(order);
}

} // namespace

// ---- names ---------------------------------------------------------------

std::string to_string(Family f)
{
    for (const auto &[fam, name] : kFamilyNames) {
        if (fam == f) {
            return name;
        }
    }
    throw std::logic_error("unknown family");
}

std::optional<Family> parse_family(std::string_view name)
{
    for (const auto &[fam, n] : kFamilyNames) {
        if (name == n) {
            return fam;
        }
    }
    return std::nullopt;
}

std::string to_string(Formula f)
{
    return info(f).name;
}

std::optional<Formula> parse_formula(std::string_view name)
{
    for (const auto &fi : kFormulas) {
        if (name == fi.name) {
            return fi.formula;
        }
    }
    return std::nullopt;
}

Family formula_family(Formula f)
{
    return info(f).family;
}

std::vector<Formula> formulas_for(Family family)
{
    std::vector<Formula> out;
    for (const auto &fi : kFormulas) {
        if (fi.family == family) {
            out.push_back(fi.formula);
        }
    }
    return out;
}

// ---- enumeration cache -----------------------------------------------------

const std::vector<Partition> &partitions_of(long n)
{
    static std::mutex mutex;
    static std::vector<std::unique_ptr<std::vector<Partition>>> cache;
    require(n >= 0, "partitions_of needs n >= 0");
    {
        std::lock_guard lock(mutex);
        if (static_cast<std::size_t>(n) < cache.size() && cache[static_cast<std::size_t>(n)]) {
            return *cache[static_cast<std::size_t>(n)];
        }
    }
    // Enumerate outside the lock; a concurrent duplicate is discarded.
    auto fresh = std::make_unique<std::vector<Partition>>(enumerate_partitions(n));
    std::lock_guard lock(mutex);
    if (cache.size() <= static_cast<std::size_t>(n)) {
        cache.resize(static_cast<std::size_t>(n) + 1);
    }
    auto &slot = cache[static_cast<std::size_t>(n)];
    if (!slot) {
        slot = std::move(fresh);
    }
    return *slot;
}

// ---- oracles ---------------------------------------------------------------

QSeries oracle_series(const SeriesSpec &spec)
{
    const long m = spec.m;
    const long L = spec.L;
    const long k = spec.k;
    const long r = spec.r;
    switch (spec.family) {
    case Family::Q:
        return census(need_order(spec), [m](const Partition &p) { return !p.empty() && rank(p) >= m; });
    case Family::P:
        return census(need_order(spec), [m](const Partition &p) { return !p.empty() && rank(p) == m; });
    case Family::QL:
        require(L >= 0, "QL needs L >= 0");
        // rank >= m and lambda <= L force at most L - m parts.
        return box_census(L, L - m, spec.order, [m](const Partition &p) { return !p.empty() && rank(p) >= m; });
    case Family::PL:
        require(L >= 0, "PL needs L >= 0");
        return box_census(L, L - m, spec.order, [m](const Partition &p) { return !p.empty() && rank(p) == m; });
    case Family::G:
        return census(need_order(spec), [k](const Partition &p) { return rank_set_contains(p, k); });
    case Family::GL:
        require(L >= 0, "GL needs L >= 0");
        return census(need_order(spec), [k, L](const Partition &p) {
            return largest_part(p) <= L && rank_set_contains(p, k);
        });
    case Family::C:
        return census(need_order(spec), [k](const Partition &p) { return p.empty() ? k >= 0 : crank(p) <= k; });
    case Family::CL:
        require(L >= 0, "CL needs L >= 0");
        return census(need_order(spec), [k, L](const Partition &p) {
            return largest_part(p) <= L && (p.empty() ? k >= 0 : crank(p) <= k);
        });
    case Family::Chat:
        return census(need_order(spec), [k](const Partition &p) { return p.empty() ? k == 0 : crank(p) == k; });
    case Family::ChatL:
        require(L >= 0, "ChatL needs L >= 0");
        return census(need_order(spec), [k, L](const Partition &p) {
            return largest_part(p) <= L && (p.empty() ? k == 0 : crank(p) == k);
        });
    case Family::E:
        return census(need_order(spec), [](const Partition &p) { return has_distinct_odd_parts(p); });
    case Family::Etilde:
        return census(need_order(spec), [r](const Partition &p) {
            return !p.empty() && has_distinct_odd_parts(p) && m2_rank(Mod2Graph(p)) >= r;
        });
    case Family::Ehat:
        return census(need_order(spec), [r](const Partition &p) {
            return has_distinct_odd_parts(p) && (p.empty() || m2_rank(Mod2Graph(p)) <= r);
        });
    case Family::FG:
        require(k >= 2, "FG needs k >= 2");
        return census(need_order(spec), [k, m](const Partition &p) {
            return static_cast<long>(durfee_dissection(p).sizes.size()) >= k - 1 && k_rank(p, k) >= m;
        });
    case Family::SPC:
        return census(need_order(spec), [](const Partition &p) { return pseudo_conjugate(p) == p; });
    }
    throw std::logic_error("unknown family");
}

// ---- formulas --------------------------------------------------------------

QSeries partition_generating(Exponent order)
{
    return invert(pochhammer(QMonomial::q_pow(1), 1, std::nullopt, order), order);
}

QSeries distinct_odd_generating(Exponent order)
{
    return divide(pochhammer(QMonomial::minus_q_pow(1), 2, std::nullopt, order),
                  pochhammer(QMonomial::q_pow(2), 2, std::nullopt, order), order);
}

QSeries crank_pentagonal_part(long k, Exponent order)
{
    const long a = std::labs(k);
    QSeries s;
    for (long j = 1; tri(j - 1) + j * a <= order; ++j) {
        s += mono(alt(j - 1), tri(j - 1) + j * a) * QSeries::one_minus(QMonomial::q_pow(j));
    }
    return over_qinf(s, order);
}

QSeries formula_series(const SeriesSpec &spec, Formula f, long period)
{
    require(formula_family(f) == spec.family,
            to_string(f) + " expresses " + to_string(formula_family(f)) + ", not " + to_string(spec.family));
    const long m = spec.m;
    const long L = spec.L;
    const long k = spec.k;
    const long r = spec.r;
    const auto finish = [&spec](QSeries s) { return spec.order ? s.truncated(*spec.order) : s; };

    switch (f) {
    case Formula::rank_tail_sum: {
        require(m >= 0, "rank-tail-sum needs m >= 0");
        const Exponent T = need_order(spec);
        QSeries s;
        for (long j = 1; j * (3 * j - 1) / 2 + m * j <= T; ++j) {
            s += mono(alt(j - 1), j * (3 * j - 1) / 2 + m * j);
        }
        return over_qinf(s, T);
    }
    case Formula::rank_exact_sum: {
        const Exponent T = need_order(spec);
        const long a = std::labs(m);
        QSeries s;
        for (long j = 1; j * (3 * j - 1) / 2 + a * j <= T; ++j) {
            s += mono(alt(j - 1), j * (3 * j - 1) / 2 + a * j) * QSeries::one_minus(QMonomial::q_pow(j));
        }
        return over_qinf(s, T);
    }
    case Formula::bounded_rank_advance_two:
        require(m >= 0 && L >= 0, "bounded-rank-advance-two needs m >= 0, L >= 0");
        return finish(bounded_pentagonal(m, L, [&](long j) { return std::pair{2 * L - m + j, L - m - j}; }));
    case Formula::bounded_rank_advance_one:
        require(m >= 0 && L >= 0, "bounded-rank-advance-one needs m >= 0, L >= 0");
        return finish(bounded_pentagonal(m, L, [&](long j) { return std::pair{2 * L - m - j + 1, L + j}; }));
    case Formula::bounded_rank_alternate_two:
        require(m >= 0 && L >= 0, "bounded-rank-alternate-two needs m >= 0, L >= 0");
        return finish(bounded_pentagonal(
            m, L, [&](long j) { return std::pair{2 * L - m + 1, L - floor_div(-3 * j, 2)}; }));
    case Formula::bounded_rank_alternate_one:
        require(m >= 0 && L >= 0, "bounded-rank-alternate-one needs m >= 0, L >= 0");
        return finish(
            bounded_pentagonal(m, L, [&](long j) { return std::pair{2 * L - m, L + floor_div(3 * j, 2)}; }));
    case Formula::bounded_rank_periodic_one:
        require(m >= -1 && L >= 0 && period >= 1, "bounded-rank-periodic-one needs m >= -1, L >= 0, n >= 1");
        return finish(bounded_pentagonal(m, L, [&](long j) {
            return std::pair{2 * L - m - au(period, j), L + floor_div((period + 1) * j, period)};
        }));
    case Formula::bounded_rank_periodic_two:
        require(m >= 0 && L >= 0 && period >= 1, "bounded-rank-periodic-two needs m >= 0, L >= 0, n >= 1");
        return finish(bounded_pentagonal(m, L, [&](long j) {
            return std::pair{2 * L + 1 - m + au(period, j), L + 1 - m + floor_div(-(period + 1) * j, period)};
        }));
    case Formula::bounded_rank_exact: {
        require(L >= 0, "bounded-rank-exact needs L >= 0");
        // The linear exponent is |m| j; with m j the negative-m case, obtained
        // from m >= 0 through P_{-|m|}^L = P_{|m|}^{L+|m|}, comes out wrong.
        const long s = m >= 0 ? 1 : -1;
        const long a = std::labs(m);
        QSeries out = bounded_pentagonal(a, L, [&](long j) { return std::pair{2 * L - m, L + s * floor_div(3 * j, 2)}; });
        out -= bounded_pentagonal(
            a, L, [&](long j) { return std::pair{2 * L - m, L - s * floor_div(-3 * j, 2)}; }, true);
        return finish(out);
    }
    case Formula::crank_sum: {
        const Exponent T = need_order(spec);
        QSeries out = crank_pentagonal_part(k, T);
        out += delta_term(k == 0, 1, 1);
        out += delta_term(k == 1, -1, 1);
        return out.truncated(T);
    }
    case Formula::crank_split_sum: {
        require(k >= 0, "crank-split-sum needs k >= 0");
        const Exponent T = need_order(spec);
        QSeries s;
        for (long j = 1; tri(j - 1) + k * j <= T; ++j) {
            s += mono(alt(j - 1), tri(j - 1) + k * j);
            s -= mono(alt(j - 1), tri(j) + k * j);
        }
        QSeries out = over_qinf(s, T);
        out += delta_term(k == 0, 1, 1);
        out += delta_term(k == 1, -1, 1);
        return out.truncated(T);
    }
    case Formula::rank_set_sum:
        return rank_set_series(k, need_order(spec));
    case Formula::bounded_rank_set_sum:
        require(0 <= k && k <= L && L >= 1, "bounded-rank-set-sum needs 0 <= k <= L, L >= 1");
        return bounded_rank_set(k, L, need_order(spec));
    case Formula::bounded_crank_alternating:
        require(0 < k && k <= L, "bounded-crank-alternating needs 0 < k <= L");
        return crank_alternating(k, L, need_order(spec));
    case Formula::bounded_crank_dissection:
        require(0 < k && k <= L, "bounded-crank-dissection needs 0 < k <= L");
        return crank_dissection(k, L, need_order(spec));
    case Formula::distinct_odd_product:
        return distinct_odd_generating(need_order(spec));
    case Formula::m2_rank_tail_sum:
        require(r >= 0, "m2-rank-tail-sum needs r >= 0");
        return m2_signed_sum(r, need_order(spec), 1, false);
    case Formula::m2_rank_head_sum:
        require(r >= 0, "m2-rank-head-sum needs r >= 0");
        return m2_signed_sum(r, need_order(spec), 0, true);
    case Formula::m2_rank_head_double_sum:
        require(r >= 0, "m2-rank-head-double-sum needs r >= 0");
        return m2_double_sum(r, need_order(spec));
    case Formula::k_rank_tail_sum: {
        require(k >= 2 && m >= 0, "k-rank-tail-sum needs k >= 2, m >= 0");
        const Exponent T = need_order(spec);
        QSeries s;
        for (long j = 1; j * ((2 * k - 1) * j - 1) / 2 + m * j <= T; ++j) {
            s += mono(alt(j - 1), j * ((2 * k - 1) * j - 1) / 2 + m * j);
        }
        return over_qinf(s, T);
    }
    case Formula::self_pseudo_conjugate_sum:
        return spc_sum(need_order(spec));
    case Formula::self_pseudo_conjugate_product: {
        const Exponent T = need_order(spec);
        return pochhammer(QMonomial::minus_q_pow(1), 2, std::nullopt, T).truncated(T);
    }
    }
    throw std::logic_error("unknown formula");
}

// ---- iteration engine ------------------------------------------------------

IterationScheme IterationScheme::alternating(Step first)
{
    const Step second = first == Step::advance_two ? Step::advance_one : Step::advance_two;
    return {{first, second}};
}

IterationScheme IterationScheme::periodic(long n, Step repeated, Step closing)
{
    require(n >= 1, "periodic scheme needs n >= 1");
    IterationScheme s;
    s.word.assign(static_cast<std::size_t>(n - 1), repeated);
    s.word.push_back(closing);
    return s;
}

IterationScheme IterationScheme::parse(std::string_view word)
{
    IterationScheme s;
    for (char c : word) {
        if (c == '2') {
            s.word.push_back(Step::advance_two);
        } else if (c == '1') {
            s.word.push_back(Step::advance_one);
        } else {
            throw std::invalid_argument("iteration word uses only '1' and '2'");
        }
    }
    require(!s.word.empty(), "iteration word must be nonempty");
    return s;
}

std::string IterationScheme::to_string() const
{
    std::string out;
    for (Step s : word) {
        out += s == Step::advance_two ? '2' : '1';
    }
    return out;
}

QSeries iterate_QmL(const IterationScheme &scheme, long m, long L)
{
    require(!scheme.word.empty(), "iteration word must be nonempty");
    require(m >= -1 && L >= 0, "iterate_QmL needs m >= -1 and L >= 0");
    QSeries acc;
    long sign = 1;
    Exponent shift = 0;
    for (std::size_t i = 0; L > m; ++i) {
        const Step step = scheme.word[i % scheme.word.size()];
        const QSeries g = step == Step::advance_two ? gauss_binomial(2 * L - m + 1, L + 2) : gauss_binomial(2 * L - m, L + 1);
        shift += m + 1;
        acc += (g * Integer(sign)).shifted(shift);
        sign = -sign;
        m += 3;
        L += step == Step::advance_two ? 2 : 1;
    }
    return acc;
}

// ---- tables ----------------------------------------------------------------

RankCrankTable rank_crank_table(long modulus, long n)
{
    require(modulus >= 1 && n >= 0, "rank_crank_table needs modulus >= 1 and n >= 0");
    RankCrankTable t;
    t.modulus = modulus;
    t.n = n;
    t.rank_counts.assign(static_cast<std::size_t>(modulus), 0);
    t.crank_counts.assign(static_cast<std::size_t>(modulus), 0);
    const auto residue = [modulus](long x) { return static_cast<std::size_t>(((x % modulus) + modulus) % modulus); };
    long total = 0;
    for_each_partition(n, {}, [&](const Partition &p) {
        ++total;
        ++t.rank_counts[residue(rank(p))];
        ++t.crank_counts[residue(p.empty() ? 0 : crank(p))];
    });
    t.partitions = total;
    return t;
}

} // namespace qpart
