#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <qpart/partition.hpp>
#include <qpart/series.hpp>

namespace qpart
{

/// Generating-function families. Conventions at n = 0 follow the counts they
/// are defined by: rank and M2-rank tails count nothing at 0, rank-set and
/// crank-at-most families count the empty partition iff k >= 0, crank-exactly
/// families iff k = 0.
enum class Family {
    Q,      // rank >= m
    QL,     // rank >= m, largest part <= L
    P,      // rank == m
    PL,     // rank == m, largest part <= L
    G,      // k in the rank-set
    GL,     // k in the rank-set, largest part <= L
    C,      // crank <= k
    CL,     // crank <= k, largest part <= L
    Chat,   // crank == k
    ChatL,  // crank == k, largest part <= L
    E,      // distinct odd parts, even parts unrestricted
    Etilde, // class E with M2-rank >= r
    Ehat,   // class E with M2-rank <= r
    FG,     // at least k-1 successive Durfee squares and k-rank >= m
    SPC,    // fixed points of pseudo-conjugation
};

std::string to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Family plus parameters. Unused parameters are ignored. `order` is the
/// truncation; bounded rank families (QL, PL) may leave it empty for an
/// exact polynomial.
struct SeriesSpec {
    Family family = Family::Q;
    long m = 0;
    long L = 0;
    long k = 0;
    long r = 0;
    std::optional<Exponent> order;
};

/// Brute-force census over enumerated partitions.
/// Throws std::domain_error for unsupported parameter combinations.
QSeries oracle_series(const SeriesSpec &spec);

/// Closed forms and finite sums expressing the families above.
enum class Formula {
    rank_tail_sum,              // Q_m, m >= 0: pentagonal sum over (q)_inf
    rank_exact_sum,             // P_m, all m, through |m|
    bounded_rank_advance_two,   // Q_m^L, m >= 0
    bounded_rank_advance_one,   // Q_m^L, m >= 0
    bounded_rank_alternate_two, // Q_m^L, m >= 0
    bounded_rank_alternate_one, // Q_m^L, m >= 0
    bounded_rank_periodic_one,  // delta_{m,-1} + Q_m^L, m >= -1, period n
    bounded_rank_periodic_two,  // Q_m^L, m >= 0, period n
    bounded_rank_exact,         // P_m^L, all m, through sign(m)
    crank_sum,                  // Chat_k, all k, with the n = 1 correction
    crank_split_sum,            // Chat_k, k >= 0, as a difference of rank-set sums
    rank_set_sum,               // G_k, k >= -1
    bounded_rank_set_sum,       // G_k^L, 0 <= k <= L
    bounded_crank_alternating,  // Chat_k^L, 0 < k <= L
    bounded_crank_dissection,   // Chat_k^L, 0 < k <= L
    distinct_odd_product,       // E
    m2_rank_tail_sum,           // Etilde_r, r >= 0
    m2_rank_head_sum,           // Ehat_r, r >= 0
    m2_rank_head_double_sum,    // Ehat_r, r >= 0, split into odd and even parts
    k_rank_tail_sum,            // FG_{k,m}, k >= 2, m >= 0
    self_pseudo_conjugate_sum,  // SPC as a sum over M and gamma
    self_pseudo_conjugate_product, // SPC as (-q;q^2)_inf
};

std::string to_string(Formula f);
std::optional<Formula> parse_formula(std::string_view name);

/// Family each formula expresses.
Family formula_family(Formula f);
std::vector<Formula> formulas_for(Family family);

/// Evaluate `f` at the parameters of `spec` (spec.family must match).
/// Unbounded sums are cut once the monomial exponent passes the order.
/// `period` is the n of the periodic bounded-rank formulas and is ignored
/// by the others.
QSeries formula_series(const SeriesSpec &spec, Formula f, long period = 1);

/// (1/(q)_inf) sum_{j>=1} (-1)^{j-1} q^{T_{j-1} + j|k|} (1 - q^j), without the
/// small-n correction that crank_sum adds.
QSeries crank_pentagonal_part(long k, Exponent order);

/// (-q;q^2)_inf / (q^2;q^2)_inf through `order`.
QSeries distinct_odd_generating(Exponent order);

/// 1/(q)_inf through `order`.
QSeries partition_generating(Exponent order);

/// The two rewrites of Q_m^L: advance_two emits q^{m+1}[2L-m+1 over L+2]
/// and continues with -q^{m+1} Q_{m+3}^{L+2}; advance_one emits
/// q^{m+1}[2L-m over L+1] and continues with -q^{m+1} Q_{m+3}^{L+1}.
enum class Step { advance_two, advance_one };

/// A nonempty word of steps applied cyclically.
struct IterationScheme {
    std::vector<Step> word;

    static IterationScheme constant(Step s) { return {{s}}; }
    static IterationScheme alternating(Step first);
    /// n-1 copies of `repeated` followed by one `closing` step.
    static IterationScheme periodic(long n, Step repeated, Step closing);

    /// Parse "2121" / "1112" (2 = advance_two, 1 = advance_one).
    static IterationScheme parse(std::string_view word);
    std::string to_string() const;
};

/// Rewrites Q_m^L until the pending symbol has L' <= m' and returns the
/// accumulated exact polynomial, which equals delta_{m,-1} + Q_m^L.
/// Needs m >= -1 and L >= 0.
QSeries iterate_QmL(const IterationScheme &scheme, long m, long L);

/// Residue-class counts of rank and crank over the partitions of n.
/// Crank follows the Andrews-Garvan definition, so the partition 1 has
/// crank -1; the empty partition is given crank 0.
struct RankCrankTable {
    long modulus = 0;
    long n = 0;
    Integer partitions;
    std::vector<long> rank_counts;
    std::vector<long> crank_counts;
};

RankCrankTable rank_crank_table(long modulus, long n);

/// All partitions of n, cached for small n. Safe to call concurrently.
const std::vector<Partition> &partitions_of(long n);

} // namespace qpart
