#include "certify.hpp"

#include <qpart/bijection.hpp>
#include <qpart/genfun.hpp>
#include <qpart/mod2.hpp>
#include <qpart/series.hpp>

#include <set>
#include <sstream>

namespace qpart::certify
{

namespace
{

std::string where(const char *map, const Partition &p, long param, const std::string &what)
{
    std::ostringstream s;
    s << map << "(" << p.to_string() << ", " << param << "): " << what;
    return s.str();
}

std::vector<Partition> class_e(long n)
{
    std::vector<Partition> out;
    for (const Partition &p : partitions_of(n)) {
        if (has_distinct_odd_parts(p)) {
            out.push_back(p);
        }
    }
    return out;
}

} // namespace

std::string dyson_adjoint(long max_n, long max_m)
{
    for (long m = 0; m <= max_m; ++m) {
        for (long n = 1; n <= max_n; ++n) {
            std::set<Partition> images;
            for (const Partition &p : partitions_of(n)) {
                if (rank(p) < m) {
                    continue;
                }
                const Partition q = qpart::dyson_adjoint(p, m);
                if (q.weight() != n - m - 1) {
                    return where("dyson_adjoint", p, m, "weight is not |p| - m - 1");
                }
                if (largest_part(q) != largest_part(p) - m - 1) {
                    return where("dyson_adjoint", p, m, "largest part is not lambda - m - 1");
                }
                if (num_parts(q) > largest_part(p) + 1) {
                    return where("dyson_adjoint", p, m, "more than lambda + 1 parts");
                }
                if (!q.empty() && rank(q) < -2 - m) {
                    return where("dyson_adjoint", p, m, "image rank below -2 - m");
                }
                if (qpart::dyson_adjoint_inverse(q, m) != p) {
                    return where("dyson_adjoint", p, m, "inverse does not round-trip");
                }
                if (!images.insert(q).second) {
                    return where("dyson_adjoint", p, m, "image repeated");
                }
            }
            std::size_t target = n == m + 1 ? 1 : 0;
            if (n - m - 1 >= 1) {
                for (const Partition &q : partitions_of(n - m - 1)) {
                    target += rank(q) >= -2 - m ? 1 : 0;
                }
            }
            if (images.size() != target) {
                return "dyson_adjoint: image count mismatch at n=" + std::to_string(n) + ", m=" + std::to_string(m);
            }
        }
    }
    return {};
}

std::string rank_set_insertion(long max_n, long max_k)
{
    for (long k = 0; k <= max_k; ++k) {
        for (long n = 0; n <= max_n; ++n) {
            std::set<Partition> images;
            for (const Partition &p : partitions_of(n)) {
                if (!rank_set_contains(p, k)) {
                    continue;
                }
                const Partition q = qpart::rank_set_insertion(p, k);
                if (q.weight() != n + k) {
                    return where("rank_set_insertion", p, k, "weight is not |p| + k");
                }
                if (rank_set_contains(q, k - 1)) {
                    return where("rank_set_insertion", p, k, "k - 1 lies in the image rank-set");
                }
                if (qpart::rank_set_insertion_inverse(q, k) != p) {
                    return where("rank_set_insertion", p, k, "inverse does not round-trip");
                }
                if (!images.insert(q).second) {
                    return where("rank_set_insertion", p, k, "image repeated");
                }
            }
            std::size_t target = 0;
            for (const Partition &q : partitions_of(n + k)) {
                target += rank_set_contains(q, k - 1) ? 0 : 1;
            }
            if (images.size() != target) {
                return "rank_set_insertion: image count mismatch at n=" + std::to_string(n) + ", k=" + std::to_string(k);
            }
        }
    }
    return {};
}

std::string crank_map(long max_n, long max_abs_k)
{
    for (long k = -max_abs_k; k <= max_abs_k; ++k) {
        if (k >= 0 && qpart::crank_map(Partition(), k) != Partition()) {
            return where("crank_map", Partition(), k, "empty partition not fixed");
        }
        for (long n = 1; n <= max_n; ++n) {
            std::set<Partition> images;
            for (const Partition &p : partitions_of(n)) {
                if (!rank_set_contains(p, k)) {
                    continue;
                }
                const Partition q = qpart::crank_map(p, k);
                if (q.weight() != n) {
                    return where("crank_map", p, k, "weight changed");
                }
                if (crank(q) > k) {
                    return where("crank_map", p, k, "image crank exceeds k");
                }
                if (qpart::crank_map_inverse(q, k) != p) {
                    return where("crank_map", p, k, "inverse does not round-trip");
                }
                if (!images.insert(q).second) {
                    return where("crank_map", p, k, "image repeated");
                }
            }
            std::size_t target = 0;
            for (const Partition &q : partitions_of(n)) {
                target += crank(q) <= k ? 1 : 0;
            }
            // The partition 1 has crank -1 but 0 is not in its rank-set.
            if (k == 0 && n == 1) {
                --target;
            }
            if (images.size() != target) {
                return "crank_map: image count mismatch at n=" + std::to_string(n) + ", k=" + std::to_string(k);
            }
        }
    }
    return {};
}

std::string mod2_adjoint(long max_n, long max_r)
{
    for (long r = 0; r <= max_r; ++r) {
        for (long n = 1; n <= max_n; ++n) {
            std::set<Partition> images;
            for (const Partition &p : class_e(n)) {
                const Mod2Graph g(p);
                if (m2_rank(g) < r) {
                    continue;
                }
                const Mod2Graph h = qpart::mod2_adjoint(g, r);
                if (h.weight() != n - 2 * r - 1) {
                    return where("mod2_adjoint", p, r, "weight is not |p| - 2r - 1");
                }
                if (!h.empty() && m2_rank(h) < -1 - r) {
                    return where("mod2_adjoint", p, r, "image M2-rank below -1 - r");
                }
                if (qpart::mod2_adjoint_inverse(h, r) != g) {
                    return where("mod2_adjoint", p, r, "inverse does not round-trip");
                }
                if (!images.insert(h.partition()).second) {
                    return where("mod2_adjoint", p, r, "image repeated");
                }
            }
            std::size_t target = n == 2 * r + 1 ? 1 : 0;
            if (n - 2 * r - 1 >= 1) {
                for (const Partition &q : class_e(n - 2 * r - 1)) {
                    target += m2_rank(Mod2Graph(q)) >= -1 - r ? 1 : 0;
                }
            }
            if (images.size() != target) {
                return "mod2_adjoint: image count mismatch at n=" + std::to_string(n) + ", r=" + std::to_string(r);
            }
        }
    }
    return {};
}

std::string pseudo_conjugate(long max_n)
{
    for (long n = 2; n <= max_n; ++n) {
        for (const Partition &p : partitions_of(n)) {
            const Partition q = qpart::pseudo_conjugate(p);
            if (q.weight() != n) {
                return where("pseudo_conjugate", p, 0, "weight changed");
            }
            if (qpart::pseudo_conjugate(q) != p) {
                return where("pseudo_conjugate", p, 0, "not an involution");
            }
            if (crank(q) != -crank(p)) {
                return where("pseudo_conjugate", p, 0, "crank not negated");
            }
            const long M = num_ones(p);
            const long N = num_parts_above_ones(p);
            if (M > 0 && N > 0 && (num_ones(q) != N || num_parts_above_ones(q) != M)) {
                return where("pseudo_conjugate", p, 0, "ones and parts above ones not swapped");
            }
        }
    }
    return {};
}

std::string pseudo_conjugate_fixed_points(long max_n)
{
    const QSeries expected = pochhammer(QMonomial::minus_q_pow(1), 2, std::nullopt, max_n);
    for (long n = 0; n <= max_n; ++n) {
        long fixed = 0;
        for (const Partition &p : partitions_of(n)) {
            if (qpart::pseudo_conjugate(p) != p) {
                continue;
            }
            ++fixed;
            const long M = num_ones(p);
            const long N = num_parts_above_ones(p);
            if (n <= 1) {
                continue;
            }
            if (M == 0 || N == 0 || M != N) {
                return where("pseudo_conjugate", p, 0, "fixed point without M = N > 0");
            }
            const auto &v = p.parts();
            const Partition A(std::vector<Part>(v.begin() + N, v.end() - M));
            std::vector<Part> B;
            for (long i = 0; i < N; ++i) {
                B.push_back(static_cast<Part>(v[static_cast<std::size_t>(i)] - M - 1 - (i == 0 ? gamma_stat(p) : 0)));
            }
            if (conjugate(A) != Partition::from_unordered(B)) {
                return where("pseudo_conjugate", p, 0, "fixed point with A* != B");
            }
        }
        if (expected.coefficient(n) != fixed) {
            return "pseudo_conjugate: " + std::to_string(fixed) + " fixed points of " + std::to_string(n) +
                   ", expected " + expected.coefficient(n).get_str();
        }
    }
    return {};
}

} // namespace qpart::certify
