#include <qpart/bijection.hpp>

#include <algorithm>
#include <stdexcept>

namespace qpart
{

namespace
{

void note(Trace *trace, std::string label, const Partition &p)
{
    if (trace) {
        trace->push_back({std::move(label) + ": " + p.to_string(), ferrers_diagram(p)});
    }
}

void note(Trace *trace, std::string label, const Mod2Graph &g)
{
    if (trace) {
        trace->push_back({std::move(label) + ": " + g.partition().to_string(), mod2_diagram(g)});
    }
}

void ensure(bool ok, const char *what)
{
    if (!ok) {
        throw std::logic_error(what);
    }
}

std::vector<Part> tail(const Partition &p)
{
    return {p.parts().begin() + (p.empty() ? 0 : 1), p.parts().end()};
}

} // namespace

Partition dyson_adjoint(const Partition &p, long m, Trace *trace)
{
    if (p.empty() || m < 0 || rank(p) < m) {
        throw std::domain_error("dyson_adjoint needs a nonempty partition with rank >= m >= 0");
    }
    note(trace, "input", p);
    const Partition rest(tail(p));
    note(trace, "largest part removed", rest);
    std::vector<Part> out = conjugate(rest).parts();
    note(trace, "conjugated", Partition(out));
    out.insert(out.begin(), static_cast<Part>(largest_part(p) - m - 1));
    const Partition result = Partition::from_unordered(std::move(out));
    note(trace, "new largest part attached", result);
    return result;
}

Partition dyson_adjoint_inverse(const Partition &p, long m, Trace *trace)
{
    if (m < 0) {
        throw std::domain_error("dyson_adjoint_inverse needs m >= 0");
    }
    note(trace, "input", p);
    if (p.empty()) {
        const Partition result({static_cast<Part>(m + 1)});
        note(trace, "empty image comes from the single part m+1", result);
        return result;
    }
    if (rank(p) < -2 - m) {
        throw std::domain_error("dyson_adjoint_inverse needs rank >= -2 - m");
    }
    const Partition rest(tail(p));
    note(trace, "largest part removed", rest);
    std::vector<Part> out = conjugate(rest).parts();
    note(trace, "conjugated", Partition(out));
    out.insert(out.begin(), static_cast<Part>(largest_part(p) + m + 1));
    const Partition result(std::move(out));
    note(trace, "original largest part restored", result);
    return result;
}

Partition rank_set_insertion(const Partition &p, long k, Trace *trace)
{
    const auto w = rank_set_witness(p, k);
    if (k < 0 || !w) {
        throw std::domain_error("rank_set_insertion needs k >= 0 in the rank-set");
    }
    note(trace, "input", p);
    const std::size_t i = *w;
    std::vector<Part> v = p.parts();
    if (i < v.size()) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        note(trace, "witness row " + std::to_string(i + 1) + " removed", Partition(v));
    } else {
        // Zero-length witness row: pad with empty rows up to i.
        v.resize(i, 0);
    }
    for (std::size_t t = 0; t < i; ++t) {
        ++v[t];
    }
    const Partition result = Partition::from_unordered(std::move(v));
    note(trace, "column of height " + std::to_string(i) + " inserted", result);
    return result;
}

Partition rank_set_insertion_inverse(const Partition &p, long k, Trace *trace)
{
    if (k < 0) {
        throw std::domain_error("rank_set_insertion_inverse needs k >= 0");
    }
    // k - 1 is outside R(p) exactly when -k is inside R(conjugate(p)).
    const Partition c = conjugate(p);
    const auto x = rank_set_witness(c, -k);
    if (!x) {
        throw std::domain_error("rank_set_insertion_inverse needs k - 1 outside the rank-set");
    }
    note(trace, "input", p);
    const std::size_t i = *x + static_cast<std::size_t>(k);
    std::vector<Part> v = p.parts();
    if (v.size() < i) {
        v.resize(i, 0);
    }
    for (std::size_t t = 0; t < i; ++t) {
        --v[t];
    }
    note(trace, "column of height " + std::to_string(i) + " removed", Partition::from_unordered(v));
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(i), static_cast<Part>(*x));
    const Partition result = Partition::from_unordered(std::move(v));
    note(trace, "row of length " + std::to_string(*x) + " reinserted", result);
    return result;
}

CrankCase crank_map_case(const Partition &p, long k)
{
    if (!rank_set_contains(p, k)) {
        throw std::domain_error("crank_map needs k in the rank-set");
    }
    if (p.empty()) {
        return CrankCase::empty;
    }
    const long nu = num_parts(p);
    if (nu >= k + 2) {
        return CrankCase::remove_row;
    }
    ensure(nu != k + 1, "crank_map: nu = k + 1 with k in the rank-set");
    if (nu == 1 || p.part(0) > p.part(1)) {
        return CrankCase::shift_largest;
    }
    ensure(k >= 2, "crank_map: repeated largest part needs k >= 2");
    return CrankCase::conjugate_graph;
}

Partition crank_map(const Partition &p, long k, Trace *trace)
{
    const CrankCase c = crank_map_case(p, k);
    note(trace, "input", p);
    switch (c) {
    case CrankCase::empty:
        return p;
    case CrankCase::remove_row: {
        const std::size_t i = *rank_set_witness(p, k);
        const Part j = p.part(i);
        ensure(j > 0, "crank_map: zero-length witness row with nu >= k + 2");
        std::vector<Part> v = p.parts();
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        note(trace, "row of length " + std::to_string(j) + " removed", Partition(v));
        v.insert(v.end(), static_cast<std::size_t>(j), 1);
        const Partition result(std::move(v));
        note(trace, std::to_string(j) + " ones appended", result);
        return result;
    }
    case CrankCase::shift_largest: {
        if (p.weight() == 1) {
            return p;
        }
        std::vector<Part> v = p.parts();
        --v.front();
        v.push_back(1);
        const Partition result = Partition::from_unordered(std::move(v));
        note(trace, "largest part decremented, one appended", result);
        return result;
    }
    case CrankCase::conjugate_graph: {
        const Partition result = conjugate(p);
        note(trace, "conjugated", result);
        return result;
    }
    }
    throw std::logic_error("unreachable");
}

Partition crank_map_inverse(const Partition &p, long k, Trace *trace)
{
    if (p.empty()) {
        if (k < 0) {
            throw std::domain_error("crank_map_inverse: the empty partition needs k >= 0");
        }
        return p;
    }
    if (crank(p) > k) {
        throw std::domain_error("crank_map_inverse needs crank <= k");
    }
    if (k == 0 && p.weight() == 1) {
        throw std::domain_error("crank_map_inverse: the partition 1 has no preimage for k = 0");
    }
    note(trace, "input", p);
    const long mu = num_ones(p);
    const long nu = num_parts(p);
    if (mu > 0 && nu >= k + 2) {
        const long j = boundary_crossing(p, k);
        // j <= mu, otherwise the crank would exceed k.
        ensure(j > 0 && j <= mu, "crank_map_inverse: witness outside the ones");
        std::vector<Part> v(p.parts().begin(), p.parts().end() - j);
        note(trace, std::to_string(j) + " ones removed", Partition(v));
        v.insert(v.begin() + (j + k), static_cast<Part>(j));
        const Partition result(std::move(v));
        note(trace, "row of length " + std::to_string(j) + " reinserted", result);
        return result;
    }
    if (mu > 0) {
        if (p.weight() == 1) {
            return p;
        }
        std::vector<Part> v = p.parts();
        v.pop_back();
        ++v.front();
        const Partition result(std::move(v));
        note(trace, "one removed, largest part incremented", result);
        return result;
    }
    const Partition result = conjugate(p);
    note(trace, "conjugated", result);
    return result;
}

Partition pseudo_conjugate(const Partition &p, Trace *trace)
{
    note(trace, "input", p);
    if (p.weight() <= 1) {
        return p;
    }
    const long M = num_ones(p);
    const long N = num_parts_above_ones(p);
    const auto &v = p.parts();
    if (M == 0) {
        std::vector<Part> out(v.begin() + 1, v.end());
        out.insert(out.end(), static_cast<std::size_t>(v.front()), 1);
        const Partition result(std::move(out));
        note(trace, "largest row turned into a column of ones", result);
        return result;
    }
    if (N == 0) {
        std::vector<Part> out(v.begin(), v.end() - M);
        out.insert(out.begin(), static_cast<Part>(M));
        const Partition result(std::move(out));
        note(trace, "column of ones turned into a largest row", result);
        return result;
    }
    const long gamma = gamma_stat(p);
    // Big parts q_1..q_N exceed M; the middle parts A lie in [2, M].
    std::vector<Part> B;
    for (long i = 0; i < N; ++i) {
        long b = v[static_cast<std::size_t>(i)] - M - 1 - (i == 0 ? gamma : 0);
        ensure(b >= 0, "pseudo_conjugate: negative overhang");
        B.push_back(static_cast<Part>(b));
    }
    const Partition A(std::vector<Part>(v.begin() + N, v.end() - M));
    const Partition Bp = Partition::from_unordered(B);
    note(trace, "sub-graph A", A);
    note(trace, "sub-graph B", Bp);
    const Partition Ac = conjugate(A);
    const Partition Bc = conjugate(Bp);
    ensure(Ac.size() <= static_cast<std::size_t>(M), "pseudo_conjugate: A wider than M");
    ensure(Bc.empty() || Bc.parts().back() >= 2, "pseudo_conjugate: B has a column of height 1");
    std::vector<Part> out;
    for (long i = 0; i < M; ++i) {
        out.push_back(static_cast<Part>(N + 1 + Ac.part(static_cast<std::size_t>(i)) + (i == 0 ? gamma : 0)));
    }
    out.insert(out.end(), Bc.parts().begin(), Bc.parts().end());
    out.insert(out.end(), static_cast<std::size_t>(N), 1);
    const Partition result(std::move(out));
    note(trace, "reassembled from conjugated A and B", result);
    return result;
}

Mod2Graph mod2_adjoint(const Mod2Graph &g, long r, Trace *trace)
{
    if (g.empty() || r < 0 || m2_rank(g) < r) {
        throw std::domain_error("mod2_adjoint needs a nonempty graph with M2-rank >= r >= 0");
    }
    note(trace, "input", g);
    const Part top = largest_part(g.partition());
    const long ell = g.largest_row() - r;
    const Mod2Graph rest(Partition(tail(g.partition())));
    note(trace, "largest row removed", rest);
    const Mod2Graph rc = conjugate_mod2(rest);
    note(trace, "conjugated", rc);
    std::vector<Part> out = rc.partition().parts();
    out.insert(out.begin(), static_cast<Part>(top % 2 != 0 ? 2 * ell - 2 : 2 * ell - 1));
    const Mod2Graph result(Partition::from_unordered(std::move(out)));
    note(trace, "new largest row attached", result);
    return result;
}

Mod2Graph mod2_adjoint_inverse(const Mod2Graph &g, long r, Trace *trace)
{
    if (r < 0) {
        throw std::domain_error("mod2_adjoint_inverse needs r >= 0");
    }
    note(trace, "input", g);
    if (g.empty()) {
        const Mod2Graph result(Partition({static_cast<Part>(2 * r + 1)}));
        note(trace, "empty image comes from the single part 2r+1", result);
        return result;
    }
    if (m2_rank(g) < -1 - r) {
        throw std::domain_error("mod2_adjoint_inverse needs M2-rank >= -1 - r");
    }
    // Odd a = 2l - 1 came from 2l + 2r, even a = 2l - 2 from 2l + 2r - 1.
    const auto top = static_cast<Part>(largest_part(g.partition()) + 2 * r + 1);
    const Mod2Graph rest(Partition(tail(g.partition())));
    note(trace, "largest row removed", rest);
    const Mod2Graph rc = conjugate_mod2(rest);
    note(trace, "conjugated", rc);
    std::vector<Part> out = rc.partition().parts();
    out.insert(out.begin(), top);
    const Mod2Graph result{Partition(std::move(out))};
    note(trace, "original largest row restored", result);
    return result;
}

} // namespace qpart
