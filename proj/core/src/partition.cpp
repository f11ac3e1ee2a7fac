#include <qpart/partition.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace qpart
{

// Builds partitions from already-validated part buffers without re-checking.
class PartitionBuilder
{
public:
    static Partition make(std::vector<Part> parts) { return Partition(Partition::Trusted{}, std::move(parts)); }
};

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

Partition Partition::from_unordered(std::vector<Part> parts)
{
    if (std::any_of(parts.begin(), parts.end(), [](Part x) { return x < 0; })) {
        throw std::invalid_argument("partition parts must be nonnegative");
    }
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return PartitionBuilder::make(std::move(parts));
}

Partition Partition::parse(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
            s.remove_prefix(1);
        }
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
            s.remove_suffix(1);
        }
        return s;
    };
    text = trim(text);
    if (text.empty() || text == "0") {
        return {};
    }
    std::vector<Part> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t plus = text.find('+', pos);
        const std::string_view tok = trim(text.substr(pos, plus == std::string_view::npos ? plus : plus - pos));
        Part v = 0;
        const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size() || v <= 0) {
            throw std::invalid_argument("malformed partition \"" + std::string(text) + "\": expected positive parts joined by '+'");
        }
        parts.push_back(v);
        if (plus == std::string_view::npos) {
            break;
        }
        pos = plus + 1;
    }
    return from_unordered(std::move(parts));
}

long Partition::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

std::string Partition::to_string() const
{
    if (parts_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            out += '+';
        }
        out += std::to_string(parts_[i]);
    }
    return out;
}

Part largest_part(const Partition &p)
{
    return p.part(0);
}

long num_parts(const Partition &p)
{
    return static_cast<long>(p.size());
}

long num_ones(const Partition &p)
{
    const auto &v = p.parts();
    return static_cast<long>(std::count(v.begin(), v.end(), 1));
}

long num_parts_above_ones(const Partition &p)
{
    const long mu = num_ones(p);
    const auto &v = p.parts();
    return static_cast<long>(std::count_if(v.begin(), v.end(), [mu](Part x) { return x > mu; }));
}

long gamma_stat(const Partition &p)
{
    if (p.empty()) {
        throw std::domain_error("gamma is undefined for the empty partition");
    }
    if (num_parts_above_ones(p) != 1) {
        return p.part(0) - p.part(1);
    }
    return largest_part(p) - num_ones(p) - 1;
}

long rank(const Partition &p)
{
    return largest_part(p) - num_parts(p);
}

long crank(const Partition &p)
{
    if (p.empty()) {
        throw std::domain_error("crank is undefined for the empty partition");
    }
    const long mu = num_ones(p);
    if (mu == 0) {
        return largest_part(p);
    }
    return num_parts_above_ones(p) - mu;
}

PartitionStats stats(const Partition &p)
{
    PartitionStats s;
    s.largest = largest_part(p);
    s.parts = num_parts(p);
    s.ones = num_ones(p);
    s.above_ones = num_parts_above_ones(p);
    s.rank = rank(p);
    if (!p.empty()) {
        s.gamma = gamma_stat(p);
        s.crank = crank(p);
    }
    return s;
}

Partition conjugate(const Partition &p)
{
    const Part lambda = largest_part(p);
    std::vector<Part> c(static_cast<std::size_t>(lambda), 0);
    for (Part x : p.parts()) {
        for (Part i = 0; i < x; ++i) {
            ++c[static_cast<std::size_t>(i)];
        }
    }
    return PartitionBuilder::make(std::move(c));
}

bool rank_set_contains(const Partition &p, long k)
{
    return rank_set_witness(p, k).has_value();
}

RankSetDescriptor rank_set(const Partition &p)
{
    RankSetDescriptor d;
    for (std::size_t j = 0; j < p.size(); ++j) {
        d.prefix.push_back(static_cast<long>(j) - p.part(j));
    }
    d.tail_from = num_parts(p);
    return d;
}

std::optional<std::size_t> rank_set_witness(const Partition &p, long k)
{
    // j - p_{j+1} is strictly increasing in j, so at most one row matches.
    for (std::size_t i = 0; i < p.size(); ++i) {
        const long v = static_cast<long>(i) - p.part(i);
        if (v == k) {
            return i;
        }
        if (v > k) {
            return std::nullopt;
        }
    }
    if (k >= num_parts(p)) {
        return static_cast<std::size_t>(k);
    }
    return std::nullopt;
}

namespace
{

// Walks the boundary from the top-right corner. Every step raises y - x by
// one, so the step leaving the diagonal y - x = k is unique.
struct BoundaryStep {
    long x;
    bool vertical;
};

BoundaryStep boundary_step(const Partition &p, long k)
{
    long x = std::max<long>(largest_part(p), -k);
    long y = 0;
    while (y - x < k) {
        if (x > p.part(static_cast<std::size_t>(y))) {
            --x;
        } else {
            ++y;
        }
    }
    return {x, x <= p.part(static_cast<std::size_t>(y))};
}

} // namespace

bool boundary_segment_vertical(const Partition &p, long k)
{
    return boundary_step(p, k).vertical;
}

long boundary_crossing(const Partition &p, long k)
{
    return boundary_step(p, k).x;
}

namespace
{

struct Enumerator {
    const EnumerationOptions &opts;
    const std::function<void(const Partition &)> &visit;
    std::vector<Part> buf;

    void run(long remaining, Part cap)
    {
        if (remaining == 0) {
            Partition p = PartitionBuilder::make(buf);
            if (!opts.filter || opts.filter(p)) {
                visit(p);
            }
            return;
        }
        if (opts.max_parts && static_cast<long>(buf.size()) >= *opts.max_parts) {
            return;
        }
        if (opts.max_parts) {
            // The remaining parts cannot exceed cap each.
            const long slots = *opts.max_parts - static_cast<long>(buf.size());
            if (slots * cap < remaining) {
                return;
            }
        }
        for (Part x = static_cast<Part>(std::min<long>(remaining, cap)); x >= 1; --x) {
            buf.push_back(x);
            run(remaining - x, x);
            buf.pop_back();
        }
    }
};

} // namespace

void for_each_partition(long n, const EnumerationOptions &opts, const std::function<void(const Partition &)> &visit)
{
    if (n < 0) {
        throw std::domain_error("cannot enumerate partitions of a negative number");
    }
    Part cap = static_cast<Part>(n);
    if (opts.max_part) {
        cap = std::min(cap, std::max<Part>(*opts.max_part, 0));
    }
    Enumerator e{opts, visit, {}};
    e.run(n, cap);
}

std::vector<Partition> enumerate_partitions(long n, const EnumerationOptions &opts)
{
    std::vector<Partition> out;
    for_each_partition(n, opts, [&](const Partition &p) { out.push_back(p); });
    return out;
}

namespace
{

long durfee_side_of(const std::vector<Part> &v, std::size_t from)
{
    long d = 0;
    while (from + static_cast<std::size_t>(d) < v.size() && v[from + static_cast<std::size_t>(d)] >= d + 1) {
        ++d;
    }
    return d;
}

} // namespace

long durfee_side(const Partition &p)
{
    return durfee_side_of(p.parts(), 0);
}

DurfeeDissection durfee_dissection(const Partition &p)
{
    DurfeeDissection d;
    std::size_t from = 0;
    while (from < p.size()) {
        const long s = durfee_side_of(p.parts(), from);
        d.sizes.push_back(s);
        from += static_cast<std::size_t>(s);
    }
    return d;
}

long k_rank(const Partition &p, long k)
{
    if (k < 2) {
        throw std::domain_error("k-rank needs k >= 2");
    }
    const auto d = durfee_dissection(p);
    if (static_cast<long>(d.sizes.size()) < k - 1) {
        throw std::domain_error("k-rank needs at least k-1 successive Durfee squares");
    }
    const long n1 = d.sizes.front();
    const long nk = d.sizes[static_cast<std::size_t>(k - 2)];
    const Partition c = conjugate(p);
    long cols = 0;
    for (std::size_t i = static_cast<std::size_t>(n1); i < c.size(); ++i) {
        if (c.part(i) <= nk) {
            ++cols;
        }
    }
    const long covered = std::accumulate(d.sizes.begin(), d.sizes.begin() + (k - 1), 0L);
    return cols - (num_parts(p) - covered);
}

std::string ferrers_diagram(const Partition &p)
{
    if (p.empty()) {
        return "(empty)\n";
    }
    std::string out;
    for (Part x : p.parts()) {
        out.append(static_cast<std::size_t>(x), '*');
        out += '\n';
    }
    return out;
}

} // namespace qpart
