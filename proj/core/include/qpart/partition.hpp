#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qpart
{

using Part = int;

/// A partition: weakly decreasing positive parts. The empty partition is
/// allowed and renders as "0".
class Partition
{
public:
    Partition() = default;

    /// Throws std::invalid_argument unless `parts` is weakly decreasing and positive.
    explicit Partition(std::vector<Part> parts);

    /// Sorts into weakly decreasing order. Zero parts are dropped; negative
    /// parts throw std::invalid_argument.
    static Partition from_unordered(std::vector<Part> parts);

    /// "5+2+1" with parts in any order; "0" and "" give the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<Part> &parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }
    long weight() const;

    /// i-th part counting from 0; 0 past the last part.
    Part part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    std::string to_string() const;

    friend bool operator==(const Partition &, const Partition &) = default;
    friend auto operator<=>(const Partition &, const Partition &) = default;

private:
    struct Trusted {
    };
    Partition(Trusted, std::vector<Part> parts) : parts_(std::move(parts)) {}
    friend class PartitionBuilder;

    std::vector<Part> parts_;
};

Part largest_part(const Partition &p);
long num_parts(const Partition &p);
long num_ones(const Partition &p);
/// Number of parts larger than the number of ones.
long num_parts_above_ones(const Partition &p);

/// p_1 - p_2 unless exactly one part exceeds the number of ones, in which
/// case lambda - mu - 1. Throws std::domain_error on the empty partition.
long gamma_stat(const Partition &p);

/// Largest part minus number of parts; 0 for the empty partition.
long rank(const Partition &p);

/// Largest part when there are no ones, else (parts above the number of
/// ones) minus (number of ones). Throws std::domain_error on the empty partition.
long crank(const Partition &p);

struct PartitionStats {
    long largest = 0;
    long parts = 0;
    long ones = 0;
    long above_ones = 0;
    std::optional<long> gamma;
    long rank = 0;
    std::optional<long> crank;
};

PartitionStats stats(const Partition &p);

Partition conjugate(const Partition &p);

/// k is in the rank-set iff j - p_{j+1} = k for some j >= 0 (parts past the
/// end read as 0, so every k >= number of parts is a member).
bool rank_set_contains(const Partition &p, long k);

/// Finite description of the rank-set: the values j - p_{j+1} for j below the
/// number of parts, then every integer from `tail_from` on.
struct RankSetDescriptor {
    std::vector<long> prefix;
    long tail_from = 0;
};

RankSetDescriptor rank_set(const Partition &p);

/// Row index i (0-based) with i - p_{i+1} = k. A row of positive length is
/// preferred; the zero-length witness i = k is returned only for k >= number
/// of parts with no positive witness. nullopt when k is not in the rank-set.
std::optional<std::size_t> rank_set_witness(const Partition &p, long k);

/// Orientation of the boundary step of the Ferrers graph crossing from the
/// diagonal y = x + k to y = x + k + 1 (origin top-left, y downward).
/// Vertical exactly when k is in the rank-set.
bool boundary_segment_vertical(const Partition &p, long k);

/// x-coordinate of the boundary lattice point on y = x + k.
long boundary_crossing(const Partition &p, long k);

struct EnumerationOptions {
    std::optional<Part> max_part;
    std::optional<long> max_parts;
    std::function<bool(const Partition &)> filter;
};

/// Calls `visit` once for every partition of n satisfying `opts`, in
/// descending lexicographic order (n, n-1+1, ..., 1+...+1).
void for_each_partition(long n, const EnumerationOptions &opts, const std::function<void(const Partition &)> &visit);

std::vector<Partition> enumerate_partitions(long n, const EnumerationOptions &opts = {});

/// Side of the largest square fitting in the top-left corner of the Ferrers graph.
long durfee_side(const Partition &p);

/// Successive Durfee squares: the first square, then the square of the parts
/// below it, and so on until the parts are exhausted.
struct DurfeeDissection {
    std::vector<long> sizes;
};

DurfeeDissection durfee_dissection(const Partition &p);

/// Number of columns past the first Durfee square whose length is at most
/// n_{k-1}, minus the number of parts below the (k-1)-th Durfee square.
/// Throws std::domain_error for k < 2 or fewer than k-1 Durfee squares.
long k_rank(const Partition &p, long k);

/// Rows of '*' cells, one line per part; "(empty)" for the empty partition.
std::string ferrers_diagram(const Partition &p);

} // namespace qpart
