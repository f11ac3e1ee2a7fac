#pragma once

#include <string>
#include <vector>

#include <qpart/mod2.hpp>
#include <qpart/partition.hpp>

namespace qpart
{

/// One intermediate diagram of a map, for step-by-step rendering.
struct TraceStep {
    std::string label;
    std::string diagram;
};

using Trace = std::vector<TraceStep>;

/// Remove the largest part, conjugate the rest, attach lambda - m - 1 as the
/// new largest part (nothing when zero). Needs p nonempty, m >= 0, rank >= m.
/// Weight drops by m + 1.
Partition dyson_adjoint(const Partition &p, long m, Trace *trace = nullptr);

/// Inverse of dyson_adjoint. The empty partition maps back to the single part
/// m + 1. Needs rank(p') >= -2 - m.
Partition dyson_adjoint_inverse(const Partition &p, long m, Trace *trace = nullptr);

/// With the rank-set witness i (i - p_{i+1} = k): delete row i+1 and add a
/// cell to each of the first i rows. Needs k >= 0 in the rank-set. Weight
/// grows by k and k - 1 leaves the rank-set.
Partition rank_set_insertion(const Partition &p, long k, Trace *trace = nullptr);

/// Inverse of rank_set_insertion; needs k >= 0 and k - 1 outside the rank-set.
Partition rank_set_insertion_inverse(const Partition &p, long k, Trace *trace = nullptr);

enum class CrankCase {
    empty,
    remove_row,      // nu >= k + 2
    shift_largest,   // nu <= k, unique largest part
    conjugate_graph, // nu <= k, repeated largest part
};

/// Which branch crank_map takes; throws std::domain_error when k is not in the rank-set.
CrankCase crank_map_case(const Partition &p, long k);

/// Weight-preserving map from partitions with k in the rank-set onto
/// partitions with crank <= k. For k = 0 the partition 1 is not hit.
Partition crank_map(const Partition &p, long k, Trace *trace = nullptr);

/// Inverse of crank_map; needs crank(p) <= k (empty allowed for k >= 0).
Partition crank_map_inverse(const Partition &p, long k, Trace *trace = nullptr);

/// Weight-preserving involution that swaps the number of ones with the number
/// of parts above it, negating the crank for weight > 1. The empty partition
/// and 1 are fixed.
Partition pseudo_conjugate(const Partition &p, Trace *trace = nullptr);

/// Remove the largest 2-modular row (length r + l), conjugate the rest, attach
/// the even part 2l - 2 when the removed part was odd, else the odd part
/// 2l - 1. Needs a nonempty graph with M2-rank >= r. Weight drops by 2r + 1.
Mod2Graph mod2_adjoint(const Mod2Graph &g, long r, Trace *trace = nullptr);

/// Inverse of mod2_adjoint; the empty graph maps back to the single part 2r + 1.
Mod2Graph mod2_adjoint_inverse(const Mod2Graph &g, long r, Trace *trace = nullptr);

} // namespace qpart
