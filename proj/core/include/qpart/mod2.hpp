#pragma once

#include <string>
#include <vector>

#include <qpart/partition.hpp>

namespace qpart
{

/// True when no odd part repeats.
bool has_distinct_odd_parts(const Partition &p);

/// Cells in the 2-modular row of part x: x/2 twos, plus a trailing 1 when x is odd.
inline long mod2_row_length(Part x)
{
    return (x + 1) / 2;
}

/// MacMahon's 2-modular graph of a partition with distinct odd parts.
/// Stores the parts; the cell grid is derived on demand.
class Mod2Graph
{
public:
    Mod2Graph() = default;

    /// Throws std::invalid_argument on a repeated odd part.
    explicit Mod2Graph(Partition p);

    const Partition &partition() const { return p_; }
    bool empty() const { return p_.empty(); }
    long weight() const { return p_.weight(); }
    long rows() const { return num_parts(p_); }
    long largest_row() const { return mod2_row_length(largest_part(p_)); }

    /// Cell values row by row: 2,...,2 or 2,...,2,1.
    std::vector<std::vector<int>> cells() const;

    friend bool operator==(const Mod2Graph &, const Mod2Graph &) = default;

private:
    Partition p_;
};

Mod2Graph to_mod2(const Partition &p);

/// Transpose of the cell grid. Column c becomes a part of value twice its
/// height, less one when its bottom cell is a 1.
Mod2Graph conjugate_mod2(const Mod2Graph &g);

/// Largest row length minus number of rows. Throws std::domain_error when empty.
long m2_rank(const Mod2Graph &g);

/// One line per row, cells separated by spaces, e.g. "2 2 2 1".
std::string mod2_diagram(const Mod2Graph &g);

} // namespace qpart
