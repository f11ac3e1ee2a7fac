#include <qpart/mod2.hpp>

#include <stdexcept>

namespace qpart
{

bool has_distinct_odd_parts(const Partition &p)
{
    const auto &v = p.parts();
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] == v[i - 1] && v[i] % 2 != 0) {
            return false;
        }
    }
    return true;
}

Mod2Graph::Mod2Graph(Partition p) : p_(std::move(p))
{
    if (!has_distinct_odd_parts(p_)) {
        throw std::invalid_argument("2-modular graph needs distinct odd parts: " + p_.to_string());
    }
}

std::vector<std::vector<int>> Mod2Graph::cells() const
{
    std::vector<std::vector<int>> out;
    for (Part x : p_.parts()) {
        std::vector<int> row(static_cast<std::size_t>(mod2_row_length(x)), 2);
        if (x % 2 != 0) {
            row.back() = 1;
        }
        out.push_back(std::move(row));
    }
    return out;
}

Mod2Graph to_mod2(const Partition &p)
{
    return Mod2Graph(p);
}

Mod2Graph conjugate_mod2(const Mod2Graph &g)
{
    const auto &v = g.partition().parts();
    const long width = g.empty() ? 0 : g.largest_row();
    std::vector<Part> cols;
    cols.reserve(static_cast<std::size_t>(width));
    // Rows are sorted by length, so column c is a prefix of the rows.
    std::size_t height = v.size();
    for (long c = 0; c < width; ++c) {
        while (height > 0 && mod2_row_length(v[height - 1]) < c + 1) {
            --height;
        }
        Part value = static_cast<Part>(2 * height);
        // Only the last row of the column can end in a 1 exactly here.
        for (std::size_t r = 0; r < height; ++r) {
            if (v[r] % 2 != 0 && mod2_row_length(v[r]) == c + 1) {
                --value;
                break;
            }
        }
        cols.push_back(value);
    }
    return Mod2Graph(Partition(std::move(cols)));
}

long m2_rank(const Mod2Graph &g)
{
    if (g.empty()) {
        throw std::domain_error("M2-rank is undefined for the empty partition");
    }
    return g.largest_row() - g.rows();
}

std::string mod2_diagram(const Mod2Graph &g)
{
    if (g.empty()) {
        return "(empty)\n";
    }
    std::string out;
    for (const auto &row : g.cells()) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) {
                out += ' ';
            }
            out += static_cast<char>('0' + row[i]);
        }
        out += '\n';
    }
    return out;
}

} // namespace qpart
