#include "sqwit/rsk.hpp"

#include <algorithm>

namespace sqwit {

namespace {

// insert value into the tableau by Schensted row bumping
void row_insert(std::vector<std::vector<long>>& tableau, long value) {
    for (auto& row : tableau) {
        auto it = std::upper_bound(row.begin(), row.end(), value);
        if (it == row.end()) {
            row.push_back(value);
            return;
        }
        std::swap(*it, value);
    }
    tableau.push_back({value});
}

} // namespace

Signature schensted_shape(const std::vector<std::vector<long>>& matrix) {
    // matrix -> biword in row-reading order, column indices inserted
    std::vector<std::vector<long>> tableau;
    for (std::size_t i = 0; i < matrix.size(); ++i)
        for (std::size_t j = 0; j < matrix[i].size(); ++j)
            for (long rep = 0; rep < matrix[i][j]; ++rep)
                row_insert(tableau, static_cast<long>(j));
    std::vector<long> shape;
    shape.reserve(tableau.size());
    for (const auto& row : tableau) shape.push_back(static_cast<long>(row.size()));
    return Signature(std::move(shape));
}

} // namespace sqwit
