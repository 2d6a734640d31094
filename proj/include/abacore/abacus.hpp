#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abacore/beadset.hpp"

namespace abacore {

// Bead positions arranged on runners: runner i, row j holds value
// i + j * runner_count. Row 0 is the bottom row, runner 0 the leftmost.
class Abacus {
public:
    // row_count defaults to the least number of rows covering the beads
    // (one row for an empty set). A forced row_count that cannot hold
    // every bead throws std::invalid_argument.
    Abacus(const BeadSet& x, int runner_count, std::optional<int> row_count = std::nullopt);

    int runners() const { return runners_; }
    int rows() const { return rows_; }
    int value_at(int runner, int row) const { return runner + row * runners_; }
    bool bead_at(int runner, int row) const;

    BeadSet bead_set() const;
    int beads_on_runner(int runner) const;

    // Row indices of the beads on one runner, viewed as a bead-set.
    BeadSet runner_rows(int runner) const;

    // One text line per row, top row first; 'o' for a bead, '.' for a
    // spacer, columns separated by single spaces.
    std::string ascii() const;

    friend bool operator==(const Abacus&, const Abacus&) = default;

private:
    int runners_ = 1;
    int rows_ = 1;
    std::vector<bool> occupied_;  // indexed by position value
};

}  // namespace abacore
