#pragma once

#include <compare>
#include <string>
#include <vector>

namespace abacore {

// A partition stored as its component list, largest first. The empty
// partition is a first-class value (it shows up constantly as an s-core),
// so every operation accepts it.
class Partition {
public:
    Partition() = default;

    // Throws std::invalid_argument unless the components are positive and
    // non-increasing. An empty sequence is allowed.
    explicit Partition(std::vector<int> components);

    // The staircase (k, k-1, ..., 1); staircase(0) is empty. These are
    // exactly the 2-cores.
    static Partition staircase(int k);

    const std::vector<int>& components() const { return components_; }
    int rows() const { return static_cast<int>(components_.size()); }
    bool empty() const { return components_.empty(); }
    long long size() const;

    // 1-indexed row; returns 0 past the last row.
    int component(int row) const;

    Partition conjugate() const;
    bool is_self_conjugate() const;

    // Hook lengths of every box, one vector per row of the Young diagram.
    std::vector<std::vector<int>> hook_lengths() const;

    // {h_11, h_21, ...} as a sorted ascending set. Row i contributes
    // component(i) + rows() - i, so this doubles as the minimal bead
    // positions of the partition.
    std::vector<int> first_column_hooks() const;

    // Removes the hook cornered at (row, col), both 1-indexed; the size
    // drops by exactly that hook's length. Implemented as a bead move
    // (bead x to the spacer x - |h|) rather than box migration.
    // Throws std::out_of_range for an invalid corner.
    Partition remove_hook(int row, int col) const;

    // True iff no box has hook length t. Requires t >= 1.
    bool is_t_core(int t) const;

    // Young-diagram inclusion: every row of other fits inside this one.
    bool contains(const Partition& other) const;

    // "4,2,1,1"; the empty partition prints as "empty".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.components_ <=> b.components_;
    }

private:
    std::vector<int> components_;
};

}  // namespace abacore
