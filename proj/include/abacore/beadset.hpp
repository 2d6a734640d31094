#pragma once

#include <vector>

#include "abacore/partition.hpp"

namespace abacore {

// Half-integer axis of a bead-set, stored doubled so it stays exact. The
// defining property: beads strictly to the right of the axis are in
// bijection with spacers strictly to its left. The empty bead-set has
// axis -1/2, which balances 0 against 0.
struct Axis {
    int twice_value = -1;
    double value() const { return twice_value / 2.0; }
    friend bool operator==(const Axis&, const Axis&) = default;
};

// A finite set of non-negative bead positions; every other non-negative
// integer is a spacer. Reading positions 0, 1, 2, ... a spacer is a
// horizontal step and a bead a vertical step of the partition's boundary
// path, which is why a bead-set with 0 as a spacer is exactly the set of
// first-column hook lengths.
class BeadSet {
public:
    BeadSet() = default;

    // Throws std::invalid_argument on duplicates or negative positions.
    explicit BeadSet(std::vector<int> beads);

    // The minimal bead-set of p: its first-column hooks.
    static BeadSet minimal(const Partition& p);

    const std::vector<int>& beads() const { return beads_; }
    int count() const { return static_cast<int>(beads_.size()); }
    bool empty() const { return beads_.empty(); }
    int max_bead() const;  // requires a non-empty set
    bool contains(int position) const;

    // Component for each bead = number of spacers left of it; zero
    // components are dropped.
    Partition to_partition() const;

    // {0..k-1} plus every bead moved up by k; represents the same
    // partition. k must be non-negative.
    BeadSet shifted(int k) const;

    // Undoes shifts until 0 is a spacer.
    BeadSet minimalized() const;

    bool is_minimal() const { return !contains(0); }

    // Shift by the least k in [0, s-1] making the bead count a multiple
    // of s. Requires s >= 2.
    BeadSet normalized(int s) const;

    Axis axis() const { return Axis{2 * count() - 1}; }
    int beads_right_of(Axis a) const;
    int spacers_left_of(Axis a) const;

    // True iff reflecting positions 0..max across (max bead)/2 swaps beads
    // and spacers, i.e. the partition is self-conjugate. Requires a
    // minimal bead-set; the empty set passes.
    bool is_axis_symmetric() const;

    friend bool operator==(const BeadSet&, const BeadSet&) = default;

private:
    std::vector<int> beads_;  // ascending
};

}  // namespace abacore
