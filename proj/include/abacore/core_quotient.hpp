#pragma once

#include <vector>

#include "abacore/beadset.hpp"
#include "abacore/partition.hpp"

namespace abacore {

// The s partitions read off the runners of the canonically normalized
// abacus (least shift with bead count divisible by s). A different shift
// class would permute the parts cyclically; this library always uses the
// canonical one.
struct Quotient {
    int s = 0;
    std::vector<Partition> parts;

    long long total_size() const;

    friend bool operator==(const Quotient&, const Quotient&) = default;
};

struct CoreQuotientPair {
    Partition core;
    Quotient quotient;
};

// Runner bead-sets X_i = {j : i + j*s in x} for 0 <= i < s.
std::vector<BeadSet> runner_bead_sets(const BeadSet& x, int s);

// Push the beads of every runner down as low as they go. The result has
// no hook of length s, is independent of any removal order, and is
// idempotent. Requires s >= 2.
Partition s_core(const Partition& p, int s);

Quotient s_quotient(const Partition& p, int s);

CoreQuotientPair decompose(const Partition& p, int s);

// Inverse of decompose: the unique partition with the given s-core and
// s-quotient. Throws std::invalid_argument if the core contains an s-hook
// or the quotient does not have exactly s parts.
Partition reconstruct(const Partition& core, const Quotient& quotient);

struct SizeDecomposition {
    long long core_size = 0;
    long long quotient_total = 0;
};

// Satisfies |p| == core_size + s * quotient_total: every box of a quotient
// part accounts for one s-hook of p, hence for s boxes.
SizeDecomposition size_decomposition(const Partition& p, int s);

// Conjugation acts on the decomposition by conjugating the core and
// reversing-and-conjugating the quotient. Returns true iff both hold
// for p.
bool conjugate_quotient_check(const Partition& p, int s);

}  // namespace abacore
