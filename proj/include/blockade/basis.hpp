#pragma once

#include <vector>

#include "blockade/partition.hpp"

namespace blockade {

/// One basis state |r; t, m_t> of a blockade-restricted irrep. Half-integer
/// spins are stored doubled (t2 = 2t, mt2 = 2 m_t) so labels stay exact.
/// row = 0 is the top row of the weight diagram (nr = lambda3), row = 1 the
/// row below it (one more Rydberg excitation).
struct BasisLabel {
    int row = 0;
    int t2 = 0;
    int mt2 = 0;
    int n0 = 0;
    int n1 = 0;
    int nr = 0;

    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// Canonically ordered basis of one blockade-restricted irrep:
/// row 0 with m_t descending from t to -t, then row 1 with the t = (p+1)/2
/// block (m_t descending) followed by the t = (p-1)/2 block (m_t descending).
struct IrrepBasis {
    Partition partition;
    std::vector<BasisLabel> states;

    int dim() const { return static_cast<int>(states.size()); }
    int row0_size() const { return partition.p() + 1; }

    /// Index of the row-0 state with n0 atoms in |0>, or -1 if absent.
    int row0_index_of(int n0) const;

    /// Index of the state with the given labels, or -1 if absent.
    int index_of(int row, int t2, int mt2) const;
};

/// Builds the canonical basis. Rejects sectors with lambda3 >= 2, whose
/// blockaded dimension is zero.
IrrepBasis build_basis(const Partition& lambda);

}  // namespace blockade
