#pragma once

#include "cs/matrix_semantics.hpp"

namespace cs {

/// The string Fourier transform as a linear map on 2-box matrix entries,
/// generated once per d by rotating every matrix-unit picture through the
/// rewrite engine (the diagram calculus is the single source of truth).
struct RotationTable {
    int d = 0;
    Eigen::MatrixXcd table;  // d^2 x d^2, acting on column-flattened entries
};

/// One 90-degree click: the bottom-left output bends up around the left
/// side to become the new leftmost input; the top-right input bends down
/// around the right side to become the new rightmost output.
DiagramSum rotate_one_click(const DiagramSum& d2box);
ComplexDiagramSum rotate_one_click(const ComplexDiagramSum& d2box);

RotationTable make_rotation_table(RingParams ring);

TwoBox apply_rotation_table(const RotationTable& rot, const TwoBox& a);

/// SFT of a 2-box via the diagram path: inverse dictionary, rotate, dictionary.
TwoBox sft_2box(const TwoBox& a);

/// An operator on the doubled (d^2-dimensional) space, for the reflection
/// setting: the first tensor slot is the reflected copy.
struct BipartiteOperator {
    int d = 0;
    Eigen::MatrixXcd entries;  // d^2 x d^2, row/col index = slot1 * d + slot2
};

/// SFT on the doubled space: the same boundary rotation, realized as the
/// fixed re-indexing S[(b,d),(a,c)] = T[(a,b),(c,d)].
BipartiteOperator sft_bipartite(const BipartiteOperator& t);

}  // namespace cs
