#pragma once

#include <vector>

#include "cs/matrix_semantics.hpp"

namespace cs {

/// Single-particle operators of the four-string (quon) representation:
/// two side-by-side charged string pairs give a d^2-dimensional virtual
/// space; each operator is a neutral charge pattern on the four strings,
/// realized as a tensor product of evaluated two-string pictures.
struct QuonPauli {
    int d = 0;
    Eigen::MatrixXcd x, y, z, gamma;  // d^2 x d^2
};

/// X: charges (1, -1) on strings (1, 4); Y: (-1, 1) on strings (1, 3);
/// Z: (1, -1) on strings (1, 2); gamma = zeta^{-1} X Y Z, equal to the
/// picture with charges (1, -1, 1, -1) on all four strings.
QuonPauli quon_paulis(int d);

/// Spectral projector of gamma for eigenvalue 1 (the physical subspace).
/// Throws std::logic_error if the rank is not d.
Eigen::MatrixXcd neutral_projector(int d);

struct MultiQuditState {
    int n = 0;
    int d = 0;
    Eigen::VectorXcd amplitudes;  // d^n entries, big-endian qudit order
};

/// Three-particle states from the two internal wirings of the quon
/// squares: the corner chains identify the pair charges of adjacent
/// squares (computed by contracting engine-evaluated cap/cup deltas), and
/// the rotated wiring applies the one-click transform to every particle.
MultiQuditState ghz_state(int d, int n = 3);
MultiQuditState max_state(int d, int n = 3);

/// Partial trace onto the listed subsystems (0-based, ascending output
/// order). Throws std::out_of_range on bad indices.
Eigen::MatrixXcd reduced_density(const MultiQuditState& state,
                                 const std::vector<int>& keep);

/// Von Neumann entropy of the reduced state on `cut`.
double entanglement_entropy(const MultiQuditState& state,
                            const std::vector<int>& cut);

struct MinimalMaximalReport {
    double zeroEntropy = 0;    // entanglement across the 2-box cut
    double bellEntropy = 0;    // same for the transform image
    double flatnessError = 0;  // modulus spread of the transformed zero box
    double entropicSum = 0;    // lhs of the entropic bound for the pair
    double entropicBound = 0;  // 2 log delta at unit normalization
    bool pass = false;
};

/// The zero state and the Bell state as a Fourier-dual minimal/maximal
/// entanglement pair.
MinimalMaximalReport minimal_maximal_pair_check(int d);

}  // namespace cs
