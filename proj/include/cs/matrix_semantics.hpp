#pragma once

#include <Eigen/Dense>

#include <complex>
#include <utility>
#include <vector>

#include "cs/diagram.hpp"

namespace cs {

using Complex = std::complex<double>;

/// A d-state vector.
struct QuditKet {
    int d = 0;
    Eigen::VectorXcd amplitudes;
};

/// A transformation with two inputs and two outputs under the dictionary.
struct TwoBox {
    int d = 0;
    Eigen::MatrixXcd entries;
};

/// Complex-weighted combination of diagrams. The exact scalar ring holds
/// only cyclotomic-rational values, so diagrams with arbitrary complex
/// prefactors (as produced by the inverse dictionary) carry their weights
/// outside the ring.
struct ComplexDiagramSum {
    RingParams ring;
    int top = 0;
    int bottom = 0;
    std::vector<std::pair<Complex, DiagramSum>> terms;
};

/// Basis ket |k> and its picture (a charged cap; the delta^(-1/2)
/// normalization of the picture lives in the pairing convention: every
/// bra-ket contraction carries one factor delta^(-1)).
std::pair<QuditKet, DiagramSum> ket_from_charge(RingParams ring, int k);

/// P_k = (1/delta) cup(-k) over cap(k); diagram_to_matrix gives |k><k|.
DiagramSum projection_diagram(RingParams ring, int k);

/// Exact entry <j| D |k> = delta^(-1) eval( cap(k) over D over cup(-j) ).
ExactScalar matrix_entry_exact(const DiagramSum& d2box, int j, int k);

/// Matrix of a 2-input/2-output diagram under the dictionary.
TwoBox diagram_to_matrix(const DiagramSum& d2box);
Eigen::MatrixXcd diagram_to_matrix(const ComplexDiagramSum& d2box);

/// Inverse dictionary: A -> sum_{jk} A_{jk} delta^(-1) cup(-k) over cap(j).
ComplexDiagramSum matrix_to_diagram(RingParams ring, const Eigen::MatrixXcd& a);

struct PauliPictures {
    DiagramSum i, x, y, z;
};

/// The pictured Pauli transformations: X carries charge 1 on the right
/// string, Y charge -1 on the left string, Z the same-level pair (1, -1).
PauliPictures pauli_pictures(RingParams ring);

/// Ordinary discrete Fourier transform, F_{lk} = q^{lk} / sqrt(d).
TwoBox dft_matrix(int d);

/// Phase (Gaussian) transformation G|k> = zeta^{k^2}|k> (matrix level only).
Eigen::MatrixXcd gauss_matrix(RingParams ring);

}  // namespace cs
