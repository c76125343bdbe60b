#pragma once

#include <vector>

#include "cs/sft.hpp"

namespace cs {

/// Value of the closed diagram obtained by pairing the inputs and outputs
/// of a 2-box with nested arcs around the right side. The unit constant
/// (closure of a diagonal matrix unit) is measured once per d from the
/// rewrite engine and cached.
Complex planar_trace(const TwoBox& a);
double planar_trace_unit(RingParams ring);

/// Trace norms ||A||_p = (Tr((A*A)^{p/2}))^{1/p} under the planar trace;
/// p = infinity gives the largest singular value.
double p_norm(const TwoBox& a, double p);

/// Horizontal multiplication: the two middle strings of A (x) B contracted.
/// The bilinear structure constants are generated diagrammatically per d.
TwoBox convolution(const TwoBox& a, const TwoBox& b);

struct NormReport {
    double p = 0, q = 0;
    double lhs = 0, rhs = 0, slack = 0;
    bool pass = false;
};

/// Hausdorff-Young: ||F_s(A)||_q <= delta^(1-2/p) ||A||_p for 1 <= p <= 2.
NormReport hausdorff_young_check(const TwoBox& a, double p);

struct BiProjectionData {
    int d = 0;
    std::vector<int> subgroup;  // the elements of H <= Z_d
    TwoBox box;                 // indicator of H on the diagonal
};

/// The 2-box supported on the subgroup generated by d's divisor `gen`;
/// both it and its transform are positive multiples of projections
/// (validated by the tests, not assumed).
BiProjectionData biprojection(RingParams ring, int gen);

/// Translated (by g) and character-modulated (by chi) variant of a
/// biprojection; the extremizer family of the Hausdorff-Young inequality.
TwoBox bi_shift(const BiProjectionData& b, int g, int chi);

/// Min eigenvalue of the hermitian part of convolution(A, B) for PSD
/// inputs (validated); pass iff >= -1e-9.
std::pair<double, bool> schur_positivity_check(const TwoBox& a, const TwoBox& b);

/// Renyi entropy h_p(A) = (p/(1-p)) log||A||_p, 0 < p != 1.
double renyi_entropy(const TwoBox& a, double p);
/// Von Neumann entropy h(A) = Tr(-|A| log|A|) under the planar trace.
double von_neumann_entropy(const TwoBox& a);

struct EntropicReport {
    double lhs = 0, rhs = 0;
    bool pass = false;
};

/// h(|A|^2) + h(|F_s(A)|^2) >= 2||A||_2^2 (log delta - log||A||_2^2).
EntropicReport entropic_up_check(const TwoBox& a);

}  // namespace cs
