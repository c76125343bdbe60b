#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "cs/scalar_ring.hpp"

namespace cs {

/// Fusion-category data needed for the 6j self-duality check: label set
/// 0..numLabels-1, duality involution, modular S matrix, and the squared
/// modulus of the 6j symbol (zero off the admissible 6-tuples, whose list
/// is kept as the support for fast summation).
struct FusionCategoryData {
    int numLabels = 0;
    std::vector<int> dual;
    Eigen::MatrixXcd S;
    std::function<double(const std::array<int, 6>&)> sixJModulusSq;
    std::vector<std::array<int, 6>> admissibleTuples;
};

/// Pointed Z_d category (d odd >= 3): labels Z_d, dual(j) = -j, fusion by
/// addition, S_{jk} = q^{jk}/sqrt(d); 6j symbols have unit modulus on
/// admissible tetrahedra and vanish otherwise. Construction self-tests S
/// unitarity/symmetry, the admissible-count d^3, and the duality identity
/// on the vacuum tuple. Throws std::invalid_argument for even or small d.
FusionCategoryData pointed_zd_category(int d);

struct SixJDualityReport {
    double maxDeviation = 0;
    int tuplesChecked = 0;
    bool pass = false;
};

/// Checks |6j(X6,X5,X4; dual X3, dual X2, dual X1)|^2 =
/// sum_Y prod_k S_{X_k Y_k} |6j(Y1..Y6)|^2 on the given tuples.
SixJDualityReport verify_6j_duality(
    const FusionCategoryData& cat,
    const std::vector<std::array<int, 6>>& tuples, double tol = 1e-9);

/// All numLabels^6 tuples (for full scans at small size).
std::vector<std::array<int, 6>> all_6j_tuples(const FusionCategoryData& cat);

/// Deterministic random tuples for large label sets.
std::vector<std::array<int, 6>> random_6j_tuples(const FusionCategoryData& cat,
                                                 int count,
                                                 std::uint64_t seed);

#ifdef CS_ENABLE_FIBONACCI
/// Fibonacci category with the 6j data obtained by numerically solving the
/// pentagon constraints under unitarity. Throws std::runtime_error if the
/// solve fails.
FusionCategoryData fibonacci_category();
#endif

}  // namespace cs
