#pragma once

#include <vector>

#include "cs/matrix_semantics.hpp"

namespace cs {

/// Exact monomial matrix on a d^n-dimensional space: a permutation of the
/// basis with an exact unit-scalar phase per column (M e_c = phase[c] *
/// e_{perm[c]}). Products, inverses, and powers stay in this class, so
/// parafermion algebra relations can be checked with decidable equality.
struct MonomialMatrix {
    RingParams ring;
    long long dim = 0;
    std::vector<long long> perm;
    std::vector<ExactScalar> phase;

    static MonomialMatrix identity(RingParams r, long long dim);
    MonomialMatrix operator*(const MonomialMatrix& rhs) const;
    MonomialMatrix inverse() const;
    MonomialMatrix pow(long long e) const;
    bool operator==(const MonomialMatrix& rhs) const;
    Eigen::MatrixXcd to_matrix() const;
};

/// 2n parafermion generators acting on n qudit slots: c_{2i-1} and c_{2i}
/// live on slot i with a charge-string prefix on the earlier slots, so
/// that c_a c_b = q c_b c_a for a < b and c_a^d = 1.
struct ParafermionRep {
    int d = 0;
    int n = 0;
    std::vector<MonomialMatrix> c;  // size 2n, 0-based: c[j] is c_{j+1}
};

ParafermionRep parafermion_generators(int d, int n);

/// O(dim^2) products of a dense matrix with a monomial matrix.
Eigen::MatrixXcd dense_times_monomial(const Eigen::MatrixXcd& b,
                                      const MonomialMatrix& m);
Eigen::MatrixXcd monomial_times_dense(const MonomialMatrix& m,
                                      const Eigen::MatrixXcd& b);

/// || b x b^dagger - y || for unitary b, computed as || b x - y b ||.
double adjoint_transport_error(const Eigen::MatrixXcd& b,
                               const MonomialMatrix& x,
                               const MonomialMatrix& y);

/// Z_d grading of a monomial: sum of generator exponents mod d.
int grading(int d, const std::vector<int>& exponents);

struct DoubleBraid {
    int j = 0;  // 1-based pair index; acts on strands 2j-1 .. 2j+2
    Eigen::MatrixXcd matrix;
};

/// Double braid exchanging pairs j and j+1, built from the Gaussian sum
/// over powers of a neutral two-generator monomial and validated against
/// the charge-transport identity Ad(b)(c_{2j-1}^m c_{2j}^n) =
/// c_{2j+1}^m c_{2j+2}^n for all (m, n). Throws std::runtime_error if no
/// candidate monomial satisfies the identity.
DoubleBraid double_braid(const ParafermionRep& rep, int j);

struct BraidRelationReport {
    double yangBaxterError = 0;   // after optimal scalar-phase alignment
    Complex yangBaxterPhase = 1;  // recorded alignment phase
    double farCommutationError = 0;
    double reidemeisterError = 0;  // || b b^dagger - 1 ||
    bool pass = false;
};

BraidRelationReport braid_relation_check(const ParafermionRep& rep);

/// Finite product-state functional x -> Tr(rho^{(x) n} x).
struct AlgebraState {
    int d = 0;
    int n = 0;
    Eigen::MatrixXcd rhoFull;  // d^n x d^n density matrix
};

AlgebraState product_state(const Eigen::MatrixXcd& rho, int n);

struct InvarianceReport {
    double maxDeviation = 0;
    bool pass = false;
};

/// Checks phi(Ad(b_j) x) = phi(x) for every monomial x in the generators
/// of total degree <= degreeCap and every braid index j.
InvarianceReport braid_invariance_check(const AlgebraState& state,
                                        const ParafermionRep& rep,
                                        int degreeCap);

/// A state on the two-generator algebra is neutral when it vanishes on
/// every monomial c_1^a c_2^b with a + b != 0 mod d.
bool neutrality_check(const Eigen::MatrixXcd& rho, int d, double tol = 1e-10);

}  // namespace cs
