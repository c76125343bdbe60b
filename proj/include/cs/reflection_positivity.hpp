#pragma once

#include <vector>

#include "cs/sft.hpp"

namespace cs {

/// Reflection (Riesz duality) structure on the doubled space. theta is the
/// antilinear entrywise-conjugation map in the charge basis; its extension
/// to the doubled space swaps the factors: theta(V (x) W) = theta(W) (x)
/// theta(V).
struct ReflectionContext {
    int d = 0;
    Eigen::VectorXcd theta(const Eigen::VectorXcd& v) const {
        return v.conjugate();
    }
    /// Extension to the doubled space (dimension d^2, slot order
    /// (first)*d + (second)).
    Eigen::VectorXcd theta_extended(const Eigen::VectorXcd& x) const;
    /// theta(V) (x) V, the reflected doubling of a single-factor vector.
    Eigen::VectorXcd reflect_double(const Eigen::VectorXcd& v) const;
};

/// Spectral exponential exp(-beta H) of a self-adjoint doubled-space
/// operator. Throws std::invalid_argument if H is not self-adjoint within
/// 1e-10.
BipartiteOperator bipartite_exp(const BipartiteOperator& h, double beta);

/// <theta(V) (x) V, exp(-beta H) (theta(W) (x) W)>.
Complex rp_pairing(const Eigen::VectorXcd& v, const Eigen::VectorXcd& w,
                   const BipartiteOperator& h, double beta);

/// Min eigenvalue of the hermitian part of the bipartite transform of -H,
/// with the deviation of that transform from hermiticity reported.
struct SftPositivityReport {
    double minEigenvalue = 0;
    double hermDeviation = 0;
    bool pass = false;
};
SftPositivityReport sft_neg_positivity(const BipartiteOperator& h);

struct RPBetaReport {
    double beta = 0;
    double expMinEigenvalue = 0;   // hermitian part of F_s(exp(-beta H))
    double pairingMinReal = 0;     // min Re over V = W samples
    double pairingMaxImag = 0;     // max relative |Im| over V = W samples
    double identityMaxError = 0;   // reflection-pairing identity residual
    bool pass = false;
};

struct RPCertificate {
    SftPositivityReport hypothesis;
    std::vector<RPBetaReport> betas;
    bool certified = false;
};

/// Full certificate chain: hypothesis F_s(-H) >= 0, then per beta the
/// positivity of F_s(exp(-beta H)), non-negativity of the diagonal RP
/// pairing over random vectors, and the reflection-pairing identity
/// <thetaV (x) V, X (thetaW (x) W)> = <V (x) thetaW, F_s(X) (V (x) thetaW)>
/// for X = exp(-beta H). Throws std::runtime_error (certificate refused)
/// when the hypothesis fails.
RPCertificate rp_certificate(const BipartiteOperator& h,
                             const std::vector<double>& betas, int samples,
                             std::uint64_t seed = 7);

/// Assemble H = H_- (x) I + H0 + I (x) theta(H_-) on the doubled space
/// (H_- acting on the left/reflected factor) and certify it. H_- must be
/// self-adjoint; hypothesis is checked on H0 only, per the decomposed
/// theorem. theta on operators is entrywise conjugation in the charge
/// basis.
RPCertificate decomposed_rp_check(const Eigen::MatrixXcd& hMinus,
                                  const BipartiteOperator& h0,
                                  const std::vector<double>& betas,
                                  int samples, std::uint64_t seed = 7);

/// Pullback construction of a certified Hamiltonian: draws a random PSD
/// doubled-space operator P and returns the self-adjoint part of
/// -sft_bipartite^{-1}(P), which satisfies F_s(-H) >= 0 by construction.
BipartiteOperator pullback_hamiltonian(int d, std::uint64_t seed);

}  // namespace cs
