#include "cs/reflection_positivity.hpp"

#include <random>
#include <stdexcept>

namespace cs {

namespace {

Eigen::VectorXcd random_vector(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    return v;
}

void require_self_adjoint(const Eigen::MatrixXcd& m, const char* who) {
    if ((m - m.adjoint()).norm() > 1e-10 * (1.0 + m.norm()))
        throw std::invalid_argument(std::string(who) +
                                    ": operator must be self-adjoint");
}

// Inverse of the bipartite transform's re-indexing:
// given S with S[(b,e),(a,c)] = T[(a,b),(c,e)], recover T.
BipartiteOperator sft_bipartite_inverse(const BipartiteOperator& s) {
    int d = s.d;
    BipartiteOperator t;
    t.d = d;
    t.entries.resize(d * d, d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int e = 0; e < d; ++e)
                    t.entries(a * d + b, c * d + e) =
                        s.entries(b * d + e, a * d + c);
    return t;
}

Complex quadratic_form(const Eigen::VectorXcd& x, const Eigen::MatrixXcd& m,
                       const Eigen::VectorXcd& y) {
    return x.adjoint() * (m * y).eval();
}

RPBetaReport beta_report(const BipartiteOperator& h, double beta, int samples,
                         std::mt19937_64& rng) {
    int d = h.d;
    ReflectionContext ctx{d};
    RPBetaReport rep;
    rep.beta = beta;
    auto eh = bipartite_exp(h, beta);
    auto seh = sft_bipartite(eh);
    Eigen::MatrixXcd herm = (seh.entries + seh.entries.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
    rep.expMinEigenvalue = es.eigenvalues().minCoeff();
    rep.pairingMinReal = std::numeric_limits<double>::infinity();
    rep.pairingMaxImag = 0;
    rep.identityMaxError = 0;
    for (int trial = 0; trial < samples; ++trial) {
        auto v = random_vector(d, rng);
        auto w = random_vector(d, rng);
        Complex diag = rp_pairing(v, v, h, beta);
        rep.pairingMinReal = std::min(rep.pairingMinReal, diag.real());
        rep.pairingMaxImag =
            std::max(rep.pairingMaxImag,
                     std::abs(diag.imag()) / (1.0 + std::abs(diag)));
        // Reflection-pairing identity: the left side pairs reflected
        // doublings against exp(-beta H); the right side pairs
        // V (x) theta(W) against the transform of exp(-beta H).
        Complex lhs = rp_pairing(v, w, h, beta);
        Eigen::VectorXcd mixed(d * d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                mixed(a * d + b) = v(a) * std::conj(w(b));
        Complex rhs = quadratic_form(mixed, seh.entries, mixed);
        rep.identityMaxError =
            std::max(rep.identityMaxError,
                     std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
    }
    rep.pass = rep.expMinEigenvalue >= -1e-9 && rep.pairingMinReal >= -1e-9 &&
               rep.pairingMaxImag <= 1e-9 && rep.identityMaxError <= 1e-9;
    return rep;
}

}  // namespace

Eigen::VectorXcd ReflectionContext::theta_extended(
    const Eigen::VectorXcd& x) const {
    Eigen::VectorXcd out(d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            out(a * d + b) = std::conj(x(b * d + a));
    return out;
}

Eigen::VectorXcd ReflectionContext::reflect_double(
    const Eigen::VectorXcd& v) const {
    Eigen::VectorXcd out(d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) out(a * d + b) = std::conj(v(a)) * v(b);
    return out;
}

BipartiteOperator bipartite_exp(const BipartiteOperator& h, double beta) {
    if (beta < 0) throw std::invalid_argument("bipartite_exp: beta >= 0");
    require_self_adjoint(h.entries, "bipartite_exp");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.entries);
    Eigen::VectorXd lam = es.eigenvalues();
    Eigen::VectorXcd w(lam.size());
    for (int i = 0; i < lam.size(); ++i) w(i) = std::exp(-beta * lam(i));
    BipartiteOperator out;
    out.d = h.d;
    out.entries = es.eigenvectors() * w.asDiagonal() *
                  es.eigenvectors().adjoint();
    return out;
}

Complex rp_pairing(const Eigen::VectorXcd& v, const Eigen::VectorXcd& w,
                   const BipartiteOperator& h, double beta) {
    int d = h.d;
    if (v.size() != d || w.size() != d)
        throw std::invalid_argument("rp_pairing: dimension mismatch");
    ReflectionContext ctx{d};
    auto eh = bipartite_exp(h, beta);
    Eigen::VectorXcd left = ctx.reflect_double(v);
    Eigen::VectorXcd right = ctx.reflect_double(w);
    return quadratic_form(left, eh.entries, right);
}

SftPositivityReport sft_neg_positivity(const BipartiteOperator& h) {
    BipartiteOperator neg;
    neg.d = h.d;
    neg.entries = -h.entries;
    auto s = sft_bipartite(neg);
    SftPositivityReport rep;
    rep.hermDeviation = (s.entries - s.entries.adjoint()).norm();
    Eigen::MatrixXcd herm = (s.entries + s.entries.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
    rep.minEigenvalue = es.eigenvalues().minCoeff();
    rep.pass = rep.minEigenvalue >= -1e-9 && rep.hermDeviation <= 1e-10;
    return rep;
}

RPCertificate rp_certificate(const BipartiteOperator& h,
                             const std::vector<double>& betas, int samples,
                             std::uint64_t seed) {
    RPCertificate cert;
    cert.hypothesis = sft_neg_positivity(h);
    if (!cert.hypothesis.pass)
        throw std::runtime_error(
            "rp_certificate: certificate refused, transform of -H is not "
            "positive");
    std::mt19937_64 rng(seed);
    cert.certified = true;
    for (double beta : betas) {
        cert.betas.push_back(beta_report(h, beta, samples, rng));
        cert.certified = cert.certified && cert.betas.back().pass;
    }
    return cert;
}

RPCertificate decomposed_rp_check(const Eigen::MatrixXcd& hMinus,
                                  const BipartiteOperator& h0,
                                  const std::vector<double>& betas,
                                  int samples, std::uint64_t seed) {
    int d = h0.d;
    if (hMinus.rows() != d || hMinus.cols() != d)
        throw std::invalid_argument("decomposed_rp_check: dimension mismatch");
    require_self_adjoint(hMinus, "decomposed_rp_check");
    auto hyp = sft_neg_positivity(h0);
    if (!hyp.pass)
        throw std::runtime_error(
            "decomposed_rp_check: certificate refused, transform of -H0 is "
            "not positive");
    // H = H_- on the reflected factor + H0 + theta(H_-) on the other
    // factor; theta on operators is entrywise conjugation.
    BipartiteOperator h;
    h.d = d;
    h.entries = h0.entries;
    Eigen::MatrixXcd hPlus = hMinus.conjugate();
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int e = 0; e < d; ++e) {
                    Complex add = 0;
                    if (b == e) add += hMinus(a, c);
                    if (a == c) add += hPlus(b, e);
                    h.entries(a * d + b, c * d + e) += add;
                }
    RPCertificate cert;
    cert.hypothesis = hyp;
    std::mt19937_64 rng(seed);
    cert.certified = true;
    for (double beta : betas) {
        auto rep = beta_report(h, beta, samples, rng);
        // Only the pairing positivity is asserted by the decomposed
        // theorem; the transform-positivity of exp(-beta H) is reported
        // but not required.
        rep.pass = rep.pairingMinReal >= -1e-9 && rep.pairingMaxImag <= 1e-9 &&
                   rep.identityMaxError <= 1e-9;
        cert.betas.push_back(rep);
        cert.certified = cert.certified && rep.pass;
    }
    return cert;
}

BipartiteOperator pullback_hamiltonian(int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd a(d * d, d * d);
    for (int i = 0; i < d * d; ++i)
        for (int j = 0; j < d * d; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
    BipartiteOperator p;
    p.d = d;
    p.entries = a.adjoint() * a;
    BipartiteOperator t = sft_bipartite_inverse(p);
    // The hermitian part keeps the transform-positivity: the transform of
    // T's adjoint is the swap-conjugated transpose of the transform of T,
    // which is again positive.
    BipartiteOperator h;
    h.d = d;
    h.entries = -(t.entries + t.entries.adjoint()) / 2.0;
    return h;
}

}  // namespace cs
