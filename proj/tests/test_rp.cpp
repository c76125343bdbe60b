#include <doctest.h>

#include <cmath>
#include <random>

#include "cs/reflection_positivity.hpp"

using namespace cs;

namespace {

std::mt19937_64& rng() {
    static std::mt19937_64 r(44556677);
    return r;
}

Eigen::VectorXcd randvec(int n) {
    static std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = Complex(gauss(rng()), gauss(rng()));
    return v;
}

Eigen::MatrixXcd randherm(int n) {
    static std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Complex(gauss(rng()), gauss(rng()));
    return (a + a.adjoint()) / 2.0;
}

}  // namespace

TEST_CASE("theta extension is involutive and antiunitary") {
    for (int d = 2; d <= 6; ++d) {
        ReflectionContext ctx{d};
        auto x = randvec(d * d);
        auto y = randvec(d * d);
        CHECK((ctx.theta_extended(ctx.theta_extended(x)) - x).norm() < 1e-12);
        // Antilinearity: theta(ax + y) = conj(a) theta(x) + theta(y).
        Complex a(0.3, -0.8);
        Eigen::VectorXcd lhs = ctx.theta_extended(a * x + y);
        Eigen::VectorXcd rhs =
            std::conj(a) * ctx.theta_extended(x) + ctx.theta_extended(y);
        CHECK((lhs - rhs).norm() < 1e-12);
        // Antiunitarity: <theta x, theta y> = <y, x>.
        Complex ip1 = ctx.theta_extended(x).adjoint() *
                      ctx.theta_extended(y).eval();
        Complex ip2 = y.adjoint() * x;
        CHECK(std::abs(ip1 - ip2) < 1e-10);
        // Factor-swap on product vectors: theta(V (x) W) = theta(W) (x)
        // theta(V).
        auto v = randvec(d);
        auto w = randvec(d);
        Eigen::VectorXcd prod(d * d), swapped(d * d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                prod(i * d + j) = v(i) * w(j);
                swapped(i * d + j) = std::conj(w(i)) * std::conj(v(j));
            }
        CHECK((ctx.theta_extended(prod) - swapped).norm() < 1e-12);
    }
}

TEST_CASE("rp_pairing boundary values") {
    for (int d = 2; d <= 5; ++d) {
        BipartiteOperator zero;
        zero.d = d;
        zero.entries = Eigen::MatrixXcd::Zero(d * d, d * d);
        // H = 0, V = W of unit norm: the pairing is |<V,V>|^2-type = 1.
        auto v = randvec(d);
        v /= v.norm();
        CHECK(std::abs(rp_pairing(v, v, zero, 3.7) - Complex(1.0)) < 1e-12);
        // beta = 0 on any self-adjoint H: Gram-type pairing
        // <thetaV (x) V, thetaW (x) W> = <W,V> <V,W> conj-patterned.
        BipartiteOperator h;
        h.d = d;
        h.entries = randherm(d * d);
        auto w = randvec(d);
        Complex got = rp_pairing(v, w, h, 0.0);
        Complex vw = v.adjoint() * w;
        Complex expect = std::conj(vw) * vw *
                         Complex(1.0);  // <thetaV, thetaW> <V, W> = conj(<V,W>) <V,W>
        CHECK(std::abs(got - expect) < 1e-10);
        // Non-self-adjoint H is rejected.
        BipartiteOperator bad;
        bad.d = d;
        bad.entries = Eigen::MatrixXcd::Zero(d * d, d * d);
        bad.entries(0, 1) = 1.0;
        CHECK_THROWS_AS(rp_pairing(v, w, bad, 1.0), std::invalid_argument);
    }
}

TEST_CASE("transform positivity hypothesis and negative control") {
    // Pullback-constructed Hamiltonians satisfy the hypothesis.
    for (int d : {2, 3})
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto h = pullback_hamiltonian(d, seed);
            CHECK((h.entries - h.entries.adjoint()).norm() < 1e-9);
            auto rep = sft_neg_positivity(h);
            CHECK(rep.pass);
            CHECK(rep.minEigenvalue >= -1e-9);
            CHECK(rep.hermDeviation <= 1e-10);
        }
    // H = 0 boundary.
    BipartiteOperator zero;
    zero.d = 3;
    zero.entries = Eigen::MatrixXcd::Zero(9, 9);
    auto rep = sft_neg_positivity(zero);
    CHECK(rep.pass);
    CHECK(std::abs(rep.minEigenvalue) < 1e-12);
    // Random Hamiltonians without construction typically fail.
    int fails = 0;
    for (int trial = 0; trial < 20; ++trial) {
        BipartiteOperator h;
        h.d = 3;
        h.entries = randherm(9);
        if (!sft_neg_positivity(h).pass) ++fails;
        else CHECK_NOTHROW(rp_certificate(h, {0.5}, 5));
    }
    CHECK(fails >= 15);
}

TEST_CASE("certificate chain over pullback Hamiltonians") {
    const std::vector<double> betas = {0.1, 1.0, 10.0};
    for (int d : {2, 3}) {
        int count = 0;
        for (std::uint64_t seed = 100; seed < 200; ++seed) {
            auto h = pullback_hamiltonian(d, seed);
            // Normalize the energy scale so exp(-10 H) stays in floating
            // range; positivity is scale-invariant.
            h.entries /= (1.0 + h.entries.norm());
            auto cert = rp_certificate(h, betas, 10, seed);
            CHECK(cert.certified);
            for (auto& b : cert.betas) {
                CHECK(b.expMinEigenvalue >= -1e-9);
                CHECK(b.pairingMinReal >= -1e-9);
                CHECK(b.identityMaxError <= 1e-9);
            }
            ++count;
        }
        CHECK(count == 100);
    }
    // Certificate refusal on a hypothesis violation.
    BipartiteOperator h;
    h.d = 2;
    h.entries = Eigen::MatrixXcd::Zero(4, 4);
    bool refused = false;
    // Find a hermitian H with indefinite transform.
    for (int trial = 0; trial < 50 && !refused; ++trial) {
        h.entries = randherm(4);
        if (!sft_neg_positivity(h).pass) {
            CHECK_THROWS_AS(rp_certificate(h, {1.0}, 5), std::runtime_error);
            refused = true;
        }
    }
    CHECK(refused);
}

TEST_CASE("reflection pairing identity over random triples") {
    // The defining identity of the bipartite transform, at exp(-beta H)
    // for self-adjoint H (1000 random triples).
    for (int trial = 0; trial < 1000; ++trial) {
        int d = 2 + static_cast<int>(rng()() % 4);
        BipartiteOperator h;
        h.d = d;
        h.entries = randherm(d * d);
        h.entries /= (1.0 + h.entries.norm());
        auto v = randvec(d);
        auto w = randvec(d);
        double beta = 0.5 + 0.01 * static_cast<double>(trial % 100);
        auto eh = bipartite_exp(h, beta);
        auto seh = sft_bipartite(eh);
        ReflectionContext ctx{d};
        Complex lhs = rp_pairing(v, w, h, beta);
        Eigen::VectorXcd mixed(d * d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                mixed(a * d + b) = v(a) * std::conj(w(b));
        Complex rhs = mixed.adjoint() * (seh.entries * mixed).eval();
        CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("decomposed Hamiltonian theorem") {
    const std::vector<double> betas = {0.1, 1.0};
    int d = 2;
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::MatrixXcd hm = randherm(d);
        auto h0 = pullback_hamiltonian(d, 9000 + trial);
        h0.entries /= (1.0 + h0.entries.norm());
        auto cert = decomposed_rp_check(hm, h0, betas, 10, trial);
        CHECK(cert.certified);
        for (auto& b : cert.betas) CHECK(b.pairingMinReal >= -1e-9);
    }
    // H_- = 0 reduces to the plain certificate.
    auto h0 = pullback_hamiltonian(d, 4242);
    h0.entries /= (1.0 + h0.entries.norm());
    auto certA = decomposed_rp_check(Eigen::MatrixXcd::Zero(d, d), h0, betas,
                                     10, 11);
    auto certB = rp_certificate(h0, betas, 10, 11);
    CHECK(certA.certified);
    CHECK(certB.certified);
    for (std::size_t i = 0; i < betas.size(); ++i)
        CHECK(certA.betas[i].pairingMinReal ==
              doctest::Approx(certB.betas[i].pairingMinReal).epsilon(1e-9));
    // H_- diagonal, H0 = 0: the pairing factorizes into a product of
    // manifestly non-negative one-factor Gibbs weights.
    Eigen::MatrixXcd diagHm = Eigen::MatrixXcd::Zero(d, d);
    diagHm(0, 0) = 0.4;
    diagHm(1, 1) = -0.9;
    BipartiteOperator zero;
    zero.d = d;
    zero.entries = Eigen::MatrixXcd::Zero(d * d, d * d);
    double beta = 0.8;
    auto v = randvec(d);
    // Assemble by the library, compare to the closed form
    // sum_ab |v_a|^2 |v_b|^2 e^{-beta(E_a + E_b)}.
    auto cert = decomposed_rp_check(diagHm, zero, {beta}, 1, 3);
    CHECK(cert.certified);
    BipartiteOperator h;
    h.d = d;
    h.entries = Eigen::MatrixXcd::Zero(d * d, d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            h.entries(a * d + b, a * d + b) =
                diagHm(a, a) + std::conj(diagHm(b, b));
    Complex got = rp_pairing(v, v, h, beta);
    double expect = 0;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            expect += std::norm(v(a)) * std::norm(v(b)) *
                      std::exp(-beta * (diagHm(a, a).real() +
                                        diagHm(b, b).real()));
    CHECK(std::abs(got - Complex(expect)) < 1e-10);
}
