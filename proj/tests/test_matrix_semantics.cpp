#include <doctest.h>

#include <complex>
#include <random>

#include "cs/matrix_semantics.hpp"

using namespace cs;

namespace {

DiagramSum random_two_box(RingParams r, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> pairs;
    if (rng() % 2 == 0)
        pairs = {{0, 3}, {1, 2}};
    else
        pairs = {{0, 1}, {2, 3}};
    std::vector<ChargeEvent> ch;
    int nev = static_cast<int>(rng() % 4);
    for (int i = 0; i < nev; ++i)
        ch.push_back({static_cast<int>(rng() % 4),
                      1 + static_cast<int>(rng() % (r.d - 1))});
    return DiagramSum(ChargedDiagram(r, 2, 2, pairs, ch, ExactScalar::one(r)));
}

Eigen::MatrixXcd mat_pow(Eigen::MatrixXcd m, int e) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    for (int i = 0; i < e; ++i) out = out * m;
    return out;
}

}  // namespace

TEST_CASE("basis kets are orthonormal under the pairing") {
    for (int d = 2; d <= 7; ++d) {
        auto r = make_ring(d);
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                auto [ketK, capK] = ket_from_charge(r, k);
                auto [ketJ, capJ] = ket_from_charge(r, j);
                // <j|k> carries one delta^(-1) per bra-ket contraction.
                auto ip = eval_closed(compose_vertical(capK, adjoint(capJ))) *
                          ExactScalar::delta_pow(r, -1);
                if (j == k)
                    CHECK(ip == ExactScalar::one(r));
                else
                    CHECK(ip.is_zero());
                CHECK(ketK.amplitudes(k) == Complex(1.0));
            }
    }
}

TEST_CASE("projection pictures map to rank-one projectors") {
    for (int d = 2; d <= 6; ++d) {
        auto r = make_ring(d);
        for (int k = 0; k < d; ++k) {
            auto m = diagram_to_matrix(projection_diagram(r, k)).entries;
            Eigen::MatrixXcd ekk = Eigen::MatrixXcd::Zero(d, d);
            ekk(k, k) = 1.0;
            CHECK((m - ekk).norm() < 1e-12);
        }
        // Resolution of the identity on the exact-scalar path.
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                ExactScalar s = ExactScalar::zero(r);
                for (int m = 0; m < d; ++m)
                    s = s + matrix_entry_exact(projection_diagram(r, m), j, k);
                if (j == k)
                    CHECK(s == ExactScalar::one(r));
                else
                    CHECK(s.is_zero());
            }
    }
}

TEST_CASE("the dictionary is a contravariant homomorphism") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        int d = 2 + static_cast<int>(rng() % 5);
        auto r = make_ring(d);
        auto a = random_two_box(r, rng);
        auto b = random_two_box(r, rng);
        Eigen::MatrixXcd lhs = diagram_to_matrix(compose_vertical(a, b)).entries;
        Eigen::MatrixXcd rhs =
            diagram_to_matrix(b).entries * diagram_to_matrix(a).entries;
        CHECK((lhs - rhs).norm() < 1e-10);
    }
}

TEST_CASE("adjoint diagrams map to conjugate transposes") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        int d = 2 + static_cast<int>(rng() % 5);
        auto r = make_ring(d);
        auto a = random_two_box(r, rng);
        Eigen::MatrixXcd m = diagram_to_matrix(a).entries;
        Eigen::MatrixXcd ma = diagram_to_matrix(adjoint(a)).entries;
        CHECK((ma - m.adjoint()).norm() < 1e-12);
    }
}

TEST_CASE("Pauli pictures satisfy the Weyl algebra") {
    for (int d = 2; d <= 9; ++d) {
        auto r = make_ring(d);
        auto q = r.q();
        auto p = pauli_pictures(r);
        auto I = diagram_to_matrix(p.i).entries;
        auto X = diagram_to_matrix(p.x).entries;
        auto Y = diagram_to_matrix(p.y).entries;
        auto Z = diagram_to_matrix(p.z).entries;
        auto id = Eigen::MatrixXcd::Identity(d, d);
        CHECK((I - id).norm() < 1e-12);
        CHECK((mat_pow(X, d) - id).norm() < 1e-12);
        CHECK((mat_pow(Y, d) - id).norm() < 1e-12);
        CHECK((mat_pow(Z, d) - id).norm() < 1e-12);
        // The commutation relation pins the para-isotopy phase orientation.
        CHECK((Z * X - q * X * Z).norm() < 1e-12);
        CHECK((Y * Z - q * Z * Y).norm() < 1e-12);
        // Z is the standard clock matrix; X and Y are phase permutations.
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                if (j != k) CHECK(std::abs(Z(j, k)) < 1e-12);
                else CHECK(std::abs(Z(k, k) - std::pow(q, k)) < 1e-12);
            }
        CHECK((X * X.adjoint() - id).norm() < 1e-12);
        CHECK((Y * Y.adjoint() - id).norm() < 1e-12);
        CHECK((Z * Z.adjoint() - id).norm() < 1e-12);
        // X raises and Y lowers the charge basis index.
        for (int k = 0; k < d; ++k) {
            CHECK(std::abs(std::abs(X((k + 1) % d, k)) - 1.0) < 1e-12);
            CHECK(std::abs(Y((k + d - 1) % d, k) - Complex(1.0)) < 1e-12);
        }
    }
}

TEST_CASE("discrete Fourier transform matrix") {
    for (int d = 2; d <= 9; ++d) {
        auto r = make_ring(d);
        auto f = dft_matrix(d).entries;
        auto id = Eigen::MatrixXcd::Identity(d, d);
        CHECK((f * f.adjoint() - id).norm() < 1e-12);
        // Acting on diagonal coefficient functions, F spreads the minimal
        // projection P_0 uniformly: F(P_0) = (1/sqrt(d)) sum_l P_l.
        Eigen::VectorXcd coeff = Eigen::VectorXcd::Zero(d);
        coeff(0) = 1.0;
        Eigen::VectorXcd spread = f * coeff;
        Eigen::MatrixXcd lhs = Eigen::MatrixXcd::Zero(d, d);
        for (int l = 0; l < d; ++l)
            lhs += spread(l) * diagram_to_matrix(projection_diagram(r, l)).entries;
        Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(d, d);
        for (int l = 0; l < d; ++l)
            rhs += diagram_to_matrix(projection_diagram(r, l)).entries /
                   std::sqrt(static_cast<double>(d));
        CHECK((lhs - rhs).norm() < 1e-12);
    }
}

TEST_CASE("gaussian phase matrix") {
    for (int d = 2; d <= 9; ++d) {
        auto r = make_ring(d);
        auto g = gauss_matrix(r);
        auto id = Eigen::MatrixXcd::Identity(d, d);
        CHECK((g * g.adjoint() - id).norm() < 1e-12);
        for (int k = 0; k < d; ++k)
            CHECK(std::abs(g(k, k) -
                           ExactScalar::zeta_pow(r, 1LL * k * k).to_complex()) <
                  1e-12);
    }
}

TEST_CASE("matrix_to_diagram round trip") {
    std::mt19937_64 rng(31337);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        int d = 2 + static_cast<int>(rng() % 5);
        auto r = make_ring(d);
        Eigen::MatrixXcd a(d, d);
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) a(j, k) = Complex(gauss(rng), gauss(rng));
        auto back = diagram_to_matrix(matrix_to_diagram(r, a));
        CHECK((back - a).norm() < 1e-12);
    }
}
