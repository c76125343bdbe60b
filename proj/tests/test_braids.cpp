// Parafermion algebras, double-braid unitaries, transport identities, braid
// group relations, and the finite-level product-state invariance /
// neutrality checks.
#include <doctest.h>

#include <random>
#include <vector>

#include "cs/parafermion.hpp"

using namespace cs;

namespace {

long long ipow(long long b, int e) {
    long long out = 1;
    for (int i = 0; i < e; ++i) out *= b;
    return out;
}

MonomialMatrix scaled(const MonomialMatrix& m, const ExactScalar& s) {
    MonomialMatrix out = m;
    for (auto& p : out.phase) p = p * s;
    return out;
}

Eigen::MatrixXcd random_density(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = Complex(g(rng), g(rng));
    Eigen::MatrixXcd p = a * a.adjoint();
    p /= p.trace().real();
    return p;
}

// Random neutral pair state: diagonal in the clock basis, which is exactly
// the condition that all charged monomials c_1^a c_2^b (a + b != 0 mod d)
// have zero expectation.
Eigen::MatrixXcd random_neutral_density(int d, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(d, d);
    double total = 0;
    for (int i = 0; i < d; ++i) {
        p(i, i) = u(rng);
        total += p(i, i).real();
    }
    return p / total;
}

}  // namespace

TEST_CASE("generator relations hold exactly for d = 2..6, n = 4") {
    for (int d = 2; d <= 6; ++d) {
        int n = 4;
        auto rep = parafermion_generators(d, n);
        auto r = rep.c[0].ring;
        long long dim = ipow(d, n);
        MonomialMatrix id = MonomialMatrix::identity(r, dim);
        ExactScalar q = ExactScalar::q_pow(r, 1);
        REQUIRE(static_cast<int>(rep.c.size()) == 2 * n);
        for (int a = 0; a < 2 * n; ++a) {
            CHECK(rep.c[a].pow(d) == id);
            CHECK(rep.c[a] * rep.c[a].inverse() == id);
            for (int b = a + 1; b < 2 * n; ++b)
                CHECK(rep.c[a] * rep.c[b] == scaled(rep.c[b] * rep.c[a], q));
        }
    }
}

TEST_CASE("a pair of parafermions generates the full d x d matrix algebra") {
    for (int d = 2; d <= 6; ++d) {
        auto rep = parafermion_generators(d, 1);
        Eigen::MatrixXcd span(d * d, d * d);
        int row = 0;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                Eigen::MatrixXcd m = (rep.c[0].pow(a) * rep.c[1].pow(b)).to_matrix();
                span.row(row++) = Eigen::Map<Eigen::VectorXcd>(m.data(), d * d);
            }
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(span);
        CHECK(lu.rank() == d * d);
    }
}

TEST_CASE("d = 2 generators are self-inverse") {
    auto rep = parafermion_generators(2, 2);
    for (const auto& c : rep.c) CHECK(c == c.inverse());
}

TEST_CASE("grading is the exponent sum mod d with the product rule") {
    CHECK(grading(3, {1, 2}) == 0);
    CHECK(grading(3, {1}) == 1);
    CHECK(grading(5, {1, 4}) == 0);
    CHECK(grading(4, {3, 3}) == 2);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int d = 2 + static_cast<int>(rng() % 5);
        std::vector<int> x(4), y(4), xy;
        for (auto& e : x) e = static_cast<int>(rng() % d);
        for (auto& e : y) e = static_cast<int>(rng() % d);
        xy = x;
        xy.insert(xy.end(), y.begin(), y.end());
        CHECK(grading(d, xy) == (grading(d, x) + grading(d, y)) % d);
    }
}

TEST_CASE("invalid construction and braid indices throw") {
    CHECK_THROWS_AS(parafermion_generators(1, 2), std::invalid_argument);
    auto rep = parafermion_generators(2, 2);
    CHECK_THROWS_AS(double_braid(rep, 0), std::invalid_argument);
    CHECK_THROWS_AS(double_braid(rep, 2), std::invalid_argument);
    CHECK_THROWS_AS(braid_relation_check(rep), std::invalid_argument);
}

TEST_CASE("first transport identity: Ad(b_j) moves pair charges one pair "
          "right, all charge tuples, d = 2..5, n = 4") {
    for (int d = 2; d <= 5; ++d) {
        auto rep = parafermion_generators(d, 4);
        long long dim = ipow(d, 4);
        Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
        for (int j = 1; j <= 3; ++j) {
            Eigen::MatrixXcd b = double_braid(rep, j).matrix;
            CHECK((b * b.adjoint() - id).norm() < 1e-10);  // Reidemeister II
            for (int m = 0; m < d; ++m)
                for (int nn = 0; nn < d; ++nn) {
                    MonomialMatrix x =
                        rep.c[2 * j - 2].pow(m) * rep.c[2 * j - 1].pow(nn);
                    MonomialMatrix y =
                        rep.c[2 * j].pow(m) * rep.c[2 * j + 1].pow(nn);
                    CHECK(adjoint_transport_error(b, x, y) < 1e-10);
                }
        }
    }
}

TEST_CASE("second transport identity: the composite double braid moves "
          "four-strand charges two pairs right, d = 2..5, n = 4") {
    // The pictured action Ad(b_j b_{j-1}) applies Ad(b_j) first, then
    // Ad(b_{j-1}): matrix conjugation by b_{j-1} b_j.
    for (int d = 2; d <= 5; ++d) {
        auto rep = parafermion_generators(d, 4);
        for (int j = 2; j <= 3; ++j) {
            Eigen::MatrixXcd comp = double_braid(rep, j - 1).matrix *
                                    double_braid(rep, j).matrix;
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l)
                    for (int m = 0; m < d; ++m)
                        for (int nn = 0; nn < d; ++nn) {
                            MonomialMatrix x = rep.c[2 * j - 4].pow(k) *
                                               rep.c[2 * j - 3].pow(l) *
                                               rep.c[2 * j - 2].pow(m) *
                                               rep.c[2 * j - 1].pow(nn);
                            MonomialMatrix y = rep.c[2 * j - 2].pow(k) *
                                               rep.c[2 * j - 1].pow(l) *
                                               rep.c[2 * j].pow(m) *
                                               rep.c[2 * j + 1].pow(nn);
                            CHECK(adjoint_transport_error(comp, x, y) < 1e-10);
                        }
        }
    }
}

TEST_CASE("braid group relations: Yang-Baxter, far commutation, "
          "Reidemeister II") {
    // Spec instances d = 2, n = 3 and d = 3, n = 4, then the acceptance
    // range d = 2..5 at n = 4.
    {
        auto report = braid_relation_check(parafermion_generators(2, 3));
        CHECK(report.yangBaxterError < 1e-10);
        CHECK(report.pass);
    }
    for (int d = 2; d <= 5; ++d) {
        auto report = braid_relation_check(parafermion_generators(d, 4));
        CHECK(report.yangBaxterError < 1e-10);
        CHECK(report.farCommutationError < 1e-10);
        CHECK(report.reidemeisterError < 1e-10);
        CHECK(std::abs(std::abs(report.yangBaxterPhase) - 1.0) < 1e-10);
        CHECK(report.pass);
        INFO("d = " << d << " Yang-Baxter phase " << report.yangBaxterPhase);
    }
}

TEST_CASE("product-state invariance under all double braids") {
    SUBCASE("maximally mixed state is invariant for d = 2..4") {
        for (int d = 2; d <= 4; ++d) {
            int n = 3;
            auto rep = parafermion_generators(d, n);
            Eigen::MatrixXcd rho =
                Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d);
            auto report =
                braid_invariance_check(product_state(rho, n), rep, 2);
            CHECK(report.maxDeviation < 1e-12);
            CHECK(report.pass);
        }
    }
    SUBCASE("20 random neutral product states, d = 2, n = 4, degree <= 2") {
        // Braid invariance requires the pair state to be neutral: on a
        // cross-pair monomial such as c_2 c_3, the braided swap reorders the
        // generators at a cost of q, so a nonzero charged expectation breaks
        // invariance. Neutral pair states are the clock-diagonal densities.
        auto rep = parafermion_generators(2, 4);
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 20; ++trial) {
            Eigen::MatrixXcd rho = random_neutral_density(2, rng);
            REQUIRE(neutrality_check(rho, 2));
            auto report =
                braid_invariance_check(product_state(rho, 4), rep, 2);
            CHECK(report.maxDeviation < 1e-10);
            CHECK(report.pass);
        }
    }
    SUBCASE("random neutral product states for d = 3, 4") {
        std::mt19937_64 rng(31);
        for (int d = 3; d <= 4; ++d) {
            auto rep = parafermion_generators(d, 3);
            for (int trial = 0; trial < 5; ++trial) {
                Eigen::MatrixXcd rho = random_neutral_density(d, rng);
                auto report =
                    braid_invariance_check(product_state(rho, 3), rep, 2);
                CHECK(report.maxDeviation < 1e-10);
            }
        }
    }
    SUBCASE("non-neutral product states are not invariant (negative "
            "control)") {
        auto rep = parafermion_generators(2, 4);
        std::mt19937_64 rng(37);
        for (int trial = 0; trial < 5; ++trial) {
            Eigen::MatrixXcd rho = random_density(2, rng);
            if (neutrality_check(rho, 2)) continue;  // measure-zero event
            auto report =
                braid_invariance_check(product_state(rho, 4), rep, 2);
            CHECK(report.maxDeviation > 1e-4);
        }
    }
    SUBCASE("perturbed non-product state is detected") {
        int d = 2, n = 4;
        auto rep = parafermion_generators(d, n);
        std::mt19937_64 rng(29);
        Eigen::MatrixXcd rho = random_density(d, rng);
        AlgebraState st = product_state(rho, n);
        // Mix in an entangled pure state across the pairs.
        long long dim = st.rhoFull.rows();
        Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
        psi(0) = 1.0 / std::sqrt(2.0);
        psi(dim - 1) = 1.0 / std::sqrt(2.0);
        st.rhoFull = 0.7 * st.rhoFull + 0.3 * (psi * psi.adjoint());
        auto report = braid_invariance_check(st, rep, 2);
        CHECK(report.maxDeviation > 1e-4);
        CHECK_FALSE(report.pass);
    }
    SUBCASE("product_state rejects non-density input") {
        Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(2, 2);
        CHECK_THROWS_AS(product_state(bad, 2), std::invalid_argument);
    }
}

TEST_CASE("neutrality of states on a single parafermion pair") {
    SUBCASE("maximally mixed state is neutral for d = 2..5") {
        for (int d = 2; d <= 5; ++d) {
            Eigen::MatrixXcd rho =
                Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d);
            CHECK(neutrality_check(rho, d));
        }
    }
    SUBCASE("a c_1-coherence term breaks neutrality") {
        for (int d = 2; d <= 4; ++d) {
            auto rep = parafermion_generators(d, 1);
            Eigen::MatrixXcd c1 = rep.c[0].to_matrix();
            Eigen::MatrixXcd rho =
                Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d) +
                0.1 * (c1 + c1.adjoint());
            CHECK_FALSE(neutrality_check(rho, d));
        }
    }
    SUBCASE("diagonal d = 2 states are neutral (odd monomials are "
            "off-diagonal)") {
        for (double p : {0.0, 0.3, 0.5, 1.0}) {
            Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(2, 2);
            rho(0, 0) = p;
            rho(1, 1) = 1.0 - p;
            CHECK(neutrality_check(rho, 2));
        }
    }
}
