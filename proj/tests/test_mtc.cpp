// Pointed Z_d modular categories and the 6j self-duality identity.
#include <doctest.h>

#include "cs/mtc.hpp"

using namespace cs;

TEST_CASE("construction rejects even or tiny d") {
    CHECK_THROWS_AS(pointed_zd_category(2), std::invalid_argument);
    CHECK_THROWS_AS(pointed_zd_category(4), std::invalid_argument);
    CHECK_THROWS_AS(pointed_zd_category(1), std::invalid_argument);
}

TEST_CASE("S matrix is unitary and symmetric; dual is an involution") {
    for (int d : {3, 5, 7}) {
        auto cat = pointed_zd_category(d);
        Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
        CHECK((cat.S * cat.S.adjoint() - id).norm() < 1e-12);
        CHECK((cat.S - cat.S.transpose()).norm() < 1e-12);
        for (int j = 0; j < d; ++j) {
            CHECK(cat.dual[cat.dual[j]] == j);
        }
        // S^2 is supported on the charge conjugation k = dual(j).
        Eigen::MatrixXcd s2 = cat.S * cat.S;
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                double expected = (k == cat.dual[j]) ? 1.0 : 0.0;
                CHECK(std::abs(std::abs(s2(j, k)) - expected) < 1e-12);
            }
    }
}

TEST_CASE("admissible tetrahedra form a rank-3 subgroup of Z_d^6") {
    for (int d : {3, 5}) {
        auto cat = pointed_zd_category(d);
        CHECK(static_cast<long long>(cat.admissibleTuples.size()) ==
              1LL * d * d * d);
        // Closed under addition mod d (subgroup spot check on the support).
        const auto& a = cat.admissibleTuples[1 % cat.admissibleTuples.size()];
        const auto& b = cat.admissibleTuples[2 % cat.admissibleTuples.size()];
        std::array<int, 6> sum{};
        for (int k = 0; k < 6; ++k) sum[k] = (a[k] + b[k]) % d;
        CHECK(cat.sixJModulusSq(sum) == 1.0);
        // Unit modulus on the support, zero elsewhere.
        for (const auto& t : cat.admissibleTuples)
            CHECK(cat.sixJModulusSq(t) == 1.0);
    }
}

TEST_CASE("vacuum tetrahedron satisfies the duality identity") {
    for (int d : {3, 5, 7}) {
        auto cat = pointed_zd_category(d);
        auto report = verify_6j_duality(cat, {std::array<int, 6>{}}, 1e-12);
        CHECK(report.pass);
        CHECK(report.tuplesChecked == 1);
    }
}

TEST_CASE("d = 3: full 729-tuple scan of the 6j self-duality") {
    auto cat = pointed_zd_category(3);
    auto report = verify_6j_duality(cat, all_6j_tuples(cat), 1e-9);
    CHECK(report.tuplesChecked == 729);
    CHECK(report.maxDeviation < 1e-9);
    CHECK(report.pass);
}

TEST_CASE("d = 5 and d = 7: 1000 random tuples each") {
    for (int d : {5, 7}) {
        auto cat = pointed_zd_category(d);
        auto tuples = random_6j_tuples(cat, 1000, 42 + d);
        auto report = verify_6j_duality(cat, tuples, 1e-9);
        CHECK(report.tuplesChecked == 1000);
        CHECK(report.maxDeviation < 1e-9);
        CHECK(report.pass);
    }
}

TEST_CASE("d = 5: full scan as well (cheap enough)") {
    auto cat = pointed_zd_category(5);
    auto report = verify_6j_duality(cat, all_6j_tuples(cat), 1e-9);
    CHECK(report.tuplesChecked == 15625);
    CHECK(report.pass);
}

TEST_CASE("random tuple generation is deterministic in the seed") {
    auto cat = pointed_zd_category(5);
    CHECK(random_6j_tuples(cat, 50, 7) == random_6j_tuples(cat, 50, 7));
    CHECK(random_6j_tuples(cat, 50, 7) != random_6j_tuples(cat, 50, 8));
}

#ifdef CS_ENABLE_FIBONACCI
TEST_CASE("Fibonacci category: pentagon-solved data passes the duality on "
          "all 64 tuples") {
    auto cat = fibonacci_category();
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);
    CHECK((cat.S * cat.S.adjoint() - id).norm() < 1e-12);
    auto report = verify_6j_duality(cat, all_6j_tuples(cat), 1e-8);
    CHECK(report.tuplesChecked == 64);
    CHECK(report.pass);
}
#endif
