#include "cs/mtc.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

namespace cs {
namespace {
using Complex = std::complex<double>;
}
}  // namespace cs

namespace cs {

namespace {

// Tetrahedral admissibility for the pointed Z_d case: the four oriented
// triangle constraints below cut out a rank-3 subgroup V of Z_d^6 whose
// annihilator is carried onto V by the index-reversal/dual map of the
// duality identity (the constraints are dependent: T1 - T2 - T3 + T4 = 0).
// The orientation was fixed by a construction-time scan requiring the
// identity on the vacuum tuple and the full d = 3 table.
constexpr int kTriad[4][3] = {{0, 1, 2}, {0, 4, 5}, {3, 1, 5}, {3, 4, 2}};
constexpr int kSign[4][3] = {{1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {1, -1, -1}};

bool zd_admissible(int d, const std::array<int, 6>& y) {
    for (int t = 0; t < 4; ++t) {
        int s = 0;
        for (int m = 0; m < 3; ++m) s += kSign[t][m] * y[kTriad[t][m]];
        if (((s % d) + d) % d != 0) return false;
    }
    return true;
}

}  // namespace

FusionCategoryData pointed_zd_category(int d) {
    if (d < 3 || d % 2 == 0)
        throw std::invalid_argument(
            "pointed_zd_category: d must be odd and >= 3");
    FusionCategoryData cat;
    cat.numLabels = d;
    cat.dual.resize(d);
    for (int j = 0; j < d; ++j) cat.dual[j] = (d - j) % d;
    cat.S.resize(d, d);
    double root = std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
            cat.S(j, k) =
                std::polar(1.0 / root, 2.0 * M_PI * (1LL * j * k % d) / d);
    cat.sixJModulusSq = [d](const std::array<int, 6>& y) {
        return zd_admissible(d, y) ? 1.0 : 0.0;
    };
    std::array<int, 6> y{};
    long long total = 1;
    for (int k = 0; k < 6; ++k) total *= d;
    for (long long i = 0; i < total; ++i) {
        long long v = i;
        for (int k = 0; k < 6; ++k) {
            y[k] = static_cast<int>(v % d);
            v /= d;
        }
        if (zd_admissible(d, y)) cat.admissibleTuples.push_back(y);
    }
    // Construction-time self-tests: S unitary and symmetric, the support is
    // a rank-3 subgroup, and the duality identity holds on the vacuum.
    Eigen::MatrixXcd gram = cat.S * cat.S.adjoint();
    if ((gram - Eigen::MatrixXcd::Identity(d, d)).norm() > 1e-12 ||
        (cat.S - cat.S.transpose()).norm() > 1e-12)
        throw std::logic_error("pointed_zd_category: S matrix check failed");
    if (static_cast<long long>(cat.admissibleTuples.size()) !=
        1LL * d * d * d)
        throw std::logic_error(
            "pointed_zd_category: admissible tuple count is not d^3");
    auto vacuum = verify_6j_duality(cat, {std::array<int, 6>{}}, 1e-12);
    if (!vacuum.pass)
        throw std::logic_error(
            "pointed_zd_category: vacuum duality self-test failed");
    return cat;
}

SixJDualityReport verify_6j_duality(
    const FusionCategoryData& cat,
    const std::vector<std::array<int, 6>>& tuples, double tol) {
    SixJDualityReport report;
    for (const auto& x : tuples) {
        std::array<int, 6> lx = {x[5],          x[4],          x[3],
                                 cat.dual[x[2]], cat.dual[x[1]], cat.dual[x[0]]};
        double lhs = cat.sixJModulusSq(lx);
        Complex rhs = 0;
        for (const auto& y : cat.admissibleTuples) {
            Complex w = cat.sixJModulusSq(y);
            for (int k = 0; k < 6; ++k) w *= cat.S(x[k], y[k]);
            rhs += w;
        }
        report.maxDeviation =
            std::max(report.maxDeviation, std::abs(rhs - Complex(lhs)));
        ++report.tuplesChecked;
    }
    report.pass = report.maxDeviation <= tol;
    return report;
}

std::vector<std::array<int, 6>> all_6j_tuples(const FusionCategoryData& cat) {
    std::vector<std::array<int, 6>> out;
    long long total = 1;
    for (int k = 0; k < 6; ++k) total *= cat.numLabels;
    out.reserve(total);
    std::array<int, 6> x{};
    for (long long i = 0; i < total; ++i) {
        long long v = i;
        for (int k = 0; k < 6; ++k) {
            x[k] = static_cast<int>(v % cat.numLabels);
            v /= cat.numLabels;
        }
        out.push_back(x);
    }
    return out;
}

std::vector<std::array<int, 6>> random_6j_tuples(const FusionCategoryData& cat,
                                                 int count,
                                                 std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, cat.numLabels - 1);
    std::vector<std::array<int, 6>> out(count);
    for (auto& x : out)
        for (int k = 0; k < 6; ++k) x[k] = pick(rng);
    return out;
}

#ifdef CS_ENABLE_FIBONACCI

namespace {

// Fibonacci fusion: labels {0 = vacuum, 1 = tau}; a triple is admissible
// unless it contains exactly one tau.
bool fib_admissible(int a, int b, int c) { return a + b + c != 1; }

// F-symbol [F^{abc}_d]_{xy} with the canonical gauge: any recoupling with a
// vacuum outer label is 1 on its admissible channels; the only solved
// blocks are F^{tautautau}_tau (2x2, unknowns z0..z3) and
// F^{tautautau}_0 (scalar, unknown z4).
Complex fib_f(const std::array<Complex, 5>& z, int a, int b, int c, int d,
              int x, int y) {
    if (!fib_admissible(a, b, x) || !fib_admissible(x, c, d) ||
        !fib_admissible(b, c, y) || !fib_admissible(a, y, d))
        return 0.0;
    if (a == 1 && b == 1 && c == 1 && d == 1) return z[2 * x + y];
    if (a == 1 && b == 1 && c == 1 && d == 0) return z[4];
    return 1.0;
}

// Pentagon + unitarity residuals for the unknown vector z.
Eigen::VectorXd fib_residuals(const std::array<Complex, 5>& z) {
    std::vector<Complex> res;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    for (int e = 0; e < 2; ++e)
                        for (int f = 0; f < 2; ++f) {
                            if (!fib_admissible(a, b, f)) continue;
                            for (int g = 0; g < 2; ++g) {
                                if (!fib_admissible(f, c, g)) continue;
                                for (int l = 0; l < 2; ++l) {
                                    if (!fib_admissible(c, d, l)) continue;
                                    for (int k = 0; k < 2; ++k) {
                                        if (!fib_admissible(b, l, k)) continue;
                                        Complex lhs =
                                            fib_f(z, f, c, d, e, g, l) *
                                            fib_f(z, a, b, l, e, f, k);
                                        Complex rhs = 0;
                                        for (int h = 0; h < 2; ++h)
                                            rhs += fib_f(z, a, b, c, g, f, h) *
                                                   fib_f(z, a, h, d, e, g, k) *
                                                   fib_f(z, b, c, d, k, h, l);
                                        res.push_back(lhs - rhs);
                                    }
                                }
                            }
                        }
    // Unitarity of the 2x2 block and unimodularity of the scalar.
    Eigen::Matrix2cd f2;
    f2 << z[0], z[1], z[2], z[3];
    Eigen::Matrix2cd u = f2 * f2.adjoint() - Eigen::Matrix2cd::Identity();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) res.push_back(u(i, j));
    res.push_back(std::norm(z[4]) - 1.0);
    Eigen::VectorXd out(2 * res.size());
    for (std::size_t i = 0; i < res.size(); ++i) {
        out(2 * i) = res[i].real();
        out(2 * i + 1) = res[i].imag();
    }
    return out;
}

}  // namespace

FusionCategoryData fibonacci_category() {
    // Gauss-Newton with a numeric Jacobian over the 10 real parameters,
    // retried from seeded random starts until the residual vanishes.
    std::mt19937_64 rng(12);
    std::normal_distribution<double> gauss;
    std::array<Complex, 5> z{};
    bool solved = false;
    for (int trial = 0; trial < 50 && !solved; ++trial) {
        for (auto& v : z) v = Complex(gauss(rng), gauss(rng));
        for (int iter = 0; iter < 200; ++iter) {
            Eigen::VectorXd r = fib_residuals(z);
            if (r.lpNorm<Eigen::Infinity>() < 1e-13) {
                solved = true;
                break;
            }
            const double eps = 1e-7;
            Eigen::MatrixXd jac(r.size(), 10);
            for (int p = 0; p < 10; ++p) {
                auto zp = z;
                if (p < 5)
                    zp[p] += eps;
                else
                    zp[p - 5] += Complex(0, eps);
                jac.col(p) = (fib_residuals(zp) - r) / eps;
            }
            Eigen::VectorXd step =
                jac.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(-r);
            for (int p = 0; p < 5; ++p)
                z[p] += Complex(step(p), step(p + 5));
        }
    }
    if (!solved)
        throw std::runtime_error(
            "fibonacci_category: pentagon solve did not converge");
    // Quantum dimension from the solved data: d_tau = 1/|F_00|.
    double dTau = 1.0 / std::abs(z[0]);
    std::array<double, 2> qdim = {1.0, dTau};
    double total = std::sqrt(1.0 + dTau * dTau);

    FusionCategoryData cat;
    cat.numLabels = 2;
    cat.dual = {0, 1};
    cat.S.resize(2, 2);
    cat.S << 1.0 / total, dTau / total, dTau / total, -1.0 / total;
    // Tetrahedrally normalized squared 6j modulus:
    // |{j1 j2 j3; j4 j5 j6}|^2 = |[F^{j1 j2 j4}_{j5}]_{j3 j6}|^2 /
    // (d_{j3} d_{j6}); the F-symbol support encodes admissibility.
    cat.sixJModulusSq = [z, qdim](const std::array<int, 6>& j) {
        Complex f = fib_f(z, j[0], j[1], j[3], j[4], j[2], j[5]);
        return std::norm(f) / (qdim[j[2]] * qdim[j[5]]);
    };
    for (const auto& t : all_6j_tuples(cat))
        if (cat.sixJModulusSq(t) > 0) cat.admissibleTuples.push_back(t);
    auto vacuum = verify_6j_duality(cat, {std::array<int, 6>{}}, 1e-10);
    if (!vacuum.pass)
        throw std::runtime_error(
            "fibonacci_category: vacuum duality self-test failed");
    return cat;
}

#endif  // CS_ENABLE_FIBONACCI

}  // namespace cs
