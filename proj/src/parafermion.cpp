#include "cs/parafermion.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace cs {

namespace {

long long int_pow(long long b, int e) {
    long long out = 1;
    for (int i = 0; i < e; ++i) out *= b;
    return out;
}

// Basis index <-> slot digits, slot 0 most significant.
std::vector<int> digits_of(long long idx, int d, int n) {
    std::vector<int> k(n);
    for (int i = n - 1; i >= 0; --i) {
        k[i] = static_cast<int>(idx % d);
        idx /= d;
    }
    return k;
}

long long index_of(const std::vector<int>& k, int d) {
    long long idx = 0;
    for (int v : k) idx = idx * d + v;
    return idx;
}

}  // namespace

MonomialMatrix MonomialMatrix::identity(RingParams r, long long dim) {
    MonomialMatrix m;
    m.ring = r;
    m.dim = dim;
    m.perm.resize(dim);
    m.phase.assign(dim, ExactScalar::one(r));
    for (long long i = 0; i < dim; ++i) m.perm[i] = i;
    return m;
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& rhs) const {
    // (this * rhs) e_c = this (rhs.phase[c] e_{rhs.perm[c]}).
    MonomialMatrix out;
    out.ring = ring;
    out.dim = dim;
    out.perm.resize(dim);
    out.phase.reserve(dim);
    for (long long c = 0; c < dim; ++c) {
        long long mid = rhs.perm[c];
        out.perm[c] = perm[mid];
        out.phase.push_back(rhs.phase[c] * phase[mid]);
    }
    return out;
}

MonomialMatrix MonomialMatrix::inverse() const {
    MonomialMatrix out;
    out.ring = ring;
    out.dim = dim;
    out.perm.resize(dim);
    out.phase.assign(dim, ExactScalar::one(ring));
    for (long long c = 0; c < dim; ++c) {
        out.perm[perm[c]] = c;
        out.phase[perm[c]] = phase[c].conj();
    }
    return out;
}

MonomialMatrix MonomialMatrix::pow(long long e) const {
    MonomialMatrix base = e >= 0 ? *this : inverse();
    if (e < 0) e = -e;
    MonomialMatrix out = identity(ring, dim);
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

bool MonomialMatrix::operator==(const MonomialMatrix& rhs) const {
    if (dim != rhs.dim || perm != rhs.perm) return false;
    for (long long c = 0; c < dim; ++c)
        if (!(phase[c] == rhs.phase[c])) return false;
    return true;
}

Eigen::MatrixXcd MonomialMatrix::to_matrix() const {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (long long c = 0; c < dim; ++c) m(perm[c], c) = phase[c].to_complex();
    return m;
}

ParafermionRep parafermion_generators(int d, int n) {
    if (d < 2 || n < 1)
        throw std::invalid_argument("parafermion_generators: need d>=2, n>=1");
    auto r = make_ring(d);
    long long dim = int_pow(d, n);
    ParafermionRep rep;
    rep.d = d;
    rep.n = n;
    // Ladder construction: on slot i (0-based), c_{2i+1} acts as the shift
    // X, c_{2i+2} as zeta^{-1} X Z^{-1}, both with a charge string Z^{-1}
    // on every earlier slot; this yields c_a c_b = q c_b c_a for a < b and
    // c_a^d = 1.
    for (int i = 0; i < n; ++i) {
        for (int which = 0; which < 2; ++which) {
            MonomialMatrix m;
            m.ring = r;
            m.dim = dim;
            m.perm.resize(dim);
            m.phase.reserve(dim);
            for (long long idx = 0; idx < dim; ++idx) {
                auto k = digits_of(idx, d, n);
                long long qexp = 0;
                for (int s = 0; s < i; ++s) qexp -= k[s];  // string prefix
                ExactScalar ph = ExactScalar::q_pow(r, qexp);
                if (which == 1) {
                    // zeta^{-1} X Z^{-1} on slot i: phase picks up
                    // zeta^{-1} q^{-k_i} before the shift.
                    ph = ph * ExactScalar::zeta_pow(r, -1) *
                         ExactScalar::q_pow(r, -k[i]);
                }
                k[i] = (k[i] + 1) % d;
                m.perm[idx] = index_of(k, d);
                m.phase.push_back(std::move(ph));
            }
            rep.c.push_back(std::move(m));
        }
    }
    return rep;
}

int grading(int d, const std::vector<int>& exponents) {
    long long s = 0;
    for (int e : exponents) s += e;
    return static_cast<int>(((s % d) + d) % d);
}

namespace {

// Elementary strand braid exchanging strands i+1 and i+2 (0-based
// generator indices i, i+1): the Gaussian character sum
// b = N^{-1} sum_k zeta^{k^2 + lam k} (c_{i+2} c_{i+1}^{-1})^k, with the
// linear coefficient lam scanned so that b is unitary and
// Ad(b)(c_{i+1}) = c_{i+2} with phase exactly one.
// Assemble the normalized Gaussian sum with the given coefficients over
// powers of u = c_{i+2} c_{i+1}^{-1}.
Eigen::MatrixXcd gaussian_sum(const ParafermionRep& rep, int i, int sign,
                              int lam) {
    auto r = rep.c[0].ring;
    long long dim = rep.c[i].dim;
    MonomialMatrix u = rep.c[i + 1] * rep.c[i].inverse();
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(dim, dim);
    MonomialMatrix acc = MonomialMatrix::identity(r, dim);
    for (int k = 0; k < rep.d; ++k) {
        g += (ExactScalar::zeta_pow(r, sign * 1LL * k * k) *
              ExactScalar::zeta_pow(r, 1LL * lam * k))
                 .to_complex() *
             acc.to_matrix();
        acc = acc * u;
    }
    // Every column of a Gaussian sum over a monomial has the same norm, so
    // one column fixes the normalization.
    double scale = g.col(0).squaredNorm();
    return g / std::sqrt(scale);
}

// Find Gaussian coefficients (sign, lam) making the sum unitary with the
// phase-one strand exchange Ad(b)(c_{i+1}) = c_{i+2}. The defining
// relations of (c_{i+1}, c_{i+2}) are the same for every adjacent strand
// pair and every ambient n, so the scan runs on the small one-pair
// representation and the result is reused for all strands.
std::pair<int, int> elementary_coefficients(int d) {
    static std::map<int, std::pair<int, int>> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    ParafermionRep small = parafermion_generators(d, 1);
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    Eigen::MatrixXcd c1 = small.c[0].to_matrix();
    Eigen::MatrixXcd c2 = small.c[1].to_matrix();
    int lamMax = 4 * d;  // covers both zeta parities
    for (int sign : {1, -1})
        for (int lam = 0; lam < lamMax; ++lam) {
            Eigen::MatrixXcd b = gaussian_sum(small, 0, sign, lam);
            if ((b * b.adjoint() - id).norm() > 1e-10) continue;
            if ((b * c1 * b.adjoint() - c2).norm() < 1e-10) {
                cache[d] = {sign, lam};
                return {sign, lam};
            }
        }
    throw std::runtime_error(
        "double_braid: no Gaussian candidate yields a phase-one elementary "
        "braid");
}

// Elementary strand braid exchanging strands i+1 and i+2 (0-based
// generator indices i, i+1): the Gaussian character sum
// b = N^{-1} sum_k zeta^{sign k^2 + lam k} (c_{i+2} c_{i+1}^{-1})^k.
Eigen::MatrixXcd elementary_braid(const ParafermionRep& rep, int i) {
    auto [sign, lam] = elementary_coefficients(rep.d);
    return gaussian_sum(rep, i, sign, lam);
}

}  // namespace

Eigen::MatrixXcd dense_times_monomial(const Eigen::MatrixXcd& b,
                                      const MonomialMatrix& m) {
    Eigen::MatrixXcd out(b.rows(), b.cols());
    for (long long c = 0; c < m.dim; ++c)
        out.col(c) = m.phase[c].to_complex() * b.col(m.perm[c]);
    return out;
}

Eigen::MatrixXcd monomial_times_dense(const MonomialMatrix& m,
                                      const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(b.rows(), b.cols());
    for (long long r = 0; r < m.dim; ++r)
        out.row(m.perm[r]) = m.phase[r].to_complex() * b.row(r);
    return out;
}

double adjoint_transport_error(const Eigen::MatrixXcd& b,
                               const MonomialMatrix& x,
                               const MonomialMatrix& y) {
    // || b x b^dagger - y || = || b x - y b || for unitary b.
    return (dense_times_monomial(b, x) - monomial_times_dense(y, b)).norm();
}

namespace {

}  // namespace

DoubleBraid double_braid(const ParafermionRep& rep, int j) {
    int d = rep.d;
    if (j < 1 || j > rep.n - 1)
        throw std::invalid_argument("double_braid: pair index out of range");
    // The pictured double braid crosses the pair (2j-1, 2j) over the pair
    // (2j+1, 2j+2): the braid word of elementary crossings
    // beta_{2j} beta_{2j-1} beta_{2j+1} beta_{2j} (each a Gaussian sum).
    Eigen::MatrixXcd g1 = elementary_braid(rep, 2 * j - 2);
    Eigen::MatrixXcd g2 = elementary_braid(rep, 2 * j - 1);
    Eigen::MatrixXcd g3 = elementary_braid(rep, 2 * j);
    Eigen::MatrixXcd b = g2 * g1 * g3 * g2;
    // Validate the charge-transport identity on all (m, n); failure is a
    // construction error.
    for (int m = 0; m < d; ++m)
        for (int nn = 0; nn < d; ++nn) {
            MonomialMatrix x = rep.c[2 * j - 2].pow(m) * rep.c[2 * j - 1].pow(nn);
            MonomialMatrix y = rep.c[2 * j].pow(m) * rep.c[2 * j + 1].pow(nn);
            if (adjoint_transport_error(b, x, y) > 1e-9)
                throw std::runtime_error(
                    "double_braid: constructed braid fails the transport "
                    "identity");
        }
    DoubleBraid out;
    out.j = j;
    out.matrix = b;
    return out;
}

BraidRelationReport braid_relation_check(const ParafermionRep& rep) {
    if (rep.n < 3)
        throw std::invalid_argument("braid_relation_check: need n >= 3");
    BraidRelationReport rep_out;
    long long dim = int_pow(rep.d, rep.n);
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
    std::vector<Eigen::MatrixXcd> b;
    for (int j = 1; j <= rep.n - 1; ++j) b.push_back(double_braid(rep, j).matrix);
    rep_out.reidemeisterError = 0;
    for (auto& bj : b)
        rep_out.reidemeisterError =
            std::max(rep_out.reidemeisterError, (bj * bj.adjoint() - id).norm());
    // Yang-Baxter up to a recorded global phase.
    rep_out.yangBaxterError = 0;
    for (int j = 0; j + 1 < static_cast<int>(b.size()); ++j) {
        Eigen::MatrixXcd lhs = b[j] * b[j + 1] * b[j];
        Eigen::MatrixXcd rhs = b[j + 1] * b[j] * b[j + 1];
        Complex overlap = (rhs.adjoint() * lhs).trace();
        Complex phase =
            std::abs(overlap) > 1e-12 ? overlap / std::abs(overlap) : Complex(1);
        rep_out.yangBaxterPhase = phase;
        rep_out.yangBaxterError =
            std::max(rep_out.yangBaxterError, (lhs - phase * rhs).norm());
    }
    rep_out.farCommutationError = 0;
    for (std::size_t j = 0; j < b.size(); ++j)
        for (std::size_t k = j + 2; k < b.size(); ++k)
            rep_out.farCommutationError = std::max(
                rep_out.farCommutationError, (b[j] * b[k] - b[k] * b[j]).norm());
    rep_out.pass = rep_out.yangBaxterError < 1e-10 &&
                   rep_out.farCommutationError < 1e-10 &&
                   rep_out.reidemeisterError < 1e-10;
    return rep_out;
}

AlgebraState product_state(const Eigen::MatrixXcd& rho, int n) {
    int d = static_cast<int>(rho.rows());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        (rho + rho.adjoint()) / 2.0);
    if ((rho - rho.adjoint()).norm() > 1e-10 ||
        es.eigenvalues().minCoeff() < -1e-10 ||
        std::abs(rho.trace().real() - 1.0) > 1e-10)
        throw std::invalid_argument(
            "product_state: rho must be a density matrix");
    AlgebraState st;
    st.d = d;
    st.n = n;
    st.rhoFull = Eigen::MatrixXcd::Ones(1, 1);
    for (int i = 0; i < n; ++i) {
        Eigen::MatrixXcd next(st.rhoFull.rows() * d, st.rhoFull.cols() * d);
        for (int a = 0; a < st.rhoFull.rows(); ++a)
            for (int bcol = 0; bcol < st.rhoFull.cols(); ++bcol)
                next.block(a * d, bcol * d, d, d) = st.rhoFull(a, bcol) * rho;
        st.rhoFull = next;
    }
    return st;
}

InvarianceReport braid_invariance_check(const AlgebraState& state,
                                        const ParafermionRep& rep,
                                        int degreeCap) {
    InvarianceReport out;
    int g = 2 * rep.n;
    std::vector<Eigen::MatrixXcd> braids;
    for (int j = 1; j <= rep.n - 1; ++j)
        braids.push_back(double_braid(rep, j).matrix);
    // Enumerate monomials c_{i1} c_{i2} ... of length <= degreeCap
    // (ordered products; exponents realized by repetition).
    std::vector<std::vector<int>> monomials = {{}};
    std::vector<std::vector<int>> frontier = {{}};
    for (int len = 1; len <= degreeCap; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& m : frontier)
            for (int i = 0; i < g; ++i) {
                auto ext = m;
                ext.push_back(i);
                next.push_back(ext);
                monomials.push_back(std::move(ext));
            }
        frontier = next;
    }
    long long dim = state.rhoFull.rows();
    for (const auto& word : monomials) {
        MonomialMatrix x = MonomialMatrix::identity(rep.c[0].ring, dim);
        for (int i : word) x = x * rep.c[i];
        Eigen::MatrixXcd xm = x.to_matrix();
        Complex base = (state.rhoFull * xm).trace();
        for (const auto& b : braids) {
            Complex moved = (state.rhoFull * (b * xm * b.adjoint())).trace();
            out.maxDeviation = std::max(out.maxDeviation, std::abs(moved - base));
        }
    }
    out.pass = out.maxDeviation < 1e-10;
    return out;
}

bool neutrality_check(const Eigen::MatrixXcd& rho, int d, double tol) {
    auto rep = parafermion_generators(d, 1);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            if ((a + b) % d == 0) continue;
            Eigen::MatrixXcd mono =
                (rep.c[0].pow(a) * rep.c[1].pow(b)).to_matrix();
            if (std::abs((rho * mono).trace()) > tol) return false;
        }
    return true;
}

}  // namespace cs
