#include "cs/quon.hpp"

#include <cmath>
#include <stdexcept>

#include "cs/sft.hpp"

namespace cs {

namespace {

// Two-string identity picture with same-level charges cl (left string) and
// cr (right string). A neutral same-level pair carries the interpolation
// scalar zeta^{-cl^2} with the right charge placed below the left one.
Eigen::MatrixXcd two_string(RingParams r, int cl, int cr) {
    int d = r.d;
    cl = ((cl % d) + d) % d;
    cr = ((cr % d) + d) % d;
    std::vector<ChargeEvent> word;
    ExactScalar s = ExactScalar::one(r);
    if (cl != 0 && cr != 0) {
        word = {{1, cr}, {0, cl}};
        s = ExactScalar::zeta_pow(r, -1LL * cl * cl);
    } else if (cl != 0) {
        word = {{0, cl}};
    } else if (cr != 0) {
        word = {{1, cr}};
    }
    ChargedDiagram diag(r, 2, 2, {{0, 3}, {1, 2}}, word, std::move(s));
    return diagram_to_matrix(DiagramSum(std::move(diag))).entries;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
    return out;
}

// Engine-evaluated charge-identification delta: a charged cap closed with
// the reflected cup of another charge vanishes unless the charges agree.
double engine_delta(RingParams r, int j, int k) {
    auto val = eval_closed(compose_vertical(
                   DiagramSum(cap(r, k)),
                   DiagramSum(cup(r, -(((j % r.d) + r.d) % r.d))))) *
               ExactScalar::delta_pow(r, -1);
    return val.to_complex().real();
}

}  // namespace

QuonPauli quon_paulis(int d) {
    auto r = make_ring(d);
    QuonPauli p;
    p.d = d;
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    p.x = kron(two_string(r, 1, 0), two_string(r, 0, -1));
    p.y = kron(two_string(r, -1, 0), two_string(r, 1, 0));
    p.z = kron(two_string(r, 1, -1), id);
    Complex zetaInv = ExactScalar::zeta_pow(r, -1).to_complex();
    p.gamma = zetaInv * p.x * p.y * p.z;
    return p;
}

Eigen::MatrixXcd neutral_projector(int d) {
    auto p = quon_paulis(d);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(p.gamma);
    Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(d * d, d * d);
    int rank = 0;
    for (int i = 0; i < d * d; ++i) {
        if (std::abs(es.eigenvalues()(i) - Complex(1.0)) < 1e-8) {
            Eigen::VectorXcd v = es.eigenvectors().col(i);
            v /= v.norm();
            proj += v * v.adjoint();
            ++rank;
        }
    }
    if (rank != d)
        throw std::logic_error("neutral_projector: physical subspace rank != d");
    // Re-orthonormalize in case of close eigenvectors.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sym(
        (proj + proj.adjoint()) / 2.0);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d * d, d * d);
    for (int i = 0; i < d * d; ++i)
        if (sym.eigenvalues()(i) > 0.5)
            out += sym.eigenvectors().col(i) * sym.eigenvectors().col(i).adjoint();
    return out;
}

MultiQuditState ghz_state(int d, int n) {
    if (n < 2) throw std::invalid_argument("ghz_state: need n >= 2");
    auto r = make_ring(d);
    MultiQuditState st;
    st.n = n;
    st.d = d;
    long long dim = 1;
    for (int i = 0; i < n; ++i) dim *= d;
    st.amplitudes = Eigen::VectorXcd::Zero(dim);
    // The corner chains pair each square's outgoing pair charge with the
    // next square's incoming one (cyclically, on both the left and the
    // mirrored right chain); every arc contributes an engine-evaluated
    // charge delta.
    std::vector<int> k(n, 0);
    for (long long idx = 0; idx < dim; ++idx) {
        long long rest = idx;
        for (int i = n - 1; i >= 0; --i) {
            k[i] = static_cast<int>(rest % d);
            rest /= d;
        }
        double amp = 1.0;
        for (int v = 0; v < n; ++v) {
            int w = (v + 1) % n;
            amp *= engine_delta(r, k[v], k[w]);        // left chain arc
            amp *= engine_delta(r, d - k[v], d - k[w]);  // right chain arc
        }
        st.amplitudes(idx) = amp;
    }
    st.amplitudes /= st.amplitudes.norm();
    return st;
}

MultiQuditState max_state(int d, int n) {
    // Rotated-pairing contraction: every square is turned one click, so
    // each identified pair charge enters through the one-click transform
    // of its basis picture, i.e. through the DFT column.
    auto ghz = ghz_state(d, n);
    Eigen::MatrixXcd f = dft_matrix(d).entries;
    Eigen::MatrixXcd fn = Eigen::MatrixXcd::Ones(1, 1);
    for (int i = 0; i < n; ++i) fn = kron(fn, f);
    MultiQuditState st;
    st.n = n;
    st.d = d;
    st.amplitudes = fn * ghz.amplitudes;
    st.amplitudes /= st.amplitudes.norm();
    return st;
}

Eigen::MatrixXcd reduced_density(const MultiQuditState& state,
                                 const std::vector<int>& keep) {
    int n = state.n, d = state.d;
    std::vector<bool> inKeep(n, false);
    for (int i : keep) {
        if (i < 0 || i >= n)
            throw std::out_of_range("reduced_density: bad subsystem index");
        inKeep[i] = true;
    }
    std::vector<int> kept, traced;
    for (int i = 0; i < n; ++i) (inKeep[i] ? kept : traced).push_back(i);
    long long dimK = 1, dimT = 1;
    for (std::size_t i = 0; i < kept.size(); ++i) dimK *= d;
    for (std::size_t i = 0; i < traced.size(); ++i) dimT *= d;
    auto fullIndex = [&](long long kIdx, long long tIdx) {
        std::vector<int> digit(n, 0);
        long long rest = kIdx;
        for (int i = static_cast<int>(kept.size()) - 1; i >= 0; --i) {
            digit[kept[i]] = static_cast<int>(rest % d);
            rest /= d;
        }
        rest = tIdx;
        for (int i = static_cast<int>(traced.size()) - 1; i >= 0; --i) {
            digit[traced[i]] = static_cast<int>(rest % d);
            rest /= d;
        }
        long long idx = 0;
        for (int i = 0; i < n; ++i) idx = idx * d + digit[i];
        return idx;
    };
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dimK, dimK);
    for (long long a = 0; a < dimK; ++a)
        for (long long b = 0; b < dimK; ++b)
            for (long long t = 0; t < dimT; ++t)
                rho(a, b) += state.amplitudes(fullIndex(a, t)) *
                             std::conj(state.amplitudes(fullIndex(b, t)));
    return rho;
}

double entanglement_entropy(const MultiQuditState& state,
                            const std::vector<int>& cut) {
    Eigen::MatrixXcd rho = reduced_density(state, cut);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        (rho + rho.adjoint()) / 2.0);
    double h = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double lam = es.eigenvalues()(i);
        if (lam > 1e-12) h += -lam * std::log(lam);
    }
    return h;
}

MinimalMaximalReport minimal_maximal_pair_check(int d) {
    auto r = make_ring(d);
    MinimalMaximalReport rep;
    // The zero state as a 2-box (point mass at charge zero) and its
    // transform, read as bipartite vector states.
    TwoBox zero;
    zero.d = d;
    zero.entries = Eigen::MatrixXcd::Zero(d, d);
    zero.entries(0, 0) = 1.0;
    auto bell = sft_2box(zero);
    auto boxState = [&](const TwoBox& box) {
        MultiQuditState st;
        st.n = 2;
        st.d = d;
        st.amplitudes = Eigen::VectorXcd(d * d);
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) st.amplitudes(j * d + k) = box.entries(j, k);
        st.amplitudes /= st.amplitudes.norm();
        return st;
    };
    rep.zeroEntropy = entanglement_entropy(boxState(zero), {0});
    rep.bellEntropy = entanglement_entropy(boxState(bell), {0});
    double lo = 1e300, hi = 0;
    for (int k = 0; k < d; ++k) {
        double m = std::abs(bell.entries(k, k));
        lo = std::min(lo, m);
        hi = std::max(hi, m);
    }
    rep.flatnessError = hi - lo;
    rep.entropicSum = rep.zeroEntropy + rep.bellEntropy;
    rep.entropicBound = std::log(static_cast<double>(d));
    rep.pass = rep.zeroEntropy < 1e-10 &&
               std::abs(rep.bellEntropy - std::log(static_cast<double>(d))) <
                   1e-10 &&
               rep.flatnessError < 1e-10 &&
               rep.entropicSum >= rep.entropicBound - 1e-9;
    return rep;
}

}  // namespace cs
