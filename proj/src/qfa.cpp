#include "cs/qfa.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cs {

namespace {

// Nested right-side closure of a 2-box diagram term.
ExactScalar close_planar(const DiagramSum& d2box) {
    auto r = d2box.ring();
    DiagramSum nestTop(
        ChargedDiagram(r, 0, 4, {{0, 3}, {1, 2}}, {}, ExactScalar::one(r)));
    DiagramSum nestBottom(
        ChargedDiagram(r, 4, 0, {{0, 3}, {1, 2}}, {}, ExactScalar::one(r)));
    auto mid = compose_horizontal(d2box, DiagramSum(identity_diagram(r, 2)));
    return eval_closed(
        compose_vertical(nestTop, compose_vertical(mid, nestBottom)));
}

// Matrix-unit basis diagram for |j><k| including its delta^(-1) weight.
DiagramSum unit_diagram(RingParams r, int j, int k) {
    return compose_vertical(DiagramSum(cup(r, -k)), DiagramSum(cap(r, j))) *
           ExactScalar::delta_pow(r, -1);
}

struct TraceData {
    double unit = 0;
};

// Structure constants of convolution: column (j*d+k)*(d*d)+(l*d+m) holds
// the flattened image of e_jk * e_lm.
struct ConvTable {
    Eigen::MatrixXcd table;  // (d^2) x (d^4)
};

const TraceData& trace_data(RingParams ring) {
    static std::map<int, TraceData> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ring.d);
    if (it != cache.end()) return it->second;
    TraceData td;
    int d = ring.d;
    // Measure the closure of every matrix unit: diagonal units must close
    // to a common real constant, off-diagonal units to zero.
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            Complex v = close_planar(unit_diagram(ring, j, k)).to_complex();
            if (j == k) {
                if (j == 0) td.unit = v.real();
                if (std::abs(v - Complex(td.unit)) > 1e-10)
                    throw std::logic_error("planar trace: non-uniform units");
            } else if (std::abs(v) > 1e-10) {
                throw std::logic_error("planar trace: off-diagonal leakage");
            }
        }
    return cache.emplace(ring.d, td).first->second;
}

const ConvTable& conv_table(RingParams ring) {
    static std::map<int, ConvTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ring.d);
    if (it != cache.end()) return it->second;
    int d = ring.d;
    ConvTable ct;
    ct.table.resize(d * d, d * d * d * d);
    auto topLayer = compose_horizontal(
        compose_horizontal(DiagramSum(identity_diagram(ring, 1)),
                           DiagramSum(cap(ring, 0))),
        DiagramSum(identity_diagram(ring, 1)));
    auto bottomLayer = compose_horizontal(
        compose_horizontal(DiagramSum(identity_diagram(ring, 1)),
                           DiagramSum(cup(ring, 0))),
        DiagramSum(identity_diagram(ring, 1)));
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l)
                for (int m = 0; m < d; ++m) {
                    auto mid = compose_horizontal(unit_diagram(ring, j, k),
                                                  unit_diagram(ring, l, m));
                    DiagramSum out = compose_vertical(
                        topLayer, compose_vertical(mid, bottomLayer));
                    Eigen::MatrixXcd img = Eigen::MatrixXcd::Zero(d, d);
                    for (int a = 0; a < d; ++a)
                        for (int b = 0; b < d; ++b)
                            img(a, b) = matrix_entry_exact(out, a, b).to_complex();
                    int col = (j * d + k) * d * d + (l * d + m);
                    for (int a = 0; a < d; ++a)
                        for (int b = 0; b < d; ++b)
                            ct.table(a * d + b, col) = img(a, b);
                }
    return cache.emplace(ring.d, ct).first->second;
}

Eigen::VectorXd singular_values_sq(const TwoBox& a) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.entries.adjoint() *
                                                       a.entries);
    return es.eigenvalues().cwiseMax(0.0);
}

bool is_psd(const TwoBox& a, double tol = 1e-9) {
    if ((a.entries - a.entries.adjoint()).norm() > tol) return false;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.entries);
    return es.eigenvalues().minCoeff() > -tol;
}

}  // namespace

double planar_trace_unit(RingParams ring) { return trace_data(ring).unit; }

Complex planar_trace(const TwoBox& a) {
    auto ring = make_ring(a.d);
    return trace_data(ring).unit * a.entries.trace();
}

double p_norm(const TwoBox& a, double p) {
    if (p < 1.0) throw std::invalid_argument("p_norm: p must be >= 1");
    auto ring = make_ring(a.d);
    Eigen::VectorXd lam = singular_values_sq(a);
    if (std::isinf(p)) return std::sqrt(lam.maxCoeff());
    double unit = trace_data(ring).unit;
    double s = 0;
    for (int i = 0; i < lam.size(); ++i) s += std::pow(lam(i), p / 2.0);
    return std::pow(unit * s, 1.0 / p);
}

TwoBox convolution(const TwoBox& a, const TwoBox& b) {
    if (a.d != b.d)
        throw std::invalid_argument("convolution: dimension mismatch");
    int d = a.d;
    auto ring = make_ring(d);
    const auto& ct = conv_table(ring);
    Eigen::VectorXcd pairFlat(d * d * d * d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l)
                for (int m = 0; m < d; ++m)
                    pairFlat((j * d + k) * d * d + (l * d + m)) =
                        a.entries(j, k) * b.entries(l, m);
    Eigen::VectorXcd flat = ct.table * pairFlat;
    TwoBox out;
    out.d = d;
    out.entries.resize(d, d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) out.entries(j, k) = flat(j * d + k);
    return out;
}

NormReport hausdorff_young_check(const TwoBox& a, double p) {
    if (p < 1.0 || p > 2.0)
        throw std::invalid_argument("hausdorff_young_check: p must be in [1,2]");
    NormReport rep;
    rep.p = p;
    rep.q = (p == 1.0) ? std::numeric_limits<double>::infinity()
                       : p / (p - 1.0);
    double delta = std::sqrt(static_cast<double>(a.d));
    rep.lhs = p_norm(sft_2box(a), rep.q);
    rep.rhs = std::pow(delta, 1.0 - 2.0 / p) * p_norm(a, p);
    rep.slack = rep.rhs - rep.lhs;
    rep.pass = rep.slack >= -1e-8;
    return rep;
}

BiProjectionData biprojection(RingParams ring, int gen) {
    int d = ring.d;
    gen = ((gen % d) + d) % d;
    if (gen != 0 && d % gen != 0)
        throw std::invalid_argument("biprojection: generator must divide d");
    BiProjectionData out;
    out.d = d;
    if (gen == 0) {
        out.subgroup = {0};
    } else {
        for (int h = 0; h < d; h += gen) out.subgroup.push_back(h);
    }
    out.box.d = d;
    out.box.entries = Eigen::MatrixXcd::Zero(d, d);
    for (int h : out.subgroup) out.box.entries(h, h) = 1.0;
    return out;
}

TwoBox bi_shift(const BiProjectionData& b, int g, int chi) {
    int d = b.d;
    auto ring = make_ring(d);
    TwoBox out;
    out.d = d;
    out.entries = Eigen::MatrixXcd::Zero(d, d);
    for (int h : b.subgroup) {
        int t = ((h + g) % d + d) % d;
        out.entries(t, t) =
            ExactScalar::q_pow(ring, 1LL * chi * h).to_complex();
    }
    return out;
}

std::pair<double, bool> schur_positivity_check(const TwoBox& a,
                                               const TwoBox& b) {
    if (!is_psd(a) || !is_psd(b))
        throw std::invalid_argument("schur_positivity_check: inputs must be PSD");
    TwoBox c = convolution(a, b);
    Eigen::MatrixXcd herm = (c.entries + c.entries.adjoint()) / 2.0;
    if ((c.entries - herm).norm() > 1e-8 * (1.0 + c.entries.norm()))
        return {-1.0, false};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
    double minEig = es.eigenvalues().minCoeff();
    return {minEig, minEig >= -1e-9};
}

double renyi_entropy(const TwoBox& a, double p) {
    if (p <= 0.0 || p == 1.0)
        throw std::invalid_argument("renyi_entropy: need 0 < p != 1");
    auto ring = make_ring(a.d);
    double unit = trace_data(ring).unit;
    Eigen::VectorXd lam = singular_values_sq(a);
    double s = 0;
    for (int i = 0; i < lam.size(); ++i) s += std::pow(lam(i), p / 2.0);
    // (p/(1-p)) log ||A||_p with ||A||_p = (unit * sum sigma^p)^(1/p).
    return (1.0 / (1.0 - p)) * std::log(unit * s);
}

double von_neumann_entropy(const TwoBox& a) {
    auto ring = make_ring(a.d);
    double unit = trace_data(ring).unit;
    Eigen::VectorXd lam = singular_values_sq(a);
    double h = 0;
    for (int i = 0; i < lam.size(); ++i) {
        double s = std::sqrt(lam(i));
        if (s > 1e-12) h += -s * std::log(s);
    }
    return unit * h;
}

EntropicReport entropic_up_check(const TwoBox& a) {
    if (a.entries.norm() == 0.0)
        throw std::invalid_argument("entropic_up_check: A must be nonzero");
    auto sq = [](const TwoBox& x) {
        TwoBox y;
        y.d = x.d;
        y.entries = x.entries.adjoint() * x.entries;
        // |X|^2 = X*X is PSD; the entropy functional sees its spectrum.
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(y.entries);
        y.entries = es.eigenvectors() *
                    es.eigenvalues().cwiseMax(0.0).asDiagonal() *
                    es.eigenvectors().adjoint();
        return y;
    };
    EntropicReport rep;
    double n2sq = p_norm(a, 2.0);
    n2sq *= n2sq;
    double delta = std::sqrt(static_cast<double>(a.d));
    rep.lhs = von_neumann_entropy(sq(a)) + von_neumann_entropy(sq(sft_2box(a)));
    rep.rhs = 2.0 * n2sq * std::log(delta) - 2.0 * n2sq * std::log(n2sq);
    rep.pass = rep.lhs >= rep.rhs - 1e-8;
    return rep;
}

}  // namespace cs
