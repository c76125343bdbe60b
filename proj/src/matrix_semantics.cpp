#include "cs/matrix_semantics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cs {

namespace {

int norm_charge(int d, int k) { return ((k % d) + d) % d; }

void require_two_box(const DiagramSum& a) {
    if (a.top_arity() != 2 || a.bottom_arity() != 2)
        throw std::invalid_argument("expected a 2-input/2-output diagram");
}

}  // namespace

std::pair<QuditKet, DiagramSum> ket_from_charge(RingParams ring, int k) {
    int kk = norm_charge(ring.d, k);
    QuditKet ket;
    ket.d = ring.d;
    ket.amplitudes = Eigen::VectorXcd::Zero(ring.d);
    ket.amplitudes(kk) = 1.0;
    return {ket, DiagramSum(cap(ring, kk))};
}

DiagramSum projection_diagram(RingParams ring, int k) {
    int kk = norm_charge(ring.d, k);
    std::vector<ChargeEvent> ch;
    if (kk != 0) {
        ch.push_back({0, kk});
        ch.push_back({3, ring.d - kk});
    }
    return DiagramSum(ChargedDiagram(ring, 2, 2, {{0, 1}, {2, 3}}, ch,
                                     ExactScalar::delta_pow(ring, -1)));
}

ExactScalar matrix_entry_exact(const DiagramSum& d2box, int j, int k) {
    require_two_box(d2box);
    auto r = d2box.ring();
    auto closed = compose_vertical(
        compose_vertical(DiagramSum(cap(r, k)), d2box), DiagramSum(cup(r, -j)));
    return eval_closed(closed) * ExactScalar::delta_pow(r, -1);
}

TwoBox diagram_to_matrix(const DiagramSum& d2box) {
    require_two_box(d2box);
    int d = d2box.ring().d;
    TwoBox out;
    out.d = d;
    out.entries = Eigen::MatrixXcd::Zero(d, d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
            out.entries(j, k) = matrix_entry_exact(d2box, j, k).to_complex();
    return out;
}

Eigen::MatrixXcd diagram_to_matrix(const ComplexDiagramSum& d2box) {
    int d = d2box.ring.d;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    for (const auto& [w, term] : d2box.terms)
        out += w * diagram_to_matrix(term).entries;
    return out;
}

ComplexDiagramSum matrix_to_diagram(RingParams ring, const Eigen::MatrixXcd& a) {
    if (a.rows() != ring.d || a.cols() != ring.d)
        throw std::invalid_argument("matrix_to_diagram: size must equal d");
    ComplexDiagramSum out;
    out.ring = ring;
    out.top = 2;
    out.bottom = 2;
    for (int j = 0; j < ring.d; ++j)
        for (int k = 0; k < ring.d; ++k) {
            if (a(j, k) == Complex(0.0)) continue;
            auto basis =
                compose_vertical(DiagramSum(cup(ring, -k)),
                                 DiagramSum(cap(ring, j))) *
                ExactScalar::delta_pow(ring, -1);
            out.terms.emplace_back(a(j, k), basis);
        }
    return out;
}

PauliPictures pauli_pictures(RingParams ring) {
    int d = ring.d;
    auto id2 = identity_diagram(ring, 2);
    PauliPictures p{DiagramSum(id2), DiagramSum(id2), DiagramSum(id2),
                    DiagramSum(id2)};
    p.x = DiagramSum(ChargedDiagram(ring, 2, 2, id2.pairs(), {{1, 1}},
                                    ExactScalar::one(ring)));
    p.y = DiagramSum(ChargedDiagram(ring, 2, 2, id2.pairs(), {{0, d - 1}},
                                    ExactScalar::one(ring)));
    // Z carries the pair (1, -1) at the same level; a same-level pair
    // (k, -k) equals zeta^{-k^2} times the ordered word with -k below.
    p.z = DiagramSum(ChargedDiagram(ring, 2, 2, id2.pairs(),
                                    {{1, d - 1}, {0, 1}},
                                    ExactScalar::zeta_pow(ring, -1)));
    return p;
}

TwoBox dft_matrix(int d) {
    TwoBox f;
    f.d = d;
    f.entries.resize(d, d);
    double s = 1.0 / std::sqrt(static_cast<double>(d));
    for (int l = 0; l < d; ++l)
        for (int k = 0; k < d; ++k) {
            double a = 2.0 * std::numbers::pi * l * k / d;
            f.entries(l, k) = s * Complex(std::cos(a), std::sin(a));
        }
    return f;
}

Eigen::MatrixXcd gauss_matrix(RingParams ring) {
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(ring.d, ring.d);
    for (int k = 0; k < ring.d; ++k)
        g(k, k) = ExactScalar::zeta_pow(ring, 1LL * k * k).to_complex();
    return g;
}

}  // namespace cs
