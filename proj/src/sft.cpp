#include "cs/sft.hpp"

#include <stdexcept>

namespace cs {

namespace {

void require_two_box_arity(int top, int bottom) {
    if (top != 2 || bottom != 2)
        throw std::invalid_argument("rotate_one_click: expected a 2-box");
}

}  // namespace

DiagramSum rotate_one_click(const DiagramSum& d2box) {
    require_two_box_arity(d2box.top_arity(), d2box.bottom_arity());
    auto r = d2box.ring();
    // Three layers around the box: a neutral cap re-routes the old top-right
    // input to the new right side, a neutral cup re-routes the old
    // bottom-left output to the new left side.
    auto topLayer = compose_horizontal(DiagramSum(identity_diagram(r, 2)),
                                       DiagramSum(cap(r, 0)));
    auto middle = compose_horizontal(
        compose_horizontal(DiagramSum(identity_diagram(r, 1)), d2box),
        DiagramSum(identity_diagram(r, 1)));
    auto bottomLayer = compose_horizontal(DiagramSum(cup(r, 0)),
                                          DiagramSum(identity_diagram(r, 2)));
    return compose_vertical(topLayer, compose_vertical(middle, bottomLayer));
}

ComplexDiagramSum rotate_one_click(const ComplexDiagramSum& d2box) {
    ComplexDiagramSum out;
    out.ring = d2box.ring;
    out.top = 2;
    out.bottom = 2;
    for (const auto& [w, term] : d2box.terms)
        out.terms.emplace_back(w, rotate_one_click(term));
    return out;
}

RotationTable make_rotation_table(RingParams ring) {
    int d = ring.d;
    RotationTable rot;
    rot.d = d;
    rot.table.resize(d * d, d * d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            Eigen::MatrixXcd unit = Eigen::MatrixXcd::Zero(d, d);
            unit(j, k) = 1.0;
            Eigen::MatrixXcd image =
                diagram_to_matrix(rotate_one_click(matrix_to_diagram(ring, unit)));
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    rot.table(a * d + b, j * d + k) = image(a, b);
        }
    return rot;
}

TwoBox apply_rotation_table(const RotationTable& rot, const TwoBox& a) {
    if (a.d != rot.d)
        throw std::invalid_argument("apply_rotation_table: dimension mismatch");
    int d = rot.d;
    Eigen::VectorXcd flat(d * d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) flat(j * d + k) = a.entries(j, k);
    Eigen::VectorXcd image = rot.table * flat;
    TwoBox out;
    out.d = d;
    out.entries.resize(d, d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) out.entries(j, k) = image(j * d + k);
    return out;
}

TwoBox sft_2box(const TwoBox& a) {
    auto ring = make_ring(a.d);
    TwoBox out;
    out.d = a.d;
    out.entries = diagram_to_matrix(
        rotate_one_click(matrix_to_diagram(ring, a.entries)));
    return out;
}

BipartiteOperator sft_bipartite(const BipartiteOperator& t) {
    int d = t.d;
    if (t.entries.rows() != d * d || t.entries.cols() != d * d)
        throw std::invalid_argument("sft_bipartite: dimension mismatch");
    BipartiteOperator s;
    s.d = d;
    s.entries.resize(d * d, d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                for (int e = 0; e < d; ++e)
                    s.entries(b * d + e, a * d + c) = t.entries(a * d + b, c * d + e);
    return s;
}

}  // namespace cs
