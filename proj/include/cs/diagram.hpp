#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cs/scalar_ring.hpp"

namespace cs {

/// A charge of given value anchored at a boundary point ("column") of the
/// string through that point. The global position of the event in the
/// diagram's charge word encodes its vertical height.
struct ChargeEvent {
    int point = 0;
    int value = 0;

    auto operator<=>(const ChargeEvent&) const = default;
};

/// One charged planar diagram in a rectangle. Boundary points are numbered
/// counterclockwise starting at the bottom-left corner: bottom points are
/// 0..bottomArity-1 left to right, top points bottomArity..bottomArity+
/// topArity-1 right to left. Inputs enter at the top, outputs leave at the
/// bottom. The pairing is a non-crossing perfect matching of the boundary
/// points; `charges` is the bottom-to-top word of charge placements; `scalar`
/// is the exact prefactor.
class ChargedDiagram {
public:
    ChargedDiagram(RingParams ring, int topArity, int bottomArity,
                   std::vector<std::pair<int, int>> pairs,
                   std::vector<ChargeEvent> charges, ExactScalar scalar);

    const RingParams& ring() const { return ring_; }
    int top_arity() const { return top_; }
    int bottom_arity() const { return bottom_; }
    int num_points() const { return top_ + bottom_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    const std::vector<ChargeEvent>& charges() const { return charges_; }
    const ExactScalar& scalar() const { return scalar_; }

    /// Partner of a boundary point in the pairing.
    int partner(int point) const;
    /// Smallest boundary point on the string through `point`.
    int string_id(int point) const { return std::min(point, partner(point)); }
    bool is_bottom_point(int point) const { return point < bottom_; }

    /// Structural identity ignoring the scalar (used to merge sum terms).
    bool same_shape(const ChargedDiagram& o) const;
    bool shape_less(const ChargedDiagram& o) const;

    ExactScalar& mutable_scalar() { return scalar_; }

private:
    RingParams ring_;
    int top_ = 0;
    int bottom_ = 0;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<ChargeEvent> charges_;
    ExactScalar scalar_;
};

/// Finite linear combination of charged diagrams with common boundary
/// arities. Kept in expanded normal form by every public operation: terms
/// have distinct (pairing, charge word), zero terms removed, each term's
/// prefactor held in its diagram scalar.
class DiagramSum {
public:
    DiagramSum(RingParams ring, int topArity, int bottomArity)
        : ring_(ring), top_(topArity), bottom_(bottomArity) {}
    /// Single-term sum (the term is not normalized here; call normalize).
    DiagramSum(const ChargedDiagram& term);  // NOLINT: implicit by design

    const RingParams& ring() const { return ring_; }
    int top_arity() const { return top_; }
    int bottom_arity() const { return bottom_; }
    const std::vector<ChargedDiagram>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Appends a term without normalizing (internal builder use).
    void add_term(ChargedDiagram term);

    DiagramSum operator+(const DiagramSum& o) const;
    DiagramSum operator*(const ExactScalar& s) const;

private:
    RingParams ring_;
    int top_ = 0;
    int bottom_ = 0;
    std::vector<ChargedDiagram> terms_;
};

/// 0-input/2-output arc carrying charge k (canonically on its left leg).
ChargedDiagram cap(RingParams ring, int k);
/// 2-input/0-output arc carrying charge k (canonically on its left leg).
ChargedDiagram cup(RingParams ring, int k);
/// n parallel through strings.
ChargedDiagram identity_diagram(RingParams ring, int n);

/// Stacks `top` above `bottom`, gluing top's outputs to bottom's inputs;
/// the result is normalized. As linear maps (inputs at the top) the result
/// is "bottom after top".
DiagramSum compose_vertical(const DiagramSum& top, const DiagramSum& bottom);

/// Places `left` and `right` side by side; left-factor charges precede
/// right-factor charges in the vertical order. Normalized result.
DiagramSum compose_horizontal(const DiagramSum& left, const DiagramSum& right);

/// Vertical reflection: inputs and outputs swap, charges negate, scalars
/// conjugate. Normalized result.
DiagramSum adjoint(const DiagramSum& a);

/// Confluent rewrite to the unique normal form: at most one charge per
/// string at its canonical position, charge word sorted by string id, closed
/// loops removed (neutral loop = factor delta, charged loop kills the term),
/// like terms merged, zero terms dropped. `shuffleSeed` randomizes the order
/// in which applicable rewrite steps are taken (the result must not depend
/// on it; exercised by the confluence tests).
DiagramSum normalize(const DiagramSum& a,
                     std::optional<std::uint64_t> shuffleSeed = std::nullopt);

/// Scalar value of a closed diagram (throws if the boundary is non-empty).
ExactScalar eval_closed(const DiagramSum& a);

/// Replaces the adjacent pair of through strings whose left member is
/// `strandPair` (counted left to right over through strings only) by the
/// resolution of the identity (1/delta) * sum_k cap(k) over cup(-k).
DiagramSum expand_identity(const DiagramSum& a, int strandPair);

}  // namespace cs
