#include "cs/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <stdexcept>

namespace cs {

namespace {

int mod_d(int v, int d) {
    int r = v % d;
    if (r < 0) r += d;
    return r;
}

void check_planar(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> partner(n, -1);
    for (auto& [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw std::invalid_argument("diagram: bad pairing endpoint");
        if (partner[a] != -1 || partner[b] != -1)
            throw std::invalid_argument("diagram: point paired twice");
        partner[a] = b;
        partner[b] = a;
    }
    for (int i = 0; i < n; ++i)
        if (partner[i] == -1)
            throw std::invalid_argument("diagram: unpaired boundary point");
    // Chords on the cyclic boundary order must be non-crossing.
    for (auto& [a, b] : pairs) {
        int lo = std::min(a, b), hi = std::max(a, b);
        for (auto& [c, e] : pairs) {
            bool cin = c > lo && c < hi;
            bool ein = e > lo && e < hi;
            if (cin != ein) throw std::invalid_argument("diagram: crossing pairing");
        }
    }
}

}  // namespace

ChargedDiagram::ChargedDiagram(RingParams ring, int topArity, int bottomArity,
                               std::vector<std::pair<int, int>> pairs,
                               std::vector<ChargeEvent> charges, ExactScalar scalar)
    : ring_(ring),
      top_(topArity),
      bottom_(bottomArity),
      pairs_(std::move(pairs)),
      charges_(std::move(charges)),
      scalar_(std::move(scalar)) {
    if (top_ < 0 || bottom_ < 0 || (top_ + bottom_) % 2 != 0)
        throw std::invalid_argument("diagram: bad arities");
    check_planar(top_ + bottom_, pairs_);
    for (auto& [a, b] : pairs_)
        if (a > b) std::swap(a, b);
    std::sort(pairs_.begin(), pairs_.end());
    for (auto& ev : charges_) {
        if (ev.point < 0 || ev.point >= top_ + bottom_)
            throw std::invalid_argument("diagram: charge off the boundary");
        ev.value = mod_d(ev.value, ring_.d);
    }
    std::erase_if(charges_, [](const ChargeEvent& e) { return e.value == 0; });
}

int ChargedDiagram::partner(int point) const {
    for (auto& [a, b] : pairs_) {
        if (a == point) return b;
        if (b == point) return a;
    }
    throw std::out_of_range("diagram: no such point");
}

bool ChargedDiagram::same_shape(const ChargedDiagram& o) const {
    return top_ == o.top_ && bottom_ == o.bottom_ && pairs_ == o.pairs_ &&
           charges_ == o.charges_;
}

bool ChargedDiagram::shape_less(const ChargedDiagram& o) const {
    return std::tie(top_, bottom_, pairs_, charges_) <
           std::tie(o.top_, o.bottom_, o.pairs_, o.charges_);
}

DiagramSum::DiagramSum(const ChargedDiagram& term)
    : ring_(term.ring()), top_(term.top_arity()), bottom_(term.bottom_arity()) {
    terms_.push_back(term);
}

void DiagramSum::add_term(ChargedDiagram term) {
    if (term.top_arity() != top_ || term.bottom_arity() != bottom_)
        throw std::invalid_argument("DiagramSum: mixed arities");
    terms_.push_back(std::move(term));
}

DiagramSum DiagramSum::operator+(const DiagramSum& o) const {
    if (top_ != o.top_ || bottom_ != o.bottom_)
        throw std::invalid_argument("DiagramSum: mixed arities");
    DiagramSum r = *this;
    for (auto& t : o.terms_) r.terms_.push_back(t);
    return normalize(r);
}

DiagramSum DiagramSum::operator*(const ExactScalar& s) const {
    DiagramSum r(ring_, top_, bottom_);
    if (s.is_zero()) return r;
    for (auto t : terms_) {
        t.mutable_scalar() *= s;
        r.terms_.push_back(std::move(t));
    }
    return r;
}

ChargedDiagram cap(RingParams ring, int k) {
    std::vector<ChargeEvent> ch;
    if (mod_d(k, ring.d) != 0) ch.push_back({0, mod_d(k, ring.d)});
    return ChargedDiagram(ring, 0, 2, {{0, 1}}, ch, ExactScalar::one(ring));
}

ChargedDiagram cup(RingParams ring, int k) {
    std::vector<ChargeEvent> ch;
    if (mod_d(k, ring.d) != 0) ch.push_back({1, mod_d(k, ring.d)});
    return ChargedDiagram(ring, 2, 0, {{0, 1}}, ch, ExactScalar::one(ring));
}

ChargedDiagram identity_diagram(RingParams ring, int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) pairs.push_back({i, n + (n - 1 - i)});
    return ChargedDiagram(ring, n, n, pairs, {}, ExactScalar::one(ring));
}

namespace {

/// The normalization engine. Works on one or two stacked rectangular layers
/// (layer 0 below layer 1, glued along layer 0's top edge). Every state
/// transition is one of the defining relations: a height transposition of two
/// charges (para-isotopy phase q^{+-cc'} by horizontal order), a horizontal
/// slide of a charge along its own string at fixed height (phase zeta^{+-c^2}
/// exactly when the slide crosses the string's extremum, i.e. both columns
/// sit on the same edge), a slide across the glue line, a fusion of adjacent
/// charges on one column, or removal of a closed loop (factor delta when
/// neutral, annihilation when charged).
struct Engine {
    struct Node {
        int L = 0;
        int p = 0;
        auto operator<=>(const Node&) const = default;
    };
    struct Ev {
        int L = 0;
        int p = 0;
        int v = 0;
    };

    RingParams ring;
    int d = 0;
    bool two = false;            // two layers?
    int nb[2] = {0, 0};          // points on each layer's bottom edge
    int nt[2] = {0, 0};          // points on each layer's top edge
    std::vector<int> partner[2];
    std::vector<Ev> word;        // bottom-most first
    ExactScalar scalar;
    bool dead = false;
    std::mt19937_64* rng = nullptr;

    explicit Engine(RingParams r) : ring(r), d(r.d), scalar(ExactScalar::one(r)) {}

    int top_layer() const { return two ? 1 : 0; }
    bool is_top_edge(Node n) const { return n.p >= nb[n.L]; }
    bool is_outer(Node n) const {
        return (n.L == 0 && n.p < nb[0]) || (n.L == top_layer() && n.p >= nb[n.L]);
    }
    bool is_glue(Node n) const { return two && !is_outer(n); }
    Node glue_other(Node n) const {
        if (n.L == 0) return {1, nt[0] - 1 - (n.p - nb[0])};
        return {0, nb[0] + nt[0] - 1 - n.p};
    }
    Node pair_next(Node n) const { return {n.L, partner[n.L][n.p]}; }

    /// Horizontal position of a column as (numerator, denominator, edge bias).
    /// The bias implements a slight shear of the rectangle so that bottom-edge
    /// and top-edge columns never coincide.
    struct X {
        long long n = 0, d = 1;
        int bias = 0;
    };
    X xcoord(Node n) const {
        if (!is_top_edge(n)) return {2LL * n.p + 1, 2LL * nb[n.L], 0};
        int j = n.p - nb[n.L];
        int rank = nt[n.L] - 1 - j;
        return {2LL * rank + 1, 2LL * nt[n.L], 1};
    }
    static int xcmp(const X& a, const X& b) {
        long long lhs = a.n * b.d, rhs = b.n * a.d;
        if (lhs != rhs) return lhs < rhs ? -1 : 1;
        if (a.bias != b.bias) return a.bias < b.bias ? -1 : 1;
        return 0;
    }

    int strand_of(Node n) const { return sid_.at(n); }

    /// Swaps adjacent word entries i, i+1 with the para-isotopy phase. The
    /// phase depends only on the horizontal order of the two charged
    /// columns; the sheared coordinates guarantee distinct columns never
    /// tie, so every exchange of distinct columns is an allowed move.
    void tswap(std::size_t i) {
        Ev& a = word[i];
        Ev& b = word[i + 1];
        if (a.L != b.L) throw std::logic_error("tswap: cross-layer");
        Node na{a.L, a.p}, nb_{b.L, b.p};
        if (na == nb_) throw std::logic_error("tswap: same column");
        int c = xcmp(xcoord(na), xcoord(nb_));
        if (c == 0) throw std::logic_error("tswap: tied columns");
        // Raising the left charge past the right one costs q^{cc'};
        // the reverse exchange costs the inverse.
        long long e = 1LL * a.v * b.v;
        scalar *= ExactScalar::q_pow(ring, c < 0 ? e : -e);
        std::swap(a, b);
    }

    void bubble(std::size_t from, std::size_t to) {
        while (from < to) {
            tswap(from);
            ++from;
        }
        while (from > to) {
            --from;
            tswap(from);
        }
    }

    /// Moves the event at word index `ei` horizontally from its column to
    /// column `dst` (a pairing edge of its strand), first enforcing the
    /// guard: every other charge on a column swept by the slide must sit
    /// below the slide height if bottom-anchored and above it if
    /// top-anchored.
    std::size_t slide(std::size_t ei, Node dst) {
        Ev e = word[ei];
        Node src{e.L, e.p};
        if (dst.L != src.L) throw std::logic_error("slide: cross-layer");
        X xa = xcoord(src), xb = xcoord(dst);
        if (xcmp(xa, xb) > 0) std::swap(xa, xb);
        auto covered = [&](Node c) {
            if (c.L != src.L) return false;
            if (c == src || c == dst) return true;
            X x = xcoord(c);
            return xcmp(xa, x) < 0 && xcmp(x, xb) < 0;
        };
        for (int guard = 0;; ++guard) {
            if (guard > 4 * static_cast<int>(word.size()) + 8)
                throw std::logic_error("slide: guard loop");
            // Lowest covered bottom-edge blocker above the event.
            std::size_t fix = word.size();
            bool moveDown = false;
            for (std::size_t j = ei + 1; j < word.size(); ++j) {
                Node c{word[j].L, word[j].p};
                if (covered(c) && !is_top_edge(c)) {
                    fix = j;
                    moveDown = true;
                    break;
                }
            }
            if (fix == word.size()) {
                for (std::size_t j = ei; j-- > 0;) {
                    Node c{word[j].L, word[j].p};
                    if (covered(c) && is_top_edge(c)) {
                        fix = j;
                        moveDown = false;
                        break;
                    }
                }
            }
            if (fix == word.size()) break;
            if (moveDown) {
                bubble(fix, ei);  // blocker ends at ei; the event shifts to ei+1
                ++ei;
            } else {
                bubble(fix, ei);  // blocker ends at ei; the event shifts to ei-1
                --ei;
            }
        }
        // Apply the extremum phase when both columns are on the same edge.
        if (is_top_edge(src) == is_top_edge(dst)) {
            long long c2 = 1LL * e.v * e.v;
            bool leftToRight = xcmp(xcoord(src), xcoord(dst)) < 0;
            bool capArc = !is_top_edge(src);  // arc anchored on the bottom edge
            bool plus = capArc ? leftToRight : !leftToRight;
            scalar *= ExactScalar::zeta_pow(ring, plus ? c2 : -c2);
        }
        word[ei].p = dst.p;
        return ei;
    }

    /// Moves the event at `ei` across the glue line to node `dst`.
    std::size_t glue_cross(std::size_t ei, Node dst) {
        Ev e = word[ei];
        bool up = e.L == 0;
        if (up) {
            for (std::size_t j = ei + 1; j < word.size(); ++j)
                if (word[j].L == 0) {
                    if (word[j].p == e.p)
                        throw std::logic_error("glue_cross: blocked by own column");
                    bubble(ei, j);
                    ei = j;
                }
        } else {
            for (std::size_t j = ei; j-- > 0;)
                if (word[j].L == 1) {
                    if (word[j].p == e.p)
                        throw std::logic_error("glue_cross: blocked by own column");
                    bubble(ei, j);
                    ei = j;
                }
        }
        word[ei].L = dst.L;
        word[ei].p = dst.p;
        return ei;
    }

    bool can_tswap(std::size_t i) const {
        const Ev& a = word[i];
        const Ev& b = word[i + 1];
        if (a.L != b.L) return false;
        return Node{a.L, a.p} != Node{b.L, b.p};
    }

    /// Makes the events at word indices i < j adjacent, routing intermediate
    /// charges around forced-order constraints. Returns the final index of
    /// the lower event (the upper one ends directly above it).
    std::size_t make_adjacent(std::size_t i, std::size_t j) {
        while (j > i + 1) {
            if (can_tswap(j - 1)) {
                // Swap the upper event down past its neighbour.
                tswap(j - 1);
                --j;
            } else if (can_tswap(i)) {
                // Swap the lower event up past its neighbour.
                tswap(i);
                ++i;
            } else {
                throw std::logic_error("make_adjacent: stuck");
            }
        }
        return i;
    }

    /// Fuses all charges anchored at `node` into at most one event.
    void fuse_column(Node node) {
        for (;;) {
            std::size_t first = word.size();
            std::size_t second = word.size();
            for (std::size_t j = 0; j < word.size(); ++j) {
                if (Node{word[j].L, word[j].p} == node) {
                    if (first == word.size()) {
                        first = j;
                    } else {
                        second = j;
                        break;
                    }
                }
            }
            if (second == word.size()) return;
            first = make_adjacent(first, second);
            word[first].v = mod_d(word[first].v + word[first + 1].v, d);
            word.erase(word.begin() + first + 1);
            if (word[first].v == 0) word.erase(word.begin() + first);
        }
    }

    // ---- strand structure ----
    std::vector<std::vector<Node>> paths;   // open strands, outer end to outer end
    std::vector<std::vector<Node>> cycles;  // closed loops through the glue line
    std::map<Node, int> sid_;               // node -> strand index (paths then cycles)
    std::map<Node, std::pair<int, int>> pos_;  // node -> (strand, position)

    void build_strands() {
        paths.clear();
        cycles.clear();
        sid_.clear();
        pos_.clear();
        std::map<Node, bool> seen;
        auto note = [&](std::vector<Node>& path, Node n) {
            path.push_back(n);
            seen[n] = true;
        };
        std::vector<Node> outers;
        for (int p = 0; p < nb[0]; ++p) outers.push_back({0, p});
        int tl = top_layer();
        for (int p = nb[tl]; p < nb[tl] + nt[tl]; ++p) outers.push_back({tl, p});
        for (Node start : outers) {
            if (seen.count(start)) continue;
            std::vector<Node> path;
            note(path, start);
            Node cur = start;
            for (;;) {
                Node nxt = pair_next(cur);
                note(path, nxt);
                if (is_outer(nxt)) break;
                Node g = glue_other(nxt);
                note(path, g);
                cur = g;
            }
            paths.push_back(std::move(path));
        }
        if (two) {
            for (int p = nb[0]; p < nb[0] + nt[0]; ++p) {
                Node start{0, p};
                if (seen.count(start)) continue;
                std::vector<Node> cyc;
                note(cyc, start);
                Node cur = start;
                for (;;) {
                    Node nxt = pair_next(cur);
                    if (nxt == start) break;
                    note(cyc, nxt);
                    Node g = glue_other(nxt);
                    if (g == start) break;
                    note(cyc, g);
                    cur = g;
                }
                cycles.push_back(std::move(cyc));
            }
        }
        for (std::size_t s = 0; s < paths.size(); ++s)
            for (std::size_t i = 0; i < paths[s].size(); ++i) {
                sid_[paths[s][i]] = static_cast<int>(s);
                pos_[paths[s][i]] = {static_cast<int>(s), static_cast<int>(i)};
            }
        for (std::size_t s = 0; s < cycles.size(); ++s)
            for (std::size_t i = 0; i < cycles[s].size(); ++i) {
                sid_[cycles[s][i]] = static_cast<int>(paths.size() + s);
                pos_[cycles[s][i]] = {static_cast<int>(paths.size() + s),
                                      static_cast<int>(i)};
            }
    }

    /// Transports one event step by step along the node sequence `route`
    /// (route.front() is its current node).
    void transport(std::size_t ei, const std::vector<Node>& route) {
        for (std::size_t s = 0; s + 1 < route.size(); ++s) {
            Node cur = route[s], nxt = route[s + 1];
            if (is_glue(cur) && is_glue(nxt) && glue_other(cur) == nxt)
                ei = glue_cross(ei, nxt);
            else
                ei = slide(ei, nxt);
        }
    }

    /// Node-sequence from `from` to `to` along strand `s` (paths: unique;
    /// cycles: direction dir = +-1).
    std::vector<Node> route_on_path(const std::vector<Node>& strand, int from,
                                    int to) const {
        std::vector<Node> r;
        int step = to >= from ? 1 : -1;
        for (int i = from;; i += step) {
            r.push_back(strand[i]);
            if (i == to) break;
        }
        return r;
    }
    std::vector<Node> route_on_cycle(const std::vector<Node>& cyc, int from, int to,
                                     int dir) const {
        std::vector<Node> r;
        int n = static_cast<int>(cyc.size());
        int i = from;
        r.push_back(cyc[i]);
        while (i != to) {
            i = (i + dir % n + n) % n;
            r.push_back(cyc[i]);
        }
        return r;
    }

    /// Events anchored on strand `s`, ordered so that transport toward
    /// `targetPos` never passes a same-column companion.
    std::vector<std::size_t> transport_order(int s, int targetPos, bool cycle,
                                             int dir) {
        struct Item {
            std::size_t wordIdx;
            int dist;
            int nodePos;
        };
        std::vector<Item> items;
        auto& strand = cycle ? cycles[s - static_cast<int>(paths.size())] : paths[s];
        int n = static_cast<int>(strand.size());
        for (std::size_t j = 0; j < word.size(); ++j) {
            Node nd{word[j].L, word[j].p};
            auto it = pos_.find(nd);
            if (it == pos_.end() || it->second.first != s) continue;
            int p = it->second.second;
            int dist;
            if (!cycle) {
                dist = std::abs(p - targetPos);
            } else {
                dist = ((targetPos - p) * dir % n + n) % n;
            }
            items.push_back({j, dist, p});
        }
        std::stable_sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
            if (a.dist != b.dist) return a.dist < b.dist;
            if (a.nodePos != b.nodePos) return false;
            // Same node: the companion nearer the exit goes first.
            Node nd = strand[a.nodePos];
            int nxtPos;
            if (!cycle) {
                nxtPos = a.nodePos + (targetPos >= a.nodePos ? 1 : -1);
            } else {
                nxtPos = (a.nodePos + dir % n + n) % n;
            }
            if (a.nodePos == targetPos) nxtPos = a.nodePos;
            bool exitUp;
            if (nxtPos == a.nodePos) {
                exitUp = false;
            } else if (is_glue(nd) && is_glue(strand[nxtPos]) &&
                       glue_other(nd) == strand[nxtPos]) {
                exitUp = nd.L == 0;  // glue-up leaves through the top
            } else {
                exitUp = !is_top_edge(nd);  // slide from a bottom column bends up
            }
            return exitUp ? a.wordIdx > b.wordIdx : a.wordIdx < b.wordIdx;
        });
        std::vector<std::size_t> order;
        for (auto& it : items) order.push_back(it.wordIdx);
        return order;
    }

    void process_strand(int s, int targetPos, bool cycle, int dir) {
        auto& strand = cycle ? cycles[s - static_cast<int>(paths.size())] : paths[s];
        Node target = strand[targetPos];
        for (;;) {
            auto order = transport_order(s, targetPos, cycle, dir);
            std::size_t pick = word.size();
            for (auto wi : order) {
                Node nd{word[wi].L, word[wi].p};
                if (nd != target) {
                    pick = wi;
                    break;
                }
            }
            if (pick == word.size()) break;
            Node nd{word[pick].L, word[pick].p};
            int p = pos_.at(nd).second;
            auto route = cycle ? route_on_cycle(strand, p, targetPos, dir)
                               : route_on_path(strand, p, targetPos);
            transport(pick, route);
            fuse_column(target);
        }
        fuse_column(target);
    }

    void run() {
        for (auto& e : word) e.v = mod_d(e.v, d);
        std::erase_if(word, [](const Ev& e) { return e.v == 0; });
        build_strands();

        // Processing order of strands/cycles (the normal form must not
        // depend on it; randomized by the confluence tests).
        std::vector<int> cycleOrder(cycles.size()), pathOrder(paths.size());
        for (std::size_t i = 0; i < cycles.size(); ++i)
            cycleOrder[i] = static_cast<int>(i);
        for (std::size_t i = 0; i < paths.size(); ++i)
            pathOrder[i] = static_cast<int>(i);
        if (rng) {
            std::shuffle(cycleOrder.begin(), cycleOrder.end(), *rng);
            std::shuffle(pathOrder.begin(), pathOrder.end(), *rng);
        }

        for (int ci : cycleOrder) {
            auto& cyc = cycles[ci];
            int targetPos = 0;
            int dir = 1;
            if (rng) {
                targetPos = static_cast<int>((*rng)() % cyc.size());
                dir = ((*rng)() % 2 == 0) ? 1 : -1;
            }
            int s = static_cast<int>(paths.size()) + ci;
            process_strand(s, targetPos, true, dir);
            // A surviving charge means a charged loop: the term vanishes.
            for (auto& e : word)
                if (sid_.count(Node{e.L, e.p}) &&
                    sid_.at(Node{e.L, e.p}) == s) {
                    dead = true;
                    return;
                }
            scalar *= ExactScalar::delta_pow(ring, 1);
        }

        for (int si : pathOrder) {
            auto& path = paths[si];
            Node a = path.front(), b = path.back();
            int targetPos;
            bool aTop = is_top_edge(a), bTop = is_top_edge(b);
            if (aTop != bTop) {
                // Through strand: canonical anchor is the bottom endpoint.
                targetPos = aTop ? static_cast<int>(path.size()) - 1 : 0;
            } else {
                // Arc: canonical anchor is the left leg.
                targetPos = xcmp(xcoord(a), xcoord(b)) < 0
                                ? 0
                                : static_cast<int>(path.size()) - 1;
            }
            process_strand(si, targetPos, false, 1);
        }
    }

    /// Final canonical word order: bottom-anchored charges first by column,
    /// then top-anchored charges by string id; realized by transpositions.
    void sort_word() {
        auto key = [&](const Ev& e) {
            Node n{e.L, e.p};
            int s = strand_of(n);
            auto& path = paths[s];
            int sidSmall = std::min(flat_point(path.front()), flat_point(path.back()));
            return std::pair<int, int>(is_top_edge(n) ? 1 : 0, sidSmall);
        };
        for (std::size_t pass = 0; pass + 1 < word.size() + 1; ++pass) {
            bool swapped = false;
            for (std::size_t i = 0; i + 1 < word.size(); ++i) {
                if (key(word[i + 1]) < key(word[i])) {
                    tswap(i);
                    swapped = true;
                }
            }
            if (!swapped) break;
        }
    }

    int flat_point(Node n) const {
        if (!is_top_edge(n)) return n.p;
        return nb[0] + (n.p - nb[n.L]);
    }

    ChargedDiagram finish() {
        sort_word();
        std::vector<std::pair<int, int>> pairs;
        for (auto& path : paths)
            pairs.push_back({flat_point(path.front()), flat_point(path.back())});
        std::vector<ChargeEvent> charges;
        for (auto& e : word) charges.push_back({flat_point(Node{e.L, e.p}), e.v});
        return ChargedDiagram(ring, nt[top_layer()], nb[0], pairs, charges, scalar);
    }
};

Engine make_single_layer(const ChargedDiagram& t) {
    Engine eng(t.ring());
    eng.two = false;
    eng.nb[0] = t.bottom_arity();
    eng.nt[0] = t.top_arity();
    eng.partner[0].assign(t.num_points(), -1);
    for (auto& [a, b] : t.pairs()) {
        eng.partner[0][a] = b;
        eng.partner[0][b] = a;
    }
    for (auto& c : t.charges()) eng.word.push_back({0, c.point, c.value});
    eng.scalar = t.scalar();
    return eng;
}

DiagramSum collect_terms(RingParams ring, int top, int bottom,
                         std::vector<ChargedDiagram> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const ChargedDiagram& a, const ChargedDiagram& b) {
                  return a.shape_less(b);
              });
    std::vector<ChargedDiagram> merged;
    for (auto& t : raw) {
        if (!merged.empty() && merged.back().same_shape(t))
            merged.back().mutable_scalar() += t.scalar();
        else
            merged.push_back(std::move(t));
    }
    DiagramSum out(ring, top, bottom);
    for (auto& t : merged)
        if (!t.scalar().is_zero()) out.add_term(std::move(t));
    return out;
}

DiagramSum run_terms(RingParams ring, int top, int bottom,
                     std::vector<Engine> engines,
                     std::optional<std::uint64_t> seed) {
    std::optional<std::mt19937_64> rng;
    if (seed) rng.emplace(*seed);
    std::vector<ChargedDiagram> results;
    for (auto& eng : engines) {
        if (rng) eng.rng = &*rng;
        eng.run();
        if (eng.dead || eng.scalar.is_zero()) continue;
        results.push_back(eng.finish());
    }
    return collect_terms(ring, top, bottom, std::move(results));
}

}  // namespace

DiagramSum normalize(const DiagramSum& a, std::optional<std::uint64_t> seed) {
    std::vector<Engine> engines;
    for (auto& t : a.terms()) engines.push_back(make_single_layer(t));
    return run_terms(a.ring(), a.top_arity(), a.bottom_arity(), std::move(engines),
                     seed);
}

DiagramSum compose_vertical(const DiagramSum& top, const DiagramSum& bottom) {
    if (!(top.ring() == bottom.ring()))
        throw std::invalid_argument("compose_vertical: mixed rings");
    if (top.bottom_arity() != bottom.top_arity())
        throw std::invalid_argument("compose_vertical: arity mismatch");
    std::vector<Engine> engines;
    for (auto& bt : bottom.terms())
        for (auto& tt : top.terms()) {
            Engine eng(top.ring());
            eng.two = true;
            eng.nb[0] = bt.bottom_arity();
            eng.nt[0] = bt.top_arity();
            eng.nb[1] = tt.bottom_arity();
            eng.nt[1] = tt.top_arity();
            eng.partner[0].assign(bt.num_points(), -1);
            for (auto& [a, b] : bt.pairs()) {
                eng.partner[0][a] = b;
                eng.partner[0][b] = a;
            }
            eng.partner[1].assign(tt.num_points(), -1);
            for (auto& [a, b] : tt.pairs()) {
                eng.partner[1][a] = b;
                eng.partner[1][b] = a;
            }
            for (auto& c : bt.charges()) eng.word.push_back({0, c.point, c.value});
            for (auto& c : tt.charges()) eng.word.push_back({1, c.point, c.value});
            eng.scalar = bt.scalar() * tt.scalar();
            engines.push_back(std::move(eng));
        }
    return run_terms(top.ring(), top.top_arity(), bottom.bottom_arity(),
                     std::move(engines), std::nullopt);
}

DiagramSum compose_horizontal(const DiagramSum& left, const DiagramSum& right) {
    if (!(left.ring() == right.ring()))
        throw std::invalid_argument("compose_horizontal: mixed rings");
    int b = left.bottom_arity() + right.bottom_arity();
    int t = left.top_arity() + right.top_arity();
    std::vector<Engine> engines;
    for (auto& lt : left.terms())
        for (auto& rt : right.terms()) {
            int lb = lt.bottom_arity(), ltp = lt.top_arity();
            int rb = rt.bottom_arity(), rtp = rt.top_arity();
            auto remapL = [&](int p) {
                if (p < lb) return p;          // left bottom keeps its index
                return b + rtp + (p - lb);     // left top shifts past right top
            };
            auto remapR = [&](int p) {
                if (p < rb) return lb + p;     // right bottom after left bottom
                return b + (p - rb);           // right top is rightmost on top
            };
            std::vector<std::pair<int, int>> pairs;
            for (auto& [x, y] : lt.pairs()) pairs.push_back({remapL(x), remapL(y)});
            for (auto& [x, y] : rt.pairs()) pairs.push_back({remapR(x), remapR(y)});
            std::vector<ChargeEvent> charges;
            for (auto& c : lt.charges()) charges.push_back({remapL(c.point), c.value});
            for (auto& c : rt.charges()) charges.push_back({remapR(c.point), c.value});
            engines.push_back(make_single_layer(ChargedDiagram(
                left.ring(), t, b, std::move(pairs), std::move(charges),
                lt.scalar() * rt.scalar())));
        }
    return run_terms(left.ring(), t, b, std::move(engines), std::nullopt);
}

DiagramSum adjoint(const DiagramSum& a) {
    int newTop = a.bottom_arity(), newBottom = a.top_arity();
    std::vector<Engine> engines;
    for (auto& t : a.terms()) {
        int oldB = t.bottom_arity(), oldT = t.top_arity();
        auto remap = [&](int p) {
            if (p < oldB) return newBottom + (oldB - 1 - p);  // bottom -> top
            return oldT - 1 - (p - oldB);                     // top -> bottom
        };
        std::vector<std::pair<int, int>> pairs;
        for (auto& [x, y] : t.pairs()) pairs.push_back({remap(x), remap(y)});
        std::vector<ChargeEvent> charges;
        for (auto it = t.charges().rbegin(); it != t.charges().rend(); ++it)
            charges.push_back({remap(it->point), -it->value});
        // Reflection flips the shear that breaks horizontal ties between
        // bottom- and top-anchored charge columns; re-expressing the mirror
        // image in the standard shear costs q^{2cc'} per tied pair whose
        // top-anchored member sits below its bottom-anchored partner.
        ExactScalar s = t.scalar().conj();
        auto realx = [&](int p) -> std::pair<long long, long long> {
            if (p < newBottom) return {2LL * p + 1, 2LL * newBottom};
            int j = p - newBottom;
            return {2LL * (newTop - 1 - j) + 1, 2LL * newTop};
        };
        for (std::size_t i = 0; i < charges.size(); ++i)
            for (std::size_t j = i + 1; j < charges.size(); ++j) {
                bool iTop = charges[i].point >= newBottom;
                bool jTop = charges[j].point >= newBottom;
                if (iTop == jTop) continue;
                auto [ni, di] = realx(charges[i].point);
                auto [nj, dj] = realx(charges[j].point);
                if (ni * dj != nj * di) continue;
                if (iTop)
                    s *= ExactScalar::q_pow(
                        a.ring(), 2LL * charges[i].value * charges[j].value);
            }
        engines.push_back(make_single_layer(ChargedDiagram(
            a.ring(), newTop, newBottom, std::move(pairs), std::move(charges),
            std::move(s))));
    }
    return run_terms(a.ring(), newTop, newBottom, std::move(engines), std::nullopt);
}

ExactScalar eval_closed(const DiagramSum& a) {
    if (a.top_arity() != 0 || a.bottom_arity() != 0)
        throw std::invalid_argument("eval_closed: diagram is not closed");
    DiagramSum n = normalize(a);
    ExactScalar v = ExactScalar::zero(a.ring());
    for (auto& t : n.terms()) v += t.scalar();
    return v;
}

DiagramSum expand_identity(const DiagramSum& a, int strandPair) {
    DiagramSum n = normalize(a);
    std::vector<ChargedDiagram> raw;
    int d = a.ring().d;
    for (auto& t : n.terms()) {
        // Through strings, left to right by their bottom point.
        std::vector<std::pair<int, int>> through;
        for (auto& [x, y] : t.pairs())
            if (t.is_bottom_point(x) != t.is_bottom_point(y)) {
                int bp = t.is_bottom_point(x) ? x : y;
                int tp = t.is_bottom_point(x) ? y : x;
                through.push_back({bp, tp});
            }
        std::sort(through.begin(), through.end());
        if (strandPair < 0 || strandPair + 1 >= static_cast<int>(through.size()))
            throw std::out_of_range("expand_identity: no such strand pair");
        auto [b1, t1] = through[strandPair];
        auto [b2, t2] = through[strandPair + 1];
        if (b2 != b1 + 1 || t2 != t1 - 1)
            throw std::out_of_range("expand_identity: strands are not adjacent");
        for (int k = 0; k < d; ++k) {
            std::vector<std::pair<int, int>> pairs;
            for (auto& pr : t.pairs())
                if (pr != std::make_pair(std::min(b1, t1), std::max(b1, t1)) &&
                    pr != std::make_pair(std::min(b2, t2), std::max(b2, t2)))
                    pairs.push_back(pr);
            pairs.push_back({b1, b2});
            pairs.push_back({t2, t1});
            std::vector<ChargeEvent> charges = t.charges();
            if (k != 0) {
                charges.push_back({b1, k});
                charges.push_back({t1, d - k});
            }
            ExactScalar sc = t.scalar() * ExactScalar::delta_pow(a.ring(), -1);
            raw.push_back(ChargedDiagram(a.ring(), t.top_arity(), t.bottom_arity(),
                                         std::move(pairs), std::move(charges), sc));
        }
    }
    std::vector<Engine> engines;
    for (auto& t : raw) engines.push_back(make_single_layer(t));
    return run_terms(a.ring(), a.top_arity(), a.bottom_arity(), std::move(engines),
                     std::nullopt);
}

}  // namespace cs
