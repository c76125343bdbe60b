// JSON round-trip of diagram documents and exact scalars.
#include <doctest.h>

#include <random>

#include "cs/serialize.hpp"

using namespace cs;

namespace {

// Random non-crossing perfect matching of points lo..hi-1 in cyclic order.
void random_matching(int lo, int hi, std::mt19937_64& rng,
                     std::vector<std::pair<int, int>>& out) {
    if (lo >= hi) return;
    int count = (hi - lo) / 2;
    int pick = 1 + 2 * static_cast<int>(rng() % count);
    out.emplace_back(lo, lo + pick);
    random_matching(lo + 1, lo + pick, rng, out);
    random_matching(lo + pick + 1, hi, rng, out);
}

ExactScalar random_scalar(const RingParams& ring, std::mt19937_64& rng) {
    ExactScalar s = ExactScalar::zero(ring);
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        long long num = static_cast<long long>(rng() % 19) - 9;
        long long den = 1 + static_cast<long long>(rng() % 7);
        s.add_term(static_cast<long long>(rng() % (2 * ring.d)),
                   Rational(num, den), static_cast<int>(rng() % 2));
    }
    return s;
}

ChargedDiagram random_document(std::mt19937_64& rng) {
    int d = 2 + static_cast<int>(rng() % 5);
    RingParams ring = make_ring(d);
    int bottom = 2 * static_cast<int>(rng() % 3);
    int top = 2 * static_cast<int>(rng() % 3);
    if (top + bottom == 0) top = 2;
    std::vector<std::pair<int, int>> pairs;
    random_matching(0, top + bottom, rng, pairs);
    std::vector<ChargeEvent> charges;
    int events = static_cast<int>(rng() % 4);
    for (int e = 0; e < events; ++e)
        charges.push_back({static_cast<int>(rng() % (top + bottom)),
                           1 + static_cast<int>(rng() % (d - 1))});
    return ChargedDiagram(ring, top, bottom, std::move(pairs),
                          std::move(charges), random_scalar(ring, rng));
}

}  // namespace

TEST_CASE("scalar JSON round-trip preserves exact equality") {
    std::mt19937_64 rng(101);
    for (int d = 2; d <= 7; ++d) {
        RingParams ring = make_ring(d);
        for (int trial = 0; trial < 50; ++trial) {
            ExactScalar s = random_scalar(ring, rng);
            CHECK(scalar_from_json(ring, scalar_to_json(s)) == s);
        }
        CHECK(scalar_from_json(ring, scalar_to_json(ExactScalar::zero(ring))) ==
              ExactScalar::zero(ring));
    }
}

TEST_CASE("100 random diagram documents survive parse/serialize/parse "
          "unchanged") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 100; ++trial) {
        ChargedDiagram doc = random_document(rng);
        std::string text = serialize_diagram(doc);
        ChargedDiagram back = parse_diagram(text);
        CHECK(back.same_shape(doc));
        CHECK(back.scalar() == doc.scalar());
        CHECK(back.ring().d == doc.ring().d);
        // Serialization is byte-stable.
        CHECK(serialize_diagram(back) == text);
    }
}

TEST_CASE("loops field multiplies the scalar by delta^loops") {
    RingParams ring = make_ring(3);
    ChargedDiagram base(ring, 2, 0, {{0, 1}}, {}, ExactScalar::one(ring));
    Json j = diagram_to_json(base);
    j["loops"] = 2;
    ChargedDiagram parsed = diagram_from_json(j);
    CHECK(parsed.scalar() == ExactScalar::delta_pow(ring, 2));
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(parse_diagram("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_diagram("{}"), std::invalid_argument);
    RingParams ring = make_ring(2);
    ChargedDiagram ok(ring, 2, 0, {{0, 1}}, {}, ExactScalar::one(ring));
    Json j = diagram_to_json(ok);
    SUBCASE("bad version") {
        j["version"] = 99;
        CHECK_THROWS_AS(diagram_from_json(j), std::invalid_argument);
    }
    SUBCASE("bad scalar term shape") {
        j["scalar"] = Json{{"terms", Json::array({Json::array({0, 1})})}};
        CHECK_THROWS_AS(diagram_from_json(j), std::invalid_argument);
    }
    SUBCASE("bad delta parity") {
        j["scalar"] =
            Json{{"terms", Json::array({Json::array({2, 0, "1", "1"})})}};
        CHECK_THROWS_AS(diagram_from_json(j), std::invalid_argument);
    }
}

TEST_CASE("crossing pairings cannot be constructed at all") {
    RingParams ring = make_ring(2);
    CHECK_THROWS_AS(ChargedDiagram(ring, 4, 0, {{0, 2}, {1, 3}}, {},
                                   ExactScalar::one(ring)),
                    std::invalid_argument);
}
