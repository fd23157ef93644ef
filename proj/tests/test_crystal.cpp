#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "alcove/gt.hpp"

using namespace alcove;

TEST_CASE("generate_crystal rejects a non-highest seed") {
    CHECK_THROWS_WITH_AS(generate_crystal("1 2/2", ssyt_oracle(3)),
                         doctest::Contains("not highest weight"),
                         std::runtime_error);
}

TEST_CASE("generate_crystal detects oracle inconsistencies") {
    // an oracle whose raising map forgets one edge breaks axiom (1)
    auto ops = ssyt_oracle(3);
    auto raise = ops.raise;
    ops.raise = [raise](const Element& e, int p) -> std::optional<Element> {
        if (e == "1 2/2" && p == 1) return std::nullopt;
        return raise(e, p);
    };
    CHECK_THROWS_WITH_AS(generate_crystal("1 1/2", ops),
                         doctest::Contains("axiom (1)"), std::runtime_error);

    // an oracle with a wrong weight map breaks axiom (2)
    auto ops2 = ssyt_oracle(3);
    ops2.weight = [](const Element& e) {
        Weight w = ssyt_content(parse_ssyt(3, e));
        if (e == "1 2/2") w[0] += 1;
        return w;
    };
    CHECK_THROWS_WITH_AS(generate_crystal("1 1/2", ops2),
                         doctest::Contains("axiom (2)"), std::runtime_error);
}

TEST_CASE("trivial crystals") {
    auto g = gt_crystal(3, {0, 0, 0});
    CHECK(g.elements.size() == 1);
    CHECK(g.num_edges() == 0);
    CHECK(verify_crystal_axioms(g).ok());
    CHECK(character(g) == std::vector<Weight>{{0, 0, 0}});
}

TEST_CASE("verify_crystal_axioms reports a mutated graph") {
    auto g = gt_crystal(3, {2, 1, 0});
    REQUIRE(verify_crystal_axioms(g).ok());
    auto broken = g;
    broken.f_edges.erase(broken.f_edges.begin());
    auto report = verify_crystal_axioms(broken);
    CHECK_FALSE(report.ok());
    bool found = std::any_of(report.items.begin(), report.items.end(),
                             [](const AxiomViolation& v) {
                                 return v.axiom.find("axiom (3)") != std::string::npos ||
                                        v.axiom.find("axiom (1)") != std::string::npos;
                             });
    CHECK(found);
}

TEST_CASE("string data") {
    auto g = gt_crystal(3, {2, 1, 0});
    const Word word = iA_word(3);
    CHECK(string_datum(g, g.highest, word).d == std::vector<int>{0, 0, 0});
    int bottom = g.index.at("(2 1 0 / 1 0 / 0)");
    CHECK(string_datum(g, bottom, word).d == std::vector<int>{1, 2, 1});
    // str is injective
    std::set<std::vector<int>> seen;
    for (int b = 0; b < static_cast<int>(g.elements.size()); ++b)
        CHECK(seen.insert(string_datum(g, b, word).d).second);
    // inversion
    for (int b = 0; b < static_cast<int>(g.elements.size()); ++b) {
        auto back = element_from_string_datum(g, word, string_datum(g, b, word));
        REQUIRE(back);
        CHECK(*back == b);
    }
    StringDatum too_big{3, {9, 0, 0}};
    CHECK_FALSE(element_from_string_datum(g, word, too_big));
    StringDatum zero{3, {0, 0, 0}};
    CHECK(element_from_string_datum(g, word, zero) == g.highest);
}

TEST_CASE("unique_isomorphism") {
    auto g1 = ssyt_crystal(3, {2, 1, 0});
    auto g2 = gt_crystal(3, {2, 1, 0});
    auto fwd = unique_isomorphism(g1, g2);
    auto bwd = unique_isomorphism(g2, g1);
    for (int b = 0; b < static_cast<int>(g1.elements.size()); ++b) {
        CHECK(bwd[fwd[b]] == b);
        CHECK(weights_equal(g1.weights[b], g2.weights[fwd[b]]));
        // edges commute with the map
        for (int p = 1; p < 3; ++p) {
            auto a = g1.lower(b, p);
            auto c = g2.lower(fwd[b], p);
            CHECK(a.has_value() == c.has_value());
            if (a) CHECK(fwd[*a] == *c);
        }
    }
    auto self = unique_isomorphism(g1, g1);
    for (int b = 0; b < static_cast<int>(g1.elements.size()); ++b)
        CHECK(self[b] == b);
    auto other = gt_crystal(3, {1, 0, 0});
    CHECK_THROWS_WITH_AS(unique_isomorphism(g1, other),
                         doctest::Contains("not isomorphic"), std::runtime_error);
}

TEST_CASE("character") {
    auto g = gt_crystal(3, {1, 0, 0});
    auto ch = character(g);
    std::vector<Weight> want = {normalize_weight({1, 0, 0}),
                                normalize_weight({0, 1, 0}),
                                normalize_weight({0, 0, 1})};
    std::sort(want.begin(), want.end());
    CHECK(ch == want);
    // W-invariance: permuting coordinates leaves the multiset fixed
    auto g2 = gt_crystal(3, {2, 1, 0});
    auto ch2 = character(g2);
    std::vector<Weight> permuted;
    for (Weight w : ch2) {
        std::swap(w[0], w[1]);
        permuted.push_back(normalize_weight(w));
    }
    std::sort(permuted.begin(), permuted.end());
    CHECK(permuted == ch2);
}

TEST_CASE("exports") {
    auto g = gt_crystal(3, {2, 1, 0});
    auto dot = to_dot(g);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("// nodes=8 edges=8") != std::string::npos);
    auto json = to_json(g);
    CHECK(json.find("\"elements\"") != std::string::npos);
    CHECK(json.find("\"string_datum\"") != std::string::npos);
    CHECK(json.find("\"color\"") != std::string::npos);
}
