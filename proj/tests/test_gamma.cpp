#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <sstream>

#include "alcove/gamma.hpp"
#include "helpers.hpp"

using namespace alcove;

namespace {

GammaSequence make(int n, Weight lambda, PathKind kind, std::vector<Root> roots) {
    GammaSequence g;
    g.n = n;
    g.lambda = std::move(lambda);
    g.kind = kind;
    g.roots = std::move(roots);
    return g;
}

const std::vector<Root> kPi1 = {{1, 2}, {1, 3}, {2, 3}, {1, 3}};

}  // namespace

TEST_CASE("validate_gamma accepts the known paths") {
    CHECK(validate_gamma(make(3, {2, 1, 0}, PathKind::ordinary, kPi1)).empty());
    // the extended path of the worked example, equal to the canonical one
    CHECK(validate_gamma(gamma_lambda(3, {2, 1, 0})).empty());
}

TEST_CASE("validate_gamma catches count and interlacing failures") {
    auto bad = gamma_lambda(3, {2, 1, 0});
    std::swap(bad.roots[0], bad.roots[1]);
    CHECK_FALSE(validate_gamma(bad).empty());
    auto short_path = make(3, {2, 1, 0}, PathKind::ordinary, {{1, 2}, {1, 3}});
    CHECK_FALSE(validate_gamma(short_path).empty());
}

TEST_CASE("gamma_lambda worked examples") {
    CHECK(gamma_lambda(3, {2, 1, 0}).roots ==
          std::vector<Root>{{2, 3}, {1, 3}, {2, 3}, {1, 3}, {1, 2}, {1, 3}, {1, 2}});
    CHECK(gamma_lambda(3, {0, 0, 0}).roots ==
          std::vector<Root>{{2, 3}, {1, 3}, {1, 2}});
    CHECK(gamma_lambda(2, {3, 0}).roots ==
          std::vector<Root>(4, Root{1, 2}));
    CHECK_THROWS_AS(gamma_lambda(3, {1, 2, 0}), std::invalid_argument);
}

TEST_CASE("gamma_lambda validates at desk scale") {
    for (int n = 2; n <= 4; ++n)
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= a; ++b) {
                Weight lambda(n, 0);
                lambda[0] = a;
                if (n > 2) lambda[1] = b;
                CHECK(validate_gamma(gamma_lambda(n, lambda)).empty());
            }
}

TEST_CASE("levels") {
    auto g = gamma_lambda(3, {2, 1, 0});
    CHECK(g.levels() == std::vector<int>{0, 0, -1, -1, 0, -2, -1});
    // last occurrence of each root sits at level -(lambda, beta)
    for (int n = 2; n <= 4; ++n) {
        Weight lambda(n, 0);
        lambda[0] = 2;
        if (n > 2) lambda[1] = 1;
        auto ge = gamma_lambda(n, lambda);
        auto lv = ge.levels();
        std::map<Root, int> last;
        for (int i = 1; i <= ge.size(); ++i) last[ge.root(i)] = lv[i - 1];
        for (auto& [b, l] : last) CHECK(l == -pairing(lambda, b));
    }
}

TEST_CASE("extend_path") {
    auto pi1 = make(3, {2, 1, 0}, PathKind::ordinary, kPi1);
    CHECK(extend_path(pi1, {1, 2, 1}).roots ==
          std::vector<Root>{{1, 2}, {1, 3}, {2, 3}, {1, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(extend_path(pi1, {2, 1, 2}).roots ==
          std::vector<Root>{{1, 2}, {1, 3}, {2, 3}, {1, 3}, {2, 3}, {1, 3}, {1, 2}});
    auto empty = make(3, {0, 0, 0}, PathKind::ordinary, {});
    CHECK(extend_path(empty, {1, 2, 1}).roots ==
          std::vector<Root>{{1, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(extend_path(gamma_lambda(3, {2, 1, 0}), {1, 2, 1}),
                    std::invalid_argument);
}

TEST_CASE("extend_path is extended-valid for every reduced word, n <= 3") {
    auto pi1 = make(3, {2, 1, 0}, PathKind::ordinary, kPi1);
    for (const auto& word : testing::all_reduced_words(3))
        CHECK(validate_gamma(extend_path(pi1, word)).empty());
}

TEST_CASE("rho_lex_path") {
    auto r2 = rho_lex_path(2);
    CHECK(r2.seq.roots == std::vector<Root>{{1, 2}});
    CHECK(r2.marker == 1);

    auto r3 = rho_lex_path(3);
    CHECK(r3.seq.roots == std::vector<Root>{{2, 3}, {1, 3}, {1, 2}, {1, 3}});
    CHECK(r3.seq.levels() == std::vector<int>{0, 0, 0, -1});
    CHECK(r3.marker == 3);
    // the first N steps form a reflection order (the walk reaches w_o A_o)
    for (int n = 2; n <= 4; ++n) {
        auto r = rho_lex_path(n);
        CHECK(validate_gamma(r.seq).empty());
        auto w = WeylElement::identity(n);
        for (int i = 1; i <= r.marker; ++i) {
            auto next = w.times_reflection(r.seq.root(i));
            CHECK(next.length() == w.length() + 1);
            w = next;
        }
        CHECK(w == WeylElement::longest(n));
    }
}

TEST_CASE("rho_shift_concat") {
    auto g = rho_shift_concat(gamma_lambda(3, {2, 1, 0}));
    CHECK(g.size() == 8);
    CHECK(g.roots.back() == Root{1, 3});
    CHECK(g.lambda == Weight{4, 2, 0});
    CHECK(validate_gamma(g).empty());

    auto g2 = rho_shift_concat(gamma_lambda(2, {3, 0}));
    CHECK(g2.roots == std::vector<Root>(4, Root{1, 2}));
    CHECK(g2.lambda == Weight{4, 0});
    CHECK(validate_gamma(g2).empty());

    auto g0 = rho_shift_concat(gamma_lambda(3, {0, 0, 0}));
    CHECK(g0.roots == std::vector<Root>{{2, 3}, {1, 3}, {1, 2}, {1, 3}});
    CHECK(validate_gamma(g0).empty());
}

TEST_CASE("text round trip") {
    auto g = gamma_lambda(3, {2, 1, 0});
    std::istringstream in(format_gamma(g));
    auto back = parse_gamma(3, {2, 1, 0}, PathKind::extended, in);
    CHECK(back.roots == g.roots);
}
