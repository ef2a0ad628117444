#include <cstdlib>

#include "doctest.h"
#include "qshuffle/algelt.hpp"
#include "qshuffle/catalan.hpp"
#include "qshuffle/shuffle.hpp"
#include "test_helpers.hpp"

using namespace qshuffle;
using namespace qshuffle::testing;

TEST_CASE("word parsing and rendering") {
    CHECK(W("1").trivial());
    CHECK(W("1").str() == "1");
    CHECK(W("xxyy").str() == "xxyy");
    CHECK(W("xxyy").length() == 4);
    CHECK_THROWS_AS(Word::parse("xz"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse(std::string(65, 'x')), std::invalid_argument);
}

TEST_CASE("weight and bidegree") {
    CHECK(W("xy").weight() == 0);
    CHECK(W("xxy").weight() == 1);
    CHECK(W("1").weight() == 0);
    CHECK(W("xxyyxy").bidegree() == std::pair<int, int>{3, 3});
    CHECK(W("yyy").bidegree() == std::pair<int, int>{0, 3});
    Rng rng(41);
    for (int i = 0; i < 200; ++i) {
        const Word w = random_word(rng, static_cast<std::uint32_t>(rng() % 20));
        const int len = static_cast<int>(w.length());
        CHECK(std::abs(w.weight()) <= len);
        CHECK((w.weight() - len) % 2 == 0);
        const auto [nx, ny] = w.bidegree();
        CHECK(nx + ny == len);
        CHECK(nx - ny == w.weight());
    }
}

TEST_CASE("canonical word order: length first, then lexicographic with x < y") {
    CHECK(canonical_less(W("y"), W("xx")));
    CHECK(canonical_less(W("x"), W("y")));
    CHECK(canonical_less(W("xxyy"), W("xyxy")));
    CHECK(canonical_less(W("xyxxyy"), W("xyxyxy")));
    CHECK(!canonical_less(W("xy"), W("xy")));
    CHECK(canonical_less(W("1"), W("x")));
}

TEST_CASE("word concatenation and ends") {
    CHECK((W("xy") + W("yx")) == W("xyyx"));
    CHECK((W("1") + W("xy")) == W("xy"));
    CHECK(W("xyx").front() == Letter::X);
    CHECK(W("xyx").at(1) == Letter::Y);
    CHECK(W("xxy").without_front() == W("xy"));
    CHECK(W("xxy").without_back() == W("xx"));
}

TEST_CASE("concat on elements") {
    CHECK(concat(aw("x"), aw("y")) == aw("xy"));
    const AlgElt c1 = catalan_element(1);
    CHECK(concat(aw("x"), c1) == term("xxy", qint(2)));
    Rng rng(42);
    for (int i = 0; i < 100; ++i) {
        const AlgElt v = random_elt(rng);
        CHECK(concat(AlgElt::unit(), v) == v);
        CHECK(concat(v, AlgElt::unit()) == v);
    }
}

TEST_CASE("concat is associative on random elements") {
    Rng rng(43);
    for (int i = 0; i < 100; ++i) {
        const AlgElt a = random_elt(rng);
        const AlgElt b = random_elt(rng);
        const AlgElt c = random_elt(rng);
        CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
    }
}

TEST_CASE("coefficients via the bilinear form") {
    CHECK(shuffle(aw("x"), aw("y")).coeff(W("yx")) == qp(1, -2));
    CHECK(aw("xy").coeff(W("yx")).is_zero());
    CHECK(catalan_element(2).coeff(W("xxyy")) == qint(3) * qint(2) * qint(2));
}

TEST_CASE("rebuilding an element from its coefficient function") {
    Rng rng(44);
    for (int i = 0; i < 100; ++i) {
        const AlgElt v = random_elt(rng);
        AlgElt rebuilt;
        for (const Word& w : v.support()) {
            rebuilt.add_term(w, v.coeff(w));
        }
        CHECK(rebuilt == v);
    }
}

TEST_CASE("zeta on words and elements") {
    CHECK(W("xxyxxy").zeta() == W("xyyxyy"));
    CHECK(W("xxyyxx").zeta() == W("yyxxyy"));
    CHECK(W("xxxyyy").zeta() == W("xxxyyy"));
    Rng rng(45);
    for (int i = 0; i < 100; ++i) {
        const AlgElt v = random_elt(rng);
        CHECK(zeta(zeta(v)) == v);
    }
}

TEST_CASE("zeta is an antiautomorphism for concatenation") {
    Rng rng(46);
    for (int i = 0; i < 100; ++i) {
        const AlgElt u = random_elt(rng);
        const AlgElt v = random_elt(rng);
        CHECK(zeta(concat(u, v)) == concat(zeta(v), zeta(u)));
    }
}

TEST_CASE("element arithmetic drops cancelled terms") {
    Rng rng(47);
    for (int i = 0; i < 100; ++i) {
        const AlgElt v = random_elt(rng);
        CHECK((v - v).is_zero());
        CHECK((v + (-v)).term_count() == 0);
    }
}

TEST_CASE("sorted terms follow the canonical order") {
    AlgElt e;
    e.add_term(W("xyxy"), LaurentPoly::one());
    e.add_term(W("y"), LaurentPoly::one());
    e.add_term(W("xxyy"), LaurentPoly::one());
    e.add_term(W("1"), LaurentPoly::one());
    const auto sorted = e.sorted_terms();
    REQUIRE(sorted.size() == 4);
    CHECK(sorted[0].first == W("1"));
    CHECK(sorted[1].first == W("y"));
    CHECK(sorted[2].first == W("xxyy"));
    CHECK(sorted[3].first == W("xyxy"));
}

TEST_CASE("element text rendering") {
    CHECK(AlgElt().str() == "0");
    CHECK(AlgElt::unit().str() == "1");
    CHECK(term("xy", qint(2)).str() == "(q + q^-1)*xy");
    CHECK((aw("xx") - aw("yy")).str() == "xx - yy");
    CHECK(term("yx", qp(1, -2)).str() == "q^-2*yx");
}

TEST_CASE("element LaTeX rendering uses bracket notation") {
    CHECK(catalan_element(1).latex() == "[2]_q\\,xy");
    CHECK(catalan_element(2).latex() == "[3]_q[2]_q^{2}\\,xxyy + [2]_q^{2}\\,xyxy");
}

TEST_CASE("element JSON round trip") {
    Rng rng(48);
    for (int i = 0; i < 50; ++i) {
        const AlgElt v = random_elt(rng);
        CHECK(AlgElt::from_json(v.to_json()) == v);
    }
    const nlohmann::json j = term("xy", qint(2)).to_json();
    CHECK(j["terms"][0]["word"] == "xy");
    CHECK(j["terms"][0]["coeff"]["1"] == "1");
}
