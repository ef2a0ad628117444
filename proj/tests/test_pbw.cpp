#include "doctest.h"
#include "qshuffle/pbw.hpp"
#include "qshuffle/relations.hpp"
#include "qshuffle/shuffle.hpp"
#include "test_helpers.hpp"

using namespace qshuffle;
using namespace qshuffle::testing;

TEST_CASE("label validation and degrees") {
    CHECK_THROWS_AS(PBWLabel::d(0), std::invalid_argument);
    CHECK_THROWS_AS(PBWLabel::a0(-1), std::invalid_argument);
    CHECK(PBWLabel::a0(2).letter_count() == 5);
    CHECK(PBWLabel::a1(0).letter_count() == 1);
    CHECK(PBWLabel::d(3).letter_count() == 6);
    CHECK(PBWLabel::d(2).str() == "E(2d)");
    CHECK(PBWLabel::a0(1).str() == "E(d+a0)");
    CHECK(PBWLabel::a1(0).str() == "E(a1)");
}

TEST_CASE("the linear order on labels") {
    // alpha_0 ascending, then delta ascending, then alpha_1 descending
    const std::vector<PBWLabel> expected{PBWLabel::a0(0), PBWLabel::a0(1), PBWLabel::a0(4),
                                         PBWLabel::d(1),  PBWLabel::d(2),  PBWLabel::d(5),
                                         PBWLabel::a1(3), PBWLabel::a1(1), PBWLabel::a1(0)};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        for (std::size_t j = 0; j < expected.size(); ++j) {
            CHECK((expected[i] < expected[j]) == (i < j));
        }
    }
}

TEST_CASE("base images") {
    CHECK(pbw_image_recursive(PBWLabel::a0(0)).value == aw("x"));
    CHECK(pbw_image_recursive(PBWLabel::a1(0)).value == aw("y"));
    CHECK(pbw_image_recursive(PBWLabel::d(1)).value == term("xy", qp(1, -4) - qp(1, 0)));
}

TEST_CASE("closed forms at small indices") {
    CHECK(pbw_image_closed(PBWLabel::a0(0)).value == aw("x"));
    CHECK(pbw_image_closed(PBWLabel::a1(0)).value == aw("y"));
    CHECK(pbw_image_closed(PBWLabel::d(1)).value == term("xy", qp(1, -4) - qp(1, 0)));
    const LaurentPoly expected =
        qp(1, 1) - qp(1, -1) - qp(1, -3) + qp(1, -5);  // (1 - q^-4)(q - q^-1)
    CHECK(pbw_image_closed(PBWLabel::a0(1)).value == term("xxy", expected));
    CHECK(pbw_image_recursive(PBWLabel::a0(1)).value == term("xxy", expected));
}

TEST_CASE("recursive images match closed forms up to index 3") {
    const VerificationReport report = verify_main_theorem(3);
    CHECK(report.all_passed());
    // 4+4+3 family comparisons plus 4 recurrences for each of n = 1..3
    CHECK(report.size() == 11 + 12);
}

TEST_CASE("images are homogeneous of the expected bidegree") {
    for (int n = 0; n <= 6; ++n) {
        const auto [ax, ay] = pbw_bidegree(PBWLabel::a0(n));
        CHECK(pbw_image_recursive(PBWLabel::a0(n)).value.is_homogeneous(ax, ay));
        const auto [bx, by] = pbw_bidegree(PBWLabel::a1(n));
        CHECK(pbw_image_recursive(PBWLabel::a1(n)).value.is_homogeneous(bx, by));
        if (n >= 1) {
            const auto [dx, dy] = pbw_bidegree(PBWLabel::d(n));
            CHECK(pbw_image_recursive(PBWLabel::d(n)).value.is_homogeneous(dx, dy));
        }
    }
}

TEST_CASE("both delta recursions produce identical images") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(pbw_image_recursive(PBWLabel::d(n)).value == pbw_image_delta_alt(n));
    }
}

TEST_CASE("support of the delta image is exactly the Catalan words") {
    for (int n = 1; n <= 5; ++n) {
        const std::vector<Word> support = pbw_image_recursive(PBWLabel::d(n)).value.support();
        CHECK(support == enumerate_catalan(n));
    }
}

TEST_CASE("zeta fixes delta images and swaps the alpha families") {
    CHECK(verify_zeta_pbw(5).all_passed());
}

TEST_CASE("a corrupted closed-form prefactor is detected") {
    // perturb the power of q in the closed form by one
    for (int n = 1; n <= 3; ++n) {
        const AlgElt good = pbw_image_closed(PBWLabel::d(n)).value;
        const AlgElt bad = good.shifted(1);
        const AlgElt recursive = pbw_image_recursive(PBWLabel::d(n)).value;
        CHECK(equality_check("corrupted", "", recursive, bad).status == CheckStatus::fail);
        CHECK(equality_check("control", "", recursive, good).status == CheckStatus::pass);
    }
}

TEST_CASE("PBW monomials at small degrees") {
    const auto deg0 = pbw_monomials(0);
    REQUIRE(deg0.size() == 1);
    CHECK(deg0[0].labels.empty());
    CHECK(deg0[0].image == AlgElt::unit());

    const auto deg1 = pbw_monomials(1);
    REQUIRE(deg1.size() == 2);
    CHECK(deg1[0].image == aw("x"));
    CHECK(deg1[1].image == aw("y"));

    const auto deg2 = pbw_monomials(2);
    REQUIRE(deg2.size() == 4);
    CHECK(deg2[0].labels == std::vector<PBWLabel>{PBWLabel::a0(0), PBWLabel::a0(0)});
    CHECK(deg2[0].image == term("xx", qp(1, 0) + qp(1, 2)));
    CHECK(deg2[1].image == shuffle(aw("x"), aw("y")));
    CHECK(deg2[2].labels == std::vector<PBWLabel>{PBWLabel::d(1)});
    CHECK(deg2[2].image == term("xy", qp(1, -4) - qp(1, 0)));
    CHECK(deg2[3].image == term("yy", qp(1, 0) + qp(1, 2)));

    // monomial sequences are weakly increasing in the label order
    for (const auto& m : pbw_monomials(5)) {
        CHECK(std::is_sorted(m.labels.begin(), m.labels.end(),
                             [](const PBWLabel& a, const PBWLabel& b) { return a < b; }));
        int degree = 0;
        for (const PBWLabel& label : m.labels) {
            degree += label.letter_count();
        }
        CHECK(degree == 5);
    }
}

TEST_CASE("exact rational rank") {
    using Row = std::vector<Rational>;
    CHECK(rational_matrix_rank({}) == 0);
    CHECK(rational_matrix_rank({Row{0, 0}, Row{0, 0}}) == 0);
    CHECK(rational_matrix_rank({Row{1, 0, 0}, Row{0, 1, 0}, Row{0, 0, 1}}) == 3);
    CHECK(rational_matrix_rank({Row{1, 2}, Row{2, 4}}) == 1);
    CHECK(rational_matrix_rank({Row{Rational(1, 2), 1}, Row{1, 2}, Row{0, 1}}) == 2);
}

TEST_CASE("independence evidence at small degrees") {
    const VerificationReport deg0 = independence_evidence(0, Rational(2));
    CHECK(deg0.all_passed());
    CHECK(deg0.checks().front().note == "rank 1 of 1 monomial images");

    const VerificationReport deg2 = independence_evidence(2, Rational(2));
    CHECK(deg2.all_passed());
    CHECK(deg2.checks().front().note == "rank 4 of 4 monomial images");

    for (int d = 0; d <= 4; ++d) {
        CHECK(independence_evidence(d, Rational(2)).all_passed());
    }
}

TEST_CASE("independence evidence guards its evaluation point") {
    CHECK_THROWS_AS(independence_evidence(2, Rational(0)), ZeroEvaluationPoint);
    const VerificationReport at_one = independence_evidence(2, Rational(1));
    CHECK(at_one.inconclusive_count() == 1);
    const VerificationReport at_minus_one = independence_evidence(2, Rational(-1));
    CHECK(at_minus_one.inconclusive_count() == 1);
}
