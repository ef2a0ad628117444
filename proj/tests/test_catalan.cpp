#include "doctest.h"
#include "qshuffle/catalan.hpp"
#include "test_helpers.hpp"

using namespace qshuffle;
using namespace qshuffle::testing;

namespace {

Profile P(std::vector<int> entries) {
    return Profile(std::move(entries));
}

}  // namespace

TEST_CASE("balanced and Catalan predicates") {
    CHECK(is_catalan(W("xy")));
    CHECK(is_balanced(W("yx")));
    CHECK(!is_catalan(W("yx")));
    CHECK(is_catalan(W("1")));
    CHECK(!is_balanced(W("xxy")));
    CHECK(is_catalan(W("xxyyxy")));
}

TEST_CASE("Catalan word enumeration") {
    const std::vector<long> catalan_numbers{1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int n = 0; n <= 8; ++n) {
        const auto words = enumerate_catalan(n);
        CHECK(static_cast<long>(words.size()) == catalan_numbers[static_cast<std::size_t>(n)]);
        for (const Word& w : words) {
            CHECK(is_catalan(w));
            CHECK(w.length() == static_cast<std::uint32_t>(2 * n));
        }
        CHECK(std::is_sorted(words.begin(), words.end(), canonical_less));
    }
    CHECK(enumerate_catalan(0) == std::vector<Word>{W("1")});
    CHECK(enumerate_catalan(2) == std::vector<Word>{W("xxyy"), W("xyxy")});
    CHECK(enumerate_catalan(3) == std::vector<Word>{W("xxxyyy"), W("xxyxyy"), W("xxyyxy"),
                                                    W("xyxxyy"), W("xyxyxy")});
}

TEST_CASE("elevation sequences") {
    CHECK(elevation(W("xyxyxy")) == Elevation{0, 1, 0, 1, 0, 1, 0});
    CHECK(elevation(W("xxxyyy")) == Elevation{0, 1, 2, 3, 2, 1, 0});
    CHECK(elevation(W("xy")) == Elevation{0, 1, 0});
    CHECK(elevation(W("1")) == Elevation{0});
    CHECK_THROWS_AS(elevation(W("yx")), NotCatalan);
    CHECK_THROWS_AS(elevation(W("xxy")), NotCatalan);
}

TEST_CASE("profiles of the length-6 Catalan words") {
    CHECK(profile(W("xyxyxy")) == P({0, 1, 0, 1, 0, 1, 0}));
    CHECK(profile(W("xyxxyy")) == P({0, 1, 0, 2, 0}));
    CHECK(profile(W("xxyyxy")) == P({0, 2, 0, 1, 0}));
    CHECK(profile(W("xxyxyy")) == P({0, 2, 1, 2, 0}));
    CHECK(profile(W("xxxyyy")) == P({0, 3, 0}));
    CHECK(profile(W("1")) == Profile());
    CHECK(profile(W("1")).r() == 0);
}

TEST_CASE("profile validity conditions") {
    CHECK(P({0, 2, 0, 1, 0}).valid());
    CHECK(P({0}).valid());
    CHECK(P({0, 1, 1}).violation() == "(iii) l_r = 0");
    CHECK(P({0, 1, 1, 2, 0}).violation() == "(v) h_i > l_i");
    CHECK(P({0, 2, 1, 1, 0}).violation() == "(iv) l_{i-1} < h_i");
    CHECK(P({1, 2, 0}).violation() == "(i) l_0 = 0");
    CHECK_THROWS_AS(P({0, 1}), InvalidProfile);
}

TEST_CASE("profile to word") {
    CHECK(profile_to_word(P({0, 2, 0, 1, 0})) == W("xxyyxy"));
    CHECK(profile_to_word(P({0, 1, 0})) == W("xy"));
    CHECK(profile_to_word(Profile()) == W("1"));
    CHECK_THROWS_AS(profile_to_word(P({0, 1, 1, 2, 0})), InvalidProfile);
    CHECK_THROWS_WITH_AS(profile_to_word(P({0, 1, 1})), doctest::Contains("(iii)"),
                         InvalidProfile);
}

TEST_CASE("profile half-length") {
    CHECK(profile_halflength(P({0, 3, 0})) == 3);
    CHECK(profile_halflength(P({0, 2, 1, 2, 0})) == 3);
    CHECK(profile_halflength(Profile()) == 0);
    CHECK_THROWS_AS(profile_halflength(P({0, 1, 1})), InvalidProfile);
}

TEST_CASE("profile round trip on all Catalan words up to half-length 8") {
    for (int n = 0; n <= 8; ++n) {
        for (const Word& w : enumerate_catalan(n)) {
            const Profile p = profile(w);
            CHECK(p.valid());
            CHECK(profile_to_word(p) == w);
            CHECK(profile_halflength(p) == n);
        }
    }
}

TEST_CASE("coefficient by elevation") {
    CHECK(cw_elevation(W("xxyy")) == qint(3) * qint(2) * qint(2));
    CHECK(cw_elevation(W("xxxyyy")) == qint(4) * qint(3) * qint(3) * qint(2) * qint(2));
    CHECK(cw_elevation(W("1")) == LaurentPoly::one());
    CHECK_THROWS_AS(cw_elevation(W("yx")), NotCatalan);
}

TEST_CASE("coefficient by profile") {
    CHECK(cw_profile(P({0, 2, 0})) == qint(3) * qint(2) * qint(2));
    CHECK(cw_profile(P({0, 3, 0})) == qint(4) * qint(3) * qint(3) * qint(2) * qint(2));
    CHECK(cw_profile(P({0, 1, 0})) == qint(2));
    CHECK(cw_profile(Profile()) == LaurentPoly::one());
    // arbitrary natural sequences are allowed but may fail exactness
    CHECK_THROWS_AS(cw_profile(P({1, 0, 1})), NonExactDivision);
    CHECK_THROWS_AS(cw_profile(P({0, 2, -1})), InvalidProfile);
}

TEST_CASE("the two coefficient formulas agree") {
    for (int n = 0; n <= 8; ++n) {
        for (const Word& w : enumerate_catalan(n)) {
            CHECK(cw_elevation(w) == cw_profile(profile(w)));
        }
    }
}

TEST_CASE("Catalan elements match their displayed expansions") {
    CHECK(catalan_element(0) == AlgElt::unit());
    CHECK(catalan_element(1) == term("xy", qint(2)));

    const LaurentPoly two = qint(2);
    const LaurentPoly three = qint(3);
    CHECK(catalan_element(2) ==
          term("xyxy", two * two) + term("xxyy", three * two * two));

    const LaurentPoly two3 = two * two * two;
    CHECK(catalan_element(3) ==
          term("xyxyxy", two3) + term("xxyyxy", three * two3) + term("xyxxyy", three * two3) +
              term("xxyxyy", three * three * two3) +
              term("xxxyyy", qint(4) * three * three * two * two));
}

TEST_CASE("zeta fixes the Catalan elements") {
    for (int n = 0; n <= 8; ++n) {
        const AlgElt c = catalan_element(n);
        CHECK(zeta(c) == c);
    }
}

TEST_CASE("Catalan elements are homogeneous of bidegree (n, n)") {
    for (int n = 0; n <= 8; ++n) {
        CHECK(catalan_element(n).is_homogeneous(n, n));
    }
}

TEST_CASE("profile summation identity") {
    CHECK(tech1_check(P({0, 1, 0})).all_passed());
    CHECK(tech1_check(P({0, 3, 0})).all_passed());
    CHECK(tech1_check(P({0, 2, 1, 2, 0})).all_passed());
    // the smallest case reduces to C(0,0,0) [2]_q = [2]_q
    CHECK(cw_profile(P({0, 0, 0})) * qint(2) == cw_profile(P({0, 1, 0})));
    // and the (0,3,0) case to C(0,2,0) ([2]+[4]+[6])
    CHECK(cw_profile(P({0, 2, 0})) * (qint(2) + qint(4) + qint(6)) == cw_profile(P({0, 3, 0})));
    CHECK_THROWS_AS(tech1_check(Profile()), InvalidProfile);
    CHECK_THROWS_AS(tech1_check(P({0, 1, 1})), InvalidProfile);
}

TEST_CASE("profile summation identity sweeps half-lengths up to 6") {
    for (int n = 1; n <= 6; ++n) {
        for (const Word& w : enumerate_catalan(n)) {
            const VerificationReport r = tech1_check(profile(w));
            CHECK(r.all_passed());
        }
    }
}

TEST_CASE("catalan_profiles covers small half-lengths") {
    const auto profiles = catalan_profiles(3);
    CHECK(profiles.size() == 1 + 1 + 2 + 5);
    for (const Profile& p : profiles) {
        CHECK(p.valid());
    }
}
