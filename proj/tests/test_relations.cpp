#include <sstream>

#include "doctest.h"
#include "qshuffle/relations.hpp"
#include "qshuffle/shuffle.hpp"
#include "test_helpers.hpp"

using namespace qshuffle;
using namespace qshuffle::testing;

TEST_CASE("bracket expansion of the trivial word") {
    // single i = 0 term: q^-1 [2]_q xy
    CHECK(balanced_bracket_lhs(W("1")) == term("xy", qint(2).shifted(-1)));
}

TEST_CASE("balanced insertion lemma on small words") {
    CHECK(verify_balanced_lemma(W("1")).all_passed());
    CHECK(verify_balanced_lemma(W("xy")).all_passed());
    CHECK(verify_balanced_lemma(W("yx")).all_passed());
    // partial bar-sums go negative here, exercising the odd extension of [n]_q
    CHECK(verify_balanced_lemma(W("yyxx")).all_passed());
    CHECK_THROWS_AS(verify_balanced_lemma(W("x")), NotBalanced);
}

TEST_CASE("balanced insertion lemma sweep up to length 6") {
    for (int len = 0; len <= 6; len += 2) {
        for (const Word& v : enumerate_balanced(len)) {
            CHECK(verify_balanced_lemma(v).all_passed());
        }
    }
}

TEST_CASE("bracket expansion of a Catalan word is supported on Catalan words") {
    CHECK(verify_catalan_support(W("1")).all_passed());
    CHECK(balanced_bracket_lhs(W("1")).support() == std::vector<Word>{W("xy")});
    const AlgElt lhs = balanced_bracket_lhs(W("xy"));
    for (const Word& w : lhs.support()) {
        CHECK(is_catalan(w));
        CHECK(w.length() == 4);
    }
    for (int n = 0; n <= 3; ++n) {
        for (const Word& v : enumerate_catalan(n)) {
            CHECK(verify_catalan_support(v).all_passed());
        }
    }
    CHECK_THROWS_AS(verify_catalan_support(W("yx")), NotCatalan);
}

TEST_CASE("coefficient recursion through the bracket expansion") {
    CHECK(verify_aver(1).all_passed());
    CHECK(verify_aver(2).all_passed());
    CHECK(verify_aver(3).all_passed());
    CHECK_THROWS_AS(verify_aver(0), std::invalid_argument);
}

TEST_CASE("Catalan elements commute at small indices") {
    const VerificationReport r = verify_commutation(3);
    CHECK(r.all_passed());
    CHECK(r.size() == 3);  // (1,2), (1,3), (2,3)
}

TEST_CASE("the mixed product identity at (0,0), by hand") {
    // q^-1 C_1 = (q x*y - q^-1 y*x) / (q - q^-1); both sides are q^-1 [2]_q xy
    const AlgElt num = shuffle(aw("x"), aw("y")).shifted(1) - shuffle(aw("y"), aw("x")).shifted(-1);
    const AlgElt lhs = num.divided_exact(LaurentPoly::q_power(1) - LaurentPoly::q_power(-1));
    CHECK(lhs == term("xy", qint(2).shifted(-1)));
    CHECK(lhs == catalan_element(1).shifted(-1));
}

TEST_CASE("generator-relation identities at small indices") {
    const VerificationReport r = verify_section3(2, 2);
    CHECK(r.all_passed());
    CHECK(r.fail_count() == 0);
}

TEST_CASE("zeta action on the PBW images") {
    CHECK(verify_zeta_pbw(3).all_passed());
}

TEST_CASE("q-integer sum identity suite") {
    const VerificationReport r = verify_qint_sums(12);
    CHECK(r.all_passed());
    CHECK(r.size() == 13 + (13 * 12) / 2);
}

TEST_CASE("an off-by-one elevation corruption is detected") {
    for (int n = 1; n <= 3; ++n) {
        AlgElt corrupted;
        for (const Word& w : enumerate_catalan(n)) {
            LaurentPoly c = LaurentPoly::one();
            for (int e : elevation(w)) {
                c *= qint(2 + e);  // off by one
            }
            corrupted.add_term(w, c);
        }
        CHECK(zero_check("corruption", "", corrupted - catalan_element(n)).status ==
              CheckStatus::fail);
    }
}

TEST_CASE("verify_all with a small configuration") {
    VerifyConfig config;
    config.theorem_nmax = 2;
    config.tech1_halflength = 3;
    config.sum_identity_nmax = 6;
    config.balanced_maxlen = 4;
    config.support_nmax = 2;
    config.aver_nmax = 2;
    config.commutation_imax = 2;
    config.section3_imax = 1;
    config.section3_jmax = 1;
    config.zeta_nmax = 2;
    const VerificationReport r = verify_all(config);
    CHECK(r.all_passed());
    CHECK(!r.vacuous());
    // deterministic ordering
    const auto& checks = r.checks();
    for (std::size_t i = 1; i < checks.size(); ++i) {
        const bool ordered = checks[i - 1].identity < checks[i].identity ||
                             (checks[i - 1].identity == checks[i].identity &&
                              checks[i - 1].params <= checks[i].params);
        CHECK(ordered);
    }
}

TEST_CASE("the full default verification suite passes") {
    const VerificationReport r = verify_all(VerifyConfig::defaults());
    CHECK(r.all_passed());
    CHECK(r.fail_count() == 0);
    CHECK(r.inconclusive_count() == 0);
    CHECK(r.size() > 500);
}

TEST_CASE("verify_all with the empty configuration is vacuous") {
    const VerificationReport r = verify_all(VerifyConfig::none());
    CHECK(r.vacuous());
    CHECK(r.size() == 0);
    CHECK(r.all_passed());
    std::ostringstream os;
    r.print(os);
    CHECK(os.str() == "no checks run (vacuous pass)\n");
}

TEST_CASE("reports serialize to JSON lines") {
    VerificationReport r = verify_commutation(2);
    r.merge(qserre_check());
    r.sort_canonical();
    std::ostringstream os;
    r.write_jsonl(os);
    std::istringstream is(os.str());
    std::string line;
    std::size_t lines = 0;
    while (std::getline(is, line)) {
        const nlohmann::json j = nlohmann::json::parse(line);
        CHECK(j.contains("identity"));
        CHECK(j.contains("params"));
        CHECK(j["status"] == "pass");
        CHECK(j.contains("elapsed_ms"));
        ++lines;
    }
    CHECK(lines == r.size());
}

TEST_CASE("failed checks carry their residual") {
    const CheckResult bad =
        equality_check("demo", "", term("xy", qint(2)), term("xy", qint(3)));
    CHECK(bad.status == CheckStatus::fail);
    CHECK(bad.residual == term("xy", qint(2) - qint(3)));
    VerificationReport r;
    r.add(bad);
    std::ostringstream os;
    r.write_jsonl(os);
    const nlohmann::json j = nlohmann::json::parse(os.str());
    CHECK(j["status"] == "fail");
    CHECK(j.contains("residual"));
}
