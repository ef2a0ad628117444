#pragma once

/**
 * @file relations.hpp
 * @brief Batch verification of the identities satisfied by the Catalan
 *        elements in the q-shuffle algebra.
 *
 * Every identity is checked by exact coefficient equality in V. Where a
 * statement is displayed with a division, the division is performed with
 * exact_div and a failed division is reported as an identity failure rather
 * than a crash. Empty summation ranges contribute the zero element.
 */

#include "qshuffle/algelt.hpp"
#include "qshuffle/catalan.hpp"
#include "qshuffle/report.hpp"

namespace qshuffle {

/// (q x * (vy) - q^-1 (vy) * x) / (q - q^-1), the bracket whose insertion
/// expansion drives the Catalan coefficient recursion.
AlgElt balanced_bracket_lhs(const Word& v);

/**
 * For a balanced word v = a_1...a_m, checks that balanced_bracket_lhs(v)
 * equals q^-1 sum_{i=0}^m a_1..a_i x a_{i+1}..a_m y [2 + 2(a_1+...+a_i)]_q
 * (bars in the bracket). Throws NotBalanced.
 */
VerificationReport verify_balanced_lemma(const Word& v);

/// For Catalan v, checks that the support of balanced_bracket_lhs(v)
/// consists of Catalan words only. Throws NotCatalan.
VerificationReport verify_catalan_support(const Word& v);

/// For n >= 1, checks C(w) = q sum_{v in Cat_{n-1}} C(v) (bracket_lhs(v), w)
/// for every w in Cat_n.
VerificationReport verify_aver(int n);

/// Checks C_i * C_j = C_j * C_i for all 1 <= i < j <= imax.
VerificationReport verify_commutation(int imax);

/**
 * Checks every Catalan-element identity obtained from the PBW generator
 * relations: the mixed product giving q^-1 C_{i+j+1}; the two
 * delta-commutation sum identities; the odd and even difference cases
 * (the even case is verified with denominators cleared, since its two
 * displayed fractions need not individually have Laurent coefficients);
 * the alternate forms; and the q-commutation pairs.
 */
VerificationReport verify_section3(int imax, int jmax);

/// zeta fixes the delta-family images and swaps the alpha-family images.
VerificationReport verify_zeta_pbw(int nmax);

/// sum_{t=1}^n [2t] = [n][n+1] and its windowed version, for bounds <= nmax.
VerificationReport verify_qint_sums(int nmax);

struct VerifyConfig {
    bool serre = true;
    int theorem_nmax = 5;
    int tech1_halflength = 6;
    int sum_identity_nmax = 20;
    int balanced_maxlen = 8;
    int support_nmax = 4;
    int aver_nmax = 5;
    int commutation_imax = 5;
    int section3_imax = 3;
    int section3_jmax = 3;
    int zeta_nmax = 5;

    static VerifyConfig defaults() { return VerifyConfig{}; }
    /// Everything disabled; verify_all returns a vacuous report.
    static VerifyConfig none();
};

/// Runs every suite enabled by the config and aggregates the results in
/// deterministic order. A config with all bounds zero yields a vacuous pass.
VerificationReport verify_all(const VerifyConfig& config);

}  // namespace qshuffle
