#pragma once

/**
 * @file pbw.hpp
 * @brief Images in V of the PBW generators of U_q^+ under the embedding
 *        that sends the two presentation generators to x and y.
 *
 * The three families E_{n delta + alpha_0}, E_{n delta + alpha_1}, E_{n delta}
 * are computed inside V two ways: by their defining recursion (all products
 * are q-shuffle products, with exact division by [2]_q for the bracket
 * steps), and by the closed forms built from Catalan elements:
 *
 *   E_{n delta + alpha_0} -> q^{-2n} (q - q^{-1})^{2n} xC_n
 *   E_{n delta + alpha_1} -> q^{-2n} (q - q^{-1})^{2n} C_n y
 *   E_{n delta}          -> -q^{-2n} (q - q^{-1})^{2n-1} C_n
 *
 * where xC_n and C_n y are concatenation products. The abstract algebra
 * U_q^+ is never represented: the embedding is injective, so equality in V
 * is a faithful proxy for every identity checked here.
 */

#include <vector>

#include "qshuffle/algelt.hpp"
#include "qshuffle/catalan.hpp"
#include "qshuffle/report.hpp"

namespace qshuffle {

enum class PBWKind { alpha0, delta, alpha1 };

/**
 * Label of a PBW generator. Valid indices: n >= 0 for the alpha kinds,
 * n >= 1 for the delta kind. The linear order is: alpha_0 family ascending,
 * then the delta family ascending, then the alpha_1 family descending.
 */
struct PBWLabel {
    PBWKind kind;
    int n;

    PBWLabel(PBWKind k, int index);
    static PBWLabel a0(int n) { return PBWLabel(PBWKind::alpha0, n); }
    static PBWLabel a1(int n) { return PBWLabel(PBWKind::alpha1, n); }
    static PBWLabel d(int n) { return PBWLabel(PBWKind::delta, n); }

    /// Total letter count of the image: 2n+1 for alpha kinds, 2n for delta.
    int letter_count() const;

    std::string str() const;

    bool operator==(const PBWLabel& o) const { return kind == o.kind && n == o.n; }
    bool operator!=(const PBWLabel& o) const { return !(*this == o); }
    bool operator<(const PBWLabel& o) const;
};

struct PBWImage {
    PBWLabel label;
    AlgElt value;
};

/// Expected bidegree of the image: (n+1, n), (n, n+1) or (n, n).
std::pair<int, int> pbw_bidegree(const PBWLabel& label);

/// Image computed by the defining recursion (memoized by label). A failed
/// exact division by [2]_q would propagate as NonExactDivision; it cannot
/// occur when the recursion is transcribed correctly.
PBWImage pbw_image_recursive(const PBWLabel& label);

/// Image built from the closed form (Catalan element with scalar prefactor).
PBWImage pbw_image_closed(const PBWLabel& label);

/// E_{n delta} via the alternate recursion through the alpha_0 family:
/// q^{-2} y * E_{(n-1) delta + alpha_0} - E_{(n-1) delta + alpha_0} * y.
AlgElt pbw_image_delta_alt(int n);

/**
 * Checks recursive == closed for all three families up to index nmax, and
 * the four bracket recurrences satisfied by the Catalan elements (each with
 * an exact division by q - q^{-1}).
 */
VerificationReport verify_main_theorem(int nmax);

/// An ordered PBW monomial (weakly increasing labels) and its image in V.
struct PBWMonomial {
    std::vector<PBWLabel> labels;
    AlgElt image;
};

/// All PBW monomials whose image has the given total letter count, with the
/// empty product (the unit) at degree 0.
std::vector<PBWMonomial> pbw_monomials(int total_degree);

/**
 * Linear-independence evidence for the monomial images at one total degree:
 * evaluates the coefficient matrix at q = q0 and computes its exact rational
 * rank. Full rank certifies independence over the rational-function field;
 * a rank deficit is reported as inconclusive (retry with a different q0),
 * as is a q0 from the degenerate list {1, -1}. q0 = 0 raises
 * ZeroEvaluationPoint.
 */
VerificationReport independence_evidence(int total_degree, const Rational& q0);

/// Exact rank of a rational matrix by Gaussian elimination with bit-length
/// partial pivoting. Exposed for direct testing.
std::size_t rational_matrix_rank(std::vector<std::vector<Rational>> rows);

}  // namespace qshuffle
