#pragma once

/**
 * @file laurent.hpp
 * @brief Exact arithmetic in the ring Z[q, q^-1] of integer Laurent polynomials.
 *
 * This is the coefficient ring for everything else in the library: q-integers
 * [n]_q, q-factorials [n]!_q, and the scalars q - q^-1, q + q^-1 all live here.
 * Coefficients are arbitrary-precision integers; there is no floating point
 * and no rational-function arithmetic. Division is provided only as exact
 * division (the quotient must exist in the Laurent ring itself).
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace qshuffle {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Expo = std::int64_t;

/// Thrown by exact_div when the quotient does not exist in Z[q, q^-1].
struct NonExactDivision : std::runtime_error {
    explicit NonExactDivision(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a Laurent polynomial is evaluated at q = 0.
struct ZeroEvaluationPoint : std::runtime_error {
    ZeroEvaluationPoint() : std::runtime_error("cannot evaluate a Laurent polynomial at q = 0") {}
};

/**
 * An element of Z[q, q^-1] in canonical form: terms sorted by exponent,
 * no zero coefficients stored. Equality is structural, which makes it exact
 * term-by-term equality of the canonical forms.
 *
 * Values are immutable in spirit: every operation returns a new value or
 * rebuilds the canonical form, so instances may be shared across threads.
 */
class LaurentPoly {
public:
    using Term = std::pair<Expo, Int>;

    LaurentPoly() = default;
    explicit LaurentPoly(Int constant);
    explicit LaurentPoly(long long constant) : LaurentPoly(Int(constant)) {}

    /// c * q^e
    static LaurentPoly monomial(Int c, Expo e);
    /// q^e
    static LaurentPoly q_power(Expo e) { return monomial(Int(1), e); }
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(Int(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// Coefficient of q^e (zero when absent).
    Int coeff(Expo e) const;
    /// Lowest/highest exponent; both require a nonzero polynomial.
    Expo min_exp() const;
    Expo max_exp() const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Int& scalar);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Int& s) { return a *= s; }
    friend LaurentPoly operator*(const Int& s, LaurentPoly a) { return a *= s; }

    /// this * q^k (exponent shift).
    LaurentPoly shifted(Expo k) const;
    LaurentPoly pow(unsigned n) const;

    bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    /// Exact value at q = q0. q0 must be nonzero (negative exponents).
    Rational eval_at(const Rational& q0) const;

    /// Human-readable form, highest exponent first, e.g. "q^2 - 2 + q^-2".
    std::string str() const;
    /// LaTeX form of the raw polynomial, e.g. "q^{2}-2+q^{-2}".
    std::string latex() const;

    /// JSON object mapping decimal exponent strings to decimal coefficient
    /// strings, e.g. {"-2":"1","0":"2","2":"1"}.
    nlohmann::json to_json() const;
    static LaurentPoly from_json(const nlohmann::json& j);

private:
    // ascending exponent, no zero coefficients
    std::vector<Term> terms_;
};

/**
 * The q-integer [n]_q = (q^n - q^-n) / (q - q^-1).
 *
 * [0]_q = 0, [1]_q = 1, [2]_q = q + q^-1, and generally a symmetric sum of
 * n powers of q. The defining formula is odd in n, so negative arguments are
 * accepted with [-n]_q = -[n]_q; negative arguments arise from the bracket
 * sums attached to balanced (not necessarily Catalan) words.
 */
LaurentPoly qint(long long n);

/// The q-factorial [n]!_q = [n]_q [n-1]_q ... [1]_q, with [0]!_q = 1. Requires n >= 0.
LaurentPoly qfact(int n);

/**
 * Exact division in Z[q, q^-1]: returns c with c * d == p, when such c exists.
 *
 * Both operands are shifted to ordinary polynomials (multiplied by a power of
 * q), then integer polynomial long division runs with a divisibility check at
 * every step; a failed step or a nonzero remainder raises NonExactDivision.
 * Requires d != 0.
 */
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d);

/// Exact value of p at q = q0; throws ZeroEvaluationPoint when q0 == 0.
Rational eval_rational(const LaurentPoly& p, const Rational& q0);

/**
 * Attempt to write a nonzero polynomial as sign * q^shift * prod [n_i]_q
 * (used by the LaTeX renderer to mirror bracket notation). The factor list is
 * in descending order; empty means the value is just sign * q^shift.
 */
struct QIntFactorization {
    int sign = 1;
    Expo shift = 0;
    std::vector<int> brackets;
};
bool try_qint_factorization(const LaurentPoly& p, QIntFactorization& out);

/// Signed LaTeX for a coefficient in bracket notation when possible,
/// e.g. "-q^{-2}[3]_q[2]_q^{2}"; falls back to the parenthesized raw form.
std::string latex_brackets(const LaurentPoly& p);

}  // namespace qshuffle
