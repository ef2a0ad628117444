#pragma once

/**
 * @file algelt.hpp
 * @brief Elements of the free algebra V on x, y in the standard word basis.
 *
 * An AlgElt is a finitely supported map Word -> LaurentPoly. The bilinear
 * form ( , ) making the standard basis orthonormal is coeff(): (w, v) is the
 * stored coefficient of w in v. Concatenation is the free-algebra product;
 * the q-shuffle product lives in shuffle.hpp.
 */

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qshuffle/laurent.hpp"
#include "qshuffle/word.hpp"

namespace qshuffle {

class AlgElt {
public:
    AlgElt() = default;

    /// The multiplicative identity (the trivial word with coefficient 1).
    static AlgElt unit() { return from_word(Word()); }
    static AlgElt from_word(const Word& w, LaurentPoly c = LaurentPoly::one());

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// The bilinear-form coefficient (w, *this); zero when w is unsupported.
    LaurentPoly coeff(const Word& w) const;
    bool supports(const Word& w) const { return terms_.count(w) != 0; }

    /// Accumulate c onto the coefficient of w, dropping the term if it cancels.
    void add_term(const Word& w, const LaurentPoly& c);

    AlgElt& operator+=(const AlgElt& rhs);
    AlgElt& operator-=(const AlgElt& rhs);
    AlgElt operator-() const;
    friend AlgElt operator+(AlgElt a, const AlgElt& b) { return a += b; }
    friend AlgElt operator-(AlgElt a, const AlgElt& b) { return a -= b; }

    /// Coefficient-wise scaling.
    AlgElt scaled(const LaurentPoly& s) const;
    AlgElt scaled(const Int& s) const;
    /// Multiplies every coefficient by q^k.
    AlgElt shifted(Expo k) const;
    /// Coefficient-wise exact division; NonExactDivision propagates.
    AlgElt divided_exact(const LaurentPoly& d) const;

    /// a -> (letter a) concatenated onto every word.
    AlgElt prepended(Letter a) const;
    AlgElt appended(Letter a) const;

    /// Structural equality of canonical forms.
    bool operator==(const AlgElt& rhs) const;
    bool operator!=(const AlgElt& rhs) const { return !(*this == rhs); }

    /// Terms in canonical order (length, then lexicographic with x < y).
    std::vector<std::pair<Word, LaurentPoly>> sorted_terms() const;
    std::vector<Word> support() const;

    /// True when every supported word has the given bidegree.
    bool is_homogeneous(int xcount, int ycount) const;

    const std::unordered_map<Word, LaurentPoly, WordHash>& terms() const { return terms_; }

    std::string str() const;
    std::string latex() const;
    nlohmann::json to_json() const;
    static AlgElt from_json(const nlohmann::json& j);

private:
    std::unordered_map<Word, LaurentPoly, WordHash> terms_;
};

/// Free-algebra (concatenation) product, extended bilinearly.
AlgElt concat(const AlgElt& u, const AlgElt& v);

/// The antiautomorphism of V that swaps x and y: reverses every word,
/// swaps its letters, and keeps coefficients. An involution.
AlgElt zeta(const AlgElt& v);

}  // namespace qshuffle
