#pragma once

/**
 * @file catalan.hpp
 * @brief Catalan words, elevation sequences, profiles, and Catalan elements.
 *
 * A word is balanced when its letter bars sum to zero, and Catalan when in
 * addition every partial bar-sum is nonnegative (a Dyck word in x, y). The
 * elevation sequence of a Catalan word lists its running partial sums; its
 * profile (l_0, h_1, l_1, ..., h_r, l_r) is the elevation sequence with the
 * interior monotone points deleted, i.e. the alternating valley and peak
 * heights. The coefficient C(w) attached to a Catalan word is computed two
 * independent ways: as a product of q-integers along the elevation sequence,
 * and as a double ratio of q-factorials over the profile. The n-th Catalan
 * element is C_n = sum over Catalan words w of length 2n of w C(w).
 */

#include <vector>

#include "qshuffle/algelt.hpp"
#include "qshuffle/report.hpp"
#include "qshuffle/word.hpp"

namespace qshuffle {

struct NotBalanced : std::runtime_error {
    explicit NotBalanced(const std::string& what) : std::runtime_error(what) {}
};

struct NotCatalan : std::runtime_error {
    explicit NotCatalan(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidProfile : std::runtime_error {
    explicit InvalidProfile(const std::string& what) : std::runtime_error(what) {}
};

bool is_balanced(const Word& w);
bool is_catalan(const Word& w);

/// All Catalan words of length 2n, in canonical order; the count is the n-th
/// Catalan number.
std::vector<Word> enumerate_catalan(int n);

/// All balanced words of the given (even) length, in canonical order.
std::vector<Word> enumerate_balanced(int length);

/// Elevation sequence (e_0, ..., e_2n) of partial bar-sums; requires Catalan.
using Elevation = std::vector<int>;
Elevation elevation(const Word& w);

/**
 * An integer sequence (l_0, h_1, l_1, ..., h_r, l_r), r >= 0. Stored flat
 * with odd length; the r = 0 sequence (0) belongs to the trivial word. A
 * sequence is a Catalan profile when (i) l_0 = 0, (ii) l_i >= 0 for interior
 * i, (iii) l_r = 0, (iv) l_{i-1} < h_i, (v) h_i > l_i.
 */
class Profile {
public:
    /// The r = 0 profile (0).
    Profile() : entries_{0} {}
    /// Any odd-length integer sequence; validity is checked separately.
    explicit Profile(std::vector<int> entries);

    int r() const { return static_cast<int>(entries_.size() / 2); }
    int ell(int i) const { return entries_[2 * static_cast<std::size_t>(i)]; }
    int h(int i) const { return entries_[2 * static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& entries() const { return entries_; }

    /// Empty when this is a Catalan profile, else names the violated condition.
    std::string violation() const;
    bool valid() const { return violation().empty(); }

    std::string str() const;
    bool operator==(const Profile& o) const { return entries_ == o.entries_; }
    bool operator!=(const Profile& o) const { return !(*this == o); }

private:
    std::vector<int> entries_;
};

/// Profile of a Catalan word (delete interior elevation points whose
/// neighboring differences share a sign). Requires Catalan.
Profile profile(const Word& w);

/// The unique Catalan word with the given profile:
/// x^{h_1} y^{h_1-l_1} x^{h_2-l_1} y^{h_2-l_2} ... x^{h_r-l_{r-1}} y^{h_r}.
Word profile_to_word(const Profile& p);

/// Half-length n = sum_i (h_i - l_i) of the word with this profile.
int profile_halflength(const Profile& p);

/// C(w) as the product over the elevation sequence of [1 + e_i]_q.
LaurentPoly cw_elevation(const Word& w);

/**
 * C as a double ratio of q-factorials over a profile-shaped sequence:
 * (prod [h_i]! / prod [l_i]!) * (prod [h_i+1]! / prod [l_i+1]!).
 * Defined for any sequence of natural numbers; the division must be exact
 * (it always is for Catalan profiles) and NonExactDivision surfaces
 * otherwise.
 */
LaurentPoly cw_profile(const Profile& p);

/// The n-th Catalan element C_n (memoized; C_0 = 1).
AlgElt catalan_element(int n);

/// All Catalan profiles of half-length <= max_halflength, canonical word order.
std::vector<Profile> catalan_profiles(int max_halflength);

/**
 * Checks the profile summation identity for a Catalan profile with r >= 1:
 * C(p) equals the sum over i from xi to r-1 of C(p with every peak/valley
 * past position i lowered by one) times sum_{t=l_i+1}^{h_{i+1}} [2t]_q,
 * where xi is the last interior index with l_i = 0.
 */
VerificationReport tech1_check(const Profile& p);

}  // namespace qshuffle
