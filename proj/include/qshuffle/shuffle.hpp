#pragma once

/**
 * @file shuffle.hpp
 * @brief The q-shuffle product on V (the two-generator case).
 *
 * For letters u, v the product is u * v = uv + q^{<u,v>} vu with pairing
 * <u,u> = 2 and <u,v> = -2 for u != v. On general words it is defined by the
 * insertion sums for a letter against a word and by two mirrored recursions
 * (on the leading letter and on the trailing letter); both are implemented
 * here and must agree. The leading-letter recursion, memoized on word pairs,
 * is the primary code path: verification sweeps recompute many shared
 * subproducts, and the memo turns those into table lookups.
 */

#include "qshuffle/algelt.hpp"
#include "qshuffle/report.hpp"
#include "qshuffle/word.hpp"

namespace qshuffle {

/// <u,v> = 2 if u == v else -2.
constexpr int pairing(Letter u, Letter v) { return u == v ? 2 : -2; }

enum class Side { left, right };

/**
 * Letter-by-word product by the insertion sum. Side::left computes u * v =
 * sum_i v_1..v_i u v_{i+1}..v_n q^{<v_1,u>+...+<v_i,u>}; Side::right the
 * mirrored sum for v * u.
 */
AlgElt shuffle_letter(Letter u, const Word& v, Side side);

/// Word-by-word product via the leading-letter recursion (memoized).
AlgElt shuffle_words(const Word& u, const Word& v);

/// Word-by-word product via the trailing-letter recursion. Kept structurally
/// independent of shuffle_words so the two can be checked against each other.
AlgElt shuffle_words_tail(const Word& u, const Word& v);

/// Bilinear extension of shuffle_words.
AlgElt shuffle(const AlgElt& u, const AlgElt& v);

/// Bilinear extension of shuffle_words_tail.
AlgElt shuffle_via_tail(const AlgElt& u, const AlgElt& v);

/**
 * Memo-table controls. The table is guarded by a mutex; concurrent shuffle
 * calls return identical values regardless of interleaving. When an insert
 * would grow the table past the cap, the whole table is reset first.
 */
void set_shuffle_memo_cap(std::size_t max_entries);
std::size_t shuffle_memo_entry_count();
void clear_shuffle_memo();

/**
 * Checks that x and y satisfy the q-Serre relations in the q-shuffle algebra:
 * x*x*x*y - [3]_q x*x*y*x + [3]_q x*y*x*x - y*x*x*x = 0 and the x <-> y
 * mirror. The report carries the residual on failure.
 */
VerificationReport qserre_check();

}  // namespace qshuffle
