#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace qshuffle {

/// The two-letter alphabet. bar(x) = +1, bar(y) = -1.
enum class Letter : std::uint8_t { X = 0, Y = 1 };

constexpr int bar(Letter a) { return a == Letter::X ? 1 : -1; }
constexpr Letter swapped(Letter a) { return a == Letter::X ? Letter::Y : Letter::X; }
constexpr char letter_char(Letter a) { return a == Letter::X ? 'x' : 'y'; }

/**
 * A word over {x, y}, bit-packed (one bit per letter, x = 0, y = 1) so that
 * words can serve as cheap hash-map keys. Maximum length 64. The empty word
 * is the multiplicative identity of the free algebra and prints as "1".
 */
class Word {
public:
    static constexpr std::uint32_t max_length = 64;

    Word() = default;

    std::uint32_t length() const { return len_; }
    bool trivial() const { return len_ == 0; }

    Letter at(std::uint32_t i) const { return static_cast<Letter>((bits_ >> i) & 1u); }
    Letter front() const { return at(0); }
    Letter back() const { return at(len_ - 1); }

    Word prepended(Letter a) const;
    Word appended(Letter a) const;
    /// Word without its first / last letter (requires nontrivial).
    Word without_front() const;
    Word without_back() const;

    friend Word operator+(const Word& a, const Word& b);  // concatenation

    /// Sum of letter bars; equals (#x) - (#y).
    int weight() const;
    /// (#x, #y)
    std::pair<int, int> bidegree() const;

    /// Image under the antiautomorphism that swaps x and y: reverse and swap.
    Word zeta() const;

    bool operator==(const Word& o) const { return bits_ == o.bits_ && len_ == o.len_; }
    bool operator!=(const Word& o) const { return !(*this == o); }

    std::string str() const;
    /// Parses "1" (trivial word) or a string over {x, y}.
    static Word parse(std::string_view text);

    std::uint64_t raw_bits() const { return bits_; }

private:
    Word(std::uint64_t bits, std::uint32_t len) : bits_(bits), len_(len) {}

    std::uint64_t bits_ = 0;
    std::uint32_t len_ = 0;
};

/// Order used everywhere output must be deterministic: by length, then
/// lexicographically with x < y.
bool canonical_less(const Word& a, const Word& b);

inline bool operator<(const Word& a, const Word& b) { return canonical_less(a, b); }

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::uint64_t h = w.raw_bits() + 0x9e3779b97f4a7c15ull * (w.length() + 1);
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdull;
        h ^= h >> 33;
        return static_cast<std::size_t>(h);
    }
};

}  // namespace qshuffle
