#include "qshuffle/word.hpp"

#include <bit>

namespace qshuffle {

namespace {

std::uint64_t mask(std::uint32_t len) {
    return len == 64 ? ~0ull : (1ull << len) - 1;
}

}  // namespace

Word Word::prepended(Letter a) const {
    if (len_ >= max_length) {
        throw std::length_error("word length limit (64) exceeded");
    }
    return Word((bits_ << 1) | static_cast<std::uint64_t>(a), len_ + 1);
}

Word Word::appended(Letter a) const {
    if (len_ >= max_length) {
        throw std::length_error("word length limit (64) exceeded");
    }
    return Word(bits_ | (static_cast<std::uint64_t>(a) << len_), len_ + 1);
}

Word Word::without_front() const {
    if (trivial()) {
        throw std::logic_error("without_front on the trivial word");
    }
    return Word(bits_ >> 1, len_ - 1);
}

Word Word::without_back() const {
    if (trivial()) {
        throw std::logic_error("without_back on the trivial word");
    }
    return Word(bits_ & mask(len_ - 1), len_ - 1);
}

Word operator+(const Word& a, const Word& b) {
    if (a.len_ + b.len_ > Word::max_length) {
        throw std::length_error("word length limit (64) exceeded");
    }
    return Word(a.bits_ | (b.bits_ << a.len_), a.len_ + b.len_);
}

int Word::weight() const {
    const int ycount = std::popcount(bits_ & mask(len_));
    return static_cast<int>(len_) - 2 * ycount;
}

std::pair<int, int> Word::bidegree() const {
    const int ycount = std::popcount(bits_ & mask(len_));
    return {static_cast<int>(len_) - ycount, ycount};
}

Word Word::zeta() const {
    std::uint64_t out = 0;
    for (std::uint32_t i = 0; i < len_; ++i) {
        const std::uint64_t bit = (bits_ >> (len_ - 1 - i)) & 1u;
        out |= (bit ^ 1u) << i;
    }
    return Word(out, len_);
}

std::string Word::str() const {
    if (trivial()) {
        return "1";
    }
    std::string s;
    s.reserve(len_);
    for (std::uint32_t i = 0; i < len_; ++i) {
        s.push_back(letter_char(at(i)));
    }
    return s;
}

Word Word::parse(std::string_view text) {
    if (text == "1") {
        return Word();
    }
    if (text.empty()) {
        throw std::invalid_argument("empty word (write the trivial word as \"1\")");
    }
    if (text.size() > max_length) {
        throw std::invalid_argument("word longer than 64 letters");
    }
    Word w;
    for (char c : text) {
        if (c == 'x') {
            w = w.appended(Letter::X);
        } else if (c == 'y') {
            w = w.appended(Letter::Y);
        } else {
            throw std::invalid_argument(std::string("invalid letter '") + c +
                                        "' in word (expected x or y)");
        }
    }
    return w;
}

bool canonical_less(const Word& a, const Word& b) {
    if (a.length() != b.length()) {
        return a.length() < b.length();
    }
    const std::uint64_t diff = a.raw_bits() ^ b.raw_bits();
    if (diff == 0) {
        return false;
    }
    const int pos = std::countr_zero(diff);
    // x (bit 0) sorts before y (bit 1) at the first differing position
    return ((a.raw_bits() >> pos) & 1u) == 0;
}

}  // namespace qshuffle
