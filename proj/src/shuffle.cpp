#include "qshuffle/shuffle.hpp"

#include <mutex>
#include <unordered_map>

namespace qshuffle {

namespace {

struct WordPair {
    std::uint64_t ubits, vbits;
    std::uint32_t ulen, vlen;
    bool operator==(const WordPair& o) const {
        return ubits == o.ubits && vbits == o.vbits && ulen == o.ulen && vlen == o.vlen;
    }
};

struct WordPairHash {
    std::size_t operator()(const WordPair& p) const {
        std::uint64_t h = p.ubits * 0x9e3779b97f4a7c15ull;
        h ^= p.vbits + 0xbf58476d1ce4e5b9ull + (h << 6) + (h >> 2);
        h ^= (static_cast<std::uint64_t>(p.ulen) << 32 | p.vlen) * 0x94d049bb133111ebull;
        h ^= h >> 29;
        return static_cast<std::size_t>(h);
    }
};

WordPair key_of(const Word& u, const Word& v) {
    return WordPair{u.raw_bits(), v.raw_bits(), u.length(), v.length()};
}

// Entries above this combined word length are recomputed rather than stored;
// an entry of combined length L can hold up to C(L, L/2) terms, so storing
// long pairs would let a handful of entries dominate memory.
constexpr std::uint32_t kMemoStoreMaxLen = 12;

std::mutex g_memo_mutex;
std::unordered_map<WordPair, AlgElt, WordPairHash> g_memo;
std::size_t g_memo_cap = 1u << 20;

bool memo_lookup(const WordPair& k, AlgElt& out) {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_memo.find(k);
    if (it == g_memo.end()) {
        return false;
    }
    out = it->second;
    return true;
}

void memo_store(const WordPair& k, const AlgElt& value) {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    if (g_memo.size() >= g_memo_cap) {
        g_memo.clear();
    }
    g_memo.emplace(k, value);
}

AlgElt shuffle_words_rec(const Word& u, const Word& v) {
    if (u.trivial()) {
        return AlgElt::from_word(v);
    }
    if (v.trivial()) {
        return AlgElt::from_word(u);
    }
    const bool store = u.length() + v.length() <= kMemoStoreMaxLen;
    const WordPair k = key_of(u, v);
    if (store) {
        AlgElt hit;
        if (memo_lookup(k, hit)) {
            return hit;
        }
    }
    // u*v = u1 ((u2..ur) * v) + v1 (u * (v2..vs)) q^{<u1,v1>+...+<ur,v1>}
    AlgElt result = shuffle_words_rec(u.without_front(), v).prepended(u.front());
    const Expo e = 2 * bar(v.front()) * u.weight();
    result += shuffle_words_rec(u, v.without_front()).prepended(v.front()).shifted(e);
    if (store) {
        memo_store(k, result);
    }
    return result;
}

}  // namespace

AlgElt shuffle_letter(Letter u, const Word& v, Side side) {
    AlgElt out;
    const std::uint32_t n = v.length();
    if (side == Side::left) {
        Expo e = 0;
        for (std::uint32_t i = 0; i <= n; ++i) {
            if (i > 0) {
                e += pairing(v.at(i - 1), u);
            }
            Word w;
            for (std::uint32_t k = 0; k < i; ++k) {
                w = w.appended(v.at(k));
            }
            w = w.appended(u);
            for (std::uint32_t k = i; k < n; ++k) {
                w = w.appended(v.at(k));
            }
            out.add_term(w, LaurentPoly::q_power(e));
        }
    } else {
        for (std::uint32_t i = 0; i <= n; ++i) {
            Expo e = 0;
            for (std::uint32_t k = i; k < n; ++k) {
                e += pairing(v.at(k), u);
            }
            Word w;
            for (std::uint32_t k = 0; k < i; ++k) {
                w = w.appended(v.at(k));
            }
            w = w.appended(u);
            for (std::uint32_t k = i; k < n; ++k) {
                w = w.appended(v.at(k));
            }
            out.add_term(w, LaurentPoly::q_power(e));
        }
    }
    return out;
}

AlgElt shuffle_words(const Word& u, const Word& v) {
    return shuffle_words_rec(u, v);
}

AlgElt shuffle_words_tail(const Word& u, const Word& v) {
    if (u.trivial()) {
        return AlgElt::from_word(v);
    }
    if (v.trivial()) {
        return AlgElt::from_word(u);
    }
    // u*v = (u * (v1..v_{s-1})) vs + ((u1..u_{r-1}) * v) ur q^{<ur,v1>+...+<ur,vs>}
    AlgElt result = shuffle_words_tail(u, v.without_back()).appended(v.back());
    const Expo e = 2 * bar(u.back()) * v.weight();
    result += shuffle_words_tail(u.without_back(), v).appended(u.back()).shifted(e);
    return result;
}

namespace {

template <typename WordProduct>
AlgElt bilinear_shuffle(const AlgElt& u, const AlgElt& v, WordProduct&& product) {
    AlgElt out;
    for (const auto& [wu, cu] : u.terms()) {
        for (const auto& [wv, cv] : v.terms()) {
            const LaurentPoly scale = cu * cv;
            const AlgElt prod = product(wu, wv);
            for (const auto& [w, c] : prod.terms()) {
                out.add_term(w, c * scale);
            }
        }
    }
    return out;
}

}  // namespace

AlgElt shuffle(const AlgElt& u, const AlgElt& v) {
    return bilinear_shuffle(u, v, [](const Word& a, const Word& b) { return shuffle_words(a, b); });
}

AlgElt shuffle_via_tail(const AlgElt& u, const AlgElt& v) {
    return bilinear_shuffle(u, v,
                            [](const Word& a, const Word& b) { return shuffle_words_tail(a, b); });
}

void set_shuffle_memo_cap(std::size_t max_entries) {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    g_memo_cap = max_entries == 0 ? 1 : max_entries;
    if (g_memo.size() > g_memo_cap) {
        g_memo.clear();
    }
}

std::size_t shuffle_memo_entry_count() {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    return g_memo.size();
}

void clear_shuffle_memo() {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    g_memo.clear();
}

VerificationReport qserre_check() {
    VerificationReport report;
    const AlgElt x = AlgElt::from_word(Word::parse("x"));
    const AlgElt y = AlgElt::from_word(Word::parse("y"));
    const LaurentPoly three = qint(3);

    const auto relation = [&](const AlgElt& a, const AlgElt& b) {
        return shuffle(shuffle(shuffle(a, a), a), b) -
               shuffle(shuffle(shuffle(a, a), b), a).scaled(three) +
               shuffle(shuffle(shuffle(a, b), a), a).scaled(three) -
               shuffle(shuffle(shuffle(b, a), a), a);
    };

    {
        CheckTimer timer;
        report.add(timer.stamp(zero_check("serre.xxxy", "", relation(x, y))));
    }
    {
        CheckTimer timer;
        report.add(timer.stamp(zero_check("serre.yyyx", "", relation(y, x))));
    }
    report.sort_canonical();
    return report;
}

}  // namespace qshuffle
