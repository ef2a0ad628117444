#include "qshuffle/catalan.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace qshuffle {

bool is_balanced(const Word& w) {
    return w.weight() == 0;
}

bool is_catalan(const Word& w) {
    int sum = 0;
    for (std::uint32_t i = 0; i < w.length(); ++i) {
        sum += bar(w.at(i));
        if (sum < 0) {
            return false;
        }
    }
    return sum == 0;
}

namespace {

void catalan_backtrack(Word& w, int height, int remaining, std::vector<Word>& out) {
    if (remaining == 0) {
        out.push_back(w);
        return;
    }
    // x before y keeps the output in canonical (lexicographic) order
    if (height + 1 <= remaining - 1) {
        Word next = w.appended(Letter::X);
        catalan_backtrack(next, height + 1, remaining - 1, out);
    }
    if (height > 0) {
        Word next = w.appended(Letter::Y);
        catalan_backtrack(next, height - 1, remaining - 1, out);
    }
}

}  // namespace

std::vector<Word> enumerate_catalan(int n) {
    if (n < 0) {
        throw std::invalid_argument("enumerate_catalan requires n >= 0");
    }
    std::vector<Word> out;
    Word w;
    catalan_backtrack(w, 0, 2 * n, out);
    return out;
}

std::vector<Word> enumerate_balanced(int length) {
    if (length < 0 || length % 2 != 0) {
        throw std::invalid_argument("balanced words have even nonnegative length");
    }
    if (length > 30) {
        throw std::invalid_argument("enumerate_balanced limited to length 30");
    }
    std::vector<Word> out;
    for (std::uint64_t bits = 0; bits < (1ull << length); ++bits) {
        Word w;
        for (int i = 0; i < length; ++i) {
            w = w.appended((bits >> i) & 1u ? Letter::Y : Letter::X);
        }
        if (is_balanced(w)) {
            out.push_back(w);
        }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

Elevation elevation(const Word& w) {
    if (!is_catalan(w)) {
        throw NotCatalan("elevation requires a Catalan word, got " + w.str());
    }
    Elevation e(w.length() + 1, 0);
    for (std::uint32_t i = 0; i < w.length(); ++i) {
        e[i + 1] = e[i] + bar(w.at(i));
    }
    return e;
}

Profile::Profile(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty() || entries_.size() % 2 == 0) {
        throw InvalidProfile("a profile has odd length (l_0, h_1, l_1, ..., h_r, l_r)");
    }
}

std::string Profile::violation() const {
    const int rr = r();
    if (ell(0) != 0) {
        return "(i) l_0 = 0";
    }
    for (int i = 1; i <= rr - 1; ++i) {
        if (ell(i) < 0) {
            return "(ii) l_i >= 0";
        }
    }
    if (ell(rr) != 0) {
        return "(iii) l_r = 0";
    }
    for (int i = 1; i <= rr; ++i) {
        if (!(ell(i - 1) < h(i))) {
            return "(iv) l_{i-1} < h_i";
        }
    }
    for (int i = 1; i <= rr; ++i) {
        if (!(h(i) > ell(i))) {
            return "(v) h_i > l_i";
        }
    }
    return "";
}

std::string Profile::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) {
            os << ",";
        }
        os << entries_[i];
    }
    os << ")";
    return os.str();
}

Profile profile(const Word& w) {
    const Elevation e = elevation(w);
    std::vector<int> kept;
    kept.push_back(e.front());
    for (std::size_t i = 1; i + 1 < e.size(); ++i) {
        const int before = e[i] - e[i - 1];
        const int after = e[i + 1] - e[i];
        if ((before > 0) != (after > 0)) {
            kept.push_back(e[i]);
        }
    }
    if (e.size() > 1) {
        kept.push_back(e.back());
    }
    return Profile(std::move(kept));
}

Word profile_to_word(const Profile& p) {
    const std::string bad = p.violation();
    if (!bad.empty()) {
        throw InvalidProfile("not a Catalan profile, violates " + bad);
    }
    Word w;
    for (int i = 1; i <= p.r(); ++i) {
        for (int k = 0; k < p.h(i) - p.ell(i - 1); ++k) {
            w = w.appended(Letter::X);
        }
        for (int k = 0; k < p.h(i) - p.ell(i); ++k) {
            w = w.appended(Letter::Y);
        }
    }
    return w;
}

int profile_halflength(const Profile& p) {
    const std::string bad = p.violation();
    if (!bad.empty()) {
        throw InvalidProfile("not a Catalan profile, violates " + bad);
    }
    int n = 0;
    for (int i = 1; i <= p.r(); ++i) {
        n += p.h(i) - p.ell(i);
    }
    return n;
}

LaurentPoly cw_elevation(const Word& w) {
    const Elevation e = elevation(w);
    LaurentPoly c = LaurentPoly::one();
    for (int ei : e) {
        c *= qint(1 + ei);
    }
    return c;
}

LaurentPoly cw_profile(const Profile& p) {
    for (int v : p.entries()) {
        if (v < 0) {
            throw InvalidProfile("cw_profile requires natural-number entries");
        }
    }
    LaurentPoly num = LaurentPoly::one();
    LaurentPoly den = LaurentPoly::one();
    for (int i = 1; i <= p.r(); ++i) {
        num *= qfact(p.h(i));
        num *= qfact(p.h(i) + 1);
    }
    for (int i = 0; i <= p.r(); ++i) {
        den *= qfact(p.ell(i));
        den *= qfact(p.ell(i) + 1);
    }
    return exact_div(num, den);
}

AlgElt catalan_element(int n) {
    if (n < 0) {
        throw std::invalid_argument("catalan_element requires n >= 0");
    }
    static std::mutex mutex;
    static std::map<int, AlgElt> memo;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = memo.find(n);
        if (it != memo.end()) {
            return it->second;
        }
    }
    AlgElt c;
    for (const Word& w : enumerate_catalan(n)) {
        c.add_term(w, cw_elevation(w));
    }
    {
        std::lock_guard<std::mutex> lock(mutex);
        memo.emplace(n, c);
    }
    return c;
}

std::vector<Profile> catalan_profiles(int max_halflength) {
    std::vector<Profile> out;
    for (int n = 0; n <= max_halflength; ++n) {
        for (const Word& w : enumerate_catalan(n)) {
            out.push_back(profile(w));
        }
    }
    return out;
}

VerificationReport tech1_check(const Profile& p) {
    const std::string bad = p.violation();
    if (!bad.empty()) {
        throw InvalidProfile("not a Catalan profile, violates " + bad);
    }
    if (p.r() < 1) {
        throw InvalidProfile("the profile summation identity requires r >= 1");
    }
    const CheckTimer timer;
    const int r = p.r();
    int xi = 0;
    for (int i = 0; i <= r - 1; ++i) {
        if (p.ell(i) == 0) {
            xi = i;
        }
    }
    LaurentPoly rhs;
    for (int i = xi; i <= r - 1; ++i) {
        // keep entries through l_i, lower every later peak/valley by one
        // except the final l_r
        std::vector<int> mod = p.entries();
        for (std::size_t k = 2 * static_cast<std::size_t>(i) + 1; k + 1 < mod.size(); ++k) {
            mod[k] -= 1;
        }
        LaurentPoly window;
        for (int t = p.ell(i) + 1; t <= p.h(i + 1); ++t) {
            window += qint(2 * t);
        }
        rhs += cw_profile(Profile(std::move(mod))) * window;
    }
    const LaurentPoly lhs = cw_profile(p);

    VerificationReport report;
    CheckResult check;
    check.identity = "catalan.profile_sum";
    check.params = "p=" + p.str();
    check.residual = AlgElt::from_word(Word(), lhs - rhs);
    check.status = check.residual.is_zero() ? CheckStatus::pass : CheckStatus::fail;
    report.add(timer.stamp(std::move(check)));
    return report;
}

}  // namespace qshuffle
