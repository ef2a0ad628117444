#include "qshuffle/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qshuffle {

namespace {

Expo checked_add(Expo a, Expo b) {
    Expo out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("Laurent exponent overflow");
    }
    return out;
}

Expo checked_sub(Expo a, Expo b) {
    Expo out;
    if (__builtin_sub_overflow(a, b, &out)) {
        throw std::overflow_error("Laurent exponent overflow");
    }
    return out;
}

}  // namespace

LaurentPoly::LaurentPoly(Int constant) {
    if (constant != 0) {
        terms_.emplace_back(0, std::move(constant));
    }
}

LaurentPoly LaurentPoly::monomial(Int c, Expo e) {
    LaurentPoly p;
    if (c != 0) {
        p.terms_.emplace_back(e, std::move(c));
    }
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

Int LaurentPoly::coeff(Expo e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, Expo x) { return t.first < x; });
    if (it != terms_.end() && it->first == e) {
        return it->second;
    }
    return Int(0);
}

Expo LaurentPoly::min_exp() const {
    if (terms_.empty()) {
        throw std::logic_error("min_exp of the zero polynomial");
    }
    return terms_.front().first;
}

Expo LaurentPoly::max_exp() const {
    if (terms_.empty()) {
        throw std::logic_error("max_exp of the zero polynomial");
    }
    return terms_.back().first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    if (rhs.terms_.empty()) {
        return *this;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = rhs.terms_.begin(), be = rhs.terms_.end();
    while (a != ae && b != be) {
        if (a->first < b->first) {
            merged.push_back(std::move(*a++));
        } else if (b->first < a->first) {
            merged.push_back(*b++);
        } else {
            Int sum = a->second + b->second;
            if (sum != 0) {
                merged.emplace_back(a->first, std::move(sum));
            }
            ++a;
            ++b;
        }
    }
    merged.insert(merged.end(), std::make_move_iterator(a), std::make_move_iterator(ae));
    merged.insert(merged.end(), b, be);
    terms_ = std::move(merged);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    if (rhs.terms_.empty()) {
        return *this;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = rhs.terms_.begin(), be = rhs.terms_.end();
    while (a != ae && b != be) {
        if (a->first < b->first) {
            merged.push_back(std::move(*a++));
        } else if (b->first < a->first) {
            merged.emplace_back(b->first, -b->second);
            ++b;
        } else {
            Int diff = a->second - b->second;
            if (diff != 0) {
                merged.emplace_back(a->first, std::move(diff));
            }
            ++a;
            ++b;
        }
    }
    merged.insert(merged.end(), std::make_move_iterator(a), std::make_move_iterator(ae));
    for (; b != be; ++b) {
        merged.emplace_back(b->first, -b->second);
    }
    terms_ = std::move(merged);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    if (a.terms_.empty() || b.terms_.empty()) {
        return out;
    }
    const Expo lo = checked_add(a.min_exp(), b.min_exp());
    const Expo hi = checked_add(a.max_exp(), b.max_exp());
    const Expo span = checked_sub(hi, lo);
    if (span <= 1 << 16) {
        // dense accumulator over the exponent range of the product
        std::vector<Int> dense(static_cast<std::size_t>(span) + 1);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
            }
        }
        out.terms_.reserve(dense.size());
        for (std::size_t i = 0; i < dense.size(); ++i) {
            if (dense[i] != 0) {
                out.terms_.emplace_back(lo + static_cast<Expo>(i), std::move(dense[i]));
            }
        }
    } else {
        std::map<Expo, Int> acc;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                acc[checked_add(ea, eb)] += ca * cb;
            }
        }
        for (auto& [e, c] : acc) {
            if (c != 0) {
                out.terms_.emplace_back(e, std::move(c));
            }
        }
    }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Int& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    out.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
        out.terms_.emplace_back(e, -c);
    }
    return out;
}

LaurentPoly LaurentPoly::shifted(Expo k) const {
    LaurentPoly out;
    out.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
        out.terms_.emplace_back(checked_add(e, k), c);
    }
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly result = one();
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1u) {
            result *= base;
        }
        n >>= 1u;
        if (n > 0) {
            base *= base;
        }
    }
    return result;
}

Rational LaurentPoly::eval_at(const Rational& q0) const {
    if (q0 == 0) {
        throw ZeroEvaluationPoint();
    }
    using boost::multiprecision::pow;
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational p;
        if (e >= 0) {
            p = Rational(pow(numerator(q0), static_cast<unsigned>(e)),
                         pow(denominator(q0), static_cast<unsigned>(e)));
        } else {
            p = Rational(pow(denominator(q0), static_cast<unsigned>(-e)),
                         pow(numerator(q0), static_cast<unsigned>(-e)));
        }
        acc += Rational(c) * p;
    }
    return acc;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Expo e = it->first;
        Int c = it->second;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else if (c < 0) {
            os << " - ";
            c = -c;
        } else {
            os << " + ";
        }
        if (e == 0) {
            os << c.str();
        } else {
            if (c != 1) {
                os << c.str() << "*";
            }
            if (e == 1) {
                os << "q";
            } else {
                os << "q^" << e;
            }
        }
    }
    return os.str();
}

std::string LaurentPoly::latex() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Expo e = it->first;
        Int c = it->second;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else if (c < 0) {
            os << "-";
            c = -c;
        } else {
            os << "+";
        }
        if (e == 0) {
            os << c.str();
        } else {
            if (c != 1) {
                os << c.str();
            }
            if (e == 1) {
                os << "q";
            } else {
                os << "q^{" << e << "}";
            }
        }
    }
    return os.str();
}

nlohmann::json LaurentPoly::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, c] : terms_) {
        j[std::to_string(e)] = c.str();
    }
    return j;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw std::invalid_argument("Laurent polynomial JSON must be an object");
    }
    LaurentPoly p;
    for (const auto& [key, value] : j.items()) {
        const Expo e = static_cast<Expo>(std::stoll(key));
        const Int c(value.get<std::string>());
        if (c != 0) {
            p += monomial(c, e);
        }
    }
    return p;
}

LaurentPoly qint(long long n) {
    LaurentPoly p;
    if (n == 0) {
        return p;
    }
    const long long m = n > 0 ? n : -n;
    const Int unit(n > 0 ? 1 : -1);
    // [m]_q = q^{m-1} + q^{m-3} + ... + q^{1-m}
    for (long long k = 0; k < m; ++k) {
        p += LaurentPoly::monomial(unit, m - 1 - 2 * k);
    }
    return p;
}

LaurentPoly qfact(int n) {
    if (n < 0) {
        throw std::invalid_argument("qfact requires n >= 0");
    }
    LaurentPoly p = LaurentPoly::one();
    for (int k = 2; k <= n; ++k) {
        p *= qint(k);
    }
    return p;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) {
        throw std::invalid_argument("exact_div by the zero polynomial");
    }
    if (p.is_zero()) {
        return LaurentPoly();
    }
    // Shift both operands to ordinary polynomials with nonzero constant term.
    const Expo pshift = p.min_exp();
    const Expo dshift = d.min_exp();
    const auto pdeg = static_cast<std::size_t>(p.max_exp() - pshift);
    const auto ddeg = static_cast<std::size_t>(d.max_exp() - dshift);
    if (pdeg < ddeg) {
        throw NonExactDivision("dividend span shorter than divisor span");
    }
    std::vector<Int> rem(pdeg + 1), div(ddeg + 1);
    for (const auto& [e, c] : p.terms()) {
        rem[static_cast<std::size_t>(e - pshift)] = c;
    }
    for (const auto& [e, c] : d.terms()) {
        div[static_cast<std::size_t>(e - dshift)] = c;
    }
    const Int& lead = div[ddeg];
    std::vector<Int> quot(pdeg - ddeg + 1);
    for (std::size_t k = pdeg - ddeg + 1; k-- > 0;) {
        const Int& top = rem[k + ddeg];
        if (top == 0) {
            continue;
        }
        Int c = top / lead;
        if (c * lead != top) {
            throw NonExactDivision("leading coefficient not divisible");
        }
        for (std::size_t i = 0; i <= ddeg; ++i) {
            rem[k + i] -= c * div[i];
        }
        quot[k] = std::move(c);
    }
    for (const Int& c : rem) {
        if (c != 0) {
            throw NonExactDivision("nonzero remainder");
        }
    }
    LaurentPoly out;
    for (std::size_t k = 0; k < quot.size(); ++k) {
        if (quot[k] != 0) {
            out += LaurentPoly::monomial(quot[k], static_cast<Expo>(k) + pshift - dshift);
        }
    }
    return out;
}

Rational eval_rational(const LaurentPoly& p, const Rational& q0) {
    return p.eval_at(q0);
}

bool try_qint_factorization(const LaurentPoly& p, QIntFactorization& out) {
    if (p.is_zero()) {
        return false;
    }
    out = QIntFactorization{};
    if (p.term_count() == 1) {
        const auto& [e, c] = p.terms().front();
        if (c == 1 || c == -1) {
            out.sign = c < 0 ? -1 : 1;
            out.shift = e;
            return true;
        }
        return false;
    }
    // Center the polynomial: a bracket product is symmetric about exponent 0.
    const Expo lo = p.min_exp();
    const Expo hi = p.max_exp();
    if ((lo + hi) % 2 != 0) {
        return false;
    }
    out.shift = (lo + hi) / 2;
    LaurentPoly rest = p.shifted(-out.shift);
    while (!rest.is_one() && rest != LaurentPoly(Int(-1))) {
        if (rest.term_count() == 0) {
            return false;
        }
        const Expo top = rest.max_exp();
        if (top <= 0) {
            return false;
        }
        bool divided = false;
        for (Expo n = top + 1; n >= 2; --n) {
            try {
                LaurentPoly q = exact_div(rest, qint(static_cast<long long>(n)));
                out.brackets.push_back(static_cast<int>(n));
                rest = std::move(q);
                divided = true;
                break;
            } catch (const NonExactDivision&) {
            }
        }
        if (!divided) {
            return false;
        }
    }
    if (rest == LaurentPoly(Int(-1))) {
        out.sign = -1;
    }
    std::sort(out.brackets.rbegin(), out.brackets.rend());
    return true;
}

std::string latex_brackets(const LaurentPoly& p) {
    if (p.is_zero()) {
        return "0";
    }
    QIntFactorization f;
    if (!try_qint_factorization(p, f)) {
        return "\\left(" + p.latex() + "\\right)";
    }
    std::ostringstream os;
    if (f.sign < 0) {
        os << "-";
    }
    bool printed = false;
    if (f.shift != 0) {
        os << "q^{" << f.shift << "}";
        printed = true;
    }
    int run = 0;
    for (std::size_t i = 0; i < f.brackets.size(); ++i) {
        ++run;
        if (i + 1 == f.brackets.size() || f.brackets[i + 1] != f.brackets[i]) {
            os << "[" << f.brackets[i] << "]_q";
            if (run > 1) {
                os << "^{" << run << "}";
            }
            run = 0;
            printed = true;
        }
    }
    if (!printed) {
        os << "1";
    }
    return os.str();
}

}  // namespace qshuffle
