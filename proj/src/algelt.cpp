#include "qshuffle/algelt.hpp"

#include <algorithm>
#include <sstream>

namespace qshuffle {

AlgElt AlgElt::from_word(const Word& w, LaurentPoly c) {
    AlgElt e;
    if (!c.is_zero()) {
        e.terms_.emplace(w, std::move(c));
    }
    return e;
}

LaurentPoly AlgElt::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

void AlgElt::add_term(const Word& w, const LaurentPoly& c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

AlgElt& AlgElt::operator+=(const AlgElt& rhs) {
    for (const auto& [w, c] : rhs.terms_) {
        add_term(w, c);
    }
    return *this;
}

AlgElt& AlgElt::operator-=(const AlgElt& rhs) {
    for (const auto& [w, c] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(w, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }
    return *this;
}

AlgElt AlgElt::operator-() const {
    AlgElt out;
    out.terms_.reserve(terms_.size());
    for (const auto& [w, c] : terms_) {
        out.terms_.emplace(w, -c);
    }
    return out;
}

AlgElt AlgElt::scaled(const LaurentPoly& s) const {
    AlgElt out;
    if (s.is_zero()) {
        return out;
    }
    out.terms_.reserve(terms_.size());
    for (const auto& [w, c] : terms_) {
        out.terms_.emplace(w, c * s);
    }
    return out;
}

AlgElt AlgElt::scaled(const Int& s) const {
    return scaled(LaurentPoly(s));
}

AlgElt AlgElt::shifted(Expo k) const {
    AlgElt out;
    out.terms_.reserve(terms_.size());
    for (const auto& [w, c] : terms_) {
        out.terms_.emplace(w, c.shifted(k));
    }
    return out;
}

AlgElt AlgElt::divided_exact(const LaurentPoly& d) const {
    AlgElt out;
    out.terms_.reserve(terms_.size());
    for (const auto& [w, c] : terms_) {
        out.terms_.emplace(w, exact_div(c, d));
    }
    return out;
}

AlgElt AlgElt::prepended(Letter a) const {
    AlgElt out;
    out.terms_.reserve(terms_.size());
    for (const auto& [w, c] : terms_) {
        out.terms_.emplace(w.prepended(a), c);
    }
    return out;
}

AlgElt AlgElt::appended(Letter a) const {
    AlgElt out;
    out.terms_.reserve(terms_.size());
    for (const auto& [w, c] : terms_) {
        out.terms_.emplace(w.appended(a), c);
    }
    return out;
}

bool AlgElt::operator==(const AlgElt& rhs) const {
    if (terms_.size() != rhs.terms_.size()) {
        return false;
    }
    for (const auto& [w, c] : terms_) {
        auto it = rhs.terms_.find(w);
        if (it == rhs.terms_.end() || it->second != c) {
            return false;
        }
    }
    return true;
}

std::vector<std::pair<Word, LaurentPoly>> AlgElt::sorted_terms() const {
    std::vector<std::pair<Word, LaurentPoly>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return out;
}

std::vector<Word> AlgElt::support() const {
    std::vector<Word> out;
    out.reserve(terms_.size());
    for (const auto& [w, c] : terms_) {
        out.push_back(w);
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

bool AlgElt::is_homogeneous(int xcount, int ycount) const {
    for (const auto& [w, c] : terms_) {
        if (w.bidegree() != std::pair<int, int>{xcount, ycount}) {
            return false;
        }
    }
    return true;
}

std::string AlgElt::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : sorted_terms()) {
        std::string piece;
        if (w.trivial()) {
            piece = c.str();
            if (c.term_count() > 1 && terms_.size() > 1) {
                piece = "(" + piece + ")";
            }
        } else if (c.is_one()) {
            piece = w.str();
        } else if (c == LaurentPoly(Int(-1))) {
            piece = "-" + w.str();
        } else if (c.term_count() == 1) {
            piece = c.str() + "*" + w.str();
        } else {
            piece = "(" + c.str() + ")*" + w.str();
        }
        if (first) {
            os << piece;
            first = false;
        } else if (!piece.empty() && piece[0] == '-') {
            os << " - " << piece.substr(1);
        } else {
            os << " + " << piece;
        }
    }
    return os.str();
}

std::string AlgElt::latex() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : sorted_terms()) {
        std::string coeff_part = latex_brackets(c);
        bool negative = false;
        if (!coeff_part.empty() && coeff_part[0] == '-') {
            negative = true;
            coeff_part = coeff_part.substr(1);
        }
        std::string piece;
        if (w.trivial()) {
            piece = coeff_part;
        } else if (coeff_part == "1") {
            piece = w.str();
        } else {
            piece = coeff_part + "\\," + w.str();
        }
        if (first) {
            os << (negative ? "-" : "") << piece;
            first = false;
        } else {
            os << (negative ? " - " : " + ") << piece;
        }
    }
    return os.str();
}

nlohmann::json AlgElt::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [w, c] : sorted_terms()) {
        arr.push_back({{"word", w.str()}, {"coeff", c.to_json()}});
    }
    return nlohmann::json{{"terms", arr}};
}

AlgElt AlgElt::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
        throw std::invalid_argument("algebra element JSON must be {\"terms\": [...]}");
    }
    AlgElt out;
    for (const auto& t : j["terms"]) {
        out.add_term(Word::parse(t.at("word").get<std::string>()),
                     LaurentPoly::from_json(t.at("coeff")));
    }
    return out;
}

AlgElt concat(const AlgElt& u, const AlgElt& v) {
    AlgElt out;
    for (const auto& [wu, cu] : u.terms()) {
        for (const auto& [wv, cv] : v.terms()) {
            out.add_term(wu + wv, cu * cv);
        }
    }
    return out;
}

AlgElt zeta(const AlgElt& v) {
    AlgElt out;
    for (const auto& [w, c] : v.terms()) {
        out.add_term(w.zeta(), c);
    }
    return out;
}

}  // namespace qshuffle
