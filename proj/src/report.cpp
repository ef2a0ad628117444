#include "qshuffle/report.hpp"

#include <algorithm>
#include <ostream>

namespace qshuffle {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass:
            return "pass";
        case CheckStatus::fail:
            return "fail";
        case CheckStatus::inconclusive:
            return "inconclusive";
    }
    return "unknown";
}

CheckResult equality_check(std::string identity, std::string params, const AlgElt& lhs,
                           const AlgElt& rhs) {
    CheckResult r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.residual = lhs - rhs;
    r.status = r.residual.is_zero() ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

CheckResult zero_check(std::string identity, std::string params, const AlgElt& elt) {
    CheckResult r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.residual = elt;
    r.status = elt.is_zero() ? CheckStatus::pass : CheckStatus::fail;
    return r;
}

void VerificationReport::merge(VerificationReport other) {
    checks_.insert(checks_.end(), std::make_move_iterator(other.checks_.begin()),
                   std::make_move_iterator(other.checks_.end()));
}

std::size_t VerificationReport::pass_count() const {
    return static_cast<std::size_t>(std::count_if(
        checks_.begin(), checks_.end(),
        [](const CheckResult& c) { return c.status == CheckStatus::pass; }));
}

std::size_t VerificationReport::fail_count() const {
    return static_cast<std::size_t>(std::count_if(
        checks_.begin(), checks_.end(),
        [](const CheckResult& c) { return c.status == CheckStatus::fail; }));
}

std::size_t VerificationReport::inconclusive_count() const {
    return static_cast<std::size_t>(std::count_if(
        checks_.begin(), checks_.end(),
        [](const CheckResult& c) { return c.status == CheckStatus::inconclusive; }));
}

void VerificationReport::sort_canonical() {
    std::stable_sort(checks_.begin(), checks_.end(),
                     [](const CheckResult& a, const CheckResult& b) {
                         if (a.identity != b.identity) {
                             return a.identity < b.identity;
                         }
                         return a.params < b.params;
                     });
}

void VerificationReport::write_jsonl(std::ostream& os) const {
    for (const CheckResult& c : checks_) {
        nlohmann::ordered_json j;
        j["identity"] = c.identity;
        j["params"] = c.params;
        j["status"] = to_string(c.status);
        if (!c.note.empty()) {
            j["note"] = c.note;
        }
        if (c.status == CheckStatus::fail) {
            j["residual"] = c.residual.to_json();
        }
        j["elapsed_ms"] = c.elapsed_ms;
        os << j.dump() << "\n";
    }
}

void VerificationReport::print(std::ostream& os) const {
    if (vacuous()) {
        os << "no checks run (vacuous pass)\n";
        return;
    }
    for (const CheckResult& c : checks_) {
        os << to_string(c.status);
        if (c.status == CheckStatus::pass) {
            os << "        ";
        } else if (c.status == CheckStatus::fail) {
            os << "        ";
        } else {
            os << "  ";
        }
        os << c.identity;
        if (!c.params.empty()) {
            os << " [" << c.params << "]";
        }
        if (!c.note.empty()) {
            os << "  (" << c.note << ")";
        }
        os << "\n";
    }
    os << pass_count() << "/" << size() << " passed, " << fail_count() << " failed, "
       << inconclusive_count() << " inconclusive\n";
}

}  // namespace qshuffle
