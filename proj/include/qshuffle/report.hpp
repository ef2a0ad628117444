#pragma once

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

#include "qshuffle/algelt.hpp"

namespace qshuffle {

enum class CheckStatus { pass, fail, inconclusive };

std::string to_string(CheckStatus s);

/// One verified identity instance. pass holds exactly when the residual is
/// the zero element.
struct CheckResult {
    std::string identity;
    std::string params;
    CheckStatus status = CheckStatus::pass;
    AlgElt residual;
    std::string note;
    double elapsed_ms = 0.0;
};

/// Result of an identity check lhs == rhs; the residual is lhs - rhs.
CheckResult equality_check(std::string identity, std::string params, const AlgElt& lhs,
                           const AlgElt& rhs);
CheckResult zero_check(std::string identity, std::string params, const AlgElt& elt);

/// Started before a check's computation; stamp() writes the elapsed wall
/// time into the finished result.
class CheckTimer {
public:
    CheckTimer() : start_(std::chrono::steady_clock::now()) {}
    CheckResult stamp(CheckResult r) const {
        const std::chrono::duration<double, std::milli> d =
            std::chrono::steady_clock::now() - start_;
        r.elapsed_ms = d.count();
        return r;
    }

private:
    std::chrono::steady_clock::time_point start_;
};

/**
 * A batch of check results. Reports merge, sort deterministically (by
 * identity name, then parameter string, independent of execution order) and
 * serialize to JSON lines, one record per identity instance.
 */
class VerificationReport {
public:
    void add(CheckResult r) { checks_.push_back(std::move(r)); }
    void merge(VerificationReport other);

    const std::vector<CheckResult>& checks() const { return checks_; }
    std::size_t size() const { return checks_.size(); }
    /// No checks ran at all; counts as a (flagged) vacuous pass.
    bool vacuous() const { return checks_.empty(); }

    std::size_t pass_count() const;
    std::size_t fail_count() const;
    std::size_t inconclusive_count() const;
    bool all_passed() const { return fail_count() == 0 && inconclusive_count() == 0; }

    void sort_canonical();

    /// One JSON record per check; elapsed time is the last field.
    void write_jsonl(std::ostream& os) const;
    /// Deterministic human-readable listing (no timing data).
    void print(std::ostream& os) const;

private:
    std::vector<CheckResult> checks_;
};

}  // namespace qshuffle
