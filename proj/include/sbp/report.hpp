#pragma once

#include <string>
#include <vector>

namespace sbp {

/// One violated law, with the elements that witness the violation and the
/// two evaluated sides (element names, empty when not applicable).
struct Failure {
    std::string law;
    std::vector<std::string> witness;
    std::string lhs;
    std::string rhs;
};

/// Flat pass/fail result used by validators that only report violations.
struct ValidationReport {
    std::vector<Failure> failures;

    bool ok() const { return failures.empty(); }
};

/// Status of a single named law inside a structured report. `failures`
/// holds the first witness found in scan order, or every witness when an
/// exhaustive run was requested.
struct LawStatus {
    std::string law;
    std::vector<Failure> failures;

    bool ok() const { return failures.empty(); }
};

/// Per-law report for structures whose definition is a fixed list of laws
/// (semi-biproduct axioms, pseudo-action laws). Laws appear in a fixed
/// order regardless of outcome.
struct LawReport {
    std::vector<LawStatus> laws;

    bool ok() const {
        for (const auto& l : laws)
            if (!l.ok()) return false;
        return true;
    }

    const LawStatus* find(const std::string& law) const {
        for (const auto& l : laws)
            if (l.law == law) return &l;
        return nullptr;
    }

    std::vector<std::string> failed_laws() const {
        std::vector<std::string> out;
        for (const auto& l : laws)
            if (!l.ok()) out.push_back(l.law);
        return out;
    }
};

using SbpReport = LawReport;
using PaReport = LawReport;

}  // namespace sbp
