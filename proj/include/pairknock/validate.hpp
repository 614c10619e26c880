#pragma once

/// Read-only corpus sanity checks. All findings are reported, never thrown.

#include <cstddef>
#include <string>
#include <vector>

#include "pairknock/types.hpp"

namespace pairknock {

struct ValidationIssue {
    enum class Kind { DanglingReference, DuplicateId, NoAnswer, EmptyField, InvalidTruth };
    Kind kind;
    std::string entity_id;
    std::string detail;
};

std::string_view to_string(ValidationIssue::Kind k);

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty(); }
    std::size_t count(ValidationIssue::Kind k) const;
    std::string summary() const;
};

ValidationReport validate_corpus(const std::vector<Problem>& problems,
                                 const std::vector<Candidate>& candidates);

}  // namespace pairknock
