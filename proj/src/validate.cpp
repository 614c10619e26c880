#include "pairknock/validate.hpp"

#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace pairknock {

std::string_view to_string(ValidationIssue::Kind k) {
    switch (k) {
        case ValidationIssue::Kind::DanglingReference: return "dangling-reference";
        case ValidationIssue::Kind::DuplicateId: return "duplicate-id";
        case ValidationIssue::Kind::NoAnswer: return "no-answer";
        case ValidationIssue::Kind::EmptyField: return "empty-field";
        case ValidationIssue::Kind::InvalidTruth: return "invalid-truth";
    }
    return "unknown";
}

std::size_t ValidationReport::count(ValidationIssue::Kind k) const {
    std::size_t n = 0;
    for (const ValidationIssue& i : issues) {
        if (i.kind == k) ++n;
    }
    return n;
}

std::string ValidationReport::summary() const {
    std::ostringstream out;
    for (const ValidationIssue& i : issues) {
        out << to_string(i.kind) << " [" << i.entity_id << "] " << i.detail << '\n';
    }
    return out.str();
}

ValidationReport validate_corpus(const std::vector<Problem>& problems,
                                 const std::vector<Candidate>& candidates) {
    ValidationReport report;
    auto add = [&](ValidationIssue::Kind kind, const std::string& id, std::string detail) {
        report.issues.push_back({kind, id, std::move(detail)});
    };

    std::unordered_map<std::string_view, const Problem*> problem_ids;
    for (const Problem& p : problems) {
        if (p.id.empty()) add(ValidationIssue::Kind::EmptyField, p.id, "problem id is empty");
        if (p.statement.empty()) {
            add(ValidationIssue::Kind::EmptyField, p.id, "problem statement is empty");
        }
        if (!problem_ids.emplace(p.id, &p).second) {
            add(ValidationIssue::Kind::DuplicateId, p.id, "duplicate problem id");
        }
    }

    std::unordered_set<std::string_view> candidate_ids;
    for (const Candidate& c : candidates) {
        if (c.id.empty()) add(ValidationIssue::Kind::EmptyField, c.id, "candidate id is empty");
        if (!candidate_ids.insert(c.id).second) {
            add(ValidationIssue::Kind::DuplicateId, c.id, "duplicate candidate id");
        }
        auto it = problem_ids.find(c.problem_id);
        if (it == problem_ids.end()) {
            add(ValidationIssue::Kind::DanglingReference, c.id,
                "references unknown problem '" + c.problem_id + "'");
            if (c.truth.has_value()) {
                add(ValidationIssue::Kind::InvalidTruth, c.id,
                    "truth set but owning problem is unknown");
            }
            continue;
        }
        if (!c.answer) {
            add(ValidationIssue::Kind::NoAnswer, c.id, "no extractable final answer");
        }
        if (c.truth.has_value() && (!c.answer || !it->second->ground_truth)) {
            add(ValidationIssue::Kind::InvalidTruth, c.id,
                "truth set without both an answer and a ground truth");
        }
    }
    return report;
}

}  // namespace pairknock
