#pragma once

/**
 * Final-answer extraction and canonicalization.
 *
 * "Same final answer" decides team membership, so canonicalization must be
 * deterministic and idempotent. Equivalence is string-level after
 * normalization, not symbolic: numeric canonicalization folds the common
 * fraction/decimal split (1/2 == 0.5) and everything else passes through
 * textually. No full LaTeX parsing, no CAS.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pairknock/types.hpp"

namespace pairknock::norm {

struct NormalizationConfig {
    bool strip_latex_spacing = true;
    bool numeric_canonicalization = true;
    bool case_fold = true;
};

// Canonical strings longer than this are truncated for team hashing; the
// raw answer is kept untouched. Guards against degenerate generations.
inline constexpr std::size_t kCanonicalMaxLength = 512;

// Normalized form of a raw answer string. Deterministic and idempotent.
std::string canonical_form(std::string_view raw, const NormalizationConfig& cfg = {});

// Builds a key with both forms populated.
AnswerKey make_answer_key(std::string raw, const NormalizationConfig& cfg = {});

// Re-normalizes `key.raw` under `cfg`.
AnswerKey canonicalize(const AnswerKey& key, const NormalizationConfig& cfg = {});

// Content of the last balanced `\boxed{...}` in the text, as a fully
// canonicalized key; absent when no boxed expression exists. Absence is a
// value, not an error.
std::optional<AnswerKey> extract_final_answer(std::string_view text,
                                              const NormalizationConfig& cfg = {});

// True iff the canonical strings are equal. Both keys must already be
// canonicalized (make_answer_key / canonicalize / extract_final_answer do).
bool answers_equivalent(const AnswerKey& a, const AnswerKey& b);

// Fills in missing candidate answers by extraction and sets `truth` by
// comparing the answer against the owning problem's ground truth. Candidates
// whose problem has no ground truth keep whatever truth they arrived with.
void apply_truth_labels(const std::vector<Problem>& problems,
                        std::vector<Candidate>& candidates,
                        const NormalizationConfig& cfg = {});

}  // namespace pairknock::norm
