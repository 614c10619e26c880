#pragma once

/**
 * Prompt rendering and verdict parsing for generative judges.
 *
 * The pairwise template instructs the judge to verify two responses step by
 * step and close with one `<resp_a_judge>` and one `<resp_b_judge>` tag whose
 * inner text is Correct or Incorrect. The pointwise template mirrors it with
 * a single response slot and a single `<resp_judge>` tag.
 *
 * Parsing rules, per tag:
 *   - no occurrence at all                          -> MalformedVerdict(MissingTag)
 *   - occurrences exist but none carries a valid
 *     Correct/Incorrect label (case-insensitive)    -> MalformedVerdict(BadLabel)
 *   - valid occurrences disagree with each other    -> MalformedVerdict(DuplicatedConflict)
 *   - otherwise the last valid occurrence wins
 * Repeats with the same label are fine (judges often restate the final
 * judgment); a completion that echoes the instruction examples verbatim
 * carries both labels and is rejected as conflicting.
 */

#include <string>
#include <string_view>

#include "pairknock/types.hpp"

namespace pairknock::judges {

// Placeholder tokens substituted by the renderers.
inline constexpr std::string_view kQuestionPlaceholder = "{question}";
inline constexpr std::string_view kResponseAPlaceholder = "{response_a}";
inline constexpr std::string_view kResponseBPlaceholder = "{response_b}";
inline constexpr std::string_view kResponsePlaceholder = "{response}";

std::string_view pairwise_prompt_template();
std::string_view pointwise_prompt_template();

// Byte-stable substitution of the placeholders; throws PlaceholderCollision
// when any input itself contains a placeholder token.
std::string render_pairwise_prompt(const Problem& problem, const Candidate& left,
                                   const Candidate& right);
std::string render_pointwise_prompt(const Problem& problem, const Candidate& candidate);

// Throws MalformedVerdict; on success the returned verdict's transcript is
// the full completion text.
Verdict parse_pairwise_verdict(const std::string& completion);
Label parse_pointwise_verdict(const std::string& completion);

// Canonical completion suffix used by simulated judges; parses back to
// exactly (a, b).
std::string format_pairwise_judgment(Label a, Label b);
std::string format_pointwise_judgment(Label l);

}  // namespace pairknock::judges
