#include "pairknock/prompts.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <vector>

#include "pairknock/errors.hpp"

namespace pairknock::judges {
namespace {

// clang-format off
constexpr std::string_view kPairwiseTemplate =
R"(**Task Objective:**
Evaluate the correctness of two responses (Response A and Response B) to a given math question. Perform a step-by-step verification of each response’s accuracy. After completing the step-by-step checks, provide a final correctness judgment for each response.

**Steps to Follow:**

0. **Extract Answers from both Responses:**
   - Read and both responses to identify the final answers provided.
   - If the responses provide different answers, make sure there are is no possible way that both responses can be correct. It must be the case that one response is correct and the other is incorrect or both are incorrect.

1. **Step-by-Step Verification of Correctness:**
   - **For each response (Response A and Response B):**
     Carefully examine each step of the solution provided. Check the following:
     - **Mathematical accuracy:** Ensure all calculations, algebraic simplifications, and mathematical operations are correct.
     - **Logical consistency:** Verify that each step follows logically from the previous one and that the reasoning is sound.
     - **Completeness:** Make sure that all necessary steps are included to fully solve the problem and reach the final answer.

   While performing this step-by-step evaluation, refer to the **Additional Tips** section for helpful techniques to validate each response's accuracy.
   **Attention:** When checking the correctness of a single step, you should never first conclude the correctness of this step (for example, *"This step is incorrect because..."* is strictly forbidden). You should neutrally check this step, provide evidence about its correctness, and then finally draw a conclusion about the correctness of this step. In other words, you should first employ the techniques in **Additional Tips** to check the correctness of this step, and then draw a conclusion about the correctness of this step.

2. **Final Conclusion:**
   - After completing the step-by-step verification for each response, sum up the information you have now, then finally determine whether each response’s answer is **correct** or **incorrect**.
   - Provide the final judgment for each response, the output should in-closed with the following tags:
     - If Response A’s answer is correct:
       <resp_a_judge>Correct</resp_a_judge>
     - If Response A’s answer is incorrect:
       <resp_a_judge>Incorrect</resp_a_judge>
     - If Response B’s answer is correct:
       <resp_b_judge>Correct</resp_b_judge>
     - If Response B’s answer is incorrect:
       <resp_b_judge>Incorrect</resp_b_judge>
   - **Note:** The responses A and response B can be either correct or incorrect, or both correct, or both incorrect. You should provide the final judgment for each response. There is no guarantee that at least one response is correct or incorrect.

**Additional Tips:**

- **Key Validation Techniques (to apply during Step 1):**
  - **Re-derive Key Parts of the Solution:** Independently calculate or derive crucial steps of the solution to verify their correctness.
  - **Verify Calculations:** Double-check all mathematical operations (e.g., addition, multiplication, division) to confirm accuracy.
  - **Compare Responses:** If needed, compare similar steps between Response A’s and Response B’s answers to identify discrepancies or inconsistencies.

- **The final output format** should be as follows:
**Final Judgment:**
**Response A:** <resp_a_judge>Correct/Incorrect</resp_a_judge>
**Response B:** <resp_b_judge>Correct/Incorrect</resp_b_judge>

**Question:** <question> {question} </question>
**Response A:** <response_a> {response_a} </response_a>
**Response B:** <response_b> {response_b} </response_b>)";

constexpr std::string_view kPointwiseTemplate =
R"(**Task Objective:**
Evaluate the correctness of a response to a given math question. Perform a step-by-step verification of the response’s accuracy. After completing the step-by-step checks, provide a final correctness judgment for the response.

**Steps to Follow:**

0. **Extract the Answer from the Response:**
   - Read the response to identify the final answer provided.

1. **Step-by-Step Verification of Correctness:**
   - Carefully examine each step of the solution provided. Check the following:
     - **Mathematical accuracy:** Ensure all calculations, algebraic simplifications, and mathematical operations are correct.
     - **Logical consistency:** Verify that each step follows logically from the previous one and that the reasoning is sound.
     - **Completeness:** Make sure that all necessary steps are included to fully solve the problem and reach the final answer.

   While performing this step-by-step evaluation, refer to the **Additional Tips** section for helpful techniques to validate the response's accuracy.
   **Attention:** When checking the correctness of a single step, you should never first conclude the correctness of this step (for example, *"This step is incorrect because..."* is strictly forbidden). You should neutrally check this step, provide evidence about its correctness, and then finally draw a conclusion about the correctness of this step.

2. **Final Conclusion:**
   - After completing the step-by-step verification, sum up the information you have now, then finally determine whether the response’s answer is **correct** or **incorrect**.
   - Provide the final judgment, the output should in-closed with the following tags:
     - If the response’s answer is correct:
       <resp_judge>Correct</resp_judge>
     - If the response’s answer is incorrect:
       <resp_judge>Incorrect</resp_judge>

**Additional Tips:**

- **Key Validation Techniques (to apply during Step 1):**
  - **Re-derive Key Parts of the Solution:** Independently calculate or derive crucial steps of the solution to verify their correctness.
  - **Verify Calculations:** Double-check all mathematical operations (e.g., addition, multiplication, division) to confirm accuracy.

- **The final output format** should be as follows:
**Final Judgment:**
**Response:** <resp_judge>Correct/Incorrect</resp_judge>

**Question:** <question> {question} </question>
**Response:** <response> {response} </response>)";
// clang-format on

void check_no_placeholder(std::string_view input, std::string_view what) {
    for (std::string_view token : {kQuestionPlaceholder, kResponseAPlaceholder,
                                   kResponseBPlaceholder, kResponsePlaceholder}) {
        if (input.find(token) != std::string_view::npos) {
            throw PlaceholderCollision("unescaped placeholder token '" + std::string(token) +
                                       "' in " + std::string(what));
        }
    }
}

std::string substitute(std::string_view tmpl,
                       std::initializer_list<std::pair<std::string_view, std::string_view>> subs) {
    std::string out(tmpl);
    for (auto [token, value] : subs) {
        auto pos = out.find(token);
        while (pos != std::string::npos) {
            out.replace(pos, token.size(), value);
            pos = out.find(token, pos + value.size());
        }
    }
    return out;
}

std::string fold_trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// Scans every <open>...<close> occurrence (overlap-tolerant) and applies the
// duplicate rules documented in the header.
std::optional<Label> scan_tag(const std::string& completion, std::string_view tag_name,
                              bool& saw_any) {
    const std::string open = "<" + std::string(tag_name) + ">";
    const std::string close = "</" + std::string(tag_name) + ">";
    saw_any = false;
    std::optional<Label> result;
    std::size_t pos = 0;
    while ((pos = completion.find(open, pos)) != std::string::npos) {
        saw_any = true;
        std::size_t inner_start = pos + open.size();
        std::size_t end = completion.find(close, inner_start);
        pos = inner_start;  // tolerate nesting: keep scanning inside
        if (end == std::string::npos) continue;
        std::string label = fold_trim(
            std::string_view(completion).substr(inner_start, end - inner_start));
        Label parsed;
        if (label == "correct") {
            parsed = Label::Correct;
        } else if (label == "incorrect") {
            parsed = Label::Incorrect;
        } else {
            continue;  // instruction echoes like "Correct/Incorrect" are skipped
        }
        if (result && *result != parsed) {
            throw MalformedVerdict(MalformedVerdict::Reason::DuplicatedConflict,
                                   "conflicting <" + std::string(tag_name) + "> labels");
        }
        result = parsed;
    }
    return result;
}

Label require_tag(const std::string& completion, std::string_view tag_name) {
    bool saw_any = false;
    std::optional<Label> label = scan_tag(completion, tag_name, saw_any);
    if (label) return *label;
    if (saw_any) {
        throw MalformedVerdict(MalformedVerdict::Reason::BadLabel,
                               "no valid label inside <" + std::string(tag_name) + ">");
    }
    throw MalformedVerdict(MalformedVerdict::Reason::MissingTag,
                           "missing <" + std::string(tag_name) + "> tag");
}

}  // namespace

std::string_view pairwise_prompt_template() { return kPairwiseTemplate; }
std::string_view pointwise_prompt_template() { return kPointwiseTemplate; }

std::string render_pairwise_prompt(const Problem& problem, const Candidate& left,
                                   const Candidate& right) {
    check_no_placeholder(problem.statement, "problem statement");
    check_no_placeholder(left.text, "left candidate text");
    check_no_placeholder(right.text, "right candidate text");
    return substitute(kPairwiseTemplate, {{kQuestionPlaceholder, problem.statement},
                                          {kResponseAPlaceholder, left.text},
                                          {kResponseBPlaceholder, right.text}});
}

std::string render_pointwise_prompt(const Problem& problem, const Candidate& candidate) {
    check_no_placeholder(problem.statement, "problem statement");
    check_no_placeholder(candidate.text, "candidate text");
    return substitute(kPointwiseTemplate, {{kQuestionPlaceholder, problem.statement},
                                           {kResponsePlaceholder, candidate.text}});
}

Verdict parse_pairwise_verdict(const std::string& completion) {
    Verdict v;
    v.a = require_tag(completion, "resp_a_judge");
    v.b = require_tag(completion, "resp_b_judge");
    v.transcript = completion;
    return v;
}

Label parse_pointwise_verdict(const std::string& completion) {
    return require_tag(completion, "resp_judge");
}

std::string format_pairwise_judgment(Label a, Label b) {
    auto word = [](Label l) { return l == Label::Correct ? "Correct" : "Incorrect"; };
    std::string out = "**Final Judgment:**\n";
    out += "**Response A:** <resp_a_judge>";
    out += word(a);
    out += "</resp_a_judge>\n**Response B:** <resp_b_judge>";
    out += word(b);
    out += "</resp_b_judge>";
    return out;
}

std::string format_pointwise_judgment(Label l) {
    std::string out = "**Final Judgment:**\n**Response:** <resp_judge>";
    out += l == Label::Correct ? "Correct" : "Incorrect";
    out += "</resp_judge>";
    return out;
}

}  // namespace pairknock::judges
