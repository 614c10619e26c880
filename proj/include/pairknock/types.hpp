#pragma once

/**
 * Core domain types shared by every module.
 *
 * All types here are plain immutable-after-construction values; they carry
 * no engine state and are safe to copy across threads. Persistence is
 * line-delimited JSON (see jsonl.hpp) with one record per line and an
 * explicit "kind" discriminator, so multi-hundred-thousand-record pipeline
 * files stream without being held in memory and diff cleanly as fixtures.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pairknock {

// A final answer as extracted from a solution, plus its normalized form.
// Equal canonical strings define team membership in the tournament.
struct AnswerKey {
    std::string raw;
    std::string canonical;

    friend bool operator==(const AnswerKey&, const AnswerKey&) = default;
};

struct Problem {
    std::string id;
    std::string statement;
    std::optional<AnswerKey> ground_truth;
    std::string source;
    std::map<std::string, std::string> metadata;

    friend bool operator==(const Problem&, const Problem&) = default;
};

struct Candidate {
    std::string id;
    std::string problem_id;
    std::string text;
    std::optional<AnswerKey> answer;  // extracted final answer, if any
    std::optional<bool> truth;        // unknown at test time; known in datagen

    friend bool operator==(const Candidate&, const Candidate&) = default;
};

enum class Label : std::uint8_t { Correct, Incorrect };

inline bool label_matches(Label l, bool truth) {
    return (l == Label::Correct) == truth;
}

// One pairwise judgment: correctness labels for both responses plus the
// full judge completion the labels were parsed from.
struct Verdict {
    Label a = Label::Incorrect;
    Label b = Label::Incorrect;
    std::string transcript;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

enum class Outcome : std::uint8_t { LeftAdvances, RightAdvances, BothEliminated };
enum class Tiebreak : std::uint8_t { None, Random };

// One tournament match. `left_id`/`right_id` follow the order the pair was
// actually judged in, so the verdict labels always line up with the ids.
struct MatchRecord {
    int round = 0;
    std::string left_id;
    std::string right_id;
    Verdict verdict;
    Outcome outcome = Outcome::BothEliminated;
    Tiebreak tiebreak = Tiebreak::None;
    std::uint64_t rng_draws = 0;

    friend bool operator==(const MatchRecord&, const MatchRecord&) = default;

    // Sole constructor used by the engine and the parser; throws
    // std::logic_error unless the outcome is consistent with the verdict:
    //   (Correct,Incorrect) -> LeftAdvances, no tiebreak
    //   (Incorrect,Correct) -> RightAdvances, no tiebreak
    //   (Correct,Correct)   -> Left- or RightAdvances, random tiebreak
    //   (Incorrect,Incorrect) -> BothEliminated, no tiebreak
    static MatchRecord make(int round, std::string left_id, std::string right_id,
                            Verdict verdict, Outcome outcome, Tiebreak tiebreak,
                            std::uint64_t rng_draws);
};

enum class Termination : std::uint8_t {
    SingleSurvivor,
    SingleTeamEarlyStop,
    PoolEmptiedFallback,
    AllSameTeamAtStart,
};

struct TournamentResult {
    std::string problem_id;  // join key for downstream stages
    std::optional<std::string> winner;
    std::vector<MatchRecord> matches;
    Termination termination = Termination::SingleSurvivor;
    std::uint64_t seed = 0;

    friend bool operator==(const TournamentResult&, const TournamentResult&) = default;
};

// enum <-> wire-string helpers (also used by the JSONL layer)
std::string_view to_string(Label l);
std::string_view to_string(Outcome o);
std::string_view to_string(Tiebreak t);
std::string_view to_string(Termination t);
Label label_from_string(std::string_view s);
Outcome outcome_from_string(std::string_view s);
Tiebreak tiebreak_from_string(std::string_view s);
Termination termination_from_string(std::string_view s);

}  // namespace pairknock
