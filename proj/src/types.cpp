#include "pairknock/types.hpp"

#include <stdexcept>

namespace pairknock {

MatchRecord MatchRecord::make(int round, std::string left_id, std::string right_id,
                              Verdict verdict, Outcome outcome, Tiebreak tiebreak,
                              std::uint64_t rng_draws) {
    if (left_id == right_id) {
        throw std::logic_error("match pairs a candidate against itself: " + left_id);
    }
    const bool a = verdict.a == Label::Correct;
    const bool b = verdict.b == Label::Correct;
    bool ok = false;
    if (a && !b) {
        ok = outcome == Outcome::LeftAdvances && tiebreak == Tiebreak::None;
    } else if (!a && b) {
        ok = outcome == Outcome::RightAdvances && tiebreak == Tiebreak::None;
    } else if (a && b) {
        ok = (outcome == Outcome::LeftAdvances || outcome == Outcome::RightAdvances) &&
             tiebreak == Tiebreak::Random;
    } else {
        ok = outcome == Outcome::BothEliminated && tiebreak == Tiebreak::None;
    }
    if (!ok) {
        throw std::logic_error("match outcome inconsistent with verdict for pair (" +
                               left_id + ", " + right_id + ")");
    }
    MatchRecord m;
    m.round = round;
    m.left_id = std::move(left_id);
    m.right_id = std::move(right_id);
    m.verdict = std::move(verdict);
    m.outcome = outcome;
    m.tiebreak = tiebreak;
    m.rng_draws = rng_draws;
    return m;
}

std::string_view to_string(Label l) {
    return l == Label::Correct ? "correct" : "incorrect";
}

std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::LeftAdvances: return "left_advances";
        case Outcome::RightAdvances: return "right_advances";
        case Outcome::BothEliminated: return "both_eliminated";
    }
    return "both_eliminated";
}

std::string_view to_string(Tiebreak t) {
    return t == Tiebreak::Random ? "random" : "none";
}

std::string_view to_string(Termination t) {
    switch (t) {
        case Termination::SingleSurvivor: return "single_survivor";
        case Termination::SingleTeamEarlyStop: return "single_team_early_stop";
        case Termination::PoolEmptiedFallback: return "pool_emptied_fallback";
        case Termination::AllSameTeamAtStart: return "all_same_team_at_start";
    }
    return "single_survivor";
}

Label label_from_string(std::string_view s) {
    if (s == "correct") return Label::Correct;
    if (s == "incorrect") return Label::Incorrect;
    throw std::invalid_argument("unknown label: " + std::string(s));
}

Outcome outcome_from_string(std::string_view s) {
    if (s == "left_advances") return Outcome::LeftAdvances;
    if (s == "right_advances") return Outcome::RightAdvances;
    if (s == "both_eliminated") return Outcome::BothEliminated;
    throw std::invalid_argument("unknown outcome: " + std::string(s));
}

Tiebreak tiebreak_from_string(std::string_view s) {
    if (s == "none") return Tiebreak::None;
    if (s == "random") return Tiebreak::Random;
    throw std::invalid_argument("unknown tiebreak: " + std::string(s));
}

Termination termination_from_string(std::string_view s) {
    if (s == "single_survivor") return Termination::SingleSurvivor;
    if (s == "single_team_early_stop") return Termination::SingleTeamEarlyStop;
    if (s == "pool_emptied_fallback") return Termination::PoolEmptiedFallback;
    if (s == "all_same_team_at_start") return Termination::AllSameTeamAtStart;
    throw std::invalid_argument("unknown termination: " + std::string(s));
}

}  // namespace pairknock
