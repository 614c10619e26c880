#pragma once

#include <stdexcept>
#include <string>

namespace pairknock {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Judging
// ---------------------------------------------------------------------------

// A prompt input contains one of the template placeholder tokens; the
// substitution would be ambiguous, which signals fixture corruption.
struct PlaceholderCollision : Error {
    using Error::Error;
};

struct MalformedVerdict : Error {
    enum class Reason { MissingTag, BadLabel, DuplicatedConflict };
    Reason reason;
    MalformedVerdict(Reason r, const std::string& what) : Error(what), reason(r) {}
};

// Transport-level failure after retries were exhausted.
struct JudgeUnavailable : Error {
    using Error::Error;
};

// The backend kept returning completions that do not parse as a verdict.
// Carries the last completion so callers can log or apply a fallback policy.
struct VerdictUnparseable : Error {
    std::string last_completion;
    VerdictUnparseable(const std::string& what, std::string completion)
        : Error(what), last_completion(std::move(completion)) {}
};

struct MissingTruth : Error {
    using Error::Error;
};

struct CapabilityMissing : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Selectors
// ---------------------------------------------------------------------------

struct NoAnswers : Error {
    using Error::Error;
};

struct NonFiniteScore : Error {
    using Error::Error;
};

struct EmptySteps : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Tournament
// ---------------------------------------------------------------------------

// Round count exceeded the configured cap; unreachable unless pairing is
// broken, so it is a loud failure rather than a recoverable condition.
struct MaxRoundsExceeded : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

struct WrongPoolSize : Error {
    using Error::Error;
};

struct PoolTooSmall : Error {
    using Error::Error;
};

struct TooFewProblems : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Data pipeline
// ---------------------------------------------------------------------------

struct MissingFewShotAsset : Error {
    using Error::Error;
};

}  // namespace pairknock
