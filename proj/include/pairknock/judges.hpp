#pragma once

/**
 * Judge backends.
 *
 * Two implementations of the pairwise/pointwise judging contract:
 *
 *  - RemoteJudge: speaks an HTTP JSON chat-completion protocol (single user
 *    message, temperature, optional token logprobs). Auth token comes from
 *    an environment variable, never from config files. Concurrency is
 *    bounded by max_in_flight across all threads sharing the backend.
 *
 *  - NoisyOracleJudge: a simulation backend that knows candidate ground
 *    truth and flips each label independently with probability epsilon.
 *    Flip draws come from substreams keyed by (seed, problem id, the
 *    unordered candidate pair, candidate id), so results are independent of
 *    execution order and swapping the pair swaps the labels exactly.
 *
 * Backends are safe to share across concurrent matches.
 */

#include <cstdint>
#include <memory>
#include <string>

#include <json.hpp>

#include "pairknock/errors.hpp"
#include "pairknock/prompts.hpp"
#include "pairknock/types.hpp"

namespace pairknock::judges {

enum class BackendKind { RemoteLLM, NoisyOracle };

struct JudgeBackendConfig {
    BackendKind kind = BackendKind::NoisyOracle;

    // RemoteLLM
    std::string endpoint;    // e.g. http://localhost:8000/v1/chat/completions
    std::string model_name;
    double temperature = 0.0;
    int max_in_flight = 4;
    int retry_limit = 2;
    int timeout_ms = 60000;
    bool token_probabilities = false;  // capability flag for logprob scoring
    std::string api_token_env = "PAIRKNOCK_API_TOKEN";

    // NoisyOracle
    double flip_probability = 0.0;
    std::uint64_t seed = 0;
};

struct JudgmentRecord {
    std::string problem_id;
    std::string left_id;
    std::string right_id;
    std::string prompt;
    Verdict verdict;
    std::string raw_completion;
    std::uint64_t latency_ms = 0;
    int attempt = 1;

    // PolicyDefault marks verdicts assigned by the malformed-completion
    // policy rather than parsed from raw_completion.
    enum class Source : std::uint8_t { Parsed, PolicyDefault };
    Source source = Source::Parsed;
};

struct PointJudgment {
    std::string problem_id;
    std::string candidate_id;
    Label label = Label::Incorrect;
    std::string raw_completion;
};

class PairwiseJudge {
public:
    virtual ~PairwiseJudge() = default;

    // Throws JudgeUnavailable (transport), VerdictUnparseable (retries
    // exhausted on malformed completions), MissingTruth (oracle only).
    virtual JudgmentRecord judge_pair(const Problem& problem, const Candidate& left,
                                      const Candidate& right) = 0;

    virtual PointJudgment judge_point(const Problem& problem, const Candidate& candidate) = 0;

    // P(candidate judged correct); throws CapabilityMissing when the
    // backend cannot produce token probabilities.
    virtual double correct_probability(const Problem& problem, const Candidate& candidate) = 0;

    // How many judgments may usefully run at once against this backend.
    virtual int max_concurrency() const { return 1; }
};

// Malformed-completion policy: retry (inside the backend), then replay once
// with swapped response order, then default to (Correct, Correct) so the
// match is decided by the tournament's tiebreak randomness. The returned
// record's left/right ids reflect the order actually judged.
JudgmentRecord judge_pair_with_policy(PairwiseJudge& judge, const Problem& problem,
                                      const Candidate& left, const Candidate& right);

class NoisyOracleJudge final : public PairwiseJudge {
public:
    explicit NoisyOracleJudge(const JudgeBackendConfig& cfg);

    JudgmentRecord judge_pair(const Problem&, const Candidate&, const Candidate&) override;
    PointJudgment judge_point(const Problem&, const Candidate&) override;
    double correct_probability(const Problem&, const Candidate&) override;
    int max_concurrency() const override { return 1; }  // pure + cheap

private:
    bool flipped(std::uint64_t pair_key, const std::string& candidate_id) const;

    double epsilon_;
    std::uint64_t seed_;
};

// Transport abstraction so protocol logic is testable without sockets.
struct HttpResponse {
    int status = 0;  // 0 = transport failure
    std::string body;
    std::string error;
};

class HttpTransport {
public:
    virtual ~HttpTransport() = default;
    virtual HttpResponse post_json(const std::string& body) = 0;
};

// cpp-httplib implementation bound to one endpoint URL.
std::unique_ptr<HttpTransport> make_httplib_transport(const std::string& endpoint_url,
                                                      const std::string& bearer_token,
                                                      int timeout_ms);

// Plain chat-completion call shared by the judge and the candidate
// generator: returns completion text (choices[0].message.content).
struct CompletionRequest {
    std::string prompt;
    double temperature = 0.0;
    double top_p = -1.0;       // < 0 = omit
    int max_tokens = -1;       // < 0 = omit
    bool want_logprobs = false;
};

class ChatCompletionClient {
public:
    ChatCompletionClient(std::string model_name, std::shared_ptr<HttpTransport> transport,
                         int retry_limit, int max_in_flight);

    // Throws JudgeUnavailable after transport retries are exhausted.
    nlohmann::json complete_raw(const CompletionRequest& req);
    std::string complete_text(const CompletionRequest& req);

private:
    struct Slot;
    std::string model_name_;
    std::shared_ptr<HttpTransport> transport_;
    int retry_limit_;
    std::shared_ptr<Slot> slots_;
};

class RemoteJudge final : public PairwiseJudge {
public:
    // transport may be injected for tests; defaults to httplib on cfg.endpoint
    explicit RemoteJudge(const JudgeBackendConfig& cfg,
                         std::shared_ptr<HttpTransport> transport = nullptr);

    JudgmentRecord judge_pair(const Problem&, const Candidate&, const Candidate&) override;
    PointJudgment judge_point(const Problem&, const Candidate&) override;
    double correct_probability(const Problem&, const Candidate&) override;
    int max_concurrency() const override { return cfg_.max_in_flight; }

private:
    JudgeBackendConfig cfg_;
    std::shared_ptr<ChatCompletionClient> client_;
};

// Validates the config invariants and builds the backend.
std::unique_ptr<PairwiseJudge> make_judge(const JudgeBackendConfig& cfg,
                                          std::shared_ptr<HttpTransport> transport = nullptr);

}  // namespace pairknock::judges
