#pragma once

/**
 * JSONL persistence for the core types.
 *
 * One entity per line, UTF-8, with a "kind" discriminator on every
 * top-level record ("problem", "candidate", "match", "tournament_result").
 * Field names match the domain types exactly. Optional fields are omitted
 * when absent, and parsing re-runs the same consistency checks as
 * construction, so a file can never smuggle in an inconsistent record.
 */

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "pairknock/answer_norm.hpp"
#include "pairknock/types.hpp"

namespace pairknock {

// nlohmann ADL hooks: `json j = value;` / `j.get<T>()` work for all core types.
void to_json(nlohmann::json& j, const AnswerKey& v);
void from_json(const nlohmann::json& j, AnswerKey& v);
void to_json(nlohmann::json& j, const Problem& v);
void from_json(const nlohmann::json& j, Problem& v);
void to_json(nlohmann::json& j, const Candidate& v);
void from_json(const nlohmann::json& j, Candidate& v);
void to_json(nlohmann::json& j, const Verdict& v);
void from_json(const nlohmann::json& j, Verdict& v);
void to_json(nlohmann::json& j, const MatchRecord& v);
void from_json(const nlohmann::json& j, MatchRecord& v);
void to_json(nlohmann::json& j, const TournamentResult& v);
void from_json(const nlohmann::json& j, TournamentResult& v);

namespace jsonl {

// Discriminated single-line record.
template <typename T>
std::string to_line(const T& value, std::string_view kind) {
    nlohmann::json j = value;
    j["kind"] = kind;
    return j.dump();
}

std::string record_line(const Problem& p);
std::string record_line(const Candidate& c);
std::string record_line(const MatchRecord& m);
std::string record_line(const TournamentResult& r);

struct Corpus {
    std::vector<Problem> problems;
    std::vector<Candidate> candidates;
};

// Reads any mix of problem/candidate records from one stream/file.
// Unknown kinds raise; missing candidate answers are filled in by
// extraction so downstream stages always see normalized keys.
Corpus read_corpus(std::istream& in, const norm::NormalizationConfig& cfg = {});
Corpus load_corpus_file(const std::string& path, const norm::NormalizationConfig& cfg = {});

// Convenience for split problem/candidate files; either path may be empty.
Corpus load_corpus_files(const std::string& problems_path,
                         const std::string& candidates_path,
                         const norm::NormalizationConfig& cfg = {});

std::vector<TournamentResult> read_results(std::istream& in);
std::vector<TournamentResult> load_results_file(const std::string& path);

void write_results(std::ostream& out, const std::vector<TournamentResult>& results);

}  // namespace jsonl
}  // namespace pairknock
