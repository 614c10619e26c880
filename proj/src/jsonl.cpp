#include "pairknock/jsonl.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pairknock {

using nlohmann::json;

void to_json(json& j, const AnswerKey& v) {
    j = json{{"raw", v.raw}, {"canonical", v.canonical}};
}

void from_json(const json& j, AnswerKey& v) {
    v.raw = j.at("raw").get<std::string>();
    if (j.contains("canonical")) {
        v.canonical = j.at("canonical").get<std::string>();
    } else {
        // hand-written fixtures may carry only the raw form
        v.canonical = norm::canonical_form(v.raw);
    }
}

void to_json(json& j, const Problem& v) {
    j = json{{"id", v.id}, {"statement", v.statement}, {"source", v.source}};
    if (v.ground_truth) j["ground_truth"] = *v.ground_truth;
    if (!v.metadata.empty()) j["metadata"] = v.metadata;
}

void from_json(const json& j, Problem& v) {
    v.id = j.at("id").get<std::string>();
    v.statement = j.at("statement").get<std::string>();
    v.source = j.value("source", std::string{});
    if (j.contains("ground_truth") && !j.at("ground_truth").is_null()) {
        v.ground_truth = j.at("ground_truth").get<AnswerKey>();
    } else {
        v.ground_truth.reset();
    }
    v.metadata.clear();
    if (j.contains("metadata")) {
        v.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
    }
}

void to_json(json& j, const Candidate& v) {
    j = json{{"id", v.id}, {"problem_id", v.problem_id}, {"text", v.text}};
    if (v.answer) j["answer"] = *v.answer;
    if (v.truth) j["truth"] = *v.truth;
}

void from_json(const json& j, Candidate& v) {
    v.id = j.at("id").get<std::string>();
    v.problem_id = j.at("problem_id").get<std::string>();
    v.text = j.at("text").get<std::string>();
    if (j.contains("answer") && !j.at("answer").is_null()) {
        v.answer = j.at("answer").get<AnswerKey>();
    } else {
        v.answer.reset();
    }
    if (j.contains("truth") && !j.at("truth").is_null()) {
        v.truth = j.at("truth").get<bool>();
    } else {
        v.truth.reset();
    }
}

void to_json(json& j, const Verdict& v) {
    j = json{{"a", to_string(v.a)}, {"b", to_string(v.b)}, {"transcript", v.transcript}};
}

void from_json(const json& j, Verdict& v) {
    v.a = label_from_string(j.at("a").get<std::string>());
    v.b = label_from_string(j.at("b").get<std::string>());
    v.transcript = j.value("transcript", std::string{});
}

void to_json(json& j, const MatchRecord& v) {
    j = json{
        {"round", v.round},
        {"left_id", v.left_id},
        {"right_id", v.right_id},
        {"verdict", v.verdict},
        {"outcome", to_string(v.outcome)},
        {"tiebreak", to_string(v.tiebreak)},
        {"rng_draws", v.rng_draws},
    };
}

void from_json(const json& j, MatchRecord& v) {
    // route through make() so parsed records obey the same invariants
    v = MatchRecord::make(j.at("round").get<int>(),
                          j.at("left_id").get<std::string>(),
                          j.at("right_id").get<std::string>(),
                          j.at("verdict").get<Verdict>(),
                          outcome_from_string(j.at("outcome").get<std::string>()),
                          tiebreak_from_string(j.at("tiebreak").get<std::string>()),
                          j.at("rng_draws").get<std::uint64_t>());
}

void to_json(json& j, const TournamentResult& v) {
    j = json{
        {"problem_id", v.problem_id},
        {"matches", v.matches},
        {"termination", to_string(v.termination)},
        {"seed", v.seed},
    };
    if (v.winner) j["winner"] = *v.winner;
}

void from_json(const json& j, TournamentResult& v) {
    v.problem_id = j.at("problem_id").get<std::string>();
    if (j.contains("winner") && !j.at("winner").is_null()) {
        v.winner = j.at("winner").get<std::string>();
    } else {
        v.winner.reset();
    }
    v.matches = j.at("matches").get<std::vector<MatchRecord>>();
    v.termination = termination_from_string(j.at("termination").get<std::string>());
    v.seed = j.at("seed").get<std::uint64_t>();
}

namespace jsonl {

std::string record_line(const Problem& p) { return to_line(p, "problem"); }
std::string record_line(const Candidate& c) { return to_line(c, "candidate"); }
std::string record_line(const MatchRecord& m) { return to_line(m, "match"); }
std::string record_line(const TournamentResult& r) { return to_line(r, "tournament_result"); }

namespace {

json parse_line(const std::string& line, std::size_t lineno) {
    try {
        return json::parse(line);
    } catch (const json::exception& e) {
        throw Error("bad JSONL at line " + std::to_string(lineno) + ": " + e.what());
    }
}

}  // namespace

Corpus read_corpus(std::istream& in, const norm::NormalizationConfig& cfg) {
    Corpus corpus;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json j = parse_line(line, lineno);
        const std::string kind = j.value("kind", std::string{});
        if (kind == "problem") {
            corpus.problems.push_back(j.get<Problem>());
        } else if (kind == "candidate") {
            corpus.candidates.push_back(j.get<Candidate>());
        } else {
            throw Error("unexpected record kind '" + kind + "' at line " +
                        std::to_string(lineno));
        }
    }
    for (Candidate& c : corpus.candidates) {
        if (!c.answer) c.answer = norm::extract_final_answer(c.text, cfg);
    }
    return corpus;
}

Corpus load_corpus_file(const std::string& path, const norm::NormalizationConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open corpus file: " + path);
    return read_corpus(in, cfg);
}

Corpus load_corpus_files(const std::string& problems_path,
                         const std::string& candidates_path,
                         const norm::NormalizationConfig& cfg) {
    Corpus corpus;
    if (!problems_path.empty()) {
        Corpus p = load_corpus_file(problems_path, cfg);
        corpus.problems = std::move(p.problems);
        corpus.candidates = std::move(p.candidates);
    }
    if (!candidates_path.empty() && candidates_path != problems_path) {
        Corpus c = load_corpus_file(candidates_path, cfg);
        corpus.problems.insert(corpus.problems.end(),
                               std::make_move_iterator(c.problems.begin()),
                               std::make_move_iterator(c.problems.end()));
        corpus.candidates.insert(corpus.candidates.end(),
                                 std::make_move_iterator(c.candidates.begin()),
                                 std::make_move_iterator(c.candidates.end()));
    }
    return corpus;
}

std::vector<TournamentResult> read_results(std::istream& in) {
    std::vector<TournamentResult> results;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json j = parse_line(line, lineno);
        const std::string kind = j.value("kind", std::string{});
        if (kind != "tournament_result") {
            throw Error("expected tournament_result at line " + std::to_string(lineno) +
                        ", got '" + kind + "'");
        }
        results.push_back(j.get<TournamentResult>());
    }
    return results;
}

std::vector<TournamentResult> load_results_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open results file: " + path);
    return read_results(in);
}

void write_results(std::ostream& out, const std::vector<TournamentResult>& results) {
    for (const TournamentResult& r : results) out << record_line(r) << '\n';
}

}  // namespace jsonl
}  // namespace pairknock
