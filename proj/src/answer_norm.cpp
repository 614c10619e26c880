#include "pairknock/answer_norm.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <unordered_map>

namespace pairknock::norm {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Tokens removed wholesale before comparison. Order matters: longer
// commands first so "\quad" is not consumed as "\qu" + "ad".
constexpr std::string_view kDroppedTokens[] = {
    "\\qquad", "\\quad", "\\left", "\\right", "\\,", "\\;", "\\:", "\\!", "\\ ", "~",
};

std::string strip_latex_tokens(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        bool dropped = false;
        for (std::string_view tok : kDroppedTokens) {
            if (s.substr(i, tok.size()) == tok) {
                i += tok.size();
                dropped = true;
                break;
            }
        }
        if (!dropped) out.push_back(s[i++]);
    }
    return out;
}

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

// Parses an optionally signed integer of at most 18 digits (no overflow).
std::optional<std::int64_t> parse_int(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty() || s.size() > 18) return std::nullopt;
    std::int64_t v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        v = v * 10 + (c - '0');
    }
    return neg ? -v : v;
}

// digits[.digits], .digits, digits.  -> exact rational
std::optional<Rational> parse_decimal(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    auto dot = s.find('.');
    std::string_view int_part = dot == std::string_view::npos ? s : s.substr(0, dot);
    std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) return std::nullopt;
    if (int_part.size() + frac_part.size() > 18) return std::nullopt;
    std::int64_t num = 0;
    for (char c : int_part) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        num = num * 10 + (c - '0');
    }
    std::int64_t den = 1;
    for (char c : frac_part) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        num = num * 10 + (c - '0');
        den *= 10;
    }
    return Rational{neg ? -num : num, den};
}

// \frac{a}{b} (plus \dfrac, \tfrac) with integer parts.
std::optional<Rational> parse_latex_frac(std::string_view s) {
    for (std::string_view cmd : {"\\frac", "\\dfrac", "\\tfrac"}) {
        if (s.substr(0, cmd.size()) != cmd) continue;
        std::string_view rest = s.substr(cmd.size());
        if (rest.size() < 2 || rest.front() != '{') continue;
        auto close_a = rest.find('}');
        if (close_a == std::string_view::npos) continue;
        std::string_view a = rest.substr(1, close_a - 1);
        std::string_view after = rest.substr(close_a + 1);
        if (after.size() < 2 || after.front() != '{' || after.back() != '}') continue;
        std::string_view b = after.substr(1, after.size() - 2);
        auto na = parse_int(a);
        auto nb = parse_int(b);
        if (!na || !nb) return std::nullopt;
        return Rational{*na, *nb};
    }
    return std::nullopt;
}

// a/b with integer parts.
std::optional<Rational> parse_slash_frac(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return std::nullopt;
    if (s.find('/', slash + 1) != std::string_view::npos) return std::nullopt;
    auto na = parse_int(s.substr(0, slash));
    auto nb = parse_int(s.substr(slash + 1));
    if (!na || !nb) return std::nullopt;
    return Rational{*na, *nb};
}

std::optional<std::string> numeric_canonical(std::string_view s) {
    std::optional<Rational> r = parse_latex_frac(s);
    if (!r) r = parse_slash_frac(s);
    if (!r) r = parse_decimal(s);
    if (!r || r->den == 0) return std::nullopt;
    std::int64_t num = r->num;
    std::int64_t den = r->den;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) return std::string("0");
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace

std::string canonical_form(std::string_view raw, const NormalizationConfig& cfg) {
    std::string s(trim(raw));
    if (cfg.strip_latex_spacing) {
        s = strip_latex_tokens(s);
        s = std::string(trim(s));
    }
    if (cfg.case_fold) {
        std::transform(s.begin(), s.end(), s.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    }
    if (cfg.numeric_canonicalization) {
        if (auto num = numeric_canonical(s)) s = *num;
    }
    if (s.size() > kCanonicalMaxLength) s.resize(kCanonicalMaxLength);
    return s;
}

AnswerKey make_answer_key(std::string raw, const NormalizationConfig& cfg) {
    AnswerKey key;
    key.canonical = canonical_form(raw, cfg);
    key.raw = std::move(raw);
    return key;
}

AnswerKey canonicalize(const AnswerKey& key, const NormalizationConfig& cfg) {
    return make_answer_key(key.raw, cfg);
}

std::optional<AnswerKey> extract_final_answer(std::string_view text,
                                              const NormalizationConfig& cfg) {
    constexpr std::string_view kBoxed = "\\boxed";
    std::optional<std::string> last;
    std::size_t pos = 0;
    while ((pos = text.find(kBoxed, pos)) != std::string_view::npos) {
        std::size_t i = pos + kBoxed.size();
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size() || text[i] != '{') {
            pos += kBoxed.size();
            continue;
        }
        // Walk to the matching close brace; backslash escapes the next char.
        std::size_t depth = 0;
        std::size_t start = i + 1;
        std::optional<std::string> inner;
        for (std::size_t j = i; j < text.size(); ++j) {
            char c = text[j];
            if (c == '\\') {
                ++j;
            } else if (c == '{') {
                ++depth;
            } else if (c == '}') {
                if (--depth == 0) {
                    inner = std::string(text.substr(start, j - start));
                    break;
                }
            }
        }
        if (inner) last = std::move(inner);  // unbalanced occurrences are skipped
        pos += kBoxed.size();
    }
    if (!last) return std::nullopt;
    return make_answer_key(std::move(*last), cfg);
}

bool answers_equivalent(const AnswerKey& a, const AnswerKey& b) {
    return a.canonical == b.canonical;
}

void apply_truth_labels(const std::vector<Problem>& problems,
                        std::vector<Candidate>& candidates,
                        const NormalizationConfig& cfg) {
    std::unordered_map<std::string_view, const Problem*> by_id;
    by_id.reserve(problems.size());
    for (const Problem& p : problems) by_id.emplace(p.id, &p);
    for (Candidate& c : candidates) {
        if (!c.answer) c.answer = extract_final_answer(c.text, cfg);
        auto it = by_id.find(c.problem_id);
        // truth is defined only when both the answer and the ground truth exist
        if (it == by_id.end() || !it->second->ground_truth || !c.answer) continue;
        c.truth = answers_equivalent(*c.answer, *it->second->ground_truth);
    }
}

}  // namespace pairknock::norm
