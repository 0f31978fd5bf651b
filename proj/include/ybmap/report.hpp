#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace ybmap {

enum class Verdict { Pass, Fail, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct Witness {
    std::string inputs;
    std::string lhs;
    std::string rhs;
};

/// Outcome of one sampled identity test.
///
/// Invariants: verdict is Fail iff failure_count > 0; otherwise Inconclusive
/// iff some tuple exhausted its pole-resample budget.
struct VerificationReport {
    std::string identity;
    std::string subject;
    std::string field;
    std::uint64_t seed = 0;
    std::size_t requested = 0;
    std::size_t used = 0;
    std::size_t resampled = 0;
    std::size_t exhausted = 0;
    std::size_t failure_count = 0;
    std::vector<Witness> failures;  // first few, in sample order
    Verdict verdict = Verdict::Pass;
    std::string confidence;
    std::string note;
    std::optional<Verdict> expected;

    bool passed() const { return verdict == Verdict::Pass; }
    bool matches_expectation() const { return verdict == expected.value_or(Verdict::Pass); }

    void finalize() {
        if (failure_count > 0) {
            verdict = Verdict::Fail;
        } else if (exhausted > 0) {
            verdict = Verdict::Inconclusive;
        } else {
            verdict = Verdict::Pass;
        }
    }
};

/// Combines two partial reports of the same identity. Associative.
inline VerificationReport merge(VerificationReport a, const VerificationReport& b, std::size_t max_witnesses = 5) {
    a.requested += b.requested;
    a.used += b.used;
    a.resampled += b.resampled;
    a.exhausted += b.exhausted;
    a.failure_count += b.failure_count;
    for (const auto& w : b.failures) {
        if (a.failures.size() >= max_witnesses) break;
        a.failures.push_back(w);
    }
    a.finalize();
    return a;
}

/// Schwartz-Zippel note for a prime-field run with total-degree estimate D.
inline std::string confidence_note(const std::string& field, std::uint64_t modulus, unsigned degree) {
    if (modulus == 0) {
        return "exact rational evaluation at random points of bounded height (" + field +
               "); no probabilistic bound stated";
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "per-sample false-accept probability <= D/p = %u/%llu ~ %.3e", degree,
                  static_cast<unsigned long long>(modulus), static_cast<double>(degree) / static_cast<double>(modulus));
    return buf;
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["identity"] = r.identity;
    j["subject"] = r.subject;
    j["field"] = r.field;
    j["seed"] = r.seed;
    j["samples"] = {{"requested", r.requested},
                    {"used", r.used},
                    {"resampled", r.resampled},
                    {"exhausted", r.exhausted}};
    j["failure_count"] = r.failure_count;
    auto fails = nlohmann::ordered_json::array();
    for (const auto& w : r.failures) fails.push_back({{"inputs", w.inputs}, {"lhs", w.lhs}, {"rhs", w.rhs}});
    j["failures"] = fails;
    j["verdict"] = to_string(r.verdict);
    j["confidence"] = r.confidence;
    if (!r.note.empty()) j["note"] = r.note;
    if (r.expected) {
        j["expected"] = to_string(*r.expected);
        j["matches_expectation"] = r.matches_expectation();
    }
    return j;
}

/// One aligned row per report, witnesses indented underneath.
inline void print_table(std::ostream& os, const std::vector<VerificationReport>& reports) {
    std::size_t wi = 8, ws = 7;
    for (const auto& r : reports) {
        wi = std::max(wi, r.identity.size());
        ws = std::max(ws, r.subject.size());
    }
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
    os << pad("identity", wi) << "  " << pad("subject", ws) << "  " << pad("verdict", 12) << "  samples\n";
    for (const auto& r : reports) {
        std::string verdict = to_string(r.verdict);
        if (r.expected) verdict += r.matches_expectation() ? " (ok)" : " (!!)";
        os << pad(r.identity, wi) << "  " << pad(r.subject, ws) << "  " << pad(verdict, 12) << "  " << r.used << "/"
           << r.requested << " used, " << r.resampled << " resampled";
        if (r.exhausted) os << ", " << r.exhausted << " exhausted";
        os << "\n";
        if (!r.note.empty()) os << "    note: " << r.note << "\n";
        if (r.expected) os << "    expected: " << to_string(*r.expected) << "\n";
        for (const auto& w : r.failures) {
            os << "    witness: " << w.inputs << "\n      lhs = " << w.lhs << "\n      rhs = " << w.rhs << "\n";
        }
    }
}

}  // namespace ybmap
