#pragma once

// Verification reports: named checks with pass/fail verdicts, a counterexample
// payload on failure, free-form notes, and canonical JSON output.

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

namespace eforge {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // counterexample or note, empty when passing
};

struct VerificationReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;
    double wall_ms = 0.0;

    void param(const std::string& k, long long v) { params.emplace_back(k, std::to_string(v)); }
    void check(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back(CheckResult{name, pass, pass ? "" : detail});
    }
    void note(const std::string& text) { notes.push_back(text); }

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    static std::string json_escape(const std::string& s) {
        std::string out;
        for (char ch : s) {
            switch (ch) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                default: out += ch;
            }
        }
        return out;
    }

    std::string to_json() const {
        std::ostringstream o;
        o << "{\"suite\":\"" << json_escape(suite) << "\",\"params\":{";
        for (std::size_t i = 0; i < params.size(); ++i)
            o << (i ? "," : "") << "\"" << json_escape(params[i].first) << "\":\""
              << json_escape(params[i].second) << "\"";
        o << "},\"checks\":[";
        for (std::size_t i = 0; i < checks.size(); ++i) {
            o << (i ? "," : "") << "{\"name\":\"" << json_escape(checks[i].name)
              << "\",\"pass\":" << (checks[i].pass ? "true" : "false");
            if (!checks[i].detail.empty())
                o << ",\"counterexample\":\"" << json_escape(checks[i].detail) << "\"";
            o << "}";
        }
        o << "],\"notes\":[";
        for (std::size_t i = 0; i < notes.size(); ++i)
            o << (i ? "," : "") << "\"" << json_escape(notes[i]) << "\"";
        o << "],\"pass\":" << (all_pass() ? "true" : "false");
        o << ",\"wall_ms\":" << wall_ms << "}";
        return o.str();
    }
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace eforge
