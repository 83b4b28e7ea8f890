#pragma once

// Canonical JSON emission for polynomials and symmetric functions.
// Term order is graded-lex with the leading term first, so identical values
// always serialize to identical bytes.

#include "eforge/banner.hpp"
#include "eforge/bijections.hpp"
#include "eforge/polynomial.hpp"
#include "eforge/symfunc.hpp"

#include <sstream>
#include <string>

namespace eforge {

inline std::string poly_to_json(const Polynomial& p) {
    std::ostringstream o;
    o << "{\"vars\":[";
    const auto& names = p.table()->names;
    for (std::size_t i = 0; i < names.size(); ++i)
        o << (i ? "," : "") << "\"" << names[i] << "\"";
    o << "],\"terms\":[";
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first) o << ",";
        first = false;
        o << "{\"exp\":[";
        for (std::size_t i = 0; i < it->first.size(); ++i)
            o << (i ? "," : "") << it->first[i];
        o << "],\"coef\":\"" << it->second.to_string() << "\"}";
    }
    o << "]}";
    return o.str();
}

inline std::string symfunc_to_json(const SymFuncH& f) {
    std::ostringstream o;
    o << "[";
    bool first = true;
    for (const auto& [part, coeff] : f.terms()) {
        if (!first) o << ",";
        first = false;
        o << "{\"partition\":[";
        for (std::size_t i = 0; i < part.size(); ++i) o << (i ? "," : "") << part[i];
        o << "],\"coef\":" << poly_to_json(coeff) << "}";
    }
    o << "]";
    return o.str();
}

inline std::string banner_to_json(const Banner& b) {
    std::ostringstream o;
    o << "[";
    for (std::size_t i = 0; i < b.size(); ++i) {
        o << (i ? "," : "") << "[" << b[i].value << "," << b[i].color << ","
          << (b[i].bar ? "true" : "false") << "]";
    }
    o << "]";
    return o.str();
}

inline std::string marked_seq_to_json(const MarkedSeq& s) {
    std::ostringstream o;
    o << "{\"w\":[";
    for (std::size_t i = 0; i < s.w.size(); ++i) o << (i ? "," : "") << s.w[i];
    o << "],\"b\":" << s.b << ",\"m\":" << s.m << "}";
    return o.str();
}

inline std::string twofix_to_json(const TwoFixBanner& v) {
    std::ostringstream o;
    auto word = [&](const std::vector<int>& w) {
        std::ostringstream s;
        s << "[";
        for (std::size_t i = 0; i < w.size(); ++i) s << (i ? "," : "") << w[i];
        s << "]";
        return s.str();
    };
    o << "{\"w0\":" << word(v.w0) << ",\"seqs\":[";
    for (std::size_t i = 0; i < v.seqs.size(); ++i)
        o << (i ? "," : "") << marked_seq_to_json(v.seqs[i]);
    o << "],\"w0p\":" << word(v.w0p) << "}";
    return o.str();
}

}  // namespace eforge
