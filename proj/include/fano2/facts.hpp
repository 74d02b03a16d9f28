#pragma once

// Externally cited geometric facts. These are data, never derived: refined
// certificates lean on them by id, and the table can be swapped out on the
// command line.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fano2/errors.hpp"

namespace fano2::facts {

struct ExternalFact {
    std::string id;
    std::string statement;  // the claim, in our own words / ASCII math
    std::string source;     // citation string
    std::string note;       // the cited relation in formula form
};

class FactTable {
public:
    void add(ExternalFact f) {
        if (by_id_.count(f.id)) throw FormatError("duplicate fact id '" + f.id + "'");
        order_.push_back(f.id);
        by_id_.emplace(f.id, std::move(f));
    }

    bool contains(const std::string& id) const { return by_id_.count(id) != 0; }

    const ExternalFact& get(const std::string& id) const {
        auto it = by_id_.find(id);
        if (it == by_id_.end()) throw FactError("unknown external fact '" + id + "'");
        return it->second;
    }

    const std::vector<std::string>& ids() const { return order_; }
    size_t size() const { return order_.size(); }

private:
    std::map<std::string, ExternalFact> by_id_;
    std::vector<std::string> order_;
};

// Flat text format, one block per fact:
//
//   fact <id>
//     statement "..."
//     source "..."
//     note "..."
//
// '#' starts a comment; blank lines separate nothing in particular.
namespace detail {

inline std::string parse_quoted(const std::string& line, size_t lineno) {
    auto first = line.find('"');
    auto last = line.rfind('"');
    if (first == std::string::npos || last == first)
        throw FormatError("facts line " + std::to_string(lineno) + ": expected a quoted string");
    return line.substr(first + 1, last - first - 1);
}

inline std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace detail

inline FactTable parse_facts(const std::string& text) {
    FactTable t;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    ExternalFact cur;
    bool open = false;
    auto flush = [&] {
        if (!open) return;
        if (cur.statement.empty() || cur.source.empty())
            throw FormatError("fact '" + cur.id + "' is missing statement or source");
        t.add(cur);
        cur = {};
        open = false;
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = detail::strip(line);
        if (s.empty() || s[0] == '#') continue;
        if (s.rfind("fact ", 0) == 0) {
            flush();
            cur.id = detail::strip(s.substr(5));
            if (cur.id.empty()) throw FormatError("facts line " + std::to_string(lineno) + ": empty fact id");
            open = true;
        } else if (s.rfind("statement", 0) == 0) {
            cur.statement = detail::parse_quoted(s, lineno);
        } else if (s.rfind("source", 0) == 0) {
            cur.source = detail::parse_quoted(s, lineno);
        } else if (s.rfind("note", 0) == 0) {
            cur.note = detail::parse_quoted(s, lineno);
        } else {
            throw FormatError("facts line " + std::to_string(lineno) + ": unrecognized line '" + s + "'");
        }
    }
    flush();
    return t;
}

inline FactTable load_facts_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open facts file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_facts(ss.str());
}

} // namespace fano2::facts
