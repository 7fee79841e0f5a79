#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "m3s/instance.hpp"

namespace m3s {

struct DimacsError : std::runtime_error {
    DimacsError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
          line(line_no) {}
    int line;
};

// DIMACS CNF reader. Comment lines start with 'c', a single "p cnf <n> <m>"
// header precedes the clauses, and each clause sits on its own line as three
// nonzero literals terminated by 0. Variables are 1-based in the file and
// 0-based in Max3SatInstance; "-k" maps to variable k-1 negated.
inline Max3SatInstance parse_dimacs(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    std::size_t n = 0, m = 0;
    std::vector<Clause> clauses;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue; // blank line
        if (first == "c" || first[0] == 'c') continue;

        if (first == "p") {
            if (have_header) throw DimacsError(line_no, "duplicate 'p' header");
            std::string fmt;
            long long hn = -1, hm = -1;
            if (!(ls >> fmt >> hn >> hm) || fmt != "cnf" || hn < 0 || hm < 0)
                throw DimacsError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
            std::string extra;
            if (ls >> extra) throw DimacsError(line_no, "trailing tokens after header");
            n = static_cast<std::size_t>(hn);
            m = static_cast<std::size_t>(hm);
            have_header = true;
            continue;
        }

        if (!have_header) throw DimacsError(line_no, "clause before 'p cnf' header");
        if (clauses.size() == m) throw DimacsError(line_no, "more clauses than the header declares");

        std::istringstream cs(line);
        std::vector<Literal> lits;
        long long v;
        bool terminated = false;
        while (cs >> v) {
            if (v == 0) {
                terminated = true;
                long long extra;
                if (cs >> extra) throw DimacsError(line_no, "tokens after clause terminator");
                break;
            }
            const unsigned long long mag = static_cast<unsigned long long>(v < 0 ? -v : v);
            if (mag > n) throw DimacsError(line_no, "variable index out of range");
            lits.push_back({static_cast<std::uint32_t>(mag - 1), v < 0});
        }
        if (!cs.eof() && !terminated) throw DimacsError(line_no, "malformed clause literal");
        if (!terminated) throw DimacsError(line_no, "clause not terminated by 0");
        if (lits.size() != 3)
            throw DimacsError(line_no, "clause has " + std::to_string(lits.size()) +
                                           " literals, expected exactly 3");
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (lits[i].var == lits[j].var)
                    throw DimacsError(line_no, "repeated variable in clause");
        clauses.push_back(Clause{{lits[0], lits[1], lits[2]}});
    }

    if (!have_header) throw DimacsError(line_no, "missing 'p cnf' header");
    if (clauses.size() != m)
        throw DimacsError(line_no, "clause count mismatch: header declares " + std::to_string(m) +
                                       ", found " + std::to_string(clauses.size()));
    return Max3SatInstance(n, std::move(clauses));
}

inline Max3SatInstance parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_dimacs(in);
}

inline void write_dimacs(const Max3SatInstance& inst, std::ostream& out) {
    out << "p cnf " << inst.num_vars() << ' ' << inst.num_clauses() << '\n';
    for (const auto& cl : inst.clauses()) {
        for (const auto& lit : cl.lits) {
            const long long v = static_cast<long long>(lit.var) + 1;
            out << (lit.neg ? -v : v) << ' ';
        }
        out << "0\n";
    }
}

inline std::string write_dimacs(const Max3SatInstance& inst) {
    std::ostringstream out;
    write_dimacs(inst, out);
    return out.str();
}

} // namespace m3s
