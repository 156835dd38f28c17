#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "complex.hpp"
#include "flags.hpp"

namespace cellforge {

// CXC: plain-text serialization of an incidence complex.
//
//   cxc 1 <dim>
//   rank <k> <count>                 (per rank, ascending)
//   c <k> <id> : <boundary ids>      (2-cells in canonical rotation, other
//                                     ranks sorted)
//   label <k> <id> <utf8 text>       (optional, sorted by rank then id)
//
// '#' starts a comment; ids are base 10; the file is newline terminated.
inline std::string write_cxc(const Complex& cx) {
    std::ostringstream os;
    os << "cxc 1 " << cx.dim << "\n";
    for (int k = 0; k <= cx.dim; ++k) os << "rank " << k << " " << cx.count(k) << "\n";
    for (int k = 0; k <= cx.dim; ++k) {
        for (int i = 0; i < cx.count(k); ++i) {
            os << "c " << k << " " << i << " :";
            for (int b : cx.cells[k][i]) os << " " << b;
            os << "\n";
        }
    }
    for (const auto& [key, text] : cx.labels)
        os << "label " << key.first << " " << key.second << " " << text << "\n";
    return os.str();
}

namespace detail {

inline std::vector<std::string> tokenize_line(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) {
        if (!t.empty() && t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

inline int parse_int(const std::string& tok, int lineno, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw Error("line " + std::to_string(lineno) + ": bad " + what + " '" + tok + "'");
    }
}

}  // namespace detail

inline Complex read_cxc(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    int dim = -1;
    std::vector<std::vector<std::vector<int>>> cells;
    std::vector<std::vector<int>> seen;
    std::map<std::pair<int, int>, std::string> labels;
    bool header = false;

    while (std::getline(is, line)) {
        ++lineno;
        auto toks = detail::tokenize_line(line);
        if (toks.empty()) continue;
        if (!header) {
            if (toks.size() != 3 || toks[0] != "cxc" || toks[1] != "1")
                throw Error("line " + std::to_string(lineno) + ": expected header 'cxc 1 <dim>'");
            dim = detail::parse_int(toks[2], lineno, "dimension");
            if (dim < 2 || dim > 3)
                throw Error("line " + std::to_string(lineno) + ": dimension must be 2 or 3");
            cells.resize(dim + 1);
            seen.resize(dim + 1);
            header = true;
            continue;
        }
        if (toks[0] == "rank") {
            if (toks.size() != 3) throw Error("line " + std::to_string(lineno) + ": rank needs k and count");
            int k = detail::parse_int(toks[1], lineno, "rank");
            int n = detail::parse_int(toks[2], lineno, "count");
            if (k < 0 || k > dim) throw Error("line " + std::to_string(lineno) + ": rank out of range");
            if (n < 0) throw Error("line " + std::to_string(lineno) + ": negative count");
            cells[k].assign(n, {});
            seen[k].assign(n, 0);
        } else if (toks[0] == "c") {
            if (toks.size() < 4 || toks[3] != ":")
                throw Error("line " + std::to_string(lineno) + ": expected 'c <k> <id> : ...'");
            int k = detail::parse_int(toks[1], lineno, "rank");
            int id = detail::parse_int(toks[2], lineno, "id");
            if (k < 0 || k > dim || id < 0 || id >= static_cast<int>(cells[k].size()))
                throw Error("line " + std::to_string(lineno) + ": cell id out of range");
            if (seen[k][id]) throw Error("line " + std::to_string(lineno) + ": duplicate cell");
            seen[k][id] = 1;
            std::vector<int> b;
            for (std::size_t i = 4; i < toks.size(); ++i)
                b.push_back(detail::parse_int(toks[i], lineno, "boundary id"));
            cells[k][id] = std::move(b);
        } else if (toks[0] == "label") {
            if (toks.size() < 4) throw Error("line " + std::to_string(lineno) + ": label needs k, id, text");
            int k = detail::parse_int(toks[1], lineno, "rank");
            int id = detail::parse_int(toks[2], lineno, "id");
            std::string text = toks[3];
            for (std::size_t i = 4; i < toks.size(); ++i) text += " " + toks[i];
            labels[{k, id}] = text;
        } else {
            throw Error("line " + std::to_string(lineno) + ": unknown directive '" + toks[0] + "'");
        }
    }
    if (!header) throw Error("cxc: missing header");
    for (int k = 0; k <= dim; ++k)
        for (std::size_t i = 0; i < seen[k].size(); ++i)
            if (k > 0 && !seen[k][i])
                throw Error("cxc: rank " + std::to_string(k) + " cell " + std::to_string(i) + " missing");
    Complex cx = make_complex(dim, std::move(cells));
    cx.labels = std::move(labels);
    std::vector<std::string> bad;
    check_boundary_ids(cx, bad);
    if (!bad.empty()) throw Error("cxc: " + bad[0]);
    return cx;
}

// CXF: plain-text serialization of a flag system.
//
//   cxf 1 <rank> <flagcount>
//   adj <color> : <image of flag 0> <image of flag 1> ...
inline std::string write_cxf(const FlagSystem& fs) {
    std::ostringstream os;
    os << "cxf 1 " << fs.rank << " " << fs.nflags() << "\n";
    for (int c = 0; c < fs.rank; ++c) {
        os << "adj " << c << " :";
        for (int y : fs.adj[c]) os << " " << y;
        os << "\n";
    }
    return os.str();
}

inline FlagSystem read_cxf(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    FlagSystem fs;
    int n = -1;
    bool header = false;
    std::vector<int> got;

    while (std::getline(is, line)) {
        ++lineno;
        auto toks = detail::tokenize_line(line);
        if (toks.empty()) continue;
        if (!header) {
            if (toks.size() != 4 || toks[0] != "cxf" || toks[1] != "1")
                throw Error("line " + std::to_string(lineno) + ": expected header 'cxf 1 <rank> <flags>'");
            fs.rank = detail::parse_int(toks[2], lineno, "rank");
            n = detail::parse_int(toks[3], lineno, "flag count");
            if (fs.rank < 3 || fs.rank > 4)
                throw Error("line " + std::to_string(lineno) + ": rank must be 3 or 4");
            fs.adj.assign(fs.rank, {});
            got.assign(fs.rank, 0);
            header = true;
            continue;
        }
        if (toks[0] == "adj") {
            if (toks.size() < 3 || toks[2] != ":")
                throw Error("line " + std::to_string(lineno) + ": expected 'adj <color> : ...'");
            int c = detail::parse_int(toks[1], lineno, "color");
            if (c < 0 || c >= fs.rank) throw Error("line " + std::to_string(lineno) + ": color out of range");
            if (got[c]) throw Error("line " + std::to_string(lineno) + ": duplicate color");
            got[c] = 1;
            for (std::size_t i = 3; i < toks.size(); ++i)
                fs.adj[c].push_back(detail::parse_int(toks[i], lineno, "flag id"));
            if (static_cast<int>(fs.adj[c].size()) != n)
                throw Error("line " + std::to_string(lineno) + ": expected " + std::to_string(n) + " images");
        } else {
            throw Error("line " + std::to_string(lineno) + ": unknown directive '" + toks[0] + "'");
        }
    }
    if (!header) throw Error("cxf: missing header");
    for (int c = 0; c < fs.rank; ++c)
        if (!got[c]) throw Error("cxf: missing adj line for color " + std::to_string(c));
    validate_flags(fs);
    return fs;
}

inline void save_file(const std::string& path, const std::string& data) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("cannot open for writing: " + path);
    os << data;
    if (!os) throw Error("write failed: " + path);
}

inline std::string load_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error("cannot open: " + path);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

inline std::uint64_t cxc_hash(const Complex& cx) { return fnv1a64(write_cxc(cx)); }

}  // namespace cellforge
