#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ezd/parser.hpp"
#include "ezd/ring.hpp"

namespace ezd {

// Parsed ring description file:
//   [ring]
//   field = "GF(7)"            # or "QQ"
//   vars  = ["x1", "x2"]
//   ideal = ["x1^2 + x2^2", "x1*x2"]
//   order = "grevlex"          # optional
//   [elements]                 # optional
//   u = "x1 + x2"
struct RingFile {
    std::string field_text;
    std::vector<std::string> vars;
    std::vector<std::string> ideal;
    std::string order_text = "grevlex";
    std::vector<std::pair<std::string, std::string>> elements;
};

namespace ringfile_detail {

inline std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::string unquote(const std::string& s, int line) {
    std::string t = strip(s);
    if (t.size() < 2 || t.front() != '"' || t.back() != '"')
        throw Error(ErrorKind::SyntaxError, "expected quoted string on line " + std::to_string(line));
    return t.substr(1, t.size() - 2);
}

inline std::vector<std::string> parse_list(const std::string& s, int line) {
    std::string t = strip(s);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw Error(ErrorKind::SyntaxError, "expected [list] on line " + std::to_string(line));
    std::vector<std::string> out;
    std::string inner = t.substr(1, t.size() - 2);
    std::size_t pos = 0;
    while (pos < inner.size()) {
        std::size_t q1 = inner.find('"', pos);
        if (q1 == std::string::npos) {
            if (strip(inner.substr(pos)).empty()) break;
            throw Error(ErrorKind::SyntaxError, "malformed list on line " + std::to_string(line));
        }
        std::size_t q2 = inner.find('"', q1 + 1);
        if (q2 == std::string::npos)
            throw Error(ErrorKind::SyntaxError, "unterminated string on line " + std::to_string(line));
        out.push_back(inner.substr(q1 + 1, q2 - q1 - 1));
        pos = inner.find(',', q2);
        pos = pos == std::string::npos ? inner.size() : pos + 1;
    }
    return out;
}

}  // namespace ringfile_detail

inline RingFile parse_ring_file_text(const std::string& text) {
    using namespace ringfile_detail;
    RingFile rf;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int lineno = 0;
    bool saw_ring = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        line = strip(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line == "[ring]") {
                section = "ring";
                saw_ring = true;
            } else if (line == "[elements]") {
                section = "elements";
            } else {
                throw Error(ErrorKind::SyntaxError, "unknown section on line " + std::to_string(lineno));
            }
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::SyntaxError, "expected key = value on line " + std::to_string(lineno));
        std::string key = strip(line.substr(0, eq));
        std::string val = line.substr(eq + 1);
        if (section == "ring") {
            if (key == "field")
                rf.field_text = unquote(val, lineno);
            else if (key == "vars")
                rf.vars = parse_list(val, lineno);
            else if (key == "ideal")
                rf.ideal = parse_list(val, lineno);
            else if (key == "order")
                rf.order_text = unquote(val, lineno);
            else
                throw Error(ErrorKind::SyntaxError, "unknown key '" + key + "' on line " + std::to_string(lineno));
        } else if (section == "elements") {
            rf.elements.emplace_back(key, unquote(val, lineno));
        } else {
            throw Error(ErrorKind::SyntaxError, "key outside a section on line " + std::to_string(lineno));
        }
    }
    if (!saw_ring) throw Error(ErrorKind::SyntaxError, "missing [ring] section");
    if (rf.vars.empty()) throw Error(ErrorKind::SyntaxError, "missing vars");
    if (rf.ideal.empty()) throw Error(ErrorKind::SyntaxError, "missing ideal");
    if (rf.field_text.empty()) throw Error(ErrorKind::SyntaxError, "missing field");
    return rf;
}

inline RingFile parse_ring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::BadInput, "cannot open ring file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_ring_file_text(ss.str());
}

inline FieldSpec parse_field(const std::string& text) {
    if (text == "QQ") return FieldSpec::rationals();
    if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
        long long p = 0;
        for (char c : text.substr(3, text.size() - 4)) {
            if (c < '0' || c > '9') throw Error(ErrorKind::SyntaxError, "bad field: " + text);
            p = p * 10 + (c - '0');
            if (p >= (1ll << 31)) throw Error(ErrorKind::SyntaxError, "characteristic too large: " + text);
        }
        return FieldSpec::gf(static_cast<std::uint32_t>(p));
    }
    throw Error(ErrorKind::SyntaxError, "bad field: " + text + " (expected GF(p) or QQ)");
}

inline MonomialOrder parse_order(const std::string& text) {
    if (text == "grevlex") return MonomialOrder::grevlex;
    if (text == "lex") return MonomialOrder::lex;
    if (text == "grlex") return MonomialOrder::grlex;
    throw Error(ErrorKind::SyntaxError, "bad order: " + text);
}

struct LoadedRing {
    RingPtr ring;
    std::map<std::string, RingElement> named;
};

inline LoadedRing load_ring(const RingFile& rf, std::optional<MonomialOrder> order_override = std::nullopt) {
    FieldSpec field = parse_field(rf.field_text);
    MonomialOrder ord = order_override ? *order_override : parse_order(rf.order_text);
    std::vector<Polynomial> gens;
    for (auto& src : rf.ideal) gens.push_back(parse_polynomial(src, rf.vars, field, ord));
    LoadedRing lr;
    lr.ring = build_ring(field, rf.vars, gens, ord);
    for (auto& [name, src] : rf.elements)
        lr.named.emplace(name, lr.ring->element(parse_polynomial(src, rf.vars, field, ord)));
    return lr;
}

}  // namespace ezd
