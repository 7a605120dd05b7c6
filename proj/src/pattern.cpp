#include "tricobracket/pattern.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace tricob {

namespace {

struct Lexer {
    std::vector<std::string> toks;
    std::vector<int> lines;
    size_t pos = 0;

    explicit Lexer(const std::string& text) {
        int line = 1;
        std::string cur;
        auto flush = [&] {
            if (!cur.empty()) {
                toks.push_back(cur);
                lines.push_back(line);
                cur.clear();
            }
        };
        for (size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (c == '#') {
                flush();
                while (i < text.size() && text[i] != '\n') ++i;
                ++line;
                continue;
            }
            if (c == '\n') {
                flush();
                ++line;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                flush();
                continue;
            }
            if (c == '{' || c == '}' || c == ';' || c == ':') {
                flush();
                toks.push_back(std::string(1, c));
                lines.push_back(line);
                continue;
            }
            cur += c;
        }
        flush();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        int line = pos < lines.size() ? lines[pos] : (lines.empty() ? 1 : lines.back());
        throw ParseError("pattern line " + std::to_string(line) + ": " + msg);
    }

    const std::string& peek() {
        if (pos >= toks.size()) fail("unexpected end of input");
        return toks[pos];
    }

    std::string take() {
        std::string t = peek();
        ++pos;
        return t;
    }

    void expect(const std::string& want) {
        if (take() != want) {
            --pos;
            fail("expected '" + want + "', got '" + toks[pos] + "'");
        }
    }

    bool done() const { return pos >= toks.size(); }
};

int parse_int(Lexer& lx, const std::string& what) {
    std::string t = lx.take();
    size_t k = 0;
    bool neg = false;
    if (k < t.size() && (t[k] == '+' || t[k] == '-')) {
        neg = t[k] == '-';
        ++k;
    }
    if (k >= t.size()) {
        --lx.pos;
        lx.fail(what + " must be an integer, got '" + t + "'");
    }
    long v = 0;
    for (; k < t.size(); ++k) {
        if (t[k] < '0' || t[k] > '9') {
            --lx.pos;
            lx.fail(what + " must be an integer, got '" + t + "'");
        }
        v = v * 10 + (t[k] - '0');
    }
    return neg ? -static_cast<int>(v) : static_cast<int>(v);
}

}  // namespace

Pattern parse_pattern(const std::string& text) {
    Lexer lx(text);
    Pattern p;
    lx.expect("pattern");
    p.name = lx.take();
    lx.expect("{");
    lx.expect("components");
    p.componentCount = parse_int(lx, "component count");
    if (p.componentCount <= 0) lx.fail("component count must be positive");
    lx.expect(";");
    while (lx.peek() == "term") {
        lx.take();
        PatternTerm term;
        term.coeff = parse_int(lx, "term coefficient");
        term.words.resize(p.componentCount);
        lx.expect("{");
        std::map<std::string, int> arrowIdx;
        std::map<std::string, std::pair<int, int>> roleCount;  // heads, tails
        while (lx.peek() != "}") {
            std::string compTok = lx.take();
            if (compTok.rfind("comp", 0) != 0 || compTok.size() <= 4) {
                --lx.pos;
                lx.fail("expected compN:, got '" + compTok + "'");
            }
            int comp = 0;
            for (size_t i = 4; i < compTok.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(compTok[i]))) {
                    --lx.pos;
                    lx.fail("expected compN:, got '" + compTok + "'");
                }
                comp = comp * 10 + (compTok[i] - '0');
            }
            if (comp < 1 || comp > p.componentCount) {
                --lx.pos;
                lx.fail("component index " + std::to_string(comp) + " out of range");
            }
            lx.expect(":");
            bool sawToken = false;
            while (lx.peek() != ";") {
                std::string tok = lx.take();
                // arrowName ("H"|"T"), optional ":" sign
                if (tok.size() < 2) {
                    --lx.pos;
                    lx.fail("bad endpoint token '" + tok + "'");
                }
                char role = tok.back();
                if (role != 'H' && role != 'T') {
                    --lx.pos;
                    lx.fail("endpoint token '" + tok + "' must end in H or T");
                }
                std::string name = tok.substr(0, tok.size() - 1);
                int sc = 0;
                if (!lx.done() && lx.peek() == ":") {
                    lx.take();
                    std::string s = lx.take();
                    if (s == "+") sc = 1;
                    else if (s == "-") sc = -1;
                    else {
                        --lx.pos;
                        lx.fail("sign constraint must be + or -");
                    }
                }
                auto [it, inserted] = arrowIdx.emplace(name, static_cast<int>(term.arrowNames.size()));
                if (inserted) term.arrowNames.push_back(name);
                auto& rc = roleCount[name];
                (role == 'H' ? rc.first : rc.second) += 1;
                term.words[comp - 1].push_back({it->second, role == 'H', sc});
                sawToken = true;
            }
            lx.expect(";");
            if (!sawToken) lx.fail("empty word for comp" + std::to_string(comp));
        }
        lx.expect("}");
        term.arrowCount = static_cast<int>(term.arrowNames.size());
        if (term.arrowCount == 0) throw ParseError("term with no arrows in pattern " + p.name);
        for (auto& [name, rc] : roleCount) {
            if (rc.first != 1 || rc.second != 1) {
                throw ParseError("pattern " + p.name + ": arrow '" + name +
                                 "' needs exactly one head and one tail (got " +
                                 std::to_string(rc.first) + "H, " +
                                 std::to_string(rc.second) + "T)");
            }
        }
        p.terms.push_back(std::move(term));
    }
    lx.expect("}");
    if (!lx.done()) lx.fail("trailing tokens after pattern");
    if (p.terms.empty()) throw ParseError("pattern " + p.name + " has no terms");
    return p;
}

Pattern load_pattern_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open pattern file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_pattern(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Pattern apply_sigma(const Pattern& p, const Sigma& sigma) {
    for (int v : {1, 2, 3}) {
        if (std::count(sigma.begin(), sigma.end(), v) != 1) {
            throw ShapeError("sigma must be a permutation of 1,2,3");
        }
    }
    if (p.componentCount != 3) return p;
    Pattern out = p;
    for (size_t t = 0; t < p.terms.size(); ++t) {
        for (int c = 0; c < 3; ++c) {
            out.terms[t].words[sigma[c] - 1] = p.terms[t].words[c];
        }
    }
    return out;
}

std::string pattern_dir() {
    if (const char* env = std::getenv("TRICOBRACKET_PATTERN_DIR")) {
        return env;
    }
#ifdef TRICOB_DEFAULT_PATTERN_DIR
    return TRICOB_DEFAULT_PATTERN_DIR;
#else
    return "patterns";
#endif
}

Pattern builtin_pattern(const std::string& name, const Sigma& sigma) {
    if (name != "lk" && name != "mu123" && name != "lambda" && name != "nu") {
        throw ShapeError("unknown builtin pattern " + name);
    }
    Pattern p = load_pattern_file(pattern_dir() + "/" + name + ".gdf");
    if (name == "lambda" || name == "nu") {
        p = apply_sigma(p, sigma);
    }
    return p;
}

}  // namespace tricob
