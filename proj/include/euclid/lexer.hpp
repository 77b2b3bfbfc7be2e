// Tokenizer for the .euclid theory language. Line-oriented: newlines are
// tokens, `#` starts a comment running to end of line, unknown characters
// become error tokens rather than aborting the scan.
#pragma once

#include <array>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "euclid/diagnostics.hpp"

namespace euclid {

enum class TokenKind {
    Keyword,
    Identifier,   // lowercase identifiers and dotted proposition labels
    ObjectName,   // uppercase letter runs
    Judgment,     // = == + - >
    Punct,        // ( ) , : and newline
    String,
    Error,
    Eof,
};

inline std::string_view to_string(TokenKind k) {
    switch (k) {
        case TokenKind::Keyword: return "keyword";
        case TokenKind::Identifier: return "identifier";
        case TokenKind::ObjectName: return "object-name";
        case TokenKind::Judgment: return "judgment-symbol";
        case TokenKind::Punct: return "punctuation";
        case TokenKind::String: return "string-literal";
        case TokenKind::Error: return "error";
        case TokenKind::Eof: return "eof";
    }
    return "?";
}

struct Token {
    TokenKind kind = TokenKind::Eof;
    std::string lexeme;
    Span span;

    bool is(TokenKind k) const { return kind == k; }
    bool is_kw(std::string_view kw) const { return kind == TokenKind::Keyword && lexeme == kw; }
    bool is_punct(std::string_view p) const { return kind == TokenKind::Punct && lexeme == p; }
    bool is_newline() const { return kind == TokenKind::Punct && lexeme == "\n"; }
};

inline const std::unordered_set<std::string>& keyword_table() {
    static const std::unordered_set<std::string> kws = {
        "theory",    "proposition", "primitive", "problem",   "theorem",  "enunciation",
        "given",     "hypothesis",  "show",      "produce",   "with",     "construction",
        "proof",     "step",        "let",       "diagram",   "qed-do",   "qed-show",
        "qed",       "segment",     "triangle",  "polygon",   "point",    "angle",
        "circle",    "line",        "extend",    "pick",      "meet",     "apply",
        "radii",     "cn1",         "cn2",       "cn3",       "cn4",      "cn5",
        "common",    "by",          "from",      "also",      "on",       "between",
        "and",       "beyond",      "extending", "isosceles", "apex",     "elided",
        "specification",
    };
    return kws;
}

// Total over its input: bad characters become error tokens carrying their
// span, comments are dropped, and a final Eof token is appended.
inline std::vector<Token> tokenize(std::string_view source) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto push = [&](TokenKind k, size_t begin, size_t len, int l, int c) {
        out.push_back(Token{k, std::string(source.substr(begin, len)), Span{l, c, (int)len}});
    };
    while (i < source.size()) {
        char ch = source[i];
        if (ch == '\n') {
            push(TokenKind::Punct, i, 1, line, col);
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++i;
            ++col;
            continue;
        }
        if (ch == '#') {
            while (i < source.size() && source[i] != '\n') {
                ++i;
                ++col;
            }
            continue;
        }
        int tl = line, tc = col;
        if (ch >= 'A' && ch <= 'Z') {
            size_t b = i;
            while (i < source.size() && source[i] >= 'A' && source[i] <= 'Z') {
                ++i;
                ++col;
            }
            push(TokenKind::ObjectName, b, i - b, tl, tc);
            continue;
        }
        if (ch >= 'a' && ch <= 'z') {
            size_t b = i;
            while (i < source.size() &&
                   ((source[i] >= 'a' && source[i] <= 'z') ||
                    (source[i] >= '0' && source[i] <= '9') || source[i] == '-')) {
                ++i;
                ++col;
            }
            std::string lex(source.substr(b, i - b));
            push(keyword_table().count(lex) ? TokenKind::Keyword : TokenKind::Identifier, b, i - b,
                 tl, tc);
            continue;
        }
        if (ch >= '0' && ch <= '9') {
            // dotted proposition label, e.g. 1.5
            size_t b = i;
            while (i < source.size() &&
                   ((source[i] >= '0' && source[i] <= '9') || source[i] == '.')) {
                ++i;
                ++col;
            }
            push(TokenKind::Identifier, b, i - b, tl, tc);
            continue;
        }
        if (ch == '"') {
            size_t b = i;
            ++i;
            ++col;
            while (i < source.size() && source[i] != '"' && source[i] != '\n') {
                ++i;
                ++col;
            }
            if (i < source.size() && source[i] == '"') {
                ++i;
                ++col;
                push(TokenKind::String, b, i - b, tl, tc);
            } else {
                push(TokenKind::Error, b, i - b, tl, tc);
            }
            continue;
        }
        if (ch == '=') {
            if (i + 1 < source.size() && source[i + 1] == '=') {
                push(TokenKind::Judgment, i, 2, tl, tc);
                i += 2;
                col += 2;
            } else {
                push(TokenKind::Judgment, i, 1, tl, tc);
                ++i;
                ++col;
            }
            continue;
        }
        if (ch == '+' || ch == '-' || ch == '>') {
            push(TokenKind::Judgment, i, 1, tl, tc);
            ++i;
            ++col;
            continue;
        }
        if (ch == '(' || ch == ')' || ch == ',' || ch == ':') {
            push(TokenKind::Punct, i, 1, tl, tc);
            ++i;
            ++col;
            continue;
        }
        // Unknown byte (or the start of a multi-byte sequence): one error
        // token per byte run up to the next recognizable character.
        size_t b = i;
        while (i < source.size()) {
            char c2 = source[i];
            bool known = c2 == '\n' || c2 == ' ' || c2 == '\t' || c2 == '\r' || c2 == '#' ||
                         (c2 >= 'A' && c2 <= 'Z') || (c2 >= 'a' && c2 <= 'z') ||
                         (c2 >= '0' && c2 <= '9') || c2 == '"' || c2 == '=' || c2 == '+' ||
                         c2 == '-' || c2 == '>' || c2 == '(' || c2 == ')' || c2 == ',' ||
                         c2 == ':';
            if (known) break;
            ++i;
            ++col;
        }
        push(TokenKind::Error, b, i - b, tl, tc);
    }
    out.push_back(Token{TokenKind::Eof, "", Span{line, col, 0}});
    return out;
}

}  // namespace euclid
