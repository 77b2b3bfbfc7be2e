// Recursive-descent parser for .euclid theories. Statement-per-line; on an
// error it reports a spanned diagnostic with an expected-token hint, skips
// to the next line and keeps going, so one pass collects every problem and
// the returned AST is always structurally well-formed (possibly partial).
#pragma once

#include <set>
#include <string>
#include <vector>

#include "euclid/ast.hpp"
#include "euclid/lexer.hpp"

namespace euclid {

struct ParseResult {
    TheoryAst theory;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return diagnostics.empty(); }
};

class Parser {
  public:
    static ParseResult parse(const std::vector<Token>& tokens) {
        Parser p(tokens);
        p.run();
        return ParseResult{std::move(p.theory_), std::move(p.diags_)};
    }

  private:
    explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

    const std::vector<Token>& toks_;
    size_t pos_ = 0;
    TheoryAst theory_;
    std::vector<Diagnostic> diags_;

    // Part indices in Proclus' order; exposition/specification lines carry
    // their own index so interleaving is detectable.
    enum Part {
        PartNone = 0,
        PartEnunciation = 1,
        PartExposition = 2,
        PartSpecification = 3,
        PartConstruction = 4,
        PartProof = 5,
        PartConclusion = 6
    };

    // --- token helpers ---------------------------------------------------

    const Token& peek(size_t off = 0) const {
        size_t i = pos_ + off;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    const Token& advance() {
        const Token& t = peek();
        if (pos_ + 1 < toks_.size()) ++pos_;
        return t;
    }
    bool at_eof() const { return peek().kind == TokenKind::Eof; }

    void error(const Token& t, std::string code, std::string msg, std::string hint = "") {
        diags_.push_back(Diagnostic{std::move(code), std::move(msg), t.span, std::move(hint)});
    }

    void skip_line() {
        while (!at_eof() && !peek().is_newline()) advance();
        if (peek().is_newline()) advance();
    }
    void skip_blank_lines() {
        while (peek().is_newline()) advance();
    }
    bool end_line(const char* where) {
        if (peek().is_newline() || at_eof()) {
            if (peek().is_newline()) advance();
            return true;
        }
        error(peek(), errc::ParseError,
              std::string("unexpected '") + peek().lexeme + "' after " + where, "end of line");
        skip_line();
        return false;
    }
    bool expect_punct(std::string_view p) {
        if (peek().is_punct(p)) {
            advance();
            return true;
        }
        error(peek(), errc::ParseError, "unexpected '" + peek().lexeme + "'",
              "'" + std::string(p) + "'");
        return false;
    }

    // --- small value parsers ----------------------------------------------

    // Uppercase letter run with an arity constraint; reports BadArity /
    // letter diagnostics but still returns the raw text when present.
    std::optional<std::string> object_letters(int min_len, int max_len, const char* what) {
        if (!peek().is(TokenKind::ObjectName)) {
            error(peek(), errc::ParseError, "expected " + std::string(what), "object name");
            return std::nullopt;
        }
        Token t = advance();
        int n = (int)t.lexeme.size();
        if (n < min_len || (max_len > 0 && n > max_len)) {
            error(t, errc::BadArity,
                  std::string(what) + " '" + t.lexeme + "' has wrong letter count");
            return std::nullopt;
        }
        for (size_t i = 0; i < t.lexeme.size(); ++i)
            for (size_t j = i + 1; j < t.lexeme.size(); ++j)
                if (t.lexeme[i] == t.lexeme[j]) {
                    error(t, errc::RepeatedLetter,
                          std::string(what) + " '" + t.lexeme + "' repeats a letter");
                    return std::nullopt;
                }
        return t.lexeme;
    }

    std::optional<char> point_letter(const char* what) {
        auto s = object_letters(1, 1, what);
        if (!s) return std::nullopt;
        return (*s)[0];
    }

    std::optional<std::string> circle_label(const char* what) {
        if (!peek().is(TokenKind::Identifier)) {
            error(peek(), errc::ParseError, "expected " + std::string(what), "circle label");
            return std::nullopt;
        }
        return advance().lexeme;
    }

    std::optional<PropId> prop_label() {
        if (!peek().is(TokenKind::Identifier)) {
            error(peek(), errc::ParseError, "expected proposition number", "label like 1.1");
            return std::nullopt;
        }
        Token t = advance();
        auto id = PropId::parse(t.lexeme);
        if (!id) error(t, errc::ParseError, "bad proposition number '" + t.lexeme + "'");
        return id;
    }

    std::optional<TermExpr> term() {
        Span sp = peek().span;
        if (peek().is_kw("angle")) {
            advance();
            auto s = object_letters(3, 3, "angle name");
            if (!s) return std::nullopt;
            return TermExpr{NameKind::Angle, *s, sp};
        }
        if (peek().is_kw("triangle")) {
            advance();
            auto s = object_letters(3, 3, "triangle name");
            if (!s) return std::nullopt;
            return TermExpr{NameKind::Polygon, *s, sp};
        }
        if (peek().is_kw("polygon")) {
            advance();
            auto s = object_letters(3, 0, "polygon name");
            if (!s) return std::nullopt;
            return TermExpr{NameKind::Polygon, *s, sp};
        }
        if (peek().is(TokenKind::ObjectName)) {
            Token t = advance();
            if (t.lexeme.size() == 1) return TermExpr{NameKind::Point, t.lexeme, sp};
            if (t.lexeme.size() == 2) {
                if (t.lexeme[0] == t.lexeme[1]) {
                    error(t, errc::RepeatedLetter, "segment '" + t.lexeme + "' repeats a letter");
                    return std::nullopt;
                }
                return TermExpr{NameKind::Segment, t.lexeme, sp};
            }
            error(t, errc::BadArity,
                  "bare name '" + t.lexeme + "' is ambiguous; use an angle/triangle keyword");
            return std::nullopt;
        }
        error(peek(), errc::ParseError, "expected an object term", "object name");
        return std::nullopt;
    }

    std::optional<JudgmentExpr> judgment() {
        Span sp = peek().span;
        auto a = term();
        if (!a) return std::nullopt;
        if (peek().is_kw("on")) {
            advance();
            auto lbl = circle_label("circle label");
            if (!lbl) return std::nullopt;
            JudgmentExpr j;
            j.kind = JudgmentExpr::Kind::On;
            j.a = *a;
            j.circle = *lbl;
            j.span = sp;
            return j;
        }
        if (!peek().is(TokenKind::Judgment)) {
            error(peek(), errc::ParseError, "expected a judgment symbol", "one of = == > on");
            return std::nullopt;
        }
        Token op = advance();
        auto b = term();
        if (!b) return std::nullopt;
        JudgmentExpr j;
        j.span = sp;
        j.a = *a;
        j.b = *b;
        if (op.lexeme == "=") {
            j.kind = JudgmentExpr::Kind::Equal;
            return j;
        }
        if (op.lexeme == ">") {
            j.kind = JudgmentExpr::Kind::Greater;
            return j;
        }
        if (op.lexeme == "==") {
            if (!peek().is(TokenKind::Judgment) ||
                (peek().lexeme != "+" && peek().lexeme != "-")) {
                error(peek(), errc::ParseError, "decomposition needs '+' or '-'", "+ or -");
                return std::nullopt;
            }
            Token sign = advance();
            auto c = term();
            if (!c) return std::nullopt;
            j.kind = JudgmentExpr::Kind::Decomp;
            if (sign.lexeme == "+") {
                j.c = *c;
            } else {
                // a == b - c  normalizes to  b == c + a
                JudgmentExpr n;
                n.kind = JudgmentExpr::Kind::Decomp;
                n.span = sp;
                n.a = *b;
                n.b = *c;
                n.c = *a;
                return n;
            }
            return j;
        }
        error(op, errc::ParseError, "unexpected judgment symbol '" + op.lexeme + "'");
        return std::nullopt;
    }

    std::vector<JudgmentExpr> judgment_list() {
        std::vector<JudgmentExpr> out;
        while (true) {
            auto j = judgment();
            if (!j) break;
            out.push_back(*j);
            if (peek().is_punct(",")) {
                advance();
                continue;
            }
            break;
        }
        return out;
    }

    // --- statements --------------------------------------------------------

    void run() {
        skip_blank_lines();
        if (peek().is_kw("theory")) {
            advance();
            if (peek().is(TokenKind::Identifier))
                theory_.name = advance().lexeme;
            else
                error(peek(), errc::ParseError, "expected theory name", "identifier");
            end_line("theory header");
        } else {
            error(peek(), errc::ParseError, "a theory file starts with 'theory <name>'",
                  "'theory'");
        }
        while (true) {
            skip_blank_lines();
            if (at_eof()) break;
            if (peek().is_kw("proposition")) {
                proposition(false);
            } else if (peek().is_kw("primitive")) {
                proposition(true);
            } else {
                if (peek().kind == TokenKind::Error)
                    error(peek(), errc::ParseError,
                          "unrecognizable character(s) '" + peek().lexeme + "'");
                else
                    error(peek(), errc::ParseError,
                          "expected 'proposition' or 'primitive', got '" + peek().lexeme + "'",
                          "'proposition'");
                skip_line();
            }
        }
        validate_theory();
    }

    bool at_block_start() const {
        return peek().is_kw("proposition") || peek().is_kw("primitive");
    }

    void proposition(bool primitive) {
        PropositionAst prop;
        prop.primitive = primitive;
        prop.span = peek().span;
        advance();  // proposition / primitive
        if (primitive) {
            if (peek().is_kw("theorem")) {
                advance();
                prop.kind = PropKind::Theorem;
            } else if (peek().is_kw("problem")) {
                advance();
                prop.kind = PropKind::Problem;
            } else {
                error(peek(), errc::ParseError, "primitive declarations name a theorem",
                      "'theorem'");
            }
            auto id = prop_label();
            if (id) prop.id = *id;
            end_line("primitive header");
        } else {
            auto id = prop_label();
            if (id) prop.id = *id;
            if (peek().is_kw("problem")) {
                advance();
                prop.kind = PropKind::Problem;
            } else if (peek().is_kw("theorem")) {
                advance();
                prop.kind = PropKind::Theorem;
            } else {
                error(peek(), errc::ParseError, "proposition kind missing",
                      "'problem' or 'theorem'");
            }
            end_line("proposition header");
        }

        int part_seen = PartNone;
        auto enter = [&](int part, const Token& t) {
            if (part < part_seen)
                error(t, errc::PartsOutOfOrder,
                      "part '" + t.lexeme + "' appears after a later part in proposition " +
                          prop.id.str());
            part_seen = std::max(part_seen, part);
        };

        int next_step = 1;
        bool done = false;
        while (!done) {
            skip_blank_lines();
            if (at_eof() || at_block_start()) break;
            const Token& head = peek();
            if (head.is_kw("enunciation")) {
                enter(PartEnunciation, head);
                advance();
                if (peek().is(TokenKind::String)) {
                    Token s = advance();
                    prop.prose = s.lexeme.substr(1, s.lexeme.size() - 2);
                    prop.prose_span = s.span;
                    prop.has_enunciation = true;
                } else {
                    error(peek(), errc::ParseError, "enunciation needs its quoted prose",
                          "string literal");
                }
                end_line("enunciation");
            } else if (head.is_kw("given")) {
                enter(PartExposition, head);
                given_decl(prop);
            } else if (head.is_kw("hypothesis")) {
                enter(PartExposition, head);
                advance();
                if (auto j = judgment()) prop.hypotheses.push_back(*j);
                end_line("hypothesis");
            } else if (head.is_kw("show")) {
                enter(PartSpecification, head);
                advance();
                prop.spec.span = head.span;
                if (auto j = judgment()) prop.spec.goals.push_back(*j);
                end_line("show");
            } else if (head.is_kw("produce")) {
                enter(PartSpecification, head);
                produce_decl(prop);
            } else if (head.is_kw("specification")) {
                enter(PartSpecification, head);
                advance();
                prop.spec.span = head.span;
                if (peek().is_kw("elided")) {
                    advance();
                    prop.spec.elided = true;
                } else {
                    error(peek(), errc::ParseError, "expected 'elided'", "'elided'");
                }
                end_line("specification");
            } else if (head.is_kw("construction")) {
                enter(PartConstruction, head);
                advance();
                prop.has_construction = true;
                end_line("construction header");
            } else if (head.is_kw("let") || head.is_kw("diagram")) {
                if (part_seen != PartConstruction)
                    error(head, errc::PartsOutOfOrder,
                          "construction step outside the construction part");
                construction_step(prop, next_step);
            } else if (head.is_kw("proof")) {
                enter(PartProof, head);
                advance();
                prop.has_proof = true;
                end_line("proof header");
            } else if (head.is_kw("step")) {
                if (part_seen != PartProof)
                    error(head, errc::PartsOutOfOrder, "proof step outside the proof part");
                proof_step(prop);
            } else if (head.is_kw("also")) {
                if (prop.proof.empty() || part_seen != PartProof) {
                    error(head, errc::ParseError, "'also' must follow a theorem step");
                    skip_line();
                } else {
                    advance();
                    if (auto j = judgment()) prop.proof.back().also.push_back(*j);
                    end_line("also");
                }
            } else if (head.is_kw("qed-do") || head.is_kw("qed-show") || head.is_kw("qed")) {
                enter(PartConclusion, head);
                prop.has_qed = true;
                prop.qed_span = head.span;
                prop.qed = head.lexeme == "qed-do"     ? PropositionAst::Qed::Do
                           : head.lexeme == "qed-show" ? PropositionAst::Qed::Show
                                                       : PropositionAst::Qed::Elided;
                advance();
                end_line("conclusion");
                done = true;
            } else {
                if (head.kind == TokenKind::Error)
                    error(head, errc::ParseError,
                          "unrecognizable character(s) '" + head.lexeme + "'");
                else
                    error(head, errc::ParseError,
                          "unexpected '" + head.lexeme + "' inside proposition " + prop.id.str());
                skip_line();
            }
        }
        validate_parts(prop);
        theory_.props.push_back(std::move(prop));
    }

    void given_decl(PropositionAst& prop) {
        GivenDecl g;
        g.span = peek().span;
        advance();  // given
        if (peek().is_kw("point")) {
            advance();
            auto s = object_letters(1, 1, "point name");
            if (!s) return skip_line();
            g.kind = GivenDecl::Kind::Point;
            g.letters = *s;
        } else if (peek().is_kw("segment")) {
            advance();
            auto s = object_letters(2, 2, "segment name");
            if (!s) return skip_line();
            g.kind = GivenDecl::Kind::Segment;
            g.letters = *s;
        } else if (peek().is_kw("triangle")) {
            advance();
            auto s = object_letters(3, 3, "triangle name");
            if (!s) return skip_line();
            g.kind = GivenDecl::Kind::Triangle;
            g.letters = *s;
            if (peek().is_kw("isosceles")) {
                advance();
                g.isosceles = true;
                if (peek().is_kw("apex")) {
                    advance();
                    auto a = point_letter("apex letter");
                    if (!a) return skip_line();
                    g.apex = *a;
                    if (g.letters.find(g.apex) == std::string::npos) {
                        error(peek(0), errc::ParseError,
                              std::string("apex '") + g.apex + "' is not a vertex of " +
                                  g.letters);
                        return skip_line();
                    }
                } else {
                    error(peek(), errc::ParseError, "isosceles declaration needs its apex",
                          "'apex'");
                    return skip_line();
                }
            }
        } else if (peek().is(TokenKind::ObjectName) && peek().lexeme.size() == 1 &&
                   peek(1).is_kw("extending")) {
            g.kind = GivenDecl::Kind::Extension;
            g.letters = advance().lexeme;
            advance();  // extending
            auto base = object_letters(2, 2, "segment name");
            if (!base) return skip_line();
            g.base = *base;
            if (!peek().is_kw("beyond")) {
                error(peek(), errc::ParseError, "extension needs 'beyond <endpoint>'",
                      "'beyond'");
                return skip_line();
            }
            advance();
            auto b = point_letter("endpoint letter");
            if (!b) return skip_line();
            g.beyond = *b;
            if (g.base.find(g.beyond) == std::string::npos) {
                error(peek(0), errc::ParseError,
                      std::string("'") + g.beyond + "' is not an endpoint of " + g.base);
                return skip_line();
            }
        } else {
            error(peek(), errc::ParseError, "unknown given declaration",
                  "point/segment/triangle or '<P> extending'");
            return skip_line();
        }
        prop.givens.push_back(std::move(g));
        end_line("given declaration");
    }

    void produce_decl(PropositionAst& prop) {
        Span sp = peek().span;
        advance();  // produce
        prop.spec.span = sp;
        ProducePattern pat;
        pat.span = peek().span;
        if (peek().is_kw("triangle")) {
            advance();
            auto s = object_letters(3, 3, "triangle pattern");
            if (!s) return skip_line();
            pat.kind = NameKind::Polygon;
            pat.letters = *s;
        } else if (peek().is_kw("segment")) {
            advance();
            auto s = object_letters(2, 2, "segment pattern");
            if (!s) return skip_line();
            pat.kind = NameKind::Segment;
            pat.letters = *s;
        } else if (peek().is_kw("point")) {
            advance();
            auto s = object_letters(1, 1, "point pattern");
            if (!s) return skip_line();
            pat.kind = NameKind::Point;
            pat.letters = *s;
        } else {
            error(peek(), errc::ParseError, "produce pattern needs a kind",
                  "point/segment/triangle");
            return skip_line();
        }
        prop.spec.produce = pat;
        if (peek().is_kw("with")) {
            advance();
            auto goals = judgment_list();
            for (auto& g : goals) prop.spec.goals.push_back(g);
        }
        end_line("produce");
    }

    void construction_step(PropositionAst& prop, int& next_step) {
        ConstructionStep st;
        st.span = peek().span;
        st.label = "s" + std::to_string(next_step);
        if (peek().is_kw("diagram")) {
            advance();
            auto j = judgment();
            if (!j) return skip_line();
            st.op = DiagramStep{*j};
            if (end_line("diagram")) {
                ++next_step;
                prop.construction.push_back(std::move(st));
            }
            return;
        }
        advance();  // let
        // LHS: circle label or (kinded) object pattern
        NameKind lhs_kind = NameKind::Point;
        std::string lhs;
        bool lhs_is_label = false;
        if (peek().is(TokenKind::Identifier)) {
            lhs = advance().lexeme;
            lhs_is_label = true;
        } else {
            if (peek().is_kw("point")) {
                advance();
                lhs_kind = NameKind::Point;
            } else if (peek().is_kw("segment")) {
                advance();
                lhs_kind = NameKind::Segment;
            } else if (peek().is_kw("triangle")) {
                advance();
                lhs_kind = NameKind::Polygon;
            } else if (peek().is(TokenKind::ObjectName)) {
                lhs_kind = peek().lexeme.size() == 1 ? NameKind::Point : NameKind::Segment;
            }
            auto s = object_letters(1, 3, "binding name");
            if (!s) return skip_line();
            lhs = *s;
            if (lhs_kind == NameKind::Segment && lhs.size() != 2) {
                error(peek(0), errc::BadArity, "segment binding '" + lhs + "' needs 2 letters");
                return skip_line();
            }
            if (lhs_kind == NameKind::Polygon && lhs.size() != 3) {
                error(peek(0), errc::BadArity, "triangle binding '" + lhs + "' needs 3 letters");
                return skip_line();
            }
        }
        if (!peek().is(TokenKind::Judgment) || peek().lexeme != "=") {
            error(peek(), errc::ParseError, "binding needs '='", "'='");
            return skip_line();
        }
        advance();

        const Token& op = peek();
        auto args_open = [&]() -> bool {
            advance();
            return expect_punct("(");
        };
        if (op.is_kw("circle")) {
            if (!lhs_is_label) {
                error(op, errc::ParseError, "a circle binds to a lowercase label");
                return skip_line();
            }
            if (!args_open()) return skip_line();
            CircleStep c;
            c.label = lhs;
            auto ctr = point_letter("center");
            if (!ctr) return skip_line();
            c.center = *ctr;
            if (!expect_punct(",")) return skip_line();
            auto rad = object_letters(2, 2, "radius segment");
            if (!rad) return skip_line();
            c.radius = *rad;
            if (!expect_punct(")")) return skip_line();
            st.op = c;
        } else if (op.is_kw("meet")) {
            if (lhs_is_label || lhs.size() != 1) {
                error(op, errc::ParseError, "meet binds a point letter");
                return skip_line();
            }
            if (!args_open()) return skip_line();
            MeetStep m;
            m.new_point = lhs[0];
            auto c1 = circle_label("circle label");
            if (!c1) return skip_line();
            m.c1 = *c1;
            if (!expect_punct(",")) return skip_line();
            auto c2 = circle_label("circle label");
            if (!c2) return skip_line();
            m.c2 = *c2;
            if (!expect_punct(")")) return skip_line();
            st.op = m;
        } else if (op.is_kw("line")) {
            if (lhs_is_label || lhs.size() != 2) {
                error(op, errc::ParseError, "line binds a segment name");
                return skip_line();
            }
            if (!args_open()) return skip_line();
            LineStep l;
            l.seg = lhs;
            auto p = point_letter("endpoint");
            if (!p) return skip_line();
            l.p = *p;
            if (!expect_punct(",")) return skip_line();
            auto q = point_letter("endpoint");
            if (!q) return skip_line();
            l.q = *q;
            if (!expect_punct(")")) return skip_line();
            std::string want{l.p, l.q};
            std::string alt{l.q, l.p};
            if (lhs != want && lhs != alt) {
                error(op, errc::ParseError,
                      "segment binding '" + lhs + "' does not name line(" + l.p + ", " + l.q +
                          ")");
                return skip_line();
            }
            st.op = l;
        } else if (op.is_kw("extend")) {
            if (lhs_is_label || lhs.size() != 1) {
                error(op, errc::ParseError, "extend binds the fresh endpoint letter");
                return skip_line();
            }
            if (!args_open()) return skip_line();
            ExtendStep e;
            e.new_point = lhs[0];
            auto base = object_letters(2, 2, "segment name");
            if (!base) return skip_line();
            e.base = *base;
            if (!expect_punct(",")) return skip_line();
            auto b = point_letter("endpoint");
            if (!b) return skip_line();
            e.beyond = *b;
            if (!expect_punct(")")) return skip_line();
            if (e.base.find(e.beyond) == std::string::npos) {
                error(op, errc::ParseError,
                      std::string("'") + e.beyond + "' is not an endpoint of " + e.base);
                return skip_line();
            }
            st.op = e;
        } else if (op.is_kw("pick")) {
            if (lhs_is_label || lhs.size() != 1) {
                error(op, errc::ParseError, "pick binds a point letter");
                return skip_line();
            }
            if (!args_open()) return skip_line();
            PickStep pk;
            pk.new_point = lhs[0];
            auto base = object_letters(2, 2, "segment name");
            if (!base) return skip_line();
            pk.base = *base;
            if (!expect_punct(")")) return skip_line();
            st.op = pk;
        } else if (op.is_kw("apply")) {
            if (lhs_is_label) {
                error(op, errc::ParseError, "apply binds an object pattern, not a label");
                return skip_line();
            }
            if (!args_open()) return skip_line();
            ApplyStep a;
            a.pattern_kind = lhs_kind;
            a.pattern = lhs;
            auto id = prop_label();
            if (!id) return skip_line();
            a.prop = *id;
            while (peek().is_punct(",")) {
                advance();
                auto t = term();
                if (!t) return skip_line();
                a.args.push_back(*t);
            }
            if (!expect_punct(")")) return skip_line();
            if (peek().is_kw("on")) {
                advance();
                Placement pl;
                auto seg = object_letters(2, 2, "segment name");
                if (!seg) return skip_line();
                pl.on_segment = *seg;
                if (!peek().is_kw("between")) {
                    error(peek(), errc::ParseError, "placement needs 'between <P> and <Q>'",
                          "'between'");
                    return skip_line();
                }
                advance();
                auto lp = point_letter("placement endpoint");
                if (!lp) return skip_line();
                pl.left = *lp;
                if (!peek().is_kw("and")) {
                    error(peek(), errc::ParseError, "placement needs 'and'", "'and'");
                    return skip_line();
                }
                advance();
                auto rp = point_letter("placement endpoint");
                if (!rp) return skip_line();
                pl.right = *rp;
                a.placement = pl;
            }
            st.op = a;
        } else {
            error(op, errc::ParseError, "unknown construction operation '" + op.lexeme + "'",
                  "circle/meet/line/extend/pick/apply");
            return skip_line();
        }
        if (end_line("construction step")) {
            ++next_step;
            prop.construction.push_back(std::move(st));
        }
    }

    void proof_step(PropositionAst& prop) {
        ProofStep st;
        st.span = peek().span;
        advance();  // step
        if (peek().is(TokenKind::Identifier)) {
            st.label = advance().lexeme;
        } else {
            error(peek(), errc::ParseError, "proof step needs a label", "identifier");
            return skip_line();
        }
        if (!expect_punct(":")) return skip_line();
        auto concl = judgment();
        if (!concl) return skip_line();
        st.conclusion = *concl;
        if (!peek().is_kw("by")) {
            error(peek(), errc::ParseError, "proof step needs 'by <rule>'", "'by'");
            return skip_line();
        }
        advance();
        const Token& rt = peek();
        if (rt.is_kw("cn1") || rt.is_kw("cn2") || rt.is_kw("cn3") || rt.is_kw("cn4") ||
            rt.is_kw("cn5")) {
            st.rule.kind = RuleRef::Kind::Cn;
            st.rule.cn = rt.lexeme[2] - '0';
            advance();
        } else if (rt.is_kw("common")) {
            st.rule.kind = RuleRef::Kind::Common;
            advance();
        } else if (rt.is_kw("radii")) {
            st.rule.kind = RuleRef::Kind::Radii;
            advance();
            if (!expect_punct("(")) return skip_line();
            auto lbl = circle_label("circle label");
            if (!lbl) return skip_line();
            st.rule.circle = *lbl;
            if (!expect_punct(")")) return skip_line();
        } else if (rt.is_kw("theorem")) {
            st.rule.kind = RuleRef::Kind::Theorem;
            advance();
            if (!expect_punct("(")) return skip_line();
            auto id = prop_label();
            if (!id) return skip_line();
            st.rule.prop = *id;
            while (peek().is_punct(",")) {
                advance();
                auto b = object_letters(1, 12, "binding name");
                if (!b) return skip_line();
                st.rule.bindings.push_back(*b);
            }
            if (!expect_punct(")")) return skip_line();
        } else {
            error(rt, errc::ParseError, "unknown rule '" + rt.lexeme + "'",
                  "cn1..cn5/common/radii/theorem");
            return skip_line();
        }
        if (peek().is_kw("from")) {
            advance();
            st.premises = judgment_list();
        }
        if (end_line("proof step")) prop.proof.push_back(std::move(st));
    }

    // --- validation --------------------------------------------------------

    void validate_parts(PropositionAst& prop) {
        auto missing = [&](const char* part) {
            diags_.push_back(Diagnostic{errc::MissingPart,
                                        "proposition " + prop.id.str() + " is missing its " +
                                            part,
                                        prop.span, ""});
        };
        if (!prop.has_enunciation) missing("enunciation");
        if (prop.givens.empty() && prop.hypotheses.empty()) missing("exposition");
        bool has_spec = prop.spec.elided || prop.spec.produce.has_value() ||
                        !prop.spec.goals.empty();
        if (!has_spec) missing("specification");
        if (prop.primitive) {
            if (prop.has_construction || prop.has_proof || prop.has_qed)
                diags_.push_back(Diagnostic{
                    errc::ParseError,
                    "primitive " + prop.id.str() + " admits no construction, proof or qed",
                    prop.span, ""});
            return;
        }
        if (!prop.has_construction) missing("construction");
        if (!prop.has_proof) missing("proof");
        if (!prop.has_qed) missing("conclusion");
        if (prop.kind == PropKind::Problem && !prop.spec.produce && !prop.spec.elided)
            diags_.push_back(Diagnostic{errc::ParseError,
                                        "problem " + prop.id.str() +
                                            " needs a produce pattern in its specification",
                                        prop.spec.span, ""});
        if (prop.kind == PropKind::Theorem && prop.spec.produce)
            diags_.push_back(Diagnostic{errc::ParseError,
                                        "theorem " + prop.id.str() + " cannot 'produce'",
                                        prop.spec.span, ""});
        // exposition-level duplicate declarations (triangle sides included)
        std::set<std::string> declared;
        auto declare = [&](NameKind kind, const std::string& raw, const Span& sp) {
            auto c = canonicalize(kind, raw);
            if (!c) return;
            std::string key = std::string(to_string(kind)) + ":" + c->letters;
            if (!declared.insert(key).second)
                diags_.push_back(Diagnostic{errc::DuplicateObjectName,
                                            "object '" + raw + "' declared twice in proposition " +
                                                prop.id.str(),
                                            sp, ""});
        };
        std::set<char> seen_letters;
        for (const auto& g : prop.givens) {
            switch (g.kind) {
                case GivenDecl::Kind::Point:
                    declare(NameKind::Point, g.letters, g.span);
                    break;
                case GivenDecl::Kind::Segment:
                    declare(NameKind::Segment, g.letters, g.span);
                    break;
                case GivenDecl::Kind::Triangle: {
                    declare(NameKind::Polygon, g.letters, g.span);
                    auto tri = canonicalize(NameKind::Polygon, g.letters);
                    if (tri) {
                        auto sides = sides_of(*tri);
                        if (sides)
                            for (const auto& s : *sides)
                                declare(NameKind::Segment, s.letters, g.span);
                    }
                    break;
                }
                case GivenDecl::Kind::Extension: {
                    if (seen_letters.count(g.letters[0]))
                        diags_.push_back(
                            Diagnostic{errc::DuplicateObjectName,
                                       std::string("extension point '") + g.letters +
                                           "' is already a declared letter",
                                       g.span, ""});
                    break;
                }
            }
            for (char ch : g.letters) seen_letters.insert(ch);
        }
    }

    void validate_theory() {
        PropId prev{0, 0};
        for (const auto& p : theory_.props) {
            if (!(prev < p.id))
                diags_.push_back(Diagnostic{errc::NumberOutOfOrder,
                                            "proposition numbers must strictly increase (" +
                                                p.id.str() + " after " + prev.str() + ")",
                                            p.span, ""});
            prev = p.id;
            // backward-reference discipline
            auto check_ref = [&](const PropId& ref, const Span& sp) {
                if (!(ref < p.id))
                    diags_.push_back(Diagnostic{errc::ForwardReference,
                                                "proposition " + p.id.str() + " references " +
                                                    ref.str() + " which does not precede it",
                                                sp, ""});
            };
            for (const auto& st : p.construction)
                if (auto* a = std::get_if<ApplyStep>(&st.op)) check_ref(a->prop, st.span);
            for (const auto& st : p.proof)
                if (st.rule.kind == RuleRef::Kind::Theorem) check_ref(st.rule.prop, st.span);
        }
    }
};

inline ParseResult parse_theory(const std::vector<Token>& tokens) { return Parser::parse(tokens); }

inline ParseResult parse_source(std::string_view source) {
    return Parser::parse(tokenize(source));
}

}  // namespace euclid
