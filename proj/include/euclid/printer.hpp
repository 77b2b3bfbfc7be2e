// Pretty-printer for parsed theories. print(parse(x)) re-parses to a
// structurally identical AST; the round-trip property test relies on it.
#pragma once

#include <sstream>
#include <string>
#include <variant>

#include "euclid/ast.hpp"

namespace euclid {

namespace detail {

inline std::string print_term(const TermExpr& t) {
    switch (t.kind) {
        case NameKind::Angle: return "angle " + t.letters;
        case NameKind::Polygon: return "triangle " + t.letters;
        default: return t.letters;
    }
}

inline std::string print_judgment(const JudgmentExpr& j) {
    switch (j.kind) {
        case JudgmentExpr::Kind::Equal: return print_term(j.a) + " = " + print_term(j.b);
        case JudgmentExpr::Kind::Decomp:
            return print_term(j.a) + " == " + print_term(j.b) + " + " + print_term(j.c);
        case JudgmentExpr::Kind::Greater: return print_term(j.a) + " > " + print_term(j.b);
        case JudgmentExpr::Kind::On: return print_term(j.a) + " on " + j.circle;
    }
    return "?";
}

}  // namespace detail

inline std::string print_theory(const TheoryAst& theory) {
    using detail::print_judgment;
    using detail::print_term;
    std::ostringstream os;
    os << "theory " << theory.name << "\n";
    for (const auto& p : theory.props) {
        os << "\n";
        if (p.primitive)
            os << "primitive " << to_string(p.kind) << " " << p.id.str() << "\n";
        else
            os << "proposition " << p.id.str() << " " << to_string(p.kind) << "\n";
        if (p.has_enunciation) os << "  enunciation \"" << p.prose << "\"\n";
        for (const auto& g : p.givens) {
            os << "  given ";
            switch (g.kind) {
                case GivenDecl::Kind::Point: os << "point " << g.letters; break;
                case GivenDecl::Kind::Segment: os << "segment " << g.letters; break;
                case GivenDecl::Kind::Triangle:
                    os << "triangle " << g.letters;
                    if (g.isosceles) os << " isosceles apex " << g.apex;
                    break;
                case GivenDecl::Kind::Extension:
                    os << g.letters << " extending " << g.base << " beyond " << g.beyond;
                    break;
            }
            os << "\n";
        }
        for (const auto& h : p.hypotheses) os << "  hypothesis " << print_judgment(h) << "\n";
        if (p.spec.elided) {
            os << "  specification elided\n";
        } else if (p.spec.produce) {
            os << "  produce "
               << (p.spec.produce->kind == NameKind::Polygon   ? "triangle "
                   : p.spec.produce->kind == NameKind::Segment ? "segment "
                                                               : "point ")
               << p.spec.produce->letters;
            if (!p.spec.goals.empty()) {
                os << " with ";
                for (size_t i = 0; i < p.spec.goals.size(); ++i) {
                    if (i) os << ", ";
                    os << print_judgment(p.spec.goals[i]);
                }
            }
            os << "\n";
        } else {
            for (const auto& g : p.spec.goals) os << "  show " << print_judgment(g) << "\n";
        }
        if (p.primitive) continue;
        if (p.has_construction) os << "  construction\n";
        for (const auto& st : p.construction) {
            os << "    ";
            std::visit(
                [&](const auto& op) {
                    using T = std::decay_t<decltype(op)>;
                    if constexpr (std::is_same_v<T, CircleStep>) {
                        os << "let " << op.label << " = circle(" << op.center << ", " << op.radius
                           << ")";
                    } else if constexpr (std::is_same_v<T, MeetStep>) {
                        os << "let " << op.new_point << " = meet(" << op.c1 << ", " << op.c2
                           << ")";
                    } else if constexpr (std::is_same_v<T, LineStep>) {
                        os << "let " << op.seg << " = line(" << op.p << ", " << op.q << ")";
                    } else if constexpr (std::is_same_v<T, ExtendStep>) {
                        os << "let " << op.new_point << " = extend(" << op.base << ", "
                           << op.beyond << ")";
                    } else if constexpr (std::is_same_v<T, PickStep>) {
                        os << "let " << op.new_point << " = pick(" << op.base << ")";
                    } else if constexpr (std::is_same_v<T, ApplyStep>) {
                        os << "let ";
                        if (op.pattern_kind == NameKind::Polygon) os << "triangle ";
                        if (op.pattern_kind == NameKind::Segment && op.pattern.size() != 2)
                            os << "segment ";
                        if (op.pattern_kind == NameKind::Point && op.pattern.size() != 1)
                            os << "point ";
                        os << op.pattern << " = apply(" << op.prop.str();
                        for (const auto& a : op.args) os << ", " << print_term(a);
                        os << ")";
                        if (op.placement)
                            os << " on " << op.placement->on_segment << " between "
                               << op.placement->left << " and " << op.placement->right;
                    } else if constexpr (std::is_same_v<T, DiagramStep>) {
                        os << "diagram " << print_judgment(op.judgment);
                    }
                },
                st.op);
            os << "\n";
        }
        if (p.has_proof) os << "  proof\n";
        for (const auto& st : p.proof) {
            os << "    step " << st.label << ": " << print_judgment(st.conclusion) << " by ";
            switch (st.rule.kind) {
                case RuleRef::Kind::Cn: os << "cn" << st.rule.cn; break;
                case RuleRef::Kind::Common: os << "common"; break;
                case RuleRef::Kind::Radii: os << "radii(" << st.rule.circle << ")"; break;
                case RuleRef::Kind::Theorem:
                    os << "theorem(" << st.rule.prop.str();
                    for (const auto& b : st.rule.bindings) os << ", " << b;
                    os << ")";
                    break;
            }
            if (!st.premises.empty()) {
                os << " from ";
                for (size_t i = 0; i < st.premises.size(); ++i) {
                    if (i) os << ", ";
                    os << print_judgment(st.premises[i]);
                }
            }
            os << "\n";
            for (const auto& a : st.also) os << "      also " << print_judgment(a) << "\n";
        }
        switch (p.qed) {
            case PropositionAst::Qed::Do: os << "  qed-do\n"; break;
            case PropositionAst::Qed::Show: os << "  qed-show\n"; break;
            case PropositionAst::Qed::Elided: os << "  qed\n"; break;
        }
    }
    return os.str();
}

}  // namespace euclid
