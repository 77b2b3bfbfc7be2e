// Parsed representation of a .euclid theory: propositions with the six
// Euclidean parts, primitive declarations, construction and proof steps.
//
// Object references keep their raw letter order here. Order carries the
// correspondence in theorem citations ("triangles AFC, AGB") and in produce
// patterns, so canonicalization is the checker's job, not the parser's.
#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "euclid/diagnostics.hpp"
#include "euclid/names.hpp"

namespace euclid {

struct PropId {
    int major = 0;
    int minor = 0;

    friend bool operator==(const PropId&, const PropId&) = default;
    friend auto operator<=>(const PropId&, const PropId&) = default;

    std::string str() const { return std::to_string(major) + "." + std::to_string(minor); }

    static std::optional<PropId> parse(std::string_view s) {
        auto dot = s.find('.');
        if (dot == std::string_view::npos || dot == 0 || dot + 1 >= s.size()) return std::nullopt;
        PropId id;
        auto r1 = std::from_chars(s.data(), s.data() + dot, id.major);
        auto r2 = std::from_chars(s.data() + dot + 1, s.data() + s.size(), id.minor);
        if (r1.ec != std::errc{} || r2.ec != std::errc{} || r1.ptr != s.data() + dot ||
            r2.ptr != s.data() + s.size())
            return std::nullopt;
        return id;
    }
};

enum class PropKind { Problem, Theorem };

inline std::string_view to_string(PropKind k) {
    return k == PropKind::Problem ? "problem" : "theorem";
}

// A raw object reference: kind as written plus the letter run (or circle
// label) in source order.
struct TermExpr {
    NameKind kind = NameKind::Point;
    std::string letters;
    Span span;

    friend bool operator==(const TermExpr&, const TermExpr&) = default;
};

// A judgment as written. Decompositions are normalized to sum form at parse
// time (`a == b - c` becomes `b == c + a`).
struct JudgmentExpr {
    enum class Kind { Equal, Decomp, Greater, On };
    Kind kind = Kind::Equal;
    TermExpr a, b, c;    // On: a is the point, circle holds the label
    std::string circle;
    Span span;

    friend bool operator==(const JudgmentExpr&, const JudgmentExpr&) = default;
};

// ---- exposition -------------------------------------------------------

struct GivenDecl {
    enum class Kind { Point, Segment, Triangle, Extension };
    Kind kind = Kind::Point;
    std::string letters;    // declared object letters; for Extension, the new point
    bool isosceles = false;
    char apex = 0;          // apex letter for isosceles triangles
    std::string base;       // extension: segment being produced further
    char beyond = 0;        // extension: past which endpoint
    Span span;

    friend bool operator==(const GivenDecl&, const GivenDecl&) = default;
};

// ---- specification ----------------------------------------------------

struct ProducePattern {
    NameKind kind = NameKind::Point;
    std::string letters;  // raw order; letters not bound by the exposition are fresh
    Span span;

    friend bool operator==(const ProducePattern&, const ProducePattern&) = default;
};

struct Specification {
    bool elided = false;
    std::optional<ProducePattern> produce;  // Problems
    std::vector<JudgmentExpr> goals;        // `with` / `show` judgments
    Span span;

    friend bool operator==(const Specification&, const Specification&) = default;
};

// ---- construction -----------------------------------------------------

struct Placement {
    std::string on_segment;
    char left = 0;
    char right = 0;

    friend bool operator==(const Placement&, const Placement&) = default;
};

struct CircleStep {
    std::string label;
    char center = 0;
    std::string radius;
    friend bool operator==(const CircleStep&, const CircleStep&) = default;
};
struct MeetStep {
    char new_point = 0;
    std::string c1, c2;
    friend bool operator==(const MeetStep&, const MeetStep&) = default;
};
struct LineStep {
    std::string seg;  // LHS as written
    char p = 0, q = 0;
    friend bool operator==(const LineStep&, const LineStep&) = default;
};
struct ExtendStep {
    char new_point = 0;
    std::string base;
    char beyond = 0;
    friend bool operator==(const ExtendStep&, const ExtendStep&) = default;
};
struct PickStep {
    char new_point = 0;
    std::string base;
    friend bool operator==(const PickStep&, const PickStep&) = default;
};
struct ApplyStep {
    NameKind pattern_kind = NameKind::Point;
    std::string pattern;  // raw order: positional correspondence with the
                          // applied Problem's produce pattern
    PropId prop;
    std::vector<TermExpr> args;
    std::optional<Placement> placement;
    friend bool operator==(const ApplyStep&, const ApplyStep&) = default;
};
struct DiagramStep {
    JudgmentExpr judgment;
    friend bool operator==(const DiagramStep&, const DiagramStep&) = default;
};

struct ConstructionStep {
    std::string label;  // s1, s2, ... assigned by the parser
    Span span;
    std::variant<CircleStep, MeetStep, LineStep, ExtendStep, PickStep, ApplyStep, DiagramStep> op;
};

// ---- proof ------------------------------------------------------------

struct RuleRef {
    enum class Kind { Cn, Common, Radii, Theorem };
    Kind kind = Kind::Cn;
    int cn = 0;                         // 1..5
    std::string circle;                 // Radii
    PropId prop;                        // Theorem
    std::vector<std::string> bindings;  // Theorem: raw ordered letter lists

    friend bool operator==(const RuleRef&, const RuleRef&) = default;
};

struct ProofStep {
    std::string label;
    Span span;
    JudgmentExpr conclusion;
    RuleRef rule;
    std::vector<JudgmentExpr> premises;  // cited judgments, resolved against facts
    std::vector<JudgmentExpr> also;      // further conclusions of a theorem application
};

// ---- proposition / theory ---------------------------------------------

struct PropositionAst {
    PropId id;
    PropKind kind = PropKind::Problem;
    bool primitive = false;
    std::string prose;
    Span prose_span;
    std::vector<GivenDecl> givens;
    std::vector<JudgmentExpr> hypotheses;
    Specification spec;
    std::vector<ConstructionStep> construction;
    std::vector<ProofStep> proof;
    enum class Qed { Do, Show, Elided } qed = Qed::Elided;
    bool has_enunciation = false;
    bool has_construction = false;
    bool has_proof = false;
    bool has_qed = false;
    Span span;
    Span qed_span;
};

struct TheoryAst {
    std::string name;
    std::vector<PropositionAst> props;
};

}  // namespace euclid
