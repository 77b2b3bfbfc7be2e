// Judgments over named objects: Euclid-equality, sum decompositions
// (identity with + / -), greater-than, and point-on-circle incidence.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "euclid/names.hpp"

namespace euclid {

// Magnitude sort of a judgment operand. Equality and comparison only relate
// magnitudes of one sort; decompositions share one sort across operands.
enum class Sort { SegmentMag, AngleMag, FigureMag };

inline std::string_view to_string(Sort s) {
    switch (s) {
        case Sort::SegmentMag: return "segment";
        case Sort::AngleMag: return "angle";
        case Sort::FigureMag: return "figure";
    }
    return "?";
}

inline std::optional<Sort> sort_of(const ObjectName& n) {
    switch (n.kind) {
        case NameKind::Segment: return Sort::SegmentMag;
        case NameKind::Angle: return Sort::AngleMag;
        case NameKind::Polygon: return Sort::FigureMag;
        default: return std::nullopt;
    }
}

struct Judgment {
    enum class Kind { Equal, Decomp, Greater, On };
    Kind kind = Kind::Equal;
    // Equal: a = b (stored with operands sorted)
    // Decomp: a == b + c (whole, first addend, second addend; authored order)
    // Greater: a > b
    // On: a (point) on circle label `circle`
    ObjectName a, b, c;
    std::string circle;

    friend bool operator==(const Judgment&, const Judgment&) = default;
    friend auto operator<=>(const Judgment&, const Judgment&) = default;

    static Judgment equal(ObjectName x, ObjectName y) {
        if (y < x) std::swap(x, y);
        return Judgment{Kind::Equal, std::move(x), std::move(y), {}, {}};
    }
    static Judgment decomp(ObjectName whole, ObjectName first, ObjectName second) {
        return Judgment{Kind::Decomp, std::move(whole), std::move(first), std::move(second), {}};
    }
    static Judgment greater(ObjectName x, ObjectName y) {
        return Judgment{Kind::Greater, std::move(x), std::move(y), {}, {}};
    }
    static Judgment on(ObjectName point, std::string circle_label) {
        return Judgment{Kind::On, std::move(point), {}, {}, std::move(circle_label)};
    }

    // Shared sort of the magnitude operands; nullopt for On or mixed sorts.
    std::optional<Sort> sort() const {
        if (kind == Kind::On) return std::nullopt;
        auto sa = sort_of(a), sb = sort_of(b);
        if (!sa || !sb || *sa != *sb) return std::nullopt;
        if (kind == Kind::Decomp) {
            auto sc = sort_of(c);
            if (!sc || *sc != *sa) return std::nullopt;
        }
        return sa;
    }

    // True when the two judgments state the same thing modulo addend order.
    bool same_as(const Judgment& o) const {
        if (kind != o.kind) return false;
        if (kind == Kind::Decomp)
            return a == o.a && ((b == o.b && c == o.c) || (b == o.c && c == o.b));
        return *this == o;
    }

    std::vector<ObjectName> objects() const {
        std::vector<ObjectName> v;
        v.push_back(a);
        if (kind != Kind::On) v.push_back(b);
        if (kind == Kind::Decomp) v.push_back(c);
        return v;
    }

    std::string render() const {
        switch (kind) {
            case Kind::Equal: return a.display() + " = " + b.display();
            case Kind::Decomp: return a.display() + " == " + b.display() + " + " + c.display();
            case Kind::Greater: return a.display() + " > " + b.display();
            case Kind::On: return a.display() + " on " + circle;
        }
        return "?";
    }
};

}  // namespace euclid
