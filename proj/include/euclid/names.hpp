// Canonical naming for geometric objects: segment/polygon/angle letter
// conventions (AB == BA, dihedral invariance for polygons, vertex-middle
// angles) and the syntactic contraction rule for segment names.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace euclid {

enum class NameKind { Point, Segment, Polygon, Angle, CircleLabel };

inline std::string_view to_string(NameKind k) {
    switch (k) {
        case NameKind::Point: return "point";
        case NameKind::Segment: return "segment";
        case NameKind::Polygon: return "polygon";
        case NameKind::Angle: return "angle";
        case NameKind::CircleLabel: return "circle";
    }
    return "?";
}

// A canonical object name. Construct via canonicalize(); equality of two
// ObjectNames then coincides with co-reference under the letter conventions.
struct ObjectName {
    NameKind kind = NameKind::Point;
    std::string letters;  // canonical letter sequence; opaque label for circles

    friend bool operator==(const ObjectName&, const ObjectName&) = default;
    friend auto operator<=>(const ObjectName&, const ObjectName&) = default;

    // Middle letter of an angle name (canonicalization keeps it in place).
    char vertex() const { return letters[1]; }

    std::string display() const {
        if (kind == NameKind::Angle) return "angle " + letters;
        if (kind == NameKind::Polygon) return "triangle " + letters;
        return letters;
    }
};

struct NameError {
    enum class Code { RepeatedLetter, WrongArity, BadLetter };
    Code code;
    std::string message;
};

inline std::string_view to_string(NameError::Code c) {
    switch (c) {
        case NameError::Code::RepeatedLetter: return "RepeatedLetter";
        case NameError::Code::WrongArity: return "WrongArity";
        case NameError::Code::BadLetter: return "BadLetter";
    }
    return "?";
}

template <typename T>
struct NameResult {
    std::optional<T> value;
    std::optional<NameError> error;

    static NameResult ok(T v) { return {std::move(v), std::nullopt}; }
    static NameResult fail(NameError::Code c, std::string msg) {
        return {std::nullopt, NameError{c, std::move(msg)}};
    }
    explicit operator bool() const { return value.has_value(); }
    const T& operator*() const { return *value; }
};

namespace detail {

inline bool all_uppercase(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= 'A' && c <= 'Z'; });
}

inline bool pairwise_distinct(std::string_view s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j]) return false;
    return true;
}

// All rotations of w plus all rotations of its reversal.
inline std::vector<std::string> dihedral_orbit(std::string_view w) {
    std::vector<std::string> orbit;
    std::string cur(w);
    std::string rev(w.rbegin(), w.rend());
    for (size_t i = 0; i < w.size(); ++i) {
        orbit.push_back(cur);
        orbit.push_back(rev);
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        std::rotate(rev.begin(), rev.begin() + 1, rev.end());
    }
    return orbit;
}

}  // namespace detail

// Canonical representative of a raw letter sequence under the given kind.
// Segment: letters ascending. Polygon: lexicographic minimum over the
// dihedral orbit (rotations and reversals). Angle: vertex stays in the
// middle, arm letters ascending.
inline NameResult<ObjectName> canonicalize(NameKind kind, std::string_view raw) {
    using R = NameResult<ObjectName>;
    if (kind == NameKind::CircleLabel) {
        if (raw.empty()) return R::fail(NameError::Code::WrongArity, "empty circle label");
        return R::ok(ObjectName{kind, std::string(raw)});
    }
    if (!detail::all_uppercase(raw))
        return R::fail(NameError::Code::BadLetter,
                       "name '" + std::string(raw) + "' must use uppercase letters A-Z");
    auto arity_fail = [&](std::string_view want) {
        return R::fail(NameError::Code::WrongArity, "name '" + std::string(raw) + "' must have " +
                                                        std::string(want) + " letters");
    };
    switch (kind) {
        case NameKind::Point:
            if (raw.size() != 1) return arity_fail("exactly 1");
            return R::ok(ObjectName{kind, std::string(raw)});
        case NameKind::Segment: {
            if (raw.size() != 2) return arity_fail("exactly 2");
            if (raw[0] == raw[1])
                return R::fail(NameError::Code::RepeatedLetter,
                               "segment '" + std::string(raw) + "' repeats a letter");
            std::string s{std::min(raw[0], raw[1]), std::max(raw[0], raw[1])};
            return R::ok(ObjectName{kind, s});
        }
        case NameKind::Polygon: {
            if (raw.size() < 3) return arity_fail("at least 3");
            if (!detail::pairwise_distinct(raw))
                return R::fail(NameError::Code::RepeatedLetter,
                               "polygon '" + std::string(raw) + "' repeats a letter");
            auto orbit = detail::dihedral_orbit(raw);
            return R::ok(ObjectName{kind, *std::min_element(orbit.begin(), orbit.end())});
        }
        case NameKind::Angle: {
            if (raw.size() != 3) return arity_fail("exactly 3");
            if (!detail::pairwise_distinct(raw))
                return R::fail(NameError::Code::RepeatedLetter,
                               "angle '" + std::string(raw) + "' repeats a letter");
            std::string s{std::min(raw[0], raw[2]), raw[1], std::max(raw[0], raw[2])};
            return R::ok(ObjectName{kind, s});
        }
        default: break;
    }
    return R::fail(NameError::Code::WrongArity, "bad kind");
}

// The n sides of a polygon name: each adjacent letter pair plus the pair of
// the first and last letter, all as canonical segment names, sorted.
inline NameResult<std::vector<ObjectName>> sides_of(const ObjectName& poly) {
    using R = NameResult<std::vector<ObjectName>>;
    if (poly.kind != NameKind::Polygon || poly.letters.size() < 3)
        return R::fail(NameError::Code::WrongArity, "'" + poly.letters + "' is not a polygon name");
    std::vector<ObjectName> sides;
    const std::string& w = poly.letters;
    for (size_t i = 0; i < w.size(); ++i) {
        char a = w[i];
        char b = w[(i + 1) % w.size()];
        sides.push_back(*canonicalize(NameKind::Segment, std::string{a, b}));
    }
    std::sort(sides.begin(), sides.end());
    sides.erase(std::unique(sides.begin(), sides.end()), sides.end());
    return R::ok(std::move(sides));
}

// Syntactic contraction of segment names: UV and XY with V = X give UY.
// Orientation-significant on the raw forms; purely syntactic (asserts no
// geometric fact). Degenerate results (U = Y) give nothing.
inline std::optional<ObjectName> contract(std::string_view left_raw, std::string_view right_raw) {
    if (left_raw.size() != 2 || right_raw.size() != 2) return std::nullopt;
    if (left_raw[0] == left_raw[1] || right_raw[0] == right_raw[1]) return std::nullopt;
    if (left_raw[1] != right_raw[0]) return std::nullopt;
    if (left_raw[0] == right_raw[1]) return std::nullopt;
    auto r = canonicalize(NameKind::Segment, std::string{left_raw[0], right_raw[1]});
    if (!r) return std::nullopt;
    return *r;
}

// Vertex letter of a raw (pre-canonical) three-letter angle name.
inline NameResult<char> vertex_of(std::string_view raw_angle) {
    using R = NameResult<char>;
    if (raw_angle.size() != 3)
        return R::fail(NameError::Code::WrongArity,
                       "angle name '" + std::string(raw_angle) + "' must have exactly 3 letters");
    if (!detail::all_uppercase(raw_angle))
        return R::fail(NameError::Code::BadLetter, "angle letters must be uppercase");
    if (!detail::pairwise_distinct(raw_angle))
        return R::fail(NameError::Code::RepeatedLetter, "angle letters must be distinct");
    return R::ok(raw_angle[1]);
}

}  // namespace euclid
