// Source spans and diagnostics shared by the lexer, parser and checker.
#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace euclid {

struct Span {
    int line = 0;    // 1-based
    int column = 0;  // 1-based
    int length = 0;

    friend bool operator==(const Span&, const Span&) = default;
};

// Stable diagnostic class names; tests and reports key on these.
namespace errc {
inline constexpr const char* RepeatedLetter = "RepeatedLetter";
inline constexpr const char* WrongArity = "WrongArity";
inline constexpr const char* BadLetter = "BadLetter";
inline constexpr const char* BadArity = "BadArity";
inline constexpr const char* MissingPart = "MissingPart";
inline constexpr const char* PartsOutOfOrder = "PartsOutOfOrder";
inline constexpr const char* ForwardReference = "ForwardReference";
inline constexpr const char* DuplicateObjectName = "DuplicateObjectName";
inline constexpr const char* NumberOutOfOrder = "NumberOutOfOrder";
inline constexpr const char* ParseError = "ParseError";
inline constexpr const char* UnknownPoint = "UnknownPoint";
inline constexpr const char* UnknownSegment = "UnknownSegment";
inline constexpr const char* UnknownObject = "UnknownObject";
inline constexpr const char* UnknownFact = "UnknownFact";
inline constexpr const char* DegenerateSegment = "DegenerateSegment";
inline constexpr const char* NameCollision = "NameCollision";
inline constexpr const char* CenterNotOnRadius = "CenterNotOnRadius";
inline constexpr const char* NoCommonRadius = "NoCommonRadius";
inline constexpr const char* SameCircle = "SameCircle";
inline constexpr const char* AmbiguousPlacement = "AmbiguousPlacement";
inline constexpr const char* NotADecomposition = "NotADecomposition";
inline constexpr const char* NotARadius = "NotARadius";
inline constexpr const char* UnconstructedObject = "UnconstructedObject";
inline constexpr const char* OutsideExposition = "OutsideExposition";
inline constexpr const char* PatternMismatch = "PatternMismatch";
inline constexpr const char* SortMismatch = "SortMismatch";
inline constexpr const char* SchemaMismatch = "SchemaMismatch";
inline constexpr const char* UnsatisfiedHypothesis = "UnsatisfiedHypothesis";
inline constexpr const char* UnverifiedReference = "UnverifiedReference";
inline constexpr const char* UnjustifiedPremise = "UnjustifiedPremise";
inline constexpr const char* GoalUnreached = "GoalUnreached";
inline constexpr const char* IllegitimateGeneralization = "IllegitimateGeneralization";
inline constexpr const char* ConclusionMismatch = "ConclusionMismatch";
inline constexpr const char* IoError = "IoError";
}  // namespace errc

struct Diagnostic {
    std::string code;  // one of errc::*
    std::string message;
    Span span;
    std::string hint;  // expected-token hint for parse errors, else empty

    std::string render() const {
        std::ostringstream os;
        os << span.line << ":" << span.column << ": " << code << ": " << message;
        if (!hint.empty()) os << " (expected " << hint << ")";
        return os.str();
    }
};

// Kernel-level operation result: a value or an error code + message.
template <typename T>
struct Res {
    std::optional<T> value;
    std::string code;
    std::string message;

    static Res ok(T v) { return Res{std::move(v), {}, {}}; }
    static Res fail(std::string c, std::string msg) {
        return Res{std::nullopt, std::move(c), std::move(msg)};
    }
    explicit operator bool() const { return value.has_value(); }
    const T& operator*() const { return *value; }
    T& operator*() { return *value; }
};

}  // namespace euclid
