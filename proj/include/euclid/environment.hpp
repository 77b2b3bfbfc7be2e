// The per-proposition verification environment: object registry, collinear
// chains, circles, the append-only fact store, and the production trace.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "euclid/ast.hpp"
#include "euclid/diagnostics.hpp"
#include "euclid/judgment.hpp"

namespace euclid {

struct Provenance {
    enum class Kind { Hypothesis, Construction, Definition, Deduction, Diagram };
    Kind kind = Kind::Hypothesis;
    int step = -1;             // producing step index (Construction/Diagram/Definition)
    std::string rule;          // Deduction: cn1..cn5/common/theorem <id>; Definition: def-1.15
    std::vector<int> premises; // fact ids, each strictly smaller than the fact's own id
};

inline std::string_view to_string(Provenance::Kind k) {
    switch (k) {
        case Provenance::Kind::Hypothesis: return "hypothesis";
        case Provenance::Kind::Construction: return "construction";
        case Provenance::Kind::Definition: return "definition";
        case Provenance::Kind::Deduction: return "deduction";
        case Provenance::Kind::Diagram: return "diagram";
    }
    return "?";
}

struct Fact {
    int id = -1;
    Judgment judgment;
    Provenance prov;
};

struct GeomObject {
    ObjectName name;
    bool given = false;  // introduced by the exposition
    int step = -1;       // producing step for constructed objects
};

struct Chain {
    std::vector<char> points;  // ordered collinear letters

    int position(char p) const {
        auto it = std::find(points.begin(), points.end(), p);
        return it == points.end() ? -1 : int(it - points.begin());
    }
    bool contains(char p) const { return position(p) >= 0; }
};

struct CircleObj {
    std::string label;
    char center = 0;
    ObjectName radius;
    int step = -1;
};

struct Step {
    enum class Kind { Exposition, Line, Extend, Circle, Meet, Pick, Derived, Diagram };
    int index = -1;
    Kind kind = Kind::Exposition;
    std::string label;   // s1... for construction, g1... for exposition entries
    std::string detail;  // rendered description for traces
    std::optional<PropId> derived_ref;
    std::vector<std::string> inputs;   // display names of consumed objects
    std::vector<std::string> outputs;  // display names of produced / re-availed objects
};

struct Environment {
    std::vector<GeomObject> objects;
    std::map<std::pair<NameKind, std::string>, int> object_index;
    std::vector<Chain> chains;
    std::vector<CircleObj> circles;
    std::map<std::string, int> circle_index;
    std::vector<Fact> facts;
    std::vector<Step> steps;
    int exposition_count = 0;  // leading steps that belong to the exposition

    // ---- registry ----------------------------------------------------

    const GeomObject* find(const ObjectName& n) const {
        auto it = object_index.find({n.kind, n.letters});
        return it == object_index.end() ? nullptr : &objects[it->second];
    }
    bool has(const ObjectName& n) const { return find(n) != nullptr; }
    bool has_point(char p) const { return has(ObjectName{NameKind::Point, std::string(1, p)}); }

    // Registers n if absent; returns false when it already existed.
    bool put(const ObjectName& n, bool given, int step) {
        auto key = std::make_pair(n.kind, n.letters);
        if (object_index.count(key)) return false;
        object_index[key] = (int)objects.size();
        objects.push_back(GeomObject{n, given, step});
        return true;
    }

    const CircleObj* find_circle(const std::string& label) const {
        auto it = circle_index.find(label);
        return it == circle_index.end() ? nullptr : &circles[it->second];
    }

    // ---- chains -------------------------------------------------------

    // The chain holding both letters, if any. Any unordered pair of points
    // lies in at most one chain; production maintains that invariant.
    const Chain* chain_with(char a, char b) const {
        for (const auto& c : chains)
            if (c.contains(a) && c.contains(b)) return &c;
        return nullptr;
    }
    Chain* chain_with(char a, char b) {
        for (auto& c : chains)
            if (c.contains(a) && c.contains(b)) return &c;
        return nullptr;
    }

    // True when x and y lie on one ray from v (v, x, y collinear with x, y
    // strictly on the same side of v).
    bool same_ray(char v, char x, char y) const {
        if (x == y) return x != v;
        const Chain* ch = chain_with(v, x);
        if (!ch || !ch->contains(y)) return false;
        int pv = ch->position(v), px = ch->position(x), py = ch->position(y);
        return (px < pv && py < pv) || (px > pv && py > pv);
    }

    // ---- facts ----------------------------------------------------------

    int add_fact(const Judgment& j, Provenance prov) {
        int id = (int)facts.size();
        facts.push_back(Fact{id, j, std::move(prov)});
        return id;
    }

    // Exact-judgment lookup (modulo decomposition addend order).
    std::optional<int> find_fact(const Judgment& j) const {
        for (const auto& f : facts)
            if (f.judgment.same_as(j)) return f.id;
        return std::nullopt;
    }

    int add_step(Step st) {
        st.index = (int)steps.size();
        steps.push_back(st);
        return st.index;
    }
};

}  // namespace euclid
