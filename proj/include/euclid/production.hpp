// Geometrical production: registering given objects, the postulate
// operations (line, extend, circle, common-radius intersection, point
// selection), derived-Problem application, diagrammatic posits, and the
// collinear-chain bookkeeping that makes sub-segment decompositions
// derivable on demand.
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "euclid/environment.hpp"

namespace euclid {

inline ObjectName point_name(char p) { return ObjectName{NameKind::Point, std::string(1, p)}; }

inline ObjectName segment_name(char a, char b) {
    return *canonicalize(NameKind::Segment, std::string{a, b});
}

// Every object named by a judgment must be effectively constructed before
// the judgment is admissible (the linking principle). Composite names
// (angles, polygons) are constructed once their constituent segments are.
inline bool is_constructed(const Environment& env, const ObjectName& n) {
    switch (n.kind) {
        case NameKind::Point:
        case NameKind::Segment: return env.has(n);
        case NameKind::Angle: {
            char v = n.letters[1];
            return env.has_point(v) && env.has_point(n.letters[0]) && env.has_point(n.letters[2]) &&
                   env.has(segment_name(v, n.letters[0])) && env.has(segment_name(v, n.letters[2]));
        }
        case NameKind::Polygon: {
            auto sides = sides_of(n);
            if (!sides) return false;
            for (const auto& s : *sides)
                if (!env.has(s)) return false;
            return true;
        }
        case NameKind::CircleLabel: return env.find_circle(n.letters) != nullptr;
    }
    return false;
}

namespace detail {

// Registers every sub-segment of the chain and lists them as outputs of the
// given step, so decomposition facts derived from this chain always name a
// step whose outputs cover their objects.
inline void refresh_chain_closure(Environment& env, Chain& chain, int step_index, Step& st) {
    for (size_t i = 0; i < chain.points.size(); ++i)
        for (size_t j = i + 1; j < chain.points.size(); ++j) {
            ObjectName seg = segment_name(chain.points[i], chain.points[j]);
            env.put(seg, false, step_index);
            st.outputs.push_back(seg.display());
        }
}

// Decomposition facts for every chain triple through the freshly inserted
// point: XZ == XY + YZ for ordered X < Y < Z with Y the new point.
inline void emit_triples_through(Environment& env, const Chain& chain, char new_point,
                                 int step_index) {
    int py = chain.position(new_point);
    for (int i = 0; i < py; ++i)
        for (int j = py + 1; j < (int)chain.points.size(); ++j) {
            char x = chain.points[i], z = chain.points[j];
            Judgment d = Judgment::decomp(segment_name(x, z), segment_name(x, new_point),
                                          segment_name(new_point, z));
            if (!env.find_fact(d))
                env.add_fact(d, Provenance{Provenance::Kind::Construction, step_index, {}, {}});
        }
}

}  // namespace detail

// registers point + creates/updates nothing else
inline Res<ObjectName> register_given_point(Environment& env, char p, const std::string& label) {
    ObjectName n = point_name(p);
    if (env.has(n))
        return Res<ObjectName>::fail(errc::DuplicateObjectName,
                                     "point " + n.letters + " is already declared");
    Step st{-1, Step::Kind::Exposition, label, "given point " + n.letters, {}, {}, {}};
    int idx = env.add_step(st);
    env.put(n, true, idx);
    env.steps[idx].outputs.push_back(n.display());
    return Res<ObjectName>::ok(n);
}

inline Res<ObjectName> register_given_segment(Environment& env, const std::string& raw,
                                              const std::string& label) {
    auto seg = canonicalize(NameKind::Segment, raw);
    if (!seg) return Res<ObjectName>::fail(std::string(to_string(seg.error->code)),
                                           seg.error->message);
    if (env.has(*seg))
        return Res<ObjectName>::fail(errc::DuplicateObjectName,
                                     "segment " + raw + " is already declared");
    Step st{-1, Step::Kind::Exposition, label, "given segment " + seg->letters, {}, {}, {}};
    int idx = env.add_step(st);
    for (char p : seg->letters) {
        ObjectName pn = point_name(p);
        if (env.put(pn, true, idx)) env.steps[idx].outputs.push_back(pn.display());
    }
    env.put(*seg, true, idx);
    env.steps[idx].outputs.push_back(seg->display());
    if (!env.chain_with(seg->letters[0], seg->letters[1]))
        env.chains.push_back(Chain{{seg->letters[0], seg->letters[1]}});
    return Res<ObjectName>::ok(*seg);
}

// Declaring a triangle registers its vertices, sides and angles.
inline Res<ObjectName> register_given_triangle(Environment& env, const std::string& raw,
                                               const std::string& label) {
    auto tri = canonicalize(NameKind::Polygon, raw);
    if (!tri) return Res<ObjectName>::fail(std::string(to_string(tri.error->code)),
                                           tri.error->message);
    if (env.has(*tri))
        return Res<ObjectName>::fail(errc::DuplicateObjectName,
                                     "triangle " + raw + " is already declared");
    Step st{-1, Step::Kind::Exposition, label, "given triangle " + tri->letters, {}, {}, {}};
    int idx = env.add_step(st);
    for (char p : tri->letters) {
        ObjectName pn = point_name(p);
        if (env.put(pn, true, idx)) env.steps[idx].outputs.push_back(pn.display());
    }
    auto sides = sides_of(*tri);
    for (const auto& s : *sides) {
        if (env.put(s, true, idx)) env.steps[idx].outputs.push_back(s.display());
        if (!env.chain_with(s.letters[0], s.letters[1]))
            env.chains.push_back(Chain{{s.letters[0], s.letters[1]}});
    }
    const std::string& w = tri->letters;
    for (size_t i = 0; i < w.size(); ++i) {
        std::string a{w[(i + 2) % 3], w[i], w[(i + 1) % 3]};
        ObjectName an = *canonicalize(NameKind::Angle, a);
        if (env.put(an, true, idx)) env.steps[idx].outputs.push_back(an.display());
    }
    env.put(*tri, true, idx);
    env.steps[idx].outputs.push_back(tri->display());
    return Res<ObjectName>::ok(*tri);
}

namespace detail {

// Shared by the exposition's "produced further" declarations and the
// construction-part extend op; only the step kind and given-flag differ.
inline Res<ObjectName> extend_chain(Environment& env, const std::string& base_raw, char beyond,
                                    char fresh, const std::string& label, bool given,
                                    Step::Kind kind) {
    auto base = canonicalize(NameKind::Segment, base_raw);
    if (!base) return Res<ObjectName>::fail(std::string(to_string(base.error->code)),
                                            base.error->message);
    if (!env.has(*base))
        return Res<ObjectName>::fail(errc::UnknownSegment,
                                     "segment " + base->letters + " is not constructed");
    if (env.has_point(fresh))
        return Res<ObjectName>::fail(errc::NameCollision,
                                     std::string("point ") + fresh + " is already in use");
    if (base->letters.find(beyond) == std::string::npos)
        return Res<ObjectName>::fail(errc::UnknownPoint,
                                     std::string("'") + beyond + "' is not an endpoint of " +
                                         base->letters);
    char other = base->letters[0] == beyond ? base->letters[1] : base->letters[0];
    Chain* ch = env.chain_with(other, beyond);
    if (!ch)
        return Res<ObjectName>::fail(errc::UnknownSegment,
                                     "segment " + base->letters + " has no chain");
    int pb = ch->position(beyond);
    bool at_front = pb == 0;
    bool at_back = pb == (int)ch->points.size() - 1;
    // extending past an interior point would land the fresh point among
    // existing ones in an unspecified order
    if (!at_front && !at_back)
        return Res<ObjectName>::fail(errc::AmbiguousPlacement,
                                     std::string("cannot extend past interior point '") + beyond +
                                         "'");
    Step st{-1, kind, label,
            std::string("extend ") + base->letters + " beyond " + beyond + " to " + fresh,
            {}, {}, {}};
    st.inputs.push_back(base->display());
    int idx = env.add_step(st);
    if (at_back)
        ch->points.push_back(fresh);
    else
        ch->points.insert(ch->points.begin(), fresh);
    ObjectName pn = point_name(fresh);
    env.put(pn, given, idx);
    env.steps[idx].outputs.push_back(pn.display());
    refresh_chain_closure(env, *ch, idx, env.steps[idx]);
    emit_triples_through(env, *ch, fresh, idx);
    return Res<ObjectName>::ok(pn);
}

}  // namespace detail

inline Res<ObjectName> register_given_extension(Environment& env, char fresh,
                                                const std::string& base_raw, char beyond,
                                                const std::string& label) {
    return detail::extend_chain(env, base_raw, beyond, fresh, label, true,
                                Step::Kind::Exposition);
}

inline Res<ObjectName> apply_extend(Environment& env, const std::string& base_raw, char beyond,
                                    char fresh, const std::string& label) {
    return detail::extend_chain(env, base_raw, beyond, fresh, label, false, Step::Kind::Extend);
}

inline Res<ObjectName> apply_line(Environment& env, char p, char q, const std::string& label) {
    if (p == q)
        return Res<ObjectName>::fail(errc::DegenerateSegment,
                                     std::string("line(") + p + ", " + q + ") is degenerate");
    for (char c : {p, q})
        if (!env.has_point(c))
            return Res<ObjectName>::fail(errc::UnknownPoint,
                                         std::string("point ") + c + " is not constructed");
    ObjectName seg = segment_name(p, q);
    Step st{-1, Step::Kind::Line, label,
            "line " + seg.letters + " joining " + p + std::string(", ") + q, {}, {}, {}};
    st.inputs.push_back(point_name(p).display());
    st.inputs.push_back(point_name(q).display());
    int idx = env.add_step(st);
    Chain* ch = env.chain_with(p, q);
    if (ch) {
        detail::refresh_chain_closure(env, *ch, idx, env.steps[idx]);
    } else {
        env.put(seg, false, idx);
        env.chains.push_back(Chain{{p, q}});
        env.steps[idx].outputs.push_back(seg.display());
    }
    return Res<ObjectName>::ok(seg);
}

inline Res<std::string> apply_circle(Environment& env, const std::string& circle_label,
                                     char center, const std::string& radius_raw,
                                     const std::string& label) {
    auto radius = canonicalize(NameKind::Segment, radius_raw);
    if (!radius) return Res<std::string>::fail(std::string(to_string(radius.error->code)),
                                               radius.error->message);
    if (!env.has(*radius))
        return Res<std::string>::fail(errc::UnknownSegment,
                                      "segment " + radius->letters + " is not constructed");
    if (radius->letters.find(center) == std::string::npos)
        return Res<std::string>::fail(errc::CenterNotOnRadius,
                                      std::string("center ") + center +
                                          " is not an endpoint of radius " + radius->letters);
    if (env.find_circle(circle_label))
        return Res<std::string>::fail(errc::NameCollision,
                                      "circle label " + circle_label + " is already in use");
    Step st{-1, Step::Kind::Circle, label,
            "circle " + circle_label + " center " + center + std::string(" radius ") +
                radius->letters,
            {}, {}, {}};
    st.inputs.push_back(point_name(center).display());
    st.inputs.push_back(radius->display());
    int idx = env.add_step(st);
    env.circle_index[circle_label] = (int)env.circles.size();
    env.circles.push_back(CircleObj{circle_label, center, *radius, idx});
    env.put(ObjectName{NameKind::CircleLabel, circle_label}, false, idx);
    env.steps[idx].outputs.push_back("circle " + circle_label);
    return Res<std::string>::ok(circle_label);
}

// The footnote postulate: a point of intersection of two circles with a
// common radius (the same radius segment serves both).
inline Res<ObjectName> apply_meet(Environment& env, const std::string& c1, const std::string& c2,
                                  char fresh, const std::string& label) {
    const CircleObj* a = env.find_circle(c1);
    const CircleObj* b = env.find_circle(c2);
    if (!a || !b)
        return Res<ObjectName>::fail(errc::UnknownObject,
                                     "circle " + (a ? c2 : c1) + " is not constructed");
    if (c1 == c2 || (a->center == b->center && a->radius == b->radius))
        return Res<ObjectName>::fail(errc::SameCircle, "meet needs two distinct circles");
    if (!(a->radius == b->radius))
        return Res<ObjectName>::fail(errc::NoCommonRadius,
                                     "circles " + c1 + " and " + c2 +
                                         " do not share a radius segment");
    if (env.has_point(fresh))
        return Res<ObjectName>::fail(errc::NameCollision,
                                     std::string("point ") + fresh + " is already in use");
    Step st{-1, Step::Kind::Meet, label,
            std::string("meet of ") + c1 + " and " + c2 + " at " + fresh, {}, {}, {}};
    st.inputs.push_back("circle " + c1);
    st.inputs.push_back("circle " + c2);
    int idx = env.add_step(st);
    ObjectName pn = point_name(fresh);
    env.put(pn, false, idx);
    env.steps[idx].outputs.push_back(pn.display());
    env.add_fact(Judgment::on(pn, c1), Provenance{Provenance::Kind::Construction, idx, {}, {}});
    env.add_fact(Judgment::on(pn, c2), Provenance{Provenance::Kind::Construction, idx, {}, {}});
    return Res<ObjectName>::ok(pn);
}

// "Let a point F be taken somewhere on BD": inserts the fresh point
// strictly between the segment's endpoints, which must be chain-adjacent.
inline Res<ObjectName> pick_on(Environment& env, const std::string& seg_raw, char fresh,
                               const std::string& label) {
    auto seg = canonicalize(NameKind::Segment, seg_raw);
    if (!seg) return Res<ObjectName>::fail(std::string(to_string(seg.error->code)),
                                           seg.error->message);
    if (!env.has(*seg))
        return Res<ObjectName>::fail(errc::UnknownSegment,
                                     "segment " + seg->letters + " is not constructed");
    if (env.has_point(fresh))
        return Res<ObjectName>::fail(errc::NameCollision,
                                     std::string("point ") + fresh + " is already in use");
    char a = seg->letters[0], b = seg->letters[1];
    Chain* ch = env.chain_with(a, b);
    if (!ch)
        return Res<ObjectName>::fail(errc::UnknownSegment,
                                     "segment " + seg->letters + " has no chain");
    int pa = ch->position(a), pb = ch->position(b);
    if (pa > pb) std::swap(pa, pb);
    if (pb != pa + 1)
        return Res<ObjectName>::fail(errc::AmbiguousPlacement,
                                     "pick on " + seg->letters +
                                         " is ambiguous: points already lie between its endpoints");
    Step st{-1, Step::Kind::Pick, label,
            std::string("pick ") + fresh + " on " + seg->letters, {}, {}, {}};
    st.inputs.push_back(seg->display());
    int idx = env.add_step(st);
    ch->points.insert(ch->points.begin() + pb, fresh);
    ObjectName pn = point_name(fresh);
    env.put(pn, false, idx);
    env.steps[idx].outputs.push_back(pn.display());
    detail::refresh_chain_closure(env, *ch, idx, env.steps[idx]);
    detail::emit_triples_through(env, *ch, fresh, idx);
    return Res<ObjectName>::ok(pn);
}

// Registration half of a derived-Problem application: the checker has
// already matched the callee's schema; this records the step, registers the
// produced objects (placing a produced point into a chain when the apply
// site says so), and imports the instantiated goal judgments as facts.
struct DerivedApplication {
    PropId prop;
    std::vector<ObjectName> arg_objects;
    std::vector<ObjectName> produced;  // pattern objects, canonical
    std::vector<Judgment> imported;    // instantiated goal judgments
    std::optional<Placement> placement;
};

inline Res<int> apply_derived_step(Environment& env, const DerivedApplication& app,
                                   const std::string& label) {
    for (const auto& a : app.arg_objects)
        if (!is_constructed(env, a))
            return Res<int>::fail(errc::UnconstructedObject,
                                  a.display() + " is not constructed");
    Step st{-1, Step::Kind::Derived, label, "apply " + app.prop.str(), app.prop, {}, {}};
    for (const auto& a : app.arg_objects) st.inputs.push_back(a.display());
    int idx = env.add_step(st);
    auto& step = env.steps[idx];

    // fresh points first
    for (const auto& o : app.produced)
        if (o.kind == NameKind::Point) {
            if (env.has(o)) return Res<int>::fail(errc::NameCollision,
                                                  "point " + o.letters + " is already in use");
            env.put(o, false, idx);
            step.outputs.push_back(o.display());
        }
    for (const auto& o : app.produced)
        if (o.kind != NameKind::Point) {
            for (char p : o.letters) {
                ObjectName pn = point_name(p);
                if (!env.has(pn)) {
                    env.put(pn, false, idx);
                    step.outputs.push_back(pn.display());
                }
            }
        }
    if (app.placement) {
        char fresh = 0;
        for (const auto& o : app.produced)
            if (o.kind == NameKind::Point) fresh = o.letters[0];
        if (!fresh)
            return Res<int>::fail(errc::AmbiguousPlacement,
                                  "placement clause without a produced point");
        Chain* ch = env.chain_with(app.placement->left, app.placement->right);
        auto on = canonicalize(NameKind::Segment, app.placement->on_segment);
        if (!on || !env.has(*on))
            return Res<int>::fail(errc::UnknownSegment,
                                  "placement segment " + app.placement->on_segment +
                                      " is not constructed");
        if (!ch || !ch->contains(on->letters[0]) || !ch->contains(on->letters[1]))
            return Res<int>::fail(errc::AmbiguousPlacement,
                                  "placement endpoints do not span a chain of " + on->letters);
        int pl = ch->position(app.placement->left), pr = ch->position(app.placement->right);
        if (pl > pr) std::swap(pl, pr);
        if (pr != pl + 1)
            return Res<int>::fail(errc::AmbiguousPlacement,
                                  "placement endpoints are not adjacent in their chain");
        int lo = ch->position(on->letters[0]), hi = ch->position(on->letters[1]);
        if (lo > hi) std::swap(lo, hi);
        if (pl < lo || pr > hi)
            return Res<int>::fail(errc::AmbiguousPlacement,
                                  "placement lies outside " + on->letters);
        ch->points.insert(ch->points.begin() + pr, fresh);
        detail::refresh_chain_closure(env, *ch, idx, step);
        detail::emit_triples_through(env, *ch, fresh, idx);
    }
    // remaining produced objects: segments / polygons over now-known letters
    for (const auto& o : app.produced) {
        if (o.kind == NameKind::Point) continue;
        if (o.kind == NameKind::Segment) {
            if (!env.has(o)) {
                env.put(o, false, idx);
                if (!env.chain_with(o.letters[0], o.letters[1]))
                    env.chains.push_back(Chain{{o.letters[0], o.letters[1]}});
                step.outputs.push_back(o.display());
            }
        } else if (o.kind == NameKind::Polygon) {
            auto sides = sides_of(o);
            if (sides)
                for (const auto& s : *sides)
                    if (!env.has(s)) {
                        env.put(s, false, idx);
                        if (!env.chain_with(s.letters[0], s.letters[1]))
                            env.chains.push_back(Chain{{s.letters[0], s.letters[1]}});
                        step.outputs.push_back(s.display());
                    }
            if (!env.has(o)) {
                env.put(o, false, idx);
                step.outputs.push_back(o.display());
            }
        }
    }
    // import the callee's established goal judgments
    for (const auto& j : app.imported) {
        for (const auto& obj : j.objects()) {
            if (obj.kind == NameKind::Segment && !env.has(obj) && env.has_point(obj.letters[0]) &&
                env.has_point(obj.letters[1])) {
                env.put(obj, false, idx);
                if (!env.chain_with(obj.letters[0], obj.letters[1]))
                    env.chains.push_back(Chain{{obj.letters[0], obj.letters[1]}});
                step.outputs.push_back(obj.display());
            }
            if (!is_constructed(env, obj))
                return Res<int>::fail(errc::UnconstructedObject,
                                      obj.display() + " is not constructed");
            step.outputs.push_back(obj.display());
        }
        env.add_fact(j, Provenance{Provenance::Kind::Construction, idx, {}, {}});
    }
    return Res<int>::ok(idx);
}

// Diagrammatic posit: an explicitly declared decomposition standing in for
// a diagram reading. Always surfaced in reports.
inline Res<int> record_diagram(Environment& env, const Judgment& j, const std::string& label) {
    if (j.kind != Judgment::Kind::Decomp)
        return Res<int>::fail(errc::NotADecomposition,
                              "diagram posits must be decompositions, got: " + j.render());
    for (const auto& obj : j.objects())
        if (!is_constructed(env, obj))
            return Res<int>::fail(errc::UnknownObject, obj.display() + " is not constructed");
    Step st{-1, Step::Kind::Diagram, label, "diagram " + j.render(), {}, {}, {}};
    for (const auto& obj : j.objects()) st.inputs.push_back(obj.display());
    int idx = env.add_step(st);
    int fid = env.add_fact(j, Provenance{Provenance::Kind::Diagram, idx, {}, {}});
    env.steps[idx].outputs.push_back(j.render());
    return Res<int>::ok(fid);
}

// On-demand chain decomposition: XZ == XY + YZ holds whenever X, Y, Z lie
// ordered in one chain. Materializes the fact (citing the step that last
// touched the chain) so it gets a premise id.
inline std::optional<int> derive_chain_decomp(Environment& env, const Judgment& j) {
    if (j.kind != Judgment::Kind::Decomp) return std::nullopt;
    if (auto id = env.find_fact(j)) return id;
    if (j.a.kind != NameKind::Segment || j.b.kind != NameKind::Segment ||
        j.c.kind != NameKind::Segment)
        return std::nullopt;
    auto try_orient = [&](const ObjectName& first, const ObjectName& second) -> std::optional<int> {
        // whole = j.a; find shared middle letter
        for (char y : first.letters) {
            if (second.letters.find(y) == std::string::npos) continue;
            char x = first.letters[0] == y ? first.letters[1] : first.letters[0];
            char z = second.letters[0] == y ? second.letters[1] : second.letters[0];
            if (x == z) continue;
            if (!(segment_name(x, z) == j.a)) continue;
            const Chain* ch = env.chain_with(x, z);
            if (!ch || !ch->contains(y)) continue;
            int px = ch->position(x), py = ch->position(y), pz = ch->position(z);
            if ((px < py && py < pz) || (pz < py && py < px)) {
                // cite the step that last re-availed this chain's segments
                int step = -1;
                for (const auto& o : {segment_name(x, z), segment_name(x, y), segment_name(y, z)})
                    if (const auto* g = env.find(o)) step = std::max(step, g->step);
                return env.add_fact(Judgment::decomp(j.a, segment_name(x, y), segment_name(y, z)),
                                    Provenance{Provenance::Kind::Construction, step, {}, {}});
            }
        }
        return std::nullopt;
    };
    if (auto id = try_orient(j.b, j.c)) return id;
    return std::nullopt;
}

struct TraceEdge {
    int from = -1, to = -1;  // step indices
    std::string object;
};

struct ProductionTrace {
    std::vector<Step> steps;
    std::vector<TraceEdge> edges;
};

// Dependency graph over production steps; topological order equals step
// order because inputs always come from earlier steps.
inline ProductionTrace production_trace(const Environment& env) {
    ProductionTrace tr;
    tr.steps = env.steps;
    std::map<std::string, int> producer;
    for (const auto& st : env.steps) {
        for (const auto& in : st.inputs) {
            auto it = producer.find(in);
            if (it != producer.end() && it->second != st.index)
                tr.edges.push_back(TraceEdge{it->second, st.index, in});
        }
        for (const auto& out : st.outputs)
            if (!producer.count(out)) producer[out] = st.index;
    }
    return tr;
}

}  // namespace euclid
