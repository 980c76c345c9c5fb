#include "acdual/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "acdual/entangle.hpp"
#include "acdual/rng.hpp"

namespace acdual {

namespace {

// ---------------------------------------------------------------------------
// Typed JSON access with field-path error messages.
// ---------------------------------------------------------------------------

const Json& member(const Json& j, const std::string& ctx, const char* key) {
    if (!j.is_object()) throw ConfigError(ctx + ": expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw ConfigError(ctx + "." + key + ": missing required field");
    return *it;
}

const Json* member_opt(const Json& j, const char* key) {
    if (!j.is_object()) return nullptr;
    const auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

double as_num(const Json& j, const std::string& path) {
    if (!j.is_number()) throw ConfigError(path + ": expected a number");
    return j.get<double>();
}

std::int64_t as_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ConfigError(path + ": expected an integer");
    return j.get<std::int64_t>();
}

bool as_bool(const Json& j, const std::string& path) {
    if (!j.is_boolean()) throw ConfigError(path + ": expected a boolean");
    return j.get<bool>();
}

std::string as_str(const Json& j, const std::string& path) {
    if (!j.is_string()) throw ConfigError(path + ": expected a string");
    return j.get<std::string>();
}

Vec3 as_vec(const Json& j, const std::string& path, int* dim = nullptr) {
    if (!j.is_array() || (j.size() != 2 && j.size() != 3))
        throw ConfigError(path + ": expected a 2- or 3-element array");
    Vec3 v{};
    v.x = as_num(j[0], path + "[0]");
    v.y = as_num(j[1], path + "[1]");
    if (j.size() == 3) v.z = as_num(j[2], path + "[2]");
    if (dim != nullptr) *dim = static_cast<int>(j.size());
    return v;
}

Vec2 as_vec2(const Json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2)
        throw ConfigError(path + ": expected a 2-element array");
    return {as_num(j[0], path + "[0]"), as_num(j[1], path + "[1]")};
}

Json vec_json(const Vec3& v, int dim = 3) {
    Json a = Json::array({v.x, v.y});
    if (dim == 3) a.push_back(v.z);
    return a;
}

Json vec2_json(const Vec2& v) { return Json::array({v.x, v.y}); }

// ---------------------------------------------------------------------------
// Component parsing / serialization.
// ---------------------------------------------------------------------------

FieldSource parse_source(const Json& j, const std::string& ctx) {
    const std::string type = as_str(member(j, ctx, "type"), ctx + ".type");
    FieldSource source;
    if (type == "fluxon") {
        Fluxon2D s;
        s.flux = as_num(member(j, ctx, "flux"), ctx + ".flux");
        s.position = as_vec2(member(j, ctx, "position"), ctx + ".position");
        source = s;
    } else if (type == "dipole") {
        Dipole s;
        s.moment = as_vec(member(j, ctx, "moment"), ctx + ".moment");
        s.position = as_vec(member(j, ctx, "position"), ctx + ".position");
        source = s;
    } else if (type == "infinite_line") {
        InfiniteLineCharge s;
        s.lambda = as_num(member(j, ctx, "lambda"), ctx + ".lambda");
        s.axis_point = as_vec(member(j, ctx, "axis_point"), ctx + ".axis_point");
        s.axis_dir = as_vec(member(j, ctx, "axis_dir"), ctx + ".axis_dir").normalized();
        if (s.axis_dir == Vec3{})
            throw ConfigError(ctx + ".axis_dir: zero direction");
        source = s;
    } else if (type == "finite_line") {
        FiniteChargeLine s;
        s.lambda = as_num(member(j, ctx, "lambda"), ctx + ".lambda");
        s.start = as_vec(member(j, ctx, "start"), ctx + ".start");
        s.end = as_vec(member(j, ctx, "end"), ctx + ".end");
        if (const Json* n = member_opt(j, "samples"))
            s.samples = as_int(*n, ctx + ".samples");
        source = s;
    } else {
        throw ConfigError(ctx + ".type: unknown source type '" + type + "'");
    }
    try {
        validate(source);
    } catch (const ConfigError& e) {
        throw ConfigError(ctx + ": " + e.what());
    }
    return source;
}

Json serialize_source(const FieldSource& source) {
    Json j = Json::object();
    std::visit(
        [&](const auto& s) {
            using S = std::decay_t<decltype(s)>;
            j["type"] = source_tag(source);
            if constexpr (std::is_same_v<S, Fluxon2D>) {
                j["flux"] = s.flux;
                j["position"] = vec2_json(s.position);
            } else if constexpr (std::is_same_v<S, Dipole>) {
                j["moment"] = vec_json(s.moment);
                j["position"] = vec_json(s.position);
            } else if constexpr (std::is_same_v<S, InfiniteLineCharge>) {
                j["lambda"] = s.lambda;
                j["axis_point"] = vec_json(s.axis_point);
                j["axis_dir"] = vec_json(s.axis_dir);
            } else {
                j["lambda"] = s.lambda;
                j["start"] = vec_json(s.start);
                j["end"] = vec_json(s.end);
                j["samples"] = s.samples;
            }
        },
        source);
    return j;
}

Coupling parse_coupling(const Json& j, const std::string& ctx) {
    const Json* charge = member_opt(j, "charge");
    const Json* moment = member_opt(j, "moment");
    if ((charge != nullptr) == (moment != nullptr))
        throw ConfigError(ctx + ": exactly one of 'charge' or 'moment' required");
    if (charge != nullptr) return ChargeCoupling{as_num(*charge, ctx + ".charge")};
    return MomentCoupling{as_vec(*moment, ctx + ".moment")};
}

Json serialize_coupling(const Coupling& c) {
    Json j = Json::object();
    if (const auto* cc = std::get_if<ChargeCoupling>(&c))
        j["charge"] = cc->charge;
    else
        j["moment"] = vec_json(std::get<MomentCoupling>(c).moment);
    return j;
}

PathSpec parse_path(const Json& j, const std::string& ctx) {
    PathSpec spec;
    const std::string type = as_str(member(j, ctx, "type"), ctx + ".type");
    if (type == "circle") {
        CircleSpec c;
        c.center = as_vec(member(j, ctx, "center"), ctx + ".center");
        c.radius = as_num(member(j, ctx, "radius"), ctx + ".radius");
        c.segments = static_cast<int>(as_int(member(j, ctx, "segments"), ctx + ".segments"));
        c.turns = static_cast<int>(as_int(member(j, ctx, "turns"), ctx + ".turns"));
        spec.circle = c;
    } else if (type == "polyline") {
        const Json& verts = member(j, ctx, "vertices");
        if (!verts.is_array() || verts.size() < 2)
            throw ConfigError(ctx + ".vertices: expected an array of at least 2 points");
        std::vector<Vec3> vertices;
        int dim = 0;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            int d = 0;
            vertices.push_back(as_vec(verts[i], ctx + ".vertices[" + std::to_string(i) + "]", &d));
            if (dim == 0) dim = d;
            if (d != dim)
                throw ConfigError(ctx + ".vertices: mixed 2D and 3D points");
        }
        bool closed = true;
        if (const Json* c = member_opt(j, "closed")) closed = as_bool(*c, ctx + ".closed");
        if (const Json* d = member_opt(j, "dimension"))
            dim = static_cast<int>(as_int(*d, ctx + ".dimension"));
        try {
            spec.polyline = make_path(std::move(vertices), closed, dim);
        } catch (const ConfigError& e) {
            throw ConfigError(ctx + ": " + e.what());
        }
    } else {
        throw ConfigError(ctx + ".type: unknown path type '" + type + "'");
    }
    return spec;
}

Json serialize_path(const PathSpec& spec) {
    Json j = Json::object();
    if (spec.circle) {
        const CircleSpec& c = *spec.circle;
        j["type"] = "circle";
        j["center"] = vec_json(c.center);
        j["radius"] = c.radius;
        j["segments"] = c.segments;
        j["turns"] = c.turns;
    } else {
        const Path& p = *spec.polyline;
        j["type"] = "polyline";
        Json verts = Json::array();
        for (const Vec3& v : p.vertices) verts.push_back(vec_json(v, p.dimension));
        j["vertices"] = std::move(verts);
        j["closed"] = p.closed;
        j["dimension"] = p.dimension;
    }
    return j;
}

NeutralState parse_neutral(const Json& j, const std::string& ctx) {
    NeutralState n;
    n.mass = as_num(member(j, ctx, "mass"), ctx + ".mass");
    n.position = as_vec(member(j, ctx, "position"), ctx + ".position");
    n.velocity = as_vec(member(j, ctx, "velocity"), ctx + ".velocity");
    n.moment = as_vec(member(j, ctx, "moment"), ctx + ".moment");
    if (!(n.mass > 0.0)) throw ConfigError(ctx + ".mass: must be > 0");
    return n;
}

Json serialize_neutral(const NeutralState& n) {
    Json j = Json::object。();
    return j;
}

// ---------------------------------------------------------------------------

}  // namespace

Path realize(const PathSpec& spec) {
    if (spec.circle)
        return circle_path(spec.circle->center, spec.circle->radius, spec.circle->segments,
                           spec.circle->turns);
    return *spec.polyline;
}

}  // namespace acdual
