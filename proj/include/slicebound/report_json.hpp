#pragma once

#include <json.hpp>

#include "bounds.hpp"
#include "lee/oracle.hpp"

namespace slicebound {

using Json = nlohmann::ordered_json;

namespace detail {

template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

inline Json optional_json(const std::optional<HalfInteger>& v) { return v ? Json(v->to_string()) : Json(nullptr); }

}  // namespace detail

/// Field order is part of the output format. Rationals are strings ("-1/2").
inline Json to_json(const BoundsReport& r) {
    Json flags;
    flags["positive"] = r.flags.positive;
    flags["negative"] = r.flags.negative;
    flags["alternating"] = r.flags.alternating;
    flags["braid_sign_condition"] = detail::optional_json(r.flags.braid_sign_condition);
    flags["connected"] = r.flags.connected;
    flags["is_knot"] = r.flags.is_knot;

    Json j;
    j["U"] = r.U;
    j["Delta"] = r.Delta;
    j["s_lower"] = detail::optional_json(r.s_lower);
    j["s_upper"] = detail::optional_json(r.s_upper);
    j["s_exact"] = detail::optional_json(r.s_exact);
    j["genus_bound_new"] = detail::optional_json(r.genus_bound_new);
    j["genus_bound_classic"] = detail::optional_json(r.genus_bound_classic);
    j["flags"] = flags;
    j["crossings"] = r.crossings;
    j["writhe"] = r.writhe;
    j["components"] = r.components;
    j["seifert_circles"] = r.seifert_circles;
    j["minus_components"] = r.minus_components;
    j["plus_components"] = r.plus_components;
    j["mirror_U_sum"] = r.mirror_U_sum;
    return j;
}

inline Json to_json(const lee::LeeAnalysis& a) {
    Json profile = Json::array();
    for (auto it = a.profile.rbegin(); it != a.profile.rend(); ++it) profile.push_back({it->first, it->second});
    Json j;
    j["s"] = a.s;
    j["s_min"] = a.s_min_o;
    j["jump_upper"] = a.jump_upper;
    j["jump_lower"] = a.jump_lower;
    j["profile"] = profile;
    j["generators"] = {a.generators_minus1, a.generators0, a.generators1};
    return j;
}

}  // namespace slicebound
