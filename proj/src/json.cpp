#include "ersurf/json.hpp"

namespace ersurf {

using nlohmann::json;

namespace {

template <class T>
json opt(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

std::string family_name(SurfaceFamily f) {
    switch (f) {
    case SurfaceFamily::Decomposable: return "Decomposable";
    case SurfaceFamily::Indec0: return "Indec0";
    case SurfaceFamily::IndecMinus1: return "IndecMinus1";
    }
    return "?";
}

}  // namespace

json to_json(const GroupElement& g) { return point_label(g); }

json to_json(const DivisorClass& c) { return {{"degree", c.degree()}, {"abel", to_json(c.abel())}}; }

json to_json(const SurfaceModel& s) {
    json j = {{"family", family_name(s.family())}, {"e", s.invariant_e()}, {"e_class", to_json(s.e_class())}};
    if (s.family() == SurfaceFamily::IndecMinus1) j["p0"] = to_json(s.p0());
    return j;
}

json to_json(const SystemAnalysis& a) {
    return {{"h0", a.h0},
            {"h1", a.h1},
            {"bpf", a.bpf},
            {"very_ample", a.very_ample},
            {"generic_irreducible", a.generic_irreducible},
            {"generic_smooth", opt(a.generic_smooth)},
            {"genus_generic", opt(a.genus_generic)},
            {"degree", a.degree},
            {"ambient", opt(a.ambient)}};
}

json to_json(const ElmResult& r) {
    return {{"model", to_json(r.model)},
            {"e_class_new", to_json(r.e_class_new)},
            {"y0_note", std::string(y0_name(r.y0_note))},
            {"rule", std::string(rule_name(r.rule))},
            {"fiber", to_json(r.fiber)}};
}

json to_json(const Trajectory& t) {
    json steps = json::array();
    for (std::size_t i = 0; i < t.results.size(); ++i) {
        json step = to_json(t.results[i]);
        step["point"] = t.points[i].to_string();
        steps.push_back(step);
    }
    json models = json::array();
    for (const auto& m : t.models) models.push_back(to_json(m));
    return {{"models", models}, {"steps", steps}};
}

json to_json(const UnisecantFamily& f) {
    json n = {{"mode", std::string(normality_name(f.normality.mode))}};
    if (f.normality.mode == Normality::Mode::UpTo || f.normality.mode == Normality::Mode::Exactly)
        n["deg"] = f.normality.deg;
    if (f.normality.mode == Normality::Mode::UpTo) n["excludes_b"] = f.normality.excludes_b;
    return {{"kind", std::string(family_kind_name(f.kind))},
            {"min_deg_a", f.min_deg_a},
            {"curve_degree", "deg(a) + " + std::to_string(f.degree_offset)},
            {"linear_normality", n},
            {"note", std::string(note_name(f.note))}};
}

json to_json(const ScrollModel& m) {
    json fams = json::array();
    for (const auto& f : m.families) fams.push_back(to_json(f));
    json gen = nullptr;
    if (m.generation)
        gen = {{"left_degree", m.generation->left_degree},
               {"right_degree", m.generation->right_degree},
               {"correspondence", std::string(correspondence_name(m.generation->correspondence))},
               {"united_points", m.generation->united_points}};
    return {{"model_tag", std::string(tag_name(m.tag))},
            {"surface_family", family_name(m.family)},
            {"e", m.e},
            {"deg_b", m.b},
            {"e_trivial", m.e_trivial},
            {"b_minus_e", m.b_minus_e},
            {"birational", m.birational},
            {"map_degree", m.map_degree},
            {"scroll_degree", m.scroll_degree},
            {"ambient", m.ambient},
            {"speciality", m.speciality},
            {"singular_locus", std::string(singular_name(m.singular_locus))},
            {"generation", gen},
            {"families", fams}};
}

json to_json(const StepTemplate& t) { return to_string(t); }

json to_json(const NagataPlan& p) {
    json steps = json::array();
    for (const auto& s : p.steps) steps.push_back(to_json(s));
    return {{"target", p.target.to_string()}, {"length", p.length}, {"steps", steps}};
}

json error_json(const Error& e) { return {{"error", std::string(e.name())}, {"message", e.what()}}; }

}  // namespace ersurf
