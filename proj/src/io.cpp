#include "micc/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace micc {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw Error::parse(where + ": " + what);
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error::parse(what + ": " + e.what());
    }
}

long long get_int(const json& j, const std::string& where, const std::string& field) {
    if (!j.contains(field)) bad(where, "missing field '" + field + "'");
    const json& v = j.at(field);
    if (!v.is_number_integer()) bad(where + "." + field, "expected integer");
    return v.get<long long>();
}

std::string get_string(const json& j, const std::string& where, const std::string& field) {
    if (!j.contains(field)) bad(where, "missing field '" + field + "'");
    const json& v = j.at(field);
    if (!v.is_string()) bad(where + "." + field, "expected string");
    return v.get<std::string>();
}

bool get_bool(const json& j, const std::string& where, const std::string& field) {
    if (!j.contains(field)) bad(where, "missing field '" + field + "'");
    const json& v = j.at(field);
    if (!v.is_boolean()) bad(where + "." + field, "expected boolean");
    return v.get<bool>();
}

ComponentSet get_id_set(const json& j, const std::string& where, const std::string& field) {
    if (!j.contains(field)) bad(where, "missing field '" + field + "'");
    const json& v = j.at(field);
    if (!v.is_array()) bad(where + "." + field, "expected array of ids");
    ComponentSet out;
    for (const auto& e : v) {
        if (!e.is_string()) bad(where + "." + field, "expected string id");
        out.insert(e.get<std::string>());
    }
    return out;
}

LPoly get_class(const json& j, const std::string& where) {
    const json& v = j.at("class");
    if (!v.is_array()) bad(where + ".class", "expected array of [power, coeff] pairs");
    LPoly p;
    for (const auto& pair : v) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer())
            bad(where + ".class", "expected [power, coeff] with integer entries");
        long long power = pair[0].get<long long>();
        long long coeff = pair[1].get<long long>();
        if (power < 0) bad(where + ".class", "powers of L must be nonnegative");
        p = p + LPoly::monomial(static_cast<unsigned>(power), BigInt(coeff));
    }
    return p;
}

ordered_json class_to_json(const LPoly& p, const std::string& where) {
    ordered_json arr = ordered_json::array();
    for (const auto& [k, c] : p.coefficients()) {
        if (c < std::numeric_limits<long long>::min() || c > std::numeric_limits<long long>::max())
            throw Error::io(where + ": class coefficient too large for serialization");
        arr.push_back({k, c.convert_to<long long>()});
    }
    return arr;
}

long long euler_to_int(const BigInt& e, const std::string& where) {
    if (e < std::numeric_limits<long long>::min() || e > std::numeric_limits<long long>::max())
        throw Error::io(where + ": euler value too large for serialization");
    return e.convert_to<long long>();
}

ordered_json ids_to_json(const ComponentSet& ids) {
    ordered_json arr = ordered_json::array();
    for (const auto& id : ids) arr.push_back(id);
    return arr;
}

// shared fields of configuration strata and center strata
template <typename S>
void read_stratum_body(const json& j, const std::string& where, S& st) {
    if (j.contains("class") && !j.at("class").is_null()) st.cls = get_class(j, where);
    st.euler = BigInt(get_int(j, where, "euler"));
    st.adjacency = get_id_set(j, where, "adjacency");
    st.torus_cell = get_bool(j, where, "torus_cell");
    if (j.contains("cover_class") && !j.at("cover_class").is_null()) {
        const json& cc = j.at("cover_class");
        if (!cc.is_string()) bad(where + ".cover_class", "expected ring-element string");
        st.cover_class = RingElement::parse(cc.get<std::string>());
    }
}

template <typename S>
void write_stratum_body(ordered_json& out, const std::string& where, const S& st) {
    if (st.cls)
        out["class"] = class_to_json(*st.cls, where);
    else
        out["class"] = nullptr;
    out["euler"] = euler_to_int(st.euler, where);
    out["adjacency"] = ids_to_json(st.adjacency);
    out["torus_cell"] = st.torus_cell;
    if (st.cover_class) out["cover_class"] = st.cover_class->render();
}

} // namespace

Configuration config_from_json(const std::string& text) {
    json j = parse_json(text, "configuration");
    if (!j.is_object()) bad("configuration", "expected a JSON object");
    Configuration config;
    long long dim = get_int(j, "configuration", "ambient_dim");
    if (dim < 1 || dim > 64) bad("configuration.ambient_dim", "expected a small positive integer");
    config.ambient_dim = static_cast<int>(dim);

    if (!j.contains("components") || !j.at("components").is_array())
        bad("configuration", "missing 'components' array");
    size_t ci = 0;
    for (const auto& c : j.at("components")) {
        std::string where = "components[" + std::to_string(ci++) + "]";
        if (!c.is_object()) bad(where, "expected object");
        config.components.push_back({get_string(c, where, "id"), get_int(c, where, "multiplicity")});
    }

    if (!j.contains("strata") || !j.at("strata").is_array())
        bad("configuration", "missing 'strata' array");
    size_t si = 0;
    for (const auto& s : j.at("strata")) {
        std::string where = "strata[" + std::to_string(si++) + "]";
        if (!s.is_object()) bad(where, "expected object");
        Stratum st;
        st.components = get_id_set(s, where, "components");
        read_stratum_body(s, where, st);
        if (config.strata.count(st.components))
            bad(where, "duplicate stratum for " + format_component_set(st.components));
        config.strata[st.components] = std::move(st);
    }
    return config;
}

std::string config_to_json(const Configuration& config) {
    ordered_json out;
    out["ambient_dim"] = config.ambient_dim;
    out["components"] = ordered_json::array();
    for (const auto& c : config.components)
        out["components"].push_back({{"id", c.id}, {"multiplicity", c.multiplicity}});
    out["strata"] = ordered_json::array();
    for (const auto& [key, st] : config.strata) {
        ordered_json s;
        s["components"] = ids_to_json(key);
        write_stratum_body(s, format_component_set(key), st);
        out["strata"].push_back(std::move(s));
    }
    return out.dump(2) + "\n";
}

BlowupCenter center_from_json(const std::string& text) {
    json j = parse_json(text, "center");
    if (!j.is_object()) bad("center", "expected a JSON object");
    BlowupCenter center;
    center.containing = get_id_set(j, "center", "containing");
    center.transversal = get_id_set(j, "center", "transversal");
    long long codim = get_int(j, "center", "codim");
    if (codim < 0 || codim > 64) bad("center.codim", "expected a small nonnegative integer");
    center.codim = static_cast<int>(codim);
    center.is_full_intersection = get_bool(j, "center", "is_full_intersection");
    if (j.contains("exceptional_id") && !j.at("exceptional_id").is_null())
        center.exceptional_id = get_string(j, "center", "exceptional_id");
    if (j.contains("center_strata") && !j.at("center_strata").is_null()) {
        if (!j.at("center_strata").is_array()) bad("center.center_strata", "expected array");
        size_t i = 0;
        for (const auto& s : j.at("center_strata")) {
            std::string where = "center_strata[" + std::to_string(i++) + "]";
            if (!s.is_object()) bad(where, "expected object");
            CenterStratum cs;
            cs.transversal_subset = get_id_set(s, where, "components");
            read_stratum_body(s, where, cs);
            if (center.center_strata.count(cs.transversal_subset))
                bad(where, "duplicate center stratum for " + format_component_set(cs.transversal_subset));
            center.center_strata[cs.transversal_subset] = std::move(cs);
        }
    }
    return center;
}

std::string center_to_json(const BlowupCenter& center) {
    ordered_json out;
    out["containing"] = ids_to_json(center.containing);
    out["transversal"] = ids_to_json(center.transversal);
    out["codim"] = center.codim;
    out["is_full_intersection"] = center.is_full_intersection;
    if (center.exceptional_id) out["exceptional_id"] = *center.exceptional_id;
    if (!center.center_strata.empty()) {
        out["center_strata"] = ordered_json::array();
        for (const auto& [K, cs] : center.center_strata) {
            ordered_json s;
            s["components"] = ids_to_json(K);
            write_stratum_body(s, format_component_set(K), cs);
            out["center_strata"].push_back(std::move(s));
        }
    }
    return out.dump(2) + "\n";
}

ResolutionGraph graph_from_json(const std::string& text) {
    json j = parse_json(text, "graph");
    if (!j.is_object()) bad("graph", "expected a JSON object");
    ResolutionGraph g;
    if (!j.contains("vertices") || !j.at("vertices").is_array())
        bad("graph", "missing 'vertices' array");
    size_t vi = 0;
    for (const auto& v : j.at("vertices")) {
        std::string where = "vertices[" + std::to_string(vi++) + "]";
        if (!v.is_object()) bad(where, "expected object");
        GraphVertex gv;
        gv.id = get_string(v, where, "id");
        gv.multiplicity = get_int(v, where, "multiplicity");
        gv.genus = v.contains("genus") ? static_cast<int>(get_int(v, where, "genus")) : 0;
        gv.exceptional = get_bool(v, where, "exceptional");
        g.vertices.push_back(std::move(gv));
    }
    if (j.contains("edges")) {
        if (!j.at("edges").is_array()) bad("graph.edges", "expected array");
        size_t ei = 0;
        for (const auto& e : j.at("edges")) {
            std::string where = "edges[" + std::to_string(ei++) + "]";
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                bad(where, "expected [id, id]");
            g.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
    }
    if (j.contains("arrows")) {
        if (!j.at("arrows").is_array()) bad("graph.arrows", "expected array");
        size_t ai = 0;
        for (const auto& a : j.at("arrows")) {
            std::string where = "arrows[" + std::to_string(ai++) + "]";
            if (!a.is_object()) bad(where, "expected object");
            g.arrows.emplace_back(get_string(a, where, "vertex"), get_int(a, where, "multiplicity"));
        }
    }
    return g;
}

std::string graph_to_json(const ResolutionGraph& g) {
    ordered_json out;
    out["vertices"] = ordered_json::array();
    for (const auto& v : g.vertices)
        out["vertices"].push_back({{"id", v.id},
                                   {"multiplicity", v.multiplicity},
                                   {"genus", v.genus},
                                   {"exceptional", v.exceptional}});
    out["edges"] = ordered_json::array();
    for (const auto& [a, b] : g.edges) out["edges"].push_back({a, b});
    out["arrows"] = ordered_json::array();
    for (const auto& [v, m] : g.arrows)
        out["arrows"].push_back({{"vertex", v}, {"multiplicity", m}});
    return out.dump(2) + "\n";
}

std::string diagnostics_to_json(const std::vector<Diagnostic>& diags) {
    ordered_json arr = ordered_json::array();
    for (const auto& d : diags)
        arr.push_back({{"code", d.code}, {"subject", d.subject}, {"message", d.message}});
    return arr.dump(2) + "\n";
}

std::string terms_to_json(const std::vector<StratumTerm>& terms) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : terms)
        arr.push_back({{"stratum", ids_to_json(t.stratum)},
                       {"sign", t.sign},
                       {"cover", t.cover.render()},
                       {"weight_exponent", t.stratum.size() - 1},
                       {"term", t.term.render()}});
    return arr.dump(2) + "\n";
}

std::string invariance_report_to_json(const InvarianceReport& rep) {
    ordered_json out;
    out["pass"] = rep.pass;
    out["exceptional_id"] = rep.exceptional_id;
    out["before"] = rep.before.render();
    out["after"] = rep.after.render();
    out["diff"] = rep.diff.render();
    out["before_terms"] = json::parse(terms_to_json(rep.before_terms));
    out["after_terms"] = json::parse(terms_to_json(rep.after_terms));
    return out.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error::io("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error::io("error while reading '" + path + "'");
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error::io("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw Error::io("error while writing '" + path + "'");
}

} // namespace micc
