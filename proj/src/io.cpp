#include "hopfmorita/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hm::io {

namespace {

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

std::size_t size_from(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw ParseError(std::string("\"") + key + "\" must be a nonnegative integer");
    return v.get<std::size_t>();
}

std::string string_from(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_string()) throw ParseError(std::string("\"") + key + "\" must be a string");
    return v.get<std::string>();
}

const Json& array_of(const Json& j, std::size_t len, const std::string& what) {
    if (!j.is_array() || j.size() != len)
        throw ParseError(what + ": expected an array of length " + std::to_string(len));
    return j;
}

// rows x cols grid of coefficient vectors, flattened row-major.
std::vector<Vec> grid_from(const Json& j, std::size_t rows, std::size_t cols, std::size_t len,
                           const std::string& what) {
    std::vector<Vec> out;
    out.reserve(rows * cols);
    for (const auto& row : array_of(j, rows, what))
        for (const auto& v : array_of(row, cols, what)) out.push_back(vec_from(v, len));
    return out;
}

Json grid_json(const std::vector<Vec>& flat, std::size_t rows, std::size_t cols) {
    Json out = Json::array();
    for (std::size_t r = 0; r < rows; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < cols; ++c) row.push_back(vec_json(flat[r * cols + c]));
        out.push_back(std::move(row));
    }
    return out;
}

void fill_algebra(const Json& j, StarAlgebra& a) {
    a.dim = size_from(j, "dim");
    if (j.contains("basis_names")) {
        for (const auto& n : array_of(j.at("basis_names"), a.dim, "basis_names")) {
            if (!n.is_string()) throw ParseError("basis_names: names must be strings");
            a.names.push_back(n.get<std::string>());
        }
    }
    a.mult = grid_from(need(j, "mult"), a.dim, a.dim, a.dim, "mult");
    a.unit = vec_from(need(j, "unit"), a.dim);
    a.invol = matrix_from(need(j, "invol"), a.dim, a.dim);
    if (j.contains("invol_conjugates")) {
        if (!j.at("invol_conjugates").is_boolean()) throw ParseError("invol_conjugates must be a boolean");
        a.invol_conjugates = j.at("invol_conjugates").get<bool>();
    }
    if (j.contains("rep")) {
        const Json& r = j.at("rep");
        FaithfulRep rep;
        rep.dim = size_from(r, "dim");
        for (const auto& m : array_of(need(r, "images"), a.dim, "rep images"))
            rep.images.push_back(matrix_from(m, rep.dim, rep.dim));
        rep.gram = matrix_from(need(r, "gram"), rep.dim, rep.dim);
        a.rep = std::move(rep);
    }
    try {
        validate_shape(a);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

// Side of a bimodule: an action if one has that name, else an algebra.
std::pair<AlgPtr, ActionPtr> side(const Workspace& ws, const std::string& name) {
    if (ws.has(Kind::action, name)) {
        auto rho = ws.action(name);
        return {rho->alg, rho};
    }
    return {ws.algebra(name), nullptr};
}

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const char* what) {
    auto it = m.find(name);
    if (it == m.end()) throw ParseError(std::string("unknown ") + what + " \"" + name + "\"");
    return it->second;
}

void write(const Json& v, std::size_t indent, std::string& out) {
    auto primitive = [](const Json& x) { return !x.is_array() && !x.is_object(); };
    auto flat = [&](const Json& x) {
        if (primitive(x)) return true;
        if (!x.is_array()) return false;
        for (const auto& e : x)
            if (!primitive(e)) return false;
        return true;
    };
    if (flat(v) || v.empty()) {
        out += v.dump();
        return;
    }
    const std::string pad(indent + 2, ' ');
    if (v.is_array()) {
        out += "[\n";
        for (std::size_t k = 0; k < v.size(); ++k) {
            out += pad;
            write(v[k], indent + 2, out);
            out += k + 1 < v.size() ? ",\n" : "\n";
        }
        out += std::string(indent, ' ') + "]";
        return;
    }
    out += "{\n";
    std::size_t k = 0;
    for (const auto& [key, val] : v.items()) {
        out += pad + Json(key).dump() + ": ";
        write(val, indent + 2, out);
        out += ++k < v.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
}

}  // namespace

Json scalar_json(const Gauss& z) { return z.str(); }

Gauss scalar_from(const Json& j) {
    if (j.is_string()) return Gauss::parse(j.get<std::string>());
    if (j.is_number_integer()) return Gauss(j.get<long>());
    throw ParseError("scalar must be a string such as \"1/2-3i\"");
}

Json vec_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& z : v) out.push_back(scalar_json(z));
    return out;
}

Vec vec_from(const Json& j, std::size_t len) {
    Vec v;
    v.reserve(len);
    for (const auto& z : array_of(j, len, "coefficient vector")) v.push_back(scalar_from(z));
    return v;
}

Json matrix_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_json(m.row(r)));
    return out;
}

Matrix matrix_from(const Json& j, std::size_t rows, std::size_t cols) {
    std::vector<Vec> rs;
    for (const auto& r : array_of(j, rows, "matrix")) rs.push_back(vec_from(r, cols));
    return Matrix::from_rows(rs, cols);
}

const char* to_string(Kind k) {
    switch (k) {
        case Kind::algebra: return "algebra";
        case Kind::hopf: return "hopf";
        case Kind::action: return "action";
        case Kind::bimodule: return "bimodule";
        case Kind::functional: return "functional";
        case Kind::twist: return "twist";
    }
    return "?";
}

Kind kind_from(const std::string& s) {
    for (Kind k : {Kind::algebra, Kind::hopf, Kind::action, Kind::bimodule, Kind::functional, Kind::twist})
        if (s == to_string(k)) return k;
    throw ParseError("unknown object kind \"" + s + "\"");
}

AlgPtr Workspace::algebra(const std::string& name) const {
    if (auto it = algebras_.find(name); it != algebras_.end()) return it->second;
    if (auto it = hopfs_.find(name); it != hopfs_.end()) return it->second->alg;
    throw ParseError("unknown algebra \"" + name + "\"");
}
HopfPtr Workspace::hopf(const std::string& name) const { return lookup(hopfs_, name, "Hopf algebra"); }
ActionPtr Workspace::action(const std::string& name) const { return lookup(actions_, name, "action"); }
BimodPtr Workspace::bimodule(const std::string& name) const { return lookup(bimodules_, name, "bimodule"); }
const Functional& Workspace::functional(const std::string& name) const {
    return lookup(functionals_, name, "functional");
}
const Twist& Workspace::twist(const std::string& name) const { return lookup(twists_, name, "twist"); }

ActionPtr Workspace::companion_action(const std::string& name) const {
    auto it = companions_.find(name);
    return it == companions_.end() ? nullptr : it->second;
}

bool Workspace::has(Kind k, const std::string& name) const {
    for (const auto& e : entries_)
        if (e.kind == k && e.name == name) return true;
    return false;
}

const Entry& Workspace::single(Kind k) const {
    const Entry* found = nullptr;
    for (const auto& e : entries_)
        if (e.kind == k) {
            if (found) throw ParseError(std::string("several objects of kind ") + to_string(k) + "; name one");
            found = &e;
        }
    if (!found) throw ParseError(std::string("no object of kind ") + to_string(k));
    return *found;
}

void Workspace::note(Kind k, const std::string& name, bool unchecked) {
    if (has(k, name)) throw ParseError(std::string("duplicate ") + to_string(k) + " \"" + name + "\"");
    entries_.push_back({k, name, unchecked});
}

void Workspace::add(const std::string& name, AlgPtr a, bool unchecked) {
    note(Kind::algebra, name, unchecked);
    algebras_[name] = std::move(a);
}
void Workspace::add(const std::string& name, HopfPtr h, bool unchecked) {
    note(Kind::hopf, name, unchecked);
    hopfs_[name] = std::move(h);
}
void Workspace::add(const std::string& name, ActionPtr a, bool unchecked) {
    note(Kind::action, name, unchecked);
    actions_[name] = std::move(a);
}
void Workspace::add(const std::string& name, BimodPtr e, bool unchecked) {
    note(Kind::bimodule, name, unchecked);
    bimodules_[name] = std::move(e);
}
void Workspace::add(const std::string& name, Functional f, ActionPtr companion, bool unchecked) {
    note(Kind::functional, name, unchecked);
    functionals_.insert_or_assign(name, std::move(f));
    if (companion) companions_["functional:" + name] = std::move(companion);
}
void Workspace::add(const std::string& name, Twist t, ActionPtr companion, bool unchecked) {
    note(Kind::twist, name, unchecked);
    twists_.insert_or_assign(name, std::move(t));
    if (companion) companions_["twist:" + name] = std::move(companion);
}

std::string Workspace::name_of(const StarAlgebra* a) const {
    for (const auto& [n, p] : algebras_)
        if (p.get() == a) return n;
    for (const auto& [n, h] : hopfs_)
        if (h->alg.get() == a) return n;
    throw ParseError("algebra is not registered in the workspace");
}
std::string Workspace::name_of(const StarAction* a) const {
    for (const auto& [n, p] : actions_)
        if (p.get() == a) return n;
    throw ParseError("action is not registered in the workspace");
}
std::string Workspace::name_of(const HopfStarAlgebra* h) const {
    for (const auto& [n, p] : hopfs_)
        if (p.get() == h) return n;
    throw ParseError("Hopf algebra is not registered in the workspace");
}

AlgPtr parse_algebra(const Json& j) {
    StarAlgebra a;
    fill_algebra(j, a);
    return std::make_shared<const StarAlgebra>(std::move(a));
}

HopfPtr parse_hopf(const Json& j) {
    auto alg = parse_algebra(j);
    const std::size_t d = alg->dim;
    std::vector<Vec> comult;
    for (const auto& v : array_of(need(j, "comult"), d, "comult")) comult.push_back(vec_from(v, d * d));
    Vec counit = vec_from(need(j, "counit"), d);
    Matrix s = matrix_from(need(j, "antipode"), d, d);
    try {
        return make_hopf(alg, std::move(comult), std::move(counit), std::move(s));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

ActionPtr parse_action(const Json& j, const Workspace& ws) {
    auto h = ws.hopf(string_from(j, "hopf"));
    auto a = ws.algebra(string_from(j, "algebra"));
    auto act = grid_from(need(j, "act"), h->dim(), a->dim, a->dim, "act");
    try {
        return make_action_unchecked(h, a, std::move(act));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

BimodPtr parse_bimodule(const Json& j, const Workspace& ws) {
    CovariantBimodule e;
    std::tie(e.left, e.rho_left) = side(ws, string_from(j, "left"));
    std::tie(e.right, e.rho_right) = side(ws, string_from(j, "right"));
    const std::size_t m = size_from(j, "dim"), db = e.left->dim, da = e.right->dim;
    e.dim = m;
    e.left_act = grid_from(need(j, "left_act"), db, m, m, "left_act");
    e.right_act = grid_from(need(j, "right_act"), m, da, m, "right_act");
    e.ip_right = grid_from(need(j, "ip_right"), m, m, da, "ip_right");
    if (j.contains("ip_left")) e.ip_left = grid_from(j.at("ip_left"), m, m, db, "ip_left");
    if (j.contains("h_act")) {
        if (!e.rho_left || !e.rho_right) throw ParseError("h_act needs actions named as \"left\" and \"right\"");
        e.h_act = grid_from(j.at("h_act"), e.rho_right->dim_h(), m, m, "h_act");
    }
    try {
        return make_bimodule(std::move(e));
    } catch (const std::invalid_argument& err) {
        throw ParseError(err.what());
    }
}

Functional parse_functional(const Json& j, const Workspace& ws) {
    auto a = ws.algebra(string_from(j, "algebra"));
    return {a, vec_from(need(j, "row"), a->dim)};
}

Twist parse_twist(const Json& j, const Workspace& ws) {
    auto h = ws.hopf(string_from(j, "hopf"));
    auto a = ws.algebra(string_from(j, "algebra"));
    Matrix m(a->dim, h->dim());
    const Json& cols = array_of(need(j, "columns"), h->dim(), "columns");
    for (std::size_t g = 0; g < h->dim(); ++g) m.set_col(g, vec_from(cols[g], a->dim));
    return {h, a, std::move(m)};
}

Json algebra_doc(const StarAlgebra& a) {
    Json j;
    j["dim"] = a.dim;
    if (!a.names.empty()) j["basis_names"] = a.names;
    j["mult"] = grid_json(a.mult, a.dim, a.dim);
    j["unit"] = vec_json(a.unit);
    j["invol"] = matrix_json(a.invol);
    if (!a.invol_conjugates) j["invol_conjugates"] = false;
    if (a.rep) {
        Json r;
        r["dim"] = a.rep->dim;
        r["images"] = Json::array();
        for (const auto& m : a.rep->images) r["images"].push_back(matrix_json(m));
        r["gram"] = matrix_json(a.rep->gram);
        j["rep"] = std::move(r);
    }
    return j;
}

Json hopf_doc(const HopfStarAlgebra& h) {
    Json j = algebra_doc(*h.alg);
    j["comult"] = Json::array();
    for (const auto& v : h.comult) j["comult"].push_back(vec_json(v));
    j["counit"] = vec_json(h.counit);
    j["antipode"] = matrix_json(h.antipode);
    return j;
}

Json action_doc(const StarAction& rho, const Workspace& ws) {
    Json j;
    j["hopf"] = ws.name_of(rho.hopf.get());
    j["algebra"] = ws.name_of(rho.alg.get());
    j["act"] = grid_json(rho.act, rho.dim_h(), rho.dim_a());
    return j;
}

Json bimodule_doc(const CovariantBimodule& e, const Workspace& ws) {
    Json j;
    j["left"] = e.rho_left ? ws.name_of(e.rho_left.get()) : ws.name_of(e.left.get());
    j["right"] = e.rho_right ? ws.name_of(e.rho_right.get()) : ws.name_of(e.right.get());
    j["dim"] = e.dim;
    j["left_act"] = grid_json(e.left_act, e.left->dim, e.dim);
    j["right_act"] = grid_json(e.right_act, e.dim, e.right->dim);
    j["ip_right"] = grid_json(e.ip_right, e.dim, e.dim);
    if (e.ip_left) j["ip_left"] = grid_json(*e.ip_left, e.dim, e.dim);
    if (e.h_act) j["h_act"] = grid_json(*e.h_act, e.hopf().dim(), e.dim);
    return j;
}

Json functional_doc(const Functional& f, const Workspace& ws) {
    Json j;
    j["algebra"] = ws.name_of(f.algebra.get());
    j["row"] = vec_json(f.row);
    return j;
}

Json twist_doc(const Twist& t, const Workspace& ws) {
    Json j;
    j["hopf"] = ws.name_of(t.hopf.get());
    j["algebra"] = ws.name_of(t.alg.get());
    j["columns"] = Json::array();
    for (std::size_t g = 0; g < t.hopf->dim(); ++g) j["columns"].push_back(vec_json(t.at(g)));
    return j;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

Workspace load_manifest_json(const Json& j, const std::filesystem::path& base) {
    Workspace ws;
    extend_workspace(ws, j, base);
    return ws;
}

void extend_workspace(Workspace& ws, const Json& j, const std::filesystem::path& base) {
    const Json& objs = need(j, "objects");
    if (!objs.is_array()) throw ParseError("\"objects\" must be an array");
    for (const auto& o : objs) {
        const Kind k = kind_from(string_from(o, "kind"));
        const std::string name = string_from(o, "name");
        bool unchecked = o.contains("unchecked") && o.at("unchecked").is_boolean() && o.at("unchecked").get<bool>();
        Json doc;
        if (o.contains("document"))
            doc = o.at("document");
        else
            doc = read_json_file(base / string_from(o, "path"));
        try {
            switch (k) {
                case Kind::algebra: ws.add(name, parse_algebra(doc), unchecked); break;
                case Kind::hopf: ws.add(name, parse_hopf(doc), unchecked); break;
                case Kind::action: ws.add(name, parse_action(doc, ws), unchecked); break;
                case Kind::bimodule: ws.add(name, parse_bimodule(doc, ws), unchecked); break;
                case Kind::functional: {
                    ActionPtr c = doc.contains("action") ? ws.action(string_from(doc, "action")) : nullptr;
                    ws.add(name, parse_functional(doc, ws), c, unchecked);
                    break;
                }
                case Kind::twist: {
                    ActionPtr c = doc.contains("action") ? ws.action(string_from(doc, "action")) : nullptr;
                    ws.add(name, parse_twist(doc, ws), c, unchecked);
                    break;
                }
            }
        } catch (const ParseError& e) {
            throw ParseError(name + ": " + e.what());
        } catch (const Json::exception& e) {
            throw ParseError(name + ": " + e.what());
        }
    }
}

Workspace load_manifest(const std::filesystem::path& path) {
    return load_manifest_json(read_json_file(path), path.parent_path());
}

Json save_workspace(const Workspace& ws) {
    Json objs = Json::array();
    for (const auto& e : ws.entries()) {
        Json o;
        o["kind"] = to_string(e.kind);
        o["name"] = e.name;
        if (e.unchecked) o["unchecked"] = true;
        switch (e.kind) {
            case Kind::algebra: o["document"] = algebra_doc(*ws.algebra(e.name)); break;
            case Kind::hopf: o["document"] = hopf_doc(*ws.hopf(e.name)); break;
            case Kind::action: o["document"] = action_doc(*ws.action(e.name), ws); break;
            case Kind::bimodule: o["document"] = bimodule_doc(*ws.bimodule(e.name), ws); break;
            case Kind::functional: {
                Json d = functional_doc(ws.functional(e.name), ws);
                if (auto c = ws.companion_action("functional:" + e.name)) d["action"] = ws.name_of(c.get());
                o["document"] = std::move(d);
                break;
            }
            case Kind::twist: {
                Json d = twist_doc(ws.twist(e.name), ws);
                if (auto c = ws.companion_action("twist:" + e.name)) d["action"] = ws.name_of(c.get());
                o["document"] = std::move(d);
                break;
            }
        }
        objs.push_back(std::move(o));
    }
    Json j;
    j["objects"] = std::move(objs);
    return j;
}

std::string write_document(const Json& j) {
    std::string out;
    write(j, 0, out);
    out += "\n";
    return out;
}

Report check_entry(const Workspace& ws, const Entry& e) {
    Report r;
    switch (e.kind) {
        case Kind::algebra: {
            auto a = ws.algebra(e.name);
            r = check_star_algebra(*a);
            if (a->rep) r.merge("rep: ", check_rep(*a, *a->rep));
            break;
        }
        case Kind::hopf: {
            auto h = ws.hopf(e.name);
            r.merge("algebra: ", check_star_algebra(*h->alg));
            r.merge("", check_hopf(*h));
            break;
        }
        case Kind::action: r = check_star_action(*ws.action(e.name)); break;
        case Kind::bimodule: r = check_covariant_module(*ws.bimodule(e.name)); break;
        case Kind::functional: {
            auto c = ws.companion_action("functional:" + e.name);
            r = check_functional(ws.functional(e.name), c.get());
            break;
        }
        case Kind::twist: {
            const Twist& t = ws.twist(e.name);
            if (auto c = ws.companion_action("twist:" + e.name))
                r = is_U_member(t, *c);
            else
                r.add("shape", t.m.rows() == t.alg->dim && t.m.cols() == t.hopf->dim());
            break;
        }
    }
    return r;
}

Report check_workspace(const Workspace& ws) {
    Report r;
    for (const auto& e : ws.entries()) {
        if (e.unchecked) {
            r.add(e.name + ": not checked", true, "flagged unchecked");
            continue;
        }
        r.merge(e.name + ": ", check_entry(ws, e));
    }
    return r;
}

}  // namespace hm::io
