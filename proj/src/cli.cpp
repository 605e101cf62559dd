#include "hopfmorita/cli.hpp"

#include "hopfmorita/crossed.hpp"
#include "hopfmorita/io.hpp"
#include "hopfmorita/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <stdexcept>

namespace hm {

namespace {

using io::Json;
using io::Kind;
using io::Workspace;

struct Options {
    std::string format = "text";
    std::string out;
    std::uint64_t seed = 0;
};

void add_format(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
}
void add_out(CLI::App* sub, Options& o) { sub->add_option("--out", o.out, "Write the document to this path"); }
void add_seed(CLI::App* sub, Options& o) { sub->add_option("--seed", o.seed, "Seed for randomized searches"); }

int emit_report(const Report& r, const Options& o, std::ostream& out) {
    std::size_t failed = 0;
    for (const auto& it : r.items()) failed += it.ok ? 0 : 1;
    if (o.format == "json") {
        Json items = Json::array();
        for (const auto& it : r.items()) items.push_back({{"name", it.name}, {"ok", it.ok}, {"detail", it.detail}});
        Json j;
        j["passed"] = failed == 0;
        j["items"] = std::move(items);
        out << io::write_document(j);
    } else {
        for (const auto& it : r.items()) {
            out << (it.ok ? "PASS " : "FAIL ") << it.name;
            if (!it.ok && !it.detail.empty()) out << " (" << it.detail << ")";
            out << '\n';
        }
        out << (failed == 0 ? "passed" : "failed") << ": " << r.items().size() << " items, " << failed
            << " failures\n";
    }
    return failed == 0 ? exit_pass : exit_failure;
}

void emit_document(const Json& doc, const Options& o, std::ostream& out) {
    const std::string text = io::write_document(doc);
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw ParseError("cannot write \"" + o.out + "\"");
    f << text;
}

// Output bundles: objects are registered under the input's names when they
// come from the input workspace, otherwise under fresh names.
class Bundle {
public:
    explicit Bundle(const Workspace& in) : in_(in) {}

    std::string hopf(const HopfPtr& h, const std::string& hint) {
        if (auto n = known(h.get())) return *n;
        const std::string name = fresh(Kind::hopf, input_name(h.get()).value_or(hint));
        ws_.add(name, h);
        return name;
    }
    std::string algebra(const AlgPtr& a, const std::string& hint) {
        if (auto n = known(a.get())) return *n;
        const std::string name = fresh(Kind::algebra, input_name(a.get()).value_or(hint));
        ws_.add(name, a);
        return name;
    }
    std::string action(const ActionPtr& rho, const std::string& hint) {
        if (auto n = known(rho.get())) return *n;
        hopf(rho->hopf, "H");
        algebra(rho->alg, hint + "_algebra");
        const std::string name = fresh(Kind::action, input_name(rho.get()).value_or(hint));
        ws_.add(name, rho);
        return name;
    }
    void bimodule(const BimodPtr& e, const std::string& name) {
        if (e->rho_left) action(e->rho_left, name + "_left");
        else algebra(e->left, name + "_left");
        if (e->rho_right) action(e->rho_right, name + "_right");
        else algebra(e->right, name + "_right");
        ws_.add(fresh(Kind::bimodule, name), e);
    }
    void twist(const Twist& t, const ActionPtr& rho, const std::string& name) {
        hopf(t.hopf, "H");
        algebra(t.alg, name + "_algebra");
        if (rho) action(rho, name + "_action");
        ws_.add(fresh(Kind::twist, name), t, rho);
    }

    Json json() const { return io::save_workspace(ws_); }

private:
    template <class T>
    std::optional<std::string> lookup(const Workspace& w, const T* p) const {
        try {
            return w.name_of(p);
        } catch (const ParseError&) {
            return std::nullopt;
        }
    }
    template <class T>
    std::optional<std::string> known(const T* p) const { return lookup(ws_, p); }
    template <class T>
    std::optional<std::string> input_name(const T* p) const { return lookup(in_, p); }

    // Names are unique across kinds so that algebra references stay unambiguous.
    std::string fresh(Kind, const std::string& hint) const {
        auto taken = [&](const std::string& n) {
            for (const auto& e : ws_.entries())
                if (e.name == n) return true;
            return false;
        };
        if (!taken(hint)) return hint;
        for (std::size_t k = 2;; ++k)
            if (!taken(hint + std::to_string(k))) return hint + std::to_string(k);
    }

    const Workspace& in_;
    Workspace ws_;
};

// names[idx] if given, otherwise the only object of kind k in the manifest.
std::string pick(const Workspace& ws, Kind k, const std::vector<std::string>& names, std::size_t idx) {
    if (idx < names.size()) return names[idx];
    if (idx > 0) throw ParseError(std::string("expected ") + std::to_string(idx + 1) + " " + to_string(k) + " names");
    return ws.single(k).name;
}

ActionPtr functional_action(const Workspace& ws, const std::string& f, const std::vector<std::string>& names) {
    if (names.size() > 1) return ws.action(names[1]);
    if (auto c = ws.companion_action("functional:" + f)) return c;
    return ws.action(ws.single(Kind::action).name);
}

Json rep_doc(const CovariantRep& r) {
    Json j;
    j["kind"] = "covariant-representation";
    j["dim"] = r.dim;
    j["pi"] = Json::array();
    for (const auto& m : r.pi) j["pi"].push_back(io::matrix_json(m));
    j["h"] = Json::array();
    for (const auto& m : r.h) j["h"].push_back(io::matrix_json(m));
    j["gram"] = io::matrix_json(r.gram);
    return j;
}

Json compute(const std::string& kind, const Workspace& ws, const std::vector<std::string>& names) {
    Bundle b(ws);
    if (kind == "crossed-algebra") {
        auto c = crossed_algebra(ws.action(pick(ws, Kind::action, names, 0)));
        b.hopf(c.canonical_action->hopf, "H");
        b.algebra(c.alg, "crossed");
        b.action(c.canonical_action, "canonical");
        return b.json();
    }
    if (kind == "crossed-bimodule") {
        auto x = crossed_bimodule(*ws.bimodule(pick(ws, Kind::bimodule, names, 0)));
        b.bimodule(x.module, "crossed");
        return b.json();
    }
    if (kind == "tensor") {
        auto t = internal_tensor(*ws.bimodule(pick(ws, Kind::bimodule, names, 0)),
                                 *ws.bimodule(pick(ws, Kind::bimodule, names, 1)));
        b.bimodule(t.module, "tensor");
        return b.json();
    }
    if (kind == "conjugate") {
        b.bimodule(conjugate_bimodule(*ws.bimodule(pick(ws, Kind::bimodule, names, 0))), "conjugate");
        return b.json();
    }
    if (kind == "gns") {
        const std::string f = pick(ws, Kind::functional, names, 0);
        auto g = gns(ws.functional(f), functional_action(ws, f, names));
        Json j = rep_doc(g.rep);
        j["vacuum"] = io::vec_json(g.vacuum);
        return j;
    }
    if (kind == "hat") {
        const std::string f = pick(ws, Kind::functional, names, 0);
        auto rho = functional_action(ws, f, names);
        auto c = crossed_algebra(rho);
        FaithfulRep r = hat_representation(gns(ws.functional(f), rho).rep, c);
        Json j;
        j["kind"] = "representation";
        j["dim"] = r.dim;
        j["images"] = Json::array();
        for (const auto& m : r.images) j["images"].push_back(io::matrix_json(m));
        j["gram"] = io::matrix_json(r.gram);
        return j;
    }
    if (kind == "convolution") {
        const std::string a = pick(ws, Kind::twist, names, 0);
        const std::string c = pick(ws, Kind::twist, names, 1);
        b.twist(convolve(ws.twist(a), ws.twist(c)), ws.companion_action("twist:" + a), "convolution");
        return b.json();
    }
    if (kind == "characters") {
        auto rho = ws.action(pick(ws, Kind::action, names, 0));
        auto chars = enumerate_characters(*rho);
        for (std::size_t k = 0; k < chars.size(); ++k) b.twist(chars[k], rho, "chi" + std::to_string(k));
        return b.json();
    }
    throw ParseError("unknown compute kind \"" + kind + "\"");
}

Workspace load_object_file(const std::string& path) { return io::load_manifest(path); }

// A twist file is either a manifest or a single twist document resolved
// against ws.
Twist load_twist(Workspace& ws, const std::string& path) {
    const std::filesystem::path p(path);
    Json j = io::read_json_file(p);
    if (j.is_object() && j.contains("objects")) {
        const std::size_t before = ws.entries().size();
        io::extend_workspace(ws, j, p.parent_path());
        for (std::size_t k = ws.entries().size(); k > before; --k)
            if (ws.entries()[k - 1].kind == Kind::twist) return ws.twist(ws.entries()[k - 1].name);
        throw ParseError("\"" + path + "\" holds no twist");
    }
    return io::parse_twist(j, ws);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite-dimensional Hopf *-algebra symmetries and covariant Morita equivalence", "hmtool"};
    app.require_subcommand(1);
    Options o;

    std::string manifest;
    auto* check = app.add_subcommand("check", "Run the checker for every object in a manifest");
    check->add_option("manifest", manifest)->required();
    add_format(check, o);

    std::string suite;
    auto* verify = app.add_subcommand("verify", "Run a named verification suite");
    verify->add_option("suite", suite)->required();
    add_seed(verify, o);
    add_format(verify, o);

    std::string kind;
    std::vector<std::string> names;
    auto* comp = app.add_subcommand("compute", "Build a construction and write it as a document");
    comp->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember({"crossed-algebra", "crossed-bimodule", "tensor", "conjugate", "gns", "hat",
                               "convolution", "characters"}));
    comp->add_option("manifest", manifest)->required();
    comp->add_option("names", names, "Objects to use, in order");
    add_out(comp, o);
    add_seed(comp, o);

    std::string action_file, bimodule_file, name;
    auto* crossed = app.add_subcommand("crossed", "Crossed product of an action or bimodule");
    auto* opt_a = crossed->add_option("--action", action_file, "Manifest holding the action");
    auto* opt_b = crossed->add_option("--bimodule", bimodule_file, "Manifest holding the bimodule");
    opt_a->excludes(opt_b);
    crossed->add_option("--name", name, "Object to use when the manifest holds several");
    add_out(crossed, o);

    auto* groups = app.add_subcommand("groups", "Twist groups of an action");
    groups->add_option("--action", action_file, "Manifest holding the action")->required();
    groups->add_option("--name", name, "Action to use when the manifest holds several");
    groups->require_subcommand(1);
    add_format(groups, o);
    add_out(groups, o);
    add_seed(groups, o);
    auto* g_chars = groups->add_subcommand("enumerate-characters", "Characters lying in U(H, A)");
    std::string twist_a, twist_b;
    auto* g_check = groups->add_subcommand("check-twist", "Membership in U(H, A)");
    g_check->add_option("twist", twist_a)->required();
    auto* g_u0 = groups->add_subcommand("u0-equal", "Equality modulo hats of unitary central elements");
    g_u0->add_option("first", twist_a)->required();
    g_u0->add_option("second", twist_b)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (*check) {
            Workspace ws = io::load_manifest(manifest);
            return emit_report(io::check_workspace(ws), o, out);
        }
        if (*verify) {
            if (!has_suite(suite)) {
                err << "unknown suite \"" << suite << "\"; available:";
                for (const auto& s : suite_names()) err << ' ' << s;
                err << '\n';
                return exit_usage;
            }
            return emit_report(run_suite(suite, o.seed), o, out);
        }
        if (*comp) {
            Workspace ws = io::load_manifest(manifest);
            emit_document(compute(kind, ws, names), o, out);
            return exit_pass;
        }
        if (*crossed) {
            if (action_file.empty() && bimodule_file.empty()) {
                err << "crossed: one of --action or --bimodule is required\n";
                return exit_usage;
            }
            const bool is_action = !action_file.empty();
            Workspace ws = load_object_file(is_action ? action_file : bimodule_file);
            std::vector<std::string> ns;
            if (!name.empty()) ns.push_back(name);
            emit_document(compute(is_action ? "crossed-algebra" : "crossed-bimodule", ws, ns), o, out);
            return exit_pass;
        }
        if (*groups) {
            Workspace ws = load_object_file(action_file);
            auto rho = ws.action(name.empty() ? ws.single(Kind::action).name : name);
            if (*g_chars) {
                emit_document(compute("characters", ws, {ws.name_of(rho.get())}), o, out);
                return exit_pass;
            }
            if (*g_check) return emit_report(is_U_member(load_twist(ws, twist_a), *rho), o, out);
            if (*g_u0) {
                Twist a = load_twist(ws, twist_a);
                Twist c = load_twist(ws, twist_b);
                U0Result res = u0_equal(a, c, *rho, o.seed);
                if (o.format == "json") {
                    Json j;
                    j["outcome"] = to_string(res.outcome);
                    if (res.witness) j["witness"] = io::vec_json(*res.witness);
                    out << io::write_document(j);
                } else {
                    out << to_string(res.outcome) << '\n';
                }
                return res.outcome == U0Outcome::equal ? exit_pass : exit_failure;
            }
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "failed: " << e.what() << '\n';
        return exit_failure;
    } catch (const std::domain_error& e) {
        err << "failed: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"hmtool"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hm
