#pragma once

#include "hopfmorita/bimodule.hpp"
#include "hopfmorita/gns.hpp"
#include "hopfmorita/groups.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace hm::io {

using Json = nlohmann::ordered_json;

// Scalars travel as exact strings "a/b+c/di"; plain integers are accepted on
// input. Shape or syntax problems throw ParseError.
Json scalar_json(const Gauss& z);
Gauss scalar_from(const Json& j);
Json vec_json(const Vec& v);
Vec vec_from(const Json& j, std::size_t len);
Json matrix_json(const Matrix& m);
Matrix matrix_from(const Json& j, std::size_t rows, std::size_t cols);

enum class Kind { algebra, hopf, action, bimodule, functional, twist };
const char* to_string(Kind k);
Kind kind_from(const std::string& s);

struct Entry {
    Kind kind;
    std::string name;
    bool unchecked = false;
};

// Objects loaded from a manifest, addressed by name within each kind.
// Documents refer to each other by name; an action or bimodule side may
// name either an algebra (or Hopf algebra) or an action.
class Workspace {
public:
    AlgPtr algebra(const std::string& name) const;  // algebras, then Hopf algebras
    HopfPtr hopf(const std::string& name) const;
    ActionPtr action(const std::string& name) const;
    BimodPtr bimodule(const std::string& name) const;
    const Functional& functional(const std::string& name) const;
    const Twist& twist(const std::string& name) const;
    // Action given with a functional or twist document, if any.
    ActionPtr companion_action(const std::string& name) const;

    bool has(Kind k, const std::string& name) const;
    const std::vector<Entry>& entries() const { return entries_; }
    // The only entry of kind k; throws ParseError if there is not exactly one.
    const Entry& single(Kind k) const;

    void add(const std::string& name, AlgPtr a, bool unchecked = false);
    void add(const std::string& name, HopfPtr h, bool unchecked = false);
    void add(const std::string& name, ActionPtr a, bool unchecked = false);
    void add(const std::string& name, BimodPtr e, bool unchecked = false);
    void add(const std::string& name, Functional f, ActionPtr companion = nullptr, bool unchecked = false);
    void add(const std::string& name, Twist t, ActionPtr companion = nullptr, bool unchecked = false);

    // Name under which an object was registered, for writing references.
    std::string name_of(const StarAlgebra* a) const;
    std::string name_of(const StarAction* a) const;
    std::string name_of(const HopfStarAlgebra* h) const;

private:
    void note(Kind k, const std::string& name, bool unchecked);

    std::map<std::string, AlgPtr> algebras_;
    std::map<std::string, HopfPtr> hopfs_;
    std::map<std::string, ActionPtr> actions_;
    std::map<std::string, BimodPtr> bimodules_;
    std::map<std::string, Functional> functionals_;
    std::map<std::string, Twist> twists_;
    std::map<std::string, ActionPtr> companions_;
    std::vector<Entry> entries_;
};

// Parsers validate shapes only; the axioms are checked by check_workspace.
AlgPtr parse_algebra(const Json& j);
HopfPtr parse_hopf(const Json& j);
ActionPtr parse_action(const Json& j, const Workspace& ws);
BimodPtr parse_bimodule(const Json& j, const Workspace& ws);
Functional parse_functional(const Json& j, const Workspace& ws);
Twist parse_twist(const Json& j, const Workspace& ws);

Json algebra_doc(const StarAlgebra& a);
Json hopf_doc(const HopfStarAlgebra& h);
Json action_doc(const StarAction& rho, const Workspace& ws);
Json bimodule_doc(const CovariantBimodule& e, const Workspace& ws);
Json functional_doc(const Functional& f, const Workspace& ws);
Json twist_doc(const Twist& t, const Workspace& ws);

// {"objects": [{"kind", "name", "path" | "document", "unchecked"?}]}; paths
// are relative to the manifest. Entries load in order, so references must
// point backwards.
Workspace load_manifest(const std::filesystem::path& path);
Workspace load_manifest_json(const Json& j, const std::filesystem::path& base = {});
// Loads further entries into ws; they may refer to objects already there.
void extend_workspace(Workspace& ws, const Json& j, const std::filesystem::path& base = {});
// Inline-document manifest holding every entry of ws.
Json save_workspace(const Workspace& ws);

Json read_json_file(const std::filesystem::path& path);
// One key per line, vectors and matrix rows kept on single lines.
std::string write_document(const Json& j);

// Runs the checker for one entry.
Report check_entry(const Workspace& ws, const Entry& e);
// All entries, items prefixed with "<name>: ".
Report check_workspace(const Workspace& ws);

}  // namespace hm::io
