#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hocolim/category.hpp"
#include "hocolim/diagram.hpp"
#include "hocolim/verify.hpp"

namespace hocolim::io {

inline constexpr int kVersion = 1;

// Schema or reference error; `where` is the JSON path inside the offending file.
struct IoError : std::runtime_error {
    IoError(const std::string& where, const std::string& what) : std::runtime_error(where + ": " + what) {}
};

struct NamedMap {
    std::string from;
    std::string to;
    SMap map;
};
struct NamedFunctor {
    std::string from;
    std::string to;
    Functor functor;
};

// Value-category tags: chain:f<p> or sset:f<p>.
struct ValueTag {
    bool chain = true;
    uint32_t p = 2;
    std::string str() const { return (chain ? "chain:f" : "sset:f") + std::to_string(p); }
};
ValueTag parse_tag(const std::string& tag);

// Exactly one of chain / sset is set, matching tag.
struct NamedBounded {
    std::string base;
    ValueTag tag;
    std::optional<BoundedDiagram<ChainValues>> chain;
    std::optional<BoundedDiagram<SSetValues>> sset;
};
struct NamedIndexed {
    std::string category;
    ValueTag tag;
    std::optional<IndexedDiagram<ChainValues>> chain;
    std::optional<IndexedDiagram<SSetValues>> sset;
};
struct NamedCatDiagram {
    std::string base;
    CatDiagram diagram;
};

// Named entities; every cross-reference is by name within the workspace.
struct Workspace {
    std::map<std::string, SSetPtr> ssets;
    std::map<std::string, NamedMap> maps;
    std::map<std::string, CatPtr> categories;
    std::map<std::string, NamedFunctor> functors;
    std::map<std::string, NamedCatDiagram> cat_diagrams;
    std::map<std::string, ChainComplex> chain_complexes;
    std::map<std::string, NamedBounded> bounded_diagrams;
    std::map<std::string, NamedIndexed> indexed_diagrams;

    bool empty() const;
};

// Parses and validates the union of the given files; a name may appear in several files only
// with identical content. Throws IoError naming the file and the JSON path.
Workspace load(const std::vector<std::string>& paths);
Workspace load(const std::string& path);
Workspace parse(const std::string& text, const std::string& source = "<input>");

// Canonical form: sections in a fixed order, names sorted, two-space indentation, final newline.
std::string dump(const Workspace& w);
void save(const Workspace& w, const std::string& path);

// Adds the base of a diagram or the ends of a map under the given names when they are missing.
void put(Workspace& w, const std::string& name, const SSetPtr& K);
void put(Workspace& w, const std::string& name, const CatPtr& C);

// The entity of a section named `name`, or the only one when `name` is empty.
template <class T>
const T& select(const std::map<std::string, T>& section, const std::string& name, const char* what) {
    if (!name.empty()) {
        auto it = section.find(name);
        if (it == section.end()) throw IoError(what, "no entity named '" + name + "'");
        return it->second;
    }
    if (section.size() != 1)
        throw IoError(what, section.empty() ? "no entity of this kind" : "several entities; pass a name");
    return section.begin()->second;
}
template <class T>
const std::string& select_name(const std::map<std::string, T>& section, const std::string& name, const char* what) {
    const T& entity = select(section, name, what);
    for (const auto& [key, value] : section)
        if (&value == &entity) return key;
    throw std::logic_error("selected entity not found");
}

// Deterministic random instances; identical specs give byte-identical workspaces.
struct GenSpec {
    std::string family;  // poset, dag-category, chain-complex, bounded-diagram-via-closure, simplicial-map
    uint64_t seed = 1;
    int max_objects = 5;  // objects, glued cells or summands
    int max_dim = 3;
    ValueTag tag;
};
inline const std::vector<std::string>& gen_families() {
    static const std::vector<std::string> f{"poset", "dag-category", "chain-complex", "bounded-diagram-via-closure",
                                            "simplicial-map"};
    return f;
}
// Throws std::invalid_argument on an unknown family or bounds below one object.
Workspace generate(const GenSpec& g);

std::string report_json(const Report& r);
std::string report_text(const Report& r);

}  // namespace hocolim::io
