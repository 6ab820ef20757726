#include "hocolim/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "hocolim/generate.hpp"

namespace hocolim::io {

using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kSections[] = {"ssets",           "maps",           "categories",
                                     "functors",        "cat_diagrams",   "chain_complexes",
                                     "bounded_diagrams", "indexed_diagrams"};

std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string child(const std::string& at, size_t k) { return at + "/" + std::to_string(k); }

const Json& need(const Json& j, const char* key, const std::string& at) {
    if (!j.is_object()) throw IoError(at, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw IoError(at, std::string("missing key '") + key + "'");
    return *it;
}

void only_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& at) {
    for (const auto& [k, _] : j.items())
        if (std::none_of(keys.begin(), keys.end(), [&](const char* x) { return k == x; }))
            throw IoError(at, "unknown key '" + k + "'");
}

const Json& need_array(const Json& j, const std::string& at) {
    if (!j.is_array()) throw IoError(at, "expected an array");
    return j;
}

const Json& need_object(const Json& j, const std::string& at) {
    if (!j.is_object()) throw IoError(at, "expected an object");
    return j;
}

uint64_t as_uint(const Json& j, const std::string& at) {
    if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<int64_t>() < 0))
        throw IoError(at, "expected a non-negative integer");
    return j.get<uint64_t>();
}

std::string as_string(const Json& j, const std::string& at) {
    if (!j.is_string()) throw IoError(at, "expected a string");
    return j.get<std::string>();
}

uint32_t parse_id(const std::string& key, const std::string& at) {
    if (key.empty() || key.size() > 9 || !std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw IoError(at, "'" + key + "' is not a simplex id");
    return static_cast<uint32_t>(std::stoul(key));
}

// "s:i" keys of face tables.
std::pair<uint32_t, int> parse_face_key(const std::string& key, const std::string& at) {
    const auto colon = key.find(':');
    if (colon == std::string::npos) throw IoError(at, "face key '" + key + "' is not of the form simplex:index");
    return {parse_id(key.substr(0, colon), at), static_cast<int>(parse_id(key.substr(colon + 1), at))};
}

std::string face_key(uint32_t s, int i) { return std::to_string(s) + ":" + std::to_string(i); }

// Rethrows library validation errors at a JSON path.
template <class Fn>
auto at_path(const std::string& at, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const IoError&) {
        throw;
    } catch (const std::exception& e) {
        throw IoError(at, e.what());
    }
}

// ---- simplicial sets and maps

Json ref_json(const SimplexRef& r) {
    Json j;
    j["base"] = r.base;
    j["op"] = r.op().values();
    return j;
}

SimplexRef ref_from(const Json& j, const SSet& K, uint32_t limit, int dim, const std::string& at) {
    only_keys(need_object(j, at), {"base", "op"}, at);
    const uint64_t base = as_uint(need(j, "base", at), child(at, "base"));
    if (base >= limit) throw IoError(child(at, "base"), "simplex " + std::to_string(base) + " does not exist");
    const Json& op = need_array(need(j, "op", at), child(at, "op"));
    std::vector<int> values;
    for (size_t k = 0; k < op.size(); ++k) values.push_back(static_cast<int>(as_uint(op[k], child(child(at, "op"), k))));
    const int bd = K.dim(static_cast<uint32_t>(base));
    bool ok = static_cast<int>(values.size()) == dim + 1 && !values.empty() && values.front() == 0 && values.back() == bd;
    for (size_t k = 1; ok && k < values.size(); ++k) ok = values[k] == values[k - 1] || values[k] == values[k - 1] + 1;
    if (!ok)
        throw IoError(child(at, "op"), "not a monotone surjection [" + std::to_string(dim) + "] -> [" + std::to_string(bd) +
                                           "] onto simplex " + std::to_string(base));
    return SimplexRef::make(static_cast<uint32_t>(base), MonotoneSurjection::from_values(values));
}

Json sset_json(const SSet& K) {
    Json j;
    j["simplices"] = Json::array();
    j["faces"] = Json::object();
    for (uint32_t s = 0; s < K.size(); ++s) {
        Json e;
        e["id"] = s;
        e["dim"] = K.dim(s);
        j["simplices"].push_back(e);
        for (int i = 0; K.dim(s) >= 1 && i <= K.dim(s); ++i) j["faces"][face_key(s, i)] = ref_json(K.face(s, i));
    }
    return j;
}

SSetPtr sset_from(const Json& j, const std::string& at) {
    only_keys(need_object(j, at), {"simplices", "faces"}, at);
    const std::string sat = child(at, "simplices");
    const Json& simplices = need_array(need(j, "simplices", at), sat);
    const std::string fat = child(at, "faces");
    const Json& faces = need_object(need(j, "faces", at), fat);
    std::vector<int> dims;
    for (size_t k = 0; k < simplices.size(); ++k) {
        const std::string eat = child(sat, k);
        only_keys(need_object(simplices[k], eat), {"id", "dim"}, eat);
        if (as_uint(need(simplices[k], "id", eat), child(eat, "id")) != k)
            throw IoError(child(eat, "id"), "simplex ids must be 0, 1, 2, ... in order");
        const uint64_t d = as_uint(need(simplices[k], "dim", eat), child(eat, "dim"));
        if (d > static_cast<uint64_t>(kMaxDim)) throw IoError(child(eat, "dim"), "dimension too large");
        dims.push_back(static_cast<int>(d));
    }
    size_t expected = 0;
    for (int d : dims) expected += d >= 1 ? d + 1 : 0;
    for (const auto& [key, _] : faces.items()) {
        auto [s, i] = parse_face_key(key, fat);
        if (s >= dims.size()) throw IoError(child(fat, key), "simplex " + std::to_string(s) + " does not exist");
        if (dims[s] == 0 || i > dims[s]) throw IoError(child(fat, key), "simplex " + std::to_string(s) + " has no face " + std::to_string(i));
    }
    if (faces.size() != expected) throw IoError(fat, "expected " + std::to_string(expected) + " faces");
    auto K = std::make_shared<SSet>();
    for (uint32_t s = 0; s < dims.size(); ++s) {
        std::vector<SimplexRef> fs;
        for (int i = 0; dims[s] >= 1 && i <= dims[s]; ++i) {
            const std::string key = face_key(s, i);
            const std::string kat = child(fat, key);
            if (!faces.contains(key)) throw IoError(fat, "missing face '" + key + "'");
            const SimplexRef r = ref_from(faces[key], *K, s, dims[s] - 1, kat);
            fs.push_back(r);
        }
        at_path(child(sat, s), [&] { return K->add(dims[s], std::move(fs)); });
    }
    at_path(at, [&] { K->validate(); return 0; });
    return K;
}

Json image_json(const SMap& f) {
    Json j = Json::object();
    for (uint32_t s = 0; s < f.domain().size(); ++s) j[std::to_string(s)] = ref_json(f.image(s));
    return j;
}

SMap map_from_image(const Json& j, const SSetPtr& L, const SSetPtr& K, const std::string& at) {
    need_object(j, at);
    for (const auto& [key, _] : j.items())
        if (parse_id(key, at) >= L->size()) throw IoError(child(at, key), "simplex " + key + " is not in the domain");
    std::vector<SimplexRef> image;
    for (uint32_t s = 0; s < L->size(); ++s) {
        const std::string key = std::to_string(s);
        if (!j.contains(key)) throw IoError(at, "missing image of simplex " + key);
        image.push_back(ref_from(j[key], *K, static_cast<uint32_t>(K->size()), L->dim(s), child(at, key)));
    }
    return at_path(at, [&] { return SMap(L, K, std::move(image)); });
}

// ---- categories

Json category_json(const FinCat& C) {
    Json j;
    j["objects"] = Json::array();
    for (uint32_t o = 0; o < C.num_objects(); ++o) j["objects"].push_back(C.object_name(o));
    j["morphisms"] = Json::array();
    for (uint32_t m = static_cast<uint32_t>(C.num_objects()); m < C.num_morphisms(); ++m) {
        Json e;
        e["name"] = C.morphism_name(m);
        e["src"] = C.object_name(C.src(m));
        e["tgt"] = C.object_name(C.tgt(m));
        j["morphisms"].push_back(e);
    }
    j["compose"] = Json::array();
    for (uint32_t g = static_cast<uint32_t>(C.num_objects()); g < C.num_morphisms(); ++g)
        for (uint32_t f = static_cast<uint32_t>(C.num_objects()); f < C.num_morphisms(); ++f)
            if (C.tgt(f) == C.src(g))
                j["compose"].push_back(Json::array({C.morphism_name(g), C.morphism_name(f), C.morphism_name(C.compose(g, f))}));
    return j;
}

void require_unique_names(const FinCat& C, const std::string& at) {
    std::map<std::string, int> seen;
    for (uint32_t o = 0; o < C.num_objects(); ++o)
        if (seen[C.object_name(o)]++) throw IoError(at, "duplicate object name '" + C.object_name(o) + "'");
    seen.clear();
    for (uint32_t m = 0; m < C.num_morphisms(); ++m)
        if (seen[C.morphism_name(m)]++) throw IoError(at, "duplicate morphism name '" + C.morphism_name(m) + "'");
}

CatPtr category_from(const Json& j, const std::string& at) {
    only_keys(need_object(j, at), {"objects", "morphisms", "compose"}, at);
    const std::string oat = child(at, "objects");
    const Json& objs = need_array(need(j, "objects", at), oat);
    std::vector<std::string> objects;
    std::map<std::string, uint32_t> obj_id;
    for (size_t k = 0; k < objs.size(); ++k) {
        objects.push_back(as_string(objs[k], child(oat, k)));
        if (!obj_id.emplace(objects.back(), static_cast<uint32_t>(k)).second)
            throw IoError(child(oat, k), "duplicate object '" + objects.back() + "'");
    }
    const std::string mat = child(at, "morphisms");
    const Json& mors = need_array(need(j, "morphisms", at), mat);
    std::vector<FinCat::Arrow> arrows;
    std::map<std::string, uint32_t> mor_id;
    for (uint32_t o = 0; o < objects.size(); ++o) mor_id["1_" + objects[o]] = o;
    auto object = [&](const Json& e, const char* key, const std::string& eat) {
        const std::string name = as_string(need(e, key, eat), child(eat, key));
        auto it = obj_id.find(name);
        if (it == obj_id.end()) throw IoError(child(eat, key), "unknown object '" + name + "'");
        return it->second;
    };
    for (size_t k = 0; k < mors.size(); ++k) {
        const std::string eat = child(mat, k);
        only_keys(need_object(mors[k], eat), {"name", "src", "tgt"}, eat);
        FinCat::Arrow a{object(mors[k], "src", eat), object(mors[k], "tgt", eat),
                        as_string(need(mors[k], "name", eat), child(eat, "name"))};
        if (!mor_id.emplace(a.name, static_cast<uint32_t>(objects.size() + k)).second)
            throw IoError(child(eat, "name"), "duplicate morphism name '" + a.name + "'");
        arrows.push_back(std::move(a));
    }
    const std::string cat_ = child(at, "compose");
    const Json& table = need_array(need(j, "compose", at), cat_);
    std::map<std::pair<uint32_t, uint32_t>, uint32_t> comp;
    for (size_t k = 0; k < table.size(); ++k) {
        const std::string eat = child(cat_, k);
        if (!table[k].is_array() || table[k].size() != 3) throw IoError(eat, "expected [g, f, g o f]");
        uint32_t ids[3];
        for (size_t c = 0; c < 3; ++c) {
            const std::string name = as_string(table[k][c], child(eat, c));
            auto it = mor_id.find(name);
            if (it == mor_id.end()) throw IoError(child(eat, c), "unknown morphism '" + name + "'");
            ids[c] = it->second;
        }
        if (!comp.emplace(std::make_pair(ids[0], ids[1]), ids[2]).second) throw IoError(eat, "composite listed twice");
    }
    FinCat C = at_path(at, [&] {
        return FinCat::make(objects, arrows, [&](uint32_t g, uint32_t f) -> uint32_t {
            auto it = comp.find({g, f});
            if (it == comp.end()) return static_cast<uint32_t>(-1);
            return it->second;
        });
    });
    at_path(at, [&] {
        const CheckReport r = check_fincat(C);
        if (!r.ok) throw std::invalid_argument(r.message);
        return 0;
    });
    return std::make_shared<const FinCat>(std::move(C));
}

Json functor_body(const Functor& f) {
    Json j;
    j["objects"] = Json::object();
    for (uint32_t o = 0; o < f.dom->num_objects(); ++o) j["objects"][f.dom->object_name(o)] = f.cod->object_name(f.obj[o]);
    j["morphisms"] = Json::object();
    for (uint32_t m = static_cast<uint32_t>(f.dom->num_objects()); m < f.dom->num_morphisms(); ++m)
        j["morphisms"][f.dom->morphism_name(m)] = f.cod->morphism_name(f.mor[m]);
    return j;
}

Functor functor_from_body(const Json& j, const CatPtr& J, const CatPtr& I, const std::string& at) {
    const std::string oat = child(at, "objects");
    const Json& objs = need_object(need(j, "objects", at), oat);
    const std::string mat = child(at, "morphisms");
    const Json& mors = need_object(need(j, "morphisms", at), mat);
    Functor f{J, I, std::vector<uint32_t>(J->num_objects()), std::vector<uint32_t>(J->num_morphisms())};
    for (const auto& [key, _] : objs.items())
        if (!J->find_object(key)) throw IoError(child(oat, key), "unknown object '" + key + "' of the domain");
    for (uint32_t o = 0; o < J->num_objects(); ++o) {
        const std::string& name = J->object_name(o);
        if (!objs.contains(name)) throw IoError(oat, "missing image of object '" + name + "'");
        const std::string target = as_string(objs[name], child(oat, name));
        auto t = I->find_object(target);
        if (!t) throw IoError(child(oat, name), "unknown object '" + target + "' of the codomain");
        f.obj[o] = *t;
    }
    for (const auto& [key, _] : mors.items()) {
        auto m = J->find_morphism(key);
        if (!m || J->is_identity(*m)) throw IoError(child(mat, key), "unknown non-identity morphism '" + key + "' of the domain");
    }
    for (uint32_t m = 0; m < J->num_morphisms(); ++m) {
        if (J->is_identity(m)) {
            f.mor[m] = I->identity(f.obj[m]);
            continue;
        }
        const std::string& name = J->morphism_name(m);
        if (!mors.contains(name)) throw IoError(mat, "missing image of morphism '" + name + "'");
        const std::string target = as_string(mors[name], child(mat, name));
        auto t = I->find_morphism(target);
        if (!t) throw IoError(child(mat, name), "unknown morphism '" + target + "' of the codomain");
        f.mor[m] = *t;
    }
    at_path(at, [&] { validate(f); return 0; });
    return f;
}

// ---- chain complexes and maps

Json matrix_json(const Matrix& m) {
    Json flat = Json::array();
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) flat.push_back(m.at(r, c));
    return flat;
}

Matrix matrix_from(const Json& j, size_t rows, size_t cols, const Field& F, const std::string& at) {
    need_array(j, at);
    if (j.size() != rows * cols)
        throw IoError(at, "expected " + std::to_string(rows) + " x " + std::to_string(cols) + " entries in row-major order");
    Matrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) {
            const Json& e = j[r * cols + c];
            if (!e.is_number_integer()) throw IoError(child(at, r * cols + c), "expected an integer");
            const uint32_t v = F.from_int(e.get<long long>());
            if (v) m.set(r, c, v);
        }
    return m;
}

Json complex_json(const ChainComplex& c) {
    Json j;
    j["p"] = c.p();
    j["dims"] = c.dims();
    j["d"] = Json::array();
    for (int n = 1; n <= c.top(); ++n) j["d"].push_back(matrix_json(c.d_ref(n)));
    return j;
}

ChainComplex complex_from(const Json& j, const std::string& at, std::optional<uint32_t> p_expected = std::nullopt) {
    only_keys(need_object(j, at), {"p", "dims", "d"}, at);
    const uint64_t p = as_uint(need(j, "p", at), child(at, "p"));
    if (p > 65521 || !is_prime(static_cast<uint32_t>(p))) throw IoError(child(at, "p"), "p must be a prime");
    if (p_expected && p != *p_expected)
        throw IoError(child(at, "p"), "p = " + std::to_string(p) + " does not match the value category");
    const Field F(static_cast<uint32_t>(p));
    const std::string dat = child(at, "dims");
    const Json& dj = need_array(need(j, "dims", at), dat);
    std::vector<size_t> dims;
    for (size_t k = 0; k < dj.size(); ++k) dims.push_back(as_uint(dj[k], child(dat, k)));
    const std::string mat = child(at, "d");
    const Json& ds = need_array(need(j, "d", at), mat);
    if (ds.size() + 1 != std::max<size_t>(dims.size(), 1) && !(dims.empty() && ds.empty()))
        throw IoError(mat, "expected one differential per positive degree");
    std::vector<Matrix> d;
    for (size_t n = 1; n < dims.size(); ++n) d.push_back(matrix_from(ds[n - 1], dims[n - 1], dims[n], F, child(mat, n - 1)));
    ChainComplex c = at_path(at, [&] { return ChainComplex(F, dims, d); });
    at_path(at, [&] { validate(c); return 0; });
    return c;
}

Json chain_map_json(const ChainMap& f) {
    Json j;
    j["degrees"] = Json::array();
    const int top = std::max(f.source().top(), f.target().top());
    for (int n = 0; n <= top; ++n) j["degrees"].push_back(matrix_json(f.at(n)));
    return j;
}

ChainMap chain_map_from(const Json& j, const ChainComplex& X, const ChainComplex& Y, const std::string& at) {
    only_keys(need_object(j, at), {"degrees"}, at);
    const std::string dat = child(at, "degrees");
    const Json& ds = need_array(need(j, "degrees", at), dat);
    const int top = std::max(X.top(), Y.top());
    if (static_cast<int>(ds.size()) != top + 1) throw IoError(dat, "expected " + std::to_string(top + 1) + " degrees");
    std::vector<Matrix> comps;
    for (int n = 0; n <= top; ++n) comps.push_back(matrix_from(ds[n], Y.dim(n), X.dim(n), X.field(), child(dat, n)));
    ChainMap f = at_path(at, [&] { return ChainMap(X, Y, std::move(comps)); });
    at_path(at, [&] { validate(f); return 0; });
    return f;
}

// ---- value payloads, dispatched on the value category

Json value_json(const ChainComplex& c) { return complex_json(c); }
Json value_json(const SSetPtr& K) { return sset_json(*K); }
Json morphism_json(const ChainMap& f) { return chain_map_json(f); }
Json morphism_json(const SMap& f) {
    Json j;
    j["image"] = image_json(f);
    return j;
}

template <class V>
typename V::Object value_from(const V& v, const Json& j, const std::string& at) {
    if constexpr (std::is_same_v<V, ChainValues>)
        return complex_from(j, at, v.p());
    else
        return sset_from(j, at);
}

template <class V>
typename V::Morphism morphism_from(const V&, const Json& j, const typename V::Object& X, const typename V::Object& Y,
                                   const std::string& at) {
    if constexpr (std::is_same_v<V, ChainValues>) {
        return chain_map_from(j, X, Y, at);
    } else {
        only_keys(need_object(j, at), {"image"}, at);
        return map_from_image(need(j, "image", at), X, Y, child(at, "image"));
    }
}

template <class V>
Json bounded_body(const BoundedDiagram<V>& F) {
    Json j;
    j["values"] = Json::object();
    for (uint32_t s = 0; s < F.value.size(); ++s) j["values"][std::to_string(s)] = value_json(F.value[s]);
    j["faces"] = Json::object();
    for (uint32_t s = 0; s < F.face.size(); ++s)
        for (int i = 0; i < static_cast<int>(F.face[s].size()); ++i) j["faces"][face_key(s, i)] = morphism_json(F.face[s][i]);
    return j;
}

template <class V>
BoundedDiagram<V> bounded_from(const V& v, const Json& j, const SSetPtr& K, const std::string& at) {
    const std::string vat = child(at, "values");
    const Json& values = need_object(need(j, "values", at), vat);
    const std::string fat = child(at, "faces");
    const Json& faces = need_object(need(j, "faces", at), fat);
    for (const auto& [key, _] : values.items())
        if (parse_id(key, vat) >= K->size()) throw IoError(child(vat, key), "simplex " + key + " is not in the base");
    for (const auto& [key, _] : faces.items()) {
        auto [s, i] = parse_face_key(key, fat);
        if (s >= K->size() || K->dim(s) == 0 || i > K->dim(s)) throw IoError(child(fat, key), "no such face in the base");
    }
    BoundedDiagram<V> F{K, {}, std::vector<std::vector<typename V::Morphism>>(K->size())};
    for (uint32_t s = 0; s < K->size(); ++s) {
        const std::string key = std::to_string(s);
        if (!values.contains(key)) throw IoError(vat, "missing value at simplex " + key);
        F.value.push_back(value_from(v, values[key], child(vat, key)));
    }
    for (uint32_t s = 0; s < K->size(); ++s)
        for (int i = 0; K->dim(s) >= 1 && i <= K->dim(s); ++i) {
            const std::string key = face_key(s, i);
            if (!faces.contains(key)) throw IoError(fat, "missing face morphism '" + key + "'");
            F.face[s].push_back(morphism_from(v, faces[key], F.value[K->face(s, i).base], F.value[s], child(fat, key)));
        }
    const CheckReport r = check_bounded(v, F);
    if (!r.ok) throw IoError(at, "not a bounded diagram: " + r.message);
    return F;
}

template <class V>
Json indexed_body(const IndexedDiagram<V>& D) {
    const FinCat& I = *D.cat;
    Json j;
    j["values"] = Json::object();
    for (uint32_t o = 0; o < I.num_objects(); ++o) j["values"][I.object_name(o)] = value_json(D.value[o]);
    j["morphisms"] = Json::object();
    for (uint32_t m = static_cast<uint32_t>(I.num_objects()); m < I.num_morphisms(); ++m)
        j["morphisms"][I.morphism_name(m)] = morphism_json(D.mor[m]);
    return j;
}

template <class V>
IndexedDiagram<V> indexed_from(const V& v, const Json& j, const CatPtr& I, const std::string& at) {
    const std::string vat = child(at, "values");
    const Json& values = need_object(need(j, "values", at), vat);
    const std::string mat = child(at, "morphisms");
    const Json& mors = need_object(need(j, "morphisms", at), mat);
    for (const auto& [key, _] : values.items())
        if (!I->find_object(key)) throw IoError(child(vat, key), "unknown object '" + key + "'");
    for (const auto& [key, _] : mors.items()) {
        auto m = I->find_morphism(key);
        if (!m || I->is_identity(*m)) throw IoError(child(mat, key), "unknown non-identity morphism '" + key + "'");
    }
    IndexedDiagram<V> D{I, {}, {}};
    for (uint32_t o = 0; o < I->num_objects(); ++o) {
        const std::string& name = I->object_name(o);
        if (!values.contains(name)) throw IoError(vat, "missing value at object '" + name + "'");
        D.value.push_back(value_from(v, values[name], child(vat, name)));
    }
    for (uint32_t m = 0; m < I->num_morphisms(); ++m) {
        if (I->is_identity(m)) {
            D.mor.push_back(v.identity(D.value[m]));
            continue;
        }
        const std::string& name = I->morphism_name(m);
        if (!mors.contains(name)) throw IoError(mat, "missing value at morphism '" + name + "'");
        D.mor.push_back(morphism_from(v, mors[name], D.value[I->src(m)], D.value[I->tgt(m)], child(mat, name)));
    }
    const CheckReport r = check_indexed(v, D);
    if (!r.ok) throw IoError(at, "not a functor: " + r.message);
    return D;
}

// ---- workspace assembly

struct Merged {
    Json doc = Json::object();
    std::map<std::string, std::string> origin;  // "section/name" -> file
};

std::string where(const Merged& m, const std::string& section, const std::string& name) {
    auto it = m.origin.find(section + "/" + name);
    return (it == m.origin.end() ? std::string("<input>") : it->second) + ":/" + section + "/" + name;
}

void merge(Merged& m, const Json& doc, const std::string& source) {
    need_object(doc, source);
    if (!doc.contains("version")) throw IoError(source, "missing schema version");
    const Json& ver = doc["version"];
    if (!ver.is_number_integer()) throw IoError(source + ":/version", "expected an integer");
    if (ver.get<long long>() != kVersion)
        throw IoError(source + ":/version", "unsupported schema version " + ver.dump() + " (this build reads version " +
                                                std::to_string(kVersion) + ")");
    for (const auto& [key, section] : doc.items()) {
        if (key == "version") continue;
        if (std::none_of(std::begin(kSections), std::end(kSections), [&](const char* s) { return key == s; }))
            throw IoError(source + ":/" + key, "unknown section");
        need_object(section, source + ":/" + key);
        for (const auto& [name, body] : section.items()) {
            Json& target = m.doc[key];
            if (target.contains(name)) {
                if (target[name] != body)
                    throw IoError(source + ":/" + key + "/" + name, "defined differently in " + m.origin[key + "/" + name]);
                continue;
            }
            target[name] = body;
            m.origin[key + "/" + name] = source;
        }
    }
}

template <class T>
const T& lookup(const std::map<std::string, T>& section, const Json& ref, const char* kind, const std::string& at) {
    const std::string name = as_string(ref, at);
    auto it = section.find(name);
    if (it == section.end()) throw IoError(at, std::string("unknown ") + kind + " '" + name + "'");
    return it->second;
}

Workspace build(const Merged& m) {
    Workspace w;
    const Json& doc = m.doc;
    auto section = [&](const char* key) -> const Json& {
        static const Json empty = Json::object();
        return doc.contains(key) ? doc[key] : empty;
    };
    for (const auto& [name, body] : section("ssets").items()) w.ssets[name] = sset_from(body, where(m, "ssets", name));
    for (const auto& [name, body] : section("categories").items()) {
        const std::string at = where(m, "categories", name);
        w.categories[name] = category_from(body, at);
    }
    for (const auto& [name, body] : section("chain_complexes").items())
        w.chain_complexes.emplace(name, complex_from(body, where(m, "chain_complexes", name)));
    for (const auto& [name, body] : section("maps").items()) {
        const std::string at = where(m, "maps", name);
        only_keys(need_object(body, at), {"from", "to", "image"}, at);
        NamedMap e{as_string(need(body, "from", at), child(at, "from")), as_string(need(body, "to", at), child(at, "to")), {}};
        const SSetPtr& L = lookup(w.ssets, body["from"], "simplicial set", child(at, "from"));
        const SSetPtr& K = lookup(w.ssets, body["to"], "simplicial set", child(at, "to"));
        e.map = map_from_image(need(body, "image", at), L, K, child(at, "image"));
        w.maps.emplace(name, std::move(e));
    }
    for (const auto& [name, body] : section("functors").items()) {
        const std::string at = where(m, "functors", name);
        only_keys(need_object(body, at), {"from", "to", "objects", "morphisms"}, at);
        const CatPtr& J = lookup(w.categories, need(body, "from", at), "category", child(at, "from"));
        const CatPtr& I = lookup(w.categories, need(body, "to", at), "category", child(at, "to"));
        w.functors.emplace(name, NamedFunctor{body["from"].get<std::string>(), body["to"].get<std::string>(), functor_from_body(body, J, I, at)});
    }
    for (const auto& [name, body] : section("cat_diagrams").items()) {
        const std::string at = where(m, "cat_diagrams", name);
        only_keys(need_object(body, at), {"base", "fibers", "transitions"}, at);
        const CatPtr& I = lookup(w.categories, need(body, "base", at), "category", child(at, "base"));
        CatDiagram H{I, {}, {}};
        const std::string fat = child(at, "fibers");
        const Json& fibers = need_object(need(body, "fibers", at), fat);
        for (const auto& [key, _] : fibers.items())
            if (!I->find_object(key)) throw IoError(child(fat, key), "unknown object '" + key + "' of the base");
        for (uint32_t o = 0; o < I->num_objects(); ++o) {
            const std::string& obj = I->object_name(o);
            if (!fibers.contains(obj)) throw IoError(fat, "missing fiber over '" + obj + "'");
            H.fiber.push_back(category_from(fibers[obj], child(fat, obj)));
        }
        const std::string tat = child(at, "transitions");
        const Json& trans = need_object(need(body, "transitions", at), tat);
        for (const auto& [key, _] : trans.items()) {
            auto mm = I->find_morphism(key);
            if (!mm || I->is_identity(*mm)) throw IoError(child(tat, key), "unknown non-identity morphism '" + key + "'");
        }
        for (uint32_t u = 0; u < I->num_morphisms(); ++u) {
            if (I->is_identity(u)) {
                H.transition.push_back(identity_functor(H.fiber[u]));
                continue;
            }
            const std::string& mor = I->morphism_name(u);
            if (!trans.contains(mor)) throw IoError(tat, "missing transition functor for '" + mor + "'");
            const std::string uat = child(tat, mor);
            only_keys(need_object(trans[mor], uat), {"objects", "morphisms"}, uat);
            H.transition.push_back(functor_from_body(trans[mor], H.fiber[I->src(u)], H.fiber[I->tgt(u)], uat));
        }
        at_path(at, [&] { validate(H); return 0; });
        w.cat_diagrams.emplace(name, NamedCatDiagram{body["base"].get<std::string>(), std::move(H)});
    }
    for (const auto& [name, body] : section("bounded_diagrams").items()) {
        const std::string at = where(m, "bounded_diagrams", name);
        only_keys(need_object(body, at), {"base", "value_category", "values", "faces"}, at);
        NamedBounded e;
        e.base = as_string(need(body, "base", at), child(at, "base"));
        const SSetPtr& K = lookup(w.ssets, body["base"], "simplicial set", child(at, "base"));
        e.tag = at_path(child(at, "value_category"), [&] { return parse_tag(as_string(need(body, "value_category", at), child(at, "value_category"))); });
        if (e.tag.chain)
            e.chain = bounded_from(ChainValues(e.tag.p), body, K, at);
        else
            e.sset = bounded_from(SSetValues(e.tag.p), body, K, at);
        w.bounded_diagrams.emplace(name, std::move(e));
    }
    for (const auto& [name, body] : section("indexed_diagrams").items()) {
        const std::string at = where(m, "indexed_diagrams", name);
        only_keys(need_object(body, at), {"category", "value_category", "values", "morphisms"}, at);
        NamedIndexed e;
        e.category = as_string(need(body, "category", at), child(at, "category"));
        const CatPtr& I = lookup(w.categories, body["category"], "category", child(at, "category"));
        e.tag = at_path(child(at, "value_category"), [&] { return parse_tag(as_string(need(body, "value_category", at), child(at, "value_category"))); });
        if (e.tag.chain)
            e.chain = indexed_from(ChainValues(e.tag.p), body, I, at);
        else
            e.sset = indexed_from(SSetValues(e.tag.p), body, I, at);
        w.indexed_diagrams.emplace(name, std::move(e));
    }
    return w;
}

Json parse_text(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError(source, std::string("malformed JSON: ") + e.what());
    }
}

// Trailing degrees absent from a trimmed table are zero.
std::string betti_cells(const std::vector<size_t>& b, size_t degrees) {
    std::string out;
    for (size_t n = 0; n < degrees; ++n) {
        std::string cell = std::to_string(n < b.size() ? b[n] : 0);
        out += std::string(cell.size() < 4 ? 4 - cell.size() : 1, ' ') + cell;
    }
    return out;
}

}  // namespace

ValueTag parse_tag(const std::string& tag) {
    ValueTag t;
    std::string rest;
    if (tag.rfind("chain:f", 0) == 0) {
        rest = tag.substr(7);
    } else if (tag.rfind("sset:f", 0) == 0) {
        t.chain = false;
        rest = tag.substr(6);
    } else {
        throw std::invalid_argument("unknown value category '" + tag + "' (expected chain:f<p> or sset:f<p>)");
    }
    if (rest.empty() || rest.size() > 5 || !std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("unknown value category '" + tag + "'");
    t.p = static_cast<uint32_t>(std::stoul(rest));
    if (!is_prime(t.p)) throw std::invalid_argument("value category '" + tag + "' needs a prime");
    return t;
}

bool Workspace::empty() const {
    return ssets.empty() && maps.empty() && categories.empty() && functors.empty() && cat_diagrams.empty() &&
           chain_complexes.empty() && bounded_diagrams.empty() && indexed_diagrams.empty();
}

Workspace parse(const std::string& text, const std::string& source) {
    Merged m;
    merge(m, parse_text(text, source), source);
    return build(m);
}

Workspace load(const std::vector<std::string>& paths) {
    Merged m;
    for (const auto& path : paths) {
        std::ifstream in(path);
        if (!in) throw IoError(path, "cannot open file");
        std::stringstream buf;
        buf << in.rdbuf();
        merge(m, parse_text(buf.str(), path), path);
    }
    return build(m);
}

Workspace load(const std::string& path) { return load(std::vector<std::string>{path}); }

std::string dump(const Workspace& w) {
    Json doc;
    doc["version"] = kVersion;
    for (const auto& [name, K] : w.ssets) doc["ssets"][name] = sset_json(*K);
    for (const auto& [name, e] : w.maps) {
        Json j;
        j["from"] = e.from;
        j["to"] = e.to;
        j["image"] = image_json(e.map);
        doc["maps"][name] = j;
    }
    for (const auto& [name, C] : w.categories) {
        require_unique_names(*C, "categories/" + name);
        doc["categories"][name] = category_json(*C);
    }
    for (const auto& [name, e] : w.functors) {
        Json j;
        j["from"] = e.from;
        j["to"] = e.to;
        const Json body = functor_body(e.functor);
        for (const auto& [k, v] : body.items()) j[k] = v;
        doc["functors"][name] = j;
    }
    for (const auto& [name, e] : w.cat_diagrams) {
        const FinCat& I = *e.diagram.base;
        Json j;
        j["base"] = e.base;
        j["fibers"] = Json::object();
        for (uint32_t o = 0; o < I.num_objects(); ++o) {
            require_unique_names(*e.diagram.fiber[o], "cat_diagrams/" + name + "/fibers/" + I.object_name(o));
            j["fibers"][I.object_name(o)] = category_json(*e.diagram.fiber[o]);
        }
        j["transitions"] = Json::object();
        for (uint32_t u = static_cast<uint32_t>(I.num_objects()); u < I.num_morphisms(); ++u)
            j["transitions"][I.morphism_name(u)] = functor_body(e.diagram.transition[u]);
        doc["cat_diagrams"][name] = j;
    }
    for (const auto& [name, c] : w.chain_complexes) doc["chain_complexes"][name] = complex_json(c);
    for (const auto& [name, e] : w.bounded_diagrams) {
        Json j;
        j["base"] = e.base;
        j["value_category"] = e.tag.str();
        const Json body = e.chain ? bounded_body(*e.chain) : bounded_body(*e.sset);
        for (const auto& [k, v] : body.items()) j[k] = v;
        doc["bounded_diagrams"][name] = j;
    }
    for (const auto& [name, e] : w.indexed_diagrams) {
        Json j;
        j["category"] = e.category;
        j["value_category"] = e.tag.str();
        const Json body = e.chain ? indexed_body(*e.chain) : indexed_body(*e.sset);
        for (const auto& [k, v] : body.items()) j[k] = v;
        doc["indexed_diagrams"][name] = j;
    }
    // sections in the fixed order, whatever order they were filled in
    Json out;
    out["version"] = kVersion;
    for (const char* s : kSections)
        if (doc.contains(s)) out[s] = doc[s];
    return out.dump(2) + "\n";
}

void save(const Workspace& w, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError(path, "cannot write file");
    out << dump(w);
}

void put(Workspace& w, const std::string& name, const SSetPtr& K) {
    auto it = w.ssets.find(name);
    if (it != w.ssets.end() && !(*it->second == *K)) throw IoError(name, "a different simplicial set has this name");
    w.ssets[name] = K;
}

void put(Workspace& w, const std::string& name, const CatPtr& C) {
    auto it = w.categories.find(name);
    if (it != w.categories.end() && !(*it->second == *C)) throw IoError(name, "a different category has this name");
    w.categories[name] = C;
}

std::string report_json(const Report& r) {
    Json j;
    j["claim"] = r.claim;
    j["citation"] = r.citation;
    j["inputs"] = r.inputs;
    j["betti"] = Json::array();
    for (const auto& [label, b] : r.betti) {
        Json row;
        row["label"] = label;
        row["betti"] = b;
        j["betti"].push_back(row);
    }
    j["verdict"] = r.verdict;
    j["detail"] = r.detail;
    j["ms"] = std::round(r.ms * 1000.0) / 1000.0;
    return j.dump(2) + "\n";
}

std::string report_text(const Report& r) {
    std::ostringstream out;
    out << "claim     " << r.claim << "\n";
    out << "citation  " << r.citation << "\n";
    for (size_t k = 0; k < r.inputs.size(); ++k) out << (k ? "          " : "inputs    ") << r.inputs[k] << "\n";
    if (!r.betti.empty()) {
        size_t width = 5;
        size_t degrees = 1;
        for (const auto& [label, b] : r.betti) {
            width = std::max(width, label.size());
            degrees = std::max(degrees, b.size());
        }
        out << "  " << std::left << std::setw(static_cast<int>(width)) << "betti";
        for (size_t n = 0; n < degrees; ++n) {
            const std::string h = "H" + std::to_string(n);
            out << std::string(h.size() < 4 ? 4 - h.size() : 1, ' ') << h;
        }
        out << "\n";
        for (const auto& [label, b] : r.betti)
            out << "  " << std::left << std::setw(static_cast<int>(width)) << label << betti_cells(b, degrees) << "\n";
    }
    if (!r.detail.empty()) out << "detail    " << r.detail << "\n";
    out << "verdict   " << (r.verdict ? "positive" : "negative") << "\n";
    out << "time      " << std::fixed << std::setprecision(1) << r.ms << " ms\n";
    return out.str();
}

Workspace generate(const GenSpec& g) {
    if (g.max_objects < 1) throw std::invalid_argument("max_objects must be at least 1");
    if (g.max_dim < 0) throw std::invalid_argument("max_dim must be non-negative");
    Rng rng(g.seed);
    Workspace w;
    if (g.family == "poset") {
        put(w, "P", random_poset(rng, rng.range(1, g.max_objects)));
    } else if (g.family == "dag-category") {
        put(w, "C", random_free_category(rng, rng.range(1, g.max_objects)));
    } else if (g.family == "chain-complex") {
        if (!g.tag.chain) throw std::invalid_argument("the chain-complex family needs a chain value category");
        w.chain_complexes["X"] = random_complex(rng, g.tag.p, g.max_dim, g.max_objects).complex;
    } else if (g.family == "bounded-diagram-via-closure") {
        const Presented K = random_presented_sset(rng, g.max_dim, g.max_objects);
        put(w, "K", K.space);
        NamedBounded d{"K", g.tag, std::nullopt, std::nullopt};
        if (g.tag.chain)
            d.chain = random_bounded(rng, ChainValues(g.tag.p), K);
        else
            d.sset = random_bounded(rng, SSetValues(g.tag.p), K);
        w.bounded_diagrams["F"] = std::move(d);
    } else if (g.family == "simplicial-map") {
        const SSetPtr K = random_sset(rng, g.max_dim, g.max_objects);
        Presented L;
        const SMap f = random_smap(rng, K, g.max_dim, g.max_objects, &L);
        put(w, "K", K);
        put(w, "L", L.space);
        w.maps["f"] = {"L", "K", f};
    } else {
        throw std::invalid_argument("unknown family '" + g.family + "'");
    }
    return w;
}

}  // namespace hocolim::io
