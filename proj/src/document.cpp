#include "sullivan/document.hpp"

#include <algorithm>

#include "sullivan/catalog.hpp"
#include "sullivan/error.hpp"
#include "sullivan/polynomial.hpp"

namespace sullivan {

std::string_view to_string(DocumentKind k)
{
    switch (k) {
    case DocumentKind::Homogeneous: return "homogeneous";
    case DocumentKind::Biquotient: return "biquotient";
    case DocumentKind::CohomogeneityOne: return "cohomogeneity_one";
    case DocumentKind::Model: return "model";
    case DocumentKind::AlmostFree: return "almost_free";
    }
    return "model";
}

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed document: ") + e.what());
    }
}

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what)
{
    throw Error(ErrorKind::SchemaError, (path.empty() ? "/" : path) + ": " + what);
}

// Runs f, prefixing any library error with the document path.
template <class F>
auto at_path(const std::string& path, F&& f)
{
    try {
        return f();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::SchemaError)
            throw;
        throw Error(e.kind(), (path.empty() ? "/" : path) + ": " + e.message());
    }
}

const Json& require(const Json& obj, const std::string& key, const std::string& path)
{
    if (!obj.is_object())
        schema(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        schema(path + "/" + key, "missing");
    return *it;
}

const Json* optional_field(const Json& obj, const std::string& key)
{
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

int as_int(const Json& j, const std::string& path)
{
    if (!j.is_number_integer())
        schema(path, "expected an integer");
    return j.get<int>();
}

std::string as_string(const Json& j, const std::string& path)
{
    if (!j.is_string())
        schema(path, "expected a string");
    return j.get<std::string>();
}

bool as_bool(const Json& j, const std::string& path)
{
    if (!j.is_boolean())
        schema(path, "expected a boolean");
    return j.get<bool>();
}

void only_keys(const Json& obj, std::initializer_list<std::string_view> keys, const std::string& path)
{
    for (const auto& [k, v] : obj.items())
        if (std::find(keys.begin(), keys.end(), k) == keys.end())
            schema(path + "/" + k, "unknown key");
}

std::map<std::string, std::string> string_map(const Json& j, const std::string& path)
{
    if (!j.is_object())
        schema(path, "expected an object of generator -> polynomial strings");
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : j.items())
        out[k] = as_string(v, path + "/" + k);
    return out;
}

std::optional<int> cutoff_field(const Json& doc, const std::string& path)
{
    const Json* c = optional_field(doc, "cutoff");
    if (!c)
        return std::nullopt;
    const int n = as_int(*c, path + "/cutoff");
    if (n < 0)
        schema(path + "/cutoff", "must be non-negative");
    return n;
}

GroupData load_group(const Json& j, const std::string& path)
{
    if (j.is_string())
        return at_path(path, [&] { return catalog_group(j.get<std::string>()); });
    if (!j.is_object())
        schema(path, "expected a catalog name or a group object");
    only_keys(j, {"name", "rank", "dim", "degrees", "flags"}, path);
    GroupData g;
    g.name = as_string(require(j, "name", path), path + "/name");
    const Json& degrees = require(j, "degrees", path);
    if (!degrees.is_array())
        schema(path + "/degrees", "expected an array");
    for (std::size_t i = 0; i < degrees.size(); ++i)
        g.exterior_degrees.push_back(as_int(degrees[i], path + "/degrees/" + std::to_string(i)));
    g.rank = static_cast<int>(g.exterior_degrees.size());
    if (const Json* r = optional_field(j, "rank"))
        g.rank = as_int(*r, path + "/rank");
    for (int d : g.exterior_degrees)
        g.dimension += d;
    if (const Json* d = optional_field(j, "dim"))
        g.dimension = as_int(*d, path + "/dim");
    if (const Json* f = optional_field(j, "flags")) {
        const std::string fp = path + "/flags";
        if (!f->is_object())
            schema(fp, "expected an object");
        only_keys(*f, {"connected", "pi1_torsion_free", "steinberg"}, fp);
        if (const Json* b = optional_field(*f, "connected"))
            g.flags.connected = as_bool(*b, fp + "/connected");
        if (const Json* b = optional_field(*f, "pi1_torsion_free"))
            g.flags.pi1_torsion_free = as_bool(*b, fp + "/pi1_torsion_free");
        if (const Json* b = optional_field(*f, "steinberg"))
            g.flags.steinberg = as_bool(*b, fp + "/steinberg");
    }
    at_path(path, [&] {
        g.validate();
        return 0;
    });
    return g;
}

// Assignments of an embedding entry; catalog references are checked against the groups.
std::map<std::string, std::string> embedding_map(const Json& j, const GroupData& g, const GroupData& target,
                                                 const std::string& path, bool* from_catalog = nullptr)
{
    if (from_catalog)
        *from_catalog = j.is_string();
    if (j.is_string()) {
        const CatalogEmbedding e = at_path(path, [&] { return catalog_embedding(j.get<std::string>()); });
        if (e.source != g.name)
            schema(path, "catalog embedding '" + e.name + "' starts at " + e.source + ", not " + g.name);
        if (e.target != target.name)
            schema(path, "catalog embedding '" + e.name + "' ends at " + e.target + ", not " + target.name);
        return e.map;
    }
    if (!j.is_object())
        schema(path, "expected a catalog embedding name or an object with a map");
    only_keys(j, {"source", "target", "map"}, path);
    return string_map(require(j, "map", path), path + "/map");
}

RestrictionMap load_restriction(const Json& j, const GroupData& g, const GroupData& h, const std::string& path)
{
    const auto map = embedding_map(j, g, h, path);
    auto vars = make_generators(classifying_generators(h, "u"));
    return at_path(path + "/map", [&] { return RestrictionMap::parse(g, h.name, vars, map); });
}

// K+- restriction over u1.., e. A catalog embedding is written over K's own variables; those
// are read in order as u1.., e.
RestrictionMap load_isotropy_restriction(const Json& j, const GroupData& g, const GroupData& h, const GroupData& k,
                                         int sphere_dim, const std::string& path)
{
    bool from_catalog = false;
    const auto map = embedding_map(j, g, k, path, &from_catalog);
    auto fibre = GroupDiagram::fibre_variables(h, sphere_dim);
    if (!from_catalog)
        return at_path(path + "/map", [&] { return RestrictionMap::parse(g, k.name, fibre, map); });
    auto own = make_generators(classifying_generators(k, "u"));
    if (own->size() != fibre->size())
        throw Error(ErrorKind::InvalidDiagram, path + ": " + k.name + " must have rank rk H + 1");
    std::vector<AlgebraElement> images;
    for (std::size_t i = 0; i < own->size(); ++i) {
        if ((*own)[i].degree != (*fibre)[i].degree)
            throw Error(ErrorKind::DegreeMismatch, path + ": variable " + (*own)[i].name + " of " + k.name +
                                                       " does not match " + (*fibre)[i].name + " of H*(BH)[e]");
        images.push_back(AlgebraElement::generator(fibre, i));
    }
    RestrictionMap base = at_path(path + "/map", [&] { return RestrictionMap::parse(g, k.name, own, map); });
    RestrictionMap out{g.name, k.name, fibre, {}};
    for (const auto& img : base.images)
        out.images.push_back(substitute(img, fibre, images));
    return out;
}

Json restriction_to_json(const RestrictionMap& r)
{
    // zero images are implied by omission
    Json map = Json::object();
    for (std::size_t i = 0; i < r.images.size(); ++i)
        if (!r.images[i].is_zero())
            map["x" + std::to_string(i + 1)] = r.images[i].to_string();
    return Json{{"source", r.source}, {"target", r.target}, {"map", map}};
}

const Json& body(const Json& doc)
{
    if (!doc.is_object())
        schema("", "expected an object");
    return doc;
}

DocumentKind load_kind(const Json& doc)
{
    const std::string k = as_string(require(body(doc), "kind", ""), "/kind");
    for (DocumentKind kind : {DocumentKind::Homogeneous, DocumentKind::Biquotient, DocumentKind::CohomogeneityOne,
                              DocumentKind::Model, DocumentKind::AlmostFree})
        if (to_string(kind) == k)
            return kind;
    schema("/kind", "unknown kind '" + k + "'");
}

}  // namespace

std::optional<int> default_model_cutoff(const SullivanAlgebra& a)
{
    if (!is_pure(a))
        return std::nullopt;
    int fdim = 0;
    int window = 0;
    for (const auto& g : a.generators()->list()) {
        fdim += g.odd() ? g.degree : -(g.degree - 1);
        window = std::max(window, g.degree);
    }
    return std::max(fdim, 0) + window;
}

Json group_to_json(const GroupData& g)
{
    return Json{{"name", g.name},
                {"rank", g.rank},
                {"dim", g.dimension},
                {"degrees", g.exterior_degrees},
                {"flags",
                 {{"connected", g.flags.connected},
                  {"pi1_torsion_free", g.flags.pi1_torsion_free},
                  {"steinberg", g.flags.steinberg}}}};
}

Json algebra_to_json(const SullivanAlgebra& a)
{
    Json gens = Json::array();
    Json diff = Json::object();
    for (std::size_t i = 0; i < a.generator_count(); ++i) {
        gens.push_back(Json{{"name", a.generator(i).name}, {"degree", a.generator(i).degree}});
        if (!a.differential(i).is_zero())
            diff[a.generator(i).name] = a.differential(i).to_string();
    }
    return Json{{"generators", gens}, {"differential", diff}, {"cutoff", a.cutoff()}};
}

SullivanAlgebra algebra_from_json(const Json& j, const std::string& path)
{
    if (!j.is_object())
        schema(path, "expected a model object");
    only_keys(j, {"kind", "generators", "differential", "cutoff"}, path);
    const Json& gl = require(j, "generators", path);
    if (!gl.is_array())
        schema(path + "/generators", "expected an array");
    std::vector<Generator> list;
    for (std::size_t i = 0; i < gl.size(); ++i) {
        const std::string gp = path + "/generators/" + std::to_string(i);
        only_keys(gl[i], {"name", "degree"}, gp);
        list.push_back({as_string(require(gl[i], "name", gp), gp + "/name"),
                        as_int(require(gl[i], "degree", gp), gp + "/degree")});
    }
    auto gens = at_path(path + "/generators", [&] { return make_generators(list); });
    std::vector<AlgebraElement> diff(gens->size(), AlgebraElement(gens));
    if (const Json* d = optional_field(j, "differential")) {
        for (const auto& [name, poly] : string_map(*d, path + "/differential")) {
            const std::string dp = path + "/differential/" + name;
            const std::size_t i = at_path(dp, [&] { return gens->index_of(name); });
            diff[i] = at_path(dp, [&] { return parse_element(gens, poly); });
        }
    }
    std::optional<int> cutoff = cutoff_field(j, path);
    SullivanAlgebra probe = at_path(path, [&] { return SullivanAlgebra(gens, diff, 0); });
    if (!cutoff)
        cutoff = default_model_cutoff(probe);
    if (!cutoff)
        schema(path + "/cutoff", "required for models that are not pure");
    return probe.with_cutoff(*cutoff);
}

Document load_document(const Json& doc)
{
    Document out;
    out.kind = load_kind(doc);
    out.cutoff = cutoff_field(doc, "");
    switch (out.kind) {
    case DocumentKind::Homogeneous: {
        only_keys(doc, {"kind", "G", "H", "embedding", "cutoff"}, "");
        GroupData g = load_group(require(doc, "G", ""), "/G");
        GroupData h = load_group(require(doc, "H", ""), "/H");
        RestrictionMap r = load_restriction(require(doc, "embedding", ""), g, h, "/embedding");
        out.homogeneous = HomogeneousInput{std::move(g), std::move(h), std::move(r)};
        break;
    }
    case DocumentKind::Biquotient: {
        only_keys(doc, {"kind", "G", "H", "left", "right", "cutoff"}, "");
        GroupData g = load_group(require(doc, "G", ""), "/G");
        GroupData h = load_group(require(doc, "H", ""), "/H");
        RestrictionMap l = load_restriction(require(doc, "left", ""), g, h, "/left");
        RestrictionMap r = load_restriction(require(doc, "right", ""), g, h, "/right");
        out.biquotient = BiquotientInput{std::move(g), std::move(h), std::move(l), std::move(r)};
        break;
    }
    case DocumentKind::CohomogeneityOne:
        out.diagram = load_diagram(doc);
        break;
    case DocumentKind::Model:
        out.model = algebra_from_json(doc, "");
        out.cutoff = out.model->cutoff();
        break;
    case DocumentKind::AlmostFree: {
        only_keys(doc, {"kind", "space", "G", "action", "cutoff"}, "");
        SullivanAlgebra space = algebra_from_json(require(doc, "space", ""), "/space");
        GroupData g = load_group(require(doc, "G", ""), "/G");
        std::map<std::string, std::string> action;
        if (const Json* a = optional_field(doc, "action"))
            action = string_map(*a, "/action");
        // validate the action now so errors carry the document path
        at_path("/action", [&] { return almost_free_quotient_model(space, g, action, out.cutoff).cutoff(); });
        out.almost_free = AlmostFreeInput{std::move(space), std::move(g), std::move(action)};
        break;
    }
    }
    return out;
}

GroupDiagram load_diagram(const Json& doc)
{
    if (load_kind(doc) != DocumentKind::CohomogeneityOne)
        schema("/kind", "expected a cohomogeneity_one document");
    only_keys(doc, {"kind", "G", "H", "Kminus", "Kplus", "embeddings", "sphere_dims", "cutoff"}, "");
    GroupDiagram d;
    d.G = load_group(require(doc, "G", ""), "/G");
    d.H = load_group(require(doc, "H", ""), "/H");
    d.Kminus = load_group(require(doc, "Kminus", ""), "/Kminus");
    d.Kplus = load_group(require(doc, "Kplus", ""), "/Kplus");
    d.sphere_minus = d.Kminus.dimension - d.H.dimension;
    d.sphere_plus = d.Kplus.dimension - d.H.dimension;
    if (const Json* s = optional_field(doc, "sphere_dims")) {
        if (!s->is_array() || s->size() != 2)
            schema("/sphere_dims", "expected [l-, l+]");
        d.sphere_minus = as_int((*s)[0], "/sphere_dims/0");
        d.sphere_plus = as_int((*s)[1], "/sphere_dims/1");
    }
    for (const GroupData* g : {&d.G, &d.H, &d.Kminus, &d.Kplus})
        if (!g->flags.connected)
            throw Error(ErrorKind::DisconnectedGroup, g->name + " is not connected");
    for (int l : {d.sphere_minus, d.sphere_plus}) {
        if (l < 1)
            schema("/sphere_dims", "sphere dimensions must be positive");
        if (l % 2 == 0)
            throw Error(ErrorKind::EvenSphere, "/sphere_dims: K/H is an even sphere S^" + std::to_string(l));
    }
    const Json& emb = require(doc, "embeddings", "");
    only_keys(emb, {"Kminus", "Kplus"}, "/embeddings");
    d.to_minus = load_isotropy_restriction(require(emb, "Kminus", "/embeddings"), d.G, d.H, d.Kminus,
                                           d.sphere_minus, "/embeddings/Kminus");
    d.to_plus = load_isotropy_restriction(require(emb, "Kplus", "/embeddings"), d.G, d.H, d.Kplus, d.sphere_plus,
                                          "/embeddings/Kplus");
    d.validate();
    return d;
}

Json serialize(const Document& doc)
{
    Json out{{"kind", to_string(doc.kind)}};
    switch (doc.kind) {
    case DocumentKind::Homogeneous:
        out["G"] = group_to_json(doc.homogeneous->G);
        out["H"] = group_to_json(doc.homogeneous->H);
        out["embedding"] = restriction_to_json(doc.homogeneous->restriction);
        break;
    case DocumentKind::Biquotient:
        out["G"] = group_to_json(doc.biquotient->G);
        out["H"] = group_to_json(doc.biquotient->H);
        out["left"] = restriction_to_json(doc.biquotient->left);
        out["right"] = restriction_to_json(doc.biquotient->right);
        break;
    case DocumentKind::CohomogeneityOne: {
        const GroupDiagram& d = *doc.diagram;
        out["G"] = group_to_json(d.G);
        out["H"] = group_to_json(d.H);
        out["Kminus"] = group_to_json(d.Kminus);
        out["Kplus"] = group_to_json(d.Kplus);
        out["embeddings"] = Json{{"Kminus", restriction_to_json(d.to_minus)}, {"Kplus", restriction_to_json(d.to_plus)}};
        out["sphere_dims"] = Json::array({d.sphere_minus, d.sphere_plus});
        break;
    }
    case DocumentKind::Model: {
        const Json m = algebra_to_json(*doc.model);
        out["generators"] = m["generators"];
        out["differential"] = m["differential"];
        break;
    }
    case DocumentKind::AlmostFree: {
        out["space"] = algebra_to_json(doc.almost_free->space);
        out["G"] = group_to_json(doc.almost_free->G);
        Json action = Json::object();
        for (const auto& [k, v] : doc.almost_free->action)
            action[k] = parse_element(make_generators([&] {
                                          auto l = classifying_generators(doc.almost_free->G, "u");
                                          for (const auto& g : doc.almost_free->space.generators()->list())
                                              l.push_back(g);
                                          return l;
                                      }()),
                                      v)
                            .to_string();
        out["action"] = action;
        break;
    }
    }
    if (doc.cutoff)
        out["cutoff"] = *doc.cutoff;
    return out;
}

Json normalize_document(const Json& doc)
{
    const DocumentKind kind = load_kind(doc);
    Json out{{"kind", to_string(kind)}};
    auto poly_map = [](const std::map<std::string, std::string>& m, const GeneratorsPtr& vars) {
        Json j = Json::object();
        for (const auto& [k, v] : m) {
            const AlgebraElement e = parse_element(vars, v);
            if (!e.is_zero())
                j[k] = e.to_string();
        }
        return j;
    };
    auto embedding = [&](const Json& e, const GroupData& g, const GroupData& h, const std::string& path) {
        auto vars = make_generators(classifying_generators(h, "u"));
        return Json{{"source", g.name}, {"target", h.name}, {"map", poly_map(embedding_map(e, g, h, path), vars)}};
    };
    switch (kind) {
    case DocumentKind::Homogeneous:
    case DocumentKind::Biquotient: {
        const GroupData g = load_group(require(doc, "G", ""), "/G");
        const GroupData h = load_group(require(doc, "H", ""), "/H");
        out["G"] = group_to_json(g);
        out["H"] = group_to_json(h);
        for (const char* key : {"embedding", "left", "right"})
            if (const Json* e = optional_field(doc, key))
                out[key] = embedding(*e, g, h, std::string("/") + key);
        break;
    }
    case DocumentKind::CohomogeneityOne: {
        const GroupData g = load_group(require(doc, "G", ""), "/G");
        const GroupData h = load_group(require(doc, "H", ""), "/H");
        const GroupData km = load_group(require(doc, "Kminus", ""), "/Kminus");
        const GroupData kp = load_group(require(doc, "Kplus", ""), "/Kplus");
        Json dims = Json::array({km.dimension - h.dimension, kp.dimension - h.dimension});
        if (const Json* s = optional_field(doc, "sphere_dims"))
            dims = *s;
        out["G"] = group_to_json(g);
        out["H"] = group_to_json(h);
        out["Kminus"] = group_to_json(km);
        out["Kplus"] = group_to_json(kp);
        Json emb = Json::object();
        const Json& src = require(doc, "embeddings", "");
        for (const auto& [key, k, l] : {std::tuple{"Kminus", &km, dims[0].get<int>()},
                                        std::tuple{"Kplus", &kp, dims[1].get<int>()}}) {
            const Json& e = require(src, key, "/embeddings");
            auto fibre = GroupDiagram::fibre_variables(h, l);
            Json map;
            if (e.is_string()) {
                // catalog variables u1..u_r read as u1.., e
                auto m = embedding_map(e, g, *k, std::string("/embeddings/") + key);
                auto own = make_generators(classifying_generators(*k, "u"));
                std::vector<AlgebraElement> images;
                for (std::size_t i = 0; i < own->size(); ++i)
                    images.push_back(AlgebraElement::generator(fibre, i));
                map = Json::object();
                for (const auto& [x, p] : m) {
                    const AlgebraElement img = substitute(parse_element(own, p), fibre, images);
                    if (!img.is_zero())
                        map[x] = img.to_string();
                }
            } else {
                map = poly_map(embedding_map(e, g, *k, std::string("/embeddings/") + key), fibre);
            }
            emb[key] = Json{{"source", g.name}, {"target", k->name}, {"map", map}};
        }
        out["embeddings"] = emb;
        out["sphere_dims"] = dims;
        break;
    }
    case DocumentKind::Model: {
        const Json m = algebra_to_json(algebra_from_json(doc, ""));
        out["generators"] = m["generators"];
        out["differential"] = m["differential"];
        out["cutoff"] = m["cutoff"];
        return out;
    }
    case DocumentKind::AlmostFree: {
        const SullivanAlgebra space = algebra_from_json(require(doc, "space", ""), "/space");
        const GroupData g = load_group(require(doc, "G", ""), "/G");
        out["space"] = algebra_to_json(space);
        out["G"] = group_to_json(g);
        auto list = classifying_generators(g, "u");
        for (const auto& v : space.generators()->list())
            list.push_back(v);
        auto vars = make_generators(list);
        Json action = Json::object();
        if (const Json* a = optional_field(doc, "action"))
            for (const auto& [k, v] : string_map(*a, "/action"))
                action[k] = parse_element(vars, v).to_string();
        out["action"] = action;
        break;
    }
    }
    if (auto c = cutoff_field(doc, ""))
        out["cutoff"] = *c;
    return out;
}

}  // namespace sullivan
