#include "sullivan/models.hpp"

#include <numeric>

#include "sullivan/error.hpp"
#include "sullivan/polynomial.hpp"

namespace sullivan {

void GroupData::validate() const
{
    if (rank < 0 || dimension < 0)
        throw Error(ErrorKind::InvalidDegrees, name + ": negative rank or dimension");
    if (static_cast<int>(exterior_degrees.size()) != rank)
        throw Error(ErrorKind::InvalidDegrees, name + ": number of exterior degrees differs from rank");
    for (int d : exterior_degrees)
        if (d < 1 || d % 2 == 0)
            throw Error(ErrorKind::InvalidDegrees, name + ": exterior degree " + std::to_string(d) + " is not odd");
    if (std::accumulate(exterior_degrees.begin(), exterior_degrees.end(), 0) != dimension)
        throw Error(ErrorKind::InvalidDegrees, name + ": exterior degrees do not sum to the dimension");
}

std::vector<Generator> exterior_generators(const GroupData& g, std::string_view prefix)
{
    std::vector<Generator> out;
    for (std::size_t i = 0; i < g.exterior_degrees.size(); ++i)
        out.push_back({std::string(prefix) + std::to_string(i + 1), g.exterior_degrees[i]});
    return out;
}

std::vector<Generator> classifying_generators(const GroupData& g, std::string_view prefix)
{
    std::vector<Generator> out;
    for (std::size_t i = 0; i < g.exterior_degrees.size(); ++i)
        out.push_back({std::string(prefix) + std::to_string(i + 1), g.exterior_degrees[i] + 1});
    return out;
}

RestrictionMap RestrictionMap::parse(const GroupData& source, std::string target, GeneratorsPtr target_variables,
                                     const std::map<std::string, std::string>& assignments)
{
    const auto xs = classifying_generators(source);
    for (const auto& [key, poly] : assignments) {
        bool known = false;
        for (const auto& x : xs)
            known = known || x.name == key;
        if (!known)
            throw Error(ErrorKind::UnknownGenerator,
                        "restriction from " + source.name + " assigns unknown generator '" + key + "'");
    }
    RestrictionMap out{source.name, std::move(target), target_variables, {}};
    for (const auto& x : xs) {
        auto it = assignments.find(x.name);
        out.images.push_back(it == assignments.end() ? AlgebraElement(target_variables)
                                                     : parse_element(target_variables, it->second));
    }
    out.validate(source);
    return out;
}

RestrictionMap RestrictionMap::zero(const GroupData& source, std::string target, GeneratorsPtr target_variables)
{
    return parse(source, std::move(target), std::move(target_variables), {});
}

void RestrictionMap::validate(const GroupData& source_group) const
{
    const auto xs = classifying_generators(source_group);
    if (images.size() != xs.size())
        throw Error(ErrorKind::DegreeMismatch, "restriction from " + source_group.name + " needs " +
                                                   std::to_string(xs.size()) + " images");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!same_generators(images[i].generators(), target_variables))
            throw Error(ErrorKind::UnknownGenerator, "restriction image over foreign generators");
        for (std::size_t j = 0; j < target_variables->size(); ++j)
            if ((*target_variables)[j].odd())
                throw Error(ErrorKind::InvalidDegrees, "restriction target variables must have even degree");
        if (!images[i].is_zero() && images[i].degree() != xs[i].degree)
            throw Error(ErrorKind::DegreeMismatch, "image of " + xs[i].name + " under " + source + " -> " +
                                                       target + " must have degree " +
                                                       std::to_string(xs[i].degree) + ", got '" +
                                                       images[i].to_string() + "'");
    }
}

std::map<std::string, std::string> RestrictionMap::assignments() const
{
    std::map<std::string, std::string> out;
    for (std::size_t i = 0; i < images.size(); ++i)
        out.emplace("x" + std::to_string(i + 1), images[i].to_string());
    return out;
}

namespace {

std::vector<AlgebraElement> identity_images(const GeneratorsPtr& source, const GeneratorsPtr& target)
{
    std::vector<AlgebraElement> out;
    for (const auto& g : source->list())
        out.push_back(AlgebraElement::generator(target, g.name));
    return out;
}

void check_restriction_target(const GroupData& h, const RestrictionMap& map)
{
    const auto us = classifying_generators(h, "u");
    if (!(*map.target_variables == GeneratorSet(us)))
        throw Error(ErrorKind::UnknownGenerator, "restriction into " + h.name + " must be written over u1..u" +
                                                     std::to_string(us.size()));
}

}  // namespace

SullivanAlgebra lie_group_model(const GroupData& g, std::optional<int> cutoff)
{
    g.validate();
    auto gens = make_generators(exterior_generators(g));
    return SullivanAlgebra(gens, {}, cutoff.value_or(g.dimension));
}

SullivanAlgebra classifying_space_model(const GroupData& g, int cutoff, std::string_view prefix)
{
    g.validate();
    return SullivanAlgebra(make_generators(classifying_generators(g, prefix)), {}, cutoff);
}

SullivanAlgebra biquotient_model(const GroupData& g, const GroupData& h, const RestrictionMap& left,
                                 const RestrictionMap& right, std::optional<int> cutoff)
{
    g.validate();
    h.validate();
    left.validate(g);
    right.validate(g);
    check_restriction_target(h, left);
    check_restriction_target(h, right);
    const int c = cutoff.value_or(g.dimension - h.dimension);
    if (c < 0)
        throw Error(ErrorKind::CutoffExceeded, "cutoff must be non-negative");

    std::vector<Generator> list = classifying_generators(h, "u");
    for (auto& q : exterior_generators(g))
        list.push_back(std::move(q));
    auto gens = make_generators(std::move(list));
    const auto to_model = identity_images(left.target_variables, gens);

    std::vector<AlgebraElement> d;
    for (std::size_t j = 0; j < static_cast<std::size_t>(h.rank); ++j)
        d.emplace_back(gens);
    for (std::size_t i = 0; i < static_cast<std::size_t>(g.rank); ++i)
        d.push_back(substitute(left.images[i], gens, to_model) - substitute(right.images[i], gens, to_model));
    return SullivanAlgebra(gens, std::move(d), c);
}

SullivanAlgebra homogeneous_model(const GroupData& g, const GroupData& h, const RestrictionMap& restriction,
                                  std::optional<int> cutoff)
{
    return biquotient_model(g, h, restriction,
                            RestrictionMap::zero(g, restriction.target, restriction.target_variables), cutoff);
}

namespace {

CdgaMorphism classifying_inclusion(const GroupData& h, const SullivanAlgebra& target)
{
    SullivanAlgebra borel(make_generators(classifying_generators(h, "u")), {}, target.cutoff());
    auto images = identity_images(borel.generators(), target.generators());
    return CdgaMorphism(std::move(borel), target, std::move(images));
}

}  // namespace

CdgaMorphism borel_model_homogeneous(const GroupData& g, const GroupData& h, const RestrictionMap& restriction,
                                     std::optional<int> cutoff)
{
    return classifying_inclusion(h, homogeneous_model(g, h, restriction, cutoff));
}

CdgaMorphism borel_model_biquotient(const GroupData& g, const GroupData& h, const RestrictionMap& left,
                                    const RestrictionMap& right, std::optional<int> cutoff)
{
    return classifying_inclusion(h, biquotient_model(g, h, left, right, cutoff));
}

GeneratorsPtr GroupDiagram::fibre_variables(const GroupData& h, int sphere_dim)
{
    auto list = classifying_generators(h, "u");
    list.push_back({"e", sphere_dim + 1});
    return make_generators(std::move(list));
}

void GroupDiagram::validate() const
{
    for (const GroupData* g : {&G, &H, &Kminus, &Kplus}) {
        g->validate();
        if (!g->flags.connected)
            throw Error(ErrorKind::DisconnectedGroup, g->name + " is not connected");
    }
    for (auto [k, l, side] : {std::tuple{&Kminus, sphere_minus, "K-"}, std::tuple{&Kplus, sphere_plus, "K+"}}) {
        if (l != k->dimension - H.dimension)
            throw Error(ErrorKind::InvalidDiagram, std::string(side) + "/H has dimension " +
                                                       std::to_string(k->dimension - H.dimension) +
                                                       " but the sphere dimension is " + std::to_string(l));
        if (l % 2 == 0)
            throw Error(ErrorKind::EvenSphere, std::string(side) + "/H is an even sphere S^" + std::to_string(l));
        if (k->rank != H.rank + 1)
            throw Error(ErrorKind::InvalidDiagram,
                        std::string(side) + " must have rank rk H + 1 for an odd fibre sphere");
    }
    to_minus.validate(G);
    to_plus.validate(G);
    if (!(*to_minus.target_variables == *fibre_variables(H, sphere_minus)) ||
        !(*to_plus.target_variables == *fibre_variables(H, sphere_plus)))
        throw Error(ErrorKind::UnknownGenerator, "restrictions into K+- must be written over u1.., e");
    const RestrictionMap rho = to_principal();
    // Both sides must restrict to the same map into H*(BH).
    const auto u = classifying_generators(H, "u");
    auto hvars = make_generators(u);
    for (std::size_t i = 0; i < to_minus.images.size(); ++i) {
        std::vector<AlgebraElement> kill;
        for (const auto& g : u)
            kill.push_back(AlgebraElement::generator(hvars, g.name));
        kill.emplace_back(hvars);
        if (!(substitute(to_minus.images[i], hvars, kill) == rho.images[i]))
            throw Error(ErrorKind::InvalidDiagram, "restrictions through K- and K+ disagree on H for x" +
                                                       std::to_string(i + 1));
    }
}

RestrictionMap GroupDiagram::to_principal() const
{
    auto hvars = make_generators(classifying_generators(H, "u"));
    std::vector<AlgebraElement> kill;
    for (const auto& g : hvars->list())
        kill.push_back(AlgebraElement::generator(hvars, g.name));
    kill.emplace_back(hvars);
    RestrictionMap out{G.name, H.name, hvars, {}};
    for (const auto& img : to_plus.images)
        out.images.push_back(substitute(img, hvars, kill));
    return out;
}

namespace {

GeneratorsPtr borel_generators(const GroupDiagram& d)
{
    auto list = classifying_generators(d.H, "u");
    list.push_back({"e_plus", d.sphere_plus + 1});
    list.push_back({"e_minus", d.sphere_minus + 1});
    list.push_back({"n", d.sphere_plus + d.sphere_minus + 1});
    return make_generators(std::move(list));
}

}  // namespace

SullivanAlgebra cohomogeneity_one_model(const GroupDiagram& d, std::optional<int> cutoff)
{
    d.validate();
    const int c = cutoff.value_or(d.G.dimension - d.H.dimension + 1);
    if (c < 0)
        throw Error(ErrorKind::CutoffExceeded, "cutoff must be non-negative");

    auto list = classifying_generators(d.H, "u");
    list.push_back({"e_plus", d.sphere_plus + 1});
    list.push_back({"e_minus", d.sphere_minus + 1});
    for (auto& q : exterior_generators(d.G))
        list.push_back(std::move(q));
    list.push_back({"n", d.sphere_plus + d.sphere_minus + 1});
    auto gens = make_generators(std::move(list));

    std::vector<AlgebraElement> hpart;
    for (const auto& u : classifying_generators(d.H, "u"))
        hpart.push_back(AlgebraElement::generator(gens, u.name));
    auto with_e = [&](std::string_view e) {
        auto v = hpart;
        v.push_back(e.empty() ? AlgebraElement(gens) : AlgebraElement::generator(gens, e));
        return v;
    };
    const auto plus = with_e("e_plus");
    const auto minus = with_e("e_minus");
    const auto principal = with_e("");

    std::vector<AlgebraElement> diff;
    for (std::size_t j = 0; j < hpart.size() + 2; ++j)
        diff.emplace_back(gens);
    // The pair (phi+(x), phi-(x)) in the fibre product over H*(BH) corresponds to
    // phi+(x) + phi-(x) - rho(x) in H*(BH)[e+, e-]/(e+ e-).
    for (std::size_t i = 0; i < d.to_plus.images.size(); ++i) {
        diff.push_back(substitute(d.to_plus.images[i], gens, plus) +
                       substitute(d.to_minus.images[i], gens, minus) -
                       substitute(d.to_plus.images[i], gens, principal));
    }
    diff.push_back(AlgebraElement::generator(gens, "e_plus") * AlgebraElement::generator(gens, "e_minus"));
    return SullivanAlgebra(gens, std::move(diff), c);
}

CdgaMorphism borel_model_cohomogeneity_one(const GroupDiagram& d, std::optional<int> cutoff)
{
    SullivanAlgebra total = cohomogeneity_one_model(d, cutoff);
    auto gens = borel_generators(d);
    std::vector<AlgebraElement> diff;
    for (std::size_t j = 0; j + 1 < gens->size(); ++j)
        diff.emplace_back(gens);
    diff.push_back(AlgebraElement::generator(gens, "e_plus") * AlgebraElement::generator(gens, "e_minus"));
    SullivanAlgebra borel(gens, std::move(diff), total.cutoff());
    auto images = identity_images(gens, total.generators());
    return CdgaMorphism(std::move(borel), std::move(total), std::move(images));
}

SullivanAlgebra almost_free_quotient_model(const SullivanAlgebra& x, const GroupData& g,
                                           const std::map<std::string, std::string>& action,
                                           std::optional<int> cutoff, std::string_view prefix)
{
    g.validate();
    std::vector<Generator> list = classifying_generators(g, prefix);
    for (const auto& v : x.generators()->list())
        list.push_back(v);
    auto gens = make_generators(std::move(list));

    for (const auto& [name, poly] : action)
        if (!x.generators()->find(name))
            throw Error(ErrorKind::UnknownGenerator, "action assigns unknown generator '" + name + "'");

    std::vector<AlgebraElement> diff;
    for (int j = 0; j < g.rank; ++j)
        diff.emplace_back(gens);
    for (std::size_t i = 0; i < x.generator_count(); ++i) {
        auto it = action.find(x.generator(i).name);
        diff.push_back(it != action.end() ? parse_element(gens, it->second) : x.differential(i).transport(gens));
    }
    SullivanAlgebra out(gens, std::move(diff), cutoff.value_or(x.cutoff()));
    if (!verify_d_squared(out))
        throw Error(ErrorKind::InvalidDifferential, "the extended differential does not square to zero");
    return out;
}

}  // namespace sullivan
