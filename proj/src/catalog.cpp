#include "sullivan/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "sullivan/error.hpp"

namespace sullivan {

namespace {

std::string strip(std::string_view s)
{
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

int to_int(std::string_view s)
{
    if (!all_digits(s) || s.size() > 4)
        throw Error(ErrorKind::UnknownCatalogName, "bad number '" + std::string(s) + "'");
    return std::stoi(std::string(s));
}

[[noreturn]] void unknown(std::string_view name)
{
    throw Error(ErrorKind::UnknownCatalogName, "no catalog group named '" + std::string(name) + "'");
}

// "SU(3)", "SU3" -> {"SU", 3}; "G2" is not split.
std::optional<std::pair<std::string, int>> family(std::string_view s)
{
    for (std::string_view f : {"SU", "Sp", "SO"}) {
        if (s.substr(0, f.size()) != f)
            continue;
        std::string_view rest = s.substr(f.size());
        if (rest.size() > 2 && rest.front() == '(' && rest.back() == ')')
            rest = rest.substr(1, rest.size() - 2);
        if (all_digits(rest))
            return std::make_pair(std::string(f), to_int(rest));
    }
    return std::nullopt;
}

std::string canonical_simple(std::string_view s)
{
    if (s == "{e}" || s == "e" || s == "1" || s == "T0" || s == "SU(1)" || s == "SU1")
        return "{e}";
    if (s == "S1" || s == "U(1)" || s == "U1" || s == "SO(2)" || s == "SO2" || s == "T")
        return "T1";
    if (s == "G2" || s == "G_2")
        return "G2";
    if (s.size() >= 2 && s[0] == 'T') {
        std::string_view rest = s.substr(1);
        if (rest.front() == '^' || rest.front() == '_')
            rest = rest.substr(1);
        if (all_digits(rest))
            return to_int(rest) == 0 ? "{e}" : "T" + std::to_string(to_int(rest));
    }
    if (s.size() >= 2 && s[0] == 'Z') {
        std::string_view rest = s.substr(1);
        if (rest.front() == '_')
            rest = rest.substr(1);
        if (all_digits(rest))
            return "Z" + std::to_string(to_int(rest));
    }
    if (auto f = family(s)) {
        const auto& [name, n] = *f;
        if (name == "SU" && n == 1)
            return "{e}";
        if (name == "SO" && n == 2)
            return "T1";
        if (name == "SO" && n != 3 && n != 4)
            unknown(s);
        if (n < 1)
            unknown(s);
        return name + "(" + std::to_string(n) + ")";
    }
    unknown(s);
}

// Splits "X^k" when X is not a torus spelling.
std::pair<std::string, int> split_power(const std::string& s)
{
    const auto caret = s.rfind('^');
    if (caret == std::string::npos || caret == 0 || !all_digits(std::string_view(s).substr(caret + 1)))
        return {s, 1};
    std::string base = s.substr(0, caret);
    if (base == "T")
        return {s, 1};
    if (base.size() > 2 && base.front() == '(' && base.back() == ')')
        base = base.substr(1, base.size() - 2);
    return {base, to_int(std::string_view(s).substr(caret + 1))};
}

GroupData simple_group(const std::string& name)
{
    GroupData g;
    g.name = name;
    if (name == "{e}")
        return g;
    if (name == "G2")
        return {name, 2, 14, {3, 11}, {}};
    if (name == "SO(3)")
        return {name, 1, 3, {3}, {true, false, false}};
    if (name == "SO(4)")
        return {name, 2, 6, {3, 3}, {true, false, false}};
    if (name[0] == 'T') {
        const int n = std::stoi(name.substr(1));
        return {name, n, n, std::vector<int>(n, 1), {}};
    }
    if (name[0] == 'Z')
        return {name, 0, 0, {}, {false, true, true}};
    const auto f = family(name);
    const int n = f->second;
    if (f->first == "SU") {
        g.rank = n - 1;
        g.dimension = n * n - 1;
        for (int k = 2; k <= n; ++k)
            g.exterior_degrees.push_back(2 * k - 1);
    } else {  // Sp
        g.rank = n;
        g.dimension = n * (2 * n + 1);
        for (int k = 1; k <= n; ++k)
            g.exterior_degrees.push_back(4 * k - 1);
    }
    return g;
}

}  // namespace

std::string canonical_group_name(std::string_view name)
{
    const std::string s = strip(name);
    if (s.empty())
        unknown(name);
    auto [base, k] = split_power(s);
    const std::string simple = canonical_simple(base);
    if (k == 0)
        return "{e}";
    if (k == 1)
        return simple;
    if (simple == "{e}")
        return simple;
    if (simple[0] == 'T')
        return "T" + std::to_string(std::stoi(simple.substr(1)) * k);
    if (simple[0] == 'Z')
        unknown(name);
    return simple + "^" + std::to_string(k);
}

GroupData catalog_group(std::string_view name)
{
    const std::string canonical = canonical_group_name(name);
    auto [base, k] = split_power(canonical);
    GroupData factor = simple_group(base);
    if (k == 1) {
        factor.validate();
        return factor;
    }
    GroupData g{canonical, 0, 0, {}, factor.flags};
    for (int i = 0; i < k; ++i) {
        g.rank += factor.rank;
        g.dimension += factor.dimension;
        g.exterior_degrees.insert(g.exterior_degrees.end(), factor.exterior_degrees.begin(),
                                  factor.exterior_degrees.end());
    }
    g.validate();
    return g;
}

namespace {

GeneratorsPtr u_variables(int count, int degree)
{
    std::vector<Generator> gens;
    for (int i = 1; i <= count; ++i)
        gens.push_back({"u" + std::to_string(i), degree});
    return make_generators(std::move(gens));
}

// Elementary symmetric polynomials e_0..e_m of the given linear forms.
std::vector<AlgebraElement> elementary(const GeneratorsPtr& vars, const std::vector<AlgebraElement>& forms)
{
    std::vector<AlgebraElement> e(forms.size() + 1, AlgebraElement(vars));
    e[0] = AlgebraElement::constant(vars, 1);
    for (const auto& t : forms)
        for (std::size_t k = forms.size(); k >= 1; --k)
            e[k] += e[k - 1] * t;
    return e;
}

using Map = std::map<std::string, std::string>;

std::string x(int i)
{
    return "x" + std::to_string(i);
}

// Maximal torus of a simple factor, over u_{offset+1}.. of `vars`. Returns images of the
// factor's classifying generators in order.
std::optional<std::vector<std::string>> simple_torus(const std::string& name, const GeneratorsPtr& vars, int offset)
{
    auto u = [&](int i) { return AlgebraElement::generator(vars, offset + i - 1); };
    std::vector<std::string> out;
    if (name[0] == 'T') {
        const int n = std::stoi(name.substr(1));
        for (int i = 1; i <= n; ++i)
            out.push_back(u(i).to_string());
        return out;
    }
    if (name == "SU(2)" || name == "Sp(1)" || name == "SO(3)")
        return std::vector<std::string>{power(u(1), 2).to_string()};
    if (name == "SO(4)")
        return std::vector<std::string>{(power(u(1), 2) + power(u(2), 2)).to_string(), (u(1) * u(2)).to_string()};
    if (name == "G2") {
        const auto s = u(1) + u(2);
        return std::vector<std::string>{(power(u(1), 2) + u(1) * u(2) + power(u(2), 2)).to_string(),
                                        (power(u(1) * u(2) * s, 2)).to_string()};
    }
    const auto f = family(name);
    if (!f)
        return std::nullopt;
    const int n = f->second;
    if (f->first == "SU") {
        std::vector<AlgebraElement> forms;
        AlgebraElement last(vars);
        for (int i = 1; i < n; ++i) {
            forms.push_back(u(i));
            last -= u(i);
        }
        forms.push_back(last);
        const auto e = elementary(vars, forms);
        for (int k = 2; k <= n; ++k)
            out.push_back(e[k].to_string());
        return out;
    }
    if (f->first == "Sp") {
        std::vector<AlgebraElement> forms;
        for (int i = 1; i <= n; ++i)
            forms.push_back(power(u(i), 2));
        const auto e = elementary(vars, forms);
        for (int k = 1; k <= n; ++k)
            out.push_back(e[k].to_string());
        return out;
    }
    return std::nullopt;
}

CatalogEmbedding make(const GroupData& source, const std::string& label, const std::string& target, Map map,
                      std::string description)
{
    CatalogEmbedding e{source.name + ">" + label, source.name, target, std::move(map), std::move(description)};
    const GroupData t = catalog_group(target);
    auto vars = make_generators(classifying_generators(t, "u"));
    RestrictionMap::parse(source, target, vars, e.map);  // degree check
    return e;
}

std::vector<std::string> embedding_labels(const GroupData& g)
{
    std::vector<std::string> labels;
    auto [base, k] = split_power(g.name);
    if (g.rank > 0)
        labels.push_back("T" + std::to_string(g.rank));
    if (base == "SU(2)" && k > 1) {
        labels.push_back("diag-SU(2)");
        labels.push_back("diag-T1");
        for (int m = 1; m < k; ++m)
            labels.push_back("T" + std::to_string(m));
    } else if (k > 1) {
        labels.push_back("diag-" + base);
    }
    if (base[0] == 'T' && k == 1) {
        const int n = g.rank;
        if (n > 1)
            labels.push_back("diag-T1");
        for (int m = 1; m < n; ++m)
            labels.push_back("T" + std::to_string(m));
    }
    if (auto f = family(base); f && f->first == "SU" && k == 1)
        for (int m = 2; m < f->second; ++m)
            labels.push_back("SU(" + std::to_string(m) + ")");
    if (base == "G2") {
        labels.push_back("SU(3)");
        labels.push_back("SO(4)");
    }
    labels.push_back("{e}");
    return labels;
}

}  // namespace

CatalogEmbedding catalog_embedding(std::string_view name)
{
    const std::string s = strip(name);
    const auto gt = s.find('>');
    if (gt == std::string::npos)
        throw Error(ErrorKind::UnknownCatalogName, "embedding name '" + s + "' lacks '>'");
    const GroupData g = catalog_group(s.substr(0, gt));
    std::string label = s.substr(gt + 1);
    auto [base, k] = split_power(g.name);
    const auto fail = [&]() -> CatalogEmbedding {
        throw Error(ErrorKind::UnknownCatalogName, "no catalog embedding '" + s + "'");
    };
    auto xs = classifying_generators(g);

    if (label == "{e}" || label == "e")
        return make(g, "{e}", "{e}", {}, "trivial subgroup");

    if (label.rfind("diag-", 0) == 0) {
        const std::string what = label.substr(5) == "T1" ? "T1" : canonical_group_name(label.substr(5));
        if (what == "T1" && (base == "SU(2)" || base[0] == 'T')) {
            Map m;
            for (std::size_t i = 0; i < xs.size(); ++i)
                m[x(i + 1)] = base[0] == 'T' ? "u1" : "u1^2";
            return make(g, "diag-T1", "T1", m, "diagonal circle");
        }
        if (k > 1 && what == base) {
            const GroupData f = catalog_group(base);
            Map m;
            for (int c = 0; c < k; ++c)
                for (int j = 0; j < f.rank; ++j)
                    m[x(c * f.rank + j + 1)] = "u" + std::to_string(j + 1);
            return make(g, "diag-" + base, base, m, "diagonal " + base);
        }
        return fail();
    }

    std::string target;
    try {
        target = canonical_group_name(label);
    } catch (const Error&) {
        return fail();
    }

    if (target[0] == 'T' && std::stoi(target.substr(1)) == g.rank) {
        const GroupData f = catalog_group(base);
        auto vars = u_variables(g.rank, 2);
        Map m;
        for (int c = 0; c < k; ++c) {
            const auto images = simple_torus(base, vars, c * f.rank);
            if (!images)
                return fail();
            for (int j = 0; j < f.rank; ++j)
                m[x(c * f.rank + j + 1)] = (*images)[j];
        }
        return make(g, target, target, m, "maximal torus");
    }
    if (target[0] == 'T') {
        const int r = std::stoi(target.substr(1));
        if (r > g.rank)
            return fail();
        Map m;
        if (base[0] == 'T') {
            for (int i = 1; i <= r; ++i)
                m[x(i)] = "u" + std::to_string(i);
            return make(g, target, target, m, "first coordinate circles");
        }
        if (base == "SU(2)") {
            for (int i = 1; i <= r; ++i)
                m[x(i)] = "u" + std::to_string(i) + "^2";
            return make(g, target, target, m, "circles in the first factors");
        }
        return fail();
    }
    if (base == "G2" && target == "SU(3)")
        return make(g, target, target, {{"x1", "-u1"}, {"x2", "u2^2"}}, "long-root SU(3)");
    if (base == "G2" && target == "SO(4)")
        return make(g, target, target,
                    {{"x1", "1/4*u1+3/4*u2"}, {"x2", "1/16*u1^2*u2-1/8*u1*u2^2+1/16*u2^3"}},
                    "SO(4) spanned by a long and an orthogonal short root");
    if (auto fs = family(base), ft = family(target);
        k == 1 && fs && ft && fs->first == "SU" && ft->first == "SU" && ft->second < fs->second) {
        Map m;
        for (int i = 1; i < ft->second; ++i)
            m[x(i)] = "u" + std::to_string(i);
        return make(g, target, target, m, "upper-left block");
    }
    return fail();
}

std::vector<CatalogEntry> catalog_list()
{
    std::vector<CatalogEntry> out;
    for (const char* name : {"{e}", "T1", "T2", "T3", "T4", "SU(2)", "SU(3)", "SU(4)", "SO(3)", "SO(4)", "Sp(1)",
                             "Sp(2)", "G2", "SU(2)^2", "SU(2)^3", "SU(2)^4", "Z2"})
        out.push_back(catalog_show(name));
    return out;
}

CatalogEntry catalog_show(std::string_view name)
{
    CatalogEntry e{catalog_group(name), {}};
    for (const auto& label : embedding_labels(e.group)) {
        try {
            e.embeddings.push_back(catalog_embedding(e.group.name + ">" + label));
        } catch (const Error&) {
            // label not realized for this group
        }
    }
    return e;
}

}  // namespace sullivan
