#include "sullivan/cdga.hpp"

#include <set>
#include <sstream>
#include <utility>

#include "sullivan/error.hpp"

namespace sullivan {

GeneratorSet::GeneratorSet(std::vector<Generator> generators) : generators_(std::move(generators))
{
    std::set<std::string> seen;
    for (const auto& g : generators_) {
        if (g.degree < 1)
            throw Error(ErrorKind::InvalidDegrees, "generator '" + g.name + "' has degree < 1");
        if (g.name.empty())
            throw Error(ErrorKind::InvalidDegrees, "generator with empty name");
        if (!seen.insert(g.name).second)
            throw Error(ErrorKind::InvalidDegrees, "duplicate generator name '" + g.name + "'");
    }
}

std::optional<std::size_t> GeneratorSet::find(std::string_view name) const
{
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name)
            return i;
    return std::nullopt;
}

std::size_t GeneratorSet::index_of(std::string_view name) const
{
    if (auto i = find(name))
        return *i;
    throw Error(ErrorKind::UnknownGenerator, "no generator named '" + std::string(name) + "'");
}

GeneratorsPtr make_generators(std::vector<Generator> generators)
{
    return std::make_shared<const GeneratorSet>(std::move(generators));
}

bool same_generators(const GeneratorsPtr& a, const GeneratorsPtr& b)
{
    return a == b || (a && b && *a == *b);
}

std::size_t Monomial::word_length() const
{
    std::size_t n = 0;
    for (auto e : exponents)
        n += e;
    return n;
}

int monomial_degree(const GeneratorSet& gens, const Monomial& m)
{
    int d = 0;
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
        d += static_cast<int>(m.exponents[i]) * gens[i].degree;
    return d;
}

std::size_t odd_word_length(const GeneratorSet& gens, const Monomial& m)
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
        if (gens[i].odd())
            n += m.exponents[i];
    return n;
}

std::pair<int, Monomial> multiply_monomials(const GeneratorSet& gens, const Monomial& a, const Monomial& b)
{
    const std::size_t n = gens.size();
    Monomial out{std::vector<unsigned>(n, 0)};
    // Moving each odd factor of b left past the odd factors of a with larger index.
    unsigned odd_in_a_after = 0;
    unsigned swaps = 0;
    for (std::size_t i = n; i-- > 0;) {
        const unsigned ea = a.exponents[i];
        const unsigned eb = b.exponents[i];
        if (gens[i].odd()) {
            if (ea && eb)
                return {0, Monomial{}};
            if (eb)
                swaps += odd_in_a_after;
            if (ea)
                ++odd_in_a_after;
        }
        out.exponents[i] = ea + eb;
    }
    return {swaps % 2 ? -1 : 1, std::move(out)};
}

AlgebraElement::AlgebraElement(GeneratorsPtr gens) : gens_(std::move(gens))
{
    if (!gens_)
        gens_ = make_generators({});
}

AlgebraElement AlgebraElement::constant(GeneratorsPtr gens, const Rational& c)
{
    AlgebraElement e(std::move(gens));
    e.add_term(Monomial{std::vector<unsigned>(e.gens_->size(), 0)}, c);
    return e;
}

AlgebraElement AlgebraElement::generator(GeneratorsPtr gens, std::size_t index)
{
    if (index >= gens->size())
        throw Error(ErrorKind::UnknownGenerator, "generator index out of range");
    Monomial m{std::vector<unsigned>(gens->size(), 0)};
    m.exponents[index] = 1;
    return monomial(std::move(gens), std::move(m));
}

AlgebraElement AlgebraElement::generator(GeneratorsPtr gens, std::string_view name)
{
    const std::size_t i = gens->index_of(name);
    return generator(std::move(gens), i);
}

AlgebraElement AlgebraElement::monomial(GeneratorsPtr gens, Monomial m, const Rational& c)
{
    if (m.exponents.size() != gens->size())
        throw Error(ErrorKind::DimensionMismatch, "monomial length differs from generator count");
    AlgebraElement e(std::move(gens));
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
        if ((*e.gens_)[i].odd() && m.exponents[i] > 1)
            return e;
    e.add_term(m, c);
    return e;
}

std::optional<int> AlgebraElement::degree() const
{
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
        const int md = monomial_degree(*gens_, m);
        if (d && *d != md)
            return std::nullopt;
        d = md;
    }
    return d;
}

bool AlgebraElement::is_homogeneous() const
{
    return is_zero() || degree().has_value();
}

Vector AlgebraElement::coordinates(const std::vector<Monomial>& basis) const
{
    Vector out(basis.size(), Rational(0));
    std::size_t found = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto it = terms_.find(basis[i]);
        if (it != terms_.end()) {
            out[i] = it->second;
            ++found;
        }
    }
    if (found != terms_.size())
        throw Error(ErrorKind::DimensionMismatch, "element has terms outside the given monomial basis");
    return out;
}

AlgebraElement AlgebraElement::from_coordinates(GeneratorsPtr gens, const std::vector<Monomial>& basis,
                                                const Vector& c)
{
    if (c.size() != basis.size())
        throw Error(ErrorKind::DimensionMismatch, "coordinate vector length differs from basis size");
    AlgebraElement e(std::move(gens));
    for (std::size_t i = 0; i < basis.size(); ++i)
        e.add_term(basis[i], c[i]);
    return e;
}

void AlgebraElement::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void AlgebraElement::check_compatible(const AlgebraElement& other) const
{
    if (!same_generators(gens_, other.gens_))
        throw Error(ErrorKind::UnknownGenerator, "elements belong to different algebras");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other)
{
    check_compatible(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other)
{
    check_compatible(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_)
        x *= c;
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b)
{
    a.check_compatible(b);
    AlgebraElement out(a.gens_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            auto [sign, m] = multiply_monomials(*a.gens_, ma, mb);
            if (sign != 0)
                out.add_term(m, sign > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
        }
    return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b)
{
    return same_generators(a.gens_, b.gens_) && a.terms_ == b.terms_;
}

AlgebraElement AlgebraElement::even_part() const
{
    AlgebraElement out(gens_);
    for (const auto& [m, c] : terms_)
        if (odd_word_length(*gens_, m) == 0)
            out.add_term(m, c);
    return out;
}

AlgebraElement AlgebraElement::transport(const GeneratorsPtr& target) const
{
    std::vector<std::size_t> map(gens_->size());
    for (std::size_t i = 0; i < gens_->size(); ++i) {
        const std::size_t j = target->index_of((*gens_)[i].name);
        if ((*target)[j].degree != (*gens_)[i].degree)
            throw Error(ErrorKind::DegreeMismatch, "generator '" + (*gens_)[i].name + "' changes degree");
        map[i] = j;
    }
    // Rebuilding by multiplication keeps Koszul signs right if the order differs.
    AlgebraElement out(target);
    for (const auto& [m, c] : terms_) {
        AlgebraElement t = constant(target, c);
        for (std::size_t i = 0; i < m.exponents.size(); ++i)
            for (unsigned k = 0; k < m.exponents[i]; ++k)
                t = t * generator(target, map[i]);
        out += t;
    }
    return out;
}

std::string AlgebraElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string factors;
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i] == 0)
                continue;
            if (!factors.empty())
                factors += '*';
            factors += (*gens_)[i].name;
            if (m.exponents[i] > 1)
                factors += '^' + std::to_string(m.exponents[i]);
        }
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? "-" : "+");
        first = false;
        if (factors.empty())
            os << mag.get_str();
        else if (mag == 1)
            os << factors;
        else
            os << mag.get_str() << '*' << factors;
    }
    return os.str();
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b)
{
    return a * b;
}

AlgebraElement power(const AlgebraElement& a, unsigned k)
{
    AlgebraElement out = AlgebraElement::constant(a.generators(), 1);
    for (unsigned i = 0; i < k; ++i)
        out = out * a;
    return out;
}

SullivanAlgebra::SullivanAlgebra(GeneratorsPtr gens, std::vector<AlgebraElement> differential, int cutoff)
    : gens_(std::move(gens)), differential_(std::move(differential)), cutoff_(cutoff)
{
    if (!gens_)
        gens_ = make_generators({});
    if (cutoff_ < 0)
        throw Error(ErrorKind::CutoffExceeded, "cutoff must be non-negative");
    if (differential_.empty())
        for (std::size_t i = 0; i < gens_->size(); ++i)
            differential_.emplace_back(gens_);
    if (differential_.size() != gens_->size())
        throw Error(ErrorKind::InvalidDifferential, "differential must assign one element per generator");
    for (std::size_t i = 0; i < gens_->size(); ++i) {
        auto& d = differential_[i];
        if (!same_generators(d.generators(), gens_))
            throw Error(ErrorKind::UnknownGenerator,
                        "d(" + (*gens_)[i].name + ") references generators outside the algebra");
        if (d.is_zero())
            continue;
        const auto deg = d.degree();
        if (!deg || *deg != (*gens_)[i].degree + 1)
            throw Error(ErrorKind::InvalidDegrees,
                        "d(" + (*gens_)[i].name + ") must be homogeneous of degree " +
                            std::to_string((*gens_)[i].degree + 1));
        d = AlgebraElement(d).transport(gens_);
    }
}

SullivanAlgebra SullivanAlgebra::unit(int cutoff)
{
    return SullivanAlgebra(make_generators({}), {}, cutoff);
}

SullivanAlgebra SullivanAlgebra::with_cutoff(int cutoff) const
{
    return SullivanAlgebra(gens_, differential_, cutoff);
}

std::vector<Monomial> SullivanAlgebra::monomial_basis(int degree) const
{
    if (degree < 0 || degree > cutoff_)
        throw Error(ErrorKind::CutoffExceeded,
                    "degree " + std::to_string(degree) + " outside [0, " + std::to_string(cutoff_) + "]");
    return monomial_basis_unchecked(degree);
}

std::vector<Monomial> SullivanAlgebra::monomial_basis_unchecked(int degree) const
{
    std::vector<Monomial> out;
    if (degree < 0)
        return out;
    const std::size_t n = gens_->size();
    std::vector<unsigned> exps(n, 0);
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i == n) {
            if (remaining == 0)
                out.push_back(Monomial{exps});
            return;
        }
        const Generator& g = (*gens_)[i];
        const int max_e = g.odd() ? std::min(1, remaining / g.degree) : remaining / g.degree;
        for (int e = max_e; e >= 0; --e) {
            exps[i] = static_cast<unsigned>(e);
            self(self, i + 1, remaining - e * g.degree);
        }
        exps[i] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

AlgebraElement SullivanAlgebra::differential_of(const Monomial& m) const
{
    AlgebraElement out(gens_);
    const std::size_t n = gens_->size();
    int prefix_degree = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned e = m.exponents[i];
        if (e == 0)
            continue;
        if (!differential_[i].is_zero()) {
            Monomial left{std::vector<unsigned>(n, 0)};
            Monomial right{std::vector<unsigned>(n, 0)};
            for (std::size_t j = 0; j < n; ++j) {
                if (j < i)
                    left.exponents[j] = m.exponents[j];
                else if (j > i)
                    right.exponents[j] = m.exponents[j];
            }
            left.exponents[i] = e - 1;
            Rational coeff = e;
            if (prefix_degree % 2)
                coeff = -coeff;
            out += AlgebraElement::monomial(gens_, left, coeff) * differential_[i] *
                   AlgebraElement::monomial(gens_, right);
        }
        prefix_degree += static_cast<int>(e) * (*gens_)[i].degree;
    }
    return out;
}

AlgebraElement SullivanAlgebra::differential_of(const AlgebraElement& e) const
{
    if (!same_generators(e.generators(), gens_))
        throw Error(ErrorKind::UnknownGenerator, "element belongs to a different algebra");
    AlgebraElement out(gens_);
    for (const auto& [m, c] : e.terms()) {
        AlgebraElement t = differential_of(m);
        t *= c;
        out += t;
    }
    return out;
}

AlgebraElement SullivanAlgebra::apply_differential(const AlgebraElement& e) const
{
    if (!e.is_homogeneous())
        throw Error(ErrorKind::DegreeMismatch, "differential applied to a mixed-degree element");
    if (const auto d = e.degree(); d && *d > cutoff_ - 1)
        throw Error(ErrorKind::CutoffExceeded,
                    "d of a degree-" + std::to_string(*d) + " element exceeds cutoff " + std::to_string(cutoff_));
    return differential_of(e);
}

bool is_pure(const SullivanAlgebra& a)
{
    for (std::size_t i = 0; i < a.generator_count(); ++i) {
        const auto& d = a.differential(i);
        if (a.generator(i).even()) {
            if (!d.is_zero())
                return false;
        }
        else if (!(d.even_part() == d)) {
            return false;
        }
    }
    return true;
}

SullivanAlgebra associated_pure(const SullivanAlgebra& a)
{
    std::vector<AlgebraElement> d;
    for (std::size_t i = 0; i < a.generator_count(); ++i) {
        if (a.generator(i).even())
            d.emplace_back(a.generators());
        else
            d.push_back(a.differential(i).even_part());
    }
    return SullivanAlgebra(a.generators(), std::move(d), a.cutoff());
}

int homotopy_euler_characteristic(const SullivanAlgebra& a)
{
    int chi = 0;
    for (std::size_t i = 0; i < a.generator_count(); ++i)
        chi += a.generator(i).odd() ? 1 : -1;
    return chi;
}

bool verify_d_squared(const SullivanAlgebra& a)
{
    for (std::size_t i = 0; i < a.generator_count(); ++i)
        if (!a.differential_of(a.differential(i)).is_zero())
            return false;
    return true;
}

CdgaMorphism::CdgaMorphism(SullivanAlgebra source, SullivanAlgebra target, std::vector<AlgebraElement> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment))
{
    if (assignment_.size() != source_.generator_count())
        throw Error(ErrorKind::NotAChainMap, "morphism must assign one image per source generator");
    for (std::size_t i = 0; i < assignment_.size(); ++i) {
        auto& img = assignment_[i];
        img = img.transport(target_.generators());
        if (!img.is_zero() && img.degree() != source_.generator(i).degree)
            throw Error(ErrorKind::DegreeMismatch,
                        "image of '" + source_.generator(i).name + "' has the wrong degree");
    }
    for (std::size_t i = 0; i < assignment_.size(); ++i) {
        const AlgebraElement lhs = apply(source_.differential(i));
        const AlgebraElement rhs = target_.differential_of(assignment_[i]);
        if (!(lhs == rhs))
            throw Error(ErrorKind::NotAChainMap,
                        "f(d " + source_.generator(i).name + ") = " + lhs.to_string() + " but d f(" +
                            source_.generator(i).name + ") = " + rhs.to_string());
    }
}

CdgaMorphism CdgaMorphism::identity(const SullivanAlgebra& a)
{
    std::vector<AlgebraElement> img;
    for (std::size_t i = 0; i < a.generator_count(); ++i)
        img.push_back(AlgebraElement::generator(a.generators(), i));
    return CdgaMorphism(a, a, std::move(img));
}

AlgebraElement CdgaMorphism::apply(const AlgebraElement& e) const
{
    if (!same_generators(e.generators(), source_.generators()))
        throw Error(ErrorKind::UnknownGenerator, "element is not in the morphism's source");
    AlgebraElement out(target_.generators());
    for (const auto& [m, c] : e.terms()) {
        AlgebraElement t = AlgebraElement::constant(target_.generators(), c);
        for (std::size_t i = 0; i < m.exponents.size() && !t.is_zero(); ++i)
            for (unsigned k = 0; k < m.exponents[i]; ++k)
                t = t * assignment_[i];
        out += t;
    }
    return out;
}

CdgaMorphism compose(const CdgaMorphism& second, const CdgaMorphism& first)
{
    if (!same_generators(first.target_.generators(), second.source_.generators()))
        throw Error(ErrorKind::NotAChainMap, "composed morphisms do not share the middle algebra");
    std::vector<AlgebraElement> img;
    for (const auto& x : first.assignment_)
        img.push_back(second.apply(x));
    return CdgaMorphism(first.source_, second.target_, std::move(img));
}

AlgebraElement substitute(const AlgebraElement& e, const GeneratorsPtr& target,
                          const std::vector<AlgebraElement>& images)
{
    AlgebraElement out(target);
    for (const auto& [m, c] : e.terms()) {
        AlgebraElement t = AlgebraElement::constant(target, c);
        for (std::size_t i = 0; i < m.exponents.size(); ++i)
            for (unsigned k = 0; k < m.exponents[i]; ++k)
                t = t * images[i];
        out += t;
    }
    return out;
}

}  // namespace sullivan
