#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sullivan/linalg.hpp"

namespace sullivan {

struct Generator {
    std::string name;
    int degree = 1;

    bool odd() const noexcept { return degree % 2 != 0; }
    bool even() const noexcept { return !odd(); }

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Ordered generator list of a free graded-commutative algebra. Shared between
/// an algebra and all of its elements.
class GeneratorSet {
public:
    explicit GeneratorSet(std::vector<Generator> generators);

    std::size_t size() const noexcept { return generators_.size(); }
    const Generator& operator[](std::size_t i) const { return generators_[i]; }
    const std::vector<Generator>& list() const noexcept { return generators_; }
    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;  // throws UnknownGenerator

    friend bool operator==(const GeneratorSet& a, const GeneratorSet& b) { return a.generators_ == b.generators_; }

private:
    std::vector<Generator> generators_;
};

using GeneratorsPtr = std::shared_ptr<const GeneratorSet>;

GeneratorsPtr make_generators(std::vector<Generator> generators);
bool same_generators(const GeneratorsPtr& a, const GeneratorsPtr& b);

/// Exponent vector in declaration order. A monomial stands for the ordered product
/// g_1^{e_1} g_2^{e_2} ... so odd generators always appear in declaration order.
struct Monomial {
    std::vector<unsigned> exponents;

    std::size_t word_length() const;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Descending lexicographic order: x^2 before xy before y^2.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.exponents > b.exponents; }
};

int monomial_degree(const GeneratorSet& gens, const Monomial& m);
std::size_t odd_word_length(const GeneratorSet& gens, const Monomial& m);

/// Product of two monomials with its Koszul sign; sign 0 when an odd generator repeats.
std::pair<int, Monomial> multiply_monomials(const GeneratorSet& gens, const Monomial& a, const Monomial& b);

class AlgebraElement {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    explicit AlgebraElement(GeneratorsPtr gens);

    static AlgebraElement constant(GeneratorsPtr gens, const Rational& c);
    static AlgebraElement generator(GeneratorsPtr gens, std::size_t index);
    static AlgebraElement generator(GeneratorsPtr gens, std::string_view name);
    static AlgebraElement monomial(GeneratorsPtr gens, Monomial m, const Rational& c = 1);

    const GeneratorsPtr& generators() const noexcept { return gens_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Degree of a nonzero homogeneous element; empty for zero or mixed elements.
    std::optional<int> degree() const;
    bool is_homogeneous() const;

    /// Coefficient vector against an ordered monomial basis. Throws if a term is missing.
    Vector coordinates(const std::vector<Monomial>& basis) const;
    static AlgebraElement from_coordinates(GeneratorsPtr gens, const std::vector<Monomial>& basis, const Vector& c);

    void add_term(const Monomial& m, const Rational& c);

    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
    AlgebraElement& operator*=(const Rational& c);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator-(AlgebraElement a) { return a *= Rational(-1); }
    friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

    /// Even part (odd word length 0) and the rest.
    AlgebraElement even_part() const;

    /// Re-expresses the element over another generator set, matching generators by name.
    AlgebraElement transport(const GeneratorsPtr& target) const;

    std::string to_string() const;

private:
    void check_compatible(const AlgebraElement& other) const;

    GeneratorsPtr gens_;
    Terms terms_;
};

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement power(const AlgebraElement& a, unsigned k);

/// Algebra substitution without a chain-map check: generator j of e's algebra goes to images[j].
AlgebraElement substitute(const AlgebraElement& e, const GeneratorsPtr& target,
                          const std::vector<AlgebraElement>& images);

/// Free graded-commutative algebra with a differential, tracked up to a degree cutoff.
class SullivanAlgebra {
public:
    /// differential[i] is d of generator i; it must live over `gens`.
    SullivanAlgebra(GeneratorsPtr gens, std::vector<AlgebraElement> differential, int cutoff);

    /// The unit algebra Q.
    static SullivanAlgebra unit(int cutoff = 0);

    const GeneratorsPtr& generators() const noexcept { return gens_; }
    std::size_t generator_count() const noexcept { return gens_->size(); }
    const Generator& generator(std::size_t i) const { return (*gens_)[i]; }
    const AlgebraElement& differential(std::size_t i) const { return differential_[i]; }
    const std::vector<AlgebraElement>& differentials() const noexcept { return differential_; }
    int cutoff() const noexcept { return cutoff_; }

    SullivanAlgebra with_cutoff(int cutoff) const;

    AlgebraElement element(std::string_view name) const { return AlgebraElement::generator(gens_, name); }

    /// Monomials of exactly this degree in descending lexicographic order.
    std::vector<Monomial> monomial_basis(int degree) const;

    /// Same enumeration without the cutoff check (internal use by matrix builders).
    std::vector<Monomial> monomial_basis_unchecked(int degree) const;

    AlgebraElement apply_differential(const AlgebraElement& e) const;
    AlgebraElement differential_of(const AlgebraElement& e) const;  // no cutoff check
    AlgebraElement differential_of(const Monomial& m) const;

private:
    GeneratorsPtr gens_;
    std::vector<AlgebraElement> differential_;
    int cutoff_;
};

bool is_pure(const SullivanAlgebra& a);
SullivanAlgebra associated_pure(const SullivanAlgebra& a);
int homotopy_euler_characteristic(const SullivanAlgebra& a);
bool verify_d_squared(const SullivanAlgebra& a);

/// Algebra map determined by generator images; commutes with the differentials.
class CdgaMorphism {
public:
    CdgaMorphism(SullivanAlgebra source, SullivanAlgebra target, std::vector<AlgebraElement> assignment);

    static CdgaMorphism identity(const SullivanAlgebra& a);

    const SullivanAlgebra& source() const noexcept { return source_; }
    const SullivanAlgebra& target() const noexcept { return target_; }
    const std::vector<AlgebraElement>& assignment() const noexcept { return assignment_; }

    AlgebraElement apply(const AlgebraElement& e) const;

    friend CdgaMorphism compose(const CdgaMorphism& second, const CdgaMorphism& first);

private:
    SullivanAlgebra source_;
    SullivanAlgebra target_;
    std::vector<AlgebraElement> assignment_;
};

CdgaMorphism compose(const CdgaMorphism& second, const CdgaMorphism& first);

}  // namespace sullivan
