#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cwlab/scalar.hpp"

namespace cwlab {

/// Normal-ordered monomial in m boson modes: all creation operators to the
/// left of all annihilation operators. cre[i] / ann[i] hold the exponents of
/// C_{i+1}^+ / C_{i+1}. The pair (cre, ann) is the unique canonical
/// representative of the monomial.
struct BosonMonomial {
    std::vector<std::uint32_t> cre;
    std::vector<std::uint32_t> ann;

    BosonMonomial() = default;
    explicit BosonMonomial(std::size_t modes) : cre(modes, 0), ann(modes, 0) {}

    static BosonMonomial creation(std::size_t modes, std::size_t mode);
    static BosonMonomial annihilation(std::size_t modes, std::size_t mode);
    /// Number operator n_{mode+1} = C^+ C on one mode.
    static BosonMonomial number(std::size_t modes, std::size_t mode);

    std::size_t modes() const { return cre.size(); }
    bool is_identity() const;
    std::uint32_t creation_degree() const;
    std::uint32_t annihilation_degree() const;

    /// "C1+^2*C2" style: creation factors first, '^' for exponents > 1,
    /// "1" for the empty monomial.
    std::string to_string() const;

    friend auto operator<=>(const BosonMonomial& a, const BosonMonomial& b) = default;
};

/// Finite Scalar-linear combination of normal-ordered monomials; zero
/// coefficients are never stored, so map equality is value equality.
class BosonPoly {
public:
    BosonPoly() = default;
    explicit BosonPoly(std::size_t modes) : modes_(modes) {}

    static BosonPoly constant(std::size_t modes, const Scalar& value);
    static BosonPoly monomial(BosonMonomial mono, const Scalar& coeff = Scalar::integer(1));

    std::size_t modes() const { return modes_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<BosonMonomial, Scalar>& terms() const { return terms_; }
    Scalar coeff(const BosonMonomial& mono) const;
    void add_term(const BosonMonomial& mono, const Scalar& coeff);

    BosonPoly operator-() const;
    BosonPoly& operator+=(const BosonPoly& rhs);
    BosonPoly& operator-=(const BosonPoly& rhs);
    friend BosonPoly operator+(BosonPoly lhs, const BosonPoly& rhs) { return lhs += rhs; }
    friend BosonPoly operator-(BosonPoly lhs, const BosonPoly& rhs) { return lhs -= rhs; }
    friend BosonPoly operator*(const Scalar& s, const BosonPoly& p);
    friend bool operator==(const BosonPoly& lhs, const BosonPoly& rhs) {
        return lhs.modes_ == rhs.modes_ && lhs.terms_ == rhs.terms_;
    }
    friend bool operator!=(const BosonPoly& lhs, const BosonPoly& rhs) { return !(lhs == rhs); }

    std::string to_string() const;

private:
    std::size_t modes_ = 0;
    std::map<BosonMonomial, Scalar> terms_;
};

/// Product P*Q rewritten in normal order. Per mode, annihilators commute past
/// creators by C^p C+^q = sum_k k! C(p,k) C(q,k) C+^(q-k) C^(p-k); distinct
/// modes commute. Throws ModeCountMismatch.
BosonPoly normal_product(const BosonPoly& p, const BosonPoly& q);

/// normal_product(p, q) - normal_product(q, p).
BosonPoly boson_commutator(const BosonPoly& p, const BosonPoly& q);

/// The eight three-mode generators: H1, H2, Ea, E-a, Eb, E-b, Eg, E-g.
/// Throws UnknownName.
BosonPoly make_generator(const std::string& name);

struct GlBracketViolation {
    std::size_t i, j, k, l;  // 1-based mode indices
    std::string side;        // "boson" or "matrix"
    std::string detail;
};

/// Certifies the bilinear map C_i+ C_j <-> E_ij as a bracket isomorphism:
/// for all i,j,k,l the boson side satisfies
/// [C_i+ C_j, C_k+ C_l] = d_jk C_i+ C_l - d_li C_k+ C_j and the matrix-unit
/// side satisfies the same relation. Empty result on success.
std::vector<GlBracketViolation> gl_bracket_check(std::size_t modes);

}  // namespace cwlab
