#include "cwlab/boson.hpp"

#include "cwlab/matrix.hpp"

namespace cwlab {

BosonMonomial BosonMonomial::creation(std::size_t modes, std::size_t mode) {
    BosonMonomial m(modes);
    m.cre[mode] = 1;
    return m;
}

BosonMonomial BosonMonomial::annihilation(std::size_t modes, std::size_t mode) {
    BosonMonomial m(modes);
    m.ann[mode] = 1;
    return m;
}

BosonMonomial BosonMonomial::number(std::size_t modes, std::size_t mode) {
    BosonMonomial m(modes);
    m.cre[mode] = 1;
    m.ann[mode] = 1;
    return m;
}

bool BosonMonomial::is_identity() const {
    for (auto e : cre)
        if (e != 0) return false;
    for (auto e : ann)
        if (e != 0) return false;
    return true;
}

std::uint32_t BosonMonomial::creation_degree() const {
    std::uint32_t d = 0;
    for (auto e : cre) d += e;
    return d;
}

std::uint32_t BosonMonomial::annihilation_degree() const {
    std::uint32_t d = 0;
    for (auto e : ann) d += e;
    return d;
}

std::string BosonMonomial::to_string() const {
    std::string out;
    auto append = [&out](std::size_t mode, std::uint32_t exp, bool dagger) {
        if (exp == 0) return;
        if (!out.empty()) out += "*";
        out += "C" + std::to_string(mode + 1) + (dagger ? "+" : "");
        if (exp > 1) out += "^" + std::to_string(exp);
    };
    for (std::size_t k = 0; k < cre.size(); ++k) append(k, cre[k], true);
    for (std::size_t k = 0; k < ann.size(); ++k) append(k, ann[k], false);
    return out.empty() ? "1" : out;
}

BosonPoly BosonPoly::constant(std::size_t modes, const Scalar& value) {
    BosonPoly p(modes);
    p.add_term(BosonMonomial(modes), value);
    return p;
}

BosonPoly BosonPoly::monomial(BosonMonomial mono, const Scalar& coeff) {
    BosonPoly p(mono.modes());
    p.add_term(mono, coeff);
    return p;
}

Scalar BosonPoly::coeff(const BosonMonomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Scalar() : it->second;
}

void BosonPoly::add_term(const BosonMonomial& mono, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BosonPoly BosonPoly::operator-() const {
    BosonPoly out(modes_);
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
    return out;
}

BosonPoly& BosonPoly::operator+=(const BosonPoly& rhs) {
    if (modes_ != rhs.modes_)
        throw ModeCountMismatch("boson addition: " + std::to_string(modes_) + " vs " + std::to_string(rhs.modes_));
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
    return *this;
}

BosonPoly& BosonPoly::operator-=(const BosonPoly& rhs) {
    if (modes_ != rhs.modes_)
        throw ModeCountMismatch("boson subtraction: " + std::to_string(modes_) + " vs " + std::to_string(rhs.modes_));
    for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
    return *this;
}

BosonPoly operator*(const Scalar& s, const BosonPoly& p) {
    BosonPoly out(p.modes());
    if (s.is_zero()) return out;
    for (const auto& [mono, c] : p.terms()) out.add_term(mono, s * c);
    return out;
}

std::string BosonPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, c] : terms_) {
        std::string coeff = format_scalar(c);
        bool needs_parens = coeff.find(" + ") != std::string::npos || coeff.find(" - ") != std::string::npos;
        std::string body = needs_parens ? "(" + coeff + ")" : coeff;
        if (!mono.is_identity()) {
            if (body == "1")
                body = mono.to_string();
            else if (body == "-1")
                body = "-" + mono.to_string();
            else
                body += "*" + mono.to_string();
        }
        out += out.empty() ? body : " + " + body;
    }
    return out;
}

namespace {

// Per-mode reordering rule for C^p C+^q, expanded across all modes.
// Emits (shift k per mode -> integer coefficient k!*C(p,k)*C(q,k)).
void expand_swaps(const BosonMonomial& left, const BosonMonomial& right, std::size_t mode,
                  BosonMonomial accum, const mpz_class& coeff, BosonPoly& out, const Scalar& total) {
    std::size_t m = left.modes();
    if (mode == m) {
        out.add_term(accum, total * Scalar::from_rational(Rational(coeff)));
        return;
    }
    std::uint32_t p = left.ann[mode];   // annihilators moving right
    std::uint32_t q = right.cre[mode];  // creators being passed
    std::uint32_t kmax = std::min(p, q);
    for (std::uint32_t k = 0; k <= kmax; ++k) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), p, k);
        mpz_class c2;
        mpz_bin_uiui(c2.get_mpz_t(), q, k);
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), k);
        BosonMonomial next = accum;
        next.cre[mode] = left.cre[mode] + right.cre[mode] - k;
        next.ann[mode] = left.ann[mode] + right.ann[mode] - k;
        expand_swaps(left, right, mode + 1, std::move(next), coeff * c * c2 * fact, out, total);
    }
}

}  // namespace

BosonPoly normal_product(const BosonPoly& p, const BosonPoly& q) {
    if (p.modes() != q.modes())
        throw ModeCountMismatch("normal_product: " + std::to_string(p.modes()) + " vs " + std::to_string(q.modes()));
    BosonPoly out(p.modes());
    for (const auto& [pm, pc] : p.terms())
        for (const auto& [qm, qc] : q.terms())
            expand_swaps(pm, qm, 0, BosonMonomial(p.modes()), mpz_class(1), out, pc * qc);
    return out;
}

BosonPoly boson_commutator(const BosonPoly& p, const BosonPoly& q) {
    return normal_product(p, q) - normal_product(q, p);
}

BosonPoly make_generator(const std::string& name) {
    const std::size_t m = 3;
    auto bilinear = [&](std::size_t i, std::size_t j, const Scalar& coeff) {
        BosonMonomial mono(m);
        mono.cre[i] = 1;
        mono.ann[j] = 1;
        return BosonPoly::monomial(mono, coeff);
    };
    // 1/(2*sqrt3) = sqrt3/6, 1/sqrt6 = sqrt6/6
    Scalar inv2sqrt3 = Scalar::rational(1, 6) * Scalar::sqrt3();
    Scalar invsqrt6 = Scalar::rational(1, 6) * Scalar::sqrt6();
    Scalar sixth = Scalar::rational(1, 6);

    if (name == "H1") {
        BosonPoly p = bilinear(0, 0, inv2sqrt3);
        p += bilinear(1, 1, -inv2sqrt3);
        return p;
    }
    if (name == "H2") {
        BosonPoly p = bilinear(0, 0, sixth);
        p += bilinear(1, 1, sixth);
        p += bilinear(2, 2, -(Scalar::rational(2, 6)));
        return p;
    }
    if (name == "Ea") return bilinear(0, 2, invsqrt6);
    if (name == "E-a") return bilinear(2, 0, invsqrt6);
    if (name == "Eb") return bilinear(2, 1, invsqrt6);
    if (name == "E-b") return bilinear(1, 2, invsqrt6);
    if (name == "Eg") return bilinear(0, 1, invsqrt6);
    if (name == "E-g") return bilinear(1, 0, invsqrt6);
    throw UnknownName(name);
}

std::vector<GlBracketViolation> gl_bracket_check(std::size_t modes) {
    std::vector<GlBracketViolation> violations;
    auto bilinear = [modes](std::size_t i, std::size_t j) {
        BosonMonomial mono(modes);
        mono.cre[i] = 1;
        mono.ann[j] = 1;
        return BosonPoly::monomial(mono);
    };
    for (std::size_t i = 0; i < modes; ++i)
        for (std::size_t j = 0; j < modes; ++j)
            for (std::size_t k = 0; k < modes; ++k)
                for (std::size_t l = 0; l < modes; ++l) {
                    // Boson side.
                    BosonPoly lhs = boson_commutator(bilinear(i, j), bilinear(k, l));
                    BosonPoly rhs(modes);
                    if (j == k) rhs += bilinear(i, l);
                    if (l == i) rhs -= bilinear(k, j);
                    if (lhs != rhs)
                        violations.push_back({i + 1, j + 1, k + 1, l + 1, "boson",
                                              lhs.to_string() + " vs " + rhs.to_string()});
                    // Matrix-unit side.
                    Mat mlhs = commutator(Mat::unit(modes, i, j), Mat::unit(modes, k, l));
                    Mat mrhs(modes);
                    if (j == k) mrhs += Mat::unit(modes, i, l);
                    if (l == i) mrhs -= Mat::unit(modes, k, j);
                    if (mlhs != mrhs)
                        violations.push_back({i + 1, j + 1, k + 1, l + 1, "matrix",
                                              mlhs.to_string() + " vs " + mrhs.to_string()});
                }
    return violations;
}

}  // namespace cwlab
