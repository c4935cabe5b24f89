#include "cwlab/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstddef>
#include <utility>

namespace cwlab {

Rational make_rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

Scalar Scalar::from_rational(const Rational& r) {
    Scalar s;
    s.c_[0] = r;
    return s;
}

Scalar Scalar::integer(long v) { return from_rational(Rational(v)); }

Scalar Scalar::rational(long num, long den) { return from_rational(make_rational(num, den)); }

Scalar Scalar::i() {
    Scalar s;
    s.c_[1] = 1;
    return s;
}

Scalar Scalar::sqrt2() {
    Scalar s;
    s.c_[index(kSqrt2, false)] = 1;
    return s;
}

Scalar Scalar::sqrt3() {
    Scalar s;
    s.c_[index(kSqrt3, false)] = 1;
    return s;
}

Scalar Scalar::sqrt6() {
    Scalar s;
    s.c_[index(kSqrt6, false)] = 1;
    return s;
}

bool Scalar::is_zero() const {
    for (const auto& q : c_)
        if (sgn(q) != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (std::size_t k = 1; k < 8; ++k)
        if (sgn(c_[k]) != 0) return false;
    return true;
}

bool Scalar::is_real() const {
    for (std::size_t k = 0; k < 8; ++k)
        if (k % 2 == 1 && sgn(c_[k]) != 0) return false;
    return true;
}

Scalar Scalar::operator-() const {
    Scalar out;
    for (std::size_t k = 0; k < 8; ++k) out.c_[k] = -c_[k];
    return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    for (std::size_t k = 0; k < 8; ++k) c_[k] += rhs.c_[k];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    for (std::size_t k = 0; k < 8; ++k) c_[k] -= rhs.c_[k];
    return *this;
}

namespace {

// Radical multiplication table: product of basis radicals a*b equals
// factor * radical, e.g. sqrt2*sqrt6 = 2*sqrt3, sqrt6*sqrt6 = 6.
struct RadProduct {
    int factor;
    Scalar::Radical radical;
};

RadProduct radical_product(Scalar::Radical a, Scalar::Radical b) {
    using R = Scalar::Radical;
    if (a == R::kOne) return {1, b};
    if (b == R::kOne) return {1, a};
    if (a == b) {
        switch (a) {
            case R::kSqrt2: return {2, R::kOne};
            case R::kSqrt3: return {3, R::kOne};
            default: return {6, R::kOne};  // sqrt6 * sqrt6
        }
    }
    // Distinct non-trivial radicals.
    auto lo = std::min(a, b), hi = std::max(a, b);
    if (lo == R::kSqrt2 && hi == R::kSqrt3) return {1, R::kSqrt6};
    if (lo == R::kSqrt2 && hi == R::kSqrt6) return {2, R::kSqrt3};
    return {3, R::kSqrt2};  // sqrt3 * sqrt6
}

}  // namespace

Scalar operator*(const Scalar& lhs, const Scalar& rhs) {
    using R = Scalar::Radical;
    static constexpr R kRadicals[4] = {R::kOne, R::kSqrt2, R::kSqrt3, R::kSqrt6};
    Scalar out;
    for (R ra : kRadicals) {
        for (int ua = 0; ua < 2; ++ua) {
            const Rational& ca = lhs.coord(ra, ua != 0);
            if (sgn(ca) == 0) continue;
            for (R rb : kRadicals) {
                for (int ub = 0; ub < 2; ++ub) {
                    const Rational& cb = rhs.coord(rb, ub != 0);
                    if (sgn(cb) == 0) continue;
                    RadProduct rp = radical_product(ra, rb);
                    Rational term = ca * cb * rp.factor;
                    bool imag = (ua ^ ub) != 0;
                    if (ua != 0 && ub != 0) term = -term;  // i*i = -1
                    out.set_coord(rp.radical, imag, out.coord(rp.radical, imag) + term);
                }
            }
        }
    }
    return out;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    // Columns of A are the coordinates of (*this) * e_j for the eight basis
    // elements e_j; solving A x = e_1 yields the inverse's coordinates.
    using R = Scalar::Radical;
    static constexpr R kRadicals[4] = {R::kOne, R::kSqrt2, R::kSqrt3, R::kSqrt6};
    Rational a[8][9];
    for (int col = 0; col < 8; ++col) {
        Scalar basis;
        basis.set_coord(kRadicals[col / 2], col % 2 != 0, Rational(1));
        Scalar prod = (*this) * basis;
        for (int row = 0; row < 8; ++row)
            a[row][col] = prod.coord(kRadicals[row / 2], row % 2 != 0);
    }
    for (int row = 0; row < 8; ++row) a[row][8] = 0;
    a[0][8] = 1;

    // Gauss-Jordan over Q. The field is an 8-dimensional Q-algebra without
    // zero divisors, so the matrix is nonsingular for nonzero input.
    for (int col = 0; col < 8; ++col) {
        int pivot = -1;
        for (int row = col; row < 8; ++row)
            if (sgn(a[row][col]) != 0) { pivot = row; break; }
        if (pivot < 0) throw DivisionByZero();
        if (pivot != col)
            for (int k = col; k < 9; ++k) std::swap(a[pivot][k], a[col][k]);
        Rational inv_p = 1 / a[col][col];
        for (int k = col; k < 9; ++k) a[col][k] *= inv_p;
        for (int row = 0; row < 8; ++row) {
            if (row == col || sgn(a[row][col]) == 0) continue;
            Rational f = a[row][col];
            for (int k = col; k < 9; ++k) a[row][k] -= f * a[col][k];
        }
    }
    Scalar out;
    for (int row = 0; row < 8; ++row)
        out.set_coord(kRadicals[row / 2], row % 2 != 0, a[row][8]);
    return out;
}

Scalar operator/(const Scalar& lhs, const Scalar& rhs) {
    return lhs * rhs.inverse();
}

double Scalar::to_double_real() const {
    static const double vals[4] = {1.0, std::sqrt(2.0), std::sqrt(3.0), std::sqrt(6.0)};
    double out = 0.0;
    for (int r = 0; r < 4; ++r) out += c_[2 * r].get_d() * vals[r];
    return out;
}

double Scalar::to_double_imag() const {
    static const double vals[4] = {1.0, std::sqrt(2.0), std::sqrt(3.0), std::sqrt(6.0)};
    double out = 0.0;
    for (int r = 0; r < 4; ++r) out += c_[2 * r + 1].get_d() * vals[r];
    return out;
}

std::optional<Scalar> scalar_sqrt(const Scalar& value) {
    if (!value.is_rational()) return std::nullopt;
    Rational q = value.rational_part();
    if (sgn(q) == 0) return Scalar();
    bool negative = sgn(q) < 0;
    if (negative) q = -q;
    // sqrt(p/d) = sqrt(p*d)/d; the result lies in the field iff p*d = s^2 * t
    // with t in {1, 2, 3, 6}.
    mpz_class t = q.get_num() * q.get_den();
    static const long kBases[4] = {1, 2, 3, 6};
    for (long base : kBases) {
        if (!mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(base))) continue;
        mpz_class reduced = t / base;
        if (mpz_perfect_square_p(reduced.get_mpz_t()) == 0) continue;
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), reduced.get_mpz_t());
        Rational coeff(s, q.get_den());
        coeff.canonicalize();
        Scalar root;
        switch (base) {
            case 1: root = Scalar::from_rational(coeff); break;
            case 2: root = Scalar::from_rational(coeff) * Scalar::sqrt2(); break;
            case 3: root = Scalar::from_rational(coeff) * Scalar::sqrt3(); break;
            default: root = Scalar::from_rational(coeff) * Scalar::sqrt6(); break;
        }
        if (negative) root = root * Scalar::i();
        return root;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

struct Token {
    enum Kind { kNumber, kPlus, kMinus, kStar, kSlash, kLParen, kRParen, kI, kSqrt2, kSqrt3, kSqrt6, kEnd } kind;
    std::size_t offset;
    mpz_class number;  // valid for kNumber
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        current_.offset = pos_;
        if (pos_ >= text_.size()) {
            current_.kind = Token::kEnd;
            return;
        }
        char c = text_[pos_];
        switch (c) {
            case '+': current_.kind = Token::kPlus; ++pos_; return;
            case '-': current_.kind = Token::kMinus; ++pos_; return;
            case '*': current_.kind = Token::kStar; ++pos_; return;
            case '/': current_.kind = Token::kSlash; ++pos_; return;
            case '(': current_.kind = Token::kLParen; ++pos_; return;
            case ')': current_.kind = Token::kRParen; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            current_.kind = Token::kNumber;
            current_.number = mpz_class(text_.substr(start, pos_ - start), 10);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])))) ++pos_;
            std::string word = text_.substr(start, pos_ - start);
            if (word == "i") { current_.kind = Token::kI; return; }
            if (word == "sqrt2") { current_.kind = Token::kSqrt2; return; }
            if (word == "sqrt3") { current_.kind = Token::kSqrt3; return; }
            if (word == "sqrt6") { current_.kind = Token::kSqrt6; return; }
            throw ParseError(start, {"i", "sqrt2", "sqrt3", "sqrt6"},
                             "unknown word '" + word + "' at offset " + std::to_string(start));
        }
        throw ParseError(pos_, {"number", "i", "sqrt2", "sqrt3", "sqrt6", "(", "-"},
                         std::string("unexpected character '") + c + "' at offset " + std::to_string(pos_));
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Scalar parse() {
        Scalar value = expr();
        if (lex_.peek().kind != Token::kEnd)
            fail({"+", "-", "*", "end of input"});
        return value;
    }

private:
    [[noreturn]] void fail(std::vector<std::string> expected) {
        std::size_t off = lex_.peek().offset;
        std::string msg = "parse error at offset " + std::to_string(off) + "; expected one of:";
        for (const auto& e : expected) msg += " " + e;
        throw ParseError(off, std::move(expected), msg);
    }

    Scalar expr() {
        Scalar value = term();
        while (true) {
            Token::Kind k = lex_.peek().kind;
            if (k == Token::kPlus) {
                lex_.take();
                value += term();
            } else if (k == Token::kMinus) {
                lex_.take();
                value -= term();
            } else {
                return value;
            }
        }
    }

    Scalar term() {
        Scalar value = factor();
        while (lex_.peek().kind == Token::kStar) {
            lex_.take();
            value = value * factor();
        }
        return value;
    }

    Scalar factor() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Token::kNumber: return rational_factor();
            case Token::kI: lex_.take(); return Scalar::i();
            case Token::kSqrt2: lex_.take(); return Scalar::sqrt2();
            case Token::kSqrt3: lex_.take(); return Scalar::sqrt3();
            case Token::kSqrt6: lex_.take(); return Scalar::sqrt6();
            case Token::kMinus: lex_.take(); return -factor();
            case Token::kLParen: {
                lex_.take();
                Scalar value = expr();
                if (lex_.peek().kind != Token::kRParen) fail({")"});
                lex_.take();
                return value;
            }
            default:
                fail({"number", "i", "sqrt2", "sqrt3", "sqrt6", "(", "-"});
        }
    }

    Scalar rational_factor() {
        Token num = lex_.take();
        if (lex_.peek().kind != Token::kSlash)
            return Scalar::from_rational(Rational(num.number));
        lex_.take();  // '/'
        if (lex_.peek().kind != Token::kNumber) fail({"positive integer"});
        Token den = lex_.take();
        if (sgn(den.number) == 0) {
            std::size_t off = den.offset;
            throw ParseError(off, {"positive integer"},
                             "zero denominator at offset " + std::to_string(off));
        }
        Rational r(num.number, den.number);
        r.canonicalize();
        return Scalar::from_rational(r);
    }

    Lexer lex_;
};

}  // namespace

Scalar parse_scalar(const std::string& text) {
    return Parser(text).parse();
}

std::string format_scalar(const Scalar& x) {
    using R = Scalar::Radical;
    static constexpr R kRadicals[4] = {R::kOne, R::kSqrt2, R::kSqrt3, R::kSqrt6};
    static const char* kSuffix[4] = {"", "sqrt2", "sqrt3", "sqrt6"};

    std::string out;
    for (int r = 0; r < 4; ++r) {
        for (int u = 0; u < 2; ++u) {
            const Rational& q = x.coord(kRadicals[r], u != 0);
            if (sgn(q) == 0) continue;
            bool negative = sgn(q) < 0;
            Rational mag = negative ? Rational(-q) : q;

            std::string suffix = kSuffix[r];
            if (u != 0) suffix = suffix.empty() ? "i" : suffix + "*i";

            std::string body;
            if (suffix.empty())
                body = mag.get_str();
            else if (mag == 1)
                body = suffix;
            else
                body = mag.get_str() + "*" + suffix;

            if (out.empty())
                out = (negative ? "-" : "") + body;
            else
                out += (negative ? " - " : " + ") + body;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace cwlab
