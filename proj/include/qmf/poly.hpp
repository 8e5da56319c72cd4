#ifndef QMF_POLY_HPP
#define QMF_POLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qmf/rational.hpp"

namespace qmf {

// Coordinate frame of a polynomial.
//   X: the integral lattice coordinates, quadratic form 3*sum(xi^2)-2*sum(xi*xj)
//   Y: the orthonormal coordinates, quadratic form sum(yi^2)
//   E: elementary symmetric coordinates e1,e2,e3 in yi^2, weights 2,4,6
enum class Frame : std::uint8_t { X, Y, E };

const char* frame_name(Frame f);
Frame frame_from_name(const std::string& s);

struct ExponentTriple {
    int a = 0, b = 0, c = 0;

    int sum() const { return a + b + c; }
    int weighted() const { return 2 * a + 4 * b + 6 * c; }

    bool operator==(const ExponentTriple& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator!=(const ExponentTriple& o) const { return !(*this == o); }
};

// Map order: for equal-degree triples this is the canonical descending
// term order of the X/Y frames (highest first-variable exponent first).
struct TermOrderDesc {
    bool operator()(const ExponentTriple& s, const ExponentTriple& t) const {
        if (s.a != t.a) return s.a > t.a;
        if (s.b != t.b) return s.b > t.b;
        return s.c > t.c;
    }
};

std::size_t poly_space_dim(int l);  // (l+1)(l+2)/2

// Position of x1^a x2^b x3^c among the degree-l monomials:
// a*(l+1) - a*(a-1)/2 + b, an order isomorphism onto 0..dim-1.
std::size_t index_of(int l, const ExponentTriple& t);
ExponentTriple monomial_of(int l, std::size_t m);

class HomogeneousPoly {
public:
    using TermMap = std::map<ExponentTriple, Rational, TermOrderDesc>;

    HomogeneousPoly() : l_(0), frame_(Frame::X) {}
    HomogeneousPoly(int l, Frame frame) : l_(l), frame_(frame) {}

    static HomogeneousPoly monomial(Frame frame, const ExponentTriple& t, const Rational& coeff = 1);
    static HomogeneousPoly constant(Frame frame, const Rational& value);

    int degree() const { return l_; }
    Frame frame() const { return frame_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coeff(const ExponentTriple& t) const;
    // Adds c*x^t, dropping the term if the sum cancels. Validates the degree.
    void add_term(const ExponentTriple& t, const Rational& c);

    bool operator==(const HomogeneousPoly& o) const {
        return l_ == o.l_ && frame_ == o.frame_ && terms_ == o.terms_;
    }
    bool operator!=(const HomogeneousPoly& o) const { return !(*this == o); }

    HomogeneousPoly operator+(const HomogeneousPoly& o) const;
    HomogeneousPoly operator-(const HomogeneousPoly& o) const;
    HomogeneousPoly operator-() const;
    HomogeneousPoly operator*(const Rational& s) const;

    bool has_integer_coeffs() const;

    // Dense coefficient vector in the canonical coordinate order of the frame
    // (X/Y: index_of; E: weighted_monomial_index).
    std::vector<Rational> dense() const;
    static HomogeneousPoly from_dense(int l, Frame frame, const std::vector<Rational>& v);

    std::string to_text() const;

private:
    int l_;
    Frame frame_;
    TermMap terms_;
};

HomogeneousPoly mul(const HomogeneousPoly& f, const HomogeneousPoly& g);
Rational eval(const HomogeneousPoly& f, const std::array<Rational, 3>& point);

// Laplace operator of the X-frame quadratic form; degree l -> l-2 (zero
// polynomial of the empty space when l < 2).
HomogeneousPoly laplacian(const HomogeneousPoly& f);
// Euclidean Laplacian in the Y frame.
HomogeneousPoly laplacian_y(const HomogeneousPoly& f);

// Keeps the exponents whose (integer) coefficient is odd, as a 0/1 polynomial.
HomogeneousPoly mod2_reduce(const HomogeneousPoly& f);

// X <-> Y change of variables: y1=-x1+x2+x3, y2=x1-x2+x3, y3=x1+x2-x3 and
// x1=(y2+y3)/2, x2=(y1+y3)/2, x3=(y1+y2)/2. Involutive up to the frame tag.
HomogeneousPoly change_frame_xy(const HomogeneousPoly& f);

struct PrimitiveForm {
    HomogeneousPoly poly;  // integer coefficients, gcd 1, leading coefficient > 0
    Rational scale;        // input = scale * poly
};
PrimitiveForm primitive_normalize(const HomogeneousPoly& f);

// Substitutes three linear forms (rows) for the variables: result(v) = f(v*rows).
HomogeneousPoly substitute_linear(const HomogeneousPoly& f,
                                  const std::array<std::array<Rational, 3>, 3>& rows,
                                  Frame out_frame);

// E-frame monomial bookkeeping (weighted degree m, weights 2,4,6), in the
// canonical descending term order: ascending c, then ascending b.
std::vector<ExponentTriple> weighted_monomials(int m);
std::size_t weighted_monomial_index(int m, const ExponentTriple& t);

}  // namespace qmf

#endif
