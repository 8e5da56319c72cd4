#include "qmf/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qmf {

const char* frame_name(Frame f) {
    switch (f) {
        case Frame::X: return "x";
        case Frame::Y: return "y";
        case Frame::E: return "e";
    }
    return "?";
}

Frame frame_from_name(const std::string& s) {
    if (s == "x") return Frame::X;
    if (s == "y") return Frame::Y;
    if (s == "e") return Frame::E;
    throw std::invalid_argument("unknown frame: " + s);
}

std::size_t poly_space_dim(int l) {
    if (l < 0) return 0;
    return static_cast<std::size_t>(l + 1) * (l + 2) / 2;
}

std::size_t index_of(int l, const ExponentTriple& t) {
    if (t.a < 0 || t.b < 0 || t.c < 0 || t.sum() != l)
        throw std::invalid_argument("index_of: exponent outside the degree-l simplex");
    return static_cast<std::size_t>(t.a) * (l + 1) - static_cast<std::size_t>(t.a) * (t.a - 1) / 2 +
           t.b;
}

ExponentTriple monomial_of(int l, std::size_t m) {
    if (m >= poly_space_dim(l)) throw std::invalid_argument("monomial_of: index out of range");
    // largest a with a*(l+1) - a*(a-1)/2 <= m
    int a = 0;
    while (a + 1 <= l &&
           static_cast<std::size_t>(a + 1) * (l + 1) - static_cast<std::size_t>(a + 1) * a / 2 <= m)
        ++a;
    std::size_t base = static_cast<std::size_t>(a) * (l + 1) - static_cast<std::size_t>(a) * (a - 1) / 2;
    int b = static_cast<int>(m - base);
    return {a, b, l - a - b};
}

namespace {

int degree_in_frame(Frame frame, const ExponentTriple& t) {
    return frame == Frame::E ? t.weighted() : t.sum();
}

void check_frame(const HomogeneousPoly& f, Frame expected, const char* what) {
    if (f.frame() != expected)
        throw std::invalid_argument(std::string(what) + ": wrong frame, expected " +
                                    frame_name(expected));
}

}  // namespace

HomogeneousPoly HomogeneousPoly::monomial(Frame frame, const ExponentTriple& t,
                                          const Rational& coeff) {
    HomogeneousPoly p(degree_in_frame(frame, t), frame);
    p.add_term(t, coeff);
    return p;
}

HomogeneousPoly HomogeneousPoly::constant(Frame frame, const Rational& value) {
    HomogeneousPoly p(0, frame);
    p.add_term({0, 0, 0}, value);
    return p;
}

Rational HomogeneousPoly::coeff(const ExponentTriple& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
}

void HomogeneousPoly::add_term(const ExponentTriple& t, const Rational& c) {
    if (c == 0) return;
    if (t.a < 0 || t.b < 0 || t.c < 0 || degree_in_frame(frame_, t) != l_)
        throw std::invalid_argument("add_term: exponent of wrong degree");
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

HomogeneousPoly HomogeneousPoly::operator+(const HomogeneousPoly& o) const {
    if (l_ != o.l_ || frame_ != o.frame_) throw std::invalid_argument("poly +: mismatch");
    HomogeneousPoly out = *this;
    for (const auto& [t, c] : o.terms_) out.add_term(t, c);
    return out;
}

HomogeneousPoly HomogeneousPoly::operator-(const HomogeneousPoly& o) const {
    if (l_ != o.l_ || frame_ != o.frame_) throw std::invalid_argument("poly -: mismatch");
    HomogeneousPoly out = *this;
    for (const auto& [t, c] : o.terms_) out.add_term(t, -c);
    return out;
}

HomogeneousPoly HomogeneousPoly::operator-() const {
    HomogeneousPoly out(l_, frame_);
    for (const auto& [t, c] : terms_) out.terms_.emplace(t, -c);
    return out;
}

HomogeneousPoly HomogeneousPoly::operator*(const Rational& s) const {
    HomogeneousPoly out(l_, frame_);
    if (s == 0) return out;
    for (const auto& [t, c] : terms_) out.terms_.emplace(t, c * s);
    return out;
}

bool HomogeneousPoly::has_integer_coeffs() const {
    for (const auto& [t, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

std::vector<Rational> HomogeneousPoly::dense() const {
    if (frame_ == Frame::E) {
        std::vector<Rational> v(weighted_monomials(l_).size());
        for (const auto& [t, c] : terms_) v[weighted_monomial_index(l_, t)] = c;
        return v;
    }
    std::vector<Rational> v(poly_space_dim(l_));
    for (const auto& [t, c] : terms_) v[index_of(l_, t)] = c;
    return v;
}

HomogeneousPoly HomogeneousPoly::from_dense(int l, Frame frame, const std::vector<Rational>& v) {
    HomogeneousPoly p(l, frame);
    if (frame == Frame::E) {
        auto mons = weighted_monomials(l);
        if (v.size() != mons.size()) throw std::invalid_argument("from_dense: length mismatch");
        for (std::size_t i = 0; i < mons.size(); ++i)
            if (v[i] != 0) p.terms_.emplace(mons[i], v[i]);
        return p;
    }
    if (v.size() != poly_space_dim(l)) throw std::invalid_argument("from_dense: length mismatch");
    for (std::size_t m = 0; m < v.size(); ++m)
        if (v[m] != 0) p.terms_.emplace(monomial_of(l, m), v[m]);
    return p;
}

HomogeneousPoly mul(const HomogeneousPoly& f, const HomogeneousPoly& g) {
    if (f.frame() != g.frame()) throw std::invalid_argument("mul: frame mismatch");
    HomogeneousPoly out(f.degree() + g.degree(), f.frame());
    for (const auto& [s, cs] : f.terms())
        for (const auto& [t, ct] : g.terms())
            out.add_term({s.a + t.a, s.b + t.b, s.c + t.c}, cs * ct);
    return out;
}

Rational eval(const HomogeneousPoly& f, const std::array<Rational, 3>& point) {
    // Cache powers up to the degree actually used.
    auto powers = [&](int var) {
        std::vector<Rational> p{1};
        for (const auto& [t, c] : f.terms()) {
            int e = var == 0 ? t.a : var == 1 ? t.b : t.c;
            while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * point[var]);
        }
        return p;
    };
    std::vector<Rational> pa = powers(0), pb = powers(1), pc = powers(2);
    Rational acc = 0;
    for (const auto& [t, c] : f.terms()) acc += c * pa[t.a] * pb[t.b] * pc[t.c];
    return acc;
}

HomogeneousPoly laplacian(const HomogeneousPoly& f) {
    check_frame(f, Frame::X, "laplacian");
    const int l = f.degree();
    HomogeneousPoly out(l >= 2 ? l - 2 : 0, Frame::X);
    if (l < 2) return out;
    for (const auto& [t, c] : f.terms()) {
        const Rational half = c / 2;
        if (t.a >= 2) out.add_term({t.a - 2, t.b, t.c}, half * (t.a * (t.a - 1)));
        if (t.b >= 2) out.add_term({t.a, t.b - 2, t.c}, half * (t.b * (t.b - 1)));
        if (t.c >= 2) out.add_term({t.a, t.b, t.c - 2}, half * (t.c * (t.c - 1)));
        if (t.a >= 1 && t.b >= 1) out.add_term({t.a - 1, t.b - 1, t.c}, half * (t.a * t.b));
        if (t.a >= 1 && t.c >= 1) out.add_term({t.a - 1, t.b, t.c - 1}, half * (t.a * t.c));
        if (t.b >= 1 && t.c >= 1) out.add_term({t.a, t.b - 1, t.c - 1}, half * (t.b * t.c));
    }
    return out;
}

HomogeneousPoly laplacian_y(const HomogeneousPoly& f) {
    check_frame(f, Frame::Y, "laplacian_y");
    const int l = f.degree();
    HomogeneousPoly out(l >= 2 ? l - 2 : 0, Frame::Y);
    if (l < 2) return out;
    for (const auto& [t, c] : f.terms()) {
        if (t.a >= 2) out.add_term({t.a - 2, t.b, t.c}, c * (t.a * (t.a - 1)));
        if (t.b >= 2) out.add_term({t.a, t.b - 2, t.c}, c * (t.b * (t.b - 1)));
        if (t.c >= 2) out.add_term({t.a, t.b, t.c - 2}, c * (t.c * (t.c - 1)));
    }
    return out;
}

HomogeneousPoly mod2_reduce(const HomogeneousPoly& f) {
    HomogeneousPoly out(f.degree(), f.frame());
    for (const auto& [t, c] : f.terms()) {
        if (!is_integer(c)) throw std::invalid_argument("mod2_reduce: non-integer coefficient");
        if (mpz_odd_p(c.get_num_mpz_t())) out.add_term(t, 1);
    }
    return out;
}

HomogeneousPoly substitute_linear(const HomogeneousPoly& f,
                                  const std::array<std::array<Rational, 3>, 3>& rows,
                                  Frame out_frame) {
    if (f.frame() == Frame::E || out_frame == Frame::E)
        throw std::invalid_argument("substitute_linear: e-frame has no linear substitution");
    const int l = f.degree();
    HomogeneousPoly out(l, out_frame);
    if (f.is_zero()) return out;
    if (l == 0) {
        out.add_term({0, 0, 0}, f.coeff({0, 0, 0}));
        return out;
    }
    // Images of all monomials, built degree by degree: each monomial is a
    // lower one times a variable, so its image is the parent image times the
    // substituted linear form.
    std::vector<std::vector<Rational>> prev{{Rational(1)}};
    std::vector<std::vector<Rational>> cur;
    for (int k = 1; k <= l; ++k) {
        const std::size_t dk = poly_space_dim(k);
        cur.assign(dk, {});
        for (std::size_t m = 0; m < dk; ++m) {
            ExponentTriple t = monomial_of(k, m);
            int var;
            ExponentTriple parent = t;
            if (t.a > 0) {
                var = 0;
                --parent.a;
            } else if (t.b > 0) {
                var = 1;
                --parent.b;
            } else {
                var = 2;
                --parent.c;
            }
            const std::vector<Rational>& src = prev[index_of(k - 1, parent)];
            std::vector<Rational> img(dk);
            for (std::size_t mp = 0; mp < src.size(); ++mp) {
                if (src[mp] == 0) continue;
                ExponentTriple s = monomial_of(k - 1, mp);
                if (rows[var][0] != 0)
                    img[index_of(k, {s.a + 1, s.b, s.c})] += src[mp] * rows[var][0];
                if (rows[var][1] != 0)
                    img[index_of(k, {s.a, s.b + 1, s.c})] += src[mp] * rows[var][1];
                if (rows[var][2] != 0)
                    img[index_of(k, {s.a, s.b, s.c + 1})] += src[mp] * rows[var][2];
            }
            cur[m] = std::move(img);
        }
        prev.swap(cur);
    }
    std::vector<Rational> acc(poly_space_dim(l));
    for (const auto& [t, c] : f.terms()) {
        const std::vector<Rational>& img = prev[index_of(l, t)];
        for (std::size_t m = 0; m < acc.size(); ++m)
            if (img[m] != 0) acc[m] += c * img[m];
    }
    return HomogeneousPoly::from_dense(l, out_frame, acc);
}

HomogeneousPoly change_frame_xy(const HomogeneousPoly& f) {
    if (f.frame() == Frame::E) throw std::invalid_argument("change_frame_xy: e-frame input");
    const Rational h = make_rational(1, 2);
    if (f.frame() == Frame::X) {
        // x1=(y2+y3)/2, x2=(y1+y3)/2, x3=(y1+y2)/2
        return substitute_linear(f, {{{0, h, h}, {h, 0, h}, {h, h, 0}}}, Frame::Y);
    }
    // y1=-x1+x2+x3, y2=x1-x2+x3, y3=x1+x2-x3
    return substitute_linear(f, {{{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}}}, Frame::X);
}

PrimitiveForm primitive_normalize(const HomogeneousPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("primitive_normalize: zero polynomial");
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [t, c] : f.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational scale = make_rational(num_gcd, den_lcm);
    const auto& lead = *f.terms().begin();  // canonical descending order
    if (lead.second < 0) scale = -scale;
    PrimitiveForm out{f * (1 / scale), scale};
    return out;
}

std::vector<ExponentTriple> weighted_monomials(int m) {
    if (m < 0 || m % 2 != 0) throw std::invalid_argument("weighted_monomials: odd degree");
    std::vector<ExponentTriple> mons;
    for (int j3 = 0; 6 * j3 <= m; ++j3)
        for (int j2 = 0; 6 * j3 + 4 * j2 <= m; ++j2)
            mons.push_back({(m - 6 * j3 - 4 * j2) / 2, j2, j3});
    return mons;
}

std::size_t weighted_monomial_index(int m, const ExponentTriple& t) {
    if (t.a < 0 || t.b < 0 || t.c < 0 || t.weighted() != m)
        throw std::invalid_argument("weighted_monomial_index: wrong weighted degree");
    std::size_t idx = 0;
    for (int j3 = 0; j3 < t.c; ++j3) idx += static_cast<std::size_t>((m - 6 * j3) / 4) + 1;
    return idx + t.b;
}

std::string HomogeneousPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<ExponentTriple, Rational>> ordered(terms_.begin(), terms_.end());
    if (frame_ == Frame::E)
        std::sort(ordered.begin(), ordered.end(), [](const auto& s, const auto& t) {
            if (s.first.c != t.first.c) return s.first.c < t.first.c;
            return s.first.b < t.first.b;
        });
    const char* base = frame_ == Frame::X ? "x" : frame_ == Frame::Y ? "y" : "e";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : ordered) {
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        const int exps[3] = {t.a, t.b, t.c};
        for (int v = 0; v < 3; ++v) {
            if (exps[v] == 0) continue;
            if (!mono.empty()) mono += " ";
            mono += base + std::to_string(v + 1);
            if (exps[v] > 1) mono += "^" + std::to_string(exps[v]);
        }
        if (mono.empty()) {
            os << to_string(abs);
        } else {
            if (abs != 1) os << to_string(abs) << " ";
            os << mono;
        }
    }
    return os.str();
}

}  // namespace qmf
