#include "qmf/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace qmf {

json rational_to_json(const Rational& r) {
    return json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

Rational rational_from_json(const json& j) {
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    return make_rational(Int(j.at("num").get<std::string>()),
                         Int(j.at("den").get<std::string>()));
}

json poly_to_json(const HomogeneousPoly& f) {
    json terms = json::array();
    // Canonical order: map order for X/Y, weighted order for E.
    if (f.frame() == Frame::E) {
        for (const ExponentTriple& t : weighted_monomials(f.degree())) {
            Rational c = f.coeff(t);
            if (c == 0) continue;
            terms.push_back(json{{"exp", {t.a, t.b, t.c}},
                                 {"num", c.get_num().get_str()},
                                 {"den", c.get_den().get_str()}});
        }
    } else {
        for (const auto& [t, c] : f.terms())
            terms.push_back(json{{"exp", {t.a, t.b, t.c}},
                                 {"num", c.get_num().get_str()},
                                 {"den", c.get_den().get_str()}});
    }
    return json{{"l", f.degree()}, {"frame", frame_name(f.frame())}, {"terms", terms}};
}

HomogeneousPoly poly_from_json(const json& j) {
    HomogeneousPoly f(j.at("l").get<int>(), frame_from_name(j.at("frame").get<std::string>()));
    for (const json& t : j.at("terms")) {
        const auto& e = t.at("exp");
        f.add_term({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()},
                   make_rational(Int(t.at("num").get<std::string>()),
                                 Int(t.at("den").get<std::string>())));
    }
    return f;
}

json matrix_to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

RationalMatrix matrix_from_json(const json& j) {
    RationalMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const json& rows = j.at("entries");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k)
            m.at(i, k) = rational_from_string(rows.at(i).at(k).get<std::string>());
    return m;
}

bool DatabaseRecord::operator==(const DatabaseRecord& o) const {
    if (l != o.l || variant != o.variant || algorithm != o.algorithm ||
        dimension != o.dimension || basis != o.basis || scales != o.scales)
        return false;
    if (hecke.size() != o.hecke.size()) return false;
    for (std::size_t i = 0; i < hecke.size(); ++i)
        if (hecke[i].p != o.hecke[i].p || hecke[i].l != o.hecke[i].l ||
            hecke[i].variant != o.hecke[i].variant || hecke[i].matrix != o.hecke[i].matrix)
            return false;
    if (certificate.has_value() != o.certificate.has_value()) return false;
    if (certificate.has_value()) {
        const auto &a = *certificate, &b = *o.certificate;
        if (a.l != b.l || a.found != b.found || a.pair != b.pair || a.index_i != b.index_i ||
            a.index_j != b.index_j || a.multiplier != b.multiplier || a.sign != b.sign ||
            a.certified != b.certified || a.combination != b.combination)
            return false;
    }
    return true;
}

DatabaseRecord record_from_basis(const BasisResult& b, const std::string& algorithm) {
    DatabaseRecord r;
    r.l = b.l;
    r.variant = b.variant;
    r.algorithm = algorithm;
    r.dimension = static_cast<long>(b.dim());
    r.basis = b.basis;
    r.scales = b.scales;
    return r;
}

json certificate_to_json(const CongruenceCertificate& c) {
    json combo = json::array();
    for (const auto& [idx, coeff] : c.combination)
        combo.push_back(json{{"index", idx}, {"coeff", to_string(coeff)}});
    return json{{"l", c.l},
                {"found", c.found},
                {"pair", c.pair},
                {"index_i", c.index_i},
                {"index_j", c.index_j},
                {"multiplier", c.multiplier},
                {"sign", c.sign},
                {"combination", combo},
                {"candidates_tried", c.candidates_tried},
                {"certified", poly_to_json(c.certified)}};
}

CongruenceCertificate certificate_from_json(const json& j) {
    CongruenceCertificate c;
    c.l = j.at("l").get<int>();
    c.found = j.at("found").get<bool>();
    c.pair = j.at("pair").get<bool>();
    c.index_i = j.at("index_i").get<std::size_t>();
    c.index_j = j.at("index_j").get<std::size_t>();
    c.multiplier = j.at("multiplier").get<long>();
    c.sign = j.at("sign").get<int>();
    c.candidates_tried = j.at("candidates_tried").get<long>();
    c.certified = poly_from_json(j.at("certified"));
    for (const json& e : j.at("combination"))
        c.combination.emplace_back(e.at("index").get<std::size_t>(),
                                   rational_from_string(e.at("coeff").get<std::string>()));
    return c;
}

json record_to_json(const DatabaseRecord& r) {
    json basis = json::array(), scales = json::array();
    for (const auto& p : r.basis) basis.push_back(poly_to_json(p));
    for (const auto& s : r.scales) scales.push_back(rational_to_json(s));
    json out{{"l", r.l},
             {"variant", variant_name(r.variant)},
             {"algorithm", r.algorithm},
             {"dimension", r.dimension},
             {"basis", basis},
             {"scales", scales}};
    if (!r.hecke.empty()) {
        json hk = json::array();
        for (const auto& h : r.hecke)
            hk.push_back(json{{"p", h.p.get_str()},
                              {"matrix", matrix_to_json(h.matrix)},
                              {"charpoly", [&] {
                                   json cp = json::array();
                                   for (const auto& c : char_poly(h.matrix))
                                       cp.push_back(to_string(c));
                                   return cp;
                               }()}});
        out["hecke"] = hk;
    }
    if (r.certificate) out["certificate"] = certificate_to_json(*r.certificate);
    return out;
}

DatabaseRecord record_from_json(const json& j) {
    DatabaseRecord r;
    r.l = j.at("l").get<int>();
    r.variant = variant_from_name(j.at("variant").get<std::string>());
    r.algorithm = j.at("algorithm").get<std::string>();
    r.dimension = j.at("dimension").get<long>();
    for (const json& p : j.at("basis")) r.basis.push_back(poly_from_json(p));
    for (const json& s : j.at("scales")) r.scales.push_back(rational_from_json(s));
    if (j.contains("hecke"))
        for (const json& h : j.at("hecke")) {
            HeckeMatrix hm;
            hm.p = Int(h.at("p").get<std::string>());
            hm.l = r.l;
            hm.variant = r.variant;
            hm.matrix = matrix_from_json(h.at("matrix"));
            r.hecke.push_back(std::move(hm));
        }
    if (j.contains("certificate")) r.certificate = certificate_from_json(j.at("certificate"));
    return r;
}

FixtureFile load_fixture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file: " + path);
    json j;
    in >> j;
    FixtureFile f;
    f.kind = j.at("kind").get<std::string>();
    if (f.kind == "x_basis_tables") {
        if (j.contains("dims"))
            for (const auto& [key, val] : j.at("dims").items())
                f.dims[std::stoi(key)] = {val.at(0).get<long>(), val.at(1).get<long>(),
                                          val.at(2).get<long>()};
        for (const json& e : j.at("entries")) {
            XBasisFixtureEntry entry;
            entry.l = e.at("l").get<int>();
            entry.variant = variant_from_name(e.at("variant").get<std::string>());
            for (const json& p : e.at("polys")) entry.polys.push_back(poly_from_json(p));
            f.x_entries.push_back(std::move(entry));
        }
    } else if (f.kind == "e_kernel_tables") {
        for (const json& e : j.at("entries")) {
            EKernelFixtureEntry entry;
            entry.m = e.at("m").get<int>();
            entry.eps1 = e.at("eps").at(0).get<int>();
            entry.eps2 = e.at("eps").at(1).get<int>();
            for (const json& p : e.at("polys")) entry.polys.push_back(poly_from_json(p));
            f.e_entries.push_back(std::move(entry));
        }
        if (j.contains("relations"))
            for (const json& e : j.at("relations")) {
                FixtureRelation rel;
                rel.l = e.at("l").get<int>();
                rel.variant = variant_from_name(e.at("variant").get<std::string>());
                rel.m = e.at("m").get<int>();
                rel.eps1 = e.at("eps").at(0).get<int>();
                rel.eps2 = e.at("eps").at(1).get<int>();
                for (const json& row : e.at("coeffs")) {
                    std::vector<Rational> r;
                    for (const json& c : row) r.push_back(rational_from_string(c.get<std::string>()));
                    rel.coeffs.push_back(std::move(r));
                }
                f.relations.push_back(std::move(rel));
            }
    } else {
        throw std::runtime_error("unknown fixture kind: " + f.kind);
    }
    return f;
}

}  // namespace qmf
