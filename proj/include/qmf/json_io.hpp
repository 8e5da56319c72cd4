#ifndef QMF_JSON_IO_HPP
#define QMF_JSON_IO_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmf/arith.hpp"
#include "qmf/harmonic.hpp"
#include "qmf/hecke.hpp"
#include "qmf/poly.hpp"

namespace qmf {

using json = nlohmann::json;

// Polynomial wire format: {"l":int, "frame":"x"|"y"|"e",
// "terms":[{"exp":[i,j,k], "num":"<decimal>", "den":"<decimal>"}]} with terms
// in canonical order and big integers as decimal strings.
json poly_to_json(const HomogeneousPoly& f);
HomogeneousPoly poly_from_json(const json& j);

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const json& j);

struct DatabaseRecord {
    int l = 0;
    Variant variant = Variant::Gamma;
    std::string algorithm = "main";  // provenance: main | ecoord
    long dimension = 0;
    std::vector<HomogeneousPoly> basis;
    std::vector<Rational> scales;
    std::vector<HeckeMatrix> hecke;
    std::optional<CongruenceCertificate> certificate;

    bool operator==(const DatabaseRecord& o) const;
};

DatabaseRecord record_from_basis(const BasisResult& b, const std::string& algorithm);
json record_to_json(const DatabaseRecord& r);
DatabaseRecord record_from_json(const json& j);

json certificate_to_json(const CongruenceCertificate& c);
CongruenceCertificate certificate_from_json(const json& j);

// Fixture files: tables of reference polynomials.
struct XBasisFixtureEntry {
    int l;
    Variant variant;
    std::vector<HomogeneousPoly> polys;  // as printed, X frame
};

struct EKernelFixtureEntry {
    int m, eps1, eps2;
    std::vector<HomogeneousPoly> polys;  // as printed, E frame
};

// Linear relation between an X-frame table entry and an e-kernel entry:
// x_polys[r] = sum_k coeffs[r][k] * ecoord_to_x(eps1, eps2, e_polys[k]).
struct FixtureRelation {
    int l;
    Variant variant;
    int m, eps1, eps2;
    std::vector<std::vector<Rational>> coeffs;
};

struct FixtureFile {
    std::string kind;  // "x_basis_tables" | "e_kernel_tables"
    std::vector<XBasisFixtureEntry> x_entries;
    std::vector<EKernelFixtureEntry> e_entries;
    std::vector<FixtureRelation> relations;
    std::map<int, std::array<long, 3>> dims;  // l -> (gamma, plus, minus)
};

FixtureFile load_fixture_file(const std::string& path);

}  // namespace qmf

#endif
