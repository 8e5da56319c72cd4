// Command-line front end: computes bases, dimension tables, Hecke matrices,
// congruence certificates and CM data, verifies fixture tables, and exports
// the database. Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qmf/arith.hpp"
#include "qmf/ecoord.hpp"
#include "qmf/harmonic.hpp"
#include "qmf/hecke.hpp"
#include "qmf/json_io.hpp"

using namespace qmf;

namespace {

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
    Range r;
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoi(s);
    } else {
        r.lo = std::stoi(s.substr(0, dots));
        r.hi = std::stoi(s.substr(dots + 2));
    }
    if (r.lo < 0 || r.hi < r.lo) throw CLI::ValidationError("degree range", "invalid range " + s);
    return r;
}

std::vector<Variant> parse_variants(const std::string& s) {
    if (s == "both-signs") return {Variant::Plus, Variant::Minus};
    if (s == "all") return {Variant::Gamma, Variant::Plus, Variant::Minus};
    return {variant_from_name(s)};
}

std::vector<long> parse_primes(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        long p = std::stol(item);
        if (p < 2) throw CLI::ValidationError("primes", "not a prime: " + item);
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw CLI::ValidationError("primes", "not a prime: " + item);
        out.push_back(p);
    }
    return out;
}

unsigned worker_count() {
    if (const char* env = std::getenv("QMF_WORKERS")) {
        long n = std::atol(env);
        if (n > 0) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Ordered parallel map: results land by index, so output never depends on
// scheduling.
template <typename T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(n);
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(worker_count(), n ? n : 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w)
        threads.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) {
                try {
                    out[i] = fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

void print_record_text(std::ostream& os, const DatabaseRecord& r) {
    os << "l=" << r.l << " " << variant_name(r.variant) << " (" << r.algorithm << "): dim "
       << r.dimension << "\n";
    for (std::size_t k = 0; k < r.basis.size(); ++k)
        os << "  f(" << k + 1 << ") = " << r.basis[k].to_text() << "   [scale "
           << to_string(r.scales[k]) << "]\n";
    for (const auto& h : r.hecke) {
        os << "  T_" << h.p.get_str() << ":\n";
        for (std::size_t i = 0; i < h.matrix.rows(); ++i) {
            os << "    [";
            for (std::size_t j = 0; j < h.matrix.cols(); ++j)
                os << (j ? " " : "") << to_string(h.matrix.at(i, j));
            os << "]\n";
        }
        os << "    charpoly:";
        for (const auto& c : char_poly(h.matrix)) os << " " << to_string(c);
        os << "\n";
    }
    if (r.certificate) os << "  certificate: " << r.certificate->describe() << "\n";
}

DatabaseRecord compute_record(int l, Variant v, const std::string& algorithm) {
    if (algorithm == "ecoord") return record_from_basis(ecoord_basis(l, v), "ecoord");
    BasisResult main_basis = basis(l, v);
    if (algorithm == "both") {
        BasisResult fast = ecoord_basis(l, v);
        if (fast.dim() != main_basis.dim() || !same_span(fast.basis, main_basis.basis))
            throw std::runtime_error("pipeline span mismatch at l=" + std::to_string(l) + " " +
                                     variant_name(v) + " (this indicates an implementation bug)");
    }
    return record_from_basis(main_basis, algorithm == "both" ? "both" : "main");
}

BasisResult to_basis(const DatabaseRecord& r) {
    BasisResult b;
    b.l = r.l;
    b.variant = r.variant;
    b.basis = r.basis;
    b.scales = r.scales;
    return b;
}

int cmd_basis(const Range& range, const std::string& variant, const std::string& algorithm,
              const std::string& format, const std::string& output) {
    std::vector<std::pair<int, Variant>> tasks;
    for (int l = range.lo; l <= range.hi; ++l)
        for (Variant v : parse_variants(variant)) tasks.push_back({l, v});
    std::vector<DatabaseRecord> records = parallel_map<DatabaseRecord>(
        tasks.size(),
        [&](std::size_t i) { return compute_record(tasks[i].first, tasks[i].second, algorithm); });
    std::ofstream file;
    std::ostream& os = open_output(file, output);
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : records) arr.push_back(record_to_json(r));
        os << arr.dump(1) << "\n";
    } else {
        for (const auto& r : records) print_record_text(os, r);
    }
    return 0;
}

// The trace oracle splits into the sign parts through the involution trace:
// dim_pm = (dim + / - (-1)^l * tr T_2) / 2.
struct TraceDims {
    long gamma, plus, minus;
};

TraceDims trace_oracle(int l) {
    const long gamma = dim_via_trace_formula(l);
    const long signed_t2 = (l % 2 == 0 ? 1 : -1) * trace_t2_formula(l);
    return {gamma, (gamma + signed_t2) / 2, (gamma - signed_t2) / 2};
}

int cmd_dims(int lmax, const std::string& format, const std::string& output) {
    std::ofstream file;
    std::ostream& os = open_output(file, output);
    if (format == "json") {
        json arr = json::array();
        for (int l = 0; l <= lmax; ++l) {
            DimTriple d = dim_formula(l);
            TraceDims t = trace_oracle(l);
            arr.push_back(
                json{{"l", l},
                     {"gamma", d.gamma},
                     {"plus", d.plus},
                     {"minus", d.minus},
                     {"trace_gamma", t.gamma},
                     {"trace_plus", t.plus},
                     {"trace_minus", t.minus},
                     {"series_gamma",
                      generating_series_coeff(l % 2 ? DimSeries::GammaOdd : DimSeries::GammaEven,
                                              l)},
                     {"series_plus", generating_series_coeff(DimSeries::Plus, l)},
                     {"series_minus", generating_series_coeff(DimSeries::Minus, l)}});
        }
        os << arr.dump(1) << "\n";
        return 0;
    }
    os << "   l | gamma  plus minus | t_gamma t_plus t_minus | s_gamma s_plus s_minus | agree\n";
    bool all_agree = true;
    for (int l = 0; l <= lmax; ++l) {
        DimTriple d = dim_formula(l);
        TraceDims t = trace_oracle(l);
        long sg = generating_series_coeff(l % 2 ? DimSeries::GammaOdd : DimSeries::GammaEven, l);
        long sp = generating_series_coeff(DimSeries::Plus, l);
        long sm = generating_series_coeff(DimSeries::Minus, l);
        bool agree = t.gamma == d.gamma && t.plus == d.plus && t.minus == d.minus &&
                     sg == d.gamma && sp == d.plus && sm == d.minus &&
                     d.gamma == d.plus + d.minus;
        all_agree = all_agree && agree;
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "%4d | %5ld %5ld %5ld | %7ld %6ld %7ld | %7ld %6ld %7ld | %s\n", l, d.gamma,
                      d.plus, d.minus, t.gamma, t.plus, t.minus, sg, sp, sm, agree ? "yes" : "NO");
        os << buf;
    }
    return all_agree ? 0 : 1;
}

int cmd_hecke(int l, const std::string& primes, const std::string& variant,
              const std::string& format, const std::string& output) {
    std::vector<DatabaseRecord> records;
    for (Variant v : parse_variants(variant)) {
        BasisResult b = basis(l, v);
        DatabaseRecord r = record_from_basis(b, "main");
        if (b.dim() > 0)
            for (long p : parse_primes(primes)) r.hecke.push_back(hecke_matrix(p, b));
        records.push_back(std::move(r));
    }
    std::ofstream file;
    std::ostream& os = open_output(file, output);
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : records) arr.push_back(record_to_json(r));
        os << arr.dump(1) << "\n";
    } else {
        for (const auto& r : records) print_record_text(os, r);
    }
    return 0;
}

int cmd_congruence(const Range& range, long max_multiplier, const std::string& format,
                   const std::string& output) {
    std::vector<int> degrees;
    for (int l = range.lo; l <= range.hi; ++l)
        if (l >= 4 && l % 2 == 0) degrees.push_back(l);
    std::vector<CongruenceCertificate> certs = parallel_map<CongruenceCertificate>(
        degrees.size(),
        [&](std::size_t i) { return congruence_certificate(degrees[i], max_multiplier); });
    std::ofstream file;
    std::ostream& os = open_output(file, output);
    bool all_found = true;
    if (format == "json") {
        json arr = json::array();
        for (const auto& c : certs) {
            arr.push_back(certificate_to_json(c));
            all_found = all_found && c.found;
        }
        os << arr.dump(1) << "\n";
    } else {
        for (const auto& c : certs) {
            all_found = all_found && c.found;
            os << c.describe() << "\n";
            if (c.found) {
                HomogeneousPoly head(c.certified.degree(), Frame::X);
                std::size_t shown = 0;
                for (const auto& [t, coeff] : c.certified.terms()) {
                    if (shown++ == 5) break;
                    head.add_term(t, coeff);
                }
                os << "  certified = " << head.to_text()
                   << (c.certified.term_count() > 5 ? " + ..." : "") << "\n";
            }
        }
    }
    return all_found ? 0 : 1;
}

int cmd_cm_points(const std::string& discs, const std::string& format,
                  const std::string& output) {
    std::ofstream file;
    std::ostream& os = open_output(file, output);
    json arr = json::array();
    std::stringstream ss(discs);
    std::string item;
    while (std::getline(ss, item, ',')) {
        long disc = std::stol(item);
        auto pts = cm_points(disc);
        if (format == "json") {
            json entry{{"disc", disc}, {"count", pts.size()}, {"points", json::array()}};
            for (const auto& p : pts)
                entry["points"].push_back({p.coords[0], p.coords[1], p.coords[2]});
            arr.push_back(entry);
        } else {
            os << "disc " << disc << ": " << pts.size() << " points\n";
            for (const auto& p : pts)
                os << "  (" << p.coords[0] << ", " << p.coords[1] << ", " << p.coords[2]
                   << ")  coordinate sum "
                   << (std::abs(p.coords[0] + p.coords[1] + p.coords[2]) % 2 ? "odd" : "even")
                   << "\n";
        }
    }
    if (format == "json") os << arr.dump(1) << "\n";
    return 0;
}

int cmd_divide(int l, const std::string& variant, std::size_t index, const std::string& by,
               const std::string& output) {
    if (by != "f3" && by != "f6minus") throw CLI::ValidationError("--by", "expected f3|f6minus");
    BasisResult b = basis(l, variant_from_name(variant));
    std::ofstream file;
    std::ostream& os = open_output(file, output);
    if (index < 1 || index > b.dim()) {
        std::cerr << "index out of range: space has dimension " << b.dim() << "\n";
        return 2;
    }
    const HomogeneousPoly& f = b.basis[index - 1];
    DivisionResult r = by == "f3" ? divides_f3(f) : divides_f6minus(f);
    if (!r.ok) {
        os << "not divisible (factor " << r.failed_factor << " obstructs)\n";
        return 0;
    }
    os << "quotient = " << r.quotient.to_text() << "\n";
    return 0;
}

bool verify_x_tables(const FixtureFile& fx, std::ostream& os) {
    bool ok = true;
    auto report = [&](const std::string& what, bool pass) {
        os << (pass ? "  [ok] " : "  [FAIL] ") << what << "\n";
        ok = ok && pass;
    };
    for (const auto& [l, dims] : fx.dims) {
        DimTriple d = dim_formula(l);
        report("dims l=" + std::to_string(l),
               d.gamma == dims[0] && d.plus == dims[1] && d.minus == dims[2]);
    }
    for (const auto& entry : fx.x_entries) {
        std::string tag = "l=" + std::to_string(entry.l) + " " + variant_name(entry.variant);
        BasisResult main_basis = basis(entry.l, entry.variant);
        BasisResult fast = ecoord_basis(entry.l, entry.variant);
        bool spans =
            same_span(main_basis.basis, entry.polys) && same_span(fast.basis, entry.polys);
        std::multiset<std::string> lhs, rhs;
        for (const auto& p : main_basis.basis) lhs.insert(primitive_normalize(p).poly.to_text());
        for (const auto& p : entry.polys) rhs.insert(primitive_normalize(p).poly.to_text());
        report(tag + " span (both pipelines)", spans);
        report(tag + " primitive set", lhs == rhs);
    }
    return ok;
}

bool verify_e_tables(const FixtureFile& fb, const std::string& path, std::ostream& os) {
    bool ok = true;
    auto report = [&](const std::string& what, bool pass) {
        os << (pass ? "  [ok] " : "  [FAIL] ") << what << "\n";
        ok = ok && pass;
    };
    for (const auto& entry : fb.e_entries) {
        std::string tag = "m=" + std::to_string(entry.m) + " eps=(" + std::to_string(entry.eps1) +
                          "," + std::to_string(entry.eps2) + ")";
        auto computed = ebasis(entry.m, entry.eps1, entry.eps2);
        bool pass = computed.size() >= entry.polys.size();
        for (std::size_t k = 0; pass && k < entry.polys.size(); ++k)
            pass = computed[k] == entry.polys[k];
        report(tag, pass);
    }
    if (!fb.relations.empty()) {
        // companion x-coordinate tables live next to the e-coordinate file
        std::string dir = path.substr(0, path.find_last_of('/') + 1);
        FixtureFile fa;
        try {
            fa = load_fixture_file(dir + "appendix_a.json");
        } catch (const std::exception& e) {
            os << "  [FAIL] relations need " << dir << "appendix_a.json: " << e.what() << "\n";
            return false;
        }
        for (const auto& rel : fb.relations) {
            std::string tag =
                "relation l=" + std::to_string(rel.l) + " " + variant_name(rel.variant);
            const XBasisFixtureEntry* xe = nullptr;
            for (const auto& e : fa.x_entries)
                if (e.l == rel.l && e.variant == rel.variant) xe = &e;
            const EKernelFixtureEntry* ee = nullptr;
            for (const auto& e : fb.e_entries)
                if (e.m == rel.m && e.eps1 == rel.eps1 && e.eps2 == rel.eps2) ee = &e;
            if (!xe || !ee) {
                report(tag + " (missing entries)", false);
                continue;
            }
            bool pass = rel.coeffs.size() == xe->polys.size();
            std::vector<HomogeneousPoly> converted;
            for (const auto& p : ee->polys) converted.push_back(ecoord_to_x(rel.eps1, rel.eps2, p));
            for (std::size_t r = 0; pass && r < rel.coeffs.size(); ++r) {
                if (rel.coeffs[r].size() != converted.size()) {
                    pass = false;
                    break;
                }
                HomogeneousPoly sum(xe->polys[r].degree(), Frame::X);
                for (std::size_t k = 0; k < converted.size(); ++k)
                    sum = sum + converted[k] * rel.coeffs[r][k];
                pass = sum == xe->polys[r];
            }
            report(tag, pass);
        }
    }
    return ok;
}

int cmd_verify(const std::vector<std::string>& paths) {
    bool all_ok = true;
    for (const std::string& path : paths) {
        std::cout << path << ":\n";
        try {
            FixtureFile fx = load_fixture_file(path);
            bool ok = fx.kind == "x_basis_tables" ? verify_x_tables(fx, std::cout)
                                                  : verify_e_tables(fx, path, std::cout);
            std::cout << (ok ? "  => pass\n" : "  => FAIL\n");
            all_ok = all_ok && ok;
        } catch (const std::exception& e) {
            std::cout << "  [FAIL] " << e.what() << "\n  => FAIL\n";
            all_ok = false;
        }
    }
    return all_ok ? 0 : 1;
}

int cmd_export_db(const Range& range, const std::string& variant, const std::string& algorithm,
                  const std::string& primes, bool certificates, const std::string& output) {
    std::vector<std::pair<int, Variant>> tasks;
    for (int l = range.lo; l <= range.hi; ++l)
        for (Variant v : parse_variants(variant)) tasks.push_back({l, v});
    std::vector<DatabaseRecord> records =
        parallel_map<DatabaseRecord>(tasks.size(), [&](std::size_t i) {
            auto [l, v] = tasks[i];
            DatabaseRecord r = compute_record(l, v, algorithm);
            if (!primes.empty() && r.dimension > 0)
                for (long p : parse_primes(primes)) r.hecke.push_back(hecke_matrix(p, to_basis(r)));
            if (certificates && v == Variant::Plus && l >= 4 && l % 2 == 0)
                r.certificate = congruence_certificate(to_basis(r));
            return r;
        });
    std::ofstream file;
    std::ostream& os = open_output(file, output);
    json arr = json::array();
    for (const auto& r : records) arr.push_back(record_to_json(r));
    os << arr.dump(1) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic engine for invariant harmonic polynomial spaces"};
    app.require_subcommand(1);

    std::string l_range = "0..12", variant = "both-signs", algorithm = "main";
    std::string format = "text", output, primes = "2", discs = "-3";
    int l_single = 0, l_max = 12;
    std::size_t index = 1;
    std::string divide_by = "f3";
    long max_multiplier = 15;
    bool with_certificates = false;
    std::vector<std::string> fixture_paths;

    auto* basis_cmd = app.add_subcommand("basis", "compute bases of the invariant spaces");
    basis_cmd->add_option("--l", l_range, "degree or range a..b");
    basis_cmd->add_option("--variant", variant, "gamma|plus|minus|both-signs|all");
    basis_cmd->add_option("--algorithm", algorithm, "main|ecoord|both");
    basis_cmd->add_option("--format", format, "text|json");
    basis_cmd->add_option("--output", output, "output path (default stdout)");

    auto* dims_cmd = app.add_subcommand("dims", "dimension table from all three oracles");
    dims_cmd->add_option("--l-max", l_max, "maximal degree");
    dims_cmd->add_option("--format", format, "text|json");
    dims_cmd->add_option("--output", output, "output path");

    auto* hecke_cmd = app.add_subcommand("hecke", "matrices of the norm-p operators");
    hecke_cmd->add_option("--l", l_single, "degree")->required();
    hecke_cmd->add_option("--p", primes, "comma-separated primes");
    std::string hecke_variant = "both-signs";
    hecke_cmd->add_option("--variant", hecke_variant, "gamma|plus|minus|both-signs|all");
    hecke_cmd->add_option("--format", format, "text|json");
    hecke_cmd->add_option("--output", output, "output path");

    auto* cong_cmd = app.add_subcommand("congruence", "mod-2 certificates for even degrees");
    cong_cmd->add_option("--l", l_range, "degree or range a..b");
    cong_cmd->add_option("--max-multiplier", max_multiplier, "largest odd multiplier tried");
    cong_cmd->add_option("--format", format, "text|json");
    cong_cmd->add_option("--output", output, "output path");

    auto* cm_cmd = app.add_subcommand("cm-points", "lattice points of given norm");
    cm_cmd->add_option("--disc", discs, "comma-separated negative discriminants");
    cm_cmd->add_option("--format", format, "text|json");
    cm_cmd->add_option("--output", output, "output path");

    auto* div_cmd = app.add_subcommand("divide", "divide a basis element by a universal form");
    div_cmd->add_option("--l", l_single, "degree")->required();
    std::string div_variant = "gamma";
    div_cmd->add_option("--variant", div_variant, "gamma|plus|minus");
    div_cmd->add_option("--index", index, "1-based basis element index");
    div_cmd->add_option("--by", divide_by, "f3|f6minus");
    div_cmd->add_option("--output", output, "output path");

    auto* verify_cmd = app.add_subcommand("verify", "recompute and compare fixture tables");
    verify_cmd->add_option("paths", fixture_paths, "fixture JSON files")->required();

    auto* export_cmd = app.add_subcommand("export-db", "emit database records as JSON");
    export_cmd->add_option("--l", l_range, "degree or range a..b");
    export_cmd->add_option("--variant", variant, "gamma|plus|minus|both-signs|all");
    export_cmd->add_option("--algorithm", algorithm, "main|ecoord|both");
    export_cmd->add_option("--p", primes,
                           "comma-separated primes for Hecke matrices ('' for none)");
    export_cmd->add_flag("--certificates", with_certificates,
                         "attach certificates to plus records");
    export_cmd->add_option("--output", output, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (basis_cmd->parsed())
            return cmd_basis(parse_range(l_range), variant, algorithm, format, output);
        if (dims_cmd->parsed()) return cmd_dims(l_max, format, output);
        if (hecke_cmd->parsed())
            return cmd_hecke(l_single, primes, hecke_variant, format, output);
        if (cong_cmd->parsed())
            return cmd_congruence(parse_range(l_range), max_multiplier, format, output);
        if (cm_cmd->parsed()) return cmd_cm_points(discs, format, output);
        if (div_cmd->parsed()) return cmd_divide(l_single, div_variant, index, divide_by, output);
        if (verify_cmd->parsed()) return cmd_verify(fixture_paths);
        if (export_cmd->parsed())
            return cmd_export_db(parse_range(l_range), variant, algorithm, primes,
                                 with_certificates, output);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
