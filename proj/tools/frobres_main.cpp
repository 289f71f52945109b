// frobres: identify Frobenius conjugacy classes of a Galois group by
// precomputed class resolvents, and emit unramified Artin Euler factors.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "frobres/artin.hpp"
#include "frobres/frob.hpp"
#include "frobres/gamma.hpp"
#include "json.hpp"

using namespace frobres;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BadInputError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw BadInputError("cannot write " + path);
    out << text;
}

std::vector<std::pair<std::string, std::string>> parse_roots_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInputError("cannot open roots file " + path);
    std::vector<std::pair<std::string, std::string>> pts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s;
        for (char c : line)
            if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
        if (s.empty() || s[0] == '#') continue;
        size_t comma = s.find(',');
        if (comma == std::string::npos)
            throw BadInputError("roots file line " + std::to_string(lineno) + ": expected \"re,im\"");
        pts.emplace_back(s.substr(0, comma), s.substr(comma + 1));
    }
    return pts;
}

std::pair<mpz_class, mpz_class> parse_prime_range(const std::string& s) {
    size_t pos = s.find("..");
    try {
        if (pos == std::string::npos) {
            mpz_class p(s, 10);
            return {p, p};
        }
        mpz_class lo(s.substr(0, pos), 10), hi(s.substr(pos + 2), 10);
        if (lo > hi) throw BadInputError("prime range has lo > hi: " + s);
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw BadInputError("bad prime range \"" + s + "\" (expected LO..HI)");
    }
}

GammaTable load_table(const std::string& path) { return table_from_json(read_file(path)); }

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

struct AnalyzeArgs {
    std::string poly, group, h, roots_file, out;
    long precision_max = kPrecisionCeiling;
    long group_cap = kDefaultGroupCap;
    bool symmetry = false;
};

int cmd_analyze(const AnalyzeArgs& args) {
    IntPoly f = IntPoly::parse_csv(args.poly);
    if (f.degree() < 1) throw BadInputError("polynomial must have degree >= 1");
    if (!f.is_monic()) {
        IntPoly g = make_monic_integral(f);
        std::cerr << "note: input is not monic; analyzing the monic rescaling " << g.pretty()
                  << " (same splitting field, roots scaled by " << f.lc() << ")\n";
        f = g;
    }
    PermGroup grp = closure(f.degree(), parse_generators(args.group, f.degree()), args.group_cap);
    auto classes = conjugacy_classes(grp);

    RootSystem rs = certified_roots(f, 0, args.precision_max);
    if (!args.roots_file.empty()) rs = user_order(rs, parse_roots_file(args.roots_file));

    BuildOptions opts;
    opts.precision_ceiling = args.precision_max;

    GammaTable table;
    IntPoly h;
    if (!args.h.empty()) {
        h = IntPoly::parse_csv(args.h);
    } else {
        GammaTable full = choose_h(f, grp, classes, rs, opts);
        h = full.h;
        table = std::move(full);
    }
    if (args.symmetry) {
        auto syms = detect_symmetries(grp, classes);
        table = build_gamma_reduced(f, grp, classes, syms, h, rs, opts);
        validate(table);
    } else if (!args.h.empty()) {
        table = build_gamma(f, grp, classes, h, rs, opts);
        validate(table);
    }
    table.disc_sqrt = sqrt_disc(f, grp, rs, opts);

    emit(args.out, table_to_json(table) + "\n");

    std::cerr << "group order " << table.group_order << ", " << table.classes.size() << " classes, h = "
              << table.h.pretty() << "\n";
    for (const auto& c : table.classes) {
        std::cerr << "  " << c.label << "  size " << c.size << "  cycle type [";
        for (size_t i = 0; i < c.cycle_type.size(); ++i)
            std::cerr << (i ? "," : "") << c.cycle_type[i];
        std::cerr << "]  deg gamma " << c.gamma.degree();
        if (c.symmetry_exponents.size() > 1) std::cerr << "  (reduced)";
        std::cerr << "\n";
    }
    std::cerr << "bad prime data:";
    for (const auto& b : table.bad_entries) std::cerr << " " << b;
    std::cerr << "\n";
    return EXIT_OK;
}

int cmd_frob(const std::string& table_path, const std::string& range, int workers,
             const std::string& out_path) {
    GammaTable t = load_table(table_path);
    auto [lo, hi] = parse_prime_range(range);
    auto reports = classify_range(t, lo, hi, workers);

    std::ostringstream os;
    for (const auto& r : reports) os << report_to_json_line(r) << "\n";
    emit(out_path, os.str());

    std::map<std::string, long> counts;
    long bad = 0;
    for (const auto& r : reports)
        if (r.good)
            ++counts[r.class_label];
        else
            ++bad;
    std::cerr << "classified " << reports.size() << " primes (" << bad << " bad):";
    for (const auto& [label, c] : counts) std::cerr << " " << label << "=" << c;
    std::cerr << "\n";
    return EXIT_OK;
}

int cmd_verify(const std::string& table_path, const std::string& range, int workers) {
    GammaTable t = load_table(table_path);
    auto [lo, hi] = parse_prime_range(range);
    auto reports = classify_range(t, lo, hi, workers);

    long mismatches = 0, checked = 0;
    for (const auto& r : reports) {
        if (!r.good) continue;
        ++checked;
        DegreeProfile prof = matrix_degree_profile(t.f, r.p);
        if (prof.partition() != r.cycle_type) {
            ++mismatches;
            std::cerr << "cycle-type mismatch at p=" << r.p << "\n";
        }
        if (r.trace) {
            const GammaClassEntry* c = t.find_class(r.class_label);
            mpz_class alt = companion_trace(t.f, t.h, r.p, c->symmetry_exponents);
            if (alt != *r.trace) {
                ++mismatches;
                std::cerr << "trace mismatch at p=" << r.p << "\n";
            }
        }
        if (r.p != 2) {
            // discriminant square-root parity: disc is a square mod p exactly
            // when the class is even
            int transpositions = 0;
            for (int e : r.cycle_type) transpositions += e - 1;
            int expect = transpositions % 2 == 0 ? 1 : -1;
            if (mpz_kronecker(t.disc.get_mpz_t(), r.p.get_mpz_t()) != expect) {
                ++mismatches;
                std::cerr << "class parity mismatch at p=" << r.p << "\n";
            }
        }
    }
    std::cout << "verified " << checked << " good primes, " << mismatches << " mismatches\n";
    for (const auto& row : chebotarev_check(reports, t)) {
        std::cout << "  " << row.label << "  observed " << row.observed << "  freq " << row.frequency
                  << "  expected " << row.expected;
        if (row.zscore_valid) std::cout << "  z " << row.zscore;
        std::cout << "\n";
    }
    return mismatches == 0 ? EXIT_OK : EXIT_MATH_INCONSISTENCY;
}

int cmd_lseries(const std::string& table_path, const std::string& chi_path, long n_max, int workers,
                const std::string& ramified_path, const std::string& out_path) {
    GammaTable t = load_table(table_path);
    CharacterTable chi = character_from_json(read_file(chi_path));

    std::map<mpz_class, std::vector<GaussianRational>> ramified;
    if (!ramified_path.empty()) {
        nlohmann::json j = nlohmann::json::parse(read_file(ramified_path), nullptr, false);
        if (j.is_discarded()) throw BadInputError("ramified factors file: invalid JSON");
        for (const auto& [key, coeffs] : j.items()) {
            std::vector<GaussianRational> v;
            for (const auto& c : coeffs) v.emplace_back(parse_rational(c.get<std::string>()), mpq_class(0));
            ramified[mpz_class(key, 10)] = std::move(v);
        }
    }

    auto reports = classify_range(t, 2, n_max, workers);
    for (const auto& r : reports)
        if (!r.good && !ramified.count(r.p))
            std::cerr << "warning: omitting the Euler factor at bad prime " << r.p << " (" << r.bad_reason
                      << "); coefficients at multiples of it are zero\n";

    auto a = dirichlet_coefficients(t, chi, reports, n_max, ramified.empty() ? nullptr : &ramified);
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : a) out.push_back(gaussian_str(v));
    emit(out_path, out.dump() + "\n");
    return EXIT_OK;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius class identification via conjugacy-class resolvents"};
    app.require_subcommand(1);

    AnalyzeArgs aa;
    CLI::App* analyze = app.add_subcommand("analyze", "precompute and validate a resolvent table");
    analyze->set_help_flag("--help", "print help");
    analyze->add_option("--poly", aa.poly, "polynomial coefficients, ascending, e.g. 1,0,0,-3,2,1")->required();
    analyze->add_option("--group", aa.group, "Galois group generators, e.g. \"(1,2,3,4,5);(2,5)(3,4)\"")->required();
    analyze->add_option("--h", aa.h, "override the invariant polynomial h (ascending coefficients)");
    analyze->add_option("--roots-file", aa.roots_file, "root ordering file: one \"re,im\" per line");
    analyze->add_flag("--symmetry", aa.symmetry, "reduce resolvents by power-map symmetries");
    analyze->add_option("--precision-max", aa.precision_max, "precision ceiling in bits");
    analyze->add_option("--group-cap", aa.group_cap, "group element cap");
    analyze->add_option("--out", aa.out, "table output path (default stdout)");

    std::string table_path, range = "2..1000", out_path, chi_path, ramified_path;
    int workers = 0;
    long n_max = 100;

    CLI::App* frob = app.add_subcommand("frob", "classify Frobenius at the primes of a range");
    frob->add_option("table", table_path, "resolvent table JSON")->required();
    frob->add_option("--primes", range, "prime range LO..HI")->required();
    frob->add_option("--workers", workers, "worker threads (default: all cores)");
    frob->add_option("--out", out_path, "JSONL output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "re-classify and cross-check a range");
    verify->add_option("table", table_path, "resolvent table JSON")->required();
    verify->add_option("--primes", range, "prime range LO..HI")->required();
    verify->add_option("--workers", workers, "worker threads");

    CLI::App* lseries = app.add_subcommand("lseries", "Dirichlet coefficients of an Artin L-series");
    lseries->add_option("table", table_path, "resolvent table JSON")->required();
    lseries->add_option("--character", chi_path, "character file JSON")->required();
    lseries->add_option("--N", n_max, "number of coefficients")->required();
    lseries->add_option("--workers", workers, "worker threads");
    lseries->add_option("--ramified-factors", ramified_path, "per-prime Euler factors for bad primes");
    lseries->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) return cmd_analyze(aa);
        if (frob->parsed()) return cmd_frob(table_path, range, workers, out_path);
        if (verify->parsed()) return cmd_verify(table_path, range, workers);
        if (lseries->parsed()) return cmd_lseries(table_path, chi_path, n_max, workers, ramified_path, out_path);
        return EXIT_BAD_INPUT;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const BadInputError& e) {
        std::cerr << nlohmann::json{{"error", {{"code", EXIT_BAD_INPUT}, {"message", e.what()}}}}.dump() << "\n";
        return EXIT_BAD_INPUT;
    } catch (const ResourceCapError& e) {
        std::cerr << nlohmann::json{{"error", {{"code", EXIT_RESOURCE_CAP}, {"message", e.what()}}}}.dump() << "\n";
        return EXIT_RESOURCE_CAP;
    } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"error", {{"code", EXIT_MATH_INCONSISTENCY}, {"message", e.what()}}}}.dump()
                  << "\n";
        return EXIT_MATH_INCONSISTENCY;
    }
}
