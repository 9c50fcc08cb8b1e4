// riordan: solve A-matrix specs, inspect the resulting Bell matrices, and run
// the fixture corpus or the Somos-4 conjecture sweeps.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "riordan/amatrix.hpp"
#include "riordan/bfile.hpp"
#include "riordan/fixtures.hpp"
#include "riordan/hankel.hpp"
#include "riordan/json_io.hpp"
#include "riordan/riordan_array.hpp"
#include "riordan/somos.hpp"
#include "riordan/sweep.hpp"

#ifndef RIORDAN_DEFAULT_FIXTURES
#define RIORDAN_DEFAULT_FIXTURES "data/fixtures.json"
#endif

namespace {

using namespace riordan;

enum ExitCode { kOk = 0, kCheckFailed = 1, kBadInput = 2, kIoFailure = 3 };

struct Options {
    std::size_t order = kDefaultOrder;
    std::size_t rows = 12;
    std::string format;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

AMatrixSpec load_spec(const std::string& path) { return spec_from_json(parse_json_text(read_file(path), path)); }

std::string join(const std::vector<Rational>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + to_string(v[i]);
    return out;
}

void print_rows(std::ostream& out, const std::vector<std::vector<Rational>>& rows) {
    for (const auto& r : rows) out << join(r) << "\n";
}

bool want_json(const Options& opt, bool json_by_default = false) {
    if (opt.format.empty()) return json_by_default;
    return opt.format == "json";
}

int cmd_solve(const std::string& spec_path, const Options& opt) {
    const AMatrixSpec spec = load_spec(spec_path);
    const SolveReport rep = solve_f(spec, opt.order);
    const PowerSeries fx = rep.f.divided_by_x();
    if (want_json(opt)) {
        std::cout << render_json(json{{"order", std::to_string(opt.order)},
                                      {"f", to_json_value(rep.f.coeffs())},
                                      {"f_over_x", to_json_value(fx.coeffs())}});
    } else {
        std::cout << "f:   " << join(rep.f.coeffs()) << "\n";
        std::cout << "f/x: " << join(fx.coeffs()) << "\n";
    }
    return kOk;
}

struct PipelineFlags {
    bool triangle = false, production = false, aseq = false, zseq = false;
    bool hankel = false, somos = false, jfrac = false;
};

int cmd_pipeline(const std::string& spec_path, PipelineFlags flags, const Options& opt) {
    if (!(flags.triangle || flags.production || flags.aseq || flags.zseq || flags.hankel || flags.somos ||
          flags.jfrac))
        flags.triangle = true;
    const bool hankel_work = flags.hankel || flags.somos || flags.jfrac;
    if (hankel_work && opt.order < 2 * opt.rows)
        throw InsufficientOrder("Hankel workflows with " + std::to_string(opt.rows) + " rows need --order >= " +
                                std::to_string(2 * opt.rows) + ", got " + std::to_string(opt.order));
    if ((flags.triangle || flags.production) && opt.order < opt.rows + 2)
        throw InsufficientOrder(std::to_string(opt.rows) + " rows need --order >= " + std::to_string(opt.rows + 2) +
                                ", got " + std::to_string(opt.order));

    const AMatrixSpec spec = load_spec(spec_path);
    const RiordanPair bell = bell_from_spec(spec, opt.order);
    const Sequence column = to_sequence(bell.g);

    json out = json::object();
    std::ostringstream text;
    if (flags.triangle) {
        const LowerTriangle t = riordan_triangle(bell, opt.rows);
        out["triangle"] = to_json_value(t);
        text << "triangle:\n";
        print_rows(text, t.rows());
    }
    if (flags.production) {
        const ProductionData p = production_matrix(bell, opt.rows);
        out["production"] = to_json_value(p.matrix);
        out["production_z"] = to_json_value(z_sequence(bell).terms);
        out["production_a"] = to_json_value(a_sequence(bell).terms);
        text << "production:\n";
        print_rows(text, p.matrix.rows);
        text << "Z: " << join(z_sequence(bell).terms) << "\n";
        text << "A: " << join(a_sequence(bell).terms) << "\n";
    }
    if (flags.aseq) {
        out["aseq"] = to_json_value(a_sequence(bell));
        text << "A-sequence: " << join(a_sequence(bell).terms) << "\n";
    }
    if (flags.zseq) {
        out["zseq"] = to_json_value(z_sequence(bell));
        text << "Z-sequence: " << join(z_sequence(bell).terms) << "\n";
    }
    Sequence h;
    if (flags.hankel || flags.somos) h = hankel_transform(column, opt.rows - 1);
    if (flags.hankel) {
        out["hankel"] = to_json_value(h);
        text << "Hankel: " << join(h.terms) << "\n";
    }
    if (flags.somos) {
        const SomosFitResult fit = somos_fit(h);
        out["somos_fit"] = to_json_value(fit);
        text << "Somos-4 fit: " << fit.describe() << "\n";
    }
    if (flags.jfrac) {
        const JFraction jf = jfraction(column, opt.rows - 1);
        out["jfraction"] = to_json_value(jf);
        text << "J-fraction scale: " << to_string(jf.scale) << "\n";
        text << "J-fraction b: " << join(jf.b) << "\n";
        text << "J-fraction lambda: " << join(jf.lambda) << "\n";
        if (jf.terminated) text << "J-fraction terminates\n";
    }
    if (want_json(opt)) std::cout << render_json(out);
    else std::cout << text.str();
    return kOk;
}

int cmd_sweep(const std::string& which, const std::string& range, const Options& opt) {
    ConjectureKind kind;
    if (which == "rho0") kind = ConjectureKind::Rho0;
    else if (which == "rhodelta") kind = ConjectureKind::RhoDelta;
    else throw InvalidSpec("--sweep expects rho0 or rhodelta, got \"" + which + "\"");
    const auto [lo, hi] = parse_range(range);
    const SweepReport report = sweep_conjecture(kind, lo, hi, opt.order);
    if (want_json(opt, true)) {
        std::cout << render_json(to_json_value(report));
    } else {
        std::cout << to_string(kind) << " sweep over [" << lo << ", " << hi << "]^4 at order " << report.order
                  << ": " << report.total << " tuples, " << report.confirmed << " confirmed, " << report.degenerate
                  << " degenerate, " << report.counterexamples.size() << " counterexamples\n";
        for (const auto& p : report.counterexamples)
            std::cout << "COUNTEREXAMPLE (" << p.params[0] << "," << p.params[1] << "," << p.params[2] << ","
                      << p.params[3] << ") predicted (" << to_string(p.alpha) << "," << to_string(p.beta)
                      << ") fails at n=" << p.failing_index << "\n";
    }
    return kOk;
}

int cmd_bfile(const std::string& fixtures, const std::string& bfile_path, std::string oeis, const Options& opt) {
    if (oeis.empty()) oeis = oeis_id_from_bfile_name(bfile_path);
    if (oeis.empty()) throw InvalidSpec("cannot infer an OEIS id from " + bfile_path + "; pass --oeis");
    const FixtureCorpus corpus = load_fixture_corpus(fixtures);
    const Sequence b = load_bfile(bfile_path);
    const auto comparisons = crosscheck_bfile(corpus, oeis, b);
    if (comparisons.empty()) throw FixtureNotFound("no fixture check is tagged " + oeis);
    bool ok = true;
    json arr = json::array();
    for (const auto& c : comparisons) {
        ok = ok && c.passed();
        arr.push_back(json{{"fixture", c.fixture_id},
                           {"check", c.check_kind},
                           {"compared", std::to_string(c.compared)},
                           {"passed", c.passed()},
                           {"message", c.message}});
    }
    if (want_json(opt)) {
        std::cout << render_json(json{{"oeis", oeis}, {"comparisons", arr}});
    } else {
        for (const auto& c : comparisons)
            std::cout << (c.passed() ? "PASS " : "FAIL ") << c.fixture_id << " " << c.check_kind << " vs " << oeis
                      << ": " << c.compared << " terms compared" << (c.message.empty() ? "" : "; " + c.message)
                      << "\n";
    }
    return ok ? kOk : kCheckFailed;
}

int cmd_fixtures(const std::string& fixtures, const std::string& filter, const Options& opt) {
    const FixtureCorpus corpus = load_fixture_corpus(fixtures);
    const FixtureReport report = run_fixtures(corpus, filter);
    if (want_json(opt)) {
        std::cout << render_json(to_json_value(report));
    } else {
        for (const auto& r : report.results) {
            std::cout << (r.passed() ? "PASS " : "FAIL ") << r.id << "\n";
            for (const auto& c : r.checks)
                if (!c.passed) std::cout << "  " << c.kind << ": " << c.message << "\n";
        }
        std::cout << report.results.size() << " fixtures, " << report.check_count() << " checks, "
                  << report.failed() << " failed\n";
    }
    return report.all_passed() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riordan arrays from A-matrices: solver, analyses and verification"};
    app.require_subcommand(1);
    Options opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--order", opt.order, "number of series coefficients")->check(CLI::PositiveNumber);
        sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "plain"}));
    };

    std::string spec_path;
    auto* solve = app.add_subcommand("solve", "solve the functional equation for f");
    solve->add_option("spec", spec_path, "A-matrix spec (JSON)")->required();
    add_common(solve);

    PipelineFlags flags;
    auto* pipeline = app.add_subcommand("pipeline", "solve, build the Bell matrix and run analyses");
    pipeline->add_option("spec", spec_path, "A-matrix spec (JSON)")->required();
    pipeline->add_flag("--triangle", flags.triangle, "print the triangle");
    pipeline->add_flag("--production", flags.production, "print the production matrix with Z and A");
    pipeline->add_flag("--aseq", flags.aseq, "print the A-sequence");
    pipeline->add_flag("--zseq", flags.zseq, "print the Z-sequence");
    pipeline->add_flag("--hankel", flags.hankel, "Hankel transform of the first column");
    pipeline->add_flag("--somos-fit", flags.somos, "classify the Hankel transform as a Somos-4 sequence");
    pipeline->add_flag("--jfraction", flags.jfrac, "J-fraction of the first column");
    pipeline->add_option("--rows", opt.rows, "rows / Hankel terms")->check(CLI::Range(std::size_t{1}, std::size_t{4096}));
    add_common(pipeline);

    std::string filter, fixtures = RIORDAN_DEFAULT_FIXTURES, sweep, range = "-2..2", bfile, oeis;
    auto* verify = app.add_subcommand("verify", "run the fixture corpus, a conjecture sweep, or a b-file cross-check");
    verify->add_option("filter", filter, "fixture id prefix or OEIS id");
    verify->add_option("--fixtures", fixtures, "fixture corpus (JSON)");
    verify->add_option("--sweep", sweep, "conjecture family: rho0 or rhodelta");
    verify->add_option("--range", range, "parameter range lo..hi");
    verify->add_option("--bfile", bfile, "OEIS b-file to compare against");
    verify->add_option("--oeis", oeis, "OEIS id for --bfile (default: from the file name)");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kBadInput;
    }

    try {
        if (*solve) return cmd_solve(spec_path, opt);
        if (*pipeline) return cmd_pipeline(spec_path, flags, opt);
        if (!sweep.empty()) return cmd_sweep(sweep, range, opt);
        if (!bfile.empty()) return cmd_bfile(fixtures, bfile, oeis, opt);
        return cmd_fixtures(fixtures, filter, opt);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoFailure;
    } catch (const MalformedFixture& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoFailure;
    } catch (const MalformedLine& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoFailure;
    } catch (const NonConsecutiveIndices& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
}
