// Command-line front end for the Narayana Hankel determinant library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "narayana/closedforms.hpp"
#include "narayana/hankel.hpp"
#include "narayana/hfrac.hpp"
#include "narayana/quadratic.hpp"
#include "narayana/sequences.hpp"
#include "narayana/verify.hpp"

using namespace narayana;

namespace {

constexpr int kUsageError = 2;

struct FamilyArgs {
    unsigned m = 1;
    unsigned shift = 0;
};

void add_family_options(CLI::App* cmd, FamilyArgs& f) {
    cmd->add_option("--m", f.m, "half convolution order m")->required();
    cmd->add_option("--shift", f.shift, "shift m0 in 0..3")->required();
}

int run_seq(unsigned n, std::optional<unsigned> tau) {
    if (tau) {
        const auto seq = conv_power_seq(*tau, n + 1);
        for (unsigned i = 0; i <= n; ++i) std::cout << i << '\t' << seq[i].to_string() << '\n';
    } else {
        for (unsigned i = 0; i <= n; ++i) std::cout << i << '\t' << narayana_poly(i).to_string() << '\n';
    }
    return 0;
}

int run_det(const FamilyArgs& f, std::size_t size) {
    const FamilySpec spec{f.m, f.shift};
    spec.validate();
    const auto seq = family_entries(spec, size == 0 ? 1 : 2 * size - 1);
    const RatFunc oracle = det_exact(HankelMatrix(size, std::vector<RatFunc>(seq.begin(), seq.end())));
    const DetCase dc = main_det(spec, size);
    std::cout << "determinant\t" << oracle.to_string() << '\n';
    std::cout << "closed form\t" << dc.value.to_string() << '\t' << dc.case_label << (dc.ambiguous ? " (ambiguous)" : "")
              << '\n';
    std::cout << "match\t" << (oracle == dc.value ? "yes" : "no") << '\n';
    return oracle == dc.value ? 0 : 1;
}

int run_cigler(unsigned variant, std::size_t size) {
    const RatFunc closed = cigler_det(variant, size);
    const auto seq = conv_power_seq(variant, size == 0 ? 1 : 2 * size - 1);
    const RatFunc oracle = det_exact(HankelMatrix(size, std::vector<RatFunc>(seq.begin(), seq.end())));
    std::cout << "determinant\t" << oracle.to_string() << '\n';
    std::cout << "closed form\t" << closed.to_string() << '\n';
    std::cout << "match\t" << (oracle == closed ? "yes" : "no") << '\n';
    return oracle == closed ? 0 : 1;
}

void print_hfrac(const HFraction& h) {
    std::cout << "status " << to_string(h.status) << '\n';
    for (const auto& pq : h.quotients) std::cout << pq.to_string() << '\n';
}

int run_verify(const std::string& suite, const SuiteBounds& bounds, const std::string& report) {
    if (!is_suite(suite)) {
        std::cerr << "unknown suite '" << suite << "'; known suites:";
        for (const auto& s : suite_names()) std::cerr << ' ' << s;
        std::cerr << '\n';
        return kUsageError;
    }
    const auto records = run_suite(suite, bounds);
    std::size_t passed = 0;
    std::ofstream file;
    if (!report.empty()) {
        file.open(report);
        if (!file) {
            std::cerr << "cannot write report " << report << '\n';
            return kUsageError;
        }
    }
    std::ostream& out = report.empty() ? std::cout : file;
    for (const auto& r : records) {
        if (r.status == CheckStatus::Pass) ++passed;
        out << r.to_tsv() << '\n';
    }
    std::cerr << suite << ": " << passed << "/" << records.size() << " passed\n";
    return passed == records.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hankel determinants of shifted Narayana convolution powers"};
    app.require_subcommand(1);

    auto* seq = app.add_subcommand("seq", "print sequence terms");
    auto* seq_nar = seq->add_subcommand("narayana", "Narayana polynomials or their convolution powers");
    unsigned seq_n = 0;
    std::optional<unsigned> seq_tau;
    seq_nar->add_option("--n", seq_n, "last index")->required();
    seq_nar->add_option("--tau", seq_tau, "convolution power");
    seq->require_subcommand(1);

    auto* det = app.add_subcommand("det", "Hankel determinant: oracle against closed form");
    FamilyArgs det_family;
    std::size_t det_size = 0;
    det->add_option("--m", det_family.m, "half convolution order m");
    det->add_option("--shift", det_family.shift, "shift m0 in 0..3");
    det->add_option("--size", det_size, "matrix size N");
    auto* cig = det->add_subcommand("cigler", "determinants of gamma^(3), gamma^(4), gamma^(6)");
    unsigned cig_variant = 4;
    std::size_t cig_size = 0;
    cig->add_option("--variant", cig_variant, "3, 4 or 6")->required()->check(CLI::IsMember({3u, 4u, 6u}));
    cig->add_option("--size", cig_size, "matrix size N")->required();

    auto* closed = app.add_subcommand("closed", "closed forms only");
    auto* closed_det = closed->add_subcommand("det", "piecewise determinant closed form");
    FamilyArgs closed_family;
    std::size_t closed_size = 0;
    add_family_options(closed_det, closed_family);
    closed_det->add_option("--size", closed_size, "matrix size N")->required();
    closed->require_subcommand(1);

    auto* hf = app.add_subcommand("hfrac", "Hankel continued fractions of the family series");
    hf->require_subcommand(1);
    FamilyArgs hf_family;
    std::size_t hf_terms = 8;
    std::size_t hf_order = 32;
    auto* hf_expand = hf->add_subcommand("expand", "expand the series");
    add_family_options(hf_expand, hf_family);
    hf_expand->add_option("--terms", hf_terms, "maximum number of quotients");
    hf_expand->add_option("--order", hf_order, "series truncation order");
    auto* hf_expected = hf->add_subcommand("expected", "quotients from the closed formulas");
    add_family_options(hf_expected, hf_family);
    hf_expected->add_option("--terms", hf_terms, "number of quotients");
    auto* hf_eval = hf->add_subcommand("eval", "evaluate the closed-form fraction as a series");
    add_family_options(hf_eval, hf_family);
    hf_eval->add_option("--terms", hf_terms, "number of quotients");
    hf_eval->add_option("--order", hf_order, "series truncation order");

    auto* nabc = app.add_subcommand("nextabc", "iterate NextABC from the family quadratic");
    FamilyArgs nabc_family;
    std::size_t nabc_steps = 4;
    add_family_options(nabc, nabc_family);
    nabc->add_option("--steps", nabc_steps, "number of steps");

    auto* ver = app.add_subcommand("verify", "run a named verification suite");
    std::string suite;
    std::string report;
    SuiteBounds bounds;
    ver->add_option("suite", suite, "suite name")->required();
    ver->add_option("--m-min", bounds.m_min);
    ver->add_option("--m-max", bounds.m_max);
    ver->add_option("--n-max", bounds.n_max);
    ver->add_option("--j-max", bounds.j_max);
    ver->add_option("--order", bounds.order);
    ver->add_option("--shift", bounds.shift);
    ver->add_option("--report", report, "write TSV records to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*seq_nar) return run_seq(seq_n, seq_tau);
        if (*cig) return run_cigler(cig_variant, cig_size);
        if (*det) {
            if (det->count("--m") == 0 || det->count("--shift") == 0 || det->count("--size") == 0) {
                std::cerr << "det needs --m, --shift and --size (or the cigler subcommand)\n";
                return kUsageError;
            }
            return run_det(det_family, det_size);
        }
        if (*closed_det) {
            const DetCase dc = main_det({closed_family.m, closed_family.shift}, closed_size);
            std::cout << dc.value.to_string() << '\t' << dc.case_label << (dc.ambiguous ? " (ambiguous)" : "") << '\n';
            return 0;
        }
        if (*hf_expand) {
            const FamilySpec spec{hf_family.m, hf_family.shift};
            print_hfrac(hfrac_expand(family_series(spec, hf_order), 2, hf_terms));
            return 0;
        }
        if (*hf_expected) {
            print_hfrac(expected_hfrac({hf_family.m, hf_family.shift}, hf_terms));
            return 0;
        }
        if (*hf_eval) {
            const HFraction h = expected_hfrac({hf_family.m, hf_family.shift}, hf_terms);
            std::cout << hfrac_eval(h, hf_order).to_string() << '\n';
            return 0;
        }
        if (*nabc) {
            for (const auto& st : iterate_next_abc(family_quadratic(nabc_family.m, nabc_family.shift), nabc_steps))
                std::cout << st.to_string() << '\n';
            return 0;
        }
        if (*ver) return run_verify(suite, bounds, report);
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kUsageError;
}
