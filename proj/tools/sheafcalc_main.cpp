// Command-line front end: stability classification, curve sampling,
// Brill-Noether reports, extremal decompositions and the verification
// suites. All numeric output is exact p/q text; --decimal appends
// display-only approximations.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sheafcalc/verify.hpp"

namespace {

using namespace sheafcalc;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitMath = 4;

constexpr unsigned kMaxDepth = 18;  // table size and rank growth get steep past this

struct Options {
    unsigned depth = kDefaultDepth;
    bool decimal = false;
    std::string cache_dir;
};

int usage_error(const std::string& msg) {
    std::cerr << "sheafcalc: " << msg << "\n";
    return kExitUsage;
}

int math_error(const std::string& msg) {
    std::cerr << "sheafcalc: " << msg << "\n";
    return kExitMath;
}

// One key=value record line; exact rationals, with optional trailing
// decimal twins.
class Record {
public:
    explicit Record(bool decimal) : decimal_(decimal) {}

    void add(const std::string& key, const std::string& value) {
        if (!empty_) line_ << ' ';
        empty_ = false;
        line_ << key << '=' << value;
    }

    void add_rat(const std::string& key, const Rat& x) {
        add(key, rat_str(x));
        if (decimal_) add(key + "~", decimal_approx(x));
    }

    std::string str() const { return line_.str(); }

private:
    std::ostringstream line_;
    bool decimal_;
    bool empty_ = true;
};

void print_header(const std::string& cmd, const Options& opt, const std::string& extra = "") {
    std::cout << "# sheafcalc " << cmd << " depth=" << opt.depth;
    if (!extra.empty()) std::cout << ' ' << extra;
    std::cout << '\n';
}

CharP2 parse_positive_rank_char(const std::string& text) {
    CharP2 v = parse_char(text);
    if (v.ch0 <= 0) throw std::invalid_argument("rank must be positive: '" + text + "'");
    return v;
}

int cmd_classify(const std::string& v_text, const Options& opt) {
    CharP2 v;
    try {
        v = parse_positive_rank_char(v_text);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
    StabilityVerdict verdict = classify(v, opt.depth);
    InvariantView inv = invariants(v);
    print_header("classify", opt);
    Record r(opt.decimal);
    r.add("v", char_str(v));
    r.add("verdict", stability_name(verdict.kind));
    r.add_rat("mu", inv.mu);
    r.add_rat("delta", inv.delta);
    r.add_rat("chi", inv.chi);
    if (verdict.kind == StabilityKind::stable || verdict.kind == StabilityKind::exceptional_unit)
        r.add_rat("dim_moduli", moduli_dim(v));
    if (verdict.kind == StabilityKind::below_curve)
        r.add_rat("delta_required", delta(inv.mu, opt.depth).delta_lower);
    std::cout << r.str() << '\n';
    return kExitOk;
}

int cmd_invariants(const std::string& v_text, const Options& opt) {
    CharP2 v;
    try {
        v = parse_char(v_text);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
    print_header("invariants", opt);
    Record r(opt.decimal);
    r.add("v", char_str(v));
    if (v.ch0 != 0) {
        InvariantView inv = invariants(v);
        r.add_rat("mu", inv.mu);
        r.add_rat("delta", inv.delta);
    }
    r.add_rat("chi", euler_char(v));
    r.add("integral", is_integral(v) ? "true" : "false");
    std::cout << r.str() << '\n';
    return kExitOk;
}

void write_curve_csv(std::ostream& out, const Rat& from, const Rat& to, const Rat& step,
                     unsigned depth) {
    out << "mu_num,mu_den,delta_num,delta_den,witness_alpha,branch\n";
    for (Rat mu = from; mu <= to; mu += step) {
        CurveEvaluation ev = delta(mu, depth);
        out << mu.get_num() << ',' << mu.get_den() << ',' << ev.delta_lower.get_num() << ','
            << ev.delta_lower.get_den() << ',' << rat_str(ev.witness.alpha) << ','
            << branch_name(ev.branch) << '\n';
    }
}

int cmd_curve(const std::string& from_s, const std::string& to_s, const std::string& step_s,
              const std::string& out_path, const Options& opt) {
    Rat from, to, step;
    try {
        from = parse_rat(from_s);
        to = parse_rat(to_s);
        step = parse_rat(step_s);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
    if (!(step > 0)) return usage_error("--step must be positive");
    if (!(from < to)) return usage_error("--from must be below --to");
    if (out_path.empty()) {
        write_curve_csv(std::cout, from, to, step, opt.depth);
        return kExitOk;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "sheafcalc: cannot write '" << out_path << "'\n";
        return kExitIo;
    }
    write_curve_csv(out, from, to, step, opt.depth);
    out.flush();
    if (!out.good()) {
        std::cerr << "sheafcalc: write failed on '" << out_path << "'\n";
        return kExitIo;
    }
    Int rows = rat_floor((to - from) / step) + 1;
    print_header("curve", opt, "rows=" + rows.get_str() + " out=" + out_path);
    return kExitOk;
}

int cmd_exc_slopes(unsigned q_max, const std::string& from_s, const std::string& to_s,
                   const std::string& out_path, const Options& opt) {
    Rat from, to;
    try {
        from = parse_rat(from_s);
        to = parse_rat(to_s);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
    if (from > to) return usage_error("--from must not exceed --to");
    auto slopes = enumerate_exceptional(q_max, from, to);
    std::ostringstream body;
    body << "sheafcalc-exc v1 qmax=" << q_max << '\n';
    for (const auto& e : slopes)
        body << e.dy_p << ' ' << e.dy_q << ' ' << rat_str_explicit(e.alpha) << ' ' << e.rank
             << ' ' << rat_str_explicit(e.disc) << '\n';
    if (out_path.empty()) {
        std::cout << body.str();
        return kExitOk;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "sheafcalc: cannot write '" << out_path << "'\n";
        return kExitIo;
    }
    out << body.str();
    print_header("exc-slopes", opt,
                 "qmax=" + std::to_string(q_max) + " rows=" + std::to_string(slopes.size()) +
                     " out=" + out_path);
    return kExitOk;
}

int cmd_bn(const std::string& v_text, unsigned long sections, const Options& opt) {
    CharP2 v;
    try {
        v = parse_positive_rank_char(v_text);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
    StabilityVerdict verdict = classify(v, opt.depth);
    if (verdict.kind != StabilityKind::stable && verdict.kind != StabilityKind::exceptional_unit)
        return math_error("bn needs a stable character; got " +
                          std::string(stability_name(verdict.kind)) + " (" + verdict.details + ")");
    print_header("bn", opt);
    Record r(opt.decimal);
    r.add("v", char_str(v));
    r.add("sections", std::to_string(sections));
    r.add("verdict", stability_name(verdict.kind));
    Rat chi = euler_char(v);
    r.add_rat("chi", chi);
    long bound = h0_upper_bound(v);
    r.add("h0_upper_bound", std::to_string(bound));
    if (v.ch0 >= 2) {
        GHCohomology gh = gh_generic_cohomology(v);
        r.add_rat("gh_h0", gh.h0);
        r.add_rat("gh_h1", gh.h1);
        r.add_rat("gh_h2", gh.h2);
    }
    BNQuery q{v, sections};
    r.add_rat("expected_codim", expected_codim(q));
    r.add_rat("expected_dim", expected_dim(q));
    if (v.ch1 > 0 && Rat(v.ch0) >= hilbert_p(Rat(v.ch1)) &&
        verdict.kind == StabilityKind::stable) {
        r.add_rat("expdim_high_rank", expdim_Br_high_rank(v, opt.depth));
        r.add("expdim_high_rank_consistent", "true");
    }
    if (chi == bound) r.add("note", "h0-bound-attained");
    std::cout << r.str() << '\n';
    return kExitOk;
}

int cmd_extremal(const std::string& v_text, const std::string& variant_s, const Options& opt) {
    CharP2 v;
    try {
        v = parse_positive_rank_char(v_text);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
    ExtremalVariant variant;
    if (variant_s == "paper") {
        variant = ExtremalVariant::weak_slope;
    } else if (variant_s == "ch") {
        variant = ExtremalVariant::strict_slope;
    } else {
        return usage_error("unknown variant '" + variant_s + "' (expected paper|ch)");
    }
    ExtremalTriple triple = extremal_triple(v, variant, opt.depth);
    print_header("extremal", opt, "variant=" + variant_s);
    Record r(opt.decimal);
    r.add("v", char_str(v));
    r.add("v_prime", char_str(triple.v_prime));
    r.add("v_dprime", char_str(triple.v_dprime));
    r.add("eps_prime", std::to_string(triple.eps_prime));
    r.add("eps", std::to_string(triple.eps));
    std::string coeff_line;
    if (v.ch1 > 0) {
        r.add_rat("z1_dim", z1_dim(v, opt.depth));
        try {
            Z2Growth growth = z2_growth(v, variant, opt.depth);
            r.add("z2_k_coeff", std::to_string(growth.k_coefficient));
            r.add("z1_k_coeff", std::to_string(v.ch0));
            coeff_line = "z2_k_coeff=" + std::to_string(growth.k_coefficient) +
                         " > z1_k_coeff=" + std::to_string(v.ch0);
        } catch (const std::domain_error& e) {
            r.add("z2_k_coeff", "undefined");
            r.add("z2_note", std::string("\"") + e.what() + "\"");
        }
    }
    std::cout << r.str() << '\n';
    if (!coeff_line.empty()) std::cout << coeff_line << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& suite, long k_max, long r_max_c1, long a_min, long r_max_lemma,
               long grid_den, const Options& opt) {
    bool all = suite == "all";
    if (!all && suite != "c1one" && suite != "vk" && suite != "regions" && suite != "rank2" &&
        suite != "noninteger")
        return usage_error("unknown suite '" + suite +
                           "' (expected c1one|vk|regions|rank2|noninteger|all)");
    std::vector<VerificationReport> reports;
    if (all || suite == "c1one") reports.push_back(suite_c1_one(r_max_c1, a_min));
    if (all || suite == "vk") reports.push_back(suite_vk_family(k_max, opt.depth));
    if (all || suite == "regions") reports.push_back(suite_regions(grid_den, opt.depth));
    if (all || suite == "rank2") reports.push_back(suite_rank2_example());
    if (all || suite == "noninteger") reports.push_back(suite_noninteger(r_max_lemma));
    bool ok = true;
    for (const auto& rep : reports) {
        rep.serialize(std::cout);
        ok = ok && rep.all_pass();
    }
    return ok ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for semistable sheaf numerics on the projective plane"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--depth", opt.depth, "exceptional-slope tree depth")
        ->envname("SHEAFCALC_DEPTH")
        ->check(CLI::Range(0u, kMaxDepth));
    app.add_flag("--decimal", opt.decimal, "append display-only decimal approximations");
    app.add_option("--cache-dir", opt.cache_dir, "directory for persisted slope tables")
        ->envname("SHEAFCALC_CACHE_DIR");

    std::string v_text, from_s = "0", to_s = "1", step_s, out_path, variant_s = "ch",
                suite = "all";
    unsigned long sections = 0;
    unsigned q_max = 4;
    long k_max = 20, r_max_c1 = 30, a_min = -15, r_max_lemma = 60, grid_den = 60;

    auto* c_classify = app.add_subcommand("classify", "stability trichotomy for a character");
    c_classify->add_option("v", v_text, "character r,c1,ch2")->required();

    auto* c_inv = app.add_subcommand("invariants", "slope, discriminant, Euler characteristic");
    c_inv->add_option("v", v_text, "character r,c1,ch2")->required();

    auto* c_curve = app.add_subcommand("curve", "sample the stability curve as CSV");
    c_curve->add_option("--from", from_s, "first slope")->required();
    c_curve->add_option("--to", to_s, "last slope")->required();
    c_curve->add_option("--step", step_s, "slope increment")->required();
    c_curve->add_option("--out", out_path, "output CSV path (default stdout)");

    auto* c_exc = app.add_subcommand("exc-slopes", "enumerate exceptional slopes");
    c_exc->add_option("--qmax", q_max, "dyadic depth")->check(CLI::Range(0u, kMaxDepth));
    c_exc->add_option("--from", from_s, "window start");
    c_exc->add_option("--to", to_s, "window end");
    c_exc->add_option("--out", out_path, "output path (default stdout)");

    auto* c_bn = app.add_subcommand("bn", "Brill-Noether expected dimensions and bounds");
    c_bn->add_option("v", v_text, "character r,c1,ch2")->required();
    c_bn->add_option("--sections", sections, "number of global sections")->required();

    auto* c_ext = app.add_subcommand("extremal", "extremal decomposition and growth rates");
    c_ext->add_option("v", v_text, "character r,c1,ch2")->required();
    c_ext->add_option("--variant", variant_s, "paper|ch");

    auto* c_verify = app.add_subcommand("verify", "run verification suites");
    c_verify->add_option("--suite", suite, "c1one|vk|regions|rank2|noninteger|all");
    c_verify->add_option("--k-max", k_max, "largest k in the character family");
    c_verify->add_option("--r-max", r_max_c1, "largest rank in the c1=1 grid");
    c_verify->add_option("--a-min", a_min, "lowest quotient degree in the c1=1 grid");
    c_verify->add_option("--lemma-r-max", r_max_lemma, "largest rank in the divisibility lemma");
    c_verify->add_option("--grid", grid_den, "denominator of the slope grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (!opt.cache_dir.empty()) set_table_store_dir(opt.cache_dir);

    try {
        if (c_classify->parsed()) return cmd_classify(v_text, opt);
        if (c_inv->parsed()) return cmd_invariants(v_text, opt);
        if (c_curve->parsed()) return cmd_curve(from_s, to_s, step_s, out_path, opt);
        if (c_exc->parsed()) return cmd_exc_slopes(q_max, from_s, to_s, out_path, opt);
        if (c_bn->parsed()) return cmd_bn(v_text, sections, opt);
        if (c_ext->parsed()) return cmd_extremal(v_text, variant_s, opt);
        if (c_verify->parsed())
            return cmd_verify(suite, k_max, r_max_c1, a_min, r_max_lemma, grid_den, opt);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const TableFormatError& e) {
        std::cerr << "sheafcalc: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "sheafcalc: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::domain_error& e) {
        return math_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "sheafcalc: internal error: " << e.what() << "\n";
        return kExitMath;
    }
    return usage_error("missing subcommand");
}
