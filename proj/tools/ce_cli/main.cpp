#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ce/descriptor_json.hpp"
#include "ce/errors.hpp"
#include "ce/expr.hpp"
#include "ce/improvement.hpp"
#include "ce/indicator_geometry.hpp"
#include "ce/lp_optimizer.hpp"
#include "ce/zero_analysis.hpp"

using nlohmann::json;

namespace {

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  success\n"
    "  2  invalid input\n"
    "  3  precondition failed\n"
    "  4  numeric non-convergence\n"
    "  5  improvement refused";

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string read_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ce::InvalidInputError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ce::InvalidInputError("cannot open output file: " + path);
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
}

json grid_to_json(const ce::GridSpec& g) {
    return json{{"step", g.step},
                {"r_max", g.r_max},
                {"tol", g.tol},
                {"orientations", g.orientations},
                {"seed", g.seed}};
}

json report_to_json(const ce::CEReport& rep) {
    return json{{"f0", rep.f0},
                {"fhat0", rep.fhat0},
                {"r", rep.finite_radius ? json(rep.r) : json("infinite")},
                {"fhat_min", rep.fhat_min},
                {"density_bound", rep.density_bound},
                {"passed", rep.passed},
                {"finite_radius", rep.finite_radius},
                {"failure", rep.failure},
                {"grid", grid_to_json(rep.grid)}};
}

const char* kind_name(ce::ZeroKind k) {
    switch (k) {
        case ce::ZeroKind::Crossing: return "crossing";
        case ce::ZeroKind::Touching: return "touching";
        case ce::ZeroKind::IntervalStart: return "interval_start";
        default: return "interval_end";
    }
}

json zeros_to_json(const ce::ZeroReport& z) {
    json roots = json::array();
    for (const auto& rec : z.roots)
        roots.push_back(json::array({rec.length, kind_name(rec.kind)}));
    return json{{"dim", z.dim},
                {"side", z.side == ce::ProfileSide::Function ? "function" : "transform"},
                {"roots", roots},
                {"r_max", z.r_max},
                {"tol", z.tol},
                {"scan_step", z.scan_step},
                {"tail_zero_free", z.tail_zero_free}};
}

struct CommonOpts {
    std::string in_path, out_path, emit = "json";
    double rmax = 0.0, tol = 1e-9, grid_step = 1e-3;
    std::uint64_t seed = 0;
};

void add_io_flags(CLI::App* cmd, CommonOpts& o, bool needs_in) {
    auto* in = cmd->add_option("--in", o.in_path, "Input function descriptor (JSON)");
    if (needs_in) in->required();
    cmd->add_option("--out", o.out_path, "Output path (default: stdout)");
    cmd->add_option("--emit", o.emit, "Artifact format: json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->footer(kExitCodes);
}

int run(int argc, char** argv) {
    CLI::App app{"Desk-scale linear-programming bounds for sphere packing:\n"
                 "certified radii, zero-set analysis, witness chains, and\n"
                 "function-improvement operators over exact-transform descriptors."};
    app.require_subcommand(1);
    app.footer(kExitCodes);

    // bound
    int b_dim = 1;
    double b_r = 1.0;
    std::string b_out;
    auto* bound = app.add_subcommand("bound", "Density bound V_n (r/2)^n for a certified radius");
    bound->add_option("--dim", b_dim, "Dimension n")->required()->check(CLI::PositiveNumber);
    bound->add_option("--r", b_r, "Certified radius")->required();
    bound->add_option("--out", b_out, "Output path (default: stdout)");
    bound->footer(kExitCodes);

    // verify
    CommonOpts v;
    int v_orient = 64;
    auto* verify = app.add_subcommand("verify", "Check the four LP-certificate conditions");
    add_io_flags(verify, v, true);
    verify->add_option("--rmax", v.rmax, "Scan range (0: automatic)");
    verify->add_option("--tol", v.tol, "Base tolerance");
    verify->add_option("--grid", v.grid_step, "Grid step");
    verify->add_option("--seed", v.seed, "Orientation-sampling seed");
    verify->add_option("--orientations", v_orient, "Directions for non-radial inputs");

    // zeros
    CommonOpts z;
    std::string z_side = "function";
    double z_window = 0.0;
    z.rmax = 6.0;
    z.tol = 1e-8;
    auto* zeros = app.add_subcommand("zeros", "Extract root lengths and gap statistics");
    add_io_flags(zeros, z, true);
    zeros->add_option("--side", z_side, "Profile: function | transform")
        ->check(CLI::IsMember({"function", "transform"}));
    zeros->add_option("--rmax", z.rmax, "Scan range");
    zeros->add_option("--tol", z.tol, "Touching/vanishing tolerance");
    zeros->add_option("--grid", z.grid_step, "Scan step");
    zeros->add_option("--window", z_window, "Sliding-window width for gap statistics (0: off)");

    // optimize
    CommonOpts o;
    int o_dim = 1, o_degree = 12, o_neg = 400, o_pos = 400;
    double o_rlo = 0.0, o_rhi = 0.0;
    o.tol = 1e-3;
    auto* optimize = app.add_subcommand("optimize", "Minimize the certified radius over degree-K certificates");
    add_io_flags(optimize, o, false);
    optimize->add_option("--dim", o_dim, "Dimension n")->required()->check(CLI::PositiveNumber);
    optimize->add_option("--degree", o_degree, "Basis degree K")->check(CLI::PositiveNumber);
    optimize->add_option("--r-lo", o_rlo, "Bracket lower end (0: default bracket)");
    optimize->add_option("--r-hi", o_rhi, "Bracket upper end (0: default bracket)");
    optimize->add_option("--tol", o.tol, "Bisection tolerance on r");
    optimize->add_option("--rmax", o.rmax, "Constraint-grid range (0: automatic)");
    optimize->add_option("--neg-points", o_neg, "Sign-grid size");
    optimize->add_option("--pos-points", o_pos, "Transform-grid size");

    // improve
    CommonOpts im;
    std::string im_side = "spatial";
    double im_r = 0.0, im_theta = 0.5, im_c = 0.5, im_eps = 0.4, im_target = 1.1;
    im.rmax = 6.0;
    im.tol = 1e-8;
    auto* improve = app.add_subcommand("improve", "Apply an improvement operator (witness-chain pipeline)");
    add_io_flags(improve, im, true);
    improve->add_option("--side", im_side, "Operator: spatial | fourier | dual")
        ->check(CLI::IsMember({"spatial", "fourier", "dual"}));
    improve->add_option("--r", im_r, "Certified radius of the input (0: re-derive)");
    improve->add_option("--theta", im_theta, "Safety factor in (0, 1]");
    improve->add_option("--c", im_c, "Dual-sharpening coefficient in (0, 1)");
    improve->add_option("--eps", im_eps, "Witness ball radius");
    improve->add_option("--target-measure", im_target, "Witness-set measure target (> 1)");
    improve->add_option("--rmax", im.rmax, "Zero-scan range for the witness oracle");
    improve->add_option("--tol", im.tol, "Zero-scan tolerance");
    improve->add_option("--grid", im.grid_step, "Zero-scan step");

    // ft-check
    CommonOpts fc;
    fc.rmax = 4.0;
    fc.tol = 1e-6;
    fc.grid_step = 0.1;
    auto* ftcheck = app.add_subcommand("ft-check", "Compare the exact transform against numeric quadrature");
    add_io_flags(ftcheck, fc, true);
    ftcheck->add_option("--rmax", fc.rmax, "Largest sampled length");
    ftcheck->add_option("--tol", fc.tol, "Maximum admissible relative error");
    ftcheck->add_option("--grid", fc.grid_step, "Sample spacing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(ce::ErrorClass::InvalidInput);
    }

    if (bound->parsed()) {
        write_output(b_out, fmt(ce::density_bound(b_dim, b_r)));
        return 0;
    }

    if (verify->parsed()) {
        ce::ExprPtr f = ce::parse_descriptor(read_input(v.in_path));
        ce::GridSpec grid;
        grid.step = v.grid_step;
        grid.r_max = v.rmax;
        grid.tol = v.tol;
        grid.orientations = v_orient;
        grid.seed = v.seed;
        ce::CEReport rep = ce::verify_ce(f, grid);
        if (v.emit == "csv") {
            // radial profile of f, plot-ready
            std::ostringstream csv;
            csv << "radius,value\n";
            double range = v.rmax > 0.0 ? v.rmax : 6.0;
            std::vector<double> e1(f->dim(), 0.0);
            e1[0] = 1.0;
            long count = (long)std::ceil(range / grid.step);
            for (long i = 0; i <= count; ++i) {
                double s = std::min(range, i * grid.step);
                csv << fmt(s) << ',' << fmt(ce::evaluate_at_radius(f, s, e1)) << '\n';
            }
            write_output(v.out_path, csv.str());
        } else {
            write_output(v.out_path, report_to_json(rep).dump(2));
        }
        return rep.passed ? 0 : static_cast<int>(ce::ErrorClass::Precondition);
    }

    if (zeros->parsed()) {
        ce::ExprPtr f = ce::parse_descriptor(read_input(z.in_path));
        auto side = z_side == "function" ? ce::ProfileSide::Function : ce::ProfileSide::Transform;
        ce::ZeroReport rep = ce::extract_zeros(f, side, z.rmax, z.tol, z.grid_step);
        if (z.emit == "csv") {
            std::ostringstream csv;
            csv << "length,kind\n";
            for (const auto& rec : rep.roots)
                csv << fmt(rec.length) << ',' << kind_name(rec.kind) << '\n';
            write_output(z.out_path, csv.str());
        } else {
            json out = zeros_to_json(rep);
            if (z_window > 0.0) {
                ce::GapStats gs = ce::gap_statistics(rep, z_window, {0.1, 0.01});
                json windows = json::array();
                for (const auto& [start, g] : gs.window_profile)
                    windows.push_back(json::array({start, g}));
                out["gap_stats"] = json{{"max_gap", gs.max_gap},
                                        {"max_gap_location", gs.max_gap_location},
                                        {"min_gap", gs.min_gap},
                                        {"window_c", gs.window_c},
                                        {"window_profile", windows}};
            }
            write_output(z.out_path, out.dump(2));
        }
        return 0;
    }

    if (optimize->parsed()) {
        auto [lo, hi] = ce::default_bracket(o_dim);
        if (o_rlo > 0.0) lo = o_rlo;
        if (o_rhi > 0.0) hi = o_rhi;
        ce::LpGridSpec grid;
        grid.neg_points = o_neg;
        grid.pos_points = o_pos;
        grid.r_max = o.rmax;
        ce::OptimizeResult res = ce::minimize_r(o_dim, o_degree, lo, hi, o.tol, grid);
        if (o.emit == "csv") {
            std::ostringstream csv;
            csv << "r,feasible\n";
            for (const auto& [r, feasible] : res.bisection_trace)
                csv << fmt(r) << ',' << (feasible ? 1 : 0) << '\n';
            write_output(o.out_path, csv.str());
        } else {
            json out{{"r_best", res.r_best},
                     {"coefficients", res.coefficients},
                     {"report", report_to_json(res.report)},
                     {"descriptor", json::parse(ce::serialize_descriptor(res.function))}};
            json trace = json::array();
            for (const auto& [r, feasible] : res.bisection_trace)
                trace.push_back(json::array({r, feasible}));
            out["bisection_trace"] = trace;
            write_output(o.out_path, out.dump(2));
        }
        return 0;
    }

    if (improve->parsed()) {
        ce::ExprPtr f = ce::parse_descriptor(read_input(im.in_path));
        double r = im_r;
        if (r <= 0.0) {
            ce::CEReport rep = ce::verify_ce(f);
            if (!rep.finite_radius)
                throw ce::PreconditionError("improve: input has no certified radius");
            r = rep.r;
        }
        ce::ExprPtr result;
        json params;
        if (im_side == "dual") {
            result = ce::sharpen_via_dual(f, r, im_c);
            params = json{{"side", "dual"}, {"c", im_c}, {"r_in", r}};
        } else {
            auto side = im_side == "spatial" ? ce::ProfileSide::Function : ce::ProfileSide::Transform;
            ce::ZeroReport zr = ce::extract_zeros(f, side, im.rmax, im.tol, im.grid_step);
            ce::GapOracle oracle = ce::make_gap_oracle(zr, im.tol);
            ce::BallUnion s = ce::witness_chain(f->dim(), oracle, im_eps, im_target);
            ce::ImprovementParams p;
            if (im_side == "spatial")
                std::tie(result, p) = ce::improve_spatial(f, s, r, im_theta);
            else
                std::tie(result, p) = ce::improve_fourier(f, s, im_theta);
            params = json{{"side", im_side},
                          {"alpha", p.alpha},
                          {"c_scale", p.c_scale},
                          {"theta", p.theta},
                          {"r_in", r},
                          {"witness", json::parse(ce::serialize_ball_union(s))}};
        }
        json out{{"params", params},
                 {"descriptor", json::parse(ce::serialize_descriptor(result))}};
        write_output(im.out_path, out.dump(2));
        return 0;
    }

    // ft-check
    ce::ExprPtr f = ce::parse_descriptor(read_input(fc.in_path));
    if (!ce::is_radial(f))
        throw ce::PreconditionError("ft-check: numeric transform oracle requires a radial input");
    ce::ExprPtr fhat = ce::fourier_exact(f);
    double max_rel = 0.0, worst_t = 0.0, scale = std::abs(ce::evaluate_radial(fhat, 0.0));
    if (scale <= 0.0) scale = 1.0;
    std::ostringstream csv;
    csv << "radius,value\n";
    long count = (long)std::ceil(fc.rmax / fc.grid_step);
    long points = 0;
    for (long i = 0; i <= count; ++i) {
        double t = std::min(fc.rmax, i * fc.grid_step);
        double exact = ce::evaluate_radial(fhat, t);
        double oracle = ce::hankel_oracle(f, t);
        double rel = std::abs(exact - oracle) / std::max(scale, std::abs(exact));
        if (rel > max_rel) {
            max_rel = rel;
            worst_t = t;
        }
        csv << fmt(t) << ',' << fmt(rel) << '\n';
        ++points;
    }
    if (fc.emit == "csv") {
        write_output(fc.out_path, csv.str());
    } else {
        write_output(fc.out_path, json{{"max_rel_error", max_rel},
                                       {"worst_radius", worst_t},
                                       {"points", points},
                                       {"tol", fc.tol},
                                       {"passed", max_rel <= fc.tol}}
                                      .dump(2));
    }
    if (max_rel > fc.tol)
        throw ce::NumericError("ft-check: max relative error " + fmt(max_rel) +
                               " exceeds tolerance " + fmt(fc.tol));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ce::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(e.error_class());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(ce::ErrorClass::Numeric);
    }
}
