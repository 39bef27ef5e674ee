#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "swcert/catenoid.hpp"
#include "swcert/certify.hpp"
#include "swcert/curve.hpp"
#include "swcert/gexpr.hpp"
#include "swcert/limacon.hpp"
#include "swcert/svg.hpp"
#include "swcert/weingarten.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

double round_sig(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

ordered_json jnum(double x) { return round_sig(x); }

ordered_json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw swcert::InvalidInput("cannot open input file: " + path);
    ordered_json j;
    in >> j;
    return j;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw swcert::InvalidInput("cannot write " + path.string());
    out << content;
}

swcert::ConvexCurve load_curve(const ordered_json& j, std::uint64_t seed) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "ellipse") {
        const int n = j.value("n", 1024);
        return swcert::ConvexCurve::ellipse(j.at("A").get<double>(), j.at("B").get<double>(), n,
                                            seed);
    }
    if (kind == "points") {
        std::vector<swcert::Vec2> pts;
        for (const auto& row : j.at("data"))
            pts.push_back({row.at(0).get<double>(), row.at(1).get<double>()});
        return swcert::ConvexCurve::sampled(pts, seed);
    }
    throw swcert::InvalidInput("unknown curve kind: " + kind);
}

swcert::WeingartenClass load_class(const ordered_json& j) {
    if (j.contains("family")) {
        const std::string family = j.at("family").get<std::string>();
        if (family == "linear_cmc") return swcert::linear_cmc(j.at("H").get<double>());
        if (family == "linear")
            return swcert::linear_relation(j.at("alpha").get<double>(), j.at("c").get<double>());
        if (family == "minimal_linear")
            return swcert::minimal_linear(j.at("m0").get<double>());
        throw swcert::InvalidInput("unknown g family: " + family);
    }
    const auto expr = swcert::gexpr::parse(j.at("expr").get<std::string>());
    const double alpha = j.at("alpha").get<double>();
    const double b = j.value("b", swcert::WeingartenClass::kInfinity);
    return swcert::from_expression(expr, alpha, b);
}

std::string curve_svg(const swcert::ConvexCurve& curve) {
    swcert::SvgBuilder svg;
    std::vector<swcert::Vec2> pts;
    std::size_t imax = 0, imin = 0;
    const auto& samples = curve.samples();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        pts.push_back(samples[i].point);
        if (samples[i].curvature > samples[imax].curvature) imax = i;
        if (samples[i].curvature < samples[imin].curvature) imin = i;
    }
    pts.push_back(samples[0].point);
    svg.polyline(pts, "#1f6fb2", 0.9);
    svg.circle(curve.enclosing_center(), curve.enclosing_radius(), "#c24040", 0.7, true);
    // osculating circles at the curvature extremes, tangent from inside
    const std::size_t n = samples.size();
    for (const std::size_t i : {imax, imin}) {
        const swcert::Vec2 tangent =
            samples[(i + 1) % n].point - samples[(i + n - 1) % n].point;
        const double len = swcert::norm(tangent);
        if (len == 0.0) continue;
        const swcert::Vec2 inward{-tangent.y / len, tangent.x / len};
        const double r = 1.0 / samples[i].curvature;
        svg.circle(samples[i].point + r * inward, r, "#2e9e4f", 0.7, true);
    }
    return svg.str();
}

int cmd_analyze_curve(const std::string& input, const std::string& out_dir, bool svg,
                      std::uint64_t seed) {
    const ordered_json spec = load_json(input);
    const swcert::ConvexCurve curve = load_curve(spec, seed);
    const auto bounds =
        swcert::graph_lemma_radius(curve.max_curvature(), curve.min_curvature());

    ordered_json report;
    report["kind"] = curve.kind() == swcert::ConvexCurve::Kind::Ellipse ? "ellipse" : "points";
    report["samples"] = curve.samples().size();
    report["Lambda"] = jnum(curve.max_curvature());
    report["lambda"] = jnum(curve.min_curvature());
    report["omega"] = jnum(curve.enclosing_radius());
    report["enclosing_center"] = {jnum(curve.enclosing_center().x),
                                  jnum(curve.enclosing_center().y)};
    report["r_gamma_lower"] = jnum(bounds.lower);
    report["r_gamma_upper"] = jnum(bounds.upper);
    report["strictly_convex"] = true;  // construction would have failed otherwise
    report["circle_case"] = curve.is_circle();

    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "curve_report.json", report.dump(2) + "\n");
    if (svg) write_file(fs::path(out_dir) / "curve.svg", curve_svg(curve));
    std::cout << report.dump(2) << "\n";
    return 0;
}

int cmd_limacon(const std::string& input, const std::string& out_dir) {
    const ordered_json spec = load_json(input);
    const double a = spec.at("a").get<double>();
    const double c = spec.at("c").get<double>();
    const swcert::Limacon lim(a, c);
    const swcert::LimaconKind kind = swcert::classify(a, c);

    ordered_json report;
    report["a"] = jnum(a);
    report["c"] = jnum(c);
    report["kind"] = kind == swcert::LimaconKind::Embedded
                         ? "embedded"
                         : (kind == swcert::LimaconKind::Cusp ? "cusp" : "two_loops");
    report["near_cusp"] = swcert::near_cusp(a, c);
    if (kind == swcert::LimaconKind::TwoLoops) {
        const auto disk = swcert::inner_loop_disk(a, c);
        report["inner_loop"] = {{"center", {jnum(disk.center.x), jnum(disk.center.y)}},
                                {"r_in", jnum(disk.inscribed_radius)},
                                {"r_out", jnum(disk.containing_radius)}};
    }

    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "limacon_report.json", report.dump(2) + "\n");
    write_file(fs::path(out_dir) / "limacon.svg", swcert::limacon_svg(lim));
    std::cout << report.dump(2) << "\n";
    return 0;
}

int cmd_catenoid(const std::string& input, const std::string& out_dir, bool force_obj) {
    const ordered_json spec = load_json(input);
    const double m0 = spec.at("m0").get<double>();
    const double r0 = spec.at("r0").get<double>();
    double cap = spec.value("height_cap", 0.0);
    const int nu = spec.value("nu", 32);
    const int nv = spec.value("nv", 64);
    const bool mirror = spec.value("mirror", false);
    const int csv_rows = spec.value("csv_samples", 129);

    const swcert::CatenoidProfile profile(m0, r0);

    ordered_json report;
    report["m0"] = jnum(m0);
    report["r0"] = jnum(r0);
    if (m0 < -1.0) {
        report["h_total"] = jnum(swcert::total_height(m0));
        report["divergent"] = false;
        report["height_bound"] = jnum(*profile.max_height());
    } else {
        report["h_total"] = nullptr;
        report["divergent"] = true;
        report["height_bound"] = nullptr;
    }
    const double h_star_factor = swcert::height_surrogate(m0);
    report["h_star"] = jnum(h_star_factor);
    report["r1"] = jnum(profile.radius_at_height(r0 * h_star_factor));
    const auto diagram = swcert::neck_diagram(m0, r0);
    report["neck_diagram"] = {
        {"from", {jnum(diagram.origin[0]), jnum(diagram.origin[1])}},
        {"from_included", diagram.origin_included},
        {"to", {jnum(diagram.neck_point[0]), jnum(diagram.neck_point[1])}},
        {"note",
         "endpoint written as (m0/r0, 1/r0); the kappa1 >= kappa2 axis convention would "
         "order it (1/r0, m0/r0)"}};

    fs::create_directories(out_dir);
    if (force_obj && cap <= 0.0)
        cap = m0 < -1.0 ? 0.5 * *profile.max_height() : r0 * h_star_factor;
    double s_top = r0;
    if (cap > 0.0) {
        const swcert::Mesh mesh = swcert::revolve_mesh(m0, r0, cap, nu, nv, mirror);
        std::ofstream obj(fs::path(out_dir) / "catenoid.obj", std::ios::binary);
        swcert::write_obj(mesh, obj);
        s_top = profile.radius_at_height(cap);
        report["height_cap"] = jnum(cap);
        report["boundary_radius"] = jnum(s_top);
    } else {
        s_top = profile.radius_at_height(r0 * h_star_factor);
    }

    std::ostringstream csv;
    csv << "s,h\n";
    char line[80];
    for (int i = 0; i < csv_rows; ++i) {
        const double s = r0 + (s_top - r0) * i / (csv_rows - 1);
        std::snprintf(line, sizeof line, "%.12g,%.12g\n", round_sig(s),
                      round_sig(profile.height(s)));
        csv << line;
    }
    write_file(fs::path(out_dir) / "profile.csv", csv.str());
    write_file(fs::path(out_dir) / "catenoid_report.json", report.dump(2) + "\n");
    std::cout << report.dump(2) << "\n";
    return 0;
}

struct CurveScalars {
    double max_curvature = 0.0;
    double min_curvature = 0.0;
    std::optional<double> omega;
};

CurveScalars resolve_curve_scalars(const ordered_json& spec, std::uint64_t seed) {
    CurveScalars s;
    std::optional<swcert::ConvexCurve> curve;
    if (spec.contains("curve")) curve = load_curve(spec.at("curve"), seed);
    if (curve) {
        s.max_curvature = curve->max_curvature();
        s.min_curvature = curve->min_curvature();
        s.omega = curve->enclosing_radius();
    }
    if (spec.contains("Lambda")) s.max_curvature = spec.at("Lambda").get<double>();
    if (spec.contains("lambda")) s.min_curvature = spec.at("lambda").get<double>();
    if (spec.contains("omega")) s.omega = spec.at("omega").get<double>();
    if (!(s.max_curvature > 0.0) || !(s.min_curvature > 0.0))
        throw swcert::InvalidInput(
            "certify needs curvature extremes, via \"curve\" or \"Lambda\"/\"lambda\"");
    return s;
}

int cmd_certify(const std::string& input, const std::string& out_dir, const std::string& mode,
                const std::string& sweep, std::uint64_t seed) {
    const ordered_json spec = load_json(input);
    const CurveScalars scalars = resolve_curve_scalars(spec, seed);

    swcert::CertificationReport report;
    if (mode == "theorem1") {
        if (!scalars.omega) throw swcert::InvalidInput("theorem1 needs omega (supply a curve)");
        const swcert::WeingartenClass w = load_class(spec.at("g"));
        const double m0 = spec.at("m0").get<double>();
        const double horizon =
            spec.value("horizon", w.alpha() + 100.0 * std::max(1.0, w.alpha()));
        const auto line_bound = swcert::check_line_through_umbilic(w, m0, horizon);
        std::optional<double> d;
        if (spec.contains("d")) d = spec.at("d").get<double>();
        report = swcert::theorem1_threshold(scalars.max_curvature, scalars.min_curvature,
                                            *scalars.omega, w, m0, line_bound, d);
    } else if (mode == "theorem2") {
        double alpha = 0.0, beta = 0.0;
        if (spec.contains("g")) {
            const swcert::WeingartenClass w = load_class(spec.at("g"));
            if (w.type() != swcert::WeingartenType::Cmc)
                throw swcert::NotCmcType("theorem2 requires a cmc-type class");
            alpha = w.alpha();
            beta = *w.beta();
        }
        if (spec.contains("alpha")) alpha = spec.at("alpha").get<double>();
        if (spec.contains("beta")) beta = spec.at("beta").get<double>();
        const double eps = spec.at("epsilon").get<double>();
        report = swcert::theorem2_check(scalars.max_curvature, scalars.min_curvature, eps,
                                        alpha, beta, scalars.omega);
        if (!sweep.empty()) {
            double lo = 0.0, hi = 0.0;
            int n = 0;
            if (std::sscanf(sweep.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3 || n < 2)
                throw swcert::InvalidInput("--sweep-eps expects lo:hi:n with n >= 2");
            std::ostringstream csv;
            csv << "eps,C,beta_lower,beta_upper,holds_1_lower,holds_1_upper,holds_2,overall\n";
            for (int i = 0; i < n; ++i) {
                const double eps_i = lo + (hi - lo) * i / (n - 1);
                const auto r = swcert::theorem2_check(scalars.max_curvature,
                                                      scalars.min_curvature, eps_i, alpha, beta,
                                                      scalars.omega);
                char line[160];
                std::snprintf(line, sizeof line, "%.12g,%.12g,%.12g,%.12g,%d,%d,%d,%s\n",
                              round_sig(eps_i), round_sig(r.intermediate("C")),
                              round_sig(r.intermediate("beta_lower")),
                              round_sig(r.intermediate("beta_upper")),
                              r.condition("1_lower").holds ? 1 : 0,
                              r.condition("1_upper").holds ? 1 : 0,
                              r.condition("2").holds ? 1 : 0, r.pass ? "PASS" : "FAIL");
                csv << line;
            }
            fs::create_directories(out_dir);
            write_file(fs::path(out_dir) / "sweep_eps.csv", csv.str());
        }
    } else if (mode == "general") {
        if (!scalars.omega) throw swcert::InvalidInput("general mode needs omega");
        const swcert::WeingartenClass w = load_class(spec.at("g"));
        const double m0 = spec.at("m0").get<double>();
        double h_star = 0.0;
        if (spec.contains("h_star")) {
            h_star = spec.at("h_star").get<double>();
        } else {
            const double eps = spec.at("epsilon").get<double>();
            h_star = eps * swcert::graph_lemma_radius(scalars.max_curvature,
                                                      scalars.min_curvature)
                               .lower;
        }
        report = swcert::general_conditions_check(scalars.max_curvature, scalars.min_curvature,
                                                  *scalars.omega, m0, h_star, w);
    } else {
        throw swcert::InvalidInput("unknown mode: " + mode);
    }

    const std::string text = swcert::to_json_string(report);
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "report.json", text);
    std::cout << text;
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certification toolkit for special Weingarten surfaces with planar convex "
                 "boundary"};
    app.require_subcommand(1);

    std::string input, out_dir = ".", mode = "theorem1", sweep;
    std::uint64_t seed = 0;
    bool svg = false;
    bool obj = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "input JSON file")->required();
        cmd->add_option("--out", out_dir, "output directory (created if absent)");
        cmd->add_option("--seed", seed, "seed for the enclosing-circle shuffle");
    };

    CLI::App* analyze = app.add_subcommand("analyze-curve",
                                           "curvature extremes and enclosing circle of a curve");
    add_common(analyze);
    analyze->add_flag("--svg", svg, "also emit curve.svg");

    CLI::App* lim = app.add_subcommand("limacon", "limacon classification, disks and figure");
    add_common(lim);

    CLI::App* cat = app.add_subcommand("catenoid",
                                       "rotational profile, height bounds, mesh and CSV");
    add_common(cat);
    cat->add_flag("--obj", obj, "write catenoid.obj even without a height_cap in the input");

    CLI::App* cert = app.add_subcommand("certify", "run a theorem checker and emit report.json");
    add_common(cert);
    cert->add_option("--mode", mode, "theorem1|theorem2|general")->required();
    cert->add_option("--sweep-eps", sweep, "lo:hi:n sweep table (theorem2 mode)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed()) return cmd_analyze_curve(input, out_dir, svg, seed);
        if (lim->parsed()) return cmd_limacon(input, out_dir);
        if (cat->parsed()) return cmd_catenoid(input, out_dir, obj);
        if (cert->parsed()) return cmd_certify(input, out_dir, mode, sweep, seed);
    } catch (const swcert::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
