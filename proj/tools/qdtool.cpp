// Command-line surface: boundary traces, quadrature data, monodromy walks,
// growth trajectories, classical example figures, elliptic integrals.
// Exit codes: 0 success, 1 validation failure, 2 numerical failure.

#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "qd/classical.hpp"
#include "qd/continuation.hpp"
#include "qd/elliptic.hpp"
#include "qd/emit.hpp"
#include "qd/growth.hpp"
#include "qd/moments.hpp"

using namespace qd;

namespace {

std::string out_dir() {
    const char* env = std::getenv("QD_OUT_DIR");
    return env && *env ? std::string(env) : std::string(".");
}

std::string join(const std::string& dir, const std::string& name) {
    if (!name.empty() && name[0] == '/') return name; // absolute basenames pass through
    return dir + "/" + name;
}

// flat key=value config file; values apply only to flags not set on the
// command line (precedence: flags > config file > defaults)
std::map<std::string, std::string> read_config(const std::string& path) {
    std::map<std::string, std::string> kv;
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot read " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--config", "bad line: " + line);
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

void validate_samples(int samples) {
    if (samples < 256 || samples > 65536 || !is_pow2(std::size_t(samples)))
        throw CLI::ValidationError("--samples", "must be a power of two in [256, 65536]");
}

// --sweep key=start:stop:step
struct Sweep {
    std::string key;
    std::vector<double> values;
};

Sweep parse_sweep(const std::string& spec) {
    Sweep s;
    auto eq = spec.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--sweep", "expected key=start:stop:step");
    s.key = spec.substr(0, eq);
    double start, stop, step;
    char c1, c2;
    std::istringstream iss(spec.substr(eq + 1));
    if (!(iss >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0)
        throw CLI::ValidationError("--sweep", "expected key=start:stop:step");
    for (double v = start; v <= stop + 1e-12 * step; v += step) s.values.push_back(v);
    return s;
}

std::string tag(double v) {
    std::ostringstream os;
    os << v;
    auto s = os.str();
    for (auto& ch : s)
        if (ch == '.') ch = 'p';
    return s;
}

void emit_trace(double a, double C, int samples, const std::string& format,
                const std::string& base) {
    MapParams p(a, C);
    auto grid = laurent_coeffs(p, std::max(samples, suggested_n(a)));
    // the curve is computed on the (possibly finer) coefficient grid and
    // decimated to the requested sample count
    auto curve = boundary_curve(p, grid, std::max({samples, grid.n, 1024}));
    int stride = curve.m / samples;
    std::vector<std::vector<double>> rows;
    for (int j = 0; j < samples; ++j)
        rows.push_back({2.0 * pi * j / samples, curve.zeta[j * stride].real(),
                        curve.zeta[j * stride].imag()});
    if (format == "svg") {
        write_file(base + ".svg", svg_curve(curve.zeta));
        write_file(base + ".csv", csv_table({"theta", "re_zeta", "im_zeta"}, rows));
    } else if (format == "csv") {
        write_file(base + ".csv", csv_table({"theta", "re_zeta", "im_zeta"}, rows));
    } else {
        JsonObject o;
        o.add("a", a);
        o.add("c", C);
        o.add("samples", samples);
        o.add("min_abs_df", curve.min_abs_df);
        o.add_raw("simple", curve.simple ? "true" : "false");
        write_file(base + ".json", o.str() + "\n");
    }
}

void emit_quadrature(double a, double C, int samples, const std::string& base) {
    MapParams p(a, C);
    auto grid = laurent_coeffs(p, std::max(samples, suggested_n(a)));
    auto curve = boundary_curve(p, grid, std::max({samples, grid.n, 1024}));
    auto q = extract_quadrature_direct(curve);
    auto ql = extract_quadrature_laurent(p, grid);
    JsonObject params;
    params.add("a", a);
    params.add("c", C);
    JsonObject o;
    o.add_raw("params", params.str());
    o.add("a0", q.a0);
    o.add("a1", q.a1);
    o.add("a0_laurent", ql.a0);
    o.add("a1_laurent", ql.a1);
    std::vector<double> res(q.residuals.begin() + 3, q.residuals.end());
    o.add("residuals", res);
    o.add_raw("is_quadrature_domain", q.is_quadrature_domain ? "true" : "false");
    write_file(base + ".json", o.str() + "\n");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quadrature-domain toolkit: conformal traces, moment "
                 "verification, monodromy, Laplacian growth"};
    app.require_subcommand(1);

    double a = 0.3, C = 1.0;
    int samples = 4096;
    std::string format = "csv", out, config;
    std::string sweep_spec;

    auto add_common = [&](CLI::App* sub, bool with_format = true) {
        sub->add_option("--a", a, "branch-point parameter a in [0,1)");
        sub->add_option("--c", C, "scale factor C > 0");
        sub->add_option("--samples", samples, "power-of-two sample count in [256, 65536]");
        if (with_format)
            sub->add_option("--format", format, "output format: csv, json, svg")
                ->check(CLI::IsMember({"csv", "json", "svg"}));
        sub->add_option("--out", out, "output basename (default: subcommand name)");
        sub->add_option("--config", config, "flat key=value config file");
        sub->add_option("--sweep", sweep_spec, "parameter sweep key=start:stop:step");
    };

    auto* trace = app.add_subcommand("trace", "boundary curve of the R^4 family profile");
    add_common(trace);
    auto* quad = app.add_subcommand("quadrature", "quadrature weights and moment residuals");
    add_common(quad);

    auto* mono = app.add_subcommand("monodromy", "walk loops on the Riemann surface of F");
    std::string loops_spec = "g1";
    double base_re = 0.5, base_im = 0.3;
    mono->add_option("--a", a, "branch-point parameter");
    mono->add_option("--loops", loops_spec, "comma-separated loop tokens g1,g2,...");
    mono->add_option("--base-re", base_re, "base point, real part");
    mono->add_option("--base-im", base_im, "base point, imaginary part");
    mono->add_option("--out", out, "output basename");
    mono->add_option("--config", config, "flat key=value config file");

    auto* grow = app.add_subcommand("growth", "Laplacian-growth trajectory (CSV rows: "
                                              "t,a,c,a0,a1,min_abs_df,cusp_flag)");
    double Q = -0.05, dt = 1.0;
    int steps = 20;
    add_common(grow, false);
    grow->add_option("--q", Q, "flux (positive: injection adds volume)");
    grow->add_option("--dt", dt, "time step");
    grow->add_option("--steps", steps, "step count");

    auto* cusp = app.add_subcommand("cusp", "locate the cusp parameter of the family");
    cusp->add_option("--c", C, "scale factor");
    cusp->add_option("--config", config, "flat key=value config file");

    auto* ex = app.add_subcommand("examples", "classical reference shapes");
    std::string shape = "neumann";
    double param = 1.0, param2 = 0.0;
    ex->add_option("shape", shape, "neumann | limacon | cardioid | ball")
        ->check(CLI::IsMember({"neumann", "limacon", "cardioid", "ball"}));
    ex->add_option("--param", param, "shape parameter (oval a, limacon sigma, cardioid a, ball r)");
    ex->add_option("--param2", param2, "second parameter (cardioid b)");
    ex->add_option("--samples", samples, "sample count");
    ex->add_option("--format", format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
    ex->add_option("--out", out, "output basename");
    ex->add_option("--config", config, "flat key=value config file");

    auto* ell = app.add_subcommand("elliptic", "complete elliptic integral Pi(n, m)");
    double en = 0.0, em = 0.0;
    ell->add_option("--n", en, "characteristic n < 1");
    ell->add_option("--m", em, "modulus parameter m < 1");

    CLI11_PARSE(app, argc, argv);
    CLI::App* sub = app.get_subcommands().front();

    try {
        // config file: fill values for flags the user did not set
        if (!config.empty()) {
            auto kv = read_config(config);
            auto fill = [&](const char* flag, auto& var) {
                auto* opt = sub->get_option_no_throw(flag);
                auto it = kv.find(flag + 2); // strip "--"
                if (opt && opt->count() == 0 && it != kv.end()) {
                    std::istringstream iss(it->second);
                    iss >> var;
                }
            };
            fill("--a", a);
            fill("--c", C);
            fill("--samples", samples);
            fill("--format", format);
            fill("--q", Q);
            fill("--dt", dt);
            fill("--steps", steps);
            fill("--param", param);
            fill("--param2", param2);
        }
        validate_samples(samples);
        std::string dir = out_dir();

        if (sub == trace || sub == quad) {
            std::string base = join(dir, out.empty() ? sub->get_name() : out);
            std::vector<std::pair<double, double>> runs{{a, C}};
            std::vector<std::string> suffixes{""};
            if (!sweep_spec.empty()) {
                auto sw = parse_sweep(sweep_spec);
                if (sw.key != "a" && sw.key != "c")
                    throw CLI::ValidationError("--sweep", "key must be a or c");
                runs.clear();
                suffixes.clear();
                for (double v : sw.values) {
                    runs.push_back(sw.key == "a" ? std::pair{v, C} : std::pair{a, v});
                    suffixes.push_back("_" + sw.key + tag(v));
                }
            }
            for (std::size_t i = 0; i < runs.size(); ++i) {
                if (sub == trace)
                    emit_trace(runs[i].first, runs[i].second, samples, format,
                               base + suffixes[i]);
                else
                    emit_quadrature(runs[i].first, runs[i].second, samples,
                                    base + suffixes[i]);
            }
        } else if (sub == mono) {
            cplx w0(base_re, base_im);
            std::vector<std::vector<cplx>> loops;
            std::stringstream ss(loops_spec);
            std::string tok;
            std::vector<int> visited_sheets;
            while (std::getline(ss, tok, ',')) {
                if (tok == "g1")
                    loops.push_back(loop_gamma1(w0, a));
                else if (tok == "g2")
                    loops.push_back(loop_gamma2(w0, a));
                else
                    throw CLI::ValidationError("--loops", "unknown token " + tok);
            }
            if (loops.empty()) throw CLI::ValidationError("--loops", "empty loop list");
            SheetState st;
            visited_sheets.push_back(st.m * st.s);
            for (auto& l : loops) {
                auto [ns, nv] = continue_along(l, st, a);
                st = ns;
                visited_sheets.push_back(st.m * st.s);
            }
            cplx val = sheet_value(w0, st, a);
            cplx offset = val - eval_F(w0, a);
            cplx sG = sqrtG_principal(w0, a);
            JsonObject o;
            o.add("base_re", base_re);
            o.add("base_im", base_im);
            std::vector<double> sheets(visited_sheets.begin(), visited_sheets.end());
            o.add("sheets_visited", sheets);
            o.add("final_offset_re", offset.real());
            o.add("final_offset_im", offset.imag());
            o.add("final_offset_multiple_of_sqrtG", 2.0 * double(st.m * st.s));
            o.add("sqrtG_re", sG.real());
            o.add("sqrtG_im", sG.imag());
            std::string base = join(dir, out.empty() ? "monodromy" : out);
            write_file(base + ".json", o.str() + "\n");
            std::cout << o.str() << "\n";
        } else if (sub == grow) {
            GrowthState s0;
            s0.a = a;
            s0.C = C;
            auto traj = evolve(s0, Q, dt, steps);
            std::vector<std::vector<double>> rows;
            for (auto& st : traj)
                rows.push_back({st.t, st.a, st.C, st.a0, st.a1, st.min_abs_df,
                                st.cusp ? 1.0 : 0.0});
            std::string base = join(dir, out.empty() ? "growth" : out);
            write_file(base + ".csv",
                       csv_table({"t", "a", "c", "a0", "a1", "min_abs_df", "cusp_flag"}, rows));
        } else if (sub == cusp) {
            double astar = find_cusp_parameter(C);
            std::cout << "a_star = " << num17(astar) << "\n";
        } else if (sub == ex) {
            std::string base = join(dir, out.empty() ? ("examples_" + shape) : out);
            std::vector<cplx> pts(samples);
            if (shape == "neumann") {
                for (int j = 0; j < samples; ++j)
                    pts[j] = oval_map(std::polar(1.0, 2.0 * pi * j / samples), param);
            } else if (shape == "limacon") {
                require_limacon_sigma(param);
                for (int j = 0; j < samples; ++j) {
                    cplx z = std::polar(1.0, 2.0 * pi * j / samples);
                    pts[j] = z + param * z * z;
                }
            } else if (shape == "cardioid") {
                if (param2 == 0.0) param2 = 1.0;
                if (!(param2 > 2.0 * param && param > 0.0))
                    throw CLI::ValidationError("--param", "cardioid needs b > 2a > 0");
                for (int j = 0; j < samples; ++j)
                    pts[j] = pk_cardioid_map(std::polar(1.0, 2.0 * pi * j / samples), param,
                                             param2);
            } else {
                for (int j = 0; j < samples; ++j)
                    pts[j] = param * std::polar(1.0, 2.0 * pi * j / samples);
            }
            if (format == "svg") {
                write_file(base + ".svg", svg_curve(pts));
            } else {
                std::vector<std::vector<double>> rows;
                for (int j = 0; j < samples; ++j)
                    rows.push_back({2.0 * pi * j / samples, pts[j].real(), pts[j].imag()});
                write_file(base + ".csv", csv_table({"theta", "re_zeta", "im_zeta"}, rows));
            }
        } else if (sub == ell) {
            double v = carlson_pi(en, em);
            JsonObject o;
            o.add("n", en);
            o.add("m", em);
            o.add("pi_nm", v);
            std::cout << o.str() << "\n";
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
