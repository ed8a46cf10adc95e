#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hypzeta/errors.hpp"
#include "hypzeta/model.hpp"
#include "hypzeta/radial.hpp"
#include "hypzeta/transforms.hpp"
#include "hypzeta/verify.hpp"
#include "hypzeta/zeta.hpp"
#include "json.hpp"

using namespace hz;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInput = 2, kNumerical = 3 };

struct EvalArgs {
    std::string kind;
    std::string model_path;
    int phi = 0;
    std::string k;
    std::string grid;
    int M = 30;
    int jmax = -1;
    bool normalize = false;
    bool allow_near_pole = false;
    std::string mu = "0";
    int dimension = 0;
    std::string mode = "closed";
    std::string format = "csv";
    std::string out;
};

std::vector<double> split_numbers(const std::string& s, const std::string& flag) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw InputError(flag + ": '" + item + "' is not a number");
        }
    }
    return v;
}

cplx parse_complex(const std::string& s, const std::string& flag) {
    auto v = split_numbers(s, flag);
    if (v.empty() || v.size() > 2) throw InputError(flag + ": expected re or re,im");
    return {v[0], v.size() == 2 ? v[1] : 0.0};
}

// Points of --grid re0,re1,im0,im1,nr,ni in row-major order (imaginary part fastest), or the single --k.
std::vector<cplx> grid_points(const EvalArgs& a) {
    if (!a.grid.empty() && !a.k.empty()) throw InputError("--k and --grid are mutually exclusive");
    if (a.grid.empty()) {
        if (a.k.empty()) throw InputError("one of --k or --grid is required");
        return {parse_complex(a.k, "--k")};
    }
    auto g = split_numbers(a.grid, "--grid");
    if (g.size() != 6) throw InputError("--grid: expected re0,re1,im0,im1,nr,ni");
    int nr = int(g[4]), ni = int(g[5]);
    if (nr < 1 || ni < 1 || nr != g[4] || ni != g[5]) throw InputError("--grid: nr and ni must be positive integers");
    std::vector<cplx> pts;
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < ni; ++j) {
            double re = nr == 1 ? g[0] : g[0] + (g[1] - g[0]) * i / (nr - 1);
            double im = ni == 1 ? g[2] : g[2] + (g[3] - g[2]) * j / (ni - 1);
            pts.emplace_back(re, im);
        }
    return pts;
}

unsigned worker_count(size_t jobs) {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HYPZETA_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || cap < 1) throw InputError("HYPZETA_THREADS must be a positive integer");
        n = std::min<unsigned>(n, unsigned(cap));
    }
    return std::max(1u, std::min<unsigned>(n, unsigned(jobs)));
}

// Evaluates f at every point on a worker pool; results stay in input order. The first
// exception (in input order) is rethrown.
template <class R, class F>
std::vector<R> parallel_map(const std::vector<cplx>& pts, F f) {
    std::vector<R> out(pts.size());
    std::vector<std::exception_ptr> errs(pts.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i; (i = next++) < pts.size();) {
            try {
                out[i] = f(pts[i]);
            } catch (...) {
                errs[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    unsigned n = worker_count(pts.size());
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return out;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
};

std::string fmt_num(const json& v) {
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    double d = v.get<double>();
    if (d == 0) d = 0;  // no "-0"
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof buf, d);
    return std::string(buf, r.ptr);
}

void write_output(const Table& t, const EvalArgs& a) {
    std::ostringstream os;
    if (a.format == "json") {
        json j;
        j["kind"] = a.kind;
        j["columns"] = t.columns;
        j["rows"] = json::array();
        for (const auto& r : t.rows) j["rows"].push_back(r);
        os << j.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
        os << "\n";
        for (const auto& r : t.rows) {
            for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << fmt_num(r[i]);
            os << "\n";
        }
    }
    if (a.out.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(a.out);
        if (!f) throw InputError(a.out + ": cannot open for writing");
        f << os.str();
    }
}

const std::vector<std::string> kValueColumns = {"k_re", "k_im", "value_re", "value_im", "error_estimate"};

struct Value {
    cplx v;
    double err = 0;
};

Table value_table(const std::vector<cplx>& pts, const std::vector<Value>& vals) {
    Table t{kValueColumns, {}};
    for (size_t i = 0; i < pts.size(); ++i)
        t.rows.push_back({pts[i].real(), pts[i].imag(), vals[i].v.real(), vals[i].v.imag(), vals[i].err});
    return t;
}

SpectralModel load_model(const EvalArgs& a) {
    if (a.model_path.empty()) throw InputError("--model is required for eval " + a.kind);
    auto m = ingest(a.model_path);
    if (a.phi < 0 || a.phi >= int(m.eigen.size()))
        throw InputError("--phi " + std::to_string(a.phi) + ": model has " + std::to_string(m.eigen.size()) +
                         " eigen records");
    return m;
}

// Divides by omega I(r_n, l, k), the normalization of the pairing with f_k.
Value maybe_normalize(Value v, const EvalArgs& a, const SpectralModel& m, cplx k) {
    if (!a.normalize) return v;
    cplx n = omega_sphere(m.l) * I_of_z(m.eigen_at(a.phi).r, m.l, k);
    return {normalize(v.v, k, m.eigen_at(a.phi).r, m.l), v.err / std::abs(n)};
}

int cmd_eval(const EvalArgs& a) {
    if (a.format != "csv" && a.format != "json") throw InputError("--format must be csv or json");
    if (a.M < 0) throw InputError("--M must be >= 0");
    SpecOptions so;
    so.jmax = a.jmax;
    so.allow_near_pole = a.allow_near_pole;

    if (a.kind == "zeta-geom") {
        auto m = load_model(a);
        auto pts = grid_points(a);
        auto vals = parallel_map<Value>(pts, [&](cplx k) {
            auto g = z_geom(k, a.phi, m);
            return maybe_normalize({g.value, g.mc_error}, a, m, k);
        });
        write_output(value_table(pts, vals), a);
    } else if (a.kind == "zeta-spec") {
        auto m = load_model(a);
        auto pts = grid_points(a);
        auto vals = parallel_map<Value>(pts, [&](cplx k) {
            double err = 0;
            cplx v = z_spec(k, a.phi, m, a.M, so, &err);
            return maybe_normalize({v, err}, a, m, k);
        });
        write_output(value_table(pts, vals), a);
    } else if (a.kind == "selberg") {
        auto m = load_model(a);
        auto pts = grid_points(a);
        auto vals = parallel_map<SelbergPair>(pts, [&](cplx k) { return selberg_pair(k, m); });
        Table t{kValueColumns, {}};
        for (auto c : {"log_deriv_re", "log_deriv_im", "ratio_re", "ratio_im"}) t.columns.push_back(c);
        for (size_t i = 0; i < pts.size(); ++i) {
            const auto& p = vals[i];
            t.rows.push_back({pts[i].real(), pts[i].imag(), p.z1.real(), p.z1.imag(), 0.0, p.log_deriv.real(),
                              p.log_deriv.imag(), p.ratio.real(), p.ratio.imag()});
        }
        write_output(t, a);
    } else if (a.kind == "transform") {
        int l = a.dimension;
        if (!a.model_path.empty()) l = ingest(a.model_path).l;
        if (l < 2) throw InputError("eval transform needs --dimension (>= 2) or --model");
        if (a.mode != "closed" && a.mode != "quadrature") throw InputError("--mode must be closed or quadrature");
        cplx mu = parse_complex(a.mu, "--mu");
        auto pts = grid_points(a);
        auto vals = parallel_map<Value>(pts, [&](cplx k) -> Value {
            if (a.mode == "closed") return {spherical_transform_fk(k, mu, l), 0.0};
            auto q = spherical_transform_fk_quad(k, mu, l);
            return {q.value, q.error_estimate};
        });
        write_output(value_table(pts, vals), a);
    } else if (a.kind == "beta") {
        auto pts = grid_points(a);
        Table t{{"k_re", "k_im", "m", "value_re", "value_im", "error_estimate"}, {}};
        for (cplx k : pts) {
            auto b = beta_coeffs(k, a.M);
            for (int j = 0; j <= a.M; ++j) t.rows.push_back({k.real(), k.imag(), j, b[j].real(), b[j].imag(), 0.0});
        }
        write_output(t, a);
    } else if (a.kind == "residues") {
        auto m = load_model(a);
        Table t{{"location_re", "location_im", "order", "residue_re", "residue_im"}, {}};
        SpecOptions near = so;
        near.allow_near_pole = true;
        for (const auto& p : poles_and_residues(a.phi, m)) {
            cplx res = p.residue;
            if (a.normalize) {
                auto f = [&](cplx k) {
                    return normalize(z_spec(k, a.phi, m, a.M, near), k, m.eigen_at(a.phi).r, m.l);
                };
                res = residue_numeric(f, p.location, 0.05, 256).residue;
            }
            t.rows.push_back({p.location.real(), p.location.imag(), p.order, res.real(), res.imag()});
        }
        write_output(t, a);
    } else {
        throw InputError("unknown eval kind '" + a.kind + "'");
    }
    return kOk;
}

int cmd_verify(const std::string& suite, unsigned long seed, const std::string& out) {
    auto r = run_suite(suite, seed);
    std::string text = report_json(r) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) throw InputError(out + ": cannot open for writing");
        f << text;
    }
    for (const auto& c : r.checks)
        if (!c.pass) std::cerr << "FAIL " << c.name << ": residual " << c.residual << " > " << c.tolerance << "\n";
    return r.ok() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zeta functions attached to compact hyperbolic manifolds: evaluation and verification"};
    app.require_subcommand(1);

    std::string suite;
    unsigned long seed = 1;
    std::string verify_out;
    auto* verify = app.add_subcommand("verify", "Run an invariant suite and print a JSON report");
    verify->add_option("suite", suite, "specfun, liealg, geom, radial, transforms, zeta or all")->required();
    verify->add_option("--seed", seed, "Seed for randomized checks");
    verify->add_option("--out", verify_out, "Write the report to a file");

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "Evaluate a quantity on a point or grid");
    eval->add_option("kind", ea.kind, "zeta-geom, zeta-spec, selberg, transform, beta or residues")->required();
    eval->add_option("--model", ea.model_path, "Model file (JSON)");
    eval->add_option("--phi", ea.phi, "Index n of the test eigenfunction phi_n");
    eval->add_option("--k", ea.k, "Point re[,im]");
    eval->add_option("--grid", ea.grid, "re0,re1,im0,im1,nr,ni");
    eval->add_option("--M", ea.M, "Truncation of the beta series (default 30)");
    eval->add_option("--Jmax", ea.jmax, "Number of principal eigen records used (default all)");
    eval->add_flag("--normalize", ea.normalize, "Divide by omega I(a, b, rho0, k)");
    eval->add_flag("--allow-near-pole", ea.allow_near_pole, "Evaluate within 1e-6 of a pole");
    eval->add_option("--mu", ea.mu, "Spectral parameter re[,im] for transform");
    eval->add_option("--dimension", ea.dimension, "l for transform when no model is given");
    eval->add_option("--mode", ea.mode, "closed or quadrature (transform)");
    eval->add_option("--format", ea.format, "csv or json");
    eval->add_option("--out", ea.out, "Write the table to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }

    try {
        if (verify->parsed()) return cmd_verify(suite, seed, verify_out);
        return cmd_eval(ea);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumerical;
    }
}
