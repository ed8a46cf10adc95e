#include "hypzeta/model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "hypzeta/errors.hpp"
#include "json.hpp"

namespace hz {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw InputError(path + ": " + msg); }

double get_real(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

cplx get_cplx(const json& j, const std::string& path) {
    if (j.is_number()) return j.get<double>();
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail(path, "expected a number or [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::map<int, cplx> get_map(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object mapping index to [re, im]");
    std::map<int, cplx> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string key = it.key();
        std::string p = path + "." + key;
        size_t pos = 0;
        int idx = 0;
        try {
            idx = std::stoi(key, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != key.size() || idx < 0) fail(p, "keys must be non-negative integers");
        out[idx] = get_cplx(it.value(), p);
    }
    return out;
}

json put_cplx(cplx z) { return json::array({z.real(), z.imag()}); }

json put_map(const std::map<int, cplx>& m) {
    json o = json::object();
    for (const auto& [k, v] : m) o[std::to_string(k)] = put_cplx(v);
    return o;
}

void check_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || it.key() == a;
        if (!ok) fail(path + "." + it.key(), "unknown field");
    }
}

}  // namespace

const EigenData& SpectralModel::eigen_at(int n) const {
    if (n < 0 || n >= int(eigen.size())) throw InputError("eigen index " + std::to_string(n) + " not in model");
    return eigen[n];
}

double SpectralModel::min_length() const {
    double m = INFINITY;
    for (const auto& g : geodesics) m = std::min(m, g.L);
    return m;
}

bool is_central(const GeodesicClassData& g, int l) {
    if (g.holonomy) {
        const Mat& h = *g.holonomy;
        return (h - h(0, 0) * Mat::Identity(h.rows(), h.cols())).cwiseAbs().maxCoeff() < 1e-12;
    }
    if (l <= 3) return true;  // SO(1) and SO(2) are abelian
    return g.m11 == 1.0 || (g.m11 == -1.0 && (l - 1) % 2 == 0);
}

Mat holonomy_matrix(const GeodesicClassData& g, int l) {
    if (g.holonomy) return *g.holonomy;
    int n = l - 1;
    if (g.m11 == 1.0) return Mat::Identity(n, n);
    if (l == 3) {
        double c = g.m11, s = std::sqrt(std::max(0.0, 1 - c * c));
        Mat R(2, 2);
        R << c, -s, s, c;
        return R;
    }
    if (g.m11 == -1.0 && n % 2 == 0) return -Mat::Identity(n, n);
    throw InputError("holonomy matrix required for a non-central m11 when l >= 4");
}

void finalize_model(SpectralModel& m) {
    if (m.l < 2) fail("dimension", "must be an integer >= 2");
    const double rho0 = 0.5 * (m.l - 1);
    m.j0 = 0;
    double prev = -INFINITY;
    for (size_t i = 0; i < m.eigen.size(); ++i) {
        auto& e = m.eigen[i];
        std::string p = "eigen[" + std::to_string(i) + "]";
        e.index = int(i);
        if (!std::isfinite(e.lambda_sq)) fail(p + ".lambda_sq", "must be finite");
        if (e.lambda_sq < -rho0 * rho0 * (1 + 1e-12))
            fail(p + ".lambda_sq", "below the complementary range [-rho0^2, 0]");
        if (e.lambda_sq < prev) fail(p + ".lambda_sq", "eigen list must be sorted by lambda_sq ascending");
        prev = e.lambda_sq;
        if (e.lambda_sq > 0) {
            e.series = Series::Principal;
            e.lambda = std::sqrt(e.lambda_sq);
            if (!e.c_const.empty()) fail(p + ".c", "C constants are only meaningful for the complementary series");
        } else {
            e.series = Series::Complementary;
            e.lambda = cplx(0, std::sqrt(std::max(0.0, -e.lambda_sq)));
            ++m.j0;
        }
        e.r = std::sqrt(cplx(4 * rho0 * e.lambda_sq + rho0 * rho0 * (4 * rho0 - 1)));
        cplx lhs = e.r * e.r, rhs = 4 * rho0 * e.lambda * e.lambda + rho0 * rho0 * (4 * rho0 - 1);
        if (std::abs(lhs - rhs) > 1e-10 * std::max(1.0, std::abs(rhs))) fail(p, "r does not satisfy the eigenvalue relation");
    }
    for (size_t i = 0; i < m.geodesics.size(); ++i) {
        auto& g = m.geodesics[i];
        std::string p = "geodesics[" + std::to_string(i) + "]";
        if (!(g.L > 0) || !std::isfinite(g.L)) fail(p + ".L", "must be positive");
        if (!(g.L0 > 0) || !std::isfinite(g.L0)) fail(p + ".L0", "must be positive");
        double q = g.L / g.L0;
        if (q < 1 - 1e-9 || std::abs(q - std::round(q)) > 1e-9) fail(p + ".L0", "L must be a positive integer multiple of L0");
        if (!(g.m11 >= -1 && g.m11 <= 1)) fail(p + ".m11", "must lie in [-1, 1]");
        if (m.l == 2 && g.m11 != 1.0) fail(p + ".m11", "must be 1 for l = 2 (trivial holonomy)");
        if (!g.x_integrals.empty() && m.l != 2) fail(p + ".x_integrals", "only used for l = 2");
        if (g.holonomy) {
            const Mat& h = *g.holonomy;
            int n = m.l - 1;
            if (h.rows() != n || h.cols() != n) fail(p + ".holonomy", "must be an (l-1)x(l-1) matrix");
            if ((h.transpose() * h - Mat::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10 || std::abs(h.determinant() - 1) > 1e-10)
                fail(p + ".holonomy", "must lie in SO(l-1)");
            if (std::abs(h(0, 0) - g.m11) > 1e-12) fail(p + ".m11", "must equal holonomy[0][0]");
        } else if (!is_central(g, m.l)) {
            fail(p + ".holonomy", "required when m11 is not the entry of a central element");
        }
    }
}

SpectralModel parse_model(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        size_t line = 1, col = 1;
        for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw InputError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": JSON parse error");
    }
    if (!j.is_object()) fail("$", "model must be a JSON object");
    check_keys(j, "$", {"dimension", "eigen", "geodesics"});
    SpectralModel m;
    if (!j.contains("dimension") || !j["dimension"].is_number_integer()) fail("dimension", "required integer");
    m.l = j["dimension"].get<int>();
    if (j.contains("eigen")) {
        if (!j["eigen"].is_array()) fail("eigen", "expected an array");
        for (size_t i = 0; i < j["eigen"].size(); ++i) {
            const json& e = j["eigen"][i];
            std::string p = "eigen[" + std::to_string(i) + "]";
            if (!e.is_object()) fail(p, "expected an object");
            check_keys(e, p, {"lambda_sq", "ps", "c"});
            if (!e.contains("lambda_sq")) fail(p + ".lambda_sq", "required");
            EigenData d;
            d.lambda_sq = get_real(e["lambda_sq"], p + ".lambda_sq");
            if (e.contains("ps")) d.ps = get_map(e["ps"], p + ".ps");
            if (e.contains("c")) d.c_const = get_map(e["c"], p + ".c");
            m.eigen.push_back(std::move(d));
        }
    }
    if (j.contains("geodesics")) {
        if (!j["geodesics"].is_array()) fail("geodesics", "expected an array");
        for (size_t i = 0; i < j["geodesics"].size(); ++i) {
            const json& g = j["geodesics"][i];
            std::string p = "geodesics[" + std::to_string(i) + "]";
            if (!g.is_object()) fail(p, "expected an object");
            check_keys(g, p, {"L", "L0", "m11", "integrals", "x_integrals", "holonomy"});
            GeodesicClassData d;
            if (!g.contains("L")) fail(p + ".L", "required");
            d.L = get_real(g["L"], p + ".L");
            d.L0 = g.contains("L0") ? get_real(g["L0"], p + ".L0") : d.L;
            d.m11 = g.contains("m11") ? get_real(g["m11"], p + ".m11") : 1.0;
            if (g.contains("integrals")) d.integrals = get_map(g["integrals"], p + ".integrals");
            if (g.contains("x_integrals")) d.x_integrals = get_map(g["x_integrals"], p + ".x_integrals");
            if (g.contains("holonomy")) {
                const json& h = g["holonomy"];
                std::string hp = p + ".holonomy";
                if (!h.is_array() || h.empty()) fail(hp, "expected a square array of rows");
                Mat H(h.size(), h.size());
                for (size_t r = 0; r < h.size(); ++r) {
                    if (!h[r].is_array() || h[r].size() != h.size()) fail(hp, "expected a square array of rows");
                    for (size_t c = 0; c < h.size(); ++c)
                        H(r, c) = get_real(h[r][c], hp + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
                }
                d.holonomy = H;
            }
            m.geodesics.push_back(std::move(d));
        }
    }
    finalize_model(m);
    return m;
}

SpectralModel ingest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open model file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str());
}

std::string emit_model(const SpectralModel& m) {
    json j;
    j["dimension"] = m.l;
    j["eigen"] = json::array();
    for (const auto& e : m.eigen) {
        json o;
        o["lambda_sq"] = e.lambda_sq;
        o["ps"] = put_map(e.ps);
        if (!e.c_const.empty()) o["c"] = put_map(e.c_const);
        j["eigen"].push_back(o);
    }
    j["geodesics"] = json::array();
    for (const auto& g : m.geodesics) {
        json o;
        o["L"] = g.L;
        o["L0"] = g.L0;
        o["m11"] = g.m11;
        o["integrals"] = put_map(g.integrals);
        if (!g.x_integrals.empty()) o["x_integrals"] = put_map(g.x_integrals);
        if (g.holonomy) {
            json rows = json::array();
            for (int r = 0; r < g.holonomy->rows(); ++r) {
                json row = json::array();
                for (int c = 0; c < g.holonomy->cols(); ++c) row.push_back((*g.holonomy)(r, c));
                rows.push_back(row);
            }
            o["holonomy"] = rows;
        }
        j["geodesics"].push_back(o);
    }
    return j.dump(2) + "\n";
}

}  // namespace hz
