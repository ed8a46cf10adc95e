#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypzeta/liealg.hpp"
#include "hypzeta/specfun.hpp"

namespace hz {

enum class Series { Principal, Complementary };

struct EigenData {
    int index = 0;
    double lambda_sq = 0;  // lambda^2; eigenvalue -(lambda^2 + rho0^2)
    cplx lambda;           // sqrt(lambda_sq), or i sqrt(-lambda_sq)
    cplx r;                // r^2 = 4 rho0 lambda^2 + rho0^2 (4 rho0 - 1)
    Series series = Series::Principal;
    std::map<int, cplx> ps;       // n -> <phi_n, PS_{phi_j}>
    std::map<int, cplx> c_const;  // n -> C_{n,j}, complementary series only
};

struct GeodesicClassData {
    double L = 0;
    double L0 = 0;
    double m11 = 1;
    std::map<int, cplx> integrals;    // n -> int over the primitive geodesic of phi_n
    std::map<int, cplx> x_integrals;  // n -> int of X_{e_1} phi_n, l = 2
    std::optional<Mat> holonomy;      // full m_gamma in SO(l-1), when not central
};

struct SpectralModel {
    int l = 2;
    std::vector<EigenData> eigen;
    std::vector<GeodesicClassData> geodesics;
    int j0 = 0;  // eigen[0..j0) are complementary (lambda_sq <= 0)

    const EigenData& eigen_at(int n) const;
    double min_length() const;
};

// Fills lambda, r, series and j0 from lambda_sq; checks all invariants.
// Throws InputError with the offending field path.
void finalize_model(SpectralModel& m);

SpectralModel parse_model(const std::string& json_text);
SpectralModel ingest(const std::string& path);
std::string emit_model(const SpectralModel& m);

// Central holonomy element with the given (1,1) entry when one exists: I, -I, or for
// l = 3 the rotation by acos(m11). Otherwise the stored holonomy matrix.
Mat holonomy_matrix(const GeodesicClassData& g, int l);
bool is_central(const GeodesicClassData& g, int l);

}  // namespace hz
