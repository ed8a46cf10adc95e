#include "hypzeta/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "hypzeta/errors.hpp"

namespace hz {

QuadratureResult integrate(const ComplexIntegrand& f, double a, double b, double tol, int max_depth) {
    QuadratureResult out;
    long count = 0;
    auto g = [&](double x) {
        ++count;
        return f(x);
    };
    double err = 0.0;
    out.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(g, a, b, max_depth, tol,
                                                                              &err);
    out.error_estimate = err;
    out.evaluations = count;
    return out;
}

QuadratureResult integrate_half_line(const ComplexIntegrand& f, double tol, int max_depth) {
    auto g = [&](double th) -> cplx {
        double c = std::cos(th);
        return f(std::tan(th)) / (c * c);
    };
    return integrate(g, 0.0, kPi / 2, tol, max_depth);
}

QuadratureResult integrate_algebraic(const ComplexIntegrand& f, double alpha, double tol, int max_depth) {
    if (!(alpha > 1)) throw DomainError("integrate_algebraic: requires decay exponent alpha > 1");
    double X = std::min(700.0, 40.0 / (alpha - 1.0));
    auto tail = [&](double x) -> cplx {
        double s = std::exp(x);
        return f(s) * s;
    };
    auto head = integrate(f, 0.0, 1.0, tol, max_depth);
    auto rest = integrate(tail, 0.0, X, tol, max_depth);
    return {head.value + rest.value, head.error_estimate + rest.error_estimate, head.evaluations + rest.evaluations};
}

}  // namespace hz
