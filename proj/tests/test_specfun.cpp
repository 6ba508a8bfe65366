#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "opdam/errors.hpp"
#include "opdam/specfun.hpp"

using namespace opdam;

namespace {

double rel_err(Complex got, Complex want) {
    double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

// plain Maclaurin series, usable for |z| <= 1/2 only; reference for the
// Pfaff-transformed production path
Complex maclaurin_2f1(Complex a, Complex b, Complex c, double z) {
    Complex term(1.0, 0.0), sum(1.0, 0.0);
    for (int n = 0; n < 500; ++n) {
        double dn = n;
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace

TEST_CASE("log-gamma against multiprecision references") {
    CHECK(rel_err(ln_gamma(Complex(0.5, 0.0)),
                  Complex(0.5723649429247000870717136756765293558236, 0.0)) < 1e-13);
    CHECK(rel_err(ln_gamma(Complex(2.0, 3.0)),
                  Complex(-2.092851753092733349564188625030375261693,
                          2.302396543466867626153707617788581578293)) < 1e-13);
    // reflection branch, both signs of Im z
    CHECK(rel_err(gamma_fn(Complex(0.0, -2.0)),
                  std::conj(gamma_fn(Complex(0.0, 2.0)))) < 1e-12);
    CHECK(rel_err(gamma_fn(Complex(4.0, 0.0)), Complex(6.0, 0.0)) < 1e-14);
}

TEST_CASE("2F1 special values") {
    // 2F1(1,1;2;-1) = ln 2
    CHECK(rel_err(gauss_2f1(Complex(1, 0), Complex(1, 0), Complex(2, 0), -1.0),
                  Complex(0.6931471805599453094172321214581765680755, 0.0)) < 1e-12);
    CHECK(gauss_2f1(Complex(0.3, 1.0), Complex(2, 0), Complex(1.5, 0), 0.0) == Complex(1.0, 0.0));
    CHECK_THROWS_AS(gauss_2f1(Complex(1, 0), Complex(1, 0), Complex(-2, 0), -1.0), PoleError);
    CHECK_THROWS_AS(gauss_2f1(Complex(1, 0), Complex(1, 0), Complex(2, 0), 0.5), DomainError);
}

TEST_CASE("2F1 agrees with the direct Maclaurin series for small |z|") {
    for (double z : {-0.5, -0.25, -0.05}) {
        for (double lam : {0.3, 1.0, 4.0}) {
            Complex a(0.75, lam / 2), b(0.75, -lam / 2), c(1.5, 0.0);
            CHECK(rel_err(gauss_2f1(a, b, c, z), maclaurin_2f1(a, b, c, z)) < 1e-10);
        }
    }
}

TEST_CASE("2F1 terminating polynomial cases are exact") {
    // a = -2: 1 - 2bz/c + b(b+1) z^2 / (c(c+1))
    Complex b(1.3, 0.4), c(2.2, 0.0);
    double z = -3.7;
    Complex expect = Complex(1, 0) - 2.0 * b * z / c + b * (b + 1.0) * z * z / (c * (c + 1.0));
    CHECK(rel_err(gauss_2f1(Complex(-2, 0), b, c, z), expect) < 1e-13);
}

TEST_CASE("Jacobi function reference value and evenness") {
    Parameters p(0.0, 0.0);
    CHECK(rel_err(jacobi_phi(p, Complex(1, 0), 1.0),
                  Complex(0.6150553749710181752904749510783637631878, 0.0)) < 1e-12);
    for (double x : {0.3, 1.7, 2.9}) {
        Complex plus = jacobi_phi(p, Complex(2, 0), x);
        Complex minus = jacobi_phi(p, Complex(2, 0), -x);
        CHECK(plus.real() == minus.real());
        CHECK(plus.imag() == minus.imag());
    }
}

TEST_CASE("Opdam kernel multiprecision references") {
    CHECK(rel_err(opdam_kernel(Parameters(0, 0), Complex(2, 0), 3.0),
                  Complex(0.003446639943724742030650711222140725808269,
                          -0.03383195217719868134759082383464644156357)) < 1e-11);
    CHECK(rel_err(opdam_kernel(Parameters(0, 0), Complex(0.5, 0), 5.0),
                  Complex(0.01798202635283844460517320017174994177998,
                          0.005971504909535755048060101993039137583868)) < 1e-11);
    CHECK(rel_err(opdam_kernel(Parameters(1, 0), Complex(2, 0), 4.0),
                  Complex(0.000807723106474217262061075579128618680973,
                          0.0001469466399894049470579332179353368012782)) < 1e-11);
    CHECK(rel_err(opdam_kernel(Parameters(0.5, -0.5), Complex(1, 0), 2.5),
                  Complex(0.2152555102075192779913543898255012154844,
                          0.1163378379239697552909180195283495403066)) < 1e-11);
    // lambda = 0 goes through the nudged degenerate path
    CHECK(rel_err(opdam_kernel(Parameters(0, 0), Complex(0, 0), 3.0),
                  Complex(0.4048344871575064675452164322250243480177, 0.0)) < 1e-7);
    // large lambda: the connection-formula branch
    CHECK(rel_err(opdam_kernel(Parameters(0, 0), Complex(20, 0), 1.0),
                  Complex(0.12695494792946347, 0.052008957595540763)) < 1e-10);
    CHECK(rel_err(opdam_kernel(Parameters(1, 0), Complex(35, 0), 0.6),
                  Complex(0.013614806655322329, -0.0013964215505597579)) < 1e-10);
    CHECK(rel_err(opdam_kernel(Parameters(0.5, -0.5), Complex(14, 0), 2.0),
                  Complex(0.0067106603542208133, 0.019254948006900597)) < 1e-10);
}

TEST_CASE("kernel normalization at the origin") {
    for (double lam : {-7.3, -1.0, 0.0, 0.4, 2.0, 9.9}) {
        CHECK(opdam_kernel(Parameters(0.5, -0.5), Complex(lam, 0), 0.0) == Complex(1.0, 0.0));
    }
}

TEST_CASE("Cherednik operator eigen-equation on the kernel") {
    Parameters p(1.0, 0.0);
    double lam = 2.0;
    auto g = [&](double x) { return opdam_kernel(p, Complex(lam, 0), x); };
    for (double x : {-2.0, -0.5, 1e-6, 0.7, 2.5}) {
        Complex lhs = cherednik_apply(g, p, x);
        Complex rhs = Complex(0, lam) * g(x);
        CHECK(std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-12) < 1e-6);
    }
}

TEST_CASE("parameter admissibility") {
    CHECK_THROWS_AS(Parameters(-0.5, -0.5), DomainError);
    CHECK_THROWS_AS(Parameters(0.0, 0.5), DomainError);
    CHECK_THROWS_AS(Parameters(1.0, -0.7), DomainError);
    CHECK(Parameters(0.5, -0.5).rho() == doctest::Approx(1.0));
    CHECK(Parameters(1.0, 0.0).shifted().alpha() == doctest::Approx(2.0));
}
