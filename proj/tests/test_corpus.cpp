#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "opdam/corpus.hpp"
#include "opdam/measure.hpp"
#include "opdam/transform.hpp"

using namespace opdam;

namespace {

double l2_norm(const SampledFunction& f, const Parameters& p, const QuadratureSpec& quad) {
    return weighted_norm(f, p, 2.0, 0.0, MeasureSide::SpaceWeight, quad);
}

}  // namespace

TEST_CASE("family constructors and basic shapes") {
    Parameters p(0, 0);
    QuadratureSpec quad;
    Eigen::ArrayXd grid = default_space_grid();

    SampledFunction g = make_function(Family::gaussian(1.0), p, grid, quad);
    CHECK(std::abs(g(0.0) - Complex(1.0, 0.0)) < 1e-14);
    CHECK(g.decay().kind == DecayClass::Kind::Gaussian);

    SampledFunction b = make_function(Family::bump(0.0, 1.0), p, grid, quad);
    CHECK(b.decay().kind == DecayClass::Kind::Compact);
    CHECK(std::abs(b(1.5)) == 0.0);
    CHECK(std::abs(b(-2.0)) == 0.0);
    CHECK(std::abs(b(0.0)) > 0.0);

    SampledFunction h = make_function(Family::heat(1.0), p, grid, quad);
    SampledFunction direct = heat_kernel(p, 1.0, grid, quad);
    for (int i = 0; i < grid.size(); ++i) CHECK(h.values()(i) == direct.values()(i));
}

TEST_CASE("standard corpus: 18 members, deterministic") {
    Parameters p(0, 0);
    QuadratureSpec quad;
    CorpusSpec spec = CorpusSpec::standard();
    auto corpus = generate_corpus(spec, p, default_space_grid(), quad);
    CHECK(corpus.size() == 18);
    auto again = generate_corpus(spec, p, default_space_grid(), quad);
    REQUIRE(again.size() == corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        CHECK(corpus[i].label() == again[i].label());
        CHECK((corpus[i].values() == again[i].values()).all());
    }
    // empty spec -> empty corpus
    CorpusSpec empty;
    CHECK(generate_corpus(empty, p, default_space_grid(), quad).empty());
}

TEST_CASE("scale: grid, support radius, and identity at c = 1") {
    Parameters p(0, 0);
    QuadratureSpec quad;
    Eigen::ArrayXd grid = default_space_grid();
    SampledFunction b = make_function(Family::bump(0.0, 1.0), p, grid, quad);

    SampledFunction same = scale(b, 1.0);
    CHECK((same.grid() == b.grid()).all());
    CHECK((same.values() == b.values()).all());

    SampledFunction half = scale(b, 2.0);
    CHECK(half.decay().kind == DecayClass::Kind::Compact);
    CHECK(half.decay().param == doctest::Approx(0.5));
    CHECK(std::abs(half(0.25) - b(0.5)) < 1e-12);

    SampledFunction g = make_function(Family::gaussian(1.0), p, grid, quad);
    SampledFunction gs = scale(g, 2.0);
    CHECK(gs.decay().kind == DecayClass::Kind::Gaussian);
    CHECK(gs.decay().param == doctest::Approx(4.0));
}

TEST_CASE("scaling chain bound from the fitted c-function constants") {
    Parameters p(0, 0);
    QuadratureSpec quad;
    ConstantsFit fit = fit_c_constants(p, 2.0, 100.0, 200);
    Eigen::ArrayXd grid = default_space_grid();
    SampledFunction f = make_function(Family::gaussian(1.0), p, grid, quad);
    double base = l2_norm(f, p, quad);
    for (double c : {2.0, 4.0}) {
        SampledFunction fc = scale(f, c);
        double lhs = l2_norm(fc, p, quad);
        double rhs2 = fit.k1 / (fit.k2 * std::pow(c, 2.0 * p.alpha() + 3.0)) * base * base;
        CHECK(lhs * lhs >= rhs2);
    }
}

TEST_CASE("generation screens members for finite norms") {
    Parameters p(0, 0);
    QuadratureSpec quad;
    CorpusSpec spec = CorpusSpec::standard();
    auto corpus = generate_corpus(spec, p, default_space_grid(), quad);
    for (const auto& f : corpus) {
        for (double a : {0.0, 1.0, 4.0}) {
            double n = weighted_norm(f, p, 1.0, a, MeasureSide::SpaceWeight, quad);
            CHECK(std::isfinite(n));
            CHECK(n > 0.0);
        }
    }
}
