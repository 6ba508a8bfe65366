#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "opdam/io.hpp"

using namespace opdam;

namespace {

std::string tmp_path(const std::string& name) { return "/tmp/opdam_io_test_" + name; }

SampledFunction sample() {
    Eigen::ArrayXd grid(5);
    grid << -2.0, -1.0, 0.0, 1.0 / 3.0, 2.0;
    Eigen::ArrayXcd vals(5);
    vals << Complex(0.1, 0.0), Complex(-1.0 / 7.0, 0.25), Complex(1.0, 0.0),
        Complex(0.0, -3.0e-15), Complex(1e300, 0.0);
    return SampledFunction(grid, vals, DecayClass::gaussian(2.0), Side::Space, {}, "probe,\"x\"");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("format_full round-trips doubles exactly") {
    for (double v : {0.1, -1.0 / 3.0, 1e-300, 6.02214076e23, 0.0}) {
        CHECK(std::stod(format_full(v)) == v);
    }
}

TEST_CASE("csv_escape quotes exactly when needed") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_escape("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("function CSV round trip is lossless") {
    SampledFunction f = sample();
    std::string path = tmp_path("f.csv");
    write_function_csv(f, path);
    SampledFunction g = read_function_csv(path, Side::Space, f.decay());
    REQUIRE(g.grid().size() == f.grid().size());
    CHECK((g.grid() == f.grid()).all());
    CHECK((g.values() == f.values()).all());
    std::remove(path.c_str());
}

TEST_CASE("real-valued function CSV omits the imaginary column") {
    Eigen::ArrayXd grid(3);
    grid << 0.0, 1.0, 2.0;
    Eigen::ArrayXcd vals(3);
    vals << 1.0, 0.5, 0.25;
    SampledFunction f(grid, vals, DecayClass::compact(2.0), Side::Space);
    std::string path = tmp_path("real.csv");
    write_function_csv(f, path);
    std::string text = slurp(path);
    CHECK(text.rfind("x,re\n", 0) == 0);
    SampledFunction g = read_function_csv(path, Side::Space, f.decay());
    CHECK((g.values() == f.values()).all());
    std::remove(path.c_str());
}

TEST_CASE("function JSON round trip preserves metadata") {
    SampledFunction f = sample();
    std::string path = tmp_path("f.json");
    write_function_json(f, path);
    SampledFunction g = read_function_json(path);
    CHECK(g.side() == f.side());
    CHECK(g.label() == f.label());
    CHECK(g.decay().kind == f.decay().kind);
    CHECK(g.decay().param == f.decay().param);
    CHECK((g.grid() == f.grid()).all());
    CHECK((g.values() == f.values()).all());
    std::remove(path.c_str());
}

TEST_CASE("constants JSON round trip") {
    ConstantsFit fit;
    fit.k1 = 0.123456789012345678;
    fit.k2 = 7.0 / 3.0;
    fit.bigN = 2.0;
    fit.lambda_max = 100.0;
    RayleighEstimate est;
    est.value = 1.0 / 3.0;
    est.witness = "heat_t=1";
    est.corpus_size = 18;
    std::string path = tmp_path("c.json");
    write_constants_json(fit, est, path);
    ConstantsFit fit2;
    RayleighEstimate est2;
    read_constants_json(path, fit2, est2);
    CHECK(fit2.k1 == fit.k1);
    CHECK(fit2.k2 == fit.k2);
    CHECK(fit2.bigN == fit.bigN);
    CHECK(fit2.lambda_max == fit.lambda_max);
    CHECK(est2.value == est.value);
    CHECK(est2.witness == est.witness);
    CHECK(est2.corpus_size == est.corpus_size);
    std::remove(path.c_str());
}

TEST_CASE("corpus spec JSON round trip") {
    CorpusSpec spec = CorpusSpec::standard();
    std::string path = tmp_path("corpus.json");
    write_corpus_json(spec, path);
    CorpusSpec back = read_corpus_json(path);
    REQUIRE(back.families.size() == spec.families.size());
    for (std::size_t i = 0; i < spec.families.size(); ++i) {
        CHECK(back.families[i].kind == spec.families[i].kind);
        CHECK(back.families[i].a == spec.families[i].a);
        CHECK(back.families[i].b == spec.families[i].b);
    }
    CHECK(back.scale_factors == spec.scale_factors);
    CHECK(back.seed == spec.seed);
    std::remove(path.c_str());
}

TEST_CASE("reports emit as JSON array and flat CSV") {
    InequalityReport r;
    r.name = Theorem::Nash;
    r.lhs = 1.5;
    r.rhs = 2.0;
    r.constant = 3.25;
    r.provenance = ConstantProvenance::FittedFromK;
    r.ratio = 0.75;
    r.pass = true;
    r.params_echo = "member=gauss, s=1";
    std::string jpath = tmp_path("r.json");
    std::string cpath = tmp_path("r.csv");
    write_reports_json({r}, jpath);
    write_reports_csv({r}, cpath);
    std::string j = slurp(jpath);
    CHECK(j.find("\"Nash\"") != std::string::npos);
    CHECK(j.find("FittedFromK") != std::string::npos);
    std::string c = slurp(cpath);
    CHECK(c.rfind("name,", 0) == 0);
    CHECK(c.find("Nash") != std::string::npos);
    CHECK(c.find("\"member=gauss, s=1\"") != std::string::npos);
    std::remove(jpath.c_str());
    std::remove(cpath.c_str());
}

TEST_CASE("malformed CSV input is rejected") {
    std::string path = tmp_path("bad.csv");
    {
        std::ofstream out(path);
        out << "x,re\n0.0,not_a_number\n";
    }
    CHECK_THROWS_AS(read_function_csv(path, Side::Space), DomainError);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_function_csv(tmp_path("missing.csv"), Side::Space), Error);
}
