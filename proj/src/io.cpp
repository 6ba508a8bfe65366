#include "opdam/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "opdam/errors.hpp"

namespace opdam {

using nlohmann::json;

std::string format_full(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += '"';
    return out;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open for reading: " + path);
    return in;
}

// Split one CSV record honoring RFC-4180 quoting.
std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& s) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw DomainError("trailing characters in number: " + s);
        return v;
    } catch (const std::exception&) {
        throw DomainError("malformed number: " + s);
    }
}

std::string decay_kind_name(DecayClass::Kind k) {
    switch (k) {
        case DecayClass::Kind::Compact: return "compact";
        case DecayClass::Kind::Gaussian: return "gaussian";
        case DecayClass::Kind::Generic: return "generic";
    }
    return "generic";
}

DecayClass::Kind decay_kind_from(const std::string& s) {
    if (s == "compact") return DecayClass::Kind::Compact;
    if (s == "gaussian") return DecayClass::Kind::Gaussian;
    if (s == "generic") return DecayClass::Kind::Generic;
    throw DomainError("unknown decay kind: " + s);
}

}  // namespace

void write_function_csv(const SampledFunction& f, const std::string& path) {
    auto out = open_out(path);
    bool has_imag = (f.values().imag() != 0.0).any();
    out << (has_imag ? "x,re,im\n" : "x,re\n");
    for (Eigen::Index i = 0; i < f.grid().size(); ++i) {
        out << format_full(f.grid()(i)) << ',' << format_full(f.values()(i).real());
        if (has_imag) out << ',' << format_full(f.values()(i).imag());
        out << '\n';
    }
}

SampledFunction read_function_csv(const std::string& path, Side side, DecayClass decay) {
    auto in = open_in(path);
    std::string line;
    std::vector<double> xs, re, im;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split_csv(line);
        if (first) {
            first = false;
            if (!fields.empty() && fields[0] == "x") continue;  // header
        }
        if (fields.size() < 2 || fields.size() > 3)
            throw DomainError("CSV row must have 2 or 3 columns: " + line);
        xs.push_back(parse_double(fields[0]));
        re.push_back(parse_double(fields[1]));
        im.push_back(fields.size() == 3 ? parse_double(fields[2]) : 0.0);
    }
    if (xs.empty()) throw DomainError("empty function CSV: " + path);
    Eigen::ArrayXd grid(static_cast<Eigen::Index>(xs.size()));
    Eigen::ArrayXcd values(grid.size());
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
        grid(i) = xs[static_cast<std::size_t>(i)];
        values(i) = Complex(re[static_cast<std::size_t>(i)], im[static_cast<std::size_t>(i)]);
    }
    return SampledFunction(grid, values, decay, side);
}

void write_function_json(const SampledFunction& f, const std::string& path) {
    json j;
    j["side"] = (f.side() == Side::Space) ? "space" : "spectral";
    j["decay"] = {{"kind", decay_kind_name(f.decay().kind)}, {"param", f.decay().param}};
    j["label"] = f.label();
    json grid = json::array(), re = json::array(), im = json::array();
    for (Eigen::Index i = 0; i < f.grid().size(); ++i) {
        grid.push_back(f.grid()(i));
        re.push_back(f.values()(i).real());
        im.push_back(f.values()(i).imag());
    }
    j["grid"] = std::move(grid);
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

SampledFunction read_function_json(const std::string& path) {
    auto in = open_in(path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
    try {
        Side side = (j.at("side").get<std::string>() == "space") ? Side::Space : Side::Spectral;
        DecayClass decay{decay_kind_from(j.at("decay").at("kind").get<std::string>()),
                         j.at("decay").at("param").get<double>()};
        auto grid_v = j.at("grid").get<std::vector<double>>();
        auto re_v = j.at("re").get<std::vector<double>>();
        auto im_v = j.at("im").get<std::vector<double>>();
        if (grid_v.size() != re_v.size() || grid_v.size() != im_v.size())
            throw DomainError("grid/re/im length mismatch in " + path);
        Eigen::ArrayXd grid(static_cast<Eigen::Index>(grid_v.size()));
        Eigen::ArrayXcd values(grid.size());
        for (Eigen::Index i = 0; i < grid.size(); ++i) {
            grid(i) = grid_v[static_cast<std::size_t>(i)];
            values(i) = Complex(re_v[static_cast<std::size_t>(i)], im_v[static_cast<std::size_t>(i)]);
        }
        std::string label = j.value("label", std::string{});
        return SampledFunction(grid, values, decay, side, {}, label);
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad function JSON: ") + e.what());
    }
}

void write_constants_json(const ConstantsFit& fit, const RayleighEstimate& est,
                          const std::string& path) {
    json j;
    j["k1"] = fit.k1;
    j["k2"] = fit.k2;
    j["bigN"] = fit.bigN;
    j["lambda_max"] = fit.lambda_max;
    j["rayleigh_value"] = est.value;
    j["rayleigh_witness"] = est.witness;
    j["rayleigh_corpus_size"] = est.corpus_size;
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

void read_constants_json(const std::string& path, ConstantsFit& fit, RayleighEstimate& est) {
    auto in = open_in(path);
    json j;
    try {
        in >> j;
        fit.k1 = j.at("k1").get<double>();
        fit.k2 = j.at("k2").get<double>();
        fit.bigN = j.at("bigN").get<double>();
        fit.lambda_max = j.at("lambda_max").get<double>();
        est.value = j.at("rayleigh_value").get<double>();
        est.witness = j.at("rayleigh_witness").get<std::string>();
        est.corpus_size = j.at("rayleigh_corpus_size").get<int>();
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad constants JSON: ") + e.what());
    }
}

CorpusSpec read_corpus_json(const std::string& path) {
    auto in = open_in(path);
    json j;
    try {
        in >> j;
        CorpusSpec spec;
        spec.families.clear();
        for (const auto& fj : j.at("families")) {
            std::string kind = fj.at("kind").get<std::string>();
            if (kind == "heat") spec.families.push_back(Family::heat(fj.at("t").get<double>()));
            else if (kind == "gaussian")
                spec.families.push_back(Family::gaussian(fj.at("rate").get<double>()));
            else if (kind == "bump")
                spec.families.push_back(
                    Family::bump(fj.at("center").get<double>(), fj.at("width").get<double>()));
            else
                throw DomainError("unknown family kind: " + kind);
        }
        if (j.contains("scale_factors"))
            spec.scale_factors = j.at("scale_factors").get<std::vector<double>>();
        spec.seed = j.value("seed", std::uint64_t{0});
        return spec;
    } catch (const json::exception& e) {
        throw DomainError(std::string("bad corpus JSON: ") + e.what());
    }
}

void write_corpus_json(const CorpusSpec& spec, const std::string& path) {
    json j;
    json fams = json::array();
    for (const auto& f : spec.families) {
        json fj;
        switch (f.kind) {
            case Family::Kind::Heat:
                fj["kind"] = "heat";
                fj["t"] = f.a;
                break;
            case Family::Kind::Gaussian:
                fj["kind"] = "gaussian";
                fj["rate"] = f.a;
                break;
            case Family::Kind::Bump:
                fj["kind"] = "bump";
                fj["center"] = f.a;
                fj["width"] = f.b;
                break;
        }
        fams.push_back(std::move(fj));
    }
    j["families"] = std::move(fams);
    j["scale_factors"] = spec.scale_factors;
    j["seed"] = spec.seed;
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

namespace {

json report_to_json(const InequalityReport& r) {
    json j;
    j["name"] = theorem_name(r.name);
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["constant"] = r.constant;
    j["constant_provenance"] = provenance_name(r.provenance);
    j["ratio"] = r.ratio;
    j["pass"] = r.pass;
    j["out_of_regime"] = r.out_of_regime;
    j["params_echo"] = r.params_echo;
    return j;
}

}  // namespace

void write_reports_json(const std::vector<InequalityReport>& reports, const std::string& path) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    auto out = open_out(path);
    out << arr.dump(2) << '\n';
}

void write_reports_csv(const std::vector<InequalityReport>& reports, const std::string& path) {
    auto out = open_out(path);
    out << "name,lhs,rhs,constant,constant_provenance,ratio,pass,out_of_regime,params_echo\n";
    for (const auto& r : reports) {
        out << theorem_name(r.name) << ',' << format_full(r.lhs) << ',' << format_full(r.rhs)
            << ',' << format_full(r.constant) << ',' << provenance_name(r.provenance) << ','
            << format_full(r.ratio) << ',' << (r.pass ? "true" : "false") << ','
            << (r.out_of_regime ? "true" : "false") << ',' << csv_escape(r.params_echo) << '\n';
    }
}

}  // namespace opdam
