#include "szego/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "szego/errors.hpp"

namespace szego {

using nlohmann::json;

bool SymbolSpec::operator==(const SymbolSpec& o) const {
    if (kind != o.kind || coeffs != o.coeffs || radius != o.radius ||
        tk_kappa != o.tk_kappa)
        return false;
    if (!base != !o.base) return false;
    return !base || *base == *o.base;
}

namespace {

std::map<int, cplx> parse_laurent(const json& j) {
    if (!j.is_object()) throw ConfigError("laurent literal must be an object");
    std::map<int, cplx> coeffs;
    for (const auto& [key, val] : j.items()) {
        int k;
        try {
            k = std::stoi(key);
        } catch (const std::exception&) {
            throw ConfigError("laurent key '" + key + "' is not an integer");
        }
        if (!val.is_array() || val.size() != 2 || !val[0].is_number() ||
            !val[1].is_number())
            throw ConfigError("laurent value for key '" + key +
                              "' must be [re, im]");
        coeffs[k] = cplx(val[0].get<double>(), val[1].get<double>());
    }
    return coeffs;
}

json laurent_to_json(const std::map<int, cplx>& coeffs) {
    json j = json::object();
    for (const auto& [k, v] : coeffs)
        j[std::to_string(k)] = json::array({v.real(), v.imag()});
    return j;
}

SymbolSpec parse_symbol_spec(const json& j) {
    if (!j.is_object()) throw ConfigError("symbol literal must be an object");
    SymbolSpec s;
    if (j.contains("laurent")) {
        s.kind = SymbolSpec::Kind::laurent;
        s.coeffs = parse_laurent(j.at("laurent"));
    } else if (j.contains("exp_of")) {
        s.kind = SymbolSpec::Kind::exp_of;
        s.coeffs = parse_laurent(j.at("exp_of"));
        if (j.contains("radius")) {
            if (!j.at("radius").is_number_integer())
                throw ConfigError("symbol radius must be an integer");
            s.radius = j.at("radius").get<int>();
            if (*s.radius < 1) throw ConfigError("symbol radius must be positive");
        }
    } else if (j.contains("times_tk")) {
        const json& t = j.at("times_tk");
        if (!t.is_object() || !t.contains("kappa") || !t.contains("base"))
            throw ConfigError("times_tk needs {kappa, base}");
        s.kind = SymbolSpec::Kind::times_tk;
        s.tk_kappa = t.at("kappa").get<int>();
        s.base = std::make_shared<SymbolSpec>(parse_symbol_spec(t.at("base")));
    } else {
        throw ConfigError("symbol literal needs laurent, exp_of, or times_tk");
    }
    return s;
}

json symbol_spec_to_json(const SymbolSpec& s) {
    json j = json::object();
    switch (s.kind) {
    case SymbolSpec::Kind::laurent:
        j["laurent"] = laurent_to_json(s.coeffs);
        break;
    case SymbolSpec::Kind::exp_of:
        j["exp_of"] = laurent_to_json(s.coeffs);
        if (s.radius) j["radius"] = *s.radius;
        break;
    case SymbolSpec::Kind::times_tk:
        j["times_tk"] = {{"kappa", s.tk_kappa},
                         {"base", symbol_spec_to_json(*s.base)}};
        break;
    }
    return j;
}

NFunctionSpec parse_nfunction_spec(const json& j) {
    NFunctionSpec s;
    if (!j.is_object() || !j.contains("kind"))
        throw ConfigError("N-function fragment needs a kind");
    s.kind = j.at("kind").get<std::string>();
    if (s.kind == "power") {
        s.p = j.at("p").get<double>();
        if (!(s.p > 1.0)) throw ConfigError("power N-function needs p > 1");
    } else if (s.kind == "table") {
        s.t = j.at("t").get<std::vector<double>>();
        s.density = j.at("p").get<std::vector<double>>();
    } else {
        throw ConfigError("unknown N-function kind '" + s.kind + "'");
    }
    return s;
}

json nfunction_spec_to_json(const NFunctionSpec& s) {
    if (s.kind == "power") return {{"kind", "power"}, {"p", s.p}};
    return {{"kind", "table"}, {"t", s.t}, {"p", s.density}};
}

WeightSpec parse_weight_spec(const json& j) {
    WeightSpec s;
    if (!j.is_object() || !j.contains("kind"))
        throw ConfigError("weight fragment needs a kind");
    s.kind = j.at("kind").get<std::string>();
    if (s.kind == "power") {
        s.alpha = j.at("alpha").get<double>();
        if (s.alpha < 0.0) throw ConfigError("power weight needs alpha >= 0");
    } else if (s.kind == "explicit") {
        s.values = j.at("values").get<std::vector<double>>();
        if (s.values.empty()) throw ConfigError("explicit weight needs values");
    } else {
        throw ConfigError("unknown weight kind '" + s.kind + "'");
    }
    return s;
}

json weight_spec_to_json(const WeightSpec& s) {
    if (s.kind == "power") return {{"kind", "power"}, {"alpha", s.alpha}};
    return {{"kind", "explicit"}, {"values", s.values}};
}

} // namespace

ExperimentConfig parse_config(const json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    ExperimentConfig cfg;
    if (!j.contains("symbol")) throw ConfigError("config needs a symbol");
    cfg.symbol = parse_symbol_spec(j.at("symbol"));
    if (j.contains("kappa")) cfg.kappa = j.at("kappa").get<int>();
    if (j.contains("n_list")) {
        cfg.n_list = j.at("n_list").get<std::vector<int>>();
        for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
            if (cfg.n_list[i] < 0) throw ConfigError("n values must be nonnegative");
            if (i > 0 && cfg.n_list[i] <= cfg.n_list[i - 1])
                throw ConfigError("n_list must be strictly increasing");
        }
    }
    if (!cfg.n_list.empty() &&
        std::abs(cfg.kappa) > *std::min_element(cfg.n_list.begin(), cfg.n_list.end()))
        throw ConfigError("|kappa| must not exceed min(n_list)");

    if (j.contains("spaces")) {
        const json& sp = j.at("spaces");
        if (sp.contains("Phi")) cfg.Phi = parse_nfunction_spec(sp.at("Phi"));
        if (sp.contains("Psi")) cfg.Psi = parse_nfunction_spec(sp.at("Psi"));
        if (sp.contains("phi")) cfg.phi = parse_weight_spec(sp.at("phi"));
        if (sp.contains("psi")) cfg.psi = parse_weight_spec(sp.at("psi"));
    }
    if (j.contains("tolerances")) {
        const json& t = j.at("tolerances");
        if (t.contains("factor_tol")) cfg.factor_tol = t.at("factor_tol").get<double>();
        if (t.contains("fit_floor")) cfg.fit_floor = t.at("fit_floor").get<double>();
        if (t.contains("verify_tol")) cfg.verify_tol = t.at("verify_tol").get<double>();
        if (cfg.factor_tol < 0.0 || cfg.fit_floor < 0.0 || cfg.verify_tol < 0.0)
            throw ConfigError("tolerances must be nonnegative");
    }
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("output")) {
        const json& o = j.at("output");
        if (o.contains("path")) cfg.out_path = o.at("path").get<std::string>();
        if (o.contains("format")) cfg.out_format = o.at("format").get<std::string>();
        if (cfg.out_format != "csv")
            throw ConfigError("unsupported output format '" + cfg.out_format + "'");
    }
    return cfg;
}

json config_to_json(const ExperimentConfig& cfg) {
    json j;
    j["symbol"] = symbol_spec_to_json(cfg.symbol);
    j["kappa"] = cfg.kappa;
    j["n_list"] = cfg.n_list;
    j["spaces"] = {{"Phi", nfunction_spec_to_json(cfg.Phi)},
                   {"Psi", nfunction_spec_to_json(cfg.Psi)},
                   {"phi", weight_spec_to_json(cfg.phi)},
                   {"psi", weight_spec_to_json(cfg.psi)}};
    j["tolerances"] = {{"factor_tol", cfg.factor_tol},
                       {"fit_floor", cfg.fit_floor},
                       {"verify_tol", cfg.verify_tol}};
    j["seed"] = cfg.seed;
    j["output"] = {{"path", cfg.out_path}, {"format", cfg.out_format}};
    return j;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config parse failure: " + std::string(e.what()));
    }
    return parse_config(j);
}

FourierSymbol build_symbol(const SymbolSpec& spec) {
    switch (spec.kind) {
    case SymbolSpec::Kind::laurent:
        return FourierSymbol::from_coeffs(spec.coeffs);
    case SymbolSpec::Kind::exp_of: {
        const FourierSymbol g = FourierSymbol::from_coeffs(spec.coeffs);
        const int radius = spec.radius.value_or(4 * std::max(g.radius(), 1));
        return exp_symbol(g, radius).symbol;
    }
    case SymbolSpec::Kind::times_tk:
        return times_tk(build_symbol(*spec.base), spec.tk_kappa);
    }
    throw ConfigError("unreachable symbol kind");
}

NFunction build_nfunction(const NFunctionSpec& spec) {
    if (spec.kind == "power") return NFunction::power(spec.p);
    try {
        return NFunction::tabulated(spec.t, spec.density);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad density table: ") + e.what());
    }
}

WeightSeq build_weight(const WeightSpec& spec) {
    if (spec.kind == "power") return WeightSeq::power(spec.alpha);
    try {
        return WeightSeq::explicit_values(spec.values);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad weight table: ") + e.what());
    }
}

} // namespace szego
