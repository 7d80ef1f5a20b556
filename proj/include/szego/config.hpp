#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "szego/nfunction.hpp"
#include "szego/symbol.hpp"
#include "szego/weights.hpp"

namespace szego {

/// Symbol literal: a Laurent coefficient map, exp of one (with an optional
/// truncation radius), or a monomial shift of another literal.
struct SymbolSpec {
    enum class Kind { laurent, exp_of, times_tk };
    Kind kind = Kind::laurent;
    std::map<int, cplx> coeffs;         // laurent / exp_of payload
    std::optional<int> radius;          // exp_of truncation override
    int tk_kappa = 0;                   // times_tk shift
    std::shared_ptr<SymbolSpec> base;   // times_tk payload

    bool operator==(const SymbolSpec& o) const;
};

struct NFunctionSpec {
    std::string kind = "power"; // "power" | "table"
    double p = 2.0;
    std::vector<double> t, density;

    bool operator==(const NFunctionSpec&) const = default;
};

struct WeightSpec {
    std::string kind = "power"; // "power" | "explicit"
    double alpha = 0.5;         // the classical symmetric choice
    std::vector<double> values;

    bool operator==(const WeightSpec&) const = default;
};

struct ExperimentConfig {
    SymbolSpec symbol;
    int kappa = 0;
    std::vector<int> n_list;
    NFunctionSpec Phi, Psi;
    WeightSpec phi, psi;
    double factor_tol = 1e-10;
    double fit_floor = 1e-13;
    double verify_tol = 1e-9;
    std::uint64_t seed = 1;
    std::string out_path;         // empty = stdout only
    std::string out_format = "csv";

    bool operator==(const ExperimentConfig&) const = default;
};

// Throws ConfigError on malformed input (including a non-increasing n_list
// or |kappa| > min(n_list)).
ExperimentConfig parse_config(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig load_config_file(const std::string& path);

FourierSymbol build_symbol(const SymbolSpec& spec);
NFunction build_nfunction(const NFunctionSpec& spec);
WeightSeq build_weight(const WeightSpec& spec);

} // namespace szego
