#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace dominion {

// Order of the first thirteen matches the rows and columns of the bound table.
enum class Param {
    Gamma,
    GammaT,
    GammaW2,
    GammaSet2,
    GammaTSet2,
    Gamma2,
    GammaX2,
    GammaTX2,
    RGammaW2,
    RGamma2,
    RGammaX2,
    RGammaTX2,
    GammaR,
    // auxiliary
    Rho,
    Rho2,
    Tau2,
    GammaGamma,
    GammaTGammaT,
    // rainbow {2} variants, only available as 2*gamma and 2*gamma_t
    RGammaSet2,
    RGammaTSet2,
};

inline constexpr int kMainCount = 13;
inline constexpr int kParamCount = 20;

inline constexpr std::array<Param, kMainCount> kMainParams = {
    Param::Gamma,    Param::GammaT,   Param::GammaW2,  Param::GammaSet2, Param::GammaTSet2,
    Param::Gamma2,   Param::GammaX2,  Param::GammaTX2, Param::RGammaW2,  Param::RGamma2,
    Param::RGammaX2, Param::RGammaTX2, Param::GammaR};

enum class Codomain { Binary, Ternary, RainbowSingle, RainbowFull, Edge };
enum class Hood { Outer, Closed, Open };
enum class Rule { Sum, Union, Roman };

struct ParamInfo {
    Param id;
    const char* name;     // CLI / JSON identifier
    const char* symbol;   // short display form
    Codomain codomain;
    Hood hood;
    Rule rule;
    int demand;           // required sum (Sum rule); ignored otherwise
};

const ParamInfo& info(Param p);
inline int index_of(Param p) { return static_cast<int>(p); }
inline Param main_param(int index) { return kMainParams.at(index); }
bool is_main(Param p);
bool is_rainbow(Param p);
bool is_cover(Param p);
std::optional<Param> param_from_name(std::string_view name);
// Largest value a single vertex may carry (labels count their size).
int max_unit(Param p);
// Number of distinct per-vertex values.
int codomain_size(Param p);

}  // namespace dominion
