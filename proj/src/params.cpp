#include "dominion/params.hpp"

#include "dominion/errors.hpp"

namespace dominion {

namespace {

constexpr std::array<ParamInfo, kParamCount> kInfo = {{
    {Param::Gamma, "gamma", "γ", Codomain::Binary, Hood::Closed, Rule::Sum, 1},
    {Param::GammaT, "gamma_t", "γ_t", Codomain::Binary, Hood::Open, Rule::Sum, 1},
    {Param::GammaW2, "gamma_w2", "γ_w2", Codomain::Ternary, Hood::Outer, Rule::Sum, 2},
    {Param::GammaSet2, "gamma_set2", "γ_{2}", Codomain::Ternary, Hood::Closed, Rule::Sum, 2},
    {Param::GammaTSet2, "gamma_tset2", "γ_t{2}", Codomain::Ternary, Hood::Open, Rule::Sum, 2},
    {Param::Gamma2, "gamma_2", "γ₂", Codomain::Binary, Hood::Outer, Rule::Sum, 2},
    {Param::GammaX2, "gamma_x2", "γ×2", Codomain::Binary, Hood::Closed, Rule::Sum, 2},
    {Param::GammaTX2, "gamma_tx2", "γ_t×2", Codomain::Binary, Hood::Open, Rule::Sum, 2},
    {Param::RGammaW2, "rgamma_w2", "γ̃_w2", Codomain::RainbowFull, Hood::Outer, Rule::Union, 2},
    {Param::RGamma2, "rgamma_2", "γ̃₂", Codomain::RainbowSingle, Hood::Outer, Rule::Union, 2},
    {Param::RGammaX2, "rgamma_x2", "γ̃×2", Codomain::RainbowSingle, Hood::Closed, Rule::Union, 2},
    {Param::RGammaTX2, "rgamma_tx2", "γ̃_t×2", Codomain::RainbowSingle, Hood::Open, Rule::Union, 2},
    {Param::GammaR, "gamma_R", "γ_R", Codomain::Ternary, Hood::Outer, Rule::Roman, 2},
    {Param::Rho, "rho", "ρ", Codomain::Edge, Hood::Open, Rule::Sum, 1},
    {Param::Rho2, "rho_2", "ρ₂", Codomain::Edge, Hood::Open, Rule::Sum, 2},
    {Param::Tau2, "tau_2", "τ₂", Codomain::Ternary, Hood::Open, Rule::Sum, 2},
    {Param::GammaGamma, "gammagamma", "γγ", Codomain::RainbowSingle, Hood::Closed, Rule::Union, 2},
    {Param::GammaTGammaT, "gammat_gammat", "γ_tγ_t", Codomain::RainbowSingle, Hood::Open, Rule::Union, 2},
    {Param::RGammaSet2, "rgamma_set2", "γ̃_{2}", Codomain::RainbowFull, Hood::Closed, Rule::Union, 2},
    {Param::RGammaTSet2, "rgamma_tset2", "γ̃_t{2}", Codomain::RainbowFull, Hood::Open, Rule::Union, 2},
}};

}  // namespace

const ParamInfo& info(Param p) { return kInfo.at(index_of(p)); }

bool is_main(Param p) { return index_of(p) < kMainCount; }

bool is_rainbow(Param p) {
    auto c = info(p).codomain;
    return c == Codomain::RainbowSingle || c == Codomain::RainbowFull;
}

bool is_cover(Param p) { return p == Param::Rho || p == Param::Rho2 || p == Param::Tau2; }

std::optional<Param> param_from_name(std::string_view name) {
    for (const auto& i : kInfo)
        if (name == i.name) return i.id;
    return std::nullopt;
}

int max_unit(Param p) {
    switch (info(p).codomain) {
        case Codomain::Binary: return 1;
        case Codomain::Ternary: return 2;
        case Codomain::RainbowSingle: return 1;
        case Codomain::RainbowFull: return 2;
        case Codomain::Edge: return p == Param::Rho ? 1 : 2;
    }
    return 0;
}

int codomain_size(Param p) {
    switch (info(p).codomain) {
        case Codomain::Binary: return 2;
        case Codomain::Ternary: return 3;
        case Codomain::RainbowSingle: return 3;
        case Codomain::RainbowFull: return 4;
        case Codomain::Edge: return p == Param::Rho ? 2 : 3;
    }
    return 0;
}

}  // namespace dominion
