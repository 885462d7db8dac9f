// system_params.cpp — Parameter validation and bath coupling policy

#include "hopfield/system_params.hpp"

#include <cmath>
#include <string>

namespace hopfield {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(std::string("invalid SystemParams: ") + what);
}

} // namespace

void SystemParams::validate() const {
    require(std::isfinite(omega_c) && omega_c > 0.0, "omega_c must be > 0");
    require(std::isfinite(omega_b) && omega_b > 0.0, "omega_b must be > 0");
    require(std::isfinite(g) && g >= 0.0, "g must be >= 0");
    require(std::isfinite(gamma_L) && gamma_L >= 0.0, "gamma_L must be >= 0");
    require(std::isfinite(gamma_R) && gamma_R >= 0.0, "gamma_R must be >= 0");
    require(std::isfinite(T_L) && T_L >= 0.0, "T_L must be >= 0");
    require(std::isfinite(T_R) && T_R >= 0.0, "T_R must be >= 0");
}

double bath_coupling(const BathSpec& bath, double omega, double omega_c) {
    switch (bath.spectral_density) {
        case SpectralDensity::Ohmic:
            return bath.gamma * omega / omega_c;
        case SpectralDensity::Flat:
        default:
            return bath.gamma;
    }
}

} // namespace hopfield
