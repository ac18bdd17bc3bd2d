#include "qmano/params.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qmano {

void SystemParams::validate() const {
    auto require_positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            std::ostringstream msg;
            msg << "SystemParams: " << name << " must be strictly positive, got " << v;
            throw std::invalid_argument(msg.str());
        }
    };
    require_positive(gas_mass, "gas_mass");
    require_positive(wall_mass, "wall_mass");
    require_positive(box_length, "box_length");
    require_positive(spring_constant, "spring_constant");
    require_positive(hbar, "hbar");
    if (dims) {
        require_positive(dims->L1, "dims.L1");
        require_positive(dims->L2, "dims.L2");
        require_positive(dims->L3, "dims.L3");
        if (dims->L1 != box_length) {
            throw std::invalid_argument("SystemParams: 3D mode requires L1 == box_length");
        }
    }
}

ExpansionParams derive_expansion_params(const SystemParams& p) {
    p.validate();
    ExpansionParams e;
    e.lambda = std::sqrt(p.hbar) /
               (std::pow(p.wall_mass, 0.25) * std::pow(p.spring_constant, 0.25) * p.box_length);
    e.beta = std::sqrt(p.gas_mass / p.wall_mass);
    e.omega = std::sqrt(p.spring_constant / p.wall_mass);
    e.oscillator_length = std::sqrt(p.hbar / (p.wall_mass * e.omega));
    return e;
}

RegimeReport validate_regime(const ExpansionParams& e, double max_eps) {
    if (!(max_eps > 0.0)) {
        throw std::invalid_argument("validate_regime: max_eps must be positive");
    }
    RegimeReport r;
    r.lambda = e.lambda;
    r.beta = e.beta;
    r.max_eps = max_eps;
    r.ratio = e.beta / e.lambda;
    r.ok = std::max(e.lambda, e.beta) <= max_eps;
    r.disparate_orders = std::abs(std::log10(e.lambda / e.beta)) > 2.0;
    return r;
}

SystemParams params_from_lambda_beta(double lambda, double beta, double box_length,
                                     double gas_mass, double hbar) {
    if (!(lambda > 0.0) || !(beta > 0.0)) {
        throw std::invalid_argument("params_from_lambda_beta: lambda and beta must be positive");
    }
    SystemParams p;
    p.gas_mass = gas_mass;
    p.box_length = box_length;
    p.hbar = hbar;
    p.wall_mass = gas_mass / (beta * beta);
    const double l2 = lambda * lambda;
    const double L2 = box_length * box_length;
    // lambda^2 = hbar / (sqrt(M_W f_W) L^2)  =>  f_W = hbar^2 / (lambda^4 L^4 M_W)
    p.spring_constant = (hbar * hbar) / (l2 * l2 * L2 * L2 * p.wall_mass);
    p.validate();
    return p;
}

NaturalConversion to_natural_units(const SystemParams& si) {
    si.validate();
    NaturalConversion out;
    out.scales.mass = si.gas_mass;
    out.scales.length = si.box_length;
    out.scales.energy = si.hbar * si.hbar / (si.gas_mass * si.box_length * si.box_length);
    const double t0 = si.gas_mass * si.box_length * si.box_length / si.hbar;

    SystemParams& n = out.params;
    n.gas_mass = 1.0;
    n.box_length = 1.0;
    n.hbar = 1.0;
    n.wall_mass = si.wall_mass / si.gas_mass;
    // spring constant has dimension mass / time^2
    n.spring_constant = si.spring_constant * t0 * t0 / si.gas_mass;
    if (si.dims) {
        Dimensions3D d;
        d.L1 = si.dims->L1 / si.box_length;
        d.L2 = si.dims->L2 / si.box_length;
        d.L3 = si.dims->L3 / si.box_length;
        n.dims = d;
    }
    n.validate();
    return out;
}

} // namespace qmano
