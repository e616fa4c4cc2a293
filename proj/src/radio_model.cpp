#include "stdma/radio_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace stdma {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

RadioParams::RadioParams(double power_mw_, double noise_mw_, double alpha_, double gamma_lin_)
    : power_mw(power_mw_), noise_mw(noise_mw_), alpha(alpha_), gamma_lin(gamma_lin_) {
    require(std::isfinite(power_mw) && power_mw > 0.0, "RadioParams: power_mw must be > 0");
    require(std::isfinite(noise_mw) && noise_mw > 0.0, "RadioParams: noise_mw must be > 0");
    require(std::isfinite(alpha) && alpha > 0.0, "RadioParams: alpha must be > 0");
    require(std::isfinite(gamma_lin) && gamma_lin > 0.0, "RadioParams: gamma_lin must be > 0");
}

double db_to_linear(double x_db) {
    require(std::isfinite(x_db), "db_to_linear: non-finite input");
    return std::pow(10.0, x_db / 10.0);
}

double dbm_to_mw(double x_dbm) {
    require(std::isfinite(x_dbm), "dbm_to_mw: non-finite input");
    return std::pow(10.0, x_dbm / 10.0);
}

double linear_to_db(double x) {
    require(x > 0.0, "linear_to_db: input must be > 0");
    return 10.0 * std::log10(x);
}

double received_power(const RadioParams& params, double distance_m) {
    if (!(distance_m > 0.0))
        throw DegenerateGeometryError("received_power: distance must be > 0");
    return params.power_mw / std::pow(distance_m, params.alpha);
}

double communication_range(const RadioParams& params) {
    return std::pow(params.power_mw / (params.noise_mw * params.gamma_lin), 1.0 / params.alpha);
}

bool meets_threshold(double sinr_lin, double gamma_lin) {
    return sinr_lin >= gamma_lin * (1.0 - kBoundaryRelTol);
}

bool within_range(double distance_m, double range_m) {
    return distance_m <= range_m * (1.0 + kBoundaryRelTol);
}

SinrReport sinr_feasible(const RadioParams& params, const std::vector<LinkGeometry>& links) {
    const auto n = static_cast<Eigen::Index>(links.size());
    SinrReport report;
    report.sinr.resize(n);
    report.min_margin = std::numeric_limits<double>::infinity();
    report.feasible = true;

    for (Eigen::Index i = 0; i < n; ++i) {
        const Vec2& rx = links[i].rx;
        double signal = 0.0;
        double interference = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            const double d = (links[j].tx - rx).norm();
            if (!(d > 0.0))
                throw DegenerateGeometryError(
                    "sinr_feasible: a transmitter coincides with a receiver it is measured "
                    "against");
            const double p = params.power_mw / std::pow(d, params.alpha);
            if (j == i)
                signal = p;
            else
                interference += p;
        }
        const double sinr = signal / (params.noise_mw + interference);
        report.sinr[i] = sinr;
        report.min_margin = std::min(report.min_margin, sinr - params.gamma_lin);
        if (!meets_threshold(sinr, params.gamma_lin)) report.feasible = false;
    }
    return report;
}

}  // namespace stdma
