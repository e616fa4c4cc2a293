#ifndef STDMA_RADIO_MODEL_HPP
#define STDMA_RADIO_MODEL_HPP

#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace stdma {

using Vec2 = Eigen::Vector2d;

/// Thrown when a computation would need the distance between two coincident
/// points (zero path-loss distance), e.g. two nodes on top of each other.
class DegenerateGeometryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Relative tolerance for boundary comparisons: a SINR x passes the
/// threshold when x >= gamma*(1 - tol), a distance d is in range when
/// d <= range*(1 + tol).  Keeps float noise at d == R_c from flipping
/// verdicts.
inline constexpr double kBoundaryRelTol = 1e-9;

/// Radio parameters in linear units.  dB/dBm inputs are converted once at
/// ingestion (db_to_linear / dbm_to_mw); all formulas run on linear values.
struct RadioParams {
    double power_mw;   ///< transmit power P [mW]
    double noise_mw;   ///< noise power N0 [mW]
    double alpha;      ///< path-loss exponent
    double gamma_lin;  ///< SINR threshold, linear

    RadioParams(double power_mw, double noise_mw, double alpha, double gamma_lin);
};

double db_to_linear(double x_db);
double dbm_to_mw(double x_dbm);
double linear_to_db(double x);

/// P / d^alpha.  Throws DegenerateGeometryError for d <= 0.
double received_power(const RadioParams& params, double distance_m);

/// Largest distance at which a lone link still meets the SINR threshold
/// against noise alone: (P / (N0 * gamma))^(1/alpha).
double communication_range(const RadioParams& params);

bool meets_threshold(double sinr_lin, double gamma_lin);
bool within_range(double distance_m, double range_m);

/// Transmitter/receiver placement of one link, by position.
struct LinkGeometry {
    Vec2 tx;
    Vec2 rx;
};

struct SinrReport {
    Eigen::VectorXd sinr;  ///< per-receiver linear SINR, one entry per link
    double min_margin;     ///< min(sinr) - gamma_lin
    bool feasible;         ///< every receiver meets the threshold
};

/// Ground-truth feasibility of transmitting all given links in one slot:
/// SINR_i = (P/d(t_i,r_i)^a) / (N0 + sum_{j!=i} P/d(t_j,r_i)^a) for every
/// link i, feasible iff all SINR_i pass the threshold.  Works purely from
/// positions; independent of any line-graph weights.
SinrReport sinr_feasible(const RadioParams& params, const std::vector<LinkGeometry>& links);

}  // namespace stdma

#endif  // STDMA_RADIO_MODEL_HPP
