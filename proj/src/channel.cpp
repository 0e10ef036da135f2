// SPDX-License-Identifier: Apache-2.0
#include "mdrange/channel.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace mdr::channel {

void ChannelParams::validate() const {
    if (bandwidth_hz <= 0.0) throw std::invalid_argument("channel: bandwidth must be > 0");
    if (noise_density <= 0.0) throw std::invalid_argument("channel: noise density must be > 0");
    if (pdp_rise_s <= 0.0 || pdp_decay_s <= 0.0)
        throw std::invalid_argument("channel: PDP time constants must be > 0");
    if (pdp_power < 0.0) throw std::invalid_argument("channel: PDP power must be >= 0");
    if (pulse_duration_s < 0.0) throw std::invalid_argument("channel: pulse duration must be >= 0");
}

double path_amplitude(const geom::Mpc& mpc, const ChannelParams& p) {
    const double range_m = kSpeedOfLight * mpc.delay_s;
    const double bounce_gain = std::pow(10.0, -mpc.bounces() * p.reflection_loss_db / 20.0);
    return p.reference_amplitude() * (1.0 / range_m) * bounce_gain;
}

void annotate_amplitudes(std::vector<geom::Mpc>& mpcs, const ChannelParams& p) {
    for (geom::Mpc& m : mpcs) m.amplitude = path_amplitude(m, p);
}

double pdp(double excess_delay_s, const ChannelParams& p) {
    if (excess_delay_s <= 0.0) return 0.0;
    const double gr = p.pdp_rise_s, gd = p.pdp_decay_s;
    // integral of (1 - e^(-t/gr)) e^(-t/gd) over [0,inf) is gd^2/(gr+gd)
    const double scale = p.pdp_power * (gr + gd) / (gd * gd);
    return scale * (1.0 - std::exp(-excess_delay_s / gr)) * std::exp(-excess_delay_s / gd);
}

double sinr_db(const geom::Mpc& mpc, const ChannelParams& p, double los_delay_s) {
    const double a = path_amplitude(mpc, p);
    const double excess = std::max(0.0, mpc.delay_s - los_delay_s);
    const double interference = p.noise_density +
        p.effective_pulse_duration_s() * pdp(excess, p);
    return 10.0 * std::log10(a * a / interference);
}

double crlb_sigma(double sinr_db_value, const ChannelParams& p) {
    const double beta = p.bandwidth_hz / std::sqrt(12.0);  // flat-spectrum RMS bandwidth
    const double snr = std::pow(10.0, sinr_db_value / 10.0);
    return 1.0 / (2.0 * std::numbers::sqrt2 * std::numbers::pi * beta * std::sqrt(snr));
}

std::vector<DetectedMpc> detect(const std::vector<geom::Mpc>& mpcs,
                                const ChannelParams& p) {
    std::vector<DetectedMpc> out;
    if (mpcs.empty()) return out;
    double los = mpcs.front().delay_s;
    for (const geom::Mpc& m : mpcs) los = std::min(los, m.delay_s);
    for (const geom::Mpc& m : mpcs) {
        const double s = sinr_db(m, p, los);
        if (s >= p.sinr_threshold_db) {
            DetectedMpc d;
            d.mpc = m;
            d.mpc.amplitude = path_amplitude(m, p);
            d.sinr_db = s;
            d.sigma_tau_s = crlb_sigma(s, p);
            out.push_back(std::move(d));
        }
    }
    return out;
}

}  // namespace mdr::channel
