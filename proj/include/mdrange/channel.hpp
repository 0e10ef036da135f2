// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <vector>

#include "mdrange/geom.hpp"

namespace mdr::channel {

// Radio model knobs. The absolute power scale is set by reference_snr_db:
// the LOS path at 1 m has that SINR against noise alone, which fixes the
// reference amplitude relative to noise_density and pdp_power.
struct ChannelParams {
    double bandwidth_hz{1e9};
    double noise_density{1.16e-8};    // N0, relative power scale
    double pulse_duration_s{0.0};     // 0 = use 1/bandwidth
    double pdp_rise_s{5e-9};
    double pdp_decay_s{20e-9};
    double pdp_power{1.16e-6};        // integrated diffuse-multipath power
    double sinr_threshold_db{0.0};
    double reflection_loss_db{3.0};   // per bounce
    double reference_snr_db{30.0};    // LOS SINR at 1 m

    double effective_pulse_duration_s() const {
        return pulse_duration_s > 0.0 ? pulse_duration_s : 1.0 / bandwidth_hz;
    }
    double reference_amplitude() const {
        return std::sqrt(noise_density * std::pow(10.0, reference_snr_db / 10.0));
    }
    void validate() const;
};

struct DetectedMpc {
    geom::Mpc mpc;
    double sinr_db{0.0};
    double sigma_tau_s{0.0};  // CRLB std of delay extraction
};

// |a| = A_ref * (1 m)/(c*tau) * 10^(-bounces*reflection_loss/20)
double path_amplitude(const geom::Mpc& mpc, const ChannelParams& p);

void annotate_amplitudes(std::vector<geom::Mpc>& mpcs, const ChannelParams& p);

// Diffuse-multipath power delay profile at excess delay tau (seconds past
// the LOS arrival). Double exponential, scaled so it integrates to pdp_power.
double pdp(double excess_delay_s, const ChannelParams& p);

// SINR_k = |a_k|^2 / (N0 + T_p * S(tau_k - los)) in dB. los_delay_s is the
// LOS arrival of the channel the MPC belongs to.
double sinr_db(const geom::Mpc& mpc, const ChannelParams& p, double los_delay_s);

// CRLB std of delay extraction at the given SINR, effective bandwidth B/sqrt(12).
double crlb_sigma(double sinr_db, const ChannelParams& p);

// Keeps MPCs with SINR >= threshold and attaches their extraction sigma.
// All inputs must come from one source-sink channel (the earliest arrival
// is taken as the LOS reference for the PDP).
std::vector<DetectedMpc> detect(const std::vector<geom::Mpc>& mpcs,
                                const ChannelParams& p);

}  // namespace mdr::channel
