#include "bugs/order_param.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace bugs {

OrderParameterSample order_parameter(const BugConfiguration& config, double t)
{
    // fused bugs each contribute their own unit vector
    std::complex<double> sum{0.0, 0.0};
    for (double theta : config.angles()) sum += std::polar(1.0, theta);
    sum /= static_cast<double>(config.size());

    OrderParameterSample s;
    s.t = t;
    s.r = std::min(1.0, std::abs(sum));
    s.psi_defined = s.r >= kPsiUndefinedBelow;
    s.psi = s.psi_defined ? wrap_angle(std::arg(sum)) : 0.0;
    return s;
}

std::vector<OrderParameterSample> track(std::span<const TrajectorySample> trajectory)
{
    std::vector<OrderParameterSample> out;
    out.reserve(trajectory.size());
    for (const TrajectorySample& s : trajectory) out.push_back(order_parameter(s.config, s.t));
    return out;
}

std::vector<double> unwrapped_phase(std::span<const OrderParameterSample> samples)
{
    std::vector<double> out;
    out.reserve(samples.size());
    double prev_wrapped = 0.0;
    double offset = 0.0;
    bool started = false;
    for (const OrderParameterSample& s : samples) {
        if (!s.psi_defined) {
            out.push_back(started ? out.back() : 0.0);
            continue;
        }
        if (started) {
            const double jump = s.psi - prev_wrapped;
            if (jump > kPi) offset -= kTwoPi;
            else if (jump < -kPi) offset += kTwoPi;
        }
        prev_wrapped = s.psi;
        started = true;
        out.push_back(s.psi + offset);
    }
    return out;
}

double phase_slope(std::span<const OrderParameterSample> samples, double r_min)
{
    const auto psi = unwrapped_phase(samples);
    double st = 0.0, sp = 0.0, m = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].r <= r_min) continue;
        st += samples[i].t;
        sp += psi[i];
        m += 1.0;
    }
    if (m < 2.0) throw std::invalid_argument("phase slope needs two samples with r above the threshold");
    st /= m;
    sp /= m;
    double stt = 0.0, stp = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].r <= r_min) continue;
        stt += (samples[i].t - st) * (samples[i].t - st);
        stp += (samples[i].t - st) * (psi[i] - sp);
    }
    if (stt <= 0.0) throw std::invalid_argument("phase slope needs distinct sample times");
    return stp / stt;
}

}  // namespace bugs
