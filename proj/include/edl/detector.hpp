#pragma once

#include <optional>
#include <string>

namespace edl {

struct DetectorConfig {
    /// c1 threshold = c1_factor * (initial c1_norm / epsilon); epsilon-independent scale.
    double c1_factor = 50.0;
    /// Gradient saturation trigger: fires when max-gradient * h / amplitude
    /// reaches sat_frac, i.e. the profile jumps across ~1/sat_frac cells. A
    /// fixed threshold is unreachable once the limiter caps gradients at
    /// O(amplitude/h); this cap carries the O(h) detector bias the Richardson
    /// pair 2T_{h/2} - T_h removes.
    double sat_frac = 0.25;
    /// vacuum trigger when vacuum_margin < vacuum_floor_frac / (gamma - 1)
    double vacuum_floor_frac = 0.05;
    double dt_floor = 1e-12;
    /// support monitor tolerance, relative to the perturbation scale epsilon
    double support_tol_rel = 1e-9;
};

struct MonitorSample {
    double t = 0.0;
    double c1 = 0.0;
    double c1_grad = 0.0; // max spatial-gradient part of the C1 norm
    double amp = 0.0;     // max perturbation amplitude
    double vacuum_margin = 0.0;
    double support_radius = 0.0;
    double dt = 0.0;
};

struct BlowupTrigger {
    double T_b = 0.0;
    std::string detector_id; // c1-threshold | vacuum | cfl-collapse
    double value = 0.0;
};

/// Stream detector: feed monitor samples in time order; fires on the first
/// threshold crossing, linearly interpolating the crossing time.
class BlowupDetector {
public:
    BlowupDetector(const DetectorConfig& cfg, double gamma, double epsilon, double c1_initial, double h)
        : cfg_(cfg), h_(h) {
        const double scale = epsilon > 0.0 ? c1_initial / epsilon : 1.0;
        c1_threshold_ = cfg.c1_factor * (scale > 0.0 ? scale : 1.0);
        vacuum_threshold_ = cfg.vacuum_floor_frac / (gamma - 1.0);
    }

    double c1_threshold() const { return c1_threshold_; }
    double vacuum_threshold() const { return vacuum_threshold_; }

    /// Normalized C1 trigger level: 1 at threshold. Max of the fixed-threshold
    /// ratio and the gradient-saturation ratio.
    double c1_level(const MonitorSample& s) const {
        const double fixed = s.c1 / c1_threshold_;
        const double amp = std::max(s.amp, 1e-300);
        const double sat = s.c1_grad * h_ / (amp * cfg_.sat_frac);
        return std::max(fixed, sat);
    }

    std::optional<BlowupTrigger> feed(const MonitorSample& s) {
        std::optional<BlowupTrigger> out;
        const double q = c1_level(s);
        if (have_prev_) {
            // if both cross in one interval, the earlier interpolated time wins
            std::optional<BlowupTrigger> vac, c1;
            if (prev_.vacuum_margin > vacuum_threshold_ && s.vacuum_margin <= vacuum_threshold_) {
                const double f =
                    (prev_.vacuum_margin - vacuum_threshold_) / (prev_.vacuum_margin - s.vacuum_margin);
                vac = BlowupTrigger{prev_.t + f * (s.t - prev_.t), "vacuum", s.vacuum_margin};
            }
            if (prev_q_ < 1.0 && q >= 1.0) {
                const double f = (1.0 - prev_q_) / (q - prev_q_);
                c1 = BlowupTrigger{prev_.t + f * (s.t - prev_.t), "c1-threshold", s.c1};
            }
            if (vac && c1)
                out = (vac->T_b <= c1->T_b) ? vac : c1;
            else if (vac)
                out = vac;
            else if (c1)
                out = c1;
        } else {
            // degenerate: already past threshold on the first sample
            if (q >= 1.0) out = BlowupTrigger{s.t, "c1-threshold", s.c1};
            if (!out && s.vacuum_margin <= vacuum_threshold_)
                out = BlowupTrigger{s.t, "vacuum", s.vacuum_margin};
        }
        prev_ = s;
        prev_q_ = q;
        have_prev_ = true;
        return out;
    }

    bool near_threshold(const MonitorSample& s) const { return c1_level(s) >= 0.5; }

private:
    DetectorConfig cfg_;
    double h_ = 0.0;
    double c1_threshold_ = 0.0;
    double vacuum_threshold_ = 0.0;
    MonitorSample prev_{};
    double prev_q_ = 0.0;
    bool have_prev_ = false;
};

enum class RunStatus { Blowup, Horizon, Vacuum, Error };

/// Outcome of integrating a single run to blow-up or horizon.
struct RunOutcome {
    RunStatus status = RunStatus::Horizon;
    double T_b = 0.0;
    std::string detector_id;
    double detector_value = 0.0;
    long steps = 0;
    double final_t = 0.0;
    double max_support_excess = 0.0; // max of (support_radius - finite-speed bound), <= 0 if ok
    std::string error;
};

} // namespace edl
