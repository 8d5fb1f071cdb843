#include "lteu/interference_stats.hpp"

#include "lteu/special_functions.hpp"

#include <algorithm>
#include <stdexcept>

namespace lteu {

double gamma_cdf(double x, double shape, double scale) {
    if (shape <= 0.0 || scale <= 0.0) {
        throw std::domain_error("gamma_cdf: requires shape > 0 and scale > 0");
    }
    if (x < 0.0) throw std::domain_error("gamma_cdf: requires x >= 0");
    if (x == 0.0) return 0.0;
    return detail::regularized_gamma_p(shape, x / scale);
}

InterferenceModel interference_model(bool selected, int k_sues, double path_loss,
                                     double epsilon, double tx_power, DistMode dist_mode) {
    if (k_sues < 1) throw std::domain_error("interference_model: requires k_sues >= 1");
    if (path_loss <= 0.0) throw std::domain_error("interference_model: requires path_loss > 0");
    if (epsilon < 0.0 || epsilon > 1.0) {
        throw std::domain_error("interference_model: requires 0 <= epsilon <= 1");
    }
    if (tx_power <= 0.0) throw std::domain_error("interference_model: requires tx_power > 0");

    InterferenceModel m;
    m.coefficient = tx_power / k_sues * path_loss * (selected ? 1.0 - epsilon : 1.0);
    if (dist_mode == DistMode::gamma_2k) {
        m.shape = 2.0 * k_sues;
        m.scale = k_sues;
    } else {
        m.shape = k_sues;
        m.scale = 1.0;
    }
    return m;
}

double access_probability(const InterferenceModel& model, double threshold) {
    if (threshold < 0.0) throw std::domain_error("access_probability: requires threshold >= 0");
    if (model.coefficient == 0.0) return 1.0;
    return gamma_cdf(threshold / model.coefficient, model.shape, model.scale);
}

AccessProfile expected_active_users(const std::vector<int>& selected_set,
                                    const std::vector<double>& path_loss, int k_sues,
                                    double epsilon, double tx_power, DistMode dist_mode,
                                    double threshold) {
    auto n = static_cast<int>(path_loss.size());
    for (int m : selected_set) {
        if (m < 0 || m >= n) {
            throw std::invalid_argument("expected_active_users: selected index out of range");
        }
    }
    AccessProfile profile;
    profile.per_user_access.reserve(path_loss.size());
    for (int m = 0; m < n; ++m) {
        bool selected = std::find(selected_set.begin(), selected_set.end(), m) !=
                        selected_set.end();
        InterferenceModel model = interference_model(selected, k_sues, path_loss[m], epsilon,
                                                     tx_power, dist_mode);
        double p = access_probability(model, threshold);
        profile.per_user_access.push_back(p);
        profile.expected_active += p;
    }
    return profile;
}

double default_threshold(double noise_power) {
    if (noise_power <= 0.0) throw std::domain_error("default_threshold: requires noise > 0");
    return 10.0 * noise_power;
}

}  // namespace lteu
