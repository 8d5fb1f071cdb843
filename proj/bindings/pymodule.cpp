#include "lteu/dof_optimizer.hpp"
#include "lteu/interference_stats.hpp"
#include "lteu/lte_analytics.hpp"
#include "lteu/montecarlo.hpp"
#include "lteu/runners.hpp"
#include "lteu/scenario.hpp"
#include "lteu/special_functions.hpp"
#include "lteu/wifi_dcf.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace lteu;

PYBIND11_MODULE(_lteu, m) {
    m.doc() = "Coexistence model core: contention fixed point, rate model, "
              "interference statistics, and the DoF allocator.";

    py::class_<WifiMacConfig>(m, "WifiMacConfig")
        .def(py::init<>())
        .def_readwrite("min_window", &WifiMacConfig::min_window)
        .def_readwrite("max_stage", &WifiMacConfig::max_stage)
        .def_readwrite("slot_time", &WifiMacConfig::slot_time)
        .def_readwrite("sifs", &WifiMacConfig::sifs)
        .def_readwrite("difs", &WifiMacConfig::difs)
        .def_readwrite("payload_bits", &WifiMacConfig::payload_bits)
        .def_readwrite("mac_header_bits", &WifiMacConfig::mac_header_bits)
        .def_readwrite("phy_header_bits", &WifiMacConfig::phy_header_bits)
        .def_readwrite("bit_rate", &WifiMacConfig::bit_rate)
        .def_readwrite("ack_time", &WifiMacConfig::ack_time)
        .def_readwrite("collision_extra_time", &WifiMacConfig::collision_extra_time)
        .def("valid", &WifiMacConfig::valid);

    py::class_<DcfSolution>(m, "DcfSolution")
        .def_readonly("tau", &DcfSolution::tau)
        .def_readonly("p_collision", &DcfSolution::p_collision)
        .def_readonly("p_busy", &DcfSolution::p_busy)
        .def_readonly("p_success", &DcfSolution::p_success)
        .def_readonly("throughput_bps", &DcfSolution::throughput_bps);

    py::class_<SlotSimResult>(m, "SlotSimResult")
        .def_readonly("throughput_bps", &SlotSimResult::throughput_bps)
        .def_readonly("collision_fraction", &SlotSimResult::collision_fraction)
        .def_readonly("attempt_rate", &SlotSimResult::attempt_rate)
        .def_readonly("busy_fraction", &SlotSimResult::busy_fraction)
        .def_readonly("successes", &SlotSimResult::successes)
        .def_readonly("collisions", &SlotSimResult::collisions)
        .def_readonly("attempts", &SlotSimResult::attempts)
        .def_readonly("slots", &SlotSimResult::slots);

    m.def("scenario_mac_defaults", &scenario_mac_defaults);
    m.def("solve_tau", &solve_tau, py::arg("m_users"), py::arg("mac") = WifiMacConfig());
    m.def("backoff_attempt_probability", &backoff_attempt_probability, py::arg("p_collision"),
          py::arg("mac") = WifiMacConfig());
    m.def("success_probability", &success_probability, py::arg("tau"), py::arg("m_users"));
    m.def("busy_probability", &busy_probability, py::arg("tau"), py::arg("m_users"));
    m.def("occupancy_durations", &occupancy_durations, py::arg("mac") = WifiMacConfig());
    m.def("wifi_throughput", &wifi_throughput, py::arg("m_users"),
          py::arg("mac") = WifiMacConfig());
    m.def("slot_level_simulate", &slot_level_simulate, py::arg("m_users"), py::arg("mac"),
          py::arg("n_slots"), py::arg("seed"));

    m.def("exp_integral_e1", &exp_integral_e1, py::arg("x"));
    m.def("exp_e1_scaled", &exp_e1_scaled, py::arg("x"));
    m.def("i2", &i2, py::arg("x"), py::arg("y"), py::arg("z"));
    m.def("psi", &psi, py::arg("x"), py::arg("y"), py::arg("z"));
    m.def("gamma_cdf", &gamma_cdf, py::arg("x"), py::arg("shape"), py::arg("scale"));
    m.def("thermal_noise_power", &thermal_noise_power, py::arg("bandwidth_hz"));

    py::enum_<SigmaMode>(m, "SigmaMode")
        .value("quant_error", SigmaMode::quant_error)
        .value("fitted", SigmaMode::fitted)
        .value("calibrated", SigmaMode::calibrated);

    py::class_<SmallCellConfig>(m, "SmallCellConfig")
        .def(py::init<>())
        .def_readwrite("n_antennas", &SmallCellConfig::n_antennas)
        .def_readwrite("tx_power", &SmallCellConfig::tx_power)
        .def_readwrite("bandwidth_hz", &SmallCellConfig::bandwidth_hz)
        .def_readwrite("noise_power", &SmallCellConfig::noise_power)
        .def_readwrite("feedback_bits", &SmallCellConfig::feedback_bits)
        .def_readwrite("quant_error", &SmallCellConfig::quant_error)
        .def_readwrite("wifi_csi_corr", &SmallCellConfig::wifi_csi_corr)
        .def_readwrite("sigma_mode", &SmallCellConfig::sigma_mode)
        .def_static("derived_quant_error", &SmallCellConfig::derived_quant_error,
                    py::arg("bits"), py::arg("nt"))
        .def("sigma", &SmallCellConfig::sigma)
        .def("valid", &SmallCellConfig::valid);

    py::enum_<GeometryConfig::Placement>(m, "Placement")
        .value("cell_disk", GeometryConfig::Placement::cell_disk)
        .value("ap_cluster", GeometryConfig::Placement::ap_cluster);

    py::class_<GeometryConfig>(m, "GeometryConfig")
        .def(py::init<>())
        .def_readwrite("cell_radius_m", &GeometryConfig::cell_radius_m)
        .def_readwrite("path_loss_exp", &GeometryConfig::path_loss_exp)
        .def_readwrite("ref_dist_m", &GeometryConfig::ref_dist_m)
        .def_readwrite("placement", &GeometryConfig::placement)
        .def_readwrite("ap_distance_m", &GeometryConfig::ap_distance_m)
        .def_readwrite("ap_spread_m", &GeometryConfig::ap_spread_m)
        .def("path_loss", &GeometryConfig::path_loss, py::arg("dist_m"))
        .def("valid", &GeometryConfig::valid);

    m.def("scenario_geometry_defaults", &scenario_geometry_defaults);

    py::class_<SinrModel>(m, "SinrModel")
        .def(py::init<>())
        .def(py::init([](int k_sues, double sigma, double tx_power, double noise_power) {
                 return SinrModel{k_sues, sigma, tx_power, noise_power};
             }),
             py::arg("k_sues"), py::arg("sigma"), py::arg("tx_power"), py::arg("noise_power"))
        .def_readwrite("k_sues", &SinrModel::k_sues)
        .def_readwrite("sigma", &SinrModel::sigma)
        .def_readwrite("tx_power", &SinrModel::tx_power)
        .def_readwrite("noise_power", &SinrModel::noise_power);

    m.def("sinr_cdf", &sinr_cdf, py::arg("x"), py::arg("model"));
    m.def("small_cell_throughput", &small_cell_throughput, py::arg("model"),
          py::arg("bandwidth_hz"));
    m.def("small_cell_throughput_quadrature", &small_cell_throughput_quadrature,
          py::arg("model"), py::arg("bandwidth_hz"));

    py::class_<SueCount>(m, "SueCount")
        .def_readonly("k_star", &SueCount::k_star)
        .def_readonly("r_s_star", &SueCount::r_s_star);

    m.def("optimal_sue_count", &optimal_sue_count, py::arg("n_dof"), py::arg("config"));

    py::enum_<DistMode>(m, "DistMode")
        .value("gamma_2k", DistMode::gamma_2k)
        .value("erlang", DistMode::erlang);

    py::class_<InterferenceModel>(m, "InterferenceModel")
        .def_readonly("shape", &InterferenceModel::shape)
        .def_readonly("scale", &InterferenceModel::scale)
        .def_readonly("coefficient", &InterferenceModel::coefficient);

    m.def("interference_model", &interference_model, py::arg("selected"), py::arg("k_sues"),
          py::arg("path_loss"), py::arg("epsilon"), py::arg("tx_power"),
          py::arg("dist_mode") = DistMode::erlang);
    m.def("access_probability", &access_probability, py::arg("model"), py::arg("threshold"));

    py::class_<AccessProfile>(m, "AccessProfile")
        .def_readonly("per_user_access", &AccessProfile::per_user_access)
        .def_readonly("expected_active", &AccessProfile::expected_active);

    m.def("expected_active_users", &expected_active_users, py::arg("selected_set"),
          py::arg("path_loss"), py::arg("k_sues"), py::arg("epsilon"), py::arg("tx_power"),
          py::arg("dist_mode"), py::arg("threshold"));
    m.def("default_threshold", &default_threshold, py::arg("noise_power"));

    py::class_<SampleBatch>(m, "SampleBatch")
        .def_readonly("values", &SampleBatch::values)
        .def_readonly("n", &SampleBatch::n)
        .def_readonly("seed", &SampleBatch::seed)
        .def_readonly("label", &SampleBatch::label);

    m.def("simulate_sinr_samples", &simulate_sinr_samples, py::arg("config"),
          py::arg("k_sues"), py::arg("n_wifi_nulled"), py::arg("n_samples"), py::arg("seed"));
    m.def("simulate_interference_samples", &simulate_interference_samples, py::arg("config"),
          py::arg("k_sues"), py::arg("epsilon"), py::arg("n_samples"), py::arg("seed"));
    m.def("orthonormal_interference_samples", &orthonormal_interference_samples,
          py::arg("k_dirs"), py::arg("n_antennas"), py::arg("n_samples"), py::arg("seed"));
    m.def("ks_distance", &ks_distance, py::arg("samples"), py::arg("cdf"));

    py::class_<Weights>(m, "Weights")
        .def(py::init<>())
        .def(py::init([](double e_s, double e_w) { return Weights{e_s, e_w}; }),
             py::arg("e_s"), py::arg("e_w"))
        .def_readwrite("e_s", &Weights::e_s)
        .def_readwrite("e_w", &Weights::e_w)
        .def("valid", &Weights::valid);

    py::class_<RateRequirements>(m, "RateRequirements")
        .def(py::init<>())
        .def_readwrite("min_sue_rate", &RateRequirements::min_sue_rate)
        .def_readwrite("min_wifi_rate", &RateRequirements::min_wifi_rate);

    py::class_<ScenarioInputs>(m, "ScenarioInputs")
        .def(py::init<>())
        .def_readwrite("small_cell", &ScenarioInputs::small_cell)
        .def_readwrite("mac", &ScenarioInputs::mac)
        .def_readwrite("wifi_path_loss", &ScenarioInputs::wifi_path_loss)
        .def_readwrite("threshold_w", &ScenarioInputs::threshold_w)
        .def_readwrite("dist_mode", &ScenarioInputs::dist_mode)
        .def("valid", &ScenarioInputs::valid);

    py::class_<VisitedPoint>(m, "VisitedPoint")
        .def_readonly("wifi_dof", &VisitedPoint::wifi_dof)
        .def_readonly("objective", &VisitedPoint::objective)
        .def_readonly("feasible", &VisitedPoint::feasible);

    py::class_<DofAllocation>(m, "DofAllocation")
        .def_readonly("wifi_dof", &DofAllocation::wifi_dof)
        .def_readonly("sue_dof", &DofAllocation::sue_dof)
        .def_readonly("k_served", &DofAllocation::k_served)
        .def_readonly("selected_wifi", &DofAllocation::selected_wifi)
        .def_readonly("r_small", &DofAllocation::r_small)
        .def_readonly("r_wifi", &DofAllocation::r_wifi)
        .def_readonly("objective", &DofAllocation::objective)
        .def_readonly("m_bar", &DofAllocation::m_bar)
        .def_readonly("m_bar_clamped", &DofAllocation::m_bar_clamped)
        .def_readonly("feasible", &DofAllocation::feasible)
        .def_readonly("iterations", &DofAllocation::iterations)
        .def_readonly("visited", &DofAllocation::visited)
        .def_readonly("diagnostic", &DofAllocation::diagnostic);

    py::class_<ConstraintReport>(m, "ConstraintReport")
        .def_readonly("sue_rate_ok", &ConstraintReport::sue_rate_ok)
        .def_readonly("wifi_rate_ok", &ConstraintReport::wifi_rate_ok)
        .def_readonly("sue_count_ok", &ConstraintReport::sue_count_ok)
        .def_readonly("dof_budget_ok", &ConstraintReport::dof_budget_ok)
        .def("all", &ConstraintReport::all);

    m.def("select_wifi_users", &select_wifi_users, py::arg("d"), py::arg("per_user_gain"));
    m.def("evaluate_allocation", &evaluate_allocation, py::arg("d"), py::arg("inputs"),
          py::arg("weights"), py::arg("reqs"));
    m.def("allocate_dof", &allocate_dof, py::arg("inputs"), py::arg("weights"),
          py::arg("reqs"));
    m.def("check_constraints", &check_constraints, py::arg("alloc"), py::arg("reqs"),
          py::arg("m_bar"), py::arg("n_antennas"));

    py::class_<ScenarioConfig>(m, "ScenarioConfig")
        .def(py::init<>())
        .def_readwrite("small_cell", &ScenarioConfig::small_cell)
        .def_readwrite("mac", &ScenarioConfig::mac)
        .def_readwrite("geometry", &ScenarioConfig::geometry)
        .def_readwrite("reqs", &ScenarioConfig::reqs)
        .def_readwrite("weights", &ScenarioConfig::weights)
        .def_readwrite("threshold_w", &ScenarioConfig::threshold_w)
        .def_readwrite("m_wifi", &ScenarioConfig::m_wifi)
        .def_readwrite("dist_mode", &ScenarioConfig::dist_mode)
        .def_readwrite("seed", &ScenarioConfig::seed)
        .def_readwrite("n_samples", &ScenarioConfig::n_samples)
        .def_readwrite("n_slots", &ScenarioConfig::n_slots)
        .def("valid", &ScenarioConfig::valid);

    m.def("parse_config", &parse_config, py::arg("text"));
    m.def("load_config", &load_config, py::arg("path"));
    m.def("serialize_config", &serialize_config, py::arg("config"));
    m.def("default_config_text", &default_config_text);
    m.def("config_hash", &config_hash, py::arg("config"));
    m.def("scenario_inputs", &scenario_inputs, py::arg("config"));

    py::class_<Fig2Row>(m, "Fig2Row")
        .def_readonly("k_sues", &Fig2Row::k_sues)
        .def_readonly("feedback_bits", &Fig2Row::feedback_bits)
        .def_readonly("r_s_closed", &Fig2Row::r_s_closed)
        .def_readonly("r_s_mc", &Fig2Row::r_s_mc);

    py::class_<Fig3Row>(m, "Fig3Row")
        .def_readonly("m_users", &Fig3Row::m_users)
        .def_readonly("r_w_analytic", &Fig3Row::r_w_analytic)
        .def_readonly("r_w_sim", &Fig3Row::r_w_sim);

    py::class_<Fig4Row>(m, "Fig4Row")
        .def_readonly("sue_dof", &Fig4Row::sue_dof)
        .def_readonly("r_small", &Fig4Row::r_small)
        .def_readonly("r_wifi", &Fig4Row::r_wifi);

    py::class_<Table3Row>(m, "Table3Row")
        .def_readonly("e_s", &Table3Row::e_s)
        .def_readonly("e_w", &Table3Row::e_w)
        .def_readonly("r_small", &Table3Row::r_small)
        .def_readonly("r_wifi", &Table3Row::r_wifi)
        .def_readonly("sue_dof", &Table3Row::sue_dof)
        .def_readonly("wifi_dof", &Table3Row::wifi_dof);

    m.def("run_fig2", &run_fig2, py::arg("config"), py::arg("out_path") = std::string());
    m.def("run_fig3", &run_fig3, py::arg("config"), py::arg("out_path") = std::string());
    m.def("run_fig4", &run_fig4, py::arg("config"), py::arg("out_path") = std::string());
    m.def("run_table3", &run_table3, py::arg("config"), py::arg("out_path") = std::string());
    m.def("table3_weights", &table3_weights);
}
