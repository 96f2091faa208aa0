#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sedlab/config.hpp"
#include "sedlab/errors.hpp"
#include "sedlab/experiments.hpp"
#include "sedlab/pilot_wave.hpp"
#include "sedlab/quantum.hpp"
#include "sedlab/slit.hpp"
#include "sedlab/spectral.hpp"
#include "sedlab/version.hpp"

namespace py = pybind11;
using namespace sedlab;

PYBIND11_MODULE(_core, m) {
    m.doc() = "pilot-wave field synthesis, spectral analysis, eigensolvers, slit statistics";
    m.attr("__version__") = version_string;

    py::register_exception<ConfigError>(m, "ConfigError");
    py::register_exception<ResolutionError>(m, "ResolutionError");
    py::register_exception<StatisticsError>(m, "StatisticsError");

    py::class_<UnitSystem>(m, "UnitSystem")
        .def_static("natural", &UnitSystem::natural)
        .def_static("si", &UnitSystem::si)
        .def("c", &UnitSystem::c)
        .def("hbar", &UnitSystem::hbar)
        .def("h", &UnitSystem::h);

    py::class_<PhysicalParticle>(m, "PhysicalParticle")
        .def(py::init<double, double>(), py::arg("mass") = 1.0, py::arg("velocity") = 0.0)
        .def_readwrite("mass", &PhysicalParticle::mass)
        .def_readwrite("velocity", &PhysicalParticle::velocity)
        .def("beta", &PhysicalParticle::beta, py::arg("units") = UnitSystem::natural())
        .def("gamma", &PhysicalParticle::gamma, py::arg("units") = UnitSystem::natural())
        .def("momentum", &PhysicalParticle::momentum, py::arg("units") = UnitSystem::natural());

    py::class_<Grid1D>(m, "Grid1D")
        .def(py::init<double, double, std::size_t>(),
             py::arg("x_min"), py::arg("x_max"), py::arg("n_points"))
        .def_readwrite("x_min", &Grid1D::x_min)
        .def_readwrite("x_max", &Grid1D::x_max)
        .def_readwrite("n_points", &Grid1D::n_points)
        .def("spacing", &Grid1D::spacing)
        .def("x", &Grid1D::x);

    py::class_<SampledField>(m, "SampledField")
        .def(py::init<>())
        .def_readwrite("values", &SampledField::values)
        .def_readwrite("origin", &SampledField::origin)
        .def_readwrite("spacing", &SampledField::spacing)
        .def_readwrite("time_stamp", &SampledField::time_stamp)
        .def("size", &SampledField::size)
        .def("x", &SampledField::x);

    py::class_<DopplerPair>(m, "DopplerPair")
        .def_readonly("plus", &DopplerPair::plus)
        .def_readonly("minus", &DopplerPair::minus);

    py::class_<PilotWaveParams>(m, "PilotWaveParams")
        .def_readonly("omega_c", &PilotWaveParams::omega_c)
        .def_readonly("omega_z", &PilotWaveParams::omega_z)
        .def_readonly("omega_b", &PilotWaveParams::omega_b)
        .def_readonly("k_c", &PilotWaveParams::k_c)
        .def_readonly("k_b", &PilotWaveParams::k_b)
        .def_readonly("lambda_c", &PilotWaveParams::lambda_c)
        .def_readonly("lambda_b", &PilotWaveParams::lambda_b)
        .def_readonly("theta1", &PilotWaveParams::theta1)
        .def_readonly("theta2", &PilotWaveParams::theta2)
        .def_readonly("amplitude", &PilotWaveParams::amplitude)
        .def_readonly("beta", &PilotWaveParams::beta)
        .def_readonly("gamma", &PilotWaveParams::gamma)
        .def("envelope_k", &PilotWaveParams::envelope_k);

    py::enum_<FieldComponent>(m, "FieldComponent")
        .value("full", FieldComponent::full)
        .value("carrier", FieldComponent::carrier)
        .value("envelope", FieldComponent::envelope);

    m.def("compton_frequency", &compton_frequency,
          py::arg("particle"), py::arg("units") = UnitSystem::natural());
    m.def("doppler_frequencies", &doppler_frequencies,
          py::arg("particle"), py::arg("units") = UnitSystem::natural());
    m.def("wave_numbers", &wave_numbers,
          py::arg("particle"), py::arg("units") = UnitSystem::natural());
    m.def("de_broglie_wavelength", &de_broglie_wavelength,
          py::arg("particle"), py::arg("units") = UnitSystem::natural());
    m.def("make_pilot_wave_params", &make_pilot_wave_params,
          py::arg("particle"), py::arg("units") = UnitSystem::natural(),
          py::arg("theta1") = 0.0, py::arg("theta2") = 0.0, py::arg("amplitude") = 2.0);
    m.def(
        "random_pilot_wave_params",
        [](const PhysicalParticle& p, std::uint64_t seed, double amplitude) {
            SplitMix64 rng(seed);
            return random_pilot_wave_params(p, UnitSystem::natural(), rng, amplitude);
        },
        py::arg("particle"), py::arg("seed"), py::arg("amplitude") = 2.0);
    m.def("pilot_wave_value", &pilot_wave_value,
          py::arg("params"), py::arg("x"), py::arg("t"));
    m.def("synthesize_field", &synthesize_field,
          py::arg("params"), py::arg("grid"), py::arg("t"),
          py::arg("component") = FieldComponent::full);

    py::class_<SpectrumPeak>(m, "SpectrumPeak")
        .def_readonly("wavenumber", &SpectrumPeak::wavenumber)
        .def_readonly("power", &SpectrumPeak::power)
        .def_readonly("bin_width", &SpectrumPeak::bin_width);

    m.def("dominant_wavenumbers", &dominant_wavenumbers,
          py::arg("field"), py::arg("count"));
    m.def("measure_de_broglie", &measure_de_broglie, py::arg("field"));
    m.def("recommended_spectral_grid", &recommended_spectral_grid,
          py::arg("params"), py::arg("beat_periods") = 8.0,
          py::arg("samples_per_carrier") = 32.0);

    py::class_<Potential>(m, "Potential")
        .def_static("infinite_well", &Potential::infinite_well)
        .def_static("harmonic", &Potential::harmonic, py::arg("stiffness") = 1.0)
        .def_static("free_particle", &Potential::free_particle)
        .def_static("tabulated", &Potential::tabulated, py::arg("samples"));

    py::class_<EnergySpectrum>(m, "EnergySpectrum")
        .def_readonly("eigenvalues", &EnergySpectrum::eigenvalues)
        .def_readonly("eigenfunctions", &EnergySpectrum::eigenfunctions);

    m.def("wave_equation_residual", &wave_equation_residual,
          py::arg("params"), py::arg("grid"), py::arg("t"), py::arg("speed"),
          py::arg("component") = FieldComponent::full);
    m.def("klein_gordon_residual", &klein_gordon_residual,
          py::arg("phi"), py::arg("sigma"), py::arg("potential"), py::arg("mass"));
    m.def("solve_tise", &solve_tise,
          py::arg("potential"), py::arg("grid"), py::arg("mass"), py::arg("n_states"));

    py::enum_<SlitState>(m, "SlitState")
        .value("both_open", SlitState::both_open)
        .value("slit1_only", SlitState::slit1_only)
        .value("slit2_only", SlitState::slit2_only);

    py::class_<SlitGeometry>(m, "SlitGeometry")
        .def(py::init<>())
        .def_readwrite("slit_separation", &SlitGeometry::slit_separation)
        .def_readwrite("slit_width", &SlitGeometry::slit_width)
        .def_readwrite("screen_distance", &SlitGeometry::screen_distance)
        .def_readwrite("detector_half_width", &SlitGeometry::detector_half_width)
        .def_readwrite("aperture_samples_per_slit", &SlitGeometry::aperture_samples_per_slit)
        .def("fraunhofer_ok", &SlitGeometry::fraunhofer_ok, py::arg("wavelength"));

    py::class_<ArrivalHistogram>(m, "ArrivalHistogram")
        .def_readonly("bin_edges", &ArrivalHistogram::bin_edges)
        .def_readonly("counts", &ArrivalHistogram::counts)
        .def_readonly("total", &ArrivalHistogram::total)
        .def_readonly("seed", &ArrivalHistogram::seed);

    m.def("run_double_slit", &run_double_slit,
          py::arg("geometry"), py::arg("particle"), py::arg("n_particles"),
          py::arg("n_modes"), py::arg("angular_spread"), py::arg("master_seed"),
          py::arg("bins"), py::arg("state") = SlitState::both_open);
    m.def("fringe_visibility", &fringe_visibility,
          py::arg("histogram"), py::arg("expected_spacing"));
    m.def("measure_fringe_spacing", &measure_fringe_spacing,
          py::arg("histogram"), py::arg("expected_spacing"));

    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_readwrite("experiment", &ExperimentConfig::experiment)
        .def_readwrite("parameters", &ExperimentConfig::parameters)
        .def_readwrite("seed", &ExperimentConfig::seed)
        .def_readwrite("output_path", &ExperimentConfig::output_path);

    m.def("parse_config", &parse_config, py::arg("text"));
    m.def("run_experiment", &run_experiment, py::arg("config"));
}
