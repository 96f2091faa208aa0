from ._core import (
    ArrivalHistogram,
    ConfigError,
    DopplerPair,
    EnergySpectrum,
    ExperimentConfig,
    FieldComponent,
    Grid1D,
    PhysicalParticle,
    PilotWaveParams,
    Potential,
    ResolutionError,
    SampledField,
    SlitGeometry,
    SlitState,
    SpectrumPeak,
    StatisticsError,
    UnitSystem,
    __version__,
    compton_frequency,
    de_broglie_wavelength,
    dominant_wavenumbers,
    doppler_frequencies,
    fringe_visibility,
    klein_gordon_residual,
    make_pilot_wave_params,
    measure_de_broglie,
    measure_fringe_spacing,
    parse_config,
    pilot_wave_value,
    random_pilot_wave_params,
    recommended_spectral_grid,
    run_double_slit,
    run_experiment,
    solve_tise,
    synthesize_field,
    wave_equation_residual,
    wave_numbers,
)

__all__ = [
    "ArrivalHistogram",
    "ConfigError",
    "DopplerPair",
    "EnergySpectrum",
    "ExperimentConfig",
    "FieldComponent",
    "Grid1D",
    "PhysicalParticle",
    "PilotWaveParams",
    "Potential",
    "ResolutionError",
    "SampledField",
    "SlitGeometry",
    "SlitState",
    "SpectrumPeak",
    "StatisticsError",
    "UnitSystem",
    "__version__",
    "compton_frequency",
    "de_broglie_wavelength",
    "dominant_wavenumbers",
    "doppler_frequencies",
    "fringe_visibility",
    "klein_gordon_residual",
    "make_pilot_wave_params",
    "measure_de_broglie",
    "measure_fringe_spacing",
    "parse_config",
    "pilot_wave_value",
    "random_pilot_wave_params",
    "recommended_spectral_grid",
    "run_double_slit",
    "run_experiment",
    "solve_tise",
    "synthesize_field",
    "wave_equation_residual",
    "wave_numbers",
]
