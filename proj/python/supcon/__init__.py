"""Safety-supervised antagonistic wire actuation toolkit.

Thin re-export of the native module. The supervisor math, the polyhedral
safety verification, the pose controllers, and the closed-loop simulator all
live in C++; this package only makes them importable.
"""

from supcon._core import (  # noqa: F401
    ActuatorParams,
    AugmentedSystem,
    BodyParams,
    CalibrationSample,
    ConfigError,
    ControllerConfig,
    ControllerKind,
    DimensionMismatch,
    DomainError,
    EmptySetError,
    GammaSweepRow,
    HPolyhedron,
    InvariantSetResult,
    IoError,
    LimbState,
    NoConvergenceError,
    PiAwResult,
    PiAwState,
    RankDeficient,
    RunConfig,
    Scenario,
    ScenarioKind,
    SimParams,
    SmcResult,
    SmcState,
    SupconError,
    SupervisedInput,
    SupervisorConfig,
    TelemetryRecord,
    UnreachableError,
    activation_time,
    augmented,
    augmented_matrices,
    body_step,
    calibrate,
    compose,
    equilibrium,
    error_matrix,
    gamma_sweep,
    grammian,
    intersect,
    is_stable,
    is_subset,
    load_run_config,
    max_invariant_set,
    min_energy_sequence,
    minimize,
    params_fragment,
    parse_run_config,
    pi_aw_step,
    polyhedron_from_text,
    polyhedron_to_text,
    pre_image,
    prediction_rms,
    read_calibration_csv,
    read_trajectory_csv,
    run_closed_loop,
    safe_set,
    sat,
    set_equal,
    siso_map,
    smc_step,
    step,
    sweep_csv,
    telemetry_csv,
    u_max,
    w_set,
    write_sweep_csv,
    write_telemetry_csv,
)

__version__ = "0.1.0"
