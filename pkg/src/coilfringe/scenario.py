"""Experiment scenario configuration.

Scenarios are JSON files with a versioned schema. Unknown keys are
rejected to catch typos; omitted fields fall back to the reference
defaults below (copper-foil Thomson arrangement inside the two-layer
annular coil):

    a = 2.55e-10 m, D = 0.1 m, U = 30 kV, beam width = 1 mm,
    R1 = 0.1 m, R2 = 0.12 m, L = 12 m, turn density n = 2000 /m,
    2 layers with opposite helicity, 1 mm wire, I = 0 A.
"""

from dataclasses import dataclass
import json
import math

from .errors import ScenarioError
from .ideal_field import AnnularCoilIdeal
from .diffraction import BeamSpec, GratingScreenSpec
from .winding import CoilWindingSpec

SCHEMA_VERSION = 1

# Factor demanded of each ">>" setup relation before it is flagged ok.
DEFAULT_GEOMETRY_FACTOR = 10.0

PAPER_DEFAULTS = {
    "schema_version": SCHEMA_VERSION,
    "coil": {
        "type": "winding",
        "R1_m": 0.1,
        "R2_m": 0.12,
        "L_m": 12.0,
        "turn_density_per_m": 2000.0,
        "layers": 2,
        "helicity_sign_per_layer": [1, -1],
        "wire_diameter_m": 1e-3,
    },
    "beam": {
        "U_V": 30e3,
        "beam_width_m": 1e-3,
    },
    "grating_screen": {
        "a_m": 2.55e-10,
        "D_m": 0.1,
    },
    "current_A": 0.0,
}


@dataclass(frozen=True)
class GeometryChecks:
    """Setup-scale separations; each factor should exceed the threshold."""

    L_over_D: float
    D_over_phi: float
    phi_over_a: float
    threshold: float

    @property
    def all_ok(self):
        return (
            self.L_over_D >= self.threshold
            and self.D_over_phi >= self.threshold
            and self.phi_over_a >= self.threshold
        )


@dataclass(frozen=True)
class ExperimentScenario:
    coil: object  # CoilWindingSpec or AnnularCoilIdeal
    beam: BeamSpec
    grating_screen: GratingScreenSpec
    I: float
    geometry: GeometryChecks


@dataclass(frozen=True)
class SweepSpec:
    """Sweep of current or voltage; the rest of the scenario is fixed."""

    variable: str  # "current" or "voltage"
    start: float
    stop: float
    step: float
    scenario: ExperimentScenario

    def __post_init__(self):
        if self.variable not in ("current", "voltage"):
            raise ScenarioError(f"unknown sweep variable {self.variable!r}")
        if self.step <= 0:
            raise ScenarioError("sweep step must be positive")
        if self.start > self.stop:
            raise ScenarioError("sweep start must not exceed stop")
        if len(self.values()) < 2:
            raise ScenarioError("sweep must contain at least 2 samples")

    def values(self):
        count = int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1
        return [self.start + k * self.step for k in range(count)]


def _merge_defaults(data):
    merged = {}
    for key, default in PAPER_DEFAULTS.items():
        if isinstance(default, dict):
            sub = dict(default)
            user = data.get(key, {})
            if not isinstance(user, dict):
                raise ScenarioError(f"field {key!r} must be an object")
            for k, v in user.items():
                if k not in default and not (key == "coil" and k in _IDEAL_COIL_KEYS):
                    raise ScenarioError(f"unknown key {key}.{k!r}")
                sub[k] = v
            merged[key] = sub
        else:
            merged[key] = data.get(key, default)
    for key in data:
        if key not in PAPER_DEFAULTS:
            raise ScenarioError(f"unknown top-level key {key!r}")
    return merged


_IDEAL_COIL_KEYS = {"N_turns"}


def _build_coil(coil_data, current):
    ctype = coil_data["type"]
    if ctype == "winding":
        return CoilWindingSpec(
            R1=float(coil_data["R1_m"]),
            R2=float(coil_data["R2_m"]),
            L=float(coil_data["L_m"]),
            turn_density=float(coil_data["turn_density_per_m"]),
            layers=int(coil_data["layers"]),
            helicity_sign_per_layer=tuple(coil_data["helicity_sign_per_layer"]),
            wire_diameter=float(coil_data["wire_diameter_m"]),
            I=current,
        )
    if ctype == "ideal":
        if "N_turns" in coil_data:
            n_turns = int(coil_data["N_turns"])
        else:
            n_turns = round(
                2 * math.pi * float(coil_data["R1_m"]) * float(coil_data["turn_density_per_m"])
            )
        return AnnularCoilIdeal(
            R1=float(coil_data["R1_m"]),
            R2=float(coil_data["R2_m"]),
            N=n_turns,
            I=current,
        )
    raise ScenarioError(f"unknown coil type {ctype!r}")


def scenario_from_dict(data, geometry_factor=DEFAULT_GEOMETRY_FACTOR):
    """Build a validated ExperimentScenario from a plain dict."""
    if not isinstance(data, dict):
        raise ScenarioError("scenario must be a JSON object")
    version = data.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise ScenarioError(f"unsupported schema_version {version}")
    merged = _merge_defaults(data)
    current = float(merged["current_A"])
    try:
        coil = _build_coil(merged["coil"], current)
        beam = BeamSpec(
            U=float(merged["beam"]["U_V"]),
            beam_width_phi=float(merged["beam"]["beam_width_m"]),
        )
        gs = GratingScreenSpec(
            a=float(merged["grating_screen"]["a_m"]),
            D=float(merged["grating_screen"]["D_m"]),
        )
    except ScenarioError:
        raise
    except ValueError as exc:
        raise ScenarioError(str(exc)) from exc
    length = coil.L if isinstance(coil, CoilWindingSpec) else math.inf
    geometry = GeometryChecks(
        L_over_D=length / gs.D,
        D_over_phi=gs.D / beam.beam_width_phi,
        phi_over_a=beam.beam_width_phi / gs.a,
        threshold=geometry_factor,
    )
    return ExperimentScenario(
        coil=coil, beam=beam, grating_screen=gs, I=current, geometry=geometry
    )


def load_scenario(path, geometry_factor=DEFAULT_GEOMETRY_FACTOR):
    """Load and validate a scenario file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ScenarioError(
            f"scenario parse error in {path} at line {exc.lineno}: {exc.msg}"
        ) from exc
    return scenario_from_dict(data, geometry_factor)


def paper_scenario(current=0.0, geometry_factor=DEFAULT_GEOMETRY_FACTOR):
    """The built-in reference scenario, optionally with a current."""
    data = {"current_A": current}
    return scenario_from_dict(data, geometry_factor)


def ideal_coil_of(scenario):
    """The ideal annular coil equivalent of the scenario's coil."""
    coil = scenario.coil
    if isinstance(coil, AnnularCoilIdeal):
        return coil
    return coil.ideal_equivalent()
