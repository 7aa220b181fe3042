"""Parameter sweeps over coil current or accelerating voltage."""

from .constants import constants
from .diffraction import de_broglie_lambda, effective_momentum, linear_response_fit
from .errors import ModelDomainError
from .export import fmt
from .ideal_field import coil_constant_K
from .scenario import ideal_coil_of

ERROR_MARKER = "model-domain-error"


def run_sweep(sweep):
    """Evaluate the diffraction model over the sweep grid.

    Returns (rows, fit) where each row is
    (swept_value, P_eff, lambda_eff_m, interfringe_m, inverse_interfringe_per_m)
    with None entries for points outside the model domain, and fit is
    (alpha, beta, r_squared) for current sweeps with enough valid points
    (None otherwise).
    """
    scen = sweep.scenario
    gs = scen.grating_screen
    K = coil_constant_K(ideal_coil_of(scen))
    h = constants().h
    rows = []
    fit_samples = []
    for v in sweep.values():
        if sweep.variable == "current":
            U, I = scen.beam.U, v
        else:
            U, I = v, scen.I
        try:
            P_eff = effective_momentum(U, K * I)
        except ModelDomainError:
            rows.append((v, None, None, None, None))
            continue
        lam = de_broglie_lambda(P_eff)
        interfringe = lam * gs.D / gs.a
        inverse = 1.0 / interfringe
        rows.append((v, P_eff, lam, interfringe, inverse))
        fit_samples.append((U, I, inverse))
    fit = None
    if sweep.variable == "current" and len(fit_samples) >= 3:
        if len({i for _, i, _ in fit_samples}) >= 2:
            fit = linear_response_fit(fit_samples)
    return rows, fit


def write_sweep_csv(path, sweep, rows):
    var_col = "I_A" if sweep.variable == "current" else "U_V"
    lines = [
        f"# sweep_variable = {sweep.variable}",
        f"# start = {fmt(sweep.start)}",
        f"# stop = {fmt(sweep.stop)}",
        f"# step = {fmt(sweep.step)}",
        f"{var_col},P_eff,lambda_eff_m,interfringe_m,inverse_interfringe_per_m",
    ]
    for row in rows:
        v, rest = row[0], row[1:]
        if rest[0] is None:
            lines.append(",".join([fmt(v)] + [ERROR_MARKER] * 4))
        else:
            lines.append(",".join([fmt(v)] + [fmt(x) for x in rest]))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
