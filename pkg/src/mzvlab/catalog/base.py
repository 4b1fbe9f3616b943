"""
Registry and runner for machine-checkable identities.

An `Identity` names its parameters, a left and a right side, a fixed parameter
grid and a default tolerance. `verify` evaluates both sides for one parameter
set and returns a `VerificationReport`; `run_suite` does that over every grid
point of every matching identity and never raises for a single failing check.

A check passes when |lhs - rhs| <= max(tolerance, lhs.bound + rhs.bound).
Conjecture entries are evaluated the same way but are left out of the
pass/fail verdict of a suite.
"""

from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fnmatch import fnmatchcase
from fractions import Fraction
from importlib import import_module
from logging import getLogger
from multiprocessing import Pool
from typing import Any

from mpmath import mp, mpf

from mzvlab.constants import REPORT_DIGITS, REPORT_FIELDS, STATUSES
from mzvlab.core import DomainError, MZVError, UnknownIdentityError
from mzvlab.precision import PrecisionConfig, ValueWithError, as_mpf, parse_point
from mzvlab.times import Timer

logger = getLogger(__name__)

PARAM_KINDS = ("int", "vector", "point")
Params = dict[str, Any]
Side = Callable[[Params, PrecisionConfig], Any]


@dataclass(frozen=True, slots=True)
class Param:
    """named parameter with an inclusive range on its value or its entries"""

    name: str
    kind: str = "int"
    low: int = None
    high: int = None

    def __post_init__(self) -> None:
        if self.kind not in PARAM_KINDS:
            raise DomainError(f"parameter kind must be one of {PARAM_KINDS}")

    def parse(self, value: Any) -> Any:
        """coerces CLI text or python values to the parameter's type"""
        try:
            if self.kind == "int":
                return int(value)
            if self.kind == "point":
                return parse_point(value)
            if isinstance(value, str):
                value = value.strip().strip("()")
                return tuple(int(x) for x in value.split(",") if x.strip())
            if isinstance(value, int):
                return (value,)
            return tuple(int(x) for x in value)
        except (TypeError, ValueError) as e:
            raise DomainError(f"{self.name}={value!r} is not a valid {self.kind}") from e

    def check(self, value: Any) -> None:
        """raises DomainError naming the violated range"""
        entries = value if self.kind == "vector" else (value,)
        if self.kind == "vector" and not entries:
            raise DomainError(f"{self.name} must be nonempty")
        for entry in entries:
            if self.low is not None and entry < self.low:
                raise DomainError(f"{self.name} needs entries >= {self.low}, got {value}")
            if self.high is not None and entry > self.high:
                raise DomainError(f"{self.name} needs entries <= {self.high}, got {value}")


@dataclass(frozen=True)
class Identity:
    """one catalog entry"""

    id: str
    anchor: str
    params: tuple[Param, ...]
    lhs: Side
    rhs: Side
    grid: tuple[Params, ...]
    default_tolerance: str
    status: str = "theorem"
    constraint: Callable[[Params], str | None] = field(default=None, repr=False)

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise DomainError(f"status must be one of {STATUSES}, got {self.status}")
        if not self.grid:
            raise DomainError(f"{self.id} needs a nonempty default grid")

    @property
    def conjecture(self) -> bool:
        return self.status == "conjecture"

    def resolve(self, params: Mapping[str, Any] = None) -> Params:
        """parses, range-checks and returns params; None means the first grid point"""
        if params is None:
            params = self.grid[0]
        known = {p.name: p for p in self.params}
        unknown = set(params) - set(known)
        if unknown:
            raise DomainError(f"{self.id} has no parameter(s) {sorted(unknown)}")
        missing = set(known) - set(params)
        if missing:
            raise DomainError(f"{self.id} is missing parameter(s) {sorted(missing)}")
        resolved = {}
        for name, param in known.items():
            value = param.parse(params[name])
            param.check(value)
            resolved[name] = value
        if self.constraint is not None and (problem := self.constraint(resolved)):
            raise DomainError(f"{self.id}: {problem}")
        return resolved

    def describe(self) -> dict[str, str]:
        return {
            "id": self.id,
            "status": self.status,
            "tolerance": self.default_tolerance,
            "params": " ".join(p.name for p in self.params),
            "grid": str(len(self.grid)),
            "anchor": self.anchor,
        }


CATALOG: dict[str, Identity] = {}


def register(identity: Identity) -> Identity:
    """adds an identity to the catalog, ids are unique"""
    if identity.id in CATALOG:
        raise DomainError(f"identity {identity.id} is already registered")
    for point in identity.grid:
        identity.resolve(point)
    CATALOG[identity.id] = identity
    return identity


def ensure_loaded() -> None:
    """imports the family modules, which register themselves"""
    import_module("mzvlab.catalog")


def get_identity(identity_id: str) -> Identity:
    ensure_loaded()
    try:
        return CATALOG[identity_id]
    except KeyError as e:
        raise UnknownIdentityError(identity_id) from e


def _matches(identity_id: str, pattern: str) -> bool:
    if any(c in pattern for c in "*?["):
        return fnmatchcase(identity_id, pattern)
    return identity_id.startswith(pattern)


def list_identities(pattern: str = None) -> list[Identity]:
    """returns the identities whose id matches pattern, sorted by id"""
    ensure_loaded()
    return [
        CATALOG[key]
        for key in sorted(CATALOG)
        if not pattern or _matches(key, pattern)
    ]


def format_param(value: Any) -> str:
    if isinstance(value, tuple):
        return "(" + ",".join(str(x) for x in value) + ")"
    return str(value)


def format_params(params: Params) -> str:
    return " ".join(f"{k}={format_param(v)}" for k, v in params.items())


def _as_value(value: Any) -> ValueWithError:
    if isinstance(value, ValueWithError):
        return value
    if isinstance(value, (int, Fraction)):
        return ValueWithError.exact(value)
    return ValueWithError(as_mpf(value))


@dataclass(frozen=True, slots=True)
class VerificationReport:
    """outcome of one check"""

    id: str
    params: Params
    lhs: mpf
    rhs: mpf
    abs_diff: mpf
    tolerance: mpf
    bound: mpf
    passed: bool
    terms_used: int
    seconds: float
    status: str = "theorem"
    bound_kind: str = "rigorous"
    error: str = None

    @property
    def conjecture(self) -> bool:
        return self.status == "conjecture"

    def as_dict(self, digits: int = REPORT_DIGITS) -> dict[str, Any]:
        """report schema record, numbers as decimal strings"""

        def text(x: mpf, n: int = digits) -> str:
            if mp.isnan(x):
                return "nan"
            return mp.nstr(x, n, strip_zeros=False)

        record = {
            "id": self.id,
            "params": format_params(self.params),
            "lhs": text(self.lhs),
            "rhs": text(self.rhs),
            "abs_diff": text(self.abs_diff, 3),
            "tolerance": text(self.tolerance, 3),
            "bound": text(self.bound, 3),
            "passed": self.passed,
            "terms_used": self.terms_used,
            "seconds": round(self.seconds, 3),
        }
        return {key: record[key] for key in REPORT_FIELDS}


def _tolerance(identity: Identity, cfg: PrecisionConfig) -> mpf:
    return mpf(cfg.tolerance if cfg.tolerance is not None else identity.default_tolerance)


def verify(
    identity_id: str, params: Mapping[str, Any] = None, cfg: PrecisionConfig = None
) -> VerificationReport:
    """evaluates both sides of one identity at one parameter set"""
    cfg = cfg or PrecisionConfig.from_env()
    identity = get_identity(identity_id)
    resolved = identity.resolve(params)
    with cfg.workdps(), Timer() as timer:
        lhs = _as_value(identity.lhs(resolved, cfg))
        rhs = _as_value(identity.rhs(resolved, cfg))
        abs_diff = abs(lhs.value - rhs.value)
        bound = lhs.bound + rhs.bound
        tolerance = _tolerance(identity, cfg)
        passed = bool(abs_diff <= max(tolerance, bound))
    kind = "rigorous" if lhs.bound_kind == rhs.bound_kind == "rigorous" else "heuristic"
    report = VerificationReport(
        id=identity.id,
        params=resolved,
        lhs=lhs.value,
        rhs=rhs.value,
        abs_diff=abs_diff,
        tolerance=tolerance,
        bound=bound,
        passed=passed,
        terms_used=lhs.terms + rhs.terms,
        seconds=timer.elapsed,
        status=identity.status,
        bound_kind=kind,
    )
    if kind == "heuristic" and bound > tolerance:
        logger.warning(
            "%s %s: heuristic bound %s exceeds tolerance %s",
            identity.id,
            format_params(resolved),
            mp.nstr(bound, 3),
            mp.nstr(tolerance, 3),
        )
    if identity.conjecture and not passed:
        logger.warning(
            "%s %s: conjecture mismatch %s",
            identity.id,
            format_params(resolved),
            mp.nstr(abs_diff, 3),
        )
    logger.info(
        "%s %s: %s (diff %s)",
        identity.id,
        format_params(resolved),
        "pass" if passed else "FAIL",
        mp.nstr(abs_diff, 3),
    )
    return report


def _failed_report(
    identity: Identity, params: Params, cfg: PrecisionConfig, error: MZVError
) -> VerificationReport:
    nan = mpf("nan")
    logger.warning("%s %s: %s", identity.id, format_params(params), error)
    return VerificationReport(
        id=identity.id,
        params=params,
        lhs=nan,
        rhs=nan,
        abs_diff=nan,
        tolerance=_tolerance(identity, cfg),
        bound=nan,
        passed=False,
        terms_used=0,
        seconds=0.0,
        status=identity.status,
        bound_kind="heuristic",
        error=f"{type(error).__name__}: {error}",
    )


def _run_task(task: tuple[str, Params, PrecisionConfig]) -> VerificationReport:
    """one grid point; module level so worker processes can unpickle it"""
    identity_id, params, cfg = task
    identity = get_identity(identity_id)
    try:
        return verify(identity_id, params, cfg)
    except MZVError as e:
        return _failed_report(identity, params, cfg, e)


def suite_tasks(
    pattern: str, cfg: PrecisionConfig
) -> list[tuple[str, Params, PrecisionConfig]]:
    return [
        (identity.id, point, cfg)
        for identity in list_identities(pattern)
        for point in identity.grid
    ]


def run_suite(
    pattern: str = None, cfg: PrecisionConfig = None, jobs: int = 1
) -> list[VerificationReport]:
    """runs every grid point of every matching identity, in catalog order"""
    cfg = cfg or PrecisionConfig.from_env()
    tasks = suite_tasks(pattern, cfg)
    timer = Timer()
    if jobs > 1 and len(tasks) > 1:
        with Pool(processes=jobs) as pool:
            reports = pool.map(_run_task, tasks)
    else:
        reports = [_run_task(task) for task in tasks]
    timer.log_perf_counter()
    summary = summarize(reports)
    logger.info(
        "suite %r: %d passed, %d failed, %d conjecture checks in %s",
        pattern or "*",
        summary["passed"],
        summary["failed"],
        summary["conjecture"],
        timer.label,
    )
    return reports


def summarize(reports: Sequence[VerificationReport]) -> dict[str, Any]:
    """pass/fail counts with conjecture checks counted apart"""
    counted = [r for r in reports if not r.conjecture]
    conjectures = [r for r in reports if r.conjecture]
    diffs = [r.abs_diff for r in conjectures if not mp.isnan(r.abs_diff)]
    return {
        "total": len(reports),
        "passed": sum(r.passed for r in counted),
        "failed": sum(not r.passed for r in counted),
        "conjecture": len(conjectures),
        "conjecture_max_diff": max(diffs) if diffs else None,
        "ok": all(r.passed for r in counted),
    }


def grid(**axes: Iterable) -> tuple[Params, ...]:
    """cartesian product of named axes in argument order"""
    points: list[Params] = [{}]
    for name, values in axes.items():
        points = [{**point, name: value} for point in points for value in values]
    return tuple(points)
