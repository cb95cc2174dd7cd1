"""
Run orchestration: build period maps, fan out per (curve, M) and collect
reports in a deterministic order.
"""

import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from ..core.constants import NORM_RELATION_MAX_MODULUS, NORM_RELATION_PRIMES, PINNING_CURVE
from ..core.errors import StickelError
from ..core.formatting import format_duration
from ..core.logging import debug_log
from ..core.progress import ProgressTracker
from ..curve import CurveData, root_number_from_reduction
from ..groupring import OrdResult, characters, galois_group, is_primitive, ring_from_name
from ..lseries import (
    DirichletCharacter,
    LSeriesContext,
    SpecialValueReport,
    check_special_values,
    l_value_twisted,
)
from ..maninsym import RationalPeriodMap, build_space, dump_period_map, fricke_eigenvalue, period_map_for
from ..stickelberger import (
    ORIENTATIONS,
    OrientationRegistry,
    RelationReport,
    ThetaElement,
    Verdict,
    check_character_determination,
    check_functional_equation,
    check_mazur_tate,
    check_norm_bad,
    check_norm_coprime,
    check_norm_dividing,
    check_norm_layer,
    check_parity,
    check_vanishing_bound,
    pin_default_orientations,
    theta,
)
from .config import RunConfig
from .fixtures import parse_curve_file, select_curves

# Checks that depend on pinned orientations
ORIENTED_CHECKS = ("norm", "funceq")


@dataclass
class ModulusResult:
    """Everything computed for one (curve, M)."""
    curve: CurveData
    modulus: int
    theta: Optional[ThetaElement] = None
    ord: Optional[OrdResult] = None
    reports: list[RelationReport] = field(default_factory=list)
    error: Optional[str] = None

    @property
    def hard_failures(self) -> int:
        return sum(1 for r in self.reports if r.hard_failure) + (1 if self.error else 0)

    @property
    def advisory_failures(self) -> int:
        return sum(1 for r in self.reports if not r.hard and r.verdict is Verdict.FAILED)

    def to_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "theta": self.theta.dump() if self.theta else None,
            "s_m": sorted(self.theta.s_m) if self.theta else None,
            "ord": self.ord.to_dict() if self.ord else None,
            "reports": [r.to_dict() for r in self.reports],
            "error": self.error,
        }


@dataclass
class LValueRow:
    modulus: int
    char_id: str
    value: complex


@dataclass
class CurveResult:
    """Per-curve data plus its per-modulus results."""
    curve: CurveData
    period_map: Optional[RationalPeriodMap] = None
    eps: Optional[int] = None
    reports: list[RelationReport] = field(default_factory=list)
    moduli: list[ModulusResult] = field(default_factory=list)
    special: Optional[SpecialValueReport] = None
    lvalues: list[LValueRow] = field(default_factory=list)
    space_dump: Optional[str] = None
    error: Optional[str] = None

    @property
    def hard_failures(self) -> int:
        count = sum(1 for r in self.reports if r.hard_failure) + (1 if self.error else 0)
        count += sum(m.hard_failures for m in self.moduli)
        if self.special is not None and not self.special.passed:
            count += 1
        return count

    @property
    def advisory_failures(self) -> int:
        return sum(m.advisory_failures for m in self.moduli)

    def to_dict(self) -> dict:
        return {
            "curve": self.curve.name,
            "coefficients": list(self.curve.coefficients),
            "conductor": self.curve.conductor,
            "rank": self.curve.rank_hint,
            "eps_N": self.eps,
            "period_map": {
                "fingerprint": self.period_map.fingerprint,
                "normalization": self.period_map.normalization_id,
                "primes_used": list(self.period_map.primes_used),
            } if self.period_map else None,
            "reports": [r.to_dict() for r in self.reports],
            "moduli": [m.to_dict() for m in self.moduli],
            "special": self.special.to_dict() if self.special else None,
            "lvalues": [
                {"modulus": r.modulus, "char_id": r.char_id, "value": [r.value.real, r.value.imag]}
                for r in self.lvalues
            ],
            "error": self.error,
        }


@dataclass
class RunResult:
    config: RunConfig
    curves: list[CurveResult] = field(default_factory=list)
    pinning: list[RelationReport] = field(default_factory=list)
    orientations: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def hard_failures(self) -> int:
        return sum(c.hard_failures for c in self.curves) + sum(1 for r in self.pinning if r.hard_failure)

    @property
    def advisory_failures(self) -> int:
        return sum(c.advisory_failures for c in self.curves)

    @property
    def exit_code(self) -> int:
        return 1 if self.hard_failures else 0

    def to_dict(self) -> dict:
        return {
            "verb": self.config.verb,
            "checks": list(self.config.checks),
            "moduli": list(self.config.moduli),
            "orientations": self.orientations,
            "pinning": [r.to_dict() for r in self.pinning],
            "curves": [c.to_dict() for c in self.curves],
            "hard_failures": self.hard_failures,
            "advisory_failures": self.advisory_failures,
        }


class Runner:
    """Executes one RunConfig."""

    def __init__(self, config: RunConfig, registry: OrientationRegistry = None):
        self.config = config
        self.registry = registry or ORIENTATIONS

    def _period_map(self, curve: CurveData) -> RationalPeriodMap:
        cfg = self.config
        return period_map_for(
            curve,
            prime_bound=cfg.eigen_prime_bound,
            point_bound=cfg.point_bound,
            cache_dir=cfg.cache_dir,
            use_cache=cfg.use_cache,
        )

    def _pin(self) -> list[RelationReport]:
        if not any(self.config.wants(c) for c in ORIENTED_CHECKS):
            return []
        label, coeffs, conductor = PINNING_CURVE
        curve = CurveData(*coeffs, conductor=conductor, rank_hint=0, label=label)
        return pin_default_orientations(self._period_map(curve), self.registry, self.config.point_bound)

    # -- per (curve, M) ---------------------------------------------------------

    def _norm_reports(self, curve: CurveData, pm: RationalPeriodMap, M: int) -> list[RelationReport]:
        N = curve.conductor
        bound = self.config.point_bound
        reports = []
        for ell in NORM_RELATION_PRIMES:
            if M * ell > NORM_RELATION_MAX_MODULUS:
                continue
            if M % ell:
                reports.append(check_norm_coprime(curve, pm, M, ell, self.registry, bound))
                if N % ell and M * ell * ell <= NORM_RELATION_MAX_MODULUS:
                    reports.append(check_norm_dividing(curve, pm, M, ell, 1, self.registry, bound))
            elif N % ell:
                reports.append(check_norm_layer(curve, pm, M, ell, bound))
            else:
                reports.append(check_norm_bad(curve, pm, M, ell, bound))
        return reports

    def _run_modulus(self, curve: CurveData, pm: RationalPeriodMap, eps: int, M: int) -> ModulusResult:
        cfg = self.config
        result = ModulusResult(curve, M)
        try:
            th = theta(curve, pm, M, cfg.point_bound)
            result.theta = th
            if cfg.wants("theta"):
                result.reports.append(check_character_determination(th))
            if cfg.wants("ord"):
                result.ord = th.ord(cfg.r_max)
                result.reports.append(check_vanishing_bound(th))
            if cfg.wants("norm"):
                result.reports.extend(self._norm_reports(curve, pm, M))
            if cfg.wants("funceq"):
                if gcd(M, curve.conductor) == 1:
                    result.reports.append(check_functional_equation(th, eps, self.registry))
                else:
                    result.reports.append(RelationReport(
                        "functional-equation", Verdict.NOT_APPLICABLE,
                        detail=f"gcd(M, N) = {gcd(M, curve.conductor)}", params={"modulus": M},
                    ))
            if cfg.wants("parity"):
                result.reports.append(check_parity(th, eps, ring_from_name(cfg.parity_ring), cfg.r_max))
            if cfg.wants("mazur-tate"):
                result.reports.append(check_mazur_tate(th, curve.rank_hint))
        except StickelError as e:
            result.error = f"{type(e).__name__}: {e}"
            debug_log(f"{curve.name} M={M} failed: {result.error}")
        return result

    # -- per curve --------------------------------------------------------------

    def _prepare_curve(self, curve: CurveData) -> CurveResult:
        result = CurveResult(curve)
        try:
            pm = self._period_map(curve)
            result.period_map = pm
            result.eps = fricke_eigenvalue(pm)
            w = root_number_from_reduction(curve, self.config.point_bound)
            if w is not None:
                holds = w == -result.eps
                result.reports.append(RelationReport(
                    "root-number",
                    Verdict.EXACT if holds else Verdict.FAILED,
                    detail=f"w from reduction {w:+d}, -eps_N {-result.eps:+d}",
                    params={"w": w, "eps": result.eps},
                ))
        except StickelError as e:
            result.error = f"{type(e).__name__}: {e}"
        return result

    def _special(self, result: CurveResult):
        cfg = self.config
        N = result.curve.conductor
        moduli = [M for M in cfg.moduli if gcd(M, N) == 1]
        if cfg.verb != "special":
            moduli = [M for M in moduli if M <= cfg.special_max_modulus]
        ctx = LSeriesContext(
            result.curve, cfg.digits, root_number=-result.eps,
            point_bound=cfg.point_bound, cache_dir=cfg.cache_dir, use_cache=cfg.use_cache,
        )
        result.special = check_special_values(result.curve, result.period_map, moduli, ctx)

    def _lvalues(self, result: CurveResult):
        cfg = self.config
        N = result.curve.conductor
        ctx = LSeriesContext(
            result.curve, cfg.digits, root_number=-result.eps,
            point_bound=cfg.point_bound, cache_dir=cfg.cache_dir, use_cache=cfg.use_cache,
        )
        result.lvalues.append(LValueRow(1, "trivial", complex(l_value_twisted(ctx, DirichletCharacter.trivial()))))
        for M in cfg.moduli:
            if M < 3 or gcd(M, N) != 1:
                continue
            for chi in characters(galois_group(M)):
                if is_primitive(chi):
                    dchi = DirichletCharacter.from_group_character(chi)
                    result.lvalues.append(LValueRow(M, chi.label, complex(l_value_twisted(ctx, dchi))))

    def _dump_space(self, result: CurveResult):
        space = build_space(result.curve.conductor)
        head = (
            f"# level {space.level}: {len(space.p1)} generators, "
            f"dim {space.full.dimension}, plus dim {space.plus.dimension}\n"
        )
        result.space_dump = head + dump_period_map(result.period_map)

    # -- entry point -----------------------------------------------------------------

    def run(self) -> RunResult:
        cfg = self.config
        start = time.time()
        curves = select_curves(parse_curve_file(cfg.curves_path), cfg.curve_label)
        out = RunResult(cfg)
        out.pinning = self._pin()

        out.curves = [self._prepare_curve(c) for c in curves]
        ready = [c for c in out.curves if c.period_map is not None]

        if cfg.verb in ("theta", "ord", "verify"):
            self._fan_out(ready)
        for result in ready:
            try:
                if cfg.verb == "special" or (cfg.verb == "verify" and cfg.wants("special")):
                    self._special(result)
                elif cfg.verb == "lvalue":
                    self._lvalues(result)
                elif cfg.verb == "dump-space":
                    self._dump_space(result)
            except StickelError as e:
                result.error = f"{type(e).__name__}: {e}"

        out.orientations = self.registry.snapshot()
        out.elapsed = time.time() - start
        debug_log(
            f"{cfg.verb}: {len(curves)} curve(s), {out.hard_failures} hard failure(s), "
            f"{out.advisory_failures} advisory, {format_duration(out.elapsed)}"
        )
        return out

    def _fan_out(self, ready: list[CurveResult]):
        cfg = self.config
        items = [(ci, M) for ci in range(len(ready)) for M in cfg.moduli]
        collected: dict[tuple[int, int], ModulusResult] = {}
        progress = ProgressTracker(len(items), desc=cfg.verb, enabled=cfg.show_progress)
        try:
            with ThreadPoolExecutor(max_workers=cfg.workers) as executor:
                futures = {
                    executor.submit(
                        self._run_modulus, ready[ci].curve, ready[ci].period_map, ready[ci].eps, M
                    ): (ci, M)
                    for ci, M in items
                }
                for future in as_completed(futures):
                    key = futures[future]
                    collected[key] = future.result()
                    progress.advance(f"{ready[key[0]].curve.name} M={key[1]}")
        finally:
            progress.close()
        for ci, result in enumerate(ready):
            result.moduli = [collected[(ci, M)] for M in cfg.moduli]


def run(config: RunConfig, registry: OrientationRegistry = None) -> RunResult:
    """Execute config and return the collected results."""
    return Runner(config, registry).run()
