"""Cross-validation reports: predictions vs exact oracles vs verified certificates."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

from . import certify, formulas
from .arith import factor
from .errors import DomainError, ResourceError
from .exact import (
    are_isomorphic,
    chromatic_index_exact,
    chromatic_number_exact,
    distance_matrix,
    domination_number_exact,
    exact_invariants,
    has_dominating_set_of_size,
    is_hamiltonian_exact,
    metric_dimension_exact,
    twin_classes,
)
from .graphs import (
    Graph,
    build_total_zero_divisor_graph,
    empty_graph,
    path_graph,
    star_graph,
)
from .lemmas import ring_lemma_violations
from .ring import Ring

MATCH = "match"
MISMATCH = "mismatch"
NOT_COMPUTED = "not-computed"

ORACLE = "oracle"
CERTIFICATE = "certificate"
BOUND = "bound"


@dataclass(frozen=True)
class Budgets:
    chromatic_vertices: int = 64
    chromatic_index_edges: int = 400
    hamiltonian_vertices: int = 40
    domination_subsets: int = 1_000_000
    metric_candidates: int = 1_000_000
    search_nodes: int = 2_000_000
    ring_elements: int = 10_000

    def __post_init__(self):
        for name, value in asdict(self).items():
            if value <= 0:
                raise DomainError(f"budget {name} must be positive, got {value}")


@dataclass(frozen=True)
class SweepConfig:
    m_from: int
    m_to: int
    budgets: Budgets = Budgets()
    out: str | None = None
    jobs: int = 1

    def __post_init__(self):
        if self.m_from < 2:
            raise DomainError("sweep must start at m >= 2")
        if self.m_to < self.m_from:
            raise DomainError("sweep range is empty")
        if self.jobs < 1:
            raise DomainError("jobs must be >= 1")


@dataclass
class Check:
    invariant: str
    method: str
    predicted: Any
    observed: Any
    status: str
    reason: str = ""
    resource: bool = False  # not computed because a budget ran out


@dataclass
class InvariantReport:
    subject: str
    vertex_count: int
    edge_count: int
    exact: dict
    predicted: dict | None
    checks: list[Check] = field(default_factory=list)
    certificates: list[certify.Certificate] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def mismatches(self) -> list[Check]:
        return [c for c in self.checks if c.status == MISMATCH]

    @property
    def status(self) -> str:
        return "FAIL" if self.mismatches else "PASS"

    def find(self, invariant: str, method: str) -> Check | None:
        for c in self.checks:
            if c.invariant == invariant and c.method == method:
                return c
        return None

    def to_json(self, include_timings: bool = False) -> dict:
        out = {
            "input": self.subject,
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "exact": self.exact,
            "predicted": self.predicted,
            "agreement": [asdict(c) for c in self.checks],
            "certificates": [c.to_json() for c in self.certificates],
            "status": self.status,
        }
        if include_timings:
            out["timings"] = {k: round(v, 6) for k, v in sorted(self.timings.items())}
        return out


class _Recorder:
    def __init__(self, report: InvariantReport):
        self.report = report

    @contextmanager
    def timed(self, name: str):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.report.timings[name] = self.report.timings.get(name, 0.0) + time.perf_counter() - t0

    def compare(self, invariant, method, predicted, observed, reason=""):
        if predicted is None:
            status = NOT_COMPUTED
        else:
            status = MATCH if predicted == observed else MISMATCH
        self.report.checks.append(Check(invariant, method, predicted, observed, status, reason))

    def skipped(self, invariant, method, predicted, reason, resource=False):
        self.report.checks.append(
            Check(invariant, method, predicted, None, NOT_COMPUTED, reason, resource)
        )

    def attempt(self, invariant, method, predicted, fn: Callable[[], Any], reason=""):
        """Run an oracle; budget exhaustion becomes not-computed, never a verdict."""
        with self.timed(f"{invariant}/{method}"):
            try:
                observed = fn()
            except ResourceError as exc:
                self.skipped(invariant, method, predicted, str(exc), resource=True)
                return None
        self.compare(invariant, method, predicted, observed, reason)
        return observed

    def certificate(self, invariant, predicted, g, build: Callable[[], certify.Certificate], size=None, dist=None):
        """Build and verify a witness; its status is match only if it verifies with the predicted size."""
        with self.timed(f"{invariant}/{CERTIFICATE}"):
            cert = build()
            verdict = certify.verify_certificate(g, cert, dist=dist)
        cert.verified = verdict.ok
        cert.detail = verdict.detail
        self.report.certificates.append(cert)
        observed = (size(cert) if size else cert.size) if verdict.ok else None
        reason = "" if verdict.ok else f"certificate failed: {verdict.detail}"
        if verdict.ok:
            self.compare(invariant, CERTIFICATE, predicted, observed, reason)
        else:
            self.report.checks.append(
                Check(invariant, CERTIFICATE, predicted, None, MISMATCH, reason)
            )
        return cert


_DIAMETER_VALUE = {
    formulas.DIAM1: 1,
    formulas.DIAM2: 2,
    formulas.DIAM3: 3,
    formulas.DISCONNECTED: "infinite",
    formulas.SINGLE_VERTEX: "undefined",
}


def shape_graph(shape: str, params: dict) -> Graph:
    if shape in (formulas.P1, formulas.P2, formulas.P3):
        return path_graph(params["path_vertices"])
    if shape == formulas.STAR_PLUS_ISOLATED:
        return star_graph(params["star_leaves"], params["isolated"])
    if shape == formulas.EDGELESS:
        return empty_graph(params["isolated"])
    raise DomainError(f"unknown shape {shape!r}")


def analyze_modulus(m: int, budgets: Budgets = Budgets(), certificates: bool = True) -> InvariantReport:
    fm = factor(m)
    g = build_total_zero_divisor_graph(m)
    report = InvariantReport(f"Z_{m}", g.order, g.size, {}, None)
    rec = _Recorder(report)
    with rec.timed("exact/structure"):
        dist = distance_matrix(g) if g.order else None
        ex = exact_invariants(g, dist)
    report.exact = ex.as_dict()
    if fm.is_prime:
        rec.skipped("graph", ORACLE, None, "Z_m is a field: the graph has no vertices")
        return report
    pred = formulas.predict(fm)
    report.predicted = pred.as_dict()
    connected = pred.connected
    complete = formulas.is_complete_case(fm)

    rec.compare("connected", ORACLE, pred.connected, ex.is_connected)
    rec.compare("diameter", ORACLE, _DIAMETER_VALUE[pred.diameter_case], ex.diameter)
    rec.compare("girth", ORACLE, pred.girth, ex.girth)
    if pred.acyclic_shape:
        model = shape_graph(pred.acyclic_shape, formulas.acyclic_shape_parameters(fm))
        rec.attempt(
            "acyclic_shape",
            ORACLE,
            pred.acyclic_shape,
            lambda: pred.acyclic_shape if are_isomorphic(g, model, budgets.search_nodes) else "other",
        )
    if connected:
        rec.compare("max_degree", ORACLE, pred.delta_max, ex.max_degree)
        rec.compare("min_degree", ORACLE, pred.delta_min, ex.min_degree)
        if not complete:
            rec.compare("recovered_m", ORACLE, m, (ex.max_degree + 2) * (ex.min_degree + 1))

    # chromatic number
    chi_reason = "" if pred.chromatic is not None else formulas.OUT_OF_SCOPE
    if certificates and pred.chromatic is not None:
        rec.certificate("chromatic", pred.chromatic, g, lambda: certify.construct_coloring(fm))
        rec.certificate("chromatic", pred.chromatic, g, lambda: certify.chromatic_lower_clique(fm))
        report.checks[-1].method = BOUND
    if g.order:
        rec.attempt(
            "chromatic",
            ORACLE,
            pred.chromatic,
            lambda: chromatic_number_exact(g, budgets.chromatic_vertices, budgets.search_nodes)[0],
            chi_reason,
        )
    else:
        rec.compare("chromatic", ORACLE, pred.chromatic, 0, chi_reason)

    # chromatic index
    if connected and g.size:
        if certificates and not complete:
            rec.certificate(
                "chromatic_index", pred.chromatic_index, g, lambda: certify.construct_edge_coloring(fm, g)
            )
        rec.attempt(
            "chromatic_index",
            ORACLE,
            pred.chromatic_index,
            lambda: chromatic_index_exact(g, budgets.chromatic_index_edges, budgets.search_nodes)[0],
            "complete graph: not predicted" if complete else "",
        )

    # domination
    if connected:
        if certificates:
            rec.certificate("domination", pred.domination, g, lambda: certify.canonical_dominating_set(fm))
        # dominating sets are upward closed, so refuting size k-1 proves gamma >= k
        k = pred.domination
        rec.attempt(
            "domination",
            BOUND,
            k,
            lambda: k if not has_dominating_set_of_size(g, k - 1, budgets.domination_subsets) else k - 1,
            f"exhaustive search over {k - 1}-subsets",
        )
        rec.attempt(
            "domination",
            ORACLE,
            pred.domination,
            lambda: domination_number_exact(g, g.order, budgets.domination_subsets)[0],
        )

    # metric dimension
    if connected:
        if certificates:
            rec.certificate(
                "metric_dimension", pred.metric_dimension, g, lambda: certify.construct_resolving_set(fm), dist=dist
            )
        with rec.timed("metric_dimension/bound"):
            classes = len(twin_classes(g))
        rec.compare("metric_dimension", BOUND, pred.metric_dimension, g.order - classes)
        rec.attempt(
            "metric_dimension",
            ORACLE,
            pred.metric_dimension,
            lambda: metric_dimension_exact(g, budgets.metric_candidates, dist).dimension,
        )

    # Hamiltonicity and Eulerian tours
    if certificates and connected and not complete:
        rec.certificate(
            "hamiltonian", pred.hamiltonian, g, lambda: certify.hamiltonian_obstruction(fm), size=lambda c: False
        )
    rec.attempt(
        "hamiltonian",
        ORACLE,
        pred.hamiltonian,
        lambda: is_hamiltonian_exact(g, budgets.hamiltonian_vertices, budgets.search_nodes).hamiltonian,
    )
    rec.compare("eulerian", ORACLE, pred.eulerian, ex.is_eulerian)
    return report


def analyze_ring(ring: Ring, budgets: Budgets = Budgets(), certificates: bool = True) -> InvariantReport:
    """Full report for Z_m; connectivity, diameter and ring lemmas for genuine products."""
    if ring.is_cyclic:
        return analyze_modulus(ring.factors[0], budgets, certificates)
    ring = Ring(ring.factors, budgets.ring_elements)
    ring.check_budget()
    g = build_total_zero_divisor_graph(ring)
    report = InvariantReport(f"Z_{ring}", g.order, g.size, {}, None)
    rec = _Recorder(report)
    with rec.timed("exact/structure"):
        ex = exact_invariants(g)
    report.exact = ex.as_dict()
    if g.order == 0:
        rec.skipped("graph", ORACLE, None, "no nonzero zero-divisors")
        return report
    with rec.timed("predict"):
        connected = formulas.predict_connected_artinian(ring)
        diam = formulas.predict_diameter(ring) if connected else formulas.DISCONNECTED
    report.predicted = {"connected": connected, "diameter_case": diam}
    rec.compare("connected", ORACLE, connected, ex.is_connected)
    rec.compare("diameter", ORACLE, _DIAMETER_VALUE[diam], ex.diameter)
    with rec.timed("ring_lemmas"):
        violations = ring_lemma_violations(ring, g)
    for name, found in violations.items():
        rec.compare(name, ORACLE, [], found)
    return report


def analyze(spec, budgets: Budgets = Budgets(), certificates: bool = True) -> InvariantReport:
    """Dispatch on an int modulus, a ring spec string like '4x9', or a Ring."""
    if isinstance(spec, int):
        if spec < 2:
            raise DomainError(f"modulus must be >= 2, got {spec}")
        return analyze_modulus(spec, budgets, certificates)
    ring = spec if isinstance(spec, Ring) else Ring.parse(spec, budgets.ring_elements)
    return analyze_ring(ring, budgets, certificates)


# -- sweep rows ------------------------------------------------------------------

SWEEP_COLUMNS = [
    "m", "factorization", "V", "E",
    "connected_pred", "connected_exact",
    "diam_pred", "diam_exact",
    "girth_pred", "girth_exact",
    "Delta_pred", "Delta_exact", "delta_pred", "delta_exact",
    "chi_pred", "chi_case", "chi_cert", "chi_exact",
    "chi_index_pred", "chi_index_cert",
    "gamma_pred", "gamma_exact",
    "dim_pred", "dim_cert", "dim_exact",
    "ham_pred", "ham_exact",
    "eulerian_exact",
    "status",
]  # fmt: skip


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def sweep_row(m: int, budgets: Budgets = Budgets()) -> dict[str, str]:
    r = analyze_modulus(m, budgets)
    fm = factor(m)
    pred = r.predicted or {}

    def obs(inv, method):
        c = r.find(inv, method)
        return None if c is None else c.observed

    def prd(inv, method=ORACLE):
        c = r.find(inv, method)
        return None if c is None else c.predicted

    row = {
        "m": m,
        "factorization": str(fm),
        "V": r.vertex_count,
        "E": r.edge_count,
        "connected_pred": pred.get("connected"),
        "connected_exact": r.exact["is_connected"],
        "diam_pred": prd("diameter"),
        "diam_exact": r.exact["diameter"],
        "girth_pred": pred.get("girth"),
        "girth_exact": r.exact["girth"],
        "Delta_pred": pred.get("delta_max"),
        "Delta_exact": r.exact["max_degree"],
        "delta_pred": pred.get("delta_min"),
        "delta_exact": r.exact["min_degree"],
        "chi_pred": pred.get("chromatic"),
        "chi_case": pred.get("chromatic_case"),
        "chi_cert": obs("chromatic", CERTIFICATE),
        "chi_exact": obs("chromatic", ORACLE),
        "chi_index_pred": pred.get("chromatic_index"),
        "chi_index_cert": obs("chromatic_index", CERTIFICATE),
        "gamma_pred": pred.get("domination"),
        "gamma_exact": obs("domination", ORACLE),
        "dim_pred": pred.get("metric_dimension"),
        "dim_cert": obs("metric_dimension", CERTIFICATE),
        "dim_exact": obs("metric_dimension", ORACLE),
        "ham_pred": pred.get("hamiltonian"),
        "ham_exact": obs("hamiltonian", ORACLE),
        "eulerian_exact": r.exact["is_eulerian"],
        "status": r.status,
    }
    return {k: _cell(row[k]) for k in SWEEP_COLUMNS}


def _row_job(args):
    m, budgets = args
    return sweep_row(m, budgets)


def sweep(config: SweepConfig):
    """Rows in ascending m; work units may run in parallel but are merged in order."""
    jobs = [(m, config.budgets) for m in range(config.m_from, config.m_to + 1)]
    if config.jobs == 1:
        return [_row_job(j) for j in jobs]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=config.jobs) as pool:
        return list(pool.map(_row_job, jobs, chunksize=4))
