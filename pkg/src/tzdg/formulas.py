"""Closed-form predictions for the total zero-divisor graph of Z_m (and connectivity of products).

Every predictor takes a factored modulus, never a graph, so evaluating it costs O(n).
Out-of-scope inputs raise ``DomainError`` (``EmptyGraphError`` when Z_m is a field).
"""

from __future__ import annotations

from dataclasses import dataclass, asdict
from math import prod
from typing import Union

from .arith import FactoredModulus, factor
from .errors import DomainError, EmptyGraphError
from .ring import (
    Ring,
    ann_of_ideal,
    associated_primes,
    maximal_associated_primes,
    maximal_ideal,
    nilindex,
)

DISCONNECTED = "disconnected"
DIAM1, DIAM2, DIAM3 = "diam1", "diam2", "diam3"
SINGLE_VERTEX = "undefined"

P1, P2, P3 = "P1", "P2", "P3"
STAR_PLUS_ISOLATED = "star_plus_isolated"
EDGELESS = "edgeless"

CONNECTED_FORMULA = "connected_formula"
DISCONNECTED_FORMULA = "disconnected_formula"
OUT_OF_SCOPE = "out_of_formula_scope"


def _fm(m: Union[int, FactoredModulus]) -> FactoredModulus:
    return m if isinstance(m, FactoredModulus) else factor(m)


def _require_nonempty(fm: FactoredModulus):
    if fm.is_prime:
        raise EmptyGraphError(f"Z_{fm.m} is a field: the graph has no vertices")


def _require_connected(fm: FactoredModulus):
    _require_nonempty(fm)
    if not predict_connected(fm):
        raise DomainError(f"the graph of Z_{fm.m} is disconnected")


def vertex_count(fm) -> int:
    fm = _fm(fm)
    return fm.m - fm.profile.phi - 1


def is_complete_case(fm) -> bool:
    """m = p^2: the graph is K_{p-1}."""
    fm = _fm(fm)
    return fm.n == 1 and fm.exponents[0] == 2


# -- connectivity and diameter -------------------------------------------------


def predict_connected(fm) -> bool:
    """All exponents >= 2. A prime modulus gives the empty graph and reports False."""
    fm = _fm(fm)
    if fm.is_prime:
        return False
    return all(e >= 2 for e in fm.exponents)


def predict_connected_artinian(ring: Ring) -> bool:
    """Connected iff P and ann(P) meet nontrivially for every maximal associated prime P."""
    if int(ring.zero_divisor_mask.sum()) == 1:
        raise EmptyGraphError(f"Z_{ring} has no nonzero zero-divisors")
    for P in maximal_associated_primes(ring, associated_primes(ring)):
        if len(P.intersection(ann_of_ideal(P))) == 1:
            return False
    return True


def predict_diameter(spec: Union[int, FactoredModulus, Ring]) -> str:
    if isinstance(spec, Ring):
        return _predict_diameter_ring(spec)
    fm = _fm(spec)
    _require_connected(fm)
    if fm.n >= 2:
        return DIAM3
    if fm.exponents[0] >= 3:
        return DIAM2
    # m = p^2; Z_4 leaves a single vertex
    return SINGLE_VERTEX if fm.m == 4 else DIAM1


def _predict_diameter_ring(ring: Ring) -> str:
    if not predict_connected_artinian(ring):
        raise DomainError(f"the graph of Z_{ring} is disconnected")
    if not ring.is_local:
        return DIAM3
    m_ideal = maximal_ideal(ring)
    if len(m_ideal) == 2:
        return SINGLE_VERTEX
    return DIAM2 if nilindex(ring, m_ideal) >= 3 else DIAM1


# -- girth and acyclic shapes ---------------------------------------------------


def predict_girth_and_shape(fm):
    """(girth, shape): girth is 3 or "acyclic"; shape names the acyclic family."""
    fm = _fm(fm)
    _require_nonempty(fm)
    m = fm.m
    if m == 4:
        return "acyclic", P1
    if m == 9:
        return "acyclic", P2
    if m == 8:
        return "acyclic", P3
    if fm.n == 2 and fm.exponents == (1, 1):
        return "acyclic", EDGELESS
    if fm.n == 2 and fm.primes[0] == 2 and fm.exponents == (2, 1):
        return "acyclic", STAR_PLUS_ISOLATED
    return 3, None


def acyclic_shape_parameters(fm) -> dict:
    """Sizes of the acyclic family members: star leaves / isolated count / path length."""
    fm = _fm(fm)
    _, shape = predict_girth_and_shape(fm)
    if shape in (P1, P2, P3):
        return {"path_vertices": int(shape[1])}
    if shape == STAR_PLUS_ISOLATED:
        p = fm.primes[1]
        return {"star_leaves": 2 * p - 2, "isolated": 2}
    if shape == EDGELESS:
        return {"isolated": fm.primes[0] + fm.primes[1] - 2}
    raise DomainError(f"the graph of Z_{fm.m} is not acyclic")


# -- degrees -----------------------------------------------------------------------


def predict_degrees(fm) -> tuple[int, int]:
    """(max degree, min degree) of a connected graph."""
    fm = _fm(fm)
    _require_connected(fm)
    if is_complete_case(fm):
        return fm.p1 - 2, fm.p1 - 2
    return fm.m // fm.p1 - 2, fm.p1 - 1


def recover_modulus(max_degree: int, min_degree: int) -> int:
    if not max_degree > min_degree > 0:
        raise DomainError("recovery needs max degree > min degree > 0 (non-complete regime)")
    return (max_degree + 2) * (min_degree + 1)


def feasible_degree_pair(x: int, y: int) -> bool:
    """Whether (x, y) can be (max degree, min degree) of a connected non-complete graph."""
    if not x > y > 0:
        return False
    if factor(x + 2).p1 != y + 1:
        return False
    fm = factor((x + 2) * (y + 1))
    return all(e >= 2 for e in fm.exponents)


# -- colourings ----------------------------------------------------------------------


def half_exponent_clique_size(fm) -> int:
    fm = _fm(fm)
    return prod(p ** (e // 2) for p, e in fm.items()) - 1


def predict_chromatic(fm):
    """(chi, case).

    The expression prod p_i^floor(m_i/2) + o(m) - 1 is used whenever some exponent is
    at least 2, connected or not. Squarefree moduli are reported out of scope and left
    to the exact search.
    """
    fm = _fm(fm)
    _require_nonempty(fm)
    value = half_exponent_clique_size(fm) + fm.profile.odd_exponent_count
    if predict_connected(fm):
        return value, CONNECTED_FORMULA
    if any(e >= 2 for e in fm.exponents):
        return value, DISCONNECTED_FORMULA
    return None, OUT_OF_SCOPE


def printed_disconnected_chromatic(fm) -> int:
    """prod over exponents >= 2 of ceil(m_i/2), plus the number of exponent-1 primes.

    This alternative closed form for disconnected graphs undercounts (Z_18 contains the
    triangle 6, 9, 12 but the form gives 2). Kept only so reports can show the gap.
    """
    fm = _fm(fm)
    big = [e for e in fm.exponents if e >= 2]
    return prod((e + 1) // 2 for e in big) + (fm.n - len(big))


def predict_chromatic_index(fm) -> int:
    fm = _fm(fm)
    _require_connected(fm)
    if is_complete_case(fm):
        raise DomainError(f"the graph of Z_{fm.m} is complete; chromatic index not predicted")
    return fm.m // fm.p1 - 2


# -- cycles, domination, metric dimension ---------------------------------------------


def predict_hamiltonian(fm) -> bool:
    fm = _fm(fm)
    return fm.n == 1 and fm.exponents[0] == 2 and fm.p1 >= 5


def predict_eulerian(fm) -> bool:
    return False


def predict_domination(fm) -> int:
    fm = _fm(fm)
    _require_connected(fm)
    return fm.n


def predict_metric_dimension(fm) -> int:
    fm = _fm(fm)
    _require_connected(fm)
    base = fm.m - fm.profile.phi - fm.profile.tau + 1
    return base + fm.n if fm.n >= 2 else base


def predict_zdg_metric_dimension(fm) -> int:
    """Metric dimension of the classical zero-divisor graph of Z_m."""
    fm = _fm(fm)
    _require_nonempty(fm)
    return fm.m - fm.profile.phi - fm.profile.tau + 1


# -- aggregate -------------------------------------------------------------------------


@dataclass(frozen=True)
class Prediction:
    m: int
    connected: bool
    diameter_case: str
    girth: Union[int, str]
    acyclic_shape: str | None
    delta_max: int | None
    delta_min: int | None
    chromatic: int | None
    chromatic_case: str
    chromatic_index: int | None
    hamiltonian: bool
    eulerian: bool
    domination: int | None
    metric_dimension: int | None
    recovered_m: int | None

    def as_dict(self):
        return asdict(self)


def predict(fm) -> Prediction:
    fm = _fm(fm)
    _require_nonempty(fm)
    connected = predict_connected(fm)
    girth, shape = predict_girth_and_shape(fm)
    chi, chi_case = predict_chromatic(fm)
    dmax = dmin = chi_index = dom = dim = rec = None
    diam = DISCONNECTED
    if connected:
        diam = predict_diameter(fm)
        dmax, dmin = predict_degrees(fm)
        dom = predict_domination(fm)
        dim = predict_metric_dimension(fm)
        if not is_complete_case(fm):
            chi_index = predict_chromatic_index(fm)
            rec = recover_modulus(dmax, dmin)
    return Prediction(
        m=fm.m,
        connected=connected,
        diameter_case=diam,
        girth=girth,
        acyclic_shape=shape,
        delta_max=dmax,
        delta_min=dmin,
        chromatic=chi,
        chromatic_case=chi_case,
        chromatic_index=chi_index,
        hamiltonian=predict_hamiltonian(fm),
        eulerian=predict_eulerian(fm),
        domination=dom,
        metric_dimension=dim,
        recovered_m=rec,
    )
