from math import gcd

import pytest
from hypothesis import given, strategies as st

from tzdg import certify as C
from tzdg import formulas as F
from tzdg.arith import factor
from tzdg.errors import DomainError
from tzdg.graphs import build_total_zero_divisor_graph as tzdg


def test_associated_divisor_examples():
    assert C.associated_divisor(12, 10) == (2, 5)
    assert C.associated_divisor(36, 30) == (6, 5)
    for d in factor(360).profile.divisors[:-1]:
        assert C.associated_divisor(360, d) == (d, 1)
    with pytest.raises(DomainError):
        C.associated_divisor(12, 0)


@given(st.integers(2, 2000), st.data())
def test_associated_divisor_normal_form(m, data):
    a = data.draw(st.integers(1, m - 1))
    cert = C.divisor_normal_form(m, a)
    assert C.verify_divisor_normal_form(cert)
    v, _ = C.associated_divisor(m, a)
    units = [u for u in range(1, m) if gcd(u, m) == 1]
    u = data.draw(st.sampled_from(units))
    assert C.associated_divisor(m, a * u % m)[0] == v
    assert C.associated_divisor(m, v) == (v, 1)


def test_half_exponent_clique_examples():
    assert C.half_exponent_clique(36).payload == [6, 12, 18, 24, 30]
    assert C.half_exponent_clique(16).payload == [4, 8, 12]
    assert C.half_exponent_clique(25).payload == [5, 10, 15, 20]
    with pytest.raises(DomainError):
        C.half_exponent_clique(12)


def test_coloring_examples():
    for m, k in [(360, 7), (36, 5), (12, 2)]:
        cert = C.construct_coloring(m)
        assert cert.size == k
        assert C.verify_certificate(tzdg(m), cert)
    lower = C.chromatic_lower_clique(360)
    assert lower.payload == [60, 120, 180, 240, 300, 30, 12]
    assert C.verify_certificate(tzdg(360), lower)
    with pytest.raises(DomainError):
        C.construct_coloring(30)


def test_edge_coloring_examples():
    for m, k in [(36, 16), (16, 6), (8, 2)]:
        cert = C.construct_edge_coloring(m)
        assert cert.size == k
        assert C.verify_certificate(tzdg(m), cert)
    for bad in (25, 12):
        with pytest.raises(DomainError):
            C.construct_edge_coloring(bad)


def test_dominating_set_examples():
    assert C.canonical_dominating_set(36).payload == [18, 12]
    assert C.canonical_dominating_set(8).payload == [4]
    assert C.canonical_dominating_set(900).payload == [450, 300, 180]
    assert C.verify_certificate(tzdg(900), C.canonical_dominating_set(900))
    with pytest.raises(DomainError):
        C.canonical_dominating_set(12)


def test_resolving_set_examples():
    cert = C.construct_resolving_set(36)
    assert cert.size == 18 and C.verify_certificate(tzdg(36), cert)
    assert C.construct_resolving_set(8).payload == [6]
    assert C.verify_certificate(tzdg(8), C.construct_resolving_set(8))
    assert C.construct_resolving_set(25).size == 3


def test_hamiltonian_obstruction_examples():
    cert = C.hamiltonian_obstruction(16)
    assert cert.payload == {"S": [8], "T": [2, 6, 10, 14]}
    assert C.verify_certificate(tzdg(16), cert)
    c36 = C.hamiltonian_obstruction(36)
    assert c36.payload["S"] == [18]
    assert c36.payload["T"] == [2 * s for s in range(1, 18) if gcd(s, 36) == 1]
    c27 = C.hamiltonian_obstruction(27)
    assert c27.payload["S"] == [9, 18] and len(c27.payload["T"]) > 2
    assert C.verify_certificate(tzdg(27), c27)
    with pytest.raises(DomainError):
        C.hamiltonian_obstruction(25)


def test_verifier_rejects_bad_certificates():
    g = tzdg(36)
    good = C.construct_coloring(36)
    bad = C.Certificate(C.COLORING, 36, [[v, 0 if v in (6, 12) else c] for v, c in good.payload])
    verdict = C.verify_certificate(g, bad)
    assert not verdict and "6-12" in verdict.detail
    assert not C.verify_certificate(g, C.Certificate(C.CLIQUE, 36, [2, 3]))
    assert not C.verify_certificate(g, C.Certificate(C.DOMINATING_SET, 36, [18]))
    assert not C.verify_certificate(g, C.Certificate(C.RESOLVING_SET, 36, [2]))
    assert not C.verify_certificate(g, C.Certificate(C.CLIQUE, 36, [5]))
    edge = C.construct_edge_coloring(36)
    clash = C.Certificate(C.EDGE_COLORING, 36, [e[:2] + [0] for e in edge.payload])
    assert not C.verify_certificate(g, clash)
    with pytest.raises(DomainError):
        C.verify_certificate(g, C.divisor_normal_form(36, 30))


def test_certificate_json_shape():
    doc = C.half_exponent_clique(36).to_json()
    assert set(doc) == {"kind", "m_or_spec", "payload", "verified"}


connected_m = st.integers(4, 600).filter(lambda m: F.predict_connected(m))
in_scope_m = st.integers(4, 800).filter(
    lambda m: not factor(m).is_prime and F.predict_chromatic(m)[0] is not None
)


@given(in_scope_m)
def test_coloring_and_clique_certificates(m):
    g = tzdg(m)
    chi = F.predict_chromatic(m)[0]
    col, clique = C.construct_coloring(m), C.chromatic_lower_clique(m)
    assert C.verify_certificate(g, col) and col.size == chi
    assert C.verify_certificate(g, clique) and clique.size == chi


@given(connected_m)
def test_connected_certificates(m):
    g = tzdg(m)
    assert C.verify_certificate(g, C.canonical_dominating_set(m))
    res = C.construct_resolving_set(m)
    assert C.verify_certificate(g, res) and res.size == F.predict_metric_dimension(m)
    if not F.is_complete_case(m):
        edge = C.construct_edge_coloring(m, g)
        assert C.verify_certificate(g, edge) and edge.size == int(g.degrees.max())
        assert C.verify_certificate(g, C.hamiltonian_obstruction(m))
