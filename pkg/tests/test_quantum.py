import pytest
from hypothesis import given, strategies as st

from qmds.constructions import ConstructionSpec, build, legal_specs
from qmds.quantum import (
    MissingCertificateError,
    QuantumParams,
    SingletonViolation,
    enumerate_families,
    hermitian_to_quantum,
    propagate,
    singleton_defect,
)


def test_hermitian_to_quantum_examples():
    assert hermitian_to_quantum(5, 1, q=3, certificate="ref").triple == (5, 3, 2)
    assert hermitian_to_quantum(10, 3, q=4, certificate="ref").triple == (10, 4, 4)
    assert hermitian_to_quantum(25, 4, q=5, certificate="ref").triple == (25, 17, 5)


def test_hermitian_to_quantum_needs_certificate():
    with pytest.raises(MissingCertificateError):
        hermitian_to_quantum(5, 1, q=3, certificate=None)
    cert = build(ConstructionSpec("T32", 3, 2, 1, 1))
    p = hermitian_to_quantum(5, 1, q=3, certificate=cert)
    assert p.provenance == cert.spec.label()
    with pytest.raises(MissingCertificateError):
        hermitian_to_quantum(6, 1, q=3, certificate=cert)


def test_singleton_defect_examples():
    assert singleton_defect(QuantumParams(3, 5, 3, 2)) == 0
    assert singleton_defect(QuantumParams(4, 10, 4, 4)) == 0
    assert singleton_defect(QuantumParams(4, 10, 4, 3)) == 2
    with pytest.raises(SingletonViolation):
        singleton_defect(QuantumParams(3, 5, 3, 3))


def test_quantum_params_invariants():
    with pytest.raises(ValueError):
        QuantumParams(3, 0, 0, 1)
    with pytest.raises(ValueError):
        QuantumParams(3, 4, 5, 1)
    with pytest.raises(ValueError):
        QuantumParams(3, 4, 2, 0)
    assert str(QuantumParams(7, 18, 12, 4)) == "[[18, 12, 4]]_7"


def test_propagate_examples():
    out = propagate(QuantumParams(11, 97, 81, 9, "T32"))
    assert out.triple == (96, 82, 8)
    assert out.provenance == "T32>propagate"
    assert propagate(QuantumParams(4, 10, 4, 4)).triple == (9, 5, 3)
    assert propagate(QuantumParams(3, 5, 3, 2)).triple == (4, 4, 1)


def test_propagate_errors():
    with pytest.raises(ValueError):
        propagate(QuantumParams(4, 10, 4, 3))
    with pytest.raises(ValueError):
        propagate(QuantumParams(3, 4, 4, 1))


@given(st.integers(2, 300), st.data())
def test_propagate_preserves_mds(n, data):
    k = data.draw(st.integers(1, n // 2))
    p = hermitian_to_quantum(n, k, q=2, certificate="x")
    assert singleton_defect(p) == 0
    out = propagate(p)
    assert singleton_defect(out) == 0
    assert out.n == n - 1 and out.d == p.d - 1


def _triples(rows):
    return {(r.n, r.k_q, r.d) for r in rows}


def test_enumerate_examples():
    q3 = enumerate_families(3, 10)
    assert {(5, 3, 2), (7, 3, 3)} <= _triples(q3)
    row = next(r for r in q3 if (r.n, r.k_q, r.d) == (7, 3, 3))
    assert (row.family, row.s, row.r, row.k) == ("T53i", 2, 3, 2)
    q4 = enumerate_families(4, 16)
    assert {(10, 4, 4), (9, 5, 3)} <= _triples(q4)
    q7 = enumerate_families(7, 48)
    for k in range(1, 6):
        assert (42, 42 - 2 * k, k + 1) in _triples(q7)


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_enumeration_invariants(q):
    rows = enumerate_families(q, q * q + 1)
    assert rows == enumerate_families(q, q * q + 1)
    assert len(_triples(rows)) == len(rows)
    for r in rows:
        assert singleton_defect(r.params()) == 0
        assert r.n <= q * q + 1
    directs = {(r.n, r.k_q, r.d) for r in rows if r.direct}
    # every direct code at k_max also appears at each smaller k
    for spec in legal_specs(q):
        for k in range(1, spec.k_max + 1):
            assert (spec.n, spec.n - 2 * k, k + 1) in directs


def test_enumerate_prefers_direct_rows():
    rows = enumerate_families(5, 26)
    triples = [(r.n, r.k_q, r.d) for r in rows]
    # [[25, 17, 5]] propagates to [[24, 18, 4]], which no family builds directly
    assert (24, 18, 4) in triples
    r = next(r for r in rows if (r.n, r.k_q, r.d) == (24, 18, 4))
    assert not r.direct and r.provenance.endswith(">propagate")
    assert all(r.direct for r in rows if (r.n, r.k_q, r.d) == (25, 17, 5))


def test_enumerate_verify_and_bounds():
    rows = enumerate_families(3, 10, verify=True)
    assert all(r.verified for r in rows if r.direct)
    assert not any(r.verified for r in rows if not r.direct)
    with pytest.raises(ValueError):
        enumerate_families(3, 11)
