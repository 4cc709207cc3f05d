"""Quantum code parameters: Hermitian construction, Singleton defect,
propagation, and enumeration of the family tables."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .constructions import (
    FAMILIES,
    ConstructionCertificate,
    ConstructionSpec,
    build,
    legal_specs,
)


class SingletonViolation(ValueError):
    pass


class MissingCertificateError(ValueError):
    pass


@dataclass(frozen=True)
class QuantumParams:
    q: int
    n: int
    k_q: int  # logical dimension exponent, n - 2k for the direct codes
    d: int
    provenance: str = ""

    def __post_init__(self):
        if self.n < 1 or not 0 <= self.k_q <= self.n or self.d < 1:
            raise ValueError(f"invalid quantum parameters [[{self.n},{self.k_q},{self.d}]]")

    @property
    def triple(self) -> tuple[int, int, int]:
        return self.n, self.k_q, self.d

    def __str__(self) -> str:
        return f"[[{self.n}, {self.k_q}, {self.d}]]_{self.q}"


def hermitian_to_quantum(
    n: int,
    k: int,
    *,
    q: int,
    certificate: Union[ConstructionCertificate, str, None],
) -> QuantumParams:
    """[[n, n-2k, k+1]]_q from a certified self-orthogonal [n, k, n-k+1] code."""
    if certificate is None or certificate == "":
        raise MissingCertificateError("a certificate (or a reference to one) is required")
    if isinstance(certificate, ConstructionCertificate):
        if (certificate.spec.n, certificate.spec.k) != (n, k) or not certificate.accepted:
            raise MissingCertificateError("certificate does not witness an accepted [n, k] code")
        ref = certificate.spec.label()
    else:
        ref = str(certificate)
    return QuantumParams(q, n, n - 2 * k, k + 1, ref)


def singleton_defect(p: QuantumParams) -> int:
    """(n - k + 2) - 2d; zero for quantum MDS codes."""
    defect = (p.n - p.k_q + 2) - 2 * p.d
    if defect < 0:
        raise SingletonViolation(f"{p} violates the quantum Singleton bound (defect {defect})")
    return defect


def propagate(p: QuantumParams) -> QuantumParams:
    """[[n, n-2d+2, d]] -> [[n-1, n-2d+3, d-1]]."""
    if singleton_defect(p) != 0:
        raise ValueError(f"{p} is not quantum MDS")
    if p.d < 2:
        raise ValueError("propagation needs d >= 2")
    chain = f"{p.provenance}>propagate" if p.provenance else "propagate"
    return QuantumParams(p.q, p.n - 1, p.n - 2 * p.d + 3, p.d - 1, chain)


@dataclass(frozen=True)
class FamilyRow:
    family: str
    q: int
    s: int
    r: int
    t: Optional[int]
    k: int
    n: int
    k_q: int
    d: int
    provenance: str
    verified: bool

    @property
    def direct(self) -> bool:
        return ">" not in self.provenance

    def params(self) -> QuantumParams:
        return QuantumParams(self.q, self.n, self.k_q, self.d, self.provenance)

    def sort_key(self):
        return (FAMILIES.index(self.family), self.n, self.k, self.s, self.r, self.t or 0, self.provenance)


COLUMNS = ("family", "q", "s", "r", "t", "k", "n", "k_q", "d", "provenance", "verified")


def enumerate_families(q: int, n_max: int, verify: bool = False, *, seed: int = 0) -> list[FamilyRow]:
    """All quantum MDS parameters the six families give for q with n <= n_max.

    Every k from 1 to the family maximum is listed, plus one propagation
    step from each direct entry.  Rows with equal (n, k_q, d) are merged,
    keeping direct constructions over propagated ones.  With ``verify`` each
    direct entry is backed by a full certificate build.
    """
    if n_max > q * q + 1:
        raise ValueError(f"n_max={n_max} exceeds q^2+1={q * q + 1}")
    rows: list[FamilyRow] = []
    for top in legal_specs(q, n_max):
        for k in range(1, top.k_max + 1):
            spec = top.with_k(k)
            verified = False
            if verify:
                cert = build(spec, seed=seed)
                verified = cert.accepted
                qp = hermitian_to_quantum(spec.n, k, q=q, certificate=cert)
            else:
                qp = hermitian_to_quantum(spec.n, k, q=q, certificate=spec.label())
            rows.append(_row(spec, qp, verified))
            if qp.d >= 2:
                rows.append(_row(spec, propagate(qp), False))

    best: dict[tuple[int, int, int], FamilyRow] = {}
    for row in sorted(rows, key=lambda r: (not r.direct, len(r.provenance), r.sort_key())):
        best.setdefault((row.n, row.k_q, row.d), row)
    return sorted(best.values(), key=FamilyRow.sort_key)


def _row(spec: ConstructionSpec, qp: QuantumParams, verified: bool) -> FamilyRow:
    return FamilyRow(spec.family, spec.q, spec.s, spec.r, spec.t, qp.d - 1, qp.n, qp.k_q, qp.d,
                     qp.provenance, verified)
