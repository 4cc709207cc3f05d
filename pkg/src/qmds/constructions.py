"""The six Hermitian self-orthogonal GRS families and their certificates.

Family tags and the lengths they produce (m as listed):

========  =====================  ========================
family    length n               m
========  =====================  ========================
T32       1 + r m                (q^2 - 1) / s
T43i      1 + r m                (q^2 - 1) / (2s + 1)
T43ii     1 + (2t + 1) m         (q^2 - 1) / (2s + 1)
T53i      1 + r m                (q^2 - 1) / (2s)
T53ii     1 + (2t + 2) m         (q^2 - 1) / (2s)
T63       (2t + 1) m             (q^2 - 1) / (2s)
========  =====================  ========================

Every family places its evaluation points on cosets of the cyclic group of
m-th roots of unity (plus the zero point, except T63), reduces Hermitian
self-orthogonality to a small linear system in u = v^(q+1), solves that
system over GF(q)* and lifts u back to v through the norm map.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, replace
from typing import Iterator, Optional

from .gf import FieldCtx, Fq2Elem, build_field, field_for_q, prime_power
from .grs import (
    DEFAULT_SAMPLES,
    ENUMERATION_BOUND,
    GrsCode,
    hermitian_gram,
    is_mds,
    min_distance_enumerate,
    power_sum_check,
)
from .linalg import ExactMatrix, frobenius_descent_solve, paired_descent_solve

FAMILIES = ("T32", "T43i", "T43ii", "T53i", "T53ii", "T63")
SCHEMA_VERSION = 1


class ParameterError(ValueError):
    """Parameters outside the range in which a family is defined."""


class ConstructionError(RuntimeError):
    """A built code failed one of its verification checks."""


# --- parameter bookkeeping -------------------------------------------------


def _divisor(family: str, s: int) -> int:
    if family == "T32":
        return s
    if family.startswith("T43"):
        return 2 * s + 1
    return 2 * s


@dataclass(frozen=True)
class ConstructionSpec:
    family: str
    q: int
    s: int
    r: int
    k: int
    t: Optional[int] = None

    @property
    def m(self) -> int:
        return (self.q * self.q - 1) // _divisor(self.family, self.s)

    @property
    def n(self) -> int:
        return self.r * self.m if self.family == "T63" else 1 + self.r * self.m

    @property
    def k_max(self) -> int:
        return k_max(self.family, self.q, self.s, self.r, self.t)

    def with_k(self, k: int) -> "ConstructionSpec":
        return replace(self, k=k)

    def label(self) -> str:
        t = "" if self.t is None else f";t={self.t}"
        return f"{self.family}(q={self.q};s={self.s};r={self.r}{t};k={self.k})"

    def validate(self) -> "ConstructionSpec":
        check_family_params(self.family, self.q, self.s, self.r, self.t)
        km = self.k_max
        if not 1 <= self.k <= km:
            raise ParameterError(f"{self.family}: need 1 <= k <= {km}, got k={self.k}")
        if 2 * self.k > self.n:
            raise ParameterError("self-orthogonality needs k <= n/2")
        return self


def k_max(family: str, q: int, s: int, r: int, t: Optional[int]) -> int:
    if family == "T32":
        return r * (q - 1) // s
    if family == "T43i":
        return (s + 1) * (q + 1) // (2 * s + 1) - 1
    if family == "T43ii":
        return (s + t + 1) * (q + 1) // (2 * s + 1) - 1
    if family == "T53i":
        return (s + 1) * (q + 1) // (2 * s) - 1
    if family == "T53ii":
        return (s + t + 1) * (q + 1) // (2 * s) - 1
    if family == "T63":
        return (s + t) * (q + 1) // (2 * s) - 2
    raise ParameterError(f"unknown family {family!r}")


def check_family_params(family: str, q: int, s: int, r: int, t: Optional[int]) -> None:
    """Raise ParameterError unless (q, s, r, t) is admissible for the family."""
    if family not in FAMILIES:
        raise ParameterError(f"unknown family {family!r}; expected one of {FAMILIES}")
    try:
        prime_power(q)
    except ValueError as exc:
        raise ParameterError(str(exc)) from None
    if s < 1:
        raise ParameterError("s must be positive")
    needs_t = family in ("T43ii", "T53ii", "T63")
    if needs_t and t is None:
        raise ParameterError(f"{family} needs t")
    if not needs_t and t is not None:
        raise ParameterError(f"{family} takes no t")

    if family == "T32":
        if (q - 1) % s:
            raise ParameterError(f"T32 needs s | q-1 (q={q}, s={s})")
        if not 1 <= r <= s:
            raise ParameterError(f"T32 needs 1 <= r <= s, got r={r}")
        return

    if family.startswith("T43"):
        if q <= 2:
            raise ParameterError("T43 families need q > 2")
        if (q + 1) % (2 * s + 1):
            raise ParameterError(f"{family} needs (2s+1) | q+1 (q={q}, s={s})")
        if r == 2 * s + 1:
            raise ParameterError("r = 2s+1 gives length q^2, which family T32 covers with s = r = 1")
        if family == "T43i" and not 1 <= r < 2 * s + 1:
            raise ParameterError(f"T43i needs 1 <= r < 2s+1, got r={r}")
        if family == "T43ii":
            if not 0 <= t <= s - 1:
                raise ParameterError(f"T43ii needs 0 <= t <= s-1, got t={t}")
            if r != 2 * t + 1:
                raise ParameterError(f"T43ii needs r = 2t+1, got r={r}, t={t}")
        return

    if (q + 1) % (2 * s):
        raise ParameterError(f"{family} needs 2s | q+1 (q={q}, s={s})")
    if family == "T63":
        if not 1 <= t <= s - 1:
            raise ParameterError(f"T63 needs 1 <= t <= s-1, got t={t}")
        if r != 2 * t + 1:
            raise ParameterError(f"T63 needs r = 2t+1, got r={r}, t={t}")
        return
    if r == 1 and s == 1:
        raise ParameterError("r = s = 1 gives length (q^2+1)/2, which none of the six families covers")
    if s <= 1:
        raise ParameterError(f"{family} needs s > 1")
    if r == 2 * s:
        raise ParameterError("r = 2s gives length q^2, which family T32 covers with s = r = 1")
    if family == "T53i" and not 2 <= r < 2 * s:
        raise ParameterError(f"T53i needs 2 <= r < 2s, got r={r}")
    if family == "T53ii":
        if not 0 <= t <= s - 2:
            raise ParameterError(f"T53ii needs 0 <= t <= s-2, got t={t}")
        if r != 2 * t + 2:
            raise ParameterError(f"T53ii needs r = 2t+2, got r={r}, t={t}")


def legal_specs(q: int, n_max: Optional[int] = None) -> Iterator[ConstructionSpec]:
    """Every admissible (family, s, r, t) for q, at k = k_max, ordered by family."""
    for family in FAMILIES:
        for s in range(1, q + 2):
            if (q * q - 1) % _divisor(family, s):
                continue
            rs: list[tuple[int, Optional[int]]]
            if family == "T43ii":
                rs = [(2 * t + 1, t) for t in range(0, s)]
            elif family == "T53ii":
                rs = [(2 * t + 2, t) for t in range(0, s - 1)]
            elif family == "T63":
                rs = [(2 * t + 1, t) for t in range(1, s)]
            else:
                rs = [(r, None) for r in range(1, 2 * s + 2)]
            for r, t in rs:
                try:
                    check_family_params(family, q, s, r, t)
                except ParameterError:
                    continue
                km = k_max(family, q, s, r, t)
                spec = ConstructionSpec(family, q, s, r, km, t)
                if km < 1 or (n_max is not None and spec.n > n_max):
                    continue
                yield spec


# --- divisibility sets -----------------------------------------------------


def _div_params(kind: str, q: int, s: int, t: int, k: int) -> tuple[int, int]:
    """Validate and return (D, h) with m = (q^2-1)/D and h = (q+1)/D."""
    if kind == "i":
        D = 2 * s + 1
        t_ok, bound = 0 <= t <= s - 1, (s + 1 + t) * (q + 1) // D - 1
    elif kind == "ii":
        D = 2 * s
        t_ok, bound = 0 <= t <= s - 2, (s + 1 + t) * (q + 1) // D - 1
    elif kind == "shifted":
        D = 2 * s
        t_ok, bound = 1 <= t <= s - 1, (s + t) * (q + 1) // D - 2
    else:
        raise ParameterError(f"unknown divisibility kind {kind!r}")
    if s < 1 or (q + 1) % D:
        raise ParameterError(f"need {D} | q+1 (q={q}, s={s})")
    if not t_ok:
        raise ParameterError(f"t={t} out of range for kind {kind!r}")
    if not 1 <= k <= bound:
        raise ParameterError(f"k={k} out of range 1..{bound}")
    return D, (q + 1) // D


def divisibility_set(kind: str, q: int, s: int, t: int, k: int) -> frozenset[int]:
    """Multiples mu with q i + j = mu m for some 0 <= i, j <= k-1.

    ``kind`` is ``"i"`` (m = (q^2-1)/(2s+1)), ``"ii"`` (m = (q^2-1)/(2s)) or
    ``"shifted"`` (m = (q^2-1)/(2s) and the condition is on q i + j + q + 1).

    Closed form: for 0 < mu < D the unique base-q split of mu m is
    ``q (mu h - 1) + (q - mu h)`` with h = (q+1)/D, so mu is reachable iff
    both digits lie in the allowed range.
    """
    D, h = _div_params(kind, q, s, t, k)
    if kind == "shifted":
        # q(i+1) + (j+1) with 1 <= i+1, j+1 <= k
        lo = -(-max(2, q - k) // h)
        hi = min(k + 1, q - 1) // h
        return frozenset(range(lo, hi + 1))
    lo = -(-(q + 1 - k) // h)
    hi = k // h
    return frozenset({0} | set(range(max(lo, 1), min(hi, D - 1) + 1)))


def divisibility_set_brute(kind: str, q: int, s: int, t: int, k: int) -> frozenset[int]:
    """Same set by enumerating all (i, j) pairs."""
    D, _ = _div_params(kind, q, s, t, k)
    m = (q * q - 1) // D
    shift = q + 1 if kind == "shifted" else 0
    out = set()
    for i in range(k):
        for j in range(k):
            x = q * i + j + shift
            if x % m == 0:
                out.add(x // m)
    return frozenset(out)


def stated_divisibility_set(kind: str, q: int, s: int, t: int) -> frozenset[int]:
    """The candidate set {0, s-t+1, ..., s+t} / {0, s-t, ..., s+t} / {s-t+1, ..., s+t-1}."""
    if kind == "i":
        return frozenset({0} | set(range(s - t + 1, s + t + 1)))
    if kind == "ii":
        return frozenset({0} | set(range(s - t, s + t + 1)))
    if kind == "shifted":
        return frozenset(range(s - t + 1, s + t))
    raise ParameterError(f"unknown divisibility kind {kind!r}")


# --- the u-system solvers --------------------------------------------------


def solve_sum_zero(ctx: FieldCtx, r: int) -> list[Fq2Elem]:
    """(u_0, ..., u_r) in (GF(q)*)^(r+1) with sum zero."""
    if ctx.q == 2:
        raise ParameterError("no nonzero solution over GF(2)* when r+1 is odd; need q > 2")
    if r < 1:
        raise ParameterError("r must be at least 1")
    c = ctx.neg(ctx.from_int(r - 1))
    for g in ctx.subfield_elements():
        b = ctx.sub(c, g)
        if b:
            return [1] * (r - 1) + [g, b]
    raise ConstructionError("no admissible pair found")  # pragma: no cover


def vandermonde_matrix(ctx: FieldCtx, xs: list[Fq2Elem]) -> ExactMatrix:
    r = len(xs)
    rows = [[1] * (r + 1)]
    for i in range(1, r):
        rows.append([0] + [ctx.pow(x, i) for x in xs])
    return ExactMatrix.from_rows(ctx, rows, r + 1)


def solve_vandermonde_system(ctx: FieldCtx, xs: list[Fq2Elem]) -> list[Fq2Elem]:
    """u with sum(u) = 0 and sum_l x_l^i u_l = 0 for i = 1..r-1."""
    if len(set(xs)) != len(xs):
        raise ParameterError("x values must be distinct")
    if any(x == 0 or not ctx.is_in_base_subfield(x) for x in xs):
        raise ParameterError("x values must be nonzero elements of GF(q)")
    return frobenius_descent_solve(vandermonde_matrix(ctx, xs))


def power_matrix(ctx: FieldCtx, alpha: Fq2Elem, a_start: int, num_rows: int, r: int) -> ExactMatrix:
    rows = [[1] * (r + 1)]
    for j in range(num_rows):
        rows.append([0] + [ctx.pow(alpha, ell * (a_start + j)) for ell in range(1, r + 1)])
    return ExactMatrix.from_rows(ctx, rows, r + 1)


def solve_power_system(ctx: FieldCtx, alpha: Fq2Elem, a_start: int, num_rows: int, r: int) -> list[Fq2Elem]:
    """u with sum(u) = 0 and sum_l alpha^(l (a_start + j)) u_l = 0 for each row j."""
    if num_rows != r - 1:
        raise ParameterError(f"need num_rows = r-1, got num_rows={num_rows}, r={r}")
    return frobenius_descent_solve(power_matrix(ctx, alpha, a_start, num_rows, r))


def solve_parity_system(ctx: FieldCtx, r: int) -> list[Fq2Elem]:
    """u with sum(u) = 0 and sum_{i>=1} (-1)^i u_i = 0 (q odd, r >= 2).

    Equivalent to u_0 + 2 sum_{odd i} u_i = 0 = u_0 + 2 sum_{even i>0} u_i,
    i.e. two sum-zero problems sharing u_0.
    """
    if ctx.p == 2:
        raise ParameterError("parity system needs odd q")
    if r < 2:
        raise ParameterError("parity system needs r >= 2")
    odd = list(range(1, r + 1, 2))
    even = list(range(2, r + 1, 2))
    half = ctx.inv(ctx.from_int(2))
    w = solve_sum_zero(ctx, len(odd))
    z = solve_sum_zero(ctx, len(even))
    rescale = ctx.div(w[0], z[0])
    u = [0] * (r + 1)
    u[0] = w[0]
    for idx, val in zip(odd, w[1:]):
        u[idx] = ctx.mul(half, val)
    for idx, val in zip(even, z[1:]):
        u[idx] = ctx.mul(half, ctx.mul(rescale, val))
    return u


def shifted_matrix(ctx: FieldCtx, s: int, t: int) -> ExactMatrix:
    q = ctx.q
    m = (q * q - 1) // (2 * s)
    r = 2 * t + 1
    alpha = ctx.omega_pow(m)
    eta = ctx.omega_pow(-(q + 1))
    a = s - t + 1
    rows = []
    for j in range(r - 2):
        rows.append([ctx.mul(ctx.pow(alpha, ell * (a + j)), ctx.pow(eta, ell)) for ell in range(1, r + 1)])
    return ExactMatrix.from_rows(ctx, rows, r)


def solve_shifted_system(ctx: FieldCtx, s: int, t: int) -> list[Fq2Elem]:
    """u in (GF(q)*)^(2t+1) with sum_l omega^(l (mu m - q - 1)) u_l = 0 for mu = s-t+1..s+t-1."""
    if (ctx.q + 1) % (2 * s) or not 1 <= t <= s - 1:
        raise ParameterError(f"need 2s | q+1 and 1 <= t <= s-1 (q={ctx.q}, s={s}, t={t})")
    return paired_descent_solve(shifted_matrix(ctx, s, t))


# --- building and certifying -----------------------------------------------


@dataclass
class ConstructionCertificate:
    spec: ConstructionSpec
    code: GrsCode
    u: list[Fq2Elem]
    coset_reps: list[Fq2Elem]
    theta: Fq2Elem
    routing: str
    verdicts: dict = field(default_factory=dict)
    mds_probabilistic: Optional[bool] = None

    @property
    def ctx(self) -> FieldCtx:
        return self.code.ctx

    @property
    def accepted(self) -> bool:
        return all(self.verdicts.get(key) for key in ("gram_zero", "power_sum", "mds", "singleton_equality")) \
            and self.verdicts.get("min_distance") is not False

    @property
    def quantum(self) -> tuple[int, int, int]:
        n, k = self.spec.n, self.spec.k
        return n, n - 2 * k, k + 1

    def to_dict(self) -> dict:
        ctx = self.ctx

        def enc(xs):
            return [None if x == 0 else ctx.dlog(x) for x in xs]

        n, kq, d = self.quantum
        return {
            "schema_version": SCHEMA_VERSION,
            "field": {
                "p": ctx.p,
                "e": ctx.e,
                "q": ctx.q,
                "modulus_poly": list(ctx.modulus_poly),
                "omega": ctx.omega,
            },
            "spec": asdict(self.spec),
            "n": n,
            "m": self.spec.m,
            "routing": self.routing,
            "theta": ctx.dlog(self.theta),
            "coset_reps": enc(self.coset_reps),
            "u": enc(self.u),
            "a": enc(self.code.a),
            "v": enc(self.code.v),
            "quantum": {"n": n, "k": kq, "d": d},
            "verdicts": dict(self.verdicts),
            "mds_probabilistic": self.mds_probabilistic,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1)

    @classmethod
    def from_dict(cls, doc: dict) -> "ConstructionCertificate":
        if doc.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {doc.get('schema_version')!r}")
        f = doc["field"]
        ctx = build_field(f["p"], f["e"])
        if list(ctx.modulus_poly) != f["modulus_poly"] or ctx.omega != f["omega"]:
            raise ValueError("certificate field does not match the deterministic field construction")

        def dec(xs):
            return [0 if x is None else ctx.omega_pow(x) for x in xs]

        sp = doc["spec"]
        spec = ConstructionSpec(sp["family"], sp["q"], sp["s"], sp["r"], sp["k"], sp["t"])
        code = GrsCode(ctx, tuple(dec(doc["a"])), tuple(dec(doc["v"])), spec.k)
        return cls(
            spec=spec,
            code=code,
            u=dec(doc["u"]),
            coset_reps=dec(doc["coset_reps"]),
            theta=ctx.omega_pow(doc["theta"]),
            routing=doc["routing"],
            verdicts=dict(doc["verdicts"]),
            mds_probabilistic=doc["mds_probabilistic"],
        )

    @classmethod
    def from_json(cls, text: str) -> "ConstructionCertificate":
        return cls.from_dict(json.loads(text))


def compute_verdicts(
    code: GrsCode,
    spec: ConstructionSpec,
    level: str = "full",
    *,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    distance_bound: int = ENUMERATION_BOUND,
    distance: bool = False,
) -> tuple[dict, Optional[bool]]:
    """Verdict dictionary for a code at the given level (params / gram / full)."""
    if level not in ("params", "gram", "full"):
        raise ValueError(f"unknown verify level {level!r}")
    n, k = code.n, code.k
    verdicts: dict = {
        "gram_zero": None,
        "power_sum": None,
        "mds": None,
        "singleton_equality": (n == spec.n and k == spec.k and 2 * k <= n
                               and (n - (n - 2 * k) + 2) - 2 * (k + 1) == 0),
    }
    probabilistic = None
    if level in ("gram", "full"):
        verdicts["gram_zero"] = hermitian_gram(code).is_zero()
        verdicts["power_sum"] = power_sum_check(code)
    if level == "full":
        mds = is_mds(code, samples=samples, seed=seed)
        verdicts["mds"] = mds.ok
        probabilistic = mds.probabilistic
        if distance and code.ctx.order ** k <= distance_bound:
            verdicts["min_distance"] = min_distance_enumerate(code, distance_bound) == n - k + 1
    return verdicts, probabilistic


def _field_m(ctx: FieldCtx, m: int) -> Fq2Elem:
    mm = ctx.from_int(m)
    if mm == 0:
        raise ConstructionError(f"m={m} vanishes in GF({ctx.p})")
    return mm


def layout(spec: ConstructionSpec, ctx: FieldCtx) -> tuple[list[Fq2Elem], list[Fq2Elem], Fq2Elem]:
    """Evaluation points, coset representatives and theta for a spec."""
    D = _divisor(spec.family, spec.s)
    m = spec.m
    theta = ctx.omega_pow(D)
    offset = 0 if spec.family == "T32" else 1  # T32 uses omega^(l-1), the others omega^l
    reps = [ctx.omega_pow(ell - 1 + offset) for ell in range(1, spec.r + 1)]
    points = [] if spec.family == "T63" else [0]
    for ell in range(1, spec.r + 1):
        base = ell - 1 + offset
        points.extend(ctx.omega_pow(base + D * nu) for nu in range(m))
    if len(set(points)) != len(points):
        raise ConstructionError("evaluation points are not pairwise distinct")
    return points, reps, theta


def solve_u(spec: ConstructionSpec, ctx: FieldCtx, reps: list[Fq2Elem]) -> tuple[list[Fq2Elem], str]:
    """Solve the family's u-system; return u and the routing tag."""
    fam, q, s, r, t, m = spec.family, spec.q, spec.s, spec.r, spec.t, spec.m
    if fam == "T32":
        xs = [ctx.pow(b, m) for b in reps]
        if len(set(xs)) != len(xs) or not all(ctx.is_in_base_subfield(x) for x in xs):
            raise ConstructionError("x_l = beta_l^m are not distinct elements of GF(q)")
        return solve_vandermonde_system(ctx, xs), "vandermonde"
    if fam == "T43i":
        return solve_sum_zero(ctx, r), "sum_zero"
    if fam == "T43ii":
        alpha = ctx.omega_pow(m)
        return solve_power_system(ctx, alpha, s - t + 1, 2 * t, r), "power_system"
    if fam == "T53i":
        if ctx.p == 2:
            raise ConstructionError("2s | q+1 with s > 1 forces q odd")
        if s in divisibility_set("ii", q, s, 0, spec.k):
            return solve_parity_system(ctx, r), "parity"
        return solve_sum_zero(ctx, r), "sum_zero"
    if fam == "T53ii":
        alpha = ctx.omega_pow(m)
        return solve_power_system(ctx, alpha, s - t, 2 * t + 1, r), "power_system"
    if fam == "T63":
        return solve_shifted_system(ctx, s, t), "shifted_system"
    raise ParameterError(f"unknown family {fam!r}")  # pragma: no cover


def build(
    spec: ConstructionSpec,
    *,
    level: str = "full",
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    distance: bool = False,
    check: bool = True,
) -> ConstructionCertificate:
    """Construct the self-orthogonal GRS code for ``spec`` and certify it.

    Raises ConstructionError when any computed verdict is false (unless
    ``check`` is off, which is only useful for negative-control experiments).
    """
    spec.validate()
    ctx = field_for_q(spec.q)
    points, reps, theta = layout(spec, ctx)
    u, routing = solve_u(spec, ctx, reps)
    if any(x == 0 or not ctx.is_in_base_subfield(x) for x in u):
        raise ConstructionError(f"solver returned u outside GF(q)*: {u}")
    m = spec.m
    if spec.family == "T63":
        lifted = [ctx.norm_preimage(x) for x in u]
        v = [ctx.mul(lifted[ell], ctx.pow(theta, nu)) for ell in range(spec.r) for nu in range(m)]
    else:
        v0 = ctx.norm_preimage(ctx.mul(u[0], _field_m(ctx, m)))
        lifted = [ctx.norm_preimage(x) for x in u[1:]]
        v = [v0] + [lifted[ell] for ell in range(spec.r) for _ in range(m)]
    code = GrsCode(ctx, tuple(points), tuple(v), spec.k)
    if code.n != spec.n:
        raise ConstructionError(f"length {code.n} != expected {spec.n}")
    verdicts, prob = compute_verdicts(code, spec, level, samples=samples, seed=seed, distance=distance)
    cert = ConstructionCertificate(spec, code, u, reps, theta, routing, verdicts, prob)
    if check:
        failed = [key for key, val in verdicts.items() if val is False]
        if failed:
            raise ConstructionError(f"{spec.label()}: failed checks {failed}")
    return cert


def verify_certificate(
    cert: ConstructionCertificate,
    level: str = "full",
    *,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    distance: bool = False,
) -> tuple[bool, list[str]]:
    """Recompute a certificate's claims from its stored data.

    Returns (ok, problems).  Checks: the spec is admissible, u lies in
    GF(q)* and matches v^(q+1) on the coset blocks, and every verdict
    recomputed at ``level`` is true and agrees with the stored one.
    """
    problems: list[str] = []
    spec, code, ctx = cert.spec, cert.code, cert.ctx
    try:
        spec.validate()
    except ParameterError as exc:
        return False, [f"spec: {exc}"]
    if code.n != spec.n or code.k != spec.k:
        problems.append("code length/dimension do not match the family formulas")
    if any(x == 0 or not ctx.is_in_base_subfield(x) for x in cert.u):
        problems.append("u is not in GF(q)*")
    m = spec.m
    if not problems:
        norms = [ctx.norm(x) for x in code.v]
        if spec.family == "T63":
            nt = ctx.norm(cert.theta)
            expect = [ctx.mul(cert.u[ell], ctx.pow(nt, nu)) for ell in range(spec.r) for nu in range(m)]
        else:
            expect = [ctx.mul(cert.u[0], ctx.from_int(m))] + [cert.u[1 + ell] for ell in range(spec.r) for _ in range(m)]
        if norms != expect:
            problems.append("v^(q+1) does not match the stored u")
    verdicts, _ = compute_verdicts(code, spec, level, samples=samples, seed=seed, distance=distance)
    for key, val in verdicts.items():
        if val is False:
            problems.append(f"{key} is false")
        stored = cert.verdicts.get(key)
        if val is not None and stored is not None and stored != val:
            problems.append(f"{key}: stored {stored}, recomputed {val}")
    return not problems, problems


def spec_from_params(family: str, q: int, s: int, r: Optional[int], t: Optional[int], k: int) -> ConstructionSpec:
    """Fill in r from t for the families where r is determined by t."""
    if family in ("T43ii", "T63") and t is not None:
        r_t = 2 * t + 1
    elif family == "T53ii" and t is not None:
        r_t = 2 * t + 2
    else:
        r_t = None
    if r is None:
        if r_t is None:
            raise ParameterError(f"{family} needs r")
        r = r_t
    elif r_t is not None and r != r_t:
        raise ParameterError(f"{family}: r={r} inconsistent with t={t}")
    spec = ConstructionSpec(family, q, s, r, k, t)
    return spec.validate()
