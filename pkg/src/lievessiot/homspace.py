"""Lie-Vessiot systems on grassmanians and flag varieties.

Plückerian coordinates Lambda = Y U^{-1} (U the top m x m block of a
spanning n x m matrix) satisfy the matrix Riccati equation

    Lambda' = A21 + A22 Lambda - Lambda A11 - Lambda A12 Lambda,

and the strictly-lower flag coordinates (the unit-lower factor of the
LU decomposition of a fundamental matrix) satisfy the polynomial flag
equation (cubic for n <= 3; see flag_table).  A rational solution on the grassmanian (resp. the flag
variety) yields a gauge transformation taking the automorphic field to
block-upper (resp. upper-triangular) form; both reductions are
implemented and the conclusion shape is checked.

Charts are fixed to the standard basis order.  When a chart minor
vanishes the operation fails with the offending index rather than
silently permuting; the CLI exposes an explicit --permute flag.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .automorphic import AutomorphicField, GroupElement, gauge_transform
from .errors import BadBlockSize, ChartMinorVanishes, DimensionMismatch
from .matrix import MatK
from .ratfunc import RF_ONE, RF_ZERO, RatFunc
from .scalars import GaussianRational


class NotASolutionWarning(UserWarning):
    """Reduction input failed its solution check; the shape guarantee is void."""


class PlaneCoords:
    """Affine chart on the grassmanian of m-planes in K^n: an (n-m) x m matrix."""

    __slots__ = ("n", "m", "Lambda")

    def __init__(self, n: int, m: int, Lambda: MatK):
        if (Lambda.rows, Lambda.cols) != (n - m, m):
            raise DimensionMismatch(f"plane coordinates must be {(n - m)}x{m}")
        self.n = n
        self.m = m
        self.Lambda = Lambda

    def __eq__(self, other):
        if not isinstance(other, PlaneCoords):
            return NotImplemented
        return (self.n, self.m, self.Lambda) == (other.n, other.m, other.Lambda)

    def __repr__(self):
        return f"PlaneCoords(n={self.n}, m={self.m}, {self.Lambda!s})"


class FlagCoords:
    """Affine chart on the flag variety: a unit-lower-triangular matrix."""

    __slots__ = ("n", "lam")

    def __init__(self, lam: MatK):
        if not lam.is_square:
            raise DimensionMismatch("flag coordinates must be square")
        n = lam.rows
        for i in range(n):
            if lam[i, i] != RF_ONE:
                raise DimensionMismatch("flag coordinate matrix must have unit diagonal")
            for j in range(i + 1, n):
                if not lam[i, j].is_zero():
                    raise DimensionMismatch("flag coordinate matrix must be lower triangular")
        self.n = n
        self.lam = lam

    def __eq__(self, other):
        if not isinstance(other, FlagCoords):
            return NotImplemented
        return self.lam == other.lam

    def __repr__(self):
        return f"FlagCoords({self.lam!s})"


class RiccatiSystem:
    """The matrix Riccati system on the chart of m-planes, stored as blocks."""

    __slots__ = ("n", "m", "a11", "a12", "a21", "a22")

    def __init__(self, n, m, blocks):
        self.n = n
        self.m = m
        self.a11, self.a12, self.a21, self.a22 = blocks

    @property
    def blocks(self):
        return self.a11, self.a12, self.a21, self.a22

    def unknowns(self):
        """Unknown index pairs (i, j), 1-based, i = 1..n-m, j = 1..m."""
        return [(i, j) for j in range(1, self.m + 1) for i in range(1, self.n - self.m + 1)]


class FlagSystem:
    """The cubic flag system attached to an automorphic field A."""

    __slots__ = ("n", "A")

    def __init__(self, A: MatK):
        if not A.is_square:
            raise DimensionMismatch("flag system needs a square matrix")
        self.n = A.rows
        self.A = A

    def unknowns(self):
        """Strictly-lower index pairs (i, j), 1-based, i > j."""
        return [(i, j) for j in range(1, self.n + 1) for i in range(j + 1, self.n + 1)]


def riccati_generate(a: AutomorphicField, m: int) -> RiccatiSystem:
    """Build the matrix Riccati system of the m-plane chart from A."""
    n = a.n
    if not 1 <= m < n:
        raise BadBlockSize(f"plane dimension {m} invalid for rank {n}")
    return RiccatiSystem(n, m, a.matrix.block_split(m))


def riccati_rhs(sys: RiccatiSystem, plane: PlaneCoords) -> MatK:
    """A21 + A22 L - L A11 - L A12 L, evaluated exactly."""
    if (plane.n, plane.m) != (sys.n, sys.m):
        raise DimensionMismatch("plane does not match system shape")
    lam = plane.Lambda
    return sys.a21 + sys.a22 * lam - lam * sys.a11 - lam * sys.a12 * lam


def riccati_check_solution(sys: RiccatiSystem, plane: PlaneCoords) -> bool:
    """True iff Lambda' equals the Riccati right-hand side entrywise."""
    return plane.Lambda.derive() == riccati_rhs(sys, plane)


def plucker_coords(x: MatK, m: int) -> PlaneCoords:
    """Chart coordinates Y U^{-1} of the span of the columns of the n x m matrix x."""
    n = x.rows
    if x.cols != m or not 1 <= m < n:
        raise BadBlockSize(f"expected an n x m matrix with 1 <= m < n, got {x.rows}x{x.cols}")
    top = MatK(m, m, [x[i, j] for i in range(m) for j in range(m)])
    if top.det().is_zero():
        raise ChartMinorVanishes("top m x m minor vanishes; the plane leaves the chart")
    bottom = MatK(n - m, m, [x[i, j] for i in range(m, n) for j in range(m)])
    return PlaneCoords(n, m, bottom * top.inverse())


def flag_coords(tau: GroupElement) -> FlagCoords:
    """The unit-lower factor of the LU decomposition of tau."""
    lower, _ = tau.sigma.lu_flag_decompose()
    return FlagCoords(lower)


def flag_generate(a: AutomorphicField) -> FlagSystem:
    return FlagSystem(a.matrix)


def _mp_add(p, q):
    out = dict(p)
    for mono, c in q.items():
        s = out.get(mono, RF_ZERO) + c
        if s.is_zero():
            out.pop(mono, None)
        else:
            out[mono] = s
    return out


def _mp_neg(p):
    return {mono: -c for mono, c in p.items()}


def _mp_mul(p, q):
    out: dict = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            mono = tuple(sorted(m1 + m2))
            s = out.get(mono, RF_ZERO) + c1 * c2
            if s.is_zero():
                out.pop(mono, None)
            else:
                out[mono] = s
    return out


def _mp_scale(c: RatFunc, p):
    if c.is_zero():
        return {}
    return {mono: c * v for mono, v in p.items()}


def flag_table(sys: FlagSystem):
    """Coefficient tables of the flag system, one per unknown.

    Returns {(i, j): {monomial: coefficient}} where a monomial is a sorted
    tuple of unknown index pairs (the empty tuple is the constant term).
    Derived from L' = A L - L V with V the unique upper-triangular
    completion making the right side strictly lower: writing M = A L,
    forward substitution gives V_pq = M_pq - sum_{k<p} L_pk V_kq for
    p <= q, and the table for unknown (i, j) is the (i, j) entry of
    M - L V.  For n <= 3 this expands to the classical cubic expression

        sum_{k=j..n} a_ik l_kj
      - sum_{k=1..j} sum_{r=j..n} l_ik a_kr l_rj
      + sum_{k=1..j} sum_{r=k+1..j} sum_{s=j..n} l_ir l_rk a_ks l_sj

    (l_pp = 1, l_pq = 0 for p < q); for larger n the substitution
    contributes higher-degree terms in columns j >= 3.
    """
    n = sys.n
    a = sys.A

    # symbolic flag matrix entry (p, q) as a monomial-dict polynomial
    def lam(p, q):
        if p < q:
            return {}
        if p == q:
            return {(): RF_ONE}
        return {((p, q),): RF_ONE}

    # M = A L
    m = [[{} for _ in range(n + 1)] for _ in range(n + 1)]
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            acc: dict = {}
            for k in range(q, n + 1):
                acc = _mp_add(acc, _mp_scale(a[p - 1, k - 1], lam(k, q)))
            m[p][q] = acc

    # V_pq for p <= q by forward substitution down each column
    v = [[{} for _ in range(n + 1)] for _ in range(n + 1)]
    for q in range(1, n + 1):
        for p in range(1, q + 1):
            acc = m[p][q]
            for k in range(1, p):
                acc = _mp_add(acc, _mp_neg(_mp_mul(lam(p, k), v[k][q])))
            v[p][q] = acc

    tables = {}
    for (i, j) in sys.unknowns():
        acc = m[i][j]
        for k in range(1, j + 1):
            acc = _mp_add(acc, _mp_neg(_mp_mul(lam(i, k), v[k][j])))
        tables[(i, j)] = acc
    return tables


def riccati_table(sys: RiccatiSystem):
    """Coefficient tables of the matrix Riccati system, one per unknown.

    Same monomial convention as flag_table; unknown (i, j) is the (i, j)
    entry of Lambda, 1-based.
    """
    n, m = sys.n, sys.m
    tables = {}
    for (i, j) in sys.unknowns():
        terms: dict[tuple, RatFunc] = {}

        def add(coeff: RatFunc, mono):
            if coeff.is_zero():
                return
            key = tuple(sorted(mono))
            terms[key] = terms.get(key, RF_ZERO) + coeff

        add(sys.a21[i - 1, j - 1], [])
        for k in range(1, n - m + 1):
            add(sys.a22[i - 1, k - 1], [(k, j)])
        for k in range(1, m + 1):
            add(-sys.a11[k - 1, j - 1], [(i, k)])
        for k in range(1, m + 1):
            for r in range(1, n - m + 1):
                add(-sys.a12[k - 1, r - 1], [(i, k), (r, j)])
        tables[(i, j)] = {mono: c for mono, c in terms.items() if not c.is_zero()}
    return tables


def evaluate_table(table, values) -> dict:
    """Evaluate one unknown's {monomial: coeff} table at unknown values."""
    acc = RF_ZERO
    for mono, coeff in table.items():
        term = coeff
        for key in mono:
            term = term * values[key]
        acc = acc + term
    return acc


def flag_rhs(sys: FlagSystem, flag: FlagCoords) -> MatK:
    """Right-hand side of the flag system at the given coordinates.

    Evaluates L' = A L - L V directly (V by forward substitution), which
    agrees with evaluating the symbolic flag_table but avoids expanding
    the monomials.  The result is strictly lower triangular.
    """
    if flag.n != sys.n:
        raise DimensionMismatch("flag does not match system rank")
    n = sys.n
    lam = flag.lam
    m = sys.A * lam
    # V_pq = M_pq - sum_{k<p} L_pk V_kq for p <= q, column by column
    v = [[RF_ZERO] * n for _ in range(n)]
    for q in range(n):
        for p in range(q + 1):
            acc = m[p, q]
            for k in range(p):
                acc = acc - lam[p, k] * v[k][q]
            v[p][q] = acc
    out = [[RF_ZERO] * n for _ in range(n)]
    for j in range(n):
        for i in range(j + 1, n):
            acc = m[i, j]
            for k in range(j + 1):
                acc = acc - lam[i, k] * v[k][j]
            out[i][j] = acc
    return MatK.from_rows(out)


def flag_check_solution(sys: FlagSystem, flag: FlagCoords) -> bool:
    """True iff the derivative of every strictly-lower entry matches the RHS."""
    return flag.lam.derive() == flag_rhs(sys, flag)


def flag_to_grassmann(flag: FlagCoords, m: int) -> PlaneCoords:
    """Plückerian coordinates of the m-th subspace of the flag.

    Derived directly from the LU picture: the m-plane is spanned by the
    first m columns of the flag matrix, whose top m x m block is unit
    lower triangular, so the chart never fails.  (The classical closed
    display for this map self-cancels for some indices and is not used.)
    """
    n = flag.n
    if not 1 <= m < n:
        raise BadBlockSize(f"plane dimension {m} invalid for rank {n}")
    first_cols = MatK(n, m, [flag.lam[i, j] for i in range(n) for j in range(m)])
    return plucker_coords(first_cols, m)


@dataclass(frozen=True)
class ReductionResult:
    tau: GroupElement
    field: AutomorphicField
    is_solution: bool


def reduce_by_plane(a: AutomorphicField, plane: PlaneCoords) -> ReductionResult:
    """Gauge A by the inverse of [[I, 0], [Lambda, I]].

    When Lambda solves the matrix Riccati system the result has an
    identically zero (2,1) block (the stabilizer of the standard
    m-plane); otherwise a NotASolutionWarning is emitted and the
    partially reduced field is still returned.
    """
    n, m = plane.n, plane.m
    if a.n != n:
        raise DimensionMismatch("field and plane rank mismatch")
    lam = plane.Lambda
    tau_mat = MatK.block_join(MatK.identity(m), MatK.zero(m, n - m), -lam, MatK.identity(n - m))
    tau = GroupElement(tau_mat)
    b = gauge_transform(tau, a)
    ok = riccati_check_solution(riccati_generate(a, m), plane)
    if not ok:
        warnings.warn("plane is not a Riccati solution; block shape not guaranteed",
                      NotASolutionWarning, stacklevel=2)
    return ReductionResult(tau, b, ok)


def reduce_by_flag(a: AutomorphicField, flag: FlagCoords) -> ReductionResult:
    """Gauge A by the inverse of the flag coordinate matrix.

    When the coordinates solve the flag system the result is upper
    triangular (Borel form); otherwise a NotASolutionWarning is emitted.
    """
    if a.n != flag.n:
        raise DimensionMismatch("field and flag rank mismatch")
    tau = GroupElement(flag.lam.inverse())
    b = gauge_transform(tau, a)
    ok = flag_check_solution(flag_generate(a), flag)
    if not ok:
        warnings.warn("coordinates do not solve the flag system; Borel shape not guaranteed",
                      NotASolutionWarning, stacklevel=2)
    return ReductionResult(tau, b, ok)


# ---------------------------------------------------------------------------
# Display cross-checks.
#
# The generated tables are linear in the entries of A, so instantiating A at
# elementary matrices E_pq recovers the exact symbolic coefficient of each
# a_pq in front of each monomial.  The tables below transcribe the classical
# printed n = 2, 3 systems; where a printed term disagrees with the generated
# (oracle-backed) one, the report lists it.


def _symbolic_table(kind: str, n: int, m: int | None = None):
    """{unknown: {monomial: {(p, q): Gaussian coefficient}}} with symbolic A."""
    out: dict = {}
    for p in range(n):
        for q in range(n):
            e = MatK(n, n, [RF_ONE if (i, j) == (p, q) else RF_ZERO
                            for i in range(n) for j in range(n)])
            field = AutomorphicField(e)
            if kind == "riccati":
                tables = riccati_table(riccati_generate(field, m))
            else:
                tables = flag_table(flag_generate(field))
            for unknown, table in tables.items():
                dest = out.setdefault(unknown, {})
                for mono, coeff in table.items():
                    cval = coeff.constant_value()
                    if not cval.is_zero():
                        dest.setdefault(mono, {})[(p + 1, q + 1)] = cval
    return out


# Printed ordinary/projective Riccati systems (1-based a indices).
_ONE = GaussianRational(1)
_MINUS = GaussianRational(-1)

DISPLAYED_RICCATI = {
    (2, 1): {
        (1, 1): {
            (): {(2, 1): _ONE},
            ((1, 1),): {(2, 2): _ONE, (1, 1): _MINUS},
            ((1, 1), (1, 1)): {(1, 2): _MINUS},
        },
    },
    (3, 1): {
        # x = Lambda_11, y = Lambda_21
        (1, 1): {
            (): {(2, 1): _ONE},
            ((1, 1),): {(2, 2): _ONE, (1, 1): _MINUS},
            ((2, 1),): {(2, 3): _ONE},
            ((1, 1), (1, 1)): {(1, 2): _MINUS},
            ((1, 1), (2, 1)): {(1, 3): _MINUS},
        },
        (2, 1): {
            # printed y-line shows (a33 - a11) without the factor y
            (): {(3, 1): _ONE, (3, 3): _ONE, (1, 1): _MINUS},
            ((1, 1),): {(3, 2): _ONE},
            ((2, 1), (2, 1)): {(1, 3): _MINUS},
            ((1, 1), (2, 1)): {(1, 2): _MINUS},
        },
    },
    (3, 2): {
        # xi = Lambda_11, eta = Lambda_12; printed cross terms carry + signs
        (1, 1): {
            (): {(3, 1): _ONE},
            ((1, 1),): {(3, 3): _ONE, (1, 1): _MINUS},
            ((1, 2),): {(2, 1): _ONE},
            ((1, 1), (1, 2)): {(2, 3): _MINUS},
            ((1, 1), (1, 1)): {(1, 3): _MINUS},
        },
        (1, 2): {
            (): {(3, 2): _ONE},
            ((1, 2),): {(3, 3): _ONE, (2, 2): _MINUS},
            ((1, 1),): {(1, 2): _ONE},
            ((1, 1), (1, 2)): {(1, 3): _MINUS},
            ((1, 2), (1, 2)): {(2, 3): _MINUS},
        },
    },
}

# Printed n = 3 flag system: x = l21, y = l31, z = l32.
DISPLAYED_FLAG_N3 = {
    (2, 1): {
        (): {(2, 1): _ONE},
        ((2, 1),): {(2, 2): _ONE, (1, 1): _MINUS},
        ((3, 1),): {(2, 3): _ONE},
        ((2, 1), (2, 1)): {(1, 2): _MINUS},
        ((2, 1), (3, 1)): {(1, 3): _MINUS},
    },
    (3, 1): {
        (): {(3, 1): _ONE},
        ((2, 1),): {(3, 2): _ONE},
        ((3, 1),): {(3, 3): _ONE, (1, 1): _MINUS},
        ((2, 1), (3, 1)): {(1, 2): _MINUS},
        ((3, 1), (3, 1)): {(1, 3): _MINUS},
    },
    (3, 2): {
        # printed z-line shows a12*y*z and a13*y*z^2 where the general
        # formula yields a12*x*z and a13*x*z^2
        (): {(3, 2): _ONE},
        ((3, 1),): {(1, 2): _MINUS},
        ((3, 2),): {(3, 3): _ONE, (2, 2): _MINUS},
        ((3, 1), (3, 2)): {(1, 2): _ONE, (1, 3): _MINUS},
        ((3, 1), (3, 2), (3, 2)): {(1, 3): _ONE},
        ((3, 2), (3, 2)): {(2, 3): _MINUS},
    },
}


def _diff_tables(generated, displayed):
    diffs = []
    unknowns = sorted(set(generated) | set(displayed))
    for unknown in unknowns:
        g = generated.get(unknown, {})
        d = displayed.get(unknown, {})
        monos = set(g) | set(d)
        for mono in sorted(monos):
            gt = g.get(mono, {})
            dt = d.get(mono, {})
            for key in sorted(set(gt) | set(dt)):
                gv = gt.get(key, GaussianRational(0))
                dv = dt.get(key, GaussianRational(0))
                if gv != dv:
                    diffs.append({
                        "unknown": unknown,
                        "monomial": mono,
                        "entry": key,
                        "generated": gv,
                        "displayed": dv,
                    })
    return diffs


def riccati_display_report():
    """Differences between generated Riccati tables and the printed ones.

    Keys are (n, m); each value is a list of per-term discrepancies (empty
    when the print agrees with the generated system).
    """
    report = {}
    for (n, m), displayed in DISPLAYED_RICCATI.items():
        report[(n, m)] = _diff_tables(_symbolic_table("riccati", n, m), displayed)
    return report


def flag_display_report():
    """Differences between the generated n = 3 flag system and the print."""
    return _diff_tables(_symbolic_table("flag", 3), DISPLAYED_FLAG_N3)
