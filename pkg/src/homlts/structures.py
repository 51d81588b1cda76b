"""Core algebraic objects: twisted triple systems, group actions, representations.

A system here is a finite-dimensional vector space with a trilinear
bracket ``[abc]`` and a compatible linear twist map.  The bracket is
alternating in its first two slots, satisfies a cyclic identity in all
three, and a twisted five-argument derivation identity; the twist
preserves the bracket.  Everything is stored through structure
constants over exact rationals, and every axiom is checked on basis
tuples (multilinearity makes that sufficient).

Verifiers return a :class:`VerificationReport` listing every violated
identity instead of raising, so callers can print complete diagnostics.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import ContractViolationError, ExampleParameterError, InternalConsistencyError
from .exactlin import Matrix, ONE, ZERO, as_scalar, rank

Vector = tuple


def _fmt_vec(v: Sequence[Fraction]) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _fmt_mat(m: Matrix) -> str:
    return "[" + "; ".join(" ".join(str(x) for x in m.row(i)) for i in range(m.rows)) + "]"


def _zero_vec(n: int) -> Vector:
    return (ZERO,) * n


def _add_vec(a, b) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def _sub_vec(a, b) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def _scale_vec(s: Fraction, a) -> Vector:
    return tuple(s * x for x in a)


def _is_zero_vec(a) -> bool:
    return all(x == 0 for x in a)


@dataclass(frozen=True)
class Violation:
    """One failed identity.  Indices are 1-based basis labels (group
    elements appear by label), matching printed reports."""

    axiom: str
    index: tuple
    lhs: str
    rhs: str


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    violations: tuple
    axioms_checked: tuple = ()

    def __post_init__(self):
        if self.passed != (len(self.violations) == 0):
            raise InternalConsistencyError("report passed flag disagrees with violations")

    def failed_axioms(self) -> tuple:
        seen = []
        for v in self.violations:
            if v.axiom not in seen:
                seen.append(v.axiom)
        return tuple(seen)


def _report(violations, axioms) -> VerificationReport:
    return VerificationReport(
        passed=not violations, violations=tuple(violations), axioms_checked=tuple(axioms)
    )


# ---------------------------------------------------------------------------
# Types


@dataclass(frozen=True)
class HomLts:
    """Finite-dimensional twisted triple system.

    ``bracket[i][j][k]`` is the coefficient vector of ``[e_i e_j e_k]``
    and ``twist`` is the matrix of the twist map in the same basis.  No
    axiom is enforced at construction; run :func:`verify_hom_lts`.
    """

    dim: int
    bracket: tuple
    twist: Matrix

    def __post_init__(self):
        n = self.dim
        if len(self.bracket) != n or any(
            len(plane) != n or any(len(row) != n or any(len(v) != n for v in row) for row in plane)
            for plane in self.bracket
        ):
            raise ContractViolationError("bracket tensor shape must be dim^3 x dim")
        if self.twist.rows != n or self.twist.cols != n:
            raise ContractViolationError("twist must be a dim x dim matrix")


def bracket_tensor(dim: int, entries: dict) -> tuple:
    """Nested structure-constant tensor from a sparse {(i,j,k): vector} dict (0-based)."""
    tensor = [[[list(_zero_vec(dim)) for _ in range(dim)] for _ in range(dim)] for _ in range(dim)]
    for (i, j, k), vec in entries.items():
        if len(vec) != dim:
            raise ContractViolationError(f"bracket entry {(i, j, k)} has wrong length")
        tensor[i][j][k] = [as_scalar(x) for x in vec]
    return tuple(
        tuple(tuple(tuple(v) for v in row) for row in plane) for plane in tensor
    )


def make_hom_lts(dim: int, entries: dict, twist: Matrix) -> HomLts:
    return HomLts(dim=dim, bracket=bracket_tensor(dim, entries), twist=twist)


@dataclass(frozen=True)
class FiniteGroup:
    """Finite group given by labels and an explicit multiplication table."""

    labels: tuple
    cayley: tuple
    identity: int

    @property
    def order(self) -> int:
        return len(self.labels)

    def mul(self, g1: int, g2: int) -> int:
        return self.cayley[g1][g2]

    def inverse(self, g: int) -> int:
        for h in range(self.order):
            if self.cayley[g][h] == self.identity and self.cayley[h][g] == self.identity:
                return h
        raise ContractViolationError(f"group element {self.labels[g]} has no inverse")

    @classmethod
    def cyclic(cls, n: int, labels: Optional[Sequence[str]] = None) -> "FiniteGroup":
        if labels is None:
            labels = tuple(f"g{i}" for i in range(n))
        table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
        return cls(labels=tuple(labels), cayley=table, identity=0)

    @classmethod
    def trivial(cls) -> "FiniteGroup":
        return cls.cyclic(1, labels=("e",))

    def table_violations(self) -> list:
        out = []
        n = self.order
        e = self.identity
        for g in range(n):
            if self.cayley[e][g] != g or self.cayley[g][e] != g:
                out.append(
                    Violation("group-identity", (self.labels[g],), str(self.cayley[e][g]), str(g))
                )
        for g in range(n):
            if sorted(self.cayley[g]) != list(range(n)) or sorted(
                self.cayley[h][g] for h in range(n)
            ) != list(range(n)):
                out.append(Violation("group-latin", (self.labels[g],), "row/col", "permutation"))
        for g1, g2, g3 in itertools.product(range(n), repeat=3):
            lhs = self.cayley[self.cayley[g1][g2]][g3]
            rhs = self.cayley[g1][self.cayley[g2][g3]]
            if lhs != rhs:
                out.append(
                    Violation(
                        "group-associativity",
                        (self.labels[g1], self.labels[g2], self.labels[g3]),
                        self.labels[lhs],
                        self.labels[rhs],
                    )
                )
        for g in range(n):
            if not any(
                self.cayley[g][h] == e and self.cayley[h][g] == e for h in range(n)
            ):
                out.append(Violation("group-inverse", (self.labels[g],), "none", "inverse"))
        return out


@dataclass(frozen=True)
class GroupAction:
    """One invertible matrix per group element acting on a fixed space."""

    group: FiniteGroup
    space_dim: int
    matrices: tuple

    def __post_init__(self):
        if len(self.matrices) != self.group.order:
            raise ContractViolationError("need exactly one matrix per group element")
        for m in self.matrices:
            if m.rows != self.space_dim or m.cols != self.space_dim:
                raise ContractViolationError("action matrices must be square of the space dim")

    def matrix(self, g: int) -> Matrix:
        return self.matrices[g]


def trivial_action(space_dim: int, group: Optional[FiniteGroup] = None) -> GroupAction:
    group = group or FiniteGroup.trivial()
    eye = Matrix.identity(space_dim)
    return GroupAction(group=group, space_dim=space_dim, matrices=(eye,) * group.order)


@dataclass(frozen=True)
class Representation:
    """Bilinear family of endomorphisms plus a twist on the target space.

    ``theta[i][j]`` is the matrix of the endomorphism attached to the
    basis pair (e_i, e_j); ``a_twist`` twists the target space.  The
    derived commutator family is ``d_matrix(i, j) = theta[j][i] -
    theta[i][j]``.
    """

    target_dim: int
    theta: tuple
    a_twist: Matrix

    def __post_init__(self):
        m = self.target_dim
        for row in self.theta:
            for mat in row:
                if mat.rows != m or mat.cols != m:
                    raise ContractViolationError("theta entries must be target_dim square")
        if self.a_twist.rows != m or self.a_twist.cols != m:
            raise ContractViolationError("a_twist must be target_dim square")

    @property
    def source_dim(self) -> int:
        return len(self.theta)

    def d_matrix(self, i: int, j: int) -> Matrix:
        return self.theta[j][i] - self.theta[i][j]


def zero_representation(source_dim: int, target_dim: int, a_twist: Matrix) -> Representation:
    z = Matrix.zeros(target_dim, target_dim)
    theta = tuple(tuple(z for _ in range(source_dim)) for _ in range(source_dim))
    return Representation(target_dim=target_dim, theta=theta, a_twist=a_twist)


# ---------------------------------------------------------------------------
# Operations


def eval_bracket(t: HomLts, x: Sequence, y: Sequence, z: Sequence) -> Vector:
    """Trilinear extension of the bracket to arbitrary coefficient vectors."""
    n = t.dim
    if len(x) != n or len(y) != n or len(z) != n:
        raise ContractViolationError("bracket arguments must have length dim")
    acc = [ZERO] * n
    c = t.bracket
    for i, xi in enumerate(x):
        if not xi:
            continue
        ci = c[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            cij = ci[j]
            s = xi * yj
            for k, zk in enumerate(z):
                if not zk:
                    continue
                w = cij[k]
                f = s * zk
                for l in range(n):
                    if w[l]:
                        acc[l] += f * w[l]
    return tuple(acc)


def _twisted_tables(t: HomLts):
    """Bracket tables with the twist applied to two of the three slots.

    Returns (tab12, tab23, tab13) where tab12[a][b][k] = [Ta, Tb, e_k]
    for T the twist, and similarly for slots (2,3) and (1,3).
    """
    n = t.dim
    cols = [t.twist.col(i) for i in range(n)]
    basis = [tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)]
    tab12 = [[[eval_bracket(t, cols[a], cols[b], basis[k]) for k in range(n)] for b in range(n)] for a in range(n)]
    tab23 = [[[eval_bracket(t, basis[i], cols[d], cols[e]) for e in range(n)] for d in range(n)] for i in range(n)]
    tab13 = [[[eval_bracket(t, cols[c], basis[j], cols[e]) for e in range(n)] for j in range(n)] for c in range(n)]
    return tab12, tab23, tab13


def verify_hom_lts(t: HomLts) -> VerificationReport:
    """Check every bracket/twist axiom on basis tuples.

    The "for all a" alternating axiom is equivalent, in characteristic
    zero, to vanishing on equal first slots plus antisymmetry in the
    first two slots, which is what gets checked.
    """
    n = t.dim
    c = t.bracket
    violations = []
    axioms = ("alternating", "cyclic", "twisted-jacobi", "multiplicativity")

    for i, j, k in itertools.product(range(n), repeat=3):
        if i == j and not _is_zero_vec(c[i][i][k]):
            violations.append(
                Violation("alternating", (i + 1, i + 1, k + 1), _fmt_vec(c[i][i][k]), _fmt_vec(_zero_vec(n)))
            )
        elif i < j:
            s = _add_vec(c[i][j][k], c[j][i][k])
            if not _is_zero_vec(s):
                violations.append(
                    Violation("alternating", (i + 1, j + 1, k + 1), _fmt_vec(s), _fmt_vec(_zero_vec(n)))
                )

    for i, j, k in itertools.product(range(n), repeat=3):
        s = _add_vec(_add_vec(c[i][j][k], c[j][k][i]), c[k][i][j])
        if not _is_zero_vec(s):
            violations.append(
                Violation("cyclic", (i + 1, j + 1, k + 1), _fmt_vec(s), _fmt_vec(_zero_vec(n)))
            )

    tab12, tab23, tab13 = _twisted_tables(t)

    def _contract(table_row, weights):
        acc = [ZERO] * n
        for idx, w in enumerate(weights):
            if w:
                vec = table_row[idx]
                for l in range(n):
                    if vec[l]:
                        acc[l] += w * vec[l]
        return tuple(acc)

    for a, b, cc, d, e in itertools.product(range(n), repeat=5):
        lhs = _contract([tab12[a][b][k] for k in range(n)], c[cc][d][e])
        rhs1 = _contract([tab23[i][d][e] for i in range(n)], c[a][b][cc])
        rhs2 = _contract([tab13[cc][j][e] for j in range(n)], c[a][b][d])
        rhs3 = _contract([tab12[cc][d][k] for k in range(n)], c[a][b][e])
        rhs = _add_vec(_add_vec(rhs1, rhs2), rhs3)
        if lhs != rhs:
            violations.append(
                Violation(
                    "twisted-jacobi",
                    (a + 1, b + 1, cc + 1, d + 1, e + 1),
                    _fmt_vec(lhs),
                    _fmt_vec(rhs),
                )
            )

    cols = [t.twist.col(i) for i in range(n)]
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs = t.twist.apply(c[i][j][k])
        rhs = _contract([tab12[i][j][kk] for kk in range(n)], cols[k])
        if lhs != rhs:
            violations.append(
                Violation("multiplicativity", (i + 1, j + 1, k + 1), _fmt_vec(lhs), _fmt_vec(rhs))
            )

    return _report(violations, axioms)


def verify_group_action(act: GroupAction, t: HomLts) -> VerificationReport:
    """Check the group table, the matrix homomorphism property, and that
    every element acts by bracket- and twist-preserving automorphisms."""
    if act.space_dim != t.dim:
        raise ContractViolationError(
            f"action space dim {act.space_dim} does not match system dim {t.dim}"
        )
    g = act.group
    n = t.dim
    violations = list(g.table_violations())
    axioms = (
        "group-identity",
        "group-latin",
        "group-associativity",
        "group-inverse",
        "action-identity",
        "action-homomorphism",
        "action-invertible",
        "bracket-equivariance",
        "twist-equivariance",
    )

    eye = Matrix.identity(n)
    if act.matrix(g.identity) != eye:
        violations.append(
            Violation("action-identity", (g.labels[g.identity],), _fmt_mat(act.matrix(g.identity)), _fmt_mat(eye))
        )
    for g1, g2 in itertools.product(range(g.order), repeat=2):
        lhs = act.matrix(g.mul(g1, g2))
        rhs = act.matrix(g1) @ act.matrix(g2)
        if lhs != rhs:
            violations.append(
                Violation("action-homomorphism", (g.labels[g1], g.labels[g2]), _fmt_mat(lhs), _fmt_mat(rhs))
            )
    for gi in range(g.order):
        if rank(act.matrix(gi)) != n:
            violations.append(
                Violation("action-invertible", (g.labels[gi],), str(rank(act.matrix(gi))), str(n))
            )

    for gi in range(g.order):
        m = act.matrix(gi)
        cols = [m.col(i) for i in range(n)]
        for i, j, k in itertools.product(range(n), repeat=3):
            lhs = eval_bracket(t, cols[i], cols[j], cols[k])
            rhs = m.apply(t.bracket[i][j][k])
            if lhs != rhs:
                violations.append(
                    Violation(
                        "bracket-equivariance",
                        (g.labels[gi], i + 1, j + 1, k + 1),
                        _fmt_vec(lhs),
                        _fmt_vec(rhs),
                    )
                )
        lhs_m = t.twist @ m
        rhs_m = m @ t.twist
        if lhs_m != rhs_m:
            violations.append(
                Violation("twist-equivariance", (g.labels[gi],), _fmt_mat(lhs_m), _fmt_mat(rhs_m))
            )

    return _report(violations, axioms)


def _theta_on(rep: Representation, x: Sequence, y: Sequence) -> Matrix:
    """Bilinear extension of theta to coefficient vectors."""
    acc = Matrix.zeros(rep.target_dim, rep.target_dim)
    for u, xu in enumerate(x):
        if not xu:
            continue
        for v, yv in enumerate(y):
            if yv:
                acc = acc + (xu * yv) * rep.theta[u][v]
    return acc


def verify_representation(
    t: HomLts,
    rep: Representation,
    act_t: Optional[GroupAction] = None,
    act_v: Optional[GroupAction] = None,
) -> VerificationReport:
    """Check the three structure equations of a representation, plus the
    group-compatibility identity when actions are supplied.

    The third structure equation is checked in the form that makes the
    adjoint family of any verified system pass (its last-but-one term
    pairs the bracket of the first three arguments with the twisted
    fourth argument).
    """
    if rep.source_dim != t.dim:
        raise ContractViolationError("representation source dim does not match system")
    if (act_t is None) != (act_v is None):
        raise ContractViolationError("supply both actions or neither")
    if act_t is not None and act_t.group != act_v.group:
        raise ContractViolationError("the two actions must share one group")
    if act_t is not None and (act_t.space_dim != t.dim or act_v.space_dim != rep.target_dim):
        raise ContractViolationError("action dims do not match the spaces")

    n = t.dim
    alpha = t.twist
    a_tw = rep.a_twist
    c = t.bracket
    acols = [alpha.col(i) for i in range(n)]
    violations = []
    axioms = ["rep-twist-compatibility", "rep-structure-a", "rep-structure-b"]

    th_tw = [[_theta_on(rep, acols[i], acols[j]) for j in range(n)] for i in range(n)]

    for i, j in itertools.product(range(n), repeat=2):
        lhs = th_tw[i][j] @ a_tw
        rhs = a_tw @ rep.theta[i][j]
        if lhs != rhs:
            violations.append(
                Violation("rep-twist-compatibility", (i + 1, j + 1), _fmt_mat(lhs), _fmt_mat(rhs))
            )

    zero = Matrix.zeros(rep.target_dim, rep.target_dim)
    for a, b, cc, d in itertools.product(range(n), repeat=4):
        term = th_tw[cc][d] @ rep.theta[a][b]
        term = term - th_tw[b][d] @ rep.theta[a][cc]
        term = term - _theta_on(rep, acols[a], c[b][cc][d]) @ a_tw
        term = term + (th_tw[cc][b] - th_tw[b][cc]) @ rep.theta[a][d]
        if term != zero:
            violations.append(
                Violation("rep-structure-a", (a + 1, b + 1, cc + 1, d + 1), _fmt_mat(term), _fmt_mat(zero))
            )

    for a, b, cc, d in itertools.product(range(n), repeat=4):
        term = th_tw[cc][d] @ rep.d_matrix(a, b)
        term = term - (th_tw[b][a] - th_tw[a][b]) @ rep.theta[cc][d]
        term = term + _theta_on(rep, c[a][b][cc], acols[d]) @ a_tw
        term = term + _theta_on(rep, acols[cc], c[a][b][d]) @ a_tw
        if term != zero:
            violations.append(
                Violation("rep-structure-b", (a + 1, b + 1, cc + 1, d + 1), _fmt_mat(term), _fmt_mat(zero))
            )

    if act_t is not None:
        axioms.append("rep-group-module")
        grp = act_t.group
        for gi in range(grp.order):
            mt = act_t.matrix(gi)
            mv = act_v.matrix(gi)
            tcols = [mt.col(i) for i in range(n)]
            for i, j in itertools.product(range(n), repeat=2):
                lhs = _theta_on(rep, tcols[i], tcols[j]) @ mv
                rhs = mv @ rep.theta[i][j]
                if lhs != rhs:
                    violations.append(
                        Violation(
                            "rep-group-module",
                            (grp.labels[gi], i + 1, j + 1),
                            _fmt_mat(lhs),
                            _fmt_mat(rhs),
                        )
                    )

    return _report(violations, tuple(axioms))


def adjoint_representation(t: HomLts) -> Representation:
    """The representation of a verified system on itself: the basis pair
    (e_i, e_j) acts by v -> [v e_i e_j], and the target twist is the
    system twist."""
    report = verify_hom_lts(t)
    if not report.passed:
        raise ContractViolationError(
            f"adjoint representation needs a verified system; {len(report.violations)} violations found"
        )
    n = t.dim
    c = t.bracket
    theta = tuple(
        tuple(
            Matrix(n, n, [c[q][i][j][p] for p in range(n) for q in range(n)])
            for j in range(n)
        )
        for i in range(n)
    )
    return Representation(target_dim=n, theta=theta, a_twist=t.twist)


def semidirect_sum(t: HomLts, rep: Representation) -> HomLts:
    """Glue a system and a representation into one system on the direct
    sum, with the representation space bracketing through theta and its
    commutator family."""
    report = verify_representation(t, rep)
    if not report.passed:
        raise ContractViolationError(
            f"semidirect sum needs a verified representation; {len(report.violations)} violations found"
        )
    n = t.dim
    m = rep.target_dim
    total = n + m
    entries = {}

    def _embed_t(vec):
        return tuple(vec) + _zero_vec(m)

    def _embed_v(vec):
        return _zero_vec(n) + tuple(vec)

    # bracket on the sum: T-triples keep the base bracket; a summand
    # vector in slot 1, 2 or 3 brackets through theta, -theta, D.
    for i, j, k in itertools.product(range(n), repeat=3):
        vec = t.bracket[i][j][k]
        if not _is_zero_vec(vec):
            entries[(i, j, k)] = _embed_t(vec)
    for p in range(m):
        for j, k in itertools.product(range(n), repeat=2):
            vec = rep.theta[j][k].col(p)
            if not _is_zero_vec(vec):
                entries[(n + p, j, k)] = _embed_v(vec)
                entries[(j, n + p, k)] = _embed_v(_scale_vec(-ONE, vec))
        for i, j in itertools.product(range(n), repeat=2):
            vec = rep.d_matrix(i, j).col(p)
            if not _is_zero_vec(vec):
                entries[(i, j, n + p)] = _embed_v(vec)

    twist = Matrix(
        total,
        total,
        [
            (
                t.twist.entry(i, j)
                if i < n and j < n
                else rep.a_twist.entry(i - n, j - n) if i >= n and j >= n else ZERO
            )
            for i in range(total)
            for j in range(total)
        ],
    )
    return make_hom_lts(total, entries, twist)


# ---------------------------------------------------------------------------
# Example constructors


@dataclass(frozen=True)
class ExampleResult:
    system: HomLts
    action: Optional[GroupAction] = None
    deformation_terms: Optional[tuple] = field(default=None)


def _assert_constructed_valid(t: HomLts, what: str) -> None:
    report = verify_hom_lts(t)
    if not report.passed:
        raise InternalConsistencyError(
            f"{what} construction produced an invalid system: {report.violations[0]}"
        )


def _make_bilinear(form: Matrix, twist: Matrix, scale) -> HomLts:
    lam = as_scalar(scale)
    n = form.rows
    if form.cols != n:
        raise ExampleParameterError("bilinear: form matrix must be square")
    if form != form.transpose():
        raise ExampleParameterError("bilinear: form matrix must be symmetric")
    if twist.rows != n or twist.cols != n:
        raise ExampleParameterError("bilinear: twist must match the form's size")
    if twist.transpose() @ form @ twist != form:
        raise ExampleParameterError("bilinear: twist must leave the form invariant")
    acols = [twist.col(i) for i in range(n)]
    entries = {}
    for i, j, k in itertools.product(range(n), repeat=3):
        vec = _sub_vec(
            _scale_vec(lam * form.entry(j, k), acols[i]),
            _scale_vec(lam * form.entry(k, i), acols[j]),
        )
        if not _is_zero_vec(vec):
            entries[(i, j, k)] = vec
    t = make_hom_lts(n, entries, twist)
    _assert_constructed_valid(t, "bilinear")
    return t


def _make_matrix_pq(p: int, q: int) -> HomLts:
    if p < 1 or q < 1:
        raise ExampleParameterError("matrix_pq: p and q must be positive")
    n = p * q
    basis = []
    for r in range(p):
        for s in range(q):
            basis.append(
                Matrix(p, q, [ONE if (a == r and b == s) else ZERO for a in range(p) for b in range(q)])
            )
    entries = {}
    for i, j, k in itertools.product(range(n), repeat=3):
        a, b, cmat = basis[i], basis[j], basis[k]
        val = (a @ b.transpose() - b @ a.transpose()) @ cmat + cmat @ (
            b.transpose() @ a - a.transpose() @ b
        )
        vec = tuple(val.entry(r, s) for r in range(p) for s in range(q))
        if not _is_zero_vec(vec):
            entries[(i, j, k)] = vec
    t = make_hom_lts(n, entries, Matrix.identity(n))
    _assert_constructed_valid(t, "matrix_pq")
    return t


def _algebra_product(constants, x: Sequence, y: Sequence) -> Vector:
    n = len(x)
    acc = [ZERO] * n
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if yj:
                vec = constants[i][j]
                f = xi * yj
                for l in range(n):
                    if vec[l]:
                        acc[l] += f * vec[l]
    return tuple(acc)


def _normalize_constants(constants) -> tuple:
    return tuple(
        tuple(tuple(as_scalar(x) for x in vec) for vec in row) for row in constants
    )


def _check_algebra_morphism(constants, twist: Matrix, what: str) -> None:
    n = twist.rows
    cols = [twist.col(i) for i in range(n)]
    for i, j in itertools.product(range(n), repeat=2):
        lhs = twist.apply(constants[i][j])
        rhs = _algebra_product(constants, cols[i], cols[j])
        if lhs != rhs:
            raise ExampleParameterError(f"{what}: twist is not an algebra morphism (at {i + 1},{j + 1})")


def _make_associative(constants, twist: Matrix) -> HomLts:
    constants = _normalize_constants(constants)
    n = len(constants)
    basis = [tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)]
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs = _algebra_product(constants, constants[i][j], basis[k])
        rhs = _algebra_product(constants, basis[i], constants[j][k])
        if lhs != rhs:
            raise ExampleParameterError(
                f"associative: structure constants are not associative (at {i + 1},{j + 1},{k + 1})"
            )
    _check_algebra_morphism(constants, twist, "associative")

    def comm(x, y):
        return _sub_vec(_algebra_product(constants, x, y), _algebra_product(constants, y, x))

    entries = {}
    for i, j, k in itertools.product(range(n), repeat=3):
        raw = _sub_vec(
            _sub_vec(_scale_vec(as_scalar(2), comm(comm(basis[i], basis[j]), basis[k])),
                     comm(comm(basis[k], basis[i]), basis[j])),
            comm(comm(basis[j], basis[k]), basis[i]),
        )
        vec = twist.apply(raw)
        if not _is_zero_vec(vec):
            entries[(i, j, k)] = vec
    t = make_hom_lts(n, entries, twist)
    _assert_constructed_valid(t, "associative")
    return t


def _make_hom_associative(constants, twist: Matrix) -> HomLts:
    constants = _normalize_constants(constants)
    n = len(constants)
    basis = [tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)]
    cols = [twist.col(i) for i in range(n)]
    _check_algebra_morphism(constants, twist, "hom_associative")
    for i, j, k in itertools.product(range(n), repeat=3):
        lhs = _algebra_product(constants, cols[i], constants[j][k])
        rhs = _algebra_product(constants, constants[i][j], cols[k])
        if lhs != rhs:
            raise ExampleParameterError(
                f"hom_associative: twisted associativity fails (at {i + 1},{j + 1},{k + 1})"
            )

    def mu(x, y):
        return _algebra_product(constants, x, y)

    entries = {}
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = basis[i], basis[j], basis[k]
        ax, ay, az = cols[i], cols[j], cols[k]
        vec = _add_vec(
            _sub_vec(_sub_vec(mu(mu(x, y), az), mu(mu(y, x), az)), mu(mu(z, x), ay)),
            mu(mu(z, y), ax),
        )
        if not _is_zero_vec(vec):
            entries[(i, j, k)] = vec
    t = make_hom_lts(n, entries, twist @ twist)
    _assert_constructed_valid(t, "hom_associative")
    return t


def _make_section5() -> ExampleResult:
    e1 = (ONE, ZERO)
    twist = Matrix.diagonal([1, -1])
    t = make_hom_lts(
        2,
        {(0, 1, 1): e1, (1, 0, 1): _scale_vec(-ONE, e1)},
        twist,
    )
    _assert_constructed_valid(t, "section5")
    group = FiniteGroup.cyclic(2, labels=("e", "g"))
    action = GroupAction(
        group=group,
        space_dim=2,
        matrices=(Matrix.identity(2), Matrix.diagonal([-1, -1])),
    )
    e2 = (ZERO, ONE)
    mu1 = bracket_tensor(2, {(1, 0, 0): e2, (0, 1, 0): _scale_vec(-ONE, e2)})
    return ExampleResult(system=t, action=action, deformation_terms=(mu1,))


EXAMPLE_IDS = ("bilinear", "matrix_pq", "associative", "hom_associative", "section5")


def make_example(example_id: str, **params) -> ExampleResult:
    """Construct one of the stock systems.

    "bilinear" needs a symmetric ``form``, an invariant ``twist`` and a
    ``scale``; "matrix_pq" needs sizes ``p`` and ``q`` (ground-field
    entries, identity twist); "associative" and "hom_associative" need
    algebra ``constants`` plus a morphism ``twist`` (the ternary bracket
    of both is post-composed with the twist where the construction calls
    for it, and the hom variant twists by the square); "section5" takes
    no parameters and also returns its order-two group action and the
    first-order deformation term.
    """
    if example_id == "bilinear":
        return ExampleResult(system=_make_bilinear(params["form"], params["twist"], params["scale"]))
    if example_id == "matrix_pq":
        return ExampleResult(system=_make_matrix_pq(params["p"], params["q"]))
    if example_id == "associative":
        return ExampleResult(system=_make_associative(params["constants"], params["twist"]))
    if example_id == "hom_associative":
        return ExampleResult(system=_make_hom_associative(params["constants"], params["twist"]))
    if example_id == "section5":
        return _make_section5()
    raise ExampleParameterError(f"unknown example id {example_id!r}; choose from {EXAMPLE_IDS}")
