"""S-equivalence decompositions: nonnegative-integer combinations of simples.

A semisimple degeneration of a class is a multiset of simple catalog classes
whose shifted Chern vectors sum to the target.  Termination is exactly the
twisted-ch3 positivity of the admissible b-range: every simple contributes a
strictly positive amount q_s(b) to the twisted top degree, so every solution
satisfies m_s <= top / q_s(b), and in particular lies in the box
[0, ceil(top / min_s q_s(b))]^k.

The search solves the exact rational linear system by Gaussian elimination
and only enumerates integer points of its (low-dimensional) solution space
inside that box, so unreachable or large targets stay cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .catalog import simples, solve_b_range, twisted_ch3_poly
from .chern import twist
from .lattice import ChernVector, ContractionModel
from .rationals import InputError, parse_rational

MultiplicityVector = dict[str, int]


@dataclass
class DecomposeResult:
    solutions: list[MultiplicityVector]
    bound: int
    reason: str | None = None
    catalog_order: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "solutions": [dict(sorted(m.items())) for m in self.solutions],
            "bound": self.bound,
            "catalog_order": self.catalog_order,
        }
        if self.reason:
            out["reason"] = self.reason
        return out


def _flatten(v: ChernVector) -> list[Fraction]:
    if v.kind.is_surface:
        return [v.ch0, *v.ch1, v.ch2]
    return [v.ch0, *v.ch1, *v.ch2, v.ch3]


def _integer_solutions(
    columns: list[list[Fraction]], rhs: list[Fraction], cap: int
) -> list[list[int]]:
    """Nonnegative integer solutions of the exact linear system, boxed by cap.

    Gauss-reduce [A | rhs]; pivot variables are determined by the free ones,
    so only the free variables (the kernel directions) are enumerated.
    """
    n_rows, n_cols = len(rhs), len(columns)
    aug = [[columns[j][i] for j in range(n_cols)] + [rhs[i]] for i in range(n_rows)]
    pivots: list[int] = []
    row = 0
    for col in range(n_cols):
        pivot_row = next((i for i in range(row, n_rows) if aug[i][col] != 0), None)
        if pivot_row is None:
            continue
        aug[row], aug[pivot_row] = aug[pivot_row], aug[row]
        lead = aug[row][col]
        aug[row] = [x / lead for x in aug[row]]
        for i in range(n_rows):
            if i != row and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
        if row == n_rows:
            break
    if any(aug[i][n_cols] != 0 for i in range(row, n_rows)):
        return []
    free = [c for c in range(n_cols) if c not in pivots]

    solutions: list[list[int]] = []
    values: list[int | None] = [None] * n_cols

    def emit():
        full: list[int] = []
        for i, p in enumerate(pivots):
            val = aug[i][n_cols] - sum(aug[i][f] * values[f] for f in free)
            if val < 0 or val.denominator != 1 or val > cap:
                return
            values[p] = int(val)
        for c in range(n_cols):
            full.append(values[c])
        solutions.append(full)

    def walk(k: int):
        if k == len(free):
            emit()
            return
        for val in range(cap + 1):
            values[free[k]] = val
            walk(k + 1)
        values[free[k]] = None

    walk(0)
    return solutions


def decompose(
    model: ContractionModel,
    target: ChernVector,
    b=0,
    bound_multiplier: int = 1,
) -> DecomposeResult:
    """All ways to write target as a nonnegative combination of simples.

    For 3-folds, b must lie inside the admissible range so that every
    twisted-ch3 value is positive; the surface search is bounded by plain
    ch2 positivity of the catalog.  Increasing bound_multiplier re-runs the
    enumeration with a larger box (a soundness check: it must not add
    solutions).
    """
    if target.kind is not model.kind:
        raise InputError("decompose: target kind does not match the model")
    if bound_multiplier < 1:
        raise InputError("decompose: bound_multiplier must be >= 1")
    entries = simples(model)
    if model.kind.is_threefold:
        b = parse_rational(b, "b")
        if not solve_b_range(model).derived.contains(b):
            raise InputError(
                "decompose: b must lie inside the admissible twisted-ch3 range "
                "of this contraction type"
            )
        weights = [twisted_ch3_poly(model, s)(b) for s in entries]
        top = twist(model, target, b).ch3
    else:
        if parse_rational(b, "b") != 0:
            raise InputError("decompose: surface decompositions take no twist (b must be 0)")
        weights = [s.heart_class.ch2 for s in entries]
        top = target.ch2
    assert all(wt > 0 for wt in weights)

    names = [s.name for s in entries]
    if target.is_zero():
        return DecomposeResult([{}], 0, None, names)
    if top <= 0:
        return DecomposeResult([], 0, "nonpositive-top-degree", names)

    bound = math.ceil(top / min(weights)) * bound_multiplier
    columns = [_flatten(s.heart_class) for s in entries]
    raws = _integer_solutions(columns, _flatten(target), bound)
    solutions = [
        {names[j]: m for j, m in enumerate(raw) if m} for raw in raws
    ]
    solutions.sort(key=lambda sol: tuple(sol.get(n, 0) for n in names))
    return DecomposeResult(solutions, bound, None, names)


def s_equivalent(m1: MultiplicityVector, m2: MultiplicityVector) -> bool:
    """Two degenerations agree iff their multiplicity maps are equal."""
    clean1 = {k: v for k, v in m1.items() if v}
    clean2 = {k: v for k, v in m2.items() if v}
    return clean1 == clean2
