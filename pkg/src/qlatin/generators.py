"""Concrete building blocks: the rotation-style 2x2 sub-squares, the order-4
families built from them, and the tensor-product construction that combines
row rectangles into larger squares.

Matrix displays are transcribed as exact rationals. Grids built from a
matrix M read cell vectors off the columns of M: row i of the grid is
(|00>, |01>, |10>, |11>) . M_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .algebraic import RadExt, sqrt_rational
from .qls_core import QLSGrid, RowQLR, verify_row_qlr
from .vectors import QVector, ket, tensor, vec_add, vec_scale

Scalar = Union[RadExt, Fraction, int]
Matrix = tuple[tuple[Scalar, ...], ...]
# 2x2 sub-square living inside a two-dimensional subspace of H_4
Block = tuple[tuple[QVector, QVector], tuple[QVector, QVector]]

F = Fraction


def mat(rows: Sequence[Sequence[Scalar]]) -> Matrix:
    return tuple(tuple(r) for r in rows)


def mat_transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise ValueError("matrix shape mismatch")
    bt = mat_transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_is_orthonormal(m: Matrix) -> bool:
    """M^T M = I, exactly."""
    prod = mat_mul(mat_transpose(m), m)
    return all(
        prod[i][j] == (1 if i == j else 0)
        for i in range(len(prod))
        for j in range(len(prod))
    )


def columns_as_vectors(m: Matrix) -> tuple[QVector, ...]:
    """Columns of m as vectors; a grid row (basis . M) is exactly this."""
    return tuple(QVector(col) for col in mat_transpose(m))


J1 = mat([
    (1, 0, 0, 0),
    (0, F(1, 3), F(-2, 3), F(2, 3)),
    (0, F(2, 3), F(-1, 3), F(-2, 3)),
    (0, F(2, 3), F(2, 3), F(1, 3)),
])

J2 = mat([
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, F(3, 5), F(-4, 5)),
    (0, 0, F(4, 5), F(3, 5)),
])

J3 = mat([
    (1, 0, 0, 0),
    (0, F(3, 5), F(-4, 5), 0),
    (0, F(4, 5), F(3, 5), 0),
    (0, 0, 0, 1),
])

J4 = mat([
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, F(-4, 5), F(3, 5)),
    (0, 0, F(3, 5), F(4, 5)),
])

X1 = mat([
    (0, 0, F(-12, 13), F(5, 13)),
    (0, 0, F(5, 13), F(12, 13)),
    (0, 1, 0, 0),
    (1, 0, 0, 0),
])

X2 = mat([
    (F(-4, 5), 0, F(3, 13), F(-36, 65)),
    (0, F(-4, 5), F(36, 65), F(3, 13)),
    (F(3, 5), 0, F(4, 13), F(-48, 65)),
    (0, F(3, 5), F(48, 65), F(4, 13)),
])

X3 = mat([
    (0, 1, 0, 0),
    (1, 0, 0, 0),
    (0, 0, F(-12, 13), F(5, 13)),
    (0, 0, F(5, 13), F(12, 13)),
])

X4 = mat([
    (F(3, 5), 0, F(-4, 13), F(48, 65)),
    (0, F(3, 5), F(-48, 65), F(-4, 13)),
    (F(4, 5), 0, F(3, 13), F(-36, 65)),
    (0, F(4, 5), F(36, 65), F(3, 13)),
])

X_MATRICES = (X1, X2, X3, X4)
J_MATRICES = (J1, J2, J3, J4)


def _rotation_block(e0: QVector, e1: QVector, a: Fraction) -> Block:
    """2x2 sub-square over span(e0, e1): the plane rotation with tangent a.

    cells = 1/sqrt(1+a^2) * ((e0 + a e1, -a e0 + e1), (-a e0 + e1, e0 + a e1))
    """
    norm = sqrt_rational(F(1) / (1 + a * a))
    v0 = vec_scale(vec_add(e0, vec_scale(e1, a)), norm)
    v1 = vec_scale(vec_add(vec_scale(e0, -a), e1), norm)
    return ((v0, v1), (v1, v0))


@lru_cache(maxsize=None)
def make_block_A(a: Fraction) -> Block:
    return _rotation_block(ket("00"), ket("01"), F(a))


@lru_cache(maxsize=None)
def make_block_B(a: Fraction) -> Block:
    return _rotation_block(ket("10"), ket("11"), F(a))


def make_alpha_basis() -> tuple[QVector, QVector, QVector, QVector]:
    """The rotated orthonormal basis (basis . J1); its first vector is |00>."""
    return columns_as_vectors(J1)


@lru_cache(maxsize=None)
def make_block_C(a: Fraction) -> Block:
    a1, a2, _, _ = make_alpha_basis()
    return _rotation_block(a1, a2, F(a))


@lru_cache(maxsize=None)
def make_block_D(a: Fraction) -> Block:
    _, _, a3, a4 = make_alpha_basis()
    return _rotation_block(a3, a4, F(a))


def block_elements(block: Block) -> frozenset[QVector]:
    from .vectors import canonicalize

    return frozenset(canonicalize(v) for row in block for v in row)


_BLOCK_MAKERS = {"A": make_block_A, "B": make_block_B, "C": make_block_C, "D": make_block_D}

# quadrant layout (top-left, top-right, bottom-left, bottom-right) per index
_H_TABLE = {
    0: (("A", 0), ("B", 0), ("B", 0), ("A", 0)),
    1: (("A", 0), ("B", 0), ("B", 1), ("A", 1)),
    2: (("A", 0), ("B", 0), ("B", 0), ("A", 2)),
    3: (("C", 0), ("D", 0), ("D", 0), ("C", 0)),
    4: (("A", 0), ("B", 0), ("B", 2), ("A", 2)),
    5: (("C", 0), ("D", 0), ("D", 0), ("C", 1)),
    6: (("A", 0), ("B", 2), ("B", 3), ("A", 2)),
    7: (("C", 0), ("D", 3), ("D", 4), ("C", 1)),
    8: (("A", 2), ("B", 2), ("B", 3), ("A", 3)),
}

_HPRIME_TABLE = {
    2: (("B", 0), ("A", 0), ("A", 1), ("B", 0)),
    4: (("B", 0), ("A", 0), ("A", 1), ("B", 1)),
    6: (("B", 1), ("A", 2), ("A", 1), ("B", 0)),
    8: (("B", 1), ("A", 1), ("A", 2), ("B", 2)),
}


def _assemble_quadrants(layout, provenance: str) -> QLSGrid:
    blocks = [_BLOCK_MAKERS[fam](F(a)) for fam, a in layout]
    cells = [[None] * 4 for _ in range(4)]
    for q, block in enumerate(blocks):
        bi, bj = divmod(q, 2)
        for k in range(2):
            for l in range(2):
                cells[bi * 2 + k][bj * 2 + l] = block[k][l]
    return QLSGrid(cells, provenance=provenance)


def make_H(ell: int) -> QLSGrid:
    if ell not in _H_TABLE:
        raise ValueError(f"index {ell} out of range; expected 0..8")
    return _assemble_quadrants(_H_TABLE[ell], f"H({ell})")


def make_Hprime(ell: int) -> QLSGrid:
    if ell not in _HPRIME_TABLE:
        raise ValueError(f"index {ell} out of range; expected one of 2, 4, 6, 8")
    return _assemble_quadrants(_HPRIME_TABLE[ell], f"Hprime({ell})")


def _v_row(a: Fraction) -> tuple[QVector, QVector]:
    norm = sqrt_rational(F(1) / (1 + a * a))
    e0, e1 = ket("0"), ket("1")
    return (
        vec_scale(vec_add(e0, vec_scale(e1, a)), norm),
        vec_scale(vec_add(vec_scale(e0, -a), e1), norm),
    )


def make_V(a, b) -> RowQLR:
    a, b = F(a), F(b)
    if a == b:
        raise ValueError("the two row parameters must differ, otherwise the rows repeat")
    return RowQLR((_v_row(a), _v_row(b)))


def product_construct(u: RowQLR, v: RowQLR, provenance: str = "") -> QLSGrid:
    """Combine an m x n and an n x m row rectangle into an order-mn grid.

    The cell in block (i,j) at inner position (k,l) is
    u[i][(j+k) mod n] tensor v[j][(i+l) mod m]; the resulting cardinality is
    the product of the two input cardinalities.
    """
    m, n = u.rows, u.cols
    if (v.rows, v.cols) != (n, m):
        raise ValueError(
            f"shape mismatch: {m}x{n} rectangle needs a {n}x{m} partner, got {v.rows}x{v.cols}"
        )
    ru, rv = verify_row_qlr(u), verify_row_qlr(v)
    if not ru.ok:
        raise ValueError(f"first rectangle is not row-orthonormal: {ru.message}")
    if not rv.ok:
        raise ValueError(f"second rectangle is not row-orthonormal: {rv.message}")
    order = m * n
    cells = [[None] * order for _ in range(order)]
    for i in range(m):
        for j in range(n):
            for k in range(n):
                uk = u.cells[i][(j + k) % n]
                for l in range(m):
                    cells[i * n + k][j * m + l] = tensor(uk, v.cells[j][(i + l) % m])
    return QLSGrid(cells, provenance=provenance)


def make_W(a, b) -> QLSGrid:
    a, b = F(a), F(b)
    return product_construct(make_V(0, 1), make_V(a, b), provenance=f"W({a},{b})")


def y_matrices(a, b) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """The four orthonormal matrices whose columns reproduce make_W(a, b)'s
    rows; kept as an independent regression target for the product rule."""
    a, b = F(a), F(b)
    na, nb = sqrt_rational(F(1) / (1 + a * a)), sqrt_rational(F(1) / (1 + b * b))
    sa, sb = a * na, b * nb
    ma, mb = sqrt_rational(F(1) / (2 + 2 * a * a)), sqrt_rational(F(1) / (2 + 2 * b * b))
    ta, tb = a * ma, b * mb
    y1 = mat([(na, -sa, 0, 0), (sa, na, 0, 0), (0, 0, nb, -sb), (0, 0, sb, nb)])
    y2 = mat([(0, 0, nb, -sb), (0, 0, sb, nb), (na, -sa, 0, 0), (sa, na, 0, 0)])
    y3 = mat([
        (-ta, ma, tb, -mb),
        (ma, ta, -mb, -tb),
        (-ta, ma, -tb, mb),
        (ma, ta, mb, tb),
    ])
    y4 = mat([
        (ta, -ma, -tb, mb),
        (-ma, -ta, mb, tb),
        (-ta, ma, -tb, mb),
        (ma, ta, mb, tb),
    ])
    return (y1, y2, y3, y4)


def grid_from_row_matrices(matrices: Sequence[Matrix], provenance: str) -> QLSGrid:
    """Order-4 grid whose i-th row is (|00>,|01>,|10>,|11>) . matrices[i]."""
    return QLSGrid([columns_as_vectors(m) for m in matrices], provenance=provenance)


def make_W0() -> QLSGrid:
    return grid_from_row_matrices(X_MATRICES, "W0")


def wk_row_matrices(k: int) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """X1 . Jk . X1^T . Xi for i = 1..4; X1 is orthonormal so X1^T inverts it."""
    if k not in (1, 2, 3, 4):
        raise ValueError(f"index {k} out of range; expected 1..4")
    left = mat_mul(mat_mul(X1, J_MATRICES[k - 1]), mat_transpose(X1))
    return tuple(mat_mul(left, xi) for xi in X_MATRICES)


def make_Wk(k: int) -> QLSGrid:
    return grid_from_row_matrices(wk_row_matrices(k), f"Wk({k})")


@dataclass(frozen=True)
class GeneratorId:
    """Parsed form of a generator name such as "H(5)", "W(5,6)" or "W0"."""

    tag: str
    params: tuple[Fraction, ...] = ()

    def canonical(self) -> str:
        if not self.params:
            return self.tag
        return f"{self.tag}({','.join(str(p) for p in self.params)})"

    def __str__(self) -> str:
        return self.canonical()


_PARAM_COUNTS = {"A": 1, "B": 1, "C": 1, "D": 1, "H": 1, "Hprime": 1, "W": 2, "W0": 0, "Wk": 1}


def parse_generator_id(text: str) -> GeneratorId:
    s = text.strip()
    if "(" in s:
        if not s.endswith(")"):
            raise ValueError(f"malformed generator name: {text!r}")
        tag, arglist = s[:-1].split("(", 1)
        tag = tag.strip()
        try:
            params = tuple(Fraction(t.strip()) for t in arglist.split(","))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad parameter in generator name {text!r}: {exc}") from None
    else:
        tag, params = s, ()
    if tag not in _PARAM_COUNTS:
        raise ValueError(
            f"unknown generator {tag!r}; expected one of {sorted(_PARAM_COUNTS)}"
        )
    if len(params) != _PARAM_COUNTS[tag]:
        raise ValueError(
            f"generator {tag} takes {_PARAM_COUNTS[tag]} parameter(s), got {len(params)}"
        )
    gid = GeneratorId(tag, params)
    _validate_generator_id(gid)
    return gid


def _validate_generator_id(gid: GeneratorId) -> None:
    if gid.tag in ("H", "Hprime", "Wk"):
        p = gid.params[0]
        if p.denominator != 1:
            raise ValueError(f"{gid.tag} index must be an integer, got {p}")
        idx = int(p)
        valid = {"H": range(9), "Hprime": (2, 4, 6, 8), "Wk": range(1, 5)}[gid.tag]
        if idx not in valid:
            raise ValueError(f"{gid.tag} index {idx} out of range")
    elif gid.tag == "W" and gid.params[0] == gid.params[1]:
        raise ValueError("W parameters must differ")


def _rotation_coordinate_grid(a: Fraction, provenance: str) -> QLSGrid:
    """The 2x2 rotation sub-square written in its own subspace coordinates,
    which makes it a standalone order-2 grid."""
    v0, v1 = _v_row(a)
    return QLSGrid(((v0, v1), (v1, v0)), provenance=provenance)


_REALIZE_CACHE: dict[str, QLSGrid] = {}


def realize_generator(gid: GeneratorId | str) -> QLSGrid:
    """Build (and cache) the grid a generator name denotes; cached grids are
    shared, so their verification and cardinality caches are shared too."""
    if isinstance(gid, str):
        gid = parse_generator_id(gid)
    key = gid.canonical()
    got = _REALIZE_CACHE.get(key)
    if got is None:
        if gid.tag in ("A", "B", "C", "D"):
            got = _rotation_coordinate_grid(gid.params[0], key)
        elif gid.tag == "H":
            got = make_H(int(gid.params[0]))
        elif gid.tag == "Hprime":
            got = make_Hprime(int(gid.params[0]))
        elif gid.tag == "W":
            got = make_W(*gid.params)
        elif gid.tag == "W0":
            got = make_W0()
        else:
            got = make_Wk(int(gid.params[0]))
        _REALIZE_CACHE[key] = got
    return got
