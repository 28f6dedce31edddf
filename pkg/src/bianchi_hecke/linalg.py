"""Exact integer linear algebra: Smith normal form with transforms, homology of
chain complexes with explicit bases, and induced maps on homology."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvariantError, NotAComplex, NotChainMap


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    data: tuple  # tuple of row tuples

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ValueError("matrix shape does not match its entries")

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> IntMatrix:
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols_o = list(zip(*other.data)) if other.rows else [()] * other.cols
        return IntMatrix(self.rows, other.cols, tuple(
            tuple(sum(a * b for a, b in zip(r, c)) for c in cols_o) for r in self.data))

    def __add__(self, other: IntMatrix) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)))

    def __neg__(self):
        return IntMatrix(self.rows, self.cols, tuple(tuple(-a for a in r) for r in self.data))

    def __sub__(self, other):
        return self + (-other)

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(self.cols, self.rows,
                         tuple(zip(*self.data)) if self.rows else tuple(() for _ in range(self.cols)))

    def is_zero(self) -> bool:
        return all(not x for r in self.data for x in r)

    def column(self, j: int) -> list[int]:
        return [r[j] for r in self.data]

    def apply(self, v) -> list[int]:
        return [sum(a * b for a, b in zip(r, v)) for r in self.data]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    def block(self, r0, r1, c0, c1) -> IntMatrix:
        return IntMatrix(r1 - r0, c1 - c0, tuple(r[c0:c1] for r in self.data[r0:r1]))

    def render(self) -> str:
        if not self.rows or not self.cols:
            return f"<{self.rows}x{self.cols} empty>"
        w = max(len(str(x)) for r in self.data for x in r)
        return "\n".join(" ".join(str(x).rjust(w) for x in r) for r in self.data)

    def __str__(self):
        return self.render()


def block_matrix(blocks, row_sizes, col_sizes) -> IntMatrix:
    """Assemble from a dict {(bi, bj): IntMatrix}; missing blocks are zero."""
    data = []
    for bi, rs in enumerate(row_sizes):
        for r in range(rs):
            row = []
            for bj, cs in enumerate(col_sizes):
                b = blocks.get((bi, bj))
                row.extend(b.data[r] if b is not None else (0,) * cs)
            data.append(tuple(row))
    return IntMatrix(sum(row_sizes), sum(col_sizes), tuple(data))


def det(m: IntMatrix) -> int:
    """Bareiss fraction-free determinant."""
    n = m.rows
    if n != m.cols:
        raise ValueError("determinant of a non-square matrix")
    a = [list(r) for r in m.data]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


@dataclass(frozen=True)
class SmithDecomposition:
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    Uinv: IntMatrix
    Vinv: IntMatrix

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i, i] for i in range(min(self.D.rows, self.D.cols)) if self.D[i, i]]

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def snf(A: IntMatrix, check: bool = True) -> SmithDecomposition:
    """Smith normal form U A V = D with unimodular U, V.

    Pivots on the entry of least absolute value in the remaining block.
    The inverses of U and V are tracked alongside.
    """
    m, n = A.rows, A.cols
    a = [list(r) for r in A.data]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    Ui = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    Vi = [[int(i == j) for j in range(n)] for i in range(n)]

    # row op: row_i += q * row_k  (U likewise, U^-1 gets col_k -= q * col_i)
    def row_add(i, k, q):
        a[i] = [x + q * y for x, y in zip(a[i], a[k])]
        U[i] = [x + q * y for x, y in zip(U[i], U[k])]
        for r in Ui:
            r[k] -= q * r[i]

    def row_swap(i, k):
        a[i], a[k] = a[k], a[i]
        U[i], U[k] = U[k], U[i]
        for r in Ui:
            r[i], r[k] = r[k], r[i]

    def row_neg(i):
        a[i] = [-x for x in a[i]]
        U[i] = [-x for x in U[i]]
        for r in Ui:
            r[i] = -r[i]

    # col op: col_j += q * col_k  (V likewise, V^-1 gets row_k -= q * row_j)
    def col_add(j, k, q):
        for r in a:
            r[j] += q * r[k]
        for r in V:
            r[j] += q * r[k]
        Vi[k] = [x - q * y for x, y in zip(Vi[k], Vi[j])]

    def col_swap(j, k):
        for r in a:
            r[j], r[k] = r[k], r[j]
        for r in V:
            r[j], r[k] = r[k], r[j]
        Vi[j], Vi[k] = Vi[k], Vi[j]

    t = 0
    while t < min(m, n):
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        row_swap(t, piv[0])
        col_swap(t, piv[1])
        while True:
            done = True
            for i in range(t + 1, m):
                if a[i][t]:
                    row_add(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        done = False
            for j in range(t + 1, n):
                if a[t][j]:
                    col_add(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        done = False
            if done:
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if a[i][j] % a[t][t]), None)
                if bad is None:
                    break
                row_add(t, bad[0], 1)
                continue
            # a smaller remainder exists in row t or column t; move it to the pivot
            best = (t, t)
            for i in range(t, m):
                if a[i][t] and abs(a[i][t]) < abs(a[best[0]][best[1]]):
                    best = (i, t)
            for j in range(t, n):
                if a[t][j] and abs(a[t][j]) < abs(a[best[0]][best[1]]):
                    best = (t, j)
            row_swap(t, best[0])
            col_swap(t, best[1])
        if a[t][t] < 0:
            row_neg(t)
        t += 1

    res = SmithDecomposition(IntMatrix.from_rows(U, m), IntMatrix.from_rows(a, n),
                             IntMatrix.from_rows(V, n), IntMatrix.from_rows(Ui, m),
                             IntMatrix.from_rows(Vi, n))
    if check:
        _check_snf(A, res)
    return res


def _check_snf(A: IntMatrix, s: SmithDecomposition) -> None:
    if s.U @ A @ s.V != s.D:
        raise InvariantError("U A V != D")
    if s.U @ s.Uinv != IntMatrix.identity(A.rows) or s.V @ s.Vinv != IntMatrix.identity(A.cols):
        raise InvariantError("transform inverses are wrong")
    d = s.D
    for i in range(d.rows):
        for j in range(d.cols):
            if i != j and d[i, j]:
                raise InvariantError("D is not diagonal")
    diag = [d[i, i] for i in range(min(d.rows, d.cols))]
    r = len([x for x in diag if x])
    if any(x <= 0 for x in diag[:r]) or any(diag[r:]):
        raise InvariantError("diagonal is not positive-then-zero")
    if any(diag[k + 1] % diag[k] for k in range(r - 1)):
        raise InvariantError("diagonal is not a divisibility chain")


def rank(A: IntMatrix) -> int:
    return snf(A, check=False).rank


@dataclass(frozen=True)
class FgAbGroup:
    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        if any(t <= 1 for t in self.torsion) or any(
                b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError(f"torsion {self.torsion} is not a divisibility chain of integers > 1")

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = [f"Z/{t}" for t in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class Homology:
    """ker(d_out) / im(d_in) with an explicit basis.

    ``generators`` are chain vectors: free generators first, then torsion
    generators in the order of ``group.torsion``.
    """

    group: FgAbGroup
    generators: tuple
    _kernel_rank_offset: int = field(repr=False)
    _Vinv: IntMatrix = field(repr=False)
    _U2: IntMatrix = field(repr=False)
    _free_pos: tuple = field(repr=False)
    _tors_pos: tuple = field(repr=False)

    def coordinates(self, cycle) -> list[int]:
        """Coordinates of a cycle in the basis (torsion entries reduced)."""
        y = self._Vinv.apply(cycle)
        r = self._kernel_rank_offset
        if any(y[:r]):
            raise InvariantError("vector is not a cycle")
        z = self._U2.apply(y[r:])
        out = [z[i] for i in self._free_pos]
        out += [z[i] % t for i, t in zip(self._tors_pos, self.group.torsion)]
        return out

    def reduce_rows(self, m: IntMatrix) -> IntMatrix:
        """Reduce rows of a matrix with values in this group modulo torsion."""
        r = self.group.free_rank
        tors = self.group.torsion
        data = [row if i < r else tuple(x % tors[i - r] for x in row)
                for i, row in enumerate(m.data)]
        return IntMatrix(m.rows, m.cols, tuple(data))


def homology(d_out: IntMatrix, d_in: IntMatrix) -> Homology:
    """Homology at a chain group C with d_out: C -> C' and d_in: C'' -> C."""
    n = d_out.cols
    if d_in.rows != n:
        raise ValueError(f"incompatible shapes {d_out.shape} and {d_in.shape}")
    if not (d_out @ d_in).is_zero():
        raise NotAComplex("composite of consecutive differentials is nonzero")
    s1 = snf(d_out)
    r1 = s1.rank
    A = (s1.Vinv @ d_in).block(r1, n, 0, d_in.cols)
    s2 = snf(A)
    diag = s2.diagonal
    free_pos = tuple(range(len(diag), n - r1))
    tors_pos = tuple(i for i, e in enumerate(diag) if e > 1)
    kernel = s1.V.block(0, n, r1, n)
    gens = []
    for pos in free_pos + tors_pos:
        gens.append(tuple(kernel.apply(s2.Uinv.column(pos))))
    group = FgAbGroup(len(free_pos), tuple(diag[i] for i in tors_pos))
    return Homology(group, tuple(gens), r1, s1.Vinv, s2.U, free_pos, tors_pos)


@dataclass(frozen=True)
class ChainComplex:
    """Differentials keyed by source degree.

    ``variance='homology'``: diffs[k]: C_k -> C_{k-1}.
    ``variance='cohomology'``: diffs[k]: C^k -> C^{k+1}.
    """

    dims: tuple
    diffs: dict
    variance: str = "homology"

    @property
    def step(self) -> int:
        return -1 if self.variance == "homology" else 1

    def dim(self, k: int) -> int:
        return self.dims[k] if 0 <= k < len(self.dims) else 0

    def out(self, k: int) -> IntMatrix:
        if k in self.diffs:
            return self.diffs[k]
        return IntMatrix.zeros(self.dim(k + self.step), self.dim(k))

    def into(self, k: int) -> IntMatrix:
        return self.out(k - self.step)

    def check(self) -> None:
        for k in range(len(self.dims)):
            if not (self.out(k + self.step) @ self.out(k)).is_zero():
                raise NotAComplex(f"d o d != 0 starting in degree {k}")

    def homology(self, k: int) -> Homology:
        return homology(self.out(k), self.into(k))

    def transpose(self) -> ChainComplex:
        other = "cohomology" if self.variance == "homology" else "homology"
        return ChainComplex(self.dims, {k + self.step: d.T for k, d in self.diffs.items()}, other)


def check_chain_map(src: ChainComplex, tgt: ChainComplex, f: dict, label: str = "") -> None:
    """Raise NotChainMap unless f[k+step] d_k = d'_k f[k] in every degree."""
    if src.variance != tgt.variance:
        raise NotChainMap("complexes have different variance")
    for k in range(max(len(src.dims), len(tgt.dims))):
        fk = f.get(k, IntMatrix.zeros(tgt.dim(k), src.dim(k)))
        j = k + src.step
        fj = f.get(j, IntMatrix.zeros(tgt.dim(j), src.dim(j)))
        if fj @ src.out(k) != tgt.out(k) @ fk:
            raise NotChainMap(f"{label or 'chain map'} fails to commute in degree {k}",
                              degree=k)


def induced_on_homology(src: ChainComplex, tgt: ChainComplex, f: dict, n: int,
                        verify: bool = True) -> IntMatrix:
    """Matrix of H_n(f) in the canonical bases of ``homology``."""
    if verify:
        check_chain_map(src, tgt, f)
    hs, ht = src.homology(n), tgt.homology(n)
    fn = f.get(n, IntMatrix.zeros(tgt.dim(n), src.dim(n)))
    cols = [ht.coordinates(fn.apply(g)) for g in hs.generators]
    rows = len(ht.generators)
    return IntMatrix(rows, len(cols), tuple(tuple(c[i] for c in cols) for i in range(rows)))


def charpoly(m: IntMatrix) -> list[int]:
    """Coefficients of det(xI - M), leading coefficient first (Faddeev-LeVerrier)."""
    n = m.rows
    M = [[Fraction(x) for x in r] for r in m.data]
    coeffs = [Fraction(1)]
    Mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # Mk = M (M_{k-1} + c_{k-1} I)
        prev = [[Mk[i][j] + (coeffs[-1] if i == j else 0) for j in range(n)] for i in range(n)]
        Mk = [[sum(M[i][t] * prev[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        coeffs.append(-sum(Mk[i][i] for i in range(n)) / k)
    return [int(c) for c in coeffs]


def trace(m: IntMatrix) -> int:
    return sum(m[i, i] for i in range(m.rows))
