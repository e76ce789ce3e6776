"""Dense exact linear algebra over a coefficient field.

Plain Gaussian elimination with the first-nonzero pivot rule: with exact
scalars there is nothing to gain from magnitude pivoting, and a fixed rule
keeps every reduced form (and therefore every serialized kernel)
reproducible bit for bit.
"""

from __future__ import annotations

from .errors import DomainError, FieldMismatchError


class Matrix:
    """Immutable-by-convention dense matrix over a field.

    Rows and columns may be zero; a 0 x n matrix has full kernel and an
    n x 0 matrix has an empty one, which the labs rely on for degenerate
    systems.
    """

    def __init__(self, field, rows: int, cols: int, entries, *, _skip_check=False):
        if rows < 0 or cols < 0:
            raise DomainError("matrix dimensions must be nonnegative")
        data = [list(r) for r in entries]
        if len(data) != rows or any(len(r) != cols for r in data):
            raise DomainError(f"entry grid does not match shape {rows}x{cols}")
        if not _skip_check:
            for r in data:
                for j, x in enumerate(r):
                    if not field.is_element(x):
                        raise FieldMismatchError(
                            f"entry {x!r} is not a {field!r} scalar (mixed-field entries)"
                        )
                for j, x in enumerate(r):
                    r[j] = field.coerce(x)
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, field, rows_list):
        rows_list = [list(r) for r in rows_list]
        cols = len(rows_list[0]) if rows_list else 0
        return cls(field, len(rows_list), cols, rows_list)

    @classmethod
    def zero(cls, field, rows: int, cols: int):
        z = field.zero
        return cls(field, rows, cols, [[z] * cols for _ in range(rows)], _skip_check=True)

    @classmethod
    def identity(cls, field, n: int):
        z, o = field.zero, field.one
        return cls(
            field, n, n,
            [[o if i == j else z for j in range(n)] for i in range(n)],
            _skip_check=True,
        )

    def entry(self, i: int, j: int):
        return self.data[i][j]

    def row(self, i: int) -> list:
        return list(self.data[i])

    def column(self, j: int) -> list:
        return [r[j] for r in self.data]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field, self.cols, self.rows,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            _skip_check=True,
        )

    def matvec(self, v: list) -> list:
        if len(v) != self.cols:
            raise DomainError("vector length does not match column count")
        F = self.field
        out = []
        for r in self.data:
            acc = F.zero
            for a, b in zip(r, v):
                acc = F.add(acc, F.mul(a, b))
            out.append(acc)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and other.field == self.field
            and other.data == self.data
        )

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.rows}x{self.cols})"

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and the pivot column tuple."""
        F = self.field
        m = [list(r) for r in self.data]
        pivots = []
        prow = 0
        for col in range(self.cols):
            if prow >= self.rows:
                break
            sel = None
            for i in range(prow, self.rows):
                if not F.is_zero(m[i][col]):
                    sel = i
                    break
            if sel is None:
                continue
            m[prow], m[sel] = m[sel], m[prow]
            inv = F.inv(m[prow][col])
            m[prow] = [F.mul(inv, x) for x in m[prow]]
            for i in range(self.rows):
                if i != prow and not F.is_zero(m[i][col]):
                    c = m[i][col]
                    m[i] = [F.sub(x, F.mul(c, y)) for x, y in zip(m[i], m[prow])]
            pivots.append(col)
            prow += 1
        return Matrix(F, self.rows, self.cols, m, _skip_check=True), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[list]:
        """Echelonized right-kernel basis, one vector per free column.

        Vector for free column f has a 1 in slot f and zeros in every other
        free slot; the pivot slots are filled by back substitution.  Sorted
        by free column, so the basis is canonical for a given matrix.
        """
        F = self.field
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.cols) if j not in pivot_set]
        basis = []
        for f in free:
            v = [F.zero] * self.cols
            v[f] = F.one
            for k, pc in enumerate(pivots):
                v[pc] = F.neg(red.data[k][f])
            basis.append(v)
        return basis

    def det(self):
        if self.rows != self.cols:
            raise DomainError("determinant of a non-square matrix")
        F = self.field
        n = self.rows
        m = [list(r) for r in self.data]
        result = F.one
        for col in range(n):
            sel = None
            for i in range(col, n):
                if not F.is_zero(m[i][col]):
                    sel = i
                    break
            if sel is None:
                return F.zero
            if sel != col:
                m[col], m[sel] = m[sel], m[col]
                result = F.neg(result)
            result = F.mul(result, m[col][col])
            inv = F.inv(m[col][col])
            for i in range(col + 1, n):
                if not F.is_zero(m[i][col]):
                    c = F.mul(inv, m[i][col])
                    m[i] = [F.sub(x, F.mul(c, y)) for x, y in zip(m[i], m[col])]
        return result

    def solve(self, rhs: list) -> list | None:
        """One exact solution of A x = rhs, or None when inconsistent.

        Free variables are set to zero, so the returned solution is
        canonical.
        """
        if len(rhs) != self.rows:
            raise DomainError("right-hand side length does not match row count")
        F = self.field
        aug = Matrix(
            F, self.rows, self.cols + 1,
            [r + [b] for r, b in zip(self.data, rhs)],
            _skip_check=True,
        )
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [F.zero] * self.cols
        for k, pc in enumerate(pivots):
            x[pc] = red.data[k][self.cols]
        return x

    def to_json_dict(self) -> dict:
        F = self.field
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[F.format(x) for x in r] for r in self.data],
        }


def kernel_basis(m: Matrix) -> list[list]:
    """Right-kernel basis of m; len(result) + rank(m) == m.cols."""
    return m.kernel_basis()


def rank(m: Matrix) -> int:
    return m.rank()
