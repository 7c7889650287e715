"""Dense exact linear algebra over a :class:`~tannakit.fields.Field`.

A :class:`Matrix` doubles as a linear map under the column convention:
columns are images of the domain basis vectors, so ``cols = domain_dim``
and ``rows = codomain_dim``, and ``A @ B`` is composition ``A ∘ B``.

The Kronecker index convention is fixed globally: the basis vector
``e_i ⊗ e_j`` of ``V ⊗ W`` has flat index ``i * dim(W) + j``, tensor
products associate left-to-right and are fully flattened.  All structural
isomorphisms of the tensor product of spaces are identity reindexings
under this convention.
"""

from .fields import Field


class Matrix:
    """Immutable-by-convention dense matrix over an exact field."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, data, cols: int = None):
        self.field = field
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        if self.rows:
            self.cols = len(self.data[0])
        else:
            self.cols = 0 if cols is None else cols
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged matrix rows")

    # -- construction -------------------------------------------------

    @classmethod
    def zeros(cls, field, rows, cols):
        z = field.zero()
        m = cls.__new__(cls)
        m.field = field
        m.rows = rows
        m.cols = cols
        m.data = [[z] * cols for _ in range(rows)]
        return m

    @classmethod
    def identity(cls, field, n):
        m = cls.zeros(field, n, n)
        one = field.one()
        for i in range(n):
            m.data[i][i] = one
        return m

    @classmethod
    def from_ints(cls, field, rows):
        return cls(field, [[field.from_int(x) for x in row] for row in rows])

    @classmethod
    def from_strings(cls, field, rows):
        return cls(field, [[field.parse(x) for x in row] for row in rows])

    @classmethod
    def column(cls, field, entries):
        return cls(field, [[x] for x in entries])

    @classmethod
    def row(cls, field, entries):
        return cls(field, [list(entries)])

    def copy(self):
        return Matrix(self.field, self.data, cols=self.cols)

    # -- linear-map view ----------------------------------------------

    @property
    def domain_dim(self):
        return self.cols

    @property
    def codomain_dim(self):
        return self.rows

    # -- equality / hash / repr ---------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        return "Matrix(%s, %s)" % (self.field, self.to_strings())

    def to_strings(self):
        f = self.field.format
        return [[f(x) for x in row] for row in self.data]

    def is_zero(self):
        z = self.field.zero()
        return all(x == z for row in self.data for x in row)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        self._same_shape(other)
        add = self.field.add
        return Matrix(self.field, [[add(a, b) for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other):
        self._same_shape(other)
        sub = self.field.sub
        return Matrix(self.field, [[sub(a, b) for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.data, other.data)])

    def __neg__(self):
        neg = self.field.neg
        return Matrix(self.field, [[neg(a) for a in row] for row in self.data])

    def scale(self, c):
        mul = self.field.mul
        return Matrix(self.field, [[mul(c, a) for a in row] for row in self.data])

    def __matmul__(self, other):
        """Matrix product = composition of linear maps (self after other).

        Iteration order skips zero entries, so products of the sparse
        structural matrices that dominate this domain stay cheap.
        """
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("composition mismatch: %dx%d @ %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        field = self.field
        add, mul = field.add, field.mul
        zero, one = field.zero(), field.one()
        out = Matrix.zeros(field, self.rows, other.cols)
        bnz = [[(j, v) for j, v in enumerate(row) if v != zero]
               for row in other.data]
        for i, arow in enumerate(self.data):
            orow = out.data[i]
            for k, a in enumerate(arow):
                if a == zero:
                    continue
                if a == one:
                    for j, b in bnz[k]:
                        orow[j] = add(orow[j], b)
                else:
                    for j, b in bnz[k]:
                        orow[j] = add(orow[j], mul(a, b))
        return out

    def transpose(self):
        out = Matrix.zeros(self.field, self.cols, self.rows)
        for i in range(self.rows):
            for j in range(self.cols):
                out.data[j][i] = self.data[i][j]
        return out

    def kron(self, other):
        """Kronecker product under the fixed index convention."""
        field = self.field
        mul = field.mul
        zero, one = field.zero(), field.one()
        out = Matrix.zeros(field, self.rows * other.rows, self.cols * other.cols)
        bnz = [[(l, v) for l, v in enumerate(row) if v != zero]
               for row in other.data]
        for i in range(self.rows):
            arow = self.data[i]
            for j in range(self.cols):
                a = arow[j]
                if a == zero:
                    continue
                base = j * other.cols
                for k in range(other.rows):
                    orow = out.data[i * other.rows + k]
                    if a == one:
                        for l, v in bnz[k]:
                            orow[base + l] = v
                    else:
                        for l, v in bnz[k]:
                            orow[base + l] = mul(a, v)
        return out

    def apply(self, vec):
        """Image of a coordinate vector (list of scalars)."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        add, mul, zero = self.field.add, self.field.mul, self.field.zero()
        out = []
        for row in self.data:
            acc = zero
            for a, x in zip(row, vec):
                if a != zero and x != zero:
                    acc = add(acc, mul(a, x))
            out.append(acc)
        return out

    def col(self, j):
        return [row[j] for row in self.data]

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def transpose(a: Matrix) -> Matrix:
    return a.transpose()


def kron(a: Matrix, b: Matrix) -> Matrix:
    return a.kron(b)


def direct_sum(a: Matrix, b: Matrix) -> Matrix:
    """Block-diagonal sum a ⊕ b."""
    out = Matrix.zeros(a.field, a.rows + b.rows, a.cols + b.cols)
    for i in range(a.rows):
        out.data[i][:a.cols] = list(a.data[i])
    for i in range(b.rows):
        out.data[a.rows + i][a.cols:] = list(b.data[i])
    return out


def swap_matrix(field, a: int, b: int) -> Matrix:
    """Commutation matrix V⊗W → W⊗V sending e_j⊗e_k to e_k⊗e_j (dims a, b)."""
    out = Matrix.zeros(field, a * b, a * b)
    one = field.one()
    for j in range(a):
        for k in range(b):
            out.data[k * a + j][j * b + k] = one
    return out


# -- echelon forms and subspaces --------------------------------------


def rref(m: Matrix):
    """Reduced row-echelon form.

    Returns ``(echelon, pivots, rank)`` where pivots is the tuple of
    pivot column indices and rank = len(pivots).  The RREF is the unique
    one, so it doubles as a canonical form for row spaces.
    """
    field = m.field
    zero = field.zero()
    data = [list(row) for row in m.data]
    rows, cols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(cols):
        pivot_row = None
        for i in range(r, rows):
            if data[i][c] != zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        data[r], data[pivot_row] = data[pivot_row], data[r]
        inv = field.inv(data[r][c])
        data[r] = [field.mul(inv, x) for x in data[r]]
        for i in range(rows):
            if i != r and data[i][c] != zero:
                factor = data[i][c]
                data[i] = [field.sub(x, field.mul(factor, y))
                           for x, y in zip(data[i], data[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return Matrix(field, data, cols=cols), tuple(pivots), len(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[2]


class SubspaceBasis:
    """Subspace of K^ambient, stored as the RREF rows of a spanning set."""

    __slots__ = ("field", "ambient_dim", "vectors")

    def __init__(self, field, ambient_dim, vectors, reduce=True):
        self.field = field
        self.ambient_dim = ambient_dim
        vectors = [list(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError("vector length != ambient dimension")
        if reduce and vectors:
            ech, pivots, _ = rref(Matrix(field, vectors))
            vectors = [list(ech.data[i]) for i in range(len(pivots))]
        self.vectors = vectors

    @property
    def dim(self):
        return len(self.vectors)

    def pivots(self):
        zero = self.field.zero()
        out = []
        for v in self.vectors:
            for c, x in enumerate(v):
                if x != zero:
                    out.append(c)
                    break
        return tuple(out)

    def contains(self, vec):
        """Membership test by reducing against the echelon rows."""
        zero = self.field.zero()
        v = list(vec)
        for row, p in zip(self.vectors, self.pivots()):
            if v[p] != zero:
                c = v[p]
                v = [self.field.sub(x, self.field.mul(c, y)) for x, y in zip(v, row)]
        return all(x == zero for x in v)

    def __eq__(self, other):
        return (isinstance(other, SubspaceBasis)
                and self.ambient_dim == other.ambient_dim
                and self.vectors == other.vectors)

    def __repr__(self):
        return "SubspaceBasis(dim %d of K^%d)" % (self.dim, self.ambient_dim)


def row_space(m: Matrix) -> SubspaceBasis:
    return SubspaceBasis(m.field, m.cols, m.data)


def kernel_basis(f: Matrix) -> SubspaceBasis:
    """Basis of { v : f v = 0 }; dimension = domain_dim − rank(f)."""
    field = f.field
    ech, pivots, _ = rref(f)
    free = [c for c in range(f.cols) if c not in pivots]
    vectors = []
    zero, one = field.zero(), field.one()
    for c in free:
        v = [zero] * f.cols
        v[c] = one
        for r, p in enumerate(pivots):
            v[p] = field.neg(ech.data[r][c])
        vectors.append(v)
    return SubspaceBasis(field, f.cols, vectors)


def image_basis(f: Matrix) -> SubspaceBasis:
    """Column space of f, canonicalized as an echelon basis."""
    return row_space(f.transpose())


def solve(a: Matrix, b):
    """One solution x of a x = b (b a coordinate vector), or None."""
    field = a.field
    aug = Matrix(field, [row + [bx] for row, bx in zip(a.data, b)]) \
        if a.rows else Matrix.zeros(field, 0, a.cols + 1)
    ech, pivots, _ = rref(aug)
    if a.cols in pivots:
        return None
    zero = field.zero()
    x = [zero] * a.cols
    for r, p in enumerate(pivots):
        x[p] = ech.data[r][a.cols]
    return x


solve_linear_system = solve


def solve_matrix(a: Matrix, b: Matrix):
    """One solution X of a X = b, or None.  Solved column by column."""
    cols = []
    for j in range(b.cols):
        x = solve(a, b.col(j))
        if x is None:
            return None
        cols.append(x)
    out = Matrix.zeros(a.field, a.cols, b.cols)
    for j, x in enumerate(cols):
        for i, v in enumerate(x):
            out.data[i][j] = v
    return out


def intersect_subspaces(u: SubspaceBasis, v: SubspaceBasis) -> SubspaceBasis:
    """Intersection via the kernel of the stacked coefficient matrix."""
    if u.ambient_dim != v.ambient_dim:
        raise ValueError("ambient dimensions differ")
    field = u.field
    if u.dim == 0 or v.dim == 0:
        return SubspaceBasis(field, u.ambient_dim, [])
    # columns: coefficients on u-basis then v-basis; rows: ambient coords
    cols = [list(w) for w in u.vectors] + [[field.neg(x) for x in w] for w in v.vectors]
    stacked = Matrix(field, cols).transpose()
    ker = kernel_basis(stacked)
    vectors = []
    for coeffs in ker.vectors:
        vec = [field.zero()] * u.ambient_dim
        for c, w in zip(coeffs[:u.dim], u.vectors):
            for i, x in enumerate(w):
                vec[i] = field.add(vec[i], field.mul(c, x))
        vectors.append(vec)
    return SubspaceBasis(field, u.ambient_dim, vectors)


def quotient(ambient_dim: int, relations: SubspaceBasis):
    """Quotient of K^ambient by a relation subspace.

    Returns ``(proj, section)``: ``proj`` is surjective with kernel exactly
    the relation span, ``section`` satisfies ``proj @ section = identity``,
    and the quotient basis is the non-pivot coordinates of the relation
    echelon (canonical representatives).
    """
    if relations.ambient_dim != ambient_dim:
        raise ValueError("relations live in the wrong ambient space")
    field = relations.field
    pivots = relations.pivots()
    free = [c for c in range(ambient_dim) if c not in pivots]
    q = len(free)
    proj = Matrix.zeros(field, q, ambient_dim)
    one = field.one()
    for i, c in enumerate(free):
        proj.data[i][c] = one
    for row, p in zip(relations.vectors, pivots):
        # e_p ≡ -Σ_{free n} row[n]·e_n modulo the relations
        for i, n in enumerate(free):
            proj.data[i][p] = field.neg(row[n])
    section = Matrix.zeros(field, ambient_dim, q)
    for i, c in enumerate(free):
        section.data[c][i] = one
    return proj, section
