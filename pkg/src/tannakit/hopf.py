"""Structure-constant records for (co)algebras, bialgebras, Hopf algebras
and comodules over a finite-dimensional carrier, with every axiom an
exact matrix identity, plus the convolution algebra, comatrix coalgebras,
grouplike elements and characters.

Comodules are left comodules throughout: ρ: M → B⊗M.  A source written
in the right orientation M → M⊗B can be adapted with ``flip_coaction``.
"""

from itertools import product

from .fields import QQ
from .linalg import Matrix, kron, swap_matrix
from .report import Check, Report, check_equal


class CoalgebraData:
    """Carrier with comultiplication Δ: B → B⊗B and counit ε: B → K."""

    def __init__(self, dim: int, delta: Matrix, eps: Matrix):
        if delta.domain_dim != dim or delta.codomain_dim != dim * dim:
            raise ValueError("delta must be dim^2 x dim")
        if eps.domain_dim != dim or eps.codomain_dim != 1:
            raise ValueError("eps must be 1 x dim")
        self.dim = dim
        self.delta = delta
        self.eps = eps

    @property
    def field(self):
        return self.delta.field

    def checks(self) -> Report:
        field = self.field
        ident = Matrix.identity(field, self.dim)
        report = Report()
        lhs = kron(self.delta, ident) @ self.delta
        rhs = kron(ident, self.delta) @ self.delta
        report.add(check_equal("coassociativity", lhs, rhs))
        report.add(check_equal("counit_left", kron(self.eps, ident) @ self.delta, ident))
        report.add(check_equal("counit_right", kron(ident, self.eps) @ self.delta, ident))
        return report

    def to_json(self):
        return {"dim": self.dim, "delta": self.delta.to_strings(),
                "eps": self.eps.to_strings()}


class AlgebraData:
    """Carrier with multiplication m: A⊗A → A and unit u: K → A."""

    def __init__(self, dim: int, m: Matrix, u: Matrix):
        if m.domain_dim != dim * dim or m.codomain_dim != dim:
            raise ValueError("m must be dim x dim^2")
        if u.domain_dim != 1 or u.codomain_dim != dim:
            raise ValueError("u must be dim x 1")
        self.dim = dim
        self.m = m
        self.u = u

    @property
    def field(self):
        return self.m.field

    def checks(self) -> Report:
        field = self.field
        ident = Matrix.identity(field, self.dim)
        report = Report()
        lhs = self.m @ kron(self.m, ident)
        rhs = self.m @ kron(ident, self.m)
        report.add(check_equal("associativity", lhs, rhs))
        report.add(check_equal("unit_left", self.m @ kron(self.u, ident), ident))
        report.add(check_equal("unit_right", self.m @ kron(ident, self.u), ident))
        return report


class BialgebraData:
    """Compatible coalgebra and algebra structures on one carrier."""

    def __init__(self, coalgebra: CoalgebraData, algebra: AlgebraData):
        if coalgebra.dim != algebra.dim:
            raise ValueError("coalgebra and algebra dimensions differ")
        self.coalgebra = coalgebra
        self.algebra = algebra
        self.dim = coalgebra.dim

    @property
    def field(self):
        return self.coalgebra.field

    @property
    def delta(self):
        return self.coalgebra.delta

    @property
    def eps(self):
        return self.coalgebra.eps

    @property
    def m(self):
        return self.algebra.m

    @property
    def u(self):
        return self.algebra.u

    def checks(self) -> Report:
        field = self.field
        n = self.dim
        report = Report()
        report.extend(self.coalgebra.checks())
        report.extend(self.algebra.checks())
        psi = swap_matrix(field, n, n)
        ident = Matrix.identity(field, n)
        lhs = self.delta @ self.m
        rhs = (kron(self.m, self.m) @ kron(kron(ident, psi), ident)
               @ kron(self.delta, self.delta))
        report.add(check_equal("bialgebra_delta_m", lhs, rhs))
        report.add(check_equal("bialgebra_eps_m", self.eps @ self.m,
                               kron(self.eps, self.eps)))
        report.add(check_equal("bialgebra_delta_u", self.delta @ self.u,
                               kron(self.u, self.u)))
        report.add(check_equal("bialgebra_eps_u", self.eps @ self.u,
                               Matrix.identity(field, 1)))
        return report

    def to_json(self):
        out = self.coalgebra.to_json()
        out["m"] = self.m.to_strings()
        out["u"] = self.u.to_strings()
        return out


class HopfData:
    """Bialgebra with an antipode inverting the identity under convolution."""

    def __init__(self, bialgebra: BialgebraData, antipode: Matrix):
        if antipode.rows != bialgebra.dim or antipode.cols != bialgebra.dim:
            raise ValueError("antipode must be dim x dim")
        self.bialgebra = bialgebra
        self.antipode = antipode
        self.dim = bialgebra.dim

    @property
    def field(self):
        return self.bialgebra.field

    def checks(self) -> Report:
        b = self.bialgebra
        ident = Matrix.identity(self.field, self.dim)
        u_eps = b.u @ b.eps
        report = Report()
        report.extend(b.checks())
        lhs = b.m @ kron(self.antipode, ident) @ b.delta
        report.add(check_equal("antipode_left", lhs, u_eps))
        rhs = b.m @ kron(ident, self.antipode) @ b.delta
        report.add(check_equal("antipode_right", rhs, u_eps))
        return report

    def to_json(self):
        out = self.bialgebra.to_json()
        out["antipode"] = self.antipode.to_strings()
        return out


class ComoduleData:
    """Space with a left coaction ρ: M → B⊗M over a coalgebra of known dim."""

    def __init__(self, coalgebra_dim: int, space_dim: int, rho: Matrix):
        if rho.domain_dim != space_dim or rho.codomain_dim != coalgebra_dim * space_dim:
            raise ValueError("rho must be (coalgebra_dim*space_dim) x space_dim")
        self.coalgebra_dim = coalgebra_dim
        self.space_dim = space_dim
        self.rho = rho

    @property
    def field(self):
        return self.rho.field

    def checks(self, B: CoalgebraData) -> Report:
        if B.dim != self.coalgebra_dim:
            raise ValueError("coalgebra dimension mismatch")
        field = self.field
        id_m = Matrix.identity(field, self.space_dim)
        id_b = Matrix.identity(field, B.dim)
        report = Report()
        lhs = kron(B.delta, id_m) @ self.rho
        rhs = kron(id_b, self.rho) @ self.rho
        report.add(check_equal("coaction_coassoc", lhs, rhs))
        report.add(check_equal("coaction_counit", kron(B.eps, id_m) @ self.rho, id_m))
        return report


def flip_coaction(rho_right: Matrix, coalgebra_dim: int, space_dim: int) -> Matrix:
    """Adapt a right-oriented coaction M → M⊗B to the left orientation."""
    return swap_matrix(rho_right.field, space_dim, coalgebra_dim) @ rho_right


def check_comodule(m: ComoduleData, B: CoalgebraData) -> bool:
    return m.checks(B).passed


def check_comodule_morphism(f: Matrix, m1: ComoduleData, m2: ComoduleData,
                            B: CoalgebraData) -> bool:
    """ρ'∘f = (id_B⊗f)∘ρ as an exact identity."""
    if f.domain_dim != m1.space_dim or f.codomain_dim != m2.space_dim:
        raise ValueError("map shape does not match the comodules")
    id_b = Matrix.identity(B.field, B.dim)
    return m2.rho @ f == kron(id_b, f) @ m1.rho


def convolution(f: Matrix, g: Matrix, C: CoalgebraData, A: AlgebraData) -> Matrix:
    """f ∗ g = m_A ∘ (f⊗g) ∘ Δ_C for maps C → A."""
    if f.domain_dim != C.dim or g.domain_dim != C.dim:
        raise ValueError("convolution operands must start at the coalgebra")
    if f.codomain_dim != A.dim or g.codomain_dim != A.dim:
        raise ValueError("convolution operands must land in the algebra")
    return A.m @ kron(f, g) @ C.delta


def convolve_functionals(xi1: Matrix, xi2: Matrix, C: CoalgebraData) -> Matrix:
    """Convolution of functionals C → K (the algebra is K itself)."""
    return kron(xi1, xi2) @ C.delta


def scalar_algebra(field) -> AlgebraData:
    one = Matrix.identity(field, 1)
    return AlgebraData(1, one, one)


def comatrix_coalgebra(n: int, field=QQ) -> CoalgebraData:
    """V⊗V^∨ with Δ(e_i⊗e_j^∨) = Σ_k (e_i⊗e_k^∨)⊗(e_k⊗e_j^∨), ε = δ_ij."""
    dim = n * n
    delta = Matrix.zeros(field, dim * dim, dim)
    eps = Matrix.zeros(field, 1, dim)
    one = field.one()
    for i in range(n):
        for j in range(n):
            col = i * n + j
            for k in range(n):
                row = (i * n + k) * dim + (k * n + j)
                delta.data[row][col] = one
            if i == j:
                eps.data[0][col] = one
    return CoalgebraData(dim, delta, eps)


class UnsupportedCoalgebraError(ValueError):
    """Grouplike search over the rationals needs a solvable Δ shape."""


def is_grouplike(B: CoalgebraData, vec) -> bool:
    field = B.field
    col = Matrix.column(field, vec)
    return (B.delta @ col == kron(col, col)
            and B.eps @ col == Matrix.identity(field, 1))


def grouplikes(B: CoalgebraData, candidates=None, enumeration_bound=1 << 17):
    """All v with Δ(v) = v⊗v and ε(v) = 1, as coordinate vectors.

    Over a prime field the solutions are found by exhaustive enumeration
    (the state space must stay under ``enumeration_bound``).  Over the
    rationals the solved case is the diagonal monomial shape
    Δ(b_i) = b_i⊗b_i, where the quadratic system collapses to picking
    single basis vectors with ε = 1; any other shape needs an explicit
    candidate list, which is filtered by the definition.
    """
    field = B.field
    if candidates is not None:
        return [list(v) for v in candidates if is_grouplike(B, v)]
    if hasattr(field, "p"):
        total = field.p ** B.dim
        if total > enumeration_bound:
            raise UnsupportedCoalgebraError(
                "enumeration space %d exceeds the bound" % total)
        out = []
        for vec in product(field.elements(), repeat=B.dim):
            if is_grouplike(B, list(vec)):
                out.append(list(vec))
        return out
    if _is_diagonal_monomial(B):
        out = []
        one = field.one()
        zero = field.zero()
        for i in range(B.dim):
            if B.eps.data[0][i] == one:
                vec = [zero] * B.dim
                vec[i] = one
                out.append(vec)
        return out
    raise UnsupportedCoalgebraError(
        "over Q only diagonal monomial comultiplications are solved; "
        "supply candidates")


def _is_diagonal_monomial(B: CoalgebraData) -> bool:
    """Every Δ(b_i) = b_i⊗b_i exactly."""
    field = B.field
    one, zero = field.one(), field.zero()
    for i in range(B.dim):
        col = B.delta.col(i)
        want = i * B.dim + i
        for pos, x in enumerate(col):
            if pos == want:
                if x != one:
                    return False
            elif x != zero:
                return False
    return True


def grouplike_group(H: HopfData, gls) -> tuple:
    """Multiplication table of a grouplike set under m, with verification.

    Checks closure, that u(1) is the neutral element and a member, and
    that the antipode sends each grouplike to its two-sided inverse.
    Returns (table, report); table[i][j] is the index of g_i·g_j.
    """
    field = H.field
    b = H.bialgebra
    report = Report()
    cols = [Matrix.column(field, v) for v in gls]
    unit = b.u
    unit_idx = None
    for idx, c in enumerate(cols):
        if c == unit:
            unit_idx = idx
    report.add(check_equal("grouplike_unit_is_member", unit,
                           cols[unit_idx] if unit_idx is not None
                           else Matrix.zeros(field, H.dim, 1)))
    table = []
    closure_ok = True
    for ci in cols:
        row = []
        for cj in cols:
            prod = b.m @ kron(ci, cj)
            match = None
            for idx, ck in enumerate(cols):
                if prod == ck:
                    match = idx
            if match is None:
                closure_ok = False
            row.append(match)
        table.append(row)
    report.add(Check("grouplike_closure", closure_ok,
                     residue="0" if closure_ok else "escapes"))
    inverse_ok = True
    for idx, ci in enumerate(cols):
        inv = H.antipode @ ci
        left = b.m @ kron(inv, ci)
        right = b.m @ kron(ci, inv)
        if not (left == unit and right == unit):
            inverse_ok = False
    report.add(Check("grouplike_antipode_inverse", inverse_ok,
                     residue="0" if inverse_ok else "not inverse"))
    return table, report


def check_character(chi: Matrix, B: BialgebraData) -> bool:
    """χ∘m = χ⊗χ (as a bilinear form) and χ∘u = 1, exactly."""
    if chi.rows != 1 or chi.cols != B.dim:
        raise ValueError("character must be a functional on the bialgebra")
    return (chi @ B.m == kron(chi, chi)
            and chi @ B.u == Matrix.identity(B.field, 1))


def characters(B: BialgebraData, candidates=None, enumeration_bound=1 << 17):
    """Algebra morphisms B → K, the dual notion of grouplikes.

    Over a prime field: exhaustive enumeration of functionals.  Over the
    rationals the solved case is a grouplike basis (diagonal monomial Δ):
    the basis is then a finite monoid under m, each basis element has a
    multiplicative order there, and a character value t over Q satisfying
    t^a(t^b − 1) = 0 lies in {0, 1, −1}; enumerating those value patterns
    and filtering by the definition is exhaustive.  Other shapes need an
    explicit candidate list.
    """
    field = B.field
    if candidates is not None:
        return [c for c in candidates if check_character(c, B)]
    if hasattr(field, "p"):
        total = field.p ** B.dim
        if total > enumeration_bound:
            raise UnsupportedCoalgebraError(
                "enumeration space %d exceeds the bound" % total)
        out = []
        for vec in product(field.elements(), repeat=B.dim):
            chi = Matrix.row(field, list(vec))
            if check_character(chi, B):
                out.append(chi)
        return out
    if _is_diagonal_monomial(B.coalgebra):
        if 3 ** B.dim > enumeration_bound:
            raise UnsupportedCoalgebraError(
                "value-pattern space 3^%d exceeds the bound" % B.dim)
        values = [field.zero(), field.one(), field.neg(field.one())]
        out = []
        for vec in product(values, repeat=B.dim):
            chi = Matrix.row(field, list(vec))
            if check_character(chi, B):
                out.append(chi)
        return out
    raise UnsupportedCoalgebraError(
        "over Q only grouplike-basis bialgebras are solved; supply candidates")


def convolution_group(chars, H: HopfData) -> tuple:
    """Verify a character set is a group under convolution.

    ε is the neutral element, χ∘a the two-sided inverse; returns
    (table, report) with table[i][j] the index of χ_i ∗ χ_j.
    """
    from .report import Check
    b = H.bialgebra
    report = Report()
    for idx, chi in enumerate(chars):
        ok = check_character(chi, b)
        report.add(Check("character:%d" % idx, ok, residue="0" if ok else "fails"))
    if not report.passed:
        raise ValueError("convolution_group needs verified characters")
    eps = b.eps
    eps_idx = None
    for idx, chi in enumerate(chars):
        if chi == eps:
            eps_idx = idx
    report.add(Check("counit_is_member", eps_idx is not None,
                     residue="0" if eps_idx is not None else "missing"))
    table = []
    closure_ok = True
    for chi in chars:
        row = []
        for psi in chars:
            conv = convolve_functionals(chi, psi, b.coalgebra)
            match = None
            for idx, other in enumerate(chars):
                if conv == other:
                    match = idx
            if match is None:
                closure_ok = False
            row.append(match)
        table.append(row)
    report.add(Check("character_closure", closure_ok,
                     residue="0" if closure_ok else "escapes"))
    identity_ok = all(table[eps_idx][j] == j and table[j][eps_idx] == j
                      for j in range(len(chars))) if eps_idx is not None else False
    report.add(Check("counit_is_identity", identity_ok,
                     residue="0" if identity_ok else "not neutral"))
    inverse_ok = True
    for chi in chars:
        inv = chi @ H.antipode
        if not (convolve_functionals(chi, inv, b.coalgebra) == eps
                and convolve_functionals(inv, chi, b.coalgebra) == eps):
            inverse_ok = False
    report.add(Check("antipode_gives_inverse", inverse_ok,
                     residue="0" if inverse_ok else "not inverse"))
    return table, report


def enumerate_linear_maps(field, rows: int, cols: int):
    """All rows x cols matrices over a finite field (exhaustive)."""
    for entries in product(field.elements(), repeat=rows * cols):
        yield Matrix(field, [list(entries[r * cols:(r + 1) * cols])
                             for r in range(rows)], cols=cols)
