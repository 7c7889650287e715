"""Symmetric monoidal expression calculus over strict words of atoms.

Expressions are built from identities and adjacent symmetries ψ with
composition and tensor; equality of two expressions with the same
boundary words is decided by comparing their underlying permutations,
and can be cross-checked by exact matrix evaluation in Vec.

Also houses dual pairings (evaluation/coevaluation with the snake
identities) and the dual of a linear map computed through pairings.

Canonical text form: words are comma-separated atom names in brackets,
expressions are ``id[a,b]``, ``swap[a,b;0]``, ``(e1 ; e2)`` for
composition and ``(e1 * e2)`` for tensor.
"""

from .fields import QQ
from .linalg import Matrix, kron, swap_matrix

Word = tuple  # tuple of atom-name strings; the empty word is the unit


class ExprError(ValueError):
    pass


class SymExpr:
    """Base class; subclasses carry domain/codomain words."""

    domain: Word
    codomain: Word

    def __rshift__(self, other):
        return Compose(self, other)

    def __mul__(self, other):
        return Tensor(self, other)

    def __eq__(self, other):
        return isinstance(other, SymExpr) and format_expr(self) == format_expr(other)

    def __hash__(self):
        return hash(format_expr(self))

    def __repr__(self):
        return format_expr(self)


class Identity(SymExpr):
    def __init__(self, word):
        self.word = tuple(word)
        self.domain = self.word
        self.codomain = self.word


class AdjacentSwap(SymExpr):
    def __init__(self, word, pos: int):
        word = tuple(word)
        if not (0 <= pos <= len(word) - 2):
            raise ExprError("swap position %d out of range for word of length %d"
                            % (pos, len(word)))
        self.word = word
        self.pos = pos
        self.domain = word
        out = list(word)
        out[pos], out[pos + 1] = out[pos + 1], out[pos]
        self.codomain = tuple(out)


class Compose(SymExpr):
    def __init__(self, first: SymExpr, then: SymExpr):
        if first.codomain != then.domain:
            raise ExprError("composition boundary mismatch: %s vs %s"
                            % (list(first.codomain), list(then.domain)))
        self.first = first
        self.then = then
        self.domain = first.domain
        self.codomain = then.codomain


class Tensor(SymExpr):
    def __init__(self, left: SymExpr, right: SymExpr):
        self.left = left
        self.right = right
        self.domain = left.domain + right.domain
        self.codomain = left.codomain + right.codomain


def perm_of(e: SymExpr):
    """Destination map of the expression: position i ↦ perm[i].

    Identities give the identity permutation, an adjacent swap the
    transposition (i, i+1), composition the product (second applied after
    first) and tensor the block-juxtaposed permutation.
    """
    if isinstance(e, Identity):
        return tuple(range(len(e.word)))
    if isinstance(e, AdjacentSwap):
        out = list(range(len(e.word)))
        out[e.pos], out[e.pos + 1] = out[e.pos + 1], out[e.pos]
        return tuple(out)
    if isinstance(e, Compose):
        p = perm_of(e.first)
        q = perm_of(e.then)
        return tuple(q[p[i]] for i in range(len(p)))
    if isinstance(e, Tensor):
        p = perm_of(e.left)
        q = perm_of(e.right)
        n = len(p)
        return p + tuple(n + j for j in q)
    raise ExprError("not a SymExpr: %r" % (e,))


def block_swap(word, split: int) -> SymExpr:
    """ψ for the block split (first ``split`` atoms vs the rest), expanded
    into adjacent transpositions by bubbling each suffix letter left."""
    word = tuple(word)
    if not (0 <= split <= len(word)):
        raise ExprError("split out of range")
    expr = Identity(word)
    current = word
    n = len(word)
    for s in range(n - split):
        for p in range(split + s - 1, s - 1, -1):
            swap = AdjacentSwap(current, p)
            expr = Compose(expr, swap)
            current = swap.codomain
    return expr


def coherence_equal(e1: SymExpr, e2: SymExpr) -> bool:
    """Decide equality of two symmetry expressions with equal boundaries.

    Two composites of ψ's, identities, ⊗ and ∘ are equal exactly when
    they realize the same permutation of the letters.
    """
    if e1.domain != e2.domain or e1.codomain != e2.codomain:
        raise ExprError("expressions do not share boundary words")
    return perm_of(e1) == perm_of(e2)


def eval_in_vec(e: SymExpr, dims, field=QQ) -> Matrix:
    """Exact matrix of the expression once each atom gets a dimension."""
    for atom in set(e.domain) | set(e.codomain):
        if atom not in dims:
            raise ExprError("no dimension assigned to atom %r" % atom)
    return _eval(e, dims, field)


def _word_dim(word, dims):
    d = 1
    for atom in word:
        d *= dims[atom]
    return d


def _eval(e, dims, field):
    if isinstance(e, Identity):
        return Matrix.identity(field, _word_dim(e.word, dims))
    if isinstance(e, AdjacentSwap):
        left = _word_dim(e.word[:e.pos], dims)
        a = dims[e.word[e.pos]]
        b = dims[e.word[e.pos + 1]]
        right = _word_dim(e.word[e.pos + 2:], dims)
        mid = swap_matrix(field, a, b)
        return kron(kron(Matrix.identity(field, left), mid),
                    Matrix.identity(field, right))
    if isinstance(e, Compose):
        return _eval(e.then, dims, field) @ _eval(e.first, dims, field)
    if isinstance(e, Tensor):
        return kron(_eval(e.left, dims, field), _eval(e.right, dims, field))
    raise ExprError("not a SymExpr: %r" % (e,))


# -- dual pairings -----------------------------------------------------


class DualPairing:
    """Evaluation V^∨⊗V → K and coevaluation K → V⊗V^∨ for a space V.

    Validity means the two snake identities hold; ``check_triangles``
    decides that exactly.
    """

    __slots__ = ("space_dim", "eval", "coeval")

    def __init__(self, space_dim: int, eval: Matrix, coeval: Matrix):
        if eval.rows != 1 or eval.cols != space_dim * space_dim:
            raise ValueError("eval must be 1 x dim^2")
        if coeval.cols != 1 or coeval.rows != space_dim * space_dim:
            raise ValueError("coeval must be dim^2 x 1")
        self.space_dim = space_dim
        self.eval = eval
        self.coeval = coeval

    @property
    def field(self):
        return self.eval.field


def standard_pairing(dim: int, field=QQ) -> DualPairing:
    """The evaluation form φ⊗v ↦ φ(v) and the coevaluation 1 ↦ Σ e_i⊗e_i^∨.

    Both matrices are the flattened identity under the index convention.
    """
    ev = Matrix.zeros(field, 1, dim * dim)
    co = Matrix.zeros(field, dim * dim, 1)
    one = field.one()
    for i in range(dim):
        ev.data[0][i * dim + i] = one
        co.data[i * dim + i][0] = one
    return DualPairing(dim, ev, co)


def check_triangles(p: DualPairing) -> bool:
    """Both snake identities as exact matrix identities."""
    field = p.field
    n = p.space_dim
    ident = Matrix.identity(field, n)
    snake1 = kron(ident, p.eval) @ kron(p.coeval, ident)
    snake2 = kron(p.eval, ident) @ kron(ident, p.coeval)
    return snake1 == ident and snake2 == ident


def dual_map(f: Matrix, p_dom: DualPairing, p_cod: DualPairing) -> Matrix:
    """Dual of f: Y → X through pairings, as a map X^∨ → Y^∨.

    The composite is (eval_X ⊗ id) ∘ (id ⊗ f ⊗ id) ∘ (id ⊗ coeval_Y);
    with standard pairings on both sides this is the transpose of f.
    """
    if p_dom.space_dim != f.codomain_dim:
        raise ValueError("p_dom must pair the codomain of f")
    if p_cod.space_dim != f.domain_dim:
        raise ValueError("p_cod must pair the domain of f")
    field = f.field
    id_x = Matrix.identity(field, p_dom.space_dim)
    id_xd = Matrix.identity(field, p_dom.space_dim)
    id_yd = Matrix.identity(field, p_cod.space_dim)
    step1 = kron(id_xd, p_cod.coeval)              # X^∨ → X^∨⊗Y⊗Y^∨
    step2 = kron(kron(id_xd, f), id_yd)            # → X^∨⊗X⊗Y^∨
    step3 = kron(p_dom.eval, id_yd)                # → Y^∨
    return step3 @ step2 @ step1


def transport_pairing(p: DualPairing, pmat: Matrix) -> DualPairing:
    """Transport a pairing along an invertible change of basis P of V.

    Vectors move by P and functionals by P^{-∨}, so eval becomes
    eval∘(P^∨⊗P^{-1}) and coeval becomes (P⊗P^{-∨})∘coeval.  The two
    dual-slot factors are mutually inverse, which is exactly what keeps
    both snake identities true.
    """
    from .linalg import solve_matrix
    n = p.space_dim
    ident = Matrix.identity(pmat.field, n)
    pinv = solve_matrix(pmat, ident)
    if pinv is None:
        raise ValueError("transport needs an invertible matrix")
    new_eval = p.eval @ kron(pmat.transpose(), pinv)
    new_coeval = kron(pmat, pinv.transpose()) @ p.coeval
    return DualPairing(n, new_eval, new_coeval)


# -- canonical text form ----------------------------------------------


def format_word(word) -> str:
    return "[" + ",".join(word) + "]"


def format_expr(e: SymExpr) -> str:
    if isinstance(e, Identity):
        return "id" + format_word(e.word)
    if isinstance(e, AdjacentSwap):
        return "swap[" + ",".join(e.word) + ";" + str(e.pos) + "]"
    if isinstance(e, Compose):
        return "(" + format_expr(e.first) + " ; " + format_expr(e.then) + ")"
    if isinstance(e, Tensor):
        return "(" + format_expr(e.left) + " * " + format_expr(e.right) + ")"
    raise ExprError("not a SymExpr: %r" % (e,))


def parse_expr(text: str) -> SymExpr:
    expr, rest = _parse(text.strip())
    if rest.strip():
        raise ExprError("trailing input: %r" % rest)
    return expr


def _parse(text):
    text = text.lstrip()
    if text.startswith("("):
        left, rest = _parse(text[1:])
        rest = rest.lstrip()
        if rest.startswith(";"):
            right, rest = _parse(rest[1:])
            rest = rest.lstrip()
            if not rest.startswith(")"):
                raise ExprError("expected ')'")
            return Compose(left, right), rest[1:]
        if rest.startswith("*"):
            right, rest = _parse(rest[1:])
            rest = rest.lstrip()
            if not rest.startswith(")"):
                raise ExprError("expected ')'")
            return Tensor(left, right), rest[1:]
        raise ExprError("expected ';' or '*' inside parentheses")
    if text.startswith("id["):
        body, rest = _until_bracket(text[3:])
        word = _split_word(body)
        return Identity(word), rest
    if text.startswith("swap["):
        body, rest = _until_bracket(text[5:])
        if ";" not in body:
            raise ExprError("swap needs a position: swap[w;i]")
        wordpart, pos = body.rsplit(";", 1)
        return AdjacentSwap(_split_word(wordpart), int(pos)), rest
    raise ExprError("cannot parse expression at: %r" % text[:30])


def _until_bracket(text):
    if "]" not in text:
        raise ExprError("unterminated '['")
    idx = text.index("]")
    return text[:idx], text[idx + 1:]


def _split_word(body):
    body = body.strip()
    if not body:
        return ()
    return tuple(atom.strip() for atom in body.split(","))
