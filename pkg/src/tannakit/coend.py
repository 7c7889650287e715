"""The predual of the natural-transformation space, computed exactly.

``natvee`` realizes Nat^∨(F, G) as an explicit quotient of the direct sum
⊕_C F(C)⊗G(C)^∨ by the span of one relation vector per generator and
basis pair: the block of e_i ⊗ G(f)^∨ e_j^∨ at the source minus the block
of F(f) e_i ⊗ e_j^∨ at the target.  Relations from generating morphisms
suffice: the relation vector of a composite splits as a sum of generator
relations, and identities contribute zero (unit-tested).

``nat_space`` computes Nat(F, G) on the other side of the predual pairing
as the solution space of the naturality equations, and ``pairing_to_nat``
/ ``nat_to_pairing`` realize the pairing between the two, functional by
functional.

Cocomposition and the counit are solved for on the quotient through the
section and then verified blockwise, so the dinaturality arguments that
make them well defined become machine checks.
"""

from .catpres import FiberFunctor, PresentedCategory
from .linalg import (Matrix, SubspaceBasis, kernel_basis, kron, quotient,
                     rref)
from .report import Report, VerificationError, check_equal


class CoendPresentation:
    """Nat^∨(F, G) with its block inclusions λ_C and quotient data."""

    def __init__(self, category, F, G, object_index, relation_span,
                 proj, section):
        self.category = category
        self.F = F
        self.G = G
        self.object_index = object_index      # list of (object, F-dim, G-dim)
        self.relation_span = relation_span
        self.proj = proj
        self.section = section
        self.offsets = {}
        off = 0
        for obj, fd, gd in object_index:
            self.offsets[obj] = off
            off += fd * gd
        self.ambient_dim = off
        self.quotient_dim = proj.codomain_dim

    @property
    def field(self):
        return self.proj.field

    def block_dims(self, obj):
        for o, fd, gd in self.object_index:
            if o == obj:
                return fd, gd
        raise KeyError("object %r not in coend index" % obj)

    def block_inclusion(self, obj) -> Matrix:
        """K^{F-dim·G-dim} → ambient, the coordinate inclusion of the block."""
        fd, gd = self.block_dims(obj)
        size = fd * gd
        out = Matrix.zeros(self.field, self.ambient_dim, size)
        off = self.offsets[obj]
        one = self.field.one()
        for k in range(size):
            out.data[off + k][k] = one
        return out

    def lam(self, obj) -> Matrix:
        """λ_C: F(C)⊗G(C)^∨ → quotient, the structural inclusion."""
        return self.proj @ self.block_inclusion(obj)

    def assemble_on_blocks(self, block_maps, codomain_dim) -> Matrix:
        """Glue per-object maps on ambient blocks into one map on the ambient."""
        out = Matrix.zeros(self.field, codomain_dim, self.ambient_dim)
        for obj, m in block_maps.items():
            off = self.offsets[obj]
            for i in range(m.rows):
                row = out.data[i]
                for j in range(m.cols):
                    row[off + j] = m.data[i][j]
        return out

    def push_to_quotient(self, ambient_map: Matrix, name: str) -> Matrix:
        """Solve h∘proj = ambient_map through the section, then verify.

        The candidate is ambient_map∘section; it factors through the
        quotient exactly when ambient_map kills the relation span, which
        is re-checked here rather than assumed.
        """
        candidate = ambient_map @ self.section
        if not (candidate @ self.proj == ambient_map):
            raise VerificationError(
                "%s does not descend to the coend quotient "
                "(a dinaturality premise failed)" % name)
        return candidate

    def kills_relations(self, ambient_map: Matrix) -> bool:
        zero = self.field.zero()
        for rel in self.relation_span.vectors:
            if any(x != zero for x in ambient_map.apply(rel)):
                return False
        return True

    def to_json(self):
        """Stable serialization (quotient dim, relation rank, λ matrices)."""
        return {
            "quotient_dim": self.quotient_dim,
            "relation_rank": self.relation_span.dim,
            "object_index": [[obj, fd, gd] for obj, fd, gd in self.object_index],
            "lambda": {obj: self.lam(obj).to_strings()
                       for obj, _, _ in self.object_index},
        }


def relation_vectors(cat: PresentedCategory, F: FiberFunctor, G: FiberFunctor):
    """One coend relation vector per generator f: C→C' and basis pair (i, j)."""
    field = F.field
    offs = {}
    off = 0
    for obj in cat.objects:
        offs[obj] = off
        off += F.dim(obj) * G.dim(obj)
    ambient = off
    vectors = []
    for g in cat.generators:
        src, dst = g.src, g.dst
        fmat = F.gen_matrix(g.name)
        gmat = G.gen_matrix(g.name)
        gd_src = G.dim(src)
        gd_dst = G.dim(dst)
        for i in range(F.dim(src)):
            for j in range(gd_dst):
                vec = [field.zero()] * ambient
                # block at src: e_i ⊗ G(f)^∨ e_j^∨,  G(f)^∨ e_j^∨ = row j of G(f)
                for k in range(gd_src):
                    coeff = gmat.data[j][k]
                    if coeff != field.zero():
                        vec[offs[src] + i * gd_src + k] = coeff
                # block at dst: − F(f) e_i ⊗ e_j^∨,  F(f) e_i = column i
                for l in range(F.dim(dst)):
                    coeff = fmat.data[l][i]
                    if coeff != field.zero():
                        pos = offs[dst] + l * gd_dst + j
                        vec[pos] = field.sub(vec[pos], coeff)
                vectors.append(vec)
    return ambient, vectors


def natvee(cat: PresentedCategory, F: FiberFunctor,
           G: FiberFunctor) -> CoendPresentation:
    """Compute Nat^∨(F, G) as an explicit quotient presentation."""
    if F.field != G.field:
        raise ValueError("functors live over different fields")
    ambient, vectors = relation_vectors(cat, F, G)
    span = SubspaceBasis(F.field, ambient, vectors)
    proj, section = quotient(ambient, span)
    object_index = [(obj, F.dim(obj), G.dim(obj)) for obj in cat.objects]
    return CoendPresentation(cat, F, G, object_index, span, proj, section)


def check_dinaturality(P: CoendPresentation) -> Report:
    """λ_C∘(id⊗G(f)^∨) = λ_{C'}∘(F(f)⊗id) for every generator, exactly."""
    report = Report()
    field = P.field
    for g in P.category.generators:
        src, dst = g.src, g.dst
        fmat = P.F.gen_matrix(g.name)
        gmat = P.G.gen_matrix(g.name)
        id_fsrc = Matrix.identity(field, P.F.dim(src))
        id_gdst = Matrix.identity(field, P.G.dim(dst))
        lhs = P.lam(src) @ kron(id_fsrc, gmat.transpose())
        rhs = P.lam(dst) @ kron(fmat, id_gdst)
        report.add(check_equal("dinaturality:%s" % g.name, lhs, rhs))
    return report


class EndSpace:
    """Nat(F, G) as a basis of natural families (object ↦ matrix)."""

    def __init__(self, category, F, G, basis):
        self.category = category
        self.F = F
        self.G = G
        self.basis = basis

    @property
    def dim(self):
        return len(self.basis)


def nat_space(cat: PresentedCategory, F: FiberFunctor, G: FiberFunctor) -> EndSpace:
    """Solve the naturality equations θ_{C'}∘F(f) = G(f)∘θ_C exactly."""
    field = F.field
    offs = {}
    off = 0
    for obj in cat.objects:
        offs[obj] = off
        off += G.dim(obj) * F.dim(obj)     # θ_C is G-dim × F-dim, row-major
    total = off
    rows = []
    for g in cat.generators:
        src, dst = g.src, g.dst
        fmat = F.gen_matrix(g.name)
        gmat = G.gen_matrix(g.name)
        for a in range(G.dim(dst)):
            for b in range(F.dim(src)):
                row = [field.zero()] * total
                #  (θ_{dst} F(f))[a,b] = Σ_l θ_dst[a,l] F(f)[l,b]
                for l in range(F.dim(dst)):
                    pos = offs[dst] + a * F.dim(dst) + l
                    row[pos] = field.add(row[pos], fmat.data[l][b])
                #  −(G(f) θ_{src})[a,b] = −Σ_k G(f)[a,k] θ_src[k,b]
                for k in range(G.dim(src)):
                    pos = offs[src] + k * F.dim(src) + b
                    row[pos] = field.sub(row[pos], gmat.data[a][k])
                rows.append(row)
    system = Matrix(field, rows, cols=total)
    ker = kernel_basis(system)
    basis = []
    for vec in ker.vectors:
        family = {}
        for obj in cat.objects:
            gd, fd = G.dim(obj), F.dim(obj)
            block = [vec[offs[obj] + r * fd: offs[obj] + (r + 1) * fd]
                     for r in range(gd)]
            family[obj] = Matrix(field, block, cols=fd)
        basis.append(family)
    return EndSpace(cat, F, G, basis)


def pairing_to_nat(P: CoendPresentation, xi: Matrix) -> dict:
    """Natural family from a functional on the coend: θ_C(v) = Σ_j ξ(λ_C(v⊗e_j^∨))·e_j."""
    if xi.rows != 1 or xi.cols != P.quotient_dim:
        raise ValueError("functional must be 1 x quotient_dim")
    family = {}
    for obj, fd, gd in P.object_index:
        lam = xi @ P.lam(obj)          # 1 x (fd·gd)
        theta = Matrix.zeros(P.field, gd, fd)
        for i in range(fd):
            for j in range(gd):
                theta.data[j][i] = lam.data[0][i * gd + j]
        family[obj] = theta
    return family


def nat_to_pairing(P: CoendPresentation, family: dict) -> Matrix:
    """Inverse of pairing_to_nat: solve ξ∘λ_C = flatten(θ_C) for ξ.

    The flattened family is a functional on the ambient sum; it descends
    to the quotient exactly when the family is natural, which is verified.
    """
    field = P.field
    flat = Matrix.zeros(field, 1, P.ambient_dim)
    for obj, fd, gd in P.object_index:
        theta = family[obj]
        off = P.offsets[obj]
        for i in range(fd):
            for j in range(gd):
                flat.data[0][off + i * gd + j] = theta.data[j][i]
    return P.push_to_quotient(flat, "nat_to_pairing functional")


def coevaluation(P: CoendPresentation, obj) -> Matrix:
    """η_C: F(C) → Nat^∨(F,G) ⊗ G(C), e_k ↦ Σ_j λ_C(e_k⊗e_j^∨) ⊗ e_j."""
    fd, gd = P.block_dims(obj)
    lam = P.lam(obj)
    out = Matrix.zeros(P.field, P.quotient_dim * gd, fd)
    for k in range(fd):
        for j in range(gd):
            col = lam.col(k * gd + j)
            for q in range(P.quotient_dim):
                out.data[q * gd + j][k] = col[q]
    return out


def cocomposition(P_FG: CoendPresentation, P_GH: CoendPresentation,
                  P_FH: CoendPresentation) -> Matrix:
    """Δ: Nat^∨(F,H) → Nat^∨(F,G) ⊗ Nat^∨(G,H).

    Blockwise Δ∘λ_C = (λ_C⊗λ_C)∘(id_{FC} ⊗ coeval_{GC} ⊗ id_{HC^∨}) with
    the standard coevaluation of G(C) inserted in the middle; the
    candidate is solved through the section and verified on every block.
    """
    field = P_FH.field
    blocks = {}
    for obj, fd, hd in P_FH.object_index:
        gd = P_FG.block_dims(obj)[1]
        id_f = Matrix.identity(field, fd)
        id_hdual = Matrix.identity(field, hd)
        coeval = Matrix.zeros(field, gd * gd, 1)
        one = field.one()
        for i in range(gd):
            coeval.data[i * gd + i][0] = one
        insert = kron(kron(id_f, coeval), id_hdual)
        blocks[obj] = kron(P_FG.lam(obj), P_GH.lam(obj)) @ insert
    codomain = P_FG.quotient_dim * P_GH.quotient_dim
    ambient_map = P_FH.assemble_on_blocks(blocks, codomain)
    return P_FH.push_to_quotient(ambient_map, "cocomposition")


def pairing_bijection_report(P: CoendPresentation, N: EndSpace = None) -> Report:
    """Verify pairing_to_nat is a linear bijection onto Nat(F, G).

    Rank check both ways: the images of the coordinate functionals span a
    space of dimension quotient_dim inside the naturality solution space,
    whose dimension must agree; and the two directions invert each other
    on bases.
    """
    from .report import Check
    if N is None:
        N = nat_space(P.category, P.F, P.G)
    field = P.field
    report = Report()
    q = P.quotient_dim
    rows = []
    families = []
    for k in range(q):
        xi = Matrix.zeros(field, 1, q)
        xi.data[0][k] = field.one()
        fam = pairing_to_nat(P, xi)
        families.append((xi, fam))
        flat = []
        for obj, fd, gd in P.object_index:
            for row in fam[obj].data:
                flat.extend(row)
        rows.append(flat)
    total = sum(fd * gd for _, fd, gd in P.object_index)
    image_rank = rref(Matrix(field, rows, cols=total))[2] if q else 0
    report.add(Check("pairing_rank_injective", image_rank == q,
                     residue="0" if image_rank == q else str(image_rank)))
    report.add(Check("pairing_rank_onto", image_rank == N.dim,
                     residue="0" if image_rank == N.dim
                     else "%d vs %d" % (image_rank, N.dim)))
    round_ok = all(nat_to_pairing(P, fam) == xi for xi, fam in families)
    report.add(Check("pairing_roundtrip_functionals", round_ok,
                     residue="0" if round_ok else "mismatch"))
    back_ok = True
    for fam in N.basis:
        xi = nat_to_pairing(P, fam)
        if pairing_to_nat(P, xi) != fam:
            back_ok = False
    report.add(Check("pairing_roundtrip_families", back_ok,
                     residue="0" if back_ok else "mismatch"))
    return report


def counit(P: CoendPresentation) -> Matrix:
    """ε: End^∨(F) → K with ε∘λ_C the evaluation form on F(C)⊗F(C)^∨."""
    if P.F is not P.G and P.F.on_objects != P.G.on_objects:
        raise ValueError("counit needs an End presentation (F = G)")
    field = P.field
    blocks = {}
    for obj, fd, gd in P.object_index:
        ev = Matrix.zeros(field, 1, fd * gd)
        one = field.one()
        for i in range(min(fd, gd)):
            ev.data[0][i * gd + i] = one
        blocks[obj] = ev
    ambient_map = P.assemble_on_blocks(blocks, 1)
    return P.push_to_quotient(ambient_map, "counit")
