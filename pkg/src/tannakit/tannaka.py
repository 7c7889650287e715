"""Structure maps on End^∨(F) and the reconstruction pipeline.

Always: End^∨(F) is a coalgebra (cocomposition + counit).  With valid
tensor data it becomes a bialgebra: the multiplication is induced
blockwise by λ_{C⊗D}∘(s_{C,D}⊗s_{C,D}^{-∨}) after reordering the four
tensor factors with an explicit middle-swap permutation matrix, and the
unit by λ_{I}∘(f⊗f^{-∨}).  With valid duality data it becomes a Hopf
algebra: the antipode acts on the block at C by moving it to the block
at C^∧ through the canonical identifications ι_C: F(C) → F(C^∧)^∨ and
ι'_C: F(C)^∨ → F(C^∧) read off from the evaluated unit/counit of the
duality, followed by the factor swap.

Every map defined on generators (m, u, a, ε, Δ, ρ̃) is built on the
ambient space, checked to kill the relation span, and only then pushed
to the quotient; a failure raises instead of silently producing wrong
structure constants.
"""

from .catpres import duality_pairing_vec
from .coend import (CoendPresentation, cocomposition, coevaluation, counit,
                    natvee)
from .hopf import (AlgebraData, BialgebraData, CoalgebraData, ComoduleData,
                   HopfData, check_comodule, check_comodule_morphism,
                   comatrix_coalgebra, convolve_functionals)
from .linalg import (Matrix, SubspaceBasis, kernel_basis, kron, solve_matrix,
                     swap_matrix)
from .report import Check, Report, VerificationError, check_equal


def endvee_coalgebra(P: CoendPresentation) -> CoalgebraData:
    """Δ = cocomposition, ε = counit; the coalgebra axioms are re-verified."""
    delta = cocomposition(P, P, P)
    eps = counit(P)
    coalg = CoalgebraData(P.quotient_dim, delta, eps)
    coalg.checks().require("endvee_coalgebra")
    return coalg


def endvee_bialgebra(cat, F, T, P: CoendPresentation,
                     coalgebra: CoalgebraData = None) -> BialgebraData:
    """Multiplication and unit from tensor data, verified well defined."""
    field = P.field
    amb = P.ambient_dim
    q = P.quotient_dim
    mmap = Matrix.zeros(field, q, amb * amb)
    for c, dc, _ in P.object_index:
        for d, dd, _ in P.object_index:
            smap = T.s_map(c, d)
            sinv = solve_matrix(smap, Matrix.identity(field, smap.rows))
            if sinv is None:
                raise VerificationError("comparison s at (%s, %s) is singular" % (c, d))
            mid = kron(kron(Matrix.identity(field, dc), swap_matrix(field, dc, dd)),
                       Matrix.identity(field, dd))
            block = (P.lam(T.obj(c, d)) @ kron(smap, sinv.transpose()) @ mid)
            offc, offd = P.offsets[c], P.offsets[d]
            for a in range(dc * dc):
                for b in range(dd * dd):
                    src = a * (dd * dd) + b
                    dst = (offc + a) * amb + (offd + b)
                    for r in range(q):
                        mmap.data[r][dst] = block.data[r][src]
    m = mmap @ kron(P.section, P.section)
    if not (m @ kron(P.proj, P.proj) == mmap):
        raise VerificationError(
            "multiplication does not descend to End^∨ (invalid tensor data)")
    f = T.f_unit
    finv = solve_matrix(f, Matrix.identity(field, f.rows))
    u = P.lam(T.unit) @ kron(f, finv.transpose())
    if coalgebra is None:
        coalgebra = endvee_coalgebra(P)
    big = BialgebraData(coalgebra, AlgebraData(q, m, u))
    big.checks().require("endvee_bialgebra")
    return big


def endvee_antipode(cat, F, T, D, P: CoendPresentation,
                    bialgebra: BialgebraData = None) -> HopfData:
    """Antipode from duality data: a∘λ_C = λ_{C^∧}∘swap∘(ι_C ⊗ ι'_C)."""
    field = P.field
    if bialgebra is None:
        bialgebra = endvee_bialgebra(cat, F, T, P)
    blocks = {}
    for obj, d, _ in P.object_index:
        dual = D.dual(obj)
        ddual = F.dim(dual)
        eta_vec, eps_vec = duality_pairing_vec(cat, F, T, D, obj)
        iota = Matrix.zeros(field, ddual, d)       # F(C) → F(C^∧)^∨
        for b in range(ddual):
            for i in range(d):
                iota.data[b][i] = eps_vec.data[0][i * ddual + b]
        iota_p = Matrix.zeros(field, ddual, d)     # F(C)^∨ → F(C^∧)
        for a in range(ddual):
            for j in range(d):
                iota_p.data[a][j] = eta_vec.data[a * d + j][0]
        blocks[obj] = (P.lam(dual) @ swap_matrix(field, ddual, ddual)
                       @ kron(iota, iota_p))
    ambient_map = P.assemble_on_blocks(blocks, P.quotient_dim)
    antipode = ambient_map @ P.section
    if not (antipode @ P.proj == ambient_map):
        raise VerificationError(
            "antipode does not descend to End^∨ (invalid duality data)")
    hopf = HopfData(bialgebra, antipode)
    hopf.checks().require("endvee_antipode")
    return hopf


def lift_functor(cat, F, P: CoendPresentation):
    """Comodule structure on every F(C) via the coevaluation, with checks.

    Returns (coactions, report): one ComoduleData per object, plus the
    comodule laws per object and the comodule-morphism square per
    generator.  Violations never happen for a valid presentation; a
    failing entry localizes an engine bug.
    """
    coalg = endvee_coalgebra(P)
    coactions = {}
    report = Report()
    for obj, fd, _ in P.object_index:
        rho = coevaluation(P, obj)
        com = ComoduleData(P.quotient_dim, fd, rho)
        coactions[obj] = com
        for check in com.checks(coalg).checks:
            report.add(Check("%s:%s" % (check.name, obj), check.passed,
                             residue=check.residue))
    for g in cat.generators:
        ok = check_comodule_morphism(F.gen_matrix(g.name),
                                     coactions[g.src], coactions[g.dst], coalg)
        report.add(Check("comodule_morphism:%s" % g.name, ok,
                         residue="0" if ok else "square fails"))
    return coactions, report


def rho_tilde(B: CoalgebraData, cat, F, coactions, P: CoendPresentation = None):
    """Reconstruction morphism ρ̃: End^∨(U) → B for comodules (U = F).

    ``coactions`` maps each object to its ComoduleData over B; every
    coaction must satisfy the comodule laws and every generator image
    must be a comodule morphism (checked, not assumed).  Blocks:
    ρ̃∘λ_V = (id_B ⊗ eval_V)∘(ρ_V ⊗ id_{V^∨}).

    Returns (rho_tilde_map, report); the report carries the
    well-definedness check and both coalgebra-morphism identities.
    """
    field = B.field
    for obj in cat.objects:
        com = coactions[obj]
        if not check_comodule(com, B):
            raise VerificationError("coaction at %r is not a comodule" % obj)
        if com.space_dim != F.dim(obj):
            raise VerificationError("coaction at %r has wrong dimension" % obj)
    for g in cat.generators:
        if not check_comodule_morphism(F.gen_matrix(g.name), coactions[g.src],
                                       coactions[g.dst], B):
            raise VerificationError("generator %r is not a comodule morphism"
                                    % g.name)
    if P is None:
        P = natvee(cat, F, F)
    id_b = Matrix.identity(field, B.dim)
    blocks = {}
    for obj, d, _ in P.object_index:
        ev = Matrix.zeros(field, 1, d * d)
        one = field.one()
        for i in range(d):
            ev.data[0][i * d + i] = one
        blocks[obj] = kron(id_b, ev) @ kron(coactions[obj].rho,
                                            Matrix.identity(field, d))
    ambient_map = P.assemble_on_blocks(blocks, B.dim)
    report = Report()
    rt = ambient_map @ P.section
    well_defined = rt @ P.proj == ambient_map
    report.add(Check("rho_tilde_well_defined", well_defined,
                     residue="0" if well_defined else "relation residue"))
    if not well_defined:
        return rt, report
    endv = endvee_coalgebra(P)
    report.add(check_equal("rho_tilde_respects_delta",
                           B.delta @ rt, kron(rt, rt) @ endv.delta))
    report.add(check_equal("rho_tilde_respects_eps", B.eps @ rt, endv.eps))
    return rt, report


def alpha_tilde(com: ComoduleData, B: CoalgebraData):
    """Coefficient map α̃ = (id_B⊗eval)∘(ρ⊗id): V⊗V^∨ → B.

    Verified to be a coalgebra morphism from the comatrix coalgebra of V
    to B.  Returns (alpha, report).
    """
    field = B.field
    d = com.space_dim
    ev = Matrix.zeros(field, 1, d * d)
    one = field.one()
    for i in range(d):
        ev.data[0][i * d + i] = one
    alpha = kron(Matrix.identity(field, B.dim), ev) @ kron(com.rho,
                                                           Matrix.identity(field, d))
    source = comatrix_coalgebra(d, field)
    report = Report()
    report.add(check_equal("alpha_tilde_respects_delta",
                           B.delta @ alpha, kron(alpha, alpha) @ source.delta))
    report.add(check_equal("alpha_tilde_respects_eps", B.eps @ alpha, source.eps))
    return alpha, report


def rep_of_comodule(com: ComoduleData, chi: Matrix) -> Matrix:
    """Action of a character through the coaction: θ(χ) = (χ⊗id)∘ρ."""
    if chi.rows != 1 or chi.cols != com.coalgebra_dim:
        raise ValueError("character must be a functional on the coalgebra")
    return kron(chi, Matrix.identity(com.field, com.space_dim)) @ com.rho


def check_rep_correspondence(comodules, chars, B: BialgebraData) -> Report:
    """θ(ε) = id and the contravariant law θ(f)∘θ(g) = θ(g∗f), exactly."""
    report = Report()
    for name, com in comodules.items():
        theta_eps = rep_of_comodule(com, B.eps)
        report.add(check_equal("theta_eps_identity:%s" % name, theta_eps,
                               Matrix.identity(B.field, com.space_dim)))
        for i, f in enumerate(chars):
            for j, g in enumerate(chars):
                lhs = rep_of_comodule(com, f) @ rep_of_comodule(com, g)
                conv = convolve_functionals(g, f, B.coalgebra)
                rhs = rep_of_comodule(com, conv)
                report.add(check_equal(
                    "theta_contravariant:%s:%d,%d" % (name, i, j), lhs, rhs))
    return report


def intertwines_all(f: Matrix, com1: ComoduleData, com2: ComoduleData,
                    chars) -> bool:
    """Does f intertwine θ(χ) for every character χ?"""
    for chi in chars:
        if not (rep_of_comodule(com2, chi) @ f == f @ rep_of_comodule(com1, chi)):
            return False
    return True


def comodule_morphism_space(com1: ComoduleData, com2: ComoduleData):
    """Basis of { f : ρ₂∘f = (id⊗f)∘ρ₁ }, found by exact linear solve."""
    if com1.coalgebra_dim != com2.coalgebra_dim:
        raise ValueError("comodules over different coalgebras")
    field = com1.field
    bd = com1.coalgebra_dim
    d1, d2 = com1.space_dim, com2.space_dim
    rows = []
    # unknowns: entries of f (d2 x d1), row-major
    for b in range(bd):
        for r in range(d2):
            for c in range(d1):
                row = [field.zero()] * (d2 * d1)
                # (ρ₂ f)[b·d2+r, c] = Σ_k ρ₂[b·d2+r, k] f[k, c]
                for k in range(d2):
                    pos = k * d1 + c
                    row[pos] = field.add(row[pos], com2.rho.data[b * d2 + r][k])
                # −((id⊗f) ρ₁)[b·d2+r, c] = −Σ_k f[r, k] ρ₁[b·d1+k, c]
                for k in range(d1):
                    pos = r * d1 + k
                    row[pos] = field.sub(row[pos], com1.rho.data[b * d1 + k][c])
                rows.append(row)
    system = Matrix(field, rows, cols=d2 * d1)
    ker = kernel_basis(system)
    out = []
    for vec in ker.vectors:
        out.append(Matrix(field, [vec[r * d1:(r + 1) * d1] for r in range(d2)],
                          cols=d1))
    return out


def morphism_image_span(cat, F, src, dst):
    """Span of F-images of all paths src → dst in the presentation.

    Computed by closing the generator images under left composition
    until every span stabilizes; termination is forced by the dimension
    bound on each span.
    """
    field = F.field
    spans = {}

    def ensure(a, b):
        if (a, b) not in spans:
            spans[(a, b)] = SubspaceBasis(field, F.dim(b) * F.dim(a), [])
        return spans[(a, b)]

    def add(a, b, mat):
        flat = [x for row in mat.data for x in row]
        span = ensure(a, b)
        if span.contains(flat):
            return False
        spans[(a, b)] = SubspaceBasis(field, span.ambient_dim,
                                      span.vectors + [flat])
        return True

    for obj in cat.objects:
        add(obj, obj, Matrix.identity(field, F.dim(obj)))
    changed = True
    while changed:
        changed = False
        for (a, b), span in list(spans.items()):
            for g in cat.generators:
                if g.src != b:
                    continue
                gm = F.gen_matrix(g.name)
                for vec in span.vectors:
                    d_b, d_a = F.dim(b), F.dim(a)
                    mat = Matrix(field, [vec[r * d_a:(r + 1) * d_a]
                                         for r in range(d_b)], cols=d_a)
                    if add(a, g.dst, gm @ mat):
                        changed = True
    span = ensure(src, dst)
    d_dst, d_src = F.dim(dst), F.dim(src)
    return [Matrix(field, [vec[r * d_src:(r + 1) * d_src] for r in range(d_dst)],
                   cols=d_src)
            for vec in span.vectors]
