"""Totally symmetric sets and subspace arrangements, with exact verification.

A family of square matrices is *totally symmetric* when every permutation
of its members is realized by conjugation with a single invertible matrix;
a family of equal-dimensional subspaces is totally symmetric when
permutations are realized by invertible linear transport.  Witnesses for
the adjacent transpositions suffice, since conjugation and transport are
group actions.

Verification is witness-first: a bundled witness is rechecked exactly
(cheap), and a Sylvester-system solver searches for fresh witnesses when
none is supplied or the bundled one fails.
"""

from dataclasses import dataclass
from typing import Optional

from .field import Scalar
from .linalg import (
    Matrix,
    Singular,
    Subspace,
    intertwiner_space,
    invertible_in_space,
    kernel,
    mat_vec,
    vec_to_matrix,
)

TOTALLY_SYMMETRIC = "TotallySymmetric"
NOT_TOTALLY_SYMMETRIC = "NotTotallySymmetric"
DEGENERATE = "Degenerate"


class NotInvariant(ValueError):
    pass


class NotComplementary(ValueError):
    pass


class NoStrongWitness(ValueError):
    pass


def _swap(seq, j):
    out = list(seq)
    out[j], out[j + 1] = out[j + 1], out[j]
    return out


class RealizationWitness:
    """Invertible matrices; entry j realizes the adjacent transposition (j, j+1)."""

    __slots__ = ("transpositions",)

    def __init__(self, transpositions):
        object.__setattr__(self, "transpositions", tuple(transpositions))

    def __setattr__(self, name, value):
        raise AttributeError("RealizationWitness is immutable")

    def __len__(self):
        return len(self.transpositions)

    def __iter__(self):
        return iter(self.transpositions)

    def __getitem__(self, j):
        return self.transpositions[j]

    def __eq__(self, other):
        return (isinstance(other, RealizationWitness)
                and self.transpositions == other.transpositions)

    def __hash__(self):
        return hash(self.transpositions)


class StrongWitness:
    """Plane representatives M_i together with matrices P_j moving them on
    the nose: P_j · M_i = M_{tau_j(i)} entrywise, not just up to column span."""

    __slots__ = ("representatives", "transpositions")

    def __init__(self, representatives, transpositions):
        object.__setattr__(self, "representatives", tuple(representatives))
        object.__setattr__(self, "transpositions", tuple(transpositions))

    def __setattr__(self, name, value):
        raise AttributeError("StrongWitness is immutable")


def _coerce_witness(w):
    if w is None or isinstance(w, RealizationWitness):
        return w
    return RealizationWitness(w)


class Tss:
    """An indexed set of k square matrices over K.

    Duplicate elements force degeneracy: transitivity of the permutation
    action means a single collision collapses the whole set.  A family
    whose members are all equal keeps its formal cardinality (the trivial
    set of size k); a partial collision is canonicalized to the singleton
    of its first element.
    """

    __slots__ = ("n", "k", "elements", "witness", "params")

    def __init__(self, elements, witness=None, n=None, params=()):
        elements = tuple(elements)
        witness = _coerce_witness(witness)
        params = tuple(p if isinstance(p, Scalar) else Scalar.rational(p)
                       for p in params)
        if elements:
            n = elements[0].n
            for a in elements:
                if a.m != a.n or a.n != n:
                    raise ValueError("elements must be square and equal-sized")
        elif n is None:
            raise ValueError("empty set needs an explicit ambient dimension")
        distinct = len(set(elements))
        if elements and distinct < len(elements) and distinct > 1:
            elements = (elements[0],)
            witness = None
        k = len(elements)
        if witness is not None and len(witness) != max(k - 1, 0):
            raise ValueError("witness must have k-1 transposition matrices")
        if witness is None and distinct <= 1 and k >= 1:
            witness = RealizationWitness([Matrix.identity(n)] * (k - 1))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "witness", witness)
        # spectral parameters attached at construction; a hint for eigenvalue
        # discovery, carrying no identity weight (like the witness)
        object.__setattr__(self, "params", params)

    def __setattr__(self, name, value):
        raise AttributeError("Tss is immutable")

    @property
    def degenerate(self):
        return len(set(self.elements)) <= 1

    def __eq__(self, other):
        # witnesses are certificates, not identity
        return (isinstance(other, Tss) and self.n == other.n
                and self.elements == other.elements)

    def __hash__(self):
        return hash((self.n, self.elements))

    def __repr__(self):
        return f"Tss(k={self.k}, n={self.n}, degenerate={self.degenerate})"


class Arrangement:
    """An indexed set of k subspaces of K^n, all of dimension d."""

    __slots__ = ("n", "d", "k", "planes", "witness", "strong_witness")

    def __init__(self, planes, witness=None, strong_witness=None):
        planes = tuple(planes)
        witness = _coerce_witness(witness)
        if not planes:
            raise ValueError("arrangement needs at least one plane")
        n = planes[0].n
        d = planes[0].dim
        for w in planes:
            if w.n != n or w.dim != d:
                raise ValueError("planes must share ambient and plane dimension")
        distinct = len(set(planes))
        if distinct < len(planes) and distinct > 1:
            planes = (planes[0],)
            witness = None
            strong_witness = None
        k = len(planes)
        if witness is not None and len(witness) != max(k - 1, 0):
            raise ValueError("witness must have k-1 transposition matrices")
        if witness is None and distinct == 1 and k >= 1:
            witness = RealizationWitness([Matrix.identity(n)] * (k - 1))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "planes", planes)
        object.__setattr__(self, "witness", witness)
        object.__setattr__(self, "strong_witness", strong_witness)

    def __setattr__(self, name, value):
        raise AttributeError("Arrangement is immutable")

    @property
    def degenerate(self):
        return len(set(self.planes)) <= 1

    def __eq__(self, other):
        return (isinstance(other, Arrangement) and self.n == other.n
                and self.planes == other.planes)

    def __hash__(self):
        return hash((self.n, self.planes))

    def __repr__(self):
        return (f"Arrangement(k={self.k}, d={self.d}, n={self.n}, "
                f"degenerate={self.degenerate})")


class DecompositionSystem:
    """A k-by-p grid of subspaces; each row direct-sums to the whole space
    and the witness transports rows onto rows, fixing the column index."""

    __slots__ = ("n", "k", "parts", "grid", "witness")

    def __init__(self, grid, witness=None):
        grid = tuple(tuple(row) for row in grid)
        witness = _coerce_witness(witness)
        if not grid or not grid[0]:
            raise ValueError("grid must be non-empty")
        n = grid[0][0].n
        parts = len(grid[0])
        for row in grid:
            if len(row) != parts:
                raise ValueError("ragged grid")
            if sum(w.dim for w in row) != n:
                raise ValueError("row dimensions do not sum to the ambient dimension")
            total = row[0]
            for w in row[1:]:
                total = total + w
            if total.dim != n:
                raise ValueError("row subspaces do not direct-sum to K^n")
        k = len(grid)
        if witness is not None:
            if len(witness) != k - 1:
                raise ValueError("witness must have k-1 transposition matrices")
            for j, p in enumerate(witness):
                for i in range(k):
                    for m in range(parts):
                        if grid[i][m].apply(p) != grid[_swap(range(k), j)[i]][m]:
                            raise ValueError(
                                f"witness {j} does not transport row {i}, part {m}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "witness", witness)

    def __setattr__(self, name, value):
        raise AttributeError("DecompositionSystem is immutable")


@dataclass(frozen=True)
class Certificate:
    verdict: str
    witness: Optional[RealizationWitness] = None
    failing_transposition: Optional[int] = None
    detail: Optional[str] = None


# ---------------------------------------------------------------------------
# verification


def _witness_realizes_tss(elements, witness):
    for j, p in enumerate(witness):
        if p.det().is_zero():
            return False
        target = _swap(elements, j)
        if any(p * a != b * p for a, b in zip(elements, target)):
            return False
    return True


def _witness_realizes_planes(planes, witness):
    for j, p in enumerate(witness):
        if p.det().is_zero():
            return False
        target = _swap(planes, j)
        if any(w.apply(p) != t for w, t in zip(planes, target)):
            return False
    return True


def verify_tss(t, from_scratch=False):
    """Certify total symmetry of a matrix set.

    The bundled witness, if any, is rechecked first; when absent, invalid,
    or when from_scratch is set, each adjacent transposition is solved as
    an intertwiner system and an invertible solution is searched for.  A
    NotTotallySymmetric verdict names the first transposition whose
    solution space held no invertible element we could find.
    """
    if t.degenerate:
        return Certificate(DEGENERATE, witness=t.witness)
    if t.witness is not None and not from_scratch:
        if _witness_realizes_tss(t.elements, t.witness):
            return Certificate(TOTALLY_SYMMETRIC, witness=t.witness)
    found = []
    for j in range(t.k - 1):
        space = intertwiner_space(list(t.elements), _swap(t.elements, j))
        p = invertible_in_space(space, t.n)
        if p is None:
            return Certificate(
                NOT_TOTALLY_SYMMETRIC, failing_transposition=j,
                detail=f"no invertible intertwiner found for transposition ({j}, {j + 1})")
        found.append(p)
    return Certificate(TOTALLY_SYMMETRIC, witness=RealizationWitness(found))


def _annihilator(space):
    """Row vectors f with f·w = 0 for all w in the subspace."""
    if space.dim == 0:
        return Subspace.full(space.n)
    return kernel(Matrix(space.basis))


def _transport_space(planes, targets):
    """Solution space of P·W_i ⊆ T_i for all i, as vectorised matrices."""
    n = planes[0].n
    rows = []
    for w, tgt in zip(planes, targets):
        ann = _annihilator(tgt)
        for f in ann.basis:
            for col in w.basis:
                # f^T P col = 0: coefficient of P[p][q] is f[p]*col[q]
                row = [f[p] * col[q] for p in range(n) for q in range(n)]
                rows.append(row)
    if not rows:
        return Subspace.full(n * n)
    return kernel(Matrix(rows))


def verify_arrangement(a, from_scratch=False):
    """Certify total symmetry of a subspace arrangement.

    Transport of a plane is encoded linearly: P maps W_i into W_{sigma(i)},
    which together with invertibility of P gives equality of images.
    """
    if a.degenerate:
        return Certificate(DEGENERATE, witness=a.witness)
    if a.witness is not None and not from_scratch:
        if _witness_realizes_planes(a.planes, a.witness):
            return Certificate(TOTALLY_SYMMETRIC, witness=a.witness)
    found = []
    for j in range(a.k - 1):
        space = _transport_space(list(a.planes), _swap(a.planes, j))
        p = invertible_in_space(space, a.n)
        if p is None:
            return Certificate(
                NOT_TOTALLY_SYMMETRIC, failing_transposition=j,
                detail=f"no invertible transport found for transposition ({j}, {j + 1})")
        found.append(p)
    return Certificate(TOTALLY_SYMMETRIC, witness=RealizationWitness(found))


def realize_permutation(witness, sigma, n=None):
    """A matrix realizing sigma (one-line, 0-based) by composing the
    adjacent-transposition witnesses along a bubble-sort word."""
    sigma = list(sigma)
    k = len(sigma)
    if sorted(sigma) != list(range(k)):
        raise ValueError("not a permutation in one-line notation")
    if len(witness) != max(k - 1, 0):
        raise ValueError("witness length does not match the permutation size")
    if k <= 1 or not len(witness):
        if n is None:
            n = witness[0].n if len(witness) else None
        if n is None:
            raise ValueError("ambient dimension needed for the empty witness")
        return Matrix.identity(n)
    word = []
    arr = sigma[:]
    for _ in range(k):
        swapped = False
        for p in range(k - 1):
            if arr[p] > arr[p + 1]:
                arr[p], arr[p + 1] = arr[p + 1], arr[p]
                word.append(p)
                swapped = True
        if not swapped:
            break
    result = Matrix.identity(witness[0].n)
    for p in word:
        result = witness[p] * result
    return result


def is_commutative(t):
    els = t.elements
    return all(a * b == b * a for i, a in enumerate(els) for b in els[i + 1:])


def isomorphic(a, b):
    """An invertible T with T·A_i·T^-1 = B_i, or None."""
    if (a.n, a.k) != (b.n, b.k):
        return None
    space = intertwiner_space(list(a.elements), list(b.elements))
    return invertible_in_space(space, a.n)


# ---------------------------------------------------------------------------
# restriction / quotient, duality, reduction


def _basis_change_through(space):
    """Invertible U whose first dim(space) columns span the space, the rest
    standard vectors in index order."""
    cols = list(space.basis) + space.extension_columns()
    return Matrix.from_columns(cols)


def _split_conjugate(mats, u, u_inv, d):
    """Conjugate each matrix by U and split into (top-left d, bottom-right)."""
    tops, bottoms = [], []
    n = u.n
    for m in mats:
        c = u_inv * m * u
        if d < n:
            low_left = c.submatrix(range(d, n), range(d))
            if not low_left.is_zero():
                raise NotInvariant("subspace is not invariant")
            bottoms.append(c.submatrix(range(d, n), range(d, n)))
        tops.append(c.submatrix(range(d), range(d)))
    return tops, bottoms


def restriction_quotient(t, space, witness=None):
    """Restrict a matrix set to an invariant subspace and form the quotient.

    Returns (restriction, quotient); the quotient is None when the subspace
    is the whole space, the restriction None when it is zero.  Witnesses
    carry over by restriction and projection.  Raises NotInvariant if the
    subspace fails invariance under any element or witness matrix.
    """
    witness = t.witness if witness is None else _coerce_witness(witness)
    mats = list(t.elements) + (list(witness) if witness is not None else [])
    for m in mats:
        if not space.is_invariant_under(m):
            raise NotInvariant("subspace is not invariant")
    d = space.dim
    if d == 0:
        return None, Tss(t.elements, witness=witness, params=t.params)
    u = _basis_change_through(space)
    u_inv = u.inverse()
    el_tops, el_bottoms = _split_conjugate(t.elements, u, u_inv, d)
    if witness is not None:
        w_tops, w_bottoms = _split_conjugate(list(witness), u, u_inv, d)
    else:
        w_tops = w_bottoms = None
    restriction = Tss(el_tops, witness=w_tops, params=t.params)
    if d == t.n:
        return restriction, None
    quotient = Tss(el_bottoms, witness=w_bottoms, params=t.params)
    return restriction, quotient


def dual_arrangement(a):
    """The arrangement of annihilators, witnessed by inverse-transposes."""
    duals = [_annihilator(w) for w in a.planes]
    witness = None
    if a.witness is not None:
        witness = RealizationWitness(
            [p.inverse().transpose() for p in a.witness])
    return Arrangement(duals, witness=witness)


def reduce_arrangement(a):
    """Quotient out the common intersection Q of all planes.

    The result lives in K^(n-q) via a basis extending Q; witnesses descend
    to the quotient blocks.  Already-reduced arrangements are returned
    unchanged.
    """
    q = a.planes[0]
    for w in a.planes[1:]:
        q = q.intersection(w)
    if q.dim == 0:
        return a
    u = _basis_change_through(q)
    u_inv = u.inverse()
    qd = q.dim
    new_planes = []
    for w in a.planes:
        imgs = [mat_vec(u_inv, v)[qd:] for v in w.basis]
        new_planes.append(Subspace(imgs, a.n - qd))
    witness = None
    if a.witness is not None:
        _, bottoms = _split_conjugate(list(a.witness), u, u_inv, qd)
        witness = RealizationWitness(bottoms)
    return Arrangement(new_planes, witness=witness)


def stabilizer_dimension(a):
    """Dimension and basis of {A : A·W_i ⊆ W_i for all i}."""
    space = _transport_space(list(a.planes), list(a.planes))
    return space.dim, [vec_to_matrix(v, a.n) for v in space.basis]


def half_dim_normal_form(a):
    """Normalize a pairwise-complementary half-dimensional arrangement.

    For n = 2d and k >= 3 planes with W_i ⊕ W_j = K^n for every pair,
    produces coordinates in which the first three planes become the column
    spans of (I;0), (0;I), (I;I); every further plane is then the graph of
    an invertible A_i, i.e. the span of (A_i; I).  Returns the basis matrix
    and the extracted (k-3)-element Tss {A_4, ..., A_k}.
    """
    n, d, k = a.n, a.d, a.k
    if n != 2 * d:
        raise NotComplementary("planes are not half-dimensional")
    if k < 3:
        raise NotComplementary("need at least three planes")
    for i in range(k):
        for j in range(i + 1, k):
            if a.planes[i].intersection(a.planes[j]).dim != 0:
                raise NotComplementary(f"planes {i} and {j} are not complementary")
    b = [w.matrix_columns() for w in a.planes]
    u = Matrix.block([[b[0], b[1]]])
    coords3 = u.inverse() * b[2]
    top = coords3.submatrix(range(d), range(d))
    bottom = coords3.submatrix(range(d, n), range(d))
    u_prime = Matrix.block([[b[0] * top, b[1] * bottom]])
    u_prime_inv = u_prime.inverse()
    graphs = []
    for i in range(3, k):
        c = u_prime_inv * b[i]
        c_top = c.submatrix(range(d), range(d))
        c_bot = c.submatrix(range(d, n), range(d))
        graphs.append(c_top * c_bot.inverse())
    tss = Tss(graphs, n=d)
    return u_prime, tss


def involution_checks(t):
    """Per-element conjugacy flags for A ~ A^-1 and A ~ I - A."""
    eye = Matrix.identity(t.n)
    report = []
    for a in t.elements:
        det, inv = a.det_inverse()
        if inv is None:
            raise Singular("element is not invertible")
        def conj_to(target, a=a):
            space = intertwiner_space([a], [target])
            return invertible_in_space(space, t.n) is not None
        report.append({
            "conjugate_to_inverse": conj_to(inv),
            "conjugate_to_one_minus": conj_to(eye - a),
        })
    return report


def suspension(a, lam):
    """Block-triangular commutative set built over a strongly symmetric
    arrangement: elements (λI M_i; 0 λI), witnesses P_j ⊕ I."""
    if a.strong_witness is None:
        raise NoStrongWitness("suspension needs representatives moved on the nose")
    lam = lam if isinstance(lam, Scalar) else Scalar.rational(lam)
    reps = a.strong_witness.representatives
    ps = a.strong_witness.transpositions
    if len(reps) != a.k or len(ps) != a.k - 1:
        raise NoStrongWitness("strong witness size mismatch")
    for i, m in enumerate(reps):
        if Subspace.from_matrix_columns(m) != a.planes[i]:
            raise NoStrongWitness(f"representative {i} does not span its plane")
    for j, p in enumerate(ps):
        for i, m in enumerate(reps):
            if p * m != reps[_swap(range(a.k), j)[i]]:
                raise NoStrongWitness(
                    f"transposition {j} does not move representative {i} on the nose")
    n, d = a.n, a.d
    lam_n = Matrix.scalar(n, lam)
    lam_d = Matrix.scalar(d, lam)
    z = Matrix.zero(d, n)
    elements = [Matrix.block([[lam_n, m], [z, lam_d]]) for m in reps]
    zs = Matrix.zero(n, d)
    zd = Matrix.zero(d, n)
    eyed = Matrix.identity(d)
    witness = [Matrix.block([[p, zs], [zd, eyed]]) for p in ps]
    return Tss(elements, witness=witness, params=(lam,))
