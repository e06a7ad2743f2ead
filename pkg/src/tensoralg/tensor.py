"""Nonabelian tensor product of a pair, with its derived subspaces and maps.

The construction is presentation by generators and relations.  Generators are
the basis symbols l_i (x) n_a, living in a vector space of dimension p * q.
The defining relations expand brackets in either slot through the actions:

    [l, l'] (x) n   =  l (x) (l'. n)  -  l' (x) (l . n)
    l (x) [n, n']   =  (n'. l) (x) n  -  (n . l) (x) n'

The bracket on symbols is  [l (x) n, l' (x) n'] = -(n . l) (x) (l'. n').
The relation subspace is closed under that bracket together with its
antisymmetry and Jacobi defects, so the quotient carries an honest Lie
algebra structure; the quotient is the tensor product.

Derived data: the diagonal ideal generated by n (x) n, the exterior product
(quotient by the diagonal), the evaluation map sending l (x) n to l . n, and
the kernels and images that go with them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .liealg import LieAlgebra, NotAnIdealError, validate_structure
from .linalg import (
    LinalgError,
    LinearMap,
    Subspace,
    Vector,
    as_vector,
    is_zero,
    kernel,
    quotient_with_section,
    vadd,
    vscale,
    zero_vector,
)
from .pairs import Pair


class TensorConstructionError(RuntimeError):
    """The relation closure produced an inconsistent quotient structure."""


@dataclass(frozen=True)
class SymbolSpace:
    """Coordinates for the free span of basis symbols l_i (x) n_a."""

    left_dim: int
    right_dim: int

    @property
    def dim(self) -> int:
        return self.left_dim * self.right_dim

    def index(self, i: int, a: int) -> int:
        if not (0 <= i < self.left_dim and 0 <= a < self.right_dim):
            raise LinalgError("symbol index out of range")
        return i * self.right_dim + a

    def split(self, k: int) -> tuple[int, int]:
        if not 0 <= k < self.dim:
            raise LinalgError("symbol index out of range")
        return divmod(k, self.right_dim)

    def expand(self, x: Sequence, n: Sequence) -> Vector:
        """Bilinear expansion of x (x) n into symbol coordinates."""
        x = as_vector(x)
        n = as_vector(n)
        if len(x) != self.left_dim or len(n) != self.right_dim:
            raise LinalgError("expansion argument of wrong length")
        out = []
        for xi in x:
            if xi == 0:
                out.extend([xi * 0] * self.right_dim)
            else:
                out.extend([xi * na for na in n])
        return tuple(out)


def _collapse_tables(pair: Pair, sym: SymbolSpace) -> tuple[tuple[Vector, ...], tuple[Vector, ...]]:
    """Per-symbol values (n_a . l_i) in L and (l_i . n_a) in N coordinates."""
    left = []
    right = []
    for i in range(sym.left_dim):
        for a in range(sym.right_dim):
            left.append(pair.act_on_algebra.act_basis(a, i))
            right.append(pair.act_on_ideal.act_basis(i, a))
    return tuple(left), tuple(right)


def _combine(table: Sequence[Vector], coords: Vector, width: int) -> Vector:
    out = zero_vector(width)
    for c, v in zip(coords, table):
        if c != 0 and not is_zero(v):
            out = vadd(out, vscale(c, v))
    return out


def beta_bracket(pair: Pair, u: Sequence, v: Sequence) -> Vector:
    """Bracket of two symbol vectors, as a symbol vector.

    Both slots collapse first: u to an element of L through the ideal action
    on the algebra, v to an element of N through the algebra action on the
    ideal.  The bracket is minus the expansion of the collapsed pair.
    """
    sym = SymbolSpace(pair.left_dim, pair.right_dim)
    u = as_vector(u)
    v = as_vector(v)
    if len(u) != sym.dim or len(v) != sym.dim:
        raise LinalgError("bracket argument of wrong length")
    left, right = _collapse_tables(pair, sym)
    lc = _combine(left, u, sym.left_dim)
    rc = _combine(right, v, sym.right_dim)
    return vscale(-1, sym.expand(lc, rc))


def relation_seed(pair: Pair) -> Subspace:
    """Span of the defining relations of the presentation, in symbol coordinates."""
    sym = SymbolSpace(pair.left_dim, pair.right_dim)
    algebra = pair.algebra
    n_alg = pair.ideal_algebra
    p, q = sym.left_dim, sym.right_dim
    unit_l = [algebra.basis_vector(i) for i in range(p)]
    unit_n = [n_alg.basis_vector(a) for a in range(q)]
    out = []
    for i in range(p):
        for j in range(i + 1, p):
            for a in range(q):
                v = sym.expand(algebra.bracket_basis(i, j), unit_n[a])
                v = vadd(v, vscale(-1, sym.expand(unit_l[i], pair.act_on_ideal.act_basis(j, a))))
                v = vadd(v, sym.expand(unit_l[j], pair.act_on_ideal.act_basis(i, a)))
                if not is_zero(v):
                    out.append(v)
    for i in range(p):
        for a in range(q):
            for b in range(a + 1, q):
                v = sym.expand(unit_l[i], n_alg.bracket_basis(a, b))
                v = vadd(v, vscale(-1, sym.expand(pair.act_on_algebra.act_basis(b, i), unit_n[a])))
                v = vadd(v, sym.expand(pair.act_on_algebra.act_basis(a, i), unit_n[b]))
                if not is_zero(v):
                    out.append(v)
    return Subspace.from_vectors(sym.dim, out)


def closure(pair: Pair, seed: Subspace) -> Subspace:
    """Close a seed span under the symbol bracket and its defect vectors.

    Antisymmetry and Jacobi defects of the bracket are added up front, then
    brackets of arbitrary vectors against the accumulating span are swept
    until nothing new appears.  Collapsed slots range over the spans of the
    per-symbol collapse tables, which is enough by bilinearity.
    """
    sym = SymbolSpace(pair.left_dim, pair.right_dim)
    if seed.ambient_dim != sym.dim:
        raise LinalgError("seed lives in the wrong symbol space")
    left, right = _collapse_tables(pair, sym)
    act = pair.act_on_ideal
    p, q = sym.left_dim, sym.right_dim
    left_zero = [is_zero(v) for v in left]
    right_zero = [is_zero(v) for v in right]
    gens = list(seed.basis)
    # antisymmetry defects [u, v] + [v, u], including u = v
    for u in range(sym.dim):
        for v in range(u, sym.dim):
            if (left_zero[u] or right_zero[v]) and (left_zero[v] or right_zero[u]):
                continue
            w = vadd(sym.expand(left[u], right[v]), sym.expand(left[v], right[u]))
            if not is_zero(w):
                gens.append(w)
    # Jacobi defects [u, [v, w]] + [v, [w, u]] + [w, [u, v]]
    for u in range(sym.dim):
        for v in range(u + 1, sym.dim):
            for w in range(v + 1, sym.dim):
                if left_zero[u] and left_zero[v] and left_zero[w]:
                    continue
                d = sym.expand(left[u], act.apply(left[v], right[w]))
                d = vadd(d, sym.expand(left[v], act.apply(left[w], right[u])))
                d = vadd(d, sym.expand(left[w], act.apply(left[u], right[v])))
                if not is_zero(d):
                    gens.append(d)
    relations = Subspace.from_vectors(sym.dim, gens)
    # sweep: the bracket of anything with a relation must stay a relation
    left_span = Subspace.from_vectors(p, [v for v in left if not is_zero(v)])
    right_span = Subspace.from_vectors(q, [v for v in right if not is_zero(v)])
    while True:
        fresh = []
        for r in relations.basis:
            rc = _combine(right, r, q)
            if not is_zero(rc):
                for a in left_span.basis:
                    w = sym.expand(a, rc)
                    if not relations.contains(w):
                        fresh.append(w)
            lc = _combine(left, r, p)
            if not is_zero(lc):
                for b in right_span.basis:
                    w = sym.expand(lc, b)
                    if not relations.contains(w):
                        fresh.append(w)
        if not fresh:
            return relations
        relations = Subspace.from_vectors(sym.dim, list(relations.basis) + fresh)


@dataclass(frozen=True)
class NonabelianTensor:
    """The tensor product: quotient coordinates, projection, and section."""

    pair: Pair
    symbols: SymbolSpace
    relations: Subspace
    algebra: LieAlgebra
    projection: LinearMap  # symbol coordinates -> tensor coordinates
    section: LinearMap     # tensor coordinates -> symbol coordinates

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def tensor_of(self, x: Sequence, n: Sequence) -> Vector:
        """Class of x (x) n; x in algebra coordinates, n in ideal coordinates."""
        return self.projection.apply(self.symbols.expand(x, n))

    def generator(self, i: int, a: int) -> Vector:
        """Class of the basis symbol l_i (x) n_a."""
        x = self.pair.algebra.basis_vector(i)
        n = self.pair.ideal_algebra.basis_vector(a)
        return self.tensor_of(x, n)


def symbol_expand(tensor: NonabelianTensor, x: Sequence, n: Sequence) -> Vector:
    """Class of x (x) n in tensor coordinates; x over the algebra, n over the ideal."""
    return tensor.tensor_of(x, n)


def construct_tensor(pair: Pair) -> NonabelianTensor:
    """Build the tensor product of a pair and verify the induced structure."""
    sym = SymbolSpace(pair.left_dim, pair.right_dim)
    relations = closure(pair, relation_seed(pair))
    proj, reps = quotient_with_section(sym.dim, relations)
    t_dim = sym.dim - relations.dim
    left, right = _collapse_tables(pair, sym)
    lc = [_combine(left, r, sym.left_dim) for r in reps]
    rc = [_combine(right, r, sym.right_dim) for r in reps]
    table = [
        [proj.apply(vscale(-1, sym.expand(lc[i], rc[j]))) for j in range(t_dim)]
        for i in range(t_dim)
    ]
    violation = validate_structure(t_dim, table)
    if violation is not None:
        raise TensorConstructionError(f"induced bracket is not a Lie bracket: {violation}")
    names = tuple(f"t{k}" for k in range(t_dim))
    brackets = {
        (i, j): table[i][j]
        for i in range(t_dim)
        for j in range(i + 1, t_dim)
        if not is_zero(table[i][j])
    }
    algebra = LieAlgebra.make(t_dim, names, brackets)
    section = LinearMap.from_columns(sym.dim, reps)
    return NonabelianTensor(pair, sym, relations, algebra, proj, section)


def diagonal(tensor: NonabelianTensor) -> Subspace:
    """The diagonal subspace, spanned by classes of n (x) n over the ideal.

    Polarization turns the quadratic family into a linear spanning set:
    the squares n_a (x) n_a together with n_a (x) n_b + n_b (x) n_a.
    """
    pair = tensor.pair
    sym = tensor.symbols
    q = pair.right_dim
    ambient = [pair.ideal_basis_vector(a) for a in range(q)]
    unit_n = [pair.ideal_algebra.basis_vector(a) for a in range(q)]
    gens = []
    for a in range(q):
        gens.append(sym.expand(ambient[a], unit_n[a]))
    for a in range(q):
        for b in range(a + 1, q):
            gens.append(vadd(sym.expand(ambient[a], unit_n[b]), sym.expand(ambient[b], unit_n[a])))
    return Subspace.from_vectors(tensor.dim, [tensor.projection.apply(g) for g in gens])


def _exterior_data(tensor: NonabelianTensor) -> tuple[Subspace, LieAlgebra, LinearMap, LinearMap]:
    """Diagonal, exterior algebra, projection, and section for a tensor product."""
    box = diagonal(tensor)
    t_alg = tensor.algebra
    for b in box.basis:
        for k in range(t_alg.dim):
            w = t_alg.bracket_vectors(t_alg.basis_vector(k), b)
            if not box.contains(w):
                raise NotAnIdealError("diagonal subspace is not an ideal", witness=(k, b))
    proj, reps = quotient_with_section(t_alg.dim, box)
    e_dim = t_alg.dim - box.dim
    brackets = {}
    for i in range(e_dim):
        for j in range(i + 1, e_dim):
            v = proj.apply(t_alg.bracket_vectors(reps[i], reps[j]))
            if not is_zero(v):
                brackets[(i, j)] = v
    algebra = LieAlgebra.make(e_dim, tuple(f"e{k}" for k in range(e_dim)), brackets)
    section = LinearMap.from_columns(t_alg.dim, reps)
    return box, algebra, proj, section


def exterior(tensor: NonabelianTensor) -> tuple[LieAlgebra, LinearMap]:
    """The exterior product and the projection onto it from tensor coordinates."""
    _, algebra, proj, _ = _exterior_data(tensor)
    return algebra, proj


@dataclass(frozen=True)
class DerivedMaps:
    """Evaluation maps out of the tensor and exterior products.

    Evaluation sends the class of l (x) n to the bracket [l, n] in the
    ambient algebra; its image is the commutator [L, N] and its kernel is
    central.  The same map factors through the exterior product, where the
    kernel is the multiplier.
    """

    kappa: LinearMap        # tensor coordinates -> ambient algebra coordinates
    j2: Subspace            # kernel of kappa, in tensor coordinates
    square: Subspace        # the diagonal, in tensor coordinates
    eps: LinearMap          # tensor coordinates -> exterior coordinates
    exterior: LieAlgebra
    kappa_prime: LinearMap  # exterior coordinates -> ambient algebra coordinates
    multiplier: Subspace    # kernel of kappa_prime, in exterior coordinates


def kappa_maps(tensor: NonabelianTensor) -> DerivedMaps:
    """Evaluation of the presentation symbols through the action of L on N."""
    box, ext_algebra, eps, ext_section = _exterior_data(tensor)
    pair = tensor.pair
    sym = tensor.symbols
    _, right = _collapse_tables(pair, sym)
    q = pair.right_dim
    for r in tensor.relations.basis:
        if not is_zero(_combine(right, r, q)):
            raise TensorConstructionError("evaluation map does not kill the relations")
    columns = [
        pair.ideal_vector_to_ambient(
            _combine(right, tensor.section.apply(tuple(1 if k == m else 0 for m in range(tensor.dim))), q)
        )
        for k in range(tensor.dim)
    ]
    kappa = LinearMap.from_columns(pair.left_dim, columns)
    t_alg = tensor.algebra
    ambient = pair.algebra
    for i in range(t_alg.dim):
        for j in range(i + 1, t_alg.dim):
            lhs = kappa.apply(t_alg.bracket_basis(i, j))
            rhs = ambient.bracket_vectors(columns[i], columns[j])
            if lhs != rhs:
                raise TensorConstructionError(
                    f"evaluation map does not respect the bracket of basis pair ({i}, {j})"
                )
    for b in box.basis:
        if not is_zero(kappa.apply(b)):
            raise TensorConstructionError("evaluation map does not kill the diagonal")
    kp_columns = [
        kappa.apply(ext_section.apply(tuple(1 if k == m else 0 for m in range(ext_algebra.dim))))
        for k in range(ext_algebra.dim)
    ]
    kappa_prime = LinearMap.from_columns(pair.left_dim, kp_columns)
    return DerivedMaps(
        kappa=kappa,
        j2=kernel(kappa),
        square=box,
        eps=eps,
        exterior=ext_algebra,
        kappa_prime=kappa_prime,
        multiplier=kernel(kappa_prime),
    )
