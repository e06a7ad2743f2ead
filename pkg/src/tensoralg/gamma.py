"""Quadratic functor of the relative abelianization and the squaring map.

For a pair (L, N) let d be the dimension of N/[N,L].  The quadratic functor
of that quotient is the symmetric square, of dimension d(d+1)/2, with basis
labelled by pairs (a, b) with a <= b.  The squaring map sends a square
generator to the class of n (x) n in the tensor product, choosing coset
representatives for the quotient basis; mixed generators go to the polarized
value n (x) n' + n' (x) n.

Well-definedness means the squares do not depend on the choice of coset
representative: shifting a representative n by a commutator m must move
n (x) n inside the image of the map.  The checker reports the first basis
pair where that fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .linalg import LinearMap, Subspace, Vector, quotient_with_section, vadd, vscale
from .pairs import Pair, relative_commutator_in_ideal
from .tensor import NonabelianTensor


def gamma_dim(d: int) -> int:
    """Dimension of the symmetric square of a d-dimensional space."""
    if d < 0:
        raise ValueError("negative dimension")
    return d * (d + 1) // 2


@dataclass(frozen=True)
class GammaSpace:
    """Symmetric square coordinates for the relative abelianization."""

    source_dim: int
    reps: tuple[Vector, ...]  # coset representatives, in ideal coordinates
    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def from_pair(cls, pair: Pair) -> "GammaSpace":
        comm = relative_commutator_in_ideal(pair)
        _, reps = quotient_with_section(pair.right_dim, comm)
        d = len(reps)
        index_pairs = tuple((a, b) for a in range(d) for b in range(a, d))
        return cls(d, tuple(reps), index_pairs)

    @property
    def dim(self) -> int:
        return len(self.pairs)

    def index(self, a: int, b: int) -> int:
        if a > b:
            a, b = b, a
        return self.pairs.index((a, b))


def sigma(tensor: NonabelianTensor, x: Sequence, y: Sequence) -> Vector:
    """Class of x (x) y + y (x) x for two ideal vectors, in tensor coordinates.

    Both arguments are given in ideal coordinates.
    """
    pair = tensor.pair
    return vadd(
        tensor.tensor_of(pair.ideal_vector_to_ambient(x), y),
        tensor.tensor_of(pair.ideal_vector_to_ambient(y), x),
    )


def _square_class(tensor: NonabelianTensor, n: Sequence) -> Vector:
    """Class of n (x) n for an ideal vector n."""
    return tensor.tensor_of(tensor.pair.ideal_vector_to_ambient(n), n)


@dataclass(frozen=True)
class PsiDefect:
    """A representative-dependence witness for the squaring map.

    Shifting representative number rep_index by commutator_vector moves its
    square by residual, and residual is outside the image of the map.
    """

    rep_index: int
    commutator_vector: Vector  # in ideal coordinates
    residual: Vector           # in tensor coordinates


def psi_map(pair: Pair, tensor: NonabelianTensor, gamma: GammaSpace | None = None) -> LinearMap:
    """The squaring map from the symmetric square into tensor coordinates."""
    if tensor.pair != pair:
        raise ValueError("tensor was built from a different pair")
    if gamma is None:
        gamma = GammaSpace.from_pair(pair)
    ambient = [pair.ideal_vector_to_ambient(r) for r in gamma.reps]
    columns = []
    for a, b in gamma.pairs:
        if a == b:
            columns.append(tensor.tensor_of(ambient[a], gamma.reps[a]))
        else:
            columns.append(
                vadd(
                    tensor.tensor_of(ambient[a], gamma.reps[b]),
                    tensor.tensor_of(ambient[b], gamma.reps[a]),
                )
            )
    return LinearMap.from_columns(tensor.dim, columns)


def psi_welldefined(pair: Pair, tensor: NonabelianTensor) -> PsiDefect | None:
    """None when the squaring map is independent of representative choice."""
    gamma = GammaSpace.from_pair(pair)
    image = psi_map(pair, tensor, gamma).image()
    comm = relative_commutator_in_ideal(pair)
    for k, rep in enumerate(gamma.reps):
        base = _square_class(tensor, rep)
        for m in comm.basis:
            shifted = _square_class(tensor, vadd(rep, m))
            residual = vadd(shifted, vscale(-1, base))
            if not image.contains(residual):
                return PsiDefect(k, m, residual)
    return None


def psi_image(pair: Pair, tensor: NonabelianTensor) -> Subspace:
    """Image of the squaring map, in tensor coordinates."""
    return psi_map(pair, tensor).image()
