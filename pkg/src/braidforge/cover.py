"""
cover: the k-fold cyclic branched cover of the disk over n points, braid
lifts as Dehn-twist words, and the integral homology representation.

The covering surface is the Seifert surface of the (n, k) torus link: n disks
joined by k bands between each adjacent pair.  H_1 has rank (n-1)(k-1), with
basis the classes of the curves running through bands l and l+1 between disks
i and i+1 (1 <= i <= n-1, 1 <= l <= k-1).  A braid generator lifts to the
chain of twists t_{i,1} ... t_{i,k-1}, and a Dehn twist acts on H_1 by the
transvection x ↦ x + <x, c>·c in the intersection pairing.

Two basis curves can pair only when adjacent in the band grid, and the deck
orbit relation forces the same-column and diagonal pairings between adjacent
rows to cancel; that still leaves orientation conventions (same-row sign,
cross-row sign, which diagonal carries the cancelling sign) that no formula
here dictates.  A build-time search over the eight candidates picks the
convention — cached per process — under which the braid relations hold on
H_1, the deck transformation preserves the form and commutes with every
lifted braid, the chain relations act trivially, and the representation is
integrally conjugate to reduced Burau evaluated at the companion matrix of
1 + t + ... + t^{k-1}.  That conjugacy, by an explicit unimodular base
change, doubles as an independent cross-check of the whole construction.

Everything is exact: integer matrices use Python integers (numpy object
arrays), Burau matrices are Laurent polynomials with integer coefficients.
Homology-level equality of twist words is a necessary condition for equality
in the mapping class group, never claimed sufficient.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

from .words import BraidWord

__all__ = [
    "CoverData",
    "TwistLetter",
    "TwistWord",
    "LaurentMatrix",
    "cover_data",
    "lift_word",
    "parse_twist_word",
    "format_twist_word",
    "intersection_form",
    "twist_class",
    "deck_matrix",
    "transvection",
    "homology_rep",
    "symmetry_check",
    "check_identity",
    "burau_reduced",
    "burau_at_companion",
    "base_change",
    "matrix_to_json",
    "matrix_from_json",
]


# --- cover invariants ----------------------------------------------------------


@dataclass(frozen=True, slots=True)
class CoverData:
    """Topological invariants of the k-fold cyclic cover branched at n points."""

    branch_points: int
    degree: int
    euler_char: int
    boundary_components: int
    genus: int
    h1_rank: int


def cover_data(n: int, k: int) -> CoverData:
    """Invariants of the cover: n + k - nk disks-minus-bands Euler count,
    gcd(n, k) boundary circles, and first homology of rank (n-1)(k-1)."""
    if n < 2 or k < 2:
        raise ValueError(f"cover needs n >= 2 and k >= 2, got ({n}, {k})")
    euler = n + k - n * k
    boundary = gcd(n, k)
    genus, rem = divmod(2 - boundary - euler, 2)
    if rem:
        raise AssertionError("internal error: inconsistent Euler characteristic")
    return CoverData(n, k, euler, boundary, genus, (n - 1) * (k - 1))


# --- twist words ----------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class TwistLetter:
    """One Dehn twist t_{i,l} (sign +1) or its inverse (sign -1) about the
    basis curve through disks i, i+1 and bands l, l+1."""

    i: int
    l: int
    sign: int

    def __post_init__(self):
        if self.i < 1 or self.l < 1:
            raise ValueError(f"twist indices must be >= 1, got ({self.i}, {self.l})")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")


@dataclass(frozen=True, slots=True)
class TwistWord:
    """A word in the twist generators of the (n, k) cover, read left to right."""

    n: int
    k: int
    letters: tuple[TwistLetter, ...] = ()

    def __post_init__(self):
        if self.n < 2 or self.k < 2:
            raise ValueError(f"cover needs n >= 2 and k >= 2, got ({self.n}, {self.k})")
        for letter in self.letters:
            if letter.i > self.n - 1 or letter.l > self.k - 1:
                raise ValueError(
                    f"twist t[{letter.i},{letter.l}] out of range for (n, k) = "
                    f"({self.n}, {self.k})"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> TwistWord:
        return TwistWord(
            self.n,
            self.k,
            tuple(
                TwistLetter(letter.i, letter.l, -letter.sign)
                for letter in reversed(self.letters)
            ),
        )

    def __mul__(self, other: TwistWord) -> TwistWord:
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError("twist words live on different covers")
        return TwistWord(self.n, self.k, self.letters + other.letters)


def lift_word(b: BraidWord, k: int) -> TwistWord:
    """
    The lift of a braid word to the k-fold cover: σ_i becomes the ascending
    chain t_{i,1} ... t_{i,k-1}, σ_i^{-1} the descending chain of inverses,
    letter by letter (so the lift of a product is the product of lifts).
    """
    letters: list[TwistLetter] = []
    for letter in b.letters:
        if letter.sign > 0:
            letters.extend(TwistLetter(letter.index, l, 1) for l in range(1, k))
        else:
            letters.extend(
                TwistLetter(letter.index, l, -1) for l in range(k - 1, 0, -1)
            )
    return TwistWord(b.strands, k, tuple(letters))


_TWIST_TOKEN = re.compile(r"t\[(\d+),(\d+)\](\^-1)?$")


def parse_twist_word(text: str, n: int, k: int) -> TwistWord:
    """Parse twist-word text: letters "t[i,l]" and "t[i,l]^-1", whitespace
    separated."""
    letters = []
    for token in text.split():
        m = _TWIST_TOKEN.match(token)
        if m is None:
            raise ValueError(f"malformed twist letter {token!r}")
        letters.append(
            TwistLetter(int(m.group(1)), int(m.group(2)), -1 if m.group(3) else 1)
        )
    return TwistWord(n, k, tuple(letters))


def format_twist_word(w: TwistWord) -> str:
    return " ".join(
        f"t[{letter.i},{letter.l}]" + ("" if letter.sign > 0 else "^-1")
        for letter in w.letters
    )


# --- exact integer/rational linear algebra --------------------------------------


def _int_matrix(rows) -> np.ndarray:
    return np.array([[int(v) for v in row] for row in rows], dtype=object)


def _identity(d: int) -> np.ndarray:
    return _int_matrix([[1 if i == j else 0 for j in range(d)] for i in range(d)])


def _det(mat: np.ndarray) -> int:
    """Fraction-free Bareiss determinant of an integer matrix."""
    m = [[int(v) for v in row] for row in mat]
    d = len(m)
    if d == 0:
        return 1
    sign = 1
    prev = 1
    for p in range(d - 1):
        if m[p][p] == 0:
            for r in range(p + 1, d):
                if m[r][p] != 0:
                    m[p], m[r] = m[r], m[p]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(p + 1, d):
            for c in range(p + 1, d):
                m[r][c] = (m[r][c] * m[p][p] - m[r][p] * m[p][c]) // prev
            m[r][p] = 0
        prev = m[p][p]
    return sign * m[d - 1][d - 1]


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    rows = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c]
        rows[r] = [v / inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    if not rows:
        rows = [[Fraction(0)] * ncols]
    rref, pivots = _rref([[Fraction(v) for v in row] for row in rows])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rref[r][fc]
        basis.append(vec)
    return basis


def _int_inverse(mat: np.ndarray) -> np.ndarray:
    """Exact inverse of a unimodular integer matrix."""
    d = mat.shape[0]
    aug = [
        [Fraction(int(mat[i, j])) for j in range(d)]
        + [Fraction(1 if i == j else 0) for j in range(d)]
        for i in range(d)
    ]
    rref, pivots = _rref(aug)
    if pivots != list(range(d)):
        raise ValueError("matrix is singular")
    inv = [[rref[i][d + j] for j in range(d)] for i in range(d)]
    if any(v.denominator != 1 for row in inv for v in row):
        raise ValueError("matrix is not unimodular over the integers")
    return _int_matrix([[v.numerator for v in row] for row in inv])


# --- intersection form, deck action, transvections ------------------------------


def _basis_index(i: int, l: int, k: int) -> int:
    return (i - 1) * (k - 1) + (l - 1)


def _form_from_signs(n: int, k: int, signs: tuple[int, int, int]) -> np.ndarray:
    """
    The candidate pairing matrix for (same-row sign, cross-row sign, diagonal
    side): only curves adjacent in the band grid can pair, and the diagonal
    neighbour on the chosen side pairs opposite to the same-column neighbour,
    as the cyclic deck orbit relation demands.
    """
    same_row, cross_row, diag_side = signs
    d = (n - 1) * (k - 1)
    J = [[0] * d for _ in range(d)]

    def put(a: int, b: int, v: int) -> None:
        J[a][b] = v
        J[b][a] = -v

    for i in range(1, n):
        for l in range(1, k):
            e = _basis_index(i, l, k)
            if l + 1 <= k - 1:
                put(e, _basis_index(i, l + 1, k), same_row)
            if i + 1 <= n - 1:
                put(e, _basis_index(i + 1, l, k), cross_row)
                ld = l + diag_side
                if 1 <= ld <= k - 1:
                    put(e, _basis_index(i + 1, ld, k), -cross_row)
    return _int_matrix(J)


def deck_matrix(n: int, k: int) -> np.ndarray:
    """The H_1 action of the deck transformation: one companion block of
    1 + t + ... + t^{k-1} per disk gap, of order exactly k."""
    cover_data(n, k)
    d = (n - 1) * (k - 1)
    D = [[0] * d for _ in range(d)]
    for i in range(1, n):
        for l in range(1, k):
            col = _basis_index(i, l, k)
            if l < k - 1:
                D[_basis_index(i, l + 1, k)][col] = 1
            else:
                for l2 in range(1, k):
                    D[_basis_index(i, l2, k)][col] = -1
    return _int_matrix(D)


def twist_class(i: int, l: int, n: int, k: int) -> np.ndarray:
    """The H_1 class of the curve through disks i, i+1 and bands l, l+1:
    a basis vector for l <= k-1; for l = k the relation class
    -(e_{i,1} + ... + e_{i,k-1}), since the k classes of one row are a single
    deck orbit summing to zero."""
    cover_data(n, k)
    if not 1 <= i <= n - 1 or not 1 <= l <= k:
        raise ValueError(f"twist curve ({i}, {l}) out of range for ({n}, {k})")
    d = (n - 1) * (k - 1)
    vec = [0] * d
    if l <= k - 1:
        vec[_basis_index(i, l, k)] = 1
    else:
        for l2 in range(1, k):
            vec[_basis_index(i, l2, k)] = -1
    return np.array([int(v) for v in vec], dtype=object)


def transvection(c: np.ndarray, J: np.ndarray) -> np.ndarray:
    """The H_1 action of a twist about a curve of class c: the transvection
    x ↦ x + <x, c>·c, as the matrix I + c·(Jc)^T acting on columns."""
    d = len(c)
    return _identity(d) + np.outer(c, J @ c)


def homology_rep(w: TwistWord) -> np.ndarray:
    """The integer H_1 matrix of a twist word: the product of transvections
    in word order (matrices act on column vectors; the map is a homomorphism
    into matrices multiplied left-to-right)."""
    J = intersection_form(w.n, w.k)
    d = (w.n - 1) * (w.k - 1)
    out = _identity(d)
    for letter in w.letters:
        c = twist_class(letter.i, letter.l, w.n, w.k)
        # right-multiplying by I ± c·(Jc)^T is a rank-one update
        out = out + letter.sign * np.outer(out @ c, J @ c)
    return out


def symmetry_check(w: TwistWord) -> bool:
    """Necessary condition for the twist word to define a symmetric mapping
    class: its H_1 matrix commutes with the deck action."""
    H = homology_rep(w)
    D = deck_matrix(w.n, w.k)
    return np.array_equal(H @ D, D @ H)


def check_identity(a: TwistWord, b: TwistWord) -> bool:
    """Whether two twist words act identically on H_1.  Necessary, not
    sufficient, for equality in the mapping class group; for equalities of
    two braid lifts prefer the exact braid-side word problem."""
    if (a.n, a.k) != (b.n, b.k):
        raise ValueError("twist words live on different covers")
    return np.array_equal(homology_rep(a), homology_rep(b))


# --- reduced Burau and the companion specialization ------------------------------


@dataclass(frozen=True)
class LaurentMatrix:
    """A square matrix of integer Laurent polynomials in one variable,
    stored as exponent -> integer coefficient matrix."""

    size: int
    coeffs: dict[int, np.ndarray]

    @staticmethod
    def identity(size: int) -> LaurentMatrix:
        return LaurentMatrix(size, {0: _identity(size)})

    @staticmethod
    def from_entries(entries) -> LaurentMatrix:
        """Build from a nested list whose entries are dicts exponent -> int."""
        size = len(entries)
        coeffs: dict[int, list] = {}
        for r, row in enumerate(entries):
            for c, poly in enumerate(row):
                for e, v in poly.items():
                    if v:
                        coeffs.setdefault(e, [[0] * size for _ in range(size)])
                        coeffs[e][r][c] = v
        return LaurentMatrix(size, {e: _int_matrix(m) for e, m in coeffs.items()})

    def _trimmed(self) -> dict[int, np.ndarray]:
        return {e: m for e, m in self.coeffs.items() if np.any(m != 0)}

    def __matmul__(self, other: LaurentMatrix) -> LaurentMatrix:
        if self.size != other.size:
            raise ValueError("size mismatch")
        acc: dict[int, np.ndarray] = {}
        for e1, m1 in self._trimmed().items():
            for e2, m2 in other._trimmed().items():
                e = e1 + e2
                prod = m1 @ m2
                acc[e] = acc[e] + prod if e in acc else prod
        return LaurentMatrix(self.size, {e: m for e, m in acc.items() if np.any(m != 0)})

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentMatrix) or self.size != other.size:
            return NotImplemented
        a, b = self._trimmed(), other._trimmed()
        return set(a) == set(b) and all(np.array_equal(a[e], b[e]) for e in a)

    def entry(self, r: int, c: int) -> dict[int, int]:
        return {
            e: int(m[r, c]) for e, m in self._trimmed().items() if m[r, c] != 0
        }

    def evaluate_int(self, t: Fraction | int) -> list[list[Fraction]]:
        """Exact evaluation at a nonzero rational t."""
        t = Fraction(t)
        out = [[Fraction(0)] * self.size for _ in range(self.size)]
        for e, m in self.coeffs.items():
            te = t**e
            for r in range(self.size):
                for c in range(self.size):
                    if m[r, c]:
                        out[r][c] += int(m[r, c]) * te
        return out

    def at_matrix(self, K: np.ndarray) -> np.ndarray:
        """Blockwise substitution of an invertible integer matrix for t:
        entry p(t) becomes the block p(K)."""
        powers = {0: _identity(K.shape[0])}
        K_inv = None
        acc = None
        for e, m in sorted(self._trimmed().items()):
            if e not in powers:
                if e > 0:
                    p = max(x for x in powers if x >= 0)
                    mat = powers[p]
                    while p < e:
                        mat = mat @ K
                        p += 1
                        powers[p] = mat
                else:
                    if K_inv is None:
                        K_inv = _int_inverse(K)
                    p = min(x for x in powers if x <= 0)
                    mat = powers[p]
                    while p > e:
                        mat = mat @ K_inv
                        p -= 1
                        powers[p] = mat
            term = np.kron(m, powers[e])
            acc = term if acc is None else acc + term
        if acc is None:
            acc = np.kron(_int_matrix([[0] * self.size for _ in range(self.size)]), powers[0])
        return acc

    def determinant(self) -> dict[int, int]:
        """Laurent determinant by Leibniz expansion (desk-scale sizes)."""
        det: dict[int, int] = {}
        for perm in itertools.permutations(range(self.size)):
            sign = 1
            seen = [False] * self.size
            for start in range(self.size):
                if seen[start]:
                    continue
                length = 0
                x = start
                while not seen[x]:
                    seen[x] = True
                    x = perm[x]
                    length += 1
                if length % 2 == 0:
                    sign = -sign
            term = {0: sign}
            for r in range(self.size):
                term = _poly_mul(term, self.entry(r, perm[r]))
                if not term:
                    break
            for e, v in term.items():
                det[e] = det.get(e, 0) + v
        return {e: v for e, v in det.items() if v}


def _poly_mul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for e1, v1 in a.items():
        for e2, v2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
    return {e: v for e, v in out.items() if v}


@lru_cache(maxsize=None)
def _burau_generator(n: int, index: int, sign: int) -> LaurentMatrix:
    """
    Reduced Burau image of σ_index^{±1} in B_n: the (n-1)×(n-1) Laurent
    matrix differing from the identity only in row `index`, with σ_1 ↦ [-t]
    for n = 2.  Of the two transpose conventions in circulation this is the
    one whose specialization at the companion matrix consists of homology
    transvections.
    """
    d = n - 1
    entries = [[{0: 1} if r == c else {} for c in range(d)] for r in range(d)]
    i = index
    if sign > 0:
        if n == 2:
            entries[0][0] = {1: -1}
        elif i == 1:
            entries[0][0] = {1: -1}
            entries[0][1] = {0: 1}
        elif i == n - 1:
            entries[d - 1][d - 2] = {1: 1}
            entries[d - 1][d - 1] = {1: -1}
        else:
            entries[i - 1][i - 2] = {1: 1}
            entries[i - 1][i - 1] = {1: -1}
            entries[i - 1][i] = {0: 1}
    else:
        if n == 2:
            entries[0][0] = {-1: -1}
        elif i == 1:
            entries[0][0] = {-1: -1}
            entries[0][1] = {-1: 1}
        elif i == n - 1:
            entries[d - 1][d - 2] = {0: 1}
            entries[d - 1][d - 1] = {-1: -1}
        else:
            entries[i - 1][i - 2] = {0: 1}
            entries[i - 1][i - 1] = {-1: -1}
            entries[i - 1][i] = {-1: 1}
    return LaurentMatrix.from_entries(entries)


def burau_reduced(b: BraidWord) -> LaurentMatrix:
    """The reduced Burau matrix of a braid word, letters multiplied in word
    order."""
    if b.strands < 2:
        raise ValueError("reduced Burau needs n >= 2")
    out = LaurentMatrix.identity(b.strands - 1)
    for letter in b.letters:
        out = out @ _burau_generator(b.strands, letter.index, letter.sign)
    return out


@lru_cache(maxsize=None)
def _companion(k: int) -> np.ndarray:
    """Companion matrix of 1 + t + ... + t^{k-1}, the deck action on one row."""
    K = [[0] * (k - 1) for _ in range(k - 1)]
    for l in range(k - 2):
        K[l + 1][l] = 1
    for l in range(k - 1):
        K[l][k - 2] = -1
    return _int_matrix(K)


def burau_at_companion(b: BraidWord, k: int) -> np.ndarray:
    """Reduced Burau with the companion matrix of 1 + t + ... + t^{k-1}
    substituted blockwise for t: an (n-1)(k-1) integer matrix modelling the
    H_1 action on the k-fold cover."""
    if k < 2:
        raise ValueError("companion specialization needs k >= 2")
    return burau_reduced(b).at_matrix(_companion(k))


# --- sign convention search and the Burau base change ----------------------------


_RELATION_PAIRS = {
    # braid relation instances and far commutations checked in the battery
    3: [([1, 2, 1], [2, 1, 2])],
    4: [([1, 2, 1], [2, 1, 2]), ([2, 3, 2], [3, 2, 3]), ([1, 3], [3, 1])],
}

_BATTERY = [(3, 2), (2, 3), (3, 3), (4, 2), (4, 3)]


def _candidate_ok(signs: tuple[int, int, int], n: int, k: int) -> bool:
    J = _form_from_signs(n, k, signs)
    D = deck_matrix(n, k)
    if not np.array_equal(D.T @ J @ D, J):
        return False
    gens = {}
    for i in range(1, n):
        rep = _identity((n - 1) * (k - 1))
        for l in range(1, k):
            rep = rep @ transvection(_class_vec(i, l, n, k), J)
        gens[i] = rep
        if not np.array_equal(rep @ D, D @ rep):
            return False
    for left, right in _RELATION_PAIRS.get(n, []):
        lm = _word_rep(left, gens)
        rm = _word_rep(right, gens)
        if not np.array_equal(lm, rm):
            return False
    if (n, k) in ((3, 2), (4, 2)):
        chain = [1, 2] * 6 if n == 3 else [1, 2, 3] * 4
        if not np.array_equal(_word_rep(chain, gens), _identity((n - 1) * (k - 1))):
            return False
    return _find_base_change(n, k, gens) is not None


def _class_vec(i: int, l: int, n: int, k: int) -> np.ndarray:
    vec = [0] * ((n - 1) * (k - 1))
    vec[_basis_index(i, l, k)] = 1
    return np.array(vec, dtype=object)


def _word_rep(indices: list[int], gens: dict[int, np.ndarray]) -> np.ndarray:
    out = None
    for i in indices:
        out = gens[i] if out is None else out @ gens[i]
    return out


def _find_base_change(
    n: int, k: int, gens: dict[int, np.ndarray]
) -> np.ndarray | None:
    """A unimodular V with H_i·V = V·B_i for all generator images H_i and
    Burau-at-companion images B_i, or None."""
    from .words import word

    d = (n - 1) * (k - 1)
    rows: list[list[Fraction]] = []
    for i in range(1, n):
        H = gens[i]
        B = burau_at_companion(word(n, [i]), k)
        # vec(V) stacked by columns: (I ⊗ H - B^T ⊗ I) vec(V) = 0
        block = np.kron(_identity(d), H) - np.kron(B.T, _identity(d))
        rows.extend([Fraction(int(v)) for v in row] for row in block)
    basis = _nullspace(rows, d * d)
    if not basis:
        return None
    candidates = []
    for vec in basis:
        denom = 1
        for v in vec:
            denom = denom * v.denominator // gcd(denom, v.denominator)
        ints = [int(v * denom) for v in vec]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g:
            ints = [v // g for v in ints]
        candidates.append(ints)

    def to_matrix(vec_ints):
        V = [[0] * d for _ in range(d)]
        for idx, v in enumerate(vec_ints):
            V[idx % d][idx // d] = v  # column-stacked
        return _int_matrix(V)

    if len(candidates) == 1:
        V = to_matrix(candidates[0])
        return V if abs(_det(V)) == 1 else None
    for coeffs in itertools.product(range(-2, 3), repeat=len(candidates)):
        if all(c == 0 for c in coeffs):
            continue
        vec = [
            sum(c * cand[idx] for c, cand in zip(coeffs, candidates))
            for idx in range(d * d)
        ]
        V = to_matrix(vec)
        if abs(_det(V)) == 1:
            return V
    return None


@lru_cache(maxsize=None)
def _sign_convention() -> tuple[int, int, int]:
    """
    The orientation convention for the basis curves, fixed once per process
    by filtering the eight candidates through the battery.  Several
    candidates pass (they differ by reorienting curves and reflecting the
    surface, which no identity here can see); the lexicographically smallest
    is chosen, deterministically.
    """
    survivors = []
    for same_row in (1, -1):
        for cross_row in (1, -1):
            for diag_side in (-1, 1):
                signs = (same_row, cross_row, diag_side)
                if all(_candidate_ok(signs, n, k) for n, k in _BATTERY):
                    survivors.append(signs)
    if not survivors:
        raise AssertionError(
            "internal error: no intersection-sign convention passes the "
            "relation and Burau cross-checks"
        )
    return sorted(survivors)[0]


@lru_cache(maxsize=None)
def intersection_form(n: int, k: int) -> np.ndarray:
    """The antisymmetric intersection pairing of the basis curve classes,
    under the convention selected by the build-time self-test."""
    cover_data(n, k)
    return _form_from_signs(n, k, _sign_convention())


@lru_cache(maxsize=None)
def base_change(n: int, k: int) -> np.ndarray:
    """The unimodular V with homology_rep(lift(b))·V = V·burau_at_companion(b)
    for every braid b on n strands."""
    cover_data(n, k)
    J = intersection_form(n, k)
    gens = {}
    for i in range(1, n):
        rep = _identity((n - 1) * (k - 1))
        for l in range(1, k):
            rep = rep @ transvection(_class_vec(i, l, n, k), J)
        gens[i] = rep
    V = _find_base_change(n, k, gens)
    if V is None:
        raise AssertionError(
            f"internal error: no unimodular Burau base change for (n, k) = ({n}, {k})"
        )
    return V


# --- JSON -----------------------------------------------------------------------


def matrix_to_json(mat: np.ndarray, n: int, k: int) -> dict:
    return {
        "n": n,
        "k": k,
        "dim": int(mat.shape[0]),
        "rows": [[int(v) for v in row] for row in mat],
    }


def matrix_from_json(data: dict) -> np.ndarray:
    mat = _int_matrix(data["rows"])
    if mat.shape[0] != data["dim"]:
        raise ValueError("matrix dimension mismatch")
    return mat
