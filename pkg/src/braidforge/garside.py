"""
garside: canonical forms and decision procedures in the braid group B_n.

Every element of B_n has a unique left normal form Δ^p x_1 ... x_ℓ where Δ is
the positive half twist, each factor x_i is a permutation braid (a positive
braid in which every pair of strands crosses at most once, recorded by its
permutation), no factor is trivial or Δ, and each consecutive pair is
left-weighted: every generator that can start x_{i+1} must finish x_i.  The
normal form is computed by local pair rewriting and solves the word problem;
inf = p and sup = p + ℓ are the usual Garside invariants.

Conjugacy is decided by reducing both elements into their super summit sets
(iterated cycling and decycling) and closing one set under conjugation by
permutation braids, which is complete by the convexity theorem for super
summit sets.  The search carries an explicit node budget; exhausting it raises
BudgetExceededError rather than guessing.

Desk scale only: these routines are written for n up to about 6 or 7 and
canonical lengths in the tens.  Reducible-braid structure (see `cabling`) is
always caller-supplied, never detected here.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .words import (
    BraidWord,
    Permutation,
    conjugate,
    exponent_sum,
    invert_word,
    power,
    underlying_permutation,
    word,
)

__all__ = [
    "NormalForm",
    "PeriodicRoot",
    "PeriodicRootKind",
    "ConjugacyResult",
    "BudgetExceededError",
    "half_twist",
    "delta_root_word",
    "gamma_root_word",
    "normal_form",
    "nf_to_word",
    "nf_mul",
    "nf_inv",
    "nf_to_json",
    "nf_from_json",
    "is_equal",
    "inf_sup",
    "is_positive_braid",
    "is_periodic",
    "periodic_root",
    "is_conjugate",
    "power",
]

DEFAULT_BUDGET = 2000


class BudgetExceededError(RuntimeError):
    """Conjugacy search ran out of its node budget: the answer is unknown,
    which is distinct from 'not conjugate'."""

    def __init__(self, nodes: int):
        super().__init__(f"conjugacy search budget exhausted after {nodes} nodes")
        self.nodes = nodes


# --- permutation-tuple helpers (hot path works on raw 1-based image tuples) --


def _t_identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def _t_w0(n: int) -> tuple[int, ...]:
    return tuple(range(n, 0, -1))


def _t_inv(p: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


def _t_then(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(q[v - 1] for v in p)


def _t_tau(p: tuple[int, ...]) -> tuple[int, ...]:
    """Conjugation by Δ: τ(x) = Δ^{-1} x Δ, an involution on permutations."""
    n = len(p)
    return tuple(n + 1 - p[n - i] for i in range(1, n + 1))


def _t_starting(p: tuple[int, ...]) -> tuple[int, ...]:
    """Generators that can start the permutation braid of p."""
    return tuple(i for i in range(1, len(p)) if p[i - 1] > p[i])


def _t_append(p: tuple[int, ...], i: int) -> tuple[int, ...]:
    """p followed by the transposition (i, i+1): swap the values i, i+1."""
    return tuple(i + 1 if v == i else (i if v == i + 1 else v) for v in p)


def _t_strip_front(p: tuple[int, ...], i: int) -> tuple[int, ...]:
    """q with p = (i, i+1)·q: swap the entries at positions i, i+1."""
    out = list(p)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


_renorm_cache: dict[tuple[tuple[int, ...], tuple[int, ...]], tuple] = {}


def _renorm(a: tuple[int, ...], b: tuple[int, ...]):
    """
    Rewrite the pair of permutation braids (a, b) into its left-weighted form
    by moving initial letters of b onto the end of a while possible.  The
    result is independent of the move order.
    """
    key = (a, b)
    cached = _renorm_cache.get(key)
    if cached is not None:
        return cached
    a0, b0 = a, b
    a_inv = _t_inv(a)
    while True:
        moved = False
        for i in _t_starting(b):
            if a_inv[i - 1] < a_inv[i]:  # i does not finish a: transfer is legal
                a = _t_append(a, i)
                a_inv = _t_strip_front(a_inv, i)
                b = _t_strip_front(b, i)
                moved = True
                break
        if not moved:
            break
    _renorm_cache[key] = (a, b)
    _renorm_cache[(a0, b0)] = (a, b)
    return a, b


def _normalize_factor_list(n: int, factors: list[tuple[int, ...]]) -> tuple[int, list]:
    """
    Left-normalize a sequence of permutation braids.  Returns (d, factors)
    with the product equal to Δ^d times the left-weighted factors, no factor
    trivial or Δ.
    """
    ident = _t_identity(n)
    w0 = _t_w0(n)
    factors = [f for f in factors if f != ident]
    while True:
        changed = False
        i = 0
        while i < len(factors) - 1:
            a, b = factors[i], factors[i + 1]
            a2, b2 = _renorm(a, b)
            if a2 == a and b2 == b:
                i += 1
                continue
            changed = True
            factors[i] = a2
            if b2 == ident:
                del factors[i + 1]
            else:
                factors[i + 1] = b2
            i = max(i - 1, 0)
        if not changed:
            break
    delta = 0
    while factors and factors[0] == w0:
        delta += 1
        factors.pop(0)
    return delta, factors


# --- normal form -------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class NormalForm:
    """
    The left normal form Δ^delta_power · factors of an element of B_n.  Two
    words represent the same element iff their NormalForms are equal, so this
    is the canonical representative used by every decision procedure here.
    """

    strands: int
    delta_power: int
    factors: tuple[Permutation, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def inf(self) -> int:
        return self.delta_power

    @property
    def sup(self) -> int:
        return self.delta_power + len(self.factors)

    def is_delta_power(self) -> bool:
        return not self.factors

    def is_central(self) -> bool:
        """Powers of Δ² are central; for n ≥ 3 nothing else is."""
        return not self.factors and self.delta_power % 2 == 0

    def __repr__(self):
        facs = ", ".join(str(list(f.images)) for f in self.factors)
        return f"NormalForm(n={self.strands}, delta={self.delta_power}, [{facs}])"


def normal_form(w: BraidWord) -> NormalForm:
    """Compute the left normal form of a word; canonical for group equality."""
    n = w.strands
    if n == 1 or not w.letters:
        return NormalForm(n, 0, ())
    w0 = _t_w0(n)
    ident = _t_identity(n)
    factors: list[tuple[int, ...]] = []
    shifts: list[int] = []
    for letter in w.letters:
        s = _t_append(ident, letter.index)
        if letter.sign > 0:
            factors.append(s)
            shifts.append(0)
        else:
            # σ_i^{-1} = Δ^{-1} · (Δ σ_i^{-1}), a permutation braid
            factors.append(_t_then(w0, s))
            shifts.append(-1)
    # Collect the Δ's at the front; each factor is conjugated by the Δ-power
    # that passes through it from the right.
    delta = 0
    for j in range(len(factors) - 1, -1, -1):
        if delta % 2:
            factors[j] = _t_tau(factors[j])
        delta += shifts[j]
    extra, factors = _normalize_factor_list(n, factors)
    return NormalForm(n, delta + extra, tuple(Permutation(f) for f in factors))


def _permutation_braid_word(n: int, p: tuple[int, ...]) -> list[int]:
    """A reduced positive word for the permutation braid of p."""
    out = []
    while True:
        starting = _t_starting(p)
        if not starting:
            return out
        i = starting[0]
        out.append(i)
        p = _t_strip_front(p, i)


@lru_cache(maxsize=None)
def half_twist(n: int) -> BraidWord:
    """The positive half twist Δ_n, as the word (σ_1..σ_{n-1})(σ_1..σ_{n-2})...(σ_1).
    Its permutation is i ↦ n+1-i and it has n(n-1)/2 letters."""
    if n < 2:
        raise ValueError(f"half twist needs n >= 2, got {n}")
    letters = []
    for j in range(n - 1, 0, -1):
        letters.extend(range(1, j + 1))
    return word(n, letters)


@lru_cache(maxsize=None)
def delta_root_word(n: int) -> BraidWord:
    """δ = σ_1 σ_2 ... σ_{n-1}, the periodic element with δ^n = Δ²."""
    if n < 2:
        raise ValueError(f"needs n >= 2, got {n}")
    return word(n, range(1, n))


@lru_cache(maxsize=None)
def gamma_root_word(n: int) -> BraidWord:
    """γ = σ_1² σ_2 ... σ_{n-1}, the periodic element with γ^{n-1} = Δ²."""
    if n < 2:
        raise ValueError(f"needs n >= 2, got {n}")
    return word(n, [1] + list(range(1, n)))


def nf_to_word(nf: NormalForm) -> BraidWord:
    """A word representing nf; normal_form(nf_to_word(nf)) == nf."""
    n = nf.strands
    letters: list[int] = []
    if nf.delta_power != 0:
        delta = half_twist(n)
        block = delta.signed_ints() if nf.delta_power > 0 else invert_word(delta).signed_ints()
        letters.extend(block * abs(nf.delta_power))
    for factor in nf.factors:
        letters.extend(_permutation_braid_word(n, factor.images))
    return word(n, letters)


def nf_to_json(nf: NormalForm) -> dict:
    return {
        "n": nf.strands,
        "delta": nf.delta_power,
        "factors": [list(f.images) for f in nf.factors],
    }


def nf_from_json(data: dict) -> NormalForm:
    return NormalForm(
        data["n"],
        data["delta"],
        tuple(Permutation(tuple(images)) for images in data["factors"]),
    )


# --- normal-form group operations (used by the conjugacy search) -------------


def nf_mul(x: NormalForm, y: NormalForm) -> NormalForm:
    """Product of two elements given in normal form."""
    if x.strands != y.strands:
        raise ValueError("strand counts differ")
    n = x.strands
    xf = [f.images for f in x.factors]
    if y.delta_power % 2:
        xf = [_t_tau(f) for f in xf]
    extra, factors = _normalize_factor_list(n, xf + [f.images for f in y.factors])
    return NormalForm(
        n, x.delta_power + y.delta_power + extra, tuple(Permutation(f) for f in factors)
    )


def nf_inv(x: NormalForm) -> NormalForm:
    """Inverse of an element given in normal form."""
    n = x.strands
    w0 = _t_w0(n)
    ell = len(x.factors)
    factors = []
    for j, factor in enumerate(reversed(x.factors)):
        # x_i^{-1} = (right complement ∂x_i) Δ^{-1}; collecting the Δ's at the
        # front twists each complement by the Δ-power to its right.
        comp = _t_then(_t_inv(factor.images), w0)
        m = (ell - j) + x.delta_power  # |Σ of collected negative powers|
        factors.append(_t_tau(comp) if m % 2 else comp)
    extra, factors = _normalize_factor_list(n, factors)
    return NormalForm(
        n, -(x.delta_power + ell) + extra, tuple(Permutation(f) for f in factors)
    )


def _nf_identity(n: int) -> NormalForm:
    return NormalForm(n, 0, ())


def _nf_of_perm(n: int, p: tuple[int, ...]) -> NormalForm:
    if p == _t_identity(n):
        return NormalForm(n, 0, ())
    if p == _t_w0(n):
        return NormalForm(n, 1, ())
    return NormalForm(n, 0, (Permutation(p),))


# --- decisions ----------------------------------------------------------------


def is_equal(a: BraidWord, b: BraidWord) -> bool:
    """Whether two words represent the same element of B_n."""
    if a.strands != b.strands:
        raise ValueError(f"strand counts differ: {a.strands} vs {b.strands}")
    return normal_form(a) == normal_form(b)


def inf_sup(w: BraidWord) -> tuple[int, int]:
    """The Garside infimum and supremum (delta_power, delta_power + length)."""
    nf = normal_form(w)
    return nf.inf, nf.sup


def is_positive_braid(w: BraidWord) -> bool:
    """Whether w lies in the positive monoid; equivalent to inf(w) >= 0."""
    return normal_form(w).inf >= 0


def is_periodic(w: BraidWord) -> bool:
    """
    Whether some positive power of w is central.  Since every periodic braid
    is conjugate to a power of δ or of γ, and δ^n = γ^{n-1} = Δ², it suffices
    to test whether w^n or w^{n-1} is a power of Δ².
    """
    n = w.strands
    if n < 2:
        raise ValueError("periodicity needs n >= 2")
    for exponent in (n, n - 1):
        if normal_form(power(w, exponent)).is_central():
            return True
    return False


class PeriodicRootKind(Enum):
    DELTA = "delta"
    GAMMA = "gamma"


@dataclass(frozen=True, slots=True)
class PeriodicRoot:
    """A periodic conjugacy-class representative δ^power or γ^power in B_n."""

    strands: int
    kind: PeriodicRootKind
    power: int

    def to_word(self) -> BraidWord:
        base = (
            delta_root_word(self.strands)
            if self.kind is PeriodicRootKind.DELTA
            else gamma_root_word(self.strands)
        )
        return power(base, self.power)


def periodic_root(
    w: BraidWord, d: int, budget: int = DEFAULT_BUDGET
) -> PeriodicRoot | None:
    """
    A d-th root of the periodic braid w, up to conjugacy: the representative
    c = δ^i or γ^i with c^d conjugate to w, if one exists.  The exponent-sum
    constraint Ab(c)·d = Ab(w) leaves at most two candidates to test.
    """
    if d < 1:
        raise ValueError(f"root degree must be >= 1, got {d}")
    if not is_periodic(w):
        raise ValueError("periodic_root requires a periodic braid")
    n = w.strands
    ab = exponent_sum(w)
    candidates = []
    for kind, base_ab in ((PeriodicRootKind.DELTA, n - 1), (PeriodicRootKind.GAMMA, n)):
        if ab % (d * base_ab) == 0:
            candidates.append(PeriodicRoot(n, kind, ab // (d * base_ab)))
    for root in candidates:
        c_power = power(root.to_word(), d)
        if is_equal(c_power, w) or is_conjugate(c_power, w, budget=budget).conjugate:
            return root
    return None


# --- conjugacy ----------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ConjugacyResult:
    """Outcome of a conjugacy decision; when conjugate, witness satisfies
    witness · a · witness^{-1} = b."""

    conjugate: bool
    witness: BraidWord | None
    nodes: int

    def __bool__(self) -> bool:
        return self.conjugate


def _nf_conjugate_by_perm(x: NormalForm, s: tuple[int, ...]) -> NormalForm:
    """s^{-1} x s for a permutation braid s."""
    n = x.strands
    s_nf = _nf_of_perm(n, s)
    return nf_mul(nf_mul(nf_inv(s_nf), x), s_nf)


def _cycle(x: NormalForm) -> tuple[NormalForm, NormalForm]:
    """One cycling step; returns (result, conjugator u) with result = u^{-1} x u."""
    n = x.strands
    iota = x.factors[0].images
    if x.delta_power % 2:
        iota = _t_tau(iota)
    factors = [f.images for f in x.factors[1:]] + [iota]
    extra, factors = _normalize_factor_list(n, factors)
    result = NormalForm(
        n, x.delta_power + extra, tuple(Permutation(f) for f in factors)
    )
    return result, _nf_of_perm(n, iota)


def _decycle(x: NormalForm) -> tuple[NormalForm, NormalForm]:
    """One decycling step; returns (result, conjugator u) with result = u^{-1} x u."""
    n = x.strands
    s_nf = _nf_of_perm(n, x.factors[-1].images)
    u = nf_inv(s_nf)
    return nf_mul(nf_mul(s_nf, x), u), u


def _reduce_to_summit(x: NormalForm) -> tuple[NormalForm, NormalForm]:
    """
    Drive x into its super summit set (maximal inf, then minimal sup) by
    alternating cycling and decycling phases.  Returns (representative, g)
    with representative = g^{-1} · x · g.
    """
    g = _nf_identity(x.strands)
    while True:
        improved = False
        # cycling raises inf
        seen: set = set()
        while x.factors:
            if x in seen:
                break
            seen.add(x)
            prev_inf = x.inf
            x, u = _cycle(x)
            g = nf_mul(g, u)
            if x.inf > prev_inf:
                improved = True
                seen.clear()
        # decycling lowers sup
        seen = set()
        while x.factors:
            if x in seen:
                break
            seen.add(x)
            prev_sup = x.sup
            x, u = _decycle(x)
            g = nf_mul(g, u)
            if x.sup < prev_sup:
                improved = True
                seen.clear()
        if not improved:
            return x, g


@lru_cache(maxsize=None)
def _nontrivial_perms(n: int) -> tuple[tuple[int, ...], ...]:
    ident = _t_identity(n)
    return tuple(
        p for p in itertools.permutations(range(1, n + 1)) if p != ident
    )


def is_conjugate(
    a: BraidWord, b: BraidWord, budget: int = DEFAULT_BUDGET
) -> ConjugacyResult:
    """
    Decide conjugacy of a and b in B_n by super-summit-set enumeration, and
    produce a witness w with w·a·w^{-1} = b when they are conjugate.  Intended
    for desk scale; raises BudgetExceededError once `budget` nodes have been
    expanded, which callers must treat as "unknown", never as "false".
    """
    if a.strands != b.strands:
        raise ValueError(f"strand counts differ: {a.strands} vs {b.strands}")
    n = a.strands
    # cheap conjugacy invariants
    if exponent_sum(a) != exponent_sum(b):
        return ConjugacyResult(False, None, 0)
    cycle_type_a = sorted(len(c) for c in underlying_permutation(a).cycles())
    cycle_type_b = sorted(len(c) for c in underlying_permutation(b).cycles())
    if cycle_type_a != cycle_type_b:
        return ConjugacyResult(False, None, 0)

    rep_a, g_a = _reduce_to_summit(normal_form(a))
    rep_b, g_b = _reduce_to_summit(normal_form(b))
    if (rep_a.inf, rep_a.sup) != (rep_b.inf, rep_b.sup):
        return ConjugacyResult(False, None, 0)

    def witness_from(g_to_common: NormalForm) -> BraidWord:
        w = nf_to_word(nf_mul(g_b, nf_inv(g_to_common)))
        if not is_equal(conjugate(w, a), b):
            raise AssertionError("internal error: conjugacy witness failed verification")
        return w

    if rep_a == rep_b:
        return ConjugacyResult(True, witness_from(g_a), 0)

    inf0, sup0 = rep_a.inf, rep_a.sup
    visited = {rep_a: g_a}
    queue = deque([rep_a])
    nodes = 0
    while queue:
        if nodes >= budget:
            raise BudgetExceededError(nodes)
        x = queue.popleft()
        g_x = visited[x]
        nodes += 1
        for s in _nontrivial_perms(n):
            y = _nf_conjugate_by_perm(x, s)
            if y.inf != inf0 or y.sup != sup0 or y in visited:
                continue
            g_y = nf_mul(g_x, _nf_of_perm(n, s))
            if y == rep_b:
                return ConjugacyResult(True, witness_from(g_y), nodes)
            visited[y] = g_y
            queue.append(y)
    return ConjugacyResult(False, None, nodes)
