"""
Periodic braids, their roots, and conjugacy with witnesses.

A braid is periodic when a positive power is central; every periodic braid
is conjugate to a power of δ = σ1...σ_{n-1} or of γ = σ1²σ2...σ_{n-1}, and
roots of braids are unique up to conjugacy.  Roots of periodic braids with a
nonnegative exponent are positive words, hence certifiably quasipositive.
"""

from braidforge import (
    conjugate,
    delta_root_word,
    expand,
    format_word,
    gamma_root_word,
    half_twist,
    is_conjugate,
    is_equal,
    is_periodic,
    parse_word,
    periodic_root,
    power,
    qp_root_periodic,
    word,
)

print("== periodicity ==")
for text, n in [("1 2", 3), ("1 1 2", 3), ("1", 3), ("1 -2", 3)]:
    print(f"  '{text}' periodic in B_{n}?  {is_periodic(parse_word(text, n))}")

print()
print("== the defining relations of δ and γ ==")
for n in (3, 4, 5):
    dd = power(half_twist(n), 2)
    print(
        f"  B_{n}: δ^{n} = Δ²: {is_equal(power(delta_root_word(n), n), dd)},"
        f"  γ^{n-1} = Δ²: {is_equal(power(gamma_root_word(n), n - 1), dd)}"
    )

print()
print("== roots of the full twist in B_3 ==")
dd = power(half_twist(3), 2)
for d in (2, 3):
    root = periodic_root(dd, d)
    print(f"  degree {d}: {root.kind.value}^{root.power} = {format_word(root.to_word())}")
    cert = qp_root_periodic(dd, d)
    x = expand(cert)
    print(
        f"    certificate with {len(cert)} bands; expansion '{format_word(x)}'"
        f" satisfies x^{d} = Δ²: {is_equal(power(x, d), dd)}"
    )

print()
print("== conjugacy with witnesses ==")
a = parse_word("1 2 -1 2 2", 3)
u = parse_word("2 -1 1 2", 3)
b = conjugate(u, a)
res = is_conjugate(a, b)
print(f"  a = '{format_word(a)}', b = u a u^-1")
print(f"  conjugate: {res.conjugate}, nodes explored: {res.nodes}")
print(f"  witness w = '{format_word(res.witness)}'")
print("  w a w^-1 == b:", is_equal(conjugate(res.witness, a), b))

print()
print("== equal powers imply conjugacy (root uniqueness) ==")
delta = delta_root_word(4)
v = word(4, [2, -3, 1])
c = conjugate(v, delta)
print("  δ and a conjugate have equal 4th powers:", is_equal(power(delta, 4), power(c, 4)))
print("  and they are conjugate:", bool(is_conjugate(delta, c)))
