"""
Braid words, the text grammar, and the word problem via normal forms.

Every element of B_n has a unique left normal form Δ^p x_1...x_ℓ, so two
words are equal in the group exactly when their normal forms coincide.  This
script walks through parsing, the half twist, equality decisions, and the
Garside invariants inf and sup.
"""

from braidforge import (
    format_word,
    half_twist,
    inf_sup,
    is_equal,
    is_positive_braid,
    nf_to_json,
    nf_to_word,
    normal_form,
    parse_word,
    power,
    underlying_permutation,
)

print("== parsing ==")
w = parse_word("(1 2)^6 1^-13", 3)
print(f"'(1 2)^6 1^-13' expands to {len(w)} letters: {format_word(w)}")

print()
print("== half twists ==")
for n in (2, 3, 4, 5):
    delta = half_twist(n)
    print(f"Δ_{n} = {format_word(delta)}   permutation {underlying_permutation(delta).images}")

print()
print("== the word problem ==")
pairs = [
    ("1 2 1", "2 1 2", 3),
    ("2 3 -2 1 2 -1", "2 1 3 2 -1 -1", 4),
    ("1", "2", 3),
]
for a_text, b_text, n in pairs:
    a, b = parse_word(a_text, n), parse_word(b_text, n)
    print(f"  '{a_text}' == '{b_text}' in B_{n}?  {is_equal(a, b)}")

print()
print("== normal forms as canonical data ==")
for text, n in [("1 2 1", 3), ("1 -1 2", 3), ("-1", 2), ("2 1 3 2 -1 -1", 4)]:
    nf = normal_form(parse_word(text, n))
    print(f"  '{text}' in B_{n}: {nf_to_json(nf)}  inf/sup {inf_sup(parse_word(text, n))}")
    round_trip = nf_to_word(nf)
    assert normal_form(round_trip) == nf

print()
print("== positivity ==")
for text, n in [("1 2 1", 3), ("1 -2", 3), ("2 1 -1 1", 3)]:
    w = parse_word(text, n)
    print(f"  '{text}' positive as an element of B_{n}?  {is_positive_braid(w)}")

print()
print("== the full twist generates the center ==")
dd = power(half_twist(4), 2)
probe = parse_word("3 -1 2 2 -3", 4)
from braidforge import concat

print("  Δ² commutes with a random word:", is_equal(concat(dd, probe), concat(probe, dd)))
