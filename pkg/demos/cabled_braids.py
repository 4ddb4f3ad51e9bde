"""
Cabled braids: tube orbits, regular forms, and certificate cabling.

A reducible braid is described by a tubular braid (one strand per tube), a
width per tube, and interior braids.  The composite word cables every
tubular crossing into a block transposition; in regular form all interior
braiding of an orbit sits in the tube closing the orbit.  When tubular and
interior braids carry quasipositivity certificates, so does the composite.
"""

from braidforge import (
    Band,
    QPCertificate,
    RegularForm,
    TubePositionAssignment,
    assemble,
    assemble_assignment,
    block_transposition,
    cable_certificate,
    conjugate,
    expand,
    format_word,
    identity_word,
    is_equal,
    normalize_interiors,
    orbit_structure,
    parse_word,
    verify,
    word,
)

print("== tube orbits ==")
tubular = parse_word("1 2", 3)
print(f"tubular '1 2' in B_3 has orbits {orbit_structure(tubular)}")

print()
print("== block transpositions ==")
for p, q in [(1, 1), (1, 2), (2, 2)]:
    print(f"  widths ({p},{q}): {format_word(block_transposition(p, q))}")

print()
print("== the worked example: widths (2,2), interior σ1^-2 ==")
rf = RegularForm(word(2, [1]), (2, 2), (parse_word("-1 -1", 2),))
composite = assemble(rf)
print("assembled word:", format_word(composite))
print("equals '2 1 3 2 -1 -1':", is_equal(composite, parse_word("2 1 3 2 -1 -1", 4)))
print("equals the band pair '2 3 -2 1 2 -1':", is_equal(composite, parse_word("2 3 -2 1 2 -1", 4)))

print()
print("== normalizing interiors into regular form ==")
assignment = TubePositionAssignment((2, 2), (word(2, [1]), word(2, [1])))
regular, conjugator = normalize_interiors(word(2, [1]), assignment)
print("per-tube interiors σ1, σ1 concentrate to:", format_word(regular.interiors[0]))
general = assemble_assignment(word(2, [1]), assignment)
print(
    "conjugation identity u g u^-1 = regular:",
    is_equal(conjugate(conjugator, general), assemble(regular)),
)

print()
print("== cabling certificates ==")
tubular_cert = QPCertificate(2, (Band(identity_word(2), 1),))
interior_cert = QPCertificate(2, (Band(identity_word(2), 1),) * 2)
cabled = cable_certificate(tubular_cert, [interior_cert], (2, 2))
rf2 = RegularForm(word(2, [1]), (2, 2), (word(2, [1, 1]),))
print(f"tubular band + interior σ1² cable to {len(cabled)} bands")
print("cabled certificate verifies against the assembly:", verify(cabled, assemble(rf2)))
print("expansion:", format_word(expand(cabled)))
