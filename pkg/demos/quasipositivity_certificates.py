"""
Quasipositivity: certificates, verification, and obstructions.

A braid is quasipositive when it factors into bands w σ_i w^{-1}.  A
certificate is such a factorization; it can be expanded, verified exactly,
conjugated bandwise, and normalized to σ_1-only form.  Since no general
decision procedure is known, the obstruction rules return QP with a verified
certificate, NOT_QP with a reason, or an honest UNKNOWN.
"""

from braidforge import (
    Band,
    QPCertificate,
    certificate_to_json,
    conjugate_certificate,
    expand,
    exponent_sum,
    format_word,
    identity_word,
    normalize_band_to_sigma1,
    obstruct,
    parse_word,
    verify,
    word,
)

print("== the band pair in B_4 ==")
cert = QPCertificate(4, (Band(word(4, [2]), 3), Band(word(4, [1]), 2)))
expanded = expand(cert)
print("certificate:", certificate_to_json(cert))
print("expansion:  ", format_word(expanded))
print("verifies against '2 1 3 2 -1 -1':", verify(cert, parse_word("2 1 3 2 -1 -1", 4)))
print("band count = exponent sum:", len(cert), "=", exponent_sum(expanded))

print()
print("== conjugating a certificate ==")
u = parse_word("-2 1", 4)
conj = conjugate_certificate(cert, u)
from braidforge import conjugate

print("conjugated certificate verifies:", verify(conj, conjugate(u, expanded)))

print()
print("== normalizing bands to σ1 ==")
band = Band(identity_word(4), 3)
normalized = normalize_band_to_sigma1(band)
print(f"σ_3 as a σ1-band: conjugator '{format_word(normalized.conjugator)}', generator {normalized.gen_index}")

print()
print("== obstruction rules ==")
examples = [
    ("(1 2)^6 1^-13", 3, "negative exponent sum"),
    ("1 -2", 3, "exponent sum zero, not the identity"),
    ("1 2 -2 -1", 3, "a wordy identity"),
    ("2 1 -2", 3, "a single band"),
    ("1 2 1 2", 3, "a positive word"),
    ("2 1 3 2 -1 -1", 4, "the quasipositive band pair: rules cannot settle it"),
]
for text, n, comment in examples:
    verdict = obstruct(parse_word(text, n))
    line = f"  '{text}' in B_{n}: {verdict.status.value}"
    if verdict.reason:
        line += f" ({verdict.reason.value})"
    if verdict.certificate is not None:
        line += f" with {len(verdict.certificate)} band(s)"
    print(line + f"   <- {comment}")
