#!/usr/bin/env python3
"""Print the exact data behind the decomposition of so(3,4): the embedded
derivation algebra, its orthogonal complement, bracket spans, and the
proportionality constants between the restricted Killing forms.
"""

from fractions import Fraction

from g2cert.lie import killing_form
from g2cert.linalg import Matrix
from g2cert.reps import bracket_span
from g2cert.suite import VerificationContext


def frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def main() -> None:
    ctx = VerificationContext()
    so34 = ctx.so34
    print(f"so(3,4): dim {so34.dim}, Killing signature {killing_form(so34).signature}")
    der = ctx.derivations
    print(f"derivation algebra: dim {der.dim}, Killing signature {killing_form(der).signature}")

    v = ctx.complement
    print(f"orthogonal complement V: dim {v.dim}")
    vv = bracket_span(so34, v, v)
    print(f"[V, V]: dim {vv.dim}; contained in the image: {ctx.g2_image.contains(vv)}")

    k_so = killing_form(so34).gram
    b_img = Matrix(ctx.g2_image.basis)
    restricted = b_img * k_so * b_img.transpose()
    change = ctx.image_basis_change
    k_inner = change * killing_form(der).gram * change.transpose()
    ratio = next(
        restricted.entry(i, j) / k_inner.entry(i, j)
        for i in range(14)
        for j in range(14)
        if k_inner.entry(i, j)
    )
    print(f"Killing restriction to the image = {frac(ratio)} * inner Killing form")

    iso = ctx.complement_isomorphism
    b_v = Matrix(v.basis)
    restricted_v = b_v * k_so * b_v.transpose()
    pull = iso.matrix.transpose() * ctx.imaginary[1] * iso.matrix
    ratio_v = next(
        restricted_v.entry(i, j) / pull.entry(i, j)
        for i in range(7)
        for j in range(7)
        if pull.entry(i, j)
    )
    print(f"Killing restriction to V = {frac(ratio_v)} * pulled-back scalar product")


if __name__ == "__main__":
    main()
