"""The three constructions that realize extremal behaviour.

Backelin-type semigroups show four generators carry unbounded type (and
leave the nearly Gorenstein class as soon as the type reaches 4); the
six-generated family carries an arithmetic progression of
pseudo-Frobenius numbers; duplication towers double the type excess at
every level.

Run: python3 demos/families.py
"""

from numsgps import (
    NumericalSemigroup,
    backelin,
    duplication_tower,
    family_dim6,
    is_almost_symmetric,
    is_nearly_gorenstein,
)
from numsgps.construct import dim6_progression


def main():
    print("Backelin-type family: four generators, growing type")
    for T in range(2, 7):
        B = backelin(T)
        print(f"  T={T}: <{', '.join(map(str, B.generators))}>  "
              f"type {B.type}, nearly Gorenstein: {is_nearly_gorenstein(B)}")
    print()

    print("six-generated family: progression of pseudo-Frobenius numbers")
    for T, d, k in ((2, 4, 3), (3, 16, 5), (4, 16, 5)):
        S = family_dim6(T, d, k)
        prog = dim6_progression(T, d, k)
        print(f"  T={T}, d={d}, k={k}: <{', '.join(map(str, S.generators))}>")
        print(f"    progression {list(prog)} inside "
              f"pf = {list(S.pseudo_frobenius())}")
        print(f"    almost symmetric: {is_almost_symmetric(S)}, "
              f"type {S.type}")
    print()

    print("duplication tower from <3, 4, 5>: the excess "
          "type - 2 * embedding dimension maps to 2 * excess + 1 per level")
    for level, S in enumerate(duplication_tower(NumericalSemigroup((3, 4, 5)), 3)):
        print(f"  level {level}: nu={S.embedding_dimension:>2}, "
              f"type={S.type:>2}, excess={S.type - 2 * S.embedding_dimension:>3}, "
              f"almost symmetric: {is_almost_symmetric(S)}")


if __name__ == "__main__":
    main()
