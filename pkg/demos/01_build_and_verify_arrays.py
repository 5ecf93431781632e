"""Build orthogonal arrays from finite fields and Hadamard matrices,
then verify their combinatorial guarantees.

An orthogonal array OA(r, N, d, k) is an r x N grid over d symbols in
which every k-column slice contains each of the d**k symbol tuples
equally often (lambda = r / d**k times).  Run with:

    python3 demos/01_build_and_verify_arrays.py
"""

from kuniform import (
    bush_extended_oa,
    bush_oa,
    hadamard,
    hadamard_to_oa,
    is_irredundant,
    is_tight,
    max_strength,
    oa_index,
    rao_oa,
    remove_columns,
    verify_strength,
    write_oa_file,
)


def show(title, array):
    print(f"== {title} ==")
    print(write_oa_file(array), end="")
    k = max_strength(array)
    print(f"max strength {k}, index {oa_index(array, k)}, "
          f"tight: {is_tight(array)}, "
          f"irredundant at {k}: {bool(is_irredundant(array, k))}")
    print()


def main():
    # Polynomial evaluation over GF(d) gives index-unity arrays with d+1
    # columns: row (a, b) holds b, a+b, a+2b, ... plus the coefficient a.
    show("qutrit array from GF(3) polynomials", bush_oa(3, 2))

    # The same idea at strength 3 over GF(4), extended by one extra
    # column (possible exactly when d is a power of two).
    ext = bush_extended_oa(4)
    print(f"extended GF(4) array: OA({ext.runs},{ext.factors},"
          f"{ext.levels},{ext.strength}), "
          f"verified: {verify_strength(ext, 3)}, "
          f"irredundant: {bool(is_irredundant(ext, 3))}")
    print()

    # Linear-form evaluation gives strength-2 arrays with many columns.
    show("strength-2 array over GF(2)^3", rao_oa(2, 3))

    # A normalized Hadamard matrix of order kappa yields OA(kappa,
    # kappa-1, 2, 2) by dropping the all-ones column and mapping -1 -> 0.
    h = hadamard(12)
    arr = hadamard_to_oa(h)
    print(f"order-12 Hadamard matrix -> OA({arr.runs},{arr.factors},"
          f"{arr.levels},2); strength 2 verified: {verify_strength(arr, 2)}")

    # Column removal keeps the strength guarantee (min(k, remaining)).
    trimmed = remove_columns(arr, [8, 9, 10])
    print(f"first 8 columns: OA({trimmed.runs},{trimmed.factors},"
          f"{trimmed.levels},2), irredundant at 2: "
          f"{bool(is_irredundant(trimmed, 2))}")


if __name__ == "__main__":
    main()
