"""Two-uniform states for every party count n >= 6, plus run bounds.

Dropping columns from an order-kappa Hadamard array keeps strength 2,
and the resulting state stays certifiable while at least kappa/2 + 2
columns remain.  Picking the right kappa for each n gives a uniform
recipe for all n >= 6.  Run:

    python3 demos/05_two_uniform_families.py
"""

from kuniform import (
    DuplicateRows,
    choose_hadamard_order,
    gv_holds,
    hadamard,
    hadamard_to_oa,
    hadamard_two_uniform_state,
    rao_min_runs,
    remove_columns,
    singleton_max_k,
    state_from_oa,
    uniformity,
)


def main():
    # The certification window for kappa = 12: first-n-column states.
    kappa = 12
    full = hadamard_to_oa(hadamard(kappa))
    print(f"order-{kappa} Hadamard array, first n columns at k=2:")
    for n in range(4, kappa):
        try:
            verdict = ("pass" if uniformity(state_from_oa(
                remove_columns(full, list(range(n, kappa - 1)))), 2).certified
                else "fail")
        except DuplicateRows:
            verdict = "fail (duplicate rows)"
        marker = " <- window starts" if n == kappa // 2 + 2 else ""
        print(f"  n={n:2d}: {verdict}{marker}")
    print()

    # choose_hadamard_order picks the smallest supported kappa whose
    # window contains n; the builder composes the two steps.
    print("two-uniform states for n = 6..24:")
    for n in range(6, 25):
        st = hadamard_two_uniform_state(n)
        assert uniformity(st, 2).certified
        print(f"  n={n:2d}: order {choose_hadamard_order(n):2d}, "
              f"{st.term_count:2d} terms")
    print()

    # Run-count context: minimal runs for strength 2 on two levels, the
    # largest admissible uniformity, and a two-level existence condition.
    print("minimal runs for OA(r, n, 2, 2):",
          {n: rao_min_runs(n, 2, 2) for n in (4, 5, 8, 16)})
    print("largest admissible k for n = 4..8:",
          {n: singleton_max_k(n) for n in range(4, 9)})
    print("existence condition at k=3 first holds at n =",
          next(n for n in range(3, 20) if gv_holds(n, 3)))


if __name__ == "__main__":
    main()
