#!/usr/bin/env python3
"""Write the bundled b-files under data/oeis.

The values come from the integer recurrences below, written independently of
the C++ generators. They are not downloads; each file says so in its header.
"""

import argparse
import pathlib

SEQUENCES = {
    # anum: (description, first two terms, recurrence x_{k} = c1 x_{k-1} + c2 x_{k-2})
    "A000045": ("Fibonacci numbers", (0, 1), (1, 1)),
    "A000032": ("Lucas numbers", (2, 1), (1, 1)),
    "A000129": ("Pell numbers", (0, 1), (2, 1)),
    "A001045": ("Jacobsthal numbers", (0, 1), (1, 2)),
    "A002450": ("(4^n - 1)/3", (0, 1), (5, -4)),
    "A014551": ("Jacobsthal-Lucas numbers", (2, 1), (1, 2)),
}

CLOSED_FORMS = {
    "A002450": lambda n: (4**n - 1) // 3,
    "A014551": lambda n: 2**n + (-1) ** n,
    "A001045": lambda n: (2**n - (-1) ** n) // 3,
}


def terms(seed, coeffs, count):
    out = list(seed)
    while len(out) < count:
        out.append(coeffs[0] * out[-1] + coeffs[1] * out[-2])
    return out[:count]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "oeis"))
    parser.add_argument("--count", type=int, default=201)
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for anum, (desc, seed, coeffs) in SEQUENCES.items():
        values = terms(seed, coeffs, args.count)
        if anum in CLOSED_FORMS:
            assert values == [CLOSED_FORMS[anum](n) for n in range(args.count)], anum
        lines = [f"# {anum} {desc}", "# generated offline from the defining recurrence, offset 0"]
        lines += [f"{n} {v}" for n, v in enumerate(values)]
        (out / f"b{anum[1:]}.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
