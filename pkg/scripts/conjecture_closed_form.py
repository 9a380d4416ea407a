#!/usr/bin/env python3
"""Print the det(I - M) values of the twisted two-row module on the
(n-2)-cycle-times-transposition class for odd n, next to 2^(k-1)(2k-1), and
time each row.  Defaults to 5..13; pass odd n values to go further (n = 17
takes a few seconds; memory grows with the standard-basis size n(n-3)/2).

Usage: python scripts/conjecture_closed_form.py [n ...]
"""

import sys
import time

from eigenone.audit import conjecture_table


def main() -> int:
    ns = [int(x) for x in sys.argv[1:]] or [5, 7, 9, 11, 13]
    print(f"{'n':>4} {'dim':>6} {'det(I-M)':>14} {'2^(k-1)(2k-1)':>14} {'ok':>4} {'secs':>7}")
    ok = True
    for n in ns:
        t0 = time.time()
        row = conjecture_table([n])[0]
        ok = ok and row["matches"]
        print(
            f"{n:>4} {row['dim']:>6} {row['det_one_minus']:>14} "
            f"{row['closed_form']:>14} {str(row['matches']):>4} {time.time()-t0:>7.2f}"
        )
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
