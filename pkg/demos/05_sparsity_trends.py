"""Nonzero indicators become rare as the degree grows.

For a fixed dimension t, the fraction of dimension-t modules with
nonzero indicator shrinks along n = m*t.  The report pairs each
computed ratio with the analytic bound data that drives the limit:
the square-roots-of-1 count stays under 2^(omega+2), omega grows like
log m / log log m, and phi(m) grows at least like sqrt(m/2).

The rows printed here are exactly what the CLI's `count --quantity
ratios` emits as plot-ready data.
"""

from bismash import ratio_report

for t in (1, 2, 3):
    rows = ratio_report(t, range(2, 201))
    print(f"dimension t = {t}:")
    shown = {2, 3, 5, 10, 20, 50, 100, 200}
    for row in rows:
        if row["m"] not in shown:
            continue
        print(
            f"  m={row['m']:>3} (n={row['n']:>3}): nonzero share "
            f"{float(row['ratio_nonzero']):.5f}   involution share "
            f"{float(row['t_over_m']):.2e}   roots-of-1 {row['e_size']:>2} "
            f"<= bound {row['e_bound']:>3}"
        )
    first, last = rows[0], rows[-1]
    drop = float(first["ratio_nonzero"]) / max(float(last["ratio_nonzero"]), 1e-300)
    print(f"  ratio falls {drop:,.0f}x from m={first['m']} to m={last['m']}")
    print()
