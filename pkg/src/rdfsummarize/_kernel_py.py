"""Pure-Python scoring kernel; mirrors the compiled extension exactly.

One call scores candidate pairs [lo, hi) for a single iteration: each
pair reads only the frozen previous score vector, so calls on disjoint
ranges may run concurrently and the result is independent of scheduling.
"""

from __future__ import annotations

NEG = float("-inf")

BACKEND = "python"


def _exact_total(prev, cell_ref, cell_const, base, rows, cols):
    """Best total over one-to-one matchings covering the smaller side.

    Bitmask DP over subsets of the smaller side, O(big * 2**small * small).
    """
    if cols <= rows:
        nbig, nsmall, bstride, sstride = rows, cols, cols, 1
    else:
        nbig, nsmall, bstride, sstride = cols, rows, 1, cols

    if nsmall == 1:
        best = NEG
        for bi in range(nbig):
            k = base + bi * bstride
            ref = cell_ref[k]
            val = prev[ref] if ref >= 0 else cell_const[k]
            if val > best:
                best = val
        return best

    full = 1 << nsmall
    dp0 = [NEG] * full
    dp0[0] = 0.0
    dp1 = [NEG] * full
    for bi in range(nbig):
        krow = base + bi * bstride
        for mask in range(full):
            best = dp0[mask]
            m = mask
            while m:
                low = m & (-m)
                si = low.bit_length() - 1
                m ^= low
                k = krow + si * sstride
                ref = cell_ref[k]
                val = prev[ref] if ref >= 0 else cell_const[k]
                cand = dp0[mask ^ low] + val
                if cand > best:
                    best = cand
            dp1[mask] = best
        dp0, dp1 = dp1, dp0
    return dp0[full - 1]


def _greedy_total(prev, cell_ref, cell_const, base, rows, cols):
    """Repeated argmax over free rows/columns; first cell wins ties in
    row-major order. Equivalent to sorting cells by descending score and
    keeping non-conflicting ones."""
    picks = rows if rows < cols else cols
    used_r = bytearray(rows)
    used_c = bytearray(cols)
    total = 0.0
    for _ in range(picks):
        best = -1.0
        bi = -1
        bj = -1
        for i in range(rows):
            if used_r[i]:
                continue
            krow = base + i * cols
            for j in range(cols):
                if used_c[j]:
                    continue
                k = krow + j
                ref = cell_ref[k]
                val = prev[ref] if ref >= 0 else cell_const[k]
                if val > best:
                    best = val
                    bi = i
                    bj = j
        used_r[bi] = 1
        used_c[bj] = 1
        total += best
    return total


def score_pairs(prev, out, factor, group_start, group_weight, group_rows,
                group_cols, cell_start, cell_ref, cell_const,
                beta, exact_limit, lo, hi):
    prev_l = prev.tolist()
    factor_l = factor.tolist()
    group_start_l = group_start.tolist()
    group_weight_l = group_weight.tolist()
    group_rows_l = group_rows.tolist()
    group_cols_l = group_cols.tolist()
    cell_start_l = cell_start.tolist()
    cell_ref_l = cell_ref.tolist()
    cell_const_l = cell_const.tolist()

    one_minus_beta = 1.0 - beta
    for i in range(lo, hi):
        acc = 0.0
        for gi in range(group_start_l[i], group_start_l[i + 1]):
            rows = group_rows_l[gi]
            cols = group_cols_l[gi]
            base = cell_start_l[gi]
            small = rows if rows < cols else cols
            if small <= exact_limit:
                total = _exact_total(prev_l, cell_ref_l, cell_const_l,
                                     base, rows, cols)
            else:
                total = _greedy_total(prev_l, cell_ref_l, cell_const_l,
                                      base, rows, cols)
            acc += group_weight_l[gi] * (total / (rows + cols - small))
        out[i] = one_minus_beta * factor_l[i] * acc + beta
