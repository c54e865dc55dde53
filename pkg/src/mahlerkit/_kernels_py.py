"""Pure-Python modular elimination kernels; reference for the compiled module."""


def rank_mod(rows, ncols, prime):
    """Rank of an integer matrix modulo ``prime``."""
    a = [[v % prime for v in row[:ncols]] for row in rows]
    nrows = len(a)
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        prow = a[rank]
        inv = pow(prow[col], -1, prime)
        prow = [(v * inv) % prime for v in prow]
        a[rank] = prow
        tail = prow[col:]
        for r in range(rank + 1, nrows):
            row = a[r]
            f = row[col]
            if f:
                row[col:] = [(u - f * v) % prime for u, v in zip(row[col:], tail)]
        rank += 1
    return rank
