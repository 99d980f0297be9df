#!/usr/bin/env python3
"""Solve a sparse-SDPA problem with CVXOPT and write a CSDP-style solution.

The input problem is
    (P)  min  c' x   s.t.  S(x) = sum_i x_i A_i - A_0 >= 0  (blockwise psd)
and the output reports, per block, the slack S (matrix 1) and the dual
matrix Y maximizing tr(A_0 Y) s.t. tr(A_i Y) = c_i, Y >= 0 (matrix 2).

Output format:
    line 1: the m values of x
    then:   <matno 1|2> <block> <i> <j> <value>   (upper triangle, 1-based)

Usage: solve_sdpa.py problem.sdpa solution.txt
"""

import sys

from cvxopt import matrix, solvers, spmatrix


def parse_sdpa(path):
    tokens = []
    with open(path) as fh:
        for line in fh:
            if line.startswith(('*', '"')):
                continue
            tokens.extend(line.replace(',', ' ').replace('{', ' ').replace('}', ' ')
                          .replace('(', ' ').replace(')', ' ').split())
    pos = 0

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    m = int(take())
    nblocks = int(take())
    sizes = [int(take()) for _ in range(nblocks)]
    rhs = [float(take()) for _ in range(m)]
    entries = []
    while pos + 4 < len(tokens) + 1 and pos < len(tokens):
        if pos + 5 > len(tokens):
            raise ValueError('truncated entry list')
        matno = int(take())
        blk = int(take())
        i = int(take())
        j = int(take())
        val = float(take())
        entries.append((matno, blk, i, j, val))
    return m, sizes, rhs, entries


def main():
    if len(sys.argv) != 3:
        sys.exit('usage: solve_sdpa.py problem.sdpa solution.txt')
    m, sizes, rhs, entries = parse_sdpa(sys.argv[1])

    lin_blocks = [(b, -s) for b, s in enumerate(sizes) if s < 0]
    psd_blocks = [(b, s) for b, s in enumerate(sizes) if s > 0]
    lin_offset = {}
    nl = 0
    for b, s in lin_blocks:
        lin_offset[b] = nl
        nl += s
    psd_index = {b: k for k, (b, s) in enumerate(psd_blocks)}

    # cvxopt conelp: min c'x s.t. G x + s = h, s in (R+^nl x PSD blocks)
    c = matrix(rhs)
    gi, gj, gv = [], [], []
    hrows = nl + sum(s * s for _, s in psd_blocks)
    h = matrix(0.0, (hrows, 1))
    psd_row0 = {}
    row = nl
    for b, s in psd_blocks:
        psd_row0[b] = row
        row += s * s

    def gpos(blk, i, j):
        s = sizes[blk]
        if s < 0:
            if i != j:
                raise ValueError('off-diagonal entry in diagonal block')
            return lin_offset[blk] + i - 1
        return psd_row0[blk] + (j - 1) * s + (i - 1)

    for matno, blk, i, j, val in entries:
        blk -= 1
        if blk < 0 or blk >= len(sizes):
            raise ValueError('block index out of range')
        if matno == 0:
            h[gpos(blk, i, j)] = -val
            if sizes[blk] > 0 and i != j:
                h[gpos(blk, j, i)] = -val
        else:
            gi.append(gpos(blk, i, j))
            gj.append(matno - 1)
            gv.append(-val)
            if sizes[blk] > 0 and i != j:
                gi.append(gpos(blk, j, i))
                gj.append(matno - 1)
                gv.append(-val)
    g = spmatrix(gv, gi, gj, (hrows, m))

    dims = {'l': nl, 'q': [], 's': [s for _, s in psd_blocks]}
    solvers.options['show_progress'] = False
    solvers.options['maxiters'] = 200
    solvers.options['abstol'] = 1e-9
    solvers.options['reltol'] = 1e-9
    solvers.options['feastol'] = 1e-9
    sol = solvers.conelp(c, g, h, dims)
    if sol['x'] is None:
        sys.exit('solver failed: ' + sol['status'])

    x = sol['x']
    s = sol['s']
    z = sol['z']
    with open(sys.argv[2], 'w') as out:
        out.write('* cvxopt conelp status: %s\n' % sol['status'])
        out.write(' '.join('%.18e' % x[i] for i in range(m)) + '\n')

        def dump(matno, vec):
            for b, size in lin_blocks:
                for d in range(size):
                    out.write('%d %d %d %d %.18e\n' % (matno, b + 1, d + 1, d + 1,
                                                       vec[lin_offset[b] + d]))
            for b, size in psd_blocks:
                base = psd_row0[b]
                for i in range(size):
                    for j in range(i, size):
                        out.write('%d %d %d %d %.18e\n' % (matno, b + 1, i + 1, j + 1,
                                                           vec[base + j * size + i]))

        dump(1, s)
        dump(2, z)


if __name__ == '__main__':
    main()
