"""Independent dense reference implementations used only by the tests.

Nothing here imports the package's exterior algebra or elimination code:
signs come from counting inversions, ranks from sympy.
"""

from itertools import combinations

import sympy


def sym(s):
    return sympy.Rational(s.re.numerator, s.re.denominator) + sympy.I * sympy.Rational(s.im.numerator, s.im.denominator)


def _parity(seq):
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return -1 if inv % 2 else 1


def generator_images(spec, twisted=True):
    """Map k -> list of ((i, j), coeff) with i != j, unsorted pairs allowed."""
    images = {k: [] for k in range(spec.n)}
    for i, j, k, c in spec.structure_constants:
        images[k].append(((i, j), sym(c)))
    if twisted:
        for k, g in enumerate(spec.generators):
            for j, c in g.logderiv:
                images[k].append(((j, k), sym(c)))
    return images


def differential(spec, I, twisted=True):
    """D(x_I) as dict sorted-tuple -> sympy coefficient."""
    images = generator_images(spec, twisted)
    out = {}
    for pos, k in enumerate(I):
        for (a, b), c in images[k]:
            seq = list(I[:pos]) + [a, b] + list(I[pos + 1:])
            if len(set(seq)) != len(seq):
                continue
            key = tuple(sorted(seq))
            out[key] = out.get(key, 0) + (-1) ** pos * _parity(seq) * c
    return {k: v for k, v in out.items() if sympy.simplify(v) != 0}


def weight_sum(spec, I):
    r = spec.weight_group.rank
    return tuple(sum(spec.generators[i].weight[t] for i in I) for t in range(r))


def dense_betti(spec, vector=None, twisted=True):
    """Cohomology dims of the model (restricted to multi-indices summing to ``vector``)."""
    n = spec.n
    keep = (lambda I: True) if vector is None else (lambda I: weight_sum(spec, I) == tuple(vector))
    bases = [[I for I in combinations(range(n), p) if keep(I)] for p in range(n + 1)]
    ranks = []
    for p in range(n + 1):
        src = bases[p]
        tgt = bases[p + 1] if p < n else []
        if not src or not tgt:
            ranks.append(0)
            continue
        index = {I: r for r, I in enumerate(tgt)}
        M = sympy.zeros(len(tgt), len(src))
        for col, I in enumerate(src):
            for J, v in differential(spec, I, twisted).items():
                M[index[J], col] = v
        ranks.append(M.rank())
    return tuple(len(bases[p]) - ranks[p] - (ranks[p - 1] if p else 0) for p in range(n + 1))


def subset_profile(weights, target):
    """Number of multi-indices of each size whose weights sum to ``target``."""
    n = len(weights)
    return tuple(sum(1 for I in combinations(range(n), p) if sum(weights[i] for i in I) == target) for p in range(n + 1))


def _wedge_monomials(I, J):
    seq = list(I) + list(J)
    if len(set(seq)) != len(seq):
        return None, 0
    return tuple(sorted(seq)), _parity(seq)


def _dense_d(spec, p, twisted=True):
    n = spec.n
    src = list(combinations(range(n), p))
    tgt = list(combinations(range(n), p + 1))
    index = {I: r for r, I in enumerate(tgt)}
    M = sympy.zeros(len(tgt), len(src))
    for col, I in enumerate(src):
        for J, v in differential(spec, I, twisted).items():
            M[index[J], col] = v
    return src, tgt, M


def dense_lefschetz_rank(spec, omega, i):
    """Rank of [omega]^(m-i) : H^i -> H^(2m-i) of the untwisted-class model, by dense elimination."""
    n = spec.n
    m = n // 2
    # omega^(m-i) as dict tuple -> coeff
    om = {_indices(mask): sym(c) for mask, c in omega.items()}
    power = {(): 1}
    for _ in range(m - i):
        nxt = {}
        for I, a in power.items():
            for J, b in om.items():
                K, s = _wedge_monomials(I, J)
                if K is not None:
                    nxt[K] = nxt.get(K, 0) + s * a * b
        power = nxt
    src, _, Di = _dense_d(spec, i)
    cycles = Di.nullspace() if Di.rows else [sympy.eye(len(src))[:, c] for c in range(len(src))]
    k = 2 * m - i
    tgt_basis = list(combinations(range(n), k))
    tindex = {I: r for r, I in enumerate(tgt_basis)}
    cols = []
    if k > 0:
        _, _, Dk = _dense_d(spec, k - 1)
        cols = [Dk[:, c] for c in range(Dk.cols)]
    base = sympy.Matrix.hstack(*cols).rank() if cols else 0
    images = []
    for z in cycles:
        v = sympy.zeros(len(tgt_basis), 1)
        for r, I in enumerate(src):
            if z[r] == 0:
                continue
            for J, b in power.items():
                K, s = _wedge_monomials(J, I)
                if K is not None:
                    v[tindex[K]] += s * b * z[r]
        images.append(v)
    allcols = cols + images
    return (sympy.Matrix.hstack(*allcols).rank() if allcols else 0) - base


def _indices(mask):
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)
