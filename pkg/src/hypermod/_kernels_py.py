"""Pure-Python implementations of the hot kernels.

Same signatures as the compiled module `_kernels_cy`; `hypermod.kernels`
picks whichever imports.  Everything here is exact integer arithmetic.
"""

from __future__ import annotations

BACKEND = "python"


def _pack(vals, width):
    chunks = bytearray(len(vals) * width)
    for i, v in enumerate(vals):
        if v:
            chunks[i * width : (i + 1) * width] = v.to_bytes(width, "little")
    return int.from_bytes(bytes(chunks), "little")


def _digits(n, width, count):
    raw = n.to_bytes(max(count * width, (n.bit_length() + 7) // 8 or 1), "little")
    return [
        int.from_bytes(raw[k * width : (k + 1) * width], "little")
        for k in range(count)
    ]


def conv_int(a, b, n_out):
    """Truncated convolution of integer sequences.

    Returns c with c[k] = sum a[i]*b[k-i] for k < n_out.  Uses Kronecker
    substitution (packing into big integers, split by sign) so CPython's
    subquadratic multiplication does the work.
    """
    if n_out <= 0:
        return []
    if not a or not b:
        return [0] * n_out
    ma = max(max(a), -min(a), 1)
    mb = max(max(b), -min(b), 1)
    bits = (ma * mb * min(len(a), len(b))).bit_length() + 1
    width = (bits + 7) // 8
    ap = _pack([v if v > 0 else 0 for v in a], width)
    an = _pack([-v if v < 0 else 0 for v in a], width)
    bp = _pack([v if v > 0 else 0 for v in b], width)
    bn = _pack([-v if v < 0 else 0 for v in b], width)
    count = min(n_out, len(a) + len(b) - 1)
    pos = _digits(ap * bp + an * bn, width, count)
    neg = _digits(ap * bn + an * bp, width, count)
    out = [x - y for x, y in zip(pos, neg)]
    out.extend([0] * (n_out - len(out)))
    return out


def psum_passes(p, m_root, base, wtabs):
    """Character-sum convolution passes over F_p, all lambda at once.

    `base` is a flat table of p rows by m_root columns: row x holds the
    group-algebra coordinates (exponents of zeta_M) of the current value at
    lambda = x.  Each weight table w in `wtabs` maps x to the zeta-exponent
    of R(x)*RQ(1-x), or -1 when that factor vanishes.  One pass sends
    V(lam) to sum_x w(x) * V(lam*x mod p).
    """
    cur = list(base)
    for w in wtabs:
        nxt = [0] * (p * m_root)
        for x in range(p):
            e = w[x]
            if e < 0:
                continue
            # lam*x for lam = 0..p-1
            lx = 0
            for lam in range(p):
                row = lx * m_root
                orow = lam * m_root
                for j in range(m_root):
                    v = cur[row + j]
                    if v:
                        nxt[orow + (j + e) % m_root] += v
                lx += x
                if lx >= p:
                    lx -= p
        cur = nxt
    return cur


def gamma_stream(p, e, args):
    """Morita Gamma_p at each residue in sorted `args`, mod p**e.

    Streams m = 1..max(args) applying the shift law, so the cost is one
    multiplication per m regardless of how many queries land.  args must be
    ascending, each in [0, p**e).
    """
    pe = p**e
    out = [0] * len(args)
    i = 0
    n = len(args)
    while i < n and args[i] == 0:
        out[i] = 1  # Gamma_p(0) = 1 by the shift law at 0
        i += 1
    val = pe - 1  # Gamma_p(1) = -1
    m = 1
    while i < n:
        target = args[i]
        while m < target:
            val = val * (pe - m if m % p else pe - 1) % pe
            m += 1
        while i < n and args[i] == m:
            out[i] = val
            i += 1
    return out


def hyp_trunc_sum(p, e, kmax, anum, aden, bnum, bden, lam, want_weighted):
    """Truncated hypergeometric sum mod p**e with p-valuation tracking.

    Returns (S, T) where S = sum_{k<kmax} t_k lam^k and, if requested,
    T = sum k * t_k lam^k (the derivative-weighted sum), both mod p**e,
    with t_k = prod (a_i)_k / prod (b_i)_k.  Each Pochhammer factor is
    split into p-unit and p-power parts so only units are inverted.
    Raises ValueError if any retained term has negative valuation.
    """
    pe = p**e
    n_up = len(anum)
    n_dn = len(bnum)
    inv_aden = [pow(d % pe, -1, pe) for d in aden]
    inv_bden = [d % pe for d in bden]
    s_acc = 0
    t_acc = 0
    unit = 1
    val = 0
    lam %= pe
    lpow = 1
    term = unit  # k = 0 term
    s_acc = term
    for k in range(1, kmax):
        j = k - 1
        for i in range(n_up):
            v = anum[i] + j * aden[i]
            while v % p == 0:
                v //= p
                val += 1
            unit = unit * (v % pe) % pe * inv_aden[i] % pe
        for i in range(n_dn):
            v = bnum[i] + j * bden[i]
            while v % p == 0:
                v //= p
                val -= 1
            unit = unit * pow(v % pe, -1, pe) % pe * inv_bden[i] % pe
        if val < 0:
            raise ValueError("negative p-adic valuation in truncated sum")
        lpow = lpow * lam % pe
        if val < e:
            t = unit * lpow % pe
            if val:
                t = t * p**val % pe
            s_acc = (s_acc + t) % pe
            if want_weighted:
                t_acc = (t_acc + k * t) % pe
    return s_acc % pe, t_acc % pe


def legendre_count(p, z):
    """Projective point count of y^2 = x(1-x)(1-z*x) over F_p (brute force)."""
    sq = [0] * p
    for y in range(p):
        sq[y * y % p] += 1
    z %= p
    total = 1  # point at infinity
    for x in range(p):
        rhs = x * (1 - x) % p * (1 - z * x) % p
        total += sq[rhs]
    return total
