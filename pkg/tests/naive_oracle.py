"""Intentionally naive re-implementations used as independent oracles.

Nothing here shares code or strategy with the package: tables are generated
in full with no pruning, lambda admissibility is decided by scanning every
candidate table, and isomorphism classes come from explicit orbit scans.
Only usable for tiny carriers, which is the point.
"""

import itertools


def naive_is_associative(t, n):
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if t[t[a][b]][c] != t[a][t[b][c]]:
                    return False
    return True


def naive_semigroups(n):
    """Full scan of all n^(n^2) tables."""
    out = []
    for cells in itertools.product(range(n), repeat=n * n):
        t = tuple(cells[i * n : (i + 1) * n] for i in range(n))
        if naive_is_associative(t, n):
            out.append(t)
    return out


def naive_left_cancellative(t, n):
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if b != c and t[a][b] == t[a][c]:
                    return False
    return True


def naive_is_group(t, n):
    if not naive_is_associative(t, n):
        return False, None
    for e in range(n):
        if all(t[e][a] == a and t[a][e] == a for a in range(n)):
            inv = []
            for a in range(n):
                cand = [b for b in range(n) if t[a][b] == e and t[b][a] == e]
                if not cand:
                    return False, None
                inv.append(cand[0])
            return True, inv
    return False, None


def naive_has_idempotent(t, n):
    return any(t[a][a] == a for a in range(n))


def naive_valid_lambdas(dia, circ, n):
    """Every lambda table satisfying the law, found by scanning all n^(n^2)
    candidates (not by candidate sets)."""
    valid = []
    for cells in itertools.product(range(n), repeat=n * n):
        lam = tuple(cells[i * n : (i + 1) * n] for i in range(n))
        if all(
            circ[a][dia[b][c]] == dia[circ[a][b]][lam[a][c]]
            for a in range(n)
            for b in range(n)
            for c in range(n)
        ):
            valid.append(lam)
    return valid


def naive_yb_map(dia, circ, cinv, e, n):
    """The corollary map, written out directly from its formula."""
    pairs = []
    for a in range(n):
        for b in range(n):
            w = dia[circ[circ[e][cinv[a]]][e]][b]
            pairs.append((circ[circ[a][cinv[e]]][w], circ[circ[e][cinv[w]]][b]))
    return pairs


def naive_braid_holds(pairs, n):
    def r(a, b):
        return pairs[a * n + b]

    for a in range(n):
        for b in range(n):
            for c in range(n):
                x1, y1 = r(a, b)
                x2, y2 = r(y1, c)
                x3, y3 = r(x1, x2)
                lhs = (x3, y3, y2)
                p1, q1 = r(b, c)
                p2, q2 = r(a, p1)
                p3, q3 = r(q2, q1)
                rhs = (p2, p3, q3)
                if lhs != rhs:
                    return False
    return True


def naive_census(n):
    """Labeled census counts recomputed from scratch."""
    sgs = naive_semigroups(n)
    counts = {
        "total_tables": n ** (n * n),
        "associative": len(sgs),
        "left_cancellative_semigroups": sum(
            1 for t in sgs if naive_left_cancellative(t, n)
        ),
        "inverse_semigroups": 0,
        "groups": sum(1 for t in sgs if naive_is_group(t, n)[0]),
        "semitruss_pairs": 0,
        "lambda_unique_pairs": 0,
        "group_circ_convertible": 0,
        "ybe_pass": 0,
    }
    for t in sgs:
        unique_inverses = True
        for a in range(n):
            cands = [
                x
                for x in range(n)
                if t[t[a][x]][a] == a and t[t[x][a]][x] == x
            ]
            if len(cands) != 1:
                unique_inverses = False
                break
        if unique_inverses:
            counts["inverse_semigroups"] += 1
    for dia in sgs:
        for circ in sgs:
            lams = naive_valid_lambdas(dia, circ, n)
            if not lams:
                continue
            counts["semitruss_pairs"] += 1
            if len(lams) == 1:
                counts["lambda_unique_pairs"] += 1
            group, cinv = naive_is_group(circ, n)
            if group and naive_left_cancellative(dia, n) and naive_has_idempotent(dia, n):
                counts["group_circ_convertible"] += 1
                idem = [e for e in range(n) if dia[e][e] == e]
                if all(
                    naive_braid_holds(naive_yb_map(dia, circ, cinv, e, n), n)
                    for e in idem
                ):
                    counts["ybe_pass"] += 1
    return counts


def naive_iso_classes(tables, n):
    """Distinct relabeling orbits by explicit scan over all permutations."""
    reps = set()
    for t in tables:
        orbit = []
        for perm in itertools.permutations(range(n)):
            inv = [perm.index(i) for i in range(n)]
            relab = tuple(
                tuple(perm[t[inv[a]][inv[b]]] for b in range(n)) for a in range(n)
            )
            orbit.append(relab)
        reps.add(min(orbit))
    return len(reps)


def naive_magma_classes(n):
    """Orbit count over ALL tables; only sensible for n <= 2."""
    all_tables = [
        tuple(cells[i * n : (i + 1) * n] for i in range(n))
        for cells in itertools.product(range(n), repeat=n * n)
    ]
    return naive_iso_classes(all_tables, n)
