"""Independent reference computations used to freeze expected values.

Nothing here imports the library's homology code: faces are rebuilt from
the raw facet lists and ranks are taken over prime fields with a plain
column reduction.  The large prime stands in for the rationals.

Run ``python3 tests/oracle.py`` to regenerate ``tests/data/derived.json``.
"""

import itertools
import json
import sys
from pathlib import Path

BIG_PRIME = 2_147_483_647
DATA = Path(__file__).with_name("data") / "derived.json"


def faces_of(facets, ordered):
    dim = len(facets[0]) - 1
    levels = [set() for _ in range(dim + 1)]
    for f in facets:
        base = tuple(f) if ordered else tuple(sorted(f))
        for k in range(dim + 1):
            levels[k].update(itertools.combinations(base, k + 1))
    return [sorted(s) for s in levels]


def boundary_columns(levels, k):
    idx = {f: i for i, f in enumerate(levels[k - 1])}
    return [{idx[f[:i] + f[i + 1:]]: (-1) ** i for i in range(k + 1)} for f in levels[k]]


def rank_mod_p(cols, p):
    pivots = {}
    rank = 0
    for col in cols:
        c = {r: v % p for r, v in col.items() if v % p}
        while c:
            low = max(c)
            if low not in pivots:
                inv = pow(c[low], p - 2, p)
                pivots[low] = {r: v * inv % p for r, v in c.items()}
                rank += 1
                break
            other = pivots[low]
            factor = c[low]
            for r, v in other.items():
                nv = (c.get(r, 0) - factor * v) % p
                if nv:
                    c[r] = nv
                else:
                    c.pop(r, None)
    return rank


def betti_mod_p(levels, p):
    dim = len(levels) - 1
    ranks = [0] + [rank_mod_p(boundary_columns(levels, k), p) for k in range(1, dim + 1)] + [0]
    return [len(levels[k]) - ranks[k] - ranks[k + 1] for k in range(dim + 1)]


def is_ordered(facets):
    return len({frozenset(f) for f in facets}) != len(facets)


def describe(facets, ordered=None):
    if ordered is None:
        ordered = is_ordered(facets)
    levels = faces_of(facets, ordered)
    fv = [len(level) for level in levels]
    return {
        "f_vector": fv,
        "chi": sum((-1) ** k * n for k, n in enumerate(fv)),
        "betti_q": betti_mod_p(levels, BIG_PRIME),
        "betti_2": betti_mod_p(levels, 2),
        "betti_3": betti_mod_p(levels, 3),
    }


def sort_sign(seq):
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def det_int(m):
    # Laplace expansion; fine for the 3x3 torus matrices
    n = len(m)
    if n == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * det_int([row[:j] + row[j + 1:] for row in m[1:]]) for j in range(n))


def freeze():
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
    from scissors.fixtures import FIXTURE_NAMES, fixture

    out = {"fixtures": {}}
    for name in FIXTURE_NAMES:
        t = fixture(name)
        out["fixtures"][name] = describe(t.facets, t.ordered)
        out["fixtures"][name]["n_facets"] = len(t.facets)
        out["fixtures"][name]["kappa"] = (sum(out["fixtures"][name]["betti_q"][i] for i in range(0, t.dim, 2)) % 2
                                           if t.dim % 2 else None)
    DATA.parent.mkdir(exist_ok=True)
    DATA.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")
    return out


if __name__ == "__main__":
    data = freeze()
    for name, d in data["fixtures"].items():
        print(name, d["f_vector"], d["betti_q"], d["betti_2"], d["kappa"])
