"""Backend-switched kernels for the two hot loops.

Everything here is exhaustive integer-table work: axiom validation scans all
n^3 triples, coloring enumeration backtracks over generator assignments.
Both come in two interchangeable implementations:

* ``numba``: @njit(cache=True) nested loops, the default when numba imports
* ``numpy``: vectorized equivalents with no compilation cost

Select with the environment variable ``SINGQUANDLES_BACKEND=numba|numpy``
(read once, lazily) or programmatically with :func:`set_backend`.  The two
backends produce bit-identical outputs: violations in the same deterministic
order, colorings in the same lexicographic order.

Violation rows are ``[code, a, b, c]`` with unused slots set to -1; the
``cap`` argument bounds the rows reported per axiom or identity, so a
report stays small even for wildly invalid tables.
Quandle codes: 0 idempotence (witness a), 1 right-invertibility (witness
column y and value z with preimage count != 1), 2 self-distributivity
(witness a, b, c).  Singular codes 1..5 follow the five compatibility
identities, witnesses (a, b, c) or (a, b) for the pair identities 4 and 5.

Coloring programs are postorder instruction arrays over int64 tables:
opcode 0 pushes generator ``arg``, opcodes 1..4 pop two values and apply
star, bar, R1, R2.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = [
    "active_backend",
    "available_backends",
    "set_backend",
    "quandle_violations",
    "sing_violations",
    "enumerate_colorings",
]

OP_GEN, OP_STAR, OP_BAR, OP_R1, OP_R2 = 0, 1, 2, 3, 4


# ---------------------------------------------------------------------------
# numpy backend


def _quandle_violations_np(star: np.ndarray, cap: int) -> np.ndarray:
    n = star.shape[0]
    idx = np.arange(n, dtype=np.int64)
    rows = []

    bad = np.flatnonzero(star[idx, idx] != idx)[:cap]
    for a in bad:
        rows.append((0, a, -1, -1))

    # counts[y, z] = number of x with x*y = z; every count must be exactly 1
    counts = np.zeros((n, n), dtype=np.int64)
    ys = np.tile(idx, n)
    np.add.at(counts, (ys, star.ravel()), 1)
    for y, z in np.argwhere(counts != 1)[:cap]:
        rows.append((1, y, z, -1))

    lhs = star[star, :]                        # (a,b,c) -> (a*b)*c
    rhs = star[star[:, None, :], star[None, :, :]]  # (a,b,c) -> (a*c)*(b*c)
    for a, b, c in np.argwhere(lhs != rhs)[:cap]:
        rows.append((2, a, b, c))

    return np.array(rows, dtype=np.int64).reshape(-1, 4)


def _sing_violations_np(star, bar, r1, r2, cap: int) -> np.ndarray:
    n = star.shape[0]
    idx = np.arange(n, dtype=np.int64)
    rows = []
    # star.T[c_axis view]: cb[b, c] = c*b
    cb = star.T

    # 1: R1(a/b, c)*b == R1(a, c*b)
    lhs = star[r1[bar[:, :, None], idx[None, None, :]], idx[None, :, None]]
    rhs = r1[idx[:, None, None], cb[None, :, :]]
    for a, b, c in np.argwhere(lhs != rhs)[:cap]:
        rows.append((1, a, b, c))

    # 2: R2(a/b, c) == R2(a, c*b)/b
    lhs = r2[bar[:, :, None], idx[None, None, :]]
    rhs = bar[r2[idx[:, None, None], cb[None, :, :]], idx[None, :, None]]
    for a, b, c in np.argwhere(lhs != rhs)[:cap]:
        rows.append((2, a, b, c))

    # 3: (b/R1(a,c))*a == (b*R2(a,c))/c
    lhs = star[bar[idx[None, :, None], r1[:, None, :]], idx[:, None, None]]
    rhs = bar[star[idx[None, :, None], r2[:, None, :]], idx[None, None, :]]
    for a, b, c in np.argwhere(lhs != rhs)[:cap]:
        rows.append((3, a, b, c))

    # 4: R2(a,b) == R1(b, a*b)
    rhs = r1[idx[None, :], star]
    for a, b in np.argwhere(r2 != rhs)[:cap]:
        rows.append((4, a, b, -1))

    # 5: R1(a,b)*R2(a,b) == R2(b, a*b)
    lhs = star[r1, r2]
    rhs = r2[idx[None, :], star]
    for a, b in np.argwhere(lhs != rhs)[:cap]:
        rows.append((5, a, b, -1))

    return np.array(rows, dtype=np.int64).reshape(-1, 4)


def _eval_prog_np(code, start, end, star, bar, r1, r2, assign):
    """Evaluate one program over every row of assign at once."""
    tables = (star, bar, r1, r2)
    stack = []
    for i in range(start, end):
        op = code[i, 0]
        if op == OP_GEN:
            stack.append(assign[:, code[i, 1]])
        else:
            b = stack.pop()
            a = stack.pop()
            stack.append(tables[op - 1][a, b])
    return stack[0]


def _enumerate_np(n, g, star, bar, r1, r2, code, spans, depth_ptr, rel_order, max_stack):
    # breadth-first over depths; every partial assignment block stays in
    # lexicographic order, and relations prune as soon as they are ready
    front = np.zeros((1, 0), dtype=np.int64)
    vals = np.arange(n, dtype=np.int64)
    for d in range(g):
        m = front.shape[0]
        ext = np.repeat(front, n, axis=0)
        col = np.tile(vals, m)
        front = np.concatenate([ext, col[:, None]], axis=1)
        if front.shape[0] == 0:
            return np.zeros((0, g), dtype=np.int64)
        keep = np.ones(front.shape[0], dtype=bool)
        for k in range(depth_ptr[d], depth_ptr[d + 1]):
            r = rel_order[k]
            lv = _eval_prog_np(code, spans[r, 0], spans[r, 1], star, bar, r1, r2, front)
            rv = _eval_prog_np(code, spans[r, 2], spans[r, 3], star, bar, r1, r2, front)
            keep &= lv == rv
        front = front[keep]
    return front


_BACKENDS: dict[str, dict] = {
    "numpy": {
        "quandle": _quandle_violations_np,
        "sing": _sing_violations_np,
        "enum": _enumerate_np,
    }
}


# ---------------------------------------------------------------------------
# numba backend

try:
    from numba import njit

    @njit(cache=True)
    def _quandle_violations_nb(star, cap):  # pragma: no cover - exercised via dispatch
        n = star.shape[0]
        out = np.empty((3 * cap, 4), dtype=np.int64)
        k = 0
        seen = 0
        for a in range(n):
            if star[a, a] != a and seen < cap:
                out[k, 0] = 0
                out[k, 1] = a
                out[k, 2] = -1
                out[k, 3] = -1
                k += 1
                seen += 1
        seen = 0
        counts = np.zeros(star.shape[0], dtype=np.int64)
        for y in range(n):
            for z in range(n):
                counts[z] = 0
            for x in range(n):
                counts[star[x, y]] += 1
            for z in range(n):
                if counts[z] != 1 and seen < cap:
                    out[k, 0] = 1
                    out[k, 1] = y
                    out[k, 2] = z
                    out[k, 3] = -1
                    k += 1
                    seen += 1
        seen = 0
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if star[star[a, b], c] != star[star[a, c], star[b, c]] and seen < cap:
                        out[k, 0] = 2
                        out[k, 1] = a
                        out[k, 2] = b
                        out[k, 3] = c
                        k += 1
                        seen += 1
        return out[:k].copy()

    @njit(cache=True)
    def _sing_violations_nb(star, bar, r1, r2, cap):  # pragma: no cover
        n = star.shape[0]
        out = np.empty((5 * cap, 4), dtype=np.int64)
        k = 0
        for eq in range(1, 4):
            seen = 0
            for a in range(n):
                for b in range(n):
                    for c in range(n):
                        if eq == 1:
                            bad = star[r1[bar[a, b], c], b] != r1[a, star[c, b]]
                        elif eq == 2:
                            bad = r2[bar[a, b], c] != bar[r2[a, star[c, b]], b]
                        else:
                            bad = star[bar[b, r1[a, c]], a] != bar[star[b, r2[a, c]], c]
                        if bad and seen < cap:
                            out[k, 0] = eq
                            out[k, 1] = a
                            out[k, 2] = b
                            out[k, 3] = c
                            k += 1
                            seen += 1
        for eq in range(4, 6):
            seen = 0
            for a in range(n):
                for b in range(n):
                    if eq == 4:
                        bad = r2[a, b] != r1[b, star[a, b]]
                    else:
                        bad = star[r1[a, b], r2[a, b]] != r2[b, star[a, b]]
                    if bad and seen < cap:
                        out[k, 0] = eq
                        out[k, 1] = a
                        out[k, 2] = b
                        out[k, 3] = -1
                        k += 1
                        seen += 1
        return out[:k].copy()

    @njit(cache=True)
    def _eval_prog_nb(code, start, end, star, bar, r1, r2, vals, stack):  # pragma: no cover
        sp = 0
        for i in range(start, end):
            op = code[i, 0]
            if op == OP_GEN:
                stack[sp] = vals[code[i, 1]]
                sp += 1
            else:
                b = stack[sp - 1]
                a = stack[sp - 2]
                sp -= 1
                if op == OP_STAR:
                    stack[sp - 1] = star[a, b]
                elif op == OP_BAR:
                    stack[sp - 1] = bar[a, b]
                elif op == OP_R1:
                    stack[sp - 1] = r1[a, b]
                else:
                    stack[sp - 1] = r2[a, b]
        return stack[0]

    @njit(cache=True)
    def _enumerate_nb(n, g, star, bar, r1, r2, code, spans, depth_ptr, rel_order, max_stack):  # pragma: no cover
        vals = np.zeros(g, dtype=np.int64)
        stack = np.zeros(max_stack, dtype=np.int64)
        cap = 64
        out = np.empty((cap, g), dtype=np.int64)
        m = 0
        depth = 0
        vals[0] = -1
        while depth >= 0:
            vals[depth] += 1
            if vals[depth] == n:
                depth -= 1
                continue
            ok = True
            for k in range(depth_ptr[depth], depth_ptr[depth + 1]):
                r = rel_order[k]
                lv = _eval_prog_nb(code, spans[r, 0], spans[r, 1], star, bar, r1, r2, vals, stack)
                rv = _eval_prog_nb(code, spans[r, 2], spans[r, 3], star, bar, r1, r2, vals, stack)
                if lv != rv:
                    ok = False
                    break
            if not ok:
                continue
            if depth == g - 1:
                if m == cap:
                    cap *= 2
                    grown = np.empty((cap, g), dtype=np.int64)
                    grown[:m] = out[:m]
                    out = grown
                out[m] = vals
                m += 1
            else:
                depth += 1
                vals[depth] = -1
        return out[:m].copy()

    _BACKENDS["numba"] = {
        "quandle": _quandle_violations_nb,
        "sing": _sing_violations_nb,
        "enum": _enumerate_nb,
    }
except ImportError:  # numba genuinely absent: numpy path carries everything
    pass


# ---------------------------------------------------------------------------
# selection

_active: str | None = None


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def active_backend() -> str:
    """Resolve the backend: explicit set_backend() > env var > numba if present."""
    global _active
    if _active is None:
        requested = os.environ.get("SINGQUANDLES_BACKEND", "").strip().lower()
        if requested:
            if requested not in _BACKENDS:
                raise ValueError(
                    f"SINGQUANDLES_BACKEND={requested!r}; available: {available_backends()}")
            _active = requested
        else:
            _active = "numba" if "numba" in _BACKENDS else "numpy"
    return _active


def set_backend(name: str) -> None:
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; available: {available_backends()}")
    _active = name


def quandle_violations(star: np.ndarray, cap: int) -> np.ndarray:
    return _BACKENDS[active_backend()]["quandle"](star, cap)


def sing_violations(star, bar, r1, r2, cap: int) -> np.ndarray:
    return _BACKENDS[active_backend()]["sing"](star, bar, r1, r2, cap)


def enumerate_colorings(n, g, star, bar, r1, r2, code, spans, depth_ptr, rel_order, max_stack) -> np.ndarray:
    """All satisfying assignments, rows in lexicographic order, shape (m, g)."""
    return _BACKENDS[active_backend()]["enum"](
        n, g, star, bar, r1, r2, code, spans, depth_ptr, rel_order, max_stack)
