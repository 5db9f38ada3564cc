"""Bounded-budget Maker-Breaker domination search.

State is ``(U, A, turn)``: U the vertices still to be dominated, A the
unclaimed vertices, ``turn`` 1 when Dominator moves and 0 for Staller.
``cnb`` holds closed neighbourhoods as masks. The memo maps a state to
``(lo + 1) | hi << 8`` where ``lo`` is the largest budget known to lose and
``hi`` the smallest budget known to win.

All functions here compile under numba and also run unchanged as Python.
The search uses an explicit stack so that numba can cache it on disk.
"""

from ._jit import njit

NO_BUDGET = 255


@njit(cache=True)
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def staller_has_won(cnb, U, A):
    for v in range(len(cnb)):
        if (U >> v) & 1 and cnb[v] & A == 0:
            return True
    return False


@njit(cache=True)
def collect_moves(cnb, U, A, turn, ordered, moves, base, keys):
    """Write the moves worth trying into ``moves[base:]``, best first.

    Vertices that can no longer dominate anything in U are interchangeable,
    so only the first of them is kept.
    """
    n = len(cnb)
    m = 0
    idle_seen = False
    for a in range(n):
        if not (A >> a) & 1:
            continue
        reach = cnb[a] & U
        if reach == 0:
            if idle_seen:
                continue
            idle_seen = True
        key = 0
        if ordered:
            if turn == 1:
                key = popcount(reach)
            else:
                threat = 0
                for v in range(n):
                    if (reach >> v) & 1 and popcount(cnb[v] & A) <= 2:
                        threat += 1
                key = threat * 128 + popcount(reach)
        j = m
        while j > 0 and keys[j - 1] < key:
            keys[j] = keys[j - 1]
            moves[base + j] = moves[base + j - 1]
            j -= 1
        keys[j] = key
        moves[base + j] = a
        m += 1
    return m


@njit(cache=True)
def dominator_wins(cnb, U0, A0, turn0, budget0, memo, ordered):
    """True iff Dominator can dominate U0 using at most ``budget0`` more moves."""
    n = len(cnb)
    depth = n + 2
    sU = [0] * depth
    sA = [0] * depth
    sT = [0] * depth
    sB = [0] * depth
    sM = [0] * depth
    sI = [0] * depth
    sLo = [0] * depth
    sHi = [0] * depth
    moves = [0] * (depth * (n + 1))
    keys = [0] * (n + 1)

    sp = 0
    sU[0] = U0
    sA[0] = A0
    sT[0] = turn0
    sB[0] = budget0
    descending = True
    result = False
    while True:
        if descending:
            U = sU[sp]
            A = sA[sp]
            T = sT[sp]
            b = sB[sp]
            decided = True
            if U == 0:
                result = True
            elif b <= 0:
                result = False
            elif staller_has_won(cnb, U, A):
                result = False
            elif T == 1 and b == 1:
                result = False
                for a in range(n):
                    if (A >> a) & 1 and U & ~cnb[a] == 0:
                        result = True
                        break
            else:
                decided = False
                lo = -1
                hi = NO_BUDGET
                key = (U, A, T)
                if key in memo:
                    packed = memo[key]
                    lo = (packed & 255) - 1
                    hi = packed >> 8
                    if b >= hi:
                        result = True
                        decided = True
                    elif b <= lo:
                        result = False
                        decided = True
                if not decided:
                    sLo[sp] = lo
                    sHi[sp] = hi
                    # U nonempty and Staller has not won, so A is nonempty
                    sM[sp] = collect_moves(cnb, U, A, T, ordered, moves, sp * (n + 1), keys)
                    sI[sp] = 0
                    a = moves[sp * (n + 1)]
                    sp += 1
                    if T == 1:
                        sU[sp] = U & ~cnb[a]
                        sT[sp] = 0
                        sB[sp] = b - 1
                    else:
                        sU[sp] = U
                        sT[sp] = 1
                        sB[sp] = b
                    sA[sp] = A & ~(1 << a)
                    continue
            descending = False
            continue

        # ascending with ``result`` for the frame just left
        if sp == 0:
            return result
        sp -= 1
        T = sT[sp]
        finished = result if T == 1 else not result
        if not finished:
            sI[sp] += 1
            finished = sI[sp] == sM[sp]
        if finished:
            b = sB[sp]
            lo = sLo[sp]
            hi = sHi[sp]
            if result:
                hi = min(hi, b)
            else:
                lo = max(lo, b)
            memo[(sU[sp], sA[sp], T)] = (lo + 1) | (hi << 8)
            continue
        U = sU[sp]
        A = sA[sp]
        b = sB[sp]
        a = moves[sp * (n + 1) + sI[sp]]
        sp += 1
        if T == 1:
            sU[sp] = U & ~cnb[a]
            sT[sp] = 0
            sB[sp] = b - 1
        else:
            sU[sp] = U
            sT[sp] = 1
            sB[sp] = b
        sA[sp] = A & ~(1 << a)
        descending = True
