"""Reference semantics: satisfaction (u,n) |= phi, inf and sup valuations.

This is the trusted oracle for the rest of the package, so it is written for
clarity: plain structural recursion with memoization over (subformula,
position) for a fixed word and budget.
"""

from .core import INF
from .formula import (
    Atom,
    End,
    And,
    Or,
    Next,
    Until,
    UntilLeq,
    ReleaseGeq,
    is_ltl,
    is_nltl,
)


def models(u, n, phi, i=0):
    """(u, n) |= phi at position i; position len(u) is the end of the word."""
    if not 0 <= i <= len(u):
        raise ValueError("position out of range")
    memo = {}

    def sat(f, i):
        key = (f, i)
        if key in memo:
            return memo[key]
        memo[key] = v = _sat(f, i)
        return v

    def _sat(f, i):
        if isinstance(f, Atom):
            return i < len(u) and u[i] == f.letter
        if isinstance(f, End):
            return i == len(u)
        if isinstance(f, And):
            return sat(f.left, i) and sat(f.right, i)
        if isinstance(f, Or):
            return sat(f.left, i) or sat(f.right, i)
        if isinstance(f, Next):
            return i < len(u) and sat(f.operand, i + 1)
        if isinstance(f, Until):
            for j in range(i, len(u) + 1):
                if sat(f.right, j):
                    return True
                if not sat(f.left, j):
                    return False
            return False
        if isinstance(f, UntilLeq):
            mistakes = 0
            for j in range(i, len(u) + 1):
                if sat(f.right, j):
                    return True
                if not sat(f.left, j):
                    mistakes += 1
                    if mistakes > n:
                        return False
            return False
        if isinstance(f, ReleaseGeq):
            confirmed = 0
            for j in range(i + 1, len(u) + 1):
                # confirmed counts positions j' in [i, j) satisfying the left side
                if sat(f.left, j - 1):
                    confirmed += 1
                if not sat(f.right, j) and confirmed < n:
                    return False
            return True
        raise TypeError("not a formula node: %r" % (f,))

    return sat(phi, i)


def sem_inf(phi, u):
    """[[phi]](u) = inf{n : (u,n) |= phi} for a pure LTL<= formula."""
    if not is_ltl(phi):
        raise ValueError("sem_inf expects a pure LTL<= formula")
    for n in range(len(u) + 1):
        if models(u, n, phi):
            return n
    return INF


def sem_sup(phi, u):
    """[[phi]](u) = sup{n : (u,n) |= phi} for a pure nLTL<= formula."""
    if not is_nltl(phi):
        raise ValueError("sem_sup expects a pure nLTL<= formula")
    if models(u, len(u) + 2, phi):
        return INF
    best = -1
    for n in range(len(u) + 2):
        if models(u, n, phi):
            best = n
        else:
            break
    return max(best, 0)
