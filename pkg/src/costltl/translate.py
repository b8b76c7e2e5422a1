"""Compilation of LTL<= to B-automata and nLTL<= to S-automata.

States are pseudo-states: sets of pending formulae. Epsilon reduction rules
rewrite the largest non-reduced member until only atoms and Next formulae
remain; reading a letter then strips one Next from every member. The epsilon
steps carry the counter actions; they are composed into the letter transitions
and into per-state accepting exits.
"""

from .core import INF, Alphabet
from .formula import (
    Atom,
    End,
    END,
    And,
    Or,
    Next,
    Until,
    UntilLeq,
    ReleaseGeq,
    counter_indices,
    is_ltl,
    is_nltl,
    sort_key,
)
from .automata import CostAutomaton


def is_atomic(f):
    return isinstance(f, (Atom, End))


def is_reduced_member(f):
    return is_atomic(f) or isinstance(f, Next)


def is_reduced(Y):
    return all(is_reduced_member(f) for f in Y)


def is_consistent(Y):
    return sum(1 for f in Y if is_atomic(f)) <= 1


def next_state(Z):
    """Strip one X from every Next member; atoms are consumed by the letter."""
    if not (is_reduced(Z) and is_consistent(Z)):
        raise ValueError("next is defined on reduced consistent pseudo-states")
    return frozenset(f.operand for f in Z if isinstance(f, Next))


class _Translation:
    def __init__(self, phi, alphabet, polarity):
        self.phi = phi
        self.alphabet = alphabet
        self.polarity = polarity
        kind = UntilLeq if polarity == "B" else ReleaseGeq
        self.index = counter_indices(phi, kind)
        self.k = len(self.index)
        self._closure_memo = {}
        self._end_memo = {}

    def spawn_resets(self, added):
        """Reset events for counting obligations that surface right now.

        When the same R# formula is tracked from two start positions the set
        representation merges them; the later start has the stronger
        requirement (fewer counted positions), so a freshly surfaced
        obligation resets its counter.
        """
        if self.polarity != "S":
            return ()
        return tuple((self.index[m], "r") for m in added
                     if isinstance(m, ReleaseGeq))

    def reduction_branches(self, Y):
        """One reduction step applied to the maximal non-reduced member.

        Yields (new pseudo-state, events) with events a tuple of
        (counter, token) pairs.
        """
        candidates = [f for f in Y if not is_reduced_member(f)]
        psi = max(candidates, key=sort_key)
        rest = Y - {psi}

        def branch(added, *events):
            return (rest | set(added),
                    tuple(events) + self.spawn_resets(added))

        if isinstance(psi, And):
            return [branch({psi.left, psi.right})]
        if isinstance(psi, Or):
            return [branch({psi.left}), branch({psi.right})]
        if isinstance(psi, Until):
            return [
                branch({psi.left, Next(psi)}),
                branch({psi.right}),
            ]
        if isinstance(psi, UntilLeq):
            if self.polarity != "B":
                raise ValueError("U# operator in an nLTL<= translation")
            j = self.index[psi]
            return [
                branch({psi.left, Next(psi)}),
                branch({Next(psi)}, (j, "ic")),
                branch({psi.right}, (j, "r")),
            ]
        if isinstance(psi, ReleaseGeq):
            if self.polarity != "S":
                raise ValueError("R# operator in an LTL<= translation")
            j = self.index[psi]
            return [
                branch({psi.left, psi.right, Next(psi)}, (j, "i")),
                branch({psi.right, Next(psi)}),
                branch((), (j, "cr")),
            ]
        raise TypeError("unexpected member %r" % (psi,))

    def closure(self, Y):
        """All reduced endpoints reachable by epsilon reductions from Y, with
        composed events."""
        if Y in self._closure_memo:
            return self._closure_memo[Y]
        if is_reduced(Y):
            result = {(Y, ())}
        else:
            result = set()
            for Z, events in self.reduction_branches(Y):
                result.update((W, events + ev) for W, ev in self.closure(Z))
        self._closure_memo[Y] = result
        return result

    def end_branches(self, Y, fresh):
        """One resolution step of the maximal unresolved member at the end of
        the word, where only End holds and there is no next position.

        fresh marks members that only surfaced during this end resolution;
        an R# obligation starting at the very end has no later position to
        constrain and is vacuously discharged.
        """
        candidates = [f for f in Y if not isinstance(f, End)]
        psi = max(candidates, key=sort_key)
        rest = Y - {psi}

        def branch(added, *events):
            added = set(added)
            now_fresh = (fresh | {m for m in added if m not in rest}) & (rest | added)
            return (rest | added, frozenset(now_fresh), tuple(events))

        if isinstance(psi, (Atom, Next)):
            return []
        if isinstance(psi, And):
            return [branch({psi.left, psi.right})]
        if isinstance(psi, Or):
            return [branch({psi.left}), branch({psi.right})]
        if isinstance(psi, Until):
            return [branch({psi.right})]
        if isinstance(psi, UntilLeq):
            return [branch({psi.right}, (self.index[psi], "r"))]
        if isinstance(psi, ReleaseGeq):
            if psi in fresh:
                # started at the end of the word: no position left to refute
                return [branch(())]
            # discharged by its target holding at the end, or by checking
            # that enough occurrences of its left operand were counted
            return [branch({psi.right}), branch((), (self.index[psi], "cr"))]
        raise TypeError("unexpected member %r" % (psi,))

    def end_closure(self, Y, fresh=frozenset()):
        """Event sequences discharging every pending obligation at the end of
        the word; empty set when Y is not satisfiable there."""
        key = (Y, fresh)
        if key in self._end_memo:
            return self._end_memo[key]
        if all(isinstance(f, End) for f in Y):
            result = frozenset({()})
        else:
            finals = set()
            for Z, new_fresh, events in self.end_branches(Y, fresh):
                finals.update(events + ev
                              for ev in self.end_closure(Z, new_fresh))
            result = frozenset(finals)
        self._end_memo[key] = result
        return result

    def events_to_actions(self, events):
        seqs = [[] for _ in range(self.k)]
        for j, token in events:
            seqs[j - 1].append(token)
        return tuple(tuple(s) for s in seqs)

    def build(self):
        start = frozenset({self.phi})
        states = {start}
        worklist = [start]
        transitions = set()
        exits = {}
        while worklist:
            Y = worklist.pop()
            final_events = self.end_closure(Y)
            if final_events:
                exits[Y] = tuple(sorted({self.events_to_actions(ev) for ev in final_events}))
            for Z, events in self.closure(Y):
                for a in self.alphabet:
                    if any(is_atomic(f) and f != Atom(a) for f in Z):
                        continue
                    target = next_state(Z)
                    if not is_consistent(target):
                        continue
                    transitions.add((Y, a, self.events_to_actions(events), target))
                    if target not in states:
                        states.add(target)
                        worklist.append(target)
        state_names = sorted(states, key=_state_key)
        return CostAutomaton(
            kind=self.polarity,
            alphabet=self.alphabet,
            states=tuple(state_names),
            initial=frozenset({start}),
            final=frozenset(exits),
            counters=self.k,
            transitions=tuple(sorted(transitions, key=_trans_key)),
            exits=exits,
            epsilon_value=self.epsilon_value(),
        )

    def epsilon_value(self):
        # on the empty word every obligation starts at the end
        start = frozenset({self.phi})
        final_events = self.end_closure(start, fresh=start)
        if self.polarity == "B":
            best = INF
            for ev in final_events:
                value = 0
                counters = [0] * self.k
                for j, token in ev:
                    if token == "ic":
                        counters[j - 1] += 1
                        value = max(value, counters[j - 1])
                    elif token == "r":
                        counters[j - 1] = 0
                best = min(best, value)
            return best
        best = 0
        for ev in final_events:
            counters = [0] * self.k
            checked = []
            for j, token in ev:
                if token == "i":
                    counters[j - 1] += 1
                elif token == "r":
                    counters[j - 1] = 0
                elif token == "cr":
                    checked.append(counters[j - 1])
                    counters[j - 1] = 0
            value = min(checked) if checked else INF
            best = max(best, value)
            if best == INF:
                break
        return best


def _state_key(Y):
    return (len(Y), sorted(map(sort_key, Y)))


def _trans_key(t):
    return (_state_key(t[0]), t[1], _state_key(t[3]), t[2])


def ltl_to_b(phi, alphabet):
    """Exact compilation: eval_b of the result equals sem_inf of phi."""
    if not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(alphabet)
    if not is_ltl(phi):
        raise ValueError("ltl_to_b expects a pure LTL<= formula")
    return _Translation(phi, alphabet, "B").build()


def nltl_to_s(phi, alphabet):
    """Compilation correct up to cost equivalence: eval_s of the result and
    sem_sup of phi are bounded on the same word families."""
    if not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(alphabet)
    if not is_nltl(phi):
        raise ValueError("nltl_to_s expects a pure nLTL<= formula")
    return _Translation(phi, alphabet, "S").build()


def accept_epsilon_value(phi, alphabet, polarity):
    if not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(alphabet)
    return _Translation(phi, alphabet, polarity).epsilon_value()
