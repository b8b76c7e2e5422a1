"""Cost-automaton model, exact evaluation for both polarities, contraction.

Transitions carry one action sequence per counter (a translated automaton
composes several reduction steps into one letter transition). Accepting exits
record the trailing reduction sequences a run may take after the last letter;
hand-written automata have a single empty exit on each final state. The empty
word is valued by `epsilon_value` when set (translated automata), otherwise by
the initial/final overlap rule.
"""

from dataclasses import dataclass

from .core import INF, Alphabet
from .actions import b_seq_value, contract_max

B_TOKENS = ("e", "ic", "r")
S_TOKENS = ("e", "i", "r", "cr")


@dataclass(frozen=True)
class CostAutomaton:
    kind: str  # "B" or "S"
    alphabet: Alphabet
    states: tuple
    initial: frozenset
    final: frozenset
    counters: int
    # (src, letter, actions, dst); actions = tuple per counter of token tuple
    transitions: tuple
    # state -> tuple of exit options, each an actions tuple as above
    exits: dict = None
    epsilon_value: object = None

    def __post_init__(self):
        if self.exits is None:
            empty = tuple(() for _ in range(self.counters))
            object.__setattr__(self, "exits", {q: (empty,) for q in self.final})


def validate(aut):
    diags = []
    states = set(aut.states)
    tokens = B_TOKENS if aut.kind == "B" else S_TOKENS
    if aut.kind not in ("B", "S"):
        diags.append("unknown kind %r" % (aut.kind,))
    for q in aut.initial | aut.final:
        if q not in states:
            diags.append("undeclared state %r" % (q,))
    for src, letter, actions, dst in aut.transitions:
        if src not in states or dst not in states:
            diags.append("dangling transition %r -> %r" % (src, dst))
        if letter not in aut.alphabet:
            diags.append("letter %r outside alphabet" % (letter,))
        if len(actions) != aut.counters:
            diags.append("transition %r -%s-> %r has %d action sequences, expected %d"
                         % (src, letter, dst, len(actions), aut.counters))
        for seq in actions:
            for a in seq:
                if a not in tokens:
                    diags.append("token %r invalid for a %s-automaton" % (a, aut.kind))
    for q, options in aut.exits.items():
        if q not in aut.final:
            diags.append("exit on non-final state %r" % (q,))
        for actions in options:
            if len(actions) != aut.counters:
                diags.append("exit on %r has wrong counter arity" % (q,))
    for q in aut.final:
        if q not in aut.exits:
            diags.append("final state %r has no exit" % (q,))
    return diags


def _max_increments(aut):
    m = 0
    seqs = [seq for _, _, actions, _ in aut.transitions for seq in actions]
    for options in aut.exits.values():
        for actions in options:
            seqs.extend(actions)
    inc = "ic" if aut.kind == "B" else "i"
    for seq in seqs:
        m = max(m, sum(1 for a in seq if a == inc))
    return m


def _outgoing(aut):
    out = {}
    for t in aut.transitions:
        out.setdefault((t[0], t[1]), []).append(t)
    return out


def _has_accepting_run(aut, u):
    out = _outgoing(aut)
    reach = set(aut.initial)
    for a in u:
        reach = {t[3] for q in reach for t in out.get((q, a), ())}
        if not reach:
            return False
    return bool(reach & aut.final)


def _eval_epsilon(aut):
    if aut.epsilon_value is not None:
        return aut.epsilon_value
    accepted = bool(aut.initial & aut.final)
    if aut.kind == "B":
        return 0 if accepted else INF
    return INF if accepted else 0


def eval_b(aut, u):
    """inf over accepting runs of the max checked counter value."""
    if aut.kind != "B":
        raise ValueError("eval_b needs a B-automaton")
    aut.alphabet.check_word(u)
    if not u:
        return _eval_epsilon(aut)
    if not _has_accepting_run(aut, u):
        return INF
    bound = (len(u) + 1) * _max_increments(aut)
    for n in range(bound + 1):
        if _b_feasible(aut, u, n):
            return n
    return INF


def _b_apply(counters, actions, n):
    cs = list(counters)
    for gamma, seq in enumerate(actions):
        for a in seq:
            if a == "ic":
                cs[gamma] += 1
                if cs[gamma] > n:
                    return None
            elif a == "r":
                cs[gamma] = 0
    return tuple(cs)


def _b_feasible(aut, u, n):
    out = _outgoing(aut)
    zero = (0,) * aut.counters
    layer = {(q, zero) for q in aut.initial}
    for a in u:
        nxt = set()
        for q, cs in layer:
            for _, _, actions, dst in out.get((q, a), ()):
                cs2 = _b_apply(cs, actions, n)
                if cs2 is not None:
                    nxt.add((dst, cs2))
        layer = nxt
        if not layer:
            return False
    for q, cs in layer:
        for actions in aut.exits.get(q, ()):
            if _b_apply(cs, actions, n) is not None:
                return True
    return False


def eval_s(aut, u):
    """sup over accepting runs of the min checked counter value."""
    if aut.kind != "S":
        raise ValueError("eval_s needs an S-automaton")
    aut.alphabet.check_word(u)
    if not u:
        return _eval_epsilon(aut)
    if not _has_accepting_run(aut, u):
        return 0
    bound = (len(u) + 1) * _max_increments(aut)
    if _s_feasible(aut, u, bound + 1):
        return INF
    n = 0
    while _s_feasible(aut, u, n + 1):
        n += 1
    return n


def _s_apply(counters, actions, n):
    cs = list(counters)
    for gamma, seq in enumerate(actions):
        for a in seq:
            if a == "i":
                cs[gamma] = min(cs[gamma] + 1, n)
            elif a == "r":
                cs[gamma] = 0
            elif a == "cr":
                if cs[gamma] < n:
                    return None
                cs[gamma] = 0
    return tuple(cs)


def _s_feasible(aut, u, n):
    """Is there an accepting run in which every check sees a value >= n?"""
    out = _outgoing(aut)
    zero = (0,) * aut.counters
    layer = {(q, zero) for q in aut.initial}
    for a in u:
        nxt = set()
        for q, cs in layer:
            for _, _, actions, dst in out.get((q, a), ()):
                cs2 = _s_apply(cs, actions, n)
                if cs2 is not None:
                    nxt.add((dst, cs2))
        layer = nxt
        if not layer:
            return False
    for q, cs in layer:
        for actions in aut.exits.get(q, ()):
            if _s_apply(cs, actions, n) is not None:
                return True
    return False


def eval_s_at_least(aut, u, n):
    """True iff eval_s(aut, u) >= n (threshold check without full search)."""
    if n <= 0:
        return True
    if not u:
        return _eval_epsilon(aut) >= n
    return _s_feasible(aut, u, n)


def contract_b(aut):
    """Replace every action sequence by its maximal atomic action.

    Returns (contracted automaton, K) where K is the maximal value a single
    sequence can check starting from 0; the contracted automaton computes the
    original function up to the correction alpha(n) = 2Kn + 2K.
    """
    if aut.kind != "B":
        raise ValueError("contract_b needs a B-automaton")
    K = 0
    transitions = []
    for src, letter, actions, dst in aut.transitions:
        K = max(K, *(b_seq_value(seq)[0] for seq in actions)) if actions else K
        transitions.append((src, letter, tuple((contract_max(seq),) for seq in actions), dst))
    exits = {}
    for q, options in aut.exits.items():
        new_options = []
        for actions in options:
            if actions:
                K = max(K, *(b_seq_value(seq)[0] for seq in actions))
            new_options.append(tuple((contract_max(seq),) for seq in actions))
        exits[q] = tuple(new_options)
    return (
        CostAutomaton(
            kind="B",
            alphabet=aut.alphabet,
            states=aut.states,
            initial=aut.initial,
            final=aut.final,
            counters=aut.counters,
            transitions=tuple(transitions),
            exits=exits,
            epsilon_value=aut.epsilon_value,
        ),
        K,
    )


def trim(aut):
    """Restrict to states both reachable and co-reachable; exact for runs."""
    fwd = {q: set() for q in aut.states}
    bwd = {q: set() for q in aut.states}
    for src, _, _, dst in aut.transitions:
        fwd[src].add(dst)
        bwd[dst].add(src)

    def closure(seed, edges):
        seen = set(seed)
        stack = list(seed)
        while stack:
            for q in edges[stack.pop()]:
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        return seen

    reach = closure(aut.initial, fwd)
    co = closure(aut.final, bwd)
    keep = reach & co
    return CostAutomaton(
        kind=aut.kind,
        alphabet=aut.alphabet,
        states=tuple(q for q in aut.states if q in keep),
        initial=aut.initial & keep,
        final=aut.final & keep,
        counters=aut.counters,
        transitions=tuple(t for t in aut.transitions if t[0] in keep and t[3] in keep),
        exits={q: o for q, o in aut.exits.items() if q in keep},
        epsilon_value=aut.epsilon_value,
    )


def rename_states(aut, prefix="q"):
    """Rename states to prefix0, prefix1, ... in state order (translated
    automata have set-valued state names that do not serialize)."""
    name = {q: "%s%d" % (prefix, i) for i, q in enumerate(aut.states)}
    return CostAutomaton(
        kind=aut.kind,
        alphabet=aut.alphabet,
        states=tuple(name[q] for q in aut.states),
        initial=frozenset(name[q] for q in aut.initial),
        final=frozenset(name[q] for q in aut.final),
        counters=aut.counters,
        transitions=tuple((name[s], a, act, name[d]) for s, a, act, d in aut.transitions),
        exits={name[q]: o for q, o in aut.exits.items()},
        epsilon_value=aut.epsilon_value,
    )


# --- file format -----------------------------------------------------------

FORMAT_HEADER = "costltl-format 1"


def _fmt_actions(actions):
    if not actions:
        return ""
    return " | ".join(" ".join(seq) if seq else "-" for seq in actions)


def _parse_actions(text, counters):
    text = text.strip()
    if counters == 0:
        if text:
            raise ValueError("actions given for a counterless automaton")
        return ()
    parts = text.split("|") if text else []
    if len(parts) != counters:
        raise ValueError("expected %d action sequences, got %r" % (counters, text))
    out = []
    for p in parts:
        toks = p.split()
        out.append(() if toks == ["-"] or not toks else tuple(toks))
    return tuple(out)


def dumps_automaton(aut):
    lines = [FORMAT_HEADER, "automaton", "kind %s" % aut.kind,
             "alphabet %s" % "".join(aut.alphabet.letters),
             "states %s" % " ".join(str(q) for q in aut.states),
             "initial %s" % " ".join(str(q) for q in sorted(aut.initial, key=str)),
             "final %s" % " ".join(str(q) for q in sorted(aut.final, key=str)),
             "counters %d" % aut.counters]
    if aut.epsilon_value is not None:
        lines.append("epsilon %s" % ("inf" if aut.epsilon_value == INF else aut.epsilon_value))
    for src, letter, actions, dst in aut.transitions:
        lines.append("trans %s %s %s : %s" % (src, letter, dst, _fmt_actions(actions)))
    empty = tuple(() for _ in range(aut.counters))
    for q in aut.states:
        options = aut.exits.get(q, ())
        if options and tuple(options) != (empty,):
            for actions in options:
                lines.append("exit %s : %s" % (q, _fmt_actions(actions)))
    return "\n".join(lines) + "\n"


def loads_automaton(text):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or lines[0] != FORMAT_HEADER:
        raise ValueError("missing %r header" % FORMAT_HEADER)
    if len(lines) < 2 or lines[1] != "automaton":
        raise ValueError("not an automaton file")
    fields = {}
    transitions = []
    exit_lines = []
    for ln in lines[2:]:
        key, _, rest = ln.partition(" ")
        if key == "trans":
            transitions.append(rest)
        elif key == "exit":
            exit_lines.append(rest)
        else:
            fields[key] = rest.strip()
    for req in ("kind", "alphabet", "states", "initial", "final", "counters"):
        if req not in fields:
            raise ValueError("missing field %r" % req)
    alphabet = Alphabet(fields["alphabet"])
    states = tuple(fields["states"].split())
    counters = int(fields["counters"])
    trans = []
    for rest in transitions:
        head, _, actions = rest.partition(":")
        parts = head.split()
        if len(parts) != 3:
            raise ValueError("bad transition %r" % rest)
        src, letter, dst = parts
        trans.append((src, letter, _parse_actions(actions, counters), dst))
    final = frozenset(fields["final"].split())
    empty = tuple(() for _ in range(counters))
    exits = {q: [empty] for q in final}
    has_custom = set()
    for rest in exit_lines:
        head, _, actions = rest.partition(":")
        q = head.strip()
        if q not in final:
            raise ValueError("exit on non-final state %r" % q)
        if q not in has_custom:
            exits[q] = []
            has_custom.add(q)
        exits[q].append(_parse_actions(actions, counters))
    epsilon = None
    if "epsilon" in fields:
        epsilon = INF if fields["epsilon"] == "inf" else int(fields["epsilon"])
    aut = CostAutomaton(
        kind=fields["kind"],
        alphabet=alphabet,
        states=states,
        initial=frozenset(fields["initial"].split()),
        final=final,
        counters=counters,
        transitions=tuple(trans),
        exits={q: tuple(o) for q, o in exits.items()},
        epsilon_value=epsilon,
    )
    diags = validate(aut)
    if diags:
        raise ValueError("invalid automaton: " + "; ".join(diags))
    return aut


def load_automaton(path):
    with open(path, encoding="utf-8") as fh:
        return loads_automaton(fh.read())


def save_automaton(aut, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_automaton(aut))
