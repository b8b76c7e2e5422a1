"""Extended naturals, alphabets, words, and sample-based cost comparison."""

INF = float("inf")


def is_cost(v):
    return v == INF or (isinstance(v, int) and v >= 0)


class Alphabet:
    """Nonempty finite set of single-symbol letters, in declaration order."""

    def __init__(self, letters):
        letters = list(letters)
        if not letters:
            raise ValueError("alphabet must be nonempty")
        if len(set(letters)) != len(letters):
            raise ValueError("alphabet has duplicate letters")
        for a in letters:
            if not (isinstance(a, str) and len(a) == 1):
                raise ValueError("letters must be single symbols: %r" % (a,))
        self.letters = tuple(letters)

    def __contains__(self, a):
        return a in self.letters

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return "Alphabet(%r)" % ("".join(self.letters),)

    def check_word(self, u):
        for a in u:
            if a not in self.letters:
                raise ValueError("letter %r outside alphabet %s" % (a, "".join(self.letters)))
        return u


def words_upto(alphabet, max_len, min_len=0):
    """All words over the alphabet with min_len <= |u| <= max_len, shortlex order."""
    out = []
    layer = [""]
    for n in range(max_len + 1):
        if n >= min_len:
            out.extend(layer)
        if n < max_len:
            layer = [u + a for u in layer for a in alphabet]
    return out


def count_letter(u, a, alphabet=None):
    if alphabet is not None and a not in alphabet:
        raise ValueError("letter %r outside alphabet" % (a,))
    return sum(1 for b in u if b == a)


def empirical_alpha(f, g, words):
    """Finite table n -> sup{f(u) : u in words, g(u) <= n}, for finite g-values seen.

    This is the Lemma 2.1 construction restricted to a sample; it is a test
    harness, not a decision procedure for domination.
    """
    gvals = sorted({g(u) for u in words if g(u) != INF})
    table = {}
    for n in gvals:
        sel = [f(u) for u in words if g(u) <= n]
        table[n] = max(sel) if sel else 0
    return table


def check_dominance_on_sample(f, g, words, alpha):
    """Check f(u) <= alpha(g(u)) pointwise on the sample, with alpha(inf) = inf.

    alpha is a callable or a finite table. Returns (True, None) or
    (False, first offending word).
    """
    if not callable(alpha):
        table = alpha
        alpha = lambda n: table[n]
    for u in words:
        gu = g(u)
        bound = INF if gu == INF else alpha(gu)
        if f(u) > bound:
            return False, u
    return True, None
