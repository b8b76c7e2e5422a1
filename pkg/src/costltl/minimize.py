"""Syntactic congruence, quotient to the minimal stabilization semigroup,
aperiodicity and definability decisions.

Contexts with a single occurrence of the hole are realized as element
self-maps generated by left and right multiplications and the omega-sharp map
s -> (s^omega)#. Two elements are congruent when every such map keeps them on
the same side of the accepting ideal and of its escape boundary: besides
membership, the test tracks whether some element above the image escapes the
ideal. The extra bit is what separates a stabilized-but-boundable element
(e# <= e with e outside the ideal) from one that is inescapably accepting;
without it the bounded-growth and everywhere-infinite behaviours collapse.
For recognizers with a discrete order (classical languages) the bit is the
negation of membership and the test reduces to the classic syntactic
congruence.
"""

from dataclasses import dataclass

from .semigroup import StabSemigroup, Recognizer, idempotent_power


def _omega_sharp(sg, s):
    return sg.sharp[idempotent_power(sg, s)]


def generated_elements(sg, seeds):
    """Closure of seeds under product and the omega-sharp map: exactly the
    elements denoted by omega-sharp expressions over the seeds."""
    out = set(seeds)
    work = list(seeds)
    while work:
        x = work.pop()
        new = {_omega_sharp(sg, x)}
        for y in list(out):
            new.add(sg.mul(x, y))
            new.add(sg.mul(y, x))
        for z in new:
            if z not in out:
                out.add(z)
                work.append(z)
    return out


def restrict(sg, keep):
    keep = [x for x in sg.elements if x in keep]
    kset = set(keep)
    product = {(x, y): sg.mul(x, y) for x in keep for y in keep}
    for v in product.values():
        if v not in kset:
            raise ValueError("restriction is not closed under product")
    leq = {(x, y) for (x, y) in sg.leq if x in kset and y in kset}
    sharp = {x: sg.sharp[x] for x in keep if x in sg.sharp and sg.mul(x, x) == x}
    neutral = sg.neutral if sg.neutral in kset else None
    return StabSemigroup(tuple(keep), product, frozenset(leq), sharp, neutral)


def context_closure(sg):
    """All element self-maps generated by identity, left/right multiplications
    and s -> (s^omega)#, closed under composition. Maps are image tuples in
    element order."""
    elems = sg.elements
    index = {x: i for i, x in enumerate(elems)}

    def as_map(fn):
        return tuple(fn(x) for x in elems)

    generators = {as_map(lambda s: s)}
    for x in elems:
        generators.add(as_map(lambda s, x=x: sg.mul(x, s)))
        generators.add(as_map(lambda s, x=x: sg.mul(s, x)))
    generators.add(as_map(lambda s: _omega_sharp(sg, s)))
    closure = set(generators)
    work = list(generators)
    while work:
        f = work.pop()
        for g in list(closure):
            for h in (tuple(f[index[v]] for v in g), tuple(g[index[v]] for v in f)):
                if h not in closure:
                    closure.add(h)
                    work.append(h)
    return closure


def _signature(sg, ideal, x):
    """(membership, escape): inside the ideal, and whether anything above x
    leaves it."""
    return (x in ideal, any(y not in ideal for y in sg.upset(x)))


def congruence_classes(sg, ideal):
    """Partition refinement: coarsest partition separating signatures and
    stable under the context-map generators."""
    elems = sg.elements
    gens = []
    for x in elems:
        gens.append(lambda s, x=x: sg.mul(x, s))
        gens.append(lambda s, x=x: sg.mul(s, x))
    gens.append(lambda s: _omega_sharp(sg, s))
    block = {x: _signature(sg, ideal, x) for x in elems}
    while True:
        refined = {x: (block[x],) + tuple(block[g(x)] for g in gens) for x in elems}
        renum = {}
        new_block = {}
        for x in elems:
            key = refined[x]
            if key not in renum:
                renum[key] = len(renum)
            new_block[x] = renum[key]
        if len(set(new_block.values())) == len(set(block.values())):
            classes = {}
            for x in elems:
                classes.setdefault(new_block[x], []).append(x)
            return [tuple(c) for c in classes.values()]
        block = new_block


@dataclass(frozen=True)
class Quotient:
    recognizer: Recognizer
    classes: tuple  # tuple of element tuples of the input semigroup
    class_of: dict  # input element -> class name


def syntactic_quotient(rec):
    """Quotient of the generated part of the recognizer by the syntactic
    congruence; the result is the minimal recognizer of the same function."""
    sg = rec.semigroup
    gen = generated_elements(sg, set(rec.h.values()))
    sg = restrict(sg, gen)
    ideal = frozenset(x for x in rec.ideal if x in gen)
    classes = congruence_classes(sg, ideal)
    rep = {}
    name = {}
    for cls in classes:
        r = min(cls, key=lambda x: sg.elements.index(x))
        for x in cls:
            rep[x] = r
        name[r] = r
    class_elems = tuple(sorted({rep[x] for x in sg.elements}, key=sg.elements.index))

    product = {}
    for cx in class_elems:
        for cy in class_elems:
            values = {rep[sg.mul(x, y)] for x in _members(classes, cx, rep)
                      for y in _members(classes, cy, rep)}
            if len(values) != 1:
                raise ValueError("product not well-defined on the quotient")
            product[(cx, cy)] = values.pop()

    sharp = {}
    for cx in class_elems:
        if product[(cx, cx)] == cx:
            values = {rep[_omega_sharp(sg, x)] for x in _members(classes, cx, rep)}
            if len(values) != 1:
                raise ValueError("sharp not well-defined on the quotient")
            sharp[cx] = values.pop()

    order = _induced_order(class_elems, product, sharp)
    qsg = StabSemigroup(class_elems, product, frozenset(order), sharp,
                        rep.get(sg.neutral))
    q_ideal = frozenset(rep[x] for x in ideal)
    for x in class_elems:
        for y in q_ideal:
            if (x, y) in order and x not in q_ideal:
                raise ValueError("quotient ideal not downward-closed")
    q_h = {a: rep[v] for a, v in rec.h.items()}
    q_rec = Recognizer(qsg, q_h, q_ideal, rec.height)
    return Quotient(q_rec, tuple(tuple(c) for c in classes), dict(rep))


def _members(classes, rep_elem, rep):
    for cls in classes:
        if rep[cls[0]] == rep_elem:
            return cls
    raise KeyError(rep_elem)


def _induced_order(elems, product, sharp):
    """Least partial order with e# <= e, closed under product compatibility,
    sharp monotonicity, and transitivity. Raises if antisymmetry fails."""
    leq = {(x, x) for x in elems}
    leq.update((es, e) for e, es in sharp.items())
    changed = True
    while changed:
        changed = False
        for (x, y) in list(leq):
            for z in elems:
                for pair in ((product[(z, x)], product[(z, y)]),
                             (product[(x, z)], product[(y, z)])):
                    if pair not in leq:
                        leq.add(pair)
                        changed = True
            if x in sharp and y in sharp:
                pair = (sharp[x], sharp[y])
                if pair not in leq:
                    leq.add(pair)
                    changed = True
        for (x, y) in list(leq):
            for (y2, z) in list(leq):
                if y == y2 and (x, z) not in leq:
                    leq.add((x, z))
                    changed = True
    for x in elems:
        for y in elems:
            if x != y and (x, y) in leq and (y, x) in leq:
                raise ValueError("induced order fails antisymmetry on (%s, %s)" % (x, y))
    return leq


def is_aperiodic(sg):
    """(verdict, least k with s^(k+1) = s^k for all s, or a counterexample)."""
    powers = {s: [s] for s in sg.elements}
    bound = len(sg.elements)
    for _ in range(bound):
        for s in sg.elements:
            powers[s].append(sg.mul(powers[s][-1], s))
    for k in range(1, bound + 1):
        if all(powers[s][k] == powers[s][k - 1] for s in sg.elements):
            return True, k
    worst = next(s for s in sg.elements if powers[s][bound] != powers[s][bound - 1])
    return False, worst


def is_ltl_definable(rec):
    """A regular cost function is LTL<=-definable iff its minimal
    stabilization semigroup is aperiodic."""
    quotient = syntactic_quotient(rec)
    verdict, _ = is_aperiodic(quotient.recognizer.semigroup)
    return verdict
