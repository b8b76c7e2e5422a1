"""Command-line interface.

Exit codes: 0 for success or an affirmative verdict, 1 for a negative verdict
(unbounded, not aperiodic, not definable, check failure, divergent
classification), 2 for usage or input errors.
"""

import argparse
import sys

from .core import INF, Alphabet
from .formula import parse, render, dualize, is_ltl, is_nltl, ParseError
from .semantics import sem_inf, sem_sup
from .automata import (
    eval_b,
    eval_s,
    contract_b,
    rename_states,
    load_automaton,
    save_automaton,
    validate,
)
from .translate import ltl_to_b, nltl_to_s
from .semigroup import (
    Recognizer,
    validate_axioms,
    recognize,
    classify,
    parse_expr,
    load_semigroup,
    save_semigroup,
)
from .minimize import syntactic_quotient, is_aperiodic, is_ltl_definable
from .bounded import bounded_onthefly, bounded_closure, bounded_formula, witness_word
from .classical import language_recognizer


def _fmt(value):
    return "inf" if value == INF else str(value)


def _parse_formula(args):
    if args.alphabet is None:
        raise ValueError("--alphabet is required with -f")
    alphabet = Alphabet(args.alphabet)
    return parse(args.formula, alphabet), alphabet


def _render_script(script):
    parts = []
    for item in script:
        if isinstance(item, tuple) and item and item[0] == "cycle":
            parts.append("(%s)^n" % _render_script(item[1]))
        else:
            parts.append(item)
    return "".join(parts)


def _cmd_eval(args):
    phi, alphabet = _parse_formula(args)
    word = tuple(args.word)
    alphabet.check_word(word)
    if is_ltl(phi):
        value = sem_inf(phi, word)
    elif is_nltl(phi):
        value = sem_sup(phi, word)
    else:
        raise ValueError("formula mixes both bounded-operator kinds")
    print(_fmt(value))
    return 0


def _cmd_eval_aut(args):
    aut = load_automaton(args.automaton)
    word = tuple(args.word)
    value = eval_b(aut, word) if aut.kind == "B" else eval_s(aut, word)
    print(_fmt(value))
    return 0


def _cmd_compile_b(args):
    phi, alphabet = _parse_formula(args)
    aut = rename_states(ltl_to_b(phi, alphabet))
    if args.contract:
        aut, correction = contract_b(aut)
        if not args.porcelain:
            print("contracted with K=%d (correct up to 2Kn+2K)" % correction)
    save_automaton(aut, args.out)
    if not args.porcelain:
        print("wrote %s (%d states)" % (args.out, len(aut.states)))
    return 0


def _cmd_compile_s(args):
    phi, alphabet = _parse_formula(args)
    if args.nltl:
        if not is_nltl(phi):
            raise ValueError("--nltl expects a pure nLTL<= formula")
    else:
        if not is_ltl(phi):
            raise ValueError("expected an LTL<= formula to dualize (or pass --nltl)")
        phi = dualize(phi, alphabet)
    aut = rename_states(nltl_to_s(phi, alphabet))
    save_automaton(aut, args.out)
    if not args.porcelain:
        print("wrote %s (%d states, formula %s)" % (args.out, len(aut.states), render(phi)))
    return 0


def _cmd_bounded(args):
    phi, alphabet = _parse_formula(args)
    results = []
    if args.method in ("onthefly", "both"):
        results.append(bounded_formula(phi, alphabet, "onthefly"))
    if args.method in ("closure", "both"):
        results.append(bounded_formula(phi, alphabet, "closure"))
    if len({r.bounded for r in results}) != 1:
        raise ValueError("methods disagree on boundedness")
    result = results[0]
    print("bounded" if result.bounded else "unbounded")
    if not result.bounded and result.script is not None and not args.porcelain:
        print("witness family: %s (pump 3: %s)"
              % (_render_script(result.script) or "empty word",
                 "".join(witness_word(result.script, 3)) or '""'))
    return 0 if result.bounded else 1


def _load_recognizer(path):
    sg, rec = load_semigroup(path)
    if rec is None:
        raise ValueError("%s has no recognizer block (h/ideal)" % path)
    return sg, rec


def _cmd_semigroup(args):
    sg, rec = load_semigroup(args.semigroup)
    if args.subcommand == "check":
        problems = validate_axioms(sg)
        if problems:
            for p in problems:
                print(p)
            return 1
        print("OK")
        return 0
    if rec is None:
        raise ValueError("%s has no recognizer block (h/ideal)" % args.semigroup)
    if args.height is not None:
        rec = Recognizer(sg, rec.h, rec.ideal, args.height)
    if args.subcommand == "recognize":
        word = tuple(args.word)
        print(_fmt(recognize(rec, word)))
        return 0
    if args.subcommand == "classify":
        verdict = classify(rec, parse_expr(args.expr))
        print(verdict)
        return 0 if verdict == "F-bounded" else 1
    raise ValueError("unknown semigroup subcommand %r" % (args.subcommand,))


def _cmd_minimize(args):
    sg, rec = _load_recognizer(args.semigroup)
    quotient = syntactic_quotient(rec)
    qrec = quotient.recognizer
    save_semigroup(qrec.semigroup, args.out, qrec)
    if args.porcelain:
        print(len(qrec.semigroup.elements))
    else:
        print("wrote %s (%d classes from %d elements)"
              % (args.out, len(qrec.semigroup.elements), len(sg.elements)))
    return 0


def _cmd_aperiodic(args):
    sg, _ = load_semigroup(args.semigroup)
    verdict, detail = is_aperiodic(sg)
    if verdict:
        print("aperiodic" if args.porcelain else "aperiodic (k=%d)" % detail)
        return 0
    print("not-aperiodic" if args.porcelain else "not aperiodic (witness %s)" % detail)
    return 1


def _cmd_definable(args):
    if args.semigroup is not None:
        _, rec = _load_recognizer(args.semigroup)
    else:
        phi, alphabet = _parse_formula(args)
        if not is_ltl(phi):
            raise ValueError("definability from a formula expects LTL<=")
        aut = rename_states(ltl_to_b(phi, alphabet))
        if aut.counters != 0:
            raise ValueError("definability from a formula supports the "
                             "counter-free (classical) fragment only")
        rec = language_recognizer(aut)
    verdict = is_ltl_definable(rec)
    print("definable" if verdict else "not-definable")
    return 0 if verdict else 1


def _corpus_formula_file(path):
    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
    if not lines or not lines[0].startswith("alphabet "):
        raise ValueError("formula file must start with 'alphabet <letters>'")
    alphabet = Alphabet(lines[0].split()[1])
    return alphabet, [parse(ln, alphabet) for ln in lines[1:]]


def _cmd_corpus(args):
    import os

    rows = []
    failed = False
    for name in sorted(os.listdir(args.directory)):
        path = os.path.join(args.directory, name)
        try:
            if name.endswith(".sg"):
                sg, rec = load_semigroup(path)
                problems = validate_axioms(sg)
                if problems:
                    raise ValueError(problems[0])
                detail = "%d elements%s" % (len(sg.elements),
                                            ", recognizer" if rec else "")
            elif name.endswith(".aut"):
                aut = load_automaton(path)
                problems = validate(aut)
                if problems:
                    raise ValueError(problems[0])
                detail = "%s-automaton, %d states" % (aut.kind, len(aut.states))
            elif name.endswith(".ltl"):
                alphabet, formulas = _corpus_formula_file(path)
                verdicts = []
                for phi in formulas:
                    result = bounded_formula(phi, alphabet)
                    verdicts.append("bounded" if result.bounded else "unbounded")
                detail = " ".join(verdicts)
            else:
                continue
            rows.append((name, "ok", detail))
        except (ValueError, ParseError, OSError) as exc:
            rows.append((name, "fail", str(exc)))
            failed = True
    width = max([len(r[0]) for r in rows], default=0)
    for name, status, detail in rows:
        print("%-*s  %-4s  %s" % (width, name, status, detail))
    return 1 if failed else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="costltl",
        description="Quantitative LTL over finite words: evaluation, "
                    "compilation to cost automata, boundedness, and "
                    "stabilization-semigroup algebra.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formula=False, word=False, automaton=False, semigroup=False,
               out=False):
        p.add_argument("--porcelain", action="store_true",
                       help="stable machine-readable output only")
        if formula:
            p.add_argument("-f", dest="formula", required=True)
            p.add_argument("--alphabet")
        if word:
            p.add_argument("-w", dest="word", required=True)
        if automaton:
            p.add_argument("-a", dest="automaton", required=True)
        if semigroup:
            p.add_argument("-s", dest="semigroup", required=True)
        if out:
            p.add_argument("-o", dest="out", required=True)

    p = sub.add_parser("eval", help="evaluate a formula on a word")
    common(p, formula=True, word=True)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("eval-aut", help="evaluate an automaton file on a word")
    common(p, word=True, automaton=True)
    p.set_defaults(func=_cmd_eval_aut)

    p = sub.add_parser("compile-b", help="compile LTL<= to a B-automaton")
    common(p, formula=True, out=True)
    p.add_argument("--contract", action="store_true",
                   help="contract action sequences to single actions")
    p.set_defaults(func=_cmd_compile_b)

    p = sub.add_parser("compile-s", help="compile to an S-automaton "
                                         "(dualizes LTL<= input)")
    common(p, formula=True, out=True)
    p.add_argument("--nltl", action="store_true",
                   help="input is already an nLTL<= formula")
    p.set_defaults(func=_cmd_compile_s)

    p = sub.add_parser("bounded", help="decide boundedness of a formula")
    common(p, formula=True)
    p.add_argument("--method", choices=("onthefly", "closure", "both"),
                   default="onthefly")
    p.set_defaults(func=_cmd_bounded)

    p = sub.add_parser("semigroup", help="stabilization-semigroup operations")
    ssub = p.add_subparsers(dest="subcommand", required=True)
    q = ssub.add_parser("check", help="validate the semigroup axioms")
    common(q, semigroup=True)
    q.set_defaults(func=_cmd_semigroup)
    q = ssub.add_parser("recognize", help="value of a word under a recognizer")
    common(q, word=True, semigroup=True)
    q.add_argument("--height", type=int)
    q.set_defaults(func=_cmd_semigroup)
    q = ssub.add_parser("classify", help="classify a sharp expression")
    common(q, semigroup=True)
    q.add_argument("expr", help="expression, e.g. (ab)^ws or a^w b")
    q.add_argument("--height", type=int)
    q.set_defaults(func=_cmd_semigroup)

    p = sub.add_parser("minimize", help="quotient by the syntactic congruence")
    common(p, semigroup=True, out=True)
    p.set_defaults(func=_cmd_minimize)

    p = sub.add_parser("aperiodic", help="decide aperiodicity of a semigroup")
    common(p, semigroup=True)
    p.set_defaults(func=_cmd_aperiodic)

    p = sub.add_parser("definable", help="decide LTL<=-definability")
    p.add_argument("--porcelain", action="store_true")
    p.add_argument("-s", dest="semigroup")
    p.add_argument("-f", dest="formula")
    p.add_argument("--alphabet")
    p.set_defaults(func=_cmd_definable)

    p = sub.add_parser("corpus", help="validate a directory of fixture files")
    p.add_argument("--porcelain", action="store_true")
    p.add_argument("directory")
    p.set_defaults(func=_cmd_corpus)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "definable" and (args.semigroup is None) == (args.formula is None):
        parser.error("definable needs exactly one of -s or -f")
    try:
        return args.func(args)
    except (ValueError, ParseError, OSError, RuntimeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
